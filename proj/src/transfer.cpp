#include "gn/transfer.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

namespace gn {

Coord coord_of(Element x) { return Coord(x.a & 1, x.b & 1, x.c & 1); }

Element coord_lift(Coord v) {
  return Element{v.eps_sigma(), v.eps_tau(), v.eps_rho()};
}

std::string coord_word(Coord v) {
  std::string w;
  if (v.eps_sigma()) w += 's';
  if (v.eps_tau()) w += 't';
  if (v.eps_rho()) w += 'r';
  return w;
}

std::vector<Element> coset_transversal(const GroupParams& g,
                                       const Subgroup& h) {
  std::vector<bool> visited(static_cast<size_t>(g.group_order), false);
  std::vector<Element> reps;
  reps.reserve(static_cast<size_t>(h.index));
  for (int64_t r = 0; r < g.group_order; ++r) {
    if (visited[static_cast<size_t>(r)]) continue;
    const Element x = unrank(g, static_cast<uint32_t>(r));
    reps.push_back(x);
    for (const Element& y : h.elements) visited[rank(g, mul(g, x, y))] = true;
  }
  return reps;
}

std::vector<Element> random_coset_transversal(const GroupParams& g,
                                              const Subgroup& h,
                                              uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, h.elements.size() - 1);
  std::vector<Element> reps = coset_transversal(g, h);
  for (Element& x : reps) x = mul(g, x, h.elements[pick(rng)]);
  return reps;
}

TransferContext transfer_context(const GroupParams& g, const Subgroup& h) {
  TransferContext ctx;
  ctx.g = g;
  ctx.h = h;
  ctx.h_derived = derived_subgroup(g, h);
  ctx.mod_derived = quotient(g, h, ctx.h_derived);
  ctx.h_member.assign(static_cast<size_t>(g.group_order), false);
  for (const Element& x : h.elements) ctx.h_member[rank(g, x)] = true;
  ctx.normal = is_normal(g, h);
  return ctx;
}

namespace {

Element transfer_eq2_impl(const TransferContext& ctx, Element a,
                          std::mt19937_64* rng) {
  const GroupParams& g = ctx.g;
  if (!ctx.normal)
    throw std::invalid_argument(
        "transfer_eq2: the subgroup must be normal in G(n)");

  // f = [<a>H : H] is the least f with a^f in H.
  int64_t f = 1;
  Element p = a;
  while (!ctx.member(p)) {
    p = mul(g, p, a);
    ++f;
  }

  // K = <a>H, as an element list (H normal makes it a subgroup).
  std::vector<Element> k_elems;
  k_elems.reserve(static_cast<size_t>(f) * ctx.h.elements.size());
  Element ai = identity();
  for (int64_t i = 0; i < f; ++i) {
    for (const Element& y : ctx.h.elements) k_elems.push_back(mul(g, ai, y));
    ai = mul(g, ai, a);
  }

  // Representatives of G/K, rank-least per coset.
  std::vector<bool> visited(static_cast<size_t>(g.group_order), false);
  std::vector<Element> reps;
  for (int64_t r = 0; r < g.group_order; ++r) {
    if (visited[static_cast<size_t>(r)]) continue;
    const Element x = unrank(g, static_cast<uint32_t>(r));
    reps.push_back(x);
    for (const Element& y : k_elems) visited[rank(g, mul(g, x, y))] = true;
  }
  if (rng) {
    std::uniform_int_distribution<size_t> pick(0, k_elems.size() - 1);
    for (Element& x : reps) x = mul(g, x, k_elems[pick(*rng)]);
  }

  const Element af = pow(g, a, f);
  Element prod = identity();
  for (const Element& x : reps) {
    const Element factor = mul(g, mul(g, inv(g, x), af), x);
    assert(ctx.member(factor));
    prod = mul(g, prod, factor);
  }
  return ctx.mod_derived.rep(prod);
}

}  // namespace

Element transfer_eq2(const TransferContext& ctx, Element x) {
  return transfer_eq2_impl(ctx, x, nullptr);
}

Element transfer_eq2(const TransferContext& ctx, Element x, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return transfer_eq2_impl(ctx, x, &rng);
}

Element transfer_eq2(const GroupParams& g, const Subgroup& h, Element x) {
  return transfer_eq2(transfer_context(g, h), x);
}

Element transfer_transversal(const TransferContext& ctx, Element a,
                             const std::vector<Element>& transversal) {
  const GroupParams& g = ctx.g;
  if (static_cast<int64_t>(transversal.size()) != ctx.h.index)
    throw std::invalid_argument(
        "transfer_transversal: transversal size differs from the index");

  Element prod = identity();
  for (const Element& x : transversal) {
    const Element y = mul(g, a, x);
    // locate the unique x_j in the same left coset: x_j^-1 y in H
    const Element* match = nullptr;
    for (const Element& xj : transversal) {
      if (!ctx.member(mul(g, inv(g, xj), y))) continue;
      if (match)
        throw std::invalid_argument(
            "transfer_transversal: representatives overlap a coset");
      match = &xj;
    }
    if (!match)
      throw std::invalid_argument(
          "transfer_transversal: no representative for a coset");
    prod = mul(g, prod, mul(g, inv(g, *match), y));
  }
  return ctx.mod_derived.rep(prod);
}

Element transfer_transversal(const TransferContext& ctx, Element x) {
  return transfer_transversal(ctx, x, coset_transversal(ctx.g, ctx.h));
}

Element transfer_transversal(const GroupParams& g, const Subgroup& h,
                             Element x) {
  return transfer_transversal(transfer_context(g, h), x);
}

ClosedFormCase closed_form_case(const TransferContext& ctx) {
  const GroupParams& g = ctx.g;
  if (ctx.h.index == 2) return ClosedFormCase::index2;
  if (ctx.h.index != 4)
    throw std::invalid_argument(
        "transfer_closed_form: the index must be 2 or 4, got " +
        std::to_string(ctx.h.index));
  if (!ctx.normal)
    throw std::invalid_argument(
        "transfer_closed_form: an index-4 subgroup must be normal");
  // cyclic iff some coset has order 4 in G/H
  for (const Element& z : coset_transversal(g, ctx.h)) {
    if (ctx.member(z)) continue;
    if (!ctx.member(mul(g, z, z))) return ClosedFormCase::cyclic4;
  }
  return ClosedFormCase::klein4;
}

namespace {

Element fold(const GroupParams& g, std::initializer_list<Element> factors) {
  Element acc = identity();
  for (const Element& x : factors) acc = mul(g, acc, x);
  return acc;
}

}  // namespace

Element transfer_closed_form(const TransferContext& ctx, Element a) {
  const GroupParams& g = ctx.g;
  const ClosedFormCase kind = closed_form_case(ctx);
  const std::vector<Element> reps = coset_transversal(g, ctx.h);

  if (kind == ClosedFormCase::index2) {
    const Element z = reps[1];
    const Element w = ctx.member(a) ? fold(g, {a, inv(g, z), a, z})
                                    : mul(g, a, a);
    return ctx.mod_derived.rep(w);
  }

  if (kind == ClosedFormCase::cyclic4) {
    // z generates the cyclic quotient: the least rep whose coset has order 4.
    Element z = identity();
    for (const Element& cand : reps) {
      if (ctx.member(cand) || ctx.member(mul(g, cand, cand))) continue;
      z = cand;
      break;
    }
    const Element zi = inv(g, z);
    Element w;
    if (ctx.member(a)) {
      w = fold(g, {a, zi, a, zi, a, zi, a, pow(g, z, 3)});
    } else if (ctx.member(mul(g, zi, a))) {  // aH == zH
      w = pow(g, a, 4);
    } else {
      w = fold(g, {a, a, zi, a, a, z});
    }
    return ctx.mod_derived.rep(w);
  }

  // Klein quotient {1, z1 H, z2 H, z3 H} with z3 = z1 z2.
  const Element z1 = reps[1];
  const Element z2 = reps[2];
  const Element z3 = mul(g, z1, z2);
  Element w;
  if (ctx.member(a)) {
    w = fold(g, {a, inv(g, z1), a, z1, inv(g, z2), a, inv(g, z1), a, z1, z2});
  } else {
    // a sits in one of the three nontrivial cosets; use another z_i.
    const std::array<Element, 3> zs = {z1, z2, z3};
    size_t j = 0;
    while (j < 3 && !ctx.member(mul(g, inv(g, zs[j]), a))) ++j;
    if (j == 3)
      throw std::logic_error("transfer_closed_form: coset lookup failed");
    const Element& zi = zs[j == 0 ? 1 : 0];
    w = fold(g, {a, a, inv(g, zi), a, a, zi});
  }
  return ctx.mod_derived.rep(w);
}

Element transfer_closed_form(const GroupParams& g, const Subgroup& h,
                             Element x) {
  return transfer_closed_form(transfer_context(g, h), x);
}

TransferTable transfer_table(const TransferContext& ctx) {
  TransferTable table;
  for (uint8_t v = 0; v < 8; ++v)
    table.image[v] = transfer_transversal(ctx, coord_lift(Coord(v)));
  return table;
}

TransferTable transfer_table(const GroupParams& g, const Subgroup& h) {
  return transfer_table(transfer_context(g, h));
}

bool KernelSubspace::contains(Coord v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

namespace {

std::vector<Coord> span_members(const std::vector<Coord>& gens) {
  std::vector<Coord> members = {Coord(0)};
  std::array<bool, 8> seen{};
  seen[0] = true;
  for (const Coord& v : gens) {
    if (seen[v.bits]) continue;
    const size_t snapshot = members.size();
    for (size_t i = 0; i < snapshot; ++i) {
      const Coord sum = members[i] + v;
      if (!seen[sum.bits]) {
        seen[sum.bits] = true;
        members.push_back(sum);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Unique reduced-echelon basis with sigma as the most significant coordinate.
std::vector<Coord> reduced_echelon_basis(const std::vector<Coord>& members) {
  std::vector<uint8_t> rows;
  for (const Coord& v : members) {
    uint8_t x = v.bits;
    for (uint8_t row : rows) {
      const uint8_t lead = static_cast<uint8_t>(1u << (31 - __builtin_clz(row)));
      if (x & lead) x ^= row;
    }
    if (x == 0) continue;
    const uint8_t lead = static_cast<uint8_t>(1u << (31 - __builtin_clz(x)));
    for (uint8_t& row : rows)
      if (row & lead) row ^= x;
    rows.push_back(x);
    std::sort(rows.begin(), rows.end(), std::greater<uint8_t>());
  }
  std::vector<Coord> basis;
  basis.reserve(rows.size());
  for (uint8_t row : rows) basis.push_back(Coord(row));
  return basis;
}

}  // namespace

KernelSubspace span_of(const std::vector<Coord>& gens) {
  KernelSubspace k;
  k.members = span_members(gens);
  std::vector<Coord> kept;
  for (const Coord& v : gens) {
    // keep only vectors independent of the earlier ones
    const std::vector<Coord> so_far = span_members(kept);
    if (std::find(so_far.begin(), so_far.end(), v) == so_far.end())
      kept.push_back(v);
  }
  k.basis = std::move(kept);
  return k;
}

KernelSubspace transfer_kernel(const TransferContext& ctx) {
  std::vector<Coord> in_kernel;
  for (uint8_t v = 0; v < 8; ++v)
    if (transfer_eq2(ctx, coord_lift(Coord(v))) == identity())
      in_kernel.push_back(Coord(v));

  // A transfer kernel is a subgroup of G/G'; fail loudly if the computed set
  // is not closed under addition.
  for (const Coord& u : in_kernel)
    for (const Coord& v : in_kernel)
      if (std::find(in_kernel.begin(), in_kernel.end(), u + v) ==
          in_kernel.end())
        throw std::logic_error("transfer_kernel: image set is not a subspace");

  KernelSubspace k;
  k.members = in_kernel;
  std::sort(k.members.begin(), k.members.end());
  k.basis = reduced_echelon_basis(k.members);
  return k;
}

KernelSubspace transfer_kernel(const GroupParams& g, const Subgroup& h) {
  return transfer_kernel(transfer_context(g, h));
}

std::vector<KernelExpectation> expected_transfer_kernels(
    const GroupParams& g) {
  const bool n1 = g.n == 1;
  std::vector<KernelExpectation> out;
  out.push_back({"H1_2", {Coord(0, 1, 0)}});
  out.push_back({"H2_2", n1 ? std::vector<Coord>{Coord(1, 0, 0), Coord(0, 0, 1)}
                            : std::vector<Coord>{Coord(1, 0, 0), Coord(0, 1, 1)}});
  out.push_back({"H3_2", {Coord(0, 1, 0), Coord(0, 0, 1)}});
  out.push_back({"H4_2", n1 ? std::vector<Coord>{Coord(0, 1, 1), Coord(1, 0, 1)}
                            : std::vector<Coord>{Coord(1, 1, 0), Coord(0, 0, 1)}});
  out.push_back({"H5_2", {Coord(0, 1, 0), Coord(1, 0, 1)}});
  out.push_back({"H6_2", n1 ? std::vector<Coord>{Coord(1, 0, 0), Coord(0, 1, 1)}
                            : std::vector<Coord>{Coord(0, 0, 1), Coord(1, 0, 0)}});
  out.push_back({"H7_2", n1 ? std::vector<Coord>{Coord(1, 1, 0), Coord(0, 0, 1)}
                            : std::vector<Coord>{Coord(1, 1, 0), Coord(0, 1, 1)}});
  for (int i = 1; i <= 7; ++i)
    out.push_back({"H" + std::to_string(i) + "_4",
                   {Coord(1, 0, 0), Coord(0, 1, 0), Coord(0, 0, 1)}});
  return out;
}

namespace {

std::string describe_kernel(const KernelSubspace& k) {
  std::string out = "<";
  for (size_t i = 0; i < k.basis.size(); ++i) {
    if (i > 0) out += ", ";
    out += coord_word(k.basis[i]);
  }
  return out + "> (order " + std::to_string(k.size()) + ")";
}

}  // namespace

CheckReport verify_transfer_kernels(const GroupParams& g) {
  CheckReport rep;
  const auto expected = expected_transfer_kernels(g);
  const auto maximal = maximal_subgroups(g);
  const auto quartic = index4_subgroups_above_derived(g);

  for (size_t i = 0; i < maximal.size(); ++i) {
    const KernelSubspace got = transfer_kernel(g, maximal[i].subgroup);
    const KernelSubspace want = span_of(expected[i].gens);
    CheckItem item;
    item.name = "transfer kernel " + std::to_string(i + 1) + " (" +
                maximal[i].label + ")";
    item.pass = got.members == want.members;
    item.detail = item.pass ? "kernel " + describe_kernel(got)
                            : "computed " + describe_kernel(got) +
                                  " != expected " + describe_kernel(want);
    rep.items.push_back(std::move(item));
  }

  CheckItem quartic_item;
  quartic_item.name = "transfer kernel 8 (index-4 subgroups)";
  quartic_item.pass = true;
  std::string bad;
  for (size_t i = 0; i < quartic.size(); ++i) {
    const KernelSubspace got = transfer_kernel(g, quartic[i].subgroup);
    const KernelSubspace want = span_of(expected[7 + i].gens);
    if (got.members != want.members || got.size() != 8) {
      quartic_item.pass = false;
      bad += (bad.empty() ? "" : ", ") + quartic[i].label + " gave " +
             describe_kernel(got);
    }
  }
  quartic_item.detail =
      quartic_item.pass ? "all seven kernels equal the whole of G/G'" : bad;
  rep.items.push_back(std::move(quartic_item));
  return rep;
}

CapitulationView capitulation_view(const KernelSubspace& k) {
  CapitulationView view;
  for (const Coord& v : k.basis) {
    std::string w;
    if (v.eps_sigma()) w += 'a';
    if (v.eps_tau()) w += 'b';
    if (v.eps_rho()) w += 'c';
    view.labels.push_back(w);
  }
  switch (k.members.size()) {
    case 1:
      view.summary = "no classes capitulate";
      break;
    case 2:
      view.summary = "two classes capitulate";
      break;
    case 4:
      view.summary = "four classes capitulate";
      break;
    default:
      view.summary = "all classes capitulate";
      break;
  }
  return view;
}

}  // namespace gn
