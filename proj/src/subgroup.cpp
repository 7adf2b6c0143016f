#include "gn/subgroup.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace gn {

namespace {

// rank order without needing the parameters: (c, a, b) lexicographic.
bool less_cab(const Element& x, const Element& y) {
  if (x.c != y.c) return x.c < y.c;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

Element square_gen(const GroupParams& g, Element x) { return mul(g, x, x); }

/// Incremental subgroup closure over a membership bitset.  add_generator
/// re-closes only when the set actually grows, so building a subgroup by
/// feeding it elements one at a time costs O(|H| * #gens) overall.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const GroupParams& g)
      : g_(g), member_(static_cast<size_t>(g.group_order), false) {
    push(identity());
  }

  bool contains(Element x) const { return member_[rank(g_, x)]; }

  bool add_generator(Element s) {
    if (contains(s)) return false;
    gens_.push_back(s);
    push(s);
    for (size_t i = 0; i < elems_.size(); ++i) {
      const Element x = elems_[i];
      push(inv(g_, x));
      for (const Element& t : gens_) push(mul(g_, x, t));
    }
    return true;
  }

  const std::vector<Element>& elements() const { return elems_; }
  const std::vector<Element>& generators() const { return gens_; }

 private:
  void push(Element x) {
    const uint32_t r = rank(g_, x);
    if (!member_[r]) {
      member_[r] = true;
      elems_.push_back(x);
    }
  }

  const GroupParams& g_;
  std::vector<bool> member_;
  std::vector<Element> elems_;
  std::vector<Element> gens_;
};

Subgroup make_subgroup(const GroupParams& g, std::vector<Element> gens,
                       std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end(), less_cab);
  Subgroup h;
  h.generators = std::move(gens);
  h.elements = std::move(elems);
  h.index = g.group_order / h.order();
  return h;
}

std::vector<bool> member_bitset(const GroupParams& g, const Subgroup& h) {
  std::vector<bool> member(static_cast<size_t>(g.group_order), false);
  for (const Element& x : h.elements) member[rank(g, x)] = true;
  return member;
}

uint8_t parity_bits(Element x) {
  return static_cast<uint8_t>(((x.a & 1) << 2) | ((x.b & 1) << 1) | (x.c & 1));
}

bool even_overlap(uint8_t bits, uint8_t functional) {
  return (__builtin_popcount(bits & functional) & 1) == 0;
}

}  // namespace

bool Subgroup::contains(const GroupParams& g, Element x) const {
  (void)g;
  return std::binary_search(elements.begin(), elements.end(), x, less_cab);
}

bool same_subgroup(const Subgroup& a, const Subgroup& b) {
  return a.elements == b.elements;
}

bool subgroup_contains(const GroupParams& g, const Subgroup& outer,
                       const Subgroup& inner) {
  (void)g;
  return std::includes(outer.elements.begin(), outer.elements.end(),
                       inner.elements.begin(), inner.elements.end(), less_cab);
}

Subgroup closure(const GroupParams& g, const std::vector<Element>& gens) {
  ClosureBuilder b(g);
  for (const Element& s : gens) b.add_generator(s);
  return make_subgroup(g, gens, b.elements());
}

Subgroup trivial_subgroup(const GroupParams& g) {
  return make_subgroup(g, {}, {identity()});
}

Subgroup full_group(const GroupParams& g) {
  return make_subgroup(g, {gen_sigma(), gen_tau(), gen_rho()},
                       enumerate_elements(g));
}

bool is_normal(const GroupParams& g, const Subgroup& h) {
  const std::vector<bool> member = member_bitset(g, h);
  for (const Element& t : {gen_sigma(), gen_tau(), gen_rho()})
    for (const Element& x : h.elements)
      if (!member[rank(g, conjugate(g, x, t))]) return false;
  return true;
}

namespace {

// Normal closure (inside the group generated by `conjugators`) of the
// subgroup the builder currently holds.
void close_under_conjugation(const GroupParams& g, ClosureBuilder& b,
                             const std::vector<Element>& conjugators,
                             std::vector<Element>& added_gens) {
  for (size_t i = 0; i < b.elements().size(); ++i) {
    const Element x = b.elements()[i];
    for (const Element& t : conjugators) {
      const Element cx = conjugate(g, x, t);
      if (b.add_generator(cx)) added_gens.push_back(cx);
    }
  }
}

}  // namespace

Subgroup derived_subgroup(const GroupParams& g, const Subgroup& h) {
  ClosureBuilder b(g);
  std::vector<Element> gens;
  for (size_t i = 0; i < h.generators.size(); ++i)
    for (size_t j = i + 1; j < h.generators.size(); ++j) {
      const Element c = commutator(g, h.generators[i], h.generators[j]);
      if (b.add_generator(c)) gens.push_back(c);
    }
  close_under_conjugation(g, b, h.generators, gens);
  return make_subgroup(g, std::move(gens), b.elements());
}

Subgroup derived_subgroup(const GroupParams& g) {
  return derived_subgroup(g, full_group(g));
}

Element Quotient::rep(Element x) const {
  Element best = mul(g, x, normal_elements.front());
  for (size_t i = 1; i < normal_elements.size(); ++i) {
    const Element cand = mul(g, x, normal_elements[i]);
    if (less_cab(cand, best)) best = cand;
  }
  return best;
}

Element Quotient::mul_coset(Element x, Element y) const {
  return rep(mul(g, x, y));
}

Quotient quotient(const GroupParams& g, const Subgroup& h, const Subgroup& n) {
  if (!subgroup_contains(g, h, n))
    throw std::invalid_argument("quotient: N is not contained in H");
  const std::vector<bool> n_member = member_bitset(g, n);
  for (const Element& t : h.generators)
    for (const Element& x : n.elements)
      if (!n_member[rank(g, conjugate(g, x, t))])
        throw std::invalid_argument("quotient: N is not normal in H");

  Quotient q;
  q.g = g;
  q.normal_elements = n.elements;
  std::vector<bool> visited(static_cast<size_t>(g.group_order), false);
  for (const Element& x : h.elements) {
    if (visited[rank(g, x)]) continue;
    q.reps.push_back(x);  // ascending scan: x is the least member of xN
    for (const Element& y : n.elements) visited[rank(g, mul(g, x, y))] = true;
  }
  q.generator_reps.reserve(h.generators.size());
  for (const Element& t : h.generators) q.generator_reps.push_back(q.rep(t));
  return q;
}

std::string AbelianType::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < exps.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(int64_t{1} << exps[i]);
  }
  return out + ")";
}

namespace {

AbelianType type_from_squaring(
    const std::vector<Element>& elems,
    const std::vector<Element>& gens,
    const std::function<Element(Element, Element)>& op) {
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!(op(gens[i], gens[j]) == op(gens[j], gens[i])))
        throw std::invalid_argument("abelian_type: input group is not abelian");

  const auto log2_exact = [](size_t v) {
    int k = 0;
    while ((size_t{1} << k) < v) ++k;
    if ((size_t{1} << k) != v)
      throw std::logic_error("abelian_type: order is not a power of 2");
    return k;
  };
  const int total_log = log2_exact(elems.size());

  // d[k-1] = log2 c_k - log2 c_(k-1) = #{i : e_i >= k}, where c_k counts the
  // solutions of x^(2^k) = 1.
  std::vector<int> d;
  std::vector<Element> cur(elems);
  int prev_log = 0;
  while (prev_log < total_log) {
    size_t fixed = 0;
    for (Element& x : cur) {
      x = op(x, x);
      if (x == identity()) ++fixed;
    }
    const int cur_log = log2_exact(fixed);
    d.push_back(cur_log - prev_log);
    prev_log = cur_log;
  }

  AbelianType type;
  for (size_t k = 1; k <= d.size(); ++k) {
    const int next = k < d.size() ? d[k] : 0;
    const int mult = d[k - 1] - next;
    if (mult < 0)
      throw std::logic_error("abelian_type: fixed-point counts not monotone");
    type.exps.insert(type.exps.end(), static_cast<size_t>(mult),
                     static_cast<int>(k));
  }
  return type;
}

}  // namespace

AbelianType abelian_type(const GroupParams& g, const Subgroup& a) {
  return type_from_squaring(
      a.elements, a.generators,
      [&g](Element x, Element y) { return mul(g, x, y); });
}

AbelianType abelian_type(const GroupParams& g, const Quotient& q) {
  (void)g;
  return type_from_squaring(
      q.reps, q.generator_reps,
      [&q](Element x, Element y) { return q.mul_coset(x, y); });
}

AbelianType abelianization(const GroupParams& g, const Subgroup& h) {
  return abelian_type(g, quotient(g, h, derived_subgroup(g, h)));
}

namespace {

struct CosetSpaceSpec {
  const char* label;
  uint8_t functional_or_line;  // hyperplane functional / line bits
  std::array<Element, 2> lifts;
  int lift_count;
};

Subgroup preimage_subgroup(const GroupParams& g, const CosetSpaceSpec& spec,
                           bool hyperplane) {
  std::vector<Element> elems;
  for (const Element& x : enumerate_elements(g)) {
    const uint8_t bits = parity_bits(x);
    const bool in = hyperplane ? even_overlap(bits, spec.functional_or_line)
                               : (bits == 0 || bits == spec.functional_or_line);
    if (in) elems.push_back(x);
  }
  // Lifts of the subspace basis together with sigma^2, tau^2 generate the
  // preimage: any member reduces into <sigma^2, tau^2> after dividing out a
  // product of lifts.
  std::vector<Element> gens(spec.lifts.begin(),
                            spec.lifts.begin() + spec.lift_count);
  gens.push_back(Element{2, 0, 0});
  gens.push_back(Element{0, 2, 0});
  return make_subgroup(g, std::move(gens), std::move(elems));
}

}  // namespace

std::vector<LabeledSubgroup> maximal_subgroups(const GroupParams& g) {
  const std::array<CosetSpaceSpec, 7> specs = {{
      {"H1_2", 0b001, {Element{1, 0, 0}, Element{0, 1, 0}}, 2},
      {"H2_2", 0b010, {Element{1, 0, 0}, Element{0, 0, 1}}, 2},
      {"H3_2", 0b100, {Element{0, 1, 0}, Element{0, 0, 1}}, 2},
      {"H4_2", 0b110, {Element{1, 1, 0}, Element{0, 0, 1}}, 2},
      {"H5_2", 0b101, {Element{1, 0, 1}, Element{0, 1, 0}}, 2},
      {"H6_2", 0b011, {Element{0, 1, 1}, Element{1, 0, 0}}, 2},
      {"H7_2", 0b111, {Element{1, 1, 0}, Element{0, 1, 1}}, 2},
  }};
  std::vector<LabeledSubgroup> out;
  out.reserve(specs.size());
  for (const auto& spec : specs)
    out.push_back({spec.label, preimage_subgroup(g, spec, true)});
  return out;
}

std::vector<LabeledSubgroup> index4_subgroups_above_derived(
    const GroupParams& g) {
  const std::array<CosetSpaceSpec, 7> specs = {{
      {"H1_4", 0b100, {Element{1, 0, 0}, Element{}}, 1},
      {"H2_4", 0b010, {Element{0, 1, 0}, Element{}}, 1},
      {"H3_4", 0b001, {Element{0, 0, 1}, Element{}}, 1},
      {"H4_4", 0b110, {Element{1, 1, 0}, Element{}}, 1},
      {"H5_4", 0b101, {Element{1, 0, 1}, Element{}}, 1},
      {"H6_4", 0b011, {Element{0, 1, 1}, Element{}}, 1},
      {"H7_4", 0b111, {Element{1, 1, 1}, Element{}}, 1},
  }};
  std::vector<LabeledSubgroup> out;
  out.reserve(specs.size());
  for (const auto& spec : specs)
    out.push_back({spec.label, preimage_subgroup(g, spec, false)});
  return out;
}

namespace {

// Frattini subgroup <squares> * derived: index-2 subgroups of H are exactly
// the preimages of the hyperplanes of the elementary abelian H/Phi(H).
Subgroup frattini_subgroup(const GroupParams& g, const Subgroup& h) {
  ClosureBuilder b(g);
  std::vector<Element> gens;
  const Subgroup der = derived_subgroup(g, h);
  for (const Element& x : der.generators)
    if (b.add_generator(x)) gens.push_back(x);
  for (const Element& x : h.elements) {
    const Element sq = square_gen(g, x);
    if (b.add_generator(sq)) gens.push_back(sq);
  }
  return make_subgroup(g, std::move(gens), b.elements());
}

std::vector<Subgroup> index2_subgroups_of(const GroupParams& g,
                                          const Subgroup& h) {
  const Subgroup phi = frattini_subgroup(g, h);
  const Quotient q = quotient(g, h, phi);

  // Give the elementary abelian quotient F_2 coordinates by greedy basis
  // extension over its coset representatives.
  std::vector<std::pair<Element, unsigned>> span = {{identity(), 0u}};
  std::vector<bool> in_span(static_cast<size_t>(g.group_order), false);
  in_span[rank(g, identity())] = true;
  unsigned dim = 0;
  for (const Element& r : q.reps) {
    if (in_span[rank(g, r)]) continue;
    const size_t snapshot = span.size();
    for (size_t i = 0; i < snapshot; ++i) {
      const Element y = q.rep(mul(g, span[i].first, r));
      span.emplace_back(y, span[i].second | (1u << dim));
      in_span[rank(g, y)] = true;
    }
    ++dim;
  }
  if (span.size() != q.reps.size())
    throw std::logic_error("index2_subgroups_of: quotient is not elementary");

  // Parity bits for every member of H, transported from its coset rep.
  std::unordered_map<uint32_t, unsigned> bits_of;
  bits_of.reserve(h.elements.size() * 2);
  for (const auto& [r, bits] : span)
    for (const Element& f : phi.elements) bits_of[rank(g, mul(g, r, f))] = bits;

  std::vector<Subgroup> out;
  for (unsigned functional = 1; functional < (1u << dim); ++functional) {
    std::vector<Element> elems;
    elems.reserve(h.elements.size() / 2);
    for (const Element& x : h.elements)
      if ((__builtin_popcount(bits_of.at(rank(g, x)) & functional) & 1) == 0)
        elems.push_back(x);
    std::vector<Element> gens = phi.generators;
    for (const auto& [r, bits] : span)
      if (bits != 0 && (__builtin_popcount(bits & functional) & 1) == 0)
        gens.push_back(r);
    out.push_back(make_subgroup(g, std::move(gens), std::move(elems)));
  }
  return out;
}

std::vector<uint32_t> rank_key(const GroupParams& g, const Subgroup& h) {
  std::vector<uint32_t> key;
  key.reserve(h.elements.size());
  for (const Element& x : h.elements) key.push_back(rank(g, x));
  return key;
}

}  // namespace

IndexSubgroups all_subgroups_of_index(const GroupParams& g, int k) {
  if (k != 2 && k != 4)
    throw std::invalid_argument("all_subgroups_of_index: k must be 2 or 4");
  const Subgroup der = derived_subgroup(g);

  std::vector<Subgroup> found;
  if (k == 2) {
    found = index2_subgroups_of(g, full_group(g));
  } else {
    // Every index-4 subgroup of a 2-group sits inside a maximal subgroup, so
    // collecting the index-2 subgroups of each maximal one and deduplicating
    // is exhaustive.
    std::set<std::vector<uint32_t>> seen;
    for (const Subgroup& m : index2_subgroups_of(g, full_group(g)))
      for (Subgroup& cand : index2_subgroups_of(g, m))
        if (seen.insert(rank_key(g, cand)).second)
          found.push_back(std::move(cand));
  }

  std::sort(found.begin(), found.end(),
            [&g](const Subgroup& a, const Subgroup& b) {
              return rank_key(g, a) < rank_key(g, b);
            });
  IndexSubgroups out;
  for (Subgroup& h : found) {
    if (subgroup_contains(g, h, der))
      out.containing_derived.push_back(std::move(h));
    else
      out.others.push_back(std::move(h));
  }
  return out;
}

SeriesReport lower_central_series(const GroupParams& g) {
  const std::vector<Element> g_gens = {gen_sigma(), gen_tau(), gen_rho()};
  SeriesReport rep;
  rep.gamma.push_back(full_group(g));
  while (rep.gamma.back().order() > 1) {
    const Subgroup& cur = rep.gamma.back();
    // [gamma_i, G]: normal closure of the generator commutators.
    ClosureBuilder b(g);
    std::vector<Element> gens;
    for (const Element& x : cur.generators)
      for (const Element& t : g_gens) {
        const Element c = commutator(g, x, t);
        if (b.add_generator(c)) gens.push_back(c);
      }
    close_under_conjugation(g, b, g_gens, gens);
    Subgroup next = make_subgroup(g, std::move(gens), b.elements());
    if (next.order() >= cur.order())
      throw std::logic_error("lower_central_series: series failed to descend");
    rep.gamma.push_back(std::move(next));
  }
  rep.nilpotency_class = static_cast<int>(rep.gamma.size()) - 1;
  rep.coclass = (g.n + 5) - rep.nilpotency_class;
  return rep;
}

std::vector<TableRow> table_index2_rows(const GroupParams& g) {
  const bool n1 = g.n == 1;
  auto W = [](const char* text) { return word(text); };
  std::vector<TableRow> rows;
  rows.push_back({"H1_2", {W("s"), W("t")}, {}, AbelianType{{2, g.n + 2}}});
  if (n1)
    rows.push_back({"H2_2", {W("s"), W("r")}, {W("s^2")}, AbelianType{{1, 2}}});
  else
    rows.push_back({"H2_2",
                    {W("s"), W("t^2"), W("r")},
                    {W("s^2"), W("t^4")},
                    AbelianType{{1, 1, 1}}});
  rows.push_back({"H3_2", {W("r"), W("t")}, {W("t^2")}, AbelianType{{1, 2}}});
  if (n1)
    rows.push_back({"H4_2",
                    {W("s*t"), W("r"), W("s^2")},
                    {W("s^2*t^2"), W("s^4")},
                    AbelianType{{1, 1, 1}}});
  else
    rows.push_back(
        {"H4_2", {W("s*t"), W("r")}, {W("s^2*t^2")}, AbelianType{{1, 2}}});
  rows.push_back({"H5_2", {W("s*r"), W("t")}, {W("t^2")}, AbelianType{{1, 2}}});
  if (n1)
    rows.push_back(
        {"H6_2", {W("t*r"), W("s")}, {W("s^2")}, AbelianType{{1, 2}}});
  else
    rows.push_back({"H6_2",
                    {W("t*r"), W("s"), W("t^2")},
                    {W("s^2"), W("t^4")},
                    AbelianType{{1, 1, 1}}});
  if (n1)
    rows.push_back({"H7_2",
                    {W("s*t"), W("t*r"), W("s^2")},
                    {W("s^4"), W("s^2*t^2")},
                    AbelianType{{1, 1, 1}}});
  else
    rows.push_back(
        {"H7_2", {W("s*t"), W("t*r")}, {W("s^2*t^2")}, AbelianType{{1, 2}}});
  return rows;
}

std::vector<TableRow> table_index4_rows(const GroupParams& g) {
  const int n = g.n;
  auto W = [](const char* text) { return word(text); };
  std::vector<TableRow> rows;
  rows.push_back({"H1_4",
                  {W("s"), W("t^2")},
                  {},
                  AbelianType{{std::min(n, 2), std::max(n + 1, 3)}}});
  rows.push_back({"H2_4", {W("t"), W("s^2")}, {}, AbelianType{{1, n + 2}}});
  rows.push_back({"H3_4", {W("r"), W("t^2")}, {W("t^4")}, AbelianType{{1, 2}}});
  rows.push_back({"H4_4",
                  {W("s*t"), W("s^2")},
                  {},
                  n == 1 ? AbelianType{{2, 2}} : AbelianType{{1, n + 2}}});
  rows.push_back(
      {"H5_4", {W("s*r"), W("t^2")}, {W("t^4")}, AbelianType{{1, 2}}});
  rows.push_back(
      {"H6_4", {W("t*r"), W("t^2")}, {W("t^4")}, AbelianType{{1, 2}}});
  rows.push_back(
      {"H7_4", {W("s*t*r"), W("t^2")}, {W("t^4")}, AbelianType{{1, 2}}});
  return rows;
}

namespace {

Subgroup closure_of_words(const GroupParams& g,
                          const std::vector<ElementWord>& words) {
  std::vector<Element> gens;
  gens.reserve(words.size());
  for (const ElementWord& w : words) gens.push_back(eval_word(g, w));
  return closure(g, gens);
}

void verify_table_rows(const GroupParams& g, const std::vector<TableRow>& rows,
                       const std::vector<LabeledSubgroup>& constructed,
                       const char* table_name, CheckReport& rep) {
  for (size_t i = 0; i < rows.size(); ++i) {
    const TableRow& row = rows[i];
    const Subgroup generated = closure_of_words(g, row.generators);
    const Subgroup derived = derived_subgroup(g, generated);
    const Subgroup derived_expected =
        row.derived_generators.empty()
            ? trivial_subgroup(g)
            : closure_of_words(g, row.derived_generators);
    const AbelianType ab = abelianization(g, generated);

    const bool set_ok = same_subgroup(generated, constructed[i].subgroup);
    const bool der_ok = same_subgroup(derived, derived_expected);
    const bool type_ok = ab == row.type;

    CheckItem item;
    item.name = std::string(table_name) + " row " + std::to_string(i + 1) +
                " (" + row.label + ")";
    item.pass = set_ok && der_ok && type_ok;
    if (item.pass) {
      item.detail = "subgroup of order " + std::to_string(generated.order()) +
                    ", derived of order " + std::to_string(derived.order()) +
                    ", type " + ab.to_string();
    } else {
      item.detail = std::string("subgroup set ") + (set_ok ? "ok" : "MISMATCH") +
                    "; derived " + (der_ok ? "ok" : "MISMATCH") + "; type " +
                    ab.to_string() + (type_ok ? " ok" : " != expected " +
                    row.type.to_string());
    }
    rep.items.push_back(std::move(item));
  }
}

}  // namespace

CheckReport verify_tables(const GroupParams& g,
                          const std::vector<TableRow>& rows2,
                          const std::vector<TableRow>& rows4) {
  CheckReport rep;
  verify_table_rows(g, rows2, maximal_subgroups(g), "index-2 table", rep);
  verify_table_rows(g, rows4, index4_subgroups_above_derived(g),
                    "index-4 table", rep);
  return rep;
}

CheckReport verify_tables(const GroupParams& g) {
  return verify_tables(g, table_index2_rows(g), table_index4_rows(g));
}

}  // namespace gn
