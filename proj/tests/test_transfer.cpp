#include <doctest.h>

#include <stdexcept>

#include "gn/subgroup.hpp"
#include "gn/transfer.hpp"
#include "gn/word.hpp"

using namespace gn;

namespace {

Element w(const GroupParams& g, const char* text) {
  return eval_word(g, word(text));
}

std::vector<LabeledSubgroup> all_fourteen(const GroupParams& g) {
  auto out = maximal_subgroups(g);
  auto quartic = index4_subgroups_above_derived(g);
  out.insert(out.end(), quartic.begin(), quartic.end());
  return out;
}

}  // namespace

TEST_CASE("coordinates in G/G'") {
  const GroupParams g = make_group(1);
  CHECK(coord_of(gen_sigma()) == Coord(1, 0, 0));
  CHECK(coord_of(gen_tau()) == Coord(0, 1, 0));
  CHECK(coord_of(gen_rho()) == Coord(0, 0, 1));
  for (uint8_t v = 0; v < 8; ++v)
    CHECK(coord_of(coord_lift(Coord(v))) == Coord(v));

  // well-defined on cosets of G' and a homomorphism
  const Subgroup der = derived_subgroup(g);
  for (const Element& x : enumerate_elements(g)) {
    for (const Element& d : der.elements)
      CHECK(coord_of(mul(g, x, d)) == coord_of(x));
    for (const Element& y : enumerate_elements(g))
      CHECK(coord_of(mul(g, x, y)) == coord_of(x) + coord_of(y));
  }
}

TEST_CASE("coset transversals pick least representatives") {
  const GroupParams g = make_group(1);
  CHECK(coset_transversal(g, full_group(g)) ==
        std::vector<Element>{identity()});

  const Subgroup h12 = maximal_subgroups(g)[0].subgroup;
  const auto reps2 = coset_transversal(g, h12);
  REQUIRE(reps2.size() == 2);
  CHECK(reps2[0] == identity());
  CHECK(reps2[1].c == 1);  // the nontrivial coset is the rho-parity-1 one

  for (const auto& [label, h] : index4_subgroups_above_derived(g)) {
    const auto reps = coset_transversal(g, h);
    REQUIRE(reps.size() == 4);
    CHECK(reps[0] == identity());
    // representatives sit in pairwise distinct cosets
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = i + 1; j < reps.size(); ++j)
        CHECK(!h.contains(g, mul(g, inv(g, reps[i]), reps[j])));
  }
}

TEST_CASE("transfer values into H1_2") {
  const GroupParams g = make_group(1);
  const TransferContext ctx = transfer_context(g, maximal_subgroups(g)[0].subgroup);
  // V(sigma) = sigma^4 = tau^4 = (0,4,0); V(tau) trivial; V(rho) = rho^2
  CHECK(transfer_eq2(ctx, gen_sigma()) == Element{0, 4, 0});
  CHECK(transfer_eq2(ctx, gen_tau()) == identity());
  CHECK(transfer_eq2(ctx, identity()) == identity());
  CHECK(transfer_eq2(ctx, gen_rho()) == pow(g, gen_rho(), 2));
  CHECK(transfer_eq2(ctx, w(g, "s*t")) == Element{0, 4, 0});
  // (sigma rho) and (sigma tau rho) map to rho^2 sigma^4
  const Element r2s4 = mul(g, pow(g, gen_rho(), 2), pow(g, gen_sigma(), 4));
  CHECK(transfer_eq2(ctx, w(g, "s*r")) == r2s4);
  CHECK(transfer_eq2(ctx, w(g, "s*t*r")) == r2s4);
}

TEST_CASE("transfer_eq2 rejects non-normal subgroups") {
  const GroupParams g = make_group(1);
  const Subgroup rho = closure(g, {gen_rho()});
  REQUIRE(!is_normal(g, rho));
  CHECK_THROWS_AS(transfer_eq2(g, rho, gen_sigma()), std::invalid_argument);
  // the classical transversal form still works there
  CHECK(transfer_transversal(g, rho, identity()) == identity());
}

TEST_CASE("the three transfer forms agree on every class") {
  for (int n : {1, 2, 3}) {
    const GroupParams g = make_group(n);
    for (const auto& [label, h] : all_fourteen(g)) {
      const TransferContext ctx = transfer_context(g, h);
      for (uint8_t v = 0; v < 8; ++v) {
        const Element lift = coord_lift(Coord(v));
        const Element base = transfer_eq2(ctx, lift);
        CAPTURE(n);
        CAPTURE(label);
        CAPTURE(int(v));
        REQUIRE(transfer_transversal(ctx, lift) == base);
        REQUIRE(transfer_closed_form(ctx, lift) == base);
        // transfer is constant on the whole coset, not just on the lift
        REQUIRE(transfer_eq2(ctx, mul(g, lift, Element{2, 2, 0})) == base);
      }
    }
  }
}

TEST_CASE("transfer does not depend on the representatives") {
  for (int n : {1, 2, 3}) {
    const GroupParams g = make_group(n);
    for (const auto& [label, h] : all_fourteen(g)) {
      const TransferContext ctx = transfer_context(g, h);
      for (uint8_t v = 0; v < 8; v += 3) {
        const Element lift = coord_lift(Coord(v));
        const Element base = transfer_transversal(ctx, lift);
        for (uint64_t seed = 1; seed <= 20; ++seed) {
          REQUIRE(transfer_transversal(
                      ctx, lift, random_coset_transversal(g, h, seed)) == base);
          REQUIRE(transfer_eq2(ctx, lift, seed) == base);
        }
      }
    }
  }
}

TEST_CASE("transfer_transversal validates the transversal") {
  const GroupParams g = make_group(1);
  const Subgroup h = maximal_subgroups(g)[0].subgroup;
  const TransferContext ctx = transfer_context(g, h);
  // two representatives of the same coset
  CHECK_THROWS_AS(
      transfer_transversal(ctx, gen_sigma(), {identity(), gen_sigma()}),
      std::invalid_argument);
  CHECK_THROWS_AS(transfer_transversal(ctx, gen_sigma(), {identity()}),
                  std::invalid_argument);
}

TEST_CASE("closed-form case detection") {
  const GroupParams g = make_group(2);
  CHECK(closed_form_case(transfer_context(
            g, maximal_subgroups(g)[0].subgroup)) == ClosedFormCase::index2);
  CHECK(closed_form_case(transfer_context(
            g, index4_subgroups_above_derived(g)[0].subgroup)) ==
        ClosedFormCase::klein4);
  // index outside {2, 4} is rejected
  CHECK_THROWS_AS(transfer_closed_form(g, derived_subgroup(g), gen_sigma()),
                  std::invalid_argument);
  CHECK_THROWS_AS(transfer_closed_form(g, full_group(g), gen_sigma()),
                  std::invalid_argument);
}

TEST_CASE("no normal index-4 subgroup has a cyclic quotient") {
  for (int n : {1, 2, 3, 4}) {
    const GroupParams g = make_group(n);
    const IndexSubgroups idx4 = all_subgroups_of_index(g, 4);
    size_t normal_count = 0;
    for (const auto* family : {&idx4.containing_derived, &idx4.others})
      for (const Subgroup& h : *family) {
        if (!is_normal(g, h)) continue;
        ++normal_count;
        CHECK(closed_form_case(transfer_context(g, h)) ==
              ClosedFormCase::klein4);
      }
    CHECK(normal_count >= 7);
  }
}

TEST_CASE("index-2 closed form follows the two member cases") {
  const GroupParams g = make_group(1);
  const Subgroup h = maximal_subgroups(g)[0].subgroup;
  const TransferContext ctx = transfer_context(g, h);
  // sigma lies in H: g^2 [g, z] with z = rho gives sigma^4
  CHECK(transfer_closed_form(ctx, gen_sigma()) == Element{0, 4, 0});
  const Element z = coset_transversal(g, h)[1];
  CHECK(transfer_closed_form(ctx, gen_sigma()) ==
        ctx.mod_derived.rep(mul(g, pow(g, gen_sigma(), 2),
                                commutator(g, gen_sigma(), z))));
  // rho lies outside H: g^2
  CHECK(transfer_closed_form(ctx, gen_rho()) == pow(g, gen_rho(), 2));
}

TEST_CASE("transfer is a homomorphism into H/H'") {
  for (int n : {1, 2, 3}) {
    const GroupParams g = make_group(n);
    for (const auto& [label, h] : all_fourteen(g)) {
      const TransferContext ctx = transfer_context(g, h);
      const TransferTable table = transfer_table(ctx);
      for (uint8_t u = 0; u < 8; ++u)
        for (uint8_t v = 0; v < 8; ++v) {
          const Coord sum = Coord(u) + Coord(v);
          REQUIRE(table.image[sum.bits] ==
                  ctx.mod_derived.rep(
                      mul(g, table.image[u], table.image[v])));
        }
    }
  }
}

TEST_CASE("transfer kernels match the expected spans") {
  const GroupParams g1 = make_group(1);
  const auto maximal1 = maximal_subgroups(g1);
  CHECK(transfer_kernel(g1, maximal1[0].subgroup).members ==
        span_of({Coord(0, 1, 0)}).members);
  // H4_2 at n = 1: kernel spanned by tau rho and sigma rho
  CHECK(transfer_kernel(g1, maximal1[3].subgroup).members ==
        span_of({Coord(1, 0, 1), Coord(0, 1, 1)}).members);
  // the canonical reduced-echelon basis for that kernel
  CHECK(transfer_kernel(g1, maximal1[3].subgroup).basis ==
        std::vector<Coord>{Coord(1, 0, 1), Coord(0, 1, 1)});

  for (int n : {1, 2, 3}) {
    const GroupParams g = make_group(n);
    for (const auto& [label, h] : index4_subgroups_above_derived(g)) {
      const KernelSubspace k = transfer_kernel(g, h);
      CHECK(k.size() == 8);  // the whole of G/G'
    }
    for (const auto& [label, h] : maximal_subgroups(g)) {
      const KernelSubspace k = transfer_kernel(g, h);
      const size_t sz = k.size();
      CHECK((sz == 1 || sz == 2 || sz == 4 || sz == 8));
      for (const Coord& u : k.members)
        for (const Coord& v : k.members) CHECK(k.contains(u + v));
    }
  }
}

TEST_CASE("verify_transfer_kernels passes with the right branches") {
  for (int n : {1, 2, 3, 4, 5, 6}) {
    const GroupParams g = make_group(n);
    const CheckReport rep = verify_transfer_kernels(g);
    CHECK(rep.items.size() == 8);
    for (const CheckItem& item : rep.items) {
      CAPTURE(n);
      CAPTURE(item.name);
      CAPTURE(item.detail);
      CHECK(item.pass);
    }
  }
  // n = 2 branch of H2_2: kernel <sigma, tau rho>
  const GroupParams g2 = make_group(2);
  CHECK(transfer_kernel(g2, maximal_subgroups(g2)[1].subgroup).members ==
        span_of({Coord(1, 0, 0), Coord(0, 1, 1)}).members);
}

TEST_CASE("span_of keeps the given basis and drops dependent vectors") {
  const KernelSubspace k = span_of({Coord(1, 1, 0), Coord(0, 1, 1)});
  CHECK(k.basis == std::vector<Coord>{Coord(1, 1, 0), Coord(0, 1, 1)});
  CHECK(k.size() == 4);
  CHECK(k.contains(Coord(1, 0, 1)));  // ab + bc = ac
  const KernelSubspace dep =
      span_of({Coord(1, 0, 0), Coord(0, 1, 0), Coord(1, 1, 0)});
  CHECK(dep.basis ==
        std::vector<Coord>{Coord(1, 0, 0), Coord(0, 1, 0)});
  CHECK(span_of({}).size() == 1);
}

TEST_CASE("capitulation_view renders kernels in the ideal-class alphabet") {
  const CapitulationView two = capitulation_view(span_of({Coord(0, 1, 0)}));
  CHECK(two.labels == std::vector<std::string>{"b"});
  CHECK(two.summary == "two classes capitulate");

  const CapitulationView four =
      capitulation_view(span_of({Coord(1, 1, 0), Coord(0, 1, 1)}));
  CHECK(four.labels == std::vector<std::string>{"ab", "bc"});
  CHECK(four.summary == "four classes capitulate");

  const CapitulationView all = capitulation_view(
      span_of({Coord(1, 0, 0), Coord(0, 1, 0), Coord(0, 0, 1)}));
  CHECK(all.labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(all.summary == "all classes capitulate");

  CHECK(capitulation_view(span_of({})).summary == "no classes capitulate");
}

TEST_CASE("derived subgroup type is (2, 2^(n+1))") {
  for (int n = 1; n <= 6; ++n) {
    const GroupParams g = make_group(n);
    CHECK(abelian_type(g, derived_subgroup(g)) == AbelianType{{1, n + 1}});
  }
}
