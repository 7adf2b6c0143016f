#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "gn/group.hpp"
#include "oracle.hpp"

using namespace gn;

TEST_CASE("make_group derives the moduli from n") {
  for (int n = 1; n <= 8; ++n) {
    const GroupParams g = make_group(n);
    CHECK(g.group_order == (int64_t{1} << (n + 5)));
    CHECK(g.tau_order == (int64_t{1} << (n + 2)));
    CHECK(g.sigma_fold == (int64_t{1} << (n + 1)));
    CHECK(g.rho_square_b == (int64_t{1} << n));
    CHECK(g.group_order == 4 * g.tau_order * 2);
  }
  CHECK(make_group(1).group_order == 64);
  CHECK(make_group(2).group_order == 128);
  CHECK_THROWS_AS(make_group(0), std::invalid_argument);
  CHECK_THROWS_AS(make_group(-3), std::invalid_argument);
  CHECK_THROWS_AS(make_group(kMaxN + 1), std::invalid_argument);
}

TEST_CASE("normalize folds the relations into the canonical cell") {
  const GroupParams g1 = make_group(1);
  CHECK(normalize(g1, 4, 0, 0) == Element{0, 4, 0});  // sigma^4 = tau^4
  CHECK(normalize(g1, 0, 0, 2) == Element{2, 2, 0});  // rho^2 = sigma^2 tau^2
  const GroupParams g2 = make_group(2);
  CHECK(normalize(g2, 0, 16, 0) == Element{0, 0, 0});  // tau^(2^(n+2)) = 1

  // canonical triples are fixed points
  for (const Element& x : enumerate_elements(g1))
    CHECK(normalize(g1, x.a, x.b, x.c) == x);
}

TEST_CASE("normalize agrees with evaluating the powers for wild exponents") {
  for (int n : {1, 2, 3}) {
    const GroupParams g = make_group(n);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int64_t> dist(-2000, 2000);
    for (int trial = 0; trial < 500; ++trial) {
      const int64_t a = dist(rng), b = dist(rng), c = dist(rng);
      const Element via_powers =
          mul(g, mul(g, pow(g, gen_sigma(), a), pow(g, gen_tau(), b)),
              pow(g, gen_rho(), c));
      CHECK(normalize(g, a, b, c) == via_powers);
    }
  }
}

TEST_CASE("mul handles the rho conjugation") {
  const GroupParams g = make_group(1);
  // rho sigma = sigma^3 rho
  CHECK(mul(g, gen_rho(), gen_sigma()) == Element{3, 0, 1});
  // (tau rho)^2 = rho^2
  const Element tr{0, 1, 1};
  CHECK(mul(g, tr, tr) == Element{2, 2, 0});
  CHECK(mul(g, tr, tr) == pow(g, gen_rho(), 2));
  for (const Element& x : enumerate_elements(g)) {
    CHECK(mul(g, x, identity()) == x);
    CHECK(mul(g, identity(), x) == x);
  }
}

TEST_CASE("mul is associative") {
  for (int n : {1, 2}) {  // exhaustive
    const GroupParams g = make_group(n);
    const auto elems = enumerate_elements(g);
    for (const Element& x : elems)
      for (const Element& y : elems)
        for (const Element& z : elems)
          REQUIRE(mul(g, mul(g, x, y), z) == mul(g, x, mul(g, y, z)));
  }
  for (int n : {3, 4, 5}) {  // randomized
    const GroupParams g = make_group(n);
    std::mt19937_64 rng(11 + n);
    std::uniform_int_distribution<uint32_t> dist(
        0, static_cast<uint32_t>(g.group_order - 1));
    for (int trial = 0; trial < 20000; ++trial) {
      const Element x = unrank(g, dist(rng));
      const Element y = unrank(g, dist(rng));
      const Element z = unrank(g, dist(rng));
      REQUIRE(mul(g, mul(g, x, y), z) == mul(g, x, mul(g, y, z)));
    }
  }
}

TEST_CASE("mul agrees with the permutation realization") {
  for (int n : {1, 2}) {
    const GroupParams g = make_group(n);
    const oracle::PermRealization perm(g);
    bool ok = false;
    const size_t compared = perm.cayley_comparisons(ok);
    CHECK(ok);
    CHECK(compared == static_cast<size_t>(g.group_order) *
                          static_cast<size_t>(g.group_order));
  }
}

TEST_CASE("inv inverts on both sides") {
  const GroupParams g1 = make_group(1);
  CHECK(inv(g1, identity()) == identity());
  // sigma^-1 = sigma^3 tau^4, confirmed by exhaustive search
  CHECK(inv(g1, gen_sigma()) == Element{3, 4, 0});
  CHECK(inv(g1, gen_sigma()) == oracle::brute_inverse(g1, gen_sigma()));
  // rho^-1 = rho^3
  CHECK(inv(g1, gen_rho()) == oracle::brute_inverse(g1, gen_rho()));
  CHECK(inv(g1, gen_rho()) == pow(g1, gen_rho(), 3));
  CHECK(pow(g1, gen_rho(), 4) == identity());

  for (int n : {1, 2}) {
    const GroupParams g = make_group(n);
    for (const Element& x : enumerate_elements(g)) {
      const Element y = inv(g, x);
      REQUIRE(mul(g, x, y) == identity());
      REQUIRE(mul(g, y, x) == identity());
      REQUIRE(y == oracle::brute_inverse(g, x));
    }
  }
}

TEST_CASE("pow matches repeated multiplication") {
  const GroupParams g1 = make_group(1);
  CHECK(pow(g1, gen_rho(), 2) == Element{2, 2, 0});
  const GroupParams g2 = make_group(2);
  // (sigma tau rho)^2 = rho^2 sigma^4 = sigma^2 tau^12
  CHECK(pow(g2, Element{1, 1, 1}, 2) == Element{2, 12, 0});
  CHECK(pow(g2, Element{1, 1, 1}, 2) ==
        mul(g2, pow(g2, gen_rho(), 2), pow(g2, gen_sigma(), 4)));

  for (const Element& x : enumerate_elements(g1)) {
    CHECK(pow(g1, x, 0) == identity());
    for (int64_t k = 1; k <= 9; ++k) {
      REQUIRE(pow(g1, x, k) == oracle::brute_pow(g1, x, k));
      REQUIRE(pow(g1, x, -k) == inv(g1, pow(g1, x, k)));
    }
  }
}

TEST_CASE("commutator identities") {
  for (int n : {1, 2, 3, 4}) {
    const GroupParams g = make_group(n);
    CHECK(commutator(g, gen_tau(), gen_sigma()) == identity());
    CHECK(commutator(g, gen_rho(), gen_sigma()) == pow(g, gen_sigma(), -2));
    CHECK(commutator(g, gen_rho(), gen_tau()) == pow(g, gen_tau(), 2));
  }
  const GroupParams g1 = make_group(1);
  CHECK(commutator(g1, gen_rho(), gen_tau()) == Element{0, 2, 0});
  for (const Element& x : enumerate_elements(g1))
    CHECK(commutator(g1, x, x) == identity());
}

TEST_CASE("element_order") {
  for (int n : {1, 2, 3, 4}) {
    const GroupParams g = make_group(n);
    CHECK(element_order(g, gen_tau()) == g.tau_order);
    CHECK(element_order(g, gen_rho()) == 4);
    CHECK(element_order(g, identity()) == 1);
    CHECK(pow(g, gen_rho(), 2) != identity());
  }
  for (int n : {1, 2, 3}) {
    const GroupParams g = make_group(n);
    for (const Element& x : enumerate_elements(g)) {
      const int64_t ord = element_order(g, x);
      REQUIRE(g.group_order % ord == 0);
      REQUIRE(pow(g, x, ord) == identity());
      if (ord > 1) REQUIRE(pow(g, x, ord / 2) != identity());
    }
  }
}

TEST_CASE("enumerate_elements lists every normal form once, in order") {
  CHECK(enumerate_elements(make_group(1)).size() == 64);
  CHECK(enumerate_elements(make_group(3)).size() == 256);
  for (int n : {1, 2, 3}) {
    const GroupParams g = make_group(n);
    const auto elems = enumerate_elements(g);
    CHECK(elems.front() == identity());
    CHECK(elems.size() == static_cast<size_t>(g.group_order));
    std::set<uint32_t> ranks;
    for (size_t i = 0; i < elems.size(); ++i) {
      CHECK(rank(g, elems[i]) == i);  // (c, a, b) lexicographic
      CHECK(unrank(g, static_cast<uint32_t>(i)) == elems[i]);
      ranks.insert(rank(g, elems[i]));
    }
    CHECK(ranks.size() == elems.size());
  }
}

TEST_CASE("check_presentation passes and covers all exponent ranges") {
  for (int n : {1, 2, 5}) {
    const GroupParams g = make_group(n);
    const CheckReport rep = check_presentation(g);
    CHECK(rep.all_pass());
    // eight relations, five identity groups, plus one entry per r in [0, n]
    CHECK(rep.items.size() == static_cast<size_t>(8 + 5 + n + 1));
  }
  // r = 1 instance at n = 1: [rho, sigma^2] = sigma^-4 = sigma^4 = tau^4
  const GroupParams g1 = make_group(1);
  const Element lhs = commutator(g1, gen_rho(), pow(g1, gen_sigma(), 2));
  CHECK(lhs == pow(g1, gen_sigma(), -4));
  CHECK(lhs == pow(g1, gen_sigma(), 4));
  CHECK(lhs == pow(g1, gen_tau(), 4));
}
