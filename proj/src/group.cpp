#include "gn/group.hpp"

#include <stdexcept>

namespace gn {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

int64_t floor_mod(int64_t a, int64_t b) {
  int64_t r = a % b;
  if (r != 0 && (r < 0) != (b < 0)) r += b;
  return r;
}

}  // namespace

GroupParams make_group(int n) {
  if (n < 1)
    throw std::invalid_argument("make_group: n must be >= 1, got " +
                                std::to_string(n));
  if (n > kMaxN)
    throw std::invalid_argument("make_group: n must be <= " +
                                std::to_string(kMaxN) + ", got " +
                                std::to_string(n));
  GroupParams g;
  g.n = n;
  g.tau_order = int64_t{1} << (n + 2);
  g.sigma_fold = int64_t{1} << (n + 1);
  g.rho_square_b = int64_t{1} << n;
  g.group_order = int64_t{1} << (n + 5);
  return g;
}

Element normalize(const GroupParams& g, int64_t a, int64_t b, int64_t c) {
  // rho^2 = tau^(2^n) sigma^2 is central, so rho powers peel off in pairs.
  const int64_t q = floor_div(c, 2);
  c -= 2 * q;
  a += 2 * q;
  b += g.rho_square_b * q;
  // sigma^8 = 1, and sigma^4 folds into tau^(2^(n+1)).
  a = floor_mod(a, 8);
  if (a >= 4) {
    a -= 4;
    b += g.sigma_fold;
  }
  b = floor_mod(b, g.tau_order);
  return Element{static_cast<int32_t>(a), static_cast<int32_t>(b),
                 static_cast<int32_t>(c)};
}

Element mul(const GroupParams& g, Element x, Element y) {
  if (x.c == 0)
    return normalize(g, int64_t{x.a} + y.a, int64_t{x.b} + y.b, y.c);
  // x = u rho: pull y's abelian part through rho (a -> 3a, b -> -b).
  return normalize(g, int64_t{x.a} + 3 * int64_t{y.a}, int64_t{x.b} - y.b,
                   1 + int64_t{y.c});
}

Element inv(const GroupParams& g, Element x) {
  if (x.c == 0) return normalize(g, -int64_t{x.a}, -int64_t{x.b}, 0);
  // x = u rho with u = sigma^a tau^b:
  // x^-1 = rho^-1 u^-1 = rho sigma^(-2-a) tau^(-2^n - b)
  //      = sigma^(-3(a+2)) tau^(2^n + b) rho.
  return normalize(g, -3 * (int64_t{x.a} + 2), int64_t{x.b} + g.rho_square_b,
                   1);
}

Element pow(const GroupParams& g, Element x, int64_t k) {
  if (k < 0) {
    x = inv(g, x);
    k = -k;
  }
  Element acc = identity();
  while (k > 0) {
    if (k & 1) acc = mul(g, acc, x);
    x = mul(g, x, x);
    k >>= 1;
  }
  return acc;
}

Element commutator(const GroupParams& g, Element x, Element y) {
  return mul(g, mul(g, inv(g, x), inv(g, y)), mul(g, x, y));
}

Element conjugate(const GroupParams& g, Element x, Element y) {
  return mul(g, mul(g, inv(g, y), x), y);
}

int64_t element_order(const GroupParams& g, Element x) {
  // In a finite 2-group every element order is a power of 2.
  int64_t ord = 1;
  while (!(x == identity())) {
    x = mul(g, x, x);
    ord <<= 1;
  }
  return ord;
}

std::vector<Element> enumerate_elements(const GroupParams& g) {
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(g.group_order));
  for (int32_t c = 0; c < 2; ++c)
    for (int32_t a = 0; a < 4; ++a)
      for (int64_t b = 0; b < g.tau_order; ++b)
        out.push_back(Element{a, static_cast<int32_t>(b), c});
  return out;
}

uint32_t rank(const GroupParams& g, Element x) {
  return static_cast<uint32_t>((int64_t{x.c} * 4 + x.a) * g.tau_order + x.b);
}

Element unrank(const GroupParams& g, uint32_t r) {
  const int64_t b = r % g.tau_order;
  const int64_t ca = r / g.tau_order;
  return Element{static_cast<int32_t>(ca % 4), static_cast<int32_t>(b),
                 static_cast<int32_t>(ca / 4)};
}

std::string to_string(Element x) {
  return "(" + std::to_string(x.a) + ", " + std::to_string(x.b) + ", " +
         std::to_string(x.c) + ")";
}

namespace {

void check_eq(CheckReport& rep, const std::string& name, const Element& lhs,
              const Element& rhs) {
  CheckItem item;
  item.name = name;
  item.pass = lhs == rhs;
  item.detail = item.pass ? "both sides " + to_string(lhs)
                          : "lhs " + to_string(lhs) + " != rhs " + to_string(rhs);
  rep.items.push_back(std::move(item));
}

}  // namespace

CheckReport check_presentation(const GroupParams& g) {
  CheckReport rep;
  const Element e = identity();
  const Element s = gen_sigma();
  const Element t = gen_tau();
  const Element r = gen_rho();

  check_eq(rep, "relation rho^4 = 1", pow(g, r, 4), e);
  check_eq(rep, "relation sigma^8 = 1", pow(g, s, 8), e);
  check_eq(rep, "relation tau^(2^(n+2)) = 1", pow(g, t, g.tau_order), e);
  check_eq(rep, "relation sigma^4 = tau^(2^(n+1))", pow(g, s, 4),
           pow(g, t, g.sigma_fold));
  check_eq(rep, "relation rho^2 = tau^(2^n) sigma^2", pow(g, r, 2),
           mul(g, pow(g, t, g.rho_square_b), pow(g, s, 2)));
  check_eq(rep, "relation [tau, sigma] = 1", commutator(g, t, s), e);
  check_eq(rep, "relation [rho, sigma] = sigma^-2", commutator(g, r, s),
           pow(g, s, -2));
  check_eq(rep, "relation [rho, tau] = tau^2", commutator(g, r, t),
           pow(g, t, 2));

  check_eq(rep, "identity 1: rho^-1 sigma rho = sigma^3", conjugate(g, s, r),
           pow(g, s, 3));
  check_eq(rep, "identity 2: rho^-1 tau rho = tau^-1", conjugate(g, t, r),
           inv(g, t));
  {
    const Element r2 = pow(g, r, 2);
    CheckItem item;
    item.name = "identity 3: rho^2 commutes with sigma and tau";
    item.pass = mul(g, r2, s) == mul(g, s, r2) && mul(g, r2, t) == mul(g, t, r2);
    item.detail = item.pass ? "rho^2 = " + to_string(r2) + " is central in "
                              "<sigma, tau, rho^2>"
                            : "rho^2 fails to commute";
    rep.items.push_back(std::move(item));
  }
  check_eq(rep, "identity 4: (tau rho)^2 = rho^2", pow(g, mul(g, t, r), 2),
           pow(g, r, 2));
  {
    const Element lhs1 = pow(g, mul(g, s, mul(g, t, r)), 2);
    const Element lhs2 = pow(g, mul(g, s, r), 2);
    const Element rhs = mul(g, pow(g, r, 2), pow(g, s, 4));
    CheckItem item;
    item.name = "identity 5: (sigma tau rho)^2 = (sigma rho)^2 = rho^2 sigma^4";
    item.pass = lhs1 == rhs && lhs2 == rhs;
    item.detail = item.pass
                      ? "all three equal " + to_string(rhs)
                      : "(sigma tau rho)^2 = " + to_string(lhs1) +
                            ", (sigma rho)^2 = " + to_string(lhs2) +
                            ", rho^2 sigma^4 = " + to_string(rhs);
    rep.items.push_back(std::move(item));
  }
  // [rho, tau^(2^r)] = tau^(2^(r+1)) and [rho, sigma^(2^r)] = sigma^(-2^(r+1))
  // for every r with 2^(r+1) below the tau modulus.
  for (int rr = 0; (int64_t{2} << rr) < g.tau_order; ++rr) {
    const int64_t p = int64_t{1} << rr;
    const Element lhs_t = commutator(g, r, pow(g, t, p));
    const Element rhs_t = pow(g, t, 2 * p);
    const Element lhs_s = commutator(g, r, pow(g, s, p));
    const Element rhs_s = pow(g, s, -2 * p);
    CheckItem item;
    item.name = "identity 6 (r=" + std::to_string(rr) +
                "): [rho, tau^(2^r)] = tau^(2^(r+1)), "
                "[rho, sigma^(2^r)] = sigma^(-2^(r+1))";
    item.pass = lhs_t == rhs_t && lhs_s == rhs_s;
    item.detail = item.pass ? "tau part " + to_string(lhs_t) + ", sigma part " +
                                  to_string(lhs_s)
                            : "tau part " + to_string(lhs_t) + " vs " +
                                  to_string(rhs_t) + "; sigma part " +
                                  to_string(lhs_s) + " vs " + to_string(rhs_s);
    rep.items.push_back(std::move(item));
  }
  return rep;
}

}  // namespace gn
