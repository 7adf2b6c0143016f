#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gn/check.hpp"

namespace gn {

/*
 * Exact arithmetic for the family of metabelian 2-groups
 *
 *   G(n) = < sigma, tau, rho |  rho^4 = sigma^8 = tau^(2^(n+2)) = 1,
 *                               sigma^4 = tau^(2^(n+1)),
 *                               rho^2  = tau^(2^n) sigma^2,
 *                               [tau, sigma] = 1,
 *                               [rho, sigma] = sigma^-2,
 *                               [rho, tau]   = tau^2 >,       n >= 1.
 *
 * Every element has a unique normal form sigma^a tau^b rho^c with
 * a in [0,4), b in [0,2^(n+2)), c in [0,2); the cell count
 * 4 * 2^(n+2) * 2 = 2^(n+5) equals |G(n)|.  All operations below work on
 * these canonical triples and are pure: values are immutable after
 * construction and safe to share across threads.
 */

/// Parameter n together with the derived moduli of G(n).
struct GroupParams {
  int n = 1;
  int64_t tau_order = 8;     ///< 2^(n+2), the order of tau
  int64_t sigma_fold = 4;    ///< 2^(n+1), the tau-exponent equal to sigma^4
  int64_t rho_square_b = 2;  ///< 2^n, the tau-exponent in rho^2 = tau^(2^n) sigma^2
  int64_t group_order = 64;  ///< 2^(n+5)

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Largest supported n.  Element ranks and membership bitsets are indexed by
/// 32-bit positions over all 2^(n+5) normal forms, and the exhaustive
/// operations walk them; 2^25 elements is where that stops being sensible.
inline constexpr int kMaxN = 20;

/// Builds the parameter block for G(n).  Throws std::invalid_argument unless
/// 1 <= n <= kMaxN.
GroupParams make_group(int n);

/// Canonical exponent triple (a, b, c) for sigma^a tau^b rho^c.
struct Element {
  int32_t a = 0;
  int32_t b = 0;
  int32_t c = 0;

  friend bool operator==(const Element&, const Element&) = default;
};

constexpr Element identity() { return {0, 0, 0}; }
constexpr Element gen_sigma() { return {1, 0, 0}; }
constexpr Element gen_tau() { return {0, 1, 0}; }
constexpr Element gen_rho() { return {0, 0, 1}; }

/// Reduces arbitrary integer exponents to the canonical cell.  Reduction
/// order: fold c into {0,1} absorbing each rho^2 as (a+2, b+2^n), then reduce
/// a mod 8 and fold sigma^4 into tau^(2^(n+1)), then reduce b mod 2^(n+2).
/// Negative exponents reduce by true mathematical mod.
Element normalize(const GroupParams& g, int64_t a, int64_t b, int64_t c);

/// Group law on canonical triples.  Moving an abelian part sigma^a tau^b
/// through rho conjugates it to sigma^(3a) tau^(-b).
Element mul(const GroupParams& g, Element x, Element y);

/// The unique y with mul(x, y) == identity() == mul(y, x).
Element inv(const GroupParams& g, Element x);

/// x^k by square-and-multiply; negative k goes through inv.
Element pow(const GroupParams& g, Element x, int64_t k);

/// [x, y] = x^-1 y^-1 x y.
Element commutator(const GroupParams& g, Element x, Element y);

/// Least k >= 1 with x^k = 1; always a power of 2 dividing |G(n)|.
int64_t element_order(const GroupParams& g, Element x);

/// All 2^(n+5) canonical triples in lexicographic (c, a, b) order.
std::vector<Element> enumerate_elements(const GroupParams& g);

/// Position of x in the (c, a, b) lexicographic order; inverse of unrank.
uint32_t rank(const GroupParams& g, Element x);
Element unrank(const GroupParams& g, uint32_t r);

/// Conjugate x^y = y^-1 x y.
Element conjugate(const GroupParams& g, Element x, Element y);

/// "(a, b, c)" for diagnostics.
std::string to_string(Element x);

/// Verifies that the arithmetic satisfies the defining relations and the
/// derived identities that the rewriting in mul() relies on:
///   - the relations of the presentation above,
///   - rho^-1 sigma rho = sigma^3, rho^-1 tau rho = tau^-1,
///   - rho^2 commutes with sigma and tau,
///   - (tau rho)^2 = rho^2 and (sigma tau rho)^2 = (sigma rho)^2 = rho^2 sigma^4,
///   - [rho, tau^(2^r)] = tau^(2^(r+1)) and [rho, sigma^(2^r)] = sigma^(-2^(r+1))
///     for every r >= 0 with 2^(r+1) < 2^(n+2).
/// Failures are report entries, not exceptions.
CheckReport check_presentation(const GroupParams& g);

}  // namespace gn
