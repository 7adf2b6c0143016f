#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gn/check.hpp"
#include "gn/group.hpp"
#include "gn/subgroup.hpp"

namespace gn {

/// Image of an element in G/G' = F_2^3: the parity vector
/// (eps_sigma, eps_tau, eps_rho).  Well-defined on cosets of
/// G' = <sigma^2, tau^2>.
struct Coord {
  uint8_t bits = 0;  ///< bit 2 sigma, bit 1 tau, bit 0 rho

  constexpr Coord() = default;
  constexpr explicit Coord(uint8_t b) : bits(b) {}
  constexpr Coord(int es, int et, int er)
      : bits(static_cast<uint8_t>(((es & 1) << 2) | ((et & 1) << 1) |
                                  (er & 1))) {}

  constexpr int eps_sigma() const { return (bits >> 2) & 1; }
  constexpr int eps_tau() const { return (bits >> 1) & 1; }
  constexpr int eps_rho() const { return bits & 1; }

  friend constexpr bool operator==(Coord, Coord) = default;
  friend constexpr bool operator<(Coord x, Coord y) { return x.bits < y.bits; }
  friend constexpr Coord operator+(Coord x, Coord y) {
    return Coord(static_cast<uint8_t>(x.bits ^ y.bits));
  }
};

Coord coord_of(Element x);
/// Least element with the given parities; a section of coord_of.
Element coord_lift(Coord v);
/// "str"-alphabet word for a coordinate, e.g. (1,1,0) -> "st".
std::string coord_word(Coord v);

/// One representative per left coset xH: the rank-least member, in ascending
/// rank order, so the first entry is the identity.
std::vector<Element> coset_transversal(const GroupParams& g,
                                       const Subgroup& h);
/// A transversal with one uniformly random member per coset (deterministic
/// for a fixed seed).
std::vector<Element> random_coset_transversal(const GroupParams& g,
                                              const Subgroup& h,
                                              uint64_t seed);

/// Precomputed data for transfers into one subgroup H: the derived subgroup
/// H', the quotient H/H' for reducing images, and H's normality in G.
struct TransferContext {
  GroupParams g;
  Subgroup h;
  Subgroup h_derived;
  Quotient mod_derived;
  std::vector<bool> h_member;  ///< membership bitset over element ranks
  bool normal = false;

  bool member(Element x) const { return h_member[rank(g, x)]; }
};

TransferContext transfer_context(const GroupParams& g, const Subgroup& h);

/*
 * Transfer map V : G/G' -> H/H' in three interchangeable forms.  Every
 * function returns the rank-least representative of the image coset in H/H';
 * the identity element therefore denotes the trivial coset.
 */

/// Orbit form: with f = [<g>H : H] and {x_1..x_t} representatives of
/// G/<g>H, the image is prod_i x_i^-1 g^f x_i mod H'.  Requires H normal;
/// throws std::invalid_argument otherwise.  The result does not depend on
/// the representative choice; the seeded overload re-picks representatives
/// at random to let callers confirm that.
Element transfer_eq2(const TransferContext& ctx, Element x);
Element transfer_eq2(const TransferContext& ctx, Element x, uint64_t seed);
Element transfer_eq2(const GroupParams& g, const Subgroup& h, Element x);

/// Classical form: for a left transversal {x_i}, g x_i = x_{pi(i)} h_i and
/// the image is prod_i h_i mod H'.  Works for any finite-index H.
Element transfer_transversal(const TransferContext& ctx, Element x);
Element transfer_transversal(const TransferContext& ctx, Element x,
                             const std::vector<Element>& transversal);
Element transfer_transversal(const GroupParams& g, const Subgroup& h,
                             Element x);

enum class ClosedFormCase {
  index2,   ///< [G : H] = 2
  cyclic4,  ///< [G : H] = 4 and G/H cyclic
  klein4,   ///< [G : H] = 4 and G/H a Klein group
};

ClosedFormCase closed_form_case(const TransferContext& ctx);

/// Index-2 and index-4 closed forms, selected by inspecting G/H:
///   index 2, coset {1, zH}:     g z^-1 g z mod H' if g in H, else g^2;
///   cyclic quotient {z^i H}:    g z^-1 g z^-1 g z^-1 g z^3 / g^4 /
///                               g^2 z^-1 g^2 z by coset of g;
///   Klein quotient {1,z1,z2,z1z2}: g z1^-1 g z1 z2^-1 g z1^-1 g z1 z2 if
///                               g in H, else g^2 z_i^-1 g^2 z_i with
///                               z_i not in gH.
/// Throws std::invalid_argument if the index is not 2 or 4, or if an
/// index-4 subgroup is not normal.
Element transfer_closed_form(const TransferContext& ctx, Element x);
Element transfer_closed_form(const GroupParams& g, const Subgroup& h,
                             Element x);

/// Transfer images of all eight classes of G/G', indexed by Coord::bits.
struct TransferTable {
  std::array<Element, 8> image{};
};
TransferTable transfer_table(const TransferContext& ctx);
TransferTable transfer_table(const GroupParams& g, const Subgroup& h);

/// Subspace of G/G' = F_2^3 with a deterministic reduced-echelon basis
/// (sigma the leading coordinate) and the full sorted member list.
struct KernelSubspace {
  std::vector<Coord> basis;
  std::vector<Coord> members;

  size_t size() const { return members.size(); }
  bool contains(Coord v) const;
};

/// Span of the given vectors; keeps the given (independent) vectors as the
/// stored basis, dropping duplicates and dependent entries.
KernelSubspace span_of(const std::vector<Coord>& gens);

/// {v : V(lift(v)) trivial in H/H'}; requires H normal.
KernelSubspace transfer_kernel(const GroupParams& g, const Subgroup& h);
KernelSubspace transfer_kernel(const TransferContext& ctx);

/// Expected kernel generators for the fourteen labeled subgroups (the n = 1
/// and n >= 2 variants differ for four of them).
struct KernelExpectation {
  std::string label;
  std::vector<Coord> gens;
};
std::vector<KernelExpectation> expected_transfer_kernels(const GroupParams& g);

/// Compares the computed kernel of every labeled subgroup against the
/// expected spans: one entry per index-2 subgroup plus one entry covering
/// all seven index-4 subgroups (whose kernels must be the whole of G/G').
CheckReport verify_transfer_kernels(const GroupParams& g);

/// Kernel generators translated to the ideal-class alphabet a, b, c
/// (sigma -> a, tau -> b, rho -> c), plus the reading of the kernel size:
/// 2 -> two, 4 -> four, 8 -> all classes capitulate.
struct CapitulationView {
  std::vector<std::string> labels;
  std::string summary;
};
CapitulationView capitulation_view(const KernelSubspace& k);

}  // namespace gn
