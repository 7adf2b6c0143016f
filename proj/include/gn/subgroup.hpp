#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gn/check.hpp"
#include "gn/group.hpp"
#include "gn/word.hpp"

namespace gn {

/// A subgroup of a fixed G(n): a generating list plus the full element set.
/// `elements` is sorted by rank, closed under mul and inv, and contains the
/// identity; closure(generators) == elements is a class invariant that the
/// constructors below maintain.  Subgroup identity is by element set.
struct Subgroup {
  std::vector<Element> generators;
  std::vector<Element> elements;
  int64_t index = 0;  ///< group_order / order

  int64_t order() const { return static_cast<int64_t>(elements.size()); }
  bool contains(const GroupParams& g, Element x) const;
};

bool same_subgroup(const Subgroup& a, const Subgroup& b);
/// Is every element of inner also in outer?
bool subgroup_contains(const GroupParams& g, const Subgroup& outer,
                       const Subgroup& inner);

/// Smallest subgroup containing gens: worklist closure under multiplication
/// by the generators and under inv.
Subgroup closure(const GroupParams& g, const std::vector<Element>& gens);

Subgroup trivial_subgroup(const GroupParams& g);
/// G(n) itself, generated by sigma, tau, rho.
Subgroup full_group(const GroupParams& g);

/// Closed under conjugation by the three group generators?
bool is_normal(const GroupParams& g, const Subgroup& h);

/// Derived subgroup <[x, y] : x, y in H>, computed as the normal closure in H
/// of the commutators of H's generators (the same subgroup, without walking
/// all |H|^2 pairs).
Subgroup derived_subgroup(const GroupParams& g, const Subgroup& h);
/// Derived subgroup of the full group; equals <sigma^2, tau^2>.
Subgroup derived_subgroup(const GroupParams& g);

/// Cosets xN of a normal subgroup N of H, each represented by its rank-least
/// member.  The induced operation works through representatives.
struct Quotient {
  GroupParams g;
  std::vector<Element> normal_elements;  ///< N, sorted by rank
  std::vector<Element> reps;             ///< one per coset, sorted by rank
  std::vector<Element> generator_reps;   ///< images of the parent's generators

  int64_t order() const { return static_cast<int64_t>(reps.size()); }
  /// Least member of xN (assumes x lies in the parent subgroup).
  Element rep(Element x) const;
  Element mul_coset(Element x, Element y) const;
  bool is_identity_coset(Element x) const { return rep(x) == identity(); }
};

/// Builds H/N.  Throws std::invalid_argument if N is not a subgroup of H or
/// not normal in H.
Quotient quotient(const GroupParams& g, const Subgroup& h, const Subgroup& n);

/// Invariant-factor type (2^e1, ..., 2^er) of a finite abelian 2-group,
/// stored as the nondecreasing exponent list (e1, ..., er).  The empty list
/// is the trivial group.
struct AbelianType {
  std::vector<int> exps;

  friend bool operator==(const AbelianType&, const AbelianType&) = default;
  /// "(4, 8)" — the factor orders themselves.
  std::string to_string() const;
};

/// Recovers the type from the fixed-point counts c_k = |{x : x^(2^k) = 1}|:
/// d_k = log2(c_k) - log2(c_(k-1)) counts the e_i >= k, and conjugating that
/// partition yields the exponents.  Throws std::invalid_argument if the input
/// is not abelian.
AbelianType abelian_type(const GroupParams& g, const Subgroup& a);
AbelianType abelian_type(const GroupParams& g, const Quotient& q);

/// abelian_type of H / derived_subgroup(H).
AbelianType abelianization(const GroupParams& g, const Subgroup& h);

struct LabeledSubgroup {
  std::string label;  ///< "H1_2" ... "H7_4"
  Subgroup subgroup;
};

/// The seven subgroups of index 2: preimages of the hyperplanes of
/// G/G' = F_2^3, labeled H1_2..H7_2 to match the index-2 table rows.
std::vector<LabeledSubgroup> maximal_subgroups(const GroupParams& g);

/// The seven subgroups of index 4 containing G': preimages of the lines of
/// G/G' = F_2^3, labeled H1_4..H7_4.  Each is normal.
std::vector<LabeledSubgroup> index4_subgroups_above_derived(
    const GroupParams& g);

/// Result of the exhaustive index-k search, split by whether the subgroup
/// contains the derived subgroup.
struct IndexSubgroups {
  std::vector<Subgroup> containing_derived;
  std::vector<Subgroup> others;

  size_t total() const { return containing_derived.size() + others.size(); }
};

/// k = 2: every index-2 subgroup, found as a Frattini-quotient hyperplane
/// preimage.  k = 4: every index-4 subgroup, found as an index-2 subgroup of
/// some maximal subgroup and deduplicated.  Throws for other k.
IndexSubgroups all_subgroups_of_index(const GroupParams& g, int k);

/// Lower central series gamma_1 = G, gamma_(i+1) = [gamma_i, G], down to the
/// trivial subgroup.
struct SeriesReport {
  std::vector<Subgroup> gamma;  ///< gamma_1 ... gamma_(c+1), last trivial
  int nilpotency_class = 0;
  int coclass = 0;  ///< (n+5) - nilpotency_class
};

SeriesReport lower_central_series(const GroupParams& g);

/// One resolved row of the subgroup tables for a given n (the n = 1 and
/// n >= 2 variants differ for some rows).
struct TableRow {
  std::string label;
  std::vector<ElementWord> generators;
  std::vector<ElementWord> derived_generators;  ///< empty = trivial subgroup
  AbelianType type;
};

std::vector<TableRow> table_index2_rows(const GroupParams& g);
std::vector<TableRow> table_index4_rows(const GroupParams& g);

/// For every row of both tables: recompute the closure of the row's
/// generators and assert set-equality with the hyperplane/line construction,
/// recompute the derived subgroup and assert equality with the closure of the
/// row's derived generators, and compare the abelianization with the row's
/// type.  One report entry per row; failures are entries, not exceptions.
CheckReport verify_tables(const GroupParams& g);
CheckReport verify_tables(const GroupParams& g,
                          const std::vector<TableRow>& rows2,
                          const std::vector<TableRow>& rows4);

}  // namespace gn
