#pragma once

#include <string>
#include <vector>

#include "gn/check.hpp"
#include "gn/group.hpp"
#include "gn/subgroup.hpp"
#include "gn/transfer.hpp"
#include "gn/word.hpp"

namespace gn {

/// One subgroup row of the structure report.
struct SubgroupRow {
  std::string label;
  std::vector<ElementWord> generators;
  std::vector<ElementWord> derived_generators;  ///< empty = trivial
  AbelianType abelianization;
  std::vector<Coord> transfer_kernel_basis;
  std::vector<std::string> capitulation_labels;
};

/// Self-contained structure report for one n: group summary, the seven
/// index-2 and seven index-4 subgroup rows, and the verification checks that
/// back the printed values.
struct ReportDocument {
  int n = 1;
  int64_t order = 0;
  int nilpotency_class = 0;
  int coclass = 0;
  int64_t derived_order = 0;
  AbelianType derived_type;
  std::vector<SubgroupRow> maximal_subgroups;
  std::vector<SubgroupRow> index4_subgroups;
  std::vector<CheckItem> checks;
};

ReportDocument build_report(const GroupParams& g);

/// Stable-key-order JSON (see docs/report_schema.md); ends with a newline.
/// Abelian types serialize as exponent lists ([1, 2] means (2, 4)); kernel
/// basis vectors as (eps_sigma, eps_tau, eps_rho) triples of 0/1.
std::string report_to_json(const ReportDocument& doc);

/// Markdown with one table per subgroup family, mirroring the row layout of
/// the structure tables.
std::string report_to_markdown(const ReportDocument& doc);

/// One n's worth of verification: presentation checks, both subgroup tables,
/// the fourteen transfer kernels, and the order/series facts.
struct VerifySummary {
  int n = 1;
  CheckReport presentation;
  CheckReport tables;
  CheckReport kernels;
  CheckReport structure;

  bool all_pass() const;
  std::size_t total_checks() const;
  std::size_t total_passed() const;
};

VerifySummary run_verification(const GroupParams& g);
/// With inject_table_fault, one expected table type is corrupted before
/// comparison; the row check must then fail (self-test of the failure path).
VerifySummary run_verification(const GroupParams& g, bool inject_table_fault);

std::string verify_summary_line(const VerifySummary& s);
std::string verify_summaries_to_json(const std::vector<VerifySummary>& all);

/// Order, class/coclass, derived-subgroup and series facts as check items.
CheckReport check_structure(const GroupParams& g);

}  // namespace gn
