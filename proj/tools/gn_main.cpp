#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gn/group.hpp"
#include "gn/report.hpp"
#include "gn/subgroup.hpp"
#include "gn/transfer.hpp"
#include "gn/word.hpp"

namespace {

constexpr int kDefaultCeiling = 16;

gn::GroupParams make_group_checked(int n, int ceiling) {
  if (ceiling < 1 || ceiling > gn::kMaxN)
    throw std::invalid_argument("--n-ceiling must be between 1 and " +
                                std::to_string(gn::kMaxN));
  if (n > ceiling)
    throw std::invalid_argument(
        "n = " + std::to_string(n) + " exceeds the ceiling " +
        std::to_string(ceiling) + " (raise it with --n-ceiling)");
  return gn::make_group(n);
}

/// A subgroup argument is either a table label (H1_2 .. H7_4) or a
/// comma-separated list of generator words.
gn::Subgroup resolve_subgroup(const gn::GroupParams& g,
                              const std::string& text) {
  if ((text.size() == 4) && (text[0] == 'H' || text[0] == 'h') &&
      text[1] >= '1' && text[1] <= '7' && text[2] == '_' &&
      (text[3] == '2' || text[3] == '4')) {
    const size_t i = static_cast<size_t>(text[1] - '1');
    const auto list = text[3] == '2' ? gn::maximal_subgroups(g)
                                     : gn::index4_subgroups_above_derived(g);
    return list[i].subgroup;
  }
  std::vector<gn::Element> gens;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string part =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (!part.empty() || comma != std::string::npos)
      gens.push_back(gn::eval_word(g, gn::parse_element_word(part)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return gn::closure(g, gens);
}

std::string element_as_word(gn::Element x) {
  const gn::ElementWord w = gn::element_to_word(x);
  return w.factors.empty() ? "1" : gn::render_word(w);
}

int cmd_verify(int n_min, int n_max, int ceiling, bool as_json, bool inject) {
  if (n_min < 1 || n_min > n_max)
    throw std::invalid_argument("need 1 <= n-min <= n-max");
  std::vector<gn::VerifySummary> all;
  for (int n = n_min; n <= n_max; ++n)
    all.push_back(
        gn::run_verification(make_group_checked(n, ceiling), inject));
  bool ok = true;
  for (const gn::VerifySummary& s : all) ok = ok && s.all_pass();
  if (as_json) {
    std::cout << gn::verify_summaries_to_json(all);
  } else {
    for (const gn::VerifySummary& s : all)
      std::cout << gn::verify_summary_line(s) << "\n";
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_report(int n, int ceiling, const std::string& format,
               const std::string& out_path) {
  const gn::GroupParams g = make_group_checked(n, ceiling);
  const gn::ReportDocument doc = gn::build_report(g);
  const std::string text =
      format == "json" ? gn::report_to_json(doc) : gn::report_to_markdown(doc);
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write to " << out_path << "\n";
    return 2;
  }
  out << text;
  return out.good() ? 0 : 2;
}

int cmd_transfer(int n, int ceiling, const std::string& subgroup_text,
                 const std::string& element_text) {
  const gn::GroupParams g = make_group_checked(n, ceiling);
  const gn::Subgroup h = resolve_subgroup(g, subgroup_text);
  if (!gn::is_normal(g, h)) {
    std::cerr << "subgroup of order " << h.order()
              << " is not normal in G(n); the transfer formula needs a "
                 "normal subgroup\n";
    return 2;
  }
  const gn::TransferContext ctx = gn::transfer_context(g, h);
  const gn::Element x = gn::eval_word(g, gn::parse_element_word(element_text));
  const gn::Element image = gn::transfer_eq2(ctx, x);
  const gn::KernelSubspace kernel = gn::transfer_kernel(ctx);
  const bool in_kernel = kernel.contains(gn::coord_of(x));

  std::cout << "subgroup: order " << h.order() << ", index " << h.index
            << "\n";
  if (image == gn::identity())
    std::cout << "V(" << element_text << ") = trivial coset";
  else
    std::cout << "V(" << element_text << ") = coset of "
              << element_as_word(image) << " = " << gn::to_string(image);
  std::cout << (in_kernel ? "; in kernel" : "; not in kernel") << "\n";
  const gn::CapitulationView view = gn::capitulation_view(kernel);
  std::cout << "kernel order " << kernel.size() << "; " << view.summary
            << "\n";
  return 0;
}

int cmd_inspect(int n, int ceiling, const std::string& subgroup_text) {
  const gn::GroupParams g = make_group_checked(n, ceiling);
  const gn::Subgroup h = resolve_subgroup(g, subgroup_text);
  const gn::Subgroup der = gn::derived_subgroup(g, h);
  const bool normal = gn::is_normal(g, h);

  std::cout << "order: " << h.order() << "\n";
  std::cout << "index: " << h.index << "\n";
  std::cout << "normal: " << (normal ? "yes" : "no") << "\n";
  std::cout << "derived subgroup order: " << der.order() << "\n";
  std::cout << "abelianization: " << gn::abelianization(g, h).to_string()
            << "\n";
  if (normal) {
    const gn::KernelSubspace kernel = gn::transfer_kernel(g, h);
    std::cout << "transfer kernel order: " << kernel.size() << " (";
    for (size_t i = 0; i < kernel.basis.size(); ++i)
      std::cout << (i ? ", " : "") << gn::coord_word(kernel.basis[i]);
    std::cout << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure, subgroup and transfer-map calculator for the "
               "2-group family G(n)"};
  app.require_subcommand(1);

  int verify_min = 1, verify_max = 1, verify_ceiling = kDefaultCeiling;
  bool verify_json = false, verify_inject = false;
  auto* verify =
      app.add_subcommand("verify", "run every verification suite over a "
                                   "range of n; exit 1 on any failure");
  verify->add_option("--n-min", verify_min, "first n")->required();
  verify->add_option("--n-max", verify_max, "last n")->required();
  verify->add_flag("--json", verify_json, "emit a JSON summary");
  verify->add_option("--n-ceiling", verify_ceiling,
                     "largest n the command accepts");
  verify
      ->add_flag("--inject-table-fault", verify_inject,
                 "corrupt one expected table row (self-test of the failure "
                 "path)")
      ->group("");

  int report_n = 1, report_ceiling = kDefaultCeiling;
  std::string report_format = "md", report_out;
  auto* report = app.add_subcommand(
      "report", "emit the structure report for one n as markdown or JSON");
  report->add_option("--n", report_n, "the parameter n")->required();
  report->add_option("--format", report_format, "md or json")
      ->check(CLI::IsMember({"md", "json"}));
  report->add_option("--out", report_out, "output path (default stdout)");
  report->add_option("--n-ceiling", report_ceiling,
                     "largest n the command accepts");

  int transfer_n = 1, transfer_ceiling = kDefaultCeiling;
  std::string transfer_subgroup, transfer_element;
  auto* transfer = app.add_subcommand(
      "transfer", "evaluate the transfer map into a normal subgroup");
  transfer->add_option("--n", transfer_n, "the parameter n")->required();
  transfer
      ->add_option("--subgroup", transfer_subgroup,
                   "label (H1_2..H7_4) or comma-separated generator words")
      ->required();
  transfer->add_option("--element", transfer_element, "element word")
      ->required();
  transfer->add_option("--n-ceiling", transfer_ceiling,
                       "largest n the command accepts");

  int inspect_n = 1, inspect_ceiling = kDefaultCeiling;
  std::string inspect_subgroup;
  auto* inspect = app.add_subcommand(
      "inspect", "print order, derived subgroup, type and normality");
  inspect->add_option("--n", inspect_n, "the parameter n")->required();
  inspect
      ->add_option("--subgroup", inspect_subgroup,
                   "label (H1_2..H7_4) or comma-separated generator words")
      ->required();
  inspect->add_option("--n-ceiling", inspect_ceiling,
                      "largest n the command accepts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify)
      return cmd_verify(verify_min, verify_max, verify_ceiling, verify_json,
                        verify_inject);
    if (*report)
      return cmd_report(report_n, report_ceiling, report_format, report_out);
    if (*transfer)
      return cmd_transfer(transfer_n, transfer_ceiling, transfer_subgroup,
                          transfer_element);
    if (*inspect)
      return cmd_inspect(inspect_n, inspect_ceiling, inspect_subgroup);
  } catch (const gn::WordParseError& e) {
    std::cerr << "parse error at offset " << e.offset() << ": " << e.what()
              << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
