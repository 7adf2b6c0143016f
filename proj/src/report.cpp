#include "gn/report.hpp"

#include <json.hpp>

namespace gn {

namespace {

std::string join_words(const std::vector<ElementWord>& words, bool unicode) {
  if (words.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ", ";
    out += unicode ? render_word_unicode(words[i]) : render_word(words[i]);
  }
  return out;
}

std::string coord_word_unicode(Coord v) {
  std::string w;
  if (v.eps_sigma()) w += "σ";
  if (v.eps_tau()) w += "τ";
  if (v.eps_rho()) w += "ρ";
  return w.empty() ? "1" : w;
}

SubgroupRow make_row(const GroupParams& g, const TableRow& table_row,
                     const Subgroup& subgroup) {
  SubgroupRow row;
  row.label = table_row.label;
  row.generators = table_row.generators;
  row.derived_generators = table_row.derived_generators;
  row.abelianization = abelianization(g, subgroup);
  const KernelSubspace kernel = transfer_kernel(g, subgroup);
  row.transfer_kernel_basis = kernel.basis;
  row.capitulation_labels = capitulation_view(kernel).labels;
  return row;
}

}  // namespace

CheckReport check_structure(const GroupParams& g) {
  CheckReport rep;
  const int64_t expected_order = int64_t{1} << (g.n + 5);
  const Subgroup full = full_group(g);
  {
    // the three generators must fill every normal-form cell
    const Subgroup generated =
        closure(g, {gen_sigma(), gen_tau(), gen_rho()});
    CheckItem item;
    item.name = "group order 2^(n+5)";
    item.pass = full.order() == expected_order &&
                generated.order() == expected_order;
    item.detail = "closure of the generators has order " +
                  std::to_string(generated.order()) + ", expected " +
                  std::to_string(expected_order);
    rep.items.push_back(std::move(item));
  }

  const Subgroup derived = derived_subgroup(g);
  {
    CheckItem item;
    item.name = "derived subgroup <sigma^2, tau^2> of order 2^(n+2)";
    const Subgroup expected =
        closure(g, {Element{2, 0, 0}, Element{0, 2, 0}});
    item.pass = same_subgroup(derived, expected) &&
                derived.order() == (int64_t{1} << (g.n + 2));
    item.detail = "derived order " + std::to_string(derived.order());
    rep.items.push_back(std::move(item));
  }
  {
    CheckItem item;
    item.name = "derived subgroup abelian of type (2, 2^(n+1))";
    const AbelianType type = abelian_type(g, derived);
    item.pass = type == AbelianType{{1, g.n + 1}};
    item.detail = "type " + type.to_string();
    rep.items.push_back(std::move(item));
  }
  {
    CheckItem item;
    item.name = "abelianization of type (2, 2, 2)";
    const AbelianType type = abelianization(g, full);
    item.pass = type == AbelianType{{1, 1, 1}};
    item.detail = "type " + type.to_string();
    rep.items.push_back(std::move(item));
  }

  const SeriesReport series = lower_central_series(g);
  {
    CheckItem item;
    item.name = "nilpotency class n+2 and coclass 3";
    item.pass = series.nilpotency_class == g.n + 2 && series.coclass == 3;
    item.detail = "class " + std::to_string(series.nilpotency_class) +
                  ", coclass " + std::to_string(series.coclass);
    rep.items.push_back(std::move(item));
  }
  {
    CheckItem item;
    item.name = "gamma_(j+1) = <sigma^(2^j), tau^(2^j)> for j >= 1";
    item.pass = true;
    for (size_t j = 1; j < series.gamma.size(); ++j) {
      const int64_t p = int64_t{1} << j;
      const Subgroup expected = closure(
          g, {pow(g, gen_sigma(), p), pow(g, gen_tau(), p)});
      if (!same_subgroup(series.gamma[j], expected)) {
        item.pass = false;
        item.detail = "gamma_" + std::to_string(j + 1) + " mismatch";
        break;
      }
    }
    if (item.pass)
      item.detail = "series of " + std::to_string(series.gamma.size()) +
                    " terms descends as expected";
    rep.items.push_back(std::move(item));
  }
  return rep;
}

ReportDocument build_report(const GroupParams& g) {
  ReportDocument doc;
  doc.n = g.n;
  doc.order = g.group_order;
  const SeriesReport series = lower_central_series(g);
  doc.nilpotency_class = series.nilpotency_class;
  doc.coclass = series.coclass;
  const Subgroup derived = derived_subgroup(g);
  doc.derived_order = derived.order();
  doc.derived_type = abelian_type(g, derived);

  const auto rows2 = table_index2_rows(g);
  const auto rows4 = table_index4_rows(g);
  const auto maximal = maximal_subgroups(g);
  const auto quartic = index4_subgroups_above_derived(g);
  for (size_t i = 0; i < rows2.size(); ++i)
    doc.maximal_subgroups.push_back(make_row(g, rows2[i], maximal[i].subgroup));
  for (size_t i = 0; i < rows4.size(); ++i)
    doc.index4_subgroups.push_back(make_row(g, rows4[i], quartic[i].subgroup));

  const VerifySummary summary = run_verification(g);
  for (const CheckReport* part :
       {&summary.presentation, &summary.tables, &summary.kernels,
        &summary.structure})
    doc.checks.insert(doc.checks.end(), part->items.begin(),
                      part->items.end());
  return doc;
}

std::string report_to_json(const ReportDocument& doc) {
  using json = nlohmann::ordered_json;
  json out;
  out["n"] = doc.n;
  out["group"] = {
      {"order", doc.order},
      {"nilpotency_class", doc.nilpotency_class},
      {"coclass", doc.coclass},
      {"derived_order", doc.derived_order},
      {"derived_type", doc.derived_type.exps},
  };
  const auto rows_to_json = [](const std::vector<SubgroupRow>& rows) {
    json arr = json::array();
    for (const SubgroupRow& row : rows) {
      json r;
      r["label"] = row.label;
      json gens = json::array();
      for (const ElementWord& w : row.generators) gens.push_back(render_word(w));
      r["generators"] = std::move(gens);
      json der = json::array();
      for (const ElementWord& w : row.derived_generators)
        der.push_back(render_word(w));
      r["derived_generators"] = std::move(der);
      r["abelianization"] = row.abelianization.exps;
      json basis = json::array();
      for (const Coord& v : row.transfer_kernel_basis)
        basis.push_back({v.eps_sigma(), v.eps_tau(), v.eps_rho()});
      r["transfer_kernel_basis"] = std::move(basis);
      r["capitulation_labels"] = row.capitulation_labels;
      arr.push_back(std::move(r));
    }
    return arr;
  };
  out["maximal_subgroups"] = rows_to_json(doc.maximal_subgroups);
  out["index4_subgroups"] = rows_to_json(doc.index4_subgroups);
  json checks = json::array();
  for (const CheckItem& item : doc.checks)
    checks.push_back({{"name", item.name},
                      {"pass", item.pass},
                      {"detail", item.detail}});
  out["checks"] = std::move(checks);
  return out.dump(2) + "\n";
}

namespace {

std::string capitulation_cell(const SubgroupRow& row) {
  KernelSubspace k = span_of(row.transfer_kernel_basis);
  const CapitulationView view = capitulation_view(k);
  if (k.size() == 8) return "all of C_k,2 (" + view.summary + ")";
  std::string cell = "⟨";
  for (size_t i = 0; i < view.labels.size(); ++i) {
    if (i > 0) cell += ", ";
    cell += view.labels[i];
  }
  cell += "⟩ (" + view.summary + ")";
  return cell;
}

void markdown_table(std::string& out, const std::vector<SubgroupRow>& rows) {
  out += "| i | subgroup | derived | abelianization | transfer kernel | "
         "capitulation |\n";
  out += "|---|----------|---------|----------------|-----------------|"
         "--------------|\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const SubgroupRow& row = rows[i];
    std::string kernel = "⟨";
    for (size_t j = 0; j < row.transfer_kernel_basis.size(); ++j) {
      if (j > 0) kernel += ", ";
      kernel += coord_word_unicode(row.transfer_kernel_basis[j]);
    }
    kernel += "⟩";
    out += "| " + std::to_string(i + 1) + " | ⟨" +
           join_words(row.generators, true) + "⟩ | ⟨" +
           join_words(row.derived_generators, true) + "⟩ | " +
           row.abelianization.to_string() + " | " + kernel + " | " +
           capitulation_cell(row) + " |\n";
  }
}

}  // namespace

std::string report_to_markdown(const ReportDocument& doc) {
  std::string out;
  out += "# Structure report for G(" + std::to_string(doc.n) + ")\n\n";
  out += "Generator letters: s = σ, t = τ, r = ρ. "
         "Capitulation letters a, b, c name the ideal classes corresponding "
         "to σG', τG', ρG'.\n\n";
  out += "- order: " + std::to_string(doc.order) + " = 2^" +
         std::to_string(doc.n + 5) + "\n";
  out += "- nilpotency class: " + std::to_string(doc.nilpotency_class) +
         ", coclass: " + std::to_string(doc.coclass) + "\n";
  out += "- derived subgroup: order " + std::to_string(doc.derived_order) +
         ", type " + doc.derived_type.to_string() + "\n\n";

  out += "## Subgroups of index 2\n\n";
  markdown_table(out, doc.maximal_subgroups);
  out += "\n## Subgroups of index 4\n\n";
  markdown_table(out, doc.index4_subgroups);

  out += "\n## Checks\n\n";
  for (const CheckItem& item : doc.checks)
    out += std::string("- [") + (item.pass ? "PASS" : "FAIL") + "] " +
           item.name + " — " + item.detail + "\n";
  return out;
}

bool VerifySummary::all_pass() const {
  return presentation.all_pass() && tables.all_pass() && kernels.all_pass() &&
         structure.all_pass();
}

std::size_t VerifySummary::total_checks() const {
  return presentation.items.size() + tables.items.size() +
         kernels.items.size() + structure.items.size();
}

std::size_t VerifySummary::total_passed() const {
  return presentation.passed() + tables.passed() + kernels.passed() +
         structure.passed();
}

VerifySummary run_verification(const GroupParams& g) {
  return run_verification(g, false);
}

VerifySummary run_verification(const GroupParams& g, bool inject_table_fault) {
  VerifySummary s;
  s.n = g.n;
  s.presentation = check_presentation(g);
  auto rows2 = table_index2_rows(g);
  if (inject_table_fault && !rows2.empty())
    rows2.front().type = AbelianType{{9, 9}};
  s.tables = verify_tables(g, rows2, table_index4_rows(g));
  s.kernels = verify_transfer_kernels(g);
  s.structure = check_structure(g);
  return s;
}

std::string verify_summary_line(const VerifySummary& s) {
  const auto part = [](const char* name, const CheckReport& rep) {
    return std::string(name) + " " + std::to_string(rep.passed()) + "/" +
           std::to_string(rep.items.size());
  };
  return "n=" + std::to_string(s.n) + ": " +
         part("presentation", s.presentation) + ", " +
         part("tables", s.tables) + ", " + part("kernels", s.kernels) + ", " +
         part("structure", s.structure) +
         (s.all_pass() ? " -- PASS" : " -- FAIL");
}

std::string verify_summaries_to_json(const std::vector<VerifySummary>& all) {
  using json = nlohmann::ordered_json;
  json arr = json::array();
  for (const VerifySummary& s : all) {
    json entry;
    entry["n"] = s.n;
    entry["pass"] = s.all_pass();
    entry["checks_passed"] = s.total_passed();
    entry["checks_total"] = s.total_checks();
    json checks = json::array();
    for (const CheckReport* part :
         {&s.presentation, &s.tables, &s.kernels, &s.structure})
      for (const CheckItem& item : part->items)
        checks.push_back({{"name", item.name},
                          {"pass", item.pass},
                          {"detail", item.detail}});
    entry["checks"] = std::move(checks);
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

}  // namespace gn
