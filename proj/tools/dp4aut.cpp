// Command-line front end: enumeration dumps, bound computations,
// classification of a scenario, fixture verification, and the sample table.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dp4aut/fixtures.hpp"

using namespace dp4aut;
using nlohmann::ordered_json;

namespace {

std::string sig_compact(const std::array<int, 5>& g) {
  std::string s;
  for (int b : g) s += char('0' + b);
  return s;
}

std::string a0_group_name(int order) {
  if (order == 1) return "trivial";
  if (order == 2) return "Z/2";
  int k = 0;
  while ((1 << k) < order) ++k;
  return "(Z/2)^" + std::to_string(k);
}

std::string aprime_display(const ClassificationResult& r) {
  if (r.aprime_generators.empty()) return r.aprime_name;
  std::string s = r.aprime_name + " <";
  for (size_t i = 0; i < r.aprime_generators.size(); ++i) {
    if (i) s += ",";
    s += perm_to_cycles(r.aprime_generators[i]);
  }
  return s + ">";
}

ordered_json a0_json(const ClassificationResult& r) {
  ordered_json j;
  j["order"] = r.a0_order;
  j["name"] = a0_group_name(r.a0_order);
  ordered_json gens = ordered_json::array();
  for (const auto& g : r.a0_generators) gens.push_back(sig_compact(g));
  j["generators"] = gens;
  return j;
}

ordered_json aprime_json(const ClassificationResult& r) {
  ordered_json j;
  j["order"] = static_cast<int>(r.aprime_group.size());
  j["name"] = r.aprime_name;
  ordered_json gens = ordered_json::array();
  for (const auto& g : r.aprime_generators) gens.push_back(perm_to_cycles(g));
  j["generators"] = gens;
  return j;
}

ordered_json witnesses_json(const std::vector<WitnessRecord>& ws) {
  ordered_json arr = ordered_json::array();
  for (const auto& w : ws) {
    ordered_json j;
    j["element"] = w.element;
    j["kind"] = w.kind;
    j["detail"] = w.detail;
    arr.push_back(j);
  }
  return arr;
}

void emit(const ordered_json& report, bool json, const std::string& human) {
  if (json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << human;
}

int cmd_enumerate(const std::string& basis_s, const std::string& what, bool json) {
  Basis basis = basis_s == "plane" ? Basis::Plane : Basis::Quadric;
  std::vector<std::string> lines;
  if (what == "lines")
    for (const auto& c : enumerate_minus_one(basis)) lines.push_back(format_class(c));
  else if (what == "conics")
    for (const auto& c : enumerate_conic_classes(basis)) lines.push_back(format_class(c));
  else
    for (const auto& p : exceptional_pairs(basis))
      lines.push_back("R" + std::to_string(p.index) + ": {" + format_class(p.first) +
                      ", " + format_class(p.second) + "}");
  ordered_json report;
  report["command"] = "enumerate";
  report["basis"] = basis_s;
  report["what"] = what;
  report["count"] = static_cast<int>(lines.size());
  report["classes"] = lines;
  report["pass"] = static_cast<int>(lines.size());
  report["fail"] = 0;
  std::string human;
  for (const auto& l : lines) human += l + "\n";
  emit(report, json, human);
  return 0;
}

int cmd_weyl(bool want_order, bool want_kernel, bool want_image, bool json) {
  if (!want_order && !want_kernel && !want_image)
    want_order = want_kernel = want_image = true;
  const auto& w = generate_weyl(Basis::Quadric);
  const auto& pairs = exceptional_pairs(Basis::Quadric);
  std::set<std::array<int, 5>> kernel_sigs;
  std::set<Perm5> image;
  for (const auto& g : w) {
    auto act = pair_action(g, pairs);
    image.insert(act->perm);
    if (perm_is_identity(act->perm)) kernel_sigs.insert(act->swaps);
  }
  ordered_json report;
  report["command"] = "weyl";
  std::string human;
  if (want_order) {
    report["order"] = static_cast<int>(w.size());
    human += "order: " + std::to_string(w.size()) + "\n";
  }
  if (want_kernel) {
    ordered_json k;
    k["order"] = static_cast<int>(kernel_sigs.size());
    ordered_json sigs = ordered_json::array();
    std::string list;
    for (const auto& s : kernel_sigs) {
      sigs.push_back(sig_compact(s));
      list += " " + sig_compact(s);
    }
    k["signatures"] = sigs;
    report["kernel"] = k;
    human += "kernel: order " + std::to_string(kernel_sigs.size()) + ", signatures" +
             list + "\n";
  }
  if (want_image) {
    report["image_order"] = static_cast<int>(image.size());
    human += "image: order " + std::to_string(image.size()) + "\n";
  }
  report["pass"] = 1;
  report["fail"] = 0;
  emit(report, json, human);
  return 0;
}

int cmd_bounds(const std::string& form_s, bool json) {
  FormId form = form_id_from_string(form_s);
  KernelBound kb = kernel_bound(form);
  std::vector<Perm5> img = image_bound(form);
  ordered_json report;
  report["command"] = "bounds";
  report["form"] = form_s;
  ordered_json a0;
  a0["order"] = static_cast<int>(kb.signatures.size());
  a0["name"] = a0_group_name(static_cast<int>(kb.signatures.size()));
  ordered_json gens = ordered_json::array();
  for (const auto& g : kb.generators) gens.push_back(sig_compact(g));
  a0["generators"] = gens;
  ordered_json sigs = ordered_json::array();
  for (const auto& g : kb.signatures) sigs.push_back(sig_compact(g));
  a0["signatures"] = sigs;
  report["A0"] = a0;
  ordered_json ap;
  ap["order"] = static_cast<int>(img.size());
  ap["name"] = identify_small_group(img);
  ordered_json elems = ordered_json::array();
  for (const auto& p : img) elems.push_back(perm_to_cycles(p));
  ap["elements"] = elems;
  report["Aprime"] = ap;
  report["pass"] = 1;
  report["fail"] = 0;
  std::string human = "form: " + form_s + "\n";
  human += "A0 bound: " + a0_group_name(static_cast<int>(kb.signatures.size())) +
           " (order " + std::to_string(kb.signatures.size()) + "), generators";
  for (const auto& g : kb.generators) human += " " + sig_compact(g);
  human += "\nA' bound: " + identify_small_group(img) + " (order " +
           std::to_string(img.size()) + ")\n";
  emit(report, json, human);
  return 0;
}

ordered_json params_json(const ParamMap& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : params) j[k] = format_field_elem(v);
  return j;
}

std::string params_display(const ParamMap& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += " ";
    s += k + "=" + format_field_elem(v);
  }
  return s;
}

int cmd_classify(const std::string& form_s, long long d,
                 const std::vector<std::string>& raw_params,
                 const std::string& mode, bool json) {
  Scenario s;
  s.form = form_id_from_string(form_s);
  s.field_d = d;
  for (const auto& rp : raw_params) {
    auto eq = rp.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--param expects name=value, got " + rp);
    s.params[rp.substr(0, eq)] = parse_field_elem(rp.substr(eq + 1), d);
  }

  ClassificationResult result;
  std::vector<std::string> flags;
  int pass = 0, fail = 0;
  bool ok = true;
  if (mode == "cross") {
    CrossCheckReport rep = cross_check(s);
    result = rep.by_witnesses;
    flags = rep.flags;
    ok = rep.ok;
    // A documented discrepancy keeps the cross-check ok and counts as a pass
    // carrying a prominent flag.
    pass = (rep.a0_agree ? 1 : 0) + ((rep.aprime_agree || rep.ok) ? 1 : 0);
    fail = 2 - pass;
  } else {
    result = mode == "conditions" ? classify_by_conditions(s)
                                  : classify_by_witnesses(s);
    flags = result.flags;
    for (const auto& f : flags)
      if (f.rfind("ERROR", 0) == 0) ok = false;
    pass = ok ? 1 : 0;
    fail = ok ? 0 : 1;
  }

  ordered_json report;
  report["command"] = "classify";
  report["form"] = form_s;
  report["field_d"] = d;
  report["params"] = params_json(s.params);
  report["mode"] = mode;
  report["A0"] = a0_json(result);
  report["Aprime"] = aprime_json(result);
  report["witnesses"] = witnesses_json(result.witnesses);
  report["flags"] = flags;
  report["pass"] = pass;
  report["fail"] = fail;

  std::string human = "form: " + form_s + "  d=" + std::to_string(d) + "  " +
                      params_display(s.params) + "\n";
  human += "A0: " + a0_group_name(result.a0_order) + " (order " +
           std::to_string(result.a0_order) + "), generators";
  for (const auto& g : result.a0_generators) human += " " + sig_compact(g);
  human += "\nA': " + aprime_display(result) + "\n";
  human += "witnesses:\n";
  for (const auto& w : result.witnesses)
    human += "  " + w.element + "  [" + w.kind + "] " + w.detail + "\n";
  if (!flags.empty()) {
    human += "flags:\n";
    for (const auto& f : flags) human += "  !! " + f + "\n";
  }
  human += ok ? "result: PASS\n" : "result: FAIL\n";
  emit(report, json, human);
  return ok ? 0 : 1;
}

int cmd_verify_paper(int case_filter, bool json) {
  VerifyReport rep = verify_paper(default_fixtures_dir(), case_filter);
  ordered_json report;
  report["command"] = "verify-paper";
  report["case"] = case_filter;
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    checks.push_back(j);
  }
  report["checks"] = checks;
  report["pass"] = rep.passed;
  report["fail"] = rep.failed;
  std::string human;
  for (const auto& c : rep.checks) {
    human += (c.pass ? "PASS  " : "FAIL  ") + c.name;
    if (!c.detail.empty()) human += "  (" + c.detail + ")";
    human += "\n";
  }
  human += std::to_string(rep.passed) + " passed, " + std::to_string(rep.failed) +
           " failed\n";
  emit(report, json, human);
  return rep.ok() ? 0 : 1;
}

struct TableRow {
  std::string form;
  long long d;
  std::vector<std::pair<std::string, std::string>> params;
  std::string expected_aprime;
};

const std::vector<TableRow> kTable = {
    {"q31-40", -3, {{"lambda", "1/2+1/2*w"}}, "Sym3"},
    {"q31-40", -7, {{"lambda", "1/2+1/2*w"}}, "Z2"},
    {"q31-21", -1, {{"mu", "2"}}, "Z2"},
    {"q31-02", -1, {{"mu", "3/5+4/5*w"}}, "Z2"},
    {"q31-02", -1, {{"mu", "2+1*w"}}, "trivial"},
    {"q22-02", -1, {{"k1", "1/2"}, {"k2", "4/5"}}, "Z2"},
    {"q22-02", -1, {{"k1", "1/2"}, {"k2", "1/3"}}, "trivial"},
    {"q22-40", 5, {{"mu1", "1/2-1/2*w"}, {"mu2", "3/2-1/2*w"}}, "D5"},
    {"q22-40", 5, {{"mu1", "3"}, {"mu2", "3/2"}}, "Z2"},
    {"q22-40", 5, {{"mu1", "2"}, {"mu2", "3"}}, "trivial"},
};

std::string form_display(const std::string& id) {
  if (id == "q31-40") return "Q3,1(4,0)";
  if (id == "q31-21") return "Q3,1(2,1)";
  if (id == "q31-02") return "Q3,1(0,2)";
  if (id == "q22-40") return "Q2,2(4,0)";
  return "Q2,2(0,2)";
}

int cmd_table1(bool json) {
  ordered_json rows = ordered_json::array();
  std::string human;
  int pass = 0, fail = 0;
  for (const auto& row : kTable) {
    Scenario s;
    s.form = form_id_from_string(row.form);
    s.field_d = row.d;
    for (const auto& [k, v] : row.params)
      s.params[k] = parse_field_elem(v, row.d);
    CrossCheckReport rep = cross_check(s);
    const ClassificationResult& r = rep.by_conditions;
    bool a0_is_bound =
        r.a0_order == static_cast<int>(kernel_bound(s.form).signatures.size());
    bool match = rep.ok && a0_is_bound && r.aprime_name == row.expected_aprime &&
                 (row.expected_aprime != "D5" || r.aprime_group.size() == 10);
    if (match)
      ++pass;
    else
      ++fail;
    ordered_json j;
    j["form"] = row.form;
    j["field_d"] = row.d;
    j["params"] = params_json(s.params);
    j["A0"] = a0_json(r);
    j["Aprime"] = aprime_json(r);
    j["expected"] = row.expected_aprime;
    j["match"] = match;
    j["flags"] = rep.flags;
    rows.push_back(j);
    human += form_display(row.form) + " " + params_display(s.params) + ": A0=" +
             a0_group_name(r.a0_order) + ", A'=" + aprime_display(r) +
             (match ? "" : "  [MISMATCH, expected " + row.expected_aprime + "]") +
             "\n";
    for (const auto& f : rep.flags) human += "  !! " + f + "\n";
  }
  ordered_json report;
  report["command"] = "table1";
  report["rows"] = rows;
  report["pass"] = pass;
  report["fail"] = fail;
  human += std::to_string(pass) + " rows reproduced, " + std::to_string(fail) +
           " mismatched\n";
  emit(report, json, human);
  return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification engine for real degree-4 del Pezzo surfaces"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit the canonical structured report");

  auto* enumerate = app.add_subcommand("enumerate", "list lattice classes");
  std::string basis = "quadric", what = "lines";
  enumerate->add_option("--basis", basis)->check(CLI::IsMember({"quadric", "plane"}));
  enumerate->add_option("--what", what)
      ->check(CLI::IsMember({"lines", "conics", "pairs"}));

  auto* weyl = app.add_subcommand("weyl", "Weyl group structure");
  bool w_order = false, w_kernel = false, w_image = false;
  weyl->add_flag("--order", w_order);
  weyl->add_flag("--kernel", w_kernel);
  weyl->add_flag("--image", w_image);

  auto* bounds = app.add_subcommand("bounds", "per-form lattice bounds");
  std::string bounds_form;
  bounds->add_option("--form", bounds_form)->required();

  auto* classify = app.add_subcommand("classify", "classify one scenario");
  std::string cl_form, cl_mode = "cross";
  long long cl_d = 0;
  std::vector<std::string> cl_params;
  classify->add_option("--form", cl_form)->required();
  classify->add_option("--field-d", cl_d)->required();
  classify->add_option("--param", cl_params);
  classify->add_option("--mode", cl_mode)
      ->check(CLI::IsMember({"conditions", "witnesses", "cross"}));

  auto* verify = app.add_subcommand("verify-paper", "run all fixtures");
  int case_filter = 0;
  verify->add_option("--case", case_filter)->check(CLI::Range(1, 5));

  auto* table1 = app.add_subcommand("table1", "reproduce the sample table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(basis, what, json);
    if (weyl->parsed()) return cmd_weyl(w_order, w_kernel, w_image, json);
    if (bounds->parsed()) return cmd_bounds(bounds_form, json);
    if (classify->parsed())
      return cmd_classify(cl_form, cl_d, cl_params, cl_mode, json);
    if (verify->parsed()) return cmd_verify_paper(case_filter, json);
    if (table1->parsed()) return cmd_table1(json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
