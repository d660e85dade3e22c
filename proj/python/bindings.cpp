// Python bindings for the main engine operations. Everything crosses the
// boundary as plain strings, ints, and dicts; exact values are kept in the
// text grammars of the C++ layer.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dp4aut/fixtures.hpp"

namespace py = pybind11;
using namespace dp4aut;

namespace {

Basis parse_basis(const std::string& s) {
  if (s == "quadric") return Basis::Quadric;
  if (s == "plane") return Basis::Plane;
  throw std::invalid_argument("basis must be 'quadric' or 'plane'");
}

std::string sig_compact(const std::array<int, 5>& g) {
  std::string s;
  for (int b : g) s += char('0' + b);
  return s;
}

ParamMap parse_params(long long d, const std::map<std::string, std::string>& params) {
  ParamMap out;
  for (const auto& [k, v] : params) out[k] = parse_field_elem(v, d);
  return out;
}

py::dict result_dict(const ClassificationResult& r) {
  py::dict d;
  py::dict a0;
  a0["order"] = r.a0_order;
  py::list a0_gens;
  for (const auto& g : r.a0_generators) a0_gens.append(sig_compact(g));
  a0["generators"] = a0_gens;
  d["A0"] = a0;
  py::dict ap;
  ap["order"] = static_cast<int>(r.aprime_group.size());
  ap["name"] = r.aprime_name;
  py::list ap_gens;
  for (const auto& g : r.aprime_generators) ap_gens.append(perm_to_cycles(g));
  ap["generators"] = ap_gens;
  d["Aprime"] = ap;
  py::list ws;
  for (const auto& w : r.witnesses) {
    py::dict wd;
    wd["element"] = w.element;
    wd["kind"] = w.kind;
    wd["detail"] = w.detail;
    ws.append(wd);
  }
  d["witnesses"] = ws;
  d["flags"] = r.flags;
  return d;
}

}  // namespace

PYBIND11_MODULE(_dp4aut, m) {
  m.doc() = "Exact classification engine for real degree-4 del Pezzo surfaces";

  m.def("enumerate_minus_one", [](const std::string& basis) {
    std::vector<std::string> out;
    for (const auto& c : enumerate_minus_one(parse_basis(basis)))
      out.push_back(format_class(c));
    return out;
  });

  m.def("enumerate_conic_classes", [](const std::string& basis) {
    std::vector<std::string> out;
    for (const auto& c : enumerate_conic_classes(parse_basis(basis)))
      out.push_back(format_class(c));
    return out;
  });

  m.def("exceptional_pairs", [](const std::string& basis) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : exceptional_pairs(parse_basis(basis)))
      out.emplace_back(format_class(p.first), format_class(p.second));
    return out;
  });

  m.def("weyl_order", [] {
    return static_cast<int>(generate_weyl(Basis::Quadric).size());
  });

  m.def("forms", [] {
    std::vector<std::string> out;
    for (FormId f : all_forms()) out.push_back(form_id_string(f));
    return out;
  });

  m.def("kernel_bound", [](const std::string& form) {
    KernelBound kb = dp4aut::kernel_bound(form_id_from_string(form));
    py::dict d;
    d["order"] = static_cast<int>(kb.signatures.size());
    py::list gens, sigs;
    for (const auto& g : kb.generators) gens.append(sig_compact(g));
    for (const auto& g : kb.signatures) sigs.append(sig_compact(g));
    d["generators"] = gens;
    d["signatures"] = sigs;
    return d;
  });

  m.def("image_bound", [](const std::string& form) {
    auto img = dp4aut::image_bound(form_id_from_string(form));
    py::dict d;
    d["order"] = static_cast<int>(img.size());
    d["name"] = identify_small_group(img);
    py::list elems;
    for (const auto& p : img) elems.append(perm_to_cycles(p));
    d["elements"] = elems;
    return d;
  });

  m.def("sigma_pair_action", [](const std::string& form) {
    const FormSpec& spec = form_spec(form_id_from_string(form));
    auto act = pair_action(spec.sigma, spec.pairs);
    py::dict d;
    d["perm"] = perm_to_cycles(act->perm);
    d["swaps"] = sig_compact(act->swaps);
    return d;
  });

  m.def("predicate",
        [](const std::string& name, const std::vector<std::string>& params,
           long long d) {
          std::vector<FieldElem> elems;
          for (const auto& p : params) elems.push_back(parse_field_elem(p, d));
          return predicate(name, elems);
        },
        py::arg("name"), py::arg("params"), py::arg("d"));

  m.def("classify",
        [](const std::string& form, long long d,
           const std::map<std::string, std::string>& params,
           const std::string& mode) {
          Scenario s{form_id_from_string(form), d, parse_params(d, params)};
          if (mode == "conditions") return result_dict(classify_by_conditions(s));
          if (mode == "witnesses") return result_dict(classify_by_witnesses(s));
          if (mode != "cross") throw std::invalid_argument("unknown mode " + mode);
          CrossCheckReport rep = cross_check(s);
          py::dict out = result_dict(rep.by_witnesses);
          out["flags"] = rep.flags;
          out["a0_agree"] = rep.a0_agree;
          out["aprime_agree"] = rep.aprime_agree;
          out["ok"] = rep.ok;
          return out;
        },
        py::arg("form"), py::arg("d"), py::arg("params"),
        py::arg("mode") = "cross");

  m.def("quadric_model",
        [](const std::string& mu, long long d) {
          QuadricModel model = emit_quadric_model(parse_field_elem(mu, d));
          py::dict out;
          out["degree"] = ratpoly_degree(model.pencil_det);
          py::list coeffs;
          for (const auto& c : model.pencil_det) coeffs.append(format_rat(c));
          out["pencil_det"] = coeffs;
          out["squarefree"] = model.squarefree;
          return out;
        },
        py::arg("mu"), py::arg("d") = -1);

  m.def("verify_paper",
        [](const std::string& dir, int case_filter) {
          std::string where = dir.empty() ? default_fixtures_dir() : dir;
          VerifyReport rep = dp4aut::verify_paper(where, case_filter);
          py::dict out;
          out["passed"] = rep.passed;
          out["failed"] = rep.failed;
          py::list checks;
          for (const auto& c : rep.checks) {
            py::dict cd;
            cd["name"] = c.name;
            cd["pass"] = c.pass;
            cd["detail"] = c.detail;
            checks.append(cd);
          }
          out["checks"] = checks;
          return out;
        },
        py::arg("dir") = "", py::arg("case_filter") = 0);
}
