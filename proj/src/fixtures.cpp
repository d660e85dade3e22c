#include "dp4aut/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dp4aut {

namespace {

using nlohmann::ordered_json;

int case_number(FormId form) {
  switch (form) {
    case FormId::Q31_02: return 1;
    case FormId::Q31_21: return 2;
    case FormId::Q31_40: return 3;
    case FormId::Q22_02: return 4;
    case FormId::Q22_40: return 5;
  }
  throw std::logic_error("bad form id");
}

// Pair ordering used for matrices expressed in the plane basis:
// {L - Ei, -K - (L - Ei)} for i = 1..5.
std::vector<ExceptionalPair> plane_pairs() {
  std::vector<ExceptionalPair> out;
  DivisorClass l = basis_vector(Basis::Plane, 0);
  DivisorClass mk = -canonical_class(Basis::Plane);
  for (int i = 1; i <= 5; ++i) {
    DivisorClass a = l - basis_vector(Basis::Plane, i);
    out.push_back({i, a, mk - a});
  }
  return out;
}

std::map<std::string, std::string> parse_kv(const std::string& line,
                                            std::string& tag) {
  std::map<std::string, std::string> kv;
  std::istringstream in(line);
  std::string tok;
  in >> tok;
  if (tok.size() < 3 || tok.front() != '[' || tok.back() != ']')
    throw std::runtime_error("malformed fixture header: " + line);
  tag = tok.substr(1, tok.size() - 2);
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("malformed fixture header token: " + tok);
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

}  // namespace

std::vector<MatrixFixture> load_matrix_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix fixture file " + path);
  std::vector<MatrixFixture> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    MatrixFixture f;
    auto kv = parse_kv(line, f.tag);
    f.basis = kv.at("basis") == "plane" ? Basis::Plane : Basis::Quadric;
    f.form = form_id_from_string(kv.at("form"));
    const std::string& exp = kv.at("expect");
    if (exp == "kernel") {
      f.expect = MatrixFixture::Expect::Kernel;
      const std::string& sig = kv.at("sig");
      if (sig.size() != 5) throw std::runtime_error("bad sig in " + f.tag);
      for (int i = 0; i < 5; ++i) f.signature[i] = sig[i] - '0';
    } else if (exp == "perm") {
      f.expect = MatrixFixture::Expect::Perm;
      f.perm_cycles = kv.at("perm");
    } else if (exp == "reject") {
      f.expect = MatrixFixture::Expect::Reject;
    } else {
      throw std::runtime_error("unknown expect '" + exp + "' in " + f.tag);
    }
    for (int i = 0; i < 6; ++i) {
      if (!std::getline(in, line))
        throw std::runtime_error("truncated matrix " + f.tag);
      std::istringstream row(line);
      std::string entry;
      for (int j = 0; j < 6; ++j) {
        if (!(row >> entry)) throw std::runtime_error("short row in " + f.tag);
        f.m[i][j] = parse_rat(entry);
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

BiPoly poly_from_json(const ordered_json& j, long long d) {
  BiPoly p(d);
  for (auto it = j.begin(); it != j.end(); ++it) {
    BiPoly::Key k{};
    std::istringstream ks(it.key());
    std::string part;
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(ks, part, ','))
        throw std::runtime_error("bad exponent key " + it.key());
      k[i] = std::stoi(part);
    }
    p.add_term(k, parse_field_elem(it.value().get<std::string>(), d));
  }
  return p;
}

ordered_json poly_to_json(const BiPoly& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, c] : p.terms()) {
    std::string key = std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
                      std::to_string(k[2]) + "," + std::to_string(k[3]);
    j[key] = format_field_elem(c);
  }
  return j;
}

Contraction parse_contraction(const std::string& curve, const std::string& target,
                              const std::map<std::string, QuadricPoint>& pts) {
  Contraction c;
  c.curve_desc = curve;
  c.target = target;
  auto open = curve.find('(');
  auto close = curve.rfind(')');
  if (open == std::string::npos || close == std::string::npos)
    throw std::runtime_error("bad curve spec " + curve);
  std::string kind = curve.substr(0, open);
  std::string args = curve.substr(open + 1, close - open - 1);
  if (kind == "fiber1" || kind == "fiber2") {
    c.curve.kind = CurveSpec::Kind::Fiber;
    c.curve.ruling = kind == "fiber1" ? 1 : 2;
    c.curve.through = pts.at(args);
  } else if (kind == "curve11") {
    c.curve.kind = CurveSpec::Kind::Curve11;
    std::istringstream in(args);
    std::string name;
    while (std::getline(in, name, ',')) c.curve.trio.push_back(pts.at(name));
    if (c.curve.trio.size() != 3)
      throw std::runtime_error("curve11 needs three points: " + curve);
  } else {
    throw std::runtime_error("unknown curve kind " + kind);
  }
  return c;
}

}  // namespace

MapFixture load_map_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open map fixture " + path);
  ordered_json j = ordered_json::parse(in);
  MapFixture f;
  f.name = j.at("name").get<std::string>();
  f.map_name = j.at("map").get<std::string>();
  f.form = form_id_from_string(j.at("form").get<std::string>());
  f.field_d = j.at("d").get<long long>();
  for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
    f.params[it.key()] = parse_field_elem(it.value().get<std::string>(), f.field_d);
  const auto& polys = j.at("polys");
  f.map.a0 = poly_from_json(polys.at("a0"), f.field_d);
  f.map.a1 = poly_from_json(polys.at("a1"), f.field_d);
  f.map.b0 = poly_from_json(polys.at("b0"), f.field_d);
  f.map.b1 = poly_from_json(polys.at("b1"), f.field_d);
  const auto& exp = j.at("expect");
  for (const auto& b : exp.at("base_points")) f.base_points.push_back(b.get<std::string>());
  for (auto it = exp.at("images").begin(); it != exp.at("images").end(); ++it)
    f.images[it.key()] = it.value().get<std::string>();
  f.order = exp.at("order").get<int>();
  f.commutes = exp.at("commutes").get<bool>();
  auto pts = normalized_points(f.form, f.params);
  for (const auto& c : exp.at("contractions"))
    f.contractions.push_back(
        parse_contraction(c.at(0).get<std::string>(), c.at(1).get<std::string>(), pts));
  f.matrix_tag = exp.value("matrix", "");
  return f;
}

void write_map_fixture(const MapFixture& f, const std::string& path) {
  ordered_json j;
  j["name"] = f.name;
  j["map"] = f.map_name;
  j["form"] = form_id_string(f.form);
  j["d"] = f.field_d;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : f.params) params[k] = format_field_elem(v);
  j["params"] = params;
  ordered_json polys;
  polys["a0"] = poly_to_json(f.map.a0);
  polys["a1"] = poly_to_json(f.map.a1);
  polys["b0"] = poly_to_json(f.map.b0);
  polys["b1"] = poly_to_json(f.map.b1);
  j["polys"] = polys;
  ordered_json exp;
  exp["base_points"] = f.base_points;
  ordered_json images = ordered_json::object();
  for (const auto& [k, v] : f.images) images[k] = v;
  exp["images"] = images;
  exp["order"] = f.order;
  exp["commutes"] = f.commutes;
  ordered_json contractions = ordered_json::array();
  for (const auto& c : f.contractions)
    contractions.push_back(ordered_json::array({c.curve_desc, c.target}));
  exp["contractions"] = contractions;
  if (!f.matrix_tag.empty()) exp["matrix"] = f.matrix_tag;
  j["expect"] = exp;
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

namespace {

struct Runner {
  VerifyReport report;

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    report.checks.push_back({name, pass, detail});
    if (pass)
      ++report.passed;
    else
      ++report.failed;
  }
};

void verify_matrix(Runner& r, const MatrixFixture& f) {
  std::string base = "matrix/" + f.tag;
  AutVerdict v = is_lattice_automorphism(f.m, f.basis);
  if (f.expect == MatrixFixture::Expect::Reject) {
    r.check(base + "/reject", !v.ok && v.reason == "NonIntegral",
            v.ok ? "unexpectedly a lattice automorphism" : v.reason);
    return;
  }
  if (!v.ok) {
    r.check(base + "/automorphism", false, v.reason);
    return;
  }
  r.check(base + "/automorphism", true);
  PicAut m;
  m.basis = f.basis;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      m.m[i][j] = static_cast<long long>(numerator(f.m[i][j]));
  auto pairs =
      f.basis == Basis::Plane ? plane_pairs() : form_spec(f.form).pairs;
  auto act = pair_action(m, pairs);
  if (!act) {
    r.check(base + "/pair-action", false, "does not permute the pairs");
    return;
  }
  if (f.expect == MatrixFixture::Expect::Kernel) {
    bool ok = perm_is_identity(act->perm) && act->swaps == f.signature;
    std::string got;
    for (int b : act->swaps) got += char('0' + b);
    r.check(base + "/kernel", ok, "perm=" + perm_to_cycles(act->perm) + " sig=" + got);
  } else {
    std::string got = perm_to_cycles(act->perm);
    r.check(base + "/perm", got == f.perm_cycles, "got " + got);
  }
}

void verify_sigma_tables(Runner& r, int case_filter) {
  struct Expected {
    FormId form;
    std::string perm;
    std::array<int, 5> swaps;
    bool check_swaps;
  };
  // The Galois action on the five pairs, encoded from the basis-level
  // description of sigma; the arrow table is regenerated from pair_action
  // and asserted against these constants.
  const std::vector<Expected> expected = {
      {FormId::Q31_02, "(45)", {0, 1, 1, 0, 0}, true},
      {FormId::Q31_21, "(23)(45)", {0, 0, 0, 0, 0}, false},
      {FormId::Q31_40, "(45)", {0, 0, 0, 0, 0}, true},
      {FormId::Q22_02, "id", {0, 0, 0, 1, 1}, true},
      {FormId::Q22_40, "id", {0, 0, 0, 0, 0}, true},
  };
  for (const auto& e : expected) {
    if (case_filter != 0 && case_number(e.form) != case_filter) continue;
    const FormSpec& spec = form_spec(e.form);
    auto act = pair_action(spec.sigma, spec.pairs);
    std::string name = "sigma-table/" + form_id_string(e.form);
    if (!act) {
      r.check(name, false, "sigma does not permute the pairs");
      continue;
    }
    std::string table;
    for (int i = 0; i < 5; ++i) {
      if (i) table += " ";
      table += "R" + std::to_string(i + 1) + "->R" +
               std::to_string(act->perm[i] + 1) + (act->swaps[i] ? "x" : "");
    }
    bool ok = perm_to_cycles(act->perm) == e.perm &&
              (!e.check_swaps || act->swaps == e.swaps);
    r.check(name, ok, table);
  }
}

struct Dichotomy {
  std::string name;
  FormId form;
  long long d;
  ParamMap params;
  bool swap_rulings;
  std::vector<std::pair<std::string, std::string>> arrows;
  bool feasible;
};

void verify_dichotomies(Runner& r, int case_filter) {
  auto fe = [](long long d, const std::string& s) { return parse_field_elem(s, d); };
  std::vector<Dichotomy> dichotomies = {
      {"case3-threecycle-feasible", FormId::Q31_40, -3,
       {{"lambda", fe(-3, "1/2+1/2*w")}}, false,
       {{"p", "p"}, {"q", "r"}, {"r", "s"}, {"s", "q"}}, true},
      {"case3-threecycle-infeasible", FormId::Q31_40, -1,
       {{"lambda", fe(-1, "1+1*w")}}, false,
       {{"p", "p"}, {"q", "r"}, {"r", "s"}, {"s", "q"}}, false},
      {"case3-1245-feasible", FormId::Q31_40, -7,
       {{"lambda", fe(-7, "1/2+1/2*w")}}, true,
       {{"p", "p"}, {"s", "s"}, {"q", "r"}, {"r", "q"}}, true},
      {"case5-1245-feasible", FormId::Q22_40, 5,
       {{"mu1", fe(5, "3")}, {"mu2", fe(5, "3/2")}}, true,
       {{"p", "p"}, {"s", "s"}, {"q", "r"}, {"r", "q"}}, true},
      {"case5-1245-infeasible", FormId::Q22_40, 5,
       {{"mu1", fe(5, "2")}, {"mu2", fe(5, "3")}}, true,
       {{"p", "p"}, {"s", "s"}, {"q", "r"}, {"r", "q"}}, false},
  };
  for (const auto& dct : dichotomies) {
    if (case_filter != 0 && case_number(dct.form) != case_filter) continue;
    auto pts = normalized_points(dct.form, dct.params);
    std::vector<MoebiusConstraint> cons;
    for (const auto& [s, t] : dct.arrows) cons.push_back({pts.at(s), pts.at(t)});
    Realness realness = dct.form == FormId::Q22_40 ? Realness::BothReal
                                                   : Realness::BEqualsConjA;
    auto res = solve_moebius_pair(cons, dct.swap_rulings, realness, dct.d);
    bool solved = res.status == MoebiusResult::Status::Solved;
    r.check("solver/" + dct.name, solved == dct.feasible,
            solved ? "solved" : "no solution");
  }
}

void verify_map(Runner& r, const MapFixture& f) {
  std::string base = "map/" + f.name;
  BidegMap rebuilt;
  try {
    rebuilt = builtin_map(f.map_name, f.form, f.params);
  } catch (const InvalidParameters& e) {
    r.check(base + "/builtin", false, e.what());
    return;
  }
  r.check(base + "/builtin", same_rational_map(f.map, rebuilt) &&
                                 f.map.a0 == rebuilt.a0 && f.map.a1 == rebuilt.a1 &&
                                 f.map.b0 == rebuilt.b0 && f.map.b1 == rebuilt.b1);

  auto pts = normalized_points(f.form, f.params);
  bool base_ok = true;
  std::string detail;
  for (const auto& name : point_names(f.form)) {
    bool expected = std::find(f.base_points.begin(), f.base_points.end(), name) !=
                    f.base_points.end();
    if (is_base_point(f.map, pts.at(name)) != expected) {
      base_ok = false;
      detail += name + " ";
    }
  }
  r.check(base + "/base-points", base_ok, detail);

  bool images_ok = true;
  detail.clear();
  for (const auto& [src, tgt] : f.images) {
    if (!quadric_equal(evaluate(f.map, pts.at(src)), pts.at(tgt))) {
      images_ok = false;
      detail += src + "->" + tgt + " ";
    }
  }
  r.check(base + "/images", images_ok, detail);

  bool order_ok = is_identity_as_rational_map(iterate_map(f.map, f.order));
  for (int k = 1; order_ok && k < f.order; ++k)
    if (is_identity_as_rational_map(iterate_map(f.map, k))) order_ok = false;
  r.check(base + "/order", order_ok, "expected exact order " + std::to_string(f.order));

  r.check(base + "/real-structure",
          commutes_with_real_structure(f.map, f.form) == f.commutes);

  bool contracts_ok = true;
  detail.clear();
  for (const auto& c : f.contractions) {
    bool got = false;
    try {
      got = contracts(f.map, c.curve, pts.at(c.target));
    } catch (const DegenerateCurve& e) {
      detail += std::string(e.what()) + " ";
    }
    if (!got) {
      contracts_ok = false;
      detail += c.curve_desc + "->" + c.target + " ";
    }
  }
  r.check(base + "/contractions", contracts_ok, detail);
}

void verify_lambda_quadratic(Runner& r) {
  FieldElem a = FieldElem::rational(5, 2), b = FieldElem::rational(5, 3),
            c = FieldElem::rational(5, 5);
  auto q = builtin_lambda_quadratic(a, b, c);
  auto rep = plane_map_checks(q.map, q.base_points, q.p4, q.p5, q.matrix);
  std::string detail;
  for (const auto& fmsg : rep.failures) detail += fmsg + "; ";
  r.check("map/lambda-quadratic", rep.all_ok(), detail);
}

}  // namespace

VerifyReport verify_paper(const std::string& fixtures_dir, int case_filter) {
  namespace fs = std::filesystem;
  Runner r;

  ordered_json manifest;
  {
    std::ifstream in(fixtures_dir + "/manifest.json");
    if (!in) {
      r.check("manifest", false, "missing " + fixtures_dir + "/manifest.json");
      return r.report;
    }
    manifest = ordered_json::parse(in);
  }

  auto matrices = load_matrix_fixtures(fixtures_dir + "/matrices.txt");
  r.check("manifest/matrix-count",
          static_cast<long long>(matrices.size()) ==
              manifest.at("matrices").get<long long>(),
          "found " + std::to_string(matrices.size()));
  for (const auto& f : matrices) {
    if (case_filter != 0 && case_number(f.form) != case_filter) continue;
    verify_matrix(r, f);
  }

  verify_sigma_tables(r, case_filter);
  verify_dichotomies(r, case_filter);

  std::vector<std::string> map_files;
  if (fs::is_directory(fixtures_dir + "/maps"))
    for (const auto& entry : fs::directory_iterator(fixtures_dir + "/maps"))
      if (entry.path().extension() == ".json")
        map_files.push_back(entry.path().string());
  std::sort(map_files.begin(), map_files.end());
  r.check("manifest/map-count",
          static_cast<long long>(map_files.size()) ==
              manifest.at("maps").get<long long>(),
          "found " + std::to_string(map_files.size()));

  std::map<std::string, FormId> tag_to_form;
  for (const auto& f : matrices) tag_to_form[f.tag] = f.form;
  for (const auto& path : map_files) {
    MapFixture f = load_map_fixture(path);
    if (case_filter != 0 && case_number(f.form) != case_filter) continue;
    verify_map(r, f);
    if (!f.matrix_tag.empty()) {
      auto it = tag_to_form.find(f.matrix_tag);
      r.check("map/" + f.name + "/matrix-link",
              it != tag_to_form.end() && it->second == f.form, f.matrix_tag);
    }
  }

  if (case_filter == 0 || case_filter == 5) verify_lambda_quadratic(r);

  return r.report;
}

std::string default_fixtures_dir() {
  if (const char* env = std::getenv("DP4AUT_FIXTURES")) return env;
  return "fixtures";
}

}  // namespace dp4aut
