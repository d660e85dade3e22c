#pragma once

// Fixture loading and the verification runner: every displayed lattice
// matrix and every explicit map, each checked against its recorded expected
// behavior at the fixed sample parameters.

#include <string>
#include <vector>

#include "dp4aut/classifier.hpp"

namespace dp4aut {

// One record of the matrix fixture file: a 6x6 matrix with exact rational
// entries, its basis, and the expected outcome of the lattice tests.
struct MatrixFixture {
  std::string tag;
  Basis basis = Basis::Quadric;
  RatMatrix6 m{};
  enum class Expect { Kernel, Perm, Reject } expect = Expect::Reject;
  std::array<int, 5> signature{};  // Expect::Kernel
  std::string perm_cycles;         // Expect::Perm
  FormId form = FormId::Q31_02;    // pair ordering used for the action
};

std::vector<MatrixFixture> load_matrix_fixtures(const std::string& path);

// One map fixture: the polynomial coefficient tables of a named map at
// fixed sample parameters, plus the expected-property manifest.
struct Contraction {
  CurveSpec curve;
  std::string curve_desc;  // e.g. "fiber1(p)" or "curve11(p,r,rbar)"
  std::string target;      // point name
};

struct MapFixture {
  std::string name;          // file stem, e.g. "q31-02_phi3_mu_2+1w"
  std::string map_name;      // builtin name
  FormId form = FormId::Q31_02;
  long long field_d = -1;
  ParamMap params;
  BidegMap map;
  // Expectations:
  std::vector<std::string> base_points;               // point names
  std::map<std::string, std::string> images;          // point -> point
  int order = 0;                                      // exact order as rational map
  bool commutes = true;
  std::vector<Contraction> contractions;
  std::string matrix_tag;  // optional link to a matrix fixture
};

MapFixture load_map_fixture(const std::string& path);
void write_map_fixture(const MapFixture& f, const std::string& path);

// A single named check outcome.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

// Runs every fixture under the directory (matrices.txt, maps/*.json,
// manifest.json with the expected fixture counts) plus the sigma arrow
// tables and the solver dichotomies. case_filter 0 = all, 1..5 restricts to
// one case analysis.
VerifyReport verify_paper(const std::string& fixtures_dir, int case_filter = 0);

// Default fixture directory: $DP4AUT_FIXTURES or "fixtures".
std::string default_fixtures_dir();

}  // namespace dp4aut
