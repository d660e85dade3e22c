#pragma once

// The five real forms of the degree-4 del Pezzo surfaces under study, their
// Galois involutions sigma on the Picard lattice, and the lattice-theoretic
// upper bounds for the invariants A0 and A'.

#include <array>
#include <string>
#include <vector>

#include "dp4aut/perm.hpp"
#include "dp4aut/picard.hpp"
#include "dp4aut/weyl.hpp"

namespace dp4aut {

enum class FormId { Q31_40, Q31_21, Q31_02, Q22_40, Q22_02 };

// Stable string ids: "q31-40", "q31-21", "q31-02", "q22-40", "q22-02".
std::string form_id_string(FormId id);
FormId form_id_from_string(const std::string& s);
std::vector<FormId> all_forms();

struct FormSpec {
  FormId id;
  // Point names attached to e1..e4 of the QUADRIC basis, e.g. for Q31_02
  // the exceptional divisors over p, pbar, q, qbar.
  std::array<std::string, 4> point_labels;
  // The ordered pair list R1..R5 with the member order fixed by the case
  // analysis; all classes in the QUADRIC basis.
  std::vector<ExceptionalPair> pairs;
  // The Galois involution on the lattice.
  PicAut sigma;
  // Names of the scenario parameters ("mu" | "lambda" | "k1","k2" |
  // "mu1","mu2").
  std::vector<std::string> param_names;
  // Human-readable description of the parameter domain.
  std::string param_domain;
};

const FormSpec& form_spec(FormId id);

// Signatures of the rho1-kernel elements of W commuting with sigma,
// together with the case analysis' generator vectors (which generate the
// same subgroup of (Z/2)^5; this is asserted).
struct KernelBound {
  std::vector<std::array<int, 5>> signatures;  // sorted, includes 00000
  std::vector<std::array<int, 5>> generators;
};
KernelBound kernel_bound(FormId id);

// Permutation-part image of the centralizer of sigma in W. Semantics are
// "upper bound": any geometrically realized A' is a subgroup of this.
std::vector<Perm5> image_bound(FormId id);

}  // namespace dp4aut
