#pragma once

// The explicit birational maps of the five case analyses, instantiated with
// exact coefficients, plus the normalized blown-up point sets of the
// accompanying Lemmas.

#include <map>
#include <string>
#include <vector>

#include "dp4aut/birmaps.hpp"

namespace dp4aut {

struct InvalidParameters : std::runtime_error {
  explicit InvalidParameters(const std::string& what) : std::runtime_error(what) {}
};

// Named scenario parameters, e.g. {"mu": ...} or {"k1": ..., "k2": ...}.
using ParamMap = std::map<std::string, FieldElem>;

// The normalized blown-up points of the form's Lemma, keyed by name
// (Q31_02: p, pbar, q, qbar; Q31_21: p, q, r, rbar; Q31_40: p, q, r, s;
// Q22_02: p, pbar, q, qbar; Q22_40: p, q, r, s).
std::map<std::string, QuadricPoint> normalized_points(FormId form, const ParamMap& params);
std::vector<std::string> point_names(FormId form);

// Map names per form:
//   q31-02: alpha1, alpha2, phi3
//   q31-21: delta1, phi, psi
//   q31-40: alpha1, alpha2, phi3, alphaprime
//   q22-02: phi1, phi2, phi_gamma, phi_1245
//   q22-40: betaprime, alphaprime_1345, psi1, psi2
// Throws InvalidParameters when the parameters violate the map's domain
// (e.g. psi requires trace2, phi_1245 requires k_cond).
BidegMap builtin_map(const std::string& name, FormId form, const ParamMap& params);
std::vector<std::string> builtin_map_names(FormId form);

// The plane quadratic involution [ayz:bxz:cxy] of the Q22_40 analysis, with
// its base points p1, p2, p3, the exchanged points p4 = [1:1:1] and
// p5 = [a:b:c], and the claimed PLANE-basis lattice matrix.
struct QuadraticInvolution {
  PlaneMap map;
  std::vector<ProjPoint> base_points;
  ProjPoint p4;
  ProjPoint p5;
  PicAut matrix;
};
QuadraticInvolution builtin_lambda_quadratic(const FieldElem& a, const FieldElem& b,
                                             const FieldElem& c);

}  // namespace dp4aut
