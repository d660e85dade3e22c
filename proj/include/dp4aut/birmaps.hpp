#pragma once

// Points and birational self-maps of P1 x P1 and P2 over a quadratic field,
// with exact (grid-based, deterministic) verification procedures.

#include <optional>
#include <string>
#include <vector>

#include "dp4aut/poly.hpp"
#include "dp4aut/realforms.hpp"

namespace dp4aut {

// Point of P1 (2 coordinates) or P2 (3 coordinates); equality is projective.
struct ProjPoint {
  std::vector<FieldElem> coords;

  bool is_valid() const;
  friend bool proj_equal(const ProjPoint& a, const ProjPoint& b);
};

ProjPoint make_p1(const FieldElem& c0, const FieldElem& c1);
ProjPoint make_p2(const FieldElem& c0, const FieldElem& c1, const FieldElem& c2);
ProjPoint conj_point(const ProjPoint& p);
std::string format_point(const ProjPoint& p);

struct QuadricPoint {
  ProjPoint u;
  ProjPoint v;
};

bool quadric_equal(const QuadricPoint& a, const QuadricPoint& b);
std::string format_quadric_point(const QuadricPoint& p);

// The real structure of the form acting on points: conjugate and swap the
// two factors for the Q31 forms, coordinatewise conjugation for Q22. The
// conjugation is complex conjugation, so it is trivial on coordinates from a
// real quadratic field (d > 0).
QuadricPoint apply_real_structure(FormId form, const QuadricPoint& p);

// Birational self-map of P1 x P1: (u, v) -> ([A0:A1], [B0:B1]).
struct BidegMap {
  BiPoly a0, a1, b0, b1;

  long long d() const { return a0.d(); }
  std::array<int, 2> bidegree_a() const;
  std::array<int, 2> bidegree_b() const;
};

struct PlaneMap {
  TriPoly f0, f1, f2;
};

struct BasePointEvaluation : std::runtime_error {
  BasePointEvaluation() : std::runtime_error("evaluation at a base point") {}
};

struct DegenerateCurve : std::runtime_error {
  explicit DegenerateCurve(const std::string& what) : std::runtime_error(what) {}
};

// Point validation for a normalized blown-up point set.
enum class PointViolation { NotDistinct, SharedFiber, CurveThroughAll, NotSigmaStable };
std::string point_violation_string(PointViolation v);
std::vector<PointViolation> validate_points(FormId form,
                                            const std::vector<QuadricPoint>& pts);

// Throws BasePointEvaluation when a coordinate pair vanishes at p.
QuadricPoint evaluate(const BidegMap& m, const QuadricPoint& p);
bool is_base_point(const BidegMap& m, const QuadricPoint& p);

// True iff m equals the identity as a rational map: the cross determinants
// A0*u1 - A1*u0 and B0*v1 - B1*v0 vanish identically, decided exactly on a
// full grid of (bidegree+1) nodes per axis. Complete, not probabilistic.
bool is_identity_as_rational_map(const BidegMap& m);

// True iff f and g agree as rational maps (cross determinants of the paired
// coordinates vanish identically), given neither has an identically zero
// coordinate pair.
bool same_rational_map(const BidegMap& f, const BidegMap& g);

// Coordinate substitution f(g(.)); no cancellation of common factors is
// attempted (identity testing tolerates common factors by construction).
BidegMap compose(const BidegMap& f, const BidegMap& g);

// Composes m with itself n times (n >= 1).
BidegMap iterate_map(const BidegMap& m, int n);

// sigma o m o sigma = m as rational maps, where sigma is the real structure
// of the form.
bool commutes_with_real_structure(const BidegMap& m, FormId form);

// Curve specification for contraction checks: a fiber of one ruling through
// a point (ruling 1 = {u = const}, ruling 2 = {v = const}) or the unique
// (1,1)-curve through 3 given points.
struct CurveSpec {
  enum class Kind { Fiber, Curve11 } kind = Kind::Fiber;
  QuadricPoint through;             // Fiber
  int ruling = 1;                   // Fiber: 1 or 2
  std::vector<QuadricPoint> trio;   // Curve11: exactly 3 points
};

// True iff m maps every point of the curve outside its base locus to
// target; decided by exact evaluation at degree-bound + 1 points of a
// rational parametrization. Throws DegenerateCurve when the (1,1)-curve is
// not unique or the parametrization degenerates.
bool contracts(const BidegMap& m, const CurveSpec& curve, const QuadricPoint& target);

// Moebius-pair solver. Each constraint asks A.(source u) ~ target u and
// B.(source v) ~ target v, with the factor roles crossed when swap_rulings
// is set (A.(source u) ~ target v, B.(source v) ~ target u). Realness:
// B = conj(A) entrywise for the Q31 forms, independent real A and B for the
// Q22 forms.
enum class Realness { BEqualsConjA, BothReal };

struct MoebiusConstraint {
  QuadricPoint source;
  QuadricPoint target;
};

struct MoebiusResult {
  enum class Status { Solved, NoSolution, Underdetermined } status;
  std::optional<BidegMap> map;  // set when Solved
};

MoebiusResult solve_moebius_pair(const std::vector<MoebiusConstraint>& constraints,
                                 bool swap_rulings, Realness realness, long long d);

// Verification report for the plane quadratic involution [ayz:bxz:cxy].
struct PlaneMapReport {
  bool base_points_ok = false;
  bool swap_ok = false;
  bool involution_ok = false;
  bool matrix_ok = false;
  std::vector<std::string> failures;

  bool all_ok() const {
    return base_points_ok && swap_ok && involution_ok && matrix_ok;
  }
};

// Checks the base points p1, p2, p3, the exchange p4 = [1:1:1] <-> p5,
// the involution property (full-grid decision on P2), and that the claimed
// PLANE-basis matrix is a lattice automorphism with kernel signature
// (0,0,0,1,1).
PlaneMapReport plane_map_checks(const PlaneMap& m,
                                const std::vector<ProjPoint>& base_points,
                                const ProjPoint& p4, const ProjPoint& p5,
                                const PicAut& claimed_matrix);

}  // namespace dp4aut
