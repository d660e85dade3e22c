#include "dp4aut/birmaps.hpp"

#include <algorithm>

namespace dp4aut {

namespace {

FieldElem fe(long long d, long long n) { return FieldElem::rational(d, n); }

// Complex conjugation on coordinates: the Galois map for an imaginary field,
// the identity for a real field (sqrt(d) is a real number there).
ProjPoint complex_conj_point(const ProjPoint& p) {
  for (const auto& c : p.coords)
    if (c.d() > 0) return p;
  return conj_point(p);
}

}  // namespace

bool ProjPoint::is_valid() const {
  if (coords.size() != 2 && coords.size() != 3) return false;
  for (const auto& c : coords)
    if (!c.is_zero()) return true;
  return false;
}

bool proj_equal(const ProjPoint& a, const ProjPoint& b) {
  if (a.coords.size() != b.coords.size()) return false;
  // Cross products a_i b_j - a_j b_i must all vanish.
  for (size_t i = 0; i < a.coords.size(); ++i)
    for (size_t j = i + 1; j < a.coords.size(); ++j)
      if (!(a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i]).is_zero())
        return false;
  return true;
}

ProjPoint make_p1(const FieldElem& c0, const FieldElem& c1) { return {{c0, c1}}; }

ProjPoint make_p2(const FieldElem& c0, const FieldElem& c1, const FieldElem& c2) {
  return {{c0, c1, c2}};
}

ProjPoint conj_point(const ProjPoint& p) {
  ProjPoint r;
  for (const auto& c : p.coords) r.coords.push_back(c.conj());
  return r;
}

std::string format_point(const ProjPoint& p) {
  std::string out = "[";
  for (size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ":";
    out += format_field_elem(p.coords[i]);
  }
  return out + "]";
}

bool quadric_equal(const QuadricPoint& a, const QuadricPoint& b) {
  return proj_equal(a.u, b.u) && proj_equal(a.v, b.v);
}

std::string format_quadric_point(const QuadricPoint& p) {
  return "(" + format_point(p.u) + "," + format_point(p.v) + ")";
}

QuadricPoint apply_real_structure(FormId form, const QuadricPoint& p) {
  bool q31 = (form == FormId::Q31_40 || form == FormId::Q31_21 || form == FormId::Q31_02);
  if (q31) return {complex_conj_point(p.v), complex_conj_point(p.u)};
  return {complex_conj_point(p.u), complex_conj_point(p.v)};
}

std::string point_violation_string(PointViolation v) {
  switch (v) {
    case PointViolation::NotDistinct: return "NotDistinct";
    case PointViolation::SharedFiber: return "SharedFiber";
    case PointViolation::CurveThroughAll: return "CurveThroughAll";
    case PointViolation::NotSigmaStable: return "NotSigmaStable";
  }
  return "?";
}

namespace {

// Determinant of an n x n matrix of field elements by cofactor expansion.
FieldElem det_n(const std::vector<std::vector<FieldElem>>& m, long long d) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  FieldElem acc = fe(d, 0);
  long long sign = 1;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<FieldElem>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<FieldElem> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    acc = acc + fe(d, sign) * m[0][j] * det_n(minor, d);
    sign = -sign;
  }
  return acc;
}

}  // namespace

std::vector<PointViolation> validate_points(FormId form,
                                            const std::vector<QuadricPoint>& pts) {
  std::vector<PointViolation> out;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (quadric_equal(pts[i], pts[j])) {
        out.push_back(PointViolation::NotDistinct);
        goto distinct_done;
      }
distinct_done:
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (proj_equal(pts[i].u, pts[j].u) || proj_equal(pts[i].v, pts[j].v)) {
        out.push_back(PointViolation::SharedFiber);
        goto fiber_done;
      }
fiber_done:
  if (pts.size() == 4) {
    long long d = pts[0].u.coords[0].d();
    std::vector<std::vector<FieldElem>> m;
    for (const auto& p : pts) {
      const FieldElem &u0 = p.u.coords[0], &u1 = p.u.coords[1];
      const FieldElem &v0 = p.v.coords[0], &v1 = p.v.coords[1];
      m.push_back({u0 * v0, u0 * v1, u1 * v0, u1 * v1});
    }
    if (det_n(m, d).is_zero()) out.push_back(PointViolation::CurveThroughAll);
  }
  // Sigma stability: the image multiset equals the point set.
  for (const auto& p : pts) {
    QuadricPoint ip = apply_real_structure(form, p);
    bool found = false;
    for (const auto& q : pts)
      if (quadric_equal(ip, q)) {
        found = true;
        break;
      }
    if (!found) {
      out.push_back(PointViolation::NotSigmaStable);
      break;
    }
  }
  return out;
}

std::array<int, 2> BidegMap::bidegree_a() const {
  std::array<int, 2> d{0, 0};
  for (const BiPoly* p : {&a0, &a1})
    for (const auto& [k, c] : p->terms()) {
      d[0] = std::max(d[0], k[0] + k[1]);
      d[1] = std::max(d[1], k[2] + k[3]);
    }
  return d;
}

std::array<int, 2> BidegMap::bidegree_b() const {
  std::array<int, 2> d{0, 0};
  for (const BiPoly* p : {&b0, &b1})
    for (const auto& [k, c] : p->terms()) {
      d[0] = std::max(d[0], k[0] + k[1]);
      d[1] = std::max(d[1], k[2] + k[3]);
    }
  return d;
}

bool is_base_point(const BidegMap& m, const QuadricPoint& p) {
  const FieldElem &u0 = p.u.coords[0], &u1 = p.u.coords[1];
  const FieldElem &v0 = p.v.coords[0], &v1 = p.v.coords[1];
  bool abase = m.a0.eval(u0, u1, v0, v1).is_zero() && m.a1.eval(u0, u1, v0, v1).is_zero();
  bool bbase = m.b0.eval(u0, u1, v0, v1).is_zero() && m.b1.eval(u0, u1, v0, v1).is_zero();
  return abase || bbase;
}

QuadricPoint evaluate(const BidegMap& m, const QuadricPoint& p) {
  const FieldElem &u0 = p.u.coords[0], &u1 = p.u.coords[1];
  const FieldElem &v0 = p.v.coords[0], &v1 = p.v.coords[1];
  FieldElem a0 = m.a0.eval(u0, u1, v0, v1), a1 = m.a1.eval(u0, u1, v0, v1);
  FieldElem b0 = m.b0.eval(u0, u1, v0, v1), b1 = m.b1.eval(u0, u1, v0, v1);
  if ((a0.is_zero() && a1.is_zero()) || (b0.is_zero() && b1.is_zero()))
    throw BasePointEvaluation();
  return {make_p1(a0, a1), make_p1(b0, b1)};
}

namespace {

// Grid nodes for one P1 factor: [0:1], [1:1], ..., [n-1:1], [1:0] gives
// n + 1 distinct points; a binary form of degree n vanishing at all of them
// is identically zero.
std::vector<std::array<FieldElem, 2>> p1_nodes(long long d, int degree) {
  std::vector<std::array<FieldElem, 2>> out;
  for (int t = 0; t < degree; ++t) out.push_back({fe(d, t), fe(d, 1)});
  out.push_back({fe(d, 1), fe(d, 0)});
  return out;
}

// Complete deterministic zero test for a bihomogeneous polynomial.
bool vanishes_identically(const BiPoly& p) {
  if (p.is_zero()) return true;
  int du = 0, dv = 0;
  for (const auto& [k, c] : p.terms()) {
    du = std::max(du, k[0] + k[1]);
    dv = std::max(dv, k[2] + k[3]);
  }
  auto un = p1_nodes(p.d(), du);
  auto vn = p1_nodes(p.d(), dv);
  for (const auto& u : un)
    for (const auto& v : vn)
      if (!p.eval(u[0], u[1], v[0], v[1]).is_zero()) return false;
  return true;
}

}  // namespace

bool is_identity_as_rational_map(const BidegMap& m) {
  long long d = m.d();
  BiPoly u0 = BiPoly::variable(d, 0), u1 = BiPoly::variable(d, 1);
  BiPoly v0 = BiPoly::variable(d, 2), v1 = BiPoly::variable(d, 3);
  if (m.a0.is_zero() && m.a1.is_zero()) return false;
  if (m.b0.is_zero() && m.b1.is_zero()) return false;
  return vanishes_identically(m.a0 * u1 - m.a1 * u0) &&
         vanishes_identically(m.b0 * v1 - m.b1 * v0);
}

bool same_rational_map(const BidegMap& f, const BidegMap& g) {
  if ((f.a0.is_zero() && f.a1.is_zero()) || (g.a0.is_zero() && g.a1.is_zero()))
    return false;
  if ((f.b0.is_zero() && f.b1.is_zero()) || (g.b0.is_zero() && g.b1.is_zero()))
    return false;
  return vanishes_identically(f.a0 * g.a1 - f.a1 * g.a0) &&
         vanishes_identically(f.b0 * g.b1 - f.b1 * g.b0);
}

BidegMap compose(const BidegMap& f, const BidegMap& g) {
  return {f.a0.substitute(g.a0, g.a1, g.b0, g.b1),
          f.a1.substitute(g.a0, g.a1, g.b0, g.b1),
          f.b0.substitute(g.a0, g.a1, g.b0, g.b1),
          f.b1.substitute(g.a0, g.a1, g.b0, g.b1)};
}

BidegMap iterate_map(const BidegMap& m, int n) {
  BidegMap acc = m;
  for (int i = 1; i < n; ++i) acc = compose(m, acc);
  return acc;
}

bool commutes_with_real_structure(const BidegMap& m, FormId form) {
  bool q31 = (form == FormId::Q31_40 || form == FormId::Q31_21 || form == FormId::Q31_02);
  // Complex conjugation of the coefficients: trivial over a real field.
  auto cc = [&](const BiPoly& p) { return m.d() > 0 ? p : p.conj_coeffs(); };
  BidegMap conj_m;
  if (q31) {
    // sigma(u,v) = (conj v, conj u); sigma o m o sigma has coordinate polys
    // conj-coefficient with the factor variables exchanged, and the two
    // output factors exchanged.
    conj_m = {cc(m.b0).swap_factors(), cc(m.b1).swap_factors(),
              cc(m.a0).swap_factors(), cc(m.a1).swap_factors()};
  } else {
    conj_m = {cc(m.a0), cc(m.a1), cc(m.b0), cc(m.b1)};
  }
  return same_rational_map(m, conj_m);
}

bool contracts(const BidegMap& m, const CurveSpec& curve, const QuadricPoint& target) {
  long long d = m.d();
  auto da = m.bidegree_a();
  auto db = m.bidegree_b();

  // Collect sample points on the curve and the degree bound of the
  // restricted cross polynomials.
  std::vector<QuadricPoint> samples;
  int bound = 0;
  if (curve.kind == CurveSpec::Kind::Fiber) {
    if (curve.ruling == 1) {
      bound = std::max(da[1], db[1]);
      for (const auto& t : p1_nodes(d, bound))
        samples.push_back({curve.through.u, make_p1(t[0], t[1])});
    } else {
      bound = std::max(da[0], db[0]);
      for (const auto& t : p1_nodes(d, bound))
        samples.push_back({make_p1(t[0], t[1]), curve.through.v});
    }
  } else {
    if (curve.trio.size() != 3) throw DegenerateCurve("curve11 needs 3 points");
    // Coefficients (c00, c01, c10, c11) of the (1,1)-curve through the trio.
    std::vector<std::array<FieldElem, 4>> rows;
    for (const auto& p : curve.trio) {
      const FieldElem &u0 = p.u.coords[0], &u1 = p.u.coords[1];
      const FieldElem &v0 = p.v.coords[0], &v1 = p.v.coords[1];
      rows.push_back({u0 * v0, u0 * v1, u1 * v0, u1 * v1});
    }
    // Nullspace must be one-dimensional.
    std::vector<std::array<FieldElem, 4>> mat = rows;
    std::vector<int> pivots;
    size_t rank = 0;
    for (int col = 0; col < 4 && rank < mat.size(); ++col) {
      size_t piv = rank;
      while (piv < mat.size() && mat[piv][col].is_zero()) ++piv;
      if (piv == mat.size()) continue;
      std::swap(mat[rank], mat[piv]);
      FieldElem lead = mat[rank][col];
      for (int j = 0; j < 4; ++j) mat[rank][j] = mat[rank][j] / lead;
      for (size_t i = 0; i < mat.size(); ++i)
        if (i != rank && !mat[i][col].is_zero()) {
          FieldElem f = mat[i][col];
          for (int j = 0; j < 4; ++j) mat[i][j] = mat[i][j] - f * mat[rank][j];
        }
      pivots.push_back(col);
      ++rank;
    }
    if (rank != 3) throw DegenerateCurve("(1,1)-curve through the trio is not unique");
    int free_col = 0;
    for (int col = 0; col < 4; ++col)
      if (std::find(pivots.begin(), pivots.end(), col) == pivots.end()) free_col = col;
    std::array<FieldElem, 4> c{fe(d, 0), fe(d, 0), fe(d, 0), fe(d, 0)};
    c[free_col] = fe(d, 1);
    for (size_t r = 0; r < rank; ++r) c[pivots[r]] = -mat[r][free_col];
    // Parametrize by u; v = [c01 u0 + c11 u1 : -(c00 u0 + c10 u1)].
    bound = std::max(da[0] + da[1], db[0] + db[1]);
    int needed = bound + 1;
    for (int t = 0; static_cast<int>(samples.size()) < needed && t < 4 * (needed + 1);
         ++t) {
      std::array<FieldElem, 2> u =
          (t == 0) ? std::array<FieldElem, 2>{fe(d, 1), fe(d, 0)}
                   : std::array<FieldElem, 2>{fe(d, t - 1), fe(d, 1)};
      FieldElem w0 = c[1] * u[0] + c[3] * u[1];
      FieldElem w1 = -(c[0] * u[0] + c[2] * u[1]);
      if (w0.is_zero() && w1.is_zero()) continue;
      samples.push_back({make_p1(u[0], u[1]), make_p1(w0, w1)});
    }
    if (static_cast<int>(samples.size()) < needed)
      throw DegenerateCurve("could not sample the (1,1)-curve");
  }

  const FieldElem &tu0 = target.u.coords[0], &tu1 = target.u.coords[1];
  const FieldElem &tv0 = target.v.coords[0], &tv1 = target.v.coords[1];
  bool nondeg_a = false, nondeg_b = false;
  for (const auto& s : samples) {
    const FieldElem &u0 = s.u.coords[0], &u1 = s.u.coords[1];
    const FieldElem &v0 = s.v.coords[0], &v1 = s.v.coords[1];
    FieldElem a0 = m.a0.eval(u0, u1, v0, v1), a1 = m.a1.eval(u0, u1, v0, v1);
    FieldElem b0 = m.b0.eval(u0, u1, v0, v1), b1 = m.b1.eval(u0, u1, v0, v1);
    if (!(a0 * tu1 - a1 * tu0).is_zero()) return false;
    if (!(b0 * tv1 - b1 * tv0).is_zero()) return false;
    if (!a0.is_zero() || !a1.is_zero()) nondeg_a = true;
    if (!b0.is_zero() || !b1.is_zero()) nondeg_b = true;
  }
  return nondeg_a && nondeg_b;
}

namespace {

// Nullspace of an m x 4 system over the field; returns a basis.
std::vector<std::array<FieldElem, 4>> nullspace4(
    std::vector<std::array<FieldElem, 4>> mat, long long d) {
  std::vector<int> pivots;
  size_t rank = 0;
  for (int col = 0; col < 4 && rank < mat.size(); ++col) {
    size_t piv = rank;
    while (piv < mat.size() && mat[piv][col].is_zero()) ++piv;
    if (piv == mat.size()) continue;
    std::swap(mat[rank], mat[piv]);
    FieldElem lead = mat[rank][col];
    for (int j = 0; j < 4; ++j) mat[rank][j] = mat[rank][j] / lead;
    for (size_t i = 0; i < mat.size(); ++i)
      if (i != rank && !mat[i][col].is_zero()) {
        FieldElem f = mat[i][col];
        for (int j = 0; j < 4; ++j) mat[i][j] = mat[i][j] - f * mat[rank][j];
      }
    pivots.push_back(col);
    ++rank;
  }
  std::vector<std::array<FieldElem, 4>> basis;
  for (int col = 0; col < 4; ++col) {
    if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
    std::array<FieldElem, 4> v{fe(d, 0), fe(d, 0), fe(d, 0), fe(d, 0)};
    v[col] = fe(d, 1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -mat[r][col];
    basis.push_back(v);
  }
  return basis;
}

// One linear cross-product constraint on the entries (m00, m01, m10, m11)
// of a 2x2 matrix M with M.x proportional to y:
//   (M.x)_0 y_1 - (M.x)_1 y_0 = 0.
std::array<FieldElem, 4> cross_row(const std::array<FieldElem, 2>& x,
                                   const std::array<FieldElem, 2>& y) {
  return {x[0] * y[1], x[1] * y[1], -(x[0] * y[0]), -(x[1] * y[0])};
}

bool scalable_to_real(const std::array<FieldElem, 4>& v, long long d) {
  if (d > 0) return true;  // the whole field is real
  // Find the first nonzero entry and test whether v / entry is rational.
  int lead = -1;
  for (int i = 0; i < 4; ++i)
    if (!v[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) return false;
  for (int i = 0; i < 4; ++i)
    if (!(v[i] / v[lead]).is_real()) return false;
  return true;
}

std::array<FieldElem, 4> scale_to_real(const std::array<FieldElem, 4>& v) {
  int lead = -1;
  for (int i = 0; i < 4; ++i)
    if (!v[i].is_zero()) {
      lead = i;
      break;
    }
  std::array<FieldElem, 4> r = v;
  for (int i = 0; i < 4; ++i) r[i] = v[i] / v[lead];
  return r;
}

FieldElem det2(const std::array<FieldElem, 4>& v) {
  return v[0] * v[3] - v[1] * v[2];
}

BidegMap assemble(const std::array<FieldElem, 4>& a, const std::array<FieldElem, 4>& b,
                  bool swap_rulings, long long d) {
  BiPoly u0 = BiPoly::variable(d, 0), u1 = BiPoly::variable(d, 1);
  BiPoly v0 = BiPoly::variable(d, 2), v1 = BiPoly::variable(d, 3);
  BiPoly au0 = u0.scaled(a[0]) + u1.scaled(a[1]);
  BiPoly au1 = u0.scaled(a[2]) + u1.scaled(a[3]);
  BiPoly bv0 = v0.scaled(b[0]) + v1.scaled(b[1]);
  BiPoly bv1 = v0.scaled(b[2]) + v1.scaled(b[3]);
  if (swap_rulings) return {bv0, bv1, au0, au1};
  return {au0, au1, bv0, bv1};
}

}  // namespace

MoebiusResult solve_moebius_pair(const std::vector<MoebiusConstraint>& constraints,
                                 bool swap_rulings, Realness realness, long long d) {
  std::vector<std::array<FieldElem, 4>> a_rows, b_rows;
  for (const auto& c : constraints) {
    std::array<FieldElem, 2> su{c.source.u.coords[0], c.source.u.coords[1]};
    std::array<FieldElem, 2> sv{c.source.v.coords[0], c.source.v.coords[1]};
    std::array<FieldElem, 2> tu{c.target.u.coords[0], c.target.u.coords[1]};
    std::array<FieldElem, 2> tv{c.target.v.coords[0], c.target.v.coords[1]};
    // A acts on the u coordinate of the source; B on the v coordinate. With
    // swapped rulings the first output factor is B.v, so A targets the v
    // coordinate of the image and B targets u.
    a_rows.push_back(cross_row(su, swap_rulings ? tv : tu));
    b_rows.push_back(cross_row(sv, swap_rulings ? tu : tv));
  }

  if (realness == Realness::BEqualsConjA) {
    // Fold the B constraints onto A: B = conj(A), and B.x ~ y is
    // equivalent to A.conj(x) ~ conj(y).
    for (const auto& c : constraints) {
      std::array<FieldElem, 2> sv{c.source.v.coords[0].conj(), c.source.v.coords[1].conj()};
      const ProjPoint& t = swap_rulings ? c.target.u : c.target.v;
      std::array<FieldElem, 2> tv{t.coords[0].conj(), t.coords[1].conj()};
      a_rows.push_back(cross_row(sv, tv));
    }
    auto basis = nullspace4(a_rows, d);
    if (basis.empty()) return {MoebiusResult::Status::NoSolution, std::nullopt};
    if (basis.size() > 1) return {MoebiusResult::Status::Underdetermined, std::nullopt};
    auto a = basis[0];
    if (det2(a).is_zero()) return {MoebiusResult::Status::NoSolution, std::nullopt};
    std::array<FieldElem, 4> b{a[0].conj(), a[1].conj(), a[2].conj(), a[3].conj()};
    return {MoebiusResult::Status::Solved, assemble(a, b, swap_rulings, d)};
  }

  // Independent real A and B.
  auto a_basis = nullspace4(a_rows, d);
  auto b_basis = nullspace4(b_rows, d);
  if (a_basis.empty() || b_basis.empty())
    return {MoebiusResult::Status::NoSolution, std::nullopt};
  if (a_basis.size() > 1 || b_basis.size() > 1)
    return {MoebiusResult::Status::Underdetermined, std::nullopt};
  auto a = a_basis[0];
  auto b = b_basis[0];
  if (!scalable_to_real(a, d) || !scalable_to_real(b, d))
    return {MoebiusResult::Status::NoSolution, std::nullopt};
  a = scale_to_real(a);
  b = scale_to_real(b);
  if (det2(a).is_zero() || det2(b).is_zero())
    return {MoebiusResult::Status::NoSolution, std::nullopt};
  return {MoebiusResult::Status::Solved, assemble(a, b, swap_rulings, d)};
}

namespace {

bool tri_vanishes_identically(const TriPoly& p) {
  if (p.is_zero()) return true;
  int deg = 0;
  for (const auto& [k, c] : p.terms()) deg = std::max(deg, k[0] + k[1] + k[2]);
  long long d = p.d();
  for (int x = 0; x <= deg; ++x)
    for (int y = 0; y <= deg; ++y)
      if (!p.eval(fe(d, x), fe(d, y), fe(d, 1)).is_zero()) return false;
  // The affine slice z = 1 determines all coefficients of a homogeneous
  // form, so vanishing there is conclusive.
  return true;
}

ProjPoint eval_plane(const PlaneMap& m, const ProjPoint& p) {
  return make_p2(m.f0.eval(p.coords[0], p.coords[1], p.coords[2]),
                 m.f1.eval(p.coords[0], p.coords[1], p.coords[2]),
                 m.f2.eval(p.coords[0], p.coords[1], p.coords[2]));
}

}  // namespace

PlaneMapReport plane_map_checks(const PlaneMap& m,
                                const std::vector<ProjPoint>& base_points,
                                const ProjPoint& p4, const ProjPoint& p5,
                                const PicAut& claimed_matrix) {
  PlaneMapReport rep;

  rep.base_points_ok = true;
  for (const auto& p : base_points) {
    ProjPoint img = eval_plane(m, p);
    if (img.is_valid()) {
      rep.base_points_ok = false;
      rep.failures.push_back("claimed base point " + format_point(p) +
                             " does not kill all coordinates");
    }
  }
  for (const ProjPoint* p : {&p4, &p5}) {
    if (!eval_plane(m, *p).is_valid()) {
      rep.base_points_ok = false;
      rep.failures.push_back("exchanged point " + format_point(*p) +
                             " lies in the base locus");
    }
  }

  rep.swap_ok = false;
  if (rep.base_points_ok) {
    ProjPoint i4 = eval_plane(m, p4);
    ProjPoint i5 = eval_plane(m, p5);
    rep.swap_ok = proj_equal(i4, p5) && proj_equal(i5, p4);
    if (!rep.swap_ok) rep.failures.push_back("p4 and p5 are not exchanged");
  }

  // Involution as a rational map: the composed coordinate forms must be
  // proportional to (x, y, z), decided on a complete grid.
  {
    TriPoly cx = m.f0.substitute(m.f0, m.f1, m.f2);
    TriPoly cy = m.f1.substitute(m.f0, m.f1, m.f2);
    TriPoly cz = m.f2.substitute(m.f0, m.f1, m.f2);
    long long d = m.f0.d();
    TriPoly x = TriPoly::variable(d, 0), y = TriPoly::variable(d, 1),
            z = TriPoly::variable(d, 2);
    bool nondeg = !(cx.is_zero() && cy.is_zero() && cz.is_zero());
    rep.involution_ok = nondeg && tri_vanishes_identically(cx * y - cy * x) &&
                        tri_vanishes_identically(cy * z - cz * y) &&
                        tri_vanishes_identically(cx * z - cz * x);
    if (!rep.involution_ok) rep.failures.push_back("square is not the identity map");
  }

  {
    AutVerdict v = is_lattice_automorphism(claimed_matrix);
    rep.matrix_ok = v.ok;
    if (v.ok) {
      // PLANE-basis pair ordering {L - Ei, -K - L + Ei} for i = 1..5.
      std::vector<ExceptionalPair> pairs;
      DivisorClass l = basis_vector(Basis::Plane, 0);
      DivisorClass mk = -canonical_class(Basis::Plane);
      for (int i = 1; i <= 5; ++i) {
        DivisorClass ei = basis_vector(Basis::Plane, i);
        pairs.push_back({i, l - ei, mk - (l - ei)});
      }
      try {
        auto sig = kernel_signature(claimed_matrix, pairs);
        std::array<int, 5> expected{0, 0, 0, 1, 1};
        rep.matrix_ok = (sig == expected);
        if (!rep.matrix_ok)
          rep.failures.push_back("kernel signature differs from (0,0,0,1,1)");
      } catch (const NotInKernel&) {
        rep.matrix_ok = false;
        rep.failures.push_back("matrix acts nontrivially on the pairs");
      }
    } else {
      rep.failures.push_back("claimed matrix fails the lattice test: " + v.reason);
    }
  }

  return rep;
}

}  // namespace dp4aut
