#include "dp4aut/builtins.hpp"

#include <algorithm>

namespace dp4aut {

namespace {

FieldElem fe(long long d, long long n) { return FieldElem::rational(d, n); }

FieldElem get_param(const ParamMap& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw InvalidParameters("missing parameter " + name);
  return it->second;
}

void check_domain(FormId form, const ParamMap& params) {
  switch (form) {
    case FormId::Q31_02:
    case FormId::Q31_21: {
      FieldElem mu = get_param(params, "mu");
      long long d = mu.d();
      if (d > 0) throw InvalidParameters("Q31 forms need an imaginary quadratic field");
      if (mu.is_zero() || mu == fe(d, 1) || mu == fe(d, -1))
        throw InvalidParameters("mu must avoid {0, 1, -1}");
      break;
    }
    case FormId::Q31_40: {
      FieldElem lam = get_param(params, "lambda");
      if (lam.is_real()) throw InvalidParameters("lambda must be non-real");
      break;
    }
    case FormId::Q22_02: {
      FieldElem k1 = get_param(params, "k1");
      FieldElem k2 = get_param(params, "k2");
      if (k1.d() != -1) throw InvalidParameters("Q22(0,2) scenarios live over Q(i)");
      if (!in_open_unit_interval(k1) || !in_open_unit_interval(k2))
        throw InvalidParameters("k1, k2 must be rationals in ]0,1[");
      if (k1 == k2) throw InvalidParameters("k1, k2 must be distinct");
      break;
    }
    case FormId::Q22_40: {
      FieldElem m1 = get_param(params, "mu1");
      FieldElem m2 = get_param(params, "mu2");
      long long d = m1.d();
      if (!m1.is_real() || !m2.is_real())
        throw InvalidParameters("mu1, mu2 must be real");
      for (const FieldElem* m : {&m1, &m2})
        if (m->is_zero() || *m == fe(d, 1))
          throw InvalidParameters("mu1, mu2 must avoid {0, 1}");
      if (m1 == m2) throw InvalidParameters("mu1 = mu2 gives a (1,1)-curve through the points");
      break;
    }
  }
}

}  // namespace

std::vector<std::string> point_names(FormId form) {
  switch (form) {
    case FormId::Q31_02: return {"p", "pbar", "q", "qbar"};
    case FormId::Q31_21: return {"p", "q", "r", "rbar"};
    case FormId::Q31_40: return {"p", "q", "r", "s"};
    case FormId::Q22_02: return {"p", "pbar", "q", "qbar"};
    case FormId::Q22_40: return {"p", "q", "r", "s"};
  }
  throw std::logic_error("bad form id");
}

std::map<std::string, QuadricPoint> normalized_points(FormId form, const ParamMap& params) {
  check_domain(form, params);
  std::map<std::string, QuadricPoint> pts;
  switch (form) {
    case FormId::Q31_02: {
      FieldElem mu = get_param(params, "mu");
      long long d = mu.d();
      FieldElem z = fe(d, 0), o = fe(d, 1);
      pts["p"] = {make_p1(o, z), make_p1(z, o)};
      pts["pbar"] = {make_p1(z, o), make_p1(o, z)};
      pts["q"] = {make_p1(o, o), make_p1(o, mu)};
      pts["qbar"] = {make_p1(o, mu.conj()), make_p1(o, o)};
      break;
    }
    case FormId::Q31_21: {
      FieldElem mu = get_param(params, "mu");
      long long d = mu.d();
      FieldElem z = fe(d, 0), o = fe(d, 1);
      pts["p"] = {make_p1(o, z), make_p1(o, z)};
      pts["q"] = {make_p1(z, o), make_p1(z, o)};
      pts["r"] = {make_p1(o, o), make_p1(mu, o)};
      pts["rbar"] = {make_p1(mu.conj(), o), make_p1(o, o)};
      break;
    }
    case FormId::Q31_40: {
      FieldElem lam = get_param(params, "lambda");
      long long d = lam.d();
      FieldElem z = fe(d, 0), o = fe(d, 1);
      pts["p"] = {make_p1(o, z), make_p1(o, z)};
      pts["q"] = {make_p1(z, o), make_p1(z, o)};
      pts["r"] = {make_p1(o, o), make_p1(o, o)};
      pts["s"] = {make_p1(lam, o), make_p1(lam.conj(), o)};
      break;
    }
    case FormId::Q22_02: {
      FieldElem k1 = get_param(params, "k1");
      FieldElem k2 = get_param(params, "k2");
      long long d = k1.d();
      FieldElem o = fe(d, 1);
      FieldElem i = FieldElem::sqrt_d(d);
      pts["p"] = {make_p1(o, i), make_p1(o, i)};
      pts["pbar"] = {make_p1(o, -i), make_p1(o, -i)};
      pts["q"] = {make_p1(o, k1 * i), make_p1(o, k2 * i)};
      pts["qbar"] = {make_p1(o, -(k1 * i)), make_p1(o, -(k2 * i))};
      break;
    }
    case FormId::Q22_40: {
      FieldElem m1 = get_param(params, "mu1");
      FieldElem m2 = get_param(params, "mu2");
      long long d = m1.d();
      FieldElem z = fe(d, 0), o = fe(d, 1);
      pts["p"] = {make_p1(o, z), make_p1(o, z)};
      pts["q"] = {make_p1(z, o), make_p1(z, o)};
      pts["r"] = {make_p1(o, o), make_p1(o, o)};
      pts["s"] = {make_p1(o, m1), make_p1(o, m2)};
      break;
    }
  }
  return pts;
}

std::vector<std::string> builtin_map_names(FormId form) {
  switch (form) {
    case FormId::Q31_02: return {"alpha1", "alpha2", "phi3"};
    case FormId::Q31_21: return {"delta1", "phi", "psi"};
    case FormId::Q31_40: return {"alpha1", "alpha2", "phi3", "alphaprime"};
    case FormId::Q22_02: return {"phi1", "phi2", "phi_gamma", "phi_1245"};
    case FormId::Q22_40: return {"betaprime", "alphaprime_1345", "psi1", "psi2"};
  }
  throw std::logic_error("bad form id");
}

BidegMap builtin_map(const std::string& name, FormId form, const ParamMap& params) {
  check_domain(form, params);
  long long d = params.begin()->second.d();
  BiPoly u0 = BiPoly::variable(d, 0), u1 = BiPoly::variable(d, 1);
  BiPoly v0 = BiPoly::variable(d, 2), v1 = BiPoly::variable(d, 3);
  FieldElem one = fe(d, 1);
  auto C = [&](const FieldElem& c) { return BiPoly::constant(c); };

  if (form == FormId::Q31_02) {
    FieldElem m = get_param(params, "mu");
    FieldElem mc = m.conj();
    if (name == "alpha1")
      return {u1, u0.scaled(mc), v1, v0.scaled(m)};
    if (name == "alpha2")
      return {u1 - u0.scaled(mc), (u1 - u0).scaled(mc),
              v1 - v0.scaled(m), (v1 - v0).scaled(m)};
    if (name == "phi3") {
      BiPoly ia = u0 * v0.scaled(mc * (m - one)) + u1 * v1.scaled(one - mc) +
                  u1 * v0.scaled(mc - m);
      BiPoly ib = u0 * v0.scaled(m * (mc - one)) + u0 * v1.scaled(m - mc) +
                  u1 * v1.scaled(one - m);
      return {-(v1 * ia), -(v0 * ib).scaled(mc), -(u1 * ib), -(u0 * ia).scaled(m)};
    }
  } else if (form == FormId::Q31_21) {
    FieldElem m = get_param(params, "mu");
    FieldElem mc = m.conj();
    if (name == "delta1")
      return {u1.scaled(mc), u0, v1.scaled(m), v0};
    if (name == "phi") {
      BiPoly ia = u1 * v1.scaled(mc * m - one) + u0 * v1.scaled(one - m) +
                  u1 * v0.scaled(one - mc);
      BiPoly ib = u0 * v1.scaled(m * (mc - one)) + u0 * v0.scaled(one - m * mc) +
                  u1 * v0.scaled(mc * (m - one));
      return {(v0 * ia).scaled(mc), v1 * ib, -(u0 * ia).scaled(m), -(u1 * ib)};
    }
    if (name == "psi") {
      if (!predicate("trace2", {m}))
        throw InvalidParameters("psi requires mu + conj(mu) = 2");
      BiPoly den = u0 * v1 - u1 * v0 + (u1 * v1).scaled(m - one);
      return {u0 * v1 - (u1 * v0).scaled(mc), den, (u0 * v1).scaled(m) - u1 * v0, den};
    }
  } else if (form == FormId::Q31_40) {
    FieldElem l = get_param(params, "lambda");
    FieldElem lc = l.conj();
    if (name == "alpha1")
      return {u1.scaled(l), u0, v1.scaled(lc), v0};
    if (name == "alpha2")
      return {u0 - u1.scaled(l), u0 - u1, v0 - v1.scaled(lc), v0 - v1};
    if (name == "phi3") {
      BiPoly ia = u0 * v1.scaled(lc - one) + u1 * v1.scaled(l - lc) +
                  u1 * v0.scaled(one - l);
      BiPoly ib = u0 * v1.scaled(lc * (l - one)) + u1 * v0.scaled(l * (one - lc)) +
                  u0 * v0.scaled(lc - l);
      return {(v0 * ia).scaled(l), v1 * ib, -(u0 * ia).scaled(lc), -(u1 * ib)};
    }
    if (name == "alphaprime") {
      if (!predicate("trace1", {l}))
        throw InvalidParameters("alphaprime requires lambda + conj(lambda) = 1");
      return {v0 - v1, -v1, u0 - u1, -u1};
    }
  } else if (form == FormId::Q22_02) {
    FieldElem k1 = get_param(params, "k1");
    FieldElem k2 = get_param(params, "k2");
    // The shared quadratic blocks of the phi1 / phi2 coordinate forms.
    BiPoly blk0 = (u0 * u0 * v1).scaled(k1 * (one - k1 * k2)) +
                  (u0 * u1 * v0).scaled(k2 * (k1 * k1 - one)) +
                  (u1 * u1 * v1).scaled(k1 - k2);
    BiPoly blk1 = (u0 * u1 * v1).scaled(k1 * k1 - one) +
                  (u0 * u0 * v0).scaled(k1 * (k1 - k2)) +
                  (u1 * u1 * v0).scaled(one - k1 * k2);
    if (name == "phi1")
      return {-u0, u1, blk0, blk1.scaled(k2)};
    if (name == "phi2")
      return {u1, u0.scaled(-k1), blk1, blk0};
    if (name == "phi_gamma") {
      BiPoly c0 = (u0 * v0 * v1).scaled(k1 * (one - k2 * k2)) +
                  (u1 * v0 * v0).scaled(k2 * (k1 * k2 - one)) +
                  (u1 * v1 * v1).scaled(k1 - k2);
      BiPoly c1 = ((u0 * v1 * v1).scaled(k1 * k2 - one) +
                   (u0 * v0 * v0).scaled(k2 * (k1 - k2)) +
                   (u1 * v0 * v1).scaled(one - k2 * k2))
                      .scaled(-k1);
      BiPoly d0 = (u0 * u0 * v1).scaled(k1 * (k1 * k2 - one)) +
                  (u0 * u1 * v0).scaled(k2 * (one - k1 * k1)) +
                  (u1 * u1 * v1).scaled(k2 - k1);
      BiPoly d1 = blk1.scaled(k2);
      return {c0, c1, d0, d1};
    }
    if (name == "phi_1245") {
      if (!predicate("k_cond", {k1, k2}))
        throw InvalidParameters("phi_1245 requires k1^2 k2 - 2 k1 + k2 = 0");
      return {u1 * v1 + u0 * v0, u1 * v0 - u0 * v1, -v0, v1};
    }
  } else if (form == FormId::Q22_40) {
    FieldElem m1 = get_param(params, "mu1");
    FieldElem m2 = get_param(params, "mu2");
    if (name == "betaprime") {
      if (!predicate("mu_cond", {m1, m2}))
        throw InvalidParameters("betaprime requires mu1 + mu2 - mu1*mu2 = 0");
      return {v0 - v1, -v1, u0 - u1, -u1};
    }
    if (name == "alphaprime_1345") {
      if (!predicate("sum1", {m1, m2}))
        throw InvalidParameters("alphaprime_1345 requires mu1 + mu2 = 1");
      return {v0.scaled(m1 - one) + v1, v1.scaled(m1), u0.scaled(m2 - one) + u1,
              u1.scaled(m2)};
    }
    if (name == "psi1" || name == "psi2") {
      if (d != 5 || !predicate("golden", {m1, m2}))
        throw InvalidParameters(name + " exists only at the golden parameter pair");
      FieldElem s5 = FieldElem::sqrt_d(5);
      bool minus = (m2 == (fe(5, 3) - s5) / fe(5, 2));
      if (name == "psi1" && !minus)
        throw InvalidParameters("psi1 belongs to the minus-sign golden pair");
      if (name == "psi2" && minus)
        throw InvalidParameters("psi2 belongs to the plus-sign golden pair");
      if (name == "psi1")
        return {((v1 - v0) * u1).scaled(fe(5, 2)),
                (v1 * (u0 - u1)).scaled(s5 - one),
                u1.scaled(fe(5, 2)), (u0 - u1).scaled(s5 - fe(5, 3))};
      return {((v1 - v0) * u1).scaled(fe(5, -2)),
              (v1 * (u0 - u1)).scaled(s5 + one),
              u1.scaled(fe(5, 2)), (u0 - u1).scaled(-(s5 + fe(5, 3)))};
    }
  }
  throw InvalidParameters("unknown builtin map " + name + " for form " +
                          form_id_string(form));
}

QuadraticInvolution builtin_lambda_quadratic(const FieldElem& a, const FieldElem& b,
                                             const FieldElem& c) {
  long long d = a.d();
  TriPoly x = TriPoly::variable(d, 0), y = TriPoly::variable(d, 1),
          z = TriPoly::variable(d, 2);
  QuadraticInvolution q;
  q.map = {(y * z).scaled(a), (x * z).scaled(b), (x * y).scaled(c)};
  FieldElem one = FieldElem::rational(d, 1), zero = FieldElem::rational(d, 0);
  q.base_points = {make_p2(one, zero, zero), make_p2(zero, one, zero),
                   make_p2(zero, zero, one)};
  q.p4 = make_p2(one, one, one);
  q.p5 = make_p2(a, b, c);
  // PLANE-basis lattice action of the lift: the quadratic transformation
  // based at p1, p2, p3, composed with the exchange of E4 and E5.
  q.matrix.basis = Basis::Plane;
  long long rows[6][6] = {{2, 1, 1, 1, 0, 0},  {-1, 0, -1, -1, 0, 0},
                          {-1, -1, 0, -1, 0, 0}, {-1, -1, -1, 0, 0, 0},
                          {0, 0, 0, 0, 0, 1},  {0, 0, 0, 0, 1, 0}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) q.matrix.m[i][j] = rows[i][j];
  return q;
}

}  // namespace dp4aut
