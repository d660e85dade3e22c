#pragma once

// Sparse multivariate polynomials over a quadratic field, specialized to the
// two variable sets used by the birational maps: bihomogeneous forms in
// (u0, u1; v0, v1) and homogeneous forms in (x, y, z).

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "dp4aut/field.hpp"

namespace dp4aut {

// Bihomogeneous polynomial in u0, u1, v0, v1. Exponent key order is
// (u0, u1, v0, v1). The field parameter d is carried even by the zero
// polynomial.
class BiPoly {
 public:
  using Key = std::array<int, 4>;

  BiPoly() : d_(-1) {}
  explicit BiPoly(long long d) : d_(d) {}
  static BiPoly variable(long long d, int index);  // 0..3 in key order
  static BiPoly constant(const FieldElem& c);

  long long d() const { return d_; }
  const std::map<Key, FieldElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const FieldElem& c);

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly scaled(const FieldElem& c) const;
  BiPoly conj_coeffs() const;
  // Exchanges the variable pairs: u0<->v0, u1<->v1.
  BiPoly swap_factors() const;

  // Bidegree (deg in u, deg in v). Throws std::logic_error when the support
  // is not bihomogeneous or the polynomial is zero.
  std::array<int, 2> bidegree() const;

  FieldElem eval(const FieldElem& u0, const FieldElem& u1, const FieldElem& v0,
                 const FieldElem& v1) const;

  // Substitutes each variable by the given polynomial (map composition).
  BiPoly substitute(const BiPoly& u0, const BiPoly& u1, const BiPoly& v0,
                    const BiPoly& v1) const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  long long d_;
  std::map<Key, FieldElem> terms_;  // nonzero coefficients only
};

// Homogeneous polynomial in x, y, z.
class TriPoly {
 public:
  using Key = std::array<int, 3>;

  TriPoly() : d_(-1) {}
  explicit TriPoly(long long d) : d_(d) {}
  static TriPoly variable(long long d, int index);  // 0..2

  long long d() const { return d_; }
  const std::map<Key, FieldElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const FieldElem& c);

  TriPoly operator+(const TriPoly& o) const;
  TriPoly operator-(const TriPoly& o) const;
  TriPoly operator*(const TriPoly& o) const;
  TriPoly scaled(const FieldElem& c) const;

  int degree() const;  // total degree; throws std::logic_error when zero

  FieldElem eval(const FieldElem& x, const FieldElem& y, const FieldElem& z) const;
  TriPoly substitute(const TriPoly& x, const TriPoly& y, const TriPoly& z) const;

  friend bool operator==(const TriPoly&, const TriPoly&) = default;

 private:
  long long d_;
  std::map<Key, FieldElem> terms_;
};

// Dense univariate polynomial over Q, used by the quadric-pencil
// smoothness check.
using RatPoly = std::vector<Rat>;  // coefficient of t^i at index i

RatPoly ratpoly_mul(const RatPoly& a, const RatPoly& b);
RatPoly ratpoly_add(const RatPoly& a, const RatPoly& b);
RatPoly ratpoly_derivative(const RatPoly& a);
int ratpoly_degree(const RatPoly& a);  // -1 for the zero polynomial
// Monic gcd via exact Euclidean division.
RatPoly ratpoly_gcd(RatPoly a, RatPoly b);

}  // namespace dp4aut
