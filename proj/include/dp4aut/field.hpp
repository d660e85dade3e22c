#pragma once

// Exact arithmetic in a quadratic field Q(sqrt(d)).
//
// A FieldElem stores a + b*sqrt(d) with exact rational a, b and the
// squarefree integer d (d != 0, d != 1). The Galois involution is
// conj(a + b*sqrt(d)) = a - b*sqrt(d); for d < 0 it models complex
// conjugation, for d > 0 every element is real and the involution is the
// nontrivial field automorphism.

#include <stdexcept>
#include <string>
#include <vector>

#include "dp4aut/rational.hpp"

namespace dp4aut {

struct FieldMismatch : std::runtime_error {
  FieldMismatch() : std::runtime_error("operands live in different quadratic fields") {}
};

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero field element") {}
};

class FieldElem {
 public:
  FieldElem() : d_(-1) {}
  FieldElem(long long d, Rat a, Rat b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
    check_d(d_);
  }
  static FieldElem rational(long long d, Rat a) { return FieldElem(d, std::move(a), 0); }
  static FieldElem sqrt_d(long long d) { return FieldElem(d, 0, 1); }

  long long d() const { return d_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // True when the element is a real number: always for d > 0, and exactly
  // when the sqrt part vanishes for d < 0.
  bool is_real() const { return d_ > 0 || b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  FieldElem conj() const { return FieldElem(d_, a_, -b_); }
  // norm(x) = x * conj(x) = a^2 - d*b^2, a rational number.
  Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }
  // trace(x) = x + conj(x) = 2a.
  Rat trace() const { return 2 * a_; }

  FieldElem operator-() const { return FieldElem(d_, -a_, -b_); }

  friend FieldElem operator+(const FieldElem& x, const FieldElem& y) {
    check_same(x, y);
    return FieldElem(x.d_, x.a_ + y.a_, x.b_ + y.b_);
  }
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y) {
    check_same(x, y);
    return FieldElem(x.d_, x.a_ - y.a_, x.b_ - y.b_);
  }
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
    check_same(x, y);
    return FieldElem(x.d_, x.a_ * y.a_ + Rat(x.d_) * x.b_ * y.b_,
                     x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y) {
    check_same(x, y);
    if (y.is_zero()) throw DivisionByZero();
    Rat n = y.norm();
    FieldElem t = x * y.conj();
    return FieldElem(x.d_, t.a_ / n, t.b_ / n);
  }

  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    check_same(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

  // Strict total order usable as a container key; not a numeric order.
  friend bool operator<(const FieldElem& x, const FieldElem& y) {
    if (x.d_ != y.d_) return x.d_ < y.d_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

 private:
  static void check_d(long long d) {
    if (d == 0 || d == 1)
      throw std::invalid_argument("field parameter d must be squarefree, not 0 or 1");
  }
  static void check_same(const FieldElem& x, const FieldElem& y) {
    if (x.d_ != y.d_) throw FieldMismatch();
  }

  long long d_;
  Rat a_;
  Rat b_;
};

// Grammar: "a" | "a/b" | "a/b+c/d*w" | "a/b-c/d*w" where w stands for
// sqrt(d); each rational admits the short form without "/denominator".
FieldElem parse_field_elem(const std::string& text, long long d);
std::string format_field_elem(const FieldElem& x);

// Named exact parameter conditions. Throws std::invalid_argument for an
// unknown name or a wrong parameter count.
//   unit_norm(x):    norm(x) = 1
//   is_real(x):      x real
//   trace2(x):       x + conj(x) = 2
//   omega6(x):       x^2 - x + 1 = 0
//   trace1(x):       x + conj(x) = 1
//   k_cond(k1,k2):   k1^2*k2 - 2*k1 + k2 = 0
//   mu_cond(m1,m2):  m1 + m2 - m1*m2 = 0
//   golden(m1,m2):   (m1,m2) = ((1-s)/2,(3-s)/2) or ((1+s)/2,(3+s)/2), s=sqrt(5)
//   sum1(m1,m2):     m1 + m2 = 1
bool predicate(const std::string& name, const std::vector<FieldElem>& params);

// True when x is rational and lies in the open interval ]0,1[. Non-rational
// elements are outside the normalized parameter domain and are rejected.
bool in_open_unit_interval(const FieldElem& x);

}  // namespace dp4aut
