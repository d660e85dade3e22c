#include "dp4aut/poly.hpp"

#include <stdexcept>

namespace dp4aut {

BiPoly BiPoly::variable(long long d, int index) {
  BiPoly p(d);
  Key k{};
  k[index] = 1;
  p.terms_[k] = FieldElem::rational(d, 1);
  return p;
}

BiPoly BiPoly::constant(const FieldElem& c) {
  BiPoly p(c.d());
  if (!c.is_zero()) p.terms_[Key{}] = c;
  return p;
}

void BiPoly::add_term(const Key& k, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_[k] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
  BiPoly r(d_);
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r(d_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]};
      r.add_term(k, ca * cb);
    }
  return r;
}

BiPoly BiPoly::scaled(const FieldElem& c) const {
  BiPoly r(d_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

BiPoly BiPoly::conj_coeffs() const {
  BiPoly r(d_);
  for (const auto& [k, v] : terms_) r.terms_[k] = v.conj();
  return r;
}

BiPoly BiPoly::swap_factors() const {
  BiPoly r(d_);
  for (const auto& [k, v] : terms_) r.terms_[Key{k[2], k[3], k[0], k[1]}] = v;
  return r;
}

std::array<int, 2> BiPoly::bidegree() const {
  if (terms_.empty()) throw std::logic_error("bidegree of the zero polynomial");
  auto it = terms_.begin();
  int du = it->first[0] + it->first[1];
  int dv = it->first[2] + it->first[3];
  for (const auto& [k, v] : terms_)
    if (k[0] + k[1] != du || k[2] + k[3] != dv)
      throw std::logic_error("support is not bihomogeneous");
  return {du, dv};
}

FieldElem BiPoly::eval(const FieldElem& u0, const FieldElem& u1, const FieldElem& v0,
                       const FieldElem& v1) const {
  FieldElem acc = FieldElem::rational(d_, 0);
  auto pw = [&](const FieldElem& x, int e) {
    FieldElem r = FieldElem::rational(d_, 1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
  };
  for (const auto& [k, c] : terms_)
    acc = acc + c * pw(u0, k[0]) * pw(u1, k[1]) * pw(v0, k[2]) * pw(v1, k[3]);
  return acc;
}

BiPoly BiPoly::substitute(const BiPoly& u0, const BiPoly& u1, const BiPoly& v0,
                          const BiPoly& v1) const {
  BiPoly acc(d_);
  auto pw = [&](const BiPoly& x, int e) {
    BiPoly r = BiPoly::constant(FieldElem::rational(d_, 1));
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
  };
  for (const auto& [k, c] : terms_) {
    BiPoly t = pw(u0, k[0]) * pw(u1, k[1]) * pw(v0, k[2]) * pw(v1, k[3]);
    acc = acc + t.scaled(c);
  }
  return acc;
}

TriPoly TriPoly::variable(long long d, int index) {
  TriPoly p(d);
  Key k{};
  k[index] = 1;
  p.terms_[k] = FieldElem::rational(d, 1);
  return p;
}

void TriPoly::add_term(const Key& k, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_[k] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TriPoly TriPoly::operator+(const TriPoly& o) const {
  TriPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

TriPoly TriPoly::operator-(const TriPoly& o) const {
  TriPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

TriPoly TriPoly::operator*(const TriPoly& o) const {
  TriPoly r(d_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(Key{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
  return r;
}

TriPoly TriPoly::scaled(const FieldElem& c) const {
  TriPoly r(d_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

int TriPoly::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  auto it = terms_.begin();
  int deg = it->first[0] + it->first[1] + it->first[2];
  for (const auto& [k, v] : terms_)
    if (k[0] + k[1] + k[2] != deg) throw std::logic_error("support is not homogeneous");
  return deg;
}

FieldElem TriPoly::eval(const FieldElem& x, const FieldElem& y, const FieldElem& z) const {
  FieldElem acc = FieldElem::rational(d_, 0);
  auto pw = [&](const FieldElem& b, int e) {
    FieldElem r = FieldElem::rational(d_, 1);
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
  };
  for (const auto& [k, c] : terms_) acc = acc + c * pw(x, k[0]) * pw(y, k[1]) * pw(z, k[2]);
  return acc;
}

TriPoly TriPoly::substitute(const TriPoly& x, const TriPoly& y, const TriPoly& z) const {
  TriPoly acc(d_);
  auto pw = [&](const TriPoly& b, int e) {
    TriPoly r(d_);
    r.add_term(Key{}, FieldElem::rational(d_, 1));
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
  };
  for (const auto& [k, c] : terms_) {
    TriPoly t = pw(x, k[0]) * pw(y, k[1]) * pw(z, k[2]);
    acc = acc + t.scaled(c);
  }
  return acc;
}

RatPoly ratpoly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

RatPoly ratpoly_add(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

RatPoly ratpoly_derivative(const RatPoly& a) {
  if (a.size() <= 1) return {};
  RatPoly r(a.size() - 1, Rat(0));
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = Rat(static_cast<long long>(i)) * a[i];
  return r;
}

int ratpoly_degree(const RatPoly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

namespace {

RatPoly trim(RatPoly a) {
  int d = ratpoly_degree(a);
  a.resize(d + 1);
  return a;
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
  int db = ratpoly_degree(b);
  while (ratpoly_degree(a) >= db && db >= 0) {
    int da = ratpoly_degree(a);
    Rat q = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    a = trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

RatPoly ratpoly_gcd(RatPoly a, RatPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    RatPoly r = remainder(a, b);
    a = std::move(b);
    b = trim(std::move(r));
  }
  if (!a.empty()) {
    Rat lead = a[ratpoly_degree(a)];
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace dp4aut
