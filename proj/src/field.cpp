#include "dp4aut/field.hpp"

#include <stdexcept>

namespace dp4aut {

namespace {

// Splits "a", "a+b*w", "a-b*w", "b*w" at the sign that separates the
// rational part from the sqrt part. The separating sign is the first + or -
// that is not at position 0.
FieldElem parse_impl(const std::string& text, long long d) {
  if (text.empty()) throw ParseError("empty field element");
  size_t split = std::string::npos;
  for (size_t i = 1; i < text.size(); ++i) {
    if (text[i] == '+' || text[i] == '-') {
      split = i;
      break;
    }
  }
  auto parse_w_part = [&](const std::string& s) -> Rat {
    // "c*w" | "c/d*w" | "w"
    if (s == "w") return Rat(1);
    auto star = s.find("*w");
    if (star == std::string::npos || star + 2 != s.size())
      throw ParseError("bad sqrt part: " + s);
    return parse_rat(s.substr(0, star));
  };
  if (split == std::string::npos) {
    if (text.find('w') != std::string::npos)
      return FieldElem(d, 0, parse_w_part(text));
    return FieldElem(d, parse_rat(text), 0);
  }
  std::string head = text.substr(0, split);
  std::string tail = text.substr(split + 1);
  Rat sign = (text[split] == '-') ? Rat(-1) : Rat(1);
  if (tail.find('w') == std::string::npos)
    throw ParseError("expected sqrt part after sign: " + text);
  return FieldElem(d, parse_rat(head), sign * parse_w_part(tail));
}

}  // namespace

FieldElem parse_field_elem(const std::string& text, long long d) {
  return parse_impl(text, d);
}

std::string format_field_elem(const FieldElem& x) {
  if (x.b() == 0) return format_rat(x.a());
  Rat ab = x.b() < 0 ? Rat(-x.b()) : x.b();
  std::string out = format_rat(x.a());
  out += (x.b() < 0) ? "-" : "+";
  out += format_rat(ab) + "*w";
  return out;
}

bool in_open_unit_interval(const FieldElem& x) {
  if (!x.is_rational()) return false;
  return x.a() > 0 && x.a() < 1;
}

bool predicate(const std::string& name, const std::vector<FieldElem>& params) {
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("predicate " + name + " expects " +
                                  std::to_string(n) + " parameter(s)");
  };
  if (name == "unit_norm") {
    need(1);
    return params[0].norm() == 1;
  }
  if (name == "is_real") {
    need(1);
    return params[0].is_real();
  }
  if (name == "trace2") {
    need(1);
    return params[0].trace() == 2;
  }
  if (name == "omega6") {
    need(1);
    const FieldElem& x = params[0];
    FieldElem one = FieldElem::rational(x.d(), 1);
    return (x * x - x + one).is_zero();
  }
  if (name == "trace1") {
    need(1);
    return params[0].trace() == 1;
  }
  if (name == "k_cond") {
    need(2);
    const FieldElem &k1 = params[0], &k2 = params[1];
    FieldElem two = FieldElem::rational(k1.d(), 2);
    return (k1 * k1 * k2 - two * k1 + k2).is_zero();
  }
  if (name == "mu_cond") {
    need(2);
    const FieldElem &m1 = params[0], &m2 = params[1];
    return (m1 + m2 - m1 * m2).is_zero();
  }
  if (name == "golden") {
    need(2);
    const FieldElem &m1 = params[0], &m2 = params[1];
    if (m1.d() != 5) return false;
    FieldElem s = FieldElem::sqrt_d(5);
    FieldElem one = FieldElem::rational(5, 1);
    FieldElem three = FieldElem::rational(5, 3);
    FieldElem two = FieldElem::rational(5, 2);
    FieldElem lo1 = (one - s) / two, lo2 = (three - s) / two;
    FieldElem hi1 = (one + s) / two, hi2 = (three + s) / two;
    return (m1 == lo1 && m2 == lo2) || (m1 == hi1 && m2 == hi2);
  }
  if (name == "sum1") {
    need(2);
    FieldElem one = FieldElem::rational(params[0].d(), 1);
    return params[0] + params[1] == one;
  }
  throw std::invalid_argument("unknown predicate: " + name);
}

}  // namespace dp4aut
