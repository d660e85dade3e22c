#include "dp4aut/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dp4aut {

Perm5 perm_identity() { return {0, 1, 2, 3, 4}; }

bool perm_is_identity(const Perm5& p) { return p == perm_identity(); }

Perm5 perm_compose(const Perm5& p, const Perm5& q) {
  Perm5 r{};
  for (int i = 0; i < 5; ++i) r[i] = p[q[i]];
  return r;
}

Perm5 perm_inverse(const Perm5& p) {
  Perm5 r{};
  for (int i = 0; i < 5; ++i) r[p[i]] = i;
  return r;
}

int perm_order(const Perm5& p) {
  Perm5 cur = p;
  int n = 1;
  while (!perm_is_identity(cur)) {
    cur = perm_compose(p, cur);
    ++n;
  }
  return n;
}

std::string perm_to_cycles(const Perm5& p) {
  std::string out;
  std::array<bool, 5> seen{};
  for (int i = 0; i < 5; ++i) {
    if (seen[i] || p[i] == i) continue;
    std::string cyc = "(";
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc += std::to_string(j + 1);
      j = p[j];
    }
    cyc += ")";
    out += cyc;
  }
  return out.empty() ? "id" : out;
}

Perm5 perm_from_cycles(const std::string& text) {
  Perm5 p = perm_identity();
  if (text == "id" || text.empty()) return p;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("bad cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    while (i < text.size() && text[i] != ')') {
      char c = text[i];
      if (c < '1' || c > '5') throw std::invalid_argument("bad cycle notation: " + text);
      cyc.push_back(c - '1');
      ++i;
    }
    if (i == text.size()) throw std::invalid_argument("unterminated cycle: " + text);
    ++i;  // skip ')'
    for (size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return p;
}

std::vector<Perm5> perm_closure(const std::vector<Perm5>& generators) {
  std::set<Perm5> seen;
  seen.insert(perm_identity());
  std::vector<Perm5> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm5> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Perm5 y = perm_compose(g, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::string identify_small_group(const std::vector<Perm5>& group) {
  size_t n = group.size();
  std::multiset<int> orders;
  for (const auto& g : group) orders.insert(perm_order(g));
  auto count = [&](int k) { return static_cast<int>(orders.count(k)); };
  switch (n) {
    case 1:
      return "trivial";
    case 2:
      return "Z2";
    case 3:
      return "Z3";
    case 4:
      return count(4) > 0 ? "Z4" : "Klein4";
    case 5:
      return "Z5";
    case 6:
      if (count(2) == 3 && count(3) == 2) return "Sym3";
      break;
    case 8:
      if (count(2) == 5 && count(4) == 2) return "D4";
      break;
    case 10:
      if (count(2) == 5 && count(5) == 4) return "D5";
      break;
    case 12:
      if (count(2) == 7 && count(3) == 2 && count(6) == 2) return "D6";
      break;
    case 120:
      return "Sym5";
    default:
      break;
  }
  return "other(" + std::to_string(n) + ")";
}

}  // namespace dp4aut
