#include "dp4aut/picard.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace dp4aut {

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  if (basis != o.basis) throw BasisMismatch();
  DivisorClass r{basis, {}};
  for (int i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  return *this + (-o);
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass r{basis, {}};
  for (int i = 0; i < 6; ++i) r.c[i] = -c[i];
  return r;
}

DivisorClass DivisorClass::operator*(long long k) const {
  DivisorClass r{basis, {}};
  for (int i = 0; i < 6; ++i) r.c[i] = k * c[i];
  return r;
}

std::array<std::array<long long, 6>, 6> gram(Basis basis) {
  std::array<std::array<long long, 6>, 6> g{};
  if (basis == Basis::Quadric) {
    g[0][1] = g[1][0] = 1;
    for (int i = 2; i < 6; ++i) g[i][i] = -1;
  } else {
    g[0][0] = 1;
    for (int i = 1; i < 6; ++i) g[i][i] = -1;
  }
  return g;
}

long long intersect(const DivisorClass& a, const DivisorClass& b) {
  if (a.basis != b.basis) throw BasisMismatch();
  auto g = gram(a.basis);
  long long s = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) s += a.c[i] * g[i][j] * b.c[j];
  return s;
}

DivisorClass canonical_class(Basis basis) {
  if (basis == Basis::Quadric) return {basis, {-2, -2, 1, 1, 1, 1}};
  return {basis, {-3, 1, 1, 1, 1, 1}};
}

namespace {

// Exhaustive search box. For the classes under enumeration (D^2 >= -2,
// D.K in {-1, -2, 0}) every coefficient lies in [-3, 3]: the unit tests
// assert that widening the box adds nothing.
std::vector<DivisorClass> enumerate_classes(Basis basis, long long self,
                                            long long with_k, int bound) {
  DivisorClass k = canonical_class(basis);
  std::vector<DivisorClass> out;
  DivisorClass d{basis, {}};
  for (d.c[0] = -bound; d.c[0] <= bound; ++d.c[0])
    for (d.c[1] = -bound; d.c[1] <= bound; ++d.c[1])
      for (d.c[2] = -bound; d.c[2] <= bound; ++d.c[2])
        for (d.c[3] = -bound; d.c[3] <= bound; ++d.c[3])
          for (d.c[4] = -bound; d.c[4] <= bound; ++d.c[4])
            for (d.c[5] = -bound; d.c[5] <= bound; ++d.c[5])
              if (intersect(d, d) == self && intersect(d, k) == with_k)
                out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<DivisorClass> enumerate_lattice_classes(Basis basis, long long self,
                                                    long long with_k, int bound);

// Exposed for the box-widening property test.
std::vector<DivisorClass> enumerate_lattice_classes(Basis basis, long long self,
                                                    long long with_k, int bound) {
  return enumerate_classes(basis, self, with_k, bound);
}

std::vector<DivisorClass> enumerate_minus_one(Basis basis) {
  static const std::vector<DivisorClass> q = enumerate_classes(Basis::Quadric, -1, -1, 3);
  static const std::vector<DivisorClass> p = enumerate_classes(Basis::Plane, -1, -1, 3);
  return basis == Basis::Quadric ? q : p;
}

std::vector<DivisorClass> enumerate_conic_classes(Basis basis) {
  static const std::vector<DivisorClass> q = enumerate_classes(Basis::Quadric, 0, -2, 3);
  static const std::vector<DivisorClass> p = enumerate_classes(Basis::Plane, 0, -2, 3);
  return basis == Basis::Quadric ? q : p;
}

std::vector<ExceptionalPair> exceptional_pairs(Basis basis) {
  auto conics = enumerate_conic_classes(basis);
  DivisorClass mk = -canonical_class(basis);
  std::vector<ExceptionalPair> out;
  std::vector<bool> used(conics.size(), false);
  for (size_t i = 0; i < conics.size(); ++i) {
    if (used[i]) continue;
    DivisorClass partner = mk - conics[i];
    for (size_t j = i + 1; j < conics.size(); ++j) {
      if (!used[j] && conics[j] == partner) {
        used[i] = used[j] = true;
        out.push_back({static_cast<int>(out.size()) + 1, conics[i], conics[j]});
        break;
      }
    }
  }
  return out;
}

DivisorClass change_basis(const DivisorClass& c, Basis to) {
  if (c.basis == to) return c;
  if (c.basis == Basis::Quadric) {
    // f1 = L-E1, f2 = L-E2, e1 = L-E1-E2, e2 = E3, e3 = E4, e4 = E5.
    const auto& q = c.c;
    return {Basis::Plane,
            {q[0] + q[1] + q[2], -q[0] - q[2], -q[1] - q[2], q[3], q[4], q[5]}};
  }
  // L = f1+f2-e1, E1 = f2-e1, E2 = f1-e1, E3 = e2, E4 = e3, E5 = e4.
  const auto& p = c.c;
  return {Basis::Quadric,
          {p[0] + p[2], p[0] + p[1], -p[0] - p[1] - p[2], p[3], p[4], p[5]}};
}

namespace {

const char* kQuadricLabels[6] = {"f1", "f2", "e1", "e2", "e3", "e4"};
const char* kPlaneLabels[6] = {"L", "E1", "E2", "E3", "E4", "E5"};

const char* const* labels_for(Basis basis) {
  return basis == Basis::Quadric ? kQuadricLabels : kPlaneLabels;
}

}  // namespace

DivisorClass basis_vector(Basis basis, int i) {
  DivisorClass d{basis, {}};
  d.c[i] = 1;
  return d;
}

std::string format_class(const DivisorClass& cl) {
  const char* const* lab = labels_for(cl.basis);
  std::string out;
  for (int i = 0; i < 6; ++i) {
    long long v = cl.c[i];
    if (v == 0) continue;
    if (v > 0 && !out.empty()) out += "+";
    if (v == -1)
      out += "-";
    else if (v != 1)
      out += std::to_string(v);
    out += lab[i];
  }
  if (out.empty()) out = "0";
  return out;
}

DivisorClass parse_class(const std::string& text, Basis basis) {
  const char* const* lab = labels_for(basis);
  std::map<std::string, int> index;
  for (int i = 0; i < 6; ++i) index[lab[i]] = i;
  DivisorClass out{basis, {}};
  if (text == "0") return out;
  size_t i = 0;
  while (i < text.size()) {
    long long sign = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    }
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    long long mag = (i > start) ? std::stoll(text.substr(start, i - start)) : 1;
    size_t lab_start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
    std::string name = text.substr(lab_start, i - lab_start);
    auto it = index.find(name);
    if (it == index.end())
      throw std::invalid_argument("unknown basis label '" + name + "' in " + text);
    out.c[it->second] += sign * mag;
  }
  return out;
}

}  // namespace dp4aut
