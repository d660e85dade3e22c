#pragma once

// The rank-6 Picard lattice of a degree-4 del Pezzo surface, in two bases.
//
// QUADRIC basis (f1, f2, e1..e4): f1.f2 = 1, f1^2 = f2^2 = 0,
//   ei.ej = -delta_ij, f.e = 0. Canonical class K = (-2,-2,1,1,1,1).
// PLANE basis (L, E1..E5): L^2 = 1, Ei.Ej = -delta_ij, L.E = 0.
//   Canonical class K = (-3,1,1,1,1,1).

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp4aut {

enum class Basis { Quadric, Plane };

struct BasisMismatch : std::runtime_error {
  BasisMismatch() : std::runtime_error("divisor classes live in different bases") {}
};

struct DivisorClass {
  Basis basis = Basis::Quadric;
  std::array<long long, 6> c{};

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;
  DivisorClass operator*(long long k) const;
};

struct ExceptionalPair {
  int index = 0;  // 1..5
  DivisorClass first;
  DivisorClass second;
};

// Gram matrix of the intersection form in the given basis.
std::array<std::array<long long, 6>, 6> gram(Basis basis);

// Symmetric bilinear intersection number. Throws BasisMismatch.
long long intersect(const DivisorClass& a, const DivisorClass& b);

// The canonical class K (not -K); K.K = 4.
DivisorClass canonical_class(Basis basis);

// All 16 classes D with D^2 = -1 and D.K = -1, sorted.
std::vector<DivisorClass> enumerate_minus_one(Basis basis);

// All 10 classes C with C^2 = 0 and C.K = -2, sorted.
std::vector<DivisorClass> enumerate_conic_classes(Basis basis);

// The 5 exceptional pairs {A, B} with A + B = -K, partitioning the conic
// classes. Ordering and member order are basis-canonical here; the per-form
// orderings used by the classification live in realforms.
std::vector<ExceptionalPair> exceptional_pairs(Basis basis);

// Linear isometry between the bases, determined by
//   f1 = L - E1, f2 = L - E2, e1 = L - E1 - E2, e2 = E3, e3 = E4, e4 = E5.
// Returns the input unchanged when it already carries the target tag.
DivisorClass change_basis(const DivisorClass& c, Basis to);

// Text rendering as a signed label combination, e.g. "f1+f2-e1-e3" or
// "2L-E1-E2-E3-E4-E5". Exact round trip with parse_class.
std::string format_class(const DivisorClass& c);
DivisorClass parse_class(const std::string& text, Basis basis);

// Basis element accessors (QUADRIC order f1,f2,e1..e4; PLANE order L,E1..E5).
DivisorClass basis_vector(Basis basis, int i);

}  // namespace dp4aut
