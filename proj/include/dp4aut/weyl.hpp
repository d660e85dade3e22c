#pragma once

// Lattice automorphisms fixing K (the Weyl-type group of order 1920), the
// pair-action homomorphism onto Sym5, kernel signatures, and subgroup
// utilities.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dp4aut/perm.hpp"
#include "dp4aut/picard.hpp"
#include "dp4aut/rational.hpp"

namespace dp4aut {

// A 6x6 integer matrix acting on coefficient vectors by x -> M*x (columns
// are the images of the basis vectors).
struct PicAut {
  Basis basis = Basis::Quadric;
  std::array<std::array<long long, 6>, 6> m{};

  friend bool operator==(const PicAut&, const PicAut&) = default;
  friend auto operator<=>(const PicAut&, const PicAut&) = default;
};

PicAut pic_identity(Basis basis);
PicAut pic_mul(const PicAut& a, const PicAut& b);
DivisorClass pic_apply(const PicAut& m, const DivisorClass& x);

// Verdict of the lattice-automorphism test. A rational input matrix fails
// with reason "NonIntegral" before any lattice condition is examined.
struct AutVerdict {
  bool ok = false;
  std::string reason;  // empty when ok
};

using RatMatrix6 = std::array<std::array<Rat, 6>, 6>;

// True iff M is integral, preserves the intersection form (M^T G M = G),
// fixes K, and permutes the 16 exceptional classes.
AutVerdict is_lattice_automorphism(const RatMatrix6& m, Basis basis);
AutVerdict is_lattice_automorphism(const PicAut& m);

struct NotARoot : std::runtime_error {
  NotARoot() : std::runtime_error("reflection requires r^2 = -2 and r.K = 0") {}
};

// Reflection s_r(x) = x + (x.r) r in a root r (r^2 = -2, r.K = 0); an
// involutive lattice automorphism.
PicAut reflection(const DivisorClass& r);

// All 40 roots in the basis, sorted.
std::vector<DivisorClass> enumerate_roots(Basis basis);

// Closure of all root reflections under multiplication; 1920 elements in a
// deterministic canonical (sorted) order. The result is cached per basis.
const std::vector<PicAut>& generate_weyl(Basis basis);

// Permutation of the 5 exceptional pairs with member-swap bits: bit i is set
// when the first member of pair i maps to the second member of its image
// pair. Composition convention is the left action (g o h)(x) = g(h(x)).
struct PairAction {
  Perm5 perm{};
  std::array<int, 5> swaps{};

  friend bool operator==(const PairAction&, const PairAction&) = default;
};

// Empty when M does not map the pair set to itself.
std::optional<PairAction> pair_action(const PicAut& m,
                                      const std::vector<ExceptionalPair>& pairs);

struct NotInKernel : std::runtime_error {
  NotInKernel() : std::runtime_error("pair action has a nontrivial permutation part") {}
};

// The swaps vector of a kernel element; throws NotInKernel when the
// permutation part is not the identity.
std::array<int, 5> kernel_signature(const PicAut& m,
                                    const std::vector<ExceptionalPair>& pairs);

struct NotAMember : std::runtime_error {
  NotAMember() : std::runtime_error("element does not belong to the group") {}
};

// {h in group : h g = g h}; throws NotAMember when g is not in group.
std::vector<PicAut> centralizer(const PicAut& g, const std::vector<PicAut>& group);

}  // namespace dp4aut
