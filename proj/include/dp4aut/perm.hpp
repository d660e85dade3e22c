#pragma once

// Permutations of 5 symbols and small-subgroup machinery for Sym5.

#include <array>
#include <string>
#include <vector>

namespace dp4aut {

// Images in 0-based form: p[i] is the image of i.
using Perm5 = std::array<int, 5>;

Perm5 perm_identity();
bool perm_is_identity(const Perm5& p);
// Left-action composition: (compose(p, q))(i) = p(q(i)).
Perm5 perm_compose(const Perm5& p, const Perm5& q);
Perm5 perm_inverse(const Perm5& p);
int perm_order(const Perm5& p);

// Cycle notation on symbols 1..5, e.g. "(23)(45)"; identity renders as "id".
std::string perm_to_cycles(const Perm5& p);
// Parses the same notation. Throws std::invalid_argument on malformed input.
Perm5 perm_from_cycles(const std::string& text);

// Subgroup generated by the given elements, sorted; {identity} for no
// generators.
std::vector<Perm5> perm_closure(const std::vector<Perm5>& generators);

// Identifies a subgroup of Sym5 by its (order, element-order multiset)
// fingerprint. Returns one of trivial, Z2, Z3, Z4, Z5, Klein4, Sym3, D4, D5,
// D6, Sym5, or "other(n)".
std::string identify_small_group(const std::vector<Perm5>& group);

}  // namespace dp4aut
