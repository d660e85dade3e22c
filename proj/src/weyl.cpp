#include "dp4aut/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dp4aut {

PicAut pic_identity(Basis basis) {
  PicAut m{basis, {}};
  for (int i = 0; i < 6; ++i) m.m[i][i] = 1;
  return m;
}

PicAut pic_mul(const PicAut& a, const PicAut& b) {
  if (a.basis != b.basis) throw BasisMismatch();
  PicAut r{a.basis, {}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      long long s = 0;
      for (int k = 0; k < 6; ++k) s += a.m[i][k] * b.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

DivisorClass pic_apply(const PicAut& m, const DivisorClass& x) {
  if (m.basis != x.basis) throw BasisMismatch();
  DivisorClass r{x.basis, {}};
  for (int i = 0; i < 6; ++i) {
    long long s = 0;
    for (int j = 0; j < 6; ++j) s += m.m[i][j] * x.c[j];
    r.c[i] = s;
  }
  return r;
}

namespace {

bool permutes_exceptionals(const PicAut& m) {
  auto lines = enumerate_minus_one(m.basis);
  std::set<DivisorClass> all(lines.begin(), lines.end());
  for (const auto& d : lines)
    if (!all.count(pic_apply(m, d))) return false;
  return true;
}

}  // namespace

AutVerdict is_lattice_automorphism(const RatMatrix6& m, Basis basis) {
  PicAut p{basis, {}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (denominator(m[i][j]) != 1) return {false, "NonIntegral"};
      p.m[i][j] = static_cast<long long>(numerator(m[i][j]));
    }
  return is_lattice_automorphism(p);
}

AutVerdict is_lattice_automorphism(const PicAut& m) {
  auto g = gram(m.basis);
  // M^T G M = G, entrywise.
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      long long s = 0;
      for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 6; ++l) s += m.m[k][i] * g[k][l] * m.m[l][j];
      if (s != g[i][j]) return {false, "FormNotPreserved"};
    }
  DivisorClass k = canonical_class(m.basis);
  if (pic_apply(m, k) != k) return {false, "KNotFixed"};
  if (!permutes_exceptionals(m)) return {false, "ExceptionalsNotPermuted"};
  return {true, ""};
}

std::vector<DivisorClass> enumerate_roots(Basis basis) {
  // Same bounded box as the other enumerations; 40 roots result.
  DivisorClass k = canonical_class(basis);
  std::vector<DivisorClass> out;
  DivisorClass d{basis, {}};
  for (d.c[0] = -3; d.c[0] <= 3; ++d.c[0])
    for (d.c[1] = -3; d.c[1] <= 3; ++d.c[1])
      for (d.c[2] = -3; d.c[2] <= 3; ++d.c[2])
        for (d.c[3] = -3; d.c[3] <= 3; ++d.c[3])
          for (d.c[4] = -3; d.c[4] <= 3; ++d.c[4])
            for (d.c[5] = -3; d.c[5] <= 3; ++d.c[5])
              if (intersect(d, d) == -2 && intersect(d, k) == 0) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

PicAut reflection(const DivisorClass& r) {
  if (intersect(r, r) != -2 || intersect(r, canonical_class(r.basis)) != 0)
    throw NotARoot();
  PicAut m{r.basis, {}};
  for (int j = 0; j < 6; ++j) {
    DivisorClass ej = basis_vector(r.basis, j);
    DivisorClass img = ej + r * intersect(ej, r);
    for (int i = 0; i < 6; ++i) m.m[i][j] = img.c[i];
  }
  return m;
}

const std::vector<PicAut>& generate_weyl(Basis basis) {
  static std::map<Basis, std::vector<PicAut>> cache;
  auto it = cache.find(basis);
  if (it != cache.end()) return it->second;

  std::vector<PicAut> gens;
  for (const auto& r : enumerate_roots(basis)) gens.push_back(reflection(r));
  std::set<PicAut> seen;
  seen.insert(pic_identity(basis));
  std::vector<PicAut> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<PicAut> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        PicAut y = pic_mul(g, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  auto [pos, inserted] = cache.emplace(basis, std::vector<PicAut>(seen.begin(), seen.end()));
  return pos->second;
}

std::optional<PairAction> pair_action(const PicAut& m,
                                      const std::vector<ExceptionalPair>& pairs) {
  PairAction act;
  for (size_t i = 0; i < pairs.size(); ++i) {
    DivisorClass ia = pic_apply(m, pairs[i].first);
    DivisorClass ib = pic_apply(m, pairs[i].second);
    bool found = false;
    for (size_t j = 0; j < pairs.size(); ++j) {
      if (ia == pairs[j].first && ib == pairs[j].second) {
        act.perm[i] = static_cast<int>(j);
        act.swaps[i] = 0;
        found = true;
        break;
      }
      if (ia == pairs[j].second && ib == pairs[j].first) {
        act.perm[i] = static_cast<int>(j);
        act.swaps[i] = 1;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return act;
}

std::array<int, 5> kernel_signature(const PicAut& m,
                                    const std::vector<ExceptionalPair>& pairs) {
  auto act = pair_action(m, pairs);
  if (!act || !perm_is_identity(act->perm)) throw NotInKernel();
  return act->swaps;
}

std::vector<PicAut> centralizer(const PicAut& g, const std::vector<PicAut>& group) {
  if (std::find(group.begin(), group.end(), g) == group.end()) throw NotAMember();
  std::vector<PicAut> out;
  for (const auto& h : group)
    if (pic_mul(h, g) == pic_mul(g, h)) out.push_back(h);
  return out;
}

}  // namespace dp4aut
