#include "dp4aut/realforms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dp4aut {

std::string form_id_string(FormId id) {
  switch (id) {
    case FormId::Q31_40: return "q31-40";
    case FormId::Q31_21: return "q31-21";
    case FormId::Q31_02: return "q31-02";
    case FormId::Q22_40: return "q22-40";
    case FormId::Q22_02: return "q22-02";
  }
  throw std::logic_error("bad form id");
}

FormId form_id_from_string(const std::string& s) {
  for (FormId id : all_forms())
    if (form_id_string(id) == s) return id;
  throw std::invalid_argument("unknown form id: " + s);
}

std::vector<FormId> all_forms() {
  return {FormId::Q31_40, FormId::Q31_21, FormId::Q31_02, FormId::Q22_40,
          FormId::Q22_02};
}

namespace {

DivisorClass qc(long long a, long long b, long long c1, long long c2, long long c3,
                long long c4) {
  return {Basis::Quadric, {a, b, c1, c2, c3, c4}};
}

ExceptionalPair pair(int idx, DivisorClass a, DivisorClass b) { return {idx, a, b}; }

std::vector<ExceptionalPair> pair_list(FormId id) {
  DivisorClass p12a = qc(1, 1, -1, -1, 0, 0), p12b = qc(1, 1, 0, 0, -1, -1);
  DivisorClass p13a = qc(1, 1, -1, 0, -1, 0), p13b = qc(1, 1, 0, -1, 0, -1);
  DivisorClass p14a = qc(1, 1, -1, 0, 0, -1), p14b = qc(1, 1, 0, -1, -1, 0);
  DivisorClass pf1a = qc(1, 0, 0, 0, 0, 0), pf1b = qc(1, 2, -1, -1, -1, -1);
  DivisorClass pf2a = qc(0, 1, 0, 0, 0, 0), pf2b = qc(2, 1, -1, -1, -1, -1);
  if (id == FormId::Q22_02)
    return {pair(1, p12a, p12b), pair(2, pf1a, pf1b), pair(3, pf2a, pf2b),
            pair(4, p13a, p13b), pair(5, p14a, p14b)};
  return {pair(1, p12a, p12b), pair(2, p13a, p13b), pair(3, p14a, p14b),
          pair(4, pf1a, pf1b), pair(5, pf2a, pf2b)};
}

PicAut basis_permutation(const std::array<int, 6>& images) {
  PicAut m{Basis::Quadric, {}};
  for (int src = 0; src < 6; ++src) m.m[images[src]][src] = 1;
  return m;
}

FormSpec make_spec(FormId id) {
  FormSpec s;
  s.id = id;
  s.pairs = pair_list(id);
  switch (id) {
    case FormId::Q31_02:
      s.point_labels = {"Ep", "Epbar", "Eq", "Eqbar"};
      s.sigma = basis_permutation({1, 0, 3, 2, 5, 4});
      s.param_names = {"mu"};
      s.param_domain = "mu in C \\ {0, +1, -1}";
      break;
    case FormId::Q31_21:
      s.point_labels = {"Ep", "Eq", "Er", "Erbar"};
      s.sigma = basis_permutation({1, 0, 2, 3, 5, 4});
      s.param_names = {"mu"};
      s.param_domain = "mu in C \\ {0, +1, -1}";
      break;
    case FormId::Q31_40:
      s.point_labels = {"Ep", "Eq", "Er", "Es"};
      s.sigma = basis_permutation({1, 0, 2, 3, 4, 5});
      s.param_names = {"lambda"};
      s.param_domain = "lambda in C \\ R";
      break;
    case FormId::Q22_02:
      s.point_labels = {"Ep", "Epbar", "Eq", "Eqbar"};
      s.sigma = basis_permutation({0, 1, 3, 2, 5, 4});
      s.param_names = {"k1", "k2"};
      s.param_domain = "k1, k2 distinct rationals in ]0,1[";
      break;
    case FormId::Q22_40:
      s.point_labels = {"Ep", "Eq", "Er", "Es"};
      s.sigma = pic_identity(Basis::Quadric);
      s.param_names = {"mu1", "mu2"};
      s.param_domain = "mu1, mu2 in R \\ {0, 1}, surface smooth";
      break;
  }
  return s;
}

std::vector<std::array<int, 5>> a0_generators(FormId id) {
  switch (id) {
    case FormId::Q31_02:
    case FormId::Q31_40:
      return {{0, 1, 1, 0, 0}, {1, 0, 1, 0, 0}, {0, 0, 0, 1, 1}};
    case FormId::Q31_21:
      return {{0, 1, 1, 0, 0}, {0, 0, 0, 1, 1}};
    case FormId::Q22_02:
      return {{1, 0, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 1, 0, 1}, {0, 1, 1, 0, 0}};
    case FormId::Q22_40:
      return {{1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}};
  }
  throw std::logic_error("bad form id");
}

struct FormBounds {
  KernelBound kernel;
  std::vector<Perm5> image;
};

const FormBounds& bounds_for(FormId id) {
  static std::map<FormId, FormBounds> cache;
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;

  const FormSpec& spec = form_spec(id);
  const auto& w = generate_weyl(Basis::Quadric);
  auto cent = centralizer(spec.sigma, w);

  std::set<std::array<int, 5>> sigs;
  std::set<Perm5> perms;
  for (const auto& m : cent) {
    auto act = pair_action(m, spec.pairs);
    if (!act) throw std::logic_error("centralizer element does not preserve pairs");
    perms.insert(act->perm);
    if (perm_is_identity(act->perm)) sigs.insert(act->swaps);
  }

  // The case analysis' generators must span exactly the computed signature
  // set (xor closure in (Z/2)^5).
  std::set<std::array<int, 5>> span;
  span.insert({0, 0, 0, 0, 0});
  bool grew = true;
  auto gens = a0_generators(id);
  while (grew) {
    grew = false;
    for (auto v : span)
      for (const auto& g : gens) {
        std::array<int, 5> x{};
        for (int i = 0; i < 5; ++i) x[i] = v[i] ^ g[i];
        if (span.insert(x).second) grew = true;
      }
  }
  if (span != sigs)
    throw std::logic_error("stated A0 generators do not span the computed kernel bound for " +
                           form_id_string(id));

  FormBounds b;
  b.kernel.signatures.assign(sigs.begin(), sigs.end());
  b.kernel.generators = gens;
  b.image.assign(perms.begin(), perms.end());
  auto [pos, inserted] = cache.emplace(id, std::move(b));
  return pos->second;
}

}  // namespace

const FormSpec& form_spec(FormId id) {
  static std::map<FormId, FormSpec> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, make_spec(id)).first;
  return it->second;
}

KernelBound kernel_bound(FormId id) { return bounds_for(id).kernel; }

std::vector<Perm5> image_bound(FormId id) { return bounds_for(id).image; }

}  // namespace dp4aut
