#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "dp4aut/fixtures.hpp"

using namespace dp4aut;

namespace {

FieldElem fe(long long d, const std::string& s) { return parse_field_elem(s, d); }

long long self_intersect(const DivisorClass& c) { return intersect(c, c); }

}  // namespace

TEST_SUITE("picard") {
  TEST_CASE("enumeration counts in both bases") {
    for (Basis basis : {Basis::Quadric, Basis::Plane}) {
      auto lines = enumerate_minus_one(basis);
      auto conics = enumerate_conic_classes(basis);
      auto pairs = exceptional_pairs(basis);
      CHECK(lines.size() == 16);
      CHECK(conics.size() == 10);
      CHECK(pairs.size() == 5);
      std::set<DivisorClass> from_pairs;
      for (const auto& p : pairs) {
        from_pairs.insert(p.first);
        from_pairs.insert(p.second);
        CHECK(p.first + p.second == -canonical_class(basis));
      }
      CHECK(from_pairs == std::set<DivisorClass>(conics.begin(), conics.end()));
    }
  }

  TEST_CASE("each minus-one class meets exactly five others") {
    for (Basis basis : {Basis::Quadric, Basis::Plane}) {
      auto lines = enumerate_minus_one(basis);
      for (const auto& d : lines) {
        int meets = 0;
        for (const auto& e : lines)
          if (!(d == e) && intersect(d, e) == 1) ++meets;
        CHECK(meets == 5);
      }
    }
  }

  TEST_CASE("intersection form basics") {
    for (Basis basis : {Basis::Quadric, Basis::Plane}) {
      DivisorClass k = canonical_class(basis);
      CHECK(intersect(k, k) == 4);
      for (const auto& d : enumerate_minus_one(basis)) {
        CHECK(self_intersect(d) == -1);
        CHECK(intersect(d, k) == -1);
      }
      for (const auto& c : enumerate_conic_classes(basis)) {
        CHECK(self_intersect(c) == 0);
        CHECK(intersect(c, k) == -2);
      }
    }
  }

  TEST_CASE("widening the enumeration box adds nothing") {
    // Brute force over a box strictly larger than any attainable coefficient.
    for (Basis basis : {Basis::Quadric, Basis::Plane}) {
      auto lines = enumerate_minus_one(basis);
      auto conics = enumerate_conic_classes(basis);
      int found_lines = 0, found_conics = 0;
      DivisorClass d;
      d.basis = basis;
      const int B = 4;
      for (d.c[0] = -B; d.c[0] <= B; ++d.c[0])
        for (d.c[1] = -B; d.c[1] <= B; ++d.c[1])
          for (d.c[2] = -B; d.c[2] <= B; ++d.c[2])
            for (d.c[3] = -B; d.c[3] <= B; ++d.c[3])
              for (d.c[4] = -B; d.c[4] <= B; ++d.c[4])
                for (d.c[5] = -B; d.c[5] <= B; ++d.c[5]) {
                  long long dd = self_intersect(d);
                  long long dk = intersect(d, canonical_class(basis));
                  if (dd == -1 && dk == -1) {
                    ++found_lines;
                    CHECK(std::binary_search(lines.begin(), lines.end(), d));
                  } else if (dd == 0 && dk == -2) {
                    ++found_conics;
                    CHECK(std::binary_search(conics.begin(), conics.end(), d));
                  }
                }
      CHECK(found_lines == 16);
      CHECK(found_conics == 10);
    }
  }

  TEST_CASE("change_basis is an intersection-preserving bijection") {
    auto lines_q = enumerate_minus_one(Basis::Quadric);
    auto lines_p = enumerate_minus_one(Basis::Plane);
    std::set<DivisorClass> image;
    for (const auto& d : lines_q) {
      DivisorClass t = change_basis(d, Basis::Plane);
      image.insert(t);
      CHECK(change_basis(t, Basis::Quadric) == d);
    }
    CHECK(image == std::set<DivisorClass>(lines_p.begin(), lines_p.end()));
    for (const auto& a : lines_q)
      for (const auto& b : lines_q)
        CHECK(intersect(a, b) ==
              intersect(change_basis(a, Basis::Plane), change_basis(b, Basis::Plane)));
    CHECK(change_basis(canonical_class(Basis::Quadric), Basis::Plane) ==
          canonical_class(Basis::Plane));
  }

  TEST_CASE("format and parse round trip") {
    for (Basis basis : {Basis::Quadric, Basis::Plane})
      for (const auto& d : enumerate_minus_one(basis))
        CHECK(parse_class(format_class(d), basis) == d);
    CHECK(format_class(canonical_class(Basis::Plane)) == "-3L+E1+E2+E3+E4+E5");
  }
}

TEST_SUITE("numfield") {
  TEST_CASE("parse and format round trip") {
    for (const char* s : {"2", "-1/3", "2+1*w", "3/5+4/5*w", "1/2-1/2*w", "0"}) {
      FieldElem x = fe(-1, s);
      CHECK(format_field_elem(x) == s);
    }
    CHECK(fe(-1, "w") == FieldElem::sqrt_d(-1));
    CHECK_THROWS(fe(-1, "0.5"));
    CHECK_THROWS(fe(-1, "2w"));
  }

  TEST_CASE("conjugation, norm, trace") {
    FieldElem x = fe(-1, "3/5+4/5*w");
    CHECK(x.norm() == 1);
    CHECK(x.trace() == Rat(6, 5));
    CHECK(x * x.conj() == FieldElem::rational(-1, x.norm()));
    FieldElem y = fe(-1, "2+1*w");
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(x / x == FieldElem::rational(-1, 1));
    CHECK_THROWS_AS(x / FieldElem::rational(-1, 0), DivisionByZero);
    CHECK_THROWS_AS(x + fe(5, "1"), FieldMismatch);
  }

  TEST_CASE("predicates") {
    CHECK(predicate("unit_norm", {fe(-1, "3/5+4/5*w")}));
    CHECK_FALSE(predicate("unit_norm", {fe(-1, "2+1*w")}));
    CHECK(predicate("is_real", {fe(-1, "2")}));
    CHECK(predicate("is_real", {fe(5, "1/2-1/2*w")}));
    CHECK_FALSE(predicate("is_real", {fe(-1, "1+1*w")}));
    CHECK(predicate("trace2", {fe(-1, "1+1*w")}));
    CHECK(predicate("omega6", {fe(-3, "1/2+1/2*w")}));
    CHECK_FALSE(predicate("omega6", {fe(-7, "1/2+1/2*w")}));
    CHECK(predicate("trace1", {fe(-7, "1/2+1/2*w")}));
    CHECK(predicate("trace1", {fe(-3, "1/2+1/2*w")}));
    CHECK(predicate("k_cond", {fe(-1, "1/2"), fe(-1, "4/5")}));
    CHECK_FALSE(predicate("k_cond", {fe(-1, "1/2"), fe(-1, "1/3")}));
    CHECK(predicate("mu_cond", {fe(5, "3"), fe(5, "3/2")}));
    CHECK(predicate("mu_cond", {fe(5, "1/2-1/2*w"), fe(5, "3/2-1/2*w")}));
    CHECK_FALSE(predicate("mu_cond", {fe(5, "2"), fe(5, "3")}));
    CHECK(predicate("golden", {fe(5, "1/2-1/2*w"), fe(5, "3/2-1/2*w")}));
    CHECK(predicate("golden", {fe(5, "1/2+1/2*w"), fe(5, "3/2+1/2*w")}));
    CHECK_FALSE(predicate("golden", {fe(5, "3"), fe(5, "3/2")}));
    CHECK(predicate("sum1", {fe(5, "1/3"), fe(5, "2/3")}));
    CHECK_THROWS(predicate("unknown", {fe(-1, "1")}));
    CHECK_THROWS(predicate("unit_norm", {}));
    CHECK(in_open_unit_interval(fe(-1, "1/2")));
    CHECK_FALSE(in_open_unit_interval(fe(-1, "1")));
    CHECK_FALSE(in_open_unit_interval(fe(5, "1/2+1/2*w")));
  }
}

TEST_SUITE("perm") {
  TEST_CASE("cycles round trip and composition") {
    Perm5 p = perm_from_cycles("(23)(45)");
    CHECK(perm_to_cycles(p) == "(23)(45)");
    CHECK(perm_order(p) == 2);
    CHECK(perm_to_cycles(perm_identity()) == "id");
    CHECK(perm_from_cycles("id") == perm_identity());
    Perm5 c5 = perm_from_cycles("(13245)");
    CHECK(perm_order(c5) == 5);
    CHECK(perm_compose(c5, perm_inverse(c5)) == perm_identity());
    // Left action: (p o q)(i) = p(q(i)).
    Perm5 a = perm_from_cycles("(12)");
    Perm5 b = perm_from_cycles("(23)");
    CHECK(perm_to_cycles(perm_compose(a, b)) == "(123)");
    CHECK_THROWS(perm_from_cycles("(16)"));
  }

  TEST_CASE("closure and small-group identification") {
    CHECK(identify_small_group(perm_closure({})) == "trivial");
    CHECK(identify_small_group(perm_closure({perm_from_cycles("(23)(45)")})) == "Z2");
    auto klein = perm_closure({perm_from_cycles("(23)"), perm_from_cycles("(45)")});
    CHECK(klein.size() == 4);
    CHECK(identify_small_group(klein) == "Klein4");
    auto sym3 = perm_closure({perm_from_cycles("(123)"), perm_from_cycles("(12)")});
    CHECK(sym3.size() == 6);
    CHECK(identify_small_group(sym3) == "Sym3");
    auto d5 = perm_closure({perm_from_cycles("(13245)"), perm_from_cycles("(12)(45)")});
    CHECK(d5.size() == 10);
    CHECK(identify_small_group(d5) == "D5");
    auto sym5 = perm_closure({perm_from_cycles("(12)"), perm_from_cycles("(12345)")});
    CHECK(sym5.size() == 120);
    CHECK(identify_small_group(sym5) == "Sym5");
  }
}

TEST_SUITE("weyl") {
  TEST_CASE("roots and reflections") {
    auto roots = enumerate_roots(Basis::Quadric);
    CHECK(roots.size() == 40);
    for (const auto& r : roots) {
      CHECK(self_intersect(r) == -2);
      CHECK(intersect(r, canonical_class(Basis::Quadric)) == 0);
      PicAut s = reflection(r);
      CHECK(pic_mul(s, s) == pic_identity(Basis::Quadric));
      CHECK(is_lattice_automorphism(s).ok);
    }
    CHECK_THROWS_AS(reflection(canonical_class(Basis::Quadric)), NotARoot);
  }

  TEST_CASE("group order, kernel, image") {
    const auto& w = generate_weyl(Basis::Quadric);
    CHECK(w.size() == 1920);
    auto pairs = exceptional_pairs(Basis::Quadric);
    std::set<Perm5> image;
    std::set<std::array<int, 5>> kernel;
    for (const auto& g : w) {
      auto act = pair_action(g, pairs);
      REQUIRE(act.has_value());
      image.insert(act->perm);
      if (perm_is_identity(act->perm)) kernel.insert(act->swaps);
    }
    CHECK(image.size() == 120);
    CHECK(kernel.size() == 16);
    for (const auto& sig : kernel) {
      int weight = 0;
      for (int b : sig) weight += b;
      CHECK(weight % 2 == 0);
    }
  }

  TEST_CASE("pair action is a homomorphism") {
    const auto& w = generate_weyl(Basis::Quadric);
    auto pairs = exceptional_pairs(Basis::Quadric);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<size_t> pick(0, w.size() - 1);
    for (int i = 0; i < 100; ++i) {
      const PicAut& a = w[pick(rng)];
      const PicAut& b = w[pick(rng)];
      auto pa = pair_action(a, pairs);
      auto pb = pair_action(b, pairs);
      auto pab = pair_action(pic_mul(a, b), pairs);
      CHECK(pab->perm == perm_compose(pa->perm, pb->perm));
    }
  }

  TEST_CASE("rational and non-isometric matrices are rejected") {
    RatMatrix6 half{};
    for (int i = 0; i < 6; ++i) half[i][i] = 1;
    half[0][0] = Rat(1, 2);
    AutVerdict v = is_lattice_automorphism(half, Basis::Quadric);
    CHECK_FALSE(v.ok);
    CHECK(v.reason == "NonIntegral");
    RatMatrix6 wrong{};
    for (int i = 0; i < 6; ++i) wrong[i][i] = 1;
    wrong[0][1] = 1;
    CHECK_FALSE(is_lattice_automorphism(wrong, Basis::Quadric).ok);
  }

  TEST_CASE("kernel signature rejects non-kernel elements") {
    auto pairs = exceptional_pairs(Basis::Quadric);
    // A reflection realizing a transposition of pairs is not in the kernel.
    for (const auto& g : generate_weyl(Basis::Quadric)) {
      auto act = pair_action(g, pairs);
      if (!perm_is_identity(act->perm)) {
        CHECK_THROWS_AS(kernel_signature(g, pairs), NotInKernel);
        break;
      }
    }
  }
}

TEST_SUITE("realforms") {
  TEST_CASE("sigma is an involutive lattice automorphism") {
    for (FormId form : all_forms()) {
      const FormSpec& spec = form_spec(form);
      CHECK(is_lattice_automorphism(spec.sigma).ok);
      CHECK(pic_mul(spec.sigma, spec.sigma) == pic_identity(spec.sigma.basis));
      CHECK(form_id_from_string(form_id_string(form)) == form);
    }
  }

  TEST_CASE("sigma pair actions") {
    auto act = [](FormId f) {
      const FormSpec& spec = form_spec(f);
      return *pair_action(spec.sigma, spec.pairs);
    };
    CHECK(perm_to_cycles(act(FormId::Q31_02).perm) == "(45)");
    CHECK(act(FormId::Q31_02).swaps == std::array<int, 5>{0, 1, 1, 0, 0});
    CHECK(perm_to_cycles(act(FormId::Q31_21).perm) == "(23)(45)");
    CHECK(perm_to_cycles(act(FormId::Q31_40).perm) == "(45)");
    CHECK(act(FormId::Q31_40).swaps == std::array<int, 5>{0, 0, 0, 0, 0});
    CHECK(perm_to_cycles(act(FormId::Q22_02).perm) == "id");
    CHECK(act(FormId::Q22_02).swaps == std::array<int, 5>{0, 0, 0, 1, 1});
    CHECK(perm_to_cycles(act(FormId::Q22_40).perm) == "id");
    CHECK(act(FormId::Q22_40).swaps == std::array<int, 5>{0, 0, 0, 0, 0});
  }

  TEST_CASE("kernel bounds") {
    auto order = [](FormId f) { return kernel_bound(f).signatures.size(); };
    CHECK(order(FormId::Q31_40) == 8);
    CHECK(order(FormId::Q31_21) == 4);
    CHECK(order(FormId::Q31_02) == 8);
    CHECK(order(FormId::Q22_02) == 16);
    CHECK(order(FormId::Q22_40) == 16);
    for (FormId form : all_forms()) {
      KernelBound kb = kernel_bound(form);
      // The generator vectors span exactly the signature set over GF(2).
      std::set<std::array<int, 5>> span{{0, 0, 0, 0, 0}};
      bool grew = true;
      while (grew) {
        grew = false;
        for (const auto& g : kb.generators)
          for (auto s : std::set<std::array<int, 5>>(span)) {
            for (int i = 0; i < 5; ++i) s[i] ^= g[i];
            if (span.insert(s).second) grew = true;
          }
      }
      CHECK(span == std::set<std::array<int, 5>>(kb.signatures.begin(),
                                                 kb.signatures.end()));
    }
  }

  TEST_CASE("image bounds") {
    auto klein = image_bound(FormId::Q31_02);
    std::set<std::string> names;
    for (const auto& p : klein) names.insert(perm_to_cycles(p));
    CHECK(names == std::set<std::string>{"id", "(23)", "(45)", "(23)(45)"});
    CHECK(identify_small_group(klein) == "Klein4");
    CHECK(image_bound(FormId::Q31_40).size() == 12);
    CHECK(image_bound(FormId::Q22_02).size() == 12);
    CHECK(identify_small_group(image_bound(FormId::Q31_21)) == "D4");
    CHECK(identify_small_group(image_bound(FormId::Q22_40)) == "Sym5");
  }
}

TEST_SUITE("birmaps") {
  TEST_CASE("polynomial arithmetic and evaluation") {
    BiPoly u0 = BiPoly::variable(-1, 0), u1 = BiPoly::variable(-1, 1);
    BiPoly v0 = BiPoly::variable(-1, 2), v1 = BiPoly::variable(-1, 3);
    BiPoly p = u0 * v1 - u1 * v0;
    CHECK(p.bidegree() == std::array<int, 2>{1, 1});
    FieldElem two = FieldElem::rational(-1, 2), three = FieldElem::rational(-1, 3);
    FieldElem one = FieldElem::rational(-1, 1);
    CHECK(p.eval(one, two, one, three) == one);
    CHECK(p.swap_factors() == -p);
    CHECK((p - p).is_zero());
    BiPoly q = p.substitute(v0, v1, u0, u1);
    CHECK(q == -p);
  }

  TEST_CASE("ratpoly gcd") {
    // (t-1)^2 (t+2) and its derivative share exactly (t-1).
    RatPoly f = ratpoly_mul(ratpoly_mul({-1, 1}, {-1, 1}), {2, 1});
    RatPoly g = ratpoly_gcd(f, ratpoly_derivative(f));
    CHECK(ratpoly_degree(g) == 1);
    CHECK(g == RatPoly{-1, 1});
    RatPoly sq = ratpoly_mul({-1, 1}, {2, 1});
    CHECK(ratpoly_degree(ratpoly_gcd(sq, ratpoly_derivative(sq))) == 0);
  }

  TEST_CASE("projective point equality") {
    FieldElem one = FieldElem::rational(-1, 1), two = FieldElem::rational(-1, 2);
    CHECK(proj_equal(make_p1(one, two), make_p1(two, two + two)));
    CHECK_FALSE(proj_equal(make_p1(one, two), make_p1(two, one)));
    CHECK_FALSE(make_p1(one - one, two - two).is_valid());
  }

  TEST_CASE("identity and composition") {
    long long d = -1;
    BidegMap ident{BiPoly::variable(d, 0), BiPoly::variable(d, 1),
                   BiPoly::variable(d, 2), BiPoly::variable(d, 3)};
    CHECK(is_identity_as_rational_map(ident));
    ParamMap params{{"mu", fe(-1, "2+1*w")}};
    BidegMap phi3 = builtin_map("phi3", FormId::Q31_02, params);
    CHECK_FALSE(is_identity_as_rational_map(phi3));
    CHECK(is_identity_as_rational_map(iterate_map(phi3, 2)));
    CHECK(same_rational_map(compose(phi3, phi3), ident));
    CHECK(commutes_with_real_structure(phi3, FormId::Q31_02));
    // Scaling one coordinate of a pair changes the rational map.
    BidegMap broken = phi3;
    broken.a0 = broken.a0.scaled(FieldElem::rational(d, 2));
    CHECK_FALSE(same_rational_map(broken, phi3));
    CHECK_FALSE(is_identity_as_rational_map(iterate_map(broken, 2)));
  }

  TEST_CASE("point validation flags degenerate sets") {
    ParamMap params{{"mu", fe(-1, "2+1*w")}};
    auto pts = normalized_points(FormId::Q31_02, params);
    std::vector<QuadricPoint> good;
    for (const auto& name : point_names(FormId::Q31_02)) good.push_back(pts.at(name));
    CHECK(validate_points(FormId::Q31_02, good).empty());
    auto dup = good;
    dup[2] = dup[0];
    auto violations = validate_points(FormId::Q31_02, dup);
    CHECK_FALSE(violations.empty());
  }

  TEST_CASE("moebius solver dichotomies follow the predicates") {
    auto feasible = [](FormId form, long long d, const ParamMap& params,
                       bool swap, Realness realness,
                       std::vector<std::pair<std::string, std::string>> arrows) {
      auto pts = normalized_points(form, params);
      std::vector<MoebiusConstraint> cons;
      for (const auto& [s, t] : arrows) cons.push_back({pts.at(s), pts.at(t)});
      return solve_moebius_pair(cons, swap, realness, d).status ==
             MoebiusResult::Status::Solved;
    };
    std::vector<std::pair<std::string, std::string>> three_cycle = {
        {"p", "p"}, {"q", "r"}, {"r", "s"}, {"s", "q"}};
    std::vector<std::pair<std::string, std::string>> fix_ps = {
        {"p", "p"}, {"s", "s"}, {"q", "r"}, {"r", "q"}};
    std::vector<std::pair<std::string, std::string>> fix_pr = {
        {"p", "p"}, {"r", "r"}, {"q", "s"}, {"s", "q"}};
    ParamMap om{{"lambda", fe(-3, "1/2+1/2*w")}};
    ParamMap tr{{"lambda", fe(-7, "1/2+1/2*w")}};
    CHECK(feasible(FormId::Q31_40, -3, om, false, Realness::BEqualsConjA, three_cycle));
    CHECK_FALSE(
        feasible(FormId::Q31_40, -7, tr, false, Realness::BEqualsConjA, three_cycle));
    CHECK(feasible(FormId::Q31_40, -3, om, true, Realness::BEqualsConjA, fix_ps));
    CHECK(feasible(FormId::Q31_40, -7, tr, true, Realness::BEqualsConjA, fix_ps));
    ParamMap mc{{"mu1", fe(5, "3")}, {"mu2", fe(5, "3/2")}};
    ParamMap no{{"mu1", fe(5, "2")}, {"mu2", fe(5, "3")}};
    ParamMap s1{{"mu1", fe(5, "1/3")}, {"mu2", fe(5, "2/3")}};
    CHECK(feasible(FormId::Q22_40, 5, mc, true, Realness::BothReal, fix_ps));
    CHECK_FALSE(feasible(FormId::Q22_40, 5, no, true, Realness::BothReal, fix_ps));
    CHECK(feasible(FormId::Q22_40, 5, s1, true, Realness::BothReal, fix_pr));
    CHECK_FALSE(feasible(FormId::Q22_40, 5, no, true, Realness::BothReal, fix_pr));
  }
}

TEST_SUITE("builtins") {
  TEST_CASE("normalized points satisfy the lemma constraints") {
    struct Sample {
      FormId form;
      long long d;
      ParamMap params;
    };
    std::vector<Sample> samples = {
        {FormId::Q31_02, -1, {{"mu", fe(-1, "2+1*w")}}},
        {FormId::Q31_21, -1, {{"mu", fe(-1, "2")}}},
        {FormId::Q31_40, -3, {{"lambda", fe(-3, "1/2+1/2*w")}}},
        {FormId::Q22_02, -1, {{"k1", fe(-1, "1/2")}, {"k2", fe(-1, "4/5")}}},
        {FormId::Q22_40, 5, {{"mu1", fe(5, "3")}, {"mu2", fe(5, "3/2")}}},
    };
    for (const auto& s : samples) {
      auto pts = normalized_points(s.form, s.params);
      CHECK(pts.size() == 4);
      std::vector<QuadricPoint> ordered;
      for (const auto& name : point_names(s.form)) ordered.push_back(pts.at(name));
      CHECK(validate_points(s.form, ordered).empty());
    }
  }

  TEST_CASE("parameter domains are enforced") {
    CHECK_THROWS_AS(normalized_points(FormId::Q31_02, {{"mu", fe(-1, "1")}}),
                    InvalidParameters);
    CHECK_THROWS_AS(normalized_points(FormId::Q31_02, {{"mu", fe(5, "2")}}),
                    InvalidParameters);
    CHECK_THROWS_AS(normalized_points(FormId::Q22_02,
                                      {{"k1", fe(-1, "1/2")}, {"k2", fe(-1, "1/2")}}),
                    InvalidParameters);
    CHECK_THROWS_AS(
        builtin_map("psi", FormId::Q31_21, {{"mu", fe(-1, "2")}}),
        InvalidParameters);
    CHECK_THROWS_AS(
        builtin_map("phi_1245", FormId::Q22_02,
                    {{"k1", fe(-1, "1/2")}, {"k2", fe(-1, "1/3")}}),
        InvalidParameters);
    CHECK_THROWS_AS(
        builtin_map("psi1", FormId::Q22_40,
                    {{"mu1", fe(5, "3")}, {"mu2", fe(5, "3/2")}}),
        InvalidParameters);
  }

  TEST_CASE("map name lists") {
    CHECK(builtin_map_names(FormId::Q31_02) ==
          std::vector<std::string>{"alpha1", "alpha2", "phi3"});
    CHECK(builtin_map_names(FormId::Q22_40) ==
          std::vector<std::string>{"betaprime", "alphaprime_1345", "psi1", "psi2"});
    CHECK_THROWS(builtin_map("nonsense", FormId::Q31_02, {{"mu", fe(-1, "2+1*w")}}));
  }

  TEST_CASE("plane quadratic involution") {
    auto q = builtin_lambda_quadratic(FieldElem::rational(5, 2),
                                      FieldElem::rational(5, 3),
                                      FieldElem::rational(5, 5));
    auto rep = plane_map_checks(q.map, q.base_points, q.p4, q.p5, q.matrix);
    CHECK(rep.base_points_ok);
    CHECK(rep.swap_ok);
    CHECK(rep.involution_ok);
    CHECK(rep.matrix_ok);
  }
}

TEST_SUITE("classifier") {
  TEST_CASE("classify_by_conditions is deterministic") {
    Scenario s{FormId::Q22_02, -1, {{"k1", fe(-1, "1/2")}, {"k2", fe(-1, "4/5")}}};
    auto r1 = classify_by_conditions(s);
    auto r2 = classify_by_conditions(s);
    CHECK(r1.a0_generators == r2.a0_generators);
    CHECK(r1.aprime_group == r2.aprime_group);
    CHECK(r1.aprime_name == r2.aprime_name);
    CHECK(r1.aprime_name == "Z2");
    CHECK(perm_to_cycles(r1.aprime_generators.at(0)) == "(12)(45)");
  }

  TEST_CASE("invalid scenarios are rejected") {
    Scenario s{FormId::Q31_02, -1, {{"mu", fe(5, "2")}}};
    CHECK_THROWS_AS(validate_scenario(s), InvalidParameters);
    Scenario real_mu{FormId::Q31_02, -1, {{"mu", fe(-1, "2")}}};
    CHECK_THROWS_AS(validate_scenario(real_mu), InvalidParameters);
  }

  TEST_CASE("quadric model") {
    QuadricModel m = emit_quadric_model(fe(-1, "2+1*w"));
    CHECK(ratpoly_degree(m.pencil_det) == 4);
    CHECK(m.pencil_det.at(0) == 0);  // det(M1) = 0: Q1 omits x5
    CHECK(m.squarefree);
    QuadricModel m2 = emit_quadric_model(fe(-1, "3/5+4/5*w"));
    CHECK(m2.squarefree);
    CHECK_THROWS_AS(emit_quadric_model(fe(-1, "2")), InvalidParameters);
  }
}

TEST_SUITE("fixtures") {
  TEST_CASE("matrix fixture file parses with unique tags") {
    auto fixtures = load_matrix_fixtures(default_fixtures_dir() + "/matrices.txt");
    CHECK(fixtures.size() == 39);
    std::set<std::string> tags;
    for (const auto& f : fixtures) tags.insert(f.tag);
    CHECK(tags.size() == fixtures.size());
  }

  TEST_CASE("map fixtures round trip byte-identically") {
    namespace fs = std::filesystem;
    std::string dir = default_fixtures_dir() + "/maps";
    REQUIRE(fs::is_directory(dir));
    int count = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() != ".json") continue;
      ++count;
      MapFixture f = load_map_fixture(entry.path().string());
      std::string tmp =
          (fs::temp_directory_path() / entry.path().filename()).string();
      write_map_fixture(f, tmp);
      std::ifstream a(entry.path()), b(tmp);
      std::stringstream sa, sb;
      sa << a.rdbuf();
      sb << b.rdbuf();
      CHECK(sa.str() == sb.str());
      fs::remove(tmp);
    }
    CHECK(count == 18);
  }
}
