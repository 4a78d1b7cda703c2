#include "doctest.h"
#include "legendrian/corpus.hpp"
#include "legendrian/errors.hpp"
#include "legendrian/invariants.hpp"
#include "legendrian/moves.hpp"
#include "oracles.hpp"

using namespace legendrian;

namespace {

const char* kTrefoil = "L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1";

std::vector<std::vector<int>> as_ints(const std::vector<Augmentation>& augs) {
  std::vector<std::vector<int>> out;
  for (const auto& a : augs) out.emplace_back(a.values.begin(), a.values.end());
  return out;
}

LaurentPoly lam(int e, long long c = 1) { return LaurentPoly::monomial(e, c); }

// Knot DGAs of random fronts, each with at least one graded augmentation.
std::vector<DGA> random_knot_dgas(int count) {
  std::vector<DGA> out;
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < count && seed < 5000; ++seed) {
    const FrontDiagram f = random_front(seed, 12);
    if (trace_components(f).num_components() != 1) continue;
    DGA p = compute_dga(f);
    if (find_augmentations(p).empty()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("trefoil augmentations and first-order polynomials") {
    const DGA p = compute_dga(load_front(kTrefoil));
    const auto augs = find_augmentations(p);
    CHECK(augs.size() == 5);
    CHECK(as_ints(augs) == oracle::augmentations(p));
    for (const auto& e : augs) {
      CHECK(poincare_polynomial(p, e, 1) == lam(1) + lam(0, 2));
      CHECK(poincare_polynomial(p, e, 2) == lam(2) + lam(1, 4) + lam(0, 5));
      CHECK(is_augmentation(p, e));
    }
    CHECK(polynomial_set(p, 1) == std::vector<LaurentPoly>{lam(1) + lam(0, 2)});
  }

  TEST_CASE("unknot polynomials") {
    const DGA p = compute_dga(load_front("L 1\nR 1"));
    const auto augs = find_augmentations(p);
    REQUIRE(augs.size() == 1);
    CHECK(poincare_polynomial(p, augs[0], 1) == lam(1));
    CHECK(poincare_polynomial(p, augs[0], 2) == lam(2) + lam(1));
    CHECK(second_order_via_lemmas(p, augs[0]) == lam(2) + lam(1));
  }

  TEST_CASE("augmentation search agrees with brute force and with the serial search") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
      const DGA p = compute_dga(random_front(seed, 12));
      INFO("seed " << seed);
      for (bool graded : {true, false}) {
        AugmentationSearch opt;
        opt.graded = graded;
        const auto par = find_augmentations(p, opt);
        CHECK(par == find_augmentations_serial(p, opt));
        if (graded || p.size() <= 16) CHECK(as_ints(par) == oracle::augmentations(p, graded));
        for (const auto& e : par) CHECK(is_augmentation(p, e, graded));
      }
    }
  }

  TEST_CASE("node cap raises BoundExceeded") {
    const DGA p = stabilize(compute_dga(load_front(kTrefoil)), 0, 3);
    AugmentationSearch opt;
    opt.node_cap = 4;
    CHECK_THROWS_AS(find_augmentations(p, opt), BoundExceeded);
    CHECK_THROWS_AS(find_augmentations_serial(p, opt), BoundExceeded);
  }

  TEST_CASE("linearized polynomials agree with dense rank computation") {
    for (const DGA& p : random_knot_dgas(40)) {
      for (const auto& e : find_augmentations(p)) {
        const std::vector<int> ev(e.values.begin(), e.values.end());
        CHECK(poincare_polynomial(p, e, 1) == oracle::poincare(p, ev, 1));
        if (p.size() <= 14) {
          CHECK(poincare_polynomial(p, e, 2) == oracle::poincare(p, ev, 2));
          CHECK(linearize(p, e, 2).squares_to_zero());
        }
      }
    }
  }

  TEST_CASE("first-order polynomial evaluates to the generator count parity") {
    // P(1) = dim homology = n - 2 rank, so P(1) and n agree mod 2; P(-1) is
    // the Euler characteristic, which equals tb for knots.
    for (const DGA& p : random_knot_dgas(20))
      for (const auto& e : find_augmentations(p)) {
        const LaurentPoly q = poincare_polynomial(p, e, 1);
        CHECK((q.at_one() - p.size()) % 2 == 0);
        long long chi = 0, chi_gens = 0;
        for (const auto& [x, c] : q.coefficients()) chi += (x % 2 == 0 ? c : -c);
        for (const auto& g : p.gens) chi_gens += (g.degree % 2 == 0 ? 1 : -1);
        CHECK(chi == chi_gens);
      }
  }

  TEST_CASE("truncated shift equals full substitution then truncation") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const DGA q = mod2(compute_dga(random_front(seed, 12)));
      for (const auto& e : find_augmentations(q, {false, std::uint64_t{1} << 24, true})) {
        const auto full = shifted_differential(q, e);
        for (int len : {1, 2}) {
          const auto cut = shifted_differential(q, e, len);
          for (int i = 0; i < q.size(); ++i) {
            AlgebraElement want(q.mode);
            for (const auto& [term, c] : full[i].terms())
              if (static_cast<int>(term.word.size()) <= len) want.add_term(term.word, term.t, c);
            CHECK(cut[i] == want);
          }
        }
      }
    }
  }

  TEST_CASE("second order: standard-form route equals direct quotient") {
    int compared = 0;
    for (const DGA& p : random_knot_dgas(50)) {
      for (const auto& e : find_augmentations(p)) {
        CHECK(second_order_via_lemmas(p, e) == poincare_polynomial(p, e, 2));
        ++compared;
      }
    }
    CHECK(compared >= 50);
  }

  TEST_CASE("standard form has the normalized linear part") {
    for (const DGA& p : random_knot_dgas(20)) {
      const Augmentation e = find_augmentations(p).front();
      const StandardForm sf = standard_form(p, e);
      CHECK(sf.a.size() == sf.b.size());
      CHECK(sf.a.size() * 2 + sf.c.size() == static_cast<std::size_t>(p.size()));
      const auto lin = shifted_differential(sf.dga, Augmentation{std::vector<std::uint8_t>(p.size(), 0)}, 1);
      for (std::size_t k = 0; k < sf.a.size(); ++k)
        CHECK(lin[sf.a[k]] == AlgebraElement::gen(sf.dga.mode, sf.b[k]));
      for (int b : sf.b) CHECK(lin[b].is_zero());
      for (int c : sf.c) CHECK(lin[c].is_zero());
    }
  }

  TEST_CASE("stabilization keeps polynomial sets") {
    const DGA t = compute_dga(load_front(kTrefoil));
    for (int d = -2; d <= 3; ++d) {
      const DGA s = stabilize(t, d);
      CHECK(polynomial_set(s, 1) == polynomial_set(t, 1));
      CHECK(polynomial_set(s, 2) == polynomial_set(t, 2));
    }
  }

  TEST_CASE("split polynomials of the unknot triple") {
    const DGA p = compute_dga(n_copy(load_front("L 1\nR 1"), 3));
    const auto augs = link_augmentations(p);
    REQUIRE(!augs.empty());
    for (const auto& e : augs)
      for (int r1 = -1; r1 <= 1; ++r1)
        for (int r2 = -1; r2 <= 1; ++r2) {
          const SplitMatrix m = split_polynomials(p, e, {2 * r1, 2 * r2, 0});
          const SplitMatrix want{{lam(1), lam(-1 + 2 * r1 - 2 * r2), lam(-1 + 2 * r1)},
                                 {lam(1 + 2 * r2 - 2 * r1), lam(1), lam(-1 + 2 * r2)},
                                 {lam(1 - 2 * r1), lam(1 - 2 * r2), lam(1)}};
          CHECK(m == want);
          const SplitFamily f{{0, 0, 0}, split_polynomials(p, e)};
          CHECK(f.at({2 * r1, 2 * r2, 0}) == m);
        }
  }

  TEST_CASE("grading matches for the triple and the double") {
    const DGA tri = compute_dga(n_copy(load_front("L 1\nR 1"), 3));
    const SplitFamily f{{0, 0, 0}, split_polynomials(tri, link_augmentations(tri)[0])};
    MatchOptions half;
    half.half_integers = true;
    CHECK(match_gradings(f, f, half).has_value());
    CHECK(!match_gradings(f, f.permuted({1, 0, 2}), half).has_value());
    CHECK(!match_gradings_grid(f, f.permuted({1, 0, 2}), half).has_value());
    CHECK(match_gradings(f, f.permuted({2, 1, 0}), half).has_value() ==
          match_gradings_grid(f, f.permuted({2, 1, 0}), half).has_value());

    const DGA dbl = compute_dga(n_copy(load_front("L 1\nR 1"), 2));
    const SplitFamily g{{0, 0}, split_polynomials(dbl, link_augmentations(dbl)[0])};
    CHECK(g.matrix[0][1] == lam(-1));
    CHECK(g.matrix[1][0] == lam(1));
    const auto m = match_gradings(g, g.permuted({1, 0}));
    REQUIRE(m.has_value());
    CHECK(g.at(m->rho2_a) == g.permuted({1, 0}).at(m->rho2_b));
    CHECK(family_sets_match({f}, {f}, half));
    CHECK(!family_sets_match({f}, {f.permuted({1, 0, 2})}, half));
  }

  TEST_CASE("exact grading solve agrees with the grid on random families") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const FrontDiagram f = random_front(seed, 12);
      const int k = trace_components(f).num_components();
      if (k < 2) continue;
      const DGA p = compute_dga(f);
      const auto augs = link_augmentations(p);
      if (augs.empty()) continue;
      std::vector<int> zero(k, 0);
      const SplitFamily a{zero, split_polynomials(p, augs.front())};
      std::vector<int> perm(k);
      for (int j = 0; j < k; ++j) perm[j] = (j + 1) % k;
      for (const bool half : {false, true}) {
        MatchOptions opt;
        opt.half_integers = half;
        const auto exact = match_gradings(a, a.permuted(perm), opt);
        if (exact) CHECK(a.at(exact->rho2_a) == a.permuted(perm).at(exact->rho2_b));
        if (match_gradings_grid(a, a.permuted(perm), opt)) CHECK(exact.has_value());
      }
    }
  }

  TEST_CASE("degree distribution") {
    const DGA t = compute_dga(load_front(kTrefoil));
    CHECK(degree_distribution(t) == DegreeDistribution{{0, 3}, {1, 2}});
  }
}
