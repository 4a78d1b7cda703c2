#include <random>
#include <stdexcept>

#include "doctest.h"
#include "legendrian/algebra.hpp"
#include "legendrian/laurent.hpp"

using namespace legendrian;

namespace {

const std::vector<std::string> kNames{"a1", "a2", "a3", "a4"};

AlgebraElement random_element(std::mt19937_64& rng, Mode m, int gens, int max_len, int terms) {
  AlgebraElement x(m);
  for (int k = 0; k < terms; ++k) {
    Word w(rng() % (max_len + 1));
    for (int& g : w) g = static_cast<int>(rng() % gens);
    std::vector<int> t(m.num_t);
    for (int& e : t) e = static_cast<int>(rng() % 5) - 2;
    x.add_term(w, t, static_cast<long long>(rng() % 7) - 3);
  }
  return x;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("deglex puts shorter words first") {
    CHECK(deglex_less({5}, {0, 0}));
    CHECK(deglex_less({0, 1}, {1, 0}));
    CHECK(!deglex_less({1, 0}, {1, 0}));
  }

  TEST_CASE("parse and print round trip") {
    const Mode z1{Ring::Z, 1};
    for (const char* s : {"1 + a1a2", "a1 - 2 t a3a3", "t^-1 a4 + 3", "0"}) {
      const AlgebraElement x = parse_element(s, kNames, z1);
      CHECK(parse_element(to_string(x, kNames), kNames, z1) == x);
    }
    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; ++k) {
      const AlgebraElement x = random_element(rng, z1, 4, 3, 4);
      CHECK(parse_element(to_string(x, kNames), kNames, z1) == x);
    }
  }

  TEST_CASE("parser expands products and powers") {
    const Mode z2{Ring::Z2, 0};
    CHECK(parse_element("(1 + a1)(1 + a1)", kNames, z2) == parse_element("1 + a1a1", kNames, z2));
    CHECK(parse_element("a2^3", kNames, z2) == parse_element("a2 a2 a2", kNames, z2));
    CHECK(parse_element("t a1", kNames, z2) == parse_element("a1", kNames, z2));
    CHECK_THROWS_AS(parse_element("a9", kNames, z2), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("(a1", kNames, z2), std::invalid_argument);
  }

  TEST_CASE("Z/2 coefficients cancel in pairs") {
    const Mode z2{Ring::Z2, 0};
    const AlgebraElement x = parse_element("a1 + a2", kNames, z2);
    CHECK((x + x).is_zero());
  }

  TEST_CASE("multiplication is associative and distributive") {
    const Mode z1{Ring::Z, 1};
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
      const auto a = random_element(rng, z1, 3, 2, 3), b = random_element(rng, z1, 3, 2, 3),
                 c = random_element(rng, z1, 3, 2, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }

  TEST_CASE("reverse is an involutive anti-homomorphism") {
    const Mode z2{Ring::Z2, 0};
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
      const auto a = random_element(rng, z2, 4, 3, 3), b = random_element(rng, z2, 4, 3, 3);
      CHECK(reverse(reverse(a)) == a);
      CHECK(reverse(a * b) == reverse(b) * reverse(a));
    }
  }

  TEST_CASE("substitution is a homomorphism") {
    const Mode z2{Ring::Z2, 0};
    std::vector<std::optional<AlgebraElement>> images(4);
    images[0] = parse_element("1 + a2", kNames, z2);
    images[2] = parse_element("a4 a4", kNames, z2);
    std::mt19937_64 rng(8);
    for (int k = 0; k < 50; ++k) {
      const auto a = random_element(rng, z2, 4, 3, 3), b = random_element(rng, z2, 4, 3, 3);
      CHECK(substitute(a * b, images) == substitute(a, images) * substitute(b, images));
    }
    CHECK(substitute(parse_element("a1 a3", kNames, z2), images) == parse_element("a4a4 + a2a4a4", kNames, z2));
  }

  TEST_CASE("signed Leibniz rule squares to zero when images do") {
    // d a1 = a2 a3 - a3 a2 with every other image 0.
    const Mode z{Ring::Z, 0};
    const Derivation d = leibniz_extend({parse_element("a2 a3 - a3 a2", kNames, z), AlgebraElement::zero(z),
                                         AlgebraElement::zero(z), AlgebraElement::zero(z)},
                                        {2, 1, 0, 0});
    CHECK(d(d(AlgebraElement::gen(z, 0))).is_zero());
    // Sign check: d(a2 a2) = d(a2) a2 - a2 d(a2) for |a2| odd.
    const Derivation e = leibniz_extend({AlgebraElement::zero(z), parse_element("a3", kNames, z),
                                         AlgebraElement::zero(z), AlgebraElement::zero(z)},
                                        {2, 1, 0, 0});
    CHECK(e(parse_element("a2 a2", kNames, z)) == parse_element("a3 a2 - a2 a3", kNames, z));
  }

  TEST_CASE("Laurent polynomials") {
    LaurentPoly p = LaurentPoly::monomial(1) + LaurentPoly::monomial(0, 2);
    CHECK(to_string(p) == "λ + 2");
    CHECK(to_string(p.shifted(-2)) == "λ^-1 + 2λ^-2");
    CHECK(p.at_one() == 3);
    const LaurentPoly q = LaurentPoly::monomial(3, 1, 2);
    CHECK(q == LaurentPoly::monomial(1, 1, 2));
  }
}
