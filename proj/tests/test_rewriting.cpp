#include <random>

#include "doctest.h"
#include "legendrian/rewriting.hpp"

using namespace legendrian;

namespace {

const Mode kZ2{Ring::Z2, 0};
const std::vector<std::string> kNames{"x", "y", "z"};

AlgebraElement el(const std::string& s) { return parse_element(s, kNames, kZ2); }

AlgebraElement random_element(std::mt19937& rng, int terms, int max_len) {
  AlgebraElement out = AlgebraElement::zero(kZ2);
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 2);
  for (int k = 0; k < terms; ++k) {
    Word w(len(rng));
    for (int& g : w) g = letter(rng);
    out += AlgebraElement::word(kZ2, w);
  }
  return out;
}

}  // namespace

TEST_SUITE("rewriting") {
  TEST_CASE("commutation relation completes to sorted words") {
    const auto rs = RewritingSystem::complete(std::vector<AlgebraElement>{el("x y + y x")});
    CHECK(rs.status() == CompletionStatus::Complete);
    CHECK(rs.normal_form(el("x y x")) == rs.normal_form(el("x x y")));
    CHECK(rs.member(el("x y y + y y x")) == Membership::Yes);
    CHECK(rs.member(el("x")) == Membership::No);
  }

  TEST_CASE("one-sided inverse relation stays one-sided") {
    const auto rs = RewritingSystem::complete(std::vector<AlgebraElement>{el("1 + x y")});
    CHECK(rs.status() == CompletionStatus::Complete);
    CHECK(rs.member(el("1 + x x y y")) == Membership::Yes);
    CHECK(rs.member(el("1 + y x")) == Membership::No);
  }

  TEST_CASE("contradictory relations give the trivial ideal") {
    const auto rs = RewritingSystem::complete(std::vector<AlgebraElement>{el("1 + x y"), el("y")});
    CHECK(rs.trivial());
    CHECK(rs.member(el("z")) == Membership::Yes);
    CHECK(rs.member(el("1")) == Membership::Yes);
  }

  TEST_CASE("Laurent relations make x and y two-sided inverses") {
    const auto rs = RewritingSystem::complete(std::vector<AlgebraElement>{el("1 + x y"), el("1 + y x")});
    CHECK(rs.status() == CompletionStatus::Complete);
    CHECK(rs.normal_form(el("x x y z y x")) == el("x z"));
  }

  TEST_CASE("normal forms are idempotent and ideal elements reduce to zero") {
    std::mt19937 rng(7);
    const std::vector<std::vector<AlgebraElement>> systems{
        {el("x y + y x"), el("x z + z x")},
        {el("1 + x y")},
        {el("x x + y"), el("z x")},
        {el("1 + x y"), el("1 + y x"), el("z y + y z")}};
    for (const auto& rels : systems) {
      const auto rs = RewritingSystem::complete(rels);
      REQUIRE(rs.status() == CompletionStatus::Complete);
      for (int k = 0; k < 60; ++k) {
        const AlgebraElement x = random_element(rng, 4, 4);
        const AlgebraElement nf = rs.normal_form(x);
        CHECK(rs.normal_form(nf) == nf);
        // x - nf lies in the ideal.
        CHECK(rs.member(x + nf) == Membership::Yes);
        AlgebraElement ideal = AlgebraElement::zero(kZ2);
        for (const auto& r : rels) ideal += random_element(rng, 2, 3) * r * random_element(rng, 2, 3);
        CHECK(rs.member(ideal) == Membership::Yes);
        CHECK(rs.normal_form(x + ideal) == nf);
      }
    }
  }

  TEST_CASE("bounds mark an incomplete system") {
    CompletionBounds b;
    b.max_len = 2;
    b.max_rules = 3;
    const auto rs = RewritingSystem::complete(
        std::vector<AlgebraElement>{el("x y x + y x y"), el("x z x + z x z"), el("y z y + z y z")}, b);
    CHECK(rs.status() == CompletionStatus::BoundedIncomplete);
    CHECK(rs.dropped() > 0);
  }

  TEST_CASE("poly2 arithmetic") {
    const Poly2 p = to_poly2(el("x y + z"));
    CHECK(from_poly2(add(p, p)).is_zero());
    CHECK(from_poly2(multiply({0}, p, {2})) == el("x x y z + x z z"));
    CHECK(from_poly2(p) == el("x y + z"));
  }
}
