#include <stdexcept>

#include "doctest.h"
#include "legendrian/charalg.hpp"
#include "legendrian/corpus.hpp"
#include "legendrian/errors.hpp"

using namespace legendrian;

namespace {

DGA named(const std::string& n) { return corpus_dga(*find_corpus(n)); }

AlgebraElement el(const CharPresentation& c, const std::string& s) {
  return parse_element(s, c.names, CharPresentation::mode());
}

CharPresentation simplified(const std::string& n) { return tietze_simplify(characteristic_presentation(named(n))); }

}  // namespace

TEST_SUITE("charalg") {
  TEST_CASE("presentation relations are the nonzero differentials") {
    const DGA p = named("6_2");
    const CharPresentation c = characteristic_presentation(p);
    CHECK(c.generators().size() == 11);
    CHECK(c.relations.size() == 6);
    CHECK(!c.trivial);
    const auto rs = complete_rewriting(c);
    for (int i = 0; i < p.size(); ++i) CHECK(ideal_member(rs, c, mod2(p).d[i]) == Membership::Yes);
  }

  TEST_CASE("simplification of the 6_2 algebra") {
    const CharPresentation raw = characteristic_presentation(named("6_2"));
    const CharPresentation c = tietze_simplify(raw);
    CHECK(!c.present[10]);
    CHECK(!c.present[7]);
    CHECK(!c.present[6]);
    CHECK(*c.values[10] == el(c, "a10 a5 a5"));
    CHECK(c.values[7]->is_zero());
    // Every original relation vanishes in the simplified algebra.
    const auto rs = complete_rewriting(c);
    for (const auto& r : raw.relations) CHECK(ideal_member(rs, c, r) == Membership::Yes);
    // And every simplified relation lies in the original ideal.
    const auto rs_raw = complete_rewriting(raw);
    for (const auto& r : c.relations) CHECK(rs_raw.member(r) != Membership::No);
  }

  TEST_CASE("simplification of the 7_4 algebras keeps the ideal") {
    for (const char* n : {"7_4_K1", "7_4_K2"}) {
      INFO(n);
      const CharPresentation raw = characteristic_presentation(named(n));
      const CharPresentation c = tietze_simplify(raw);
      CHECK(c.generators().size() < raw.generators().size());
      const auto rs = complete_rewriting(c);
      for (const auto& r : raw.relations) CHECK(ideal_member(rs, c, r) == Membership::Yes);
    }
  }

  TEST_CASE("probe parsing") {
    const auto names = named("7_4_K2").names();
    const Probe s = parse_probe("a3=1, a7=a13, a8=a12, rest=0", names);
    CHECK(s.rest_zero);
    CHECK(s.values.at(2).kind == ProbeValue::Kind::One);
    CHECK(s.values.at(6).generator == 12);
    CHECK(parse_probe(format_probe(s, names), names).values.size() == s.values.size());
    CHECK_THROWS_AS(parse_probe("a3=1, a13=0, a7=a13", names), std::invalid_argument);
    CHECK_THROWS_AS(parse_probe("b1=0", names), std::invalid_argument);
    CHECK_THROWS_AS(parse_probe("a1=2", names), std::invalid_argument);
  }

  TEST_CASE("probe quotients are homomorphic images") {
    for (const auto& e : corpus()) {
      for (const auto& text : e.probes) {
        INFO(e.name << " " << text);
        const CharPresentation raw = characteristic_presentation(corpus_dga(e));
        const CharPresentation c = tietze_simplify(raw);
        const Probe s = parse_probe(text, c.names);
        CHECK(probe_is_graded(s, c));
        const CharPresentation q = probe_quotient(c, s);
        const auto rs = complete_rewriting(q);
        REQUIRE(rs.status() == CompletionStatus::Complete);
        // The map on the original generators kills every original relation.
        for (const auto& r : raw.relations) CHECK(ideal_member(rs, q, apply_probe(s, r, c.size())) == Membership::Yes);
        for (int g : q.generators()) CHECK(!q.values[g].has_value());
        const auto shape = toeplitz_shape(q);
        REQUIRE(shape.has_value());
      }
    }
  }

  TEST_CASE("probe quotient of 7_4_K2 is the shift algebra") {
    const CharPresentation c = simplified("7_4_K2");
    const CharPresentation q = probe_quotient(c, parse_probe("a3=1, a7=a13, a8=a12, rest=0", c.names));
    const auto t = toeplitz_shape(q);
    REQUIRE(t.has_value());
    CHECK(t->x == 12);
    CHECK(t->y == 11);
    CHECK(t->free.empty());
  }

  TEST_CASE("toeplitz shift representation") {
    const ToeplitzShape t{0, 1, {2}};
    const Mode m = CharPresentation::mode();
    const std::vector<std::string> n{"x", "y", "z"};
    auto e = [&](const std::string& s) { return parse_element(s, n, m); };
    CHECK(toeplitz_annihilated(t, e("x")) == 0);
    CHECK(!toeplitz_annihilated(t, e("y")).has_value());
    CHECK(toeplitz_annihilated(t, e("1 + y x")) == 1);
    CHECK(toeplitz_annihilated(t, e("1 + x y")) == 0);
    CHECK(toeplitz_annihilated(t, e("z")) == 0);
    CHECK(toeplitz_adjoint(t, e("x x y + z")) == e("x y y + z"));
  }

  TEST_CASE("one-sided units of 7_4_K2") {
    const CharPresentation c = simplified("7_4_K2");
    SearchOptions opt;
    opt.probes = {parse_probe("a3=1, a7=a13, a8=a12, rest=0", c.names)};
    const Invertibility inv = one_sided_invertibility(c, AlgebraElement::gen(CharPresentation::mode(), 12), opt);
    CHECK(inv.right.answer == Answer::Yes);
    CHECK(inv.left.answer == Answer::No);
    REQUIRE(inv.right.witness.has_value());
    const auto rs = complete_rewriting(c);
    CHECK(ideal_member(rs, c, AlgebraElement::one(CharPresentation::mode()) +
                                  AlgebraElement::gen(CharPresentation::mode(), 12) * *inv.right.witness) ==
          Membership::Yes);
    CHECK(!domain_certificate(c).has_value());
  }

  TEST_CASE("the 7_4_K1 algebra is a domain") {
    const CharPresentation c = simplified("7_4_K1");
    CHECK(domain_certificate(c).has_value());
  }

  TEST_CASE("graded unit pairing for 6_2 and its mirror") {
    const CharPresentation c = simplified("6_2");
    const CharPresentation m = simplified("6_2_mirror");
    SearchOptions opt;
    opt.probes = {parse_probe("a3=1, a1=0, a2=0, a6=0, a7=0, a9=0", c.names)};
    const PairingResult p1 = graded_unit_pairing(c, 1, opt);
    CHECK(p1.answer == Answer::Yes);
    REQUIRE(p1.v.has_value());
    CHECK(c.degree(*p1.v) == 1);
    CHECK(c.degree(*p1.w) == -1);
    CHECK(graded_unit_pairing(c, -1, opt).answer == Answer::No);
    CHECK(graded_unit_pairing(m, 1, opt).answer == Answer::No);
    CHECK(graded_unit_pairing(m, -1, opt).answer == Answer::Yes);
    CHECK(graded_unit_pairing(c, 0, opt).answer == Answer::Yes);
  }

  TEST_CASE("mirror is an involution") {
    for (const auto& e : corpus()) {
      const DGA p = mod2(corpus_dga(e));
      const DGA mm = mirror_dga(mirror_dga(p));
      CHECK(mm.d == p.d);
      const CharPresentation c = characteristic_presentation(p);
      CHECK(mirror_presentation(mirror_presentation(c)).relations == c.relations);
    }
  }

  TEST_CASE("abelianization point counts") {
    const Abelianization u = abelianize(characteristic_presentation(named("unknot")));
    CHECK(u.graded_points == 1);
    CHECK(u.ungraded_points == 2);
    const Abelianization t = abelianize(characteristic_presentation(named("trefoil")));
    CHECK(t.graded_points == 5);
    CHECK(t.ungraded_points == 20);
    CHECK_THROWS_AS(abelianize(characteristic_presentation(named("7_4_K2")), 16), BoundExceeded);
  }

  TEST_CASE("stabilized unknot has a free characteristic algebra") {
    const CharPresentation c = tietze_simplify(characteristic_presentation(stabilize(named("unknot"), 5)));
    CHECK(c.generators().size() == 2);
    CHECK(c.relations.empty());
    CHECK(domain_certificate(c).has_value());
  }

  TEST_CASE("trivial algebra") {
    const CharPresentation c = tietze_simplify(characteristic_presentation(named("6_2")));
    CharPresentation t = c;
    t.relations.push_back(AlgebraElement::one(CharPresentation::mode()));
    canonicalize(t);
    CHECK(t.trivial);
    const Invertibility inv = one_sided_invertibility(t, AlgebraElement::gen(CharPresentation::mode(), 3));
    CHECK(inv.left.answer == Answer::Yes);
    CHECK(inv.right.answer == Answer::Yes);
  }
}
