#include <random>

#include "doctest.h"
#include "legendrian/compare.hpp"
#include "legendrian/corpus.hpp"
#include "legendrian/moves.hpp"

using namespace legendrian;

namespace {

DGA named(const std::string& n) { return corpus_dga(*find_corpus(n)); }

CompareOptions with_probes(const std::string& a, const std::string& b) {
  CompareOptions opt;
  const DGA pa = named(a), pb = named(b);
  for (const auto& t : find_corpus(a)->probes) opt.probes_a.push_back(parse_probe(t, pa.names()));
  for (const auto& t : find_corpus(b)->probes) opt.probes_b.push_back(parse_probe(t, pb.names()));
  return opt;
}

}  // namespace

TEST_SUITE("compare") {
  TEST_CASE("equalizing stabilizations match degree distributions") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> deg(-3, 3), count(0, 3);
    for (int k = 0; k < 200; ++k) {
      DGA a = named("trefoil");
      DGA b = named("trefoil");
      for (int j = count(rng); j > 0; --j) a = stabilize(a, deg(rng));
      for (int j = count(rng); j > 0; --j) b = stabilize(b, deg(rng));
      const auto stab = equalizing_stabilizations(degree_distribution(a), degree_distribution(b));
      REQUIRE(stab.has_value());
      for (int d : stab->first) a = stabilize(a, d);
      for (int d : stab->second) b = stabilize(b, d);
      CHECK(degree_distribution(a) == degree_distribution(b));
    }
    CHECK(!equalizing_stabilizations({{0, 1}}, {{1, 1}}).has_value());
    CHECK(equalizing_stabilizations({{0, 2}}, {{0, 2}})->first.empty());
  }

  TEST_CASE("6_2 and its mirror are distinguished by graded unit pairing") {
    const CompareResult r = compare_knots(named("6_2"), named("6_2_mirror"), with_probes("6_2", "6_2_mirror"));
    CHECK(r.verdict == Verdict::Distinguished);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->data.at("degree") == "1");
    CHECK(r.certificate->data.at("exists_in") == "A");
    CHECK(r.certificate->data.at("v") == "a10");
  }

  TEST_CASE("7_4 K1 and K2 are distinguished by a one-sided unit") {
    const CompareResult r = compare_knots(named("7_4_K1"), named("7_4_K2"), with_probes("7_4_K1", "7_4_K2"));
    CHECK(r.verdict == Verdict::Distinguished);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->property == "existence of an element invertible from one side only");
    CHECK(r.certificate->data.at("side") == "B");
  }

  TEST_CASE("isotopic and stabilized inputs are not distinguished") {
    const DGA t = named("trefoil");
    CHECK(compare_knots(t, t).verdict == Verdict::IndistinguishableAtBounds);
    const DGA moved = compute_dga(random_isotopy(corpus_front(*find_corpus("trefoil")), 5, 12));
    CHECK(compare_knots(t, moved).verdict == Verdict::IndistinguishableAtBounds);
    const DGA u = named("unknot");
    CHECK(compare_knots(u, stabilize(u, 3)).verdict == Verdict::IndistinguishableAtBounds);
    CHECK(compare_knots(named("6_2"), named("6_2"), with_probes("6_2", "6_2")).verdict ==
          Verdict::IndistinguishableAtBounds);
  }

  TEST_CASE("classical data distinguish") {
    const CompareResult m = compare_knots(named("zigzag"), named("unknot"));
    CHECK(m.verdict == Verdict::Distinguished);
    CHECK(m.certificate->data.count("modulus_a"));
    const CompareResult p = compare_knots(named("trefoil"), named("unknot"));
    CHECK(p.verdict == Verdict::Distinguished);
    CHECK(p.certificate->data.at("order") == "1");
  }

  TEST_CASE("verdict strings") {
    CHECK(to_string(Verdict::Distinguished) == "DISTINGUISHED");
    CHECK(to_string(Verdict::IndistinguishableAtBounds) == "INDISTINGUISHABLE-AT-BOUNDS");
  }
}
