#include "selftest.hpp"

#include <cstdlib>
#include <set>

#include "legendrian/compare.hpp"
#include "legendrian/corpus.hpp"
#include "legendrian/moves.hpp"

using namespace legendrian;

namespace {

struct Classical {
  int tb = 0;
  std::vector<int> r;
  int components = 0;
  bool operator==(const Classical&) const = default;
};

Classical classical(const FrontDiagram& d) {
  const ComponentMap cm = trace_components(d);
  Classical c{thurston_bennequin(d, cm), {}, cm.num_components()};
  for (int j = 0; j < cm.num_components(); ++j) c.r.push_back(rotation_number(cm, j));
  return c;
}

CompareOptions probes_for(const CorpusEntry& a, const CorpusEntry& b) {
  CompareOptions opt;
  const auto na = corpus_dga(a).names(), nb = corpus_dga(b).names();
  for (const auto& s : a.probes) opt.probes_a.push_back(parse_probe(s, na));
  for (const auto& s : b.probes) opt.probes_b.push_back(parse_probe(s, nb));
  return opt;
}

}  // namespace

SelftestReport run_selftest() {
  SelftestReport rep;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  for (const auto& e : corpus()) {
    const DGA p = corpus_dga(e);
    std::string why;
    const bool lowers = lowers_degree_by_one(p, &why);
    std::string why2;
    const bool squares = d_squared_zero(p, &why2);
    check(e.name + ": d lowers degree by one and d^2 = 0", lowers && squares, why + why2);
    if (e.kind != CorpusEntry::Kind::Front) continue;
    const Classical c = classical(corpus_front(e));
    if (auto tb = annotation(e, "tb")) check(e.name + ": tb", c.tb == std::atoi(tb->c_str()), std::to_string(c.tb));
    if (auto r = annotation(e, "r")) check(e.name + ": r", c.r.at(0) == std::atoi(r->c_str()));
    if (auto r = annotation(e, "abs_r")) check(e.name + ": |r|", std::abs(c.r.at(0)) == std::atoi(r->c_str()));
    if (auto n = annotation(e, "components"))
      check(e.name + ": components", c.components == std::atoi(n->c_str()));
    if (auto n = annotation(e, "augmentations"))
      check(e.name + ": augmentation count", static_cast<int>(find_augmentations(p).size()) == std::atoi(n->c_str()));
    if (auto q = annotation(e, "poly1")) {
      bool ok = true;
      for (const auto& x : polynomial_set(p, 1)) ok = ok && to_string(x) == *q;
      check(e.name + ": first-order polynomial", ok);
    }
  }

  for (const char* name : {"unknot", "trefoil", "double"}) {
    const CorpusEntry& e = *find_corpus(name);
    const FrontDiagram d = corpus_front(e);
    const Classical base = classical(d);
    const bool knot = base.components == 1;
    const auto polys = knot ? polynomial_set(compute_dga(d), 1) : std::vector<LaurentPoly>{};
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const FrontDiagram moved = random_isotopy(d, seed, 15);
      ok = ok && classical(moved) == base;
      if (knot) ok = ok && polynomial_set(compute_dga(moved), 1) == polys;
    }
    check(std::string(name) + ": invariants survive random isotopy (seeds 1-4, 15 moves)", ok);
  }

  const std::pair<const char*, const char*> distinct[] = {{"6_2", "6_2_mirror"}, {"7_4_K1", "7_4_K2"}};
  for (const auto& [a, b] : distinct) {
    const CorpusEntry &ea = *find_corpus(a), &eb = *find_corpus(b);
    const CompareResult r = compare_knots(corpus_dga(ea), corpus_dga(eb), probes_for(ea, eb));
    check(std::string(a) + " vs " + b + " distinguished", r.verdict == Verdict::Distinguished,
          r.certificate ? r.certificate->property : "");
  }
  const CorpusEntry& t = *find_corpus("trefoil");
  check("trefoil vs itself not distinguished",
        compare_knots(corpus_dga(t), corpus_dga(t)).verdict == Verdict::IndistinguishableAtBounds);
  return rep;
}
