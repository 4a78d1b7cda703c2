#include <set>

#include "doctest.h"
#include "legendrian/moves.hpp"

using namespace legendrian;

namespace {

struct Classical {
  int tb;
  std::vector<int> r;
  bool operator==(const Classical&) const = default;
};

Classical classical(const FrontDiagram& d) {
  const ComponentMap cm = trace_components(d);
  Classical c{thurston_bennequin(d, cm), {}};
  for (int j = 0; j < cm.num_components(); ++j) c.r.push_back(rotation_number(cm, j));
  return c;
}

}  // namespace

TEST_SUITE("moves") {
  TEST_CASE("every applicable move is undone by its inverse") {
    std::set<MoveKind> seen;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const FrontDiagram raw = random_front(seed, 10);
      const FrontDiagram start = label_components(raw, trace_components(raw));
      for (const FrontDiagram& d : {start, random_isotopy(start, seed, 10)})
        for (const auto& m : applicable_moves(d)) {
          seen.insert(m.kind);
          const FrontDiagram e = apply_move(d, m);
          CHECK(validate(e).empty());
          CHECK(apply_move(e, inverse_move(d, m)) == d);
        }
    }
    CHECK(seen.size() == 5);
  }

  TEST_CASE("single moves keep tb, r and component count") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const FrontDiagram raw = random_front(seed, 10);
      const FrontDiagram d = label_components(raw, trace_components(raw));
      const Classical base = classical(d);
      for (const auto& m : applicable_moves(d)) {
        INFO(describe(m));
        CHECK(classical(apply_move(d, m)) == base);
      }
    }
  }

  TEST_CASE("random isotopy is deterministic in the seed") {
    const FrontDiagram t = load_front("L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1");
    CHECK(random_isotopy(t, 7, 25) == random_isotopy(t, 7, 25));
    CHECK(classical(random_isotopy(t, 7, 25)) == classical(t));
  }

  TEST_CASE("make_simple yields a simple isotopic front") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const FrontDiagram d = random_front(seed, 12);
      const FrontDiagram s = make_simple(d);
      CHECK(is_simple(s));
      CHECK(validate(s).empty());
      CHECK(classical(s) == classical(label_components(d, trace_components(d))));
    }
  }

  TEST_CASE("mismatched moves are rejected") {
    const FrontDiagram u = load_front("L 1\nR 1");
    CHECK_THROWS_AS(apply_move(u, MoveInstance{MoveKind::III, 0, 1, 0}), std::invalid_argument);
  }
}
