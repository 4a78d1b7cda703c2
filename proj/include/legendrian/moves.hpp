#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "legendrian/front.hpp"

namespace legendrian {

enum class MoveKind : std::uint8_t { Commute, IInsert, IDelete, II, III };

// A Legendrian Reidemeister move located in an event sequence.
//
//   Commute  swap events position, position+1 (disjoint strand support)
//   IInsert  insert a kink into strand `height` of gap `position`;
//            variant 0 = [L h+1, X h, R h+1], variant 1 = [L h, X h+1, R h]
//   IDelete  remove such a kink starting at event `position`
//   II       a strand passes a cusp, 0 <-> 2 crossings. `height` 0 expands
//            the cusp event at `position`, 1 contracts the pattern there:
//              variant 0: [R i]   <-> [X i+1, X i, R i+1]   strand above
//              variant 1: [R i+1] <-> [X i, X i+1, R i]     strand below
//              variant 2: [L i]   <-> [L i+1, X i, X i+1]   strand above
//              variant 3: [L i+1] <-> [L i, X i+1, X i]     strand below
//   III      [X i, X i+1, X i] <-> [X i+1, X i, X i+1] at `position`
struct MoveInstance {
  MoveKind kind = MoveKind::Commute;
  std::size_t position = 0;
  int height = 0;
  int variant = 0;
  bool operator==(const MoveInstance&) const = default;
};

std::string describe(const MoveInstance& m);

std::vector<MoveInstance> applicable_moves(const FrontDiagram& d);
// Throws std::invalid_argument when `m` does not match `d`.
FrontDiagram apply_move(const FrontDiagram& d, const MoveInstance& m);
// The move that undoes `m` on apply_move(d, m).
MoveInstance inverse_move(const FrontDiagram& d, const MoveInstance& m);

// A random valid front with at most `max_events` events (at least 2).
FrontDiagram random_front(std::uint64_t seed, int max_events);

FrontDiagram random_isotopy(const FrontDiagram& d, std::uint64_t seed, int steps);

// True when every right cusp sits in a terminal block joining strands
// (1,2), (3,4), ... of the gap before it.
bool is_simple(const FrontDiagram& d);
FrontDiagram make_simple(const FrontDiagram& d);

}  // namespace legendrian
