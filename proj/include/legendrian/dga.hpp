#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legendrian/algebra.hpp"
#include "legendrian/front.hpp"

namespace legendrian {

struct Generator {
  std::string name;
  int degree = 0;
  int u = 0;  // 0-based component labels
  int l = 0;
  bool operator==(const Generator&) const = default;
};

// A semi-free DGA presentation. In link mode there is one t variable per
// component; a knot DGA computed in knot mode has a single t.
struct DGA {
  Mode mode{Ring::Z, 1};
  int modulus = 0;  // grading group Z/modulus, 0 for Z
  int components = 1;
  bool link_mode = false;
  std::vector<int> rho2;       // twice the grading shifts rho_j; last entry 0
  std::vector<int> t_degrees;  // degree of each t variable
  std::vector<Generator> gens;
  std::vector<AlgebraElement> d;

  int size() const { return static_cast<int>(gens.size()); }
  std::vector<std::string> names() const;
  std::vector<int> degrees() const;
  Derivation derivation() const;
  AlgebraElement apply(const AlgebraElement& x) const { return derivation()(x); }
  // Degree of a term, reduced modulo `modulus`.
  int degree(const Term& t) const;
  int reduce_degree(int deg) const;
  bool operator==(const DGA&) const = default;
};

struct Disk {
  int initial = 0;
  Word corners;
  std::vector<bool> downward;  // per corner: disk occupies the bottom region
  int sign = 1;
  std::vector<int> passes;  // signed boundary passes over each base point
};

// Base point of component j sits at the midpoint of cm.cycle(j)[pos[j]];
// missing entries mean position 0.
using BasePositions = std::vector<int>;

// Embedded admissible disks with initial vertex `v` of a simple front.
// Throws std::invalid_argument if the front is not simple.
std::vector<Disk> enumerate_disks(const FrontDiagram& simple, const ComponentMap& cm,
                                  const std::vector<Vertex>& vertices, int v,
                                  const BasePositions& base = {});
// All vertices; the parallel variant distributes vertices over threads and
// returns the same result.
std::vector<std::vector<Disk>> enumerate_all_disks(const FrontDiagram& simple, const ComponentMap& cm,
                                                   const std::vector<Vertex>& vertices,
                                                   const BasePositions& base = {});
std::vector<std::vector<Disk>> enumerate_all_disks_parallel(const FrontDiagram& simple,
                                                            const ComponentMap& cm,
                                                            const std::vector<Vertex>& vertices,
                                                            const BasePositions& base = {});

struct DgaOptions {
  std::optional<bool> link_mode;  // default: link mode iff more than one component
  std::vector<int> rho2;          // twice rho_j; empty means all zero
  std::vector<bool> flip;         // orientation reversal per component
  BasePositions base;             // positions along the simple front's cycles
  bool parallel = true;
};

// Degrees of the vertices of `d` itself (no simplification).
std::vector<int> vertex_degrees(const FrontDiagram& d, const ComponentMap& cm,
                                const std::vector<Vertex>& vertices, bool link_mode,
                                const std::vector<int>& rho2, const BasePositions& base = {});

// The DGA of make_simple(d); generators a1..an are its vertices left to right.
DGA compute_dga(const FrontDiagram& d, const DgaOptions& opt = {});

// Z/2 coefficients, t = 1, grading modulo gcd of 2r over components.
DGA mod2(const DGA& p);

// Diagnostics are written to *why when the check fails.
bool lowers_degree_by_one(const DGA& p, std::string* why = nullptr);
bool d_squared_zero(const DGA& p, std::string* why = nullptr);

// a_i -> t_u^{u_moves[i]} t_l^{-l_moves[i]} a_i, where u_moves[i] counts how
// often the base point of u(a_i) moved past N_u(a_i) (likewise for l).
struct BasePointShift {
  std::vector<int> u_moves;
  std::vector<int> l_moves;
};
BasePointShift compose(const BasePointShift& a, const BasePointShift& b);
// Shift relating base point 0 to positions `base` along the cycles the
// vertices were computed on.
BasePointShift base_point_shift(const std::vector<Vertex>& vertices, const BasePositions& base);
DGA base_point_change(const DGA& p, const BasePointShift& s);

// (u of the first letter, l of the last) when consecutive letters chain
// l(w_i) == u(w_{i+1}); nullopt otherwise. The empty word has no split.
std::optional<std::pair<int, int>> gamma_split(const Word& w, const std::vector<Generator>& gens);

// Adds idempotents e_1..e_k (names "e1".., degree 0) after the a_i and
// replaces the constant terms of each d(a_i) by multiples of e_{u(a_i)}.
DGA link_module(const DGA& p);

// n parallel copies of a knot front, copy j shifted up by j*epsilon. Left
// cusps are tagged so that component 1 is the top copy and component n the
// bottom one.
FrontDiagram n_copy(const FrontDiagram& knot, int n);

// Algebraic stabilization: appends `count` pairs (x, y) with deg x = degree,
// d x = y, d y = 0. New generators are named s1, s2, ...
DGA stabilize(const DGA& p, int degree, int count = 1);

}  // namespace legendrian
