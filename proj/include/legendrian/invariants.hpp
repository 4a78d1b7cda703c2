#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legendrian/dga.hpp"
#include "legendrian/laurent.hpp"

namespace legendrian {

// Degree -> number of generators, degrees reduced modulo the grading group.
using DegreeDistribution = std::map<int, int>;
DegreeDistribution degree_distribution(const DGA& p);

// Values in Z/2 per generator.
struct Augmentation {
  std::vector<std::uint8_t> values;
  bool operator==(const Augmentation&) const = default;
  auto operator<=>(const Augmentation&) const = default;
};

struct AugmentationSearch {
  bool graded = true;
  std::uint64_t node_cap = std::uint64_t{1} << 24;  // DFS nodes before BoundExceeded
  bool parallel = true;
};

// Every augmentation of the mod-2, t = 1 view of p, in lexicographic order of
// the free values. Graded: only generators of degree 0 may be nonzero.
// Throws BoundExceeded past the node cap.
std::vector<Augmentation> find_augmentations(const DGA& p, const AugmentationSearch& opt = {});
std::vector<Augmentation> find_augmentations_serial(const DGA& p, const AugmentationSearch& opt = {});

// Re-evaluates eps(d a_i) for every i directly on the algebra elements.
bool is_augmentation(const DGA& p, const Augmentation& eps, bool graded = true, std::string* why = nullptr);

// A_eps / A_eps^{n+1} with its differential, over Z/2.
struct LinearizedComplex {
  int modulus = 0;
  int order = 1;
  std::vector<Word> basis;            // shifted generators, then length-2 words
  std::vector<int> degrees;           // per basis element
  std::vector<std::vector<int>> boundary;  // column j: basis indices of d(basis[j])

  // Sum over degrees of (dim ker - dim im) lambda^degree.
  LaurentPoly poincare() const;
  bool squares_to_zero() const;
};

// d of each generator of a mod-2 DGA after x_j -> x_j + eps_j, constant
// terms removed (they cancel for an augmentation) and, when max_length > 0,
// words longer than max_length dropped.
std::vector<AlgebraElement> shifted_differential(const DGA& q, const Augmentation& eps, int max_length = 0);

LinearizedComplex linearize(const DGA& p, const Augmentation& eps, int order);
LaurentPoly poincare_polynomial(const DGA& p, const Augmentation& eps, int order);

// Sorted, duplicate-free first- or second-order polynomials over all graded
// augmentations. Empty when there are none.
std::vector<LaurentPoly> polynomial_set(const DGA& p, int order, const AugmentationSearch& opt = {});

// The mod-2, eps-shifted DGA after tame changes putting the linear part in
// the form d1 a_k = b_k, d1 b_k = d1 c = 0. Generator ids are kept; roles
// are listed in `a`, `b`, `c`.
struct StandardForm {
  DGA dga;
  std::vector<int> order;  // triangular order used by the elimination
  std::vector<int> a, b, c;
  // Elementary automorphisms x_j -> x_j + w, applied in sequence.
  std::vector<std::pair<int, AlgebraElement>> automorphisms;
};

// max_length > 0 truncates differentials to words of at most that length.
// Throws std::invalid_argument if the linear part admits no triangular order.
StandardForm standard_form(const DGA& p, const Augmentation& eps, int max_length = 0);

// Order-2 polynomial from the standard form, the degree distribution and
// the span of {d2 b, d2 c, a b + b a, b b, b c, c b}.
LaurentPoly second_order_via_lemmas(const DGA& p, const Augmentation& eps);

// k x k matrix indexed [j1][j2] for the split Gamma_{j1 j2}.
using SplitMatrix = std::vector<std::vector<LaurentPoly>>;

// Sub-DGA of pure generators of component j; words with any other letter are
// dropped. Generator ids are renumbered; `ids` receives the original ids.
DGA component_dga(const DGA& p, int j, std::vector<int>* ids = nullptr);

// Link augmentations: per-component graded augmentations combined, zero on
// mixed generators. Lexicographic in the component choices.
std::vector<Augmentation> link_augmentations(const DGA& p, const AugmentationSearch& opt = {});

// First-order split polynomials for grading shifts rho2 (twice rho_j, last
// entry 0). Empty rho2 keeps the presentation's own grading.
SplitMatrix split_polynomials(const DGA& p, const Augmentation& eps, const std::vector<int>& rho2 = {});

// A split matrix as a function of the grading: entry (j1, j2) at rho2 is
// lambda^{rho2[j1] - rho2[j2] - base[j1] + base[j2]} times entry at base.
struct SplitFamily {
  std::vector<int> rho2;  // grading the matrix was computed at
  SplitMatrix matrix;
  SplitMatrix at(const std::vector<int>& rho2) const;
  SplitFamily permuted(const std::vector<int>& perm) const;  // new j is old perm[j]
};

struct GradingMatch {
  std::vector<int> rho2_a, rho2_b;
};

struct MatchOptions {
  int bound = 2;               // |rho_j| <= bound on the cross-check grid
  bool half_integers = false;  // unoriented links
};

// Gradings making every entry equal, or nullopt. Solved exactly as a linear
// system in the grading differences, then re-checked on the grid when the
// solution lies inside it. Throws std::invalid_argument on mismatched moduli
// or sizes.
std::optional<GradingMatch> match_gradings(const SplitFamily& a, const SplitFamily& b,
                                           const MatchOptions& opt = {});
// Every family on one side matches some family on the other, in both
// directions. Two empty sets match.
bool family_sets_match(const std::vector<SplitFamily>& a, const std::vector<SplitFamily>& b,
                       const MatchOptions& opt = {});
// Exhaustive grid search over |rho_j| <= bound with rho_a = 0.
std::optional<GradingMatch> match_gradings_grid(const SplitFamily& a, const SplitFamily& b,
                                                const MatchOptions& opt = {});

}  // namespace legendrian
