#include <functional>
#include <stdexcept>

#include "legendrian/invariants.hpp"

namespace legendrian {

namespace {

int entry(const std::vector<int>& r, int j) { return j < static_cast<int>(r.size()) ? r[j] : 0; }

int check_shapes(const SplitFamily& a, const SplitFamily& b) {
  const int k = static_cast<int>(a.matrix.size());
  if (static_cast<int>(b.matrix.size()) != k) throw std::invalid_argument("split matrices of different sizes");
  for (int j1 = 0; j1 < k; ++j1)
    for (int j2 = 0; j2 < k; ++j2)
      if (a.matrix[j1][j2].modulus() != b.matrix[j1][j2].modulus())
        throw std::invalid_argument("split polynomials with different grading moduli");
  return k;
}

std::vector<int> normalized(const SplitFamily& f, int k) {
  std::vector<int> r(k);
  for (int j = 0; j < k; ++j) r[j] = entry(f.rho2, j) - entry(f.rho2, k - 1);
  return r;
}

bool parity_ok(const std::vector<int>& r, bool half) {
  if (half) return true;
  for (int x : r)
    if (x % 2) return false;
  return true;
}

// Exponent e with a == b.shifted(e), if any.
std::optional<int> required_shift(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() != b.is_zero()) return std::nullopt;
  if (a.is_zero()) return 0;
  const int e = a.coefficients().begin()->first - b.coefficients().begin()->first;
  if (b.shifted(e) != a) return std::nullopt;
  return e;
}

std::optional<GradingMatch> solve_exact(const SplitFamily& a, const SplitFamily& b, int k, bool half) {
  GradingMatch m;
  m.rho2_a = normalized(a, k);
  const auto base_b = normalized(b, k);
  const SplitMatrix am = a.at(m.rho2_a);
  for (int j = 0; j < k; ++j)
    if (am[j][j] != b.matrix[j][j]) return std::nullopt;
  // sigma[j1] - sigma[j2] = e + base_b[j1] - base_b[j2] for every constrained pair.
  std::vector<std::vector<std::pair<int, int>>> edges(k);
  for (int j1 = 0; j1 < k; ++j1)
    for (int j2 = 0; j2 < k; ++j2) {
      if (j1 == j2) continue;
      const auto e = required_shift(am[j1][j2], b.matrix[j1][j2]);
      if (!e) return std::nullopt;
      if (am[j1][j2].is_zero()) continue;
      const int diff = *e + base_b[j1] - base_b[j2];
      edges[j2].push_back({j1, diff});
      edges[j1].push_back({j2, -diff});
    }
  std::vector<std::optional<int>> sigma(k);
  std::function<bool(int)> visit = [&](int j) {
    for (const auto& [o, diff] : edges[j]) {
      const int want = *sigma[j] + diff;
      if (!sigma[o]) {
        sigma[o] = want;
        if (!visit(o)) return false;
      } else if (*sigma[o] != want) {
        return false;
      }
    }
    return true;
  };
  for (int root = k - 1; root >= 0; --root) {
    if (sigma[root]) continue;
    sigma[root] = 0;
    if (!visit(root)) return std::nullopt;
  }
  for (int j = 0; j < k; ++j) m.rho2_b.push_back(*sigma[j]);
  if (!parity_ok(m.rho2_b, half)) return std::nullopt;
  return m;
}

bool within(const std::vector<int>& r, int bound) {
  for (int x : r)
    if (x < -2 * bound || x > 2 * bound) return false;
  return true;
}

}  // namespace

std::optional<GradingMatch> match_gradings_grid(const SplitFamily& a, const SplitFamily& b,
                                                const MatchOptions& opt) {
  const int k = check_shapes(a, b);
  const std::vector<int> ra = normalized(a, k);
  const SplitMatrix target = a.at(ra);
  const int step = opt.half_integers ? 1 : 2;
  std::vector<int> sigma(k, 0);
  std::function<std::optional<GradingMatch>(int)> rec = [&](int j) -> std::optional<GradingMatch> {
    if (j == k - 1) {
      if (b.at(sigma) == target) return GradingMatch{ra, sigma};
      return std::nullopt;
    }
    for (int x = -2 * opt.bound; x <= 2 * opt.bound; x += step) {
      sigma[j] = x;
      if (auto m = rec(j + 1)) return m;
    }
    return std::nullopt;
  };
  if (k == 0) return GradingMatch{};
  return rec(0);
}

std::optional<GradingMatch> match_gradings(const SplitFamily& a, const SplitFamily& b, const MatchOptions& opt) {
  const int k = check_shapes(a, b);
  bool cyclic = false;
  for (const auto& row : a.matrix)
    for (const auto& p : row) cyclic |= p.modulus() != 0;
  if (cyclic) return match_gradings_grid(a, b, opt);
  const auto exact = solve_exact(a, b, k, opt.half_integers);
  if (exact && b.at(exact->rho2_b) != a.at(exact->rho2_a)) throw std::logic_error("grading solve is inconsistent");
  const auto grid = match_gradings_grid(a, b, opt);
  if (!exact && grid) throw std::logic_error("grid finds a grading the exact solve rejects");
  if (exact && within(exact->rho2_b, opt.bound) && !grid)
    throw std::logic_error("exact grading missing from the grid");
  return exact;
}

bool family_sets_match(const std::vector<SplitFamily>& a, const std::vector<SplitFamily>& b,
                       const MatchOptions& opt) {
  auto covers = [&](const std::vector<SplitFamily>& x, const std::vector<SplitFamily>& y) {
    for (const auto& f : x) {
      bool found = false;
      for (const auto& g : y)
        if (match_gradings(f, g, opt)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  return covers(a, b) && covers(b, a);
}

}  // namespace legendrian
