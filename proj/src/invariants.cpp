#include "legendrian/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gf2.hpp"

namespace legendrian {

DegreeDistribution degree_distribution(const DGA& p) {
  DegreeDistribution out;
  for (const auto& g : p.gens) ++out[p.reduce_degree(g.degree)];
  return out;
}

namespace {

void require_graded(const DGA& q, const Augmentation& eps) {
  std::string why;
  if (!is_augmentation(q, eps, true, &why)) throw std::invalid_argument("not a graded augmentation: " + why);
}

}  // namespace

namespace {

// Adds the words of length 1..max_length in the expansion of c w after
// x_j -> x_j + eps_j, choosing the kept positions directly; returns the
// parity of the constant term.
bool add_truncated_shift(const Term& term, long long c, const Augmentation& eps, int max_length,
                         AlgebraElement& out) {
  const Word& w = term.word;
  const int len = static_cast<int>(w.size());
  bool constant = false;
  Word kept;
  auto walk = [&](auto&& self, int k) -> void {
    if (k == len) {
      if (kept.empty()) constant = !constant;
      else out.add_term(kept, term.t, c);
      return;
    }
    if (eps.values[w[k]]) self(self, k + 1);
    if (static_cast<int>(kept.size()) < max_length) {
      kept.push_back(w[k]);
      self(self, k + 1);
      kept.pop_back();
    }
  };
  walk(walk, 0);
  return constant && c % 2 != 0;
}

}  // namespace

std::vector<AlgebraElement> shifted_differential(const DGA& q, const Augmentation& eps, int max_length) {
  if (max_length > 0 && q.mode.ring == Ring::Z2) {
    std::vector<AlgebraElement> out;
    for (int i = 0; i < q.size(); ++i) {
      AlgebraElement y(q.mode);
      bool constant = false;
      for (const auto& [term, c] : q.d[i].terms()) constant ^= add_truncated_shift(term, c, eps, max_length, y);
      if (constant) throw std::logic_error("shifted differential has a constant term");
      out.push_back(std::move(y));
    }
    return out;
  }
  std::vector<std::optional<AlgebraElement>> images(q.size());
  for (int j = 0; j < q.size(); ++j)
    if (eps.values[j]) images[j] = AlgebraElement::gen(q.mode, j) + AlgebraElement::one(q.mode);
  std::vector<AlgebraElement> out;
  for (int i = 0; i < q.size(); ++i) {
    const AlgebraElement x = substitute(q.d[i], images);
    AlgebraElement y(q.mode);
    for (const auto& [term, c] : x.terms()) {
      const int len = static_cast<int>(term.word.size());
      if (len == 0) throw std::logic_error("shifted differential has a constant term");
      if (max_length <= 0 || len <= max_length) y.add_term(term.word, term.t, c);
    }
    out.push_back(std::move(y));
  }
  return out;
}

namespace {

// q is already reduced mod 2 and eps is a graded augmentation of it.
LinearizedComplex linearize_reduced(const DGA& q, const Augmentation& eps, int order) {
  const auto d = shifted_differential(q, eps, order);
  const int n = q.size();
  LinearizedComplex c;
  c.modulus = q.modulus;
  c.order = order;
  auto index = [&](const Word& w) { return w.size() == 1 ? w[0] : n + w[0] * n + w[1]; };
  for (int i = 0; i < n; ++i) {
    c.basis.push_back({i});
    c.degrees.push_back(q.reduce_degree(q.gens[i].degree));
  }
  if (order == 2)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        c.basis.push_back({i, j});
        c.degrees.push_back(q.reduce_degree(q.gens[i].degree + q.gens[j].degree));
      }
  std::vector<std::vector<int>> linear(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> col;
    for (const auto& [term, coeff] : d[i].terms()) {
      col.push_back(index(term.word));
      if (term.word.size() == 1) linear[i].push_back(term.word[0]);
    }
    std::sort(col.begin(), col.end());
    c.boundary.push_back(std::move(col));
  }
  if (order == 2)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::set<int> col;
        auto flip = [&](int k) {
          if (!col.erase(k)) col.insert(k);
        };
        for (int k : linear[i]) flip(index({k, j}));
        for (int k : linear[j]) flip(index({i, k}));
        c.boundary.emplace_back(col.begin(), col.end());
      }
  return c;
}

}  // namespace

LinearizedComplex linearize(const DGA& p, const Augmentation& eps, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
  const DGA q = mod2(p);
  require_graded(q, eps);
  return linearize_reduced(q, eps, order);
}

LaurentPoly LinearizedComplex::poincare() const {
  std::map<int, std::vector<int>> by_degree;
  for (std::size_t j = 0; j < basis.size(); ++j) by_degree[degrees[j]].push_back(static_cast<int>(j));
  std::map<int, int> rank_from;
  for (const auto& [deg, cols] : by_degree) {
    std::vector<std::vector<int>> m;
    for (int j : cols) m.push_back(boundary[j]);
    rank_from[deg] = gf2::rank(m, static_cast<int>(basis.size()));
  }
  auto reduce = [&](int e) { return modulus > 0 ? ((e % modulus) + modulus) % modulus : e; };
  LaurentPoly out(modulus);
  for (const auto& [deg, cols] : by_degree) {
    const auto next = rank_from.find(reduce(deg + 1));
    const int incoming = next == rank_from.end() ? 0 : next->second;
    out.add(deg, static_cast<long long>(cols.size()) - rank_from[deg] - incoming);
  }
  return out;
}

bool LinearizedComplex::squares_to_zero() const {
  for (const auto& col : boundary) {
    std::set<int> acc;
    for (int k : col)
      for (int m : boundary[k])
        if (!acc.erase(m)) acc.insert(m);
    if (!acc.empty()) return false;
  }
  return true;
}

LaurentPoly poincare_polynomial(const DGA& p, const Augmentation& eps, int order) {
  return linearize(p, eps, order).poincare();
}

std::vector<LaurentPoly> polynomial_set(const DGA& p, int order, const AugmentationSearch& opt) {
  AugmentationSearch graded = opt;
  graded.graded = true;
  if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
  const auto augs = find_augmentations(p, graded);
  const DGA q = mod2(p);
  std::vector<LaurentPoly> polys(augs.size());
  const long m = static_cast<long>(augs.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (long i = 0; i < m; ++i) polys[i] = linearize_reduced(q, augs[i], order).poincare();
  std::sort(polys.begin(), polys.end());
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
  return polys;
}

}  // namespace legendrian
