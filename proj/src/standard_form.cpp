#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "gf2.hpp"
#include "legendrian/invariants.hpp"

namespace legendrian {

namespace {

std::vector<int> linear_part(const AlgebraElement& x) {
  std::vector<int> out;
  for (const auto& [term, c] : x.terms())
    if (term.word.size() == 1) out.push_back(term.word[0]);
  return out;
}

AlgebraElement truncated(const AlgebraElement& x, int max_length) {
  if (max_length <= 0) return x;
  AlgebraElement y(x.mode());
  for (const auto& [term, c] : x.terms())
    if (static_cast<int>(term.word.size()) <= max_length) y.add_term(term.word, term.t, c);
  return y;
}

// Kahn's algorithm on "d1 x_i involves x_j => j before i", smallest id first.
std::vector<int> triangular_order(const std::vector<AlgebraElement>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<std::vector<int>> users(n);
  std::vector<int> pending(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : linear_part(d[i])) {
      if (j == i) throw std::invalid_argument("linear part of the differential has a loop");
      users[j].push_back(i);
      ++pending[i];
    }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < n; ++i)
    if (!pending[i]) ready.push(i);
  std::vector<int> order;
  while (!ready.empty()) {
    const int i = ready.top();
    ready.pop();
    order.push_back(i);
    for (int u : users[i])
      if (--pending[u] == 0) ready.push(u);
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("linear part of the differential admits no triangular order");
  return order;
}

// d' = phi^-1 d phi for phi(x_j) = x_j + w with w linear; over Z/2 phi is an
// involution.
void apply_elementary(std::vector<AlgebraElement>& d, int j, const AlgebraElement& w, int max_length) {
  const Mode mode = w.mode();
  AlgebraElement dw(mode);
  for (int k : linear_part(w)) dw += d[k];
  std::vector<std::optional<AlgebraElement>> images(d.size());
  images[j] = AlgebraElement::gen(mode, j) + w;
  for (std::size_t m = 0; m < d.size(); ++m) {
    AlgebraElement x = static_cast<int>(m) == j ? d[m] + dw : d[m];
    d[m] = truncated(substitute(x, images), max_length);
  }
}

}  // namespace

StandardForm standard_form(const DGA& p, const Augmentation& eps, int max_length) {
  StandardForm sf;
  sf.dga = mod2(p);
  std::string why;
  if (!is_augmentation(sf.dga, eps, true, &why)) throw std::invalid_argument("not a graded augmentation: " + why);
  auto& d = sf.dga.d;
  d = shifted_differential(sf.dga, eps, max_length);
  sf.order = triangular_order(d);
  const Mode mode = sf.dga.mode;
  const int n = sf.dga.size();
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[sf.order[k]] = k;
  std::vector<bool> done(n, false);
  auto record = [&](int j, const AlgebraElement& w) {
    apply_elementary(d, j, w, max_length);
    sf.automorphisms.emplace_back(j, w);
  };
  for (;;) {
    int i1 = -1;
    for (int i : sf.order)
      if (!done[i] && !linear_part(d[i]).empty()) {
        i1 = i;
        break;
      }
    if (i1 < 0) break;
    const auto lin = linear_part(d[i1]);
    const int j1 = *std::max_element(lin.begin(), lin.end(), [&](int x, int y) { return pos[x] < pos[y]; });
    AlgebraElement v(mode);
    for (int k : lin)
      if (k != j1) v += AlgebraElement::gen(mode, k);
    if (!v.is_zero()) record(j1, v);
    for (int m = 0; m < n; ++m) {
      if (m == i1) continue;
      const auto lm = linear_part(d[m]);
      if (std::find(lm.begin(), lm.end(), j1) != lm.end()) record(m, AlgebraElement::gen(mode, i1));
    }
    done[i1] = done[j1] = true;
    sf.a.push_back(i1);
    sf.b.push_back(j1);
  }
  for (int i : sf.order)
    if (!done[i]) sf.c.push_back(i);
  for (std::size_t k = 0; k < sf.a.size(); ++k) {
    const auto lin = linear_part(d[sf.a[k]]);
    if (lin != std::vector<int>{sf.b[k]}) throw std::logic_error("standard form elimination failed");
  }
  for (int i : sf.b)
    if (!linear_part(d[i]).empty()) throw std::logic_error("standard form elimination failed");
  for (int i : sf.c)
    if (!linear_part(d[i]).empty()) throw std::logic_error("standard form elimination failed");
  return sf;
}

LaurentPoly second_order_via_lemmas(const DGA& p, const Augmentation& eps) {
  const StandardForm sf = standard_form(p, eps, 2);
  const DGA& q = sf.dga;
  const int n = q.size();
  auto reduce = [&](int e) { return q.reduce_degree(e); };
  auto deg = [&](int g) { return reduce(q.gens[g].degree); };

  std::map<int, long long> delta1;
  for (int b : sf.b) ++delta1[deg(b)];

  // Spanning vectors in the length-2 word space, grouped by degree.
  std::map<int, std::vector<std::vector<int>>> span;
  auto add_word = [&](int x, int y) { span[reduce(deg(x) + deg(y))].push_back({x * n + y}); };
  auto add_quadratic = [&](int g) {
    std::vector<int> v;
    for (const auto& [term, c] : q.d[g].terms())
      if (term.word.size() == 2) v.push_back(term.word[0] * n + term.word[1]);
    if (v.empty()) return;
    std::sort(v.begin(), v.end());
    span[reduce(deg(g) - 1)].push_back(std::move(v));
  };
  for (int b : sf.b) add_quadratic(b);
  for (int c : sf.c) add_quadratic(c);
  for (int a : sf.a)
    for (int b : sf.b) add_word(a, b), add_word(b, a);
  for (int b : sf.b) {
    for (int b2 : sf.b) add_word(b, b2);
    for (int c : sf.c) add_word(b, c), add_word(c, b);
  }

  std::map<int, long long> beta2 = delta1;
  for (const auto& [l, vs] : span) beta2[l] += gf2::rank(vs, n * n);
  for (const auto& [l1, x] : delta1)
    for (const auto& [l2, y] : delta1) beta2[reduce(l1 + l2 + 1)] -= x * y;

  const DegreeDistribution gamma = degree_distribution(q);
  std::map<int, long long> dim;
  for (const auto& [l, x] : gamma) dim[l] += x;
  for (const auto& [l1, x] : gamma)
    for (const auto& [l2, y] : gamma) dim[reduce(l1 + l2)] += static_cast<long long>(x) * y;

  auto at = [](const std::map<int, long long>& m, int k) {
    const auto it = m.find(k);
    return it == m.end() ? 0LL : it->second;
  };
  LaurentPoly out(q.modulus);
  for (const auto& [l, x] : dim) out.add(l, x - at(beta2, reduce(l - 1)) - at(beta2, l));
  return out;
}

}  // namespace legendrian
