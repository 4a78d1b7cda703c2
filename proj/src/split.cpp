#include <numeric>
#include <stdexcept>

#include "legendrian/invariants.hpp"

namespace legendrian {

DGA component_dga(const DGA& p, int j, std::vector<int>* ids) {
  DGA out;
  out.mode = Mode{Ring::Z2, 0};
  out.modulus = p.modulus;
  if (j < static_cast<int>(p.t_degrees.size())) out.modulus = std::gcd(p.modulus, std::abs(p.t_degrees[j]));
  std::vector<int> map(p.size(), -1);
  std::vector<int> kept;
  for (int i = 0; i < p.size(); ++i)
    if (p.gens[i].u == j && p.gens[i].l == j) {
      map[i] = static_cast<int>(kept.size());
      kept.push_back(i);
    }
  for (int i : kept) {
    Generator g = p.gens[i];
    g.degree = out.reduce_degree(g.degree);
    g.u = g.l = 0;
    out.gens.push_back(g);
    AlgebraElement x(out.mode);
    const AlgebraElement di = p.d[i].reduce(Ring::Z2, true);
    for (const auto& [term, c] : di.terms()) {
      Word w;
      bool pure = true;
      for (int g2 : term.word) {
        if (map[g2] < 0) {
          pure = false;
          break;
        }
        w.push_back(map[g2]);
      }
      if (pure) x.add_term(w, {}, c);
    }
    out.d.push_back(std::move(x));
  }
  if (ids) *ids = kept;
  return out;
}

std::vector<Augmentation> link_augmentations(const DGA& p, const AugmentationSearch& opt) {
  std::vector<Augmentation> out{Augmentation{std::vector<std::uint8_t>(p.size(), 0)}};
  for (int j = 0; j < p.components; ++j) {
    std::vector<int> ids;
    const DGA c = component_dga(p, j, &ids);
    AugmentationSearch graded = opt;
    graded.graded = true;
    const auto augs = find_augmentations(c, graded);
    std::vector<Augmentation> next;
    for (const auto& base : out)
      for (const auto& e : augs) {
        Augmentation x = base;
        for (std::size_t k = 0; k < ids.size(); ++k) x.values[ids[k]] = e.values[k];
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

SplitMatrix split_polynomials(const DGA& p, const Augmentation& eps, const std::vector<int>& rho2) {
  const int k = p.components;
  if (static_cast<int>(eps.values.size()) != p.size()) throw std::invalid_argument("augmentation has wrong length");
  auto shift = [&](const std::vector<int>& r, int j) { return j < static_cast<int>(r.size()) ? r[j] : 0; };
  const DGA q = mod2(p);
  SplitMatrix m(k, std::vector<LaurentPoly>(k));
  for (int j = 0; j < k; ++j) {
    std::vector<int> ids;
    const DGA c = component_dga(p, j, &ids);
    Augmentation e;
    for (int i : ids) e.values.push_back(eps.values[i]);
    m[j][j] = poincare_polynomial(c, e, 1);
  }
  auto mixed = [&](int g) { return q.gens[g].u != q.gens[g].l; };
  for (int j1 = 0; j1 < k; ++j1)
    for (int j2 = 0; j2 < k; ++j2) {
      if (j1 == j2) continue;
      LinearizedComplex cx;
      cx.modulus = q.modulus;
      std::vector<int> local(q.size(), -1);
      std::vector<int> members;
      for (int i = 0; i < q.size(); ++i)
        if (q.gens[i].u == j1 && q.gens[i].l == j2) {
          local[i] = static_cast<int>(members.size());
          members.push_back(i);
        }
      for (int i : members) {
        int deg = p.gens[i].degree;
        if (!rho2.empty()) deg += shift(rho2, j1) - shift(rho2, j2) - shift(p.rho2, j1) + shift(p.rho2, j2);
        cx.basis.push_back({i});
        cx.degrees.push_back(q.reduce_degree(deg));
        std::vector<int> hits(members.size(), 0);
        for (const auto& [term, c] : q.d[i].terms()) {
          int count = 0, which = -1;
          bool alive = true;
          for (int g : term.word) {
            if (mixed(g)) ++count, which = g;
            else if (!eps.values[g]) alive = false;
          }
          if (count != 1 || !alive) continue;
          if (local[which] < 0) throw std::logic_error("differential leaves its split summand");
          hits[local[which]] ^= 1;
        }
        std::vector<int> col;
        for (std::size_t x = 0; x < hits.size(); ++x)
          if (hits[x]) col.push_back(static_cast<int>(x));
        cx.boundary.push_back(std::move(col));
      }
      m[j1][j2] = cx.poincare();
    }
  return m;
}

namespace {

int entry(const std::vector<int>& r, int j) { return j < static_cast<int>(r.size()) ? r[j] : 0; }

}  // namespace

SplitMatrix SplitFamily::at(const std::vector<int>& target) const {
  SplitMatrix out = matrix;
  const int k = static_cast<int>(matrix.size());
  for (int j1 = 0; j1 < k; ++j1)
    for (int j2 = 0; j2 < k; ++j2) {
      const int s = entry(target, j1) - entry(target, j2) - entry(rho2, j1) + entry(rho2, j2);
      out[j1][j2] = matrix[j1][j2].shifted(s);
    }
  return out;
}

SplitFamily SplitFamily::permuted(const std::vector<int>& perm) const {
  const int k = static_cast<int>(matrix.size());
  SplitFamily out;
  out.matrix.assign(k, std::vector<LaurentPoly>(k));
  out.rho2.assign(k, 0);
  for (int j1 = 0; j1 < k; ++j1) {
    out.rho2[j1] = entry(rho2, perm[j1]);
    for (int j2 = 0; j2 < k; ++j2) out.matrix[j1][j2] = matrix[perm[j1]][perm[j2]];
  }
  return out;
}

}  // namespace legendrian
