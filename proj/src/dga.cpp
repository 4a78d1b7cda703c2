#include "legendrian/dga.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "legendrian/moves.hpp"

namespace legendrian {

std::vector<std::string> DGA::names() const {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.name);
  return out;
}

std::vector<int> DGA::degrees() const {
  std::vector<int> out;
  for (const auto& g : gens) out.push_back(g.degree);
  return out;
}

Derivation DGA::derivation() const { return leibniz_extend(d, degrees()); }

int DGA::reduce_degree(int deg) const {
  if (modulus <= 0) return deg;
  return ((deg % modulus) + modulus) % modulus;
}

int DGA::degree(const Term& t) const {
  int deg = 0;
  for (int g : t.word) deg += gens.at(g).degree;
  for (std::size_t j = 0; j < t.t.size() && j < t_degrees.size(); ++j) deg += t.t[j] * t_degrees[j];
  return reduce_degree(deg);
}

namespace {

int component_base(const BasePositions& base, int j) {
  return j < static_cast<int>(base.size()) ? base[j] : 0;
}

// Cusp count along the path from the base point (midpoint of cycle[q]) to
// junction J.
int cusps_from_base(const ComponentMap& cm, int j, int q, int J) {
  const int m = static_cast<int>(cm.cycle(j).size());
  const int total = cm.cusp_count(j);
  const int start = q + 1 <= m ? cm.cusp_count_to(j, q + 1) : total;
  if (J > q) return cm.cusp_count_to(j, J) - start;
  return total - start + cm.cusp_count_to(j, J);
}

// Does the forward path from junction a to junction b cover the midpoint of
// node q? Equal endpoints mean the whole cycle.
bool covers(int a, int b, int q, int m) {
  a %= m;
  b %= m;
  if (a < b) return a <= q && q < b;
  if (a > b) return q >= a || q < b;
  return true;
}

}  // namespace

std::vector<int> vertex_degrees(const FrontDiagram& d, const ComponentMap& cm,
                                const std::vector<Vertex>& vertices, bool link_mode,
                                const std::vector<int>& rho2, const BasePositions& base) {
  (void)d;
  auto shift = [&](int j) { return j < static_cast<int>(rho2.size()) ? rho2[j] : 0; };
  std::vector<int> out;
  for (const auto& v : vertices) {
    if (v.kind == VertexKind::RightCusp) {
      out.push_back(link_mode || v.cusp_upward ? 1 : 1 + cm.cusp_count(v.u));
      continue;
    }
    if (link_mode) {
      out.push_back(cusps_from_base(cm, v.u, component_base(base, v.u), v.desc_junction) -
                    cusps_from_base(cm, v.l, component_base(base, v.l), v.asc_junction) + shift(v.u) -
                    shift(v.l));
    } else {
      const int a = v.asc_junction, b = v.desc_junction;
      out.push_back(cm.cusp_count_to(v.u, b) - cm.cusp_count_to(v.u, a) + (b < a ? cm.cusp_count(v.u) : 0));
    }
  }
  return out;
}

DGA compute_dga(const FrontDiagram& d, const DgaOptions& opt) {
  const FrontDiagram s = make_simple(d);
  const ComponentMap cm = trace_components(s, opt.flip);
  const auto vs = vertex_table(s, cm);
  const int k = cm.num_components();
  const bool link = opt.link_mode.value_or(k > 1);
  if (!link && k > 1) throw std::invalid_argument("knot mode needs a single component");

  std::vector<int> rho2 = opt.rho2;
  rho2.resize(k, 0);
  if (rho2.back() != 0) throw std::invalid_argument("the last grading shift is fixed at 0");

  DGA p;
  p.mode = Mode{Ring::Z, link ? k : 1};
  p.components = k;
  p.link_mode = link;
  p.rho2 = rho2;
  for (int j = 0; j < k; ++j) p.t_degrees.push_back(-cm.cusp_count(j));
  if (!link) p.t_degrees.resize(1);

  const auto deg = vertex_degrees(s, cm, vs, link, rho2, opt.base);
  for (std::size_t i = 0; i < vs.size(); ++i)
    p.gens.push_back({"a" + std::to_string(i + 1), deg[i], vs[i].u, vs[i].l});

  const auto disks = opt.parallel ? enumerate_all_disks_parallel(s, cm, vs, opt.base)
                                  : enumerate_all_disks(s, cm, vs, opt.base);

  // Knot mode: does the capping path of vertex i pass the base point?
  std::vector<int> cap_pass(vs.size(), 0);
  if (!link) {
    const int m = static_cast<int>(cm.cycle(0).size());
    const int q = component_base(opt.base, 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& v = vs[i];
      if (v.kind == VertexKind::RightCusp) cap_pass[i] = v.cusp_upward ? 0 : 1;
      else cap_pass[i] = covers(v.asc_junction, v.desc_junction, q, m) ? 1 : 0;
    }
  }

  for (std::size_t i = 0; i < vs.size(); ++i) {
    AlgebraElement x(p.mode);
    if (vs[i].kind == VertexKind::RightCusp) {
      if (link || vs[i].cusp_upward) x.add_term({}, {}, 1);
      else x.add_term({}, {-1}, 1);
    }
    for (const auto& f : disks[i]) {
      std::vector<int> t(p.mode.num_t, 0);
      if (link) {
        for (int j = 0; j < k; ++j) t[j] = -f.passes[j];
      } else {
        int n = f.passes[0] + cap_pass[i];
        for (int c : f.corners) n -= cap_pass[c];
        t[0] = -n;
      }
      x.add_term(f.corners, t, f.sign);
    }
    p.d.push_back(std::move(x));
  }
  return p;
}

DGA mod2(const DGA& p) {
  DGA out = p;
  out.mode = Mode{Ring::Z2, 0};
  int g = p.modulus;
  for (int td : p.t_degrees) g = std::gcd(g, td < 0 ? -td : td);
  out.modulus = g;
  out.t_degrees.clear();
  for (auto& gen : out.gens) gen.degree = out.reduce_degree(gen.degree);
  for (auto& x : out.d) x = x.reduce(Ring::Z2, true);
  return out;
}

bool lowers_degree_by_one(const DGA& p, std::string* why) {
  const auto names = p.names();
  for (int i = 0; i < p.size(); ++i) {
    const int want = p.reduce_degree(p.gens[i].degree - 1);
    for (const auto& [term, c] : p.d[i].terms()) {
      if (p.degree(term) == want) continue;
      if (why) {
        std::ostringstream msg;
        msg << "d" << p.gens[i].name << " has term " << word_string(term.word, names) << " of degree "
            << p.degree(term) << ", expected " << want;
        *why = msg.str();
      }
      return false;
    }
  }
  return true;
}

bool d_squared_zero(const DGA& p, std::string* why) {
  const Derivation dd = p.derivation();
  for (int i = 0; i < p.size(); ++i) {
    const AlgebraElement x = dd(p.d[i]);
    if (x.is_zero()) continue;
    if (why) *why = "d^2 " + p.gens[i].name + " = " + to_string(x, p.names());
    return false;
  }
  return true;
}

BasePointShift compose(const BasePointShift& a, const BasePointShift& b) {
  BasePointShift out;
  const std::size_t n = std::max(a.u_moves.size(), b.u_moves.size());
  out.u_moves.assign(n, 0);
  out.l_moves.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.u_moves.size()) out.u_moves[i] += a.u_moves[i], out.l_moves[i] += a.l_moves[i];
    if (i < b.u_moves.size()) out.u_moves[i] += b.u_moves[i], out.l_moves[i] += b.l_moves[i];
  }
  return out;
}

BasePointShift base_point_shift(const std::vector<Vertex>& vertices, const BasePositions& base) {
  BasePointShift s;
  for (const auto& v : vertices) {
    const int qu = component_base(base, v.u), ql = component_base(base, v.l);
    s.u_moves.push_back(qu > 0 && v.desc_junction <= qu ? 1 : 0);
    s.l_moves.push_back(ql > 0 && v.asc_junction <= ql ? 1 : 0);
  }
  return s;
}

DGA base_point_change(const DGA& p, const BasePointShift& s) {
  if (!p.link_mode) throw std::invalid_argument("base point change applies to link-mode DGAs");
  const int k = p.mode.num_t;
  auto coeff = [&](int i) {
    std::vector<int> t(k, 0);
    if (k == 0 || i >= static_cast<int>(s.u_moves.size())) return t;
    t[p.gens[i].u] += s.u_moves[i];
    t[p.gens[i].l] -= s.l_moves[i];
    return t;
  };
  std::vector<std::optional<AlgebraElement>> phi(p.size());
  for (int i = 0; i < p.size(); ++i) phi[i] = AlgebraElement::word(p.mode, {i}, 1, coeff(i));
  DGA out = p;
  for (int i = 0; i < p.size(); ++i) {
    std::vector<int> inv = coeff(i);
    int shift = 0;
    for (int j = 0; j < k; ++j) {
      shift += inv[j] * p.t_degrees[j];
      inv[j] = -inv[j];
    }
    out.gens[i].degree = p.gens[i].degree - shift;
    out.d[i] = substitute(p.d[i], phi).scaled(1, inv);
  }
  return out;
}

std::optional<std::pair<int, int>> gamma_split(const Word& w, const std::vector<Generator>& gens) {
  if (w.empty()) return std::nullopt;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (gens.at(w[i]).l != gens.at(w[i + 1]).u) return std::nullopt;
  return std::make_pair(gens.at(w.front()).u, gens.at(w.back()).l);
}

DGA link_module(const DGA& p) {
  DGA out = p;
  const int n = p.size();
  for (int j = 0; j < p.components; ++j) {
    out.gens.push_back({"e" + std::to_string(j + 1), 0, j, j});
    out.d.push_back(AlgebraElement(p.mode));
  }
  for (int i = 0; i < n; ++i) {
    AlgebraElement x(p.mode);
    for (const auto& [term, c] : p.d[i].terms()) {
      if (term.word.empty()) x.add_term({n + p.gens[i].u}, term.t, c);
      else x.add_term(term.word, term.t, c);
    }
    out.d[i] = std::move(x);
  }
  return out;
}

DGA stabilize(const DGA& p, int degree, int count) {
  DGA out = p;
  int next = 1;
  for (const auto& g : p.gens)
    if (g.name.size() > 1 && g.name[0] == 's') next = std::max(next, std::atoi(g.name.c_str() + 1) + 1);
  for (int c = 0; c < count; ++c) {
    const int x = out.size();
    out.gens.push_back({"s" + std::to_string(next++), out.reduce_degree(degree), 0, 0});
    out.gens.push_back({"s" + std::to_string(next++), out.reduce_degree(degree - 1), 0, 0});
    out.d.push_back(AlgebraElement::gen(p.mode, x + 1));
    out.d.push_back(AlgebraElement(p.mode));
  }
  return out;
}

}  // namespace legendrian
