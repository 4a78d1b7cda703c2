#include <algorithm>
#include <set>

#include "legendrian/charalg.hpp"
#include "legendrian/errors.hpp"

namespace legendrian {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "";
}

std::optional<ToeplitzShape> toeplitz_shape(const CharPresentation& c) {
  if (c.trivial || c.relations.size() != 1) return std::nullopt;
  const Poly2 r = to_poly2(c.relations[0]);
  if (r.size() != 2 || r[0].size() != 2 || !r[1].empty() || r[0][0] == r[0][1]) return std::nullopt;
  ToeplitzShape t{r[0][0], r[0][1], {}};
  for (int g : c.generators())
    if (g != t.x && g != t.y) t.free.push_back(g);
  return t;
}

std::optional<int> toeplitz_annihilated(const ToeplitzShape& t, const AlgebraElement& g) {
  const Poly2 p = to_poly2(g);
  int longest = 0;
  for (const auto& w : p) longest = std::max(longest, static_cast<int>(w.size()));
  for (int j = 0; j <= longest; ++j) {
    std::set<int> image;
    for (const auto& w : p) {
      int pos = j;
      bool alive = true;
      for (auto it = w.rbegin(); it != w.rend() && alive; ++it) {
        if (*it == t.x) alive = pos-- > 0;
        else if (*it == t.y) ++pos;
        else alive = false;
      }
      if (!alive) continue;
      if (!image.insert(pos).second) image.erase(pos);
    }
    if (image.empty()) return j;
  }
  return std::nullopt;
}

AlgebraElement toeplitz_adjoint(const ToeplitzShape& t, const AlgebraElement& g) {
  AlgebraElement out(CharPresentation::mode());
  for (const auto& w : to_poly2(g)) {
    Word v(w.rbegin(), w.rend());
    for (int& a : v) a = a == t.x ? t.y : a == t.y ? t.x : a;
    out.add_term(v, {}, 1);
  }
  return out;
}

std::vector<PreparedProbe> prepare_probes(const CharPresentation& c, const std::vector<Probe>& probes,
                                          const TietzeOptions& opt) {
  std::vector<PreparedProbe> out;
  for (const auto& s : probes) {
    PreparedProbe p{s, probe_quotient(c, s, opt), std::nullopt, probe_is_graded(s, c)};
    p.shape = toeplitz_shape(p.quotient);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::vector<PreparedProbe> probes_for(const CharPresentation& c, const SearchOptions& opt) {
  return opt.prepared.empty() ? prepare_probes(c, opt.probes, opt.tietze) : opt.prepared;
}

const AlgebraElement kOne = AlgebraElement::one(CharPresentation::mode());

// Words in the present generators of length at most `len`, grouped by degree.
std::map<int, std::vector<Word>> words_by_degree(const CharPresentation& c, int len) {
  std::map<int, std::vector<Word>> out;
  std::vector<Word> layer{Word{}};
  out[0].push_back({});
  const auto gens = c.generators();
  for (int l = 1; l <= len; ++l) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int g : gens) {
        Word v = w;
        v.push_back(g);
        out[c.degree(v)].push_back(v);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  return out;
}

int reduce_mod(int d, int m) { return m > 0 ? ((d % m) + m) % m : d; }

bool is_one(const RewritingSystem& rs, const AlgebraElement& x) { return to_poly2(rs.normal_form(x)) == Poly2{Word{}}; }

// A point of the abelianization where every relation and g vanish.
std::optional<std::string> abelian_zero(const CharPresentation& c, const AlgebraElement& g) {
  const auto gens = c.generators();
  if (gens.size() > 20) return std::nullopt;
  std::vector<int> pos(c.size(), -1);
  for (std::size_t k = 0; k < gens.size(); ++k) pos[gens[k]] = static_cast<int>(k);
  auto eval = [&](const AlgebraElement& x, std::uint32_t a) {
    int v = 0;
    for (const auto& w : to_poly2(x)) {
      bool on = true;
      for (int l : w) on = on && ((a >> pos[l]) & 1);
      v ^= on;
    }
    return v;
  };
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << gens.size()); ++a) {
    if (eval(g, a)) continue;
    bool ok = true;
    for (const auto& r : c.relations) ok = ok && !eval(r, a);
    if (!ok) continue;
    std::string pt;
    for (std::size_t k = 0; k < gens.size(); ++k)
      pt += (k ? "," : "") + c.names[gens[k]] + "=" + std::to_string((a >> k) & 1);
    return "commutative point over F2 (" + pt + ") kills every relation and the element";
  }
  return std::nullopt;
}

}  // namespace

Invertibility one_sided_invertibility(const CharPresentation& c, const AlgebraElement& g, const SearchOptions& opt) {
  return one_sided_invertibility(c, complete_rewriting(c, opt.bounds), g, opt);
}

Invertibility one_sided_invertibility(const CharPresentation& c, const RewritingSystem& rs, const AlgebraElement& g,
                                      const SearchOptions& opt) {
  Invertibility out;
  const AlgebraElement x = c.express(g);
  if (c.trivial || rs.trivial()) {
    out.left = out.right = {Answer::Yes, AlgebraElement::zero(CharPresentation::mode()), "trivial algebra"};
    return out;
  }
  const auto dg = c.degree(x);
  for (const auto& [d, words] : words_by_degree(c, opt.witness_len)) {
    if (dg && reduce_mod(d + *dg, c.modulus) != 0) continue;
    for (const auto& w : words) {
      const AlgebraElement v = AlgebraElement::word(CharPresentation::mode(), w);
      if (out.right.answer == Answer::Unknown && is_one(rs, x * v))
        out.right = {Answer::Yes, v, "g * w reduces to 1"};
      if (out.left.answer == Answer::Unknown && is_one(rs, v * x))
        out.left = {Answer::Yes, v, "w * g reduces to 1"};
    }
  }
  const bool open = out.left.answer == Answer::Unknown || out.right.answer == Answer::Unknown;
  for (const auto& pp : open ? probes_for(c, opt) : std::vector<PreparedProbe>{}) {
    if (out.left.answer != Answer::Unknown && out.right.answer != Answer::Unknown) break;
    const Probe& s = pp.probe;
    const CharPresentation& q = pp.quotient;
    const auto& t = pp.shape;
    if (!t) continue;
    const AlgebraElement img = q.express(apply_probe(s, x, c.size()));
    const std::string head = "probe " + format_probe(s, c.names) + " maps onto <" + c.names[t->x] + ", " +
                             c.names[t->y] + " | 1 + " + c.names[t->x] + c.names[t->y] + ">; ";
    if (out.left.answer == Answer::Unknown)
      if (const auto j = toeplitz_annihilated(*t, img))
        out.left = {Answer::No, std::nullopt, head + "image kills e" + std::to_string(*j) + " in the shift module"};
    if (out.right.answer == Answer::Unknown)
      if (const auto j = toeplitz_annihilated(*t, toeplitz_adjoint(*t, img)))
        out.right = {Answer::No, std::nullopt,
                     head + "adjoint image kills e" + std::to_string(*j) + " in the shift module"};
  }
  if (out.left.answer == Answer::Unknown || out.right.answer == Answer::Unknown) {
    if (const auto why = abelian_zero(c, x)) {
      if (out.left.answer == Answer::Unknown) out.left = {Answer::No, std::nullopt, *why};
      if (out.right.answer == Answer::Unknown) out.right = {Answer::No, std::nullopt, *why};
    }
  }
  return out;
}

PairingResult graded_unit_pairing(const CharPresentation& c, int d, const SearchOptions& opt) {
  return graded_unit_pairing(c, complete_rewriting(c, opt.bounds), d, opt);
}

PairingResult graded_unit_pairing(const CharPresentation& c, const RewritingSystem& rs, int d,
                                  const SearchOptions& opt) {
  const Mode m = CharPresentation::mode();
  if (c.trivial || rs.trivial()) return {Answer::Yes, AlgebraElement::zero(m), AlgebraElement::zero(m), "trivial algebra"};
  if (reduce_mod(d, c.modulus) == 0) return {Answer::Yes, kOne, kOne, "degree 0"};
  const auto words = words_by_degree(c, opt.witness_len);
  const auto vs = words.find(reduce_mod(d, c.modulus));
  const auto ws = words.find(reduce_mod(-d, c.modulus));
  if (vs != words.end() && ws != words.end())
    for (const auto& v : vs->second)
      for (const auto& w : ws->second) {
        const AlgebraElement ev = AlgebraElement::word(m, v), ew = AlgebraElement::word(m, w);
        if (is_one(rs, ev * ew)) return {Answer::Yes, ev, ew, "v * w reduces to 1"};
      }
  if (c.relations.empty())
    return {Answer::No, std::nullopt, std::nullopt, "free algebra: units are scalars of degree 0"};
  if (c.modulus == 0) {
    for (const auto& pp : probes_for(c, opt)) {
      if (!pp.graded) continue;
      const Probe& s = pp.probe;
      const CharPresentation& q = pp.quotient;
      const auto& t = pp.shape;
      if (!t) continue;
      const int dx = q.degrees[t->x], dy = q.degrees[t->y];
      if (dx + dy != 0) continue;
      const bool reachable = dx == 0 ? d == 0 : (d % dx == 0 && d / dx >= 0);
      if (reachable) continue;
      return {Answer::No, std::nullopt, std::nullopt,
              "graded probe " + format_probe(s, c.names) + " maps onto <" + c.names[t->x] + ", " + c.names[t->y] +
                  " | 1 + " + c.names[t->x] + c.names[t->y] + "> with deg " + c.names[t->x] + " = " +
                  std::to_string(dx) + "; every element of degree " + std::to_string(-d) +
                  " kills e0 in the shift module, so no vw = 1"};
    }
  }
  return {Answer::Unknown, std::nullopt, std::nullopt, "no witness up to length " + std::to_string(opt.witness_len)};
}

std::optional<std::string> domain_certificate(const CharPresentation& c, const CompletionBounds& bounds) {
  if (c.trivial) return std::nullopt;
  if (c.relations.empty())
    return "free algebra on " + std::to_string(c.generators().size()) + " generators is a domain";
  std::set<int> used;
  for (const auto& r : c.relations)
    for (const auto& w : to_poly2(r)) used.insert(w.begin(), w.end());
  const std::vector<int> u(used.begin(), used.end());
  const Mode m = CharPresentation::mode();
  std::vector<AlgebraElement> pattern;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      pattern.push_back(AlgebraElement::word(m, {u[i], u[j]}) + AlgebraElement::word(m, {u[j], u[i]}));
  pattern.push_back(kOne + AlgebraElement::word(m, u));
  const RewritingSystem rc = RewritingSystem::complete(c.relations, bounds);
  const RewritingSystem rp = RewritingSystem::complete(pattern, bounds);
  if (rc.trivial() || rp.trivial()) return std::nullopt;
  for (const auto& x : pattern)
    if (rc.member(x) != Membership::Yes) return std::nullopt;
  for (const auto& x : c.relations)
    if (rp.member(x) != Membership::Yes) return std::nullopt;
  std::string names;
  for (int g : u) names += (names.empty() ? "" : ", ") + c.names[g];
  return "ideal equals <commutators of {" + names + "}, 1 + product>: C is a free product of a free algebra and a "
         "Laurent polynomial ring, a domain, so xy = 1 forces yx = 1";
}

}  // namespace legendrian
