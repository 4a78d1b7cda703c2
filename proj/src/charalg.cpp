#include "legendrian/charalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "legendrian/errors.hpp"

namespace legendrian {

std::vector<int> CharPresentation::generators() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (present[i]) out.push_back(i);
  return out;
}

int CharPresentation::degree(const Word& w) const {
  int d = 0;
  for (int g : w) d += degrees[g];
  return modulus > 0 ? ((d % modulus) + modulus) % modulus : d;
}

std::optional<int> CharPresentation::degree(const AlgebraElement& x) const {
  std::optional<int> d;
  for (const auto& [term, c] : x.terms()) {
    const int e = degree(term.word);
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

AlgebraElement CharPresentation::express(const AlgebraElement& x) const {
  std::vector<std::optional<AlgebraElement>> images(size());
  for (int i = 0; i < size(); ++i)
    if (!present[i] && values[i]) images[i] = *values[i];
  return substitute(x.reduce(Ring::Z2, true), images);
}

CharPresentation characteristic_presentation(const DGA& p) {
  const DGA q = mod2(p);
  CharPresentation c;
  c.modulus = q.modulus;
  for (const auto& g : q.gens) {
    c.names.push_back(g.name);
    c.degrees.push_back(q.reduce_degree(g.degree));
  }
  c.present.assign(q.size(), true);
  c.values.assign(q.size(), std::nullopt);
  for (const auto& x : q.d)
    if (!x.is_zero()) c.relations.push_back(x.reduce(Ring::Z2, true));
  canonicalize(c);
  return c;
}

namespace {

bool poly_less(const Poly2& a, const Poly2& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    return deglex_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

}  // namespace

void canonicalize(CharPresentation& c) {
  std::vector<Poly2> rels;
  for (const auto& r : c.relations) {
    Poly2 p = to_poly2(r);
    if (p.empty()) continue;
    if (p == Poly2{Word{}}) c.trivial = true;
    rels.push_back(std::move(p));
  }
  if (c.trivial) rels = {Poly2{Word{}}};
  std::sort(rels.begin(), rels.end(), poly_less);
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  c.relations.clear();
  for (const auto& p : rels) c.relations.push_back(from_poly2(p));
}

std::string format_presentation(const CharPresentation& c) {
  std::ostringstream out;
  out << "generators:";
  for (int g : c.generators()) out << " " << c.names[g] << "[" << c.degrees[g] << "]";
  out << "\ngrading: " << (c.modulus ? "Z/" + std::to_string(c.modulus) : std::string("Z")) << "\n";
  if (c.trivial) out << "trivial: 1 = 0\n";
  out << "relations:\n";
  for (const auto& r : c.relations) out << "  " << to_string(r, c.names) << "\n";
  bool any = false;
  for (int i = 0; i < c.size(); ++i) {
    if (c.present[i] || !c.values[i]) continue;
    if (!any) out << "eliminated:\n";
    any = true;
    out << "  " << c.names[i] << " = " << to_string(*c.values[i], c.names) << "\n";
  }
  return out.str();
}

namespace {

// (g, v) with r = g + v and v free of g, choosing the largest such g.
std::optional<std::pair<int, Poly2>> eliminable(const CharPresentation& c, const Poly2& r) {
  std::optional<std::pair<int, Poly2>> best;
  for (const auto& w : r) {
    if (w.size() != 1 || !c.present[w[0]]) continue;
    const int g = w[0];
    bool elsewhere = false;
    for (const auto& u : r)
      if (u != w && std::find(u.begin(), u.end(), g) != u.end()) elsewhere = true;
    if (elsewhere) continue;
    if (!best || g > best->first) best = std::make_pair(g, add(r, Poly2{w}));
  }
  return best;
}

void eliminate(CharPresentation& c, int g, const AlgebraElement& v) {
  std::vector<std::optional<AlgebraElement>> images(c.size());
  images[g] = v;
  for (auto& r : c.relations) r = substitute(r, images);
  for (auto& val : c.values)
    if (val) val = substitute(*val, images);
  c.present[g] = false;
  c.values[g] = v;
  c.log.push_back("eliminate " + c.names[g] + " = " + to_string(v, c.names));
  canonicalize(c);
}

bool eliminate_syntactic(CharPresentation& c) {
  bool changed = false;
  for (;;) {
    std::optional<std::pair<int, Poly2>> best;
    for (const auto& r : c.relations) {
      const auto e = eliminable(c, to_poly2(r));
      if (e && (!best || e->first > best->first)) best = e;
    }
    if (!best) return changed;
    eliminate(c, best->first, from_poly2(best->second));
    changed = true;
  }
}

void mark_trivial(CharPresentation& c, const std::string& why) {
  c.trivial = true;
  c.relations = {AlgebraElement::one(CharPresentation::mode())};
  c.log.push_back(why);
}

}  // namespace

CharPresentation tietze_simplify(const CharPresentation& input, const TietzeOptions& opt) {
  CharPresentation c = input;
  canonicalize(c);
  for (int round = 0; round <= opt.effort && !c.trivial; ++round) {
    bool changed = eliminate_syntactic(c);
    if (c.trivial || round == opt.effort) break;
    const RewritingSystem rs = RewritingSystem::complete(c.relations, opt.bounds);
    if (rs.trivial()) {
      mark_trivial(c, "completion derives 1 = 0");
      break;
    }
    std::vector<std::pair<int, Poly2>> derived;
    for (const auto& rule : rs.rules()) {
      const Poly2 r = add(Poly2{rule.lhs}, rule.rhs);
      if (auto e = eliminable(c, r)) derived.push_back(*e);
    }
    std::sort(derived.begin(), derived.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [g, v] : derived) {
      if (!c.present[g]) continue;
      // Re-express the derived relation through eliminations made meanwhile.
      const Poly2 r = to_poly2(c.express(from_poly2(add(Poly2{Word{g}}, v))));
      const auto e = eliminable(c, r);
      if (!e || e->first != g) continue;
      c.log.push_back("derived " + to_string(from_poly2(r), c.names));
      eliminate(c, g, from_poly2(e->second));
      changed = true;
    }
    if (!changed) break;
  }
  if (opt.prune && !c.trivial && c.relations.size() > 1) {
    for (std::size_t i = c.relations.size(); i-- > 0;) {
      std::vector<AlgebraElement> others;
      for (std::size_t j = 0; j < c.relations.size(); ++j)
        if (j != i) others.push_back(c.relations[j]);
      const RewritingSystem rs = RewritingSystem::complete(others, opt.bounds);
      if (rs.member(c.relations[i]) == Membership::Yes) {
        c.log.push_back("drop implied relation " + to_string(c.relations[i], c.names));
        c.relations.erase(c.relations.begin() + static_cast<long>(i));
      }
    }
  }
  return c;
}

RewritingSystem complete_rewriting(const CharPresentation& c, const CompletionBounds& bounds) {
  return RewritingSystem::complete(c.relations, bounds);
}

Membership ideal_member(const RewritingSystem& rs, const CharPresentation& c, const AlgebraElement& x) {
  return rs.member(c.express(x));
}

Probe parse_probe(const std::string& text, const std::vector<std::string>& names) {
  auto find = [&](const std::string& n) {
    const auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw std::invalid_argument("unknown generator '" + n + "' in probe");
    return static_cast<int>(it - names.begin());
  };
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\n");
    const auto e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  Probe s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("probe entry '" + item + "' lacks '='");
    const std::string lhs = trim(item.substr(0, eq)), rhs = trim(item.substr(eq + 1));
    if (lhs == "rest") {
      if (rhs != "0") throw std::invalid_argument("only rest=0 is supported");
      s.rest_zero = true;
      continue;
    }
    ProbeValue v;
    if (rhs == "0") v.kind = ProbeValue::Kind::Zero;
    else if (rhs == "1") v.kind = ProbeValue::Kind::One;
    else v = {ProbeValue::Kind::Generator, find(rhs)};
    s.values[find(lhs)] = v;
  }
  for (const auto& [g, v] : s.values)
    if (v.kind == ProbeValue::Kind::Generator && s.values.count(v.generator))
      throw std::invalid_argument("probe target " + names[v.generator] + " is itself substituted");
  return s;
}

std::string format_probe(const Probe& s, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& [g, v] : s.values) {
    if (!out.empty()) out += ", ";
    out += names[g] + "=";
    if (v.kind == ProbeValue::Kind::Zero) out += "0";
    else if (v.kind == ProbeValue::Kind::One) out += "1";
    else out += names[v.generator];
  }
  if (s.rest_zero) out += out.empty() ? "rest=0" : ", rest=0";
  return out;
}

namespace {

std::vector<std::optional<AlgebraElement>> probe_images(const Probe& s, int n) {
  const Mode m = CharPresentation::mode();
  std::set<int> targets;
  for (const auto& [g, v] : s.values)
    if (v.kind == ProbeValue::Kind::Generator) targets.insert(v.generator);
  std::vector<std::optional<AlgebraElement>> images(n);
  for (int g = 0; g < n; ++g) {
    const auto it = s.values.find(g);
    if (it != s.values.end()) {
      const ProbeValue& v = it->second;
      if (v.kind == ProbeValue::Kind::Zero) images[g] = AlgebraElement::zero(m);
      else if (v.kind == ProbeValue::Kind::One) images[g] = AlgebraElement::one(m);
      else images[g] = AlgebraElement::gen(m, v.generator);
    } else if (s.rest_zero && !targets.count(g)) {
      images[g] = AlgebraElement::zero(m);
    }
  }
  return images;
}

}  // namespace

AlgebraElement apply_probe(const Probe& s, const AlgebraElement& x, int num_generators) {
  return substitute(x.reduce(Ring::Z2, true), probe_images(s, num_generators));
}

bool probe_is_graded(const Probe& s, const CharPresentation& c) {
  const auto images = probe_images(s, c.size());
  for (int g = 0; g < c.size(); ++g) {
    if (!images[g] || !c.present[g] || images[g]->is_zero()) continue;
    const auto d = c.degree(*images[g]);
    if (!d || *d != c.degrees[g]) return false;
  }
  return true;
}

CharPresentation probe_quotient(const CharPresentation& c, const Probe& s, const TietzeOptions& opt) {
  CharPresentation out = c;
  const auto images = probe_images(s, c.size());
  std::set<int> targets;
  for (const auto& [g, v] : s.values)
    if (v.kind == ProbeValue::Kind::Generator) targets.insert(v.generator);
  for (auto& r : out.relations) r = substitute(r, images);
  for (int g = 0; g < c.size(); ++g) {
    if (c.present[g]) {
      if (!images[g]) continue;
      out.present[g] = false;
      out.values[g] = *images[g];
      continue;
    }
    const AlgebraElement v = substitute(*c.values[g], images);
    if (targets.count(g)) {
      // A target must stay a generator; its old value becomes a relation.
      out.present[g] = true;
      out.values[g].reset();
      out.relations.push_back(AlgebraElement::gen(CharPresentation::mode(), g) + v);
    } else if (images[g]) {
      out.values[g] = *images[g];
      out.relations.push_back(*images[g] + v);
    } else {
      out.values[g] = v;
    }
  }
  out.log.push_back("probe " + format_probe(s, c.names));
  canonicalize(out);
  return tietze_simplify(out, opt);
}

CharPresentation mirror_presentation(const CharPresentation& c) {
  CharPresentation out = c;
  for (auto& r : out.relations) r = reverse(r);
  for (auto& v : out.values)
    if (v) v = reverse(*v);
  out.log.push_back("mirror");
  canonicalize(out);
  return out;
}

DGA mirror_dga(const DGA& p) {
  DGA out = p;
  for (auto& x : out.d) x = reverse(x);
  return out;
}

namespace {

// One bitmask of variables per monomial; over F2 points x^2 = x.
std::vector<std::uint32_t> term_masks(const std::vector<int>& pos, const AlgebraElement& r) {
  std::vector<std::uint32_t> out;
  for (const auto& [term, coeff] : r.terms()) {
    if (!(coeff % 2)) continue;
    std::uint32_t m = 0;
    for (int g : term.word) m |= std::uint32_t{1} << pos[g];
    out.push_back(m);
  }
  return out;
}

}  // namespace

Abelianization abelianize(const CharPresentation& c, long long max_points) {
  Abelianization ab;
  const auto gens = c.generators();
  ab.variables = static_cast<int>(gens.size());
  for (const auto& r : c.relations) {
    AlgebraElement x(CharPresentation::mode());
    for (const auto& [term, coeff] : r.terms()) {
      Word w = term.word;
      std::sort(w.begin(), w.end());
      x.add_term(w, {}, coeff);
    }
    if (!x.is_zero()) ab.relations.push_back(x);
  }
  if (ab.variables > 30 || (1LL << ab.variables) > max_points)
    throw BoundExceeded("abelianization has " + std::to_string(ab.variables) + " variables");
  std::vector<int> pos(c.size(), -1);
  for (std::size_t k = 0; k < gens.size(); ++k) pos[gens[k]] = static_cast<int>(k);
  std::vector<std::vector<std::uint32_t>> masks;
  for (const auto& r : ab.relations) masks.push_back(term_masks(pos, r));
  std::uint32_t graded_vars = 0;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (c.degrees[gens[k]] == 0) graded_vars |= std::uint32_t{1} << k;
  const std::uint32_t total = std::uint32_t{1} << ab.variables;
  for (std::uint32_t a = 0; a < total; ++a) {
    bool ok = true;
    for (const auto& ms : masks) {
      int v = 0;
      for (std::uint32_t m : ms) v ^= (m & ~a) == 0;
      if (v) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    ++ab.ungraded_points;
    if ((a & ~graded_vars) == 0) ++ab.graded_points;
  }
  return ab;
}

bool abelianizations_match(const CharPresentation& a, const CharPresentation& b, const CompletionBounds& bounds) {
  if (a.names != b.names) return false;
  auto system = [&](const CharPresentation& c) {
    std::vector<AlgebraElement> rels = abelianize(c).relations;
    const auto gens = c.generators();
    const Mode m = CharPresentation::mode();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        rels.push_back(AlgebraElement::word(m, {gens[i], gens[j]}) + AlgebraElement::word(m, {gens[j], gens[i]}));
    return rels;
  };
  const auto ra = system(a), rb = system(b);
  const RewritingSystem sa = RewritingSystem::complete(ra, bounds), sb = RewritingSystem::complete(rb, bounds);
  for (const auto& r : ra)
    if (sb.member(r) != Membership::Yes) return false;
  for (const auto& r : rb)
    if (sa.member(r) != Membership::Yes) return false;
  return true;
}

}  // namespace legendrian
