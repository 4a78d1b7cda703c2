#include "legendrian/compare.hpp"

#include <cstdlib>
#include <tuple>

#include "legendrian/errors.hpp"

namespace legendrian {

std::string to_string(Verdict v) {
  return v == Verdict::Distinguished ? "DISTINGUISHED" : "INDISTINGUISHABLE-AT-BOUNDS";
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> equalizing_stabilizations(const DegreeDistribution& a,
                                                                                        const DegreeDistribution& b) {
  std::map<int, int> delta;
  for (const auto& [d, n] : b) delta[d] += n;
  for (const auto& [d, n] : a) delta[d] -= n;
  std::pair<std::vector<int>, std::vector<int>> out;
  if (delta.empty()) return out;
  const int lo = delta.begin()->first, hi = delta.rbegin()->first;
  // A pair with top degree d adds one generator in degrees d and d - 1.
  int above = 0;
  for (int d = hi; d > lo; --d) {
    const int c = (delta.count(d) ? delta[d] : 0) - above;
    for (int k = 0; k < std::abs(c); ++k) (c > 0 ? out.first : out.second).push_back(d);
    above = c;
  }
  if ((delta.count(lo) ? delta[lo] : 0) != above) return std::nullopt;
  return out;
}

namespace {

std::string poly_list(const std::vector<LaurentPoly>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + to_string(ps[i]);
  return s + "}";
}

struct Side {
  DGA dga;
  CharPresentation raw, simple;
  RewritingSystem rs;
  SearchOptions search;
};

Side prepare(const DGA& p, const std::vector<Probe>& probes, const CompareOptions& opt) {
  Side s;
  s.dga = p;
  s.raw = characteristic_presentation(p);
  TietzeOptions t = opt.tietze;
  t.bounds = opt.bounds;
  s.simple = tietze_simplify(s.raw, t);
  s.rs = complete_rewriting(s.simple, opt.bounds);
  s.search.bounds = opt.bounds;
  s.search.witness_len = opt.witness_len;
  s.search.tietze = t;
  s.search.prepared = prepare_probes(s.simple, probes, t);
  return s;
}

std::string elem(const CharPresentation& c, const std::optional<AlgebraElement>& x) {
  return x ? to_string(*x, c.names) : "";
}

// An element invertible from exactly one side, searched among generators
// and then words of length two.
std::optional<Certificate> one_sided_unit(const Side& s, const std::string& label) {
  const auto gens = s.simple.generators();
  std::vector<Word> candidates;
  for (int g : gens) candidates.push_back({g});
  for (int g : gens)
    for (int h : gens) candidates.push_back({g, h});
  const Mode m = CharPresentation::mode();
  for (const auto& w : candidates) {
    const AlgebraElement g = AlgebraElement::word(m, w);
    const Invertibility inv = one_sided_invertibility(s.simple, s.rs, g, s.search);
    const bool right_only = inv.right.answer == Answer::Yes && inv.left.answer == Answer::No;
    const bool left_only = inv.left.answer == Answer::Yes && inv.right.answer == Answer::No;
    if (!right_only && !left_only) continue;
    const SideResult& yes = right_only ? inv.right : inv.left;
    const SideResult& no = right_only ? inv.left : inv.right;
    Certificate c;
    c.property = "existence of an element invertible from one side only";
    c.summary = label + ": " + word_string(w, s.simple.names) + " is " + (right_only ? "right" : "left") +
                "-invertible with inverse " + elem(s.simple, yes.witness) + " but not " +
                (right_only ? "left" : "right") + "-invertible (" + no.certificate + ")";
    c.data["side"] = label;
    c.data["element"] = word_string(w, s.simple.names);
    c.data["invertible_side"] = right_only ? "right" : "left";
    c.data["inverse"] = elem(s.simple, yes.witness);
    c.data["obstruction"] = no.certificate;
    return c;
  }
  return std::nullopt;
}

}  // namespace

CompareResult compare_knots(const DGA& a_in, const DGA& b_in, const CompareOptions& opt) {
  CompareResult out;
  auto distinguished = [&](Certificate c) {
    out.verdict = Verdict::Distinguished;
    out.notes.push_back("distinguished by " + c.property);
    out.certificate = std::move(c);
    return out;
  };

  // Over Z/2 with t = 1 the grading group is Z/2r.
  DGA a = mod2(a_in), b = mod2(b_in);
  if (a.modulus != b.modulus) {
    Certificate c{"grading modulus (twice the rotation number)",
                  "moduli " + std::to_string(a.modulus) + " and " + std::to_string(b.modulus),
                  {{"modulus_a", std::to_string(a.modulus)}, {"modulus_b", std::to_string(b.modulus)}}};
    return distinguished(c);
  }

  const auto da = degree_distribution(a), db = degree_distribution(b);
  if (da != db) {
    const auto stab = a.modulus == 0 ? equalizing_stabilizations(da, db) : std::nullopt;
    if (stab) {
      for (int d : stab->first) a = stabilize(a, d, 1);
      for (int d : stab->second) b = stabilize(b, d, 1);
      out.notes.push_back("degree distributions equalized by " + std::to_string(stab->first.size()) + " + " +
                          std::to_string(stab->second.size()) + " stabilizations");
    } else {
      out.notes.push_back("degree distributions differ and cannot be equalized; not used as a certificate");
    }
  } else {
    out.notes.push_back("degree distributions agree");
  }

  if (a.components == 1 && b.components == 1) {
    for (int order : {1, 2}) {
      try {
        const auto pa = polynomial_set(a, order, opt.aug), pb = polynomial_set(b, order, opt.aug);
        out.notes.push_back("order " + std::to_string(order) + " polynomial sets " + poly_list(pa) + " vs " +
                            poly_list(pb));
        if (pa != pb) {
          Certificate c{"set of linearized Poincare polynomials of order " + std::to_string(order),
                        poly_list(pa) + " vs " + poly_list(pb),
                        {{"order", std::to_string(order)}, {"set_a", poly_list(pa)}, {"set_b", poly_list(pb)}}};
          return distinguished(c);
        }
      } catch (const BoundExceeded& e) {
        out.notes.push_back(std::string("polynomial sets skipped: ") + e.what());
        break;
      }
    }
  }

  const Side sa = prepare(a, opt.probes_a, opt), sb = prepare(b, opt.probes_b, opt);
  out.notes.push_back("characteristic algebras: " + std::to_string(sa.simple.relations.size()) + " and " +
                      std::to_string(sb.simple.relations.size()) + " relations after simplification");

  // Ungraded invariants first: their verdicts do not depend on a choice of grading.
  const auto dom_a = domain_certificate(sa.simple, opt.bounds);
  const auto dom_b = domain_certificate(sb.simple, opt.bounds);
  out.notes.push_back(std::string("domain certificate: A ") + (dom_a ? "yes" : "no") + ", B " + (dom_b ? "yes" : "no"));
  for (const auto& [dom, other, label] :
       {std::tuple{&dom_a, &sb, std::string("B")}, std::tuple{&dom_b, &sa, std::string("A")}}) {
    if (!*dom) continue;
    if (auto c = one_sided_unit(*other, label)) {
      c->summary += "; the other side has none: " + **dom;
      c->data["other_side"] = **dom;
      return distinguished(*c);
    }
    out.notes.push_back("no one-sided-only unit found in " + label + " at bound");
  }

  for (int k = 1; k <= opt.max_degree; ++k)
    for (int d : {k, -k}) {
      const PairingResult pa = graded_unit_pairing(sa.simple, sa.rs, d, sa.search);
      const PairingResult pb = graded_unit_pairing(sb.simple, sb.rs, d, sb.search);
      out.notes.push_back("graded unit pairing at d=" + std::to_string(d) + ": " + to_string(pa.answer) + " vs " +
                          to_string(pb.answer));
      const bool split = (pa.answer == Answer::Yes && pb.answer == Answer::No) ||
                         (pa.answer == Answer::No && pb.answer == Answer::Yes);
      if (!split) continue;
      const bool a_has = pa.answer == Answer::Yes;
      const PairingResult& yes = a_has ? pa : pb;
      const PairingResult& no = a_has ? pb : pa;
      const CharPresentation& cy = a_has ? sa.simple : sb.simple;
      Certificate c;
      c.property = "graded unit pairing in degree " + std::to_string(d);
      c.summary = std::string(a_has ? "A" : "B") + " has v w = 1 with v = " + elem(cy, yes.v) +
                  ", w = " + elem(cy, yes.w) + "; " + (a_has ? "B" : "A") + ": " + no.certificate;
      c.data["degree"] = std::to_string(d);
      c.data["exists_in"] = a_has ? "A" : "B";
      c.data["v"] = elem(cy, yes.v);
      c.data["w"] = elem(cy, yes.w);
      c.data["obstruction"] = no.certificate;
      return distinguished(c);
    }

  if (sa.raw.names != sb.raw.names) {
    out.notes.push_back("abelianizations not compared: generator sets differ");
    return out;
  }
  try {
    const bool match = abelianizations_match(sa.raw, sb.raw, opt.bounds);
    out.notes.push_back(std::string("abelianizations ") + (match ? "match" : "differ at bound") +
                        " (diagnostic only)");
  } catch (const BoundExceeded&) {
    out.notes.push_back("abelianization skipped: too many variables");
  }
  return out;
}

}  // namespace legendrian
