#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "legendrian/charalg.hpp"
#include "legendrian/compare.hpp"
#include "legendrian/corpus.hpp"
#include "legendrian/invariants.hpp"
#include "legendrian/moves.hpp"

using namespace legendrian;

namespace {

// A failed check throws with a message naming it.
struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail, error;
  try {
    detail = body();
  } catch (const Failure& f) {
    error = f.what;
  } catch (const std::exception& e) {
    error = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (error.empty() && secs >= limit_s) error = "time limit exceeded";
  const bool ok = error.empty();
  failures += !ok;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (ok ? "PASS" : "FAIL") << " " << n << " " << title << " (" << secs << " s, limit " << limit_s << " s)";
  if (!ok) line << ": " << error;
  else if (!detail.empty()) line << ": " << detail;
  std::cout << line.str() << std::endl;
}

DGA named(const std::string& n) { return corpus_dga(*find_corpus(n)); }

std::vector<Probe> probes_of(const std::string& n, const std::vector<std::string>& names) {
  std::vector<Probe> out;
  for (const auto& t : find_corpus(n)->probes) out.push_back(parse_probe(t, names));
  return out;
}

CompareOptions options_for(const std::string& a, const std::string& b) {
  CompareOptions opt;
  opt.probes_a = probes_of(a, named(a).names());
  opt.probes_b = probes_of(b, named(b).names());
  return opt;
}

LaurentPoly lam(int e, long long c = 1) { return LaurentPoly::monomial(e, c); }

struct Classical {
  int tb;
  std::vector<int> r;
  int components;
  bool operator==(const Classical&) const = default;
};

Classical classical(const FrontDiagram& f) {
  const ComponentMap cm = trace_components(f);
  Classical c{thurston_bennequin(f, cm), {}, cm.num_components()};
  for (int j = 0; j < c.components; ++j) c.r.push_back(rotation_number(cm, j));
  return c;
}

std::vector<SplitFamily> split_families(const DGA& p) {
  std::vector<SplitFamily> out;
  for (const auto& e : link_augmentations(p))
    out.push_back(SplitFamily{std::vector<int>(p.components, 0), split_polynomials(p, e)});
  return out;
}

std::string c1() {
  const Classical u = classical(corpus_front(*find_corpus("unknot")));
  const Classical t = classical(corpus_front(*find_corpus("trefoil")));
  const Classical s = classical(corpus_front(*find_corpus("zigzag")));
  expect(u.tb == -1 && u.r == std::vector<int>{0}, "unknot (tb, r)");
  expect(t.tb == 1 && t.r == std::vector<int>{0}, "trefoil (tb, r)");
  expect(s.tb == -2 && s.r.size() == 1 && std::abs(s.r[0]) == 1, "zigzag (tb, r)");
  return "U (-1, 0), T (1, 0), S (-2, " + std::to_string(s.r[0]) + ")";
}

std::string c2() {
  int checked = 0;
  auto check = [&](const DGA& p, const std::string& label) {
    std::string why;
    expect(lowers_degree_by_one(p, &why), label + ": " + why);
    expect(d_squared_zero(p, &why), label + ": " + why);
    ++checked;
  };
  for (const auto& e : corpus()) check(corpus_dga(e), e.name);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const FrontDiagram f = random_front(seed, 12);
    expect(f.events.size() <= 12, "random front size");
    check(compute_dga(f), "random front " + std::to_string(seed));
  }
  return std::to_string(checked) + " DGAs over Z[t, t^-1]";
}

std::string c3() {
  const DGA t = compute_dga(corpus_front(*find_corpus("trefoil")));
  const auto augs = find_augmentations(t);
  expect(augs.size() == 5, "augmentation count " + std::to_string(augs.size()));
  for (const auto& e : augs) expect(poincare_polynomial(t, e, 1) == lam(1) + lam(0, 2), "first-order polynomial");
  const DGA m = mod2(t);
  const auto n = m.names();
  std::set<std::string> cusps, want;
  for (int i = 0; i < m.size(); ++i)
    if (m.gens[i].degree == 1) cusps.insert(to_string(m.d[i], n));
  for (const char* s : {"1 + a1 + a3 + a1 a2 a3", "1 + a1 + a3 + a3 a2 a1"})
    want.insert(to_string(parse_element(s, n, m.mode), n));
  expect(cusps == want, "cusp differentials");
  return "5 augmentations, P = λ + 2";
}

std::string c4() {
  int runs = 0;
  for (const char* name : {"unknot", "trefoil", "double"}) {
    const FrontDiagram f = corpus_front(*find_corpus(name));
    const Classical base = classical(f);
    const DGA p = compute_dga(f);
    const auto polys = polynomial_set(p, 1);
    const auto families = base.components > 1 ? split_families(p) : std::vector<SplitFamily>{};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const std::string label = std::string(name) + " seed " + std::to_string(seed);
      const FrontDiagram g = random_isotopy(f, seed, 25);
      expect(classical(g) == base, label + ": classical invariants");
      const DGA q = compute_dga(g);
      expect(polynomial_set(q, 1) == polys, label + ": polynomial set");
      if (base.components > 1) expect(family_sets_match(families, split_families(q)), label + ": split matrices");
      ++runs;
    }
  }
  return std::to_string(runs) + " runs of 25 moves";
}

std::string c5() {
  const CharPresentation raw = characteristic_presentation(named("6_2"));
  const Mode m = CharPresentation::mode();
  auto el = [&](const std::string& s) { return parse_element(s, raw.names, m); };
  const RewritingSystem rs_raw = complete_rewriting(raw);
  expect(rs_raw.member(el("a8")) == Membership::Yes, "a8 in the ideal");
  expect(rs_raw.member(el("a11 + a10 a5 a5")) == Membership::Yes, "a11 + a10 a5^2 in the ideal");
  const std::vector<AlgebraElement> target{el("1 + a10 a5 a3"), el("1 + a3 a10 a5"), el("1 + a10 a10 a5 a5"),
                                          el("1 + a10 a5 + a6 a10 + a10 a5 a5 a7")};
  for (const auto& r : target) expect(rs_raw.member(r) == Membership::Yes, "relation " + to_string(r, raw.names));
  // Conversely these relations with a8 = 0, a11 = a10 a5^2 recover every relation.
  std::vector<AlgebraElement> back = target;
  back.push_back(el("a8"));
  back.push_back(el("a11 + a10 a5 a5"));
  const RewritingSystem rs_target = RewritingSystem::complete(back);
  for (const auto& r : raw.relations) expect(rs_target.member(r) == Membership::Yes, "converse " + to_string(r, raw.names));

  const CharPresentation c = tietze_simplify(raw);
  const CharPresentation mc = tietze_simplify(characteristic_presentation(named("6_2_mirror")));
  SearchOptions opt;
  opt.probes = probes_of("6_2", c.names);
  const PairingResult yes = graded_unit_pairing(c, 1, opt);
  expect(yes.answer == Answer::Yes, "pairing at d=1 for 6_2");
  expect(*yes.v == el("a10") && *yes.w == el("a5 a3"), "witness (a10, a5 a3)");
  const PairingResult no = graded_unit_pairing(mc, 1, opt);
  expect(no.answer == Answer::No, "pairing at d=1 for the mirror");
  const CompareResult r = compare_knots(named("6_2"), named("6_2_mirror"), options_for("6_2", "6_2_mirror"));
  expect(r.verdict == Verdict::Distinguished, "compare verdict");
  return "witness (a10, a5 a3); mirror: " + no.certificate;
}

std::string c6() {
  const Mode m = CharPresentation::mode();
  const CharPresentation raw2 = characteristic_presentation(named("7_4_K2"));
  auto el2 = [&](const std::string& s) { return parse_element(s, raw2.names, m); };
  const RewritingSystem rs2 = complete_rewriting(raw2);
  expect(rs2.normal_form(el2("a13 a12")) == AlgebraElement::one(m), "normal form of a13 a12");

  const CharPresentation c2 = tietze_simplify(raw2);
  const CharPresentation q = probe_quotient(c2, parse_probe("a3=1, a7=a13, a8=a12, rest=0", c2.names));
  const auto shape = toeplitz_shape(q);
  expect(shape && shape->x == 12 && shape->y == 11 && shape->free.empty(), "probe quotient <a12, a13 | 1 + a13 a12>");
  SearchOptions opt;
  opt.probes = probes_of("7_4_K2", c2.names);
  const Invertibility inv = one_sided_invertibility(c2, AlgebraElement::gen(m, 12), opt);
  expect(inv.right.answer == Answer::Yes, "a13 right-invertible");
  expect(inv.left.answer == Answer::No, "a13 not left-invertible");

  const CharPresentation c1 = tietze_simplify(characteristic_presentation(named("7_4_K1")));
  auto el1 = [&](const std::string& s) { return parse_element(s, c1.names, m); };
  for (int g : {5, 6, 10, 11}) expect(!c1.present[g], "K1 eliminates " + c1.names[g]);
  const std::vector<AlgebraElement> commuting{el1("1 + a3 a8 a13"), el1("a3 a8 + a8 a3"), el1("a3 a13 + a13 a3"),
                                            el1("a8 a13 + a13 a8")};
  const RewritingSystem rs_commuting = RewritingSystem::complete(commuting);
  const RewritingSystem rs1 = complete_rewriting(c1);
  for (const auto& r : commuting) expect(ideal_member(rs1, c1, r) == Membership::Yes, "commuting-form relation in C1");
  for (const auto& r : c1.relations) expect(rs_commuting.member(r) == Membership::Yes, "C1 relation in commuting form");

  const CompareResult r = compare_knots(named("7_4_K1"), named("7_4_K2"), options_for("7_4_K1", "7_4_K2"));
  expect(r.verdict == Verdict::Distinguished, "compare verdict");
  return "a13 left obstruction: " + inv.left.certificate;
}

std::string c7() {
  const FrontDiagram u = corpus_front(*find_corpus("unknot"));
  const DGA p = compute_dga(n_copy(u, 3));
  expect(p.size() == 9, "vertex count " + std::to_string(p.size()));
  const auto augs = link_augmentations(p);
  expect(!augs.empty(), "link augmentation");
  for (int r1 = -1; r1 <= 1; ++r1)
    for (int r2 = -1; r2 <= 1; ++r2) {
      const SplitMatrix want{{lam(1), lam(-1 + 2 * r1 - 2 * r2), lam(-1 + 2 * r1)},
                             {lam(1 + 2 * r2 - 2 * r1), lam(1), lam(-1 + 2 * r2)},
                             {lam(1 - 2 * r1), lam(1 - 2 * r2), lam(1)}};
      for (const auto& e : augs)
        expect(split_polynomials(p, e, {2 * r1, 2 * r2, 0}) == want,
               "split table at rho = (" + std::to_string(r1) + ", " + std::to_string(r2) + ")");
    }
  const SplitFamily f{{0, 0, 0}, split_polynomials(p, augs.front())};
  MatchOptions half;
  half.half_integers = true;
  expect(match_gradings(f, f, half).has_value(), "self match");
  expect(!match_gradings(f, f.permuted({1, 0, 2}), half).has_value(), "(1 2)-permuted family matched");
  return "9 vertices, table matches, permuted match NONE";
}

std::string c8() {
  int compared = 0, random_dgas = 0;
  auto cross = [&](const DGA& p, const std::string& label) {
    for (const auto& e : find_augmentations(p)) {
      expect(poincare_polynomial(p, e, 2) == second_order_via_lemmas(p, e), label);
      ++compared;
    }
  };
  for (const auto& e : corpus()) cross(corpus_dga(e), e.name);
  const auto u = find_augmentations(named("unknot"));
  expect(poincare_polynomial(named("unknot"), u.front(), 2) == lam(2) + lam(1), "unknot gives λ^2 + λ");
  for (std::uint64_t seed = 1; random_dgas < 50 && seed < 5000; ++seed) {
    const FrontDiagram f = random_front(seed, 10);
    if (trace_components(f).num_components() != 1) continue;
    const DGA p = compute_dga(f);
    if (find_augmentations(p).empty()) continue;
    cross(p, "random front " + std::to_string(seed));
    ++random_dgas;
  }
  expect(random_dgas == 50, "50 random DGAs with augmentations");
  return std::to_string(compared) + " augmentations compared";
}

std::string c9() {
  int stabilized = 0;
  for (const auto& e : corpus()) {
    const DGA p = corpus_dga(e);
    const auto p1 = polynomial_set(p, 1), p2 = polynomial_set(p, 2);
    for (int d = -2; d <= 3; ++d) {
      const DGA s = stabilize_dga(p, d);
      const std::string label = e.name + " d=" + std::to_string(d);
      expect(polynomial_set(s, 1) == p1, label + ": order 1 set");
      expect(polynomial_set(s, 2) == p2, label + ": order 2 set");
      ++stabilized;
    }
  }
  const std::vector<std::tuple<std::string, std::string, Verdict>> pairs{
      {"6_2", "6_2_mirror", Verdict::Distinguished},
      {"7_4_K1", "7_4_K2", Verdict::Distinguished},
      {"trefoil", "trefoil", Verdict::IndistinguishableAtBounds}};
  for (const auto& [a, b, verdict] : pairs) {
    const CompareOptions opt = options_for(a, b);
    for (int d = -2; d <= 3; ++d) {
      const std::string label = a + " vs " + b + " d=" + std::to_string(d);
      expect(compare_knots(stabilize_dga(named(a), d), named(b), opt).verdict == verdict, label + " (A stabilized)");
      expect(compare_knots(named(a), stabilize_dga(named(b), d), opt).verdict == verdict, label + " (B stabilized)");
    }
  }
  return std::to_string(stabilized) + " stabilized DGAs, 36 comparisons";
}

}  // namespace

int main() {
  criterion(1, "classical invariants", 1, c1);
  criterion(2, "sign and coefficient soundness", 60, c2);
  criterion(3, "trefoil suite", 1, c3);
  criterion(4, "isotopy invariance", 120, c4);
  criterion(5, "6_2 characteristic algebra", 30, c5);
  criterion(6, "7_4 characteristic algebras", 60, c6);
  criterion(7, "unknot triple", 60, c7);
  criterion(8, "second-order cross-check", 60, c8);
  criterion(9, "stabilization robustness", 60, c9);
  std::cout << (failures ? "FAIL" : "PASS") << " " << (9 - failures) << "/9 criteria" << std::endl;
  return failures ? 1 : 0;
}
