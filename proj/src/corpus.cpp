#include "legendrian/corpus.hpp"

#include <algorithm>

#include "legendrian/charalg.hpp"
#include "legendrian/dga_json.hpp"

namespace legendrian {

namespace {

std::vector<std::string> numbered(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("a" + std::to_string(i));
  return v;
}

const Mode kZ2{Ring::Z2, 0};

DGA dga_6_2() {
  return make_dga(kZ2, 0, numbered(11), {1, 1, 0, 0, -1, -1, 1, -1, 1, 1, -1},
                  {"1 + a10 a5 a3", "1 + a3 (1 + a6 a10 + a11 a7)", "0", "a11 + (1 + a6 a10 + a11 a7) a5", "0",
                   "a11 a8", "a8 a10", "0", "1 + a10 a11", "0", "0"});
}

// Degrees are not given with these differentials; homogeneity fixes all
// but deg a13 = s and deg a8 = q, taken as s = -2, q = 2 (tb = 1, r = 0).
DGA dga_7_4_k1() {
  return make_dga(kZ2, 0, numbered(13), {1, 1, 0, 0, -1, -1, -2, 2, 0, 1, 1, 2, -2},
                  {"1 + a8 a13 a3", "1 + a3 a13 a8", "0", "a5 a8 a13 + a13 a8 a6", "a13 (1 + a8 a7)",
                   "(1 + a7 a8) a13", "0", "0", "a13 a11 + a10 a13", "1 + a13 a12", "1 + a12 a13", "0", "0"});
}

DGA dga_7_4_k2() {
  const std::string p = "(1 + a8 a9 + a8 a13 + a12 a13 + a8 a9 a12 a13 + a8 a10 a11 a13)";
  return make_dga(kZ2, 0, numbered(13), {1, 1, 0, 0, -1, -1, -2, 2, -2, -1, 1, 2, -2},
                  {"1 + " + p + " a3", "1 + a3 a13 a8", "0", "a13 a8 a6 + a11 a13 + a5 " + p, "a13 (1 + a8 a7)",
                   "a7 + a7 a12 a13 + (1 + a7 a8)(a9 + a13 + a9 a12 a13 + a10 a11 a13)", "0", "0", "a10 a13", "0",
                   "1 + a13 a12", "0", "0"});
}

CorpusEntry front_entry(std::string name, std::vector<std::string> aliases, std::string text,
                        std::vector<Annotation> expected) {
  return {std::move(name), std::move(aliases), CorpusEntry::Kind::Front, std::move(text), std::move(expected), {}};
}

CorpusEntry dga_entry(std::string name, std::vector<std::string> aliases, const DGA& p,
                      std::vector<Annotation> expected, std::vector<std::string> probes) {
  return {std::move(name), std::move(aliases), CorpusEntry::Kind::Dga, dump_dga(p), std::move(expected),
          std::move(probes)};
}

std::vector<CorpusEntry> build() {
  const std::string unknot = "L 1\nR 1\n";
  std::vector<CorpusEntry> out;
  out.push_back(front_entry("unknot", {"U"}, unknot,
                            {{"tb", "-1", "derived"},
                             {"r", "0", "derived"},
                             {"components", "1", "construction"},
                             {"augmentations", "1", "derived"},
                             {"poly1", "λ", "derived"},
                             {"poly2", "λ^2 + λ", "derived"}}));
  out.push_back(front_entry("trefoil", {"T"}, "L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1\n",
                            {{"tb", "1", "derived"},
                             {"r", "0", "derived"},
                             {"components", "1", "construction"},
                             {"augmentations", "5", "derived"},
                             {"poly1", "λ + 2", "derived"}}));
  out.push_back(front_entry("zigzag", {"S"}, "L 1\nL 1\nR 2\nR 1\n",
                            {{"tb", "-2", "derived"}, {"abs_r", "1", "derived"}, {"components", "1", "construction"}}));
  out.push_back(front_entry("double", {"D"}, "L 1\nL 3\nX 2\nX 2\nR 1\nR 1\n",
                            {{"components", "2", "construction"}}));
  out.push_back(front_entry("triple", {"unknot_triple"}, format_front(n_copy(parse_front(unknot), 3)),
                            {{"components", "3", "construction"}, {"vertices", "9", "printed"}}));
  const std::string probe62 = "a3=1, a1=0, a2=0, a6=0, a7=0, a9=0";
  out.push_back(dga_entry("6_2", {"paper_6_2"}, dga_6_2(),
                          {{"pairing_at_1", "exists", "printed"}, {"pairing_at_-1", "none", "printed"}},
                          {probe62}));
  out.push_back(dga_entry("6_2_mirror", {"paper_6_2_mirror"}, mirror_dga(dga_6_2()),
                          {{"pairing_at_1", "none", "printed"}}, {probe62}));
  out.push_back(dga_entry("7_4_K1", {"paper_7_4_K1"}, dga_7_4_k1(), {{"one_sided_units", "none", "printed"}}, {}));
  out.push_back(dga_entry("7_4_K2", {"paper_7_4_K2"}, dga_7_4_k2(),
                          {{"a13", "right-invertible only", "printed"}}, {"a3=1, a7=a13, a8=a12, rest=0"}));
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry* find_corpus(const std::string& raw) {
  const std::string name = raw.rfind("corpus:", 0) == 0 ? raw.substr(7) : raw;
  for (const auto& e : corpus())
    if (e.name == name || std::find(e.aliases.begin(), e.aliases.end(), name) != e.aliases.end()) return &e;
  return nullptr;
}

std::optional<std::string> annotation(const CorpusEntry& e, const std::string& key) {
  for (const auto& a : e.expected)
    if (a.key == key) return a.value;
  return std::nullopt;
}

FrontDiagram corpus_front(const CorpusEntry& e) { return load_front(e.payload); }

DGA corpus_dga(const CorpusEntry& e) {
  if (e.kind == CorpusEntry::Kind::Dga) return parse_dga(e.payload);
  return compute_dga(corpus_front(e));
}

}  // namespace legendrian
