#include <atomic>
#include <map>

#include "legendrian/errors.hpp"
#include "legendrian/invariants.hpp"

namespace legendrian {

namespace {

// Bitset over free generators.
using Mask = std::vector<std::uint64_t>;

bool covered(const Mask& term, const Mask& ones) {
  for (std::size_t w = 0; w < term.size(); ++w)
    if (term[w] & ~ones[w]) return false;
  return true;
}

void set_bit(Mask& m, int i, bool v) {
  const std::uint64_t b = std::uint64_t{1} << (i % 64);
  if (v) m[i / 64] |= b;
  else m[i / 64] &= ~b;
}

bool get_bit(const Mask& m, int i) { return (m[i / 64] >> (i % 64)) & 1; }

// eps(d a_i) = constant + sum over terms of the product of their letters,
// with letters outside the free set already evaluated to 0.
struct Relation {
  bool constant = false;
  std::vector<Mask> terms;
};

struct Problem {
  std::vector<int> free;  // generator ids
  int words = 1;
  // ready[k]: relations whose largest free letter has position k - 1
  std::vector<std::vector<Relation>> ready;
  bool infeasible = false;
};

Problem build(const DGA& p, bool graded) {
  const DGA q = mod2(p);
  Problem pr;
  std::vector<int> pos(q.size(), -1);
  for (int i = 0; i < q.size(); ++i) {
    if (graded && q.reduce_degree(q.gens[i].degree) != 0) continue;
    pos[i] = static_cast<int>(pr.free.size());
    pr.free.push_back(i);
  }
  const int n = static_cast<int>(pr.free.size());
  pr.words = std::max(1, (n + 63) / 64);
  pr.ready.assign(n + 1, {});
  for (int i = 0; i < q.size(); ++i) {
    std::map<Mask, int> parity;
    bool constant = false;
    for (const auto& [term, c] : q.d[i].terms()) {
      if (term.word.empty()) {
        constant = !constant;
        continue;
      }
      Mask m(pr.words, 0);
      bool live = true;
      for (int g : term.word) {
        if (pos[g] < 0) {
          live = false;
          break;
        }
        set_bit(m, pos[g], true);
      }
      if (!live) continue;
      parity[m] ^= 1;
    }
    Relation r;
    r.constant = constant;
    for (auto& [m, odd] : parity)
      if (odd) r.terms.push_back(m);
    if (r.terms.empty()) {
      if (r.constant) pr.infeasible = true;
      continue;
    }
    int level = 0;
    for (const auto& m : r.terms)
      for (int k = n - 1; k >= 0; --k)
        if (get_bit(m, k)) {
          level = std::max(level, k + 1);
          break;
        }
    pr.ready[level].push_back(std::move(r));
  }
  return pr;
}

bool satisfied(const Problem& pr, int level, const Mask& ones) {
  for (const auto& r : pr.ready[level]) {
    bool v = r.constant;
    for (const auto& t : r.terms)
      if (covered(t, ones)) v = !v;
    if (v) return false;
  }
  return true;
}

struct Counter {
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t cap;
  std::atomic<bool> exceeded{false};
  bool tick() {
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > cap) exceeded = true;
    return !exceeded;
  }
};

// Assigns free positions depth.. until `stop`, pushing complete prefixes.
void dfs(const Problem& pr, Mask& ones, int depth, int stop, Counter& ctr, std::vector<Mask>& out) {
  if (!ctr.tick()) return;
  if (depth == stop) {
    out.push_back(ones);
    return;
  }
  for (int v = 0; v < 2; ++v) {
    set_bit(ones, depth, v);
    if (satisfied(pr, depth + 1, ones)) dfs(pr, ones, depth + 1, stop, ctr, out);
    if (ctr.exceeded) break;
  }
  set_bit(ones, depth, false);
}

std::vector<Augmentation> expand(const DGA& p, const Problem& pr, const std::vector<Mask>& sols) {
  std::vector<Augmentation> out;
  for (const auto& m : sols) {
    Augmentation e;
    e.values.assign(p.size(), 0);
    for (std::size_t k = 0; k < pr.free.size(); ++k) e.values[pr.free[k]] = get_bit(m, static_cast<int>(k));
    out.push_back(std::move(e));
  }
  return out;
}

void check(const Counter& ctr) {
  if (ctr.exceeded)
    throw BoundExceeded("augmentation search exceeded " + std::to_string(ctr.cap) + " nodes");
}

}  // namespace

std::vector<Augmentation> find_augmentations_serial(const DGA& p, const AugmentationSearch& opt) {
  const Problem pr = build(p, opt.graded);
  if (pr.infeasible || !satisfied(pr, 0, Mask(pr.words, 0))) return {};
  Counter ctr;
  ctr.cap = opt.node_cap;
  Mask ones(pr.words, 0);
  std::vector<Mask> sols;
  dfs(pr, ones, 0, static_cast<int>(pr.free.size()), ctr, sols);
  check(ctr);
  return expand(p, pr, sols);
}

std::vector<Augmentation> find_augmentations(const DGA& p, const AugmentationSearch& opt) {
  if (!opt.parallel) return find_augmentations_serial(p, opt);
  const Problem pr = build(p, opt.graded);
  if (pr.infeasible || !satisfied(pr, 0, Mask(pr.words, 0))) return {};
  const int n = static_cast<int>(pr.free.size());
  const int split = std::min(n, 10);
  Counter ctr;
  ctr.cap = opt.node_cap;
  Mask ones(pr.words, 0);
  std::vector<Mask> prefixes;
  dfs(pr, ones, 0, split, ctr, prefixes);
  check(ctr);
  // Prefix leaves were counted once already; subtrees count their roots again.
  const long m = static_cast<long>(prefixes.size());
  ctr.nodes -= prefixes.size();
  std::vector<std::vector<Mask>> parts(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < m; ++i) {
    Mask local = prefixes[i];
    dfs(pr, local, split, n, ctr, parts[i]);
  }
  check(ctr);
  std::vector<Mask> sols;
  for (auto& part : parts)
    for (auto& s : part) sols.push_back(std::move(s));
  return expand(p, pr, sols);
}

bool is_augmentation(const DGA& p, const Augmentation& eps, bool graded, std::string* why) {
  const DGA q = mod2(p);
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(eps.values.size()) != q.size()) return fail("augmentation has wrong length");
  for (int i = 0; i < q.size(); ++i) {
    if (eps.values[i] > 1) return fail("values must be 0 or 1");
    if (graded && eps.values[i] && q.reduce_degree(q.gens[i].degree) != 0)
      return fail("nonzero on " + q.gens[i].name + " of nonzero degree");
  }
  for (int i = 0; i < q.size(); ++i) {
    int v = 0;
    for (const auto& [term, c] : q.d[i].terms()) {
      int prod = 1;
      for (int g : term.word) prod &= eps.values[g];
      v ^= prod & static_cast<int>(c & 1);
    }
    if (v) return fail("eps(d" + q.gens[i].name + ") = 1");
  }
  return true;
}

}  // namespace legendrian
