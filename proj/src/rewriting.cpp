#include "legendrian/rewriting.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace legendrian {

namespace {

struct Greater {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(b, a); }
};

using WorkSet = std::set<Word, Greater>;

void toggle(WorkSet& s, const Word& w) {
  const auto it = s.find(w);
  if (it == s.end()) s.insert(w);
  else s.erase(it);
}

bool occurs_at(const Word& w, std::size_t pos, const Word& sub) {
  return pos + sub.size() <= w.size() && std::equal(sub.begin(), sub.end(), w.begin() + pos);
}

bool contains(const Word& w, const Word& sub) {
  for (std::size_t p = 0; p + sub.size() <= w.size(); ++p)
    if (occurs_at(w, p, sub)) return true;
  return false;
}

Word concat(const Word& a, const Word& b, const Word& c = {}) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

constexpr long kMaxSteps = 200000;

}  // namespace

Poly2 to_poly2(const AlgebraElement& x) {
  Poly2 out;
  for (const auto& [term, c] : x.terms())
    if (c % 2) out.push_back(term.word);
  std::sort(out.begin(), out.end(), Greater{});
  Poly2 dedup;
  for (auto& w : out) {
    if (!dedup.empty() && dedup.back() == w) dedup.pop_back();
    else dedup.push_back(std::move(w));
  }
  return dedup;
}

AlgebraElement from_poly2(const Poly2& p) {
  AlgebraElement x(Mode{Ring::Z2, 0});
  for (const auto& w : p) x.add_term(w, {}, 1);
  return x;
}

Poly2 add(const Poly2& a, const Poly2& b) {
  Poly2 out;
  std::size_t i = 0, j = 0;
  const Greater gt;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && gt(a[i], b[j]))) out.push_back(a[i++]);
    else if (i == a.size() || gt(b[j], a[i])) out.push_back(b[j++]);
    else ++i, ++j;
  }
  return out;
}

Poly2 multiply(const Word& left, const Poly2& p, const Word& right) {
  Poly2 out;
  for (const auto& w : p) out.push_back(concat(left, w, right));
  return out;
}

void RewritingSystem::index_rules() {
  by_first_.clear();
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const int f = rules_[k].lhs.front();
    if (f >= static_cast<int>(by_first_.size())) by_first_.resize(f + 1);
    by_first_[f].push_back(static_cast<int>(k));
  }
}

bool RewritingSystem::reduce_word(const Word& w, Poly2& out) const {
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] >= static_cast<int>(by_first_.size())) continue;
    for (int k : by_first_[w[p]]) {
      const Rule& r = rules_[k];
      if (!occurs_at(w, p, r.lhs)) continue;
      const Word head(w.begin(), w.begin() + p);
      const Word tail(w.begin() + p + r.lhs.size(), w.end());
      out = multiply(head, r.rhs, tail);
      return true;
    }
  }
  return false;
}

Poly2 RewritingSystem::normal_form(const Poly2& x) const {
  if (trivial()) return {};
  WorkSet work(x.begin(), x.end());
  Poly2 out;
  Poly2 image;
  while (!work.empty()) {
    const Word w = *work.begin();
    work.erase(work.begin());
    if (reduce_word(w, image)) {
      for (const auto& v : image) toggle(work, v);
    } else {
      out.push_back(w);
    }
  }
  return out;
}

AlgebraElement RewritingSystem::normal_form(const AlgebraElement& x) const {
  return from_poly2(normal_form(to_poly2(x)));
}

Membership RewritingSystem::member(const Poly2& x) const {
  if (normal_form(x).empty()) return Membership::Yes;
  return status_ == CompletionStatus::Complete ? Membership::No : Membership::NoAtBound;
}

Membership RewritingSystem::member(const AlgebraElement& x) const { return member(to_poly2(x)); }

RewritingSystem RewritingSystem::complete(const std::vector<AlgebraElement>& relations,
                                          const CompletionBounds& bounds) {
  std::vector<Poly2> rels;
  for (const auto& r : relations) rels.push_back(to_poly2(r));
  return complete(rels, bounds);
}

RewritingSystem RewritingSystem::complete(const std::vector<Poly2>& relations, const CompletionBounds& bounds) {
  RewritingSystem rs;
  rs.bounds_ = bounds;
  // Smallest leading word first.
  auto later = [](const Poly2& a, const Poly2& b) { return deglex_less(b.front(), a.front()); };
  std::priority_queue<Poly2, std::vector<Poly2>, decltype(later)> pending(later);
  for (const auto& r : relations)
    if (!r.empty()) pending.push(r);

  auto push_pairs = [&](int a, int b) {
    const Rule& ra = rs.rules_[a];
    const Rule& rb = rs.rules_[b];
    const std::size_t la = ra.lhs.size(), lb = rb.lhs.size();
    for (std::size_t o = 1; o < std::min(la, lb); ++o) {
      if (!std::equal(ra.lhs.end() - o, ra.lhs.end(), rb.lhs.begin())) continue;
      const Word tail(rb.lhs.begin() + o, rb.lhs.end());
      const Word head(ra.lhs.begin(), ra.lhs.end() - o);
      const Poly2 s = add(multiply({}, ra.rhs, tail), multiply(head, rb.rhs, {}));
      if (!s.empty()) pending.push(s);
    }
  };

  long steps = 0;
  while (!pending.empty()) {
    if (++steps > kMaxSteps) {
      rs.dropped_ += static_cast<int>(pending.size());
      break;
    }
    Poly2 r = rs.normal_form(pending.top());
    pending.pop();
    if (r.empty()) continue;
    if (r.front().empty()) {
      rs.rules_.clear();
      rs.by_first_.clear();
      rs.status_ = CompletionStatus::Trivial;
      return rs;
    }
    if (static_cast<int>(r.front().size()) > bounds.max_len ||
        static_cast<int>(rs.rules_.size()) >= bounds.max_rules) {
      ++rs.dropped_;
      continue;
    }
    Rule nr{r.front(), Poly2(r.begin() + 1, r.end())};
    // Rules whose lhs contains the new lhs become relations again.
    std::vector<Rule> kept;
    for (auto& old : rs.rules_) {
      if (contains(old.lhs, nr.lhs)) pending.push(add({old.lhs}, old.rhs));
      else kept.push_back(std::move(old));
    }
    kept.push_back(nr);
    rs.rules_ = std::move(kept);
    rs.index_rules();
    for (auto& old : rs.rules_) old.rhs = rs.normal_form(old.rhs);
    const int n = static_cast<int>(rs.rules_.size()) - 1;
    for (int k = 0; k <= n; ++k) {
      push_pairs(n, k);
      if (k != n) push_pairs(k, n);
    }
  }
  std::sort(rs.rules_.begin(), rs.rules_.end(),
            [](const Rule& a, const Rule& b) { return deglex_less(a.lhs, b.lhs); });
  rs.index_rules();
  rs.status_ = rs.dropped_ ? CompletionStatus::BoundedIncomplete : CompletionStatus::Complete;
  return rs;
}

std::string to_string(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::Complete: return "complete";
    case CompletionStatus::BoundedIncomplete: return "bounded-incomplete";
    case CompletionStatus::Trivial: return "trivial";
  }
  return "";
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Yes: return "yes";
    case Membership::No: return "no";
    case Membership::NoAtBound: return "no-at-bound";
  }
  return "";
}

}  // namespace legendrian
