#include "legendrian/moves.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>
#include <stdexcept>

namespace legendrian {

namespace {

using Labels = std::vector<int>;

// Effect of one event on a list of strand labels; records which labels the
// event touched so that two orderings can be compared.
struct Touch {
  int a = -1, b = -1;
  bool operator==(const Touch&) const = default;
};

bool act(Labels& s, const Event& e, int id, Touch& t) {
  const int h = e.height;
  const int n = static_cast<int>(s.size());
  switch (e.kind) {
    case EventKind::LeftCusp:
      if (h < 1 || h > n + 1) return false;
      s.insert(s.begin() + (h - 1), {-(2 * id + 1), -(2 * id + 2)});
      t = {};
      return true;
    case EventKind::RightCusp:
      if (h < 1 || h > n - 1) return false;
      t = {s[h - 1], s[h]};
      s.erase(s.begin() + (h - 1), s.begin() + (h + 1));
      return true;
    case EventKind::Crossing:
      if (h < 1 || h > n - 1) return false;
      t = {s[h - 1], s[h]};
      std::swap(s[h - 1], s[h]);
      return true;
  }
  return false;
}

// Reorderings of two adjacent events with disjoint support. There can be two
// when a left cusp lands next to the spot a right cusp vacated.
std::vector<std::pair<Event, Event>> commuted(const Event& e1, const Event& e2, int count) {
  std::vector<std::pair<Event, Event>> out;
  Labels base(count);
  for (int i = 0; i < count; ++i) base[i] = i;
  Labels s = base;
  Touch t1, t2;
  if (!act(s, e1, 1, t1) || !act(s, e2, 2, t2)) return out;
  for (int h2 = 1; h2 <= count + 1; ++h2) {
    Event f2 = e2;
    f2.height = h2;
    Labels s2 = base;
    Touch u2;
    if (!act(s2, f2, 2, u2) || !(u2 == t2)) continue;
    for (int h1 = 1; h1 <= count + 3; ++h1) {
      Event f1 = e1;
      f1.height = h1;
      Labels s3 = s2;
      Touch u1;
      if (!act(s3, f1, 1, u1) || !(u1 == t1) || s3 != s) continue;
      out.emplace_back(f2, f1);
    }
  }
  return out;
}

bool matches(const std::vector<Event>& ev, std::size_t p, std::initializer_list<Event> pat) {
  if (p + pat.size() > ev.size()) return false;
  std::size_t i = p;
  for (const auto& e : pat)
    if (!ev[i++].same_shape(e)) return false;
  return true;
}

// Cusp-passes-strand move: the cusp event alone versus the cusp with the
// neighbouring strand crossing both of its branches.
std::vector<Event> ii_expand(const Event& c, int v) {
  const int h = c.height;
  Event l = c;
  switch (v) {
    case 0: return {Event::cross(h + 1), Event::cross(h), Event::right(h + 1)};
    case 1: return {Event::cross(h - 1), Event::cross(h), Event::right(h - 1)};
    case 2: l.height = h + 1; return {l, Event::cross(h), Event::cross(h + 1)};
    default: l.height = h - 1; return {l, Event::cross(h), Event::cross(h - 1)};
  }
}

bool ii_expandable(const Event& c, int v, int count) {
  const bool right = v < 2;
  if (c.kind != (right ? EventKind::RightCusp : EventKind::LeftCusp)) return false;
  switch (v) {
    case 0: return count >= c.height + 2;
    case 2: return count >= c.height;
    default: return c.height >= 2;
  }
}

std::optional<Event> ii_contracted(const std::vector<Event>& ev, std::size_t p, int v) {
  if (p + 3 > ev.size()) return std::nullopt;
  const Event& c = v < 2 ? ev[p + 2] : ev[p];
  if (c.kind != (v < 2 ? EventKind::RightCusp : EventKind::LeftCusp)) return std::nullopt;
  Event col = c;
  col.height = (v == 0 || v == 2) ? c.height - 1 : c.height + 1;
  if (col.height < 1) return std::nullopt;
  const auto rep = ii_expand(col, v);
  for (int i = 0; i < 3; ++i)
    if (!rep[i].same_shape(ev[p + i])) return std::nullopt;
  return col;
}

bool is_labelled(const FrontDiagram& d) {
  return std::any_of(d.events.begin(), d.events.end(), [](const Event& e) { return e.tag != 0; });
}

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Commute: return "Commute";
    case MoveKind::IInsert: return "I-insert";
    case MoveKind::IDelete: return "I-delete";
    case MoveKind::II: return "II";
    case MoveKind::III: return "III";
  }
  return "?";
}

}  // namespace

std::string describe(const MoveInstance& m) {
  std::ostringstream out;
  out << kind_name(m.kind) << " @" << m.position;
  if (m.kind == MoveKind::IInsert) out << " h=" << m.height;
  out << " v=" << m.variant;
  return out.str();
}

std::vector<MoveInstance> applicable_moves(const FrontDiagram& d) {
  std::vector<MoveInstance> out;
  const auto& ev = d.events;
  const auto counts = d.strand_counts();
  for (std::size_t p = 0; p + 1 < ev.size(); ++p)
    for (std::size_t v = 0; v < commuted(ev[p], ev[p + 1], counts[p]).size(); ++v)
      out.push_back({MoveKind::Commute, p, 0, static_cast<int>(v)});
  for (std::size_t g = 1; g < counts.size(); ++g)
    for (int h = 1; h <= counts[g]; ++h)
      for (int v = 0; v < 2; ++v) out.push_back({MoveKind::IInsert, g, h, v});
  for (std::size_t p = 0; p + 2 < ev.size(); ++p) {
    const int h = ev[p + 1].height;
    if (matches(ev, p, {Event::left(h + 1), Event::cross(h), Event::right(h + 1)}))
      out.push_back({MoveKind::IDelete, p, h, 0});
    if (matches(ev, p, {Event::left(h - 1), Event::cross(h), Event::right(h - 1)}))
      out.push_back({MoveKind::IDelete, p, h - 1, 1});
  }
  for (std::size_t p = 0; p < ev.size(); ++p)
    for (int v = 0; v < 4; ++v) {
      if (ii_expandable(ev[p], v, counts[p])) out.push_back({MoveKind::II, p, 0, v});
      if (ii_contracted(ev, p, v)) out.push_back({MoveKind::II, p, 1, v});
    }
  for (std::size_t p = 0; p + 2 < ev.size(); ++p) {
    const Event& a = ev[p];
    const Event& b = ev[p + 1];
    const Event& c = ev[p + 2];
    if (a.kind == EventKind::Crossing && b.kind == EventKind::Crossing &&
        c.kind == EventKind::Crossing && a.height == c.height && std::abs(a.height - b.height) == 1)
      out.push_back({MoveKind::III, p, 0, 0});
  }
  return out;
}

FrontDiagram apply_move(const FrontDiagram& d, const MoveInstance& m) {
  FrontDiagram out = d;
  auto& ev = out.events;
  auto fail = [&] { throw std::invalid_argument("move does not match: " + describe(m)); };
  const auto counts = d.strand_counts();
  const std::size_t p = m.position;
  switch (m.kind) {
    case MoveKind::Commute: {
      if (p + 1 >= ev.size()) fail();
      const auto sw = commuted(ev[p], ev[p + 1], counts[p]);
      if (m.variant < 0 || m.variant >= static_cast<int>(sw.size())) fail();
      ev[p] = sw[m.variant].first;
      ev[p + 1] = sw[m.variant].second;
      break;
    }
    case MoveKind::IInsert: {
      if (p == 0 || p >= counts.size() || m.height < 1 || m.height > counts[p]) fail();
      const int h = m.height;
      Event lc = m.variant == 0 ? Event::left(h + 1) : Event::left(h);
      if (is_labelled(d)) {
        const auto cm = trace_components(d);
        const NodeRef strand{static_cast<int>(p), h};
        const bool rightward = cm.direction(strand) > 0;
        lc.tag = cm.component(strand) + 1;
        lc.reversed = (m.variant == 0) == rightward;
      }
      std::vector<Event> kink = m.variant == 0
                                    ? std::vector<Event>{lc, Event::cross(h), Event::right(h + 1)}
                                    : std::vector<Event>{lc, Event::cross(h + 1), Event::right(h)};
      ev.insert(ev.begin() + static_cast<std::ptrdiff_t>(p), kink.begin(), kink.end());
      break;
    }
    case MoveKind::IDelete: {
      const int h = m.height;
      const bool ok = m.variant == 0
                          ? matches(ev, p, {Event::left(h + 1), Event::cross(h), Event::right(h + 1)})
                          : matches(ev, p, {Event::left(h), Event::cross(h + 1), Event::right(h)});
      if (!ok) fail();
      ev.erase(ev.begin() + static_cast<std::ptrdiff_t>(p), ev.begin() + static_cast<std::ptrdiff_t>(p) + 3);
      break;
    }
    case MoveKind::II: {
      if (p >= ev.size()) fail();
      const auto pos = ev.begin() + static_cast<std::ptrdiff_t>(p);
      if (m.height == 0) {
        if (!ii_expandable(ev[p], m.variant, counts[p])) fail();
        const auto rep = ii_expand(ev[p], m.variant);
        ev.erase(pos);
        ev.insert(ev.begin() + static_cast<std::ptrdiff_t>(p), rep.begin(), rep.end());
      } else {
        const auto c = ii_contracted(ev, p, m.variant);
        if (!c) fail();
        ev.erase(pos, pos + 3);
        ev.insert(ev.begin() + static_cast<std::ptrdiff_t>(p), *c);
      }
      break;
    }
    case MoveKind::III: {
      if (p + 2 >= ev.size()) fail();
      Event& a = ev[p];
      Event& b = ev[p + 1];
      Event& c = ev[p + 2];
      if (a.kind != EventKind::Crossing || b.kind != EventKind::Crossing ||
          c.kind != EventKind::Crossing || a.height != c.height || std::abs(a.height - b.height) != 1)
        fail();
      const int i = a.height, j = b.height;
      a.height = c.height = j;
      b.height = i;
      break;
    }
  }
  return out;
}

MoveInstance inverse_move(const FrontDiagram& d, const MoveInstance& m) {
  switch (m.kind) {
    case MoveKind::IInsert: return {MoveKind::IDelete, m.position, m.height, m.variant};
    case MoveKind::IDelete: return {MoveKind::IInsert, m.position, m.height, m.variant};
    case MoveKind::II: return {MoveKind::II, m.position, 1 - m.height, m.variant};
    case MoveKind::Commute: {
      const auto r = apply_move(d, m).events;
      const auto back = commuted(r[m.position], r[m.position + 1], d.strand_counts()[m.position]);
      for (std::size_t v = 0; v < back.size(); ++v)
        if (back[v].first == d.events[m.position] && back[v].second == d.events[m.position + 1])
          return {MoveKind::Commute, m.position, 0, static_cast<int>(v)};
      throw std::logic_error("commute has no inverse");
    }
    default: return m;
  }
}

FrontDiagram random_isotopy(const FrontDiagram& d, std::uint64_t seed, int steps) {
  FrontDiagram cur = is_labelled(d) ? d : label_components(d, trace_components(d));
  if (steps <= 0) return d;
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  for (int s = 0; s < steps; ++s) {
    auto moves = applicable_moves(cur);
    std::vector<std::vector<MoveInstance>> by_kind(5);
    for (const auto& m : moves) by_kind[static_cast<int>(m.kind)].push_back(m);
    std::vector<int> kinds;
    for (int k = 0; k < 5; ++k)
      if (!by_kind[k].empty()) kinds.push_back(k);
    // Deletions get double weight so kinks do not pile up.
    if (!by_kind[static_cast<int>(MoveKind::IDelete)].empty())
      kinds.push_back(static_cast<int>(MoveKind::IDelete));
    const auto& bucket = by_kind[kinds[pick(kinds.size())]];
    cur = apply_move(cur, bucket[pick(bucket.size())]);
  }
  return cur;
}

FrontDiagram random_front(std::uint64_t seed, int max_events) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  max_events = std::max(max_events, 2);
  FrontDiagram d;
  int n = 0;
  for (;;) {
    const int left = max_events - static_cast<int>(d.size());
    if (n == 0) {
      if (!d.empty() && (left < 2 || pick(0, 3) == 0)) return d;
      d.events.push_back(Event::left(1));
      n = 2;
      continue;
    }
    std::vector<EventKind> kinds{EventKind::RightCusp};
    if (left - 1 >= (n + 2) / 2) kinds.push_back(EventKind::LeftCusp);
    if (left - 1 >= n / 2 && n >= 2) kinds.push_back(EventKind::Crossing);
    if (kinds.size() > 1 && n >= 4) kinds.push_back(EventKind::Crossing);
    switch (kinds[pick(0, static_cast<int>(kinds.size()) - 1)]) {
      case EventKind::LeftCusp: d.events.push_back(Event::left(pick(1, n + 1))); n += 2; break;
      case EventKind::Crossing: d.events.push_back(Event::cross(pick(1, n - 1))); break;
      case EventKind::RightCusp: d.events.push_back(Event::right(pick(1, n - 1))); n -= 2; break;
    }
  }
}

namespace {

// Index of the first event of the trailing run of right cusps.
std::size_t terminal_block(const std::vector<Event>& ev) {
  std::size_t b = ev.size();
  while (b > 0 && ev[b - 1].kind == EventKind::RightCusp) --b;
  return b;
}

// Partner position (0-based) of each strand entering the terminal block.
std::vector<int> block_matching(const std::vector<Event>& ev, std::size_t b, int count) {
  Labels s(count);
  for (int i = 0; i < count; ++i) s[i] = i;
  std::vector<int> partner(count, -1);
  for (std::size_t i = b; i < ev.size(); ++i) {
    Touch t;
    act(s, ev[i], 0, t);
    partner[t.a] = t.b;
    partner[t.b] = t.a;
  }
  return partner;
}

bool consecutive(const std::vector<int>& partner) {
  for (std::size_t i = 0; i < partner.size(); i += 2)
    if (partner[i] != static_cast<int>(i) + 1) return false;
  return true;
}

// Push the right cusp at ev[i] one step to the right past ev[i+1].
void push_once(std::vector<Event>& ev, std::size_t i) {
  const Event r = ev[i];
  const Event n = ev[i + 1];
  const int a = r.height;
  const int j = n.height;
  std::vector<Event> rep;
  if (n.kind == EventKind::Crossing) {
    if (j <= a - 2) rep = {n, r};
    else if (j >= a) rep = {Event::cross(j + 2), r};
    else rep = {Event::cross(a - 1), Event::cross(a), Event::cross(a + 1), Event::right(a - 1)};
  } else {
    assert(n.kind == EventKind::LeftCusp);
    Event l = n;
    if (j <= a) rep = {l, Event::right(a + 2)};
    else {
      l.height = j + 2;
      rep = {l, r};
    }
  }
  ev.erase(ev.begin() + static_cast<std::ptrdiff_t>(i), ev.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  ev.insert(ev.begin() + static_cast<std::ptrdiff_t>(i), rep.begin(), rep.end());
}

// Emit right cusps closing the remaining matched pairs of `s`, leftmost first.
void close_pairs(Labels s, const std::vector<int>& partner, std::vector<Event>& out) {
  while (!s.empty()) {
    bool found = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (partner[s[i]] == s[i + 1]) {
        out.push_back(Event::right(static_cast<int>(i) + 1));
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("terminal block matching is not planar");
  }
}

}  // namespace

bool is_simple(const FrontDiagram& d) {
  const auto& ev = d.events;
  const std::size_t b = terminal_block(ev);
  for (std::size_t i = 0; i < b; ++i)
    if (ev[i].kind == EventKind::RightCusp) return false;
  const auto counts = d.strand_counts();
  return consecutive(block_matching(ev, b, counts[b]));
}

FrontDiagram make_simple(const FrontDiagram& d) {
  std::vector<Event> ev = d.events;
  // Alternate pushing right cusps into the terminal block with rewriting one
  // innermost nesting of that block.
  for (;;) {
    // Push phase: always advance the rightmost right cusp that still has a
    // non-cusp event after it.
    for (;;) {
      std::size_t i = ev.size();
      for (std::size_t k = ev.size(); k-- > 0;) {
        if (ev[k].kind == EventKind::RightCusp && k + 1 < ev.size() &&
            ev[k + 1].kind != EventKind::RightCusp) {
          i = k;
          break;
        }
      }
      if (i == ev.size()) break;
      push_once(ev, i);
    }
    FrontDiagram cur{ev};
    const std::size_t b = terminal_block(ev);
    const int count = cur.strand_counts()[b];
    const auto partner = block_matching(ev, b, count);
    std::vector<Event> head(ev.begin(), ev.begin() + static_cast<std::ptrdiff_t>(b));
    if (consecutive(partner)) {
      for (int i = 0; i < count / 2; ++i) head.push_back(Event::right(1));
      return FrontDiagram{head};
    }
    // Nested pair (a, partner[a]) of minimal span; its inside is a run of
    // sibling pairs. Close all but the first, then unnest the first.
    int a = -1, span = count + 1;
    for (int i = 0; i < count; ++i)
      if (partner[i] > i + 1 && partner[i] - i < span) {
        a = i;
        span = partner[i] - i;
      }
    assert(a >= 0 && partner[a + 1] == a + 2);
    const int h = a + 1;  // 1-based height of the outer pair's lower strand
    Labels s(count);
    for (int i = 0; i < count; ++i) s[i] = i;
    Touch t;
    std::vector<Event> block;
    auto close = [&](const Event& e) {
      act(s, e, 0, t);
      assert(partner[t.a] == t.b);
      block.push_back(e);
    };
    for (int k = 0; k < (span - 3) / 2; ++k) close(Event::right(h + 3));
    // [R h+1, R h] becomes [X h+2, X h+1, R h+2, R h].
    for (const Event& x : {Event::cross(h + 2), Event::cross(h + 1)}) {
      act(s, x, 0, t);
      block.push_back(x);
    }
    close(Event::right(h + 2));
    close(Event::right(h));
    close_pairs(s, partner, block);
    head.insert(head.end(), block.begin(), block.end());
    ev = std::move(head);
  }
}

}  // namespace legendrian
