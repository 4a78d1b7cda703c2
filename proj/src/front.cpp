#include "legendrian/front.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace legendrian {

namespace {

int delta(EventKind k) {
  switch (k) {
    case EventKind::LeftCusp: return 2;
    case EventKind::RightCusp: return -2;
    case EventKind::Crossing: return 0;
  }
  return 0;
}

char letter(EventKind k) {
  switch (k) {
    case EventKind::LeftCusp: return 'L';
    case EventKind::RightCusp: return 'R';
    case EventKind::Crossing: return 'X';
  }
  return '?';
}

std::string join_diagnostics(const std::vector<Diagnostic>& diags) {
  std::ostringstream out;
  out << "invalid front";
  for (const auto& d : diags) out << "; event " << d.position << ": " << d.message;
  return out.str();
}

}  // namespace

InvalidFront::InvalidFront(std::vector<Diagnostic> diags)
    : std::runtime_error(join_diagnostics(diags)), diags_(std::move(diags)) {}

std::vector<int> FrontDiagram::strand_counts() const {
  std::vector<int> counts(events.size() + 1, 0);
  for (std::size_t i = 0; i < events.size(); ++i) counts[i + 1] = counts[i] + delta(events[i].kind);
  return counts;
}

bool FrontDiagram::same_shape(const FrontDiagram& o) const {
  return std::equal(events.begin(), events.end(), o.events.begin(), o.events.end(),
                    [](const Event& a, const Event& b) { return a.same_shape(b); });
}

FrontDiagram parse_front(std::string_view text) {
  FrontDiagram d;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string kind;
    if (!(in >> kind)) {
      if (end == text.size()) break;
      continue;
    }
    Event ev;
    if (kind == "L") ev.kind = EventKind::LeftCusp;
    else if (kind == "R") ev.kind = EventKind::RightCusp;
    else if (kind == "X") ev.kind = EventKind::Crossing;
    else throw ParseError(line_no, "unknown event '" + kind + "'");
    std::string h;
    if (!(in >> h) || h.empty() || !std::all_of(h.begin(), h.end(), ::isdigit))
      throw ParseError(line_no, "expected a positive integer height");
    ev.height = std::stoi(h);
    if (ev.height < 1) throw ParseError(line_no, "height must be positive");
    // Left cusps may carry "@tag" and "rev" (component label, orientation).
    std::string extra;
    while (in >> extra) {
      const bool left = ev.kind == EventKind::LeftCusp;
      if (left && extra.size() > 1 && extra[0] == '@' &&
          std::all_of(extra.begin() + 1, extra.end(), ::isdigit) && ev.tag == 0) {
        ev.tag = std::stoi(extra.substr(1));
        if (ev.tag < 1) throw ParseError(line_no, "tag must be positive");
      } else if (left && extra == "rev" && !ev.reversed) {
        ev.reversed = true;
      } else {
        throw ParseError(line_no, "trailing token '" + extra + "'");
      }
    }
    d.events.push_back(ev);
    if (end == text.size()) break;
  }
  return d;
}

std::string format_front(const FrontDiagram& d) {
  std::ostringstream out;
  for (const auto& e : d.events) {
    out << letter(e.kind) << ' ' << e.height;
    if (e.tag) out << " @" << e.tag;
    if (e.reversed) out << " rev";
    out << '\n';
  }
  return out.str();
}

std::vector<Diagnostic> validate(const FrontDiagram& d) {
  std::vector<Diagnostic> diags;
  int count = 0;
  bool has_left = false, has_right = false;
  for (std::size_t i = 0; i < d.events.size(); ++i) {
    const Event& e = d.events[i];
    const int h = e.height;
    switch (e.kind) {
      case EventKind::LeftCusp:
        has_left = true;
        if (h < 1 || h > count + 1)
          diags.push_back({i, "LeftCusp height " + std::to_string(h) + " outside 1.." +
                                  std::to_string(count + 1)});
        count += 2;
        break;
      case EventKind::RightCusp:
        has_right = true;
        [[fallthrough]];
      case EventKind::Crossing:
        if (count < 2) {
          diags.push_back({i, std::string(e.kind == EventKind::Crossing ? "Crossing" : "RightCusp") +
                                  " with strand count " + std::to_string(count)});
        } else if (h < 1 || h > count - 1) {
          diags.push_back({i, std::string(e.kind == EventKind::Crossing ? "Crossing" : "RightCusp") +
                                  " height " + std::to_string(h) + " exceeds count-1 = " +
                                  std::to_string(count - 1)});
        }
        if (e.kind == EventKind::RightCusp) count = std::max(0, count - 2);
        break;
    }
  }
  if (count != 0)
    diags.push_back({d.events.size(), std::to_string(count) + " strands unterminated"});
  if (!d.events.empty() && (!has_left || !has_right))
    diags.push_back({d.events.size(), "diagram needs at least one left and one right cusp"});
  return diags;
}

FrontDiagram load_front(std::string_view text) {
  FrontDiagram d = parse_front(text);
  if (auto diags = validate(d); !diags.empty()) throw InvalidFront(std::move(diags));
  return d;
}

namespace {

struct Step {
  NodeRef node;
  int dir;
  std::optional<CuspPass> cusp;  // cusp crossed to arrive at `node`
};

// Follow the strand from `n` in direction `dir` through the next event.
Step advance(const FrontDiagram& d, NodeRef n, int dir) {
  const int h = n.height;
  if (dir > 0) {
    const std::size_t e = static_cast<std::size_t>(n.gap);
    const Event& ev = d.events[e];
    const int k = ev.height;
    const int g = n.gap + 1;
    switch (ev.kind) {
      case EventKind::Crossing:
        if (h == k) return {{g, k + 1}, 1, {}};
        if (h == k + 1) return {{g, k}, 1, {}};
        return {{g, h}, 1, {}};
      case EventKind::LeftCusp:
        return {{g, h < k ? h : h + 2}, 1, {}};
      case EventKind::RightCusp:
        if (h == k) return {{n.gap, k + 1}, -1, CuspPass{e, true}};
        if (h == k + 1) return {{n.gap, k}, -1, CuspPass{e, false}};
        return {{g, h < k ? h : h - 2}, 1, {}};
    }
  } else {
    const std::size_t e = static_cast<std::size_t>(n.gap - 1);
    const Event& ev = d.events[e];
    const int k = ev.height;
    const int g = n.gap - 1;
    switch (ev.kind) {
      case EventKind::Crossing:
        if (h == k) return {{g, k + 1}, -1, {}};
        if (h == k + 1) return {{g, k}, -1, {}};
        return {{g, h}, -1, {}};
      case EventKind::LeftCusp:
        if (h == k) return {{n.gap, k + 1}, 1, CuspPass{e, true}};
        if (h == k + 1) return {{n.gap, k}, 1, CuspPass{e, false}};
        return {{g, h < k ? h : h - 2}, -1, {}};
      case EventKind::RightCusp:
        return {{g, h < k ? h : h + 2}, -1, {}};
    }
  }
  return {n, dir, {}};
}

}  // namespace

ComponentMap trace_components(const FrontDiagram& d, const std::vector<bool>& flip) {
  const auto counts = d.strand_counts();
  ComponentMap cm;
  cm.offset_.resize(counts.size() + 1, 0);
  for (std::size_t g = 0; g < counts.size(); ++g) cm.offset_[g + 1] = cm.offset_[g] + counts[g];
  const std::size_t total = cm.offset_.back();
  cm.comp_.assign(total, -1);
  cm.dir_.assign(total, 0);
  cm.pos_.assign(total, -1);
  cm.cusp_up_.assign(d.events.size(), 0);

  // One seed left cusp per component: the leftmost one, or the leftmost
  // tagged one when tags are present.
  struct Seed {
    std::size_t event;
    int tag;
    bool reversed;
  };
  std::vector<Seed> seeds;
  std::vector<int> seen(total, 0);
  for (std::size_t e = 0; e < d.events.size(); ++e) {
    const Event& ev = d.events[e];
    if (ev.kind != EventKind::LeftCusp) continue;
    NodeRef lower{static_cast<int>(e) + 1, ev.height};
    if (seen[cm.index(lower)]) {
      // Already traced; a tagged cusp may still override an untagged seed.
      if (ev.tag != 0) {
        const int c = seen[cm.index(lower)] - 1;
        if (seeds[c].tag == 0) seeds[c] = {e, ev.tag, ev.reversed};
        else if (seeds[c].tag != ev.tag)
          throw InvalidFront({{e, "left cusp tags disagree within one component"}});
      }
      continue;
    }
    const int c = static_cast<int>(seeds.size());
    seeds.push_back({e, ev.tag, ev.reversed});
    NodeRef n = lower;
    int dir = 1;
    do {
      seen[cm.index(n)] = c + 1;
      Step s = advance(d, n, dir);
      n = s.node;
      dir = s.dir;
    } while (!(n == lower && dir == 1));
  }

  std::vector<int> order(seeds.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  const bool tagged = std::any_of(seeds.begin(), seeds.end(), [](const Seed& s) { return s.tag != 0; });
  if (tagged) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const int ta = seeds[a].tag == 0 ? 1 << 30 : seeds[a].tag;
      const int tb = seeds[b].tag == 0 ? 1 << 30 : seeds[b].tag;
      return ta < tb;
    });
  }

  const int k = static_cast<int>(seeds.size());
  cm.cycles_.resize(k);
  cm.junctions_.resize(k);
  cm.prefix_.resize(k);
  for (int j = 0; j < k; ++j) {
    const Seed& s = seeds[order[j]];
    const int h = d.events[s.event].height;
    const int g = static_cast<int>(s.event) + 1;
    // Canonical: the seed cusp is traversed from its lower branch to its upper
    // branch, so the upper branch runs rightward.
    bool reverse = s.reversed;
    if (j < static_cast<int>(flip.size()) && flip[j]) reverse = !reverse;
    NodeRef start = reverse ? NodeRef{g, h} : NodeRef{g, h + 1};

    // Walk once to collect the oriented cycle.
    std::vector<Step> walk;
    NodeRef n = start;
    int dir = 1;
    do {
      walk.push_back({n, dir, {}});
      Step st = advance(d, n, dir);
      if (st.cusp) walk.back().cusp = st.cusp;  // cusp crossed after this node
      n = st.node;
      dir = st.dir;
    } while (!(n == start && dir == 1));

    // Base point: first rightward node in event order.
    std::size_t base = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const auto& w = walk[i];
      if (w.dir != 1) continue;
      const auto& b = walk[base];
      if (b.dir != 1 || w.node.gap < b.node.gap ||
          (w.node.gap == b.node.gap && w.node.height < b.node.height))
        base = i;
    }
    std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(base), walk.end());

    const int m = static_cast<int>(walk.size());
    auto& cyc = cm.cycles_[j];
    auto& jun = cm.junctions_[j];
    auto& pre = cm.prefix_[j];
    jun.assign(m + 1, std::nullopt);
    pre.assign(m + 2, 0);
    for (int i = 0; i < m; ++i) {
      const auto& w = walk[i];
      cyc.push_back(w.node);
      const std::size_t idx = cm.index(w.node);
      cm.comp_[idx] = j;
      cm.dir_[idx] = w.dir;
      cm.pos_[idx] = i;
      // The cusp after node i sits on junction i+1.
      if (w.cusp) {
        jun[i + 1] = w.cusp;
        cm.cusp_up_[w.cusp->event] = w.cusp->upward ? 1 : -1;
      }
    }
    for (int i = 1; i <= m; ++i) pre[i + 1] = pre[i] + (jun[i] ? (jun[i]->upward ? 1 : -1) : 0);
  }
  return cm;
}

int ComponentMap::cusp_count(int j) const { return prefix_[j].back(); }

int rotation_number(const ComponentMap& cm, int component) {
  return -cm.cusp_count(component) / 2;
}

std::vector<Vertex> vertex_table(const FrontDiagram& d, const ComponentMap& cm) {
  std::vector<Vertex> out;
  auto junction = [&](NodeRef after) {
    const int c = cm.component(after);
    const int p = cm.position(after);
    return p == 0 ? static_cast<int>(cm.cycle(c).size()) : p;
  };
  for (std::size_t e = 0; e < d.events.size(); ++e) {
    const Event& ev = d.events[e];
    const int g = static_cast<int>(e);
    const int k = ev.height;
    if (ev.kind == EventKind::Crossing) {
      Vertex v;
      v.kind = VertexKind::Crossing;
      v.event = e;
      NodeRef asc_in{g, k}, asc_out{g + 1, k + 1};
      NodeRef desc_in{g, k + 1}, desc_out{g + 1, k};
      v.l = cm.component(asc_in);
      v.u = cm.component(desc_in);
      v.sign = cm.direction(asc_in) == cm.direction(desc_in) ? 1 : -1;
      v.asc_junction = cm.direction(asc_in) > 0 ? junction(asc_out) : junction(asc_in);
      v.desc_junction = cm.direction(desc_in) > 0 ? junction(desc_out) : junction(desc_in);
      v.id = static_cast<int>(out.size());
      out.push_back(v);
    } else if (ev.kind == EventKind::RightCusp) {
      Vertex v;
      v.kind = VertexKind::RightCusp;
      v.event = e;
      NodeRef lo{g, k}, hi{g, k + 1};
      v.u = v.l = cm.component(lo);
      v.sign = -1;
      v.cusp_upward = cm.cusp_upward(e);
      v.asc_junction = v.desc_junction = v.cusp_upward ? junction(hi) : junction(lo);
      v.id = static_cast<int>(out.size());
      out.push_back(v);
    }
  }
  return out;
}

int thurston_bennequin(const FrontDiagram& d, const ComponentMap& cm) {
  int tb = 0;
  for (const auto& v : vertex_table(d, cm)) tb += v.sign;
  return tb;
}

int thurston_bennequin(const FrontDiagram& d) { return thurston_bennequin(d, trace_components(d)); }

FrontDiagram label_components(const FrontDiagram& d, const ComponentMap& cm) {
  FrontDiagram out = d;
  for (std::size_t e = 0; e < d.events.size(); ++e) {
    Event& ev = out.events[e];
    if (ev.kind != EventKind::LeftCusp) continue;
    NodeRef upper{static_cast<int>(e) + 1, ev.height + 1};
    ev.tag = cm.component(upper) + 1;
    ev.reversed = cm.direction(upper) < 0;
  }
  return out;
}

}  // namespace legendrian
