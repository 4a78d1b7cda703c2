#include <stdexcept>

#include "legendrian/dga.hpp"
#include "legendrian/moves.hpp"

namespace legendrian {

namespace {

struct Sweep {
  const FrontDiagram& front;
  const ComponentMap& cm;
  const std::vector<Vertex>& vertices;
  std::vector<int> vertex_at;  // event -> vertex id, -1 for left cusps
  std::vector<NodeRef> base;   // per component
  int initial = 0;
  std::vector<Disk>* out = nullptr;
};

struct State {
  int gap;
  int lo, hi;
  Word upper, lower;
  std::vector<bool> upper_down, lower_down;
  int sign = 1;
  std::vector<int> passes;
};

void count_passes(const Sweep& s, State& st) {
  for (std::size_t j = 0; j < s.base.size(); ++j) {
    const NodeRef b = s.base[j];
    if (b.gap != st.gap) continue;
    // Upper boundary runs leftward, lower boundary rightward.
    if (b.height == st.hi) st.passes[j] -= s.cm.direction(b);
    if (b.height == st.lo) st.passes[j] += s.cm.direction(b);
  }
}

void finish(const Sweep& s, State& st) {
  Disk d;
  d.initial = s.initial;
  d.corners = st.upper;
  d.downward = st.upper_down;
  for (std::size_t i = st.lower.size(); i-- > 0;) {
    d.corners.push_back(st.lower[i]);
    d.downward.push_back(st.lower_down[i]);
  }
  d.sign = st.sign;
  d.passes = std::move(st.passes);
  s.out->push_back(std::move(d));
}

void run(const Sweep& s, State st) {
  for (;;) {
    count_passes(s, st);
    if (st.gap == 0) return;
    const std::size_t e = static_cast<std::size_t>(st.gap - 1);
    const Event& ev = s.front.events[e];
    const int x = ev.height;
    st.gap -= 1;
    switch (ev.kind) {
      case EventKind::Crossing: {
        const int v = s.vertex_at[e];
        if (x == st.hi) {
          // Upper corner: the disk fills the bottom region of the crossing.
          State corner = st;
          corner.upper.push_back(v);
          corner.upper_down.push_back(true);
          if (s.vertices[v].sign > 0) corner.sign = -corner.sign;
          run(s, std::move(corner));
          st.hi += 1;
        } else if (x + 1 == st.lo) {
          State corner = st;
          corner.lower.push_back(v);
          corner.lower_down.push_back(false);
          run(s, std::move(corner));
          st.lo -= 1;
        } else if (x == st.lo && x + 1 == st.hi) {
          return;
        } else if (x == st.lo) {
          st.lo += 1;
        } else if (x + 1 == st.hi) {
          st.hi -= 1;
        }
        break;
      }
      case EventKind::LeftCusp: {
        if (x == st.lo && x + 1 == st.hi) {
          finish(s, st);
          return;
        }
        if (x + 1 < st.lo) {
          st.lo -= 2;
          st.hi -= 2;
        } else if (x > st.hi) {
        } else if (st.lo < x && x + 1 < st.hi) {
          st.hi -= 2;
        } else {
          return;
        }
        break;
      }
      case EventKind::RightCusp: {
        if (x <= st.lo) st.lo += 2;
        if (x <= st.hi) st.hi += 2;
        break;
      }
    }
  }
}

Sweep make_sweep(const FrontDiagram& simple, const ComponentMap& cm, const std::vector<Vertex>& vertices,
                 const BasePositions& base) {
  Sweep s{simple, cm, vertices, std::vector<int>(simple.size(), -1), {}, 0, nullptr};
  for (const auto& v : vertices) s.vertex_at[v.event] = v.id;
  for (int j = 0; j < cm.num_components(); ++j) {
    const int p = j < static_cast<int>(base.size()) ? base[j] : 0;
    s.base.push_back(cm.cycle(j).at(p));
  }
  return s;
}

std::vector<Disk> disks_from(const Sweep& proto, int v) {
  std::vector<Disk> out;
  Sweep s = proto;
  s.initial = v;
  s.out = &out;
  const Vertex& vx = s.vertices[v];
  const int h = s.front.events[vx.event].height;
  State st{static_cast<int>(vx.event), h, h + 1, {}, {}, {}, {}, 1,
           std::vector<int>(s.base.size(), 0)};
  run(s, std::move(st));
  return out;
}

void require_simple(const FrontDiagram& d) {
  if (!is_simple(d)) throw std::invalid_argument("disk enumeration needs a simple front");
}

}  // namespace

std::vector<Disk> enumerate_disks(const FrontDiagram& simple, const ComponentMap& cm,
                                  const std::vector<Vertex>& vertices, int v, const BasePositions& base) {
  require_simple(simple);
  return disks_from(make_sweep(simple, cm, vertices, base), v);
}

std::vector<std::vector<Disk>> enumerate_all_disks(const FrontDiagram& simple, const ComponentMap& cm,
                                                   const std::vector<Vertex>& vertices,
                                                   const BasePositions& base) {
  require_simple(simple);
  const Sweep s = make_sweep(simple, cm, vertices, base);
  std::vector<std::vector<Disk>> out(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) out[v] = disks_from(s, static_cast<int>(v));
  return out;
}

std::vector<std::vector<Disk>> enumerate_all_disks_parallel(const FrontDiagram& simple,
                                                            const ComponentMap& cm,
                                                            const std::vector<Vertex>& vertices,
                                                            const BasePositions& base) {
  require_simple(simple);
  const Sweep s = make_sweep(simple, cm, vertices, base);
  const long n = static_cast<long>(vertices.size());
  std::vector<std::vector<Disk>> out(vertices.size());
#pragma omp parallel for schedule(dynamic)
  for (long v = 0; v < n; ++v) out[v] = disks_from(s, static_cast<int>(v));
  return out;
}

}  // namespace legendrian
