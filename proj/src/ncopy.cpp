#include <algorithm>
#include <stdexcept>

#include "legendrian/dga.hpp"

namespace legendrian {

namespace {

int find(const std::vector<int>& s, int label) {
  return static_cast<int>(std::find(s.begin(), s.end(), label) - s.begin());
}

// Swap the labels at local positions p, p+1 and emit the crossing.
void cross_at(std::vector<int>& s, int p, int base, std::vector<Event>& out) {
  std::swap(s[p], s[p + 1]);
  out.push_back(Event::cross(base + p));
}

void check(bool ok) {
  if (!ok) throw std::logic_error("n-copy ladder out of order");
}

}  // namespace

FrontDiagram n_copy(const FrontDiagram& knot, int n) {
  if (n < 1) throw std::invalid_argument("n-copy needs n >= 1");
  if (trace_components(knot).num_components() != 1) throw std::invalid_argument("n-copy needs a knot");
  FrontDiagram out;
  auto& ev = out.events;
  for (const Event& e : knot.events) {
    const int base = n * (e.height - 1) + 1;
    std::vector<int> s;
    switch (e.kind) {
      case EventKind::LeftCusp: {
        // Copy i has lower branch 2i and upper branch 2i+1.
        for (int i = 0; i < n; ++i) {
          Event l = Event::left(base + 2 * i);
          l.tag = n - i;
          ev.push_back(l);
          s.push_back(2 * i);
          s.push_back(2 * i + 1);
        }
        for (int d = 1; d < n; ++d)
          for (int i = 0; i + d < n; ++i) {
            const int p = find(s, 2 * i + 1);
            check(s[p + 1] == 2 * (i + d));
            cross_at(s, p, base, ev);
          }
        break;
      }
      case EventKind::RightCusp: {
        for (int i = 0; i < n; ++i) s.push_back(2 * i);
        for (int i = 0; i < n; ++i) s.push_back(2 * i + 1);
        for (int d = n - 1; d >= 1; --d)
          for (int i = 0; i + d < n; ++i) {
            const int p = find(s, 2 * (i + d));
            check(s[p + 1] == 2 * i + 1);
            cross_at(s, p, base, ev);
          }
        for (int i = 0; i < n; ++i) ev.push_back(Event::right(base));
        break;
      }
      case EventKind::Crossing: {
        // Ascending copies A_i = i, descending copies B_j = n + j.
        for (int i = 0; i < 2 * n; ++i) s.push_back(i);
        for (int diff = -(n - 1); diff <= n - 1; ++diff)
          for (int i = 0; i < n; ++i) {
            const int j = i + diff;
            if (j < 0 || j >= n) continue;
            const int p = find(s, i);
            check(s[p + 1] == n + j);
            cross_at(s, p, base, ev);
          }
        break;
      }
    }
  }
  return out;
}

}  // namespace legendrian
