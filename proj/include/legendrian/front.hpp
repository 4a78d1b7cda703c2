#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace legendrian {

enum class EventKind : std::uint8_t { LeftCusp, RightCusp, Crossing };

// One singularity of a front in x-order. Heights count strands bottom-to-top
// starting at 1: LeftCusp h creates strands h, h+1; RightCusp h joins h, h+1;
// Crossing h swaps h, h+1.
//
// `tag` and `reversed` only matter on left cusps. They pin a component label
// and orientation so that both survive Reidemeister moves; tag 0 means the
// canonical labelling applies.
struct Event {
  EventKind kind = EventKind::Crossing;
  int height = 1;
  int tag = 0;
  bool reversed = false;

  static Event left(int h) { return {EventKind::LeftCusp, h}; }
  static Event right(int h) { return {EventKind::RightCusp, h}; }
  static Event cross(int h) { return {EventKind::Crossing, h}; }

  bool same_shape(const Event& o) const { return kind == o.kind && height == o.height; }
  bool operator==(const Event&) const = default;
};

struct FrontDiagram {
  std::vector<Event> events;

  std::size_t size() const { return events.size(); }
  bool empty() const { return events.empty(); }
  // Number of strands in gap g, i.e. just before events[g] (g == size() is
  // the gap after the last event). Assumes a structurally valid diagram.
  std::vector<int> strand_counts() const;
  // Shape equality ignores tags.
  bool same_shape(const FrontDiagram& o) const;
  bool operator==(const FrontDiagram&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct Diagnostic {
  std::size_t position;  // event index, or size() for end-of-diagram problems
  std::string message;
};

class InvalidFront : public std::runtime_error {
 public:
  explicit InvalidFront(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

// One event per line: "L h", "R h" or "X h"; a left cusp may add "@tag" and
// "rev". Text after '#' is ignored.
FrontDiagram parse_front(std::string_view text);
std::string format_front(const FrontDiagram& d);
std::vector<Diagnostic> validate(const FrontDiagram& d);
// parse_front + validate; throws InvalidFront on the first failing check.
FrontDiagram load_front(std::string_view text);

// A strand segment between two consecutive events.
struct NodeRef {
  int gap = 0;
  int height = 1;
  bool operator==(const NodeRef&) const = default;
};

struct CuspPass {
  std::size_t event;
  bool upward;
};

// Result of tracing a valid front into oriented components.
class ComponentMap {
 public:
  int num_components() const { return static_cast<int>(cycles_.size()); }
  int component(NodeRef n) const { return comp_[index(n)]; }
  // +1 if the component runs left-to-right along n, -1 otherwise.
  int direction(NodeRef n) const { return dir_[index(n)]; }
  // Position of n along its component cycle; the base-point node is 0.
  int position(NodeRef n) const { return pos_[index(n)]; }
  const std::vector<NodeRef>& cycle(int j) const { return cycles_[j]; }
  NodeRef base_point(int j) const { return cycles_[j].front(); }
  // Cusp passes along the cycle of component j: entry i describes the
  // junction between cycle[i-1] and cycle[i] (entry 0 wraps around).
  const std::vector<std::optional<CuspPass>>& junctions(int j) const { return junctions_[j]; }
  // Signed cusp count (up minus down) of the whole oriented component.
  int cusp_count(int j) const;
  // Cusp count of the path from the base point to junction i of component j.
  int cusp_count_to(int j, int junction) const { return prefix_[j][junction]; }
  bool cusp_upward(std::size_t event) const { return cusp_up_[event] > 0; }

 private:
  friend ComponentMap trace_components(const FrontDiagram&, const std::vector<bool>&);
  std::size_t index(NodeRef n) const { return offset_[n.gap] + (n.height - 1); }

  std::vector<std::size_t> offset_;
  std::vector<int> comp_, dir_, pos_;
  std::vector<std::vector<NodeRef>> cycles_;
  std::vector<std::vector<std::optional<CuspPass>>> junctions_;
  std::vector<std::vector<int>> prefix_;
  std::vector<int> cusp_up_;  // +1 up, -1 down, 0 not a cusp
};

// `flip[j]` reverses the canonical orientation of component j. Components are
// indexed 0-based by their leftmost left cusp, or by tag when tags are set.
ComponentMap trace_components(const FrontDiagram& d, const std::vector<bool>& flip = {});

enum class VertexKind : std::uint8_t { Crossing, RightCusp };

struct Vertex {
  int id = 0;
  VertexKind kind = VertexKind::Crossing;
  std::size_t event = 0;
  int u = 0;  // component of the lower-slope (descending) strand
  int l = 0;  // component of the higher-slope (ascending) strand
  int sign = 1;
  // Junction indices along the cycles where the vertex sits: the ascending
  // strand on component l and the descending strand on component u. For a
  // right cusp both refer to the cusp turn itself.
  int asc_junction = 0;
  int desc_junction = 0;
  bool cusp_upward = false;
};

std::vector<Vertex> vertex_table(const FrontDiagram& d, const ComponentMap& cm);
int rotation_number(const ComponentMap& cm, int component);
int thurston_bennequin(const FrontDiagram& d, const ComponentMap& cm);
int thurston_bennequin(const FrontDiagram& d);

// Tags every left cusp with its current component (1-based) and orientation,
// so later moves keep component identity.
FrontDiagram label_components(const FrontDiagram& d, const ComponentMap& cm);

}  // namespace legendrian
