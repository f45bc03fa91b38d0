#pragma once

#include <array>
#include <compare>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kg/errors.hpp"

namespace kg {

// Ports 0..3 run counterclockwise around a node; strands pair 0-2 and 1-3.
// XPos: the 0-2 strand passes over. XNeg: the 1-3 strand passes over.
// With in-ports {0,1} an XPos node is a positive crossing.
enum class NodeKind { XPos, XNeg, Vert, CVert };

inline bool is_crossing(NodeKind k) { return k == NodeKind::XPos || k == NodeKind::XNeg; }
inline bool is_vertex(NodeKind k) { return !is_crossing(k); }

const char* kind_name(NodeKind k);
NodeKind flip_kind(NodeKind k);  // XPos <-> XNeg, vertices unchanged

struct Port {
  int node = 0;
  int slot = 0;
  auto operator<=>(const Port&) const = default;
};

struct Arc {
  Port from;  // outgoing port
  Port to;    // incoming port
  auto operator<=>(const Arc&) const = default;
};

struct Diagram {
  std::string name;
  std::vector<NodeKind> nodes;
  std::vector<Arc> arcs;
  int free_loops = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int arc_count() const { return static_cast<int>(arcs.size()); }
};

// Structural equality, ignoring the name.
bool operator==(const Diagram& a, const Diagram& b);

// Arc incidence per port.
struct PortIndex {
  struct Slot {
    int arc = -1;
    bool out = false;
  };
  std::vector<std::array<Slot, 4>> at;

  explicit PortIndex(const Diagram& d);  // throws InvalidDiagram
  const Slot& operator[](Port p) const { return at[p.node][p.slot]; }
  // the port at the other end of the arc attached to p
  Port across(const Diagram& d, Port p) const;
};

std::vector<std::string> validate(const Diagram& d);
void require_valid(const Diagram& d);

bool over_port(NodeKind k, int slot);
// +1 / -1 for crossings, 0 for vertices
int crossing_sign(const Diagram& d, int node);
int writhe(const Diagram& d);
int count_crossings(const Diagram& d);
int count_vertices(const Diagram& d);

struct ComponentInfo {
  int traced = 0;                  // loops through nodes
  int total = 0;                   // traced + free loops
  std::vector<int> arc_component;  // per arc, in [0, traced)
};
ComponentInfo trace_components(const Diagram& d);
int components(const Diagram& d);

// Component ids are the traced ones first, then free loops (reversal of a
// free loop changes nothing).
Diagram reverse_component(const Diagram& d, int component);
Diagram mirror(const Diagram& d);

// Faces of the rotation system; a face is a list of (node, slot) departures.
int count_faces(const Diagram& d);
bool is_planar(const Diagram& d);

// Renumbered normal form: every node rotated so its in-ports are {0,1},
// nodes relabelled by a minimal breadth-first code per connected piece.
Diagram canonical(const Diagram& d);
std::string canonical_text(const Diagram& d);
bool equivalent(const Diagram& a, const Diagram& b);

// ---- moves

enum class Move { R1Pos, R1Neg, R2, R3, R4, R5 };
const char* move_name(Move m);

struct MoveSpec {
  Move move = Move::R1Pos;
  bool inverse = false;
  // Site arcs; -1 stands for one of the free loops.
  //   R1: {arc}; R2: {arc X (over), arc Y}; R3/R4: {e_uv, e_vw, e_wu};
  //   R5: {arc at V.(p+2), arc at V.(p+3)}
  std::vector<int> arcs;
  // R1 inverse: {node}; R2 inverse: {n1, n2}; R3/R4: {u, v, w}; R5: {V, X}
  std::vector<int> nodes;
  // R1: which side the loop lies on; R2: bit 0 antiparallel, bit 1 mirror side
  int variant = 0;
  // R5: the vertex port p (the twist sits on p+2, p+3)
  int base = 0;
};

std::string to_string(const MoveSpec& m);

struct MoveResult {
  Diagram diagram;
  // undoes the move on the result; empty for removals, whose inverse is a
  // forward move found by find_moves
  std::optional<MoveSpec> undo;
};

MoveResult apply_move_ex(const Diagram& d, const MoveSpec& m);  // throws PatternMismatch
Diagram apply_move(const Diagram& d, const MoveSpec& m);

// All applicable sites for the given move (forward R2 only over arcs on a
// common face, so planar inputs stay planar).
std::vector<MoveSpec> find_moves(const Diagram& d, Move m, bool inverse);

// Uniform over move kinds with at least one site, then over sites. R4/R5
// only when vertex_moves is set. Empty if nothing applies.
std::optional<MoveSpec> random_move(const Diagram& d, std::mt19937_64& rng, bool vertex_moves);

struct Triangle {
  std::array<int, 3> nodes;  // u, v, w
  std::array<int, 3> arcs;   // e_uv, e_vw, e_wu
};
// Triangular faces whose three nodes are distinct.
std::vector<Triangle> find_triangles(const Diagram& d);
// Slides the chord uv across node w (the R3/R4 rewiring, without the
// over/under applicability test).
Diagram slide_triangle(const Diagram& d, const Triangle& t);

// ---- named corpus

// Braid letters: +i / -i for sigma_i^{+-1}, and vertex letters.
struct BraidLetter {
  NodeKind kind;
  int gen;  // 1-based
};
Diagram braid_closure(const std::string& name, int strands, const std::vector<BraidLetter>& word);
Diagram named_diagram(const std::string& name);
std::vector<std::string> named_diagram_names();

// ---- codec

Diagram parse_diagram(const std::string& text);
std::string serialize(const Diagram& d);
Diagram load_diagram(const std::string& path);

}  // namespace kg
