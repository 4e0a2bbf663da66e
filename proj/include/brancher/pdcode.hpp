#pragma once
// Planar diagram codes for link diagrams and their combinatorial structure:
// strands, faces, checkerboard coloring, orientations.
//
// Convention (see docs/pd-convention.md): a crossing X(a,b,c,d) lists the
// four incident arcs counterclockwise starting from an end of the under
// strand, so slots 0,2 carry the under strand and slots 1,3 the over strand.
// Arcs are labeled 1..2n, each label appearing exactly twice. X(a,b,c,d) and
// X(c,d,a,b) describe the same unoriented crossing.

#include <array>
#include <string>
#include <vector>

#include "brancher/rational.hpp"

namespace brancher {

struct Crossing {
  std::array<int, 4> s;  // arc labels at slots 0..3
  bool operator==(const Crossing& o) const { return s == o.s; }
};

struct PDCode {
  std::vector<Crossing> crossings;
  int free_loops = 0;  // crossingless unknot components (PD[] is one unknot)

  size_t n() const { return crossings.size(); }
  std::string str() const;
  bool operator==(const PDCode& o) const {
    return crossings == o.crossings && free_loops == o.free_loops;
  }
};

// Parses "PD[X(a,b,c,d), ...]"; "PD[]" is the 0-crossing unknot. Throws
// std::invalid_argument on malformed input or invalid arc labels, and
// verifies Euler's formula V - E + F = 2 on every connected piece.
PDCode parse_pd(const std::string& s);

// Canonical form: arcs renumbered 1..2n in traversal order starting from
// the lowest surviving label, tuples rotated so slot 0 <= slot 2, crossings
// sorted by slot-0 label. Free loops preserved.
PDCode canonicalize(const PDCode& d);

// One passage of a strand through a crossing, under the diagram's base
// orientation (the traversal direction used by canonical numbering).
struct Passage {
  int entry_slot = 0;  // strand enters the crossing here, exits at +2 mod 4
  int component = 0;   // link component of this strand
};

// Derived combinatorial structure. Built once per diagram; throws on
// invalid codes.
struct DiagramInfo {
  int narcs = 0;
  int num_link_components = 0;     // includes free loops
  int num_diagram_pieces = 0;      // connected pieces of the 4-valent graph
  std::vector<std::array<std::pair<int, int>, 2>> arc_occ;  // arc -> 2 (crossing, slot)
  std::vector<int> arc_component;                            // arc -> component id
  std::vector<Passage> under, over;                          // per crossing
  // Faces: corner (v, i) sits between slots i and i+1 (mod 4).
  int num_faces = 0;
  std::vector<std::array<int, 4>> corner_face;  // (v, i) -> face id
  // Checkerboard colors 0/1 per face (only for connected diagrams).
  std::vector<int> face_color;
  bool connected = false;

  int face_at(int v, int corner) const { return corner_face[v][corner]; }
};

DiagramInfo analyze(const PDCode& d);

// A quasi-orientation: which components are reversed relative to the base
// orientation; component 0 is never reversed.
using QuasiOrientation = std::vector<bool>;
std::vector<QuasiOrientation> all_quasi_orientations(int num_components);

// Number of link components (free loops included).
int num_components(const PDCode& d);

bool is_alternating(const PDCode& d);

// Unoriented diagram moves.
PDCode mirror(const PDCode& d);
PDCode crossing_change(const PDCode& d, size_t idx);
// r = 0 joins slots (0,1) and (2,3); r = 1 joins slots (0,3) and (1,2).
PDCode resolve_crossing(const PDCode& d, size_t idx, int r);
// Splice b into a along the given arcs (connected sum of the two diagrams).
PDCode connected_sum(const PDCode& a, int arc_a, const PDCode& b, int arc_b);

}  // namespace brancher
