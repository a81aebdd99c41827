#pragma once
#include <array>
#include <compare>
#include <string>
#include <vector>

#include "arcforge/rational.hpp"

namespace arcforge {

// Triangles are oriented counterclockwise.  Side s of a triangle is the side
// opposite corner s; it joins corners s+1 and s+2 (mod 3).  The local
// coordinate along side s runs from corner s+1 to corner s+2.

struct Slot {
  int tri = -1;
  int side = -1;
  auto operator<=>(const Slot&) const = default;
};

struct Corner {
  int tri = -1;
  int corner = -1;
  auto operator<=>(const Corner&) const = default;
};

inline int mod3(int x) { return ((x % 3) + 3) % 3; }

// Marked-surface invariants: genus, boundary circles, interior marked points,
// boundary marked points.  chi() is the marked Euler characteristic.
struct SurfaceInvariants {
  long long g = 0;
  long long b = 0;
  long long p = 0;
  long long v = 0;
  Rat chi() const { return Rat(2 - 2 * g - b - p) - Rat(v, 2); }
  auto operator<=>(const SurfaceInvariants&) const = default;
};

// Ideal triangulation of a closed oriented surface whose vertex set is the
// set of marked points.  Gluings identify side slots in pairs; the gluing
// (t,s)~(t',s') matches corner s+1 with s'+2 and s+2 with s'+1, so side
// coordinates on the two slots of an edge run in opposite directions.
class IdealTriangulation {
 public:
  std::string name;
  int ntri = 0;
  int nvertices = 0;
  std::vector<std::array<Slot, 3>> glue_table;     // glue_table[t][s]
  std::vector<std::array<int, 3>> vertex_table;    // vertex_table[t][c]
  std::vector<std::array<Slot, 2>> edges;          // edges[e] = {ref slot, other}

  Slot glue(Slot s) const { return glue_table[s.tri][s.side]; }
  int edge_of(Slot s) const { return edge_index_[s.tri][s.side]; }
  const std::array<Slot, 2>& slots_of(int edge) const { return edges[edge]; }
  int vertex_at(Corner c) const { return vertex_table[c.tri][c.corner]; }
  int num_edges() const { return static_cast<int>(edges.size()); }

  // Next corner sector counterclockwise around the marked point of (t,c).
  Corner next_wedge_ccw(Corner c) const {
    Slot n = glue({c.tri, mod3(c.corner + 1)});
    return {n.tri, mod3(n.side + 1)};
  }

  SurfaceInvariants invariants() const;   // closed: b = 0, v = 0, p = nvertices
  Rat euler_characteristic() const { return invariants().chi(); }

  // Throws std::invalid_argument describing the first defect found.
  void validate() const;

  void finalize();  // rebuild edge list + slot->edge map from glue_table

  bool operator==(const IdealTriangulation& o) const {
    return name == o.name && ntri == o.ntri && nvertices == o.nvertices &&
           glue_table == o.glue_table && vertex_table == o.vertex_table &&
           edges == o.edges;
  }

 private:
  std::vector<std::array<int, 3>> edge_index_;
};

// Built-in fixtures: "torus-1-marked" and "torus-2-marked".
const IdealTriangulation& standard_fixture(const std::string& name);
std::vector<std::string> standard_fixture_names();

}  // namespace arcforge
