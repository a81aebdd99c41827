#pragma once

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <utility>
#include <vector>

#include "arcforge/arc.hpp"
#include "arcforge/surface.hpp"

namespace arcforge {

// All pairwise minimal-position intersection numbers; diagonal is 0.
std::vector<std::vector<long long>> intersection_matrix(
    const IdealTriangulation& T, const std::vector<ArcClass>& arcs,
    int threads = 1);

struct ArcSystem {
  std::string surface;
  std::vector<ArcClass> members;  // canonical forms, sorted, distinct
  int k = 1;
  std::vector<std::vector<long long>> matrix;
};

// Canonicalizes, sorts and checks the k-bound; throws on a violation.
ArcSystem make_system(const IdealTriangulation& T, const std::string& surface_name,
                      std::vector<ArcClass> members, int k, int threads = 1);

// Assembles a system from pool indices, slicing the pool's precomputed
// matrix instead of recomputing it.  Indices must be ascending.
ArcSystem system_from_pool(const IdealTriangulation& T,
                           const std::vector<ArcClass>& pool,
                           const std::vector<std::vector<long long>>& matrix,
                           const std::vector<int>& indices, int k);

// Pairwise distinct and pairwise i(a,b) <= k; on failure *witness (if given)
// receives an offending index pair.
bool is_k_system(const IdealTriangulation& T, const std::vector<ArcClass>& arcs,
                 int k, std::pair<int, int>* witness = nullptr);

struct CompatibilityGraph {
  int n = 0;
  int k = 1;
  std::vector<boost::dynamic_bitset<>> adj;
  std::vector<std::vector<long long>> matrix;
};

CompatibilityGraph build_compatibility_graph(const IdealTriangulation& T,
                                             const std::vector<ArcClass>& pool,
                                             int k, int threads = 1);

// Every maximal clique of size >= floor_size, each sorted ascending, the
// list sorted lexicographically. Serial and deterministic.
std::vector<std::vector<int>> maximum_cliques(const CompatibilityGraph& g,
                                              int floor_size);

// Indices of members disjoint from every other member.
std::vector<int> non_intersecting_subset(const ArcSystem& s);

// True iff every pool arc is a member or meets some member >= 2 times.
// On failure *witness (if given) receives the index of an extending arc.
bool is_saturated(const IdealTriangulation& T, const ArcSystem& s,
                  const std::vector<ArcClass>& pool, int threads = 1,
                  int* witness = nullptr);

// The cut-polygon construction: three disjoint arcs slicing the surface to a
// hexagonal disk, plus the nine diagonals of that hexagon.
ArcSystem construct_hexagon_system(const IdealTriangulation& T);

}  // namespace arcforge
