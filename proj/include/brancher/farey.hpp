#pragma once
// Farey tessellation combinatorics: distance, triangles, and chains of
// triangles connecting an edge to a target vertex.

#include <array>
#include <vector>

#include "brancher/rational.hpp"

namespace brancher {

// Unordered triple of distinct extended rationals; stored sorted.
struct Triangle {
  std::array<ExtRational, 3> v;
  Triangle(ExtRational a, ExtRational b, ExtRational c);
  bool contains(const ExtRational& x) const;
  bool operator==(const Triangle& o) const { return v == o.v; }
  std::string str() const;
};

// True iff the three vertices are pairwise at Farey distance 1.
bool is_farey_triangle(const Triangle& t);

// Two triangles are adjacent iff they share exactly two vertices.
bool triangles_adjacent(const Triangle& a, const Triangle& b);

struct FareyChain {
  std::vector<Triangle> triangles;
  // |p| + |q| of the successive normalized targets from the greedy descent;
  // strictly decreasing by construction.
  std::vector<Int> descent_heights;
};

// Chain of Farey triangles S_0, ..., S_n with r, s in S_0, t in S_n and
// consecutive triangles adjacent. Requires farey_delta(r, s) == 1 and
// r != s; throws std::invalid_argument otherwise.
FareyChain triangle_chain(const ExtRational& r, const ExtRational& s, const ExtRational& t);

// Unimodular matrix sending r to 0 and s to infinity (requires delta = 1).
// Deterministic sign choice: nonnegative lower-left entry, tie-broken by
// nonnegative lower-right.
Mat2Z normalizing_matrix(const ExtRational& r, const ExtRational& s);

// Postcondition check used by tests and the CLI: chain is valid for (r,s,t).
bool validate_chain(const FareyChain& ch, const ExtRational& r, const ExtRational& s,
                    const ExtRational& t);

}  // namespace brancher
