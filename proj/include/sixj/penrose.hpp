#pragma once

// Brute-force Penrose spin-network evaluation.  Each edge of a planar
// trivalent graph is cabled into label-many strands, the strands are joined
// without crossings at the vertices, and every choice of one permutation per
// edge is summed with weight (-2)^loops (-1)^crossings.  This is the
// reference that the closed forms in recoupling.hpp are checked against.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sixj/labels.hpp"

namespace sixj {

inline constexpr int kDefaultOracleCap = 6;

struct NetEdge {
  int from = 0;
  int to = 0;
  std::int64_t label = 0;
};

/// A connected trivalent graph that admits a planar embedding.  Only the
/// combinatorics is stored; the embedding is recovered on evaluation.
struct TrivalentNet {
  int vertex_count = 0;
  std::vector<NetEdge> edges;
};

TrivalentNet theta_net(std::int64_t a, std::int64_t b, std::int64_t c);

/// Tetrahedral net dual to the labelled tetrahedron: one vertex per face,
/// one edge per tetrahedron edge.
TrivalentNet mercedes_net(const LabelSextuple& labels);

/// Throws Error{CapExceeded} if any label exceeds `cap`, Error{Inadmissible}
/// if some vertex triple fails the admissibility conditions.
mpq_class penrose_evaluate(const TrivalentNet& net, int cap = kDefaultOracleCap);

}  // namespace sixj
