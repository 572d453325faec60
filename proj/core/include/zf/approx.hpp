#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zf/arc_set.hpp"
#include "zf/forcing.hpp"
#include "zf/graph.hpp"
#include "zf/path_decomposition.hpp"

namespace zf {

struct FortPacking {
  std::vector<VertexSet> forts;  // pairwise disjoint, discovery order
  int size() const { return static_cast<int>(forts.size()); }
};

struct ApproxResult {
  VertexSet s;
  FortPacking packing;
  ArcSet fas;
  int width_used = 0;
  std::vector<std::pair<int, int>> iterations;  // (t, z) per outer iteration
};

struct ApproxOptions {
  // Re-derive and assert the per-iteration proof invariants (arc set is
  // forcing on the swept prefix, s equals its sources, forts stay disjoint).
  bool check_invariants = false;
};

// Sweeps the decomposition left to right. While the pair of boundary bags
// forces the window, the window grows; a stall certifies a fort, the bag
// before the stall joins s, and the window's forcing arcs merge (reversed)
// into the accumulated arc set. Guarantees |s| <= (width+1) * |packing| on
// nonempty graphs. pre: g connected (empty allowed), npd decomposes g.
ApproxResult approximate_zero_forcing(const Graph& g, const NicePathDecomposition& npd,
                                      const ApproxOptions& opts = {});

struct ClaimCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<ClaimCheck> claims;
  bool all_pass() const;
};

// Re-derives every claim from first principles: s forces g, each fort is a
// fort, forts are disjoint, |s| <= (width+1)*|packing|, and fas is a forcing
// arc set whose sources are exactly s.
VerificationReport verify_result(const Graph& g, const ApproxResult& r);

struct RatioCertificate {
  int lower = 0;        // certified lower bound on the zero forcing number
  int upper = 0;        // |s|
  bool bounded = false; // false when an empty packing cannot certify a ratio
};
// pre: r passed verify_result.
RatioCertificate ratio_certificate(const ApproxResult& r);

}  // namespace zf
