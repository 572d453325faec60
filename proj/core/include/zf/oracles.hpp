#pragma once

#include <cstdint>

#include "zf/approx.hpp"
#include "zf/arc_set.hpp"
#include "zf/graph.hpp"

namespace zf {

struct OracleBudget {
  int max_n_zexact = 16;
  int max_n_ft = 10;
  int max_n_pw = 12;
};

struct ExactZ {
  int z = 0;
  VertexSet witness;
};
// Minimum zero forcing set by increasing-cardinality enumeration with
// bitset closures, per connected component (the number is additive).
// Errors when a component exceeds max_n_zexact.
ExactZ exact_z(const Graph& g, const OracleBudget& budget = {});

struct ExactFt {
  int ft = 0;
  FortPacking witness;
};
// Maximum number of pairwise disjoint forts, per connected component.
// Enumerates inclusion-minimal forts and packs them exactly by a subset
// dynamic program; minimal forts suffice because any fort in an optimal
// packing can be shrunk to a minimal sub-fort without losing disjointness.
// Errors when a component exceeds max_n_ft.
ExactFt exact_ft(const Graph& g, const OracleBudget& budget = {});

struct ProperIntervalZ {
  int z = 0;
  std::vector<VertexSet> cover;
  ArcSet fas;
};
// Z = n - cc for proper interval graphs (per component, both sides additive),
// witnessed by one arc per cover clique (lowest-position vertex to
// highest-position vertex) and certified as a forcing arc set before
// returning. pre: g proper interval.
ProperIntervalZ z_proper_interval(const Graph& g);

struct CutBounds {
  int lower = 0;
  int upper = 0;
  int z1 = 0;
  int z2 = 0;
};
// Z(g1) + Z(g2) -/+ |c| with g1 = g[v1 ∪ c] and g2 = g - v1. pre: c is a
// cut of g and v1 is one component of g - c; component sizes within budget.
CutBounds cut_bounds(const Graph& g, const VertexSet& c, const VertexSet& v1,
                     const OracleBudget& budget = {});

struct ProductBound {
  std::int64_t bound = 0;
  StrongProduct product;
  ArcSet fas;
};
// n_g Z(h) + n_h Z(g) - Z(g) Z(h), witnessed by the componentwise product
// of optimal forcing arc sets of the factors, certified on the product.
// Budgets apply to the factors.
ProductBound strong_product_bound(const Graph& g, const Graph& h,
                                  const OracleBudget& budget = {});

}  // namespace zf
