#pragma once

#include <string>

#include "zf/approx.hpp"
#include "zf/graph.hpp"

namespace zf {

// FNV-1a 64 over the canonical graph serialization, as 16 hex digits.
std::string graph_hash_hex(const Graph& g);

// Self-contained solve certificate: graph identity plus every claim input.
struct Certificate {
  std::string graph_hash;
  Vertex n = 0;
  std::int64_t m = 0;
  int width = 0;
  VertexSet s;
  std::vector<VertexSet> forts;   // each ascending, ordered by first element
  std::vector<Arc> fas;           // ascending (tail, head)
  std::vector<std::pair<int, int>> iterations;
};

Certificate make_certificate(const Graph& g, const ApproxResult& r);

// Canonical JSON: sorted keys, ascending arrays, compact separators.
std::string certificate_to_json(const Certificate& c);
Certificate parse_certificate(const std::string& text);

// Reassembles the result the certificate claims (for re-verification);
// errors ParseError when the certificate names a different graph. Claimed
// arcs that are not graph edges throw invalid_argument; the verify command
// downgrades that to a claim failure rather than a parse error.
ApproxResult certificate_to_result(const Graph& g, const Certificate& c);

}  // namespace zf
