#include "zf/certificate.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace zf {

namespace {

using Json = nlohmann::json;

[[noreturn]] void reject(const std::string& what) {
  throw ParseError(ParseError::Kind::Certificate, 0, "certificate: " + what);
}

std::int64_t require_int(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) reject(std::string(key) + " is not an integer");
  return v.get<std::int64_t>();
}

// Strictly ascending vertex ids below n.
std::vector<Vertex> require_vertex_array(const Json& v, Vertex n, const char* what) {
  if (!v.is_array()) reject(std::string(what) + " is not an array");
  std::vector<Vertex> out;
  out.reserve(v.size());
  for (const Json& e : v) {
    if (!e.is_number_integer()) reject(std::string(what) + " holds a non-integer");
    const std::int64_t x = e.get<std::int64_t>();
    if (x < 0 || x >= n) reject(std::string(what) + " id " + std::to_string(x) + " out of range");
    if (!out.empty() && out.back() >= x) reject(std::string(what) + " is not strictly ascending");
    out.push_back(static_cast<Vertex>(x));
  }
  return out;
}

}  // namespace

std::string graph_hash_hex(const Graph& g) {
  const std::string text = serialize_graph(g);
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf, 16);
}

Certificate make_certificate(const Graph& g, const ApproxResult& r) {
  Certificate c;
  c.graph_hash = graph_hash_hex(g);
  c.n = g.vertex_count();
  c.m = g.edge_count();
  c.width = r.width_used;
  c.s = r.s;
  c.forts = r.packing.forts;
  std::sort(c.forts.begin(), c.forts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  c.fas = r.fas.arcs();
  c.iterations = r.iterations;
  return c;
}

std::string certificate_to_json(const Certificate& c) {
  Json j;
  j["graph_hash"] = c.graph_hash;
  j["n"] = c.n;
  j["m"] = c.m;
  j["width"] = c.width;
  j["s"] = c.s.ids();
  Json forts = Json::array();
  for (const VertexSet& f : c.forts) forts.push_back(f.ids());
  j["forts"] = std::move(forts);
  Json fas = Json::array();
  for (const Arc& a : c.fas) fas.push_back(Json::array({a.tail, a.head}));
  j["fas"] = std::move(fas);
  Json iterations = Json::array();
  for (const auto& [t, z] : c.iterations) iterations.push_back(Json::array({t, z}));
  j["iterations"] = std::move(iterations);
  return j.dump();
}

Certificate parse_certificate(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    reject(e.what());
  }
  if (!j.is_object()) reject("top level is not an object");
  static const char* const kKeys[] = {"fas",        "forts", "graph_hash", "iterations",
                                      "m",          "n",     "s",          "width"};
  for (const auto& item : j.items()) {
    if (!std::any_of(std::begin(kKeys), std::end(kKeys),
                     [&](const char* k) { return item.key() == k; })) {
      reject("unknown key " + item.key());
    }
  }
  for (const char* k : kKeys) {
    if (!j.contains(k)) reject(std::string("missing key ") + k);
  }

  Certificate c;
  const Json& hash = j.at("graph_hash");
  if (!hash.is_string()) reject("graph_hash is not a string");
  c.graph_hash = hash.get<std::string>();
  if (c.graph_hash.size() != 16 ||
      c.graph_hash.find_first_not_of("0123456789abcdef") != std::string::npos) {
    reject("graph_hash is not 16 lowercase hex digits");
  }

  const std::int64_t n = require_int(j, "n");
  if (n < 0 || n > INT32_MAX) reject("n out of range");
  c.n = static_cast<Vertex>(n);
  c.m = require_int(j, "m");
  if (c.m < 0) reject("m out of range");
  const std::int64_t width = require_int(j, "width");
  if (width < -1 || width >= n) reject("width out of range");
  c.width = static_cast<int>(width);

  c.s = VertexSet(require_vertex_array(j.at("s"), c.n, "s"));

  const Json& forts = j.at("forts");
  if (!forts.is_array()) reject("forts is not an array");
  for (const Json& f : forts) {
    std::vector<Vertex> ids = require_vertex_array(f, c.n, "fort");
    if (ids.empty()) reject("fort is empty");
    c.forts.emplace_back(std::move(ids));
  }

  const Json& fas = j.at("fas");
  if (!fas.is_array()) reject("fas is not an array");
  for (const Json& a : fas) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
      reject("fas entry is not an id pair");
    }
    const std::int64_t tail = a[0].get<std::int64_t>(), head = a[1].get<std::int64_t>();
    if (tail < 0 || tail >= n || head < 0 || head >= n) reject("fas id out of range");
    if (tail == head) reject("fas entry is a loop");
    const Arc arc{static_cast<Vertex>(tail), static_cast<Vertex>(head)};
    if (!c.fas.empty() && !(c.fas.back() < arc)) reject("fas is not strictly ascending");
    c.fas.push_back(arc);
  }

  const Json& iterations = j.at("iterations");
  if (!iterations.is_array()) reject("iterations is not an array");
  for (const Json& it : iterations) {
    if (!it.is_array() || it.size() != 2 || !it[0].is_number_integer() ||
        !it[1].is_number_integer()) {
      reject("iterations entry is not an index pair");
    }
    const std::int64_t t = it[0].get<std::int64_t>(), z = it[1].get<std::int64_t>();
    if (t < 0 || t > INT32_MAX || z < 0 || z > INT32_MAX) reject("iteration index out of range");
    c.iterations.emplace_back(static_cast<int>(t), static_cast<int>(z));
  }
  return c;
}

ApproxResult certificate_to_result(const Graph& g, const Certificate& c) {
  if (c.graph_hash != graph_hash_hex(g) || c.n != g.vertex_count() || c.m != g.edge_count()) {
    reject("graph identity mismatch");
  }
  ApproxResult r;
  r.s = c.s;
  r.packing.forts = c.forts;
  r.width_used = c.width;
  r.iterations = c.iterations;
  r.fas = ArcSet::build(g, c.fas);
  return r;
}

}  // namespace zf
