#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "elnet/dimer.hpp"
#include "elnet/electrical.hpp"
#include "elnet/graph.hpp"
#include "elnet/grassmann.hpp"
#include "elnet/orthogonal.hpp"

namespace elnet {

// Objects keep insertion order so output is reproducible and readable.
using Json = nlohmann::ordered_json;

// How rationals are written. With `decimal` set the output is for reading only: the
// parsers reject it.
struct RatFormat {
    std::optional<int> decimal;
    std::string operator()(const Rat& r) const { return decimal ? r.decimal(*decimal) : r.str(); }
};

// All readers throw ParseError on a schema violation; graph readers also throw
// InconsistentEmbedding from validation.
Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& r, const RatFormat& f = {});

Mat mat_from_json(const Json& j);  // array of equal-length rows
Json mat_to_json(const Mat& m, const RatFormat& f = {});

DiskGraph graph_from_json(const Json& j);
Json graph_to_json(const DiskGraph& g);

// Same fields as a disk graph plus "color": {vertex id: "white" | "black"}.
BipartiteGraph bipartite_from_json(const Json& j);
Json bipartite_to_json(const BipartiteGraph& g);

// Every key must be a k-subset of [n]; absent subsets are zero.
PluckerVector plucker_from_json(const Json& j);
Json plucker_to_json(const PluckerVector& p, const RatFormat& f = {});

MatrixPoint point_from_json(const Json& j);
Json point_to_json(const MatrixPoint& p, const RatFormat& f = {});

// Keys are subsets of [n]; "" is the empty set.
CartanVector cartan_from_json(const Json& j);
Json cartan_to_json(const CartanVector& c, const RatFormat& f = {});

Mat response_from_json(const Json& j);
Json response_to_json(const Mat& l, const RatFormat& f = {});

// One entry per edge of g, keyed by edge id.
Conductances conductances_from_json(const Json& j, const DiskGraph& g);
Json conductances_to_json(const Conductances& c, const DiskGraph& g, const RatFormat& f = {});

// Throws ParseError for unreadable files or malformed JSON.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

}  // namespace elnet
