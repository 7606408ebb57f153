#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "elnet/diskmap.hpp"
#include "elnet/subset.hpp"

namespace elnet {

// Orders ids by comparing digit runs numerically ("e2" < "e10").
bool natural_less(const std::string& a, const std::string& b);

// Plain description of a disk graph with string ids, as read from or written to JSON.
struct DiskGraphSpec {
    int n = 0;
    std::vector<std::string> boundary;                            // clockwise
    std::map<std::string, std::vector<std::string>> rotations;   // clockwise edge ids
    std::map<std::string, std::array<std::string, 2>> edges;     // endpoints
};

// Validated disk graph. Vertices and edges are indexed in natural id order.
class DiskGraph {
public:
    DiskGraph() = default;
    explicit DiskGraph(const DiskGraphSpec& spec);  // throws ParseError / InconsistentEmbedding

    int n() const { return n_; }
    int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
    int num_edges() const { return static_cast<int>(edge_ids_.size()); }
    int num_faces() const { return static_cast<int>(faces_.faces.size()); }

    const std::string& vertex_id(int v) const { return vertex_ids_[static_cast<size_t>(v)]; }
    const std::string& edge_id(int e) const { return edge_ids_[static_cast<size_t>(e)]; }
    int vertex_index(const std::string& id) const;  // -1 if absent
    int edge_index(const std::string& id) const;

    // Vertex index of b_i, i in [1, n].
    int boundary_vertex(int i) const { return map_.boundary[static_cast<size_t>(i - 1)]; }
    bool is_boundary(int v) const { return map_.is_boundary(v); }
    // Endpoints of edge e: half-edge 2e leaves the first, 2e+1 leaves the second.
    int edge_end(int e, int side) const { return map_.origin[static_cast<size_t>(2 * e + side)]; }
    // Rotation at v as edge indices.
    std::vector<int> rotation_edges(int v) const;

    const DiskMap& map() const { return map_; }
    const DiskFaces& faces() const { return faces_; }
    // Face on the right of the forward arc from b_i to b_{i+1}.
    int boundary_face(int i) const { return faces_.boundary_face[static_cast<size_t>(i - 1)]; }

    DiskGraphSpec spec() const;

private:
    int n_ = 0;
    std::vector<std::string> vertex_ids_;
    std::vector<std::string> edge_ids_;
    std::map<std::string, int> vertex_lookup_;
    std::map<std::string, int> edge_lookup_;
    DiskMap map_;
    DiskFaces faces_;
};

// Faces with their darts (face on the right), in the deterministic order of trace_disk_faces.
struct FaceStep {
    int dart;           // half-edge, or virtual arc when >= 2 * num_edges
    int edge;           // -1 for a virtual arc
    int from, to;       // vertex indices
};
std::vector<std::vector<FaceStep>> trace_faces(const DiskGraph& g);

// Medial map. Vertices 0..2n-1 are the terminals t_1..t_{2n}; vertex 2n+e sits on edge e.
struct Medial {
    int n = 0;
    DiskMap map;
    DiskFaces faces;
    std::vector<int> vertex_region;  // G vertex -> medial face
    std::vector<int> face_region;    // G face -> medial face
    std::vector<StrandWalk> strands;  // one per terminal pair, started from the smaller terminal
    std::vector<StrandWalk> cycles;
    std::vector<std::pair<int, int>> pairing;  // 1-based terminals, i < j, sorted

    int terminal(int t) const { return t - 1; }
    int crossing(int e) const { return 2 * n + e; }
    // Medial vertices of G-edges visited by a walk, in order.
    std::vector<int> crossings_of(const StrandWalk& w) const;
};

Medial medial(const DiskGraph& g);

// Strand leaving terminal t (1-based), traced straight through every crossing.
StrandWalk strand_from(const Medial& m, int t);

struct WellConnectedVerdict {
    bool reduced = false;
    bool well_connected = false;
    std::vector<std::string> violations;
};
WellConnectedVerdict check_well_connected(const DiskGraph& g);

// J(u) for vertices and faces: j is in J(u) when u lies left of the strand from t_{n+j} to t_j.
struct JLabels {
    std::vector<Mask> vertex;
    std::vector<Mask> face;
};
JLabels j_labels(const DiskGraph& g);  // throws NotWellConnected

struct YDeltaSite {
    enum class Kind { Vertex, Face };
    Kind kind = Kind::Vertex;
    std::string vertex;  // degree-3 interior vertex for Y to Delta
    int face = -1;       // triangular interior face for Delta to Y
    static YDeltaSite at_vertex(std::string id) { return {Kind::Vertex, std::move(id), -1}; }
    static YDeltaSite at_face(int f) { return {Kind::Face, {}, f}; }
};

// Local labeling, written for both directions with the star picture in mind:
// v_1..v_3 are the outer vertices in clockwise order; edge i is the star arm to v_i, which
// corresponds to the triangle edge opposite v_i and keeps the same id; side face i is the face
// between the arms to v_{i+1} and v_{i+2}, which is the face across the triangle edge opposite v_i.
struct YDeltaMove {
    bool y_to_delta = true;
    DiskGraph before, after;
    std::array<std::string, 3> outer;     // vertex ids of v_1..v_3
    std::array<std::string, 3> edge_ids;  // ids of the three moved edges
    std::array<int, 3> side_before{}, side_after{};
    // Y to Delta: center vertex index before, new triangle face index after.
    // Delta to Y: triangle face index before, new center vertex index after.
    int center_before = -1, center_after = -1;
    std::vector<int> vertex_map;  // before -> after, -1 if removed
    std::vector<int> face_map;    // before -> after, -1 if removed
};
YDeltaMove y_delta_graph(const DiskGraph& g, const YDeltaSite& site);  // throws InvalidSite

// A well-connected graph with n boundary vertices and binom(n, 2) edges, 1 <= n <= 5.
DiskGraph builtin_graph(int n);  // throws UnsupportedN

}  // namespace elnet
