#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "elnet/grassmann.hpp"
#include "elnet/graph.hpp"

namespace elnet {

enum class Color { White, Black };

// A bipartite graph in the disk; its boundary vertices are d_1..d_m.
// Provenance fields are -1 unless the graph was built from a disk graph by temperley_plus.
struct BipartiteGraph {
    DiskGraph graph;
    std::vector<Color> color;       // per vertex index
    std::vector<int> from_edge;     // black vertex -> G edge
    std::vector<int> from_vertex;   // white vertex -> G vertex
    std::vector<int> from_face;     // white vertex -> G face

    int m() const { return graph.n(); }
    int num_white() const;
    int num_black() const;
    int k() const { return num_white() - num_black(); }
    bool is_white(int v) const { return color[static_cast<size_t>(v)] == Color::White; }
    // Edge endpoints by color.
    int black_end(int e) const;
    int white_end(int e) const;
};

// Validates that every edge joins the two colors. Throws ParseError / InconsistentEmbedding.
BipartiteGraph make_bipartite(const DiskGraphSpec& spec, const std::map<std::string, Color>& colors);

// Edge weights indexed by edge index.
using EdgeWeights = std::vector<Rat>;

struct Temperley {
    BipartiteGraph graph;
    EdgeWeights weights;
};

// Black vertex per edge of G, white vertex per vertex and per face of G.
// Vertex ids: "b:<edge>", "w:<vertex>", "f<face index + 1>". Throws NonPositive.
Temperley temperley_plus(const DiskGraph& g, const std::vector<Rat>& conductance);

struct BipartiteStrands {
    std::vector<int> perm;            // perm[i-1] = endpoint index of the strand starting at d_i
    std::vector<StrandWalk> walks;    // walks[i-1] starts at d_i (empty darts for an isolated d_i)
    std::vector<Mask> face_label;     // S(f): strands ending at d_i with f on their left
};

// Strands turn maximally left at white and maximally right at black vertices.
// Throws NotReduced for internal cycles, self-intersections and parallel double crossings.
BipartiteStrands strands_and_labels(const BipartiteGraph& g);

// Face between d_{i-1} and d_i.
int boundary_face_minus(const BipartiteGraph& g, int i);

// Z_I over all dimer covers, keyed by boundary subset. Throws NoDimerCover / NonPositive.
PluckerVector boundary_measurement(const BipartiteGraph& g, const EdgeWeights& wt);

// Alternating product around each face, darts in clockwise order: black-to-white weights on
// top, white-to-black weights below.
std::vector<Rat> x_vars(const BipartiteGraph& g, const EdgeWeights& wt);

// Searches for g with g = 1 on boundary vertices and wt2(bw) = wt1(bw) g(w) / g(b).
bool gauge_equivalent(const BipartiteGraph& g, const EdgeWeights& wt1, const EdgeWeights& wt2);

// Multiplies every edge at vertex v by s (a gauge change when v is internal).
EdgeWeights gauge_at(const BipartiteGraph& g, const EdgeWeights& wt, int v, const Rat& s);

// Weights from face values A, with the boundary correction at white boundary vertices.
EdgeWeights p_gamma(const BipartiteGraph& g, const std::vector<Rat>& a);

// A_f = Delta_{S(f)}. Throws NonPositive.
std::vector<Rat> scott_phi(const BipartiteGraph& g, const BipartiteStrands& s, const PluckerVector& x);

struct MoveSite {
    enum class Kind { Spider, Contraction };
    Kind kind = Kind::Spider;
    int face = -1;       // quadrilateral face with four internal trivalent corners
    std::string vertex;  // internal degree-two vertex to contract
    static MoveSite spider(int f) { return {Kind::Spider, f, {}}; }
    static MoveSite contraction(std::string v) { return {Kind::Contraction, -1, std::move(v)}; }
};

struct BipartiteMove {
    MoveSite site;
    BipartiteGraph before, after;
    std::vector<int> face_map;       // before -> after
    // Spider: faces across the square's edges, in clockwise order starting from the edge that
    // leaves a white corner clockwise.
    std::array<int, 4> around{};
    std::array<std::string, 4> corners;  // spider corners clockwise, the first one white before
};

// Throws InvalidSite.
BipartiteMove bipartite_move(const BipartiteGraph& g, const MoveSite& site);

// Weights on the moved graph whose measurement is proportional to the original.
EdgeWeights move_weights(const BipartiteMove& mv, const EdgeWeights& wt);
// Face variables carried across the move, indexed by faces of the moved graph.
std::vector<Rat> move_x(const BipartiteMove& mv, const std::vector<Rat>& x);
std::vector<Rat> move_a(const BipartiteMove& mv, const std::vector<Rat>& a);

// The four-boundary-vertex example: two black vertices, white d_1..d_4, weights (a, b, c, d).
Temperley four_vertex_example(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

}  // namespace elnet
