#pragma once

#include <functional>
#include <vector>

namespace elnet {

// A map embedded in a disk, stored as half-edges.
// Edge e owns half-edges 2e and 2e+1; a half-edge's twin is h^1.
// rot[v] lists the half-edges leaving v in clockwise order. For a boundary vertex the
// list is linear: it starts next to the boundary arc toward the clockwise-next boundary
// vertex and ends next to the arc toward the previous one.
struct DiskMap {
    int num_vertices = 0;
    std::vector<int> origin;                // per half-edge
    std::vector<std::vector<int>> rot;      // per vertex
    std::vector<int> boundary;              // clockwise boundary vertices

    int num_edges() const { return static_cast<int>(origin.size()) / 2; }
    int num_half_edges() const { return static_cast<int>(origin.size()); }
    int target(int h) const { return origin[static_cast<size_t>(h ^ 1)]; }
    bool is_boundary(int v) const { return boundary_pos[static_cast<size_t>(v)] >= 0; }

    // Adds an edge u -> v and returns its id; rotations are filled in separately.
    int add_edge(int u, int v);
    // Validates the rotation system and caches positions. Throws InconsistentEmbedding.
    void finalize();

    // Position of half-edge h inside rot[origin[h]].
    int pos(int h) const { return pos_[static_cast<size_t>(h)]; }

    std::vector<int> boundary_pos;  // -1 for interior vertices
    std::vector<int> pos_;
};

// Faces of a disk map. Virtual arcs close the boundary: arc i joins boundary[i] to
// boundary[i+1]; its forward half-edge is H + 2i and its backward half-edge H + 2i + 1,
// where H is the number of real half-edges. The face outside the disk is discarded.
struct DiskFaces {
    int real_half_edges = 0;
    std::vector<std::vector<int>> faces;  // darts in order, the face lies on their right
    std::vector<int> face_of;             // per real or virtual half-edge; -1 outside
    // face_of for the forward arc leaving boundary[i].
    std::vector<int> boundary_face;

    bool is_arc(int h) const { return h >= real_half_edges; }
};

// Traces faces so that each face lies to the right of its darts; faces are sorted by
// their smallest incident real edge id (faces without real edges go last, by arc index).
// Checks connectivity and the Euler relation. Throws InconsistentEmbedding.
DiskFaces trace_disk_faces(const DiskMap& m);

// Next half-edge of the face on the right of h (virtual arcs included).
int next_in_face(const DiskMap& m, int h);

// A strand is a walk on half-edges. `turn(v, p)` picks the outgoing rotation position at
// v given the rotation position p of the arrival half-edge; p == -1 means the walk starts
// from outside the disk. Returning -1 leaves the disk (only allowed at boundary vertices).
using TurnRule = std::function<int(int v, int arrival_pos)>;

struct StrandWalk {
    std::vector<int> darts;
    int start = -1;  // boundary vertex, or -1 for a closed cycle
    int end = -1;
};

// Walk from boundary vertex `start`; throws InconsistentEmbedding if it does not exit.
StrandWalk walk_from_boundary(const DiskMap& m, int start, const TurnRule& turn);

// Follow the rule from half-edge h until returning to h; used for internal cycles.
StrandWalk walk_cycle(const DiskMap& m, int h, const TurnRule& turn);

// Side classification of every face against a walk: +1 left, -1 right.
// Returns false if some face lands on both sides or is unreachable.
bool strand_sides(const DiskMap& m, const DiskFaces& f, const StrandWalk& w, std::vector<int>& side);

}  // namespace elnet
