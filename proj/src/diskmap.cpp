#include "elnet/diskmap.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "elnet/errors.hpp"

namespace elnet {

int DiskMap::add_edge(int u, int v) {
    origin.push_back(u);
    origin.push_back(v);
    return num_edges() - 1;
}

void DiskMap::finalize() {
    if (static_cast<int>(rot.size()) != num_vertices)
        throw InconsistentEmbedding("rotation list count differs from vertex count");
    boundary_pos.assign(static_cast<size_t>(num_vertices), -1);
    for (size_t i = 0; i < boundary.size(); ++i) {
        const int b = boundary[i];
        if (b < 0 || b >= num_vertices) throw InconsistentEmbedding("boundary vertex out of range");
        if (boundary_pos[static_cast<size_t>(b)] >= 0)
            throw InconsistentEmbedding("boundary vertex listed twice");
        boundary_pos[static_cast<size_t>(b)] = static_cast<int>(i);
    }
    pos_.assign(origin.size(), -1);
    for (int v = 0; v < num_vertices; ++v) {
        const auto& r = rot[static_cast<size_t>(v)];
        for (size_t p = 0; p < r.size(); ++p) {
            const int h = r[p];
            if (h < 0 || h >= num_half_edges() || origin[static_cast<size_t>(h)] != v)
                throw InconsistentEmbedding("rotation entry does not leave its vertex");
            if (pos_[static_cast<size_t>(h)] >= 0)
                throw InconsistentEmbedding("half-edge repeated in rotation");
            pos_[static_cast<size_t>(h)] = static_cast<int>(p);
        }
    }
    for (int h = 0; h < num_half_edges(); ++h)
        if (pos_[static_cast<size_t>(h)] < 0)
            throw InconsistentEmbedding("half-edge missing from its rotation");
}

namespace {

struct Extended {
    const DiskMap& m;
    int H;
    int n;

    int arc_origin(int h) const {
        const int a = (h - H) / 2;
        return (h - H) % 2 == 0 ? m.boundary[static_cast<size_t>(a)]
                                : m.boundary[static_cast<size_t>((a + 1) % n)];
    }
    int origin(int h) const { return h < H ? m.origin[static_cast<size_t>(h)] : arc_origin(h); }
    int size(int v) const {
        return static_cast<int>(m.rot[static_cast<size_t>(v)].size()) + (m.is_boundary(v) ? 2 : 0);
    }
    int at(int v, int p) const {
        if (!m.is_boundary(v)) return m.rot[static_cast<size_t>(v)][static_cast<size_t>(p)];
        const int i = m.boundary_pos[static_cast<size_t>(v)];
        const int len = size(v);
        if (p == 0) return H + 2 * i;
        if (p == len - 1) return H + 2 * ((i - 1 + n) % n) + 1;
        return m.rot[static_cast<size_t>(v)][static_cast<size_t>(p - 1)];
    }
    int position(int h) const {
        const int v = origin(h);
        if (h >= H) return (h - H) % 2 == 0 ? 0 : size(v) - 1;
        return m.pos(h) + (m.is_boundary(v) ? 1 : 0);
    }
};

}  // namespace

int next_in_face(const DiskMap& m, int h) {
    const Extended x{m, m.num_half_edges(), static_cast<int>(m.boundary.size())};
    const int t = h ^ 1;
    const int v = x.origin(t);
    const int len = x.size(v);
    return x.at(v, (x.position(t) - 1 + len) % len);
}

DiskFaces trace_disk_faces(const DiskMap& m) {
    const int H = m.num_half_edges();
    const int n = static_cast<int>(m.boundary.size());
    if (n == 0) throw InconsistentEmbedding("a disk map needs at least one boundary vertex");
    const int total = H + 2 * n;
    std::vector<int> face_raw(static_cast<size_t>(total), -1);
    std::vector<std::vector<int>> raw;
    for (int h0 = 0; h0 < total; ++h0) {
        if (face_raw[static_cast<size_t>(h0)] >= 0) continue;
        std::vector<int> cyc;
        int h = h0;
        do {
            if (face_raw[static_cast<size_t>(h)] >= 0 || static_cast<int>(cyc.size()) > total)
                throw InconsistentEmbedding("face tracing does not close");
            face_raw[static_cast<size_t>(h)] = static_cast<int>(raw.size());
            cyc.push_back(h);
            h = next_in_face(m, h);
        } while (h != h0);
        raw.push_back(std::move(cyc));
    }
    const int outer = face_raw[static_cast<size_t>(H + 1)];
    for (int h : raw[static_cast<size_t>(outer)])
        if (h < H || (h - H) % 2 == 0) throw InconsistentEmbedding("outer face touches the interior");

    // connectivity through real edges and arcs
    std::vector<int> comp(static_cast<size_t>(m.num_vertices));
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int a) {
        while (comp[static_cast<size_t>(a)] != a) a = comp[static_cast<size_t>(a)];
        return a;
    };
    for (int e = 0; e < m.num_edges(); ++e)
        comp[static_cast<size_t>(find(m.origin[static_cast<size_t>(2 * e)]))] = find(m.origin[static_cast<size_t>(2 * e + 1)]);
    for (int i = 0; i + 1 < n; ++i)
        comp[static_cast<size_t>(find(m.boundary[static_cast<size_t>(i)]))] = find(m.boundary[static_cast<size_t>(i + 1)]);
    for (int v = 0; v < m.num_vertices; ++v)
        if (find(v) != find(m.boundary[0])) throw InconsistentEmbedding("map is not connected");

    const int inner = static_cast<int>(raw.size()) - 1;
    if (inner != 1 + m.num_edges() + n - m.num_vertices)
        throw InconsistentEmbedding("Euler relation fails; rotation system is not planar");

    std::vector<std::pair<long, int>> order;
    for (int f = 0; f < static_cast<int>(raw.size()); ++f) {
        if (f == outer) continue;
        long key = std::numeric_limits<long>::max();
        for (int h : raw[static_cast<size_t>(f)])
            key = std::min<long>(key, h < H ? h / 2 : m.num_edges() + (h - H) / 2);
        order.emplace_back(key, f);
    }
    std::sort(order.begin(), order.end());
    std::vector<int> remap(raw.size(), -1);
    DiskFaces out;
    out.real_half_edges = H;
    for (size_t i = 0; i < order.size(); ++i) {
        remap[static_cast<size_t>(order[i].second)] = static_cast<int>(i);
        out.faces.push_back(raw[static_cast<size_t>(order[i].second)]);
    }
    out.face_of.resize(static_cast<size_t>(total));
    for (int h = 0; h < total; ++h) out.face_of[static_cast<size_t>(h)] = remap[static_cast<size_t>(face_raw[static_cast<size_t>(h)])];
    for (int i = 0; i < n; ++i) out.boundary_face.push_back(out.face_of[static_cast<size_t>(H + 2 * i)]);
    return out;
}

StrandWalk walk_from_boundary(const DiskMap& m, int start, const TurnRule& turn) {
    StrandWalk w;
    w.start = start;
    int v = start;
    int p = turn(v, -1);
    const int guard = 2 * m.num_half_edges() + 4;
    while (p >= 0) {
        const int h = m.rot[static_cast<size_t>(v)][static_cast<size_t>(p)];
        w.darts.push_back(h);
        if (static_cast<int>(w.darts.size()) > guard) throw InconsistentEmbedding("strand does not terminate");
        v = m.target(h);
        p = turn(v, m.pos(h ^ 1));
    }
    if (!m.is_boundary(v)) throw InconsistentEmbedding("strand left the disk at an interior vertex");
    w.end = v;
    return w;
}

StrandWalk walk_cycle(const DiskMap& m, int h0, const TurnRule& turn) {
    StrandWalk w;
    int h = h0;
    const int guard = 2 * m.num_half_edges() + 4;
    do {
        w.darts.push_back(h);
        if (static_cast<int>(w.darts.size()) > guard) throw InconsistentEmbedding("cycle does not close");
        const int v = m.target(h);
        const int p = turn(v, m.pos(h ^ 1));
        if (p < 0) throw InconsistentEmbedding("cycle walk reached the boundary");
        h = m.rot[static_cast<size_t>(v)][static_cast<size_t>(p)];
    } while (h != h0);
    return w;
}

bool strand_sides(const DiskMap& m, const DiskFaces& f, const StrandWalk& w, std::vector<int>& side) {
    const int F = static_cast<int>(f.faces.size());
    side.assign(static_cast<size_t>(F), 0);
    std::vector<char> on_path(static_cast<size_t>(m.num_edges()), 0);
    std::deque<int> queue;
    auto mark = [&](int face, int s) {
        if (face < 0) return true;
        int& cur = side[static_cast<size_t>(face)];
        if (cur == 0) {
            cur = s;
            queue.push_back(face);
            return true;
        }
        return cur == s;
    };
    for (int h : w.darts) on_path[static_cast<size_t>(h / 2)] = 1;
    for (int h : w.darts) {
        if (!mark(f.face_of[static_cast<size_t>(h)], -1)) return false;
        if (!mark(f.face_of[static_cast<size_t>(h ^ 1)], +1)) return false;
    }
    while (!queue.empty()) {
        const int g = queue.front();
        queue.pop_front();
        for (int h : f.faces[static_cast<size_t>(g)]) {
            if (f.is_arc(h) || on_path[static_cast<size_t>(h / 2)]) continue;
            if (!mark(f.face_of[static_cast<size_t>(h ^ 1)], side[static_cast<size_t>(g)])) return false;
        }
    }
    return std::none_of(side.begin(), side.end(), [](int s) { return s == 0; });
}

}  // namespace elnet
