#include "elnet/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>

#include "elnet/errors.hpp"

namespace elnet {

bool natural_less(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
            std::string ra = a.substr(i, ei - i), rb = b.substr(j, ej - j);
            ra.erase(0, std::min(ra.find_first_not_of('0'), ra.size() - 1));
            rb.erase(0, std::min(rb.find_first_not_of('0'), rb.size() - 1));
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            if (ra != rb) return ra < rb;
            i = ei;
            j = ej;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    if ((i < a.size()) != (j < b.size())) return j < b.size();
    return a < b;  // tie-break ids like "01" vs "1"
}

namespace {

std::vector<std::string> sorted_ids(std::set<std::string> ids) {
    std::vector<std::string> out(ids.begin(), ids.end());
    std::sort(out.begin(), out.end(), natural_less);
    return out;
}

}  // namespace

DiskGraph::DiskGraph(const DiskGraphSpec& spec) : n_(spec.n) {
    if (n_ < 1) throw ParseError("a disk graph needs n >= 1");
    if (static_cast<int>(spec.boundary.size()) != n_)
        throw ParseError("boundary list length differs from n");
    std::set<std::string> vs(spec.boundary.begin(), spec.boundary.end());
    if (static_cast<int>(vs.size()) != n_) throw ParseError("boundary vertex repeated");
    for (const auto& [v, r] : spec.rotations) vs.insert(v);
    std::set<std::string> es;
    for (const auto& [e, ends] : spec.edges) {
        es.insert(e);
        if (ends[0] == ends[1]) throw InconsistentEmbedding("self-loop on edge '" + e + "'");
        if (!vs.count(ends[0]) || !vs.count(ends[1]))
            throw ParseError("edge '" + e + "' has an endpoint without a rotation entry");
    }
    vertex_ids_ = sorted_ids(vs);
    edge_ids_ = sorted_ids(es);
    for (int v = 0; v < num_vertices(); ++v) vertex_lookup_[vertex_ids_[static_cast<size_t>(v)]] = v;
    for (int e = 0; e < num_edges(); ++e) edge_lookup_[edge_ids_[static_cast<size_t>(e)]] = e;

    map_.num_vertices = num_vertices();
    for (int e = 0; e < num_edges(); ++e) {
        const auto& ends = spec.edges.at(edge_ids_[static_cast<size_t>(e)]);
        map_.add_edge(vertex_lookup_.at(ends[0]), vertex_lookup_.at(ends[1]));
    }
    map_.rot.assign(static_cast<size_t>(num_vertices()), {});
    for (const auto& [vid, r] : spec.rotations) {
        const int v = vertex_lookup_.at(vid);
        for (const auto& eid : r) {
            auto it = edge_lookup_.find(eid);
            if (it == edge_lookup_.end()) throw ParseError("rotation of '" + vid + "' names unknown edge '" + eid + "'");
            const int e = it->second;
            int h = -1;
            if (map_.origin[static_cast<size_t>(2 * e)] == v) h = 2 * e;
            else if (map_.origin[static_cast<size_t>(2 * e + 1)] == v) h = 2 * e + 1;
            else throw InconsistentEmbedding("edge '" + eid + "' is not incident to '" + vid + "'");
            map_.rot[static_cast<size_t>(v)].push_back(h);
        }
    }
    for (const auto& b : spec.boundary) map_.boundary.push_back(vertex_lookup_.at(b));
    map_.finalize();
    faces_ = trace_disk_faces(map_);
}

int DiskGraph::vertex_index(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    return it == vertex_lookup_.end() ? -1 : it->second;
}

int DiskGraph::edge_index(const std::string& id) const {
    auto it = edge_lookup_.find(id);
    return it == edge_lookup_.end() ? -1 : it->second;
}

std::vector<int> DiskGraph::rotation_edges(int v) const {
    std::vector<int> out;
    for (int h : map_.rot[static_cast<size_t>(v)]) out.push_back(h / 2);
    return out;
}

DiskGraphSpec DiskGraph::spec() const {
    DiskGraphSpec s;
    s.n = n_;
    for (int b : map_.boundary) s.boundary.push_back(vertex_id(b));
    for (int v = 0; v < num_vertices(); ++v) {
        auto& r = s.rotations[vertex_id(v)];
        for (int e : rotation_edges(v)) r.push_back(edge_id(e));
    }
    for (int e = 0; e < num_edges(); ++e)
        s.edges[edge_id(e)] = {vertex_id(edge_end(e, 0)), vertex_id(edge_end(e, 1))};
    return s;
}

std::vector<std::vector<FaceStep>> trace_faces(const DiskGraph& g) {
    const int H = g.map().num_half_edges();
    std::vector<std::vector<FaceStep>> out;
    for (const auto& f : g.faces().faces) {
        std::vector<FaceStep> steps;
        for (int h : f) {
            if (h < H) {
                steps.push_back({h, h / 2, g.map().origin[static_cast<size_t>(h)], g.map().target(h)});
            } else {
                const int a = (h - H) / 2;
                const int u = g.boundary_vertex(a + 1), w = g.boundary_vertex(cyc(a + 2, g.n()));
                if ((h - H) % 2 == 0) steps.push_back({h, -1, u, w});
                else steps.push_back({h, -1, w, u});
            }
        }
        out.push_back(std::move(steps));
    }
    return out;
}

namespace {

// Rotation slot at the crossing of edge h/2 for the corner just after or before h.
int crossing_slot(int h, bool after) {
    if (h % 2 == 0) return after ? 1 : 2;
    return after ? 3 : 0;
}

int straight_turn(int two_n, int v, int arrival) {
    if (v < two_n) return arrival < 0 ? 0 : -1;
    return (arrival + 2) % 4;
}

}  // namespace

std::vector<int> Medial::crossings_of(const StrandWalk& w) const {
    std::vector<int> out;
    for (int h : w.darts) {
        const int v = map.target(h);
        if (v >= 2 * n) out.push_back(v - 2 * n);
    }
    return out;
}

StrandWalk strand_from(const Medial& m, int t) {
    const int two_n = 2 * m.n;
    return walk_from_boundary(m.map, m.terminal(t), [two_n](int v, int p) { return straight_turn(two_n, v, p); });
}

Medial medial(const DiskGraph& g) {
    const DiskMap& gm = g.map();
    const int n = g.n();
    const int E = g.num_edges();
    const int H = gm.num_half_edges();
    Medial m;
    m.n = n;
    m.map.num_vertices = 2 * n + E;
    m.map.rot.assign(static_cast<size_t>(m.map.num_vertices), {});
    for (int v = 2 * n; v < m.map.num_vertices; ++v) m.map.rot[static_cast<size_t>(v)].assign(4, -1);

    struct Corner {
        int vertex;
        int gface_dart;  // extended half-edge whose right face is the corner's G face
    };
    std::vector<Corner> corners;
    auto crossing = [&](int h) { return 2 * n + h / 2; };
    auto add_corner = [&](int from, int to, int w, int face_dart) {
        const int c = m.map.add_edge(from, to);
        corners.push_back({w, face_dart});
        return c;
    };
    auto place = [&](int medial_h, int gh, bool after) {
        m.map.rot[static_cast<size_t>(crossing(gh))][static_cast<size_t>(crossing_slot(gh, after))] = medial_h;
    };

    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& r = gm.rot[static_cast<size_t>(v)];
        const int len = static_cast<int>(r.size());
        if (!gm.is_boundary(v)) {
            for (int p = 0; p < len; ++p) {
                const int x = r[static_cast<size_t>(p)], y = r[static_cast<size_t>((p + 1) % len)];
                const int c = add_corner(crossing(x), crossing(y), v, x);
                place(2 * c, x, true);
                place(2 * c + 1, y, false);
            }
            continue;
        }
        const int k = gm.boundary_pos[static_cast<size_t>(v)];
        const int t_before = 2 * k, t_after = 2 * k + 1;  // t_{2i-1}, t_{2i}
        const int arc = H + 2 * k;
        if (len == 0) {
            const int c = add_corner(t_after, t_before, v, arc);
            m.map.rot[static_cast<size_t>(t_after)].push_back(2 * c);
            m.map.rot[static_cast<size_t>(t_before)].push_back(2 * c + 1);
            continue;
        }
        {
            const int y = r[0];
            const int c = add_corner(t_after, crossing(y), v, arc);
            m.map.rot[static_cast<size_t>(t_after)].push_back(2 * c);
            place(2 * c + 1, y, false);
        }
        for (int p = 0; p + 1 < len; ++p) {
            const int x = r[static_cast<size_t>(p)], y = r[static_cast<size_t>(p + 1)];
            const int c = add_corner(crossing(x), crossing(y), v, x);
            place(2 * c, x, true);
            place(2 * c + 1, y, false);
        }
        {
            const int x = r[static_cast<size_t>(len - 1)];
            const int c = add_corner(crossing(x), t_before, v, x);
            place(2 * c, x, true);
            m.map.rot[static_cast<size_t>(t_before)].push_back(2 * c + 1);
        }
    }
    for (int t = 0; t < 2 * n; ++t) m.map.boundary.push_back(t);
    m.map.finalize();
    m.faces = trace_disk_faces(m.map);

    m.vertex_region.assign(static_cast<size_t>(g.num_vertices()), -1);
    m.face_region.assign(static_cast<size_t>(g.num_faces()), -1);
    for (size_t c = 0; c < corners.size(); ++c) {
        const int vr = m.faces.face_of[2 * c];
        const int fr = m.faces.face_of[2 * c + 1];
        int& vslot = m.vertex_region[static_cast<size_t>(corners[c].vertex)];
        const int gf = g.faces().face_of[static_cast<size_t>(corners[c].gface_dart)];
        int& fslot = m.face_region[static_cast<size_t>(gf)];
        if ((vslot >= 0 && vslot != vr) || (fslot >= 0 && fslot != fr))
            throw InconsistentEmbedding("medial regions do not match the graph");
        vslot = vr;
        fslot = fr;
    }
    std::set<int> regions;
    for (int r : m.vertex_region) regions.insert(r);
    for (int r : m.face_region) regions.insert(r);
    if (regions.count(-1) || static_cast<int>(regions.size()) != g.num_vertices() + g.num_faces() ||
        static_cast<int>(m.faces.faces.size()) != g.num_vertices() + g.num_faces())
        throw InconsistentEmbedding("medial regions do not match the graph");

    std::vector<char> used(static_cast<size_t>(m.map.num_edges()), 0);
    std::vector<char> reached(static_cast<size_t>(2 * n), 0);
    for (int t = 1; t <= 2 * n; ++t) {
        if (reached[static_cast<size_t>(t - 1)]) continue;
        StrandWalk w = strand_from(m, t);
        const int end = w.end + 1;
        reached[static_cast<size_t>(t - 1)] = reached[static_cast<size_t>(end - 1)] = 1;
        for (int h : w.darts) used[static_cast<size_t>(h / 2)] = 1;
        m.pairing.emplace_back(std::min(t, end), std::max(t, end));
        m.strands.push_back(std::move(w));
    }
    const int two_n = 2 * n;
    for (int c = 0; c < m.map.num_edges(); ++c) {
        if (used[static_cast<size_t>(c)]) continue;
        StrandWalk w = walk_cycle(m.map, 2 * c, [two_n](int v, int p) { return straight_turn(two_n, v, p); });
        for (int h : w.darts) used[static_cast<size_t>(h / 2)] = 1;
        m.cycles.push_back(std::move(w));
    }
    std::sort(m.pairing.begin(), m.pairing.end());
    return m;
}

WellConnectedVerdict check_well_connected(const DiskGraph& g) {
    const Medial m = medial(g);
    WellConnectedVerdict out;
    std::vector<std::pair<std::string, std::vector<int>>> walks;
    for (const auto& s : m.strands)
        walks.emplace_back("strand t" + std::to_string(s.start + 1) + "-t" + std::to_string(s.end + 1), m.crossings_of(s));
    for (size_t i = 0; i < m.cycles.size(); ++i) {
        out.violations.push_back("closed strand through edge " + g.edge_id(m.crossings_of(m.cycles[i]).front()));
        walks.emplace_back("closed strand " + std::to_string(i + 1), m.crossings_of(m.cycles[i]));
    }
    for (auto& [name, xs] : walks) {
        std::vector<int> s = xs;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            out.violations.push_back(name + " intersects itself");
        s.erase(std::unique(s.begin(), s.end()), s.end());
        xs = s;
    }
    for (size_t a = 0; a < walks.size(); ++a)
        for (size_t b = a + 1; b < walks.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(walks[a].second.begin(), walks[a].second.end(), walks[b].second.begin(),
                                  walks[b].second.end(), std::back_inserter(common));
            if (common.size() >= 2) out.violations.push_back(walks[a].first + " and " + walks[b].first + " intersect twice");
        }
    out.reduced = out.violations.empty();
    bool standard = true;
    for (const auto& [i, j] : m.pairing) standard = standard && (j == i + g.n());
    if (!standard) out.violations.push_back("medial pairing is not {i, n+i}");
    out.well_connected = out.reduced && standard;
    return out;
}

JLabels j_labels(const DiskGraph& g) {
    const WellConnectedVerdict v = check_well_connected(g);
    if (!v.well_connected) throw NotWellConnected(v.violations.empty() ? "graph is not well connected" : v.violations.front());
    const Medial m = medial(g);
    const int n = g.n();
    JLabels out;
    out.vertex.assign(static_cast<size_t>(g.num_vertices()), 0);
    out.face.assign(static_cast<size_t>(g.num_faces()), 0);
    for (int j = 1; j <= n; ++j) {
        const StrandWalk w = strand_from(m, n + j);
        if (w.end != m.terminal(j)) throw NotWellConnected("strand from t_{n+j} does not end at t_j");
        std::vector<int> side;
        if (!strand_sides(m.map, m.faces, w, side)) throw InconsistentEmbedding("strand does not split the disk");
        for (int u = 0; u < g.num_vertices(); ++u)
            if (side[static_cast<size_t>(m.vertex_region[static_cast<size_t>(u)])] > 0) out.vertex[static_cast<size_t>(u)] |= bit(j);
        for (int f = 0; f < g.num_faces(); ++f)
            if (side[static_cast<size_t>(m.face_region[static_cast<size_t>(f)])] > 0) out.face[static_cast<size_t>(f)] |= bit(j);
    }
    return out;
}

namespace {

// A dart that survives the move, named by edge id and origin id, or by arc index.
struct StableDart {
    std::string edge;
    std::string origin;
    int arc = -1;
};

StableDart stable(const DiskGraph& g, int h) {
    const int H = g.map().num_half_edges();
    if (h >= H) return {{}, {}, h - H};
    return {g.edge_id(h / 2), g.vertex_id(g.map().origin[static_cast<size_t>(h)]), -1};
}

int resolve(const DiskGraph& g, const StableDart& d) {
    if (d.arc >= 0) return g.map().num_half_edges() + d.arc;
    const int e = g.edge_index(d.edge);
    if (e < 0) return -1;
    return g.vertex_id(g.edge_end(e, 0)) == d.origin ? 2 * e : 2 * e + 1;
}

// Faces of `before` mapped to `after` through any dart not on a moved edge.
std::vector<int> map_faces(const DiskGraph& before, const DiskGraph& after, const std::set<std::string>& moved) {
    std::vector<int> out;
    for (const auto& f : before.faces().faces) {
        int img = -1;
        for (int h : f) {
            const StableDart d = stable(before, h);
            if (d.arc < 0 && moved.count(d.edge)) continue;
            const int h2 = resolve(after, d);
            if (h2 < 0) continue;
            const int cand = after.faces().face_of[static_cast<size_t>(h2)];
            if (img >= 0 && img != cand) throw InvalidSite("face correspondence is ambiguous");
            img = cand;
        }
        out.push_back(img);
    }
    return out;
}

std::string fresh_vertex_id(const DiskGraph& g) {
    for (int k = 1;; ++k) {
        std::string id = "y" + std::to_string(k);
        if (g.vertex_index(id) < 0) return id;
    }
}

}  // namespace

YDeltaMove y_delta_graph(const DiskGraph& g, const YDeltaSite& site) {
    YDeltaMove mv;
    mv.before = g;
    const DiskMap& gm = g.map();
    DiskGraphSpec s = g.spec();
    std::array<int, 3> outer{};
    std::set<std::string> moved;
    std::string new_center;

    if (site.kind == YDeltaSite::Kind::Vertex) {
        mv.y_to_delta = true;
        const int v0 = g.vertex_index(site.vertex);
        if (v0 < 0) throw InvalidSite("unknown vertex '" + site.vertex + "'");
        if (g.is_boundary(v0)) throw InvalidSite("Y-Delta center must be an interior vertex");
        auto r = gm.rot[static_cast<size_t>(v0)];
        if (r.size() != 3) throw InvalidSite("Y-Delta center must have degree 3");
        std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
        for (int i = 0; i < 3; ++i) {
            outer[static_cast<size_t>(i)] = gm.target(r[static_cast<size_t>(i)]);
            mv.edge_ids[static_cast<size_t>(i)] = g.edge_id(r[static_cast<size_t>(i)] / 2);
            mv.outer[static_cast<size_t>(i)] = g.vertex_id(outer[static_cast<size_t>(i)]);
            // face between the arms to v_{i+1} and v_{i+2}
            mv.side_before[static_cast<size_t>(i)] = g.faces().face_of[static_cast<size_t>(r[static_cast<size_t>((i + 1) % 3)])];
        }
        if (outer[0] == outer[1] || outer[1] == outer[2] || outer[0] == outer[2])
            throw InvalidSite("Y-Delta center must have three distinct neighbours");
        if (mv.side_before[0] == mv.side_before[1] || mv.side_before[1] == mv.side_before[2] ||
            mv.side_before[0] == mv.side_before[2])
            throw InvalidSite("Y-Delta faces around the center must be distinct");
        mv.center_before = v0;
        s.rotations.erase(site.vertex);
        for (int i = 0; i < 3; ++i) {
            const auto& ei = mv.edge_ids[static_cast<size_t>(i)];
            auto& rot = s.rotations[mv.outer[static_cast<size_t>(i)]];
            auto it = std::find(rot.begin(), rot.end(), ei);
            // arm i becomes the edges to v_{i+1} and v_{i-1}, in that clockwise order
            it = rot.erase(it);
            rot.insert(it, {mv.edge_ids[static_cast<size_t>((i + 2) % 3)], mv.edge_ids[static_cast<size_t>((i + 1) % 3)]});
            s.edges[ei] = {mv.outer[static_cast<size_t>((i + 1) % 3)], mv.outer[static_cast<size_t>((i + 2) % 3)]};
            moved.insert(ei);
        }
    } else {
        mv.y_to_delta = false;
        const int f0 = site.face;
        if (f0 < 0 || f0 >= g.num_faces()) throw InvalidSite("face index out of range");
        const auto& darts = g.faces().faces[static_cast<size_t>(f0)];
        if (darts.size() != 3) throw InvalidSite("Delta-Y needs a triangular face");
        for (int h : darts)
            if (g.faces().is_arc(h)) throw InvalidSite("Delta-Y face must be interior");
        // darts d_1: v_1 -> v_2, d_2: v_2 -> v_3, d_3: v_3 -> v_1 in clockwise order
        for (int i = 0; i < 3; ++i) outer[static_cast<size_t>(i)] = gm.origin[static_cast<size_t>(darts[static_cast<size_t>(i)])];
        if (outer[0] == outer[1] || outer[1] == outer[2] || outer[0] == outer[2])
            throw InvalidSite("Delta-Y triangle must have three distinct vertices");
        const std::string v0 = fresh_vertex_id(g);
        new_center = v0;
        mv.center_before = f0;
        for (int i = 0; i < 3; ++i) {
            const int opposite = darts[static_cast<size_t>((i + 1) % 3)];  // from v_{i+1} to v_{i+2}
            mv.outer[static_cast<size_t>(i)] = g.vertex_id(outer[static_cast<size_t>(i)]);
            mv.edge_ids[static_cast<size_t>(i)] = g.edge_id(opposite / 2);
            mv.side_before[static_cast<size_t>(i)] = g.faces().face_of[static_cast<size_t>(opposite ^ 1)];
            moved.insert(mv.edge_ids[static_cast<size_t>(i)]);
        }
        for (int i = 0; i < 3; ++i) {
            // at v_i the corner of the triangle is (edge to v_{i+1}, edge to v_{i-1})
            const std::string& to_next = g.edge_id(darts[static_cast<size_t>(i)] / 2);
            const std::string& to_prev = g.edge_id(darts[static_cast<size_t>((i + 2) % 3)] / 2);
            auto& rot = s.rotations[mv.outer[static_cast<size_t>(i)]];
            const int len = static_cast<int>(rot.size());
            const int a = static_cast<int>(std::find(rot.begin(), rot.end(), to_next) - rot.begin());
            const int b = static_cast<int>(std::find(rot.begin(), rot.end(), to_prev) - rot.begin());
            if (a == len || b == len || (a + 1) % len != b) throw InvalidSite("triangle corner is not consecutive");
            rot[static_cast<size_t>(a)] = mv.edge_ids[static_cast<size_t>(i)];
            rot.erase(rot.begin() + b);
            s.edges[mv.edge_ids[static_cast<size_t>(i)]] = {v0, mv.outer[static_cast<size_t>(i)]};
        }
        s.rotations[v0] = {mv.edge_ids[0], mv.edge_ids[1], mv.edge_ids[2]};
    }

    mv.after = DiskGraph(s);
    const DiskGraph& a = mv.after;
    for (int v = 0; v < g.num_vertices(); ++v) mv.vertex_map.push_back(a.vertex_index(g.vertex_id(v)));
    mv.face_map = map_faces(g, a, moved);
    if (mv.y_to_delta) {
        mv.vertex_map[static_cast<size_t>(mv.center_before)] = -1;
        std::set<int> hit(mv.face_map.begin(), mv.face_map.end());
        if (hit.count(-1) || static_cast<int>(hit.size()) != g.num_faces() || a.num_faces() != g.num_faces() + 1)
            throw InvalidSite("Y-Delta face correspondence failed");
        for (int f = 0; f < a.num_faces(); ++f)
            if (!hit.count(f)) mv.center_after = f;
    } else {
        mv.face_map[static_cast<size_t>(mv.center_before)] = -1;
        mv.center_after = a.vertex_index(new_center);
        std::set<int> hit;
        for (int f = 0; f < g.num_faces(); ++f)
            if (f != mv.center_before) hit.insert(mv.face_map[static_cast<size_t>(f)]);
        if (hit.count(-1) || static_cast<int>(hit.size()) != a.num_faces())
            throw InvalidSite("Delta-Y face correspondence failed");
    }
    for (int i = 0; i < 3; ++i)
        mv.side_after[static_cast<size_t>(i)] = mv.face_map[static_cast<size_t>(mv.side_before[static_cast<size_t>(i)])];
    return mv;
}

namespace {

// Graph under construction for the builtin family.
struct Builder {
    std::vector<std::vector<int>> rot;  // edge numbers, clockwise
    std::vector<std::array<int, 2>> ends;
    std::vector<int> boundary;

    int add_vertex() {
        rot.emplace_back();
        return static_cast<int>(rot.size()) - 1;
    }
    // Boundary spike at b_i: b_i moves inward and a new boundary vertex hangs off it.
    void spike(int i) {
        const int old = boundary[static_cast<size_t>(i)];
        const int w = add_vertex();
        const int e = static_cast<int>(ends.size());
        ends.push_back({old, w});
        rot[static_cast<size_t>(old)].push_back(e);
        rot[static_cast<size_t>(w)].push_back(e);
        boundary[static_cast<size_t>(i)] = w;
    }
    // Boundary edge from b_i to b_{i+1}.
    void chord(int i) {
        const int u = boundary[static_cast<size_t>(i)];
        const int v = boundary[(static_cast<size_t>(i) + 1) % boundary.size()];
        const int e = static_cast<int>(ends.size());
        ends.push_back({u, v});
        rot[static_cast<size_t>(u)].insert(rot[static_cast<size_t>(u)].begin(), e);
        rot[static_cast<size_t>(v)].push_back(e);
    }
    DiskGraphSpec spec() const {
        DiskGraphSpec s;
        const int n = static_cast<int>(boundary.size());
        s.n = n;
        std::vector<std::string> names(rot.size());
        int interior = 0;
        for (size_t v = 0; v < rot.size(); ++v) {
            auto it = std::find(boundary.begin(), boundary.end(), static_cast<int>(v));
            names[v] = it != boundary.end() ? "b" + std::to_string(it - boundary.begin() + 1)
                                            : "u" + std::to_string(++interior);
        }
        for (int b : boundary) s.boundary.push_back(names[static_cast<size_t>(b)]);
        for (size_t v = 0; v < rot.size(); ++v) {
            auto& r = s.rotations[names[v]];
            for (int e : rot[v]) r.push_back("e" + std::to_string(e + 1));
        }
        for (size_t e = 0; e < ends.size(); ++e)
            s.edges["e" + std::to_string(e + 1)] = {names[static_cast<size_t>(ends[e][0])], names[static_cast<size_t>(ends[e][1])]};
        return s;
    }
};

bool chords_cross(int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    const bool c_in = a < c && c < b;
    const bool d_in = a < d && d < b;
    return c_in != d_in;
}

// Shortest sequence of adjacent-terminal swaps from {2i-1, 2i} to {i, n+i} that only ever
// crosses strands that were not crossing yet. Step a swaps terminals a and a+1 (cyclic).
std::vector<int> crossing_schedule(int n) {
    const int m = 2 * n;
    std::vector<int> start(static_cast<size_t>(m + 1)), goal(static_cast<size_t>(m + 1));
    for (int i = 1; i <= n; ++i) {
        start[static_cast<size_t>(2 * i - 1)] = 2 * i;
        start[static_cast<size_t>(2 * i)] = 2 * i - 1;
        goal[static_cast<size_t>(i)] = n + i;
        goal[static_cast<size_t>(n + i)] = i;
    }
    std::map<std::vector<int>, std::pair<std::vector<int>, int>> parent;
    std::deque<std::vector<int>> queue{start};
    parent[start] = {{}, 0};
    while (!queue.empty()) {
        const std::vector<int> cur = queue.front();
        queue.pop_front();
        if (cur == goal) break;
        for (int a = 1; a <= m; ++a) {
            const int b = cyc(a + 1, m);
            const int pa = cur[static_cast<size_t>(a)], pb = cur[static_cast<size_t>(b)];
            if (pa == b || chords_cross(a, pa, b, pb)) continue;
            std::vector<int> nxt = cur;
            nxt[static_cast<size_t>(a)] = pb;
            nxt[static_cast<size_t>(pb)] = a;
            nxt[static_cast<size_t>(b)] = pa;
            nxt[static_cast<size_t>(pa)] = b;
            if (parent.count(nxt)) continue;
            parent[nxt] = {cur, a};
            queue.push_back(nxt);
        }
    }
    if (!parent.count(goal)) throw UnsupportedN("no crossing schedule found");
    std::vector<int> steps;
    for (std::vector<int> s = goal; s != start; s = parent[s].first) steps.push_back(parent[s].second);
    std::reverse(steps.begin(), steps.end());
    return steps;
}

}  // namespace

DiskGraph builtin_graph(int n) {
    if (n < 1 || n > 5) throw UnsupportedN("builtin graphs exist for 1 <= n <= 5");
    DiskGraphSpec s;
    s.n = n;
    if (n == 1) {
        s.boundary = {"b1"};
        s.rotations["b1"] = {};
    } else if (n == 2) {
        s.boundary = {"b1", "b2"};
        s.rotations = {{"b1", {"e"}}, {"b2", {"e"}}};
        s.edges["e"] = {"b1", "b2"};
    } else if (n == 3) {
        s.boundary = {"b1", "b2", "b3"};
        s.rotations = {{"b1", {"a"}}, {"b2", {"b"}}, {"b3", {"c"}}, {"u", {"a", "b", "c"}}};
        s.edges = {{"a", {"u", "b1"}}, {"b", {"u", "b2"}}, {"c", {"u", "b3"}}};
    } else {
        Builder b;
        for (int i = 0; i < n; ++i) b.boundary.push_back(b.add_vertex());
        for (int a : crossing_schedule(n)) {
            if (a % 2 == 1) b.spike((a - 1) / 2);
            else b.chord(a / 2 - 1);
        }
        s = b.spec();
    }
    DiskGraph g(s);
    const WellConnectedVerdict v = check_well_connected(g);
    if (!v.well_connected || g.num_edges() != n * (n - 1) / 2)
        throw UnsupportedN("builtin construction failed validation");
    return g;
}

}  // namespace elnet
