#include "elnet/dimer.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>

#include "elnet/errors.hpp"

namespace elnet {

int BipartiteGraph::num_white() const {
    return static_cast<int>(std::count(color.begin(), color.end(), Color::White));
}

int BipartiteGraph::num_black() const {
    return static_cast<int>(std::count(color.begin(), color.end(), Color::Black));
}

int BipartiteGraph::black_end(int e) const {
    const int u = graph.edge_end(e, 0);
    return is_white(u) ? graph.edge_end(e, 1) : u;
}

int BipartiteGraph::white_end(int e) const {
    const int u = graph.edge_end(e, 0);
    return is_white(u) ? u : graph.edge_end(e, 1);
}

BipartiteGraph make_bipartite(const DiskGraphSpec& spec, const std::map<std::string, Color>& colors) {
    BipartiteGraph b;
    b.graph = DiskGraph(spec);
    const int V = b.graph.num_vertices();
    for (int v = 0; v < V; ++v) {
        auto it = colors.find(b.graph.vertex_id(v));
        if (it == colors.end()) throw ParseError("vertex '" + b.graph.vertex_id(v) + "' has no color");
        b.color.push_back(it->second);
    }
    for (int e = 0; e < b.graph.num_edges(); ++e)
        if (b.color[static_cast<size_t>(b.graph.edge_end(e, 0))] == b.color[static_cast<size_t>(b.graph.edge_end(e, 1))])
            throw InconsistentEmbedding("edge '" + b.graph.edge_id(e) + "' joins two vertices of one color");
    b.from_edge.assign(static_cast<size_t>(V), -1);
    b.from_vertex.assign(static_cast<size_t>(V), -1);
    b.from_face.assign(static_cast<size_t>(V), -1);
    return b;
}

namespace {

std::map<std::string, Color> colors_of(const BipartiteGraph& g) {
    std::map<std::string, Color> out;
    for (int v = 0; v < g.graph.num_vertices(); ++v) out[g.graph.vertex_id(v)] = g.color[static_cast<size_t>(v)];
    return out;
}

void require_positive(const EdgeWeights& wt, int edges) {
    if (static_cast<int>(wt.size()) != edges) throw DimensionMismatch("weight count differs from edge count");
    for (const Rat& w : wt)
        if (w.sign() <= 0) throw NonPositive("edge weights must be positive");
}

std::string face_vertex_id(int f) { return "f" + std::to_string(f + 1); }

}  // namespace

Temperley temperley_plus(const DiskGraph& g, const std::vector<Rat>& conductance) {
    require_positive(conductance, g.num_edges());
    const DiskMap& gm = g.map();
    const DiskFaces& gf = g.faces();
    const int H = gm.num_half_edges();

    DiskGraphSpec s;
    s.n = 2 * g.n();
    std::map<std::string, Color> colors;
    std::map<std::string, Rat> weight;
    auto black = [&](int e) { return "b:" + g.edge_id(e); };
    auto white = [&](int v) { return "w:" + g.vertex_id(v); };
    // edge ids by the role of the white end
    auto to_head = [&](int e) { return g.edge_id(e) + ".h"; };
    auto to_tail = [&](int e) { return g.edge_id(e) + ".t"; };
    auto to_right = [&](int e) { return g.edge_id(e) + ".r"; };
    auto to_left = [&](int e) { return g.edge_id(e) + ".l"; };

    for (int e = 0; e < g.num_edges(); ++e) {
        const std::string b = black(e);
        colors[b] = Color::Black;
        const int fr = gf.face_of[static_cast<size_t>(2 * e)];
        const int fl = gf.face_of[static_cast<size_t>(2 * e + 1)];
        s.edges[to_head(e)] = {b, white(g.edge_end(e, 1))};
        s.edges[to_right(e)] = {b, face_vertex_id(fr)};
        s.edges[to_tail(e)] = {b, white(g.edge_end(e, 0))};
        s.edges[to_left(e)] = {b, face_vertex_id(fl)};
        s.rotations[b] = {to_head(e), to_right(e), to_tail(e), to_left(e)};
        weight[to_head(e)] = conductance[static_cast<size_t>(e)];
        weight[to_tail(e)] = conductance[static_cast<size_t>(e)];
        weight[to_right(e)] = 1;
        weight[to_left(e)] = 1;
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto& r = s.rotations[white(v)];
        colors[white(v)] = Color::White;
        for (int h : gm.rot[static_cast<size_t>(v)]) r.push_back(h % 2 == 0 ? to_tail(h / 2) : to_head(h / 2));
    }
    for (int f = 0; f < g.num_faces(); ++f) {
        const auto& darts = gf.faces[static_cast<size_t>(f)];
        auto& r = s.rotations[face_vertex_id(f)];
        colors[face_vertex_id(f)] = Color::White;
        size_t start = 0;
        int arcs = 0;
        for (size_t p = 0; p < darts.size(); ++p)
            if (gf.is_arc(darts[p])) {
                start = p + 1;
                ++arcs;
            }
        if (arcs > 1) throw InconsistentEmbedding("a face of G meets the boundary along two arcs");
        for (size_t q = 0; q < darts.size(); ++q) {
            const int h = darts[(start + q) % darts.size()];
            if (h >= H) continue;
            r.push_back(h % 2 == 0 ? to_right(h / 2) : to_left(h / 2));
        }
    }
    for (int i = 1; i <= g.n(); ++i) {
        s.boundary.push_back(white(g.boundary_vertex(i)));
        s.boundary.push_back(face_vertex_id(g.boundary_face(i)));
    }

    Temperley t;
    t.graph = make_bipartite(s, colors);
    const DiskGraph& out = t.graph.graph;
    for (int e = 0; e < out.num_edges(); ++e) t.weights.push_back(weight.at(out.edge_id(e)));
    for (int e = 0; e < g.num_edges(); ++e) t.graph.from_edge[static_cast<size_t>(out.vertex_index(black(e)))] = e;
    for (int v = 0; v < g.num_vertices(); ++v) t.graph.from_vertex[static_cast<size_t>(out.vertex_index(white(v)))] = v;
    for (int f = 0; f < g.num_faces(); ++f) t.graph.from_face[static_cast<size_t>(out.vertex_index(face_vertex_id(f)))] = f;
    return t;
}

BipartiteStrands strands_and_labels(const BipartiteGraph& g) {
    const DiskMap& map = g.graph.map();
    const DiskFaces& faces = g.graph.faces();
    const int m = g.m();
    const int F = g.graph.num_faces();

    const TurnRule turn = [&](int v, int p) {
        const int deg = static_cast<int>(map.rot[static_cast<size_t>(v)].size());
        const bool bd = map.is_boundary(v);
        if (g.is_white(v)) {
            if (p < 0) return 0;
            if (p + 1 < deg) return p + 1;
            return bd ? -1 : 0;
        }
        if (p < 0) return deg - 1;
        if (p > 0) return p - 1;
        return bd ? -1 : deg - 1;
    };

    BipartiteStrands out;
    out.face_label.assign(static_cast<size_t>(F), 0);
    std::vector<int> owner(static_cast<size_t>(map.num_half_edges()), -1);
    for (int i = 1; i <= m; ++i) {
        const int d = g.graph.boundary_vertex(i);
        StrandWalk w;
        if (map.rot[static_cast<size_t>(d)].empty()) {
            w.start = w.end = d;
        } else {
            w = walk_from_boundary(map, d, turn);
        }
        for (int h : w.darts) {
            if (owner[static_cast<size_t>(h)] >= 0) throw NotReduced("strand from d" + std::to_string(i) + " repeats a half-edge");
            owner[static_cast<size_t>(h)] = i;
        }
        out.perm.push_back(map.boundary_pos[static_cast<size_t>(w.end)] + 1);
        out.walks.push_back(std::move(w));
    }
    for (int h = 0; h < map.num_half_edges(); ++h)
        if (owner[static_cast<size_t>(h)] < 0) throw NotReduced("some strand is an internal cycle");

    // position of each edge along each strand
    const int E = map.num_edges();
    std::vector<std::vector<int>> at(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(E), -1));
    for (int i = 0; i < m; ++i) {
        const auto& darts = out.walks[static_cast<size_t>(i)].darts;
        for (size_t p = 0; p < darts.size(); ++p) {
            int& slot = at[static_cast<size_t>(i)][static_cast<size_t>(darts[p] / 2)];
            if (slot >= 0 && darts.size() > 2)
                throw NotReduced("strand from d" + std::to_string(i + 1) + " intersects itself");
            slot = static_cast<int>(p);
        }
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            std::vector<std::pair<int, int>> shared;
            for (int e = 0; e < E; ++e) {
                const int pa = at[static_cast<size_t>(a)][static_cast<size_t>(e)];
                const int pb = at[static_cast<size_t>(b)][static_cast<size_t>(e)];
                if (pa >= 0 && pb >= 0) shared.emplace_back(pa, pb);
            }
            std::sort(shared.begin(), shared.end());
            for (size_t x = 0; x + 1 < shared.size(); ++x)
                for (size_t y = x + 1; y < shared.size(); ++y)
                    if (shared[x].second < shared[y].second)
                        throw NotReduced("strands from d" + std::to_string(a + 1) + " and d" + std::to_string(b + 1) +
                                         " cross twice in the same direction");
        }

    for (int i = 0; i < m; ++i) {
        const StrandWalk& w = out.walks[static_cast<size_t>(i)];
        const Mask target = bit(out.perm[static_cast<size_t>(i)]);
        if (w.darts.empty()) {
            if (g.is_white(w.start))
                for (auto& l : out.face_label) l |= target;
            continue;
        }
        std::vector<int> side;
        if (!strand_sides(map, faces, w, side))
            throw NotReduced("strand from d" + std::to_string(i + 1) + " does not separate the faces");
        for (int f = 0; f < F; ++f)
            if (side[static_cast<size_t>(f)] > 0) out.face_label[static_cast<size_t>(f)] |= target;
    }
    return out;
}

int boundary_face_minus(const BipartiteGraph& g, int i) { return g.graph.boundary_face(cyc(i - 1, g.m())); }

PluckerVector boundary_measurement(const BipartiteGraph& g, const EdgeWeights& wt) {
    const DiskGraph& dg = g.graph;
    require_positive(wt, dg.num_edges());
    const int V = dg.num_vertices();
    std::vector<int> blacks;
    for (int v = 0; v < V; ++v)
        if (!g.is_white(v)) blacks.push_back(v);
    // internal white vertices that must be covered once the step at index t is done
    std::vector<std::vector<int>> due(blacks.size() + 1);
    for (int v = 0; v < V; ++v) {
        if (!g.is_white(v) || dg.is_boundary(v)) continue;
        int last = -1;
        for (int e : dg.rotation_edges(v)) {
            const int b = g.black_end(e);
            last = std::max(last, static_cast<int>(std::lower_bound(blacks.begin(), blacks.end(), b) - blacks.begin()));
        }
        if (last < 0) throw NoDimerCover("internal white vertex '" + dg.vertex_id(v) + "' has no edges");
        due[static_cast<size_t>(last)].push_back(v);
    }

    std::vector<char> used(static_cast<size_t>(V), 0);
    std::map<Mask, Rat> z;
    long covers = 0;
    std::function<void(size_t, const Rat&)> go = [&](size_t t, const Rat& w) {
        if (t == blacks.size()) {
            Mask boundary = 0;
            for (int i = 1; i <= g.m(); ++i) {
                const int d = dg.boundary_vertex(i);
                if (g.is_white(d) != static_cast<bool>(used[static_cast<size_t>(d)])) boundary |= bit(i);
            }
            z[boundary] += w;
            ++covers;
            return;
        }
        const int b = blacks[t];
        auto proceed = [&](const Rat& w2) {
            for (int v : due[t])
                if (!used[static_cast<size_t>(v)]) return;
            go(t + 1, w2);
        };
        for (int e : dg.rotation_edges(b)) {
            const int wv = g.white_end(e);
            if (used[static_cast<size_t>(wv)]) continue;
            used[static_cast<size_t>(wv)] = 1;
            used[static_cast<size_t>(b)] = 1;
            proceed(w * wt[static_cast<size_t>(e)]);
            used[static_cast<size_t>(wv)] = 0;
            used[static_cast<size_t>(b)] = 0;
        }
        if (dg.is_boundary(b)) proceed(w);
    };
    go(0, Rat(1));
    if (covers == 0) throw NoDimerCover("graph has no dimer cover");

    PluckerVector p;
    p.k = g.k();
    p.n = g.m();
    if (p.k >= 0 && p.k <= p.n)
        for (Mask s : k_subsets(p.n, p.k)) p.coords[s] = 0;
    for (const auto& [s, v] : z) p.coords[s] = v;
    return p;
}

std::vector<Rat> x_vars(const BipartiteGraph& g, const EdgeWeights& wt) {
    require_positive(wt, g.graph.num_edges());
    std::vector<Rat> out;
    for (const auto& face : trace_faces(g.graph)) {
        Rat x = 1;
        for (const FaceStep& s : face) {
            if (s.edge < 0) continue;
            if (g.is_white(s.from)) x /= wt[static_cast<size_t>(s.edge)];
            else x *= wt[static_cast<size_t>(s.edge)];
        }
        out.push_back(x);
    }
    return out;
}

bool gauge_equivalent(const BipartiteGraph& g, const EdgeWeights& wt1, const EdgeWeights& wt2) {
    const DiskGraph& dg = g.graph;
    require_positive(wt1, dg.num_edges());
    require_positive(wt2, dg.num_edges());
    const int V = dg.num_vertices();
    std::vector<std::optional<Rat>> gv(static_cast<size_t>(V));
    std::deque<int> queue;
    for (int i = 1; i <= g.m(); ++i) {
        gv[static_cast<size_t>(dg.boundary_vertex(i))] = Rat(1);
        queue.push_back(dg.boundary_vertex(i));
    }
    for (int seed = 0; seed <= V; ++seed) {
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int e : dg.rotation_edges(v)) {
                const Rat r = wt2[static_cast<size_t>(e)] / wt1[static_cast<size_t>(e)];
                const int b = g.black_end(e), w = g.white_end(e);
                const int other = v == b ? w : b;
                const Rat want = v == b ? *gv[static_cast<size_t>(b)] * r : *gv[static_cast<size_t>(w)] / r;
                auto& slot = gv[static_cast<size_t>(other)];
                if (!slot) {
                    slot = want;
                    queue.push_back(other);
                } else if (*slot != want) {
                    return false;
                }
            }
        }
        if (seed < V && !gv[static_cast<size_t>(seed)]) {
            gv[static_cast<size_t>(seed)] = Rat(1);
            queue.push_back(seed);
        }
    }
    return true;
}

EdgeWeights gauge_at(const BipartiteGraph& g, const EdgeWeights& wt, int v, const Rat& s) {
    EdgeWeights out = wt;
    for (int e : g.graph.rotation_edges(v)) out[static_cast<size_t>(e)] *= s;
    return out;
}

EdgeWeights p_gamma(const BipartiteGraph& g, const std::vector<Rat>& a) {
    const DiskGraph& dg = g.graph;
    if (static_cast<int>(a.size()) != dg.num_faces()) throw DimensionMismatch("face value count differs from face count");
    EdgeWeights out;
    for (int e = 0; e < dg.num_edges(); ++e) {
        const int f = dg.faces().face_of[static_cast<size_t>(2 * e)];
        const int h = dg.faces().face_of[static_cast<size_t>(2 * e + 1)];
        Rat w = (a[static_cast<size_t>(f)] * a[static_cast<size_t>(h)]).inv();
        const int wv = g.white_end(e);
        if (dg.is_boundary(wv)) {
            const int i = dg.map().boundary_pos[static_cast<size_t>(wv)] + 1;
            w *= a[static_cast<size_t>(boundary_face_minus(g, i))];
        }
        out.push_back(w);
    }
    return out;
}

std::vector<Rat> scott_phi(const BipartiteGraph& g, const BipartiteStrands& s, const PluckerVector& x) {
    if (x.n != g.m() || x.k != g.k()) throw DimensionMismatch("point size does not match the graph");
    std::vector<Rat> out;
    for (Mask label : s.face_label) {
        const Rat v = x.at(label);
        if (v.sign() <= 0) throw NonPositive("minor " + mask_key(label) + " is not positive");
        out.push_back(v);
    }
    return out;
}

namespace {

std::string fresh(const std::set<std::string>& taken, const std::string& stem) {
    for (int k = 1;; ++k) {
        std::string id = stem + std::to_string(k);
        if (!taken.count(id)) return id;
    }
}

std::vector<int> map_faces_by_edge(const DiskGraph& before, const DiskGraph& after) {
    std::vector<int> out;
    const int H = before.map().num_half_edges();
    for (const auto& f : before.faces().faces) {
        int img = -1;
        for (int h : f) {
            int h2;
            if (h >= H) {
                h2 = after.map().num_half_edges() + (h - H);
            } else {
                const int e2 = after.edge_index(before.edge_id(h / 2));
                if (e2 < 0) continue;
                h2 = 2 * e2 + h % 2;
            }
            const int cand = after.faces().face_of[static_cast<size_t>(h2)];
            if (img >= 0 && img != cand) throw InvalidSite("face correspondence is ambiguous");
            img = cand;
        }
        if (img < 0) throw InvalidSite("a face has no surviving edge");
        out.push_back(img);
    }
    return out;
}

struct SpiderShape {
    std::array<int, 4> corner;  // vertex indices, clockwise, corner[0] white
    std::array<int, 4> side;    // edge from corner[i] to corner[i+1]
    std::array<int, 4> leg;     // third edge at corner[i]
};

SpiderShape spider_shape(const BipartiteGraph& g, int face) {
    const DiskGraph& dg = g.graph;
    if (face < 0 || face >= dg.num_faces()) throw InvalidSite("face index out of range");
    const auto steps = trace_faces(dg)[static_cast<size_t>(face)];
    if (steps.size() != 4) throw InvalidSite("spider face is not a quadrilateral");
    size_t first = 0;
    for (size_t i = 0; i < 4; ++i) {
        if (steps[i].edge < 0) throw InvalidSite("spider face touches the boundary");
        if (g.is_white(steps[i].from)) first = i;
    }
    SpiderShape s;
    std::set<int> corners;
    for (size_t i = 0; i < 4; ++i) {
        const FaceStep& st = steps[(first + i) % 4];
        s.corner[i] = st.from;
        s.side[i] = st.edge;
        corners.insert(st.from);
    }
    if (corners.size() != 4) throw InvalidSite("spider face repeats a corner");
    for (size_t i = 0; i < 4; ++i) {
        const int v = s.corner[i];
        if (dg.is_boundary(v)) throw InvalidSite("spider corner lies on the boundary");
        const auto rot = dg.rotation_edges(v);
        if (rot.size() != 3) throw InvalidSite("spider corner is not trivalent");
        const int before = s.side[(i + 3) % 4], after = s.side[i];
        int leg = -1;
        for (int e : rot)
            if (e != before && e != after) leg = e;
        if (leg < 0) throw InvalidSite("spider corner has no leg");
        const int other = dg.edge_end(leg, 0) == v ? dg.edge_end(leg, 1) : dg.edge_end(leg, 0);
        if (corners.count(other)) throw InvalidSite("spider leg joins two corners");
        s.leg[i] = leg;
    }
    return s;
}

std::string split_edge_id(const DiskGraph& g, const std::string& leg) {
    std::string id = leg + "~";
    while (g.edge_index(id) >= 0) id += "~";
    return id;
}

}  // namespace

BipartiteMove bipartite_move(const BipartiteGraph& g, const MoveSite& site) {
    const DiskGraph& dg = g.graph;
    BipartiteMove mv;
    mv.site = site;
    mv.before = g;
    DiskGraphSpec s = dg.spec();
    std::map<std::string, Color> colors = colors_of(g);
    std::set<std::string> taken;
    for (int v = 0; v < dg.num_vertices(); ++v) taken.insert(dg.vertex_id(v));

    if (site.kind == MoveSite::Kind::Spider) {
        const SpiderShape sh = spider_shape(g, site.face);
        for (size_t i = 0; i < 4; ++i) {
            const std::string c = dg.vertex_id(sh.corner[i]);
            const std::string leg = dg.edge_id(sh.leg[i]);
            const std::string mid = fresh(taken, "s");
            taken.insert(mid);
            const std::string link = split_edge_id(dg, leg);
            colors[mid] = colors[c];
            colors[c] = colors[c] == Color::White ? Color::Black : Color::White;
            auto& ends = s.edges[leg];
            (ends[0] == c ? ends[0] : ends[1]) = mid;
            s.edges[link] = {mid, c};
            s.rotations[mid] = {leg, link};
            std::replace(s.rotations[c].begin(), s.rotations[c].end(), leg, link);
            mv.corners[i] = c;
            mv.around[i] = dg.faces().face_of[static_cast<size_t>((2 * sh.side[i] + (dg.edge_end(sh.side[i], 0) == sh.corner[i] ? 0 : 1)) ^ 1)];
        }
    } else {
        const int x = dg.vertex_index(site.vertex);
        if (x < 0) throw InvalidSite("unknown vertex '" + site.vertex + "'");
        if (dg.is_boundary(x)) throw InvalidSite("contraction vertex lies on the boundary");
        const auto rot = dg.rotation_edges(x);
        if (rot.size() != 2) throw InvalidSite("contraction vertex does not have degree two");
        auto other = [&](int e) { return dg.edge_end(e, 0) == x ? dg.edge_end(e, 1) : dg.edge_end(e, 0); };
        int ek = rot[0], eg = rot[1];
        if (other(ek) == other(eg)) throw InvalidSite("contraction neighbours coincide");
        if (dg.is_boundary(other(ek)) && dg.is_boundary(other(eg))) throw InvalidSite("both contraction neighbours lie on the boundary");
        if (dg.is_boundary(other(eg))) std::swap(ek, eg);
        const std::string keep = dg.vertex_id(other(ek)), gone = dg.vertex_id(other(eg));
        const std::string ekid = dg.edge_id(ek), egid = dg.edge_id(eg);
        std::vector<std::string> gone_rot = s.rotations[gone];
        auto pos = std::find(gone_rot.begin(), gone_rot.end(), egid);
        std::rotate(gone_rot.begin(), pos, gone_rot.end());
        gone_rot.erase(gone_rot.begin());
        auto& kr = s.rotations[keep];
        auto kp = std::find(kr.begin(), kr.end(), ekid);
        kp = kr.erase(kp);
        kr.insert(kp, gone_rot.begin(), gone_rot.end());
        for (const auto& eid : gone_rot) {
            auto& ends = s.edges[eid];
            (ends[0] == gone ? ends[0] : ends[1]) = keep;
        }
        s.edges.erase(ekid);
        s.edges.erase(egid);
        s.rotations.erase(gone);
        s.rotations.erase(site.vertex);
        colors.erase(gone);
        colors.erase(site.vertex);
    }
    mv.after = make_bipartite(s, colors);
    mv.face_map = map_faces_by_edge(dg, mv.after.graph);
    return mv;
}

EdgeWeights move_weights(const BipartiteMove& mv, const EdgeWeights& wt) {
    const BipartiteGraph& g = mv.before;
    const DiskGraph& dg = g.graph;
    require_positive(wt, dg.num_edges());
    EdgeWeights w = wt;
    std::map<std::string, Rat> by_id;
    if (mv.site.kind == MoveSite::Kind::Spider) {
        const SpiderShape sh = spider_shape(g, mv.site.face);
        // gauge every leg to 1 at its corner
        for (size_t i = 0; i < 4; ++i) w = gauge_at(g, w, sh.corner[i], w[static_cast<size_t>(sh.leg[i])].inv());
        auto side = [&](size_t i) { return w[static_cast<size_t>(sh.side[i % 4])]; };
        const Rat delta = side(0) * side(2) + side(1) * side(3);
        for (int e = 0; e < dg.num_edges(); ++e) by_id[dg.edge_id(e)] = w[static_cast<size_t>(e)];
        for (size_t i = 0; i < 4; ++i) {
            by_id[dg.edge_id(sh.side[i])] = side(i + 2) / delta;
            by_id[split_edge_id(dg, dg.edge_id(sh.leg[i]))] = 1;
        }
    } else {
        const int x = dg.vertex_index(mv.site.vertex);
        const auto rot = dg.rotation_edges(x);
        auto other = [&](int e) { return dg.edge_end(e, 0) == x ? dg.edge_end(e, 1) : dg.edge_end(e, 0); };
        int ek = rot[0], eg = rot[1];
        if (dg.is_boundary(other(eg))) std::swap(ek, eg);
        w = gauge_at(g, w, x, w[static_cast<size_t>(ek)].inv());
        w = gauge_at(g, w, other(eg), w[static_cast<size_t>(eg)].inv());
        for (int e = 0; e < dg.num_edges(); ++e) by_id[dg.edge_id(e)] = w[static_cast<size_t>(e)];
    }
    EdgeWeights out;
    const DiskGraph& ag = mv.after.graph;
    for (int e = 0; e < ag.num_edges(); ++e) out.push_back(by_id.at(ag.edge_id(e)));
    return out;
}

std::vector<Rat> move_x(const BipartiteMove& mv, const std::vector<Rat>& x) {
    std::vector<Rat> out(static_cast<size_t>(mv.after.graph.num_faces()));
    for (size_t f = 0; f < x.size(); ++f) out[static_cast<size_t>(mv.face_map[f])] = x[f];
    if (mv.site.kind == MoveSite::Kind::Spider) {
        const Rat x0 = x[static_cast<size_t>(mv.site.face)];
        out[static_cast<size_t>(mv.face_map[static_cast<size_t>(mv.site.face)])] = x0.inv();
        for (size_t i = 0; i < 4; ++i) {
            Rat& v = out[static_cast<size_t>(mv.face_map[static_cast<size_t>(mv.around[i])])];
            // faces across edges leaving a white corner clockwise gain (1 + X0)
            if (i % 2 == 0) v *= 1 + x0;
            else v /= 1 + x0.inv();
        }
    }
    return out;
}

std::vector<Rat> move_a(const BipartiteMove& mv, const std::vector<Rat>& a) {
    std::vector<Rat> out(static_cast<size_t>(mv.after.graph.num_faces()));
    for (size_t f = 0; f < a.size(); ++f) out[static_cast<size_t>(mv.face_map[f])] = a[f];
    if (mv.site.kind == MoveSite::Kind::Spider) {
        auto A = [&](int f) { return a[static_cast<size_t>(f)]; };
        const Rat next = (A(mv.around[0]) * A(mv.around[2]) + A(mv.around[1]) * A(mv.around[3])) / A(mv.site.face);
        out[static_cast<size_t>(mv.face_map[static_cast<size_t>(mv.site.face)])] = next;
    }
    return out;
}

Temperley four_vertex_example(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    DiskGraphSpec s;
    s.n = 4;
    s.boundary = {"d1", "d2", "d3", "d4"};
    s.edges = {{"e1", {"B2", "d1"}}, {"e2", {"B2", "d2"}}, {"e3", {"B2", "d4"}},
               {"e4", {"B1", "d2"}}, {"e5", {"B1", "d3"}}, {"e6", {"B1", "d4"}}};
    s.rotations = {{"B2", {"e1", "e2", "e3"}}, {"B1", {"e5", "e6", "e4"}}, {"d1", {"e1"}},
                   {"d2", {"e4", "e2"}},       {"d3", {"e5"}},             {"d4", {"e3", "e6"}}};
    const std::map<std::string, Color> colors = {{"B1", Color::Black}, {"B2", Color::Black}, {"d1", Color::White},
                                                 {"d2", Color::White}, {"d3", Color::White}, {"d4", Color::White}};
    Temperley t;
    t.graph = make_bipartite(s, colors);
    const std::map<std::string, Rat> w = {{"e1", 1}, {"e2", b}, {"e3", a}, {"e4", c}, {"e5", 1}, {"e6", d}};
    for (int e = 0; e < t.graph.graph.num_edges(); ++e) t.weights.push_back(w.at(t.graph.graph.edge_id(e)));
    return t;
}

}  // namespace elnet
