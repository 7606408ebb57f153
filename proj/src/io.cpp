#include "elnet/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "elnet/errors.hpp"

namespace elnet {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) fail("expected an object");
    auto it = j.find(name);
    if (it == j.end()) fail(std::string("missing field \"") + name + "\"");
    return *it;
}

void only_fields(const Json& j, std::initializer_list<const char*> names) {
    if (!j.is_object()) fail("expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::none_of(names.begin(), names.end(), [&](const char* n) { return it.key() == n; }))
            fail("unknown field \"" + it.key() + "\"");
}

int int_field(const Json& j, const char* name, int lo, int hi) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) fail(std::string("field \"") + name + "\" must be an integer");
    const long long x = v.get<long long>();
    if (x < lo || x > hi) fail(std::string("field \"") + name + "\" is out of range");
    return static_cast<int>(x);
}

const std::string& str(const Json& j, const std::string& what) {
    if (!j.is_string()) fail(what + " must be a string");
    return j.get_ref<const std::string&>();
}

Json object() { return Json::object(); }

}  // namespace

Rat rat_from_json(const Json& j) { return Rat::parse(str(j, "rational")); }

Json rat_to_json(const Rat& r, const RatFormat& f) { return f(r); }

Mat mat_from_json(const Json& j) {
    if (!j.is_array()) fail("matrix must be an array of rows");
    std::vector<std::vector<Rat>> rows;
    for (const Json& row : j) {
        if (!row.is_array()) fail("matrix row must be an array");
        std::vector<Rat> r;
        for (const Json& x : row) r.push_back(rat_from_json(x));
        if (!rows.empty() && r.size() != rows.front().size()) fail("matrix rows differ in length");
        rows.push_back(std::move(r));
    }
    if (rows.empty()) return Mat();
    return Mat::from_rows(rows);
}

Json mat_to_json(const Mat& m, const RatFormat& f) {
    Json out = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(f(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

DiskGraphSpec spec_from_json(const Json& j, std::initializer_list<const char*> allowed) {
    only_fields(j, allowed);
    DiskGraphSpec s;
    s.n = int_field(j, "n", 0, kMaxGround);
    const Json& b = field(j, "boundary");
    if (!b.is_array()) fail("\"boundary\" must be an array");
    for (const Json& v : b) s.boundary.push_back(str(v, "boundary vertex id"));
    if (static_cast<int>(s.boundary.size()) != s.n) fail("\"boundary\" must list n vertices");
    const Json& rot = field(j, "rotations");
    if (!rot.is_object()) fail("\"rotations\" must be an object");
    for (auto it = rot.begin(); it != rot.end(); ++it) {
        if (!it.value().is_array()) fail("rotation of '" + it.key() + "' must be an array");
        auto& r = s.rotations[it.key()];
        for (const Json& e : it.value()) r.push_back(str(e, "edge id"));
    }
    const Json& edges = field(j, "edges");
    if (!edges.is_object()) fail("\"edges\" must be an object");
    for (auto it = edges.begin(); it != edges.end(); ++it) {
        const Json& ends = it.value();
        if (!ends.is_array() || ends.size() != 2) fail("edge '" + it.key() + "' needs two endpoints");
        s.edges[it.key()] = {str(ends[0], "endpoint"), str(ends[1], "endpoint")};
    }
    return s;
}

Json spec_to_json(const DiskGraph& g) {
    Json out = object();
    out["n"] = g.n();
    Json b = Json::array();
    for (int i = 1; i <= g.n(); ++i) b.push_back(g.vertex_id(g.boundary_vertex(i)));
    out["boundary"] = std::move(b);
    Json rot = object();
    for (int v = 0; v < g.num_vertices(); ++v) {
        Json r = Json::array();
        for (int e : g.rotation_edges(v)) r.push_back(g.edge_id(e));
        rot[g.vertex_id(v)] = std::move(r);
    }
    out["rotations"] = std::move(rot);
    Json edges = object();
    for (int e = 0; e < g.num_edges(); ++e)
        edges[g.edge_id(e)] = Json::array({g.vertex_id(g.edge_end(e, 0)), g.vertex_id(g.edge_end(e, 1))});
    out["edges"] = std::move(edges);
    return out;
}

}  // namespace

DiskGraph graph_from_json(const Json& j) {
    return DiskGraph(spec_from_json(j, {"n", "boundary", "rotations", "edges"}));
}

Json graph_to_json(const DiskGraph& g) { return spec_to_json(g); }

BipartiteGraph bipartite_from_json(const Json& j) {
    const DiskGraphSpec s = spec_from_json(j, {"n", "boundary", "rotations", "edges", "color"});
    const Json& col = field(j, "color");
    if (!col.is_object()) fail("\"color\" must be an object");
    std::map<std::string, Color> colors;
    for (auto it = col.begin(); it != col.end(); ++it) {
        const std::string& c = str(it.value(), "color");
        if (c == "white") colors[it.key()] = Color::White;
        else if (c == "black") colors[it.key()] = Color::Black;
        else fail("color must be \"white\" or \"black\"");
        if (!s.rotations.count(it.key())) fail("color given for unknown vertex '" + it.key() + "'");
    }
    return make_bipartite(s, colors);
}

Json bipartite_to_json(const BipartiteGraph& g) {
    Json out = spec_to_json(g.graph);
    Json col = object();
    for (int v = 0; v < g.graph.num_vertices(); ++v) col[g.graph.vertex_id(v)] = g.is_white(v) ? "white" : "black";
    out["color"] = std::move(col);
    return out;
}

PluckerVector plucker_from_json(const Json& j) {
    only_fields(j, {"k", "n", "coords"});
    PluckerVector p;
    p.n = int_field(j, "n", 0, kMaxGround);
    p.k = int_field(j, "k", 0, p.n);
    const Json& c = field(j, "coords");
    if (!c.is_object()) fail("\"coords\" must be an object");
    for (auto it = c.begin(); it != c.end(); ++it) {
        const Mask m = parse_mask_key(it.key(), p.n);
        if (popcount(m) != p.k) fail("coordinate '" + it.key() + "' is not a k-subset");
        if (!p.coords.emplace(m, rat_from_json(it.value())).second) fail("duplicate coordinate '" + it.key() + "'");
    }
    return p;
}

Json plucker_to_json(const PluckerVector& p, const RatFormat& f) {
    Json out = object();
    out["k"] = p.k;
    out["n"] = p.n;
    Json c = object();
    for (Mask m : k_subsets(p.n, p.k)) {
        auto it = p.coords.find(m);
        if (it != p.coords.end()) c[mask_key(m)] = f(it->second);
    }
    out["coords"] = std::move(c);
    return out;
}

MatrixPoint point_from_json(const Json& j) {
    only_fields(j, {"rows", "cols", "entries"});
    const int rows = int_field(j, "rows", 0, 1 << 16);
    const int cols = int_field(j, "cols", 0, 1 << 16);
    Mat m = mat_from_json(field(j, "entries"));
    if (m.rows() != rows || (rows > 0 && m.cols() != cols)) fail("\"entries\" does not have the stated shape");
    if (rows == 0) m = Mat(0, cols);
    return MatrixPoint{std::move(m), true};
}

Json point_to_json(const MatrixPoint& p, const RatFormat& f) {
    Json out = object();
    out["rows"] = p.matrix.rows();
    out["cols"] = p.matrix.cols();
    out["entries"] = mat_to_json(p.matrix, f);
    return out;
}

CartanVector cartan_from_json(const Json& j) {
    only_fields(j, {"n", "sigma"});
    CartanVector c;
    c.n = int_field(j, "n", 0, kMaxGround);
    const Json& s = field(j, "sigma");
    if (!s.is_object()) fail("\"sigma\" must be an object");
    for (auto it = s.begin(); it != s.end(); ++it) {
        const Mask m = parse_mask_key(it.key(), c.n);
        if (!c.sigma.emplace(m, rat_from_json(it.value())).second) fail("duplicate subset '" + it.key() + "'");
    }
    return c;
}

Json cartan_to_json(const CartanVector& c, const RatFormat& f) {
    Json out = object();
    out["n"] = c.n;
    Json s = object();
    for (int size = 0; size <= c.n; ++size)
        for (Mask m : k_subsets(c.n, size)) {
            auto it = c.sigma.find(m);
            if (it != c.sigma.end()) s[mask_key(m)] = f(it->second);
        }
    out["sigma"] = std::move(s);
    return out;
}

Mat response_from_json(const Json& j) {
    only_fields(j, {"n", "entries"});
    const int n = int_field(j, "n", 0, 1 << 16);
    Mat m = mat_from_json(field(j, "entries"));
    if (m.rows() != n || (n > 0 && m.cols() != n)) fail("\"entries\" must be n x n");
    return m;
}

Json response_to_json(const Mat& l, const RatFormat& f) {
    Json out = object();
    out["n"] = l.rows();
    out["entries"] = mat_to_json(l, f);
    return out;
}

Conductances conductances_from_json(const Json& j, const DiskGraph& g) {
    if (!j.is_object()) fail("conductances must be an object keyed by edge id");
    Conductances c(static_cast<size_t>(g.num_edges()));
    std::set<int> seen;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const int e = g.edge_index(it.key());
        if (e < 0) fail("conductance given for unknown edge '" + it.key() + "'");
        seen.insert(e);
        c[static_cast<size_t>(e)] = rat_from_json(it.value());
    }
    if (static_cast<int>(seen.size()) != g.num_edges()) fail("every edge needs a conductance");
    return c;
}

Json conductances_to_json(const Conductances& c, const DiskGraph& g, const RatFormat& f) {
    if (static_cast<int>(c.size()) != g.num_edges()) throw DimensionMismatch("one conductance per edge is required");
    Json out = object();
    for (int e = 0; e < g.num_edges(); ++e) out[g.edge_id(e)] = f(c[static_cast<size_t>(e)]);
    return out;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

}  // namespace elnet
