#include "elnet/orthogonal.hpp"

#include <algorithm>

#include "elnet/errors.hpp"
#include "elnet/linalg.hpp"

namespace elnet {

namespace {

int half_width(const Mat& m) {
    if (m.cols() % 2 != 0) throw DimensionMismatch("expected an even number of columns");
    return m.cols() / 2;
}

Mat q_gram(int n) {
    Mat g(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        const Rat h = i % 2 == 0 ? Rat(1, 2) : Rat(-1, 2);
        g(i, n + i) = h;
        g(n + i, i) = h;
    }
    return g;
}

// {1, n+1, ..., 2n}
Mask base_index(int n) { return bit(1) | (full_mask(2 * n) & ~full_mask(n)); }

Mat principal(const Mat& a, Mask j) {
    std::vector<int> idx;
    for (int i : mask_members(j)) idx.push_back(i - 1);
    return a.submatrix(idx, idx);
}

Rat label_factor(const Rat& s, const std::vector<Rat>& t, Mask j) {
    Rat f = s;
    for (int i = 1; i <= static_cast<int>(t.size()); ++i) {
        if (has(j, i))
            f *= t[static_cast<size_t>(i - 1)];
        else
            f /= t[static_cast<size_t>(i - 1)];
    }
    return f;
}

}  // namespace

Rat q_form(const std::vector<Rat>& x, const std::vector<Rat>& y) {
    if (x.size() != y.size() || x.size() % 2 != 0) throw DimensionMismatch("Q needs two vectors of even length");
    const size_t n = x.size() / 2;
    Rat s = 0;
    for (size_t i = 0; i < n; ++i) {
        const Rat term = x[i] * y[n + i] + x[n + i] * y[i];
        s += i % 2 == 0 ? term : -term;
    }
    return s / 2;
}

bool is_coisotropic(const Mat& m) {
    const int n = half_width(m);
    const Mat perp = null_space(m * q_gram(n));
    if (perp.cols() == 0) return true;
    return rank(m.vstack(perp.transpose())) == rank(m);
}

Mat change_basis(const Mat& m) {
    const int n = half_width(m);
    Mat out = m;
    for (int i = 1; i < n; i += 2)
        for (int r = 0; r < m.rows(); ++r) out(r, n + i) = -out(r, n + i);
    return out;
}

Rat CartanVector::at(Mask j) const {
    auto it = sigma.find(j);
    return it == sigma.end() ? Rat(0) : it->second;
}

bool satisfies_cartan_relations(const CartanVector& s) {
    const int n = s.n;
    for (Mask base = 0; base <= full_mask(n); ++base) {
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i)
            if (!has(base, i)) rest.push_back(i);
        const size_t r = rest.size();
        for (size_t a = 0; a < r; ++a)
            for (size_t b = a + 1; b < r; ++b)
                for (size_t c = b + 1; c < r; ++c) {
                    const Mask j = bit(rest[a]), k = bit(rest[b]), l = bit(rest[c]);
                    auto S = [&](Mask x) { return s.at(base | x); };
                    if (S(j | l) * S(k) != S(0) * S(j | k | l) + S(j | k) * S(l) + S(k | l) * S(j)) return false;
                }
        if (base == full_mask(n)) break;
    }
    return true;
}

CartanVector cartan_from_plucker(const PluckerVector& p) {
    if (p.n % 2 != 0 || p.n < 2 || p.k != p.n / 2 + 1)
        throw DimensionMismatch("expected a Plucker vector of an (n+1)-plane in 2n dimensions");
    const int n = p.n / 2;
    const Rat d0 = p.at(base_index(n));
    if (d0.sign() <= 0) throw NonPositive("coordinate at {1, n+1, ..., 2n} is not positive");
    const PluckerVector q = p.scaled(d0.inv());

    CartanVector out{n, {}};
    out.sigma[0] = 1;
    out.sigma[bit(1)] = 1;
    std::vector<Mask> order;
    for (Mask k = 1; k <= full_mask(n); ++k) order.push_back(k);
    std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    for (Mask k : order) {
        std::optional<Rat> value;
        for (int l : mask_members(k)) {
            Mask idx = k | bit(n + l);
            for (int j = 1; j <= n; ++j)
                if (!has(k, j)) idx |= bit(n + j);
            const Rat below = out.at(k & ~bit(l));
            if (below.sign() <= 0) throw NonPositive("Cartan coordinate " + mask_key(k & ~bit(l)) + " is not positive");
            const Rat v = q.at(idx) / below;
            if (value && *value != v)
                throw NotOrthogonal("Cartan coordinate " + mask_key(k) + " depends on the removed index");
            value = v;
        }
        if (k == bit(1) && *value != 1) throw NotOrthogonal("normalization is inconsistent");
        if (value->sign() <= 0) throw NonPositive("Cartan coordinate " + mask_key(k) + " is not positive");
        out.sigma[k] = *value;
    }
    if (!satisfies_cartan_relations(out)) throw NotOrthogonal("Cartan relations fail");
    const PluckerVector back = plucker(matrix_from_cartan(out));
    for (Mask m : k_subsets(p.n, p.k))
        if (back.at(m) != q.at(m)) throw NotOrthogonal("Cartan coordinates do not reproduce the point");
    return out;
}

SkewPair skew_pair_from_cartan(const CartanVector& s) {
    const int n = s.n;
    const Rat e = s.at(0), o = s.at(bit(1));
    if (e.is_zero() || o.is_zero()) throw NonPositive("Sigma_0 and Sigma_1 must be nonzero");
    SkewPair m{Mat(n, n), Mat(n, n)};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            m.plus(i - 1, j - 1) = s.at(bit(i) | bit(j)) / e;
            m.minus(i - 1, j - 1) = i == 1 ? s.at(bit(j)) / o : -s.at(bit(1) | bit(i) | bit(j)) / o;
            m.plus(j - 1, i - 1) = -m.plus(i - 1, j - 1);
            m.minus(j - 1, i - 1) = -m.minus(i - 1, j - 1);
        }
    return m;
}

std::optional<Mask> pfaffian_mismatch(const CartanVector& s, const SkewPair& m) {
    for (Mask j = 0; j <= full_mask(s.n); ++j) {
        const int size = popcount(j);
        Rat v;
        if (size % 2 == 0) {
            v = s.at(0) * pfaffian(principal(m.plus, j));
        } else {
            v = s.at(bit(1)) * pfaffian(principal(m.minus, j ^ bit(1)));
            if ((size - 1) / 2 % 2 == 1) v = -v;
        }
        if (v != s.at(j)) return j;
        if (j == full_mask(s.n)) break;
    }
    return std::nullopt;
}

bool pfaffian_check(const CartanVector& s, const SkewPair& m) { return !pfaffian_mismatch(s, m).has_value(); }

void require_pfaffian(const CartanVector& s, const SkewPair& m) {
    if (auto j = pfaffian_mismatch(s, m)) throw PfaffianMismatch("Pfaffian formula fails at J = {" + mask_key(*j) + "}");
}

Mat isotropic_plus(const SkewPair& m) {
    const int n = m.plus.rows();
    Mat x(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) x(r, c) = m.plus(r, c);
        x(r, n + r) = 1;
    }
    return x;
}

Mat isotropic_minus(const SkewPair& m) {
    const int n = m.minus.rows();
    Mat x(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        // block column c holds column c+1 of M-, cyclically
        for (int c = 0; c < n; ++c) x(r, 1 + c) = m.minus(r, (c + 1) % n);
        x(r, r == 0 ? 0 : n + r) = 1;
    }
    return x;
}

Mat matrix_from_cartan(const CartanVector& s) {
    const int n = s.n;
    const SkewPair m = skew_pair_from_cartan(s);
    const Mat both = change_basis(isotropic_plus(m)).vstack(change_basis(isotropic_minus(m)));
    const RrefResult red = rref_solve(both);
    if (red.rank() != n + 1) throw RankUnexpected("isotropic forms span dimension " + std::to_string(red.rank()));
    std::vector<int> rows, cols;
    for (int r = 0; r <= n; ++r) rows.push_back(r);
    for (int c = 0; c < 2 * n; ++c) cols.push_back(c);
    Mat out = red.reduced.submatrix(rows, cols);
    const Rat d = plucker(out).at(base_index(n));
    if (d.is_zero()) throw RankUnexpected("coordinate at {1, n+1, ..., 2n} vanishes");
    const Rat scale = s.at(0) * s.at(bit(1)) / d;
    for (int c = 0; c < 2 * n; ++c) out(0, c) *= scale;
    return out;
}

BVariables psi_g(const CartanVector& s, const DiskGraph& g) {
    const JLabels lab = j_labels(g);
    BVariables b;
    for (Mask j : lab.vertex) b.vertex.push_back(s.at(j));
    for (Mask j : lab.face) b.face.push_back(s.at(j));
    return b;
}

CartanVector b_to_cartan(const BVariables& b, const DiskGraph& g) {
    const JLabels lab = j_labels(g);
    CartanVector out{g.n(), {}};
    auto put = [&](Mask j, const Rat& v) {
        auto [it, fresh] = out.sigma.emplace(j, v);
        if (!fresh && it->second != v) throw NotOrthogonal("two places with label {" + mask_key(j) + "} disagree");
    };
    for (size_t v = 0; v < lab.vertex.size(); ++v) put(lab.vertex[v], b.vertex[v]);
    for (size_t f = 0; f < lab.face.size(); ++f) put(lab.face[f], b.face[f]);
    return out;
}

Conductances q_g(const BVariables& b, const DiskGraph& g) {
    const DiskFaces& faces = g.faces();
    Conductances c;
    for (int e = 0; e < g.num_edges(); ++e) {
        const int f = faces.face_of[static_cast<size_t>(2 * e)], h = faces.face_of[static_cast<size_t>(2 * e + 1)];
        c.push_back(b.vertex[static_cast<size_t>(g.edge_end(e, 0))] * b.vertex[static_cast<size_t>(g.edge_end(e, 1))] /
                    (b.face[static_cast<size_t>(f)] * b.face[static_cast<size_t>(h)]));
    }
    return c;
}

std::vector<Rat> i_g_plus(const BVariables& b, const Temperley& t) {
    const BipartiteGraph& bg = t.graph;
    std::vector<Rat> a;
    for (const auto& face : trace_faces(bg.graph)) {
        int v = -1, f = -1;
        auto visit = [&](int x) {
            if (!bg.is_white(x)) return;
            const int fv = bg.from_vertex[static_cast<size_t>(x)], ff = bg.from_face[static_cast<size_t>(x)];
            if (fv >= 0) {
                if (v >= 0 && v != fv) throw InconsistentEmbedding("Temperley face meets two vertex whites");
                v = fv;
            }
            if (ff >= 0) {
                if (f >= 0 && f != ff) throw InconsistentEmbedding("Temperley face meets two face whites");
                f = ff;
            }
        };
        for (const FaceStep& st : face) {
            visit(st.from);
            visit(st.to);
        }
        if (v < 0 || f < 0) throw InconsistentEmbedding("Temperley face misses a white of one kind");
        a.push_back(b.vertex[static_cast<size_t>(v)] * b.face[static_cast<size_t>(f)]);
    }
    return a;
}

BVariables cube_recurrence_move(const BVariables& b, const YDeltaMove& mv) {
    const DiskGraph& before = mv.before;
    Rat sum = 0;
    for (int i = 0; i < 3; ++i)
        sum += b.vertex[static_cast<size_t>(before.vertex_index(mv.outer[static_cast<size_t>(i)]))] *
               b.face[static_cast<size_t>(mv.side_before[static_cast<size_t>(i)])];
    const Rat center = mv.y_to_delta ? b.vertex[static_cast<size_t>(mv.center_before)]
                                     : b.face[static_cast<size_t>(mv.center_before)];
    BVariables out;
    out.vertex.assign(static_cast<size_t>(mv.after.num_vertices()), Rat(0));
    out.face.assign(static_cast<size_t>(mv.after.num_faces()), Rat(0));
    for (size_t v = 0; v < mv.vertex_map.size(); ++v)
        if (mv.vertex_map[v] >= 0) out.vertex[static_cast<size_t>(mv.vertex_map[v])] = b.vertex[v];
    for (size_t f = 0; f < mv.face_map.size(); ++f)
        if (mv.face_map[f] >= 0) out.face[static_cast<size_t>(mv.face_map[f])] = b.face[f];
    (mv.y_to_delta ? out.face : out.vertex)[static_cast<size_t>(mv.center_after)] = sum / center;
    return out;
}

BVariables cube_recurrence_move(const BVariables& b, const DiskGraph& g, const YDeltaSite& site) {
    return cube_recurrence_move(b, y_delta_graph(g, site));
}

BVariables torus_action(const Rat& s, const std::vector<Rat>& t, const BVariables& b, const DiskGraph& g) {
    if (static_cast<int>(t.size()) != g.n()) throw DimensionMismatch("torus needs one factor per boundary vertex");
    const JLabels lab = j_labels(g);
    BVariables out = b;
    for (size_t v = 0; v < out.vertex.size(); ++v) out.vertex[v] *= label_factor(s, t, lab.vertex[v]);
    for (size_t f = 0; f < out.face.size(); ++f) out.face[f] *= label_factor(s, t, lab.face[f]);
    return out;
}

CartanVector torus_action(const Rat& s, const std::vector<Rat>& t, const CartanVector& c) {
    if (static_cast<int>(t.size()) != c.n) throw DimensionMismatch("torus needs one factor per index");
    CartanVector out = c;
    for (auto& [j, v] : out.sigma) v *= label_factor(s, t, j);
    return out;
}

std::vector<Mask> boundary_labels(const DiskGraph& g) {
    const JLabels lab = j_labels(g);
    std::vector<Mask> out;
    for (int i = 1; i <= g.n(); ++i) {
        out.push_back(lab.vertex[static_cast<size_t>(g.boundary_vertex(i))]);
        out.push_back(lab.face[static_cast<size_t>(g.boundary_face(i))]);
    }
    return out;
}

Mat electrical_right_twist(const CartanVector& s, const DiskGraph& g) {
    if (s.n != g.n()) throw DimensionMismatch("Cartan vector and graph disagree on n");
    const Mat x = matrix_from_cartan(s);
    const std::vector<Mask> lab = boundary_labels(g);
    const int m = 2 * g.n();
    std::vector<Rat> t;
    for (int i = 1; i <= m; ++i)
        t.push_back(s.at(lab[static_cast<size_t>(cyc(i - 1, m) - 1)]) / s.at(lab[static_cast<size_t>(i - 1)]));
    return column_scale(t, right_twist(x));
}

std::vector<Rat> left_twist_ratios(const Mat& x, const DiskGraph& g) {
    const int n = g.n(), m = 2 * n;
    if (x.cols() != m) throw DimensionMismatch("point and graph disagree on n");
    const Temperley tp = temperley_plus(g, Conductances(static_cast<size_t>(g.num_edges()), Rat(1)));
    const BipartiteStrands st = strands_and_labels(tp.graph);
    const PluckerVector p = plucker(x);
    auto a = [&](int i) {
        return p.at(st.face_label[static_cast<size_t>(boundary_face_minus(tp.graph, cyc(i, m)))]);
    };
    std::vector<Rat> r;
    for (int i = 1; i <= n; ++i) {
        const Rat below = a(n + i - 1);
        if (below.is_zero()) throw NonPositive("boundary face coordinate vanishes");
        r.push_back(a(n + i) / below);
    }
    return r;
}

std::vector<Rat> default_left_scaling(const std::vector<Rat>& r) {
    std::vector<Rat> t = r;
    t.resize(2 * r.size(), Rat(1));
    return t;
}

CartanVector electrical_left_twist(const Mat& x, const DiskGraph& g, const std::optional<std::vector<Rat>>& t) {
    const int n = g.n();
    if (x.cols() != 2 * n || x.rows() != n + 1) throw DimensionMismatch("expected an (n+1) x 2n point");
    if (!omega_check(x)) throw NotIsotropic("point is not isotropic for Omega");
    if (!plucker(x).all_positive()) throw NonPositive("point is not totally positive");
    const std::vector<Rat> r = left_twist_ratios(x, g);
    const std::vector<Rat> scale = t ? *t : default_left_scaling(r);
    if (static_cast<int>(scale.size()) != 2 * n) throw DimensionMismatch("scaling needs 2n entries");
    if (scale[static_cast<size_t>(n)] != 1) throw NotOrthogonal("scaling must fix column n+1");
    for (int i = 0; i < n; ++i)
        if (scale[static_cast<size_t>(i)] * scale[static_cast<size_t>(n + i)] != r[static_cast<size_t>(i)])
            throw NotOrthogonal("scaling products do not match the boundary face ratios");
    const Mat y = column_scale(scale, left_twist(x));
    if (!is_coisotropic(y)) throw NotOrthogonal("scaled left twist is not coisotropic");
    return cartan_from_plucker(plucker(y));
}

}  // namespace elnet
