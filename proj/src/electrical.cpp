#include "elnet/electrical.hpp"

#include <array>

#include "elnet/dimer.hpp"
#include "elnet/errors.hpp"
#include "elnet/linalg.hpp"

namespace elnet {

void validate_network(const Network& n) {
    if (static_cast<int>(n.conductance.size()) != n.graph.num_edges())
        throw DimensionMismatch("one conductance per edge is required");
    for (int e = 0; e < n.graph.num_edges(); ++e)
        if (n.conductance[static_cast<size_t>(e)].sign() <= 0)
            throw NonPositive("conductance of " + n.graph.edge_id(e) + " is not positive");
}

std::vector<int> laplacian_order(const DiskGraph& g) {
    std::vector<int> order;
    for (int i = 1; i <= g.n(); ++i) order.push_back(g.boundary_vertex(i));
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.is_boundary(v)) order.push_back(v);
    return order;
}

Mat laplacian(const Network& n) {
    validate_network(n);
    const DiskGraph& g = n.graph;
    const std::vector<int> order = laplacian_order(g);
    std::vector<int> slot(order.size());
    for (size_t i = 0; i < order.size(); ++i) slot[static_cast<size_t>(order[i])] = static_cast<int>(i);
    const int size = g.num_vertices();
    Mat l(size, size);
    for (int e = 0; e < g.num_edges(); ++e) {
        const int u = slot[static_cast<size_t>(g.edge_end(e, 0))], v = slot[static_cast<size_t>(g.edge_end(e, 1))];
        const Rat& c = n.conductance[static_cast<size_t>(e)];
        l(u, u) += c;
        l(v, v) += c;
        l(u, v) -= c;
        l(v, u) -= c;
    }
    return l;
}

std::vector<Rat> harmonic_extension(const Network& n, const std::vector<Rat>& boundary) {
    const int b = n.graph.n();
    if (static_cast<int>(boundary.size()) != b) throw DimensionMismatch("one boundary value per boundary vertex");
    const Mat l = laplacian(n);
    const int size = l.rows();
    std::vector<int> in, bd;
    for (int i = 0; i < size; ++i) (i < b ? bd : in).push_back(i);
    if (in.empty()) return {};
    // L_ii x = -L_ib f_b
    const Mat lib = l.submatrix(in, bd);
    std::vector<Rat> rhs;
    for (size_t r = 0; r < in.size(); ++r) {
        Rat s = 0;
        for (int c = 0; c < b; ++c) s -= lib(static_cast<int>(r), c) * boundary[static_cast<size_t>(c)];
        rhs.push_back(s);
    }
    std::vector<Rat> x;
    if (!solve_square(l.submatrix(in, in), rhs, x)) throw SingularInterior("interior block of the Laplacian is singular");
    return x;
}

Mat response_matrix(const Network& n) {
    const Mat l = laplacian(n);
    std::vector<int> keep;
    for (int i = 1; i <= n.graph.n(); ++i) keep.push_back(i);
    try {
        return Rat(-1) * schur_complement(l, SubsetIndex(l.rows(), keep));
    } catch (const SingularBlock&) {
        throw SingularInterior("interior block of the Laplacian is singular");
    }
}

std::vector<std::string> response_violations(const Mat& l) {
    std::vector<std::string> out;
    if (!l.is_square()) return {"response matrix is not square"};
    const int n = l.rows();
    if (!l.is_symmetric()) out.push_back("response matrix is not symmetric");
    for (int i = 0; i < n; ++i) {
        Rat s = 0;
        for (int j = 0; j < n; ++j) {
            s += l(i, j);
            if (i != j && l(i, j).sign() <= 0)
                out.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not positive");
        }
        if (!s.is_zero()) out.push_back("row " + std::to_string(i + 1) + " does not sum to zero");
    }
    // -L without its last index must be positive definite
    for (int k = 1; k < n; ++k) {
        std::vector<int> idx;
        for (int i = 0; i < k; ++i) idx.push_back(i);
        if (determinant(Rat(-1) * l.submatrix(idx, idx)).sign() <= 0) {
            out.push_back("-L is not positive definite off one index");
            break;
        }
    }
    return out;
}

Conductances y_delta_conductances(const Conductances& c, const YDeltaMove& mv) {
    const DiskGraph& before = mv.before;
    const DiskGraph& after = mv.after;
    if (static_cast<int>(c.size()) != before.num_edges()) throw DimensionMismatch("one conductance per edge is required");
    Conductances out(static_cast<size_t>(after.num_edges()));
    for (int e = 0; e < after.num_edges(); ++e) {
        const int old = before.edge_index(after.edge_id(e));
        if (old >= 0) out[static_cast<size_t>(e)] = c[static_cast<size_t>(old)];
    }
    std::array<Rat, 3> m;
    for (int i = 0; i < 3; ++i) m[static_cast<size_t>(i)] = c[static_cast<size_t>(before.edge_index(mv.edge_ids[static_cast<size_t>(i)]))];
    const Rat sum = m[0] + m[1] + m[2];
    const Rat pairs = m[0] * m[1] + m[0] * m[2] + m[1] * m[2];
    for (int i = 0; i < 3; ++i) {
        const Rat& self = m[static_cast<size_t>(i)];
        const Rat v = mv.y_to_delta ? m[static_cast<size_t>((i + 1) % 3)] * m[static_cast<size_t>((i + 2) % 3)] / sum : pairs / self;
        out[static_cast<size_t>(after.edge_index(mv.edge_ids[static_cast<size_t>(i)]))] = v;
    }
    return out;
}

Mat forward_point(const Network& n) {
    validate_network(n);
    const Temperley t = temperley_plus(n.graph, n.conductance);
    const Mat x = matrix_from_plucker(boundary_measurement(t.graph, t.weights));
    if (!omega_check(x)) throw NotIsotropic("measured point is not isotropic for Omega");
    return x;
}

Mat lagrangian_from_response(const Mat& l) {
    if (!l.is_square()) throw DimensionMismatch("response matrix is not square");
    switch (l.rows()) {
        case 1:
            return Mat::identity(2);
        case 2: {
            const Rat& c = l(0, 1);
            return Mat{{0, 1, 0, -1}, {1, 0, 0, c}, {0, 0, -1, -c}};
        }
        case 3: {
            const Rat &l12 = l(0, 1), &l13 = l(0, 2), &l23 = l(1, 2);
            return Mat{{0, 1, 0, -1, 0, 1},
                       {1, 0, 0, l12, 0, -l12 - l13},
                       {0, 0, -1, -l12 - l23, 0, l12},
                       {0, 0, 0, l23, 1, l13}};
        }
        default:
            throw UnsupportedN("response-to-point conversion is available for n <= 3 only");
    }
}

Conductances invert_response(const InverseInput& input, const DiskGraph& g) {
    Mat x;
    if (const Mat* l = std::get_if<Mat>(&input)) {
        if (l->rows() != g.n() || l->cols() != g.n()) throw DimensionMismatch("response matrix and graph disagree on n");
        x = lagrangian_from_response(*l);
    } else {
        x = std::get<MatrixPoint>(input).matrix;
    }
    if (x.cols() != 2 * g.n() || x.rows() != g.n() + 1) throw DimensionMismatch("point and graph disagree on n");
    const CartanVector s = electrical_left_twist(x, g);
    return q_g(psi_g(s, g), g);
}

}  // namespace elnet
