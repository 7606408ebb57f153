#include "elnet/linalg.hpp"

#include <algorithm>

#include "elnet/errors.hpp"

namespace elnet {

Rat determinant(const Mat& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const int n = m.rows();
    Mat a = m;
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (int j = c; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        const Rat piv = a(c, c);
        det *= piv;
        for (int r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero()) continue;
            const Rat f = a(r, c) / piv;
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

Rat pfaffian(const Mat& in) {
    if (!in.is_skew_symmetric()) throw NotSkewSymmetric("pfaffian input is not skew-symmetric");
    const int n = in.rows();
    if (n % 2 == 1) return 0;
    Mat a = in;
    Rat pf = 1;
    for (int k = 0; k < n; k += 2) {
        int p = k + 1;
        while (p < n && a(k, p).is_zero()) ++p;
        if (p == n) return 0;
        if (p != k + 1) {
            // simultaneous row/column swap of k+1 and p flips the sign
            for (int j = 0; j < n; ++j) std::swap(a(k + 1, j), a(p, j));
            for (int i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, p));
            pf = -pf;
        }
        const Rat piv = a(k, k + 1);
        pf *= piv;
        for (int i = k + 2; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const Rat upd = (a(k + 1, i) * a(k, j) - a(k, i) * a(k + 1, j)) / piv;
                if (upd.is_zero()) continue;
                a(i, j) += upd;
                a(j, i) = -a(i, j);
            }
        }
    }
    return pf;
}

namespace {

// Gauss-Jordan on [A | B]; returns false if A is singular. A must be square.
bool solve_block(Mat a, Mat b, Mat& x) {
    const int n = a.rows();
    const int m = b.cols();
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return false;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            for (int j = 0; j < m; ++j) std::swap(b(p, j), b(c, j));
        }
        const Rat inv = a(c, c).inv();
        for (int j = 0; j < n; ++j) a(c, j) *= inv;
        for (int j = 0; j < m; ++j) b(c, j) *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            const Rat f = a(r, c);
            for (int j = 0; j < n; ++j) a(r, j) -= f * a(c, j);
            for (int j = 0; j < m; ++j) b(r, j) -= f * b(c, j);
        }
    }
    x = b;
    return true;
}

}  // namespace

Mat schur_complement(const Mat& m, const SubsetIndex& keep) {
    if (!m.is_square()) throw DimensionMismatch("schur complement of a non-square matrix");
    if (keep.ground() != m.rows()) throw DimensionMismatch("keep set ground size differs from matrix size");
    std::vector<int> k, d;
    for (int i = 1; i <= m.rows(); ++i) (keep.contains(i) ? k : d).push_back(i - 1);
    const Mat mkk = m.submatrix(k, k);
    if (d.empty()) return mkk;
    Mat sol;
    if (!solve_block(m.submatrix(d, d), m.submatrix(d, k), sol))
        throw SingularBlock("eliminated block is singular");
    return mkk - m.submatrix(k, d) * sol;
}

RrefResult rref_solve(const Mat& m) {
    Mat a = m;
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const Rat inv = a(r, c).inv();
        for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Rat f = a(i, c);
            for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        piv.push_back(c + 1);
        ++r;
    }
    return {a, SubsetIndex(m.cols(), piv)};
}

int rank(const Mat& m) { return rref_solve(m).rank(); }

std::map<Mask, Rat> maximal_minors(const Mat& m) {
    if (m.rows() > m.cols()) throw DimensionMismatch("maximal minors need rows <= cols");
    std::map<Mask, Rat> out;
    for (Mask s : k_subsets(m.cols(), m.rows())) {
        std::vector<int> cols;
        for (int i : mask_members(s)) cols.push_back(i - 1);
        out.emplace(s, determinant(m.select_cols(cols)));
    }
    return out;
}

bool solve_square(const Mat& a, const std::vector<Rat>& b, std::vector<Rat>& x) {
    if (!a.is_square() || static_cast<int>(b.size()) != a.rows())
        throw DimensionMismatch("solve shape mismatch");
    Mat rhs(a.rows(), 1);
    for (int i = 0; i < a.rows(); ++i) rhs(i, 0) = b[static_cast<size_t>(i)];
    Mat sol;
    if (!solve_block(a, rhs, sol)) return false;
    x = sol.col(0);
    return true;
}

Mat inverse(const Mat& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    Mat sol;
    if (!solve_block(a, Mat::identity(a.rows()), sol)) throw SingularBlock("matrix is singular");
    return sol;
}

Mat null_space(const Mat& m) {
    const RrefResult rr = rref_solve(m);
    std::vector<int> free;
    for (int c = 1; c <= m.cols(); ++c)
        if (!rr.pivots.contains(c)) free.push_back(c);
    Mat basis(m.cols(), static_cast<int>(free.size()));
    const auto& piv = rr.pivots.members();
    for (size_t f = 0; f < free.size(); ++f) {
        basis(free[f] - 1, static_cast<int>(f)) = 1;
        for (size_t r = 0; r < piv.size(); ++r)
            basis(piv[r] - 1, static_cast<int>(f)) = -rr.reduced(static_cast<int>(r), free[f] - 1);
    }
    return basis;
}

}  // namespace elnet
