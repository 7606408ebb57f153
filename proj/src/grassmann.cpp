#include "elnet/grassmann.hpp"

#include "elnet/errors.hpp"
#include "elnet/linalg.hpp"

namespace elnet {

Rat PluckerVector::at(Mask m) const {
    auto it = coords.find(m);
    return it == coords.end() ? Rat(0) : it->second;
}

bool PluckerVector::all_positive() const {
    for (Mask m : k_subsets(n, k))
        if (at(m).sign() <= 0) return false;
    return true;
}

PluckerVector PluckerVector::scaled(const Rat& s) const {
    PluckerVector out{k, n, {}};
    for (const auto& [m, v] : coords) out.coords[m] = v * s;
    return out;
}

PluckerVector plucker(const Mat& m) {
    if (m.rows() > m.cols() || rank(m) < m.rows())
        throw RankDeficient("matrix rank is below its row count");
    return PluckerVector{m.rows(), m.cols(), maximal_minors(m)};
}

std::optional<Rat> proportionality(const PluckerVector& a, const PluckerVector& b) {
    if (a.k != b.k || a.n != b.n) return std::nullopt;
    std::optional<Rat> ratio;
    for (Mask m : k_subsets(a.n, a.k)) {
        const Rat x = a.at(m), y = b.at(m);
        if (x.is_zero() != y.is_zero()) return std::nullopt;
        if (x.is_zero()) continue;
        const Rat r = y / x;
        if (ratio && *ratio != r) return std::nullopt;
        ratio = r;
    }
    return ratio;
}

bool satisfies_three_term(const PluckerVector& p) {
    if (p.k < 2 || p.n < 4) return true;
    for (Mask s : k_subsets(p.n, p.k - 2)) {
        std::vector<int> rest;
        for (int i = 1; i <= p.n; ++i)
            if (!has(s, i)) rest.push_back(i);
        const int r = static_cast<int>(rest.size());
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b)
                for (int c = b + 1; c < r; ++c)
                    for (int d = c + 1; d < r; ++d) {
                        auto D = [&](int x, int y) { return p.at(s | bit(rest[static_cast<size_t>(x)]) | bit(rest[static_cast<size_t>(y)])); };
                        // with S inserted, the relative signs of the three products agree
                        if (D(a, c) * D(b, d) != D(a, b) * D(c, d) + D(a, d) * D(b, c)) return false;
                    }
    }
    return true;
}

namespace {

enum class Side { Right, Left };

Mat twist(const Mat& m, Side side) {
    const int k = m.rows(), n = m.cols();
    if (k > n) throw DimensionMismatch("twist needs at least as many columns as rows");
    Mat out(k, n);
    for (int i = 0; i < n; ++i) {
        Mat a(k, k);
        for (int r = 0; r < k; ++r) {
            // row 0 pairs with M_i, the remaining rows with the window
            const int j = side == Side::Right ? (i + r) % n : ((i - r) % n + n) % n;
            for (int c = 0; c < k; ++c) a(r, c) = m(c, j);
        }
        std::vector<Rat> rhs(static_cast<size_t>(k), Rat(0)), x;
        rhs[0] = 1;
        if (!solve_square(a, rhs, x))
            throw DegenerateWindow("column window at " + std::to_string(i + 1) + " is singular");
        for (int c = 0; c < k; ++c) out(c, i) = x[static_cast<size_t>(c)];
    }
    return out;
}

}  // namespace

Mat right_twist(const Mat& m) { return twist(m, Side::Right); }
Mat left_twist(const Mat& m) { return twist(m, Side::Left); }

Mat column_scale(const std::vector<Rat>& t, const Mat& m) {
    if (static_cast<int>(t.size()) != m.cols()) throw DimensionMismatch("scaling length differs from column count");
    Mat out = m;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) *= t[static_cast<size_t>(c)];
    return out;
}

bool same_row_span(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) return false;
    const int ra = rank(a);
    return ra == rank(b) && rank(a.vstack(b)) == ra;
}

Rat omega(const std::vector<Rat>& x, const std::vector<Rat>& y) {
    if (x.size() != y.size() || x.size() % 2 != 0) throw DimensionMismatch("omega needs two vectors of even length");
    const int n = static_cast<int>(x.size()) / 2;
    auto X = [&](int i) { return x[static_cast<size_t>(i - 1)]; };
    auto Y = [&](int i) { return y[static_cast<size_t>(i - 1)]; };
    Rat s = 0;
    for (int i = 1; i <= n; ++i) s += X(2 * i - 1) * Y(2 * i) - X(2 * i) * Y(2 * i - 1);
    for (int i = 1; i < n; ++i) s += X(2 * i + 1) * Y(2 * i) - X(2 * i) * Y(2 * i + 1);
    const Rat wrap = X(1) * Y(2 * n) - X(2 * n) * Y(1);
    s += n % 2 == 0 ? wrap : -wrap;
    return s;
}

bool omega_check(const Mat& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int s = r + 1; s < m.rows(); ++s)
            if (!omega(m.row(r), m.row(s)).is_zero()) return false;
    return true;
}

Mat matrix_from_plucker(const PluckerVector& p) {
    Mask base = 0;
    for (const auto& [m, v] : p.coords)
        if (!v.is_zero() && popcount(m) == p.k) {
            base = m;
            break;
        }
    if (base == 0 && p.k > 0) throw RankDeficient("Plucker vector is zero");
    const std::vector<int> rows = mask_members(base);
    const Rat pivot = p.at(base);
    Mat out(p.k, p.n);
    for (int r = 0; r < p.k; ++r) {
        for (int j = 1; j <= p.n; ++j) {
            const int i = rows[static_cast<size_t>(r)];
            if (j == i) {
                out(r, j - 1) = 1;
                continue;
            }
            if (has(base, j)) continue;
            // replacing i by j in the sorted list moves j past the members strictly between them
            const Mask m = (base & ~bit(i)) | bit(j);
            int between = 0;
            for (int x : rows)
                if ((x > i && x < j) || (x < i && x > j)) ++between;
            Rat v = p.at(m) / pivot;
            out(r, j - 1) = between % 2 == 0 ? v : -v;
        }
    }
    for (int j = 0; j < p.n && p.k > 0; ++j) out(0, j) *= pivot;
    PluckerVector check = plucker(out);
    for (Mask m : k_subsets(p.n, p.k))
        if (check.at(m) != p.at(m)) throw RankDeficient("vector is not the minor vector of a matrix");
    return out;
}

}  // namespace elnet
