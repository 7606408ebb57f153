#pragma once
// Reference implementations and random generators used only by tests.

#include <cstdint>
#include <random>
#include <vector>

#include "elnet/matrix.hpp"

namespace oracle {

using elnet::Mat;
using elnet::Rat;

// p/q with p, q uniform in [1, hi]; negated with probability 1/2 when `signed_` is set.
class RatGen {
public:
    explicit RatGen(std::uint64_t seed) : eng_(seed) {}
    Rat positive(long hi = 1000) {
        std::uniform_int_distribution<long> d(1, hi);
        const long p = d(eng_);
        const long q = d(eng_);
        return Rat(p, q);
    }
    Rat any(long hi = 50) {
        std::uniform_int_distribution<long> d(-hi, hi);
        std::uniform_int_distribution<long> q(1, hi);
        return Rat(d(eng_), q(eng_));
    }
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline Mat random_skew(RatGen& g, int n) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            a(i, j) = g.any();
            a(j, i) = -a(i, j);
        }
    return a;
}

inline Mat random_matrix(RatGen& g, int r, int c) {
    Mat a(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) a(i, j) = g.any();
    return a;
}

// Vandermonde rows times a product of positive bidiagonal factors: every maximal minor is
// positive by Cauchy-Binet, since the factor product is totally nonnegative and invertible.
inline Mat random_positive_point(RatGen& g, int k, int n) {
    Mat v(k, n);
    Rat x = 0;
    for (int j = 0; j < n; ++j) {
        x += g.positive(5);
        Rat p = 1;
        for (int r = 0; r < k; ++r) {
            v(r, j) = p;
            p *= x;
        }
    }
    Mat t = Mat::identity(n);
    for (int i = 0; i < n; ++i) t(i, i) = g.positive(9);
    for (int round = 0; round < 2; ++round)
        for (int i = 0; i + 1 < n; ++i) {
            Mat up = Mat::identity(n), down = Mat::identity(n);
            up(i, i + 1) = g.positive(9);
            down(i + 1, i) = g.positive(9);
            t = t * up * down;
        }
    return v * t;
}

// Signed sum over perfect matchings, expanding along the first remaining index.
inline Rat pfaffian_matchings(const Mat& a, std::vector<int> idx) {
    if (idx.empty()) return 1;
    if (idx.size() % 2 == 1) return 0;
    Rat total = 0;
    const int first = idx[0];
    for (size_t j = 1; j < idx.size(); ++j) {
        std::vector<int> rest;
        for (size_t k = 1; k < idx.size(); ++k)
            if (k != j) rest.push_back(idx[k]);
        const Rat term = a(first, idx[j]) * pfaffian_matchings(a, rest);
        if (j % 2 == 1) total += term;
        else total -= term;
    }
    return total;
}

inline Rat pfaffian_matchings(const Mat& a) {
    std::vector<int> idx(static_cast<size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) idx[static_cast<size_t>(i)] = i;
    return pfaffian_matchings(a, idx);
}

// Laplace expansion along the first row.
inline Rat det_cofactor(const Mat& a) {
    const int n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Rat total = 0;
    for (int j = 0; j < n; ++j) {
        if (a(0, j).is_zero()) continue;
        std::vector<int> rows, cols;
        for (int i = 1; i < n; ++i) rows.push_back(i);
        for (int k = 0; k < n; ++k)
            if (k != j) cols.push_back(k);
        const Rat term = a(0, j) * det_cofactor(a.submatrix(rows, cols));
        if (j % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

}  // namespace oracle
