#pragma once

#include <map>
#include <utility>
#include <vector>

#include "elnet/matrix.hpp"
#include "elnet/subset.hpp"

namespace elnet {

Rat determinant(const Mat& m);

// Skew-symmetric elimination; odd sizes give 0. Throws NotSkewSymmetric.
Rat pfaffian(const Mat& a);

// M_kk - M_kd M_dd^{-1} M_dk with d the complement of `keep`. Throws SingularBlock.
Mat schur_complement(const Mat& m, const SubsetIndex& keep);

struct RrefResult {
    Mat reduced;
    SubsetIndex pivots;  // pivot columns, 1-based over [cols]
    int rank() const { return pivots.size(); }
};

// Reduced row echelon form; each pivot is the topmost row with a nonzero entry in the leftmost remaining column.
RrefResult rref_solve(const Mat& m);

int rank(const Mat& m);

// Determinants of every rows x rows column submatrix, keyed by column mask.
std::map<Mask, Rat> maximal_minors(const Mat& m);

// Solve A x = b for square A; returns false when A is singular.
bool solve_square(const Mat& a, const std::vector<Rat>& b, std::vector<Rat>& x);

// Inverse of a square matrix; throws SingularBlock when singular.
Mat inverse(const Mat& a);

// Basis of the right null space {x : m x = 0}, as columns of the returned matrix.
Mat null_space(const Mat& m);

}  // namespace elnet
