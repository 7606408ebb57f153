#pragma once

#include <map>
#include <optional>
#include <vector>

#include "elnet/matrix.hpp"
#include "elnet/subset.hpp"

namespace elnet {

// Maximal minors of a k x n matrix keyed by column mask.
struct PluckerVector {
    int k = 0;
    int n = 0;
    std::map<Mask, Rat> coords;

    Rat at(Mask m) const;  // 0 when absent
    bool all_positive() const;  // every k-subset present and > 0
    PluckerVector scaled(const Rat& s) const;
};

// A full-rank matrix; `decorated` records whether the absolute scale of the minors is meaningful.
struct MatrixPoint {
    Mat matrix;
    bool decorated = true;
};

// Throws RankDeficient when the rank is below the row count.
PluckerVector plucker(const Mat& m);

// Ratio s with b = s * a, or nullopt when the vectors are not proportional (or a is zero).
std::optional<Rat> proportionality(const PluckerVector& a, const PluckerVector& b);

// Three-term relations Delta_{Sac} Delta_{Sbd} = Delta_{Sab} Delta_{Scd} + Delta_{Sad} Delta_{Sbc}
// for a < b < c < d outside S, over all (k-2)-subsets S.
bool satisfies_three_term(const PluckerVector& p);

// Twists solve k x k systems on cyclic column windows. Throws DegenerateWindow.
Mat right_twist(const Mat& m);
Mat left_twist(const Mat& m);

// Column i multiplied by t_i.
Mat column_scale(const std::vector<Rat>& t, const Mat& m);

bool same_row_span(const Mat& a, const Mat& b);

// The degenerate skew form on R^{2n} and the isotropy test for the row span.
Rat omega(const std::vector<Rat>& x, const std::vector<Rat>& y);
bool omega_check(const Mat& m);

// A matrix whose maximal minors equal p exactly. Throws RankDeficient when p is zero or
// is not the minor vector of any matrix.
Mat matrix_from_plucker(const PluckerVector& p);

}  // namespace elnet
