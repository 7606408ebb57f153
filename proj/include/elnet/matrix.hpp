#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "elnet/rat.hpp"

namespace elnet {

// Dense row-major matrix of exact rationals.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);
    static Mat identity(int n);
    static Mat from_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Rat> row(int r) const;
    std::vector<Rat> col(int c) const;
    Mat transpose() const;
    // 0-based index lists.
    Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    Mat select_cols(const std::vector<int>& cols) const;
    Mat vstack(const Mat& below) const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_skew_symmetric() const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Rat& s, const Mat& m);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

}  // namespace elnet
