#include "elnet/matrix.hpp"

#include "elnet/errors.hpp"

namespace elnet {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw DimensionMismatch("ragged rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

std::vector<Rat> Mat::row(int r) const {
    return {a_.begin() + static_cast<long>(r) * cols_, a_.begin() + static_cast<long>(r + 1) * cols_};
}

std::vector<Rat> Mat::col(int c) const {
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out.push_back((*this)(i, c));
    return out;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Mat s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            s(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
    return s;
}

Mat Mat::select_cols(const std::vector<int>& cols) const {
    std::vector<int> rows(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) rows[static_cast<size_t>(i)] = i;
    return submatrix(rows, cols);
}

Mat Mat::vstack(const Mat& below) const {
    if (rows_ > 0 && below.rows_ > 0 && cols_ != below.cols_)
        throw DimensionMismatch("vstack column mismatch");
    Mat out(rows_ + below.rows_, rows_ > 0 ? cols_ : below.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < below.cols_; ++j) out(rows_ + i, j) = below(i, j);
    return out;
}

bool Mat::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool Mat::is_skew_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("sum shape mismatch");
    Mat c = a;
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("difference shape mismatch");
    Mat c = a;
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
}

Mat operator*(const Rat& s, const Mat& m) {
    Mat c = m;
    for (auto& x : c.a_) x *= s;
    return c;
}

std::string Mat::str() const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
        out += i ? ", [" : "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += (*this)(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace elnet
