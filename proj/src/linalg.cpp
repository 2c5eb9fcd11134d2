#include "sba/linalg.hpp"

namespace sba {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = GaussScalar(1);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw ShapeError("matrix product: shape mismatch");
    Mat out(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const GaussScalar& v = at(i, k);
            if (v.is_zero()) continue;
            for (size_t j = 0; j < o.c_; ++j) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw ShapeError("matrix sum: shape mismatch");
    Mat out = *this;
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] += o.a_[k];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw ShapeError("matrix difference: shape mismatch");
    Mat out = *this;
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] -= o.a_[k];
    return out;
}

Mat Mat::transpose() const {
    Mat out(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

GaussScalar Mat::det() const {
    if (r_ != c_) throw ShapeError("determinant of non-square matrix");
    Mat m = *this;
    GaussScalar d(1);
    for (size_t col = 0; col < c_; ++col) {
        size_t pivot = col;
        while (pivot < r_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == r_) return GaussScalar(0);
        if (pivot != col) {
            for (size_t j = 0; j < c_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        GaussScalar inv = m.at(col, col).inv();
        for (size_t i = col + 1; i < r_; ++i) {
            GaussScalar f = m.at(i, col) * inv;
            if (f.is_zero()) continue;
            for (size_t j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::optional<Mat> Mat::inverse() const {
    if (r_ != c_) throw ShapeError("inverse of non-square matrix");
    Mat m = *this;
    Mat inv = identity(r_);
    for (size_t col = 0; col < c_; ++col) {
        size_t pivot = col;
        while (pivot < r_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == r_) return std::nullopt;
        if (pivot != col)
            for (size_t j = 0; j < c_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        GaussScalar f = m.at(col, col).inv();
        for (size_t j = 0; j < c_; ++j) {
            m.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (size_t i = 0; i < r_; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            GaussScalar g = m.at(i, col);
            for (size_t j = 0; j < c_; ++j) {
                m.at(i, j) -= g * m.at(col, j);
                inv.at(i, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

LinearSolveResult solve_linear(Mat a, std::vector<GaussScalar> b) {
    if (a.rows() != b.size()) throw ShapeError("solve_linear: rhs size mismatch");
    size_t rows = a.rows(), cols = a.cols();
    std::vector<size_t> origin(rows);
    for (size_t i = 0; i < rows; ++i) origin[i] = i;

    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (size_t j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
            std::swap(b[pivot], b[rank]);
            std::swap(origin[pivot], origin[rank]);
        }
        GaussScalar f = a.at(rank, col).inv();
        for (size_t j = col; j < cols; ++j) a.at(rank, j) *= f;
        b[rank] *= f;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a.at(i, col).is_zero()) continue;
            GaussScalar g = a.at(i, col);
            for (size_t j = col; j < cols; ++j) a.at(i, j) -= g * a.at(rank, j);
            b[i] -= g * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t i = rank; i < rows; ++i)
        if (!b[i].is_zero())
            return {SolveStatus::Inconsistent, {}, 0, origin[i], b[i]};

    std::vector<GaussScalar> x(cols, GaussScalar(0));
    for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    if (rank < cols)
        return {SolveStatus::Underdetermined, std::move(x), cols - rank, 0, GaussScalar(0)};
    return {SolveStatus::Unique, std::move(x), 0, 0, GaussScalar(0)};
}

std::vector<std::vector<GaussScalar>> nullspace(Mat a) {
    size_t rows = a.rows(), cols = a.cols();
    std::vector<int> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (size_t j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        GaussScalar f = a.at(rank, col).inv();
        for (size_t j = col; j < cols; ++j) a.at(rank, j) *= f;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a.at(i, col).is_zero()) continue;
            GaussScalar g = a.at(i, col);
            for (size_t j = col; j < cols; ++j) a.at(i, j) -= g * a.at(rank, j);
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<std::vector<GaussScalar>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<GaussScalar> v(cols, GaussScalar(0));
        v[free] = GaussScalar(1);
        for (size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0) v[col] = -a.at(pivot_of_col[col], free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sba
