#ifndef SBA_LINALG_HPP
#define SBA_LINALG_HPP

#include "sba/scalar.hpp"

#include <optional>
#include <vector>

namespace sba {

/// Dense matrix over Q(i), row major. Sizes here are tiny (dimension <= 4
/// blocks and small linear systems), so no sparsity games.
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, GaussScalar(0)) {}

    static Mat identity(size_t n);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    GaussScalar& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const GaussScalar& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat transpose() const;

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

    GaussScalar det() const;
    /// Inverse of a square matrix; nullopt when singular.
    std::optional<Mat> inverse() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<GaussScalar> a_;
};

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct LinearSolveResult {
    SolveStatus status;
    std::vector<GaussScalar> solution;   // a particular solution when consistent
    size_t nullity = 0;                  // solution-space dimension
    size_t inconsistent_row = 0;         // original row index certifying 0 = c
    GaussScalar inconsistent_residual;   // the nonzero c of that row
};

/// Solves A x = b by exact Gaussian elimination. When inconsistent, reports
/// the original index of a row that reduced to 0 = c with c != 0.
LinearSolveResult solve_linear(Mat a, std::vector<GaussScalar> b);

/// Echelonized basis of the nullspace of A.
std::vector<std::vector<GaussScalar>> nullspace(Mat a);

}  // namespace sba

#endif
