#pragma once

#include <string>
#include <vector>

#include "cotra/field.hpp"

namespace cotra {

// Dense exact matrix.  Entries are stored row-major and kept in canonical
// form (normalized fraction over Q, residue 0..p-1 over F_p).
//
// Tensor convention used throughout the engine: the basis vector u_i (x) v_j
// of U (x) V has flat index i*dim(V) + j (left factor outer).  Mat::kron
// follows it, so kron(A, B) represents A (x) B on those bases.
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(Field f, int rows, int cols)
        : f_(f), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Scalar(0)) {
        require(rows >= 0 && cols >= 0, "Mat: negative shape");
    }

    static Mat identity(Field f, int n);
    static Mat zero(Field f, int rows, int cols) { return Mat(f, rows, cols); }

    int rows() const { return r_; }
    int cols() const { return c_; }
    const Field& field() const { return f_; }
    bool empty_shape() const { return r_ == 0 || c_ == 0; }

    const Scalar& at(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, const Scalar& v) { a_[idx(i, j)] = f_.reduce(v); }
    void set_long(int i, int j, long n, long d = 1) { a_[idx(i, j)] = f_.from_long(n, d); }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& s) const;
    Mat transpose() const;

    static Mat kron(const Mat& A, const Mat& B);
    static Mat hstack(const Mat& A, const Mat& B);
    static Mat vstack(const Mat& A, const Mat& B);
    static Mat direct_sum(const Mat& A, const Mat& B);

    Mat block(int i0, int j0, int h, int w) const;
    Mat row(int i) const { return block(i, 0, 1, c_); }
    Mat col(int j) const { return block(0, j, r_, 1); }

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    // Row-major flatten of this matrix as a single row (1 x rows*cols).
    Mat flatten_row() const;
    // Inverse of flatten_row: reshape a 1 x (rows*cols) row into rows x cols.
    static Mat unflatten(const Mat& rowvec, int rows, int cols);

    std::string to_string() const;

private:
    size_t idx(int i, int j) const {
        require(i >= 0 && i < r_ && j >= 0 && j < c_, "Mat: index out of range");
        return static_cast<size_t>(i) * c_ + j;
    }

    Field f_;
    int r_, c_;
    std::vector<Scalar> a_;
};

}  // namespace cotra
