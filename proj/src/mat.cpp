#include "cotra/mat.hpp"

#include <sstream>

namespace cotra {

Mat Mat::identity(Field f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.a_[static_cast<size_t>(i) * n + i] = Scalar(1);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    require(f_ == o.f_, "Mat::*: field mismatch");
    require(c_ == o.r_, "Mat::*: shape mismatch " + std::to_string(r_) + "x" + std::to_string(c_) +
                            " * " + std::to_string(o.r_) + "x" + std::to_string(o.c_));
    Mat out(f_, r_, o.c_);
    for (int i = 0; i < r_; ++i) {
        for (int k = 0; k < c_; ++k) {
            const Scalar& aik = a_[static_cast<size_t>(i) * c_ + k];
            if (sgn(aik) == 0) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Scalar& bkj = o.a_[static_cast<size_t>(k) * o.c_ + j];
                if (sgn(bkj) == 0) continue;
                out.a_[static_cast<size_t>(i) * o.c_ + j] += aik * bkj;
            }
        }
    }
    for (auto& v : out.a_) v = f_.reduce(v);
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    require(f_ == o.f_ && r_ == o.r_ && c_ == o.c_, "Mat::+: shape/field mismatch");
    Mat out(f_, r_, c_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = f_.add(a_[t], o.a_[t]);
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    require(f_ == o.f_ && r_ == o.r_ && c_ == o.c_, "Mat::-: shape/field mismatch");
    Mat out(f_, r_, c_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = f_.sub(a_[t], o.a_[t]);
    return out;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat out(f_, r_, c_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = f_.mul(a_[t], s);
    return out;
}

Mat Mat::transpose() const {
    Mat out(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.a_[static_cast<size_t>(j) * r_ + i] = a_[static_cast<size_t>(i) * c_ + j];
    return out;
}

Mat Mat::kron(const Mat& A, const Mat& B) {
    require(A.f_ == B.f_, "Mat::kron: field mismatch");
    Mat out(A.f_, A.r_ * B.r_, A.c_ * B.c_);
    for (int i = 0; i < A.r_; ++i)
        for (int j = 0; j < A.c_; ++j) {
            const Scalar& aij = A.a_[static_cast<size_t>(i) * A.c_ + j];
            if (sgn(aij) == 0) continue;
            for (int k = 0; k < B.r_; ++k)
                for (int l = 0; l < B.c_; ++l) {
                    const Scalar& bkl = B.a_[static_cast<size_t>(k) * B.c_ + l];
                    if (sgn(bkl) == 0) continue;
                    out.a_[static_cast<size_t>(i * B.r_ + k) * out.c_ + (j * B.c_ + l)] =
                        A.f_.mul(aij, bkl);
                }
        }
    return out;
}

Mat Mat::hstack(const Mat& A, const Mat& B) {
    require(A.f_ == B.f_ && A.r_ == B.r_, "Mat::hstack: mismatch");
    Mat out(A.f_, A.r_, A.c_ + B.c_);
    for (int i = 0; i < A.r_; ++i) {
        for (int j = 0; j < A.c_; ++j) out.a_[static_cast<size_t>(i) * out.c_ + j] = A.a_[static_cast<size_t>(i) * A.c_ + j];
        for (int j = 0; j < B.c_; ++j) out.a_[static_cast<size_t>(i) * out.c_ + A.c_ + j] = B.a_[static_cast<size_t>(i) * B.c_ + j];
    }
    return out;
}

Mat Mat::vstack(const Mat& A, const Mat& B) {
    require(A.f_ == B.f_ && A.c_ == B.c_, "Mat::vstack: mismatch");
    Mat out(A.f_, A.r_ + B.r_, A.c_);
    for (int i = 0; i < A.r_; ++i)
        for (int j = 0; j < A.c_; ++j) out.a_[static_cast<size_t>(i) * out.c_ + j] = A.a_[static_cast<size_t>(i) * A.c_ + j];
    for (int i = 0; i < B.r_; ++i)
        for (int j = 0; j < B.c_; ++j) out.a_[static_cast<size_t>(A.r_ + i) * out.c_ + j] = B.a_[static_cast<size_t>(i) * B.c_ + j];
    return out;
}

Mat Mat::direct_sum(const Mat& A, const Mat& B) {
    require(A.f_ == B.f_, "Mat::direct_sum: field mismatch");
    Mat out(A.f_, A.r_ + B.r_, A.c_ + B.c_);
    for (int i = 0; i < A.r_; ++i)
        for (int j = 0; j < A.c_; ++j) out.a_[static_cast<size_t>(i) * out.c_ + j] = A.a_[static_cast<size_t>(i) * A.c_ + j];
    for (int i = 0; i < B.r_; ++i)
        for (int j = 0; j < B.c_; ++j)
            out.a_[static_cast<size_t>(A.r_ + i) * out.c_ + (A.c_ + j)] = B.a_[static_cast<size_t>(i) * B.c_ + j];
    return out;
}

Mat Mat::block(int i0, int j0, int h, int w) const {
    require(i0 >= 0 && j0 >= 0 && i0 + h <= r_ && j0 + w <= c_, "Mat::block: out of range");
    Mat out(f_, h, w);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) out.a_[static_cast<size_t>(i) * w + j] = a_[static_cast<size_t>(i0 + i) * c_ + (j0 + j)];
    return out;
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (sgn(v) != 0) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    if (!(f_ == o.f_) || r_ != o.r_ || c_ != o.c_) return false;
    for (size_t t = 0; t < a_.size(); ++t)
        if (cmp(a_[t], o.a_[t]) != 0) return false;
    return true;
}

Mat Mat::flatten_row() const {
    Mat out(f_, 1, r_ * c_);
    out.a_ = a_;
    return out;
}

Mat Mat::unflatten(const Mat& rowvec, int rows, int cols) {
    require(rowvec.r_ == 1 && rowvec.c_ == rows * cols, "Mat::unflatten: shape mismatch");
    Mat out(rowvec.f_, rows, cols);
    out.a_ = rowvec.a_;
    return out;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << r_ << "x" << c_ << " [";
    for (int i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < c_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace cotra
