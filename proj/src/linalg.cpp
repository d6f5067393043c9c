#include "cotra/linalg.hpp"

#include <algorithm>

namespace cotra {

namespace {

// Pivot preference: smallest combined bit size, then lowest row index.
// Deterministic and keeps intermediate fractions modest.
size_t entry_weight(const Scalar& v) {
    return mpz_sizeinbase(v.get_num().get_mpz_t(), 2) + mpz_sizeinbase(v.get_den().get_mpz_t(), 2);
}

}  // namespace

RrefResult rref(const Mat& M) {
    const Field& F = M.field();
    Mat R = M;
    int rows = R.rows(), cols = R.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        size_t best_w = 0;
        for (int i = r; i < rows; ++i) {
            if (!F.is_zero(R.at(i, c))) {
                size_t w = entry_weight(R.at(i, c));
                if (best < 0 || w < best_w) {
                    best = i;
                    best_w = w;
                }
            }
        }
        if (best < 0) continue;
        if (best != r) {
            for (int j = 0; j < cols; ++j) {
                Scalar tmp = R.at(r, j);
                R.set(r, j, R.at(best, j));
                R.set(best, j, tmp);
            }
        }
        Scalar pinv = F.inv(R.at(r, c));
        for (int j = c; j < cols; ++j) R.set(r, j, F.mul(R.at(r, j), pinv));
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Scalar& f = R.at(i, c);
            if (F.is_zero(f)) continue;
            Scalar fac = f;
            for (int j = c; j < cols; ++j)
                R.set(i, j, F.sub(R.at(i, j), F.mul(fac, R.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{R, pivots, r};
}

int rank(const Mat& M) { return rref(M).rank; }

bool is_invertible(const Mat& M) { return M.rows() == M.cols() && rank(M) == M.rows(); }

Mat inverse(const Mat& M) {
    require(M.rows() == M.cols(), "inverse: not square");
    Mat X = solve(M, Mat::identity(M.field(), M.rows()));
    require((M * X) == Mat::identity(M.field(), M.rows()), "inverse: singular matrix");
    return X;
}

SubspaceBasis kernel(const Mat& M) {
    const Field& F = M.field();
    RrefResult rr = rref(M);
    int cols = M.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    SubspaceBasis out;
    out.ambient_dim = cols;
    int nfree = cols - rr.rank;
    out.vectors = Mat(F, nfree, cols);
    int k = 0;
    for (int fcol = 0; fcol < cols; ++fcol) {
        if (is_pivot[fcol]) continue;
        out.vectors.set(k, fcol, F.one());
        for (int rrow = 0; rrow < rr.rank; ++rrow) {
            const Scalar& v = rr.R.at(rrow, fcol);
            if (!F.is_zero(v)) out.vectors.set(k, rr.pivot_cols[rrow], F.neg(v));
        }
        ++k;
    }
    return out;
}

SubspaceBasis row_space(const Mat& M) {
    RrefResult rr = rref(M);
    SubspaceBasis out;
    out.ambient_dim = M.cols();
    out.vectors = rr.R.block(0, 0, rr.rank, M.cols());
    return out;
}

SubspaceBasis column_space(const Mat& M) { return row_space(M.transpose()); }

Mat cokernel_projection(const Mat& M) {
    SubspaceBasis left_null = kernel(M.transpose());
    return left_null.vectors;  // (rows - rank) x rows, rows kill im(M)
}

std::optional<Mat> try_solve(const Mat& A, const Mat& B) {
    require(A.rows() == B.rows(), "solve: row mismatch");
    require(A.field() == B.field(), "solve: field mismatch");
    const Field& F = A.field();
    Mat aug = Mat::hstack(A, B);
    RrefResult rr = rref(aug);
    for (int c : rr.pivot_cols)
        if (c >= A.cols()) return std::nullopt;  // inconsistent
    Mat X(F, A.cols(), B.cols());
    for (size_t r = 0; r < rr.pivot_cols.size(); ++r) {
        int pc = rr.pivot_cols[r];
        for (int j = 0; j < B.cols(); ++j) X.set(pc, j, rr.R.at(static_cast<int>(r), A.cols() + j));
    }
    return X;
}

Mat solve(const Mat& A, const Mat& B) {
    auto X = try_solve(A, B);
    require(X.has_value(), "solve: inconsistent linear system");
    return *X;
}

Mat section_of_surjection(const Mat& q) {
    Mat s = solve(q, Mat::identity(q.field(), q.rows()));
    return s;
}

Mat retraction_of_injection(const Mat& i) {
    require(rank(i) == i.cols(), "retraction_of_injection: map is not injective");
    Mat rt = solve(i.transpose(), Mat::identity(i.field(), i.cols()));
    return rt.transpose();
}

SubspaceBasis intersect(const SubspaceBasis& U, const SubspaceBasis& W) {
    require(U.ambient_dim == W.ambient_dim, "intersect: ambient mismatch");
    Mat cu = kernel(U.vectors).vectors;  // constraints cutting out U
    Mat cw = kernel(W.vectors).vectors;
    return kernel(Mat::vstack(cu, cw));
}

SubspaceBasis sum_subspace(const SubspaceBasis& U, const SubspaceBasis& W) {
    require(U.ambient_dim == W.ambient_dim, "sum_subspace: ambient mismatch");
    return row_space(Mat::vstack(U.vectors, W.vectors));
}

bool subspace_contains(const SubspaceBasis& big, const SubspaceBasis& small) {
    require(big.ambient_dim == small.ambient_dim, "subspace_contains: ambient mismatch");
    if (small.dim() == 0) return true;
    return try_solve(big.inclusion(), small.inclusion()).has_value();
}

bool same_subspace(const SubspaceBasis& U, const SubspaceBasis& W) {
    return U.dim() == W.dim() && subspace_contains(U, W) && subspace_contains(W, U);
}

Mat op_lmul(const Mat& A, int rx, int cx) {
    require(A.cols() == rx, "op_lmul: shape mismatch");
    return Mat::kron(A, Mat::identity(A.field(), cx));
}

Mat op_rmul(const Mat& B, int rx, int cx) {
    require(B.rows() == cx, "op_rmul: shape mismatch");
    return Mat::kron(Mat::identity(B.field(), rx), B.transpose());
}

Mat op_mid_left(int k, const Mat& R, int rx, int cx) {
    require(R.rows() == k * cx, "op_mid_left: shape mismatch");
    const Field& F = R.field();
    int cR = R.cols();
    Mat out(F, k * rx * cR, rx * cx);
    for (int u = 0; u < k; ++u)
        for (int i = 0; i < rx; ++i)
            for (int j = 0; j < cR; ++j)
                for (int a = 0; a < cx; ++a) {
                    const Scalar& v = R.at(u * cx + a, j);
                    if (!F.is_zero(v)) out.set((u * rx + i) * cR + j, i * cx + a, v);
                }
    return out;
}

Mat op_mid_right(const Mat& R, int k, int rx, int cx) {
    require(R.rows() == cx * k, "op_mid_right: shape mismatch");
    const Field& F = R.field();
    int cR = R.cols();
    Mat out(F, rx * k * cR, rx * cx);
    for (int i = 0; i < rx; ++i)
        for (int u = 0; u < k; ++u)
            for (int j = 0; j < cR; ++j)
                for (int a = 0; a < cx; ++a) {
                    const Scalar& v = R.at(a * k + u, j);
                    if (!F.is_zero(v)) out.set((i * k + u) * cR + j, i * cx + a, v);
                }
    return out;
}

SubspaceBasis solve_vec_system(const std::vector<Mat>& ops, int rx, int cx) {
    require(!ops.empty(), "solve_vec_system: no constraints");
    Mat stacked = ops[0];
    require(stacked.cols() == rx * cx, "solve_vec_system: operator shape mismatch");
    for (size_t t = 1; t < ops.size(); ++t) {
        require(ops[t].cols() == rx * cx, "solve_vec_system: operator shape mismatch");
        stacked = Mat::vstack(stacked, ops[t]);
    }
    return kernel(stacked);
}

SubspaceBasis solve_intertwiner(const std::vector<std::pair<Mat, Mat>>& pairs, int rx, int cx) {
    require(!pairs.empty(), "solve_intertwiner: no constraints given");
    std::vector<Mat> ops;
    for (const auto& [A, B] : pairs) ops.push_back(op_lmul(A, rx, cx) - op_rmul(B, rx, cx));
    return solve_vec_system(ops, rx, cx);
}

Mat factor_through_injection(const Mat& M, const Mat& incl) {
    Mat x = solve(incl, M);
    require((incl * x) == M, "factor_through_injection: image not contained in subspace");
    return x;
}

Mat factor_through_surjection(const Mat& M, const Mat& proj) {
    Mat xt = solve(proj.transpose(), M.transpose());
    Mat x = xt.transpose();
    require((x * proj) == M, "factor_through_surjection: map does not kill kernel of projection");
    return x;
}

Mat induced_on_sub(const Mat& T, const Mat& incl_src, const Mat& incl_tgt) {
    return factor_through_injection(T * incl_src, incl_tgt);
}

Mat induced_on_quot(const Mat& T, const Mat& proj_src, const Mat& proj_tgt) {
    return factor_through_surjection(proj_tgt * T, proj_src);
}

}  // namespace cotra
