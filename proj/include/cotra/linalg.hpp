#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cotra/mat.hpp"

namespace cotra {

// A subspace of k^ambient_dim.  Each row of `vectors` is one basis vector;
// rows are linearly independent.  Bases produced by the engine are canonical
// (reduced echelon kernel bases with a fixed pivot rule), so equal subspaces
// computed along different routes compare equal.
struct SubspaceBasis {
    int ambient_dim = 0;
    Mat vectors;  // dim x ambient_dim

    int dim() const { return vectors.rows(); }
    // Inclusion of the subspace into the ambient space, ambient_dim x dim.
    Mat inclusion() const { return vectors.transpose(); }
};

struct RrefResult {
    Mat R;
    std::vector<int> pivot_cols;
    int rank = 0;
};

RrefResult rref(const Mat& M);
int rank(const Mat& M);
bool is_invertible(const Mat& M);
Mat inverse(const Mat& M);

// Canonical basis of {x : M x = 0}.
SubspaceBasis kernel(const Mat& M);
// Canonical basis of the row space.
SubspaceBasis row_space(const Mat& M);
// Canonical basis of the column space (vectors live in the target).
SubspaceBasis column_space(const Mat& M);
// proj with proj*M = 0, proj surjective; rows(proj) = rows(M) - rank(M).
// ker(proj) = im(M), so proj is the cokernel projection of M.
Mat cokernel_projection(const Mat& M);

std::optional<Mat> try_solve(const Mat& A, const Mat& B);  // A X = B
Mat solve(const Mat& A, const Mat& B);                     // throws when inconsistent

// s with q*s = Id (q must be surjective).
Mat section_of_surjection(const Mat& q);
// r with r*i = Id (i must be injective).
Mat retraction_of_injection(const Mat& i);

SubspaceBasis intersect(const SubspaceBasis& U, const SubspaceBasis& W);
SubspaceBasis sum_subspace(const SubspaceBasis& U, const SubspaceBasis& W);
bool subspace_contains(const SubspaceBasis& big, const SubspaceBasis& small);
bool same_subspace(const SubspaceBasis& U, const SubspaceBasis& W);

// --- Linear operators on matrix unknowns -------------------------------
//
// An unknown matrix X of shape rx x cx is flattened row-major into a column
// vector vec(X) of length rx*cx.  The helpers below return the matrix of a
// linear operator on vec(X); operators compose by matrix multiplication.

// X |-> A*X            (requires cols(A) == rx)
Mat op_lmul(const Mat& A, int rx, int cx);
// X |-> X*B            (requires rows(B) == cx)
Mat op_rmul(const Mat& B, int rx, int cx);
// X |-> kron(I_k, X) * R    (requires rows(R) == k*cx)
Mat op_mid_left(int k, const Mat& R, int rx, int cx);
// X |-> kron(X, I_k) * R    (requires rows(R) == cx*k)
Mat op_mid_right(const Mat& R, int k, int rx, int cx);

// Basis of {X : op_i vec(X) = 0 for all i}; each row of the result is one
// flattened solution matrix.
SubspaceBasis solve_vec_system(const std::vector<Mat>& ops, int rx, int cx);

// Basis of {X : A_i X = X B_i for all i} (X of shape rx x cx).
SubspaceBasis solve_intertwiner(const std::vector<std::pair<Mat, Mat>>& pairs, int rx, int cx);

// --- Transport along inclusions / projections --------------------------

// x with incl*x = M (image of M must lie in the subspace).
Mat factor_through_injection(const Mat& M, const Mat& incl);
// x with x*proj = M (M must kill ker(proj)).
Mat factor_through_surjection(const Mat& M, const Mat& proj);
// h with incl_tgt * h = T * incl_src.
Mat induced_on_sub(const Mat& T, const Mat& incl_src, const Mat& incl_tgt);
// h with h * proj_src = proj_tgt * T.
Mat induced_on_quot(const Mat& T, const Mat& proj_src, const Mat& proj_tgt);

}  // namespace cotra
