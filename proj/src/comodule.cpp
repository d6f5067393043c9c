#include "cotra/comodule.hpp"

namespace cotra {

namespace {

std::string shape_str(const Mat& M) {
    return std::to_string(M.rows()) + "x" + std::to_string(M.cols());
}

}  // namespace

ValidationResult validate_comodule(const Comodule& M) {
    ValidationResult res;
    require(M.C != nullptr, "validate_comodule: null coalgebra");
    const int n = M.C->dim;
    const int m = M.dim;
    if (M.coaction.rows() != n * m || M.coaction.cols() != m) {
        res.fail("shape", "coaction is " + shape_str(M.coaction));
        return res;
    }
    const Mat Im = Mat::identity(M.C->field, m);
    const Mat In = Mat::identity(M.C->field, n);
    const Mat& rho = M.coaction;
    if (M.side == Side::Left) {
        Mat lhs = Mat::kron(M.C->comult, Im) * rho;
        Mat rhs = Mat::kron(In, rho) * rho;
        if (lhs != rhs) res.fail("coaction_coassociativity", "comult and coaction do not commute");
        Mat cu = Mat::kron(M.C->counit, Im) * rho;
        if (cu != Im) res.fail("coaction_counit", "counit does not retract the coaction");
    } else {
        Mat lhs = Mat::kron(rho, In) * rho;
        Mat rhs = Mat::kron(Im, M.C->comult) * rho;
        if (lhs != rhs) res.fail("coaction_coassociativity", "comult and coaction do not commute");
        Mat cu = Mat::kron(Im, M.C->counit) * rho;
        if (cu != Im) res.fail("coaction_counit", "counit does not retract the coaction");
    }
    return res;
}

Comodule cofree_comodule(const CoalgebraPtr& C, Side side, int k) {
    require(C != nullptr, "cofree_comodule: null coalgebra");
    require(k >= 0, "cofree_comodule: negative fiber dimension");
    const int n = C->dim;
    Comodule M;
    M.C = C;
    M.side = side;
    M.dim = n * k;
    const Mat Ik = Mat::identity(C->field, k);
    M.coaction = side == Side::Left ? Mat::kron(C->comult, Ik) : Mat::kron(Ik, C->comult);
    return M;
}

Comodule regular_comodule(const CoalgebraPtr& C, Side side) {
    require(C != nullptr, "regular_comodule: null coalgebra");
    Comodule M;
    M.C = C;
    M.side = side;
    M.dim = C->dim;
    M.coaction = C->comult;
    return M;
}

Mat comodule_action(const Comodule& M) {
    const int n = M.C->dim;
    const int m = M.dim;
    if (M.side == Side::Left) {
        Mat act(M.C->field, m, n * m);
        for (int b = 0; b < m; ++b)
            for (int i = 0; i < n; ++i)
                for (int a = 0; a < m; ++a) act.set(b, i * m + a, M.coaction.at(i * m + b, a));
        return act;
    }
    Mat act(M.C->field, m, m * n);
    for (int b = 0; b < m; ++b)
        for (int a = 0; a < m; ++a)
            for (int i = 0; i < n; ++i) act.set(b, a * n + i, M.coaction.at(b * n + i, a));
    return act;
}

SubspaceBasis hom_comod(const Comodule& M, const Comodule& N) {
    require(M.C == N.C && M.side == N.side, "hom_comod: incompatible comodules");
    const int n = M.C->dim;
    Mat lhs = op_lmul(N.coaction, N.dim, M.dim);
    Mat rhs = M.side == Side::Left ? op_mid_left(n, M.coaction, N.dim, M.dim)
                                   : op_mid_right(M.coaction, n, N.dim, M.dim);
    return solve_vec_system({lhs - rhs}, N.dim, M.dim);
}

bool is_comodule_morphism(const Comodule& M, const Comodule& N, const Mat& f) {
    require(M.C == N.C && M.side == N.side, "is_comodule_morphism: incompatible comodules");
    require(f.rows() == N.dim && f.cols() == M.dim, "is_comodule_morphism: wrong shape");
    const int n = M.C->dim;
    const Mat In = Mat::identity(M.C->field, n);
    Mat lhs = N.coaction * f;
    Mat rhs = M.side == Side::Left ? Mat::kron(In, f) * M.coaction : Mat::kron(f, In) * M.coaction;
    return lhs == rhs;
}

SubComodule sub_comodule(const Comodule& M, const SubspaceBasis& U) {
    require(U.ambient_dim == M.dim, "sub_comodule: ambient mismatch");
    const int n = M.C->dim;
    const Mat In = Mat::identity(M.C->field, n);
    Mat incl = U.inclusion();
    Mat big = M.side == Side::Left ? Mat::kron(In, incl) : Mat::kron(incl, In);
    auto rho_u = try_solve(big, M.coaction * incl);
    require(rho_u.has_value(), "sub_comodule: subspace is not coaction-invariant");
    SubComodule out;
    out.comodule = Comodule{M.C, M.side, U.dim(), *rho_u};
    out.incl = incl;
    return out;
}

QuotComodule quot_comodule(const Comodule& M, const SubspaceBasis& U) {
    require(U.ambient_dim == M.dim, "quot_comodule: ambient mismatch");
    // Ensure invariance so the quotient is well-defined.
    sub_comodule(M, U);
    const int n = M.C->dim;
    const Mat In = Mat::identity(M.C->field, n);
    Mat proj = cokernel_projection(U.inclusion());
    Mat big = M.side == Side::Left ? Mat::kron(In, proj) : Mat::kron(proj, In);
    Mat rho_q = factor_through_surjection(big * M.coaction, proj);
    QuotComodule out;
    out.comodule = Comodule{M.C, M.side, proj.rows(), rho_q};
    out.proj = proj;
    return out;
}

SubspaceBasis max_subcomodule_in(const Comodule& M, const SubspaceBasis& W) {
    require(W.ambient_dim == M.dim, "max_subcomodule_in: ambient mismatch");
    const int n = M.C->dim;
    const Mat In = Mat::identity(M.C->field, n);
    SubspaceBasis U = W;
    for (;;) {
        Mat q = cokernel_projection(U.inclusion());
        Mat big = M.side == Side::Left ? Mat::kron(In, q) : Mat::kron(q, In);
        SubspaceBasis next = intersect(U, kernel(big * M.coaction));
        if (next.dim() == U.dim()) return next;
        U = next;
    }
}

SubspaceBasis socle_over(const Comodule& M, const Subcoalgebra& E) {
    require(E.parent == M.C, "socle_over: subcoalgebra of a different coalgebra");
    const Mat Im = Mat::identity(M.C->field, M.dim);
    Mat q = cokernel_projection(E.space.inclusion());
    Mat big = M.side == Side::Left ? Mat::kron(q, Im) : Mat::kron(Im, q);
    return kernel(big * M.coaction);
}

SubComodule image_subcomodule(const Comodule& M, const Comodule& N, const Mat& f) {
    require(is_comodule_morphism(M, N, f), "image_subcomodule: not a morphism");
    return sub_comodule(N, column_space(f));
}

SubComodule kernel_subcomodule(const Comodule& M, const Comodule& N, const Mat& f) {
    require(is_comodule_morphism(M, N, f), "kernel_subcomodule: not a morphism");
    return sub_comodule(M, kernel(f));
}

Mat finitely_cogenerated_witness(const Comodule& M) {
    Comodule F = cofree_comodule(M.C, M.side, M.dim);
    require(is_comodule_morphism(M, F, M.coaction),
            "finitely_cogenerated_witness: coaction is not a morphism into the cofree comodule");
    require(kernel(M.coaction).dim() == 0, "finitely_cogenerated_witness: coaction not injective");
    return M.coaction;
}

Copresentation copresentation(const Comodule& M) {
    Copresentation out;
    out.cofree0 = cofree_comodule(M.C, M.side, M.dim);
    out.e0 = finitely_cogenerated_witness(M);
    QuotComodule q = quot_comodule(out.cofree0, column_space(out.e0));
    out.cofree1 = cofree_comodule(M.C, M.side, q.comodule.dim);
    Mat embed = finitely_cogenerated_witness(q.comodule);
    out.e1 = embed * q.proj;
    require(is_comodule_morphism(out.cofree0, out.cofree1, out.e1),
            "copresentation: second differential is not a morphism");
    require((out.e1 * out.e0).is_zero(), "copresentation: differentials do not compose to zero");
    require(same_subspace(kernel(out.e1), column_space(out.e0)),
            "copresentation: sequence not exact at the middle term");
    return out;
}

std::optional<Mat> injective_splitting(const Comodule& M) {
    const Field& f = M.C->field;
    const int m = M.dim;
    Comodule cf = cofree_comodule(M.C, M.side, m);
    SubspaceBasis homs = hom_comod(cf, M);
    const int h = homs.dim();
    // Solve sum_j x_j (H_j * coaction) = id_M over the morphism space.
    Mat sys(f, m * m, h);
    for (int j = 0; j < h; ++j) {
        Mat Hj = Mat::unflatten(homs.vectors.row(j), m, cf.dim);
        Mat comp = Hj * M.coaction;
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < m; ++a) sys.set(i * m + a, j, comp.at(i, a));
    }
    std::optional<Mat> x = try_solve(sys, Mat::identity(f, m).flatten_row().transpose());
    if (!x) return std::nullopt;
    Mat r = Mat::zero(f, m, cf.dim);
    for (int j = 0; j < h; ++j) {
        const Scalar& c = x->at(j, 0);
        if (f.is_zero(c)) continue;
        r = r + Mat::unflatten(homs.vectors.row(j), m, cf.dim).scaled(c);
    }
    require(r * M.coaction == Mat::identity(f, m), "injective_splitting: retraction check failed");
    return r;
}

}  // namespace cotra
