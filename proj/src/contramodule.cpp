#include "cotra/contramodule.hpp"

namespace cotra {

ValidationResult validate_contramodule(const Contramodule& P) {
    ValidationResult res;
    require(P.D != nullptr, "validate_contramodule: null coalgebra");
    const int n = P.D->dim;
    const int p = P.dim;
    if (P.pi.rows() != p || P.pi.cols() != n * p) {
        res.fail("shape", "structure map must be dim x (dimD*dim)");
        return res;
    }
    DualAlgebra A = dual_algebra(*P.D);
    const Mat Ip = Mat::identity(P.D->field, p);
    const Mat In = Mat::identity(P.D->field, n);
    Mat lhs = P.pi * Mat::kron(A.mult, Ip);
    Mat rhs = P.pi * Mat::kron(In, P.pi);
    if (lhs != rhs) res.fail("contraassociativity", "structure map and multiplication disagree");
    Mat cu = P.pi * Mat::kron(A.unit, Ip);
    if (cu != Ip) res.fail("contraunit", "unit functional does not act as identity");
    return res;
}

Contramodule free_contramodule(const CoalgebraPtr& D, int k) {
    require(D != nullptr, "free_contramodule: null coalgebra");
    require(k >= 0, "free_contramodule: negative fiber dimension");
    DualAlgebra A = dual_algebra(*D);
    Contramodule P;
    P.D = D;
    P.dim = D->dim * k;
    P.pi = Mat::kron(A.mult, Mat::identity(D->field, k));
    return P;
}

SubspaceBasis hom_contra(const Contramodule& P, const Contramodule& Q) {
    require(P.D == Q.D, "hom_contra: different coalgebras");
    const int n = P.D->dim;
    // g |-> g*pi_P  minus  g |-> pi_Q*kron(I_n, g).
    Mat lhs = op_rmul(P.pi, Q.dim, P.dim);
    Mat mid = op_mid_left(n, Mat::identity(P.D->field, n * P.dim), Q.dim, P.dim);
    Mat rhs = op_lmul(Q.pi, n * Q.dim, n * P.dim) * mid;
    return solve_vec_system({lhs - rhs}, Q.dim, P.dim);
}

bool is_contra_morphism(const Contramodule& P, const Contramodule& Q, const Mat& g) {
    require(P.D == Q.D, "is_contra_morphism: different coalgebras");
    require(g.rows() == Q.dim && g.cols() == P.dim, "is_contra_morphism: wrong shape");
    const Mat In = Mat::identity(P.D->field, P.D->dim);
    return g * P.pi == Q.pi * Mat::kron(In, g);
}

SubContramodule sub_contramodule(const Contramodule& P, const SubspaceBasis& U) {
    require(U.ambient_dim == P.dim, "sub_contramodule: ambient mismatch");
    const Mat In = Mat::identity(P.D->field, P.D->dim);
    Mat incl = U.inclusion();
    Mat pi_u = factor_through_injection(P.pi * Mat::kron(In, incl), incl);
    SubContramodule out;
    out.contra = Contramodule{P.D, U.dim(), pi_u};
    out.incl = incl;
    return out;
}

QuotContramodule quot_contramodule(const Contramodule& P, const SubspaceBasis& U) {
    require(U.ambient_dim == P.dim, "quot_contramodule: ambient mismatch");
    sub_contramodule(P, U);
    const Mat In = Mat::identity(P.D->field, P.D->dim);
    Mat proj = cokernel_projection(U.inclusion());
    Mat pi_q = factor_through_surjection(proj * P.pi, Mat::kron(In, proj));
    QuotContramodule out;
    out.contra = Contramodule{P.D, proj.rows(), pi_q};
    out.proj = proj;
    return out;
}

SubContramodule image_subcontra(const Contramodule& P, const Contramodule& Q, const Mat& g) {
    require(is_contra_morphism(P, Q, g), "image_subcontra: not a morphism");
    return sub_contramodule(Q, column_space(g));
}

SubContramodule kernel_subcontra(const Contramodule& P, const Contramodule& Q, const Mat& g) {
    require(is_contra_morphism(P, Q, g), "kernel_subcontra: not a morphism");
    return sub_contramodule(P, kernel(g));
}

QuotContramodule max_quotient_over(const Contramodule& P, const Subcoalgebra& E) {
    require(E.parent == P.D, "max_quotient_over: subcoalgebra of a different coalgebra");
    const Mat Ip = Mat::identity(P.D->field, P.dim);
    // Functionals vanishing on E form an ideal of D^*; kill their action.
    SubspaceBasis perp = kernel(E.space.vectors);
    SubspaceBasis K = column_space(P.pi * Mat::kron(perp.inclusion(), Ip));
    return quot_contramodule(P, K);
}

Contramodule contramodule_dual(const Comodule& N) {
    require(N.side == Side::Right, "contramodule_dual: needs a right comodule");
    const int n = N.C->dim;
    const int m = N.dim;
    Contramodule P;
    P.D = N.C;
    P.dim = m;
    P.pi = Mat(N.C->field, m, n * m);
    for (int a = 0; a < m; ++a)
        for (int u = 0; u < n; ++u)
            for (int b = 0; b < m; ++b) P.pi.set(a, u * m + b, N.coaction.at(b * n + u, a));
    return P;
}

Mat contramodule_dual_map(const Mat& f) { return f.transpose(); }

Mat finitely_generated_witness(const Contramodule& P) {
    Contramodule F = free_contramodule(P.D, P.dim);
    require(is_contra_morphism(F, P, P.pi),
            "finitely_generated_witness: structure map is not a morphism from the free cover");
    require(rank(P.pi) == P.dim, "finitely_generated_witness: structure map not surjective");
    return P.pi;
}

ContraPresentation contra_presentation(const Contramodule& P) {
    ContraPresentation out;
    out.free0 = free_contramodule(P.D, P.dim);
    out.e0 = finitely_generated_witness(P);
    SubContramodule K = kernel_subcontra(out.free0, P, out.e0);
    out.free1 = free_contramodule(P.D, K.contra.dim);
    Mat cover = finitely_generated_witness(K.contra);
    out.e1 = K.incl * cover;
    require(is_contra_morphism(out.free1, out.free0, out.e1),
            "contra_presentation: second differential is not a morphism");
    require((out.e0 * out.e1).is_zero(), "contra_presentation: differentials do not compose to zero");
    require(same_subspace(kernel(out.e0), column_space(out.e1)),
            "contra_presentation: sequence not exact at the middle term");
    return out;
}

std::optional<Mat> projective_splitting(const Contramodule& P) {
    const Field& f = P.D->field;
    const int p = P.dim;
    Contramodule fr = free_contramodule(P.D, p);
    SubspaceBasis homs = hom_contra(P, fr);
    const int h = homs.dim();
    // The contraaction is the canonical surjection free(P) -> P; solve
    // sum_j x_j (pi * H_j) = id_P over the morphism space.
    Mat sys(f, p * p, h);
    for (int j = 0; j < h; ++j) {
        Mat Hj = Mat::unflatten(homs.vectors.row(j), fr.dim, p);
        Mat comp = P.pi * Hj;
        for (int i = 0; i < p; ++i)
            for (int a = 0; a < p; ++a) sys.set(i * p + a, j, comp.at(i, a));
    }
    std::optional<Mat> x = try_solve(sys, Mat::identity(f, p).flatten_row().transpose());
    if (!x) return std::nullopt;
    Mat s = Mat::zero(f, fr.dim, p);
    for (int j = 0; j < h; ++j) {
        const Scalar& c = x->at(j, 0);
        if (f.is_zero(c)) continue;
        s = s + Mat::unflatten(homs.vectors.row(j), fr.dim, p).scaled(c);
    }
    require(P.pi * s == Mat::identity(f, p), "projective_splitting: section check failed");
    return s;
}

}  // namespace cotra
