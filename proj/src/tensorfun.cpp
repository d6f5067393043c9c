#include "cotra/tensorfun.hpp"

namespace cotra {

namespace {

// The map Hom(M, Hom(D,P)) -> Hom(M,P) induced by the coaction of the left
// comodule M: phi |-> (m |-> phi(m_(0))(m_(-1))).
Mat cohom_eval_map(const Comodule& M, int p) {
    const int n = M.C->dim;
    const int m = M.dim;
    Mat Ev(M.C->field, m * p, m * n * p);
    for (int b = 0; b < m; ++b)
        for (int bp = 0; bp < m; ++bp)
            for (int u = 0; u < n; ++u) {
                const Scalar& c = M.coaction.at(u * m + bp, b);
                if (sgn(c) == 0) continue;
                for (int a = 0; a < p; ++a)
                    Ev.set(b * p + a, bp * (n * p) + u * p + a, c);
            }
    return Ev;
}

// The map N (x) Hom(D,P) -> N (x) P induced by the coaction of the right
// comodule N: x (x) f |-> x_(0) (x) f(x_(1)).
Mat contratensor_eval_map(const Comodule& N, int p) {
    const int n = N.C->dim;
    const int r = N.dim;
    Mat Ev(N.C->field, r * p, r * n * p);
    for (int c = 0; c < r; ++c)
        for (int cp = 0; cp < r; ++cp)
            for (int u = 0; u < n; ++u) {
                const Scalar& v = N.coaction.at(c * n + u, cp);
                if (sgn(v) == 0) continue;
                for (int a = 0; a < p; ++a)
                    Ev.set(c * p + a, cp * (n * p) + u * p + a, v);
            }
    return Ev;
}

}  // namespace

CotensorResult cotensor_space(const Comodule& N, const Comodule& M) {
    require(N.side == Side::Right && M.side == Side::Left, "cotensor_space: sides are wrong");
    require(N.C == M.C, "cotensor_space: different coalgebras");
    const Field f = N.C->field;
    Mat T = Mat::kron(N.coaction, Mat::identity(f, M.dim)) -
            Mat::kron(Mat::identity(f, N.dim), M.coaction);
    CotensorResult out;
    out.space = kernel(T);
    out.incl = out.space.inclusion();
    return out;
}

CokerResult cohom_space(const Comodule& M, const Contramodule& P) {
    require(M.side == Side::Left, "cohom_space: comodule must be a left comodule");
    require(M.C == P.D, "cohom_space: different coalgebras");
    const Field f = M.C->field;
    Mat T = Mat::kron(Mat::identity(f, M.dim), P.pi) - cohom_eval_map(M, P.dim);
    CokerResult out;
    out.proj = cokernel_projection(T);
    out.dim = out.proj.rows();
    return out;
}

CokerResult contratensor_space(const Comodule& N, const Contramodule& P) {
    require(N.side == Side::Right, "contratensor_space: comodule must be a right comodule");
    require(N.C == P.D, "contratensor_space: different coalgebras");
    const Field f = N.C->field;
    Mat T = Mat::kron(Mat::identity(f, N.dim), P.pi) - contratensor_eval_map(N, P.dim);
    CokerResult out;
    out.proj = cokernel_projection(T);
    out.dim = out.proj.rows();
    return out;
}

CokerResult tensor_over_dual_space(const Comodule& N, const Contramodule& P) {
    require(N.side == Side::Right, "tensor_over_dual_space: comodule must be a right comodule");
    require(N.C == P.D, "tensor_over_dual_space: different coalgebras");
    const Field f = N.C->field;
    Mat T = Mat::kron(comodule_action(N), Mat::identity(f, P.dim)) -
            Mat::kron(Mat::identity(f, N.dim), P.pi);
    CokerResult out;
    out.proj = cokernel_projection(T);
    out.dim = out.proj.rows();
    return out;
}

Mat compare_tensor_contratensor(const Comodule& N, const Contramodule& P) {
    CokerResult t = tensor_over_dual_space(N, P);
    CokerResult ct = contratensor_space(N, P);
    return induced_on_quot(Mat::identity(N.C->field, N.dim * P.dim), t.proj, ct.proj);
}

Comodule cotensor_comodule(const Bicomodule& B, const Comodule& M, Mat* incl_out) {
    CotensorResult base = cotensor_space(right_part(B), M);
    const Field f = B.C->field;
    const int nc = B.C->dim;
    Mat big = Mat::kron(B.left_coaction, Mat::identity(f, M.dim)) * base.incl;
    Mat rho = factor_through_injection(big, Mat::kron(Mat::identity(f, nc), base.incl));
    if (incl_out) *incl_out = base.incl;
    Comodule out{B.C, Side::Left, base.space.dim(), rho};
    ValidationResult v = validate_comodule(out);
    require(v.ok, "cotensor_comodule: induced coaction invalid: " + v.summary());
    return out;
}

Comodule cotensor_comodule_right(const Comodule& N, const Bicomodule& B, Mat* incl_out) {
    CotensorResult base = cotensor_space(N, left_part(B));
    const Field f = B.D->field;
    const int nd = B.D->dim;
    // Right coaction of B acting on the second tensor factor.
    Mat big = Mat::kron(Mat::identity(f, N.dim), B.right_coaction) * base.incl;
    // Reindex N (x) (B (x) D) = (N (x) B) (x) D is automatic in flat layout.
    Mat rho = factor_through_injection(big, Mat::kron(base.incl, Mat::identity(f, nd)));
    if (incl_out) *incl_out = base.incl;
    Comodule out{B.D, Side::Right, base.space.dim(), rho};
    ValidationResult v = validate_comodule(out);
    require(v.ok, "cotensor_comodule_right: induced coaction invalid: " + v.summary());
    return out;
}

Bicomodule cotensor_bicomodule(const Bicomodule& A, const Bicomodule& B, Mat* incl_out) {
    require(A.D == B.C, "cotensor_bicomodule: middle coalgebras differ");
    Mat incl;
    Comodule l = cotensor_comodule(A, left_part(B), &incl);
    Comodule r = cotensor_comodule_right(right_part(A), B, nullptr);
    require(l.dim == r.dim, "cotensor_bicomodule: inconsistent underlying spaces");
    if (incl_out) *incl_out = incl;
    Bicomodule out{A.C, B.D, l.dim, l.coaction, r.coaction};
    ValidationResult v = validate_bicomodule(out);
    require(v.ok, "cotensor_bicomodule: " + v.summary());
    return out;
}

Comodule contratensor_comodule(const Bicomodule& B, const Contramodule& P, Mat* proj_out) {
    CokerResult base = contratensor_space(right_part(B), P);
    const Field f = B.C->field;
    const int nc = B.C->dim;
    Mat big = Mat::kron(Mat::identity(f, nc), base.proj) *
              Mat::kron(B.left_coaction, Mat::identity(f, P.dim));
    Mat rho = factor_through_surjection(big, base.proj);
    if (proj_out) *proj_out = base.proj;
    Comodule out{B.C, Side::Left, base.dim, rho};
    ValidationResult v = validate_comodule(out);
    require(v.ok, "contratensor_comodule: induced coaction invalid: " + v.summary());
    return out;
}

Contramodule cohom_contramodule(const Bicomodule& B, const Contramodule& P, Mat* proj_out) {
    CokerResult base = cohom_space(left_part(B), P);
    const Field f = B.D->field;
    const int nd = B.D->dim;
    const int k = B.dim;
    const int p = P.dim;
    // Left D-contramodule structure on Hom(B, P) = B^* (x) P coming from the
    // right D-comodule structure of B.
    Mat pi_big(f, k * p, nd * k * p);
    for (int b = 0; b < k; ++b)
        for (int bp = 0; bp < k; ++bp)
            for (int u = 0; u < nd; ++u) {
                const Scalar& c = B.right_coaction.at(bp * nd + u, b);
                if (sgn(c) == 0) continue;
                for (int a = 0; a < p; ++a)
                    pi_big.set(b * p + a, u * (k * p) + bp * p + a, c);
            }
    Mat pi = factor_through_surjection(base.proj * pi_big,
                                       Mat::kron(Mat::identity(f, nd), base.proj));
    if (proj_out) *proj_out = base.proj;
    Contramodule out{B.D, base.dim, pi};
    ValidationResult v = validate_contramodule(out);
    require(v.ok, "cohom_contramodule: induced structure invalid: " + v.summary());
    return out;
}

Contramodule hom_comod_contra(const Bicomodule& K, const Comodule& M, Mat* basis_out) {
    require(M.side == Side::Left && M.C == K.C, "hom_comod_contra: incompatible comodule");
    SubspaceBasis homs = hom_comod(left_part(K), M);
    const Field f = K.C->field;
    const int nd = K.D->dim;
    const int k = K.dim;
    const int m = M.dim;
    const int p = homs.dim();
    Mat incl(f, k * m, p);
    // Column t is the flattened morphism phi_t in K^* (x) M coordinates:
    // entry (b*m + a) is phi_t[a][b].
    for (int t = 0; t < p; ++t)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < k; ++b) incl.set(b * m + a, t, homs.vectors.at(t, a * k + b));
    // (f.phi)(x) = phi(x_(0) f(x_(1))): precomposition with the right action.
    Mat pi_big(f, k * m, nd * k * m);
    for (int b = 0; b < k; ++b)
        for (int bp = 0; bp < k; ++bp)
            for (int u = 0; u < nd; ++u) {
                const Scalar& c = K.right_coaction.at(b * nd + u, bp);
                if (sgn(c) == 0) continue;
                for (int a = 0; a < m; ++a)
                    pi_big.set(bp * m + a, u * (k * m) + b * m + a, c);
            }
    Mat pi = factor_through_injection(pi_big * Mat::kron(Mat::identity(f, nd), incl), incl);
    if (basis_out) *basis_out = incl;
    Contramodule out{K.D, p, pi};
    ValidationResult v = validate_contramodule(out);
    require(v.ok, "hom_comod_contra: induced structure invalid: " + v.summary());
    return out;
}

Mat contratensor_map(const Bicomodule& K, const Contramodule& P, const Contramodule& Pp,
                     const Mat& h) {
    require(is_contra_morphism(P, Pp, h), "contratensor_map: not a contramodule morphism");
    Mat proj_src, proj_tgt;
    Comodule src = contratensor_comodule(K, P, &proj_src);
    Comodule tgt = contratensor_comodule(K, Pp, &proj_tgt);
    Mat big = proj_tgt * Mat::kron(Mat::identity(K.C->field, K.dim), h);
    Mat out = factor_through_surjection(big, proj_src);
    require(is_comodule_morphism(src, tgt, out), "contratensor_map: induced map is not a morphism");
    return out;
}

Mat hom_comod_contra_map(const Bicomodule& K, const Comodule& M, const Comodule& Mp, const Mat& g) {
    require(is_comodule_morphism(M, Mp, g), "hom_comod_contra_map: not a comodule morphism");
    Mat basis_src, basis_tgt;
    Contramodule src = hom_comod_contra(K, M, &basis_src);
    Contramodule tgt = hom_comod_contra(K, Mp, &basis_tgt);
    Mat big = Mat::kron(Mat::identity(K.C->field, K.dim), g) * basis_src;
    Mat out = factor_through_injection(big, basis_tgt);
    require(is_contra_morphism(src, tgt, out), "hom_comod_contra_map: induced map is not a morphism");
    return out;
}

Mat contratensor_first_map(const Bicomodule& K, const Bicomodule& K2, const Mat& h,
                           const Contramodule& P) {
    require(is_bicomodule_morphism(K, K2, h), "contratensor_first_map: not a bicomodule morphism");
    Mat proj_src, proj_tgt;
    Comodule src = contratensor_comodule(K, P, &proj_src);
    Comodule tgt = contratensor_comodule(K2, P, &proj_tgt);
    Mat big = proj_tgt * Mat::kron(h, Mat::identity(K.C->field, P.dim));
    Mat out = factor_through_surjection(big, proj_src);
    require(is_comodule_morphism(src, tgt, out),
            "contratensor_first_map: induced map is not a morphism");
    return out;
}

Mat hom_comod_contra_first_map(const Bicomodule& K, const Bicomodule& K2, const Mat& h,
                               const Comodule& M) {
    require(is_bicomodule_morphism(K, K2, h),
            "hom_comod_contra_first_map: not a bicomodule morphism");
    Mat basis_src, basis_tgt;
    Contramodule src = hom_comod_contra(K2, M, &basis_src);
    Contramodule tgt = hom_comod_contra(K, M, &basis_tgt);
    Mat big = Mat::kron(h.transpose(), Mat::identity(K.C->field, M.dim)) * basis_src;
    Mat out = factor_through_injection(big, basis_tgt);
    require(is_contra_morphism(src, tgt, out),
            "hom_comod_contra_first_map: induced map is not a morphism");
    return out;
}

Mat adjoint_map(const Bicomodule& K, const Contramodule& P, const Comodule& M, const Mat& g) {
    Mat proj;
    Comodule Phi = contratensor_comodule(K, P, &proj);
    require(is_comodule_morphism(Phi, M, g), "adjoint_map: input is not a comodule morphism");
    Mat basis;
    Contramodule Psi = hom_comod_contra(K, M, &basis);
    const int k = K.dim;
    const int m = M.dim;
    const int p = P.dim;
    Mat gt = g * proj;  // m x (k*p)
    Mat G(K.C->field, k * m, p);
    for (int b = 0; b < k; ++b)
        for (int a = 0; a < m; ++a)
            for (int c = 0; c < p; ++c) G.set(b * m + a, c, gt.at(a, b * p + c));
    Mat h = factor_through_injection(G, basis);
    require(is_contra_morphism(P, Psi, h), "adjoint_map: transfer is not a contramodule morphism");
    return h;
}

Mat adjoint_map_back(const Bicomodule& K, const Contramodule& P, const Comodule& M, const Mat& h) {
    Mat basis;
    Contramodule Psi = hom_comod_contra(K, M, &basis);
    require(is_contra_morphism(P, Psi, h), "adjoint_map_back: input is not a contramodule morphism");
    Mat proj;
    Comodule Phi = contratensor_comodule(K, P, &proj);
    const int k = K.dim;
    const int m = M.dim;
    const int p = P.dim;
    Mat H = basis * h;  // (k*m) x p
    Mat gt(K.C->field, m, k * p);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < p; ++c) gt.set(a, b * p + c, H.at(b * m + a, c));
    Mat g = factor_through_surjection(gt, proj);
    require(is_comodule_morphism(Phi, M, g),
            "adjoint_map_back: transfer is not a comodule morphism");
    return g;
}

Mat adjunction_counit(const Bicomodule& K, const Comodule& M) {
    Contramodule Psi = hom_comod_contra(K, M, nullptr);
    return adjoint_map_back(K, Psi, M, Mat::identity(K.C->field, Psi.dim));
}

Mat adjunction_unit(const Bicomodule& K, const Contramodule& P) {
    Comodule Phi = contratensor_comodule(K, P, nullptr);
    return adjoint_map(K, P, Phi, Mat::identity(K.C->field, Phi.dim));
}

Comodule phi_C(const CoalgebraPtr& C, const Contramodule& P, Mat* proj_out) {
    require(P.D == C, "phi_C: contramodule over a different coalgebra");
    return contratensor_comodule(regular_bicomodule(C), P, proj_out);
}

Contramodule psi_C(const CoalgebraPtr& C, const Comodule& M, Mat* basis_out) {
    require(M.C == C && M.side == Side::Left, "psi_C: needs a left comodule over C");
    return hom_comod_contra(regular_bicomodule(C), M, basis_out);
}

}  // namespace cotra
