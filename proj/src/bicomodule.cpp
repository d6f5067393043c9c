#include "cotra/bicomodule.hpp"

namespace cotra {

ValidationResult validate_bicomodule(const Bicomodule& B) {
    ValidationResult res;
    require(B.C != nullptr && B.D != nullptr, "validate_bicomodule: null coalgebra");
    ValidationResult l = validate_comodule(left_part(B));
    for (const auto& f : l.failures) res.fail("left_" + f.axiom, f.witness);
    ValidationResult r = validate_comodule(right_part(B));
    for (const auto& f : r.failures) res.fail("right_" + f.axiom, f.witness);
    if (!res.ok) return res;
    const Mat Ic = Mat::identity(B.C->field, B.C->dim);
    const Mat Id = Mat::identity(B.D->field, B.D->dim);
    Mat lhs = Mat::kron(Ic, B.right_coaction) * B.left_coaction;
    Mat rhs = Mat::kron(B.left_coaction, Id) * B.right_coaction;
    if (lhs != rhs) res.fail("coaction_commutation", "left and right coactions do not commute");
    return res;
}

Comodule left_part(const Bicomodule& B) { return Comodule{B.C, Side::Left, B.dim, B.left_coaction}; }

Comodule right_part(const Bicomodule& B) {
    return Comodule{B.D, Side::Right, B.dim, B.right_coaction};
}

Bicomodule bicomodule_from_parts(const Comodule& left, const Comodule& right) {
    require(left.side == Side::Left && right.side == Side::Right,
            "bicomodule_from_parts: sides are wrong");
    require(left.dim == right.dim, "bicomodule_from_parts: dimension mismatch");
    Bicomodule B{left.C, right.C, left.dim, left.coaction, right.coaction};
    ValidationResult v = validate_bicomodule(B);
    require(v.ok, "bicomodule_from_parts: " + v.summary());
    return B;
}

Bicomodule regular_bicomodule(const CoalgebraPtr& C) {
    require(C != nullptr, "regular_bicomodule: null coalgebra");
    return Bicomodule{C, C, C->dim, C->comult, C->comult};
}

Bicomodule cofree_bicomodule(const CoalgebraPtr& C, const CoalgebraPtr& D, int k) {
    require(C != nullptr && D != nullptr, "cofree_bicomodule: null coalgebra");
    require(k >= 0, "cofree_bicomodule: negative fiber dimension");
    const Field f = C->field;
    require(f == D->field, "cofree_bicomodule: mixed fields");
    Bicomodule B;
    B.C = C;
    B.D = D;
    B.dim = C->dim * k * D->dim;
    B.left_coaction = Mat::kron(C->comult, Mat::identity(f, k * D->dim));
    B.right_coaction = Mat::kron(Mat::identity(f, C->dim * k), D->comult);
    return B;
}

SubspaceBasis hom_bicomod(const Bicomodule& M, const Bicomodule& N) {
    require(M.C == N.C && M.D == N.D, "hom_bicomod: incompatible bicomodules");
    Mat left_lhs = op_lmul(N.left_coaction, N.dim, M.dim);
    Mat left_rhs = op_mid_left(M.C->dim, M.left_coaction, N.dim, M.dim);
    Mat right_lhs = op_lmul(N.right_coaction, N.dim, M.dim);
    Mat right_rhs = op_mid_right(M.right_coaction, M.D->dim, N.dim, M.dim);
    return solve_vec_system({left_lhs - left_rhs, right_lhs - right_rhs}, N.dim, M.dim);
}

bool is_bicomodule_morphism(const Bicomodule& M, const Bicomodule& N, const Mat& f) {
    return is_comodule_morphism(left_part(M), left_part(N), f) &&
           is_comodule_morphism(right_part(M), right_part(N), f);
}

SubBicomodule sub_bicomodule(const Bicomodule& B, const SubspaceBasis& U) {
    SubComodule l = sub_comodule(left_part(B), U);
    SubComodule r = sub_comodule(right_part(B), U);
    SubBicomodule out;
    out.bicomodule = Bicomodule{B.C, B.D, U.dim(), l.comodule.coaction, r.comodule.coaction};
    out.incl = l.incl;
    return out;
}

QuotBicomodule quot_bicomodule(const Bicomodule& B, const SubspaceBasis& U) {
    QuotComodule l = quot_comodule(left_part(B), U);
    QuotComodule r = quot_comodule(right_part(B), U);
    QuotBicomodule out;
    out.bicomodule = Bicomodule{B.C, B.D, l.comodule.dim, l.comodule.coaction, r.comodule.coaction};
    out.proj = l.proj;
    return out;
}

}  // namespace cotra
