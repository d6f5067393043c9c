#include "cotra/semialgebra.hpp"

#include <algorithm>

#include "cotra/rng.hpp"

namespace cotra {

namespace {

// Matching condition between two adjacent tensor factors of a chain
// pre (x) A (x) B (x) post: the right coaction of A against the left
// coaction of B over their shared coalgebra.
Mat pair_condition(const Field& f, int pre, const Mat& rho_r, int a, const Mat& rho_l, int b,
                   int post) {
    Mat T = Mat::kron(rho_r, Mat::identity(f, b)) - Mat::kron(Mat::identity(f, a), rho_l);
    return Mat::kron(Mat::kron(Mat::identity(f, pre), T), Mat::identity(f, post));
}

// Coordinates of a joint triple cotensor inside pre (x) (pair cotensor) (x) post.
Mat through_pair(const Field& f, const Mat& incl_joint, int pre, const Mat& incl_pair, int post) {
    Mat big = Mat::kron(Mat::kron(Mat::identity(f, pre), incl_pair), Mat::identity(f, post));
    return factor_through_injection(incl_joint, big);
}

SubspaceBasis joint3(const Mat& cond12, const Mat& cond23) {
    return kernel(Mat::vstack(cond12, cond23));
}

// Functional-side layout change for composing Cohom functors: sends the
// outer factor of X^* (x) (Y^* (x) P) to the second tensor slot of
// (Y (x) X)^* (x) P, the orientation under which the composition descends
// to the cotensor.
Mat curry_swap(const Field& f, int x, int y, int p) {
    Mat S(f, y * x * p, x * y * p);
    for (int j = 0; j < x; ++j)
        for (int i = 0; i < y; ++i)
            for (int a = 0; a < p; ++a)
                S.set_long((i * x + j) * p + a, j * (y * p) + i * p + a, 1);
    return S;
}

Mat combine_basis(const Field& f, const SubspaceBasis& homs, const Mat& coeffs, int rows,
                  int cols) {
    Mat out = Mat::zero(f, rows, cols);
    for (int j = 0; j < homs.dim(); ++j) {
        const Scalar& c = coeffs.at(j, 0);
        if (f.is_zero(c)) continue;
        out = out + Mat::unflatten(homs.vectors.row(j), rows, cols).scaled(c);
    }
    return out;
}

}  // namespace

SemialgebraPtr make_semialgebra(CoalgebraPtr C, Bicomodule carrier, Mat semiunit, Mat semimult) {
    require(C != nullptr, "make_semialgebra: null coalgebra");
    require(carrier.C == C && carrier.D == C, "make_semialgebra: carrier must be a C-C-bicomodule");
    auto S = std::make_shared<Semialgebra>();
    S->C = C;
    S->carrier = carrier;
    S->square = cotensor_space(right_part(carrier), left_part(carrier));
    require(semiunit.rows() == carrier.dim && semiunit.cols() == C->dim,
            "make_semialgebra: semiunit shape");
    require(semimult.rows() == carrier.dim && semimult.cols() == S->square.space.dim(),
            "make_semialgebra: semimult shape");
    S->semiunit = semiunit;
    S->semimult = semimult;
    S->left_retraction = injective_splitting(left_part(carrier));
    S->right_retraction = injective_splitting(right_part(carrier));
    return S;
}

SemialgebraValidation validate_semialgebra(const Semialgebra& S) {
    SemialgebraValidation out;
    out.injective_left = S.left_retraction.has_value();
    out.injective_right = S.right_retraction.has_value();
    ValidationResult& v = out.base;
    const Field& f = S.field();
    const int n = S.C->dim;
    const int sd = S.dim();
    ValidationResult bc = validate_bicomodule(S.carrier);
    for (const auto& fl : bc.failures) v.fail("semialgebra.carrier." + fl.axiom, fl.witness);
    if (!v.ok) return out;
    if (S.semiunit.rows() != sd || S.semiunit.cols() != n) {
        v.fail("semialgebra.shape", "semiunit");
        return out;
    }
    const Mat& incl = S.square.incl;
    if (S.semimult.rows() != sd || S.semimult.cols() != S.square.space.dim()) {
        v.fail("semialgebra.shape", "semimult");
        return out;
    }
    const bool unit_lin = is_bicomodule_morphism(regular_bicomodule(S.C), S.carrier, S.semiunit);
    if (!unit_lin) v.fail("semialgebra.unit_bicolinear", "semiunit is not a bicomodule morphism");
    Bicomodule sq = cotensor_bicomodule(S.carrier, S.carrier);
    const bool mult_lin = is_bicomodule_morphism(sq, S.carrier, S.semimult);
    if (!mult_lin) v.fail("semialgebra.mult_bicolinear", "semimult is not a bicomodule morphism");
    const Mat& rl = S.carrier.left_coaction;
    const Mat& rr = S.carrier.right_coaction;
    const Mat Is = Mat::identity(f, sd);
    if (mult_lin) {
        Mat cond12 = pair_condition(f, 1, rr, sd, rl, sd, sd);
        Mat cond23 = pair_condition(f, sd, rr, sd, rl, sd, 1);
        Mat inclJ = joint3(cond12, cond23).inclusion();
        Mat c12 = through_pair(f, inclJ, 1, incl, sd);
        Mat c23 = through_pair(f, inclJ, sd, incl, 1);
        Mat a1 = S.semimult * factor_through_injection(Mat::kron(S.semimult, Is) * c12, incl);
        Mat a2 = S.semimult * factor_through_injection(Mat::kron(Is, S.semimult) * c23, incl);
        if (a1 != a2) v.fail("semialgebra.assoc", "triple products differ on the joint cotensor");
    }
    if (unit_lin) {
        Mat ul = factor_through_injection(Mat::kron(S.semiunit, Is) * rl, incl);
        if (S.semimult * ul != Is) v.fail("semialgebra.left_unit", "m(e (cot) id) is not id");
        Mat ur = factor_through_injection(Mat::kron(Is, S.semiunit) * rr, incl);
        if (S.semimult * ur != Is) v.fail("semialgebra.right_unit", "m(id (cot) e) is not id");
    }
    return out;
}

SemialgebraPtr trivial_semialgebra(const CoalgebraPtr& C) {
    require(C != nullptr, "trivial_semialgebra: null coalgebra");
    Bicomodule carrier = regular_bicomodule(C);
    CotensorResult sq = cotensor_space(right_part(carrier), left_part(carrier));
    Mat mult = Mat::kron(C->counit, Mat::identity(C->field, C->dim)) * sq.incl;
    SemialgebraPtr S =
        make_semialgebra(C, carrier, Mat::identity(C->field, C->dim), mult);
    SemialgebraValidation v = validate_semialgebra(*S);
    require(v.base.ok, "trivial_semialgebra: " + v.base.summary());
    return S;
}

namespace {

int group_identity(const std::vector<std::vector<int>>& mult) {
    const int n = static_cast<int>(mult.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = mult[e][g] == g && mult[g][e] == g;
        if (ok) return e;
    }
    throw EngineError("build_group_semialgebra: multiplication table has no identity");
}

}  // namespace

SemialgebraPtr build_group_semialgebra(const Field& f, const std::vector<std::vector<int>>& mult,
                                       const std::vector<int>& subgroup, CoalgebraPtr* C_out) {
    const int n = static_cast<int>(mult.size());
    require(n > 0, "build_group_semialgebra: empty table");
    for (const auto& row : mult) {
        require(static_cast<int>(row.size()) == n, "build_group_semialgebra: table not square");
        for (int x : row) require(0 <= x && x < n, "build_group_semialgebra: entry out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                require(mult[mult[a][b]][c] == mult[a][mult[b][c]],
                        "build_group_semialgebra: table not associative");
    const int e = group_identity(mult);
    std::vector<int> inv(n, -1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (mult[g][h] == e) inv[g] = h;
    for (int g = 0; g < n; ++g) require(inv[g] >= 0, "build_group_semialgebra: no inverse");

    std::vector<int> H = subgroup;
    std::sort(H.begin(), H.end());
    H.erase(std::unique(H.begin(), H.end()), H.end());
    const int hs = static_cast<int>(H.size());
    require(hs > 0, "build_group_semialgebra: empty subgroup");
    std::vector<int> hidx(n, -1);
    for (int i = 0; i < hs; ++i) {
        require(0 <= H[i] && H[i] < n, "build_group_semialgebra: subgroup element out of range");
        hidx[H[i]] = i;
    }
    require(hidx[e] >= 0, "build_group_semialgebra: subgroup misses the identity");
    std::vector<std::vector<int>> subtable(hs, std::vector<int>(hs));
    for (int i = 0; i < hs; ++i)
        for (int j = 0; j < hs; ++j) {
            int prod = mult[H[i]][H[j]];
            require(hidx[prod] >= 0, "build_group_semialgebra: subgroup not closed");
            subtable[i][j] = hidx[prod];
        }
    require(n % hs == 0, "build_group_semialgebra: subgroup order does not divide group order");

    CoalgebraPtr C = std::make_shared<const Coalgebra>(build_group_functions(f, subtable));

    // Coactions by left and right translation of H on G.
    Mat rho_l(f, hs * n, n);
    Mat rho_r(f, n * hs, n);
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < hs; ++i) {
            const int h = H[i];
            rho_l.set_long(i * n + mult[inv[h]][g], g, 1);
            rho_r.set_long(mult[g][inv[h]] * hs + i, g, 1);
        }
    Bicomodule carrier{C, C, n, rho_l, rho_r};
    ValidationResult bv = validate_bicomodule(carrier);
    require(bv.ok, "build_group_semialgebra: " + bv.summary());

    Mat unit = Mat::zero(f, n, hs);
    for (int i = 0; i < hs; ++i) unit.set_long(H[i], i, 1);

    CotensorResult sq = cotensor_space(right_part(carrier), left_part(carrier));
    require(sq.space.dim() * hs == n * n,
            "build_group_semialgebra: cotensor square has unexpected dimension");

    // Transversal of the left cosets gH; the multiplication sums, over the
    // transversal, the unique matching decomposition of each product fiber.
    std::vector<int> transversal;
    std::vector<bool> covered(n, false);
    for (int g = 0; g < n; ++g) {
        if (covered[g]) continue;
        transversal.push_back(g);
        for (int i = 0; i < hs; ++i) covered[mult[g][H[i]]] = true;
    }
    Mat m(f, n, sq.space.dim());
    for (int c = 0; c < n; ++c)
        for (int j = 0; j < sq.space.dim(); ++j) {
            Scalar acc(0);
            for (int t : transversal) acc = acc + sq.incl.at(t * n + mult[inv[t]][c], j);
            m.set(c, j, acc);
        }

    SemialgebraPtr S = make_semialgebra(C, carrier, unit, m);
    SemialgebraValidation v = validate_semialgebra(*S);
    require(v.base.ok, "build_group_semialgebra: " + v.base.summary());
    require(v.injective_left && v.injective_right,
            "build_group_semialgebra: group functions should be injective over the subgroup");
    if (C_out) *C_out = C;
    return S;
}

ValidationResult validate_semimodule(const Semimodule& M) {
    ValidationResult v;
    if (!M.S) {
        v.fail("semimodule.shape", "missing semialgebra");
        return v;
    }
    const Field& f = M.S->field();
    const int sd = M.S->dim();
    const int m = M.co.dim;
    if (M.co.side != Side::Left || M.co.C != M.S->C) {
        v.fail("semimodule.shape", "underlying comodule must be a left comodule over the base");
        return v;
    }
    ValidationResult cv = validate_comodule(M.co);
    for (const auto& fl : cv.failures) v.fail("semimodule.comodule." + fl.axiom, fl.witness);
    if (!v.ok) return v;
    CotensorResult SM = cotensor_space(right_part(M.S->carrier), M.co);
    if (M.act.rows() != m || M.act.cols() != SM.space.dim()) {
        v.fail("semimodule.shape", "action matrix");
        return v;
    }
    Comodule SMco = cotensor_comodule(M.S->carrier, M.co);
    const bool lin = is_comodule_morphism(SMco, M.co, M.act);
    if (!lin) v.fail("semimodule.act_colinear", "action is not a comodule morphism");
    Mat u = factor_through_injection(Mat::kron(M.S->semiunit, Mat::identity(f, m)) * M.co.coaction,
                                     SM.incl);
    if (M.act * u != Mat::identity(f, m)) v.fail("semimodule.unit", "unit law fails");
    if (lin) {
        const Mat& rr = M.S->carrier.right_coaction;
        const Mat& rl = M.S->carrier.left_coaction;
        Mat cond12 = pair_condition(f, 1, rr, sd, rl, sd, m);
        Mat cond23 = pair_condition(f, sd, rr, sd, M.co.coaction, m, 1);
        Mat inclJ = joint3(cond12, cond23).inclusion();
        Mat c12 = through_pair(f, inclJ, 1, M.S->square.incl, m);
        Mat c23 = through_pair(f, inclJ, sd, SM.incl, 1);
        Mat a1 = M.act * factor_through_injection(
                             Mat::kron(M.S->semimult, Mat::identity(f, m)) * c12, SM.incl);
        Mat a2 = M.act *
                 factor_through_injection(Mat::kron(Mat::identity(f, sd), M.act) * c23, SM.incl);
        if (a1 != a2) v.fail("semimodule.assoc", "action does not associate");
    }
    return v;
}

ValidationResult validate_right_semimodule(const RightSemimodule& N) {
    ValidationResult v;
    if (!N.S) {
        v.fail("right_semimodule.shape", "missing semialgebra");
        return v;
    }
    const Field& f = N.S->field();
    const int sd = N.S->dim();
    const int r = N.co.dim;
    if (N.co.side != Side::Right || N.co.C != N.S->C) {
        v.fail("right_semimodule.shape", "underlying comodule must be a right comodule");
        return v;
    }
    ValidationResult cv = validate_comodule(N.co);
    for (const auto& fl : cv.failures) v.fail("right_semimodule.comodule." + fl.axiom, fl.witness);
    if (!v.ok) return v;
    CotensorResult NS = cotensor_space(N.co, left_part(N.S->carrier));
    if (N.act.rows() != r || N.act.cols() != NS.space.dim()) {
        v.fail("right_semimodule.shape", "action matrix");
        return v;
    }
    Comodule NSco = cotensor_comodule_right(N.co, N.S->carrier);
    const bool lin = is_comodule_morphism(NSco, N.co, N.act);
    if (!lin) v.fail("right_semimodule.act_colinear", "action is not a comodule morphism");
    Mat u = factor_through_injection(Mat::kron(Mat::identity(f, r), N.S->semiunit) * N.co.coaction,
                                     NS.incl);
    if (N.act * u != Mat::identity(f, r)) v.fail("right_semimodule.unit", "unit law fails");
    if (lin) {
        const Mat& rr = N.S->carrier.right_coaction;
        const Mat& rl = N.S->carrier.left_coaction;
        Mat cond12 = pair_condition(f, 1, N.co.coaction, r, rl, sd, sd);
        Mat cond23 = pair_condition(f, r, rr, sd, rl, sd, 1);
        Mat inclJ = joint3(cond12, cond23).inclusion();
        Mat c12 = through_pair(f, inclJ, 1, NS.incl, sd);
        Mat c23 = through_pair(f, inclJ, r, N.S->square.incl, 1);
        Mat a1 = N.act *
                 factor_through_injection(Mat::kron(N.act, Mat::identity(f, sd)) * c12, NS.incl);
        Mat a2 = N.act * factor_through_injection(
                             Mat::kron(Mat::identity(f, r), N.S->semimult) * c23, NS.incl);
        if (a1 != a2) v.fail("right_semimodule.assoc", "action does not associate");
    }
    return v;
}

ValidationResult validate_semicontramodule(const Semicontramodule& P) {
    ValidationResult v;
    if (!P.S) {
        v.fail("semicontra.shape", "missing semialgebra");
        return v;
    }
    const Field& f = P.S->field();
    const int sd = P.S->dim();
    const int p = P.contra.dim;
    if (P.contra.D != P.S->C) {
        v.fail("semicontra.shape", "underlying contramodule over the wrong coalgebra");
        return v;
    }
    ValidationResult cv = validate_contramodule(P.contra);
    for (const auto& fl : cv.failures) v.fail("semicontra.contramodule." + fl.axiom, fl.witness);
    if (!v.ok) return v;
    CokerResult CH = cohom_space(left_part(P.S->carrier), P.contra);
    if (P.cohom.dim != CH.dim || P.cohom.proj != CH.proj) {
        v.fail("semicontra.presentation", "stored Cohom presentation is not the canonical one");
        return v;
    }
    if (P.sact.rows() != CH.dim || P.sact.cols() != p) {
        v.fail("semicontra.shape", "coaction matrix");
        return v;
    }
    Contramodule CC = cohom_contramodule(P.S->carrier, P.contra);
    const bool lin = is_contra_morphism(P.contra, CC, P.sact);
    if (!lin) v.fail("semicontra.contralinear", "coaction is not a contramodule morphism");

    const Mat Ip = Mat::identity(f, p);
    // Counit law through Cohom(C, P) = P.
    CokerResult CohomCP = cohom_space(regular_comodule(P.S->C, Side::Left), P.contra);
    Mat e2 = factor_through_surjection(
        CohomCP.proj * Mat::kron(P.S->semiunit.transpose(), Ip), CH.proj);
    Mat uCP = CohomCP.proj * Mat::kron(P.S->C->counit.transpose(), Ip);
    require(is_invertible(uCP), "validate_semicontramodule: Cohom(C,P) != P");
    if (inverse(uCP) * e2 * P.sact != Ip) v.fail("semicontra.counit", "counit law fails");

    if (lin) {
        // Coassociativity through the composition map into Cohom(S cot S, P).
        Bicomodule sq = cotensor_bicomodule(P.S->carrier, P.S->carrier);
        const Mat& inclSS = P.S->square.incl;
        CokerResult CohomSSP = cohom_space(left_part(sq), P.contra);
        Mat r1 = factor_through_surjection(
                     CohomSSP.proj * Mat::kron(P.S->semimult.transpose(), Ip), CH.proj) *
                 P.sact;
        CokerResult CohomS_CC = cohom_space(left_part(P.S->carrier), CC);
        Mat cnu = factor_through_surjection(
            CohomS_CC.proj * Mat::kron(Mat::identity(f, sd), P.sact), CH.proj);
        Mat restrict = CohomSSP.proj * Mat::kron(inclSS.transpose(), Ip) *
                       curry_swap(f, sd, sd, p);
        require((restrict * Mat::kron(Mat::identity(f, sd), kernel(CH.proj).inclusion()))
                    .is_zero(),
                "validate_semicontramodule: composition map depends on the section");
        Mat mu = factor_through_surjection(
            restrict * Mat::kron(Mat::identity(f, sd), section_of_surjection(CH.proj)),
            CohomS_CC.proj);
        Mat r2 = mu * cnu * P.sact;
        if (r1 != r2) v.fail("semicontra.assoc", "coaction does not coassociate");
    }
    return v;
}

ValidationResult validate_bisemimodule(const Bisemimodule& K) {
    ValidationResult v;
    if (!K.S || !K.T) {
        v.fail("bisemimodule.shape", "missing semialgebra");
        return v;
    }
    if (K.bi.C != K.S->C || K.bi.D != K.T->C) {
        v.fail("bisemimodule.shape", "bicomodule legs over the wrong coalgebras");
        return v;
    }
    ValidationResult bv = validate_bicomodule(K.bi);
    for (const auto& fl : bv.failures) v.fail("bisemimodule.bicomodule." + fl.axiom, fl.witness);
    if (!v.ok) return v;
    Semimodule left{K.S, left_part(K.bi), K.lact};
    ValidationResult lv = validate_semimodule(left);
    for (const auto& fl : lv.failures) v.fail("bisemimodule.left." + fl.axiom, fl.witness);
    RightSemimodule right{K.T, right_part(K.bi), K.ract};
    ValidationResult rv = validate_right_semimodule(right);
    for (const auto& fl : rv.failures) v.fail("bisemimodule.right." + fl.axiom, fl.witness);
    if (!v.ok) return v;
    if (!is_bicomodule_morphism(cotensor_bicomodule(K.S->carrier, K.bi), K.bi, K.lact))
        v.fail("bisemimodule.lact_bicolinear", "left action not right colinear");
    if (!is_bicomodule_morphism(cotensor_bicomodule(K.bi, K.T->carrier), K.bi, K.ract))
        v.fail("bisemimodule.ract_bicolinear", "right action not left colinear");
    if (!v.ok) return v;

    const Field& f = K.S->field();
    const int sd = K.S->dim();
    const int kd = K.bi.dim;
    const int td = K.T->dim();
    Mat cond12 = pair_condition(f, 1, K.S->carrier.right_coaction, sd, K.bi.left_coaction, kd, td);
    Mat cond23 = pair_condition(f, sd, K.bi.right_coaction, kd, K.T->carrier.left_coaction, td, 1);
    Mat inclJ = joint3(cond12, cond23).inclusion();
    Mat inclSK = cotensor_space(right_part(K.S->carrier), left_part(K.bi)).incl;
    Mat inclKT = cotensor_space(right_part(K.bi), left_part(K.T->carrier)).incl;
    Mat c12 = through_pair(f, inclJ, 1, inclSK, td);
    Mat c23 = through_pair(f, inclJ, sd, inclKT, 1);
    Mat b1 = K.lact *
             factor_through_injection(Mat::kron(Mat::identity(f, sd), K.ract) * c23, inclSK);
    Mat b2 = K.ract *
             factor_through_injection(Mat::kron(K.lact, Mat::identity(f, td)) * c12, inclKT);
    if (b1 != b2) v.fail("bisemimodule.commute", "semiactions do not commute");
    return v;
}

Semimodule regular_semimodule(const SemialgebraPtr& S) {
    require(S != nullptr, "regular_semimodule: null semialgebra");
    return Semimodule{S, left_part(S->carrier), S->semimult};
}

RightSemimodule regular_right_semimodule(const SemialgebraPtr& S) {
    require(S != nullptr, "regular_right_semimodule: null semialgebra");
    return RightSemimodule{S, right_part(S->carrier), S->semimult};
}

Bisemimodule regular_bisemimodule(const SemialgebraPtr& S) {
    require(S != nullptr, "regular_bisemimodule: null semialgebra");
    return Bisemimodule{S, S, S->carrier, S->semimult, S->semimult};
}

Semimodule induced_semimodule(const SemialgebraPtr& S, const Comodule& L) {
    require(S != nullptr, "induced_semimodule: null semialgebra");
    require(L.side == Side::Left && L.C == S->C, "induced_semimodule: incompatible comodule");
    const Field& f = S->field();
    const int sd = S->dim();
    const int l = L.dim;
    Mat inclSL;
    Comodule M0 = cotensor_comodule(S->carrier, L, &inclSL);
    const Mat& rr = S->carrier.right_coaction;
    const Mat& rl = S->carrier.left_coaction;
    Mat cond12 = pair_condition(f, 1, rr, sd, rl, sd, l);
    Mat cond23 = pair_condition(f, sd, rr, sd, L.coaction, l, 1);
    Mat inclJ = joint3(cond12, cond23).inclusion();
    Mat c12 = through_pair(f, inclJ, 1, S->square.incl, l);
    Mat mstep = factor_through_injection(Mat::kron(S->semimult, Mat::identity(f, l)) * c12,
                                         inclSL);
    CotensorResult SM = cotensor_space(right_part(S->carrier), M0);
    Mat e = factor_through_injection(Mat::kron(Mat::identity(f, sd), inclSL) * SM.incl, inclJ);
    return Semimodule{S, M0, mstep * e};
}

RightSemimodule induced_right_semimodule(const SemialgebraPtr& S, const Comodule& N) {
    require(S != nullptr, "induced_right_semimodule: null semialgebra");
    require(N.side == Side::Right && N.C == S->C,
            "induced_right_semimodule: incompatible comodule");
    const Field& f = S->field();
    const int sd = S->dim();
    const int r = N.dim;
    Mat inclNS;
    Comodule N0 = cotensor_comodule_right(N, S->carrier, &inclNS);
    const Mat& rr = S->carrier.right_coaction;
    const Mat& rl = S->carrier.left_coaction;
    Mat cond12 = pair_condition(f, 1, N.coaction, r, rl, sd, sd);
    Mat cond23 = pair_condition(f, r, rr, sd, rl, sd, 1);
    Mat inclJ = joint3(cond12, cond23).inclusion();
    Mat c23 = through_pair(f, inclJ, r, S->square.incl, 1);
    Mat mstep = factor_through_injection(Mat::kron(Mat::identity(f, r), S->semimult) * c23,
                                         inclNS);
    CotensorResult NM = cotensor_space(N0, left_part(S->carrier));
    Mat e = factor_through_injection(Mat::kron(inclNS, Mat::identity(f, sd)) * NM.incl, inclJ);
    return RightSemimodule{S, N0, mstep * e};
}

SubSemimodule sub_semimodule(const Semimodule& M, const SubspaceBasis& U) {
    const SemialgebraPtr& S = M.S;
    const Field& f = S->field();
    const int sd = S->dim();
    SubComodule sc = sub_comodule(M.co, U);
    CotensorResult cotU = cotensor_space(right_part(S->carrier), sc.comodule);
    CotensorResult cotM = cotensor_space(right_part(S->carrier), M.co);
    Mat e = factor_through_injection(Mat::kron(Mat::identity(f, sd), sc.incl) * cotU.incl,
                                     cotM.incl);
    Mat act_u = factor_through_injection(M.act * e, sc.incl);
    return SubSemimodule{Semimodule{S, sc.comodule, act_u}, sc.incl};
}

QuotSemimodule quot_semimodule(const Semimodule& M, const SubspaceBasis& U) {
    const SemialgebraPtr& S = M.S;
    const Field& f = S->field();
    const int sd = S->dim();
    QuotComodule qc = quot_comodule(M.co, U);
    CotensorResult cotQ = cotensor_space(right_part(S->carrier), qc.comodule);
    CotensorResult cotM = cotensor_space(right_part(S->carrier), M.co);
    Mat t = factor_through_injection(Mat::kron(Mat::identity(f, sd), qc.proj) * cotM.incl,
                                     cotQ.incl);
    require(row_space(t).dim() == cotQ.space.dim(),
            "quot_semimodule: the cotensor square does not surject onto the quotient "
            "(is S an injective right C-comodule?)");
    Mat act_q = factor_through_surjection(qc.proj * M.act, t);
    return QuotSemimodule{Semimodule{S, qc.comodule, act_q}, qc.proj};
}

SubSemicontra sub_semicontramodule(const Semicontramodule& P, const SubspaceBasis& U) {
    const SemialgebraPtr& S = P.S;
    const Field& f = S->field();
    const int sd = S->dim();
    SubContramodule scp = sub_contramodule(P.contra, U);
    CokerResult chU = cohom_space(left_part(S->carrier), scp.contra);
    Mat ch_incl = factor_through_surjection(
        P.cohom.proj * Mat::kron(Mat::identity(f, sd), scp.incl), chU.proj);
    Mat sact_u = solve(ch_incl, P.sact * scp.incl);
    return SubSemicontra{Semicontramodule{S, scp.contra, chU, sact_u}, scp.incl};
}

QuotSemicontra quot_semicontramodule(const Semicontramodule& P, const SubspaceBasis& U) {
    const SemialgebraPtr& S = P.S;
    const Field& f = S->field();
    const int sd = S->dim();
    QuotContramodule qcp = quot_contramodule(P.contra, U);
    CokerResult chQ = cohom_space(left_part(S->carrier), qcp.contra);
    Mat ch_proj = factor_through_surjection(
        chQ.proj * Mat::kron(Mat::identity(f, sd), qcp.proj), P.cohom.proj);
    Mat sact_q = factor_through_surjection(ch_proj * P.sact, qcp.proj);
    return QuotSemicontra{Semicontramodule{S, qcp.contra, chQ, sact_q}, qcp.proj};
}

Semicontramodule coinduced_semicontramodule(const SemialgebraPtr& S, const Contramodule& Q) {
    require(S != nullptr, "coinduced_semicontramodule: null semialgebra");
    require(Q.D == S->C, "coinduced_semicontramodule: incompatible contramodule");
    const Field& f = S->field();
    const int sd = S->dim();
    const int q = Q.dim;
    Mat projR;
    Contramodule R0 = cohom_contramodule(S->carrier, Q, &projR);
    CokerResult CH = cohom_space(left_part(S->carrier), R0);
    Bicomodule sq = cotensor_bicomodule(S->carrier, S->carrier);
    CokerResult CohomSSQ = cohom_space(left_part(sq), Q);
    const Mat Iq = Mat::identity(f, q);
    Mat Cm = factor_through_surjection(CohomSSQ.proj * Mat::kron(S->semimult.transpose(), Iq),
                                       projR);
    Mat restrict = CohomSSQ.proj * Mat::kron(S->square.incl.transpose(), Iq) *
                   curry_swap(f, sd, sd, q);
    require((restrict * Mat::kron(Mat::identity(f, sd), kernel(projR).inclusion())).is_zero(),
            "coinduced_semicontramodule: composition map depends on the section");
    Mat mu = factor_through_surjection(
        restrict * Mat::kron(Mat::identity(f, sd), section_of_surjection(projR)), CH.proj);
    require(is_invertible(mu), "coinduced_semicontramodule: composition map not invertible");
    return Semicontramodule{S, R0, CH, inverse(mu) * Cm};
}

SubspaceBasis hom_semimodule(const Semimodule& L, const Semimodule& M) {
    require(L.S == M.S, "hom_semimodule: different semialgebras");
    const Field& f = L.S->field();
    const int n = L.S->C->dim;
    const int sd = L.S->dim();
    const int dl = L.co.dim;
    const int dm = M.co.dim;
    Mat inclL = cotensor_space(right_part(L.S->carrier), L.co).incl;
    Mat inclM = cotensor_space(right_part(L.S->carrier), M.co).incl;
    Mat colin = op_lmul(M.co.coaction, dm, dl) - op_mid_left(n, L.co.coaction, dm, dl);
    Mat A = M.act * retraction_of_injection(inclM);
    Mat inter = op_lmul(A, sd * dm, inclL.cols()) * op_mid_left(sd, inclL, dm, dl) -
                op_rmul(L.act, dm, dl);
    return solve_vec_system({colin, inter}, dm, dl);
}

bool is_semimodule_morphism(const Semimodule& L, const Semimodule& M, const Mat& g) {
    require(L.S == M.S, "is_semimodule_morphism: different semialgebras");
    if (g.rows() != M.co.dim || g.cols() != L.co.dim) return false;
    if (!is_comodule_morphism(L.co, M.co, g)) return false;
    const Field& f = L.S->field();
    const int sd = L.S->dim();
    Mat inclL = cotensor_space(right_part(L.S->carrier), L.co).incl;
    Mat inclM = cotensor_space(right_part(L.S->carrier), M.co).incl;
    Mat lift = factor_through_injection(Mat::kron(Mat::identity(f, sd), g) * inclL, inclM);
    return M.act * lift == g * L.act;
}

SubspaceBasis hom_semicontra(const Semicontramodule& P, const Semicontramodule& Q) {
    require(P.S == Q.S, "hom_semicontra: different semialgebras");
    const Field& f = P.S->field();
    const int n = P.S->C->dim;
    const int sd = P.S->dim();
    const int p = P.contra.dim;
    const int q = Q.contra.dim;
    Mat contra = op_rmul(P.contra.pi, q, p) -
                 op_lmul(Q.contra.pi, n * q, n * p) *
                     op_mid_left(n, Mat::identity(f, n * p), q, p);
    Mat R = section_of_surjection(P.cohom.proj) * P.sact;
    Mat inter = op_lmul(Q.sact, q, p) -
                op_lmul(Q.cohom.proj, sd * q, p) * op_mid_left(sd, R, q, p);
    return solve_vec_system({contra, inter}, q, p);
}

bool is_semicontra_morphism(const Semicontramodule& P, const Semicontramodule& Q, const Mat& g) {
    require(P.S == Q.S, "is_semicontra_morphism: different semialgebras");
    if (g.rows() != Q.contra.dim || g.cols() != P.contra.dim) return false;
    if (!is_contra_morphism(P.contra, Q.contra, g)) return false;
    const Field& f = P.S->field();
    Mat lifted = factor_through_surjection(
        Q.cohom.proj * Mat::kron(Mat::identity(f, P.S->dim()), g), P.cohom.proj);
    return Q.sact * g == lifted * P.sact;
}

void verify_induced_adjunction(const SemialgebraPtr& S, const Comodule& L, const Semimodule& M) {
    require(S != nullptr && M.S == S, "verify_induced_adjunction: incompatible data");
    const Field& f = S->field();
    const int sd = S->dim();
    Semimodule ind = induced_semimodule(S, L);
    Mat inclSL = cotensor_space(right_part(S->carrier), L).incl;
    Mat inclSM = cotensor_space(right_part(S->carrier), M.co).incl;
    Mat uL = factor_through_injection(
        Mat::kron(S->semiunit, Mat::identity(f, L.dim)) * L.coaction, inclSL);
    auto backward = [&](const Mat& g) {
        Mat lift = factor_through_injection(Mat::kron(Mat::identity(f, sd), g) * inclSL, inclSM);
        return M.act * lift;
    };
    SubspaceBasis HS = hom_semimodule(ind, M);
    for (int j = 0; j < HS.dim(); ++j) {
        Mat F = Mat::unflatten(HS.vectors.row(j), M.co.dim, ind.co.dim);
        Mat g = F * uL;
        require(is_comodule_morphism(L, M.co, g),
                "verify_induced_adjunction: transfer is not a comodule morphism");
        require(backward(g) == F, "verify_induced_adjunction: backward(forward) is not id");
    }
    SubspaceBasis HC = hom_comod(L, M.co);
    for (int j = 0; j < HC.dim(); ++j) {
        Mat g = Mat::unflatten(HC.vectors.row(j), M.co.dim, L.dim);
        Mat F = backward(g);
        require(is_semimodule_morphism(ind, M, F),
                "verify_induced_adjunction: transfer is not a semimodule morphism");
        require(F * uL == g, "verify_induced_adjunction: forward(backward) is not id");
    }
}

void verify_coinduced_adjunction(const SemialgebraPtr& S, const Semicontramodule& P,
                                 const Contramodule& Q) {
    require(S != nullptr && P.S == S, "verify_coinduced_adjunction: incompatible data");
    const Field& f = S->field();
    const int sd = S->dim();
    const int q = Q.dim;
    Semicontramodule coind = coinduced_semicontramodule(S, Q);
    Mat projR;
    cohom_contramodule(S->carrier, Q, &projR);
    const Mat Iq = Mat::identity(f, q);
    CokerResult CohomCQ = cohom_space(regular_comodule(S->C, Side::Left), Q);
    Mat e2 = factor_through_surjection(CohomCQ.proj * Mat::kron(S->semiunit.transpose(), Iq),
                                       projR);
    Mat uCQ = CohomCQ.proj * Mat::kron(S->C->counit.transpose(), Iq);
    require(is_invertible(uCQ), "verify_coinduced_adjunction: Cohom(C,Q) != Q");
    Mat cQ = inverse(uCQ) * e2;
    auto backward = [&](const Mat& t) {
        Mat lift = factor_through_surjection(projR * Mat::kron(Mat::identity(f, sd), t),
                                             P.cohom.proj);
        return lift * P.sact;
    };
    SubspaceBasis HS = hom_semicontra(P, coind);
    for (int j = 0; j < HS.dim(); ++j) {
        Mat h = Mat::unflatten(HS.vectors.row(j), coind.contra.dim, P.contra.dim);
        Mat t = cQ * h;
        require(is_contra_morphism(P.contra, Q, t),
                "verify_coinduced_adjunction: transfer is not a contramodule morphism");
        require(backward(t) == h, "verify_coinduced_adjunction: backward(forward) is not id");
    }
    SubspaceBasis HC = hom_contra(P.contra, Q);
    for (int j = 0; j < HC.dim(); ++j) {
        Mat t = Mat::unflatten(HC.vectors.row(j), q, P.contra.dim);
        Mat h = backward(t);
        require(is_semicontra_morphism(P, coind, h),
                "verify_coinduced_adjunction: transfer is not a semicontramodule morphism");
        require(cQ * h == t, "verify_coinduced_adjunction: forward(backward) is not id");
    }
}

Contramodule dual_tensor_contramodule(const Comodule& N, int v) {
    require(N.side == Side::Right, "dual_tensor_contramodule: needs a right comodule");
    require(v >= 0, "dual_tensor_contramodule: negative fiber dimension");
    const Field& f = N.C->field;
    const int n = N.C->dim;
    const int r = N.dim;
    Contramodule P;
    P.D = N.C;
    P.dim = r * v;
    P.pi = Mat::zero(f, r * v, n * r * v);
    for (int c = 0; c < r; ++c)
        for (int cp = 0; cp < r; ++cp)
            for (int u = 0; u < n; ++u) {
                const Scalar& a = N.coaction.at(cp * n + u, c);
                if (f.is_zero(a)) continue;
                for (int x = 0; x < v; ++x)
                    P.pi.set(c * v + x, u * (r * v) + cp * v + x, a);
            }
    ValidationResult pv = validate_contramodule(P);
    require(pv.ok, "dual_tensor_contramodule: " + pv.summary());
    return P;
}

Mat cohom_dual_iso(const Comodule& K, const Comodule& N, int v) {
    require(K.side == Side::Left && N.side == Side::Right && K.C == N.C,
            "cohom_dual_iso: incompatible comodules");
    const Field& f = K.C->field;
    const int k = K.dim;
    const int r = N.dim;
    Mat incl = cotensor_space(N, K).incl;
    const int t = incl.cols();
    Contramodule P = dual_tensor_contramodule(N, v);
    CokerResult CH = cohom_space(K, P);
    Mat theta_amb(f, t * v, k * r * v);
    for (int tt = 0; tt < t; ++tt)
        for (int c = 0; c < r; ++c)
            for (int b = 0; b < k; ++b) {
                const Scalar& a = incl.at(c * k + b, tt);
                if (f.is_zero(a)) continue;
                for (int x = 0; x < v; ++x)
                    theta_amb.set(tt * v + x, b * (r * v) + c * v + x, a);
            }
    Mat theta = factor_through_surjection(theta_amb, CH.proj);
    require(theta.rows() == theta.cols() && is_invertible(theta),
            "cohom_dual_iso: canonical map is not invertible");
    return theta;
}

Semicontramodule hom_k_semicontra(const RightSemimodule& N, int v) {
    require(N.S != nullptr, "hom_k_semicontra: null semialgebra");
    const Field& f = N.S->field();
    Contramodule P0 = dual_tensor_contramodule(N.co, v);
    CokerResult CH = cohom_space(left_part(N.S->carrier), P0);
    Mat theta = cohom_dual_iso(left_part(N.S->carrier), N.co, v);
    Mat A = Mat::kron(N.act.transpose(), Mat::identity(f, v));
    return Semicontramodule{N.S, P0, CH, inverse(theta) * A};
}

Mat eta_map(const Comodule& N, const Bicomodule& K, const Contramodule& P) {
    require(N.side == Side::Right && N.C == K.C && P.D == K.C, "eta_map: incompatible data");
    const Field& f = K.C->field;
    const int r = N.dim;
    const int k = K.dim;
    const int p = P.dim;
    Mat incl = cotensor_space(N, left_part(K)).incl;
    const int t = incl.cols();
    Comodule NK = cotensor_comodule_right(N, K);
    Mat projQ;
    Contramodule Q = cohom_contramodule(K, P, &projQ);
    CokerResult NP = contratensor_space(N, P);
    CokerResult X = contratensor_space(NK, Q);
    Mat s_tot = X.proj * Mat::kron(Mat::identity(f, t), projQ);
    Mat E(f, r * p, r * k * k * p);
    for (int c = 0; c < r; ++c)
        for (int b = 0; b < k; ++b)
            for (int a = 0; a < p; ++a)
                E.set_long(c * p + a, (c * k + b) * (k * p) + b * p + a, 1);
    Mat big = NP.proj * E * Mat::kron(incl, Mat::identity(f, k * p));
    return factor_through_surjection(big, s_tot);
}

SemiCtnResult semi_contratensor(const RightSemimodule& N, const Semicontramodule& P) {
    require(N.S == P.S, "semi_contratensor: different semialgebras");
    const Field& f = N.S->field();
    const int p = P.contra.dim;
    Mat inclNS = cotensor_space(N.co, left_part(N.S->carrier)).incl;
    const int t = inclNS.cols();
    Comodule NSco = cotensor_comodule_right(N.co, N.S->carrier);
    Mat projCC;
    Contramodule CC = cohom_contramodule(N.S->carrier, P.contra, &projCC);
    require(projCC == P.cohom.proj, "semi_contratensor: presentation mismatch");
    CokerResult NP = contratensor_space(N.co, P.contra);
    CokerResult X = contratensor_space(NSco, P.contra);
    CokerResult Xp = contratensor_space(NSco, CC);
    Mat leg1 = factor_through_surjection(NP.proj * Mat::kron(N.act, Mat::identity(f, p)), X.proj);
    Mat idnu = factor_through_surjection(Xp.proj * Mat::kron(Mat::identity(f, t), P.sact),
                                         X.proj);
    Mat eta = eta_map(N.co, N.S->carrier, P.contra);
    Mat rel = leg1 - eta * idnu;
    Mat proj2 = cokernel_projection(rel);
    SemiCtnResult out;
    out.dim = proj2.rows();
    out.proj_c = NP.proj;
    out.rel = rel;
    out.proj = proj2 * NP.proj;
    return out;
}

void verify_semi_contratensor_duality(const RightSemimodule& N, const Semicontramodule& P,
                                      int v) {
    const Field& f = N.S->field();
    const int r = N.co.dim;
    const int p = P.contra.dim;
    SemiCtnResult sc = semi_contratensor(N, P);
    Semicontramodule HK = hom_k_semicontra(N, v);
    SubspaceBasis H = hom_semicontra(P, HK);
    require(H.dim() == sc.dim * v,
            "verify_semi_contratensor_duality: dimension mismatch");
    Mat all(f, sc.dim * v, HK.contra.dim * p);
    for (int d = 0; d < sc.dim; ++d)
        for (int x = 0; x < v; ++x) {
            Mat g = Mat::zero(f, HK.contra.dim, p);
            for (int c = 0; c < r; ++c)
                for (int a = 0; a < p; ++a) g.set(c * v + x, a, sc.proj.at(d, c * p + a));
            require(is_semicontra_morphism(P, HK, g),
                    "verify_semi_contratensor_duality: functional transfer is not a morphism");
            Mat flat = g.flatten_row();
            for (int j = 0; j < flat.cols(); ++j) all.set(d * v + x, j, flat.at(0, j));
        }
    require(same_subspace(row_space(all), H),
            "verify_semi_contratensor_duality: functionals do not match the morphism space");
}

Semimodule bisemi_contratensor(const Bisemimodule& K, const Semicontramodule& P, Mat* proj_out) {
    require(K.T == P.S, "bisemi_contratensor: semicontramodule over the wrong semialgebra");
    const Field& f = K.S->field();
    const int sd = K.S->dim();
    const int kd = K.bi.dim;
    const int td = K.T->dim();
    const int p = P.contra.dim;
    const int nC = K.S->C->dim;

    RightSemimodule NK{K.T, right_part(K.bi), K.ract};
    SemiCtnResult sc = semi_contratensor(NK, P);
    const int d = sc.dim;

    Mat rho = factor_through_surjection(
        Mat::kron(Mat::identity(f, nC), sc.proj) * Mat::kron(K.bi.left_coaction,
                                                             Mat::identity(f, p)),
        sc.proj);
    Comodule co{K.S->C, Side::Left, d, rho};
    ValidationResult cv = validate_comodule(co);
    require(cv.ok, "bisemi_contratensor: induced coaction invalid: " + cv.summary());

    Mat inclSK;
    Bicomodule SK = cotensor_bicomodule(K.S->carrier, K.bi, &inclSK);
    const int w = SK.dim;

    // Right T-semiaction of S cot K through the joint triple cotensor.
    Mat cond12 = pair_condition(f, 1, K.S->carrier.right_coaction, sd, K.bi.left_coaction, kd,
                                td);
    Mat cond23 = pair_condition(f, sd, K.bi.right_coaction, kd, K.T->carrier.left_coaction, td,
                                1);
    Mat inclJ = joint3(cond12, cond23).inclusion();
    Mat inclKT = cotensor_space(right_part(K.bi), left_part(K.T->carrier)).incl;
    Mat inclW = cotensor_space(right_part(SK), left_part(K.T->carrier)).incl;
    Mat e3 = factor_through_injection(Mat::kron(inclSK, Mat::identity(f, td)) * inclW, inclJ);
    Mat c23 = through_pair(f, inclJ, sd, inclKT, 1);
    Mat ract_SK =
        factor_through_injection(Mat::kron(Mat::identity(f, sd), K.ract) * c23, inclSK) * e3;
    RightSemimodule SKrs{K.T, right_part(SK), ract_SK};
    SemiCtnResult src = semi_contratensor(SKrs, P);

    // Interchange (S cot K) ctn P = S cot (K ctn P).
    Mat inclSOut = cotensor_space(right_part(K.S->carrier), co).incl;
    Mat amb = Mat::kron(Mat::identity(f, sd), sc.proj) * Mat::kron(inclSK, Mat::identity(f, p));
    Mat m1 = factor_through_surjection(amb, src.proj);
    Mat chi = factor_through_injection(m1, inclSOut);
    require(chi.rows() == chi.cols() && is_invertible(chi),
            "bisemi_contratensor: interchange is not invertible (is S an injective right "
            "comodule?)");
    Mat lctn = factor_through_surjection(sc.proj * Mat::kron(K.lact, Mat::identity(f, p)),
                                         src.proj);
    if (proj_out) *proj_out = sc.proj;
    return Semimodule{K.S, co, lctn * inverse(chi)};
}

namespace {

// Retraction K (x) T -> K cot T natural in the right comodule leg of K,
// built from a comodule retraction q of the left coaction of T.
Mat colinear_retraction(const Bicomodule& Kbi, const Semialgebra& T) {
    const Field& f = T.field();
    const int kd = Kbi.dim;
    const int td = T.dim();
    const int nD = T.C->dim;
    require(T.left_retraction.has_value(),
            "colinear_retraction: T is not an injective left comodule");
    const Mat& q = *T.left_retraction;
    const Mat& iota = T.carrier.left_coaction;
    Comodule cf = cofree_comodule(T.C, Side::Left, td);
    Mat incl0 = cotensor_space(right_part(Kbi), cf).incl;
    Mat alpha = Mat::kron(Kbi.right_coaction, Mat::identity(f, td));
    Mat mid = Mat::kron(Mat::identity(f, kd), Mat::kron(T.C->counit, Mat::identity(f, td)));
    Mat sigma0 = factor_through_injection(alpha * mid, incl0);
    Mat inclKT = cotensor_space(right_part(Kbi), left_part(T.carrier)).incl;
    Mat qhat = factor_through_injection(Mat::kron(Mat::identity(f, kd), q) * incl0, inclKT);
    Mat sigma = qhat * sigma0 * Mat::kron(Mat::identity(f, kd), iota);
    require(sigma * inclKT == Mat::identity(f, inclKT.cols()),
            "colinear_retraction: retraction identity fails");
    return sigma;
}

}  // namespace

Semicontramodule bisemi_hom(const Bisemimodule& K, const Semimodule& M, Mat* basis_out,
                            bool certify_sections) {
    require(K.S == M.S, "bisemi_hom: semimodule over the wrong semialgebra");
    const Field& f = K.S->field();
    const int kd = K.bi.dim;
    const int td = K.T->dim();
    const int nD = K.T->C->dim;
    const int m = M.co.dim;

    Semimodule KL{K.S, left_part(K.bi), K.lact};
    SubspaceBasis Hsm = hom_semimodule(KL, M);
    const int h = Hsm.dim();
    Mat inclQ(f, kd * m, h);
    for (int t = 0; t < h; ++t)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < kd; ++b) inclQ.set(b * m + a, t, Hsm.vectors.at(t, a * kd + b));

    // Hom(K, M) with the contramodule structure from the right coaction of K.
    Mat pi_big(f, kd * m, nD * kd * m);
    for (int b = 0; b < kd; ++b)
        for (int bp = 0; bp < kd; ++bp)
            for (int u = 0; u < nD; ++u) {
                const Scalar& c = K.bi.right_coaction.at(bp * nD + u, b);
                if (f.is_zero(c)) continue;
                for (int a = 0; a < m; ++a)
                    pi_big.set(b * m + a, u * (kd * m) + bp * m + a, c);
            }
    Contramodule Pbig{K.T->C, kd * m, pi_big};
    ValidationResult bv = validate_contramodule(Pbig);
    require(bv.ok, "bisemi_hom: ambient contramodule invalid: " + bv.summary());
    Mat piQ = factor_through_injection(pi_big * Mat::kron(Mat::identity(f, nD), inclQ), inclQ);
    Contramodule Q0{K.T->C, h, piQ};
    ValidationResult qv = validate_contramodule(Q0);
    require(qv.ok, "bisemi_hom: induced contramodule invalid: " + qv.summary());

    Mat sigma = colinear_retraction(K.bi, *K.T);
    Mat rhat = K.ract * sigma;

    CokerResult CohomBig = cohom_space(left_part(K.T->carrier), Pbig);
    Mat lift(f, td * kd * m, kd * m);
    for (int u = 0; u < td; ++u)
        for (int bp = 0; bp < kd; ++bp)
            for (int b = 0; b < kd; ++b) {
                const Scalar& c = rhat.at(b, bp * td + u);
                if (f.is_zero(c)) continue;
                for (int a = 0; a < m; ++a)
                    lift.set(u * (kd * m) + bp * m + a, b * m + a, c);
            }
    Mat nu_big = CohomBig.proj * lift;

    if (certify_sections) {
        // The class of the lift must not depend on the choice of retraction:
        // all differences factor as W (id - incl sigma) and must die in the
        // cokernel after assembly.
        Mat inclKT = cotensor_space(right_part(K.bi), left_part(K.T->carrier)).incl;
        Mat R = Mat::identity(f, kd * td) - inclKT * sigma;
        std::vector<Mat> slices;
        for (int a = 0; a < m; ++a) {
            Mat Pa(f, CohomBig.dim, kd * td);
            for (int row = 0; row < CohomBig.dim; ++row)
                for (int b = 0; b < kd; ++b)
                    for (int u = 0; u < td; ++u)
                        Pa.set(row, b * td + u,
                               CohomBig.proj.at(row, u * (kd * m) + b * m + a));
            slices.push_back(Pa * R.transpose());
        }
        Mat y_all(f, h * inclKT.cols(), m);
        for (int j = 0; j < h; ++j) {
            Mat phi = Mat::zero(f, m, kd);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < kd; ++b) phi.set(a, b, inclQ.at(b * m + a, j));
            Mat img = phi * K.ract;
            for (int v2 = 0; v2 < inclKT.cols(); ++v2)
                for (int a = 0; a < m; ++a) y_all.set(j * inclKT.cols() + v2, a, img.at(a, v2));
        }
        SubspaceBasis ys = row_space(y_all);
        for (int j = 0; j < ys.dim(); ++j) {
            Mat acc = Mat::zero(f, CohomBig.dim, kd * td);
            for (int a = 0; a < m; ++a) {
                const Scalar& c = ys.vectors.at(j, a);
                if (f.is_zero(c)) continue;
                acc = acc + slices[a].scaled(c);
            }
            require(acc.is_zero(), "bisemi_hom: coaction depends on the chosen retraction");
        }
    }

    CokerResult CohomQ = cohom_space(left_part(K.T->carrier), Q0);
    Mat restr = factor_through_surjection(
        CohomBig.proj * Mat::kron(Mat::identity(f, td), inclQ), CohomQ.proj);
    require(kernel(restr).dim() == 0, "bisemi_hom: Cohom does not embed the morphism space");
    Mat nuQ = solve(restr, nu_big * inclQ);
    if (basis_out) *basis_out = inclQ;
    return Semicontramodule{K.T, Q0, CohomQ, nuQ};
}

Semimodule phi_semi(const SemialgebraPtr& S, const Semicontramodule& P, Mat* proj_out) {
    return bisemi_contratensor(regular_bisemimodule(S), P, proj_out);
}

Semicontramodule psi_semi(const SemialgebraPtr& S, const Semimodule& M, Mat* basis_out) {
    return bisemi_hom(regular_bisemimodule(S), M, basis_out);
}

Mat phi_forgetful_square(const SemialgebraPtr& S, const Semicontramodule& P) {
    require(S != nullptr, "phi_forgetful_square: null semialgebra");
    require(P.S == S, "phi_forgetful_square: semicontramodule over a different semialgebra");
    const Field& f = S->field();
    const int p = P.contra.dim;
    Mat proj;
    phi_semi(S, P, &proj);
    Mat projC;
    phi_C(S->C, P.contra, &projC);
    return factor_through_surjection(proj * Mat::kron(S->semiunit, Mat::identity(f, p)), projC);
}

Mat psi_forgetful_square(const SemialgebraPtr& S, const Semimodule& M) {
    require(S != nullptr, "psi_forgetful_square: null semialgebra");
    require(M.S == S, "psi_forgetful_square: semimodule over a different semialgebra");
    const Field& f = S->field();
    const int sd = S->dim();
    const int n = S->C->dim;
    const int m = M.co.dim;
    Mat basis;
    Semicontramodule psi = psi_semi(S, M, &basis);
    Mat basisC;
    psi_C(S->C, M.co, &basisC);
    Mat restricted(f, n * m, psi.contra.dim);
    for (int j = 0; j < psi.contra.dim; ++j) {
        Mat fj(f, m, sd);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < sd; ++b) fj.set(a, b, basis.at(b * m + a, j));
        Mat gj = fj * S->semiunit;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < n; ++b) restricted.set(b * m + a, j, gj.at(a, b));
    }
    return solve(basisC, restricted);
}

Mat semi_adjoint_map(const Bisemimodule& K, const Semicontramodule& P, const Semimodule& M,
                     const Mat& g) {
    const int kd = K.bi.dim;
    const int m = M.co.dim;
    const int p = P.contra.dim;
    Mat proj;
    Semimodule phi = bisemi_contratensor(K, P, &proj);
    require(is_semimodule_morphism(phi, M, g), "semi_adjoint_map: not a semimodule morphism");
    Mat basis;
    Semicontramodule psi = bisemi_hom(K, M, &basis);
    Mat gt = g * proj;
    Mat G(M.S->field(), kd * m, p);
    for (int b = 0; b < kd; ++b)
        for (int a = 0; a < m; ++a)
            for (int c = 0; c < p; ++c) G.set(b * m + a, c, gt.at(a, b * p + c));
    Mat h = factor_through_injection(G, basis);
    require(is_semicontra_morphism(P, psi, h),
            "semi_adjoint_map: transfer is not a semicontramodule morphism");
    return h;
}

Mat semi_adjoint_map_back(const Bisemimodule& K, const Semicontramodule& P, const Semimodule& M,
                          const Mat& h) {
    const int kd = K.bi.dim;
    const int m = M.co.dim;
    const int p = P.contra.dim;
    Mat basis;
    Semicontramodule psi = bisemi_hom(K, M, &basis);
    require(is_semicontra_morphism(P, psi, h),
            "semi_adjoint_map_back: not a semicontramodule morphism");
    Mat proj;
    Semimodule phi = bisemi_contratensor(K, P, &proj);
    Mat H = basis * h;
    Mat gt(M.S->field(), m, kd * p);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < kd; ++b)
            for (int c = 0; c < p; ++c) gt.set(a, b * p + c, H.at(b * m + a, c));
    Mat g = factor_through_surjection(gt, proj);
    require(is_semimodule_morphism(phi, M, g),
            "semi_adjoint_map_back: transfer is not a semimodule morphism");
    return g;
}

Mat semi_adjunction_counit(const Bisemimodule& K, const Semimodule& M) {
    Semicontramodule psi = bisemi_hom(K, M);
    return semi_adjoint_map_back(K, psi, M, Mat::identity(M.S->field(), psi.contra.dim));
}

Mat semi_adjunction_unit(const Bisemimodule& K, const Semicontramodule& P) {
    Semimodule phi = bisemi_contratensor(K, P);
    return semi_adjoint_map(K, P, phi, Mat::identity(P.S->field(), phi.co.dim));
}

SemiEnvelope semimodule_injective_embedding(const Semimodule& M, const Mat& g) {
    const SemialgebraPtr& S = M.S;
    const Field& f = S->field();
    const int sd = S->dim();
    const int m = M.co.dim;
    require(g.cols() == m, "semimodule_injective_embedding: classifier has wrong shape");
    const int v = g.rows();
    RightSemimodule NS = regular_right_semimodule(S);
    Semicontramodule bP = hom_k_semicontra(NS, v);
    Mat projJ;
    Semimodule J = bisemi_contratensor(regular_bisemimodule(S), bP, &projJ);
    Mat epair = Mat::zero(f, v, sd * sd * v);
    for (int b = 0; b < sd; ++b)
        for (int x = 0; x < v; ++x) epair.set_long(x, b * (sd * v) + b * v + x, 1);
    Mat ev = factor_through_surjection(epair, projJ);
    SubspaceBasis H = hom_semimodule(M, J);
    require(H.dim() == m * v, "semimodule_injective_embedding: morphism space has wrong size");
    Mat sys(f, v * m, H.dim());
    for (int j = 0; j < H.dim(); ++j) {
        Mat Hj = Mat::unflatten(H.vectors.row(j), J.co.dim, m);
        Mat comp = ev * Hj;
        for (int i = 0; i < v; ++i)
            for (int a = 0; a < m; ++a) sys.set(i * m + a, j, comp.at(i, a));
    }
    Mat x = solve(sys, g.flatten_row().transpose());
    Mat emb = combine_basis(f, H, x, J.co.dim, m);
    require(ev * emb == g, "semimodule_injective_embedding: classifier mismatch");
    return SemiEnvelope{J, emb, ev};
}

SemiEnvelope semimodule_injective_envelope(const Semimodule& M) {
    const Field& f = M.S->field();
    return semimodule_injective_embedding(M, Mat::identity(f, M.co.dim));
}

SemiCoEnvelope semicontra_projective_covering(const Semicontramodule& Q, const Mat& g) {
    const SemialgebraPtr& T = Q.S;
    const Field& f = T->field();
    const int td = T->dim();
    const int q = Q.contra.dim;
    require(g.rows() == q, "semicontra_projective_covering: classifier has wrong shape");
    const int v = g.cols();
    Comodule co{T->C, Side::Left, td * v,
                Mat::kron(T->carrier.left_coaction, Mat::identity(f, v))};
    CotensorResult cot = cotensor_space(right_part(T->carrier), co);
    Mat c = factor_through_injection(cot.incl,
                                     Mat::kron(T->square.incl, Mat::identity(f, v)));
    Semimodule TV{T, co, Mat::kron(T->semimult, Mat::identity(f, v)) * c};
    Mat inclF;
    Semicontramodule F = bisemi_hom(regular_bisemimodule(T), TV, &inclF);
    Mat coevLift = Mat::zero(f, td * td * v, v);
    for (int b = 0; b < td; ++b)
        for (int x = 0; x < v; ++x) coevLift.set_long(b * (td * v) + b * v + x, x, 1);
    Mat coev = solve(inclF, coevLift);
    SubspaceBasis G = hom_semicontra(F, Q);
    require(G.dim() == q * v, "semicontra_projective_covering: morphism space has wrong size");
    Mat sys(f, q * v, G.dim());
    for (int j = 0; j < G.dim(); ++j) {
        Mat Gj = Mat::unflatten(G.vectors.row(j), q, F.contra.dim);
        Mat comp = Gj * coev;
        for (int i = 0; i < q; ++i)
            for (int a = 0; a < v; ++a) sys.set(i * v + a, j, comp.at(i, a));
    }
    Mat y = solve(sys, g.flatten_row().transpose());
    Mat sur = combine_basis(f, G, y, q, F.contra.dim);
    require(sur * coev == g, "semicontra_projective_covering: classifier mismatch");
    return SemiCoEnvelope{F, sur, coev};
}

SemiCoEnvelope semicontra_projective_envelope(const Semicontramodule& Q) {
    const Field& f = Q.S->field();
    return semicontra_projective_covering(Q, Mat::identity(f, Q.contra.dim));
}

namespace {

// Seeded search for a low-rank classifier whose cofree extension stays
// injective (resp. surjective); the identity always qualifies.
Mat small_injective_classifier(const Comodule& co, uint64_t seed) {
    const Field& f = co.C->field;
    const int m = co.dim;
    Rng rng(seed);
    for (int t = 1; t < m; ++t)
        for (int trial = 0; trial < 6; ++trial) {
            Mat g(f, t, m);
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < m; ++j) g.set(i, j, rng.scalar(f));
            if (max_subcomodule_in(co, kernel(g)).dim() == 0) return g;
        }
    return Mat::identity(f, m);
}

Mat small_surjective_classifier(const Contramodule& contra, uint64_t seed) {
    const Field& f = contra.D->field;
    const int n = contra.D->dim;
    const int q = contra.dim;
    Rng rng(seed);
    for (int t = 1; t < q; ++t)
        for (int trial = 0; trial < 6; ++trial) {
            Mat g(f, q, t);
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < t; ++j) g.set(i, j, rng.scalar(f));
            if (row_space(contra.pi * Mat::kron(Mat::identity(f, n), g)).dim() == q) return g;
        }
    return Mat::identity(f, q);
}

}  // namespace

std::optional<Mat> semimodule_injectivity_retraction(const Semimodule& M) {
    const Field& f = M.S->field();
    const int m = M.co.dim;
    SemiEnvelope env = semimodule_injective_embedding(M, small_injective_classifier(M.co, 1));
    if (kernel(env.emb).dim() != 0) env = semimodule_injective_envelope(M);
    SubspaceBasis H = hom_semimodule(env.J, M);
    Mat sys(f, m * m, H.dim());
    for (int j = 0; j < H.dim(); ++j) {
        Mat Hj = Mat::unflatten(H.vectors.row(j), m, env.J.co.dim);
        Mat comp = Hj * env.emb;
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < m; ++a) sys.set(i * m + a, j, comp.at(i, a));
    }
    std::optional<Mat> x = try_solve(sys, Mat::identity(f, m).flatten_row().transpose());
    if (!x) return std::nullopt;
    return combine_basis(f, H, *x, m, env.J.co.dim);
}

std::optional<Mat> semicontra_projectivity_section(const Semicontramodule& Q) {
    const Field& f = Q.S->field();
    const int q = Q.contra.dim;
    SemiCoEnvelope env =
        semicontra_projective_covering(Q, small_surjective_classifier(Q.contra, 1));
    if (row_space(env.sur).dim() != q) env = semicontra_projective_envelope(Q);
    SubspaceBasis H = hom_semicontra(Q, env.F);
    Mat sys(f, q * q, H.dim());
    for (int j = 0; j < H.dim(); ++j) {
        Mat Hj = Mat::unflatten(H.vectors.row(j), env.F.contra.dim, q);
        Mat comp = env.sur * Hj;
        for (int i = 0; i < q; ++i)
            for (int a = 0; a < q; ++a) sys.set(i * q + a, j, comp.at(i, a));
    }
    std::optional<Mat> x = try_solve(sys, Mat::identity(f, q).flatten_row().transpose());
    if (!x) return std::nullopt;
    return combine_basis(f, H, *x, env.F.contra.dim, q);
}

}  // namespace cotra
