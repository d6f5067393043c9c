#include <memory>
#include <vector>

#include "cotra/semialgebra.hpp"
#include "doctest.h"

using namespace cotra;

namespace {

CoalgebraPtr ptr(Coalgebra C) { return std::make_shared<const Coalgebra>(std::move(C)); }

CoalgebraPtr kx2(Field f) {
    return ptr(build_truncated_power_series_dual(f, 1, Mat::identity(f, 1), 1));
}

CoalgebraPtr ut2(Field f) { return ptr(build_upper_triangular_dual(f, 2)); }

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

std::vector<std::vector<int>> s3_table() {
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int* p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(comp);
        }
    return t;
}

// One dimensional trivial representation of a group functions coalgebra.
Comodule trivial_character(const CoalgebraPtr& C) {
    Comodule L{C, Side::Left, 1, Mat(C->field, C->dim, 1)};
    for (int h = 0; h < C->dim; ++h) L.coaction.set_long(h, 0, 1);
    require(validate_comodule(L).ok, "test: bad trivial character");
    return L;
}

// Counit collapse structures over a trivial semialgebra.
RightSemimodule collapse_right(const SemialgebraPtr& S, const Comodule& N) {
    Mat incl = cotensor_space(N, left_part(S->carrier)).incl;
    Mat act = Mat::kron(Mat::identity(S->field(), N.dim), S->C->counit) * incl;
    return RightSemimodule{S, N, act};
}

Semimodule collapse_left(const SemialgebraPtr& S, const Comodule& M) {
    Mat incl = cotensor_space(right_part(S->carrier), M).incl;
    Mat act = Mat::kron(S->C->counit, Mat::identity(S->field(), M.dim)) * incl;
    return Semimodule{S, M, act};
}

Semicontramodule collapse_contra(const SemialgebraPtr& S, const Contramodule& P) {
    CokerResult ch = cohom_space(left_part(S->carrier), P);
    Mat u = ch.proj * Mat::kron(S->C->counit.transpose(), Mat::identity(S->field(), P.dim));
    return Semicontramodule{S, P, ch, u};
}

}  // namespace

TEST_CASE("trivial semialgebra validates and its modules collapse to the coalgebra calculus") {
    for (Field f : {Field::rationals(), Field::prime(2)}) {
        for (const CoalgebraPtr& C : {kx2(f), ut2(f)}) {
            SemialgebraPtr S = trivial_semialgebra(C);
            SemialgebraValidation v = validate_semialgebra(*S);
            CHECK(v.base.ok);
            CHECK(v.injective_left);
            CHECK(v.injective_right);
            CHECK(S->square.space.dim() == C->dim);

            CHECK(validate_semimodule(regular_semimodule(S)).ok);
            CHECK(validate_right_semimodule(regular_right_semimodule(S)).ok);
            CHECK(validate_bisemimodule(regular_bisemimodule(S)).ok);

            Comodule M = cofree_comodule(C, Side::Left, 2);
            CHECK(validate_semimodule(collapse_left(S, M)).ok);
            Comodule N = cofree_comodule(C, Side::Right, 2);
            CHECK(validate_right_semimodule(collapse_right(S, N)).ok);
            Contramodule P = free_contramodule(C, 2);
            CHECK(validate_semicontramodule(collapse_contra(S, P)).ok);
        }
    }
}

TEST_CASE("induction and coinduction along a trivial semialgebra change nothing") {
    auto C = ut2(Field::rationals());
    SemialgebraPtr S = trivial_semialgebra(C);

    Comodule L = cofree_comodule(C, Side::Left, 2);
    Semimodule ind = induced_semimodule(S, L);
    CHECK(ind.co.dim == L.dim);
    CHECK(validate_semimodule(ind).ok);
    verify_induced_adjunction(S, L, ind);
    verify_induced_adjunction(S, regular_comodule(C, Side::Left), regular_semimodule(S));

    Contramodule Q = free_contramodule(C, 2);
    Semicontramodule coind = coinduced_semicontramodule(S, Q);
    CHECK(coind.contra.dim == Q.dim);
    CHECK(validate_semicontramodule(coind).ok);
    verify_coinduced_adjunction(S, coind, Q);
    verify_coinduced_adjunction(S, collapse_contra(S, Q), free_contramodule(C, 1));
}

TEST_CASE("semicontratensor over a trivial semialgebra is the contratensor") {
    auto C = ut2(Field::rationals());
    SemialgebraPtr S = trivial_semialgebra(C);
    Comodule N = regular_comodule(C, Side::Right);
    Contramodule P = free_contramodule(C, 2);
    RightSemimodule Nr = collapse_right(S, N);
    Semicontramodule Pc = collapse_contra(S, P);
    SemiCtnResult sc = semi_contratensor(Nr, Pc);
    CHECK(sc.dim == contratensor_space(N, P).dim);
    verify_semi_contratensor_duality(Nr, Pc, 1);
    verify_semi_contratensor_duality(Nr, Pc, 2);
}

TEST_CASE("hom into the ground field carries a semicontramodule structure") {
    auto C = ut2(Field::rationals());
    SemialgebraPtr S = trivial_semialgebra(C);
    RightSemimodule N = regular_right_semimodule(S);
    Semicontramodule P = hom_k_semicontra(N, 2);
    CHECK(P.contra.dim == N.co.dim * 2);
    CHECK(validate_semicontramodule(P).ok);
    verify_semi_contratensor_duality(N, P, 1);
}

TEST_CASE("group semialgebra squares have dimension |G|^2 / |H|") {
    Field f = Field::rationals();
    auto s3 = s3_table();
    auto c4 = cyclic_table(4);

    SemialgebraPtr a = build_group_semialgebra(f, s3, {0, 3, 4});
    CHECK(a->dim() == 6);
    CHECK(a->C->dim == 3);
    CHECK(a->square.space.dim() == 12);

    SemialgebraPtr b = build_group_semialgebra(f, s3, {0, 1});
    CHECK(b->C->dim == 2);
    CHECK(b->square.space.dim() == 18);

    SemialgebraPtr c = build_group_semialgebra(f, c4, {0, 2});
    CHECK(c->C->dim == 2);
    CHECK(c->square.space.dim() == 8);

    // Degenerate subgroups: the whole group gives the trivial semialgebra
    // pattern, the identity subgroup an honest algebra.
    SemialgebraPtr whole = build_group_semialgebra(f, c4, {0, 1, 2, 3});
    CHECK(whole->square.space.dim() == 4);
    SemialgebraPtr alg = build_group_semialgebra(f, cyclic_table(2), {0});
    CHECK(alg->C->dim == 1);
    CHECK(alg->square.space.dim() == 4);
}

TEST_CASE("group semialgebra induction from the trivial character has coset dimension") {
    Field f = Field::rationals();
    CoalgebraPtr C;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &C);
    Comodule L = trivial_character(C);
    Semimodule ind = induced_semimodule(S, L);
    CHECK(ind.co.dim == 2);
    CHECK(validate_semimodule(ind).ok);
    verify_induced_adjunction(S, L, ind);
    verify_induced_adjunction(S, L, regular_semimodule(S));

    CHECK(hom_semimodule(regular_semimodule(S), regular_semimodule(S)).dim() == 6);
}

TEST_CASE("group semialgebra coinduction and hom duality") {
    Field f = Field::rationals();
    CoalgebraPtr C;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &C);

    RightSemimodule N = regular_right_semimodule(S);
    Semicontramodule P = hom_k_semicontra(N, 1);
    CHECK(P.contra.dim == 6);
    CHECK(validate_semicontramodule(P).ok);
    verify_semi_contratensor_duality(N, P, 1);

    verify_coinduced_adjunction(S, P, free_contramodule(C, 1));
}

TEST_CASE("bisemimodule functors on a group semialgebra") {
    Field f = Field::rationals();
    CoalgebraPtr C;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &C);
    Bisemimodule K = regular_bisemimodule(S);
    CHECK(validate_bisemimodule(K).ok);

    Semicontramodule P = hom_k_semicontra(regular_right_semimodule(S), 1);
    Mat proj;
    Semimodule phi = bisemi_contratensor(K, P, &proj);
    CHECK(validate_semimodule(phi).ok);

    Mat basis;
    Semicontramodule psi = bisemi_hom(K, phi, &basis, true);
    CHECK(validate_semicontramodule(psi).ok);

    // Adjunction transfers are mutually inverse at the unit and counit.
    Mat unit = semi_adjunction_unit(K, P);
    CHECK(is_semicontra_morphism(P, psi, unit));
    Mat counit = semi_adjunction_counit(K, phi);
    Mat g = semi_adjoint_map_back(K, P, phi, unit);
    CHECK(g == Mat::identity(f, phi.co.dim));
    CHECK(is_invertible(unit));
    CHECK(is_invertible(counit));
}

TEST_CASE("phi and psi round trip on collapse modules over a trivial semialgebra") {
    auto C = ut2(Field::rationals());
    SemialgebraPtr S = trivial_semialgebra(C);
    Bisemimodule K = regular_bisemimodule(S);

    Semicontramodule P = collapse_contra(S, free_contramodule(C, 1));
    Semimodule phi = phi_semi(S, P);
    Semicontramodule psi = psi_semi(S, phi);
    Mat unit = semi_adjunction_unit(K, P);
    CHECK(is_semicontra_morphism(P, psi, unit));
    CHECK(is_invertible(unit));

    Semimodule M = collapse_left(S, cofree_comodule(C, Side::Left, 1));
    Mat counit = semi_adjunction_counit(K, M);
    CHECK(is_invertible(counit));
}

TEST_CASE("injective envelopes of semimodules and projective envelopes of semicontramodules") {
    Field f = Field::rationals();
    CoalgebraPtr C;
    SemialgebraPtr S = build_group_semialgebra(f, cyclic_table(4), {0, 2}, &C);

    Semimodule M = induced_semimodule(S, trivial_character(C));
    SemiEnvelope env = semimodule_injective_envelope(M);
    CHECK(validate_semimodule(env.J).ok);
    CHECK(env.ev * env.emb == Mat::identity(f, M.co.dim));
    CHECK(kernel(env.emb).dim() == 0);
    CHECK(semimodule_injectivity_retraction(env.J).has_value());

    Semicontramodule Q = hom_k_semicontra(regular_right_semimodule(S), 1);
    SemiCoEnvelope cenv = semicontra_projective_envelope(Q);
    CHECK(validate_semicontramodule(cenv.F).ok);
    CHECK(cenv.sur * cenv.coev == Mat::identity(f, Q.contra.dim));
    CHECK(semicontra_projectivity_section(cenv.F).has_value());
}

TEST_CASE("induced right semimodules absorb into the semicontratensor product") {
    Field f = Field::rationals();
    CoalgebraPtr C;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &C);
    Semicontramodule P = hom_k_semicontra(regular_right_semimodule(S), 1);

    Comodule N1 = cofree_comodule(C, Side::Right, 1);
    RightSemimodule NS1 = induced_right_semimodule(S, N1);
    CHECK(validate_right_semimodule(NS1).ok);
    CHECK(semi_contratensor(NS1, P).dim == contratensor_space(N1, P.contra).dim);

    Comodule N2 = right_part(S->carrier);
    RightSemimodule NS2 = induced_right_semimodule(S, N2);
    CHECK(validate_right_semimodule(NS2).ok);
    CHECK(semi_contratensor(NS2, P).dim == contratensor_space(N2, P.contra).dim);

    auto D = ut2(f);
    SemialgebraPtr T = trivial_semialgebra(D);
    Semicontramodule Q = collapse_contra(T, free_contramodule(D, 2));
    Comodule N3 = cofree_comodule(D, Side::Right, 2);
    RightSemimodule NS3 = induced_right_semimodule(T, N3);
    CHECK(validate_right_semimodule(NS3).ok);
    CHECK(semi_contratensor(NS3, Q).dim == contratensor_space(N3, Q.contra).dim);
}

TEST_CASE("coinduction from a free contramodule gives the dual of the semialgebra") {
    Field f = Field::rationals();
    CoalgebraPtr C;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &C);
    Semicontramodule co = coinduced_semicontramodule(S, free_contramodule(C, 1));
    CHECK(co.contra.dim == S->dim());

    CoalgebraPtr C2;
    SemialgebraPtr S2 = build_group_semialgebra(f, cyclic_table(4), {0, 2}, &C2);
    CHECK(coinduced_semicontramodule(S2, free_contramodule(C2, 1)).contra.dim == S2->dim());
}

TEST_CASE("phi and psi commute with the forgetful functors") {
    Field f = Field::rationals();
    CoalgebraPtr C;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &C);

    Semicontramodule P = hom_k_semicontra(regular_right_semimodule(S), 1);
    Semimodule phi = phi_semi(S, P);
    Comodule phiC = phi_C(C, P.contra);
    Mat X = phi_forgetful_square(S, P);
    CHECK(is_comodule_morphism(phiC, phi.co, X));
    CHECK(is_invertible(X));

    Semimodule M = regular_semimodule(S);
    Semicontramodule psi = psi_semi(S, M);
    Contramodule psiC = psi_C(C, M.co);
    Mat Y = psi_forgetful_square(S, M);
    CHECK(is_contra_morphism(psi.contra, psiC, Y));
    CHECK(is_invertible(Y));

    // On the regular semimodule the composite of the two functors is the
    // identity up to the adjunction counit.
    Mat counit = semi_adjunction_counit(regular_bisemimodule(S), M);
    CHECK(is_invertible(counit));

    auto D = ut2(f);
    SemialgebraPtr T = trivial_semialgebra(D);
    Semicontramodule Q = collapse_contra(T, free_contramodule(D, 2));
    CHECK(is_invertible(phi_forgetful_square(T, Q)));
    Semimodule L = collapse_left(T, cofree_comodule(D, Side::Left, 2));
    CHECK(is_invertible(psi_forgetful_square(T, L)));
}

TEST_CASE("corrupted semialgebra data fails with named axioms") {
    auto C = ut2(Field::rationals());
    SemialgebraPtr S = trivial_semialgebra(C);

    Mat bad_mult = S->semimult.scaled(Scalar(2));
    SemialgebraPtr broken = make_semialgebra(S->C, S->carrier, S->semiunit, bad_mult);
    SemialgebraValidation v = validate_semialgebra(*broken);
    CHECK(!v.base.ok);
    bool left_unit = false, right_unit = false;
    for (const auto& fl : v.base.failures) {
        if (fl.axiom == "semialgebra.left_unit") left_unit = true;
        if (fl.axiom == "semialgebra.right_unit") right_unit = true;
    }
    CHECK(left_unit);
    CHECK(right_unit);

    Semimodule reg = regular_semimodule(S);
    Semimodule bad{S, reg.co, reg.act.scaled(Scalar(2))};
    ValidationResult mv = validate_semimodule(bad);
    CHECK(!mv.ok);
    bool unit = false;
    for (const auto& fl : mv.failures)
        if (fl.axiom == "semimodule.unit") unit = true;
    CHECK(unit);

    Semicontramodule P = collapse_contra(S, free_contramodule(C, 1));
    Semicontramodule badP{S, P.contra, P.cohom, P.sact.scaled(Scalar(2))};
    ValidationResult pv = validate_semicontramodule(badP);
    CHECK(!pv.ok);
    bool counit = false;
    for (const auto& fl : pv.failures)
        if (fl.axiom == "semicontra.counit") counit = true;
    CHECK(counit);
}
