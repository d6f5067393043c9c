#include <memory>

#include "cotra/bicomodule.hpp"
#include "cotra/contramodule.hpp"
#include "doctest.h"

using namespace cotra;

namespace {

CoalgebraPtr ptr(Coalgebra C) { return std::make_shared<const Coalgebra>(std::move(C)); }

CoalgebraPtr ut2(Field f) { return ptr(build_upper_triangular_dual(f, 2)); }

SubspaceBasis span_rows(const Mat& rows) { return row_space(rows); }

}  // namespace

TEST_CASE("regular and cofree comodules validate on both sides") {
    auto C = ut2(Field::rationals());
    for (Side s : {Side::Left, Side::Right}) {
        CHECK(validate_comodule(regular_comodule(C, s)).ok);
        CHECK(validate_comodule(cofree_comodule(C, s, 2)).ok);
    }
    Comodule bad = regular_comodule(C, Side::Left);
    bad.coaction.set_long(0, 1, 5);
    CHECK_FALSE(validate_comodule(bad).ok);
}

TEST_CASE("comodule as module over the dual algebra") {
    auto C = ut2(Field::prime(3));
    DualAlgebra A = dual_algebra(*C);
    const int n = A.dim;
    const Mat In = Mat::identity(C->field, n);

    Comodule L = regular_comodule(C, Side::Left);
    Mat act = comodule_action(L);
    const Mat Im = Mat::identity(C->field, L.dim);
    CHECK(act * Mat::kron(A.mult, Im) == act * Mat::kron(In, act));
    CHECK(act * Mat::kron(A.unit, Im) == Im);

    Comodule R = regular_comodule(C, Side::Right);
    Mat actr = comodule_action(R);
    CHECK(actr * Mat::kron(actr, In) == actr * Mat::kron(Im, A.mult));
    CHECK(actr * Mat::kron(Im, A.unit) == Im);
}

TEST_CASE("endomorphisms of the regular comodule have dimension dim C") {
    for (auto C : {ut2(Field::rationals()), ptr(build_group_functions(Field::rationals(),
                                                                      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}))}) {
        for (Side s : {Side::Left, Side::Right}) {
            Comodule M = regular_comodule(C, s);
            CHECK(hom_comod(M, M).dim() == C->dim);
        }
    }
}

TEST_CASE("socle of the regular comodule over the path coalgebra") {
    auto C = ut2(Field::rationals());
    CoradicalResult corad = coradical(C);
    REQUIRE(corad.status == CertStatus::Ok);
    for (Side s : {Side::Left, Side::Right}) {
        Comodule M = regular_comodule(C, s);
        SubspaceBasis soc = socle_over(M, corad.coradical);
        CHECK(soc.dim() == 2);
        SubComodule sub = sub_comodule(M, soc);
        CHECK(validate_comodule(sub.comodule).ok);
        QuotComodule q = quot_comodule(M, soc);
        CHECK(q.comodule.dim == 1);
        CHECK(validate_comodule(q.comodule).ok);
    }
}

TEST_CASE("largest subcomodule inside a subspace") {
    auto C = ut2(Field::rationals());
    Comodule M = regular_comodule(C, Side::Left);
    // Basis order: c00, c01, c11.
    Mat rows1(C->field, 2, 3);
    rows1.set_long(0, 1, 1);
    rows1.set_long(1, 2, 1);
    SubspaceBasis U1 = max_subcomodule_in(M, span_rows(rows1));
    CHECK(U1.dim() == 2);  // span(c01, c11) is already a left subcomodule

    Mat rows2(C->field, 2, 3);
    rows2.set_long(0, 0, 1);
    rows2.set_long(1, 1, 1);
    SubspaceBasis U2 = max_subcomodule_in(M, span_rows(rows2));
    CHECK(U2.dim() == 1);  // only span(c00) survives
    CHECK(U2.vectors.at(0, 0) == 1);
    CHECK(U2.vectors.at(0, 1) == 0);

    CHECK_THROWS_AS(sub_comodule(M, span_rows(rows2)), EngineError);
}

TEST_CASE("cogeneration witness and copresentation") {
    auto C = ut2(Field::rationals());
    Comodule M = regular_comodule(C, Side::Left);
    Mat w = finitely_cogenerated_witness(M);
    CHECK(w == M.coaction);

    // One-dimensional comodule on the grouplike c00.
    Comodule S{C, Side::Left, 1, Mat(C->field, 3, 1)};
    S.coaction.set_long(0, 0, 1);
    REQUIRE(validate_comodule(S).ok);
    Copresentation cp = copresentation(S);
    CHECK(cp.cofree0.dim == 3);
    CHECK(cp.e0.rows() == 3);
    CHECK(rank(cp.e0) == 1);
    CHECK(is_comodule_morphism(S, cp.cofree0, cp.e0));

    Copresentation cp2 = copresentation(M);
    CHECK(cp2.cofree0.dim == 9);
    CHECK(same_subspace(kernel(cp2.e1), column_space(cp2.e0)));
}

TEST_CASE("free contramodules and their endomorphisms") {
    auto D = ut2(Field::rationals());
    Contramodule F1 = free_contramodule(D, 1);
    CHECK(validate_contramodule(F1).ok);
    CHECK(F1.dim == 3);
    CHECK(hom_contra(F1, F1).dim() == 3);

    Contramodule F2 = free_contramodule(D, 2);
    CHECK(validate_contramodule(F2).ok);
    CHECK(hom_contra(F2, F2).dim() == 12);

    Contramodule bad = F1;
    bad.pi.set_long(0, 0, 7);
    CHECK_FALSE(validate_contramodule(bad).ok);
}

TEST_CASE("dual of a right comodule is a contramodule") {
    for (Field f : {Field::rationals(), Field::prime(2)}) {
        auto D = ut2(f);
        Comodule N = regular_comodule(D, Side::Right);
        Contramodule P = contramodule_dual(N);
        CHECK(validate_contramodule(P).ok);

        // Duality is contravariant on morphisms.
        SubspaceBasis ends = hom_comod(N, N);
        for (int t = 0; t < ends.dim(); ++t) {
            Mat g = Mat::unflatten(ends.vectors.row(t), N.dim, N.dim);
            CHECK(is_contra_morphism(P, P, contramodule_dual_map(g)));
        }

        CoradicalResult corad = coradical(D);
        REQUIRE(corad.status == CertStatus::Ok);
        QuotContramodule q = max_quotient_over(P, corad.coradical);
        CHECK(q.contra.dim == 2);
        CHECK(validate_contramodule(q.contra).ok);
    }
}

TEST_CASE("contramodule presentation by free covers") {
    auto D = ut2(Field::rationals());
    Comodule N = regular_comodule(D, Side::Right);
    SubspaceBasis soc = socle_over(N, coradical(D).coradical);
    SubComodule sub = sub_comodule(N, soc);
    Contramodule P = contramodule_dual(sub.comodule);
    REQUIRE(validate_contramodule(P).ok);

    ContraPresentation pr = contra_presentation(P);
    CHECK(pr.free0.dim == 6);
    CHECK(rank(pr.e0) == 2);
    CHECK(is_contra_morphism(pr.free1, pr.free0, pr.e1));
    CHECK(same_subspace(kernel(pr.e0), column_space(pr.e1)));
}

TEST_CASE("sub and quotient contramodules") {
    auto D = ut2(Field::rationals());
    Contramodule F = free_contramodule(D, 1);
    // The left ideal generated by the idempotent dual to c00.
    Mat e(F.pi.field(), D->dim, 1);
    e.set_long(0, 0, 1);
    Mat img = F.pi * Mat::kron(Mat::identity(D->field, F.dim), e);
    SubspaceBasis U = column_space(img);
    CHECK(U.dim() == 2);
    SubContramodule sub = sub_contramodule(F, U);
    CHECK(validate_contramodule(sub.contra).ok);
    QuotContramodule quot = quot_contramodule(F, U);
    CHECK(quot.contra.dim == 1);
    CHECK(validate_contramodule(quot.contra).ok);
}

TEST_CASE("bicomodule validation and endomorphisms") {
    auto C = ut2(Field::rationals());
    Bicomodule B = regular_bicomodule(C);
    CHECK(validate_bicomodule(B).ok);
    CHECK(hom_bicomod(B, B).dim() == 1);

    Bicomodule F = cofree_bicomodule(C, C, 1);
    CHECK(F.dim == 9);
    CHECK(validate_bicomodule(F).ok);

    // The coaction of the regular bicomodule embeds it into the cofree one.
    CHECK(is_bicomodule_morphism(B, F, Mat::kron(C->comult, Mat::identity(C->field, 1))));
}

TEST_CASE("bicomodule sub and quotient through the socle") {
    auto C = ut2(Field::rationals());
    Bicomodule B = regular_bicomodule(C);
    CoradicalResult corad = coradical(C);
    SubspaceBasis socL = socle_over(left_part(B), corad.coradical);
    SubspaceBasis socR = socle_over(right_part(B), corad.coradical);
    SubspaceBasis soc = intersect(socL, socR);
    CHECK(soc.dim() == 2);
    SubBicomodule sub = sub_bicomodule(B, soc);
    CHECK(validate_bicomodule(sub.bicomodule).ok);
    QuotBicomodule q = quot_bicomodule(B, soc);
    CHECK(q.bicomodule.dim == 1);
    CHECK(validate_bicomodule(q.bicomodule).ok);
}
