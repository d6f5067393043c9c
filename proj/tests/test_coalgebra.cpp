#include <memory>

#include "cotra/coalgebra.hpp"
#include "doctest.h"

using namespace cotra;

namespace {

CoalgebraPtr ptr(Coalgebra C) { return std::make_shared<const Coalgebra>(std::move(C)); }

bool has_axiom(const ValidationResult& v, const std::string& name) {
    for (const auto& f : v.failures)
        if (f.axiom == name) return true;
    return false;
}

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

}  // namespace

TEST_CASE("trivial coalgebra and corrupted axioms") {
    Field Q = Field::rationals();
    Coalgebra C = build_trivial(Q);
    CHECK(validate_coalgebra(C).ok);

    Coalgebra bad = C;
    bad.comult.set_long(0, 0, 2);
    ValidationResult v = validate_coalgebra(bad);
    CHECK_FALSE(v.ok);
    CHECK(has_axiom(v, "counit_left"));
    CHECK(has_axiom(v, "counit_right"));
}

TEST_CASE("dual of k[x]/(x^2) from the truncated power series builder") {
    Field Q = Field::rationals();
    Mat q(Q, 1, 1);
    q.set_long(0, 0, 1);
    Coalgebra C = build_truncated_power_series_dual(Q, 1, q, 1);
    REQUIRE(C.dim == 2);
    CHECK(validate_coalgebra(C).ok);

    // Delta(c0) = c0 (x) c0, Delta(c1) = c0 (x) c1 + c1 (x) c0.
    Mat expected(Q, 4, 2);
    expected.set_long(0, 0, 1);
    expected.set_long(1, 1, 1);
    expected.set_long(2, 1, 1);
    CHECK(C.comult == expected);
    CHECK(C.counit.at(0, 0) == 1);
    CHECK(C.counit.at(0, 1) == 0);

    DualAlgebra A = dual_algebra(C);
    CHECK(validate_algebra(A).ok);
    RadicalResult rad = algebra_radical(A);
    CHECK(rad.status == CertStatus::Ok);
    REQUIRE(rad.radical.dim() == 1);
    CHECK(rad.radical.vectors.at(0, 0) == 0);
    CHECK(rad.radical.vectors.at(0, 1) == 1);

    auto P = ptr(C);
    CoradicalResult corad = coradical(P);
    CHECK(corad.status == CertStatus::Ok);
    REQUIRE(corad.coradical.space.dim() == 1);
    CHECK(corad.coradical.space.vectors.at(0, 0) == 1);
    CHECK(corad.coradical.space.vectors.at(0, 1) == 0);
    CHECK(is_conilpotent_over(P, corad.coradical));
}

TEST_CASE("higher truncation order comultiplication values") {
    Field Q = Field::rationals();
    Mat q(Q, 1, 1);
    q.set_long(0, 0, 1);
    Coalgebra C = build_truncated_power_series_dual(Q, 1, q, 3);
    REQUIRE(C.dim == 4);
    CHECK(validate_coalgebra(C).ok);
    // Delta(c2) = c0 (x) c2 + c1 (x) c1 + c2 (x) c0.
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            long want = (a + b == 2) ? 1 : 0;
            CHECK(C.comult.at(a * 4 + b, 2) == want);
        }
    auto P = ptr(C);
    CoradicalResult corad = coradical(P);
    CHECK(corad.status == CertStatus::Ok);
    CHECK(corad.coradical.space.dim() == 1);
    CHECK(is_conilpotent_over(P, corad.coradical));
}

TEST_CASE("two-variable quantum truncation agrees with the explicit dual algebra") {
    Field F = Field::prime(5);
    Mat q(F, 2, 2);
    q.set_long(0, 1, 2);
    Coalgebra C = build_truncated_power_series_dual(F, 2, q, 2);
    REQUIRE(C.dim == 6);
    CHECK(validate_coalgebra(C).ok);

    // Normal-ordered monomials z^(a1,a2), |a| <= 2, in the same order as the
    // builder's basis: multiplication z^a * z^b = q^{-a2*b1} z^{a+b}.
    std::vector<std::pair<int, int>> mono = {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
    auto find = [&](int x, int y) {
        for (size_t t = 0; t < mono.size(); ++t)
            if (mono[t] == std::make_pair(x, y)) return static_cast<int>(t);
        return -1;
    };
    const int d = 6;
    Mat mult(F, d, d * d);
    Mat unit(F, d, 1);
    unit.set_long(find(0, 0), 0, 1);
    Scalar qinv = F.inv(F.from_long(2));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            auto [a1, a2] = mono[a];
            auto [b1, b2] = mono[b];
            int t = find(a1 + b1, a2 + b2);
            if (t < 0) continue;
            Scalar coef = F.one();
            for (int e = 0; e < a2 * b1; ++e) coef = F.mul(coef, qinv);
            mult.set(t, a * d + b, coef);
        }
    Coalgebra D = build_dual_of_algebra(F, mult, unit);
    CHECK(C.comult == D.comult);
    CHECK(C.counit == D.counit);
}

TEST_CASE("group functions coalgebra and its dual group algebra") {
    Field Q = Field::rationals();
    Coalgebra C = build_group_functions(Q, cyclic_table(3));
    CHECK(validate_coalgebra(C).ok);
    DualAlgebra A = dual_algebra(C);
    CHECK(validate_algebra(A).ok);
    // delta_i * delta_j = delta_{j+i} (opposite order; equal here, C3 abelian).
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                CHECK(A.mult.at(k, i * 3 + j) == ((i + j) % 3 == k ? 1 : 0));

    std::vector<std::vector<int>> bad = cyclic_table(3);
    bad[1][2] = 1;
    CHECK_THROWS_AS(build_group_functions(Q, bad), EngineError);
}

TEST_CASE("group coalgebra radical in characteristic dividing the order") {
    Field F2 = Field::prime(2);
    auto P = ptr(build_group_functions(F2, cyclic_table(2)));
    CoradicalResult corad = coradical(P, 7);
    CHECK(corad.status == CertStatus::Ok);
    REQUIRE(corad.coradical.space.dim() == 1);
    CHECK(corad.coradical.space.vectors.at(0, 0) == 1);
    CHECK(corad.coradical.space.vectors.at(0, 1) == 1);
    CHECK(is_conilpotent_over(P, corad.coradical, 7));

    Field F3 = Field::prime(3);
    auto P3 = ptr(build_group_functions(F3, cyclic_table(3)));
    CoradicalResult corad3 = coradical(P3, 11);
    CHECK(corad3.status == CertStatus::Ok);
    REQUIRE(corad3.coradical.space.dim() == 1);
    for (int j = 0; j < 3; ++j) CHECK(corad3.coradical.space.vectors.at(0, j) == 1);

    // Coprime characteristic: cosemisimple, coradical is everything.
    auto P23 = ptr(build_group_functions(F2, cyclic_table(3)));
    CoradicalResult corad23 = coradical(P23, 13);
    CHECK(corad23.status == CertStatus::Ok);
    CHECK(corad23.coradical.space.dim() == 3);
}

TEST_CASE("matrix coalgebra is cosemisimple over Q and F_2") {
    for (Field f : {Field::rationals(), Field::prime(2)}) {
        auto P = ptr(build_matrix_coalgebra(f, 2));
        CHECK(validate_coalgebra(*P).ok);
        CoradicalResult corad = coradical(P, 17);
        CHECK(corad.status == CertStatus::Ok);
        CHECK(corad.coradical.space.dim() == 4);
        CHECK(is_conilpotent_over(P, corad.coradical, 17));
    }
}

TEST_CASE("upper triangular dual coradical and conilpotency") {
    for (Field f : {Field::rationals(), Field::prime(2)}) {
        auto P = ptr(build_upper_triangular_dual(f, 2));
        REQUIRE(P->dim == 3);
        CHECK(validate_coalgebra(*P).ok);
        CHECK(P->labels[1] == "e0_1");

        CoradicalResult corad = coradical(P, 19);
        CHECK(corad.status == CertStatus::Ok);
        REQUIRE(corad.coradical.space.dim() == 2);
        // Basis order (0,0), (0,1), (1,1): the coradical is spanned by the
        // two diagonal functionals.
        CHECK(corad.coradical.space.vectors.at(0, 0) == 1);
        CHECK(corad.coradical.space.vectors.at(0, 1) == 0);
        CHECK(corad.coradical.space.vectors.at(0, 2) == 0);
        CHECK(corad.coradical.space.vectors.at(1, 2) == 1);
        CHECK(is_conilpotent_over(P, corad.coradical, 19));

        // The span of the first diagonal alone misses half the coradical.
        Mat v(f, 1, 3);
        v.set_long(0, 0, 1);
        Subcoalgebra E{P, SubspaceBasis{3, v}};
        CHECK(validate_subcoalgebra(E).ok);
        CHECK_FALSE(is_conilpotent_over(P, E, 19));
    }
}

TEST_CASE("dual algebra of a dual coalgebra is the opposite algebra") {
    Field Q = Field::rationals();
    Coalgebra C = build_upper_triangular_dual(Q, 2);
    const int d = C.dim;
    // Reconstruct the original multiplication from the comultiplication.
    Mat orig = C.comult.transpose();
    DualAlgebra A = dual_algebra(C);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                CHECK(A.mult.at(k, i * d + j) == orig.at(k, j * d + i));
}

TEST_CASE("direct sum of coalgebras") {
    Field Q = Field::rationals();
    Coalgebra A = build_upper_triangular_dual(Q, 2);
    Coalgebra B = build_trivial(Q);
    Coalgebra C = direct_sum(A, B);
    REQUIRE(C.dim == 4);
    CHECK(validate_coalgebra(C).ok);
    auto P = ptr(C);
    CoradicalResult corad = coradical(P);
    CHECK(corad.status == CertStatus::Ok);
    CHECK(corad.coradical.space.dim() == 3);
    CHECK(is_conilpotent_over(P, corad.coradical));
}

TEST_CASE("dual of algebra rejects non-associative input") {
    Field Q = Field::rationals();
    Mat mult(Q, 2, 4);
    // e0 is a left unit, but e1*e1 = e0 with e1*e0 = 0 breaks associativity.
    mult.set_long(0, 0 * 2 + 0, 1);
    mult.set_long(1, 0 * 2 + 1, 1);
    mult.set_long(0, 1 * 2 + 1, 1);
    Mat unit(Q, 2, 1);
    unit.set_long(0, 0, 1);
    CHECK_THROWS_AS(build_dual_of_algebra(Q, mult, unit), EngineError);
}

TEST_CASE("subcoalgebra validation rejects a non-closed subspace") {
    Field Q = Field::rationals();
    auto P = ptr(build_upper_triangular_dual(Q, 2));
    Mat v(Q, 1, 3);
    v.set_long(0, 1, 1);  // span of the off-diagonal functional
    Subcoalgebra E{P, SubspaceBasis{3, v}};
    ValidationResult r = validate_subcoalgebra(E);
    CHECK_FALSE(r.ok);
    CHECK(has_axiom(r, "subcoalgebra_closure"));
}
