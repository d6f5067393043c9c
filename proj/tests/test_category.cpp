#include <memory>
#include <vector>

#include "cotra/category.hpp"
#include "cotra/linalg.hpp"
#include "doctest.h"

using namespace cotra;

namespace {

CoalgebraPtr ptr(Coalgebra C) { return std::make_shared<const Coalgebra>(std::move(C)); }

CoalgebraPtr kx2(Field f) {
    return ptr(build_truncated_power_series_dual(f, 1, Mat::identity(f, 1), 1));
}

CoalgebraPtr ut2(Field f) { return ptr(build_upper_triangular_dual(f, 2)); }

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

int total_dim(const std::vector<CatObj>& fam) {
    int t = 0;
    for (const CatObj& X : fam) t += X.dim();
    return t;
}

}  // namespace

TEST_CASE("zero objects validate in every category") {
    Field f = Field::rationals();
    CoalgebraPtr C = kx2(f);
    CoalgebraPtr D = ut2(f);
    CoalgebraPtr G;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &G);
    std::vector<CatCtx> ctxs = {ctx_comod(C, Side::Left), ctx_comod(D, Side::Right),
                                ctx_contra(C),            ctx_bicomod(C, D),
                                ctx_semimod(S),           ctx_semicontra(S)};
    for (const CatCtx& ctx : ctxs) {
        CatObj z = zero_obj(ctx);
        CHECK(z.dim() == 0);
        CHECK(obj_validate(z).ok);
        CHECK(same_ctx(z.ctx, ctx));
    }
    CHECK(ctx_name(ctxs[0]) != ctx_name(ctxs[1]));
    CHECK(!same_ctx(ctxs[0], ctxs[1]));
}

TEST_CASE("direct sums carry validated injections and projections") {
    Field f = Field::rationals();

    CoalgebraPtr C = ut2(f);
    CatObj A = obj_of(regular_comodule(C, Side::Left));
    CatObj B = obj_of(cofree_comodule(C, Side::Left, 1));
    SumObj s = obj_direct_sum(A, B);
    CHECK(s.obj.dim() == A.dim() + B.dim());
    CHECK(obj_validate(s.obj).ok);
    CHECK(obj_is_morphism(A, s.obj, s.inl));
    CHECK(obj_is_morphism(B, s.obj, s.inr));
    CHECK(obj_is_morphism(s.obj, A, s.prl));
    CHECK(obj_is_morphism(s.obj, B, s.prr));
    CHECK(s.prl * s.inl == Mat::identity(f, A.dim()));
    CHECK(s.prr * s.inr == Mat::identity(f, B.dim()));
    CHECK((s.prl * s.inr).is_zero());

    CatObj P = obj_of(free_contramodule(C, 1));
    CatObj Q = obj_of(contramodule_dual(regular_comodule(C, Side::Right)));
    SumObj sp = obj_direct_sum(P, Q);
    CHECK(sp.obj.dim() == P.dim() + Q.dim());
    CHECK(obj_validate(sp.obj).ok);
    CHECK(obj_is_morphism(P, sp.obj, sp.inl));
    CHECK(obj_is_morphism(sp.obj, Q, sp.prr));

    CoalgebraPtr E = kx2(f);
    CatObj R = obj_of(regular_bicomodule(E));
    SumObj sb = obj_direct_sum(R, R);
    CHECK(sb.obj.dim() == 2 * R.dim());
    CHECK(obj_validate(sb.obj).ok);
    CHECK(obj_is_morphism(R, sb.obj, sb.inl));

    CoalgebraPtr G;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &G);
    CatObj M = obj_of(regular_semimodule(S));
    SumObj sm = obj_direct_sum(M, M);
    CHECK(sm.obj.dim() == 2 * M.dim());
    CHECK(obj_validate(sm.obj).ok);
    CHECK(obj_is_morphism(M, sm.obj, sm.inl));
    CHECK(obj_is_morphism(sm.obj, M, sm.prr));

    CatObj Ps = obj_of(psi_semi(S, M.semimod()));
    SumObj sc = obj_direct_sum(Ps, Ps);
    CHECK(sc.obj.dim() == 2 * Ps.dim());
    CHECK(obj_validate(sc.obj).ok);
    CHECK(obj_is_morphism(Ps, sc.obj, sc.inr));
    CHECK(obj_is_morphism(sc.obj, Ps, sc.prl));
}

TEST_CASE("kernel image and cokernel of morphisms") {
    Field f = Field::rationals();
    CoalgebraPtr C = ut2(f);
    CatObj X = obj_of(regular_comodule(C, Side::Left));
    SubspaceBasis H = obj_hom(X, X);
    REQUIRE(H.dim() >= 2);
    Mat id = Mat::identity(f, X.dim());
    Mat g;
    bool found = false;
    for (int t = 0; t < H.dim() && !found; ++t) {
        Mat h = Mat::unflatten(H.vectors.row(t), X.dim(), X.dim());
        SubspaceBasis k = kernel(h);
        if (k.dim() > 0 && k.dim() < X.dim()) {
            g = h;
            found = true;
        }
    }
    REQUIRE(found);
    SubObj ker = obj_kernel(X, X, g);
    SubObj im = obj_image(X, X, g);
    QuotObj coker = obj_cokernel(X, X, g);
    CHECK(ker.obj.dim() + im.obj.dim() == X.dim());
    CHECK(coker.obj.dim() == X.dim() - im.obj.dim());
    CHECK(obj_validate(ker.obj).ok);
    CHECK(obj_validate(im.obj).ok);
    CHECK(obj_validate(coker.obj).ok);
    CHECK(obj_is_morphism(ker.obj, X, ker.incl));
    CHECK(obj_is_morphism(X, coker.obj, coker.proj));
    CHECK((g * ker.incl).is_zero());
    CHECK((coker.proj * g).is_zero());
}

TEST_CASE("sub and quotient semimodules and semicontramodules") {
    Field f = Field::rationals();
    CoalgebraPtr G;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &G);
    CatObj M = obj_of(regular_semimodule(S));
    SumObj sum = obj_direct_sum(M, M);

    SubspaceBasis left_img = row_space(sum.inl.transpose());
    SubObj sub = obj_sub(sum.obj, left_img);
    CHECK(sub.obj.dim() == M.dim());
    CHECK(obj_validate(sub.obj).ok);
    CHECK(obj_is_morphism(sub.obj, sum.obj, sub.incl));
    QuotObj quot = obj_quot(sum.obj, left_img);
    CHECK(quot.obj.dim() == M.dim());
    CHECK(obj_validate(quot.obj).ok);
    CHECK(obj_is_morphism(sum.obj, quot.obj, quot.proj));
    CHECK((quot.proj * sub.incl).is_zero());

    CatObj P = obj_of(psi_semi(S, M.semimod()));
    SumObj psum = obj_direct_sum(P, P);
    SubspaceBasis pimg = row_space(psum.inr.transpose());
    SubObj psub = obj_sub(psum.obj, pimg);
    CHECK(psub.obj.dim() == P.dim());
    CHECK(obj_validate(psub.obj).ok);
    CHECK(obj_is_morphism(psub.obj, psum.obj, psub.incl));
    QuotObj pquot = obj_quot(psum.obj, pimg);
    CHECK(pquot.obj.dim() == P.dim());
    CHECK(obj_validate(pquot.obj).ok);
    CHECK(obj_is_morphism(psum.obj, pquot.obj, pquot.proj));
}

TEST_CASE("resolution steps embed into injectives and cover by projectives") {
    Field f = Field::rationals();
    CoalgebraPtr C = kx2(f);

    Comodule reg = regular_comodule(C, Side::Left);
    CoradicalResult cr = coradical(C);
    REQUIRE(cr.status == CertStatus::Ok);
    Comodule simple = sub_comodule(reg, cr.coradical.space).comodule;
    CatObj Xs = obj_of(simple);
    EnvStep e1 = injective_step(Xs);
    CHECK(e1.env.dim() == 2);
    CHECK(obj_is_morphism(Xs, e1.env, e1.map));
    CHECK(kernel(e1.map).dim() == 0);

    CatObj Xr = obj_of(reg);
    EnvStep e2 = injective_step(Xr);
    CHECK(e2.env.dim() == 2);
    CHECK(obj_is_morphism(Xr, e2.env, e2.map));

    CatObj Pc = obj_of(contramodule_dual(regular_comodule(C, Side::Right)));
    EnvStep e3 = projective_step(Pc);
    CHECK(obj_is_morphism(e3.env, Pc, e3.map));
    CHECK(row_space(e3.map).dim() == Pc.dim());

    CatObj Bi = obj_of(regular_bicomodule(C));
    EnvStep e4 = injective_step(Bi);
    CHECK(e4.env.dim() == 4);
    CHECK(obj_is_morphism(Bi, e4.env, e4.map));
    CHECK(kernel(e4.map).dim() == 0);

    CoalgebraPtr G;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &G);
    CatObj M = obj_of(regular_semimodule(S));
    EnvStep e5 = injective_step(M);
    CHECK(obj_is_morphism(M, e5.env, e5.map));
    CHECK(kernel(e5.map).dim() == 0);

    CatObj P = obj_of(psi_semi(S, M.semimod()));
    EnvStep e6 = projective_step(P);
    CHECK(obj_is_morphism(e6.env, P, e6.map));
    CHECK(row_space(e6.map).dim() == P.dim());
}

TEST_CASE("split embeddings detect injectives, split covers detect projectives") {
    Field f = Field::rationals();
    CoalgebraPtr C = kx2(f);
    CHECK(obj_env_splits(obj_of(cofree_comodule(C, Side::Left, 1))));
    CoradicalResult cr = coradical(C);
    REQUIRE(cr.status == CertStatus::Ok);
    Comodule simple = sub_comodule(regular_comodule(C, Side::Left), cr.coradical.space).comodule;
    CHECK(!obj_env_splits(obj_of(simple)));
    CHECK(obj_env_splits(obj_of(free_contramodule(C, 2))));
    CHECK(!obj_env_splits(obj_of(contramodule_dual(
        sub_comodule(regular_comodule(C, Side::Right), cr.coradical.space).comodule))));

    CoalgebraPtr Mx = ptr(build_matrix_coalgebra(f, 2));
    CHECK(obj_env_splits(obj_of(regular_bicomodule(Mx))));
    Bicomodule breg = regular_bicomodule(C);
    SubBicomodule bs = sub_bicomodule(breg, cr.coradical.space);
    CHECK(!obj_env_splits(obj_of(bs.bicomodule)));

    CoalgebraPtr G;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &G);
    CatObj M = obj_of(regular_semimodule(S));
    CHECK(obj_env_splits(M));
    CHECK(obj_env_splits(obj_of(psi_semi(S, M.semimod()))));
}

TEST_CASE("simple test families split the socle of small coalgebras") {
    Field f = Field::rationals();

    auto fam1 = simple_test_family(ctx_comod(kx2(f), Side::Left));
    CHECK(fam1.size() == 1);
    CHECK(fam1[0].dim() == 1);

    auto fam2 = simple_test_family(ctx_comod(ut2(f), Side::Left));
    CHECK(fam2.size() == 2);
    CHECK(total_dim(fam2) == 2);

    auto fam3 = simple_test_family(ctx_comod(ptr(build_matrix_coalgebra(f, 2)), Side::Left));
    CHECK(total_dim(fam3) == 4);
    CHECK(fam3.size() == 2);
    for (const CatObj& X : fam3) CHECK(X.dim() == 2);

    CoalgebraPtr G = ptr(build_group_functions(f, s3_table()));
    auto fam4 = simple_test_family(ctx_comod(G, Side::Left));
    CHECK(total_dim(fam4) == 6);
    CHECK(fam4.size() >= 3);
    for (const CatObj& X : fam4) {
        CHECK(X.dim() <= 2);
        CHECK(obj_validate(X).ok);
    }

    auto fam5 = simple_test_family(ctx_contra(ut2(f)));
    CHECK(fam5.size() == 2);
    CHECK(total_dim(fam5) == 2);
    for (const CatObj& X : fam5) CHECK(obj_validate(X).ok);
}

TEST_CASE("simple test families over a group semialgebra") {
    Field f = Field::rationals();
    CoalgebraPtr G;
    SemialgebraPtr S = build_group_semialgebra(f, s3_table(), {0, 3, 4}, &G);
    auto fam = simple_test_family(ctx_semimod(S));
    CHECK(total_dim(fam) == 6);
    CHECK(fam.size() >= 3);
    for (const CatObj& X : fam) CHECK(X.dim() <= 2);

    auto cfam = simple_test_family(ctx_semicontra(S));
    CHECK(cfam.size() == fam.size());
    for (const CatObj& X : cfam) CHECK(X.dim() > 0);
}
