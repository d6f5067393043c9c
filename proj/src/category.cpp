#include "cotra/category.hpp"

#include <algorithm>
#include <functional>

#include "cotra/linalg.hpp"
#include "cotra/rng.hpp"
#include "cotra/tensorfun.hpp"

namespace cotra {

CatCtx ctx_comod(const CoalgebraPtr& C, Side side) {
    CatCtx ctx;
    ctx.kind = side == Side::Left ? Cat::ComodL : Cat::ComodR;
    ctx.C = C;
    return ctx;
}

CatCtx ctx_contra(const CoalgebraPtr& D) {
    CatCtx ctx;
    ctx.kind = Cat::Contra;
    ctx.C = D;
    return ctx;
}

CatCtx ctx_bicomod(const CoalgebraPtr& C, const CoalgebraPtr& D) {
    CatCtx ctx;
    ctx.kind = Cat::Bicomod;
    ctx.C = C;
    ctx.D = D;
    return ctx;
}

CatCtx ctx_semimod(const SemialgebraPtr& S) {
    CatCtx ctx;
    ctx.kind = Cat::SemimodL;
    ctx.S = S;
    return ctx;
}

CatCtx ctx_semicontra(const SemialgebraPtr& S) {
    CatCtx ctx;
    ctx.kind = Cat::SemicontraL;
    ctx.S = S;
    return ctx;
}

bool same_ctx(const CatCtx& a, const CatCtx& b) {
    return a.kind == b.kind && a.C == b.C && a.D == b.D && a.S == b.S;
}

std::string ctx_name(const CatCtx& ctx) {
    switch (ctx.kind) {
        case Cat::ComodL: return "comod-left";
        case Cat::ComodR: return "comod-right";
        case Cat::Contra: return "contra";
        case Cat::Bicomod: return "bicomod";
        case Cat::SemimodL: return "semimod-left";
        case Cat::SemicontraL: return "semicontra-left";
    }
    return "?";
}

Field ctx_field(const CatCtx& ctx) {
    if (ctx.S) return ctx.S->field();
    require(ctx.C != nullptr, "ctx_field: empty context");
    return ctx.C->field;
}

int CatObj::dim() const {
    switch (ctx.kind) {
        case Cat::ComodL:
        case Cat::ComodR: return comod().dim;
        case Cat::Contra: return contra().dim;
        case Cat::Bicomod: return bicomod().dim;
        case Cat::SemimodL: return semimod().co.dim;
        case Cat::SemicontraL: return semicontra().contra.dim;
    }
    return 0;
}

CatObj obj_of(Comodule M) {
    CatCtx ctx = ctx_comod(M.C, M.side);
    return CatObj{ctx, std::move(M)};
}

CatObj obj_of(Contramodule P) {
    CatCtx ctx = ctx_contra(P.D);
    return CatObj{ctx, std::move(P)};
}

CatObj obj_of(Bicomodule B) {
    CatCtx ctx = ctx_bicomod(B.C, B.D);
    return CatObj{ctx, std::move(B)};
}

CatObj obj_of(Semimodule M) {
    CatCtx ctx = ctx_semimod(M.S);
    return CatObj{ctx, std::move(M)};
}

CatObj obj_of(Semicontramodule P) {
    CatCtx ctx = ctx_semicontra(P.S);
    return CatObj{ctx, std::move(P)};
}

CatObj zero_obj(const CatCtx& ctx) {
    Field f = ctx_field(ctx);
    Mat e(f, 0, 0);
    switch (ctx.kind) {
        case Cat::ComodL: return CatObj{ctx, Comodule{ctx.C, Side::Left, 0, e}};
        case Cat::ComodR: return CatObj{ctx, Comodule{ctx.C, Side::Right, 0, e}};
        case Cat::Contra: return CatObj{ctx, Contramodule{ctx.C, 0, e}};
        case Cat::Bicomod: return CatObj{ctx, Bicomodule{ctx.C, ctx.D, 0, e, e}};
        case Cat::SemimodL:
            return CatObj{ctx, Semimodule{ctx.S, Comodule{ctx.S->C, Side::Left, 0, e}, e}};
        case Cat::SemicontraL:
            return CatObj{ctx, Semicontramodule{ctx.S, Contramodule{ctx.S->C, 0, e},
                                                CokerResult{0, e}, e}};
    }
    throw std::runtime_error("zero_obj: bad context");
}

ValidationResult obj_validate(const CatObj& X) {
    switch (X.ctx.kind) {
        case Cat::ComodL:
        case Cat::ComodR: return validate_comodule(X.comod());
        case Cat::Contra: return validate_contramodule(X.contra());
        case Cat::Bicomod: return validate_bicomodule(X.bicomod());
        case Cat::SemimodL: return validate_semimodule(X.semimod());
        case Cat::SemicontraL: return validate_semicontramodule(X.semicontra());
    }
    throw std::runtime_error("obj_validate: bad context");
}

bool obj_is_morphism(const CatObj& X, const CatObj& Y, const Mat& f) {
    if (!same_ctx(X.ctx, Y.ctx)) return false;
    if (f.rows() != Y.dim() || f.cols() != X.dim()) return false;
    switch (X.ctx.kind) {
        case Cat::ComodL:
        case Cat::ComodR: return is_comodule_morphism(X.comod(), Y.comod(), f);
        case Cat::Contra: return is_contra_morphism(X.contra(), Y.contra(), f);
        case Cat::Bicomod: return is_bicomodule_morphism(X.bicomod(), Y.bicomod(), f);
        case Cat::SemimodL: return is_semimodule_morphism(X.semimod(), Y.semimod(), f);
        case Cat::SemicontraL: return is_semicontra_morphism(X.semicontra(), Y.semicontra(), f);
    }
    return false;
}

SubspaceBasis obj_hom(const CatObj& X, const CatObj& Y) {
    require(same_ctx(X.ctx, Y.ctx), "obj_hom: objects of different categories");
    switch (X.ctx.kind) {
        case Cat::ComodL:
        case Cat::ComodR: return hom_comod(X.comod(), Y.comod());
        case Cat::Contra: return hom_contra(X.contra(), Y.contra());
        case Cat::Bicomod: return hom_bicomod(X.bicomod(), Y.bicomod());
        case Cat::SemimodL: return hom_semimodule(X.semimod(), Y.semimod());
        case Cat::SemicontraL: return hom_semicontra(X.semicontra(), Y.semicontra());
    }
    throw std::runtime_error("obj_hom: bad context");
}

SubObj obj_sub(const CatObj& X, const SubspaceBasis& U) {
    switch (X.ctx.kind) {
        case Cat::ComodL:
        case Cat::ComodR: {
            SubComodule s = sub_comodule(X.comod(), U);
            return SubObj{CatObj{X.ctx, s.comodule}, s.incl};
        }
        case Cat::Contra: {
            SubContramodule s = sub_contramodule(X.contra(), U);
            return SubObj{CatObj{X.ctx, s.contra}, s.incl};
        }
        case Cat::Bicomod: {
            SubBicomodule s = sub_bicomodule(X.bicomod(), U);
            return SubObj{CatObj{X.ctx, s.bicomodule}, s.incl};
        }
        case Cat::SemimodL: {
            SubSemimodule s = sub_semimodule(X.semimod(), U);
            return SubObj{CatObj{X.ctx, s.semi}, s.incl};
        }
        case Cat::SemicontraL: {
            SubSemicontra s = sub_semicontramodule(X.semicontra(), U);
            return SubObj{CatObj{X.ctx, s.semi}, s.incl};
        }
    }
    throw std::runtime_error("obj_sub: bad context");
}

QuotObj obj_quot(const CatObj& X, const SubspaceBasis& U) {
    switch (X.ctx.kind) {
        case Cat::ComodL:
        case Cat::ComodR: {
            QuotComodule q = quot_comodule(X.comod(), U);
            return QuotObj{CatObj{X.ctx, q.comodule}, q.proj};
        }
        case Cat::Contra: {
            QuotContramodule q = quot_contramodule(X.contra(), U);
            return QuotObj{CatObj{X.ctx, q.contra}, q.proj};
        }
        case Cat::Bicomod: {
            QuotBicomodule q = quot_bicomodule(X.bicomod(), U);
            return QuotObj{CatObj{X.ctx, q.bicomodule}, q.proj};
        }
        case Cat::SemimodL: {
            QuotSemimodule q = quot_semimodule(X.semimod(), U);
            return QuotObj{CatObj{X.ctx, q.semi}, q.proj};
        }
        case Cat::SemicontraL: {
            QuotSemicontra q = quot_semicontramodule(X.semicontra(), U);
            return QuotObj{CatObj{X.ctx, q.semi}, q.proj};
        }
    }
    throw std::runtime_error("obj_quot: bad context");
}

SubObj obj_kernel(const CatObj& X, const CatObj& Y, const Mat& f) {
    require(obj_is_morphism(X, Y, f), "obj_kernel: not a morphism");
    return obj_sub(X, kernel(f));
}

SubObj obj_image(const CatObj& X, const CatObj& Y, const Mat& f) {
    require(obj_is_morphism(X, Y, f), "obj_image: not a morphism");
    return obj_sub(Y, row_space(f.transpose()));
}

QuotObj obj_cokernel(const CatObj& X, const CatObj& Y, const Mat& f) {
    require(obj_is_morphism(X, Y, f), "obj_cokernel: not a morphism");
    return obj_quot(Y, row_space(f.transpose()));
}

// --- direct sums ---------------------------------------------------------

namespace {

Comodule comod_dsum(const Comodule& A, const Comodule& B) {
    require(A.C == B.C && A.side == B.side, "comod_dsum: incompatible");
    const Field& f = A.C->field;
    const int n = A.C->dim, ma = A.dim, mb = B.dim, m = ma + mb;
    Mat rho(f, A.side == Side::Left ? n * m : m * n, m);
    for (int u = 0; u < n; ++u) {
        for (int a = 0; a < ma; ++a)
            for (int j = 0; j < ma; ++j) {
                const Scalar& s = A.side == Side::Left ? A.coaction.at(u * ma + a, j)
                                                       : A.coaction.at(a * n + u, j);
                if (f.is_zero(s)) continue;
                if (A.side == Side::Left)
                    rho.set(u * m + a, j, s);
                else
                    rho.set(a * n + u, j, s);
            }
        for (int b = 0; b < mb; ++b)
            for (int j = 0; j < mb; ++j) {
                const Scalar& s = A.side == Side::Left ? B.coaction.at(u * mb + b, j)
                                                       : B.coaction.at(b * n + u, j);
                if (f.is_zero(s)) continue;
                if (A.side == Side::Left)
                    rho.set(u * m + ma + b, ma + j, s);
                else
                    rho.set((ma + b) * n + u, ma + j, s);
            }
    }
    return Comodule{A.C, A.side, m, rho};
}

Contramodule contra_dsum(const Contramodule& A, const Contramodule& B) {
    require(A.D == B.D, "contra_dsum: incompatible");
    const Field& f = A.D->field;
    const int n = A.D->dim, pa = A.dim, pb = B.dim, p = pa + pb;
    Mat pi(f, p, n * p);
    for (int u = 0; u < n; ++u) {
        for (int a = 0; a < pa; ++a)
            for (int x = 0; x < pa; ++x) {
                const Scalar& s = A.pi.at(a, u * pa + x);
                if (!f.is_zero(s)) pi.set(a, u * p + x, s);
            }
        for (int b = 0; b < pb; ++b)
            for (int y = 0; y < pb; ++y) {
                const Scalar& s = B.pi.at(b, u * pb + y);
                if (!f.is_zero(s)) pi.set(pa + b, u * p + pa + y, s);
            }
    }
    return Contramodule{A.D, p, pi};
}

Bicomodule bicomod_dsum(const Bicomodule& A, const Bicomodule& B) {
    Comodule l = comod_dsum(left_part(A), left_part(B));
    Comodule r = comod_dsum(right_part(A), right_part(B));
    return Bicomodule{A.C, A.D, l.dim, l.coaction, r.coaction};
}

struct SumMaps {
    Mat inl, inr, prl, prr;
};

SumMaps sum_maps(const Field& f, int ma, int mb) {
    SumMaps s{Mat(f, ma + mb, ma), Mat(f, ma + mb, mb), Mat(f, ma, ma + mb), Mat(f, mb, ma + mb)};
    for (int i = 0; i < ma; ++i) {
        s.inl.set_long(i, i, 1);
        s.prl.set_long(i, i, 1);
    }
    for (int i = 0; i < mb; ++i) {
        s.inr.set_long(ma + i, i, 1);
        s.prr.set_long(i, ma + i, 1);
    }
    return s;
}

Semimodule semimod_dsum(const Semimodule& A, const Semimodule& B, const SumMaps& s) {
    const SemialgebraPtr& S = A.S;
    const Field& f = S->field();
    const int sd = S->dim();
    Comodule co = comod_dsum(A.co, B.co);
    CotensorResult cotAB = cotensor_space(right_part(S->carrier), co);
    CotensorResult cotA = cotensor_space(right_part(S->carrier), A.co);
    CotensorResult cotB = cotensor_space(right_part(S->carrier), B.co);
    Mat cA = factor_through_injection(Mat::kron(Mat::identity(f, sd), s.prl) * cotAB.incl,
                                      cotA.incl);
    Mat cB = factor_through_injection(Mat::kron(Mat::identity(f, sd), s.prr) * cotAB.incl,
                                      cotB.incl);
    Mat act = s.inl * A.act * cA + s.inr * B.act * cB;
    return Semimodule{S, co, act};
}

Semicontramodule semicontra_dsum(const Semicontramodule& A, const Semicontramodule& B,
                                 const SumMaps& s) {
    const SemialgebraPtr& S = A.S;
    const Field& f = S->field();
    const int sd = S->dim();
    Contramodule contra = contra_dsum(A.contra, B.contra);
    CokerResult chAB = cohom_space(left_part(S->carrier), contra);
    CokerResult chA = cohom_space(left_part(S->carrier), A.contra);
    CokerResult chB = cohom_space(left_part(S->carrier), B.contra);
    Mat iA = factor_through_surjection(chAB.proj * Mat::kron(Mat::identity(f, sd), s.inl),
                                       chA.proj);
    Mat iB = factor_through_surjection(chAB.proj * Mat::kron(Mat::identity(f, sd), s.inr),
                                       chB.proj);
    Mat sact = iA * A.sact * s.prl + iB * B.sact * s.prr;
    return Semicontramodule{S, contra, chAB, sact};
}

}  // namespace

SumObj obj_direct_sum(const CatObj& X, const CatObj& Y) {
    require(same_ctx(X.ctx, Y.ctx), "obj_direct_sum: objects of different categories");
    Field f = ctx_field(X.ctx);
    SumMaps s = sum_maps(f, X.dim(), Y.dim());
    CatObj out = X;
    switch (X.ctx.kind) {
        case Cat::ComodL:
        case Cat::ComodR: out.value = comod_dsum(X.comod(), Y.comod()); break;
        case Cat::Contra: out.value = contra_dsum(X.contra(), Y.contra()); break;
        case Cat::Bicomod: out.value = bicomod_dsum(X.bicomod(), Y.bicomod()); break;
        case Cat::SemimodL: out.value = semimod_dsum(X.semimod(), Y.semimod(), s); break;
        case Cat::SemicontraL:
            out.value = semicontra_dsum(X.semicontra(), Y.semicontra(), s);
            break;
    }
    return SumObj{out, s.inl, s.inr, s.prl, s.prr};
}

// --- injectivity / projectivity and resolution steps ---------------------

namespace {

// Canonical bicolinear embedding of B into the cofree bicomodule on its
// underlying space, b -> b_(-1) (x) b_(0) (x) b_(1).
Mat bicofree_embedding(const Bicomodule& B) {
    const Field& f = B.C->field;
    const int n = B.C->dim;
    return Mat::kron(Mat::identity(f, n), B.right_coaction) * B.left_coaction;
}

std::optional<Mat> bicomodule_injective_splitting(const Bicomodule& B) {
    const Field& f = B.C->field;
    Bicomodule env = cofree_bicomodule(B.C, B.D, B.dim);
    Mat iota = bicofree_embedding(B);
    SubspaceBasis H = hom_bicomod(env, B);
    const int k = B.dim;
    Mat A(f, k * k, H.dim());
    for (int t = 0; t < H.dim(); ++t) {
        Mat h = Mat::unflatten(H.vectors.row(t), k, env.dim);
        Mat prod = (h * iota).flatten_row();
        for (int j = 0; j < k * k; ++j) A.set(j, t, prod.at(0, j));
    }
    auto x = try_solve(A, Mat::identity(f, k).flatten_row().transpose());
    if (!x) return std::nullopt;
    Mat r(f, k, env.dim);
    for (int t = 0; t < H.dim(); ++t) {
        const Scalar& c = x->at(t, 0);
        if (f.is_zero(c)) continue;
        r = r + Mat::unflatten(H.vectors.row(t), k, env.dim).scaled(c);
    }
    return r;
}

SubspaceBasis max_subbicomodule_in(const Bicomodule& B, const SubspaceBasis& W) {
    SubspaceBasis cur = W;
    for (;;) {
        SubspaceBasis a = max_subcomodule_in(left_part(B), cur);
        SubspaceBasis b = max_subcomodule_in(right_part(B), a);
        if (b.dim() == cur.dim()) return b;
        cur = b;
    }
}

// Seeded search for a small f: X -> k^t whose kernel contains no nonzero
// subobject; the cofree extension of such an f is a monomorphism.
Mat essential_functional(const Field& f, int m, uint64_t seed,
                         const std::function<bool(const Mat&)>& kernel_clean) {
    if (m == 0) return Mat(f, 0, 0);
    Rng rng(seed);
    for (int t = 1; t < m; ++t) {
        for (int trial = 0; trial < 6; ++trial) {
            Mat g(f, t, m);
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < m; ++j) g.set(i, j, rng.scalar(f));
            if (kernel_clean(g)) return g;
        }
    }
    return Mat::identity(f, m);
}

EnvStep comod_injective_step(const CatCtx& ctx, const Comodule& M, uint64_t seed) {
    const Field& f = M.C->field;
    const int n = M.C->dim;
    Mat g = essential_functional(f, M.dim, seed, [&](const Mat& cand) {
        return max_subcomodule_in(M, kernel(cand)).dim() == 0;
    });
    Comodule env = cofree_comodule(M.C, M.side, g.rows());
    Mat map = M.side == Side::Left ? Mat::kron(Mat::identity(f, n), g) * M.coaction
                                   : Mat::kron(g, Mat::identity(f, n)) * M.coaction;
    require(kernel(map).dim() == 0, "injective_step: embedding not injective");
    require(is_comodule_morphism(M, env, map), "injective_step: embedding not colinear");
    return EnvStep{CatObj{ctx, env}, map};
}

EnvStep bicomod_injective_step(const CatCtx& ctx, const Bicomodule& B, uint64_t seed) {
    const Field& f = B.C->field;
    const int n = B.C->dim, d = B.D->dim;
    Mat g = essential_functional(f, B.dim, seed, [&](const Mat& cand) {
        return max_subbicomodule_in(B, kernel(cand)).dim() == 0;
    });
    Bicomodule env = cofree_bicomodule(B.C, B.D, g.rows());
    Mat map = Mat::kron(Mat::identity(f, n), Mat::kron(g, Mat::identity(f, d))) *
              bicofree_embedding(B);
    require(kernel(map).dim() == 0, "injective_step: embedding not injective");
    require(is_bicomodule_morphism(B, env, map), "injective_step: embedding not bicolinear");
    return EnvStep{CatObj{ctx, env}, map};
}

EnvStep contra_projective_step(const CatCtx& ctx, const Contramodule& P, uint64_t seed) {
    const Field& f = P.D->field;
    const int n = P.D->dim, p = P.dim;
    Rng rng(seed);
    Mat chosen = Mat::identity(f, p);
    for (int t = 1; t < p && chosen.rows() == p; ++t) {
        for (int trial = 0; trial < 6; ++trial) {
            Mat g(f, p, t);
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < t; ++j) g.set(i, j, rng.scalar(f));
            Mat G = P.pi * Mat::kron(Mat::identity(f, n), g);
            if (row_space(G).dim() == p) {
                chosen = g;
                break;
            }
        }
    }
    Contramodule env = free_contramodule(P.D, chosen.cols());
    Mat map = P.pi * Mat::kron(Mat::identity(f, n), chosen);
    require(row_space(map).dim() == p, "projective_step: cover not surjective");
    require(is_contra_morphism(env, P, map), "projective_step: cover not contralinear");
    return EnvStep{CatObj{ctx, env}, map};
}

}  // namespace

bool obj_env_splits(const CatObj& X) {
    switch (X.ctx.kind) {
        case Cat::ComodL:
        case Cat::ComodR: return injective_splitting(X.comod()).has_value();
        case Cat::Contra: return projective_splitting(X.contra()).has_value();
        case Cat::Bicomod: return bicomodule_injective_splitting(X.bicomod()).has_value();
        case Cat::SemimodL: return semimodule_injectivity_retraction(X.semimod()).has_value();
        case Cat::SemicontraL:
            return semicontra_projectivity_section(X.semicontra()).has_value();
    }
    return false;
}

EnvStep injective_step(const CatObj& X, uint64_t seed) {
    switch (X.ctx.kind) {
        case Cat::ComodL:
        case Cat::ComodR: return comod_injective_step(X.ctx, X.comod(), seed);
        case Cat::Bicomod: return bicomod_injective_step(X.ctx, X.bicomod(), seed);
        case Cat::SemimodL: {
            const Semimodule& M = X.semimod();
            const Field& f = M.S->field();
            Mat g = essential_functional(f, M.co.dim, seed, [&](const Mat& cand) {
                return max_subcomodule_in(M.co, kernel(cand)).dim() == 0;
            });
            SemiEnvelope env = semimodule_injective_embedding(M, g);
            if (kernel(env.emb).dim() != 0) env = semimodule_injective_envelope(M);
            require(kernel(env.emb).dim() == 0, "injective_step: embedding not injective");
            return EnvStep{CatObj{X.ctx, env.J}, env.emb};
        }
        default:
            throw std::runtime_error("injective_step: category has no injective cogenerators here");
    }
}

EnvStep projective_step(const CatObj& X, uint64_t seed) {
    switch (X.ctx.kind) {
        case Cat::Contra: return contra_projective_step(X.ctx, X.contra(), seed);
        case Cat::SemicontraL: {
            const Semicontramodule& Q = X.semicontra();
            const Field& f = Q.S->field();
            const int n = Q.S->C->dim;
            const int q = Q.contra.dim;
            Rng rng(seed);
            Mat g = Mat::identity(f, q);
            for (int t = 1; t < q && g.cols() == q; ++t)
                for (int trial = 0; trial < 6; ++trial) {
                    Mat cand(f, q, t);
                    for (int i = 0; i < q; ++i)
                        for (int j = 0; j < t; ++j) cand.set(i, j, rng.scalar(f));
                    if (row_space(Q.contra.pi * Mat::kron(Mat::identity(f, n), cand)).dim() ==
                        q) {
                        g = cand;
                        break;
                    }
                }
            SemiCoEnvelope env = semicontra_projective_covering(Q, g);
            if (row_space(env.sur).dim() != q) env = semicontra_projective_envelope(Q);
            require(row_space(env.sur).dim() == q, "projective_step: cover not surjective");
            return EnvStep{CatObj{X.ctx, env.F}, env.sur};
        }
        default:
            throw std::runtime_error("projective_step: category has no projective generators here");
    }
}

// --- splitting into summands ---------------------------------------------

namespace {

// Operators on the underlying space whose invariant subspaces are the
// subobjects: the dual-algebra action for comodules, plus the lifted
// semiaction images for semimodules.
std::vector<Mat> comod_operators(const Comodule& M) {
    const Field& f = M.C->field;
    const int m = M.dim, n = M.C->dim;
    Mat act = comodule_action(M);
    std::vector<Mat> ops;
    for (int i = 0; i < n; ++i) {
        Mat T(f, m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                T.set(a, b, M.side == Side::Left ? act.at(a, i * m + b) : act.at(a, b * n + i));
        ops.push_back(T);
    }
    return ops;
}

SubspaceBasis grow_under_operators(const Field& f, const std::vector<Mat>& ops,
                                   const Mat& seed_rows) {
    SubspaceBasis sp = row_space(seed_rows);
    for (;;) {
        Mat stacked = sp.vectors;
        for (const Mat& T : ops) stacked = Mat::vstack(stacked, sp.vectors * T.transpose());
        SubspaceBasis next = row_space(stacked);
        if (next.dim() == sp.dim()) return next;
        sp = next;
    }
}

// Adds the semiaction image of the part of S (x) U lying on the cotensor
// square; U need not be a subcomodule yet.
SubspaceBasis grow_semimodule(const Semimodule& M, SubspaceBasis sp) {
    const SemialgebraPtr& S = M.S;
    const Field& f = S->field();
    const int sd = S->dim();
    std::vector<Mat> ops = comod_operators(M.co);
    CotensorResult cot = cotensor_space(right_part(S->carrier), M.co);
    for (;;) {
        sp = grow_under_operators(f, ops, sp.vectors);
        Mat inter = Mat::hstack(Mat::kron(Mat::identity(f, sd), sp.inclusion()),
                                cot.incl.scaled(f.from_long(-1)));
        SubspaceBasis meet = kernel(inter);
        Mat added = sp.vectors;
        for (int t = 0; t < meet.dim(); ++t) {
            Mat x(f, cot.incl.cols(), 1);
            for (int j = 0; j < cot.incl.cols(); ++j)
                x.set(j, 0, meet.vectors.at(t, sd * sp.dim() + j));
            added = Mat::vstack(added, (M.act * x).transpose());
        }
        SubspaceBasis next = row_space(added);
        if (next.dim() == sp.dim()) return next;
        sp = next;
    }
}

struct SplitHooks {
    std::function<SubspaceBasis(const Mat& seed_rows)> generate;
    std::function<SubspaceBasis()> endos;  // hom basis of End(W)
    std::function<bool(const SubspaceBasis&)> is_subobject;
};

// Candidate endomorphisms: basis elements, small shifts of them by the
// identity, pairwise differences, then seeded combinations.
std::vector<Mat> endo_candidates(const Field& f, const SubspaceBasis& H, int m, Rng& rng) {
    std::vector<Mat> cands;
    std::vector<Mat> basis;
    for (int t = 0; t < H.dim(); ++t) basis.push_back(Mat::unflatten(H.vectors.row(t), m, m));
    Mat id = Mat::identity(f, m);
    for (const Mat& T : basis) cands.push_back(T);
    for (const Mat& T : basis)
        for (long s : {1L, -1L, 2L, -2L}) cands.push_back(T - id.scaled(f.from_long(s)));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size() && j < i + 4; ++j) {
            cands.push_back(basis[i] - basis[j]);
            cands.push_back(basis[i] + basis[j]);
        }
    for (int trial = 0; trial < 8; ++trial) {
        Mat T(f, m, m);
        for (const Mat& B : basis) T = T + B.scaled(rng.scalar(f));
        cands.push_back(T);
    }
    return cands;
}

std::optional<SubspaceBasis> find_proper_subobject(const Field& f, int m, const SplitHooks& hooks,
                                                   Rng& rng) {
    for (int i = 0; i < m; ++i) {
        Mat v(f, 1, m);
        v.set_long(0, i, 1);
        SubspaceBasis U = hooks.generate(v);
        if (U.dim() > 0 && U.dim() < m) return U;
    }
    for (int trial = 0; trial < 4; ++trial) {
        Mat v(f, 1, m);
        for (int j = 0; j < m; ++j) v.set(0, j, rng.scalar(f));
        SubspaceBasis U = hooks.generate(v);
        if (U.dim() > 0 && U.dim() < m) return U;
    }
    SubspaceBasis H = hooks.endos();
    for (const Mat& T : endo_candidates(f, H, m, rng)) {
        SubspaceBasis K = kernel(T);
        if (K.dim() == 0 || K.dim() == m) continue;
        if (hooks.is_subobject(K)) return K;
    }
    return std::nullopt;
}

// Retraction of U (with inclusion incl into the m-dimensional W) within the
// hom space H of endo-category morphisms W -> U; null when no splitting is
// found.
std::optional<Mat> summand_retraction(const Field& f, const SubspaceBasis& H, const Mat& incl,
                                      int m, int u) {
    Mat A(f, u * u, H.dim());
    for (int t = 0; t < H.dim(); ++t) {
        Mat h = Mat::unflatten(H.vectors.row(t), u, m);
        Mat prod = (h * incl).flatten_row();
        for (int j = 0; j < u * u; ++j) A.set(j, t, prod.at(0, j));
    }
    auto x = try_solve(A, Mat::identity(f, u).flatten_row().transpose());
    if (!x) return std::nullopt;
    Mat r(f, u, m);
    for (int t = 0; t < H.dim(); ++t) {
        const Scalar& c = x->at(t, 0);
        if (f.is_zero(c)) continue;
        r = r + Mat::unflatten(H.vectors.row(t), u, m).scaled(c);
    }
    return r;
}

std::vector<CatObj> split_summands(const CatObj& root, uint64_t seed) {
    Field f = ctx_field(root.ctx);
    Rng rng(seed);
    std::vector<CatObj> out;
    std::vector<CatObj> work{root};
    while (!work.empty()) {
        CatObj W = work.back();
        work.pop_back();
        const int m = W.dim();
        if (m == 0) continue;
        if (m == 1) {
            out.push_back(W);
            continue;
        }
        SplitHooks hooks;
        if (W.ctx.kind == Cat::SemimodL) {
            hooks.generate = [&](const Mat& v) { return grow_semimodule(W.semimod(), row_space(v)); };
        } else {
            std::vector<Mat> ops = comod_operators(W.comod());
            hooks.generate = [&, ops](const Mat& v) { return grow_under_operators(f, ops, v); };
        }
        hooks.endos = [&]() { return obj_hom(W, W); };
        hooks.is_subobject = [&](const SubspaceBasis& U) {
            try {
                obj_sub(W, U);
                return true;
            } catch (const std::exception&) {
                return false;
            }
        };
        auto piece = find_proper_subobject(f, m, hooks, rng);
        if (!piece) {
            out.push_back(W);
            continue;
        }
        SubObj U = obj_sub(W, *piece);
        SubspaceBasis H = obj_hom(W, U.obj);
        auto r = summand_retraction(f, H, U.incl, m, U.obj.dim());
        work.push_back(U.obj);
        if (r) {
            work.push_back(obj_sub(W, kernel(*r)).obj);
        } else {
            work.push_back(obj_quot(W, *piece).obj);
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CatObj& a, const CatObj& b) { return a.dim() < b.dim(); });
    return out;
}

}  // namespace

std::vector<CatObj> simple_test_family(const CatCtx& ctx, uint64_t seed) {
    switch (ctx.kind) {
        case Cat::ComodL:
        case Cat::ComodR: {
            Side side = ctx.kind == Cat::ComodL ? Side::Left : Side::Right;
            CoradicalResult cr = coradical(ctx.C, seed);
            require(cr.status == CertStatus::Ok, "simple_test_family: coradical not certified");
            Comodule reg = regular_comodule(ctx.C, side);
            SubComodule soc = sub_comodule(reg, cr.coradical.space);
            return split_summands(obj_of(soc.comodule), seed);
        }
        case Cat::Contra: {
            std::vector<CatObj> right = simple_test_family(ctx_comod(ctx.C, Side::Right), seed);
            std::vector<CatObj> out;
            for (const CatObj& N : right) out.push_back(obj_of(contramodule_dual(N.comod())));
            return out;
        }
        case Cat::SemimodL: {
            std::vector<CatObj> out = split_summands(obj_of(regular_semimodule(ctx.S)), seed);
            for (const CatObj& X : out)
                require(obj_validate(X).ok, "simple_test_family: split produced invalid semimodule");
            return out;
        }
        case Cat::SemicontraL: {
            std::vector<CatObj> left = simple_test_family(ctx_semimod(ctx.S), seed);
            std::vector<CatObj> out;
            for (const CatObj& M : left) {
                Semicontramodule P = psi_semi(ctx.S, M.semimod());
                ValidationResult v = validate_semicontramodule(P);
                require(v.ok, "simple_test_family: psi image invalid: " + v.summary());
                out.push_back(obj_of(P));
            }
            return out;
        }
        default:
            throw std::runtime_error("simple_test_family: unsupported category");
    }
}

}  // namespace cotra
