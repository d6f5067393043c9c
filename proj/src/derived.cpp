#include "cotra/derived.hpp"

#include <algorithm>

#include "cotra/linalg.hpp"
#include "cotra/tensorfun.hpp"

namespace cotra {

namespace {

bool injective_side(Cat k) {
    return k == Cat::ComodL || k == Cat::ComodR || k == Cat::Bicomod || k == Cat::SemimodL;
}

int total_dim(const BoundedComplex& X) {
    int t = 0;
    for (const CatObj& ob : X.obs) t += ob.dim();
    return t;
}

bool all_env_split(const BoundedComplex& X) {
    for (const CatObj& ob : X.obs)
        if (ob.dim() > 0 && !obj_env_splits(ob)) return false;
    return true;
}

EnvStep safe_injective_step(const CatObj& ob, uint64_t seed) {
    if (ob.dim() == 0) return EnvStep{zero_obj(ob.ctx), Mat(ctx_field(ob.ctx), 0, 0)};
    return injective_step(ob, seed);
}

EnvStep safe_projective_step(const CatObj& ob, uint64_t seed) {
    if (ob.dim() == 0) return EnvStep{zero_obj(ob.ctx), Mat(ctx_field(ob.ctx), 0, 0)};
    return projective_step(ob, seed);
}

const TotCell* cell_at(const Totalization& tot, int degree, int p) {
    for (const TotCell& c : tot.cells[degree - tot.cx.lo])
        if (c.p == p) return &c;
    return nullptr;
}

}  // namespace

Resolution injective_resolution(const BoundedComplex& X, int rows, uint64_t seed) {
    require(rows >= 1, "injective_resolution: need at least one row");
    require(injective_side(X.ctx.kind), "injective_resolution: category resolves by projectives");
    Resolution res;
    if (X.obs.empty()) {
        res.total = X;
        res.cmp = ChainMap{X.lo, {}};
        res.complete = true;
        return res;
    }
    Field f = ctx_field(X.ctx);
    int width = static_cast<int>(X.obs.size());

    std::vector<BoundedComplex> rowsJ;
    std::vector<ChainMap> alphas;  // remainder -> row embedding
    std::vector<ChainMap> outs;    // row -> next remainder projection
    BoundedComplex cur = X;
    while (static_cast<int>(rowsJ.size()) < rows) {
        if (total_dim(cur) == 0) {
            res.complete = true;
            break;
        }
        if (all_env_split(cur)) {
            rowsJ.push_back(cur);
            alphas.push_back(identity_chain_map(cur));
            outs.push_back(ChainMap{cur.lo, {}});
            res.complete = true;
            break;
        }
        std::vector<EnvStep> steps;
        for (const CatObj& ob : cur.obs) steps.push_back(safe_injective_step(ob, seed));
        std::vector<SumObj> sums;
        for (int i = 0; i < width; ++i) {
            CatObj nxt = (i + 1 < width) ? steps[i + 1].env : zero_obj(X.ctx);
            sums.push_back(obj_direct_sum(steps[i].env, nxt));
        }
        BoundedComplex J;
        J.ctx = X.ctx;
        J.lo = X.lo;
        for (int i = 0; i < width; ++i) J.obs.push_back(sums[i].obj);
        for (int i = 0; i + 1 < width; ++i) J.diffs.push_back(sums[i + 1].inl * sums[i].prr);
        ChainMap alpha;
        alpha.lo = X.lo;
        for (int i = 0; i < width; ++i) {
            Mat first = sums[i].inl * steps[i].map;
            if (i + 1 < width)
                first = first + sums[i].inr * steps[i + 1].map * diff_at(cur, X.lo + i);
            alpha.maps.push_back(first);
        }
        BoundedComplex nxt;
        nxt.ctx = X.ctx;
        nxt.lo = X.lo;
        ChainMap out;
        out.lo = X.lo;
        std::vector<QuotObj> quots;
        for (int i = 0; i < width; ++i) {
            quots.push_back(obj_cokernel(cur.obs[i], J.obs[i], alpha.maps[i]));
            nxt.obs.push_back(quots[i].obj);
            out.maps.push_back(quots[i].proj);
        }
        for (int i = 0; i + 1 < width; ++i)
            nxt.diffs.push_back(
                factor_through_surjection(quots[i + 1].proj * J.diffs[i], quots[i].proj));
        rowsJ.push_back(std::move(J));
        alphas.push_back(std::move(alpha));
        outs.push_back(std::move(out));
        cur = std::move(nxt);
    }
    if (rowsJ.empty()) {
        res.total = X;
        res.cmp = identity_chain_map(X);
        res.complete = true;
        return res;
    }
    res.stages = static_cast<int>(rowsJ.size());

    Bigrid G;
    G.ctx = X.ctx;
    G.lo_p = 0;
    G.lo_q = X.lo;
    for (const BoundedComplex& J : rowsJ) {
        G.obs.push_back(J.obs);
        G.dv.push_back(J.diffs);
    }
    for (int p = 0; p + 1 < res.stages; ++p) {
        std::vector<Mat> row;
        for (int i = 0; i < width; ++i) row.push_back(alphas[p + 1].maps[i] * outs[p].maps[i]);
        G.dh.push_back(std::move(row));
    }
    Totalization tot = totalize_cells(G);
    res.total = tot.cx;
    ChainMap cmp;
    cmp.lo = X.lo;
    for (int i = 0; i < width; ++i) {
        const TotCell* base = cell_at(tot, X.lo + i, 0);
        require(base != nullptr, "injective_resolution: missing base cell");
        cmp.maps.push_back(base->in * alphas[0].maps[i]);
    }
    res.cmp = cmp;
    return res;
}

Resolution projective_resolution(const BoundedComplex& X, int rows, uint64_t seed) {
    require(rows >= 1, "projective_resolution: need at least one row");
    require(!injective_side(X.ctx.kind), "projective_resolution: category resolves by injectives");
    Resolution res;
    if (X.obs.empty()) {
        res.total = X;
        res.cmp = ChainMap{X.lo, {}};
        res.complete = true;
        return res;
    }
    Field f = ctx_field(X.ctx);
    int width = static_cast<int>(X.obs.size());

    std::vector<BoundedComplex> rowsP;  // stage order 0, 1, 2, ...
    std::vector<ChainMap> eps;          // row -> remainder cover
    std::vector<ChainMap> incls;        // next remainder -> row inclusion
    BoundedComplex cur = X;
    while (static_cast<int>(rowsP.size()) < rows) {
        if (total_dim(cur) == 0) {
            res.complete = true;
            break;
        }
        if (all_env_split(cur)) {
            rowsP.push_back(cur);
            eps.push_back(identity_chain_map(cur));
            res.complete = true;
            break;
        }
        std::vector<EnvStep> steps;
        for (const CatObj& ob : cur.obs) steps.push_back(safe_projective_step(ob, seed));
        std::vector<SumObj> sums;
        for (int i = 0; i < width; ++i) {
            CatObj prev = (i > 0) ? steps[i - 1].env : zero_obj(X.ctx);
            sums.push_back(obj_direct_sum(steps[i].env, prev));
        }
        BoundedComplex P;
        P.ctx = X.ctx;
        P.lo = X.lo;
        for (int i = 0; i < width; ++i) P.obs.push_back(sums[i].obj);
        for (int i = 0; i + 1 < width; ++i) P.diffs.push_back(sums[i + 1].inr * sums[i].prl);
        ChainMap e;
        e.lo = X.lo;
        for (int i = 0; i < width; ++i) {
            Mat first = steps[i].map * sums[i].prl;
            if (i > 0)
                first = first + diff_at(cur, X.lo + i - 1) * steps[i - 1].map * sums[i].prr;
            e.maps.push_back(first);
        }
        BoundedComplex nxt;
        nxt.ctx = X.ctx;
        nxt.lo = X.lo;
        ChainMap inc;
        inc.lo = X.lo;
        std::vector<SubObj> kers;
        for (int i = 0; i < width; ++i) {
            kers.push_back(obj_kernel(P.obs[i], cur.obs[i], e.maps[i]));
            nxt.obs.push_back(kers[i].obj);
            inc.maps.push_back(kers[i].incl);
        }
        for (int i = 0; i + 1 < width; ++i)
            nxt.diffs.push_back(
                factor_through_injection(P.diffs[i] * kers[i].incl, kers[i + 1].incl));
        rowsP.push_back(std::move(P));
        eps.push_back(std::move(e));
        incls.push_back(std::move(inc));
        cur = std::move(nxt);
    }
    if (rowsP.empty()) {
        res.total = X;
        res.cmp = identity_chain_map(X);
        res.complete = true;
        return res;
    }
    res.stages = static_cast<int>(rowsP.size());

    Bigrid G;
    G.ctx = X.ctx;
    G.lo_p = -(res.stages - 1);
    G.lo_q = X.lo;
    for (int s = res.stages - 1; s >= 0; --s) {
        G.obs.push_back(rowsP[s].obs);
        G.dv.push_back(rowsP[s].diffs);
    }
    for (int i = 0; i + 1 < res.stages; ++i) {
        int s = res.stages - 1 - i;  // grid row i holds stage s; the next row holds s - 1
        std::vector<Mat> row;
        for (int q = 0; q < width; ++q) row.push_back(incls[s - 1].maps[q] * eps[s].maps[q]);
        G.dh.push_back(std::move(row));
    }
    Totalization tot = totalize_cells(G);
    res.total = tot.cx;
    ChainMap cmp;
    cmp.lo = tot.cx.lo;
    for (int n = tot.cx.lo; n <= tot.cx.hi(); ++n) {
        const TotCell* base = cell_at(tot, n, 0);
        if (base != nullptr)
            cmp.maps.push_back(eps[0].maps[n - X.lo] * base->pr);
        else
            cmp.maps.push_back(Mat(f, dim_at(X, n), dim_at(tot.cx, n)));
    }
    res.cmp = cmp;
    return res;
}

std::vector<int> ext_table(const BoundedComplex& X, const BoundedComplex& Y, int a, int b,
                           uint64_t seed) {
    require(same_ctx(X.ctx, Y.ctx), "ext_table: different categories");
    require(a <= b, "ext_table: empty range");
    std::vector<int> out(b - a + 1, 0);
    if (X.obs.empty() || Y.obs.empty()) return out;
    // A truncated resolution only reports clean cohomology strictly below the
    // truncation edge, so pad two degrees past the requested window.
    HomTotal ht;
    if (injective_side(X.ctx.kind)) {
        int L = std::max(1, b + X.hi() - Y.lo + 2);
        Resolution R = injective_resolution(Y, L, seed);
        ht = hom_total_complex(X, R.total);
    } else {
        int L = std::max(1, b + Y.hi() - X.lo + 2);
        Resolution R = projective_resolution(X, L, seed);
        ht = hom_total_complex(R.total, Y);
    }
    std::vector<int> h = cohomology_dims(ht.vc);
    for (int n = a; n <= b; ++n) {
        int i = n - ht.vc.lo;
        if (i >= 0 && i < static_cast<int>(h.size())) out[n - a] = h[i];
    }
    return out;
}

std::vector<int> ext_table(const CatObj& X, const CatObj& Y, int a, int b, uint64_t seed) {
    return ext_table(single_complex(X, 0), single_complex(Y, 0), a, b, seed);
}

std::vector<int> ctrtor_table(const Comodule& N, const Contramodule& P, int a, int b,
                              uint64_t seed) {
    require(N.side == Side::Right, "ctrtor_table: left comodule in the right slot");
    require(N.C == P.D, "ctrtor_table: different coalgebras");
    require(a <= b, "ctrtor_table: empty range");
    const Field& f = N.C->field;
    std::vector<int> out(b - a + 1, 0);
    int L = std::max(1, b + 2);
    Resolution R = projective_resolution(single_complex(obj_of(P), 0), L, seed);

    // N as a bicomodule over the trivial coalgebra on the left, so the
    // one-sided functors can reuse the bicomodule functor calculus.
    CoalgebraPtr triv = std::make_shared<const Coalgebra>(build_trivial(f));
    Bicomodule K{triv, N.C, N.dim, Mat::identity(f, N.dim), N.coaction};
    VectComplex V;
    V.f = f;
    V.lo = R.total.lo;
    for (const CatObj& ob : R.total.obs)
        V.dims.push_back(contratensor_comodule(K, ob.contra()).dim);
    for (size_t i = 0; i + 1 < R.total.obs.size(); ++i)
        V.diffs.push_back(contratensor_map(K, R.total.obs[i].contra(),
                                           R.total.obs[i + 1].contra(), R.total.diffs[i]));
    std::vector<int> h = cohomology_dims(V);
    for (int n = a; n <= b; ++n) {
        int i = (-n) - V.lo;
        if (i >= 0 && i < static_cast<int>(h.size())) out[n - a] = h[i];
    }
    return out;
}

namespace {

std::vector<int> window_from(const HomTotal& ht, int probe) {
    std::vector<int> out(probe + 1, 0);
    std::vector<int> h = cohomology_dims(ht.vc);
    for (int n = 0; n <= probe; ++n) {
        int i = n - ht.vc.lo;
        if (i >= 0 && i < static_cast<int>(h.size())) out[n] = h[i];
    }
    return out;
}

// First degree where every probe vanishes ends the scan: from that point
// on the minimal resolution has no terms left, so nothing reappears.
DimResult scan_tables(const std::vector<std::vector<int>>& tables, int probe) {
    for (int n = 0; n <= probe; ++n) {
        bool zero = true;
        for (const std::vector<int>& t : tables)
            if (t[n] != 0) {
                zero = false;
                break;
            }
        if (zero) return DimResult{true, n > 0 ? n - 1 : 0};
    }
    return DimResult{false, probe};
}

}  // namespace

DimResult projective_dimension(const CatObj& X, int probe, uint64_t seed) {
    require(probe >= 0, "projective_dimension: negative probe");
    std::vector<CatObj> fam = simple_test_family(X.ctx, seed);
    require(!fam.empty(), "projective_dimension: empty test family");
    std::vector<std::vector<int>> tables;
    if (injective_side(X.ctx.kind)) {
        for (const CatObj& T : fam) tables.push_back(ext_table(X, T, 0, probe, seed));
    } else {
        Resolution R = projective_resolution(single_complex(X, 0), probe + 2, seed);
        for (const CatObj& T : fam)
            tables.push_back(window_from(hom_total_complex(R.total, single_complex(T, 0)), probe));
    }
    return scan_tables(tables, probe);
}

DimResult injective_dimension(const CatObj& Y, int probe, uint64_t seed) {
    require(probe >= 0, "injective_dimension: negative probe");
    std::vector<CatObj> fam = simple_test_family(Y.ctx, seed);
    require(!fam.empty(), "injective_dimension: empty test family");
    std::vector<std::vector<int>> tables;
    if (injective_side(Y.ctx.kind)) {
        Resolution R = injective_resolution(single_complex(Y, 0), probe + 2, seed);
        for (const CatObj& T : fam)
            tables.push_back(window_from(hom_total_complex(single_complex(T, 0), R.total), probe));
    } else {
        for (const CatObj& T : fam) tables.push_back(ext_table(T, Y, 0, probe, seed));
    }
    return scan_tables(tables, probe);
}

DimResult contraflat_dimension(const Comodule& N, int probe, uint64_t seed) {
    require(probe >= 0, "contraflat_dimension: negative probe");
    require(N.side == Side::Right, "contraflat_dimension: left comodule");
    std::vector<CatObj> fam = simple_test_family(ctx_contra(N.C), seed);
    require(!fam.empty(), "contraflat_dimension: empty test family");
    std::vector<std::vector<int>> tables;
    for (const CatObj& T : fam) tables.push_back(ctrtor_table(N, T.contra(), 0, probe, seed));
    return scan_tables(tables, probe);
}

}  // namespace cotra
