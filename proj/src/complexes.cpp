#include "cotra/complexes.hpp"

#include <algorithm>

#include "cotra/linalg.hpp"

namespace cotra {

namespace {

Mat neg(const Field& f, const Mat& A) { return A.scaled(f.from_long(-1)); }

}  // namespace

BoundedComplex single_complex(CatObj X, int degree) {
    BoundedComplex out;
    out.ctx = X.ctx;
    out.lo = degree;
    out.obs.push_back(std::move(X));
    return out;
}

BoundedComplex zero_complex(const CatCtx& ctx) {
    BoundedComplex out;
    out.ctx = ctx;
    return out;
}

CatObj obj_at(const BoundedComplex& X, int n) {
    if (X.stored(n)) return X.obs[n - X.lo];
    return zero_obj(X.ctx);
}

int dim_at(const BoundedComplex& X, int n) { return X.stored(n) ? X.obs[n - X.lo].dim() : 0; }

Mat diff_at(const BoundedComplex& X, int n) {
    if (n >= X.lo && n < X.hi()) return X.diffs[n - X.lo];
    return Mat(ctx_field(X.ctx), dim_at(X, n + 1), dim_at(X, n));
}

ValidationResult validate_complex(const BoundedComplex& X) {
    ValidationResult out;
    size_t want = X.obs.empty() ? 0 : X.obs.size() - 1;
    if (X.diffs.size() != want) {
        out.fail("complex shape", "differential count does not match object count");
        return out;
    }
    for (size_t i = 0; i < X.obs.size(); ++i) {
        if (!same_ctx(X.obs[i].ctx, X.ctx)) {
            out.fail("complex category", "degree " + std::to_string(X.lo + (int)i));
            return out;
        }
        ValidationResult v = obj_validate(X.obs[i]);
        if (!v.ok) {
            out.fail("complex object", "degree " + std::to_string(X.lo + (int)i) + ": " +
                                           v.summary());
        }
    }
    for (size_t i = 0; i < X.diffs.size(); ++i) {
        if (!obj_is_morphism(X.obs[i], X.obs[i + 1], X.diffs[i]))
            out.fail("complex differential",
                     "degree " + std::to_string(X.lo + (int)i) + " map is not a morphism");
    }
    for (size_t i = 0; i + 1 < X.diffs.size(); ++i) {
        if (!(X.diffs[i + 1] * X.diffs[i]).is_zero())
            out.fail("d after d", "degrees " + std::to_string(X.lo + (int)i) + ".." +
                                      std::to_string(X.lo + (int)i + 2));
    }
    return out;
}

ChainMap chain_map(int lo, std::vector<Mat> maps) { return ChainMap{lo, std::move(maps)}; }

Mat map_at(const ChainMap& F, const BoundedComplex& X, const BoundedComplex& Y, int n) {
    int i = n - F.lo;
    if (i >= 0 && i < (int)F.maps.size()) return F.maps[i];
    return Mat(ctx_field(X.ctx), dim_at(Y, n), dim_at(X, n));
}

bool is_chain_map(const BoundedComplex& X, const BoundedComplex& Y, const ChainMap& F) {
    if (!same_ctx(X.ctx, Y.ctx)) return false;
    int a = std::min({X.lo, Y.lo, F.lo}) - 1;
    int b = std::max({X.hi(), Y.hi(), F.lo + (int)F.maps.size() - 1}) + 1;
    for (int n = a; n <= b; ++n) {
        Mat fn = map_at(F, X, Y, n);
        if (fn.rows() != dim_at(Y, n) || fn.cols() != dim_at(X, n)) return false;
        if (!obj_is_morphism(obj_at(X, n), obj_at(Y, n), fn)) return false;
        if (n < b) {
            Mat left = map_at(F, X, Y, n + 1) * diff_at(X, n);
            Mat right = diff_at(Y, n) * fn;
            if (!(left - right).is_zero()) return false;
        }
    }
    return true;
}

ChainMap identity_chain_map(const BoundedComplex& X) {
    ChainMap F;
    F.lo = X.lo;
    Field f = ctx_field(X.ctx);
    for (const CatObj& ob : X.obs) F.maps.push_back(Mat::identity(f, ob.dim()));
    return F;
}

ChainMap zero_chain_map(const BoundedComplex& X, const BoundedComplex& Y) {
    ChainMap F;
    F.lo = X.lo;
    Field f = ctx_field(X.ctx);
    for (int n = X.lo; n <= X.hi(); ++n) F.maps.push_back(Mat(f, dim_at(Y, n), dim_at(X, n)));
    return F;
}

ChainMap compose(const BoundedComplex& X, const BoundedComplex& Y, const BoundedComplex& Z,
                 const ChainMap& F, const ChainMap& G) {
    ChainMap out;
    out.lo = X.lo;
    for (int n = X.lo; n <= X.hi(); ++n)
        out.maps.push_back(map_at(G, Y, Z, n) * map_at(F, X, Y, n));
    return out;
}

BoundedComplex shift(const BoundedComplex& X, int s) {
    BoundedComplex out = X;
    out.lo = X.lo - s;
    if (s % 2 != 0) {
        Field f = ctx_field(X.ctx);
        for (Mat& d : out.diffs) d = neg(f, d);
    }
    return out;
}

ChainMap shift_map(const ChainMap& F, int s) {
    ChainMap out = F;
    out.lo = F.lo - s;
    return out;
}

namespace {

struct SumBundle {
    CatObj total;
    std::vector<Mat> in;
    std::vector<Mat> pr;
};

SumBundle bundle_sum(const CatCtx& ctx, const std::vector<CatObj>& parts) {
    Field f = ctx_field(ctx);
    SumBundle b{zero_obj(ctx), {}, {}};
    if (parts.empty()) return b;
    b.total = parts[0];
    b.in.push_back(Mat::identity(f, parts[0].dim()));
    b.pr.push_back(Mat::identity(f, parts[0].dim()));
    for (size_t i = 1; i < parts.size(); ++i) {
        SumObj s = obj_direct_sum(b.total, parts[i]);
        for (size_t j = 0; j < b.in.size(); ++j) {
            b.in[j] = s.inl * b.in[j];
            b.pr[j] = b.pr[j] * s.prl;
        }
        b.in.push_back(s.inr);
        b.pr.push_back(s.prr);
        b.total = s.obj;
    }
    return b;
}

}  // namespace

BoundedComplex complex_direct_sum(const BoundedComplex& X, const BoundedComplex& Y) {
    require(same_ctx(X.ctx, Y.ctx), "complex_direct_sum: different categories");
    if (X.obs.empty()) return Y;
    if (Y.obs.empty()) return X;
    BoundedComplex out;
    out.ctx = X.ctx;
    out.lo = std::min(X.lo, Y.lo);
    int hi = std::max(X.hi(), Y.hi());
    std::vector<SumObj> sums;
    for (int n = out.lo; n <= hi; ++n) {
        sums.push_back(obj_direct_sum(obj_at(X, n), obj_at(Y, n)));
        out.obs.push_back(sums.back().obj);
    }
    for (int n = out.lo; n < hi; ++n) {
        const SumObj& s0 = sums[n - out.lo];
        const SumObj& s1 = sums[n + 1 - out.lo];
        out.diffs.push_back(s1.inl * diff_at(X, n) * s0.prl + s1.inr * diff_at(Y, n) * s0.prr);
    }
    return out;
}

BoundedComplex cone(const BoundedComplex& X, const BoundedComplex& Y, const ChainMap& F) {
    require(same_ctx(X.ctx, Y.ctx), "cone: different categories");
    Field f = ctx_field(X.ctx);
    BoundedComplex out;
    out.ctx = X.ctx;
    if (X.obs.empty() && Y.obs.empty()) return out;
    out.lo = std::min(X.lo - 1, Y.lo);
    int hi = std::max(X.hi() - 1, Y.hi());
    std::vector<SumObj> sums;
    for (int n = out.lo; n <= hi; ++n) {
        sums.push_back(obj_direct_sum(obj_at(X, n + 1), obj_at(Y, n)));
        out.obs.push_back(sums.back().obj);
    }
    for (int n = out.lo; n < hi; ++n) {
        const SumObj& s0 = sums[n - out.lo];
        const SumObj& s1 = sums[n + 1 - out.lo];
        Mat d = s1.inl * neg(f, diff_at(X, n + 1)) * s0.prl +
                s1.inr * map_at(F, X, Y, n + 1) * s0.prl + s1.inr * diff_at(Y, n) * s0.prr;
        out.diffs.push_back(d);
    }
    return out;
}

std::vector<CatObj> cohomology(const BoundedComplex& X) {
    std::vector<CatObj> out;
    for (int n = X.lo; n <= X.hi(); ++n) {
        SubObj K = obj_sub(obj_at(X, n), kernel(diff_at(X, n)));
        Mat prev = diff_at(X, n - 1);
        SubspaceBasis img = row_space(prev.transpose());
        Mat coords = factor_through_injection(img.inclusion(), K.incl);
        out.push_back(obj_quot(K.obj, row_space(coords.transpose())).obj);
    }
    return out;
}

std::vector<int> cohomology_dims(const BoundedComplex& X) {
    std::vector<int> out;
    for (int n = X.lo; n <= X.hi(); ++n) {
        int z = kernel(diff_at(X, n)).dim();
        int b = row_space(diff_at(X, n - 1)).dim();
        out.push_back(z - b);
    }
    return out;
}

bool is_acyclic(const BoundedComplex& X) {
    for (int h : cohomology_dims(X))
        if (h != 0) return false;
    return true;
}

Truncation truncate_above(const BoundedComplex& X, int d) {
    if (d >= X.hi()) return Truncation{X, identity_chain_map(X)};
    BoundedComplex out;
    out.ctx = X.ctx;
    if (d < X.lo) {
        Truncation t{out, ChainMap{0, {}}};
        require(is_chain_map(t.cx, X, t.cmp), "truncate_above: comparison is not a chain map");
        return t;
    }
    out.lo = X.lo;
    ChainMap cmp;
    cmp.lo = X.lo;
    Field f = ctx_field(X.ctx);
    for (int n = X.lo; n < d; ++n) {
        out.obs.push_back(obj_at(X, n));
        cmp.maps.push_back(Mat::identity(f, dim_at(X, n)));
    }
    SubObj K = obj_sub(obj_at(X, d), kernel(diff_at(X, d)));
    out.obs.push_back(K.obj);
    cmp.maps.push_back(K.incl);
    for (int n = X.lo; n < d - 1; ++n) out.diffs.push_back(diff_at(X, n));
    if (d > X.lo) out.diffs.push_back(factor_through_injection(diff_at(X, d - 1), K.incl));
    Truncation t{out, cmp};
    require(is_chain_map(t.cx, X, t.cmp), "truncate_above: comparison is not a chain map");
    return t;
}

Truncation truncate_below(const BoundedComplex& X, int e) {
    if (e <= X.lo) return Truncation{X, identity_chain_map(X)};
    BoundedComplex out;
    out.ctx = X.ctx;
    if (e > X.hi()) {
        Truncation t{out, ChainMap{0, {}}};
        require(is_chain_map(X, t.cx, t.cmp), "truncate_below: comparison is not a chain map");
        return t;
    }
    out.lo = e;
    ChainMap cmp;
    cmp.lo = e;
    Field f = ctx_field(X.ctx);
    QuotObj Q = obj_quot(obj_at(X, e), row_space(diff_at(X, e - 1).transpose()));
    out.obs.push_back(Q.obj);
    cmp.maps.push_back(Q.proj);
    for (int n = e + 1; n <= X.hi(); ++n) {
        out.obs.push_back(obj_at(X, n));
        cmp.maps.push_back(Mat::identity(f, dim_at(X, n)));
    }
    if (e < X.hi()) {
        out.diffs.push_back(factor_through_surjection(diff_at(X, e), Q.proj));
        for (int n = e + 1; n < X.hi(); ++n) out.diffs.push_back(diff_at(X, n));
    }
    Truncation t{out, cmp};
    require(is_chain_map(X, t.cx, t.cmp), "truncate_below: comparison is not a chain map");
    return t;
}

namespace {

int grid_rows(const Bigrid& G) { return (int)G.obs.size(); }
int grid_cols(const Bigrid& G) { return G.obs.empty() ? 0 : (int)G.obs[0].size(); }

}  // namespace

ValidationResult validate_bigrid(const Bigrid& G) {
    ValidationResult out;
    int P = grid_rows(G), Q = grid_cols(G);
    for (int p = 0; p < P; ++p)
        if ((int)G.obs[p].size() != Q) {
            out.fail("bigrid shape", "ragged rows");
            return out;
        }
    if ((int)G.dh.size() != std::max(P - 1, 0) || (int)G.dv.size() != P) {
        out.fail("bigrid shape", "differential grids");
        return out;
    }
    for (int p = 0; p + 1 < P; ++p)
        if ((int)G.dh[p].size() != Q) {
            out.fail("bigrid shape", "horizontal differentials");
            return out;
        }
    for (int p = 0; p < P; ++p)
        if ((int)G.dv[p].size() != std::max(Q - 1, 0)) {
            out.fail("bigrid shape", "vertical differentials");
            return out;
        }
    auto tag = [](int p, int q) {
        return "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
    };
    for (int p = 0; p < P; ++p)
        for (int q = 0; q < Q; ++q) {
            ValidationResult v = obj_validate(G.obs[p][q]);
            if (!v.ok) out.fail("bigrid object", tag(p, q) + ": " + v.summary());
        }
    for (int p = 0; p + 1 < P; ++p)
        for (int q = 0; q < Q; ++q)
            if (!obj_is_morphism(G.obs[p][q], G.obs[p + 1][q], G.dh[p][q]))
                out.fail("bigrid horizontal map", tag(p, q));
    for (int p = 0; p < P; ++p)
        for (int q = 0; q + 1 < Q; ++q)
            if (!obj_is_morphism(G.obs[p][q], G.obs[p][q + 1], G.dv[p][q]))
                out.fail("bigrid vertical map", tag(p, q));
    if (!out.ok) return out;
    for (int p = 0; p + 2 < P; ++p)
        for (int q = 0; q < Q; ++q)
            if (!(G.dh[p + 1][q] * G.dh[p][q]).is_zero())
                out.fail("bigrid horizontal d after d", tag(p, q));
    for (int p = 0; p < P; ++p)
        for (int q = 0; q + 2 < Q; ++q)
            if (!(G.dv[p][q + 1] * G.dv[p][q]).is_zero())
                out.fail("bigrid vertical d after d", tag(p, q));
    for (int p = 0; p + 1 < P; ++p)
        for (int q = 0; q + 1 < Q; ++q)
            if (!(G.dh[p][q + 1] * G.dv[p][q] - G.dv[p + 1][q] * G.dh[p][q]).is_zero())
                out.fail("bigrid square", tag(p, q));
    return out;
}

Totalization totalize_cells(const Bigrid& G) {
    int P = grid_rows(G), Q = grid_cols(G);
    Totalization out;
    out.cx.ctx = G.ctx;
    if (P == 0 || Q == 0) return out;
    Field f = ctx_field(G.ctx);
    out.cx.lo = G.lo_p + G.lo_q;
    int hi = G.lo_p + P - 1 + G.lo_q + Q - 1;

    // Per total degree: the cells (p, q), p ascending, with their
    // injection/projection into the degreewise sum.
    for (int n = out.cx.lo; n <= hi; ++n) {
        std::vector<int> cells;
        std::vector<CatObj> parts;
        for (int p = std::max(G.lo_p, n - (G.lo_q + Q - 1)); p <= std::min(G.lo_p + P - 1, n - G.lo_q);
             ++p) {
            cells.push_back(p);
            parts.push_back(G.obs[p - G.lo_p][n - p - G.lo_q]);
        }
        SumBundle b = bundle_sum(G.ctx, parts);
        std::vector<TotCell> layer;
        for (size_t i = 0; i < cells.size(); ++i) layer.push_back(TotCell{cells[i], b.in[i], b.pr[i]});
        out.cells.push_back(std::move(layer));
        out.cx.obs.push_back(b.total);
    }
    for (int n = out.cx.lo; n < hi; ++n) {
        const std::vector<TotCell>& src = out.cells[n - out.cx.lo];
        const std::vector<TotCell>& dst = out.cells[n + 1 - out.cx.lo];
        auto dst_cell = [&](int p) -> const TotCell* {
            for (const TotCell& c : dst)
                if (c.p == p) return &c;
            return nullptr;
        };
        Mat d(f, dim_at(out.cx, n + 1), dim_at(out.cx, n));
        for (const TotCell& c : src) {
            int p = c.p, q = n - p;
            if (p + 1 <= G.lo_p + P - 1) {
                const TotCell* t = dst_cell(p + 1);
                d = d + t->in * G.dh[p - G.lo_p][q - G.lo_q] * c.pr;
            }
            if (q + 1 <= G.lo_q + Q - 1) {
                const TotCell* t = dst_cell(p);
                Mat step = t->in * G.dv[p - G.lo_p][q - G.lo_q] * c.pr;
                d = d + (p % 2 == 0 ? step : neg(f, step));
            }
        }
        out.cx.diffs.push_back(d);
    }
    return out;
}

BoundedComplex totalize(const Bigrid& G) { return totalize_cells(G).cx; }

ValidationResult validate_vect_complex(const VectComplex& V) {
    ValidationResult out;
    size_t want = V.dims.empty() ? 0 : V.dims.size() - 1;
    if (V.diffs.size() != want) {
        out.fail("vect complex shape", "differential count");
        return out;
    }
    for (size_t i = 0; i < V.diffs.size(); ++i)
        if (V.diffs[i].rows() != V.dims[i + 1] || V.diffs[i].cols() != V.dims[i])
            out.fail("vect complex shape", "degree " + std::to_string(V.lo + (int)i));
    if (!out.ok) return out;
    for (size_t i = 0; i + 1 < V.diffs.size(); ++i)
        if (!(V.diffs[i + 1] * V.diffs[i]).is_zero())
            out.fail("vect d after d", "degree " + std::to_string(V.lo + (int)i));
    return out;
}

std::vector<int> cohomology_dims(const VectComplex& V) {
    std::vector<int> out;
    for (int i = 0; i < (int)V.dims.size(); ++i) {
        int rk_out = i < (int)V.diffs.size() ? row_space(V.diffs[i]).dim() : 0;
        int rk_in = i > 0 ? row_space(V.diffs[i - 1]).dim() : 0;
        out.push_back(V.dims[i] - rk_out - rk_in);
    }
    return out;
}

HomTotal hom_total_complex(const BoundedComplex& X, const BoundedComplex& J) {
    require(same_ctx(X.ctx, J.ctx), "hom_total_complex: different categories");
    Field f = ctx_field(X.ctx);
    HomTotal out;
    out.vc.f = f;
    if (X.obs.empty() || J.obs.empty()) return out;
    int lo = J.lo - X.hi();
    int hi = J.hi() - X.lo;
    out.vc.lo = lo;
    for (int n = lo; n <= hi; ++n) {
        std::vector<HomCell> cells;
        int off = 0;
        for (int p = X.lo; p <= X.hi(); ++p) {
            if (!J.stored(p + n)) continue;
            HomCell c;
            c.p = p;
            c.basis = obj_hom(obj_at(X, p), obj_at(J, p + n));
            c.offset = off;
            off += c.basis.dim();
            cells.push_back(c);
        }
        out.vc.dims.push_back(off);
        out.cells.push_back(std::move(cells));
    }
    for (int n = lo; n < hi; ++n) {
        const std::vector<HomCell>& src = out.cells[n - lo];
        const std::vector<HomCell>& dst = out.cells[n + 1 - lo];
        Mat d(f, out.vc.dims[n + 1 - lo], out.vc.dims[n - lo]);
        auto dst_cell = [&](int p) -> const HomCell* {
            for (const HomCell& c : dst)
                if (c.p == p) return &c;
            return nullptr;
        };
        for (const HomCell& c : src) {
            int dx = dim_at(X, c.p);
            int dj = dim_at(J, c.p + n);
            for (int t = 0; t < c.basis.dim(); ++t) {
                Mat ft = Mat::unflatten(c.basis.vectors.row(t), dj, dx);
                Mat up = diff_at(J, c.p + n) * ft;
                if (!up.is_zero()) {
                    const HomCell* tc = dst_cell(c.p);
                    require(tc != nullptr, "hom_total_complex: missing target cell");
                    Mat coords = solve(tc->basis.inclusion(), up.flatten_row().transpose());
                    for (int r = 0; r < coords.rows(); ++r)
                        d.set(tc->offset + r, c.offset + t, coords.at(r, 0));
                }
                Mat back = ft * diff_at(X, c.p - 1);
                if (!back.is_zero()) {
                    Mat term = n % 2 == 0 ? neg(f, back) : back;
                    const HomCell* tc = dst_cell(c.p - 1);
                    require(tc != nullptr, "hom_total_complex: missing target cell");
                    Mat coords = solve(tc->basis.inclusion(), term.flatten_row().transpose());
                    for (int r = 0; r < coords.rows(); ++r)
                        d.set(tc->offset + r, c.offset + t, f.add(d.at(tc->offset + r, c.offset + t),
                                                                 coords.at(r, 0)));
                }
            }
        }
        out.vc.diffs.push_back(d);
    }
    return out;
}

}  // namespace cotra
