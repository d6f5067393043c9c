#include "cotra/coalgebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "cotra/rng.hpp"

namespace cotra {

std::string ValidationResult::summary() const {
    if (ok) return "ok";
    std::ostringstream os;
    for (size_t i = 0; i < failures.size(); ++i) {
        if (i) os << "; ";
        os << failures[i].axiom << " (" << failures[i].witness << ")";
    }
    return os.str();
}

namespace {

std::string first_mismatch(const Mat& A, const Mat& B) {
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (!A.field().eq(A.at(i, j), B.at(i, j))) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << "): " << A.at(i, j).get_str() << " vs "
                   << B.at(i, j).get_str();
                return os.str();
            }
    return "no mismatch";
}

}  // namespace

ValidationResult validate_coalgebra(const Coalgebra& C) {
    ValidationResult res;
    const int n = C.dim;
    require(n >= 0, "validate_coalgebra: negative dimension");
    if (C.comult.rows() != n * n || C.comult.cols() != n) {
        res.fail("shape", "comult must be (dim*dim) x dim");
        return res;
    }
    if (C.counit.rows() != 1 || C.counit.cols() != n) {
        res.fail("shape", "counit must be 1 x dim");
        return res;
    }
    const Mat I = Mat::identity(C.field, n);
    Mat lhs = Mat::kron(C.comult, I) * C.comult;
    Mat rhs = Mat::kron(I, C.comult) * C.comult;
    if (lhs != rhs) res.fail("coassociativity", first_mismatch(lhs, rhs));
    Mat cl = Mat::kron(C.counit, I) * C.comult;
    if (cl != I) res.fail("counit_left", first_mismatch(cl, I));
    Mat cr = Mat::kron(I, C.counit) * C.comult;
    if (cr != I) res.fail("counit_right", first_mismatch(cr, I));
    return res;
}

DualAlgebra dual_algebra(const Coalgebra& C) {
    const int n = C.dim;
    DualAlgebra A;
    A.field = C.field;
    A.dim = n;
    A.mult = Mat(C.field, n, n * n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A.mult.set(k, i * n + j, C.comult.at(j * n + i, k));
    A.unit = C.counit.transpose();
    return A;
}

ValidationResult validate_algebra(const DualAlgebra& A) {
    ValidationResult res;
    const int n = A.dim;
    if (A.mult.rows() != n || A.mult.cols() != n * n) {
        res.fail("shape", "mult must be dim x (dim*dim)");
        return res;
    }
    if (A.unit.rows() != n || A.unit.cols() != 1) {
        res.fail("shape", "unit must be dim x 1");
        return res;
    }
    const Mat I = Mat::identity(A.field, n);
    Mat lhs = A.mult * Mat::kron(A.mult, I);
    Mat rhs = A.mult * Mat::kron(I, A.mult);
    if (lhs != rhs) res.fail("associativity", first_mismatch(lhs, rhs));
    Mat ul = A.mult * Mat::kron(A.unit, I);
    if (ul != I) res.fail("unit_left", first_mismatch(ul, I));
    Mat ur = A.mult * Mat::kron(I, A.unit);
    if (ur != I) res.fail("unit_right", first_mismatch(ur, I));
    return res;
}

ValidationResult validate_subcoalgebra(const Subcoalgebra& E) {
    ValidationResult res;
    require(E.parent != nullptr, "validate_subcoalgebra: null parent");
    const Coalgebra& C = *E.parent;
    if (E.space.ambient_dim != C.dim) {
        res.fail("shape", "subspace ambient dimension differs from coalgebra dimension");
        return res;
    }
    Mat incl = E.space.inclusion();
    Mat image = C.comult * incl;
    if (!try_solve(Mat::kron(incl, incl), image).has_value())
        res.fail("subcoalgebra_closure", "comultiplication leaves the subspace");
    return res;
}

Mat left_mult(const DualAlgebra& A, int i) {
    const int n = A.dim;
    Mat L(A.field, n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) L.set(k, j, A.mult.at(k, i * n + j));
    return L;
}

Mat right_mult(const DualAlgebra& A, int j) {
    const int n = A.dim;
    Mat R(A.field, n, n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) R.set(k, i, A.mult.at(k, i * n + j));
    return R;
}

namespace {

SubspaceBasis full_space(const Field& f, int n) {
    return SubspaceBasis{n, Mat::identity(f, n)};
}

SubspaceBasis empty_space(const Field& f, int n) {
    return SubspaceBasis{n, Mat(f, 0, n)};
}

// Image of a subspace under a linear map (same ambient space).
SubspaceBasis map_subspace(const Mat& M, const SubspaceBasis& S) {
    return row_space((M * S.inclusion()).transpose());
}

// Closure of U under a family of operators.
SubspaceBasis spin_closure(const std::vector<Mat>& ops, SubspaceBasis U) {
    for (;;) {
        SubspaceBasis next = U;
        for (const Mat& L : ops) next = sum_subspace(next, map_subspace(L, U));
        if (next.dim() == U.dim()) return U;
        U = next;
    }
}

// Span of {x*y : x in P, y in Q}.
SubspaceBasis product_subspace(const DualAlgebra& A, const SubspaceBasis& P,
                               const SubspaceBasis& Q) {
    const int n = A.dim;
    if (P.dim() == 0 || Q.dim() == 0) return empty_space(A.field, n);
    Mat gens(A.field, P.dim() * Q.dim(), n);
    int r = 0;
    for (int a = 0; a < P.dim(); ++a)
        for (int b = 0; b < Q.dim(); ++b) {
            Mat prod = A.mult * Mat::kron(P.vectors.row(a).transpose(), Q.vectors.row(b).transpose());
            for (int k = 0; k < n; ++k) gens.set(r, k, prod.at(k, 0));
            ++r;
        }
    return row_space(gens);
}

bool is_two_sided_ideal(const DualAlgebra& A, const SubspaceBasis& K) {
    for (int i = 0; i < A.dim; ++i) {
        if (!subspace_contains(K, map_subspace(left_mult(A, i), K))) return false;
        if (!subspace_contains(K, map_subspace(right_mult(A, i), K))) return false;
    }
    return true;
}

// K must be a two-sided ideal; decides whether some power vanishes.
bool is_nilpotent_ideal(const DualAlgebra& A, const SubspaceBasis& K) {
    SubspaceBasis P = K;
    for (;;) {
        if (P.dim() == 0) return true;
        SubspaceBasis Pn = product_subspace(A, P, K);
        if (Pn.dim() == P.dim()) return false;
        P = Pn;
    }
}

// {x : x acts by zero on the module given by its action matrices}.
SubspaceBasis annihilator_of_module(const Field& f, const std::vector<Mat>& acts, int n) {
    const int m = acts.empty() ? 0 : acts[0].rows();
    Mat constraints(f, m * m, n);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) constraints.set(a * m + b, i, acts[i].at(a, b));
    return kernel(constraints);
}

Mat random_vector(const Field& f, int n, Rng& rng) {
    Mat v(f, n, 1);
    for (int i = 0; i < n; ++i) v.set(i, 0, rng.scalar(f));
    return v;
}

SubspaceBasis span_of_column(const Mat& v) {
    return row_space(v.transpose());
}

// Grows a submodule of the left regular module that is proper and (up to the
// vectors tried) cannot be enlarged while staying proper.
SubspaceBasis grow_maximal_submodule(const DualAlgebra& A, const std::vector<Mat>& lmults,
                                     Rng& rng) {
    const int n = A.dim;
    SubspaceBasis N = empty_space(A.field, n);
    for (;;) {
        bool extended = false;
        std::vector<Mat> candidates;
        for (int t = 0; t < 2 * n; ++t) candidates.push_back(random_vector(A.field, n, rng));
        for (int i = 0; i < n; ++i) {
            Mat e(A.field, n, 1);
            e.set(i, 0, A.field.one());
            candidates.push_back(e);
        }
        for (const Mat& w : candidates) {
            SubspaceBasis wspan = span_of_column(w);
            if (wspan.dim() == 0 || subspace_contains(N, wspan)) continue;
            SubspaceBasis N2 = spin_closure(lmults, sum_subspace(N, wspan));
            if (N2.dim() < n) {
                N = N2;
                extended = true;
                break;
            }
        }
        if (!extended) return N;
    }
}

struct SimpleModule {
    std::vector<Mat> acts;  // action of each algebra basis vector
    int dim = 0;
    int end_dim = 0;
};

// Brute-force simplicity certificate over a small prime field: every nonzero
// vector must generate the whole module.  Returns false when the module is
// not simple or the search space exceeds the budget.
bool certify_simple_bruteforce(const Field& f, const std::vector<Mat>& acts, int m) {
    if (m == 0) return false;
    if (m == 1) return true;
    const long p = f.characteristic();
    double count = 1;
    for (int i = 0; i < m; ++i) {
        count *= static_cast<double>(p);
        if (count > 250000.0) return false;
    }
    std::vector<long> digits(static_cast<size_t>(m), 0);
    for (;;) {
        int pos = 0;
        while (pos < m && digits[pos] == p - 1) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == m) break;
        ++digits[pos];
        Mat v(f, m, 1);
        for (int i = 0; i < m; ++i) v.set_long(i, 0, digits[i]);
        SubspaceBasis gen = spin_closure(acts, span_of_column(v));
        if (gen.dim() != m) return false;
    }
    return true;
}

bool modules_isomorphic(const SimpleModule& S, const SimpleModule& T) {
    if (S.dim != T.dim) return false;
    std::vector<std::pair<Mat, Mat>> pairs;
    for (size_t i = 0; i < S.acts.size(); ++i) pairs.push_back({T.acts[i], S.acts[i]});
    return solve_intertwiner(pairs, T.dim, S.dim).dim() > 0;
}

RadicalResult radical_char_zero(const DualAlgebra& A) {
    const int n = A.dim;
    Mat B(A.field, n, n);
    std::vector<Mat> lmults;
    for (int i = 0; i < n; ++i) lmults.push_back(left_mult(A, i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat P = lmults[i] * lmults[j];
            Scalar tr(0);
            for (int k = 0; k < n; ++k) tr = A.field.add(tr, P.at(k, k));
            B.set(i, j, tr);
        }
    RadicalResult res;
    res.radical = kernel(B);
    require(is_two_sided_ideal(A, res.radical), "radical_char_zero: trace radical not an ideal");
    require(is_nilpotent_ideal(A, res.radical), "radical_char_zero: trace radical not nilpotent");
    return res;
}

RadicalResult radical_char_p(const DualAlgebra& A, uint64_t seed, int max_trials) {
    const int n = A.dim;
    Rng rng(seed);
    std::vector<Mat> lmults;
    for (int i = 0; i < n; ++i) lmults.push_back(left_mult(A, i));

    SubspaceBasis K = full_space(A.field, n);
    std::vector<SimpleModule> simples;
    RadicalResult res;
    for (int trial = 0; trial < max_trials; ++trial) {
        if (is_two_sided_ideal(A, K) && is_nilpotent_ideal(A, K)) {
            res.status = CertStatus::Ok;
            res.radical = K;
            res.trials_used = trial;
            return res;
        }
        SubspaceBasis N = grow_maximal_submodule(A, lmults, rng);
        Mat incl = N.inclusion();
        Mat q = cokernel_projection(incl);
        Mat s = section_of_surjection(q);
        const int m = q.rows();
        if (m == 0) continue;
        SimpleModule S;
        S.dim = m;
        for (int i = 0; i < n; ++i) S.acts.push_back(q * lmults[i] * s);
        if (!certify_simple_bruteforce(A.field, S.acts, m)) continue;
        bool known = false;
        for (const SimpleModule& T : simples)
            if (modules_isomorphic(S, T)) {
                known = true;
                break;
            }
        if (known) continue;
        std::vector<std::pair<Mat, Mat>> pairs;
        for (int i = 0; i < n; ++i) pairs.push_back({S.acts[i], S.acts[i]});
        S.end_dim = solve_intertwiner(pairs, m, m).dim();
        simples.push_back(S);
        K = intersect(K, annihilator_of_module(A.field, S.acts, n));
    }
    if (is_two_sided_ideal(A, K) && is_nilpotent_ideal(A, K)) {
        res.status = CertStatus::Ok;
        res.radical = K;
        res.trials_used = max_trials;
        return res;
    }
    res.status = CertStatus::Indeterminate;
    res.radical = K;
    res.trials_used = max_trials;
    return res;
}

}  // namespace

RadicalResult algebra_radical(const DualAlgebra& A, uint64_t seed, int max_trials) {
    require(validate_algebra(A).ok, "algebra_radical: input fails algebra axioms");
    if (A.dim == 0) {
        RadicalResult res;
        res.radical = empty_space(A.field, 0);
        return res;
    }
    if (A.field.kind() == FieldKind::Rationals) return radical_char_zero(A);
    return radical_char_p(A, seed, max_trials);
}

CoradicalResult coradical(const CoalgebraPtr& C, uint64_t seed, int max_trials) {
    require(C != nullptr, "coradical: null coalgebra");
    DualAlgebra A = dual_algebra(*C);
    RadicalResult rad = algebra_radical(A, seed, max_trials);
    CoradicalResult res;
    res.status = rad.status;
    res.trials_used = rad.trials_used;
    res.coradical.parent = C;
    res.coradical.space = kernel(rad.radical.vectors);
    if (res.status == CertStatus::Ok)
        require(validate_subcoalgebra(res.coradical).ok,
                "coradical: annihilator of the radical is not a subcoalgebra");
    return res;
}

bool is_conilpotent_over(const CoalgebraPtr& C, const Subcoalgebra& E, uint64_t seed) {
    require(C != nullptr, "is_conilpotent_over: null coalgebra");
    require(E.parent == C, "is_conilpotent_over: subcoalgebra of a different coalgebra");
    require(validate_subcoalgebra(E).ok, "is_conilpotent_over: invalid subcoalgebra");
    const int n = C->dim;
    Mat incl = E.space.inclusion();
    Mat q = cokernel_projection(incl);
    const int m = q.rows();
    bool route_b;
    if (m == 0) {
        route_b = true;
    } else {
        Mat reduced = factor_through_surjection(Mat::kron(q, q) * C->comult, q);
        DualAlgebra Abar;
        Abar.field = C->field;
        Abar.dim = m;
        Abar.mult = Mat(C->field, m, m * m);
        for (int k = 0; k < m; ++k)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) Abar.mult.set(k, i * m + j, reduced.at(j * m + i, k));
        const SubspaceBasis whole = full_space(C->field, m);
        SubspaceBasis P = whole;
        route_b = true;
        while (P.dim() > 0) {
            SubspaceBasis Pn = product_subspace(Abar, P, whole);
            if (Pn.dim() == P.dim()) {
                route_b = false;
                break;
            }
            P = Pn;
        }
    }
    CoradicalResult corad = coradical(C, seed);
    if (corad.status == CertStatus::Ok) {
        bool route_a = subspace_contains(E.space, corad.coradical.space);
        require(route_a == route_b, "is_conilpotent_over: filtration and coradical routes disagree");
    }
    return route_b;
}

// --- Builders -----------------------------------------------------------

Coalgebra build_trivial(Field f) {
    Coalgebra C;
    C.field = f;
    C.dim = 1;
    C.comult = Mat(f, 1, 1);
    C.comult.set_long(0, 0, 1);
    C.counit = Mat(f, 1, 1);
    C.counit.set_long(0, 0, 1);
    C.labels = {"1"};
    return C;
}

namespace {

void enumerate_multi_indices(int m, int n, std::vector<std::vector<int>>& out) {
    for (int deg = 0; deg <= n; ++deg) {
        std::vector<int> idx(static_cast<size_t>(m), 0);
        std::vector<std::vector<int>> level;
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == m - 1) {
                idx[pos] = left;
                level.push_back(idx);
                return;
            }
            for (int v = left; v >= 0; --v) {
                idx[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        rec(0, deg);
        std::sort(level.begin(), level.end());
        for (auto& v : level) out.push_back(v);
    }
}

Scalar field_pow(const Field& f, const Scalar& base, long e) {
    Scalar acc = f.one();
    for (long i = 0; i < e; ++i) acc = f.mul(acc, base);
    return acc;
}

std::string multi_index_label(const std::vector<int>& a) {
    if (a.size() == 1) return "c" + std::to_string(a[0]);
    std::ostringstream os;
    os << "c(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

Coalgebra build_truncated_power_series_dual(Field f, int m, const Mat& q, int n) {
    require(m >= 1, "build_truncated_power_series_dual: need at least one variable");
    require(n >= 0, "build_truncated_power_series_dual: negative truncation order");
    require(q.rows() == m && q.cols() == m, "build_truncated_power_series_dual: q must be m x m");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            require(!f.is_zero(q.at(i, j)), "build_truncated_power_series_dual: zero q parameter");

    std::vector<std::vector<int>> basis;
    enumerate_multi_indices(m, n, basis);
    std::map<std::vector<int>, int> pos;
    for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);
    const int d = static_cast<int>(basis.size());

    Coalgebra C;
    C.field = f;
    C.dim = d;
    C.comult = Mat(f, d * d, d);
    C.counit = Mat(f, 1, d);
    for (int g = 0; g < d; ++g) {
        const std::vector<int>& gamma = basis[g];
        std::vector<int> alpha(static_cast<size_t>(m), 0);
        for (;;) {
            std::vector<int> beta(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) beta[i] = gamma[i] - alpha[i];
            Scalar coef = f.one();
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    long e = static_cast<long>(beta[i]) * alpha[j];
                    if (e != 0) coef = f.mul(coef, f.inv(field_pow(f, q.at(i, j), e)));
                }
            int a = pos.at(alpha);
            int b = pos.at(beta);
            C.comult.set(a * d + b, g, f.add(C.comult.at(a * d + b, g), coef));

            int pos_i = m - 1;
            while (pos_i >= 0 && alpha[pos_i] == gamma[pos_i]) {
                alpha[pos_i] = 0;
                --pos_i;
            }
            if (pos_i < 0) break;
            ++alpha[pos_i];
        }
        bool zero_index = true;
        for (int i = 0; i < m; ++i) zero_index = zero_index && gamma[i] == 0;
        if (zero_index) C.counit.set_long(0, g, 1);
        C.labels.push_back(multi_index_label(gamma));
    }
    return C;
}

Coalgebra build_group_functions(Field f, const std::vector<std::vector<int>>& table) {
    const int N = static_cast<int>(table.size());
    require(N >= 1, "build_group_functions: empty table");
    for (const auto& row : table) {
        require(static_cast<int>(row.size()) == N, "build_group_functions: table not square");
        for (int v : row) require(v >= 0 && v < N, "build_group_functions: entry out of range");
    }
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                require(table[table[a][b]][c] == table[a][table[b][c]],
                        "build_group_functions: multiplication not associative");
    int e = -1;
    for (int cand = 0; cand < N; ++cand) {
        bool ok = true;
        for (int g = 0; g < N; ++g) ok = ok && table[cand][g] == g && table[g][cand] == g;
        if (ok) {
            e = cand;
            break;
        }
    }
    require(e >= 0, "build_group_functions: no identity element");
    for (int g = 0; g < N; ++g) {
        bool has_inv = false;
        for (int h = 0; h < N; ++h) has_inv = has_inv || (table[g][h] == e && table[h][g] == e);
        require(has_inv, "build_group_functions: element without inverse");
    }

    Coalgebra C;
    C.field = f;
    C.dim = N;
    C.comult = Mat(f, N * N, N);
    C.counit = Mat(f, 1, N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) C.comult.set_long(a * N + b, table[a][b], 1);
    C.counit.set_long(0, e, 1);
    for (int g = 0; g < N; ++g) C.labels.push_back("g" + std::to_string(g));
    return C;
}

Coalgebra build_matrix_coalgebra(Field f, int n) {
    require(n >= 1, "build_matrix_coalgebra: size must be positive");
    const int d = n * n;
    Coalgebra C;
    C.field = f;
    C.dim = d;
    C.comult = Mat(f, d * d, d);
    C.counit = Mat(f, 1, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k)
                C.comult.set_long((i * n + k) * d + (k * n + j), i * n + j, 1);
            if (i == j) C.counit.set_long(0, i * n + j, 1);
            C.labels.push_back("e" + std::to_string(i) + "_" + std::to_string(j));
        }
    return C;
}

Coalgebra build_dual_of_algebra(Field f, const Mat& mult, const Mat& unit,
                                std::vector<std::string> labels) {
    const int n = mult.rows();
    require(mult.cols() == n * n, "build_dual_of_algebra: mult must be dim x (dim*dim)");
    require(unit.rows() == n && unit.cols() == 1, "build_dual_of_algebra: unit must be dim x 1");
    DualAlgebra A{f, n, mult, unit};
    ValidationResult val = validate_algebra(A);
    require(val.ok, "build_dual_of_algebra: " + val.summary());
    Coalgebra C;
    C.field = f;
    C.dim = n;
    C.comult = mult.transpose();
    C.counit = unit.transpose();
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    require(static_cast<int>(labels.size()) == n, "build_dual_of_algebra: wrong label count");
    C.labels = std::move(labels);
    return C;
}

Coalgebra build_upper_triangular_dual(Field f, int n) {
    require(n >= 1, "build_upper_triangular_dual: size must be positive");
    std::vector<std::pair<int, int>> basis;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) basis.push_back({i, j});
    const int d = static_cast<int>(basis.size());
    std::map<std::pair<int, int>, int> pos;
    for (int t = 0; t < d; ++t) pos[basis[t]] = t;

    Mat mult(f, d, d * d);
    Mat unit(f, d, 1);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            auto [i, j] = basis[a];
            auto [k, l] = basis[b];
            if (j == k) mult.set_long(pos.at({i, l}), a * d + b, 1);
        }
    for (int i = 0; i < n; ++i) unit.set_long(pos.at({i, i}), 0, 1);
    std::vector<std::string> labels;
    for (auto [i, j] : basis) labels.push_back("e" + std::to_string(i) + "_" + std::to_string(j));
    return build_dual_of_algebra(f, mult, unit, labels);
}

Coalgebra direct_sum(const Coalgebra& A, const Coalgebra& B) {
    require(A.field == B.field, "direct_sum: mixed fields");
    const int na = A.dim, nb = B.dim, n = na + nb;
    Coalgebra C;
    C.field = A.field;
    C.dim = n;
    C.comult = Mat(A.field, n * n, n);
    C.counit = Mat(A.field, 1, n);
    for (int k = 0; k < na; ++k) {
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) C.comult.set(i * n + j, k, A.comult.at(i * na + j, k));
        C.counit.set(0, k, A.counit.at(0, k));
    }
    for (int k = 0; k < nb; ++k) {
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j)
                C.comult.set((na + i) * n + (na + j), na + k, B.comult.at(i * nb + j, k));
        C.counit.set(0, na + k, B.counit.at(0, k));
    }
    C.labels = A.labels;
    for (const auto& l : B.labels) C.labels.push_back(l);
    while (static_cast<int>(C.labels.size()) < n) C.labels.push_back("x" + std::to_string(C.labels.size()));
    return C;
}

}  // namespace cotra
