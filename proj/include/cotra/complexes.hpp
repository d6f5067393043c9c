#pragma once

#include "cotra/category.hpp"

namespace cotra {

// Bounded cochain complex in one of the six categories.  Objects sit in
// degrees lo .. lo + obs.size() - 1 and diffs[i] maps obs[i] to obs[i+1].
// Degrees outside the stored window are implicitly zero.
struct BoundedComplex {
    CatCtx ctx;
    int lo = 0;
    std::vector<CatObj> obs;
    std::vector<Mat> diffs;

    int hi() const { return lo + static_cast<int>(obs.size()) - 1; }
    bool stored(int n) const { return n >= lo && n <= hi(); }
};

BoundedComplex single_complex(CatObj X, int degree);
BoundedComplex zero_complex(const CatCtx& ctx);
CatObj obj_at(const BoundedComplex& X, int n);
int dim_at(const BoundedComplex& X, int n);
Mat diff_at(const BoundedComplex& X, int n);

ValidationResult validate_complex(const BoundedComplex& X);

// Degreewise map between two complexes; maps[i] acts in degree lo + i and
// degrees outside the window carry the zero map.
struct ChainMap {
    int lo = 0;
    std::vector<Mat> maps;
};

ChainMap chain_map(int lo, std::vector<Mat> maps);
Mat map_at(const ChainMap& F, const BoundedComplex& X, const BoundedComplex& Y, int n);
bool is_chain_map(const BoundedComplex& X, const BoundedComplex& Y, const ChainMap& F);

ChainMap identity_chain_map(const BoundedComplex& X);
ChainMap zero_chain_map(const BoundedComplex& X, const BoundedComplex& Y);
ChainMap compose(const BoundedComplex& X, const BoundedComplex& Y, const BoundedComplex& Z,
                 const ChainMap& F, const ChainMap& G);

// X[s]^n = X^{n+s} with the differential rescaled by (-1)^s.
BoundedComplex shift(const BoundedComplex& X, int s);
ChainMap shift_map(const ChainMap& F, int s);

BoundedComplex complex_direct_sum(const BoundedComplex& X, const BoundedComplex& Y);

// Cone of a chain map: C^n = X^{n+1} (+) Y^n with d(x, y) =
// (-d x, f x + d y).  f is quasi-isomorphism iff the cone is acyclic.
BoundedComplex cone(const BoundedComplex& X, const BoundedComplex& Y, const ChainMap& F);

// Degreewise cohomology as validated objects of the same category,
// reported for degrees lo .. hi.
std::vector<CatObj> cohomology(const BoundedComplex& X);
std::vector<int> cohomology_dims(const BoundedComplex& X);
bool is_acyclic(const BoundedComplex& X);

// Canonical truncations together with the comparison map: tau_{<=d} keeps
// degrees below d and the kernel of the outgoing differential at d, and
// includes into X; tau_{>=e} keeps degrees above e and the cokernel of the
// incoming differential at e, and receives the projection from X.
struct Truncation {
    BoundedComplex cx;
    ChainMap cmp;
};

Truncation truncate_above(const BoundedComplex& X, int d);
Truncation truncate_below(const BoundedComplex& X, int e);

// Rectangular bicomplex with commuting differentials; dh[p][q] maps cell
// (p, q) to (p+1, q) and dv[p][q] to (p, q+1).  The first index is the
// outer one throughout.
struct Bigrid {
    CatCtx ctx;
    int lo_p = 0;
    int lo_q = 0;
    std::vector<std::vector<CatObj>> obs;
    std::vector<std::vector<Mat>> dh;
    std::vector<std::vector<Mat>> dv;
};

ValidationResult validate_bigrid(const Bigrid& G);

// One summand of a total degree: the grid cell (p, n - p) together with its
// injection into and projection out of the totalized term.
struct TotCell {
    int p = 0;
    Mat in;
    Mat pr;
};

struct Totalization {
    BoundedComplex cx;
    std::vector<std::vector<TotCell>> cells;  // per stored degree, p ascending
};

// Total complex with the sign (-1)^p put on the vertical differential.
Totalization totalize_cells(const Bigrid& G);
BoundedComplex totalize(const Bigrid& G);

// Plain complex of k-vector spaces, used for Hom complexes whose cells are
// morphism spaces rather than objects of the categories.
struct VectComplex {
    Field f;
    int lo = 0;
    std::vector<int> dims;
    std::vector<Mat> diffs;

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
};

ValidationResult validate_vect_complex(const VectComplex& V);
std::vector<int> cohomology_dims(const VectComplex& V);

// Hom complex: cell n is (+)_p Hom(X^p, J^{p+n}) on the canonical hom
// bases, with differential f |-> d_J f - (-1)^n f d_X.  The per-cell layout
// records, for every p contributing to a given total degree, the hom basis
// used and the offset of its coordinate block.
struct HomCell {
    int p = 0;
    SubspaceBasis basis;
    int offset = 0;
};

struct HomTotal {
    VectComplex vc;
    std::vector<std::vector<HomCell>> cells;
};

HomTotal hom_total_complex(const BoundedComplex& X, const BoundedComplex& J);

}  // namespace cotra
