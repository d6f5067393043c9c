#pragma once

#include "cotra/complexes.hpp"

namespace cotra {

// Bounded complex of env-split terms quasi-isomorphic to the input, built
// row by row from envelope steps.  On the injective side cmp embeds the
// input into the total complex; on the projective side cmp covers it.  A
// row whose remainder is already env-split finishes the construction and
// marks it complete; otherwise the row cap decides where to stop.
struct Resolution {
    BoundedComplex total;
    ChainMap cmp;
    int stages = 0;
    bool complete = false;
};

Resolution injective_resolution(const BoundedComplex& X, int rows, uint64_t seed = 1);
Resolution projective_resolution(const BoundedComplex& X, int rows, uint64_t seed = 1);

// Hyperext groups between bounded complexes in degrees a..b.  Comodule,
// bicomodule and semimodule categories resolve the second argument by
// injectives; contramodule categories resolve the first by projectives.
// The resolution is taken long enough that every reported degree is exact.
std::vector<int> ext_table(const BoundedComplex& X, const BoundedComplex& Y, int a, int b,
                           uint64_t seed = 1);
std::vector<int> ext_table(const CatObj& X, const CatObj& Y, int a, int b, uint64_t seed = 1);

// Left-derived contratensor of a right comodule against a contramodule
// over the same coalgebra; entry n - a is the n-th derived value.
std::vector<int> ctrtor_table(const Comodule& N, const Contramodule& P, int a, int b,
                              uint64_t seed = 1);

// Homological dimensions probed against the simple test family.  The scan
// stops at the first degree where every probe vanishes; if none occurs
// within the window the result is reported as not finite with the probe
// bound as its value.
struct DimResult {
    bool finite = true;
    int value = 0;
};

DimResult projective_dimension(const CatObj& X, int probe, uint64_t seed = 1);
DimResult injective_dimension(const CatObj& Y, int probe, uint64_t seed = 1);
DimResult contraflat_dimension(const Comodule& N, int probe, uint64_t seed = 1);

}  // namespace cotra
