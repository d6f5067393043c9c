#pragma once

#include "cotra/comodule.hpp"

namespace cotra {

// C-D-bicomodule: a left C-comodule and right D-comodule structure on the
// same space whose coactions commute.
struct Bicomodule {
    CoalgebraPtr C;
    CoalgebraPtr D;
    int dim = 0;
    Mat left_coaction;   // (dimC*dim) x dim
    Mat right_coaction;  // (dim*dimD) x dim
};

ValidationResult validate_bicomodule(const Bicomodule& B);

Comodule left_part(const Bicomodule& B);
Comodule right_part(const Bicomodule& B);

// Both structures must individually validate; the commuting axiom is checked
// here as well.
Bicomodule bicomodule_from_parts(const Comodule& left, const Comodule& right);

// C as a C-C-bicomodule via the comultiplication.
Bicomodule regular_bicomodule(const CoalgebraPtr& C);

// C (x) V (x) D with dim V = k.
Bicomodule cofree_bicomodule(const CoalgebraPtr& C, const CoalgebraPtr& D, int k);

SubspaceBasis hom_bicomod(const Bicomodule& M, const Bicomodule& N);
bool is_bicomodule_morphism(const Bicomodule& M, const Bicomodule& N, const Mat& f);

struct SubBicomodule {
    Bicomodule bicomodule;
    Mat incl;
};

struct QuotBicomodule {
    Bicomodule bicomodule;
    Mat proj;
};

SubBicomodule sub_bicomodule(const Bicomodule& B, const SubspaceBasis& U);
QuotBicomodule quot_bicomodule(const Bicomodule& B, const SubspaceBasis& U);

}  // namespace cotra
