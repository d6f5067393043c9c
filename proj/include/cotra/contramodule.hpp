#pragma once

#include "cotra/coalgebra.hpp"
#include "cotra/comodule.hpp"

namespace cotra {

// Finite-dimensional left contramodule over D, given by the structure map
//   pi: Hom(D, P) -> P
// written on the identification Hom(D, P) = D^* (x) P (dual factor outer),
// so pi has shape dim x (dimD*dim).  In finite dimension this is the same
// thing as a left module over the dual algebra D^*, with pi as the action.
struct Contramodule {
    CoalgebraPtr D;
    int dim = 0;
    Mat pi;
};

ValidationResult validate_contramodule(const Contramodule& P);

// Hom(D, V) = D^* (x) V with the free structure pi = mult (x) id.
Contramodule free_contramodule(const CoalgebraPtr& D, int k);

// Morphisms P -> Q; rows are flattened matrices of shape dim(Q) x dim(P).
SubspaceBasis hom_contra(const Contramodule& P, const Contramodule& Q);
bool is_contra_morphism(const Contramodule& P, const Contramodule& Q, const Mat& g);

struct SubContramodule {
    Contramodule contra;
    Mat incl;
};

struct QuotContramodule {
    Contramodule contra;
    Mat proj;
};

SubContramodule sub_contramodule(const Contramodule& P, const SubspaceBasis& U);
QuotContramodule quot_contramodule(const Contramodule& P, const SubspaceBasis& U);

SubContramodule image_subcontra(const Contramodule& P, const Contramodule& Q, const Mat& g);
SubContramodule kernel_subcontra(const Contramodule& P, const Contramodule& Q, const Mat& g);

// Largest quotient of P that is a contramodule over the subcoalgebra E:
// divides out the action of the functionals vanishing on E.
QuotContramodule max_quotient_over(const Contramodule& P, const Subcoalgebra& E);

// The dual of a finite-dimensional right D-comodule is a left D-contramodule:
//   pi_{N^*}[a, u*dimN + b] = rho_N[b*dimD + u, a].
Contramodule contramodule_dual(const Comodule& N);
// Contravariant action on morphisms: f: M -> N yields f^T: N^* -> M^*.
Mat contramodule_dual_map(const Mat& f);

// pi itself is a surjective morphism from the free contramodule on the
// underlying space of P; the returned map is validated.
Mat finitely_generated_witness(const Contramodule& P);

// Hom(D,V1) -e1-> Hom(D,V0) -e0-> P -> 0 with e0 surjective and
// ker e0 = im e1.
struct ContraPresentation {
    Contramodule free0;
    Contramodule free1;
    Mat e0;
    Mat e1;
};

ContraPresentation contra_presentation(const Contramodule& P);

// Contramodule section of the canonical surjection free(P) -> P (given by
// the contraaction itself) when P is projective, nullopt otherwise.
std::optional<Mat> projective_splitting(const Contramodule& P);

}  // namespace cotra
