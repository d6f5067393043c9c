#pragma once

#include "cotra/bicomodule.hpp"
#include "cotra/contramodule.hpp"

namespace cotra {

// --- Underlying spaces ---------------------------------------------------

// Cotensor product N [x]_C M of a right comodule and a left comodule over
// the same coalgebra: the kernel of
//   rho_N (x) id - id (x) rho_M : N (x) M -> N (x) C (x) M.
struct CotensorResult {
    SubspaceBasis space;  // inside N (x) M, flat index a*dim(M) + b
    Mat incl;             // (dimN*dimM) x dim
};

CotensorResult cotensor_space(const Comodule& N, const Comodule& M);

struct CokerResult {
    int dim = 0;
    Mat proj;  // dim x ambient
};

// Cohom_D(M, P) of a left D-comodule and a left D-contramodule: cokernel of
// Hom(M, Hom(D, P)) -> Hom(M, P); the ambient space is Hom(M,P) = M^* (x) P
// with flat index b*dim(P) + a.
CokerResult cohom_space(const Comodule& M, const Contramodule& P);

// Contratensor N (.)_D P of a right D-comodule and a left D-contramodule:
// cokernel of N (x) Hom(D, P) -> N (x) P, ambient flat index c*dim(P) + a.
CokerResult contratensor_space(const Comodule& N, const Contramodule& P);

// N (x)_{D^*} P, the tensor product over the dual algebra.
CokerResult tensor_over_dual_space(const Comodule& N, const Contramodule& P);

// The natural surjection N (x)_{D^*} P -> N (.)_D P; for finite-dimensional
// inputs it is an isomorphism, which the caller may verify by invertibility.
Mat compare_tensor_contratensor(const Comodule& N, const Contramodule& P);

// --- Structure carried by the functors ----------------------------------

// B [x]_D M for a C-D-bicomodule B: a left C-comodule.
Comodule cotensor_comodule(const Bicomodule& B, const Comodule& M, Mat* incl_out = nullptr);
// N [x]_C B for a C-D-bicomodule B: a right D-comodule.
Comodule cotensor_comodule_right(const Comodule& N, const Bicomodule& B, Mat* incl_out = nullptr);
// A [x]_D B for a C-D-bicomodule A and D-E-bicomodule B: a C-E-bicomodule.
Bicomodule cotensor_bicomodule(const Bicomodule& A, const Bicomodule& B, Mat* incl_out = nullptr);

// B (.)_D P for a C-D-bicomodule B and left D-contramodule P: a left
// C-comodule.
Comodule contratensor_comodule(const Bicomodule& B, const Contramodule& P, Mat* proj_out = nullptr);

// Cohom_C(B, P) for a C-D-bicomodule B and left C-contramodule P: a left
// D-contramodule.
Contramodule cohom_contramodule(const Bicomodule& B, const Contramodule& P, Mat* proj_out = nullptr);

// Hom over C of left comodules, from a C-D-bicomodule K into M, as a left
// D-contramodule.  basis_out receives the inclusion of the morphism space
// into Hom(K, M) = K^* (x) M (columns are flattened morphisms).
Contramodule hom_comod_contra(const Bicomodule& K, const Comodule& M, Mat* basis_out = nullptr);

// Functorial action on morphisms: h: P -> P' induces K (.) P -> K (.) P',
// and g: M -> M' induces Hom_C(K, M) -> Hom_C(K, M').
Mat contratensor_map(const Bicomodule& K, const Contramodule& P, const Contramodule& Pp,
                     const Mat& h);
Mat hom_comod_contra_map(const Bicomodule& K, const Comodule& M, const Comodule& Mp, const Mat& g);

// Functorial action in the bicomodule slot, along a bicomodule morphism
// h: K -> K2.  Contratensor is covariant there, Hom contravariant.
Mat contratensor_first_map(const Bicomodule& K, const Bicomodule& K2, const Mat& h,
                           const Contramodule& P);
Mat hom_comod_contra_first_map(const Bicomodule& K, const Bicomodule& K2, const Mat& h,
                               const Comodule& M);

// --- Adjunction  Hom_C(K (.)_D P, M)  =  Hom_D(P, Hom_C(K, M)) ----------

// Forward direction: a comodule morphism g: K (.)_D P -> M becomes a
// contramodule morphism P -> Hom_C(K, M).
Mat adjoint_map(const Bicomodule& K, const Contramodule& P, const Comodule& M, const Mat& g);
// Backward direction.
Mat adjoint_map_back(const Bicomodule& K, const Contramodule& P, const Comodule& M, const Mat& h);

// Counit K (.)_D Hom_C(K, M) -> M and unit P -> Hom_C(K, K (.)_D P).
Mat adjunction_counit(const Bicomodule& K, const Comodule& M);
Mat adjunction_unit(const Bicomodule& K, const Contramodule& P);

// --- Comodule-contramodule correspondence -------------------------------

// Phi_C(P) = C (.)_C P and Psi_C(M) = Hom_C(C, M).
Comodule phi_C(const CoalgebraPtr& C, const Contramodule& P, Mat* proj_out = nullptr);
Contramodule psi_C(const CoalgebraPtr& C, const Comodule& M, Mat* basis_out = nullptr);

}  // namespace cotra
