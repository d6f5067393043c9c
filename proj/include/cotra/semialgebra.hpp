#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cotra/tensorfun.hpp"

namespace cotra {

// Semialgebra over a coalgebra C: a C-C-bicomodule S with an associative
// multiplication S [cot]_C S -> S and unit C -> S, both bicomodule morphisms.
// The cotensor square is stored in the canonical kernel basis so that the
// multiplication matrix has a well-defined column convention.
struct Semialgebra {
    CoalgebraPtr C;
    Bicomodule carrier;
    Mat semiunit;   // dim(S) x dim(C)
    Mat semimult;   // dim(S) x dim(S [cot] S)
    CotensorResult square;  // S [cot]_C S inside S (x) S

    // Comodule retractions of the coactions into the cofree hulls, present
    // exactly when S is injective as a left / right C-comodule.
    std::optional<Mat> left_retraction;
    std::optional<Mat> right_retraction;

    int dim() const { return carrier.dim; }
    const Field& field() const { return C->field; }
};

using SemialgebraPtr = std::shared_ptr<const Semialgebra>;

struct SemialgebraValidation {
    ValidationResult base;
    bool injective_left = false;
    bool injective_right = false;
};

// Builds the derived members (cotensor square, injectivity retractions) from
// the raw data and checks shapes.  Does not run the axiom suite.
SemialgebraPtr make_semialgebra(CoalgebraPtr C, Bicomodule carrier, Mat semiunit, Mat semimult);

SemialgebraValidation validate_semialgebra(const Semialgebra& S);

// C itself with the counit collapse as multiplication.
SemialgebraPtr trivial_semialgebra(const CoalgebraPtr& C);

// Functions on a finite group G as a semialgebra over functions on a
// subgroup H.  `mult` is the multiplication table of G (mult[i][j] = index of
// g_i g_j) and `subgroup` lists the element indices of H.  Coactions come
// from left and right translation, the multiplication sums fibers of the
// group multiplication over a fixed transversal of the left cosets of H.
SemialgebraPtr build_group_semialgebra(const Field& f, const std::vector<std::vector<int>>& mult,
                                       const std::vector<int>& subgroup,
                                       CoalgebraPtr* C_out = nullptr);

// Left semimodule: a left C-comodule with an action S [cot]_C M -> M.
struct Semimodule {
    SemialgebraPtr S;
    Comodule co;  // left C-comodule
    Mat act;      // dim(M) x dim(S [cot] M)
};

// Right semimodule: a right C-comodule with an action N [cot]_C S -> N.
struct RightSemimodule {
    SemialgebraPtr S;
    Comodule co;  // right C-comodule
    Mat act;      // dim(N) x dim(N [cot] S)
};

// Left semicontramodule: a left C-contramodule with a coaction
// P -> Cohom_C(S, P), stored against the canonical cokernel presentation of
// Cohom_C(S, P).
struct Semicontramodule {
    SemialgebraPtr S;
    Contramodule contra;
    CokerResult cohom;  // Cohom_C(S, contra)
    Mat sact;           // cohom.dim x dim(P)
};

// Bisemimodule: an S-T-bisemimodule whose underlying space is a bicomodule
// over the two base coalgebras and whose semiactions commute.
struct Bisemimodule {
    SemialgebraPtr S;
    SemialgebraPtr T;
    Bicomodule bi;
    Mat lact;  // dim(K) x dim(S [cot] K)
    Mat ract;  // dim(K) x dim(K [cot] T)
};

ValidationResult validate_semimodule(const Semimodule& M);
ValidationResult validate_right_semimodule(const RightSemimodule& N);
ValidationResult validate_semicontramodule(const Semicontramodule& P);
ValidationResult validate_bisemimodule(const Bisemimodule& K);

// S over itself.
Semimodule regular_semimodule(const SemialgebraPtr& S);
RightSemimodule regular_right_semimodule(const SemialgebraPtr& S);
Bisemimodule regular_bisemimodule(const SemialgebraPtr& S);

// S [cot]_C L with the multiplication action, left adjoint to the forgetful
// functor.  With verify set, checks the adjunction bijection
// Hom_S(S [cot] L, M) = Hom_C(L, M) at M = S [cot] L on explicit bases.
Semimodule induced_semimodule(const SemialgebraPtr& S, const Comodule& L);

// N [cot]_C S with the multiplication action, for a right C-comodule N.
RightSemimodule induced_right_semimodule(const SemialgebraPtr& S, const Comodule& N);

struct SubSemimodule {
    Semimodule semi;
    Mat incl;
};

struct QuotSemimodule {
    Semimodule semi;
    Mat proj;
};

// U must be invariant under the coaction and the semiaction; throws
// otherwise.  The quotient semiaction needs S [cot] M -> S [cot] M/U to be
// surjective, which holds when S is an injective right C-comodule.
SubSemimodule sub_semimodule(const Semimodule& M, const SubspaceBasis& U);
QuotSemimodule quot_semimodule(const Semimodule& M, const SubspaceBasis& U);

struct SubSemicontra {
    Semicontramodule semi;
    Mat incl;
};

struct QuotSemicontra {
    Semicontramodule semi;
    Mat proj;
};

SubSemicontra sub_semicontramodule(const Semicontramodule& P, const SubspaceBasis& U);
QuotSemicontra quot_semicontramodule(const Semicontramodule& P, const SubspaceBasis& U);

// Cohom_C(S, Q) with the comultiplication coaction, right adjoint to the
// forgetful functor on semicontramodules.
Semicontramodule coinduced_semicontramodule(const SemialgebraPtr& S, const Contramodule& Q);

// Checks the two adjunction transfers between Hom_S(S [cot] L, M) and
// Hom_C(L, M) against each other on explicit bases; throws on failure.
void verify_induced_adjunction(const SemialgebraPtr& S, const Comodule& L, const Semimodule& M);
void verify_coinduced_adjunction(const SemialgebraPtr& S, const Semicontramodule& P,
                                 const Contramodule& Q);

SubspaceBasis hom_semimodule(const Semimodule& L, const Semimodule& M);
SubspaceBasis hom_semicontra(const Semicontramodule& P, const Semicontramodule& Q);
bool is_semimodule_morphism(const Semimodule& L, const Semimodule& M, const Mat& f);
bool is_semicontra_morphism(const Semicontramodule& P, const Semicontramodule& Q, const Mat& g);

// Hom(N, k^v) as a left C-contramodule, for a right C-comodule N.
Contramodule dual_tensor_contramodule(const Comodule& N, int v);

// The natural isomorphism Cohom_C(K, Hom(N, k^v)) = Hom(N [cot]_C K, k^v)
// for a left C-comodule K and right C-comodule N, as an invertible matrix
// from the cokernel presentation to (N [cot] K)^* (x) k^v.
Mat cohom_dual_iso(const Comodule& K, const Comodule& N, int v);

// Hom(N, k^v) as a left semicontramodule over S, for a right S-semimodule N.
Semicontramodule hom_k_semicontra(const RightSemimodule& N, int v);

// Evaluation map (N [cot]_C K) [ctn]_D Cohom_C(K, P) -> N [ctn]_C P for a
// C-D-bicomodule K, right C-comodule N and left C-contramodule P.
Mat eta_map(const Comodule& N, const Bicomodule& K, const Contramodule& P);

struct SemiCtnResult {
    int dim = 0;
    Mat proj;    // from the ambient N (x) P
    Mat proj_c;  // from the ambient onto N [ctn]_C P
    Mat rel;     // difference of the two coequalizer legs, on N [ctn]_C P
};

// N [ctn]_S P: the coequalizer of the action and coaction legs
// (N [cot] S) [ctn]_C P -> N [ctn]_C P.
SemiCtnResult semi_contratensor(const RightSemimodule& N, const Semicontramodule& P);

// Checks that functionals on N [ctn]_S P correspond exactly to semicontra
// morphisms P -> Hom(N, k^v); throws on failure.
void verify_semi_contratensor_duality(const RightSemimodule& N, const Semicontramodule& P, int v);

// K [ctn]_T P as a left S-semimodule, and Hom_S(K, M) as a left
// T-semicontramodule, for an S-T-bisemimodule K.
Semimodule bisemi_contratensor(const Bisemimodule& K, const Semicontramodule& P,
                               Mat* proj_out = nullptr);
Semicontramodule bisemi_hom(const Bisemimodule& K, const Semimodule& M, Mat* basis_out = nullptr,
                            bool certify_sections = false);

Semimodule phi_semi(const SemialgebraPtr& S, const Semicontramodule& P, Mat* proj_out = nullptr);
Semicontramodule psi_semi(const SemialgebraPtr& S, const Semimodule& M, Mat* basis_out = nullptr);

// Comparison map Phi_C(U(P)) -> U(Phi_S(P)) induced by the semiunit; square
// and colinear by construction, invertible exactly when the two squares agree.
Mat phi_forgetful_square(const SemialgebraPtr& S, const Semicontramodule& P);
// Comparison map U(Psi_S(M)) -> Psi_C(U(M)) given by restricting a semimodule
// morphism S -> M along the semiunit.
Mat psi_forgetful_square(const SemialgebraPtr& S, const Semimodule& M);

// Adjunction transfers between Hom_S(K [ctn]_T P, M) and
// Hom^T(P, Hom_S(K, M)), and the unit / counit they induce.
Mat semi_adjoint_map(const Bisemimodule& K, const Semicontramodule& P, const Semimodule& M,
                     const Mat& g);
Mat semi_adjoint_map_back(const Bisemimodule& K, const Semicontramodule& P, const Semimodule& M,
                          const Mat& h);
Mat semi_adjunction_counit(const Bisemimodule& K, const Semimodule& M);
Mat semi_adjunction_unit(const Bisemimodule& K, const Semicontramodule& P);

// Canonical embedding of a semimodule into an injective one of the form
// S [ctn]_S Hom(S, k^v), together with the evaluation map that classifies
// morphisms into it.
struct SemiEnvelope {
    Semimodule J;
    Mat emb;  // M -> J, injective
    Mat ev;   // J -> k^v with v = dim(M)
};
SemiEnvelope semimodule_injective_envelope(const Semimodule& M);

// Morphisms M -> S [ctn]_S Hom(S, k^v) correspond to k-linear maps M -> k^v
// through the evaluation.  Returns the morphism classified by g (a v x
// dim(M) matrix) together with the injective target; g = id recovers the
// canonical envelope.  The returned map is injective whenever the cofree
// extension of g over the base coalgebra is, which keeps v much smaller
// than dim(M) for most inputs.
SemiEnvelope semimodule_injective_embedding(const Semimodule& M, const Mat& g);

// Canonical surjection onto a semicontramodule from a projective one of the
// form Hom_S(S, S (x) k^v), with the coevaluation that classifies morphisms
// out of it.
struct SemiCoEnvelope {
    Semicontramodule F;
    Mat sur;   // F -> Q, surjective
    Mat coev;  // k^v -> F with v = dim(Q)
};
SemiCoEnvelope semicontra_projective_envelope(const Semicontramodule& Q);

// Mirror of the embedding above: the morphism Hom_S(S, S (x) k^v) -> Q
// classified by a dim(Q) x v matrix g, surjective whenever the free
// extension of g over the base coalgebra is.
SemiCoEnvelope semicontra_projective_covering(const Semicontramodule& Q, const Mat& g);

// Splitting tests: a retraction of the canonical embedding, resp. a section
// of the canonical surjection, when one exists.
std::optional<Mat> semimodule_injectivity_retraction(const Semimodule& M);
std::optional<Mat> semicontra_projectivity_section(const Semicontramodule& Q);

}  // namespace cotra
