#pragma once

#include <optional>

#include "cotra/coalgebra.hpp"

namespace cotra {

enum class Side { Left, Right };

// Finite-dimensional comodule over C.
//   Left:  coaction rho: M -> C (x) M, shape (dimC*dim) x dim,
//          flat row i*dim + b  =  c_i (x) m_b.
//   Right: coaction rho: M -> M (x) C, shape (dim*dimC) x dim,
//          flat row b*dimC + i  =  m_b (x) c_i.
struct Comodule {
    CoalgebraPtr C;
    Side side = Side::Left;
    int dim = 0;
    Mat coaction;
};

ValidationResult validate_comodule(const Comodule& M);

// C (x) V (left) or V (x) C (right) with dim V = k.
Comodule cofree_comodule(const CoalgebraPtr& C, Side side, int k);

// C as a comodule over itself.
Comodule regular_comodule(const CoalgebraPtr& C, Side side);

// The comodule seen as a module over the dual algebra.
//   Left comodule  -> left C^*-module,  act: dim x (dimC*dim),  f.m = f(m_(-1)) m_(0).
//   Right comodule -> right C^*-module, act: dim x (dim*dimC),  m.f = m_(0) f(m_(1)).
Mat comodule_action(const Comodule& M);

// Morphisms M -> N (same side, same coalgebra); rows are flattened matrices
// of shape dim(N) x dim(M).
SubspaceBasis hom_comod(const Comodule& M, const Comodule& N);
bool is_comodule_morphism(const Comodule& M, const Comodule& N, const Mat& f);

struct SubComodule {
    Comodule comodule;
    Mat incl;  // dim(M) x dim(sub)
};

struct QuotComodule {
    Comodule comodule;
    Mat proj;  // dim(quot) x dim(M)
};

// U must be coaction-invariant; throws otherwise.
SubComodule sub_comodule(const Comodule& M, const SubspaceBasis& U);
QuotComodule quot_comodule(const Comodule& M, const SubspaceBasis& U);

// Largest subcomodule of M contained in the subspace W.
SubspaceBasis max_subcomodule_in(const Comodule& M, const SubspaceBasis& W);

// {m : rho(m) lands in E (x) M (resp. M (x) E)}; for a subcoalgebra E this
// is automatically a subcomodule, and for E = coradical it is the socle.
SubspaceBasis socle_over(const Comodule& M, const Subcoalgebra& E);

// Image and kernel of a morphism f: M -> N are again (co)invariant.
SubComodule image_subcomodule(const Comodule& M, const Comodule& N, const Mat& f);
SubComodule kernel_subcomodule(const Comodule& M, const Comodule& N, const Mat& f);

// rho itself embeds M into the cofree comodule on the underlying space of M;
// the returned map is a validated injective morphism M -> cofree(dim M).
Mat finitely_cogenerated_witness(const Comodule& M);

// Comodule retraction of the coaction M -> cofree(M) when M is injective,
// nullopt otherwise.  The coaction always embeds M into the cofree comodule
// on its underlying space, so injectivity is equivalent to this splitting.
std::optional<Mat> injective_splitting(const Comodule& M);

// 0 -> M -e0-> C(x)V0 -e1-> C(x)V1 with e0 injective and ker e1 = im e0.
struct Copresentation {
    Comodule cofree0;
    Comodule cofree1;
    Mat e0;
    Mat e1;
};

Copresentation copresentation(const Comodule& M);

}  // namespace cotra
