#pragma once

#include <cstdint>
#include <variant>

#include "cotra/semialgebra.hpp"

namespace cotra {

// The six abelian categories the complex machinery runs over.
enum class Cat { ComodL, ComodR, Contra, Bicomod, SemimodL, SemicontraL };

struct CatCtx {
    Cat kind = Cat::ComodL;
    CoalgebraPtr C;    // ComodL / ComodR / Contra; left coalgebra of Bicomod
    CoalgebraPtr D;    // right coalgebra of Bicomod
    SemialgebraPtr S;  // SemimodL / SemicontraL
};

CatCtx ctx_comod(const CoalgebraPtr& C, Side side);
CatCtx ctx_contra(const CoalgebraPtr& D);
CatCtx ctx_bicomod(const CoalgebraPtr& C, const CoalgebraPtr& D);
CatCtx ctx_semimod(const SemialgebraPtr& S);
CatCtx ctx_semicontra(const SemialgebraPtr& S);

bool same_ctx(const CatCtx& a, const CatCtx& b);
std::string ctx_name(const CatCtx& ctx);
Field ctx_field(const CatCtx& ctx);

// One object of one of the six categories.
struct CatObj {
    CatCtx ctx;
    std::variant<Comodule, Contramodule, Bicomodule, Semimodule, Semicontramodule> value;

    int dim() const;
    const Comodule& comod() const { return std::get<Comodule>(value); }
    const Contramodule& contra() const { return std::get<Contramodule>(value); }
    const Bicomodule& bicomod() const { return std::get<Bicomodule>(value); }
    const Semimodule& semimod() const { return std::get<Semimodule>(value); }
    const Semicontramodule& semicontra() const { return std::get<Semicontramodule>(value); }
};

CatObj obj_of(Comodule M);
CatObj obj_of(Contramodule P);
CatObj obj_of(Bicomodule B);
CatObj obj_of(Semimodule M);
CatObj obj_of(Semicontramodule P);
CatObj zero_obj(const CatCtx& ctx);

ValidationResult obj_validate(const CatObj& X);
bool obj_is_morphism(const CatObj& X, const CatObj& Y, const Mat& f);
SubspaceBasis obj_hom(const CatObj& X, const CatObj& Y);

struct SubObj {
    CatObj obj;
    Mat incl;  // dim(X) x dim(sub)
};

struct QuotObj {
    CatObj obj;
    Mat proj;  // dim(quot) x dim(X)
};

SubObj obj_sub(const CatObj& X, const SubspaceBasis& U);
QuotObj obj_quot(const CatObj& X, const SubspaceBasis& U);
SubObj obj_kernel(const CatObj& X, const CatObj& Y, const Mat& f);
SubObj obj_image(const CatObj& X, const CatObj& Y, const Mat& f);
QuotObj obj_cokernel(const CatObj& X, const CatObj& Y, const Mat& f);

struct SumObj {
    CatObj obj;
    Mat inl, inr;  // injections
    Mat prl, prr;  // projections
};

SumObj obj_direct_sum(const CatObj& X, const CatObj& Y);

// Split embedding into / cover by the standard (co)generator: injectivity
// for the comodule-flavored categories, projectivity for the
// contramodule-flavored ones.
bool obj_env_splits(const CatObj& X);

// One step of a resolution: a validated monomorphism X -> env into an
// injective object (comodule flavors), or epimorphism env -> X from a
// projective one (contramodule flavors).  The cogenerator rank is shrunk by
// a seeded search before falling back to the full underlying space.
struct EnvStep {
    CatObj env;
    Mat map;
};

EnvStep injective_step(const CatObj& X, uint64_t seed = 1);
EnvStep projective_step(const CatObj& X, uint64_t seed = 1);

// Objects that together contain every simple of the category as a direct
// summand: the coradical as a (co)module, split into smaller summands as
// far as generated-subobject and endomorphism-kernel searches reach.
// Vanishing tests against this family are equivalent to vanishing against
// all simples regardless of how complete the splitting is.
std::vector<CatObj> simple_test_family(const CatCtx& ctx, uint64_t seed = 1);

}  // namespace cotra
