#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cotra/linalg.hpp"

namespace cotra {

// Coassociative counital coalgebra given by structure constants.
// comult is (dim*dim) x dim: column k holds Delta(e_k) with the basis vector
// e_i (x) e_j of C (x) C at flat row i*dim + j.  counit is 1 x dim.
struct Coalgebra {
    Field field;
    int dim = 0;
    Mat comult;
    Mat counit;
    std::vector<std::string> labels;
};

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

struct AxiomFailure {
    std::string axiom;
    std::string witness;
};

struct ValidationResult {
    bool ok = true;
    std::vector<AxiomFailure> failures;

    void fail(const std::string& axiom, const std::string& witness) {
        ok = false;
        failures.push_back({axiom, witness});
    }
    std::string summary() const;
};

ValidationResult validate_coalgebra(const Coalgebra& C);

// The dual algebra on C^* = Hom(C,k).  The multiplication is the transpose
// of the comultiplication composed with the tensor swap:
//     (f*g)(c) = sum g(c_(1)) f(c_(2)),
// the unique choice for which a right C-comodule is a right C^*-module, a
// left comodule a left module, and a left contramodule a left module.
// mult is dim x (dim*dim), unit is dim x 1.
struct DualAlgebra {
    Field field;
    int dim = 0;
    Mat mult;
    Mat unit;
};

DualAlgebra dual_algebra(const Coalgebra& C);
ValidationResult validate_algebra(const DualAlgebra& A);

struct Subcoalgebra {
    CoalgebraPtr parent;
    SubspaceBasis space;
};

ValidationResult validate_subcoalgebra(const Subcoalgebra& E);

enum class CertStatus { Ok, Indeterminate };

struct RadicalResult {
    CertStatus status = CertStatus::Ok;
    SubspaceBasis radical;
    int trials_used = 0;
};

// Jacobson radical of a finite-dimensional algebra.  Characteristic 0 uses
// the trace-form radical with a nilpotency certificate.  Characteristic p
// uses seeded iterated spinning: random cyclic quotients grown to maximal
// submodules, brute-force simplicity certificates, annihilator
// intersection, and a Wedderburn dimension-count certificate; if no
// certificate is reached within the trial bound the result is
// Indeterminate.
RadicalResult algebra_radical(const DualAlgebra& A, uint64_t seed = 1, int max_trials = 48);

struct CoradicalResult {
    CertStatus status = CertStatus::Ok;
    Subcoalgebra coradical;
    int trials_used = 0;
};

// Maximal cosemisimple subcoalgebra, computed as the annihilator of the
// radical of the dual algebra.
CoradicalResult coradical(const CoalgebraPtr& C, uint64_t seed = 1, int max_trials = 48);

// True iff C is conilpotent relative to the subcoalgebra E.  Two routes are
// computed and cross-checked: containment of the coradical in E (when the
// coradical is certified) and nilpotence of the quotient's dual algebra.
bool is_conilpotent_over(const CoalgebraPtr& C, const Subcoalgebra& E, uint64_t seed = 1);

// --- Builders -----------------------------------------------------------

Coalgebra build_trivial(Field f);

// Dual of the quantum truncated power series algebra on m variables with
// relations z_i z_j = q(i,j) z_j z_i for i < j, truncated past total degree
// n.  q(i,j) must be nonzero for i < j.  m = 1, n = 1 yields the dual of
// k[x]/(x^2).
Coalgebra build_truncated_power_series_dual(Field f, int m, const Mat& q, int n);

// Functions coalgebra k(G) of a finite group given by its multiplication
// table (table[a][b] = index of a*b).  Validates the group axioms.
Coalgebra build_group_functions(Field f, const std::vector<std::vector<int>>& table);

// (M_n)^*: matrix coalgebra, dim n^2.
Coalgebra build_matrix_coalgebra(Field f, int n);

// Dual of an explicit finite-dimensional associative unital algebra.
// mult is dim x (dim*dim) (column i*dim+j holds e_i * e_j), unit dim x 1.
Coalgebra build_dual_of_algebra(Field f, const Mat& mult, const Mat& unit,
                                std::vector<std::string> labels = {});

// Dual of the upper triangular n x n matrix algebra (path coalgebra of the
// A_n quiver); n = 2 is the A_2 case used throughout the test corpus.
Coalgebra build_upper_triangular_dual(Field f, int n);

Coalgebra direct_sum(const Coalgebra& A, const Coalgebra& B);

// Left-multiplication matrix of basis element e_i in an algebra.
Mat left_mult(const DualAlgebra& A, int i);
Mat right_mult(const DualAlgebra& A, int i);

}  // namespace cotra
