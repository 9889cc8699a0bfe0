#pragma once

#include "homalg/algebra.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace homalg {

/* Finite-dimensional right module over an AlgebraTable. Elements are row
 * vectors; the action of basis element b_i is v -> v * action(i). The action
 * is checked against the structure constants on construction. */
class Module {
public:
    Module(AlgebraPtr A, std::size_t dim, std::vector<Matrix> actions);

    static Module zero(AlgebraPtr A);
    static Module regular(AlgebraPtr A);

    const AlgebraPtr& algebra() const { return A_; }
    std::size_t dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }
    const Matrix& action(std::size_t i) const { return act_[i]; }

    /* v * a for an algebra element a (coefficient vector). */
    Vec act(const Vec& v, const Vec& a) const;
    Matrix action_of(const Vec& a) const;

    Module direct_sum(const Module& other) const;
    /* Submodule spanned by the given row vectors (closure under the action
     * is taken). Returns the submodule and the inclusion matrix. */
    std::pair<Module, Matrix> submodule(const std::vector<Vec>& generators) const;
    /* Quotient by the submodule spanned by the rows. Returns quotient and
     * the projection matrix. */
    std::pair<Module, Matrix> quotient(const std::vector<Vec>& sub_rows) const;

private:
    AlgebraPtr A_;
    std::size_t dim_;
    std::vector<Matrix> act_;
};

/* Module homomorphism src -> tgt as v -> v * matrix; commutation with every
 * basis action is verified. */
class ModuleMap {
public:
    ModuleMap(Module src, Module tgt, Matrix mat, bool check = true);

    static ModuleMap zero(const Module& src, const Module& tgt);
    static ModuleMap identity(const Module& m);

    const Module& source() const { return src_; }
    const Module& target() const { return tgt_; }
    const Matrix& matrix() const { return mat_; }

    Vec apply(const Vec& v) const { return mat_.apply_row(v); }
    ModuleMap then(const ModuleMap& next) const;
    bool is_zero() const { return mat_.is_zero(); }

    /* Kernel as a module with its inclusion. */
    std::pair<Module, ModuleMap> kernel() const;
    /* Cokernel with its projection. */
    std::pair<Module, ModuleMap> cokernel() const;
    std::size_t rank() const { return homalg::rank(mat_); }

private:
    Module src_, tgt_;
    Matrix mat_;
};

/* Hom_A(M, N) as matrices (row convention). Deterministic echelonized basis. */
std::vector<Matrix> hom_space(const Module& M, const Module& N);

/* The enveloping algebra Lambda^e = Lambda tensor Lambda^op; basis pairs
 * (i, j) at index i*n+j; (a ox b)(c ox d) = ac ox db. Right Lambda^e-modules
 * are Lambda-bimodules via x * (a ox b) = b x a. */
AlgebraPtr enveloping_algebra(const AlgebraPtr& A);

enum class TwistSide { Right, Left };

/* Diagonal bimodule as a right Lambda^e-module. */
Module diagonal_bimodule(const AlgebraPtr& A, const AlgebraPtr& Ae);

/* Twisted diagonal bimodule: for TwistSide::Right this is 1_Lambda_sigma
 * (right action through sigma); for TwistSide::Left it is sigma_Lambda_1. */
Module twisted_bimodule(const AlgebraPtr& A, const AlgebraPtr& Ae, const Automorphism& sigma,
                        TwistSide side = TwistSide::Right);

/* Complete list of simple right modules (basic algebras: all 1-dimensional),
 * indexed consistently with primitive_idempotents. */
std::vector<Module> simple_modules(const AlgebraPtr& A);

/* Indecomposable projective e_i A for the i-th primitive idempotent. */
Module indecomposable_projective(const AlgebraPtr& A, std::size_t i);

/* Basis rows of the radical M*J of M. */
std::vector<Vec> module_radical_rows(const Module& M);

ModuleMap projective_cover(const Module& M);

/* Projective-free part: M with all projective direct summands split off. */
Module remove_projective_summands(const Module& M);

Module syzygy(const Module& M, std::size_t n);

/* Augmented minimal resolution P_n -> ... -> P_0 -> M: maps[0] is the
 * augmentation P_0 -> M and maps[k] the differential P_k -> P_{k-1}. */
struct Resolution {
    std::vector<ModuleMap> maps;
    const Module& term(std::size_t k) const { return maps[k].source(); }
    std::size_t length() const { return maps.size() - 1; }
};
Resolution minimal_projective_resolution(const Module& M, std::size_t n);

/* Cohomology class in Ext^n_A(M, N), stored with a distinguished reduced
 * cocycle representative P_n -> N. */
struct ExtClass {
    std::size_t n = 0;
    Matrix cocycle;          // dim(P_n) x dim(N)
    bool is_zero_class() const { return cocycle.is_zero(); }
};

struct ExtSpace {
    std::size_t dimension = 0;
    std::vector<ExtClass> basis;
    Resolution resolution;   // resolution of M the classes refer to
    RowSpan coboundaries;    // flattened coboundary span for class reduction
    ExtSpace(const Field& F, std::size_t width) : coboundaries(F, width) {}
};

ExtSpace ext_space(const Module& M, const Module& N, std::size_t n);

bool is_projective(const Module& M);
bool is_injective_module(const Module& M);

struct IsoResult {
    enum class Status { Found, None, Undecided } status;
    std::optional<ModuleMap> iso;
};

/* Searches for a module isomorphism: identity-shaped candidates, seeded
 * random combinations, small-coefficient enumeration; a negative answer is
 * certified (dimension mismatch or identically-vanishing determinant
 * polynomial), otherwise Undecided. */
IsoResult module_iso(const Module& M, const Module& N, std::uint64_t seed = 1);

/* Exact sequence 0 -> twist -> P_{d+1} -> ... -> P_0 -> Lambda -> 0 of
 * bimodules; maps[k]: terms[k] -> terms[k+1] left to right. */
struct ExactSequenceOfBimodules {
    std::vector<Module> terms;    // [twist, P_{d+1}, ..., P_0, Lambda]
    std::vector<ModuleMap> maps;  // length terms.size()-1
    std::size_t middle_count() const { return terms.size() - 2; }
};

/* Assembles the witness eta for twisted (d+2)-periodicity, when
 * Omega^{d+2}(Lambda) is isomorphic to 1_Lambda_sigma. */
struct WitnessResult {
    enum class Status { Found, Absent, Undecided } status;
    std::optional<ExactSequenceOfBimodules> witness;
};
WitnessResult twisted_periodicity_witness(const AlgebraPtr& A, const Automorphism& sigma, int d,
                                          std::uint64_t seed = 1);

/* M tensor_Lambda B for a right module M and a bimodule B (right
 * Lambda^e-module); the result is a right Lambda-module. Also returns the
 * projection from M ox_k B. */
Module tensor_with_bimodule(const Module& M, const Module& B, const AlgebraPtr& A,
                            Matrix* projection = nullptr);

/* Termwise M tensor_Lambda eta; exactness is asserted. */
struct TensoredSequence {
    std::vector<Module> terms;
    std::vector<ModuleMap> maps;
};
TensoredSequence tensor_extension(const Module& M, const ExactSequenceOfBimodules& eta,
                                  const AlgebraPtr& A);

bool is_projective_injective_bimodule(const Module& P);

/* Extension class of eta in Ext^{d+2}_{Lambda^e}(Lambda, twist), computed by
 * lifting along the minimal resolution of the diagonal bimodule. */
ExtClass extension_class_of_sequence(const ExactSequenceOfBimodules& eta, const Resolution& res);

/* Tate-unit test: the representative induces a bimodule map
 * Omega^{d+2}(Lambda) -> 1_Lambda_sigma; true iff that map is invertible.
 * Preconditions (self-injective, connected, not semisimple) are enforced. */
bool edge_unit_test(const AlgebraPtr& A, const Automorphism& sigma, int d, const ExtClass& xi,
                    const Resolution& res);

/* Exactness of a chain of maps at every inner spot. */
bool is_exact_at_inner_spots(const std::vector<ModuleMap>& maps);

} // namespace homalg
