#pragma once

#include "homalg/matrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace homalg {

/* Finite-dimensional associative unital algebra given by structure constants
 * on a distinguished basis. Associativity and unitality are verified on all
 * basis triples at construction. */
class AlgebraTable {
public:
    AlgebraTable(const Field& F,
                 std::vector<std::string> basis_labels,
                 std::vector<std::vector<Vec>> structure_constants,
                 Vec unit);

    const Field& field() const { return F_; }
    std::size_t dim() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    const Vec& unit() const { return unit_; }
    const Vec& mul_basis(std::size_t i, std::size_t j) const { return mult_[i][j]; }
    Vec mul(const Vec& x, const Vec& y) const;

    /* Matrix of left multiplication by x: row convention, v -> coeffs of x*v
     * arranged so that (L_x)(e_j) = x * b_j sits in row j. */
    Matrix left_mult_matrix(const Vec& x) const;
    Matrix right_mult_matrix(const Vec& x) const;

    bool is_commutative() const;
    bool is_connected() const;

    AlgebraTable opposite() const;

private:
    Field F_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vec>> mult_;
    Vec unit_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

/* Multiplicative unital invertible map, stored by images of basis elements:
 * sigma(b_i) = sum_j matrix(i,j) b_j. */
class Automorphism {
public:
    Automorphism(AlgebraPtr algebra, Matrix images);

    static Automorphism identity(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return A_; }
    const Matrix& matrix() const { return M_; }

    Vec apply(const Vec& x) const { return M_.apply_row(x); }
    Automorphism inverse() const;
    Automorphism compose(const Automorphism& then) const; // this followed by then
    Automorphism power(long k) const;
    bool is_identity() const;

private:
    Automorphism(AlgebraPtr a, Matrix m, int) : A_(std::move(a)), M_(std::move(m)) {}
    AlgebraPtr A_;
    Matrix M_;
};

struct QuiverArrow {
    std::string label;
    std::size_t source, target;
};

struct PathTerm {
    Scalar coeff;
    std::size_t source, target;           // for length-0 paths (vertex terms)
    std::vector<std::size_t> arrows;      // composition order: first arrow first
};

/* Quiver with relations. Paths compose left to right: p*q traverses p, then
 * q, and is nonzero only if target(p) = source(q). */
struct QuiverPresentation {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<std::vector<PathTerm>> relations;
    std::size_t path_length_bound = 10;
    bool is_connected() const;
};

/* Path algebra modulo relations, truncated at path_length_bound. Fails with
 * "truncation insufficient" if the quotient is not visibly finite-dimensional
 * within the bound. Basis order: by path length, then lexicographically. */
AlgebraTable build_path_algebra(const Field& F, const QuiverPresentation& Q);

/* Characters (1-dimensional representations) of A; complete for split basic
 * algebras, which is the scope of this artifact. */
std::vector<Vec> characters(const AlgebraTable& A);

/* Basis of the Jacobson radical, computed as the intersection of the kernels
 * of the characters, certified nilpotent. Rejects non-basic input. */
std::vector<Vec> jacobson_radical(const AlgebraTable& A);

/* Complete set of orthogonal primitive idempotents lifted from A/J.
 * Deterministic; only valid for split basic algebras (checked). */
std::vector<Vec> primitive_idempotents(const AlgebraTable& A);

std::vector<Vec> center(const AlgebraTable& A);

/* Declared here, implemented with the module machinery. */
bool is_self_injective(const AlgebraTable& A);
struct StableCenter {
    std::size_t dimension;
    std::vector<Vec> ideal_basis; // central elements factoring through the projective cover
    std::string description;
};
StableCenter stable_center(const AlgebraTable& A);

/* Homogeneous element of a graded algebra. */
struct GElem {
    int deg = 0;
    Vec coeffs;
    bool is_zero() const { return vec_is_zero(coeffs); }
};

/* Degreewise-finite graded algebra within an integer degree window.
 * When built by sparse_laurent the exact component structure is retained,
 * so products can be formed in any degree; a generic window errors out on
 * out-of-window data instead of truncating silently. */
class GradedAlgebraWindow {
public:
    struct LaurentData {
        AlgebraPtr base;
        Automorphism sigma;
        int d;
    };

    GradedAlgebraWindow(const Field& F, int lo, int hi);

    const Field& field() const { return F_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool in_window(int deg) const { return deg >= lo_ && deg <= hi_; }

    std::size_t dim(int deg) const;
    const std::string& label(int deg, std::size_t i) const;
    void set_component(int deg, std::vector<std::string> labels);
    void set_product(int d1, std::size_t i, int d2, std::size_t j, Vec result);
    void set_unit(Vec unit_coords);

    std::optional<int> sparse_modulus() const { return sparse_; }
    const std::optional<LaurentData>& laurent() const { return laurent_; }

    /* Unit element (degree 0). */
    GElem one() const;
    /* Distinguished invertible degree -d element and its inverse, when sparse. */
    GElem iota() const;
    GElem iota_inv() const;

    GElem mul(const GElem& x, const GElem& y) const;
    GElem basis_elem(int deg, std::size_t i) const;
    GElem add(const GElem& x, const GElem& y) const;
    GElem scale(const Scalar& c, const GElem& x) const;
    GElem zero(int deg) const;

    /* Total dimension of all in-window components. */
    std::size_t total_dim() const;

    void finalize(std::optional<int> sparse_modulus, std::optional<LaurentData> laurent);

private:
    std::size_t idx(int deg) const;
    Field F_;
    int lo_, hi_;
    std::vector<std::vector<std::string>> labels_;
    // mult_[idx(d1)][idx(d2)][i][j]
    std::vector<std::vector<std::vector<std::vector<Vec>>>> mult_;
    std::optional<int> sparse_;
    std::optional<LaurentData> laurent_;
    Vec unit_coords_;
};

/* The d-sparse twisted Laurent algebra Lambda<iota^{+-1}>/(iota x - sigma(x) iota),
 * |iota| = -d, realized degreewise on the window. Component in degree d*k is a
 * copy of Lambda; the product of x in degree d*i and y in degree d*j is
 * sigma^j(x) * y in degree d*(i+j). */
GradedAlgebraWindow sparse_laurent(AlgebraPtr A, const Automorphism& sigma, int d, int range_lo, int range_hi);

} // namespace homalg
