#pragma once

#include "homalg/module.hpp"

#include <map>

namespace homalg {

/* Cochain complex of modules within a degree window; differentials have
 * degree +1 and d.d = 0 is verified on construction. Missing degrees are the
 * zero module. */
class ComplexOfModules {
public:
    ComplexOfModules(AlgebraPtr A, int lo, int hi);

    static ComplexOfModules concentrated(const Module& M, int degree, int lo, int hi);

    const AlgebraPtr& algebra() const { return A_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool in_window(int k) const { return k >= lo_ && k <= hi_; }

    const Module& term(int k) const;
    /* d^k : X^k -> X^{k+1}. */
    const Matrix& diff(int k) const;
    void set_term(int k, Module M);
    void set_diff(int k, Matrix d);
    void validate() const;

    std::size_t total_dim() const;
    /* dim H^k within the window; the boundary degrees need one neighbour in
     * the window on each side, otherwise a WindowError is raised. */
    std::size_t cohomology_dim(int k) const;

private:
    AlgebraPtr A_;
    int lo_, hi_;
    std::vector<Module> terms_;
    std::vector<Matrix> diffs_; // diffs_[k-lo]: term(k) -> term(k+1)
};

/* Degreewise graded map of complexes of a fixed degree. */
struct GradedComplexMap {
    int degree = 0;
    // blocks[k-lo]: X^k -> Y^{k+degree}
    std::vector<Matrix> blocks;
};

/* f must be a degree-0 cocycle (chain map). Underlying graded module
 * M(1) (+) N with differential [[-d_M, 0], [f, d_N]]. */
struct Cone {
    ComplexOfModules complex;
    /* canonical maps N -> cone and cone -> M[1] as degreewise blocks */
    std::vector<Matrix> incl;
    std::vector<Matrix> proj;
};
Cone cone(const ComplexOfModules& M, const ComplexOfModules& N, const GradedComplexMap& f);

/* X[n]: degree shift with sign (-1)^n on the differential. */
ComplexOfModules shift(const ComplexOfModules& X, int n);

/* Hom-complex of two complexes of modules, as a complex of vector spaces
 * (modules over the ground field): Hom^i = graded maps of degree i,
 * differential f -> d_Y f - (-1)^i f d_X. Degrees i with incomplete window
 * support raise WindowError on access. */
class HomComplex {
public:
    HomComplex(const ComplexOfModules& X, const ComplexOfModules& Y);

    /* Underlying term data: a basis of Hom^i as graded maps. */
    struct Term {
        int degree;
        std::vector<GradedComplexMap> basis;
    };
    /* Degrees representable with full information inside the window. */
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::size_t dim(int i) const;
    const std::vector<GradedComplexMap>& basis(int i) const;
    /* Matrix of the differential Hom^i -> Hom^{i+1} in the stored bases. */
    Matrix diff_matrix(int i) const;
    std::size_t cohomology_dim(int i) const;

    GradedComplexMap from_coords(int i, const Vec& coords) const;
    Vec to_coords(const GradedComplexMap& f) const;
    GradedComplexMap differential(const GradedComplexMap& f) const;

    const ComplexOfModules& X() const { return X_; }
    const ComplexOfModules& Y() const { return Y_; }

private:
    ComplexOfModules X_, Y_;
    int lo_, hi_;
    std::vector<Term> terms_;
};

/* Compose graded maps of complexes: first f: X->Y, then g: Y->Z. */
GradedComplexMap compose_graded(const ComplexOfModules& X, const ComplexOfModules& Y,
                                const ComplexOfModules& Z, const GradedComplexMap& f,
                                const GradedComplexMap& g);

GradedComplexMap scale_graded(const Field& F, const Scalar& c, const GradedComplexMap& f);
GradedComplexMap add_graded(const Field& F, const GradedComplexMap& f, const GradedComplexMap& g);
bool graded_map_is_zero(const GradedComplexMap& f);

} // namespace homalg
