#pragma once

#include "homalg/complex.hpp"

#include <map>

namespace homalg {

/* Degreewise-finite DG algebra within an internal degree window. Multiple
 * objects of a DG category are packed as one algebra with orthogonal
 * idempotents. A window can be marked as exhaustive (the algebra vanishes
 * outside) or as a truncation, in which case products and differentials that
 * would leave the window raise WindowError instead of silently truncating. */
class DGAlgebraWindow {
public:
    DGAlgebraWindow(const Field& F, int lo, int hi, bool zero_outside);

    const Field& field() const { return F_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool zero_outside() const { return zero_outside_; }
    bool in_window(int deg) const { return deg >= lo_ && deg <= hi_; }

    std::size_t dim(int deg) const;
    const std::string& label(int deg, std::size_t i) const;

    void set_component(int deg, std::vector<std::string> labels);
    void set_product(int d1, std::size_t i, int d2, std::size_t j, Vec result);
    void set_differential(int deg, Matrix d); // component deg -> deg+1
    void set_unit(Vec unit_coords_deg0);

    GElem basis_elem(int deg, std::size_t i) const;
    GElem zero(int deg) const;
    GElem one() const;
    GElem add(const GElem& x, const GElem& y) const;
    GElem scale(const Scalar& c, const GElem& x) const;
    GElem mul(const GElem& x, const GElem& y) const;
    GElem d(const GElem& x) const;
    const Matrix& diff(int deg) const;

    /* d.d = 0, graded Leibniz on basis pairs, unitality. Raises on failure;
     * boundary degrees that cannot be checked inside a truncated window are
     * skipped. */
    void validate() const;

    std::size_t total_dim() const;

private:
    std::size_t idx(int deg) const;
    Field F_;
    int lo_, hi_;
    bool zero_outside_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::vector<std::vector<std::vector<Vec>>>> mult_;
    std::vector<Matrix> diffs_;
    Vec unit_;
};

/* Endomorphism DG algebra of a finite list of complexes, with bookkeeping to
 * move between DGA elements and graded maps of complexes. */
class EndDGA {
public:
    explicit EndDGA(std::vector<ComplexOfModules> objects);

    const DGAlgebraWindow& dga() const { return dga_; }
    const std::vector<ComplexOfModules>& objects() const { return objects_; }

    /* Idempotent of the i-th object. */
    GElem object_idempotent(std::size_t i) const;
    /* Embed a graded map X_src -> X_tgt as a DGA element. */
    GElem embed(std::size_t src, std::size_t tgt, const GradedComplexMap& f) const;
    /* Extract the (src -> tgt)-block of a DGA element. */
    GradedComplexMap extract(std::size_t src, std::size_t tgt, const GElem& x) const;

private:
    struct Block {
        std::size_t src, tgt;       // object indices
        int inner_k;                // X_src^k -> X_tgt^{k+deg}
        Matrix hom_basis_elem;      // one module hom
    };
    std::vector<ComplexOfModules> objects_;
    DGAlgebraWindow dga_;
    // per degree (deg - lo): block descriptors per basis index
    std::vector<std::vector<Block>> blocks_;
};

/* Deformation retract data (i, p, h) of a DG algebra window onto its
 * cohomology: p i = id, d h + h d = id - i p, h i = 0, p h = 0, h h = 0.
 * Cohomology bases are part of the data: incl rows are the chosen cocycle
 * representatives. */
struct HomotopyRetract {
    std::map<int, Matrix> incl; // H^deg -> A^deg (rows = representatives)
    std::map<int, Matrix> proj; // A^deg -> H^deg
    std::map<int, Matrix> h;    // A^deg -> A^{deg-1}
    std::size_t h_dim(int deg) const;
};

struct RetractOverride {
    /* preferred cocycle representatives to include in the cohomology
     * complement (the images of i) */
    std::vector<GElem> preferred_reps;
    /* preferred preimages: h(d(x)) = x for each listed x */
    std::vector<GElem> preferred_preimages;
};

/* Splits each component as boundaries (+) chosen cocycle complement (+)
 * complement of cocycles and assembles (i, p, h); all five identities hold by
 * construction and are re-checked. Degrees whose incoming or outgoing
 * differential leaves a truncated window are not retracted (their h is only
 * defined where computable); consumers hit WindowError through eval. */
HomotopyRetract deformation_retract(const DGAlgebraWindow& A,
                                    const RetractOverride& over = {});

void validate_retract(const DGAlgebraWindow& A, const HomotopyRetract& r);

/* Cohomology of the window as a graded algebra, with products computed
 * through the retract: [x][y] = p(i(x) i(y)). */
GradedAlgebraWindow cohomology_algebra(const DGAlgebraWindow& A, const HomotopyRetract& r);

/* Apply i / p / h to homogeneous elements. */
GElem retract_incl(const DGAlgebraWindow& A, const HomotopyRetract& r, const GElem& hx);
GElem retract_proj(const DGAlgebraWindow& A, const HomotopyRetract& r, const GElem& x);
GElem retract_h(const DGAlgebraWindow& A, const HomotopyRetract& r, const GElem& x);

} // namespace homalg
