#pragma once

#include "homalg/algebra.hpp"
#include "homalg/dga.hpp"

#include <memory>

namespace homalg::fixtures {

/* k[eps]/(eps^2), basis {1, eps}. */
AlgebraTable dual_numbers(const Field& F);
AlgebraPtr dual_numbers_ptr(const Field& F);

/* The automorphism eps -> -eps of the dual numbers. */
Automorphism dual_numbers_sign_twist(const AlgebraPtr& D);

/* kA3/J^2 for the quiver 1 -> 2 -> 3 with arrows a: 1->2, b: 2->3,
 * basis {e1, e2, e3, a, b}. */
AlgebraTable a3_mod_radical_squared(const Field& F);
AlgebraPtr a3_mod_radical_squared_ptr(const Field& F);

/* The ground field as a one-dimensional algebra. */
AlgebraPtr ground_field_algebra(const Field& F);

/* The DG category spanned by {P3, P2, P1, Q} over kA3/J^2, where Q is the
 * minimal projective resolution of the simple at vertex 1 placed in degrees
 * [-2, 0]. Objects are indexed P3 = 0, P2 = 1, P1 = 2, Q = 3. The named
 * generators follow the resolution: a: P3 -> P2 and b: P2 -> P1 are the
 * differentials, u, v, w are the degree -2, -1, 0 inclusions into Q and
 * up, vp, wp the matching projections. */
struct A3DGSetup {
    AlgebraPtr B;
    std::shared_ptr<EndDGA> end;
    GElem a, b, u, v, w, up, vp, wp;
    GElem id_P3;
    RetractOverride paper_retract;
};
A3DGSetup a3_dg_setup(const Field& F);

/* The truncated Koszul-type DG algebra over the char-2 dual numbers whose
 * compact derived category models proj of the dual numbers: generators
 * u (degree 0), v (degree 1, invertible), a (degree 0) with a^2 = 0,
 * av = va, au + ua = 1 and d(a) = u^2 v. Basis monomials u^m v^n a^e with
 * m <= u_bound and n inside the window. */
DGAlgebraWindow mss07_dga(const Field& F, std::size_t u_bound, int v_lo, int v_hi);

} // namespace homalg::fixtures
