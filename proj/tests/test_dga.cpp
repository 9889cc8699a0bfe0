#include <doctest.h>

#include "homalg/fixtures.hpp"

using namespace homalg;

TEST_CASE("cone of the identity is acyclic") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    Module reg = Module::regular(D);
    ComplexOfModules M = ComplexOfModules::concentrated(reg, 0, 0, 0);
    GradedComplexMap id;
    id.degree = 0;
    id.blocks = {Matrix::identity(F, 2)};
    Cone C = cone(M, M, id);
    for (int k = C.complex.lo(); k <= C.complex.hi(); ++k)
        CHECK(C.complex.cohomology_dim(k) == 0);
}

TEST_CASE("cone of zero splits") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    Module reg = Module::regular(D);
    ComplexOfModules M = ComplexOfModules::concentrated(reg, 0, 0, 0);
    GradedComplexMap z;
    z.degree = 0;
    z.blocks = {Matrix(F, 2, 2)};
    Cone C = cone(M, M, z);
    CHECK(C.complex.term(-1).dim() == 2);
    CHECK(C.complex.term(0).dim() == 2);
    CHECK(C.complex.diff(-1).is_zero());
}

TEST_CASE("cone of epsilon has one-dimensional cohomology at both spots") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    Module reg = Module::regular(D);
    ComplexOfModules M = ComplexOfModules::concentrated(reg, 0, 0, 0);
    GradedComplexMap eps;
    eps.degree = 0;
    // right multiplication by eps is a module endomorphism of the regular
    // representation
    Vec e(2, Scalar(0));
    e[1] = F.one();
    eps.blocks = {reg.action_of(e)};
    Cone C = cone(M, M, eps);
    CHECK(C.complex.cohomology_dim(-1) == 1);
    CHECK(C.complex.cohomology_dim(0) == 1);
}

TEST_CASE("shift conventions") {
    Field F = Field::rationals();
    auto S = fixtures::a3_dg_setup(F);
    const ComplexOfModules& Q = S.end->objects()[3];
    ComplexOfModules Q1 = shift(Q, 1);
    CHECK(Q1.lo() == -3);
    CHECK(Q1.diff(-3) == Q.diff(-2).scaled(F.of_int(-1)));
    ComplexOfModules back = shift(Q1, -1);
    CHECK(back.diff(-2) == Q.diff(-2));
    for (int k = -3; k <= 0; ++k)
        CHECK(Q1.cohomology_dim(k) == Q.cohomology_dim(k + 1));
}

TEST_CASE("hom complex basics") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    Module reg = Module::regular(D);
    ComplexOfModules M = ComplexOfModules::concentrated(reg, 0, 0, 0);
    HomComplex H(M, M);
    CHECK(H.dim(0) == 2);
    CHECK(H.dim(1) == 0);
    CHECK(H.diff_matrix(0).is_zero());

    // contractible two-term complex has acyclic hom complex
    ComplexOfModules C2(D, 0, 1);
    C2.set_term(0, reg);
    C2.set_term(1, reg);
    C2.set_diff(0, Matrix::identity(F, 2));
    C2.validate();
    HomComplex H2(C2, M);
    for (int i = H2.lo(); i <= H2.hi(); ++i)
        CHECK(H2.cohomology_dim(i) == 0);
}

TEST_CASE("A3 endomorphism DG algebra carries the expected relations") {
    Field F = Field::rationals();
    auto S = fixtures::a3_dg_setup(F);
    const DGAlgebraWindow& A = S.end->dga();

    // composition relations
    CHECK(A.mul(S.up, S.u).coeffs == S.id_P3.coeffs);   // u'u = id_P3
    CHECK(A.mul(S.b, S.a).is_zero());                   // ba = 0
    CHECK(A.mul(S.up, S.w).is_zero());                  // u'w = 0
    CHECK(A.mul(S.up, S.v).is_zero());                  // u'v = 0
    CHECK(A.mul(S.vp, S.u).is_zero());                  // v'u = 0
    CHECK(A.mul(S.vp, S.w).is_zero());                  // v'w = 0
    CHECK(A.mul(S.wp, S.v).is_zero());                  // w'v = 0
    CHECK(A.mul(S.wp, S.u).is_zero());                  // w'u = 0
    GElem idQ = S.end->object_idempotent(3);
    GElem sum = A.add(A.add(A.mul(S.u, S.up), A.mul(S.v, S.vp)), A.mul(S.w, S.wp));
    CHECK(sum.coeffs == idQ.coeffs);                    // uu' + vv' + ww' = id_Q

    // differentials
    CHECK(A.d(S.u).coeffs == A.mul(S.v, S.a).coeffs);   // du = va
    CHECK(A.d(S.v).coeffs == A.mul(S.w, S.b).coeffs);   // dv = wb
    CHECK(A.d(S.a).is_zero());
    CHECK(A.d(S.b).is_zero());
    CHECK(A.d(S.w).is_zero());
    CHECK(A.d(S.up).is_zero());
    // dw' = -bv' and dv' = +-au' under our sign conventions; both squares of
    // the differential vanish either way (validated at construction), so pin
    // the computed signs here to keep them stable
    GElem bvp = A.mul(S.b, S.vp);
    GElem dwp = A.d(S.wp);
    CHECK(dwp.coeffs == A.scale(F.of_int(-1), bvp).coeffs);
    GElem aup = A.mul(S.a, S.up);
    GElem dvp = A.d(S.vp);
    bool plus = dvp.coeffs == aup.coeffs;
    bool minus = dvp.coeffs == A.scale(F.of_int(-1), aup).coeffs;
    CHECK((plus || minus));
}

TEST_CASE("cohomology of the A3 endomorphism DG algebra") {
    Field F = Field::rationals();
    auto S = fixtures::a3_dg_setup(F);
    HomotopyRetract r = deformation_retract(S.end->dga(), S.paper_retract);
    GradedAlgebraWindow H = cohomology_algebra(S.end->dga(), r);
    CHECK(H.dim(0) == 7);
    CHECK(H.dim(1) == 0);
    CHECK(H.dim(-1) == 0);
    CHECK(H.dim(2) == 1);
    CHECK(H.dim(-2) == 0);
}

TEST_CASE("paper retract for the A3 example passes the side conditions") {
    Field F = Field::rationals();
    auto S = fixtures::a3_dg_setup(F);
    const DGAlgebraWindow& A = S.end->dga();
    HomotopyRetract r = deformation_retract(A, S.paper_retract);
    // validate_retract already ran; exercise the overridden values
    CHECK(retract_h(A, r, A.mul(S.v, S.a)).coeffs == S.u.coeffs); // h(va) = u
    CHECK(retract_h(A, r, A.mul(S.w, S.b)).coeffs == S.v.coeffs); // h(wb) = v
    // i p of a chosen representative returns the representative
    GElem cls = retract_proj(A, r, S.a);
    CHECK(retract_incl(A, r, cls).coeffs == S.a.coeffs);
    GElem cls2 = retract_proj(A, r, S.up);
    CHECK(retract_incl(A, r, cls2).coeffs == S.up.coeffs);
}

TEST_CASE("retract of a DG algebra with zero differential is trivial") {
    Field F = Field::rationals();
    auto S = fixtures::a3_dg_setup(F);
    // degree-0 part of the End DGA with zero differential: take the bounded
    // window [0,0] algebra spanned by the idempotents and degree-0 cycles
    DGAlgebraWindow A(F, 0, 0, true);
    A.set_component(0, {"x", "y"});
    // commutative product: x = unit, y nilpotent square zero
    A.set_product(0, 0, 0, 0, Vec{F.one(), F.zero()});
    A.set_product(0, 0, 0, 1, Vec{F.zero(), F.one()});
    A.set_product(0, 1, 0, 0, Vec{F.zero(), F.one()});
    A.set_product(0, 1, 0, 1, Vec{F.zero(), F.zero()});
    A.set_differential(0, Matrix(F, 2, 0));
    A.set_unit(Vec{F.one(), F.zero()});
    A.validate();
    HomotopyRetract r = deformation_retract(A);
    CHECK(r.incl.at(0).rows() == 2);
    CHECK(r.h.at(0).is_zero());
}

TEST_CASE("MSS07 truncated DG algebra validates and has dual-numbers cohomology") {
    Field F = Field::prime(2);
    DGAlgebraWindow A = fixtures::mss07_dga(F, 4, -3, 3);
    HomotopyRetract r = deformation_retract(A);
    GradedAlgebraWindow H = cohomology_algebra(A, r);
    // H = dual numbers in every degree of the usable window
    for (int n = -2; n <= 2; ++n)
        CHECK(H.dim(n) == 2);
}

TEST_CASE("MSS07 window errors instead of silent truncation") {
    Field F = Field::prime(2);
    DGAlgebraWindow A = fixtures::mss07_dga(F, 3, -2, 2);
    GElem v2 = A.basis_elem(2, 0); // v^2
    CHECK_THROWS_AS(A.mul(v2, v2), WindowError);
    GElem a_top = A.basis_elem(2, 1); // a v^2
    CHECK_THROWS_AS(A.d(a_top), WindowError);
}
