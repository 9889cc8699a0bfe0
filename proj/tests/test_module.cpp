#include <doctest.h>

#include "homalg/fixtures.hpp"
#include "homalg/module.hpp"

using namespace homalg;

namespace {

Module simple_at(const AlgebraPtr& A, std::size_t i) { return simple_modules(A)[i]; }

} // namespace

TEST_CASE("enveloping algebra dimensions") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    CHECK(enveloping_algebra(D)->dim() == 4);
    auto K = fixtures::ground_field_algebra(F);
    CHECK(enveloping_algebra(K)->dim() == 1);
    auto B = fixtures::a3_mod_radical_squared_ptr(F);
    CHECK(enveloping_algebra(B)->dim() == 25);
}

TEST_CASE("twisted bimodule of dual numbers differs by sign on the twisted side") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    auto Ae = enveloping_algebra(D);
    auto sigma = fixtures::dual_numbers_sign_twist(D);
    Module diag = diagonal_bimodule(D, Ae);
    Module tw = twisted_bimodule(D, Ae, sigma, TwistSide::Right);
    // action of eps (x) 1: right multiplication by eps resp. sigma(eps)
    std::size_t eps_idx = 1 * 2 + 0; // eps (x) 1
    CHECK(tw.action(eps_idx) == diag.action(eps_idx).scaled(F.of_int(-1)));
    // action of 1 (x) eps is untouched
    std::size_t e2 = 0 * 2 + 1;
    CHECK(tw.action(e2) == diag.action(e2));
}

TEST_CASE("twist composition agrees with the twist by the composite") {
    Field F = Field::prime(5);
    auto D = fixtures::dual_numbers_ptr(F);
    auto Ae = enveloping_algebra(D);
    auto sigma = fixtures::dual_numbers_sign_twist(D);
    Module tw2 = twisted_bimodule(D, Ae, sigma.compose(sigma), TwistSide::Right);
    Module diag = diagonal_bimodule(D, Ae);
    auto iso = module_iso(tw2, diag);
    CHECK(iso.status == IsoResult::Status::Found);
}

TEST_CASE("projective cover of a projective is an isomorphism") {
    Field F = Field::rationals();
    auto B = fixtures::a3_mod_radical_squared_ptr(F);
    Module P = indecomposable_projective(B, 0);
    auto pi = projective_cover(P);
    CHECK(pi.source().dim() == P.dim());
    CHECK(pi.kernel().first.dim() == 0);
}

TEST_CASE("cover of the simple over dual numbers") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    Module S = simple_at(D, 0);
    CHECK(S.dim() == 1);
    auto pi = projective_cover(S);
    CHECK(pi.source().dim() == 2);
    CHECK(pi.kernel().first.dim() == 1);
}

TEST_CASE("cover of the diagonal bimodule of dual numbers") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    auto Ae = enveloping_algebra(D);
    Module diag = diagonal_bimodule(D, Ae);
    auto pi = projective_cover(diag);
    CHECK(pi.source().dim() == 4);
    auto [K, incl] = pi.kernel();
    CHECK(K.dim() == 2);
    auto sigma = fixtures::dual_numbers_sign_twist(D);
    Module tw = twisted_bimodule(D, Ae, sigma, TwistSide::Right);
    CHECK(module_iso(tw, K).status == IsoResult::Status::Found);
}

TEST_CASE("syzygies over dual numbers") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    Module S = simple_at(D, 0);
    Module O1 = syzygy(S, 1);
    CHECK(O1.dim() == 1);
    Module reg = Module::regular(D);
    CHECK(syzygy(reg, 1).dim() == 0);
}

TEST_CASE("minimal resolution of S1 over A3/J^2") {
    Field F = Field::rationals();
    auto B = fixtures::a3_mod_radical_squared_ptr(F);
    // vertex order follows the character enumeration; locate S1 as the simple
    // whose projective cover has dimension 2 and whose syzygy is again simple
    // of a different vertex; concretely the resolution has terms 1,2,2
    auto simples = simple_modules(B);
    bool found = false;
    for (const auto& S : simples) {
        Resolution res = minimal_projective_resolution(S, 2);
        std::vector<std::size_t> dims = {res.term(0).dim(), res.term(1).dim(), res.term(2).dim()};
        if (dims == std::vector<std::size_t>{2, 2, 1}) {
            found = true;
            // next kernel vanishes: projective dimension 2
            CHECK(res.maps[2].kernel().first.dim() == 0);
        }
    }
    CHECK(found);
}

TEST_CASE("resolution of the diagonal dual-numbers bimodule is 4,4,4,...") {
    Field F = Field::prime(2);
    auto D = fixtures::dual_numbers_ptr(F);
    auto Ae = enveloping_algebra(D);
    Module diag = diagonal_bimodule(D, Ae);
    Resolution res = minimal_projective_resolution(diag, 3);
    for (std::size_t k = 0; k <= 3; ++k)
        CHECK(res.term(k).dim() == 4);
}

TEST_CASE("Ext^0 = Hom and periodic Ext over dual numbers") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    Module reg = Module::regular(D);
    CHECK(ext_space(reg, reg, 0).dimension == 2);
    Module S = simple_at(D, 0);
    for (std::size_t n = 0; n <= 4; ++n)
        CHECK(ext_space(S, S, n).dimension == 1);
}

TEST_CASE("Ext^1(S, P) vanishes for projective-injective P over self-injective") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    Module S = simple_at(D, 0);
    Module reg = Module::regular(D);
    CHECK(ext_space(S, reg, 1).dimension == 0);
}

TEST_CASE("injectivity checks") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    CHECK(is_injective_module(Module::regular(D)));
    CHECK(!is_injective_module(simple_at(D, 0)));
    CHECK(is_injective_module(Module::zero(D)));
}

TEST_CASE("self-injectivity") {
    Field F = Field::rationals();
    CHECK(is_self_injective(fixtures::dual_numbers(F)));
    CHECK(!is_self_injective(fixtures::a3_mod_radical_squared(F)));
    std::vector<std::vector<Vec>> sc(1, std::vector<Vec>(1, Vec{F.one()}));
    AlgebraTable k(F, {"1"}, sc, Vec{F.one()});
    CHECK(is_self_injective(k));
}

TEST_CASE("module iso basics") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    Module reg = Module::regular(D);
    CHECK(module_iso(reg, reg).status == IsoResult::Status::Found);
    Module S = simple_at(D, 0);
    CHECK(module_iso(S, reg).status == IsoResult::Status::None);
    CHECK(module_iso(S, S.direct_sum(S)).status == IsoResult::Status::None);
    // S vs projective of same dimension over A3: no iso, certified
    auto B = fixtures::a3_mod_radical_squared_ptr(F);
    auto simples = simple_modules(B);
    CHECK(module_iso(simples[0], simples[1]).status == IsoResult::Status::None);
}

TEST_CASE("twisted periodicity of dual numbers, characteristic 0") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    auto sigma = fixtures::dual_numbers_sign_twist(D);
    // d = 1, period 3: sigma_0^3 = sigma_0
    auto w = twisted_periodicity_witness(D, sigma, 1);
    REQUIRE(w.status == WitnessResult::Status::Found);
    const auto& eta = *w.witness;
    CHECK(eta.terms.size() == 5);
    for (std::size_t k = 1; k + 1 < eta.terms.size(); ++k)
        CHECK(is_projective_injective_bimodule(eta.terms[k]));
    // with sigma = id there is no witness in characteristic 0
    auto none = twisted_periodicity_witness(D, Automorphism::identity(D), 1);
    CHECK(none.status == WitnessResult::Status::Absent);
}

TEST_CASE("twisted periodicity of dual numbers, characteristic 2, sigma = id") {
    Field F = Field::prime(2);
    auto D = fixtures::dual_numbers_ptr(F);
    auto w = twisted_periodicity_witness(D, Automorphism::identity(D), 1);
    REQUIRE(w.status == WitnessResult::Status::Found);
}

TEST_CASE("tensor extension of the periodicity witness") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    auto sigma = fixtures::dual_numbers_sign_twist(D);
    auto w = twisted_periodicity_witness(D, sigma, -1); // period 1 witness
    REQUIRE(w.status == WitnessResult::Status::Found);
    Module S = simple_at(D, 0);
    auto seq = tensor_extension(S, *w.witness, D);
    std::vector<std::size_t> dims;
    for (const auto& t : seq.terms)
        dims.push_back(t.dim());
    CHECK(dims == std::vector<std::size_t>{1, 2, 1});
    // Lambda tensor eta returns the underlying sequence
    Module reg = Module::regular(D);
    auto seq2 = tensor_extension(reg, *w.witness, D);
    CHECK(seq2.terms[0].dim() == 2);
    CHECK(seq2.terms[1].dim() == 4);
    // zero module
    auto seq3 = tensor_extension(Module::zero(D), *w.witness, D);
    for (const auto& t : seq3.terms)
        CHECK(t.dim() == 0);
}

TEST_CASE("projective-injective bimodule checks") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    auto Ae = enveloping_algebra(D);
    Module free1 = Module::regular(Ae);
    CHECK(is_projective_injective_bimodule(free1));
    Module diag = diagonal_bimodule(D, Ae);
    CHECK(!is_projective_injective_bimodule(diag));
    CHECK(is_projective_injective_bimodule(Module::zero(Ae)));
}

TEST_CASE("edge unit test on the periodocity witness class") {
    Field F = Field::prime(2);
    auto D = fixtures::dual_numbers_ptr(F);
    auto sigma = Automorphism::identity(D);
    auto w = twisted_periodicity_witness(D, sigma, 1);
    REQUIRE(w.status == WitnessResult::Status::Found);
    auto Ae = enveloping_algebra(D);
    Module diag = diagonal_bimodule(D, Ae);
    Resolution res = minimal_projective_resolution(diag, 4);
    ExtClass xi = extension_class_of_sequence(*w.witness, res);
    CHECK(edge_unit_test(D, sigma, 1, xi, res));
    // zero class is never an edge unit
    ExtClass zero{3, Matrix(F, res.term(3).dim(), 2)};
    CHECK(!edge_unit_test(D, sigma, 1, zero, res));
    // scaling by a central unit preserves the property
    ExtClass scaled{3, xi.cocycle.scaled(F.one())};
    CHECK(edge_unit_test(D, sigma, 1, scaled, res));
}

TEST_CASE("stable centre of the dual numbers") {
    Field F0 = Field::rationals();
    CHECK(stable_center(fixtures::dual_numbers(F0)).dimension == 1);
    Field F2 = Field::prime(2);
    CHECK(stable_center(fixtures::dual_numbers(F2)).dimension == 2);
    std::vector<std::vector<Vec>> sc(1, std::vector<Vec>(1, Vec{F0.one()}));
    AlgebraTable k(F0, {"1"}, sc, Vec{F0.one()});
    CHECK(stable_center(k).dimension == 0);
}

TEST_CASE("syzygy additivity on test instances") {
    Field F = Field::rationals();
    auto D = fixtures::dual_numbers_ptr(F);
    Module S = simple_at(D, 0);
    Module a = syzygy(S, 3);
    Module b = syzygy(syzygy(S, 2), 1);
    CHECK(module_iso(a, b).status == IsoResult::Status::Found);
}
