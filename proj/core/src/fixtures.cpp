#include "homalg/fixtures.hpp"

#include "homalg/module.hpp"

namespace homalg::fixtures {

namespace {

GradedComplexMap single_block(const ComplexOfModules& X, const ComplexOfModules& Y, int degree,
                              int k, const Matrix& mat) {
    const Field& F = X.algebra()->field();
    GradedComplexMap f;
    f.degree = degree;
    for (int t = X.lo(); t <= X.hi(); ++t)
        f.blocks.push_back(Matrix(F, X.term(t).dim(), Y.term(t + degree).dim()));
    f.blocks[static_cast<std::size_t>(k - X.lo())] = mat;
    return f;
}

} // namespace

AlgebraTable dual_numbers(const Field& F) {
    QuiverPresentation Q;
    Q.vertices = {"*"};
    Q.arrows = {QuiverArrow{"eps", 0, 0}};
    Q.relations = {{PathTerm{Scalar(1), 0, 0, {0, 0}}}};
    Q.path_length_bound = 2;
    return build_path_algebra(F, Q);
}

AlgebraPtr dual_numbers_ptr(const Field& F) {
    return std::make_shared<AlgebraTable>(dual_numbers(F));
}

Automorphism dual_numbers_sign_twist(const AlgebraPtr& D) {
    Matrix M = Matrix::identity(D->field(), 2);
    M.set(1, 1, D->field().of_int(-1));
    return Automorphism(D, M);
}

AlgebraTable a3_mod_radical_squared(const Field& F) {
    QuiverPresentation Q;
    Q.vertices = {"1", "2", "3"};
    // a: 2 -> 3 and b: 1 -> 2, so that left multiplication by a is a map
    // P3 -> P2 of projectives and b a = 0 is the only relation
    Q.arrows = {QuiverArrow{"a", 1, 2}, QuiverArrow{"b", 0, 1}};
    Q.relations = {{PathTerm{Scalar(1), 0, 2, {1, 0}}}};
    Q.path_length_bound = 2;
    return build_path_algebra(F, Q);
}

AlgebraPtr a3_mod_radical_squared_ptr(const Field& F) {
    return std::make_shared<AlgebraTable>(a3_mod_radical_squared(F));
}

AlgebraPtr ground_field_algebra(const Field& F) {
    std::vector<std::vector<Vec>> sc(1, std::vector<Vec>(1, Vec{F.one()}));
    return std::make_shared<AlgebraTable>(F, std::vector<std::string>{"1"}, sc, Vec{F.one()});
}

A3DGSetup a3_dg_setup(const Field& F) {
    A3DGSetup S;
    S.B = a3_mod_radical_squared_ptr(F);
    const auto& B = *S.B;
    std::size_t n = B.dim();

    auto basis_index = [&](const std::string& lab) {
        for (std::size_t i = 0; i < n; ++i)
            if (B.label(i) == lab)
                return i;
        throw Error("fixture: missing basis label " + lab);
    };
    auto unit_vec = [&](std::size_t i) {
        Vec v(n, Scalar(0));
        v[i] = F.one();
        return v;
    };

    Module reg = Module::regular(S.B);
    auto [P3, inc3] = reg.submodule({unit_vec(basis_index("e_3"))});
    auto [P2, inc2] = reg.submodule({unit_vec(basis_index("e_2"))});
    auto [P1, inc1] = reg.submodule({unit_vec(basis_index("e_1"))});

    // left multiplication by an algebra element as a map between submodules
    // of the regular representation
    auto left_mult = [&](const Module& src, const Matrix& inc_src, const Module& tgt,
                         const Matrix& inc_tgt, const std::string& lab) {
        Vec elem = unit_vec(basis_index(lab));
        Matrix out(F, src.dim(), tgt.dim());
        for (std::size_t r = 0; r < src.dim(); ++r) {
            Vec w = inc_src.row(r);
            Vec lw = B.mul(elem, w);
            auto co = solve_row(inc_tgt, lw);
            if (!co)
                throw Error("fixture: left multiplication leaves the target submodule");
            for (std::size_t c = 0; c < tgt.dim(); ++c)
                out.set(r, c, (*co)[c]);
        }
        return out;
    };

    Matrix La = left_mult(P3, inc3, P2, inc2, "a");
    Matrix Lb = left_mult(P2, inc2, P1, inc1, "b");

    ComplexOfModules Q(S.B, -2, 0);
    Q.set_term(-2, P3);
    Q.set_term(-1, P2);
    Q.set_term(0, P1);
    Q.set_diff(-2, La);
    Q.set_diff(-1, Lb);
    Q.validate();

    std::vector<ComplexOfModules> objects = {
        ComplexOfModules::concentrated(P3, 0, 0, 0),
        ComplexOfModules::concentrated(P2, 0, 0, 0),
        ComplexOfModules::concentrated(P1, 0, 0, 0),
        Q,
    };
    S.end = std::make_shared<EndDGA>(std::move(objects));
    const auto& objs = S.end->objects();

    S.a = S.end->embed(0, 1, single_block(objs[0], objs[1], 0, 0, La));
    S.b = S.end->embed(1, 2, single_block(objs[1], objs[2], 0, 0, Lb));
    S.u = S.end->embed(0, 3, single_block(objs[0], objs[3], -2, 0, Matrix::identity(F, 1)));
    S.v = S.end->embed(1, 3, single_block(objs[1], objs[3], -1, 0, Matrix::identity(F, 2)));
    S.w = S.end->embed(2, 3, single_block(objs[2], objs[3], 0, 0, Matrix::identity(F, 2)));
    S.up = S.end->embed(3, 0, single_block(objs[3], objs[0], 2, -2, Matrix::identity(F, 1)));
    S.vp = S.end->embed(3, 1, single_block(objs[3], objs[1], 1, -1, Matrix::identity(F, 2)));
    S.wp = S.end->embed(3, 2, single_block(objs[3], objs[2], 0, 0, Matrix::identity(F, 2)));
    S.id_P3 = S.end->object_idempotent(0);

    for (std::size_t o = 0; o < 4; ++o)
        S.paper_retract.preferred_reps.push_back(S.end->object_idempotent(o));
    S.paper_retract.preferred_reps.push_back(S.a);
    S.paper_retract.preferred_reps.push_back(S.b);
    S.paper_retract.preferred_reps.push_back(S.w);
    S.paper_retract.preferred_reps.push_back(S.up);
    S.paper_retract.preferred_preimages.push_back(S.u);
    S.paper_retract.preferred_preimages.push_back(S.v);
    return S;
}

DGAlgebraWindow mss07_dga(const Field& F, std::size_t u_bound, int v_lo, int v_hi) {
    // basis of degree n: u^m v^n a^e, index 2m + e; the truncation imposes
    // u^{u_bound+1} = 0, which is a DG ideal quotient with unchanged
    // cohomology for u_bound >= 2
    DGAlgebraWindow A(F, v_lo, v_hi, false);
    std::size_t U = u_bound;
    for (int nn = v_lo; nn <= v_hi; ++nn) {
        std::vector<std::string> labels;
        for (std::size_t m = 0; m <= U; ++m)
            for (int e = 0; e <= 1; ++e) {
                std::string s = "u^" + std::to_string(m) + "v^" + std::to_string(nn);
                if (e)
                    s += "a";
                labels.push_back(s);
            }
        A.set_component(nn, std::move(labels));
    }
    auto cp = [&](std::size_t p) { return p % 2 == 1 ? F.of_int(-1) : F.zero(); };
    std::size_t per = 2 * (U + 1);
    for (int n1 = v_lo; n1 <= v_hi; ++n1)
        for (int n2 = v_lo; n2 <= v_hi; ++n2) {
            int nout = n1 + n2;
            if (nout < v_lo || nout > v_hi)
                continue;
            for (std::size_t m = 0; m <= U; ++m)
                for (int e = 0; e <= 1; ++e)
                    for (std::size_t p = 0; p <= U; ++p)
                        for (int dl = 0; dl <= 1; ++dl) {
                            Vec out(per, Scalar(0));
                            if (e == 0) {
                                if (m + p <= U)
                                    out[2 * (m + p) + dl] = F.one();
                            } else {
                                // a u^p = (-1)^p u^p a + c_p u^{p-1}
                                if (dl == 0 && m + p <= U) {
                                    Scalar sgn = ((p + n2) % 2 == 0) ? F.one() : F.of_int(-1);
                                    out[2 * (m + p) + 1] = sgn;
                                }
                                if (cp(p) != 0 && p >= 1 && m + p - 1 <= U)
                                    out[2 * (m + p - 1) + dl] =
                                        F.add(out[2 * (m + p - 1) + dl], cp(p));
                            }
                            A.set_product(n1, 2 * m + e, n2, 2 * p + dl, std::move(out));
                        }
        }
    for (int nn = v_lo; nn <= v_hi; ++nn) {
        Matrix D(F, per, nn + 1 <= v_hi ? per : 0);
        if (nn + 1 <= v_hi) {
            Scalar sgn = (nn % 2 == 0) ? F.one() : F.of_int(-1);
            for (std::size_t m = 0; m + 2 <= U; ++m)
                D.set(2 * m + 1, 2 * (m + 2), sgn);
        }
        A.set_differential(nn, std::move(D));
    }
    Vec unit(per, Scalar(0));
    unit[0] = F.one();
    A.set_unit(unit);
    A.validate();
    return A;
}

} // namespace homalg::fixtures
