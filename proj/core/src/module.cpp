#include "homalg/module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace homalg {

namespace {

Vec unit_vec(const Field& F, std::size_t n, std::size_t i) {
    Vec v(n, Scalar(0));
    v[i] = F.one();
    return v;
}

} // namespace

Module::Module(AlgebraPtr A, std::size_t dim, std::vector<Matrix> actions)
    : A_(std::move(A)), dim_(dim), act_(std::move(actions)) {
    const Field& F = A_->field();
    std::size_t n = A_->dim();
    if (act_.size() != n)
        throw InputError("module needs one action matrix per algebra basis element");
    for (const auto& M : act_)
        if (M.rows() != dim_ || M.cols() != dim_)
            throw InputError("action matrix shape mismatch");
    if (dim_ == 0)
        return;
    Matrix U(F, dim_, dim_);
    for (std::size_t i = 0; i < n; ++i)
        if (A_->unit()[i] != 0)
            U = U + act_[i].scaled(A_->unit()[i]);
    if (!(U == Matrix::identity(F, dim_)))
        throw InputError("module action: unit does not act as identity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = act_[i] * act_[j];
            Matrix rhs(F, dim_, dim_);
            const Vec& c = A_->mul_basis(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (c[k] != 0)
                    rhs = rhs + act_[k].scaled(c[k]);
            if (!(lhs == rhs))
                throw InputError("module action does not respect structure constants");
        }
}

Module Module::zero(AlgebraPtr A) {
    std::size_t n = A->dim();
    const Field& F = A->field();
    return Module(std::move(A), 0, std::vector<Matrix>(n, Matrix(F, 0, 0)));
}

Module Module::regular(AlgebraPtr A) {
    const Field& F = A->field();
    std::size_t n = A->dim();
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < n; ++i)
        acts.push_back(A->right_mult_matrix(unit_vec(F, n, i)));
    return Module(std::move(A), n, std::move(acts));
}

Vec Module::act(const Vec& v, const Vec& a) const {
    const Field& F = A_->field();
    Vec r(dim_, Scalar(0));
    for (std::size_t i = 0; i < A_->dim(); ++i)
        if (a[i] != 0)
            r = vec_add(F, r, vec_scale(F, a[i], act_[i].apply_row(v)));
    return r;
}

Matrix Module::action_of(const Vec& a) const {
    const Field& F = A_->field();
    Matrix M(F, dim_, dim_);
    for (std::size_t i = 0; i < A_->dim(); ++i)
        if (a[i] != 0)
            M = M + act_[i].scaled(a[i]);
    return M;
}

Module Module::direct_sum(const Module& other) const {
    const Field& F = A_->field();
    std::size_t n = A_->dim();
    std::size_t d1 = dim_, d2 = other.dim_;
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix M(F, d1 + d2, d1 + d2);
        for (std::size_t r = 0; r < d1; ++r)
            for (std::size_t c = 0; c < d1; ++c)
                M.set(r, c, act_[i].at(r, c));
        for (std::size_t r = 0; r < d2; ++r)
            for (std::size_t c = 0; c < d2; ++c)
                M.set(d1 + r, d1 + c, other.act_[i].at(r, c));
        acts.push_back(std::move(M));
    }
    return Module(A_, d1 + d2, std::move(acts));
}

std::pair<Module, Matrix> Module::submodule(const std::vector<Vec>& generators) const {
    const Field& F = A_->field();
    std::size_t n = A_->dim();
    RowSpan S(F, dim_);
    std::vector<Vec> queue;
    for (const auto& g : generators)
        if (S.add(g))
            queue.push_back(g);
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (std::size_t i = 0; i < n; ++i) {
            Vec w = act_[i].apply_row(queue[q]);
            if (S.add(w))
                queue.push_back(w);
        }
    std::vector<Vec> basis = S.basis();
    std::size_t d = basis.size();
    Matrix incl = Matrix::from_rows(F, basis, dim_);
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix M(F, d, d);
        for (std::size_t r = 0; r < d; ++r) {
            Vec img = act_[i].apply_row(basis[r]);
            auto co = S.coordinates(img);
            if (!co)
                throw Error("internal: submodule is not action-stable");
            for (std::size_t c = 0; c < d; ++c)
                M.set(r, c, (*co)[c]);
        }
        acts.push_back(std::move(M));
    }
    return {Module(A_, d, std::move(acts)), std::move(incl)};
}

std::pair<Module, Matrix> Module::quotient(const std::vector<Vec>& sub_rows) const {
    const Field& F = A_->field();
    std::size_t n = A_->dim();
    RowSpan S(F, dim_);
    S.add_all(sub_rows);
    for (const auto& r : S.basis())
        for (std::size_t i = 0; i < n; ++i)
            if (!S.contains(act_[i].apply_row(r)))
                throw InputError("quotient by a non-submodule");
    std::vector<std::size_t> keep = S.complement_cols();
    std::size_t q = keep.size();
    Matrix proj(F, dim_, q);
    for (std::size_t i = 0; i < dim_; ++i) {
        Vec red = S.reduce(unit_vec(F, dim_, i));
        for (std::size_t k = 0; k < q; ++k)
            proj.set(i, k, red[keep[k]]);
    }
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix M(F, q, q);
        for (std::size_t r = 0; r < q; ++r) {
            Vec img = act_[i].apply_row(unit_vec(F, dim_, keep[r]));
            Vec red = S.reduce(img);
            for (std::size_t c = 0; c < q; ++c)
                M.set(r, c, red[keep[c]]);
        }
        acts.push_back(std::move(M));
    }
    return {Module(A_, q, std::move(acts)), std::move(proj)};
}

ModuleMap::ModuleMap(Module src, Module tgt, Matrix mat, bool check)
    : src_(std::move(src)), tgt_(std::move(tgt)), mat_(std::move(mat)) {
    if (mat_.rows() != src_.dim() || mat_.cols() != tgt_.dim())
        throw InputError("module map matrix shape mismatch");
    if (check) {
        for (std::size_t i = 0; i < src_.algebra()->dim(); ++i) {
            Matrix lhs = src_.action(i) * mat_;
            Matrix rhs = mat_ * tgt_.action(i);
            if (!(lhs == rhs))
                throw InputError("matrix does not commute with the action: basis element " +
                                 src_.algebra()->label(i));
        }
    }
}

ModuleMap ModuleMap::zero(const Module& src, const Module& tgt) {
    return ModuleMap(src, tgt, Matrix(src.algebra()->field(), src.dim(), tgt.dim()), false);
}

ModuleMap ModuleMap::identity(const Module& m) {
    return ModuleMap(m, m, Matrix::identity(m.algebra()->field(), m.dim()), false);
}

ModuleMap ModuleMap::then(const ModuleMap& next) const {
    if (tgt_.dim() != next.src_.dim())
        throw InputError("module map composition shape mismatch");
    return ModuleMap(src_, next.tgt_, mat_ * next.mat_, false);
}

std::pair<Module, ModuleMap> ModuleMap::kernel() const {
    auto K = left_kernel_basis(mat_);
    auto [sub, incl] = src_.submodule(K);
    if (sub.dim() != K.size())
        throw Error("internal: kernel is not action-stable");
    return {sub, ModuleMap(sub, src_, incl, false)};
}

std::pair<Module, ModuleMap> ModuleMap::cokernel() const {
    std::vector<Vec> image_rows;
    for (std::size_t i = 0; i < src_.dim(); ++i)
        image_rows.push_back(mat_.row(i));
    auto [Q, proj] = tgt_.quotient(image_rows);
    return {Q, ModuleMap(tgt_, Q, proj, false)};
}

std::vector<Matrix> hom_space(const Module& M, const Module& N) {
    const Field& F = M.algebra()->field();
    std::size_t n = M.algebra()->dim();
    std::size_t dm = M.dim(), dn = N.dim();
    if (dm == 0 || dn == 0)
        return {};
    Matrix Sys(F, n * dm * dn, dm * dn);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& Ai = M.action(i);
        const Matrix& Bi = N.action(i);
        for (std::size_t r = 0; r < dm; ++r)
            for (std::size_t c = 0; c < dn; ++c) {
                std::size_t row = (i * dm + r) * dn + c;
                // (A_i T)_{r,c} - (T B_i)_{r,c} = 0
                for (std::size_t k = 0; k < dm; ++k)
                    if (Ai.at(r, k) != 0)
                        Sys.set(row, k * dn + c, F.add(Sys.at(row, k * dn + c), Ai.at(r, k)));
                for (std::size_t k = 0; k < dn; ++k)
                    if (Bi.at(k, c) != 0)
                        Sys.set(row, r * dn + k, F.sub(Sys.at(row, r * dn + k), Bi.at(k, c)));
            }
    }
    auto K = kernel_basis(Sys);
    std::vector<Matrix> basis;
    for (const auto& v : K) {
        Matrix T(F, dm, dn);
        for (std::size_t r = 0; r < dm; ++r)
            for (std::size_t c = 0; c < dn; ++c)
                T.set(r, c, v[r * dn + c]);
        basis.push_back(std::move(T));
    }
    return basis;
}

AlgebraPtr enveloping_algebra(const AlgebraPtr& A) {
    const Field& F = A->field();
    std::size_t n = A->dim();
    std::size_t N = n * n;
    std::vector<std::string> labels(N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            labels[i * n + j] = A->label(i) + "(x)" + A->label(j) + "^op";
    std::vector<std::vector<Vec>> sc(N, std::vector<Vec>(N, Vec(N, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const Vec& c1 = A->mul_basis(i, k); // b_i b_k
                    const Vec& c2 = A->mul_basis(l, j); // (b_j^op)(b_l^op) = b_l b_j
                    Vec& out = sc[i * n + j][k * n + l];
                    for (std::size_t r = 0; r < n; ++r) {
                        if (c1[r] == 0)
                            continue;
                        for (std::size_t s = 0; s < n; ++s)
                            if (c2[s] != 0)
                                out[r * n + s] = F.add(out[r * n + s], F.mul(c1[r], c2[s]));
                    }
                }
    Vec unit(N, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            unit[i * n + j] = F.mul(A->unit()[i], A->unit()[j]);
    return std::make_shared<AlgebraTable>(F, std::move(labels), std::move(sc), std::move(unit));
}

namespace {

Module bimodule_from_twists(const AlgebraPtr& A, const AlgebraPtr& Ae,
                            const std::optional<Automorphism>& right_tw,
                            const std::optional<Automorphism>& left_tw) {
    const Field& F = A->field();
    std::size_t n = A->dim();
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            // x * (b_k ox b_l^op) = b_l x b_k, with twists applied per side
            Vec bk = unit_vec(F, n, k), bl = unit_vec(F, n, l);
            Vec right = right_tw ? right_tw->apply(bk) : bk;
            Vec left = left_tw ? left_tw->apply(bl) : bl;
            Matrix M(F, n, n);
            for (std::size_t r = 0; r < n; ++r) {
                Vec x = unit_vec(F, n, r);
                Vec val = A->mul(left, A->mul(x, right));
                for (std::size_t c = 0; c < n; ++c)
                    M.set(r, c, val[c]);
            }
            acts.push_back(std::move(M));
        }
    return Module(Ae, n, std::move(acts));
}

} // namespace

Module diagonal_bimodule(const AlgebraPtr& A, const AlgebraPtr& Ae) {
    return bimodule_from_twists(A, Ae, std::nullopt, std::nullopt);
}

Module twisted_bimodule(const AlgebraPtr& A, const AlgebraPtr& Ae, const Automorphism& sigma,
                        TwistSide side) {
    if (side == TwistSide::Right)
        return bimodule_from_twists(A, Ae, sigma, std::nullopt);
    return bimodule_from_twists(A, Ae, std::nullopt, sigma);
}

std::vector<Vec> module_radical_rows(const Module& M) {
    auto J = jacobson_radical(*M.algebra());
    std::vector<Vec> rows;
    const Field& F = M.algebra()->field();
    RowSpan S(F, M.dim());
    for (std::size_t i = 0; i < M.dim(); ++i)
        for (const auto& j : J) {
            Vec w = M.act(unit_vec(F, M.dim(), i), j);
            if (S.add(w))
                rows.push_back(w);
        }
    return rows;
}

Module indecomposable_projective(const AlgebraPtr& A, std::size_t i) {
    auto idems = primitive_idempotents(*A);
    Module reg = Module::regular(A);
    auto [sub, incl] = reg.submodule({idems.at(i)});
    return sub;
}

std::vector<Module> simple_modules(const AlgebraPtr& A) {
    auto idems = primitive_idempotents(*A);
    std::vector<Module> simples;
    for (std::size_t i = 0; i < idems.size(); ++i) {
        Module P = indecomposable_projective(A, i);
        auto rad = module_radical_rows(P);
        auto [S, proj] = P.quotient(rad);
        simples.push_back(S);
    }
    return simples;
}

ModuleMap projective_cover(const Module& M) {
    const AlgebraPtr& A = M.algebra();
    const Field& F = A->field();
    if (M.dim() == 0)
        return ModuleMap::zero(Module::zero(A), M);
    auto idems = primitive_idempotents(*A);
    auto rad_rows = module_radical_rows(M);
    auto [T, proj] = M.quotient(rad_rows);

    Module P = Module::zero(A);
    std::vector<Vec> generators;
    std::vector<std::size_t> idem_of_gen;
    for (std::size_t i = 0; i < idems.size(); ++i) {
        Matrix Ei = T.action_of(idems[i]);
        RowSpan S(F, T.dim());
        for (std::size_t r = 0; r < T.dim(); ++r)
            S.add(Ei.apply_row(unit_vec(F, T.dim(), r)));
        for (const auto& t : S.basis()) {
            auto v = solve_row(proj, t);
            if (!v)
                throw Error("internal: top projection is not surjective");
            Vec lift = M.act(*v, idems[i]);
            generators.push_back(lift);
            idem_of_gen.push_back(i);
        }
    }
    for (std::size_t g = 0; g < generators.size(); ++g)
        P = P.direct_sum(indecomposable_projective(A, idem_of_gen[g]));

    Matrix cover(F, P.dim(), M.dim());
    std::size_t offset = 0;
    for (std::size_t g = 0; g < generators.size(); ++g) {
        Module reg = Module::regular(A);
        auto [sub, incl] = reg.submodule({idems[idem_of_gen[g]]});
        for (std::size_t r = 0; r < sub.dim(); ++r) {
            Vec w = incl.row(r); // an element of A spanning e_i A
            Vec img = M.act(generators[g], w);
            for (std::size_t c = 0; c < M.dim(); ++c)
                cover.set(offset + r, c, img[c]);
        }
        offset += sub.dim();
    }
    ModuleMap pi(P, M, cover);
    if (pi.rank() != M.dim())
        throw Error("internal: projective cover is not surjective");
    auto [K, incl] = pi.kernel();
    RowSpan radP(F, P.dim());
    radP.add_all(module_radical_rows(P));
    for (std::size_t r = 0; r < K.dim(); ++r)
        if (!radP.contains(incl.matrix().row(r)))
            throw Error("internal: projective cover is not minimal");
    return pi;
}

bool is_projective(const Module& M) {
    if (M.dim() == 0)
        return true;
    auto pi = projective_cover(M);
    return pi.source().dim() == M.dim();
}

namespace {

std::optional<Scalar> top_scalar(const Module& P, const Matrix& endo) {
    const Field& F = P.algebra()->field();
    auto rad = module_radical_rows(P);
    auto [T, proj] = P.quotient(rad);
    if (T.dim() != 1)
        return std::nullopt;
    auto v = solve_row(proj, unit_vec(F, 1, 0));
    if (!v)
        return std::nullopt;
    Vec img = proj.apply_row(endo.apply_row(*v));
    return img[0];
}

} // namespace

Module remove_projective_summands(const Module& M) {
    const AlgebraPtr& A = M.algebra();
    const Field& F = A->field();
    Module cur = M;
    bool changed = true;
    while (changed && cur.dim() > 0) {
        changed = false;
        auto idems = primitive_idempotents(*A);
        for (std::size_t i = 0; i < idems.size() && !changed; ++i) {
            Module P = indecomposable_projective(A, i);
            auto in_maps = hom_space(P, cur);
            auto out_maps = hom_space(cur, P);
            for (const auto& f : in_maps) {
                for (const auto& g : out_maps) {
                    Matrix comp = f * g; // P -> cur -> P
                    auto lam = top_scalar(P, comp);
                    if (!lam || *lam == 0 || rank(comp) != P.dim())
                        continue;
                    Matrix comp_inv(F, P.dim(), P.dim());
                    for (std::size_t r = 0; r < P.dim(); ++r) {
                        auto sol = solve_row(comp, unit_vec(F, P.dim(), r));
                        if (!sol)
                            throw Error("internal: invertible composite has no inverse");
                        for (std::size_t c = 0; c < P.dim(); ++c)
                            comp_inv.set(r, c, (*sol)[c]);
                    }
                    Matrix v = g * comp_inv; // cur -> P, with (f then v) = id_P
                    ModuleMap vm(cur, P, v, false);
                    auto [K, incl] = vm.kernel();
                    if (K.dim() + P.dim() != cur.dim())
                        throw Error("internal: projective splitting dimension mismatch");
                    cur = K;
                    changed = true;
                    break;
                }
                if (changed)
                    break;
            }
        }
    }
    return cur;
}

Module syzygy(const Module& M, std::size_t n) {
    Module cur = remove_projective_summands(M);
    for (std::size_t k = 0; k < n; ++k) {
        if (cur.dim() == 0)
            break;
        auto pi = projective_cover(cur);
        auto [K, incl] = pi.kernel();
        cur = K;
    }
    return cur;
}

Resolution minimal_projective_resolution(const Module& M, std::size_t n) {
    Resolution res;
    ModuleMap aug = projective_cover(M);
    res.maps.push_back(aug);
    ModuleMap prev = aug;
    for (std::size_t k = 1; k <= n; ++k) {
        auto [K, incl] = prev.kernel();
        ModuleMap cover = projective_cover(K);
        ModuleMap diff = cover.then(incl);
        res.maps.push_back(diff);
        prev = diff;
    }
    for (std::size_t k = 0; k + 1 < res.maps.size(); ++k) {
        const ModuleMap& g = res.maps[k];
        const ModuleMap& f = res.maps[k + 1];
        if (!f.then(g).is_zero())
            throw Error("internal: resolution differentials do not compose to zero");
        if (f.rank() + g.rank() != f.target().dim())
            throw Error("internal: resolution not exact");
    }
    return res;
}

ExtSpace ext_space(const Module& M, const Module& N, std::size_t n) {
    const Field& F = M.algebra()->field();
    Resolution res = minimal_projective_resolution(M, n + 1);
    const Module& Pn = res.term(n);
    std::size_t w = Pn.dim() * N.dim();
    ExtSpace out(F, w ? w : 1);
    out.resolution = res;
    if (Pn.dim() == 0 || N.dim() == 0)
        return out;

    auto flatten = [&](const Matrix& T) {
        Vec v(w);
        for (std::size_t r = 0; r < Pn.dim(); ++r)
            for (std::size_t c = 0; c < N.dim(); ++c)
                v[r * N.dim() + c] = T.at(r, c);
        return v;
    };

    std::vector<Matrix> homs = hom_space(Pn, N);
    std::vector<Matrix> cocycles;
    if (!homs.empty()) {
        const Matrix& D1 = res.maps[n + 1].matrix();
        std::size_t eq = res.term(n + 1).dim() * N.dim();
        Matrix Sys(F, homs.size(), eq);
        for (std::size_t b = 0; b < homs.size(); ++b) {
            Matrix comp = D1 * homs[b];
            for (std::size_t r = 0; r < res.term(n + 1).dim(); ++r)
                for (std::size_t c = 0; c < N.dim(); ++c)
                    Sys.set(b, r * N.dim() + c, comp.at(r, c));
        }
        for (const auto& coef : left_kernel_basis(Sys)) {
            Matrix Z(F, Pn.dim(), N.dim());
            for (std::size_t b = 0; b < homs.size(); ++b)
                if (coef[b] != 0)
                    Z = Z + homs[b].scaled(coef[b]);
            cocycles.push_back(Z);
        }
    }
    if (n > 0) {
        const Matrix& D0 = res.maps[n].matrix();
        for (const auto& g : hom_space(res.term(n - 1), N))
            out.coboundaries.add(flatten(D0 * g));
    }
    RowSpan classes(F, w);
    for (const auto& z : cocycles) {
        Vec red = out.coboundaries.reduce(flatten(z));
        if (classes.add(red)) {
            Matrix rep(F, Pn.dim(), N.dim());
            for (std::size_t r = 0; r < Pn.dim(); ++r)
                for (std::size_t c = 0; c < N.dim(); ++c)
                    rep.set(r, c, red[r * N.dim() + c]);
            out.basis.push_back(ExtClass{n, rep});
        }
    }
    out.dimension = out.basis.size();
    return out;
}

bool is_injective_module(const Module& M) {
    for (const auto& S : simple_modules(M.algebra()))
        if (ext_space(S, M, 1).dimension != 0)
            return false;
    return true;
}

bool is_self_injective(const AlgebraTable& A) {
    auto Aptr = std::make_shared<AlgebraTable>(A);
    return is_injective_module(Module::regular(Aptr));
}

StableCenter stable_center(const AlgebraTable& A) {
    if (!is_self_injective(A))
        throw PreconditionError("stable centre requires a self-injective algebra");
    auto Aptr = std::make_shared<AlgebraTable>(A);
    auto Ae = enveloping_algebra(Aptr);
    Module diag = diagonal_bimodule(Aptr, Ae);
    ModuleMap cover = projective_cover(diag);
    const Field& F = A.field();

    std::vector<Vec> Z = center(A);
    std::vector<Matrix> lifts = hom_space(diag, cover.source());
    std::vector<Vec> ideal;
    RowSpan ideal_span(F, A.dim());
    for (const auto& z : Z) {
        Matrix rho = A.right_mult_matrix(z);
        std::size_t k = lifts.size();
        std::size_t w = A.dim() * A.dim();
        Matrix Sys(F, k, w);
        Vec rhs(w);
        for (std::size_t b = 0; b < k; ++b) {
            Matrix comp = lifts[b] * cover.matrix();
            for (std::size_t r = 0; r < A.dim(); ++r)
                for (std::size_t c = 0; c < A.dim(); ++c)
                    Sys.set(b, r * A.dim() + c, comp.at(r, c));
        }
        for (std::size_t r = 0; r < A.dim(); ++r)
            for (std::size_t c = 0; c < A.dim(); ++c)
                rhs[r * A.dim() + c] = rho.at(r, c);
        bool factors = k > 0 && solve_row(Sys, rhs).has_value();
        if (k == 0)
            factors = rho.is_zero();
        if (factors) {
            if (ideal_span.add(z))
                ideal.push_back(z);
        }
    }
    StableCenter out;
    out.ideal_basis = ideal;
    out.dimension = Z.size() - ideal.size();
    std::ostringstream os;
    os << "Z(Lambda) of dimension " << Z.size() << " modulo ideal of dimension " << ideal.size();
    out.description = os.str();
    return out;
}

IsoResult module_iso(const Module& M, const Module& N, std::uint64_t seed) {
    const Field& F = M.algebra()->field();
    if (M.dim() != N.dim())
        return {IsoResult::Status::None, std::nullopt};
    if (M.dim() == 0)
        return {IsoResult::Status::Found, ModuleMap::zero(M, N)};
    std::vector<Matrix> H = hom_space(M, N);
    if (H.empty())
        return {IsoResult::Status::None, std::nullopt};

    auto try_matrix = [&](const Matrix& T) -> std::optional<ModuleMap> {
        if (rank(T) == M.dim())
            return ModuleMap(M, N, T, false);
        return std::nullopt;
    };
    for (const auto& h : H)
        if (auto m = try_matrix(h))
            return {IsoResult::Status::Found, m};

    std::mt19937_64 rng(seed);
    long hi = F.is_rational() ? 9 : F.characteristic() - 1;
    std::uniform_int_distribution<long> dist(F.is_rational() ? -9 : 0, hi);
    for (int trial = 0; trial < 64; ++trial) {
        Matrix T(F, M.dim(), N.dim());
        for (const auto& h : H)
            T = T + h.scaled(F.of_int(dist(rng)));
        if (auto m = try_matrix(T))
            return {IsoResult::Status::Found, m};
    }

    std::vector<Scalar> pool = {F.of_int(0), F.of_int(1), F.of_int(-1), F.of_int(2)};
    if (!F.is_rational() && F.characteristic() == 2)
        pool = {F.of_int(0), F.of_int(1)};
    std::size_t k = H.size();
    double combos = 1;
    for (std::size_t i = 0; i < k; ++i)
        combos *= static_cast<double>(pool.size());
    if (combos <= 65536.0) {
        std::vector<std::size_t> pick(k, 0);
        for (;;) {
            Matrix T(F, M.dim(), N.dim());
            for (std::size_t i = 0; i < k; ++i)
                if (pool[pick[i]] != 0)
                    T = T + H[i].scaled(pool[pick[i]]);
            if (auto m = try_matrix(T))
                return {IsoResult::Status::Found, m};
            std::size_t pos = 0;
            while (pos < k && ++pick[pos] == pool.size()) {
                pick[pos] = 0;
                ++pos;
            }
            if (pos == k)
                break;
        }
    }

    if (M.dim() <= 8 && k <= 6) {
        // determinant of the generic combination sum t_i H_i as a polynomial
        // in t; identically zero certifies that no isomorphism exists over any
        // field extension
        using Mono = std::vector<unsigned>;
        using Poly = std::map<Mono, Scalar>;
        auto poly_add = [&](Poly& p, const Mono& m, const Scalar& c) {
            if (c == 0)
                return;
            auto it = p.find(m);
            if (it == p.end())
                p[m] = c;
            else {
                it->second = F.add(it->second, c);
                if (it->second == 0)
                    p.erase(it);
            }
        };
        auto poly_mul = [&](const Poly& a, const Poly& b) {
            Poly r;
            for (const auto& [ma, ca] : a)
                for (const auto& [mb, cb] : b) {
                    Mono m(k, 0);
                    for (std::size_t i = 0; i < k; ++i)
                        m[i] = ma[i] + mb[i];
                    poly_add(r, m, F.mul(ca, cb));
                }
            return r;
        };
        std::size_t d = M.dim();
        std::vector<std::vector<Poly>> E(d, std::vector<Poly>(d));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t i = 0; i < k; ++i)
                    if (H[i].at(r, c) != 0) {
                        Mono m(k, 0);
                        m[i] = 1;
                        poly_add(E[r][c], m, H[i].at(r, c));
                    }
        std::function<Poly(std::vector<std::size_t>, std::vector<std::size_t>)> det =
            [&](std::vector<std::size_t> rows, std::vector<std::size_t> cols) -> Poly {
            if (rows.size() == 1)
                return E[rows[0]][cols[0]];
            Poly r;
            for (std::size_t j = 0; j < cols.size(); ++j) {
                const Poly& head = E[rows[0]][cols[j]];
                if (head.empty())
                    continue;
                std::vector<std::size_t> rr(rows.begin() + 1, rows.end());
                std::vector<std::size_t> cc;
                for (std::size_t t = 0; t < cols.size(); ++t)
                    if (t != j)
                        cc.push_back(cols[t]);
                Poly term = poly_mul(head, det(rr, cc));
                Scalar sgn = (j % 2 == 0) ? F.one() : F.of_int(-1);
                for (const auto& [m, c] : term)
                    poly_add(r, m, F.mul(sgn, c));
            }
            return r;
        };
        std::vector<std::size_t> idx(d);
        for (std::size_t i = 0; i < d; ++i)
            idx[i] = i;
        if (det(idx, idx).empty())
            return {IsoResult::Status::None, std::nullopt};
    }
    return {IsoResult::Status::Undecided, std::nullopt};
}

WitnessResult twisted_periodicity_witness(const AlgebraPtr& A, const Automorphism& sigma, int d,
                                          std::uint64_t seed) {
    if (!is_self_injective(*A))
        throw PreconditionError("twisted periodicity requires a self-injective algebra");
    if (d < -1)
        throw InputError("periodicity parameter d must be at least -1");
    std::size_t period = static_cast<std::size_t>(d + 2);
    auto Ae = enveloping_algebra(A);
    Module diag = diagonal_bimodule(A, Ae);
    Resolution res = minimal_projective_resolution(diag, period - 1);
    // Omega^{d+2} = ker(P_{d+1} -> P_d); maps[period-1] is that differential
    auto [K, incl] = res.maps[period - 1].kernel();
    Module T = twisted_bimodule(A, Ae, sigma, TwistSide::Right);
    IsoResult iso = module_iso(T, K, seed);
    if (iso.status == IsoResult::Status::Undecided)
        return {WitnessResult::Status::Undecided, std::nullopt};
    if (iso.status == IsoResult::Status::None)
        return {WitnessResult::Status::Absent, std::nullopt};

    ExactSequenceOfBimodules eta;
    eta.terms.push_back(T);
    for (std::size_t k = period; k-- > 0;)
        eta.terms.push_back(res.term(k));
    eta.terms.push_back(diag);
    eta.maps.push_back(iso.iso->then(incl));
    for (std::size_t k = period; k-- > 1;)
        eta.maps.push_back(res.maps[k]);
    eta.maps.push_back(res.maps[0]);

    if (eta.maps.front().rank() != T.dim())
        throw Error("internal: witness head is not injective");
    if (eta.maps.back().rank() != diag.dim())
        throw Error("internal: witness tail is not surjective");
    if (!is_exact_at_inner_spots(eta.maps))
        throw Error("internal: witness sequence is not exact");
    return {WitnessResult::Status::Found, eta};
}

bool is_exact_at_inner_spots(const std::vector<ModuleMap>& maps) {
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        const ModuleMap& f = maps[k];
        const ModuleMap& g = maps[k + 1];
        if (!f.then(g).is_zero())
            return false;
        if (f.rank() + g.rank() != f.target().dim())
            return false;
    }
    return true;
}

Module tensor_with_bimodule(const Module& M, const Module& B, const AlgebraPtr& A,
                            Matrix* projection) {
    const Field& F = A->field();
    std::size_t n = A->dim();
    std::size_t dm = M.dim(), db = B.dim();
    std::size_t big = dm * db;
    auto left_action = [&](std::size_t a_idx) {
        // action of 1 ox a^op on the bimodule is left multiplication by a
        Vec e(n * n, Scalar(0));
        for (std::size_t i = 0; i < n; ++i)
            if (A->unit()[i] != 0)
                e[i * n + a_idx] = A->unit()[i];
        return B.action_of(e);
    };
    auto right_action = [&](std::size_t a_idx) {
        Vec e(n * n, Scalar(0));
        for (std::size_t i = 0; i < n; ++i)
            if (A->unit()[i] != 0)
                e[a_idx * n + i] = A->unit()[i];
        return B.action_of(e);
    };

    std::vector<Vec> relations;
    for (std::size_t a = 0; a < n; ++a) {
        Matrix LA = left_action(a);
        const Matrix& MA = M.action(a);
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < db; ++j) {
                Vec rel(big, Scalar(0));
                Vec ma = MA.apply_row(unit_vec(F, dm, i));
                for (std::size_t r = 0; r < dm; ++r)
                    if (ma[r] != 0)
                        rel[r * db + j] = F.add(rel[r * db + j], ma[r]);
                Vec ax = LA.apply_row(unit_vec(F, db, j));
                for (std::size_t s = 0; s < db; ++s)
                    if (ax[s] != 0)
                        rel[i * db + s] = F.sub(rel[i * db + s], ax[s]);
                if (!vec_is_zero(rel))
                    relations.push_back(std::move(rel));
            }
    }
    RowSpan R(F, big);
    R.add_all(relations);
    std::vector<std::size_t> keep = R.complement_cols();
    std::size_t q = keep.size();
    Matrix proj(F, big, q);
    for (std::size_t i = 0; i < big; ++i) {
        Vec red = R.reduce(unit_vec(F, big, i));
        for (std::size_t c = 0; c < q; ++c)
            proj.set(i, c, red[keep[c]]);
    }
    std::vector<Matrix> acts;
    for (std::size_t a = 0; a < n; ++a) {
        Matrix RA = right_action(a);
        Matrix act(F, q, q);
        for (std::size_t r = 0; r < q; ++r) {
            std::size_t i = keep[r] / db, j = keep[r] % db;
            Vec xj = RA.apply_row(unit_vec(F, db, j));
            Vec bigv(big, Scalar(0));
            for (std::size_t s = 0; s < db; ++s)
                if (xj[s] != 0)
                    bigv[i * db + s] = xj[s];
            Vec red = R.reduce(bigv);
            for (std::size_t c = 0; c < q; ++c)
                act.set(r, c, red[keep[c]]);
        }
        acts.push_back(std::move(act));
    }
    if (projection)
        *projection = proj;
    return Module(A, q, std::move(acts));
}

TensoredSequence tensor_extension(const Module& M, const ExactSequenceOfBimodules& eta,
                                  const AlgebraPtr& A) {
    const Field& F = A->field();
    TensoredSequence out;
    std::vector<Matrix> projections;
    for (const auto& term : eta.terms) {
        Matrix proj;
        out.terms.push_back(tensor_with_bimodule(M, term, A, &proj));
        projections.push_back(proj);
    }
    for (std::size_t k = 0; k + 1 < eta.terms.size(); ++k) {
        std::size_t dm = M.dim();
        std::size_t db_src = eta.terms[k].dim();
        std::size_t db_tgt = eta.terms[k + 1].dim();
        const Matrix& f = eta.maps[k].matrix();
        Matrix bigmap(F, dm * db_src, dm * db_tgt);
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < db_src; ++j)
                for (std::size_t s = 0; s < db_tgt; ++s)
                    if (f.at(j, s) != 0)
                        bigmap.set(i * db_src + j, i * db_tgt + s, f.at(j, s));
        const Matrix& psrc = projections[k];
        const Matrix& ptgt = projections[k + 1];
        Matrix induced(F, out.terms[k].dim(), out.terms[k + 1].dim());
        for (std::size_t qv = 0; qv < out.terms[k].dim(); ++qv) {
            auto pre = solve_row(psrc, unit_vec(F, out.terms[k].dim(), qv));
            if (!pre)
                throw Error("internal: tensor projection has no section");
            Vec img = ptgt.apply_row(bigmap.apply_row(*pre));
            for (std::size_t c = 0; c < out.terms[k + 1].dim(); ++c)
                induced.set(qv, c, img[c]);
        }
        out.maps.push_back(ModuleMap(out.terms[k], out.terms[k + 1], induced));
    }
    if (!is_exact_at_inner_spots(out.maps))
        throw Error("tensored extension lost exactness");
    return out;
}

bool is_projective_injective_bimodule(const Module& P) {
    return is_projective(P) && is_injective_module(P);
}

namespace {

std::optional<Matrix> solve_map_with_composition(const Module& src, const Module& tgt,
                                                 const Matrix& post, const Matrix& rhs) {
    const Field& F = src.algebra()->field();
    std::size_t dm = src.dim(), dn = tgt.dim(), dout = post.cols();
    std::size_t n = src.algebra()->dim();
    std::size_t unknowns = dm * dn;
    std::size_t eqs = n * dm * dn + dm * dout;
    Matrix Sys(F, eqs, unknowns);
    Vec b(eqs, Scalar(0));
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& Ai = src.action(i);
        const Matrix& Bi = tgt.action(i);
        for (std::size_t r = 0; r < dm; ++r)
            for (std::size_t c = 0; c < dn; ++c) {
                for (std::size_t k = 0; k < dm; ++k)
                    if (Ai.at(r, k) != 0)
                        Sys.set(row, k * dn + c, F.add(Sys.at(row, k * dn + c), Ai.at(r, k)));
                for (std::size_t k = 0; k < dn; ++k)
                    if (Bi.at(k, c) != 0)
                        Sys.set(row, r * dn + k, F.sub(Sys.at(row, r * dn + k), Bi.at(k, c)));
                ++row;
            }
    }
    for (std::size_t r = 0; r < dm; ++r)
        for (std::size_t c = 0; c < dout; ++c) {
            for (std::size_t k = 0; k < dn; ++k)
                if (post.at(k, c) != 0)
                    Sys.set(row, r * dn + k, post.at(k, c));
            b[row] = rhs.at(r, c);
            ++row;
        }
    auto sol = solve_linear(Sys, b);
    if (!sol)
        return std::nullopt;
    Matrix T(F, dm, dn);
    for (std::size_t r = 0; r < dm; ++r)
        for (std::size_t c = 0; c < dn; ++c)
            T.set(r, c, sol->first[r * dn + c]);
    return T;
}

} // namespace

ExtClass extension_class_of_sequence(const ExactSequenceOfBimodules& eta, const Resolution& res) {
    std::size_t n = eta.terms.size() - 2;
    if (res.maps.size() < n + 1)
        throw InputError("resolution too short to read off the extension class");
    std::vector<Matrix> phi(n + 1);
    {
        const Module& R0 = res.term(0);
        const Module& E0 = eta.terms[eta.terms.size() - 2];
        auto p = solve_map_with_composition(R0, E0, eta.maps.back().matrix(), res.maps[0].matrix());
        if (!p)
            throw Error("internal: comparison lift failed at step 0");
        phi[0] = *p;
    }
    for (std::size_t k = 1; k <= n; ++k) {
        const Module& Rk = res.term(k);
        const Module& Ek = eta.terms[eta.terms.size() - 2 - k];
        const Matrix& ek = eta.maps[eta.terms.size() - 2 - k].matrix();
        Matrix rhs = res.maps[k].matrix() * phi[k - 1];
        auto p = solve_map_with_composition(Rk, Ek, ek, rhs);
        if (!p)
            throw Error("internal: comparison lift failed at step " + std::to_string(k));
        phi[k] = *p;
    }
    return ExtClass{n, phi[n]};
}

bool edge_unit_test(const AlgebraPtr& A, const Automorphism& sigma, int d, const ExtClass& xi,
                    const Resolution& res) {
    if (!is_self_injective(*A))
        throw PreconditionError("edge unit test requires a self-injective algebra");
    if (!A->is_connected())
        throw PreconditionError("edge unit test requires a connected algebra");
    if (jacobson_radical(*A).empty())
        throw PreconditionError("edge unit test requires a non-semisimple algebra");
    std::size_t period = static_cast<std::size_t>(d + 2);
    if (xi.n != period)
        throw InputError("edge unit test expects a class of degree d+2");
    if (res.maps.size() < period + 1)
        throw InputError("resolution too short for the edge unit test");
    auto Ae = enveloping_algebra(A);
    Module T = twisted_bimodule(A, Ae, sigma, TwistSide::Right);
    if (xi.is_zero_class())
        return false;
    auto [K, incl] = res.maps[period - 1].kernel();
    if (K.dim() != T.dim())
        return false;
    const Field& F = A->field();
    const Matrix& D = res.maps[period].matrix();
    Matrix ind(F, K.dim(), T.dim());
    for (std::size_t r = 0; r < K.dim(); ++r) {
        Vec w = incl.matrix().row(r);
        auto u = solve_row(D, w);
        if (!u)
            throw Error("internal: kernel element not in the image of the differential");
        Vec val = xi.cocycle.apply_row(*u);
        for (std::size_t c = 0; c < T.dim(); ++c)
            ind.set(r, c, val[c]);
    }
    return rank(ind) == K.dim();
}

} // namespace homalg
