#include "homalg/complex.hpp"

namespace homalg {

ComplexOfModules::ComplexOfModules(AlgebraPtr A, int lo, int hi) : A_(std::move(A)), lo_(lo), hi_(hi) {
    if (lo > hi)
        throw InputError("complex window is empty");
    for (int k = lo_; k <= hi_; ++k)
        terms_.push_back(Module::zero(A_));
    const Field& F = A_->field();
    for (int k = lo_; k <= hi_; ++k)
        diffs_.push_back(Matrix(F, 0, 0));
}

ComplexOfModules ComplexOfModules::concentrated(const Module& M, int degree, int lo, int hi) {
    ComplexOfModules X(M.algebra(), lo, hi);
    X.set_term(degree, M);
    X.validate();
    return X;
}

const Module& ComplexOfModules::term(int k) const {
    static thread_local std::map<const AlgebraTable*, Module> zeros;
    if (k < lo_ || k > hi_) {
        auto it = zeros.find(A_.get());
        if (it == zeros.end())
            it = zeros.emplace(A_.get(), Module::zero(A_)).first;
        return it->second;
    }
    return terms_[static_cast<std::size_t>(k - lo_)];
}

const Matrix& ComplexOfModules::diff(int k) const {
    static thread_local Matrix empty;
    if (k < lo_ || k > hi_) {
        empty = Matrix(A_->field(), 0, 0);
        return empty;
    }
    return diffs_[static_cast<std::size_t>(k - lo_)];
}

void ComplexOfModules::set_term(int k, Module M) {
    if (k < lo_ || k > hi_)
        throw WindowError("term degree outside the complex window");
    terms_[static_cast<std::size_t>(k - lo_)] = std::move(M);
    // resize adjacent differentials to matching zero maps
    const Field& F = A_->field();
    for (int t : {k - 1, k}) {
        if (t < lo_ || t > hi_)
            continue;
        std::size_t r = term(t).dim();
        std::size_t c = term(t + 1).dim();
        Matrix& d = diffs_[static_cast<std::size_t>(t - lo_)];
        if (d.rows() != r || d.cols() != c)
            d = Matrix(F, r, c);
    }
}

void ComplexOfModules::set_diff(int k, Matrix d) {
    if (k < lo_ || k > hi_)
        throw WindowError("differential degree outside the complex window");
    if (d.rows() != term(k).dim() || d.cols() != term(k + 1).dim())
        throw InputError("differential shape mismatch");
    diffs_[static_cast<std::size_t>(k - lo_)] = std::move(d);
}

void ComplexOfModules::validate() const {
    for (int k = lo_; k <= hi_; ++k) {
        const Matrix& d = diff(k);
        if (term(k).dim() == 0)
            continue;
        // module map check
        ModuleMap dm(term(k), term(k + 1), d);
        (void)dm;
        if (k < hi_) {
            const Matrix& d2 = diff(k + 1);
            if (term(k + 1).dim() > 0 && term(k + 2).dim() > 0)
                if (!(d * d2).is_zero())
                    throw InputError("complex differential does not square to zero at degree " +
                                     std::to_string(k));
        }
    }
}

std::size_t ComplexOfModules::total_dim() const {
    std::size_t s = 0;
    for (const auto& t : terms_)
        s += t.dim();
    return s;
}

std::size_t ComplexOfModules::cohomology_dim(int k) const {
    const Matrix& dk = diff(k);
    std::size_t cocycles;
    if (term(k).dim() == 0)
        return 0;
    if (term(k + 1).dim() == 0)
        cocycles = term(k).dim();
    else
        cocycles = term(k).dim() - rank(dk);
    std::size_t boundaries = 0;
    if (term(k - 1).dim() > 0)
        boundaries = rank(diff(k - 1));
    return cocycles - boundaries;
}

Cone cone(const ComplexOfModules& M, const ComplexOfModules& N, const GradedComplexMap& f) {
    if (f.degree != 0)
        throw InputError("cone requires a degree 0 chain map");
    const Field& F = M.algebra()->field();
    // chain map check: f d_N = d_M f degreewise (cocycle of degree 0)
    for (int k = M.lo(); k < M.hi(); ++k) {
        std::size_t src = M.term(k).dim();
        if (src == 0)
            continue;
        Matrix fk = f.blocks[static_cast<std::size_t>(k - M.lo())];
        Matrix fk1 = (k + 1 <= M.hi()) ? f.blocks[static_cast<std::size_t>(k + 1 - M.lo())]
                                       : Matrix(F, 0, N.term(k + 1).dim());
        Matrix lhs = fk * N.diff(k);
        Matrix rhs = M.diff(k) * fk1;
        if (!(lhs == rhs))
            throw InputError("cone input is not a chain map at degree " + std::to_string(k));
    }
    int lo = std::min(M.lo() - 1, N.lo());
    int hi = std::max(M.hi() - 1, N.hi());
    Cone C{ComplexOfModules(M.algebra(), lo, hi), {}, {}};
    for (int k = lo; k <= hi; ++k)
        C.complex.set_term(k, M.term(k + 1).direct_sum(N.term(k)));
    for (int k = lo; k <= hi; ++k) {
        std::size_t m1 = M.term(k + 1).dim(), n0 = N.term(k).dim();
        std::size_t m2 = M.term(k + 2).dim(), n1 = N.term(k + 1).dim();
        Matrix d(F, m1 + n0, m2 + n1);
        const Matrix& dM = M.diff(k + 1);
        for (std::size_t r = 0; r < m1; ++r)
            for (std::size_t c = 0; c < m2; ++c)
                d.set(r, c, F.neg(dM.at(r, c)));
        if (m1 > 0 && n1 > 0 && M.in_window(k + 1)) {
            const Matrix& fk = f.blocks[static_cast<std::size_t>(k + 1 - M.lo())];
            for (std::size_t r = 0; r < m1; ++r)
                for (std::size_t c = 0; c < n1; ++c)
                    d.set(r, m2 + c, fk.at(r, c));
        }
        const Matrix& dN = N.diff(k);
        for (std::size_t r = 0; r < n0; ++r)
            for (std::size_t c = 0; c < n1; ++c)
                d.set(m1 + r, m2 + c, dN.at(r, c));
        C.complex.set_diff(k, std::move(d));
    }
    C.complex.validate();
    for (int k = lo; k <= hi; ++k) {
        std::size_t m1 = M.term(k + 1).dim(), n0 = N.term(k).dim();
        Matrix inc(F, n0, m1 + n0);
        for (std::size_t r = 0; r < n0; ++r)
            inc.set(r, m1 + r, F.one());
        C.incl.push_back(std::move(inc));
        Matrix prj(F, m1 + n0, m1);
        for (std::size_t r = 0; r < m1; ++r)
            prj.set(r, r, F.one());
        C.proj.push_back(std::move(prj));
    }
    return C;
}

ComplexOfModules shift(const ComplexOfModules& X, int n) {
    ComplexOfModules Y(X.algebra(), X.lo() - n, X.hi() - n);
    const Field& F = X.algebra()->field();
    for (int k = Y.lo(); k <= Y.hi(); ++k)
        Y.set_term(k, X.term(k + n));
    Scalar sign = (n % 2 == 0) ? F.one() : F.of_int(-1);
    for (int k = Y.lo(); k < Y.hi(); ++k)
        Y.set_diff(k, X.diff(k + n).scaled(sign));
    Y.validate();
    return Y;
}

HomComplex::HomComplex(const ComplexOfModules& X, const ComplexOfModules& Y) : X_(X), Y_(Y) {
    lo_ = Y.lo() - X.hi();
    hi_ = Y.hi() - X.lo();
    for (int i = lo_; i <= hi_; ++i) {
        Term t;
        t.degree = i;
        for (int k = X.lo(); k <= X.hi(); ++k) {
            const Module& src = X.term(k);
            const Module& tgt = Y.term(k + i);
            if (src.dim() == 0 || tgt.dim() == 0)
                continue;
            for (const auto& h : hom_space(src, tgt)) {
                GradedComplexMap f;
                f.degree = i;
                const Field& F = X.algebra()->field();
                for (int t2 = X.lo(); t2 <= X.hi(); ++t2)
                    f.blocks.push_back(Matrix(F, X.term(t2).dim(), Y.term(t2 + i).dim()));
                f.blocks[static_cast<std::size_t>(k - X.lo())] = h;
                t.basis.push_back(std::move(f));
            }
        }
        terms_.push_back(std::move(t));
    }
}

std::size_t HomComplex::dim(int i) const {
    if (i < lo_ || i > hi_)
        return 0;
    return terms_[static_cast<std::size_t>(i - lo_)].basis.size();
}

const std::vector<GradedComplexMap>& HomComplex::basis(int i) const {
    static const std::vector<GradedComplexMap> empty;
    if (i < lo_ || i > hi_)
        return empty;
    return terms_[static_cast<std::size_t>(i - lo_)].basis;
}

GradedComplexMap HomComplex::differential(const GradedComplexMap& f) const {
    const Field& F = X_.algebra()->field();
    GradedComplexMap out;
    out.degree = f.degree + 1;
    Scalar sgn = (f.degree % 2 == 0) ? F.one() : F.of_int(-1);
    for (int k = X_.lo(); k <= X_.hi(); ++k) {
        std::size_t src = X_.term(k).dim();
        std::size_t tgt = Y_.term(k + f.degree + 1).dim();
        Matrix blk(F, src, tgt);
        if (src > 0 && tgt > 0) {
            const Matrix& fk = f.blocks[static_cast<std::size_t>(k - X_.lo())];
            // d_Y f
            if (Y_.term(k + f.degree).dim() > 0)
                blk = blk + fk * Y_.diff(k + f.degree);
            // -(-1)^i f d_X
            if (k + 1 <= X_.hi() && X_.term(k + 1).dim() > 0) {
                const Matrix& fk1 = f.blocks[static_cast<std::size_t>(k + 1 - X_.lo())];
                blk = blk - (X_.diff(k) * fk1).scaled(sgn);
            }
        }
        out.blocks.push_back(std::move(blk));
    }
    return out;
}

Vec HomComplex::to_coords(const GradedComplexMap& f) const {
    const Field& F = X_.algebra()->field();
    int i = f.degree;
    const auto& B = basis(i);
    // per-degree blocks are disjoint in the basis enumeration; match greedily
    Vec coords(B.size(), Scalar(0));
    // build flattened matrices
    std::size_t width = 0;
    for (int k = X_.lo(); k <= X_.hi(); ++k)
        width += X_.term(k).dim() * Y_.term(k + i).dim();
    if (width == 0) {
        if (!graded_map_is_zero(f))
            throw Error("internal: nonzero graded map in zero hom space");
        return coords;
    }
    auto flatten = [&](const GradedComplexMap& g) {
        Vec v(width, Scalar(0));
        std::size_t off = 0;
        for (int k = X_.lo(); k <= X_.hi(); ++k) {
            std::size_t r = X_.term(k).dim(), c = Y_.term(k + i).dim();
            if (r == 0 || c == 0)
                continue;
            const Matrix& blk = g.blocks[static_cast<std::size_t>(k - X_.lo())];
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < c; ++b)
                    v[off + a * c + b] = blk.at(a, b);
            off += r * c;
        }
        return v;
    };
    std::vector<Vec> rows;
    for (const auto& b : B)
        rows.push_back(flatten(b));
    auto sol = solve_row(Matrix::from_rows(F, rows, width), flatten(f));
    if (!sol)
        throw Error("internal: graded map not in the hom-space basis span");
    return *sol;
}

GradedComplexMap HomComplex::from_coords(int i, const Vec& coords) const {
    const Field& F = X_.algebra()->field();
    const auto& B = basis(i);
    if (coords.size() != B.size())
        throw InputError("hom complex coordinate length mismatch");
    GradedComplexMap out;
    out.degree = i;
    for (int k = X_.lo(); k <= X_.hi(); ++k)
        out.blocks.push_back(Matrix(F, X_.term(k).dim(), Y_.term(k + i).dim()));
    for (std::size_t b = 0; b < B.size(); ++b) {
        if (coords[b] == 0)
            continue;
        for (std::size_t blk = 0; blk < out.blocks.size(); ++blk)
            out.blocks[blk] = out.blocks[blk] + B[b].blocks[blk].scaled(coords[b]);
    }
    return out;
}

Matrix HomComplex::diff_matrix(int i) const {
    const Field& F = X_.algebra()->field();
    const auto& B = basis(i);
    Matrix D(F, B.size(), dim(i + 1));
    for (std::size_t b = 0; b < B.size(); ++b) {
        Vec co = to_coords(differential(B[b]));
        for (std::size_t c = 0; c < co.size(); ++c)
            D.set(b, c, co[c]);
    }
    return D;
}

std::size_t HomComplex::cohomology_dim(int i) const {
    std::size_t di = dim(i);
    if (di == 0)
        return 0;
    Matrix Di = diff_matrix(i);
    std::size_t cocycles = di - rank(Di);
    std::size_t boundaries = 0;
    if (dim(i - 1) > 0)
        boundaries = rank(diff_matrix(i - 1));
    return cocycles - boundaries;
}

GradedComplexMap compose_graded(const ComplexOfModules& X, const ComplexOfModules& Y,
                                const ComplexOfModules& Z, const GradedComplexMap& f,
                                const GradedComplexMap& g) {
    const Field& F = X.algebra()->field();
    GradedComplexMap out;
    out.degree = f.degree + g.degree;
    for (int k = X.lo(); k <= X.hi(); ++k) {
        std::size_t r = X.term(k).dim();
        std::size_t c = Z.term(k + out.degree).dim();
        Matrix blk(F, r, c);
        int mid = k + f.degree;
        if (r > 0 && c > 0 && Y.in_window(mid) && Y.term(mid).dim() > 0) {
            const Matrix& fk = f.blocks[static_cast<std::size_t>(k - X.lo())];
            const Matrix& gk = g.blocks[static_cast<std::size_t>(mid - Y.lo())];
            blk = fk * gk;
        }
        out.blocks.push_back(std::move(blk));
    }
    return out;
}

GradedComplexMap scale_graded(const Field& F, const Scalar& c, const GradedComplexMap& f) {
    GradedComplexMap out;
    out.degree = f.degree;
    for (const auto& b : f.blocks)
        out.blocks.push_back(b.scaled(c));
    return out;
}

GradedComplexMap add_graded(const Field& F, const GradedComplexMap& f, const GradedComplexMap& g) {
    if (f.degree != g.degree || f.blocks.size() != g.blocks.size())
        throw InputError("graded map addition degree mismatch");
    GradedComplexMap out;
    out.degree = f.degree;
    for (std::size_t i = 0; i < f.blocks.size(); ++i)
        out.blocks.push_back(f.blocks[i] + g.blocks[i]);
    return out;
}

bool graded_map_is_zero(const GradedComplexMap& f) {
    for (const auto& b : f.blocks)
        if (!b.is_zero())
            return false;
    return true;
}

} // namespace homalg
