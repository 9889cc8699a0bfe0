#include "homalg/dga.hpp"

#include <algorithm>
#include <sstream>

namespace homalg {

DGAlgebraWindow::DGAlgebraWindow(const Field& F, int lo, int hi, bool zero_outside)
    : F_(F), lo_(lo), hi_(hi), zero_outside_(zero_outside) {
    if (lo > hi)
        throw InputError("DG algebra window is empty");
    std::size_t W = static_cast<std::size_t>(hi - lo + 1);
    labels_.resize(W);
    mult_.resize(W, std::vector<std::vector<std::vector<Vec>>>(W));
    diffs_.resize(W);
}

std::size_t DGAlgebraWindow::idx(int deg) const {
    if (!in_window(deg))
        throw WindowError("degree " + std::to_string(deg) + " outside DG algebra window [" +
                          std::to_string(lo_) + "," + std::to_string(hi_) + "]");
    return static_cast<std::size_t>(deg - lo_);
}

std::size_t DGAlgebraWindow::dim(int deg) const {
    if (!in_window(deg)) {
        if (zero_outside_)
            return 0;
        throw WindowError("component dimension requested outside truncated window: degree " +
                          std::to_string(deg));
    }
    return labels_[static_cast<std::size_t>(deg - lo_)].size();
}

const std::string& DGAlgebraWindow::label(int deg, std::size_t i) const {
    return labels_[idx(deg)][i];
}

void DGAlgebraWindow::set_component(int deg, std::vector<std::string> labels) {
    labels_[idx(deg)] = std::move(labels);
}

void DGAlgebraWindow::set_product(int d1, std::size_t i, int d2, std::size_t j, Vec result) {
    std::size_t k1 = idx(d1), k2 = idx(d2);
    auto& cell = mult_[k1][k2];
    if (cell.empty())
        cell.assign(labels_[k1].size(), std::vector<Vec>(labels_[k2].size()));
    cell[i][j] = std::move(result);
}

void DGAlgebraWindow::set_differential(int deg, Matrix d) {
    std::size_t k = idx(deg);
    diffs_[k] = std::move(d);
}

void DGAlgebraWindow::set_unit(Vec unit_coords_deg0) { unit_ = std::move(unit_coords_deg0); }

GElem DGAlgebraWindow::basis_elem(int deg, std::size_t i) const {
    GElem e;
    e.deg = deg;
    e.coeffs = Vec(dim(deg), Scalar(0));
    e.coeffs[i] = F_.one();
    return e;
}

GElem DGAlgebraWindow::zero(int deg) const {
    GElem e;
    e.deg = deg;
    e.coeffs = Vec(in_window(deg) ? dim(deg) : 0, Scalar(0));
    return e;
}

GElem DGAlgebraWindow::one() const {
    if (unit_.empty())
        throw Error("DG algebra has no unit set");
    return GElem{0, unit_};
}

GElem DGAlgebraWindow::add(const GElem& x, const GElem& y) const {
    if (x.is_zero())
        return y;
    if (y.is_zero())
        return x;
    if (x.deg != y.deg)
        throw InputError("cannot add homogeneous elements of different degrees");
    return GElem{x.deg, vec_add(F_, x.coeffs, y.coeffs)};
}

GElem DGAlgebraWindow::scale(const Scalar& c, const GElem& x) const {
    return GElem{x.deg, vec_scale(F_, c, x.coeffs)};
}

GElem DGAlgebraWindow::mul(const GElem& x, const GElem& y) const {
    int dout = x.deg + y.deg;
    if (x.is_zero() || y.is_zero())
        return zero(in_window(dout) ? dout : (zero_outside_ ? lo_ : dout));
    if (!in_window(dout)) {
        if (zero_outside_)
            return GElem{dout, {}};
        throw WindowError("product lands outside the truncated window at degree " +
                          std::to_string(dout));
    }
    std::size_t k1 = idx(x.deg), k2 = idx(y.deg);
    const auto& cell = mult_[k1][k2];
    std::size_t nout = dim(dout);
    Vec out(nout, Scalar(0));
    if (cell.empty())
        throw WindowError("product table missing for degrees " + std::to_string(x.deg) + "," +
                          std::to_string(y.deg));
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i] == 0)
            continue;
        for (std::size_t j = 0; j < y.coeffs.size(); ++j) {
            if (y.coeffs[j] == 0)
                continue;
            const Vec& m = cell[i][j];
            if (m.empty())
                throw WindowError("product entry missing in truncated window");
            Scalar c = F_.mul(x.coeffs[i], y.coeffs[j]);
            for (std::size_t t = 0; t < nout; ++t)
                if (m[t] != 0)
                    out[t] = F_.add(out[t], F_.mul(c, m[t]));
        }
    }
    return GElem{dout, out};
}

const Matrix& DGAlgebraWindow::diff(int deg) const { return diffs_[idx(deg)]; }

GElem DGAlgebraWindow::d(const GElem& x) const {
    int dout = x.deg + 1;
    if (x.is_zero())
        return GElem{dout, Vec(in_window(dout) ? dim(dout) : 0, Scalar(0))};
    if (!in_window(dout)) {
        if (zero_outside_)
            return GElem{dout, {}};
        throw WindowError("differential leaves the truncated window at degree " +
                          std::to_string(x.deg));
    }
    const Matrix& D = diffs_[idx(x.deg)];
    if (D.rows() != dim(x.deg) || D.cols() != dim(dout))
        throw WindowError("differential table missing at degree " + std::to_string(x.deg));
    return GElem{dout, D.apply_row(x.coeffs)};
}

void DGAlgebraWindow::validate() const {
    // d.d = 0
    for (int deg = lo_; deg <= hi_; ++deg) {
        if (dim(deg) == 0)
            continue;
        for (std::size_t i = 0; i < dim(deg); ++i) {
            GElem x = basis_elem(deg, i);
            GElem dx;
            try {
                dx = d(x);
            } catch (const WindowError&) {
                continue;
            }
            try {
                GElem ddx = d(dx);
                if (!ddx.is_zero() && !ddx.coeffs.empty())
                    throw InputError("DG algebra differential does not square to zero");
            } catch (const WindowError&) {
            }
        }
    }
    // unit
    if (!unit_.empty()) {
        GElem e{0, unit_};
        for (int deg = lo_; deg <= hi_; ++deg)
            for (std::size_t i = 0; i < dim(deg); ++i) {
                GElem x = basis_elem(deg, i);
                try {
                    if (mul(e, x).coeffs != x.coeffs || mul(x, e).coeffs != x.coeffs)
                        throw InputError("DG algebra unit is not a two-sided identity");
                } catch (const WindowError&) {
                }
            }
    }
    // associativity on basis triples; sampled deterministically when the
    // window is large
    {
        std::vector<std::pair<int, std::size_t>> all;
        for (int deg = lo_; deg <= hi_; ++deg)
            for (std::size_t i = 0; i < dim(deg); ++i)
                all.emplace_back(deg, i);
        std::size_t N = all.size();
        auto check_triple = [&](std::size_t ia, std::size_t ib, std::size_t ic) {
            GElem x = basis_elem(all[ia].first, all[ia].second);
            GElem y = basis_elem(all[ib].first, all[ib].second);
            GElem z = basis_elem(all[ic].first, all[ic].second);
            try {
                GElem lhs = mul(mul(x, y), z);
                GElem rhs = mul(x, mul(y, z));
                if (!(lhs.coeffs == rhs.coeffs))
                    throw InputError("DG algebra product is not associative");
            } catch (const WindowError&) {
            }
        };
        if (N <= 40) {
            for (std::size_t ia = 0; ia < N; ++ia)
                for (std::size_t ib = 0; ib < N; ++ib)
                    for (std::size_t ic = 0; ic < N; ++ic)
                        check_triple(ia, ib, ic);
        } else {
            std::uint64_t state = 0x9e3779b97f4a7c15ULL;
            auto next = [&] {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                return state;
            };
            for (int t = 0; t < 4000; ++t)
                check_triple(next() % N, next() % N, next() % N);
        }
    }
    // graded Leibniz on basis pairs
    for (int d1 = lo_; d1 <= hi_; ++d1)
        for (int d2 = lo_; d2 <= hi_; ++d2) {
            if (dim(d1) == 0 || dim(d2) == 0)
                continue;
            for (std::size_t i = 0; i < dim(d1); ++i)
                for (std::size_t j = 0; j < dim(d2); ++j) {
                    GElem x = basis_elem(d1, i), y = basis_elem(d2, j);
                    try {
                        GElem lhs = d(mul(x, y));
                        Scalar sgn = (d1 % 2 == 0) ? F_.one() : F_.of_int(-1);
                        GElem rhs = add(mul(d(x), y), scale(sgn, mul(x, d(y))));
                        if (!(lhs.coeffs == rhs.coeffs))
                            throw InputError("graded Leibniz rule fails on basis pair (" +
                                             label(d1, i) + ", " + label(d2, j) + ")");
                    } catch (const WindowError&) {
                    }
                }
        }
}

std::size_t DGAlgebraWindow::total_dim() const {
    std::size_t s = 0;
    for (int deg = lo_; deg <= hi_; ++deg)
        s += dim(deg);
    return s;
}

EndDGA::EndDGA(std::vector<ComplexOfModules> objects)
    : objects_(std::move(objects)),
      dga_(objects_.empty() ? Field::rationals() : objects_[0].algebra()->field(), 0, 0, true) {
    if (objects_.empty())
        throw InputError("endomorphism DG algebra needs at least one object");
    const Field& F = objects_[0].algebra()->field();
    int lo = 0, hi = 0;
    for (const auto& X : objects_)
        for (const auto& Y : objects_) {
            lo = std::min(lo, Y.lo() - X.hi());
            hi = std::max(hi, Y.hi() - X.lo());
        }
    dga_ = DGAlgebraWindow(F, lo, hi, true);
    blocks_.assign(static_cast<std::size_t>(hi - lo + 1), {});

    for (int deg = lo; deg <= hi; ++deg) {
        std::vector<std::string> labels;
        auto& blist = blocks_[static_cast<std::size_t>(deg - lo)];
        for (std::size_t tgt = 0; tgt < objects_.size(); ++tgt)
            for (std::size_t src = 0; src < objects_.size(); ++src) {
                const auto& X = objects_[src];
                const auto& Y = objects_[tgt];
                for (int k = X.lo(); k <= X.hi(); ++k) {
                    if (X.term(k).dim() == 0 || Y.term(k + deg).dim() == 0)
                        continue;
                    auto H = hom_space(X.term(k), Y.term(k + deg));
                    for (std::size_t b = 0; b < H.size(); ++b) {
                        std::ostringstream os;
                        os << "o" << tgt << "<-o" << src << "@" << k << "#" << b;
                        labels.push_back(os.str());
                        blist.push_back(Block{src, tgt, k, H[b]});
                    }
                }
            }
        dga_.set_component(deg, std::move(labels));
    }

    // coordinates of a single-block graded hom inside a degree component
    auto block_coords = [&](int deg, std::size_t src, std::size_t tgt, int k,
                            const Matrix& hom) -> Vec {
        const auto& blist = blocks_[static_cast<std::size_t>(deg - lo)];
        Vec out(blist.size(), Scalar(0));
        std::vector<std::size_t> members;
        std::vector<Vec> rows;
        std::size_t w = hom.rows() * hom.cols();
        for (std::size_t t = 0; t < blist.size(); ++t) {
            const Block& B = blist[t];
            if (B.src != src || B.tgt != tgt || B.inner_k != k)
                continue;
            members.push_back(t);
            Vec fl(w);
            for (std::size_t r = 0; r < hom.rows(); ++r)
                for (std::size_t c = 0; c < hom.cols(); ++c)
                    fl[r * hom.cols() + c] = B.hom_basis_elem.at(r, c);
            rows.push_back(std::move(fl));
        }
        Vec target(w);
        for (std::size_t r = 0; r < hom.rows(); ++r)
            for (std::size_t c = 0; c < hom.cols(); ++c)
                target[r * hom.cols() + c] = hom.at(r, c);
        if (members.empty()) {
            if (!vec_is_zero(target))
                throw Error("internal: hom block missing in EndDGA");
            return out;
        }
        auto sol = solve_row(Matrix::from_rows(F, rows, w), target);
        if (!sol)
            throw Error("internal: hom block not in its own basis span");
        for (std::size_t t = 0; t < members.size(); ++t)
            out[members[t]] = (*sol)[t];
        return out;
    };

    // products: x*y = x composed after y
    for (int d1 = lo; d1 <= hi; ++d1)
        for (int d2 = lo; d2 <= hi; ++d2) {
            int dout = d1 + d2;
            if (dout < lo || dout > hi) // bounded: product is zero
                continue;
            const auto& b1 = blocks_[static_cast<std::size_t>(d1 - lo)];
            const auto& b2 = blocks_[static_cast<std::size_t>(d2 - lo)];
            for (std::size_t i = 0; i < b1.size(); ++i)
                for (std::size_t j = 0; j < b2.size(); ++j) {
                    const Block& x = b1[i];
                    const Block& y = b2[j];
                    Vec res(blocks_[static_cast<std::size_t>(dout - lo)].size(), Scalar(0));
                    // y: X_{y.src}^{y.k} -> X_{y.tgt}^{y.k+d2}; then x at inner
                    // degree y.k + d2
                    if (x.src == y.tgt && x.inner_k == y.inner_k + d2) {
                        Matrix comp = y.hom_basis_elem * x.hom_basis_elem;
                        res = block_coords(dout, y.src, x.tgt, y.inner_k, comp);
                    }
                    dga_.set_product(d1, i, d2, j, std::move(res));
                }
        }

    // differential: f -> f d_Y - (-1)^{|f|} d_X f (as graded maps; matrices in
    // the row convention)
    for (int deg = lo; deg <= hi; ++deg) {
        const auto& blist = blocks_[static_cast<std::size_t>(deg - lo)];
        std::size_t next_dim = (deg + 1 <= hi) ? blocks_[static_cast<std::size_t>(deg + 1 - lo)].size() : 0;
        Matrix D(F, blist.size(), next_dim);
        if (deg + 1 <= hi) {
            Scalar sgn = (deg % 2 == 0) ? F.one() : F.of_int(-1);
            for (std::size_t i = 0; i < blist.size(); ++i) {
                const Block& f = blist[i];
                const auto& X = objects_[f.src];
                const auto& Y = objects_[f.tgt];
                Vec total(next_dim, Scalar(0));
                // component at inner degree f.k: f then d_Y
                if (Y.term(f.inner_k + deg + 1).dim() > 0) {
                    Matrix comp = f.hom_basis_elem * Y.diff(f.inner_k + deg);
                    Vec co = block_coords(deg + 1, f.src, f.tgt, f.inner_k, comp);
                    total = vec_add(F, total, co);
                }
                // component at inner degree f.k - 1: -(-1)^deg d_X then f
                if (X.term(f.inner_k - 1).dim() > 0) {
                    Matrix comp = (X.diff(f.inner_k - 1) * f.hom_basis_elem).scaled(F.neg(sgn));
                    Vec co = block_coords(deg + 1, f.src, f.tgt, f.inner_k - 1, comp);
                    total = vec_add(F, total, co);
                }
                for (std::size_t c = 0; c < next_dim; ++c)
                    D.set(i, c, total[c]);
            }
        }
        dga_.set_differential(deg, std::move(D));
    }

    // unit = sum of object idempotents
    Vec unit(blocks_[static_cast<std::size_t>(-lo)].size(), Scalar(0));
    for (std::size_t o = 0; o < objects_.size(); ++o) {
        GElem e = object_idempotent(o);
        unit = vec_add(F, unit, e.coeffs);
    }
    dga_.set_unit(unit);
    dga_.validate();
}

GElem EndDGA::object_idempotent(std::size_t i) const {
    const Field& F = dga_.field();
    const auto& X = objects_[i];
    GradedComplexMap id;
    id.degree = 0;
    for (int k = X.lo(); k <= X.hi(); ++k)
        id.blocks.push_back(Matrix::identity(F, X.term(k).dim()));
    return embed(i, i, id);
}

GElem EndDGA::embed(std::size_t src, std::size_t tgt, const GradedComplexMap& f) const {
    const Field& F = dga_.field();
    int deg = f.degree;
    const auto& blist = blocks_[static_cast<std::size_t>(deg - dga_.lo())];
    GElem out = dga_.zero(deg);
    const auto& X = objects_[src];
    for (int k = X.lo(); k <= X.hi(); ++k) {
        const Matrix& blk = f.blocks[static_cast<std::size_t>(k - X.lo())];
        if (blk.rows() == 0 || blk.cols() == 0 || blk.is_zero())
            continue;
        // express in the stored hom basis of this block
        std::vector<std::size_t> members;
        std::vector<Vec> rows;
        std::size_t w = blk.rows() * blk.cols();
        for (std::size_t t = 0; t < blist.size(); ++t) {
            const Block& B = blist[t];
            if (B.src != src || B.tgt != tgt || B.inner_k != k)
                continue;
            members.push_back(t);
            Vec fl(w);
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    fl[r * blk.cols() + c] = B.hom_basis_elem.at(r, c);
            rows.push_back(std::move(fl));
        }
        Vec target(w);
        for (std::size_t r = 0; r < blk.rows(); ++r)
            for (std::size_t c = 0; c < blk.cols(); ++c)
                target[r * blk.cols() + c] = blk.at(r, c);
        if (members.empty())
            throw InputError("graded map block is not a module homomorphism block of the EndDGA");
        auto sol = solve_row(Matrix::from_rows(F, rows, w), target);
        if (!sol)
            throw InputError("graded map block is not a module homomorphism");
        for (std::size_t t = 0; t < members.size(); ++t)
            out.coeffs[members[t]] = F.add(out.coeffs[members[t]], (*sol)[t]);
    }
    return out;
}

GradedComplexMap EndDGA::extract(std::size_t src, std::size_t tgt, const GElem& x) const {
    const Field& F = dga_.field();
    const auto& X = objects_[src];
    const auto& Y = objects_[tgt];
    GradedComplexMap out;
    out.degree = x.deg;
    for (int k = X.lo(); k <= X.hi(); ++k)
        out.blocks.push_back(Matrix(F, X.term(k).dim(), Y.term(k + x.deg).dim()));
    const auto& blist = blocks_[static_cast<std::size_t>(x.deg - dga_.lo())];
    for (std::size_t t = 0; t < blist.size(); ++t) {
        if (x.coeffs[t] == 0)
            continue;
        const Block& B = blist[t];
        if (B.src != src || B.tgt != tgt)
            continue;
        std::size_t bi = static_cast<std::size_t>(B.inner_k - X.lo());
        out.blocks[bi] = out.blocks[bi] + B.hom_basis_elem.scaled(x.coeffs[t]);
    }
    return out;
}

std::size_t HomotopyRetract::h_dim(int deg) const {
    auto it = incl.find(deg);
    return it == incl.end() ? 0 : it->second.rows();
}

HomotopyRetract deformation_retract(const DGAlgebraWindow& A, const RetractOverride& over) {
    const Field& F = A.field();
    HomotopyRetract R;
    int lo = A.lo(), hi = A.hi();

    // group overrides by degree
    std::map<int, std::vector<Vec>> pref_reps, pref_pre;
    for (const auto& g : over.preferred_reps)
        pref_reps[g.deg].push_back(g.coeffs);
    for (const auto& g : over.preferred_preimages)
        pref_pre[g.deg].push_back(g.coeffs);

    // L^n: a complement of the cocycles, available wherever d^n is known
    std::map<int, std::vector<Vec>> L;
    for (int n = lo; n <= hi; ++n) {
        bool can_L = (n < hi) || A.zero_outside();
        if (!can_L)
            continue;
        std::size_t dn = A.dim(n);
        if (dn == 0) {
            L[n] = {};
            continue;
        }
        Matrix D = (n < hi) ? A.diff(n) : Matrix(F, dn, 0);
        std::vector<Vec> Z = left_kernel_basis(D);
        RowSpan Zspan(F, dn);
        Zspan.add_all(Z);

        RowSpan cover(F, dn);
        for (const auto& z : Z)
            cover.add(z);
        std::vector<Vec> Lb;
        for (const auto& x : pref_pre[n]) {
            if (Zspan.contains(x))
                throw InputError("retract override: preferred preimage is a cocycle");
            if (cover.add(x))
                Lb.push_back(x);
            else
                throw InputError("retract override: preferred preimages are dependent");
        }
        for (std::size_t i = 0; i < dn && cover.dim() < dn; ++i) {
            Vec e(dn, Scalar(0));
            e[i] = F.one();
            if (cover.add(e))
                Lb.push_back(e);
        }
        L[n] = std::move(Lb);
    }

    for (int n = lo; n <= hi; ++n) {
        // full retract data needs the boundary space from below and the
        // cocycles at n
        bool usable = ((n > lo) || A.zero_outside()) && ((n < hi) || A.zero_outside());
        if (!usable)
            continue;
        std::size_t dn = A.dim(n);
        if (dn == 0) {
            R.incl[n] = Matrix(F, 0, 0);
            R.proj[n] = Matrix(F, 0, 0);
            R.h[n] = Matrix(F, 0, (n - 1 >= lo) ? A.dim(n - 1) : 0);
            continue;
        }
        bool prev_ok = L.count(n - 1) > 0;
        // B^n = d(L^{n-1}); paired preimages are the L basis itself
        std::vector<Vec> Bn, pre;
        if (prev_ok)
            for (const auto& l : L[n - 1]) {
                GElem dl = A.d(GElem{n - 1, l});
                if (!dl.is_zero()) {
                    Bn.push_back(dl.coeffs);
                    pre.push_back(l);
                }
            }
        RowSpan Bspan(F, dn);
        for (const auto& b : Bn)
            if (!Bspan.add(b))
                throw Error("internal: boundary basis is dependent");

        // Hc: cocycle complement of B, preferring supplied representatives
        Matrix D = (n < hi) ? A.diff(n) : Matrix(F, dn, 0);
        std::vector<Vec> Z = left_kernel_basis(D);
        RowSpan Hspan(F, dn);
        for (const auto& b : Bn)
            Hspan.add(b);
        std::vector<Vec> Hc;
        for (const auto& x : pref_reps[n]) {
            GElem dx = A.d(GElem{n, x});
            if (!dx.is_zero() && !dx.coeffs.empty())
                throw InputError("retract override: preferred representative is not a cocycle");
            if (Hspan.add(x))
                Hc.push_back(x);
            // dependent representatives are fine to skip: class already taken
        }
        for (const auto& z : Z)
            if (Hspan.add(z))
                Hc.push_back(z);

        // full decomposition basis: rows B + Hc + L
        std::vector<Vec> all;
        for (const auto& b : Bn)
            all.push_back(b);
        for (const auto& hrow : Hc)
            all.push_back(hrow);
        for (const auto& l : L[n])
            all.push_back(l);
        if (all.size() != dn)
            throw Error("internal: retract decomposition dimension mismatch");
        Matrix C = Matrix::from_rows(F, all, dn);
        if (rank(C) != dn)
            throw Error("internal: retract decomposition is not a basis");

        std::size_t nb = Bn.size(), nh = Hc.size(), nl = L[n].size();
        (void)nl;
        std::size_t dprev = prev_ok ? A.dim(n - 1) : 0;
        Matrix hmat(F, dn, dprev);
        Matrix pmat(F, dn, nh);
        for (std::size_t r = 0; r < dn; ++r) {
            Vec e(dn, Scalar(0));
            e[r] = F.one();
            auto co = solve_row(C, e);
            if (!co)
                throw Error("internal: retract coordinate solve failed");
            // h: boundary part maps to paired preimages
            Vec hv(dprev, Scalar(0));
            for (std::size_t t = 0; t < nb; ++t)
                if ((*co)[t] != 0)
                    hv = vec_add(F, hv, vec_scale(F, (*co)[t], pre[t]));
            for (std::size_t c = 0; c < dprev; ++c)
                hmat.set(r, c, hv[c]);
            for (std::size_t t = 0; t < nh; ++t)
                pmat.set(r, t, (*co)[nb + t]);
        }
        R.incl[n] = Matrix::from_rows(F, Hc, dn);
        R.proj[n] = std::move(pmat);
        R.h[n] = std::move(hmat);
    }
    validate_retract(A, R);
    return R;
}

void validate_retract(const DGAlgebraWindow& A, const HomotopyRetract& r) {
    const Field& F = A.field();
    for (const auto& [n, incl] : r.incl) {
        std::size_t dn = A.dim(n);
        if (dn == 0)
            continue;
        const Matrix& p = r.proj.at(n);
        const Matrix& h = r.h.at(n);
        // p i = id
        if (!(incl * p == Matrix::identity(F, incl.rows())))
            throw Error("retract identity p i = id fails at degree " + std::to_string(n));
        // h i = 0
        if (!(incl * h).is_zero())
            throw Error("retract identity h i = 0 fails at degree " + std::to_string(n));
        // p h = 0 (h lands in degree n-1; checked from degree n+1 side below)
        // d h + h d = id - i p, checkable when neighbours are available
        bool next_ok = r.h.count(n + 1) > 0;
        if (n + 1 <= A.hi() && !next_ok)
            continue;
        Matrix dh(F, dn, dn);
        if (A.dim(n - 1) > 0 && h.cols() > 0)
            dh = h * A.diff(n - 1);
        Matrix hd(F, dn, dn);
        if (n + 1 <= A.hi() && A.dim(n + 1) > 0)
            hd = A.diff(n) * r.h.at(n + 1);
        // id - i p: in the row convention, apply p then i
        Matrix ip = p * incl;
        Matrix want = Matrix::identity(F, dn) - ip;
        if (!(dh + hd == want))
            throw Error("retract homotopy identity fails at degree " + std::to_string(n));
        // p h = 0 at degree n means h then p_{n-1}
        if (h.cols() > 0 && r.proj.count(n - 1) && r.proj.at(n - 1).cols() > 0)
            if (!(h * r.proj.at(n - 1)).is_zero())
                throw Error("retract identity p h = 0 fails at degree " + std::to_string(n));
        // h h = 0
        if (h.cols() > 0 && r.h.count(n - 1) && r.h.at(n - 1).cols() > 0)
            if (!(h * r.h.at(n - 1)).is_zero())
                throw Error("retract identity h h = 0 fails at degree " + std::to_string(n));
    }
}

GradedAlgebraWindow cohomology_algebra(const DGAlgebraWindow& A, const HomotopyRetract& r) {
    const Field& F = A.field();
    int lo = A.lo(), hi = A.hi();
    // restrict to the contiguous usable range
    while (lo <= hi && r.incl.count(lo) == 0)
        ++lo;
    while (hi >= lo && r.incl.count(hi) == 0)
        --hi;
    if (lo > hi)
        throw WindowError("no usable degrees for the cohomology algebra");
    GradedAlgebraWindow H(F, lo, hi);
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::string> labels;
        std::size_t hn = r.incl.at(n).rows();
        for (std::size_t i = 0; i < hn; ++i)
            labels.push_back("[" + std::to_string(n) + ":" + std::to_string(i) + "]");
        H.set_component(n, std::move(labels));
    }
    for (int d1 = lo; d1 <= hi; ++d1)
        for (int d2 = lo; d2 <= hi; ++d2) {
            int dout = d1 + d2;
            if (dout < lo || dout > hi)
                continue;
            std::size_t n1 = r.incl.at(d1).rows(), n2 = r.incl.at(d2).rows();
            for (std::size_t i = 0; i < n1; ++i)
                for (std::size_t j = 0; j < n2; ++j) {
                    GElem xi{d1, r.incl.at(d1).row(i)};
                    GElem xj{d2, r.incl.at(d2).row(j)};
                    GElem prod = A.mul(xi, xj);
                    Vec cls = r.proj.at(dout).apply_row(prod.coeffs);
                    H.set_product(d1, i, d2, j, cls);
                }
        }
    // unit class
    GElem one = A.one();
    Vec unit_cls = r.proj.at(0).apply_row(one.coeffs);
    H.set_unit(unit_cls);
    H.finalize(std::nullopt, std::nullopt);
    return H;
}

GElem retract_incl(const DGAlgebraWindow& A, const HomotopyRetract& r, const GElem& hx) {
    auto it = r.incl.find(hx.deg);
    if (it == r.incl.end())
        throw WindowError("retract not available at degree " + std::to_string(hx.deg));
    return GElem{hx.deg, it->second.apply_row(hx.coeffs)};
}

GElem retract_proj(const DGAlgebraWindow& A, const HomotopyRetract& r, const GElem& x) {
    auto it = r.proj.find(x.deg);
    if (it == r.proj.end())
        throw WindowError("retract not available at degree " + std::to_string(x.deg));
    return GElem{x.deg, it->second.apply_row(x.coeffs)};
}

GElem retract_h(const DGAlgebraWindow& A, const HomotopyRetract& r, const GElem& x) {
    auto it = r.h.find(x.deg);
    if (it == r.h.end())
        throw WindowError("retract homotopy not available at degree " + std::to_string(x.deg));
    return GElem{x.deg - 1, it->second.apply_row(x.coeffs)};
}

} // namespace homalg
