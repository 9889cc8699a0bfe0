#include "homalg/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace homalg {

AlgebraTable::AlgebraTable(const Field& F,
                           std::vector<std::string> basis_labels,
                           std::vector<std::vector<Vec>> structure_constants,
                           Vec unit)
    : F_(F), labels_(std::move(basis_labels)), mult_(std::move(structure_constants)), unit_(std::move(unit)) {
    std::size_t n = labels_.size();
    if (n == 0)
        throw InputError("algebra must have positive dimension");
    if (mult_.size() != n || unit_.size() != n)
        throw InputError("structure constant table shape mismatch");
    for (auto& row : mult_) {
        if (row.size() != n)
            throw InputError("structure constant table shape mismatch");
        for (auto& v : row) {
            if (v.size() != n)
                throw InputError("structure constant table shape mismatch");
            for (auto& c : v)
                c = F_.reduce(c);
        }
    }
    for (auto& c : unit_)
        c = F_.reduce(c);

    // unit is a two-sided identity on all basis elements
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei(n, Scalar(0));
        ei[i] = F_.one();
        if (mul(unit_, ei) != ei || mul(ei, unit_) != ei)
            throw InputError("unit is not a two-sided identity");
    }
    // associativity on all basis triples
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& ij = mult_[i][j];
            for (std::size_t k = 0; k < n; ++k) {
                Vec ek(n, Scalar(0));
                ek[k] = F_.one();
                Vec left = mul(ij, ek);
                Vec jk = mult_[j][k];
                Vec ei(n, Scalar(0));
                ei[i] = F_.one();
                Vec right = mul(ei, jk);
                if (left != right)
                    throw InputError("structure constants are not associative at triple (" +
                                     labels_[i] + "," + labels_[j] + "," + labels_[k] + ")");
            }
        }
}

Vec AlgebraTable::mul(const Vec& x, const Vec& y) const {
    std::size_t n = dim();
    if (x.size() != n || y.size() != n)
        throw InputError("algebra element length mismatch");
    Vec r(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0)
                continue;
            Scalar c = F_.mul(x[i], y[j]);
            const Vec& m = mult_[i][j];
            for (std::size_t k = 0; k < n; ++k)
                if (m[k] != 0)
                    r[k] = F_.add(r[k], F_.mul(c, m[k]));
        }
    }
    return r;
}

Matrix AlgebraTable::left_mult_matrix(const Vec& x) const {
    std::size_t n = dim();
    Matrix L(F_, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej(n, Scalar(0));
        ej[j] = F_.one();
        Vec xj = mul(x, ej);
        for (std::size_t k = 0; k < n; ++k)
            L.set(j, k, xj[k]);
    }
    return L;
}

Matrix AlgebraTable::right_mult_matrix(const Vec& x) const {
    std::size_t n = dim();
    Matrix R(F_, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej(n, Scalar(0));
        ej[j] = F_.one();
        Vec jx = mul(ej, x);
        for (std::size_t k = 0; k < n; ++k)
            R.set(j, k, jx[k]);
    }
    return R;
}

bool AlgebraTable::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (mult_[i][j] != mult_[j][i])
                return false;
    return true;
}

bool AlgebraTable::is_connected() const {
    auto idems = primitive_idempotents(*this);
    std::size_t m = idems.size();
    // link idempotents through e_i A e_j
    std::vector<std::size_t> comp(m);
    for (std::size_t i = 0; i < m; ++i)
        comp[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (comp[x] != x)
            x = comp[x] = comp[comp[x]];
        return x;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j)
                continue;
            bool linked = false;
            for (std::size_t b = 0; b < dim() && !linked; ++b) {
                Vec eb(dim(), Scalar(0));
                eb[b] = F_.one();
                if (!vec_is_zero(mul(idems[i], mul(eb, idems[j]))))
                    linked = true;
            }
            if (linked)
                comp[find(i)] = find(j);
        }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < m; ++i)
        roots.insert(find(i));
    return roots.size() <= 1;
}

AlgebraTable AlgebraTable::opposite() const {
    std::size_t n = dim();
    std::vector<std::vector<Vec>> sc(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sc[i][j] = mult_[j][i];
    std::vector<std::string> labs;
    for (auto& l : labels_)
        labs.push_back(l + "^op");
    return AlgebraTable(F_, std::move(labs), std::move(sc), unit_);
}

Automorphism::Automorphism(AlgebraPtr algebra, Matrix images) : A_(std::move(algebra)), M_(std::move(images)) {
    std::size_t n = A_->dim();
    const Field& F = A_->field();
    if (M_.rows() != n || M_.cols() != n)
        throw InputError("automorphism matrix shape mismatch");
    if (rank(M_) != n)
        throw InputError("automorphism matrix is not invertible");
    if (apply(A_->unit()) != A_->unit())
        throw InputError("automorphism is not unital");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = apply(A_->mul_basis(i, j));
            Vec ei(n, Scalar(0)), ej(n, Scalar(0));
            ei[i] = F.one();
            ej[j] = F.one();
            Vec rhs = A_->mul(apply(ei), apply(ej));
            if (lhs != rhs)
                throw InputError("automorphism is not multiplicative");
        }
}

Automorphism Automorphism::identity(AlgebraPtr algebra) {
    Matrix I = Matrix::identity(algebra->field(), algebra->dim());
    return Automorphism(std::move(algebra), std::move(I), 0);
}

Automorphism Automorphism::inverse() const {
    std::size_t n = A_->dim();
    const Field& F = A_->field();
    Matrix inv(F, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei(n, Scalar(0));
        ei[i] = F.one();
        auto sol = solve_row(M_, ei);
        if (!sol)
            throw Error("automorphism inverse failed");
        for (std::size_t j = 0; j < n; ++j)
            inv.set(i, j, (*sol)[j]);
    }
    return Automorphism(A_, std::move(inv), 0);
}

Automorphism Automorphism::compose(const Automorphism& then) const {
    return Automorphism(A_, M_ * then.M_, 0);
}

Automorphism Automorphism::power(long k) const {
    Automorphism r = identity(A_);
    Automorphism base = k >= 0 ? *this : inverse();
    long e = k >= 0 ? k : -k;
    for (long i = 0; i < e; ++i)
        r = r.compose(base);
    return r;
}

bool Automorphism::is_identity() const {
    return M_ == Matrix::identity(A_->field(), A_->dim());
}

bool QuiverPresentation::is_connected() const {
    std::size_t n = vertices.size();
    if (n == 0)
        return true;
    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < n; ++i)
        comp[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (comp[x] != x)
            x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& a : arrows)
        comp[find(a.source)] = find(a.target);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i)
        roots.insert(find(i));
    return roots.size() <= 1;
}

namespace {

struct Path {
    std::size_t source, target;
    std::vector<std::size_t> arrows;
    bool operator<(const Path& o) const {
        if (arrows.size() != o.arrows.size())
            return arrows.size() < o.arrows.size();
        if (source != o.source)
            return source < o.source;
        if (arrows != o.arrows)
            return arrows < o.arrows;
        return target < o.target;
    }
    bool operator==(const Path& o) const {
        return source == o.source && target == o.target && arrows == o.arrows;
    }
};

} // namespace

AlgebraTable build_path_algebra(const Field& F, const QuiverPresentation& Q) {
    std::size_t nv = Q.vertices.size();
    if (nv == 0)
        throw InputError("quiver has no vertices");
    for (const auto& a : Q.arrows)
        if (a.source >= nv || a.target >= nv)
            throw InputError("arrow endpoint out of range: " + a.label);
    std::size_t B = Q.path_length_bound;
    if (B == 0)
        throw InputError("path_length_bound must be positive");

    // relations: check terms are composable paths
    for (const auto& rel : Q.relations)
        for (const auto& t : rel) {
            std::size_t at = t.source;
            for (auto aid : t.arrows) {
                if (aid >= Q.arrows.size())
                    throw InputError("relation references unknown arrow");
                if (Q.arrows[aid].source != at)
                    throw InputError("relation contains a non-composable path");
                at = Q.arrows[aid].target;
            }
            if (at != t.target)
                throw InputError("relation path target mismatch");
        }

    // enumerate paths of length <= L, ordered by length then lexicographically
    // on arrow label sequences
    std::size_t L = 2 * B;
    std::vector<std::size_t> arrow_order(Q.arrows.size());
    for (std::size_t i = 0; i < arrow_order.size(); ++i)
        arrow_order[i] = i;
    std::sort(arrow_order.begin(), arrow_order.end(), [&](std::size_t x, std::size_t y) {
        return Q.arrows[x].label < Q.arrows[y].label;
    });

    std::vector<Path> paths;
    std::map<Path, std::size_t> path_index;
    for (std::size_t v = 0; v < nv; ++v)
        paths.push_back(Path{v, v, {}});
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= L; ++len) {
        std::size_t level_end = paths.size();
        std::vector<Path> next;
        for (std::size_t p = level_begin; p < level_end; ++p)
            for (auto aid : arrow_order)
                if (Q.arrows[aid].source == paths[p].target) {
                    Path q = paths[p];
                    q.arrows.push_back(aid);
                    q.target = Q.arrows[aid].target;
                    next.push_back(std::move(q));
                }
        std::sort(next.begin(), next.end(), [&](const Path& x, const Path& y) {
            std::vector<std::string> lx, ly;
            for (auto a : x.arrows)
                lx.push_back(Q.arrows[a].label);
            for (auto a : y.arrows)
                ly.push_back(Q.arrows[a].label);
            if (lx != ly)
                return lx < ly;
            return x.source < y.source;
        });
        level_begin = level_end;
        for (auto& q : next)
            paths.push_back(std::move(q));
        if (next.empty())
            break;
    }
    for (std::size_t i = 0; i < paths.size(); ++i)
        path_index[paths[i]] = i;
    std::size_t NP = paths.size();

    auto path_len = [&](std::size_t i) { return paths[i].arrows.size(); };

    // span { p * r * q } of total length <= L
    RowSpan ideal(F, NP);
    for (const auto& rel : Q.relations) {
        // group prefix/suffix extensions by composability
        for (std::size_t pre = 0; pre < NP; ++pre) {
            for (std::size_t suf = 0; suf < NP; ++suf) {
                Vec combo(NP, Scalar(0));
                bool any = false;
                for (const auto& t : rel) {
                    if (paths[pre].target != t.source || t.target != paths[suf].source)
                        continue;
                    std::size_t total = path_len(pre) + t.arrows.size() + path_len(suf);
                    if (total > L)
                        continue;
                    Path w;
                    w.source = paths[pre].source;
                    w.target = paths[suf].target;
                    w.arrows = paths[pre].arrows;
                    w.arrows.insert(w.arrows.end(), t.arrows.begin(), t.arrows.end());
                    w.arrows.insert(w.arrows.end(), paths[suf].arrows.begin(), paths[suf].arrows.end());
                    auto it = path_index.find(w);
                    if (it == path_index.end())
                        continue;
                    combo[it->second] = F.add(combo[it->second], t.coeff);
                    any = true;
                }
                if (any)
                    ideal.add(combo);
            }
        }
    }

    // precondition: every path of length exactly B lies in the relation ideal
    for (std::size_t i = 0; i < NP; ++i) {
        if (path_len(i) != B)
            continue;
        Vec v(NP, Scalar(0));
        v[i] = F.one();
        if (!ideal.contains(v))
            throw InputError("truncation insufficient: path of length " + std::to_string(B) +
                             " does not vanish modulo the relations");
    }
    // consequently all longer paths lie in the ideal as well
    for (std::size_t i = 0; i < NP; ++i)
        if (path_len(i) > B) {
            Vec v(NP, Scalar(0));
            v[i] = F.one();
            ideal.add(v);
        }

    // quotient basis: non-pivot paths, necessarily of length < B since all
    // longer paths lie in the ideal span
    std::vector<std::size_t> basis_paths;
    for (auto c : ideal.complement_cols()) {
        if (path_len(c) >= B)
            throw Error("internal: long path survived the relation ideal");
        basis_paths.push_back(c);
    }
    std::size_t n = basis_paths.size();

    // residue of an arbitrary path-space vector in quotient coordinates
    auto to_quotient = [&](const Vec& v) {
        Vec red = ideal.reduce(v);
        Vec out(n, Scalar(0));
        // express red in the chosen representative paths; reduction of the
        // representatives themselves is triangular by construction
        RowSpan work(F, NP);
        for (const auto& r : ideal.basis())
            work.add(r);
        // subtract representative components greedily
        Vec rem = red;
        for (std::size_t k = 0; k < n; ++k) {
            Scalar c = rem[basis_paths[k]];
            if (c == 0)
                continue;
            out[k] = c;
            rem[basis_paths[k]] = Scalar(0);
        }
        if (!vec_is_zero(ideal.reduce(rem)))
            throw Error("internal: path reduction left residue outside the chosen basis");
        return out;
    };

    std::vector<std::vector<Vec>> sc(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Path& p = paths[basis_paths[i]];
            const Path& q = paths[basis_paths[j]];
            if (p.target != q.source)
                continue;
            Path w;
            w.source = p.source;
            w.target = q.target;
            w.arrows = p.arrows;
            w.arrows.insert(w.arrows.end(), q.arrows.begin(), q.arrows.end());
            auto it = path_index.find(w);
            if (it == path_index.end())
                throw Error("internal: product path exceeds enumeration bound");
            Vec v(NP, Scalar(0));
            v[it->second] = F.one();
            sc[i][j] = to_quotient(v);
        }

    Vec unit(n, Scalar(0));
    for (std::size_t k = 0; k < n; ++k)
        if (path_len(basis_paths[k]) == 0)
            unit[k] = F.one();

    std::vector<std::string> labels;
    for (auto bp : basis_paths) {
        const Path& p = paths[bp];
        if (p.arrows.empty())
            labels.push_back("e_" + Q.vertices[p.source]);
        else {
            std::string s;
            for (auto a : p.arrows)
                s += Q.arrows[a].label;
            labels.push_back(s);
        }
    }
    return AlgebraTable(F, std::move(labels), std::move(sc), std::move(unit));
}

namespace {

// minimal polynomial of a square matrix via Krylov-style dependence search
std::vector<Scalar> minimal_polynomial(const Matrix& M) {
    const Field& F = M.field();
    std::size_t n = M.rows();
    RowSpan span(F, n * n);
    std::vector<Matrix> powers;
    Matrix P = Matrix::identity(F, n);
    auto flatten = [&](const Matrix& X) {
        Vec v(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                v[i * n + j] = X.at(i, j);
        return v;
    };
    for (std::size_t k = 0; k <= n * n + 1; ++k) {
        Vec flat = flatten(P);
        std::vector<Vec> rows;
        for (const auto& q : powers)
            rows.push_back(flatten(q));
        std::optional<Vec> coords;
        if (!rows.empty())
            coords = solve_row(Matrix::from_rows(F, rows, n * n), flat);
        if (coords) {
            // P = sum coords[i] powers[i]; min poly = t^k - sum
            std::vector<Scalar> mp(k + 1, Scalar(0));
            mp[k] = F.one();
            for (std::size_t i = 0; i < k; ++i)
                mp[i] = F.neg((*coords)[i]);
            return mp;
        }
        powers.push_back(P);
        P = P * M;
    }
    throw Error("internal: minimal polynomial not found");
}

std::vector<Scalar> poly_eval_roots(const Field& F, const std::vector<Scalar>& poly) {
    // all roots in the ground field, without multiplicities
    std::vector<Scalar> roots;
    auto eval = [&](const Scalar& x) {
        Scalar acc(0);
        for (std::size_t i = poly.size(); i-- > 0;)
            acc = F.add(F.mul(acc, x), poly[i]);
        return acc;
    };
    if (!F.is_rational()) {
        for (long t = 0; t < F.characteristic(); ++t) {
            Scalar x = F.of_int(t);
            if (eval(x) == 0)
                roots.push_back(x);
        }
        return roots;
    }
    // rational root search: clear denominators, p/q with p | a0', q | aN'
    mpz_class lcm(1);
    for (const auto& c : poly)
        lcm = lcm * c.get_den() / gcd(lcm, mpz_class(c.get_den()));
    std::vector<mpz_class> ip;
    for (const auto& c : poly)
        ip.push_back(mpz_class(c * lcm));
    std::size_t lo = 0, hi = ip.size();
    while (lo < ip.size() && ip[lo] == 0)
        ++lo; // factor t^lo
    if (lo > 0)
        roots.push_back(Scalar(0));
    while (hi > lo + 1 && ip[hi - 1] == 0)
        --hi;
    if (hi <= lo + 1)
        return roots;
    mpz_class a0 = abs(ip[lo]), an = abs(ip[hi - 1]);
    std::vector<mpz_class> ps, qs;
    auto divisors = [](const mpz_class& m) {
        std::vector<mpz_class> ds;
        for (mpz_class d(1); d * d <= m; ++d)
            if (m % d == 0) {
                ds.push_back(d);
                if (d * d != m)
                    ds.push_back(m / d);
            }
        return ds;
    };
    for (const auto& p : divisors(a0))
        for (const auto& q : divisors(an)) {
            for (int sgn : {1, -1}) {
                Scalar cand(p * sgn, q);
                cand.canonicalize();
                if (eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    return roots;
}

// divide out (t - r)^max from poly, return remaining factor
std::vector<Scalar> poly_remove_root(const Field& F, std::vector<Scalar> poly, const Scalar& r) {
    for (;;) {
        // synthetic division by (t - r)
        std::vector<Scalar> q(poly.size() - 1, Scalar(0));
        Scalar carry(0);
        for (std::size_t i = poly.size(); i-- > 1;) {
            carry = F.add(poly[i], F.mul(carry, r));
            q[i - 1] = carry;
        }
        Scalar rem = F.add(poly[0], F.mul(carry, r));
        if (rem != 0)
            return poly;
        poly = q;
        if (poly.size() == 1)
            return poly;
    }
}

} // namespace

std::vector<Vec> characters(const AlgebraTable& A) {
    const Field& F = A.field();
    std::size_t n = A.dim();

    // two-sided ideal generated by commutators
    RowSpan comm(F, n);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec c = vec_sub(F, A.mul_basis(i, j), A.mul_basis(j, i));
            if (comm.add(c))
                gens.push_back(c);
        }
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t b = 0; b < n; ++b) {
            Vec eb(n, Scalar(0));
            eb[b] = F.one();
            for (const Vec& x : {A.mul(eb, gens[g]), A.mul(gens[g], eb)})
                if (comm.add(x))
                    gens.push_back(x);
        }

    // commutative quotient
    std::vector<std::size_t> qbasis = comm.complement_cols();
    std::size_t m = qbasis.size();
    if (m == 0)
        return {};
    auto project = [&](const Vec& v) {
        Vec red = comm.reduce(v);
        Vec out(m, Scalar(0));
        for (std::size_t k = 0; k < m; ++k) {
            out[k] = red[qbasis[k]];
            red[qbasis[k]] = Scalar(0);
        }
        if (!vec_is_zero(comm.reduce(red)))
            throw Error("internal: commutator quotient basis is not closed");
        return out;
    };

    // multiplication operators on the commutative quotient
    std::vector<Matrix> ops;
    for (std::size_t k = 0; k < m; ++k) {
        Matrix Mk(F, m, m);
        Vec bk(n, Scalar(0));
        bk[qbasis[k]] = F.one();
        for (std::size_t j = 0; j < m; ++j) {
            Vec bj(n, Scalar(0));
            bj[qbasis[j]] = F.one();
            Vec prod = project(A.mul(bk, bj));
            for (std::size_t t = 0; t < m; ++t)
                Mk.set(j, t, prod[t]);
        }
        ops.push_back(std::move(Mk));
    }

    // split into generalized joint eigenspaces; each terminal block gives one
    // character, read off as the eigenvalue tuple
    struct Block {
        std::vector<Vec> basis;             // vectors in quotient coordinates
        std::vector<Scalar> eigenvalues;    // one per processed operator
    };
    std::vector<Block> blocks;
    {
        Block all;
        for (std::size_t i = 0; i < m; ++i) {
            Vec e(m, Scalar(0));
            e[i] = F.one();
            all.basis.push_back(e);
        }
        blocks.push_back(all);
    }
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<Block> next;
        for (auto& blk : blocks) {
            std::size_t bd = blk.basis.size();
            if (bd == 1) {
                // eigenvalue by direct action
                Vec img = ops[k].apply_row(blk.basis[0]);
                RowSpan s(F, m);
                s.add(blk.basis[0]);
                auto co = s.coordinates(img);
                if (!co)
                    throw Error("ground field is too small to split the algebra (non-split input)");
                Block b = blk;
                b.eigenvalues.push_back((*co)[0]);
                next.push_back(std::move(b));
                continue;
            }
            // restrict operator to the block
            Matrix R(F, bd, bd);
            RowSpan bs(F, m);
            for (const auto& v : blk.basis)
                bs.add(v);
            for (std::size_t i = 0; i < bd; ++i) {
                Vec img = ops[k].apply_row(blk.basis[i]);
                auto co = bs.coordinates(img);
                if (!co)
                    throw Error("internal: block is not invariant");
                // coordinates are w.r.t. echelon basis; rebuild w.r.t. blk basis
                // by solving directly
                Matrix basis_mat = Matrix::from_rows(F, blk.basis, m);
                auto sol = solve_row(basis_mat, img);
                if (!sol)
                    throw Error("internal: block restriction failed");
                for (std::size_t j = 0; j < bd; ++j)
                    R.set(i, j, (*sol)[j]);
            }
            std::vector<Scalar> mp = minimal_polynomial(R);
            std::vector<Scalar> roots = poly_eval_roots(F, mp);
            // check the polynomial splits: removing all roots must leave a unit
            std::vector<Scalar> rest = mp;
            for (const auto& r : roots)
                rest = poly_remove_root(F, rest, r);
            if (rest.size() > 1)
                throw Error("ground field is too small to split the algebra (non-split input)");
            for (const auto& r : roots) {
                // generalized eigenspace: kernel of (R - r)^bd acting on rows
                Matrix N = R;
                for (std::size_t i = 0; i < bd; ++i)
                    N.set(i, i, F.sub(N.at(i, i), r));
                Matrix Npow = Matrix::identity(F, bd);
                for (std::size_t e = 0; e < bd; ++e)
                    Npow = Npow * N;
                auto ker = left_kernel_basis(Npow);
                Block b;
                b.eigenvalues = blk.eigenvalues;
                b.eigenvalues.push_back(r);
                for (const auto& kv : ker) {
                    Vec v(m, Scalar(0));
                    for (std::size_t i = 0; i < bd; ++i)
                        if (kv[i] != 0)
                            v = vec_add(F, v, vec_scale(F, kv[i], blk.basis[i]));
                    b.basis.push_back(v);
                }
                if (!b.basis.empty())
                    next.push_back(std::move(b));
            }
        }
        blocks = std::move(next);
    }

    // each block yields the character b_i -> eigenvalue_i, pulled back to A
    std::vector<Vec> chars;
    for (const auto& blk : blocks) {
        Vec lam(n, Scalar(0));
        for (std::size_t i = 0; i < n; ++i) {
            Vec ei(n, Scalar(0));
            ei[i] = F.one();
            Vec q = project(ei);
            Scalar val(0);
            for (std::size_t k = 0; k < m; ++k)
                val = F.add(val, F.mul(q[k], blk.eigenvalues[k]));
            lam[i] = val;
        }
        // characters must be unital; the zero block of the commutator quotient
        // does not give one
        Scalar unit_val(0);
        for (std::size_t i = 0; i < n; ++i)
            unit_val = F.add(unit_val, F.mul(A.unit()[i], lam[i]));
        if (unit_val == F.one())
            chars.push_back(lam);
    }
    std::sort(chars.begin(), chars.end());
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    return chars;
}

std::vector<Vec> jacobson_radical(const AlgebraTable& A) {
    const Field& F = A.field();
    std::size_t n = A.dim();
    std::vector<Vec> chars = characters(A);
    Matrix C(F, chars.size(), n);
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            C.set(i, j, chars[i][j]);
    std::vector<Vec> J = kernel_basis(C);

    // certify: J is a two-sided ideal and nilpotent; otherwise the input is
    // not a split basic algebra and we refuse it
    RowSpan JS(F, n);
    JS.add_all(J);
    for (const auto& x : J)
        for (std::size_t b = 0; b < n; ++b) {
            Vec eb(n, Scalar(0));
            eb[b] = F.one();
            if (!JS.contains(A.mul(x, eb)) || !JS.contains(A.mul(eb, x)))
                throw InputError("algebra is not basic split: radical candidate is not an ideal");
        }
    std::vector<Vec> power = J;
    for (std::size_t k = 0; k + 1 < n + 2 && !power.empty(); ++k) {
        std::vector<Vec> nextp;
        RowSpan ns(F, n);
        for (const auto& x : power)
            for (const auto& y : J) {
                Vec xy = A.mul(x, y);
                if (ns.add(xy))
                    nextp.push_back(xy);
            }
        power = std::move(nextp);
        if (power.empty())
            return J;
    }
    if (!power.empty())
        throw InputError("algebra is not basic split: radical candidate is not nilpotent");
    return J;
}

std::vector<Vec> primitive_idempotents(const AlgebraTable& A) {
    const Field& F = A.field();
    std::size_t n = A.dim();
    std::vector<Vec> chars = characters(A);
    std::vector<Vec> J = jacobson_radical(A);
    std::size_t m = chars.size();
    if (m == 0)
        throw InputError("no characters found; algebra is not basic split");

    // solve lambda_j(e_i) = delta_ij together with e_i in the span of a fixed
    // complement; any solution works, idempotent lifting fixes the rest
    RowSpan JS(F, n);
    JS.add_all(J);

    std::vector<Vec> idems;
    Vec total(n, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
        Matrix S(F, m, n);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < n; ++b)
                S.set(a, b, chars[a][b]);
        Vec rhs(m, Scalar(0));
        rhs[i] = F.one();
        auto sol = solve_linear(S, rhs);
        if (!sol)
            throw Error("internal: characters are not independent");
        Vec e = sol->first;
        // orthogonalize against previous idempotents: e <- (1-s) e (1-s)
        Vec one_minus_s = vec_sub(F, A.unit(), total);
        e = A.mul(one_minus_s, A.mul(e, one_minus_s));
        // idempotent lifting e <- 3e^2 - 2e^3 until exact
        for (std::size_t it = 0; it < 64; ++it) {
            Vec e2 = A.mul(e, e);
            if (e2 == e)
                break;
            Vec e3 = A.mul(e2, e);
            Vec cand = vec_sub(F, vec_scale(F, F.of_int(3), e2), vec_scale(F, F.of_int(2), e3));
            if (cand == e)
                throw Error("idempotent lifting stalled");
            e = cand;
        }
        if (A.mul(e, e) != e)
            throw Error("idempotent lifting did not converge");
        idems.push_back(e);
        total = vec_add(F, total, e);
    }
    if (total != A.unit())
        throw Error("primitive idempotents do not sum to the unit");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec p = A.mul(idems[i], idems[j]);
            if (i == j ? p != idems[i] : !vec_is_zero(p))
                throw Error("lifted idempotents are not orthogonal");
        }
    return idems;
}

std::vector<Vec> center(const AlgebraTable& A) {
    const Field& F = A.field();
    std::size_t n = A.dim();
    // z b_i - b_i z = 0 for all i, solved for z
    Matrix Sys(F, n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei(n, Scalar(0));
        ei[i] = F.one();
        Matrix R = A.right_mult_matrix(ei); // row k = coeffs of b_k * b_i
        Matrix L = A.left_mult_matrix(ei);  // row k = coeffs of b_i * b_k
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                Sys.set(i * n + r, c, F.sub(R.at(c, r), L.at(c, r)));
    }
    return kernel_basis(Sys);
}

GradedAlgebraWindow::GradedAlgebraWindow(const Field& F, int lo, int hi) : F_(F), lo_(lo), hi_(hi) {
    if (lo > hi)
        throw InputError("degree window is empty");
    std::size_t W = static_cast<std::size_t>(hi - lo + 1);
    labels_.resize(W);
    mult_.resize(W, std::vector<std::vector<std::vector<Vec>>>(W));
}

std::size_t GradedAlgebraWindow::idx(int deg) const {
    if (!in_window(deg))
        throw WindowError("degree " + std::to_string(deg) + " outside window [" +
                          std::to_string(lo_) + "," + std::to_string(hi_) + "]");
    return static_cast<std::size_t>(deg - lo_);
}

std::size_t GradedAlgebraWindow::dim(int deg) const {
    if (laurent_) {
        int d = laurent_->d;
        return deg % d == 0 ? laurent_->base->dim() : 0;
    }
    if (!in_window(deg))
        throw WindowError("component dimension requested outside window: degree " + std::to_string(deg));
    return labels_[idx(deg)].size();
}

const std::string& GradedAlgebraWindow::label(int deg, std::size_t i) const {
    return labels_[idx(deg)][i];
}

void GradedAlgebraWindow::set_component(int deg, std::vector<std::string> labels) {
    std::size_t k = idx(deg);
    labels_[k] = std::move(labels);
    for (auto& row : mult_)
        row[k].clear();
}

void GradedAlgebraWindow::set_product(int d1, std::size_t i, int d2, std::size_t j, Vec result) {
    std::size_t k1 = idx(d1), k2 = idx(d2);
    std::size_t n1 = labels_[k1].size(), n2 = labels_[k2].size();
    auto& cell = mult_[k1][k2];
    if (cell.empty())
        cell.assign(n1, std::vector<Vec>(n2));
    cell[i][j] = std::move(result);
}

GElem GradedAlgebraWindow::one() const {
    if (laurent_) {
        return GElem{0, laurent_->base->unit()};
    }
    if (unit_coords_.empty())
        throw Error("graded window has no unit set");
    return GElem{0, unit_coords_};
}

GElem GradedAlgebraWindow::iota() const {
    if (!sparse_)
        throw InputError("iota requested on a non-sparse graded algebra");
    if (laurent_)
        return GElem{-laurent_->d, laurent_->base->unit()};
    throw Error("iota only available with Laurent backing");
}

GElem GradedAlgebraWindow::iota_inv() const {
    if (!sparse_)
        throw InputError("iota requested on a non-sparse graded algebra");
    if (laurent_)
        return GElem{laurent_->d, laurent_->base->unit()};
    throw Error("iota only available with Laurent backing");
}

GElem GradedAlgebraWindow::basis_elem(int deg, std::size_t i) const {
    GElem e;
    e.deg = deg;
    e.coeffs = Vec(dim(deg), Scalar(0));
    e.coeffs[i] = F_.one();
    return e;
}

GElem GradedAlgebraWindow::zero(int deg) const {
    GElem e;
    e.deg = deg;
    e.coeffs = Vec(dim(deg), Scalar(0));
    return e;
}

GElem GradedAlgebraWindow::add(const GElem& x, const GElem& y) const {
    if (x.is_zero())
        return y;
    if (y.is_zero())
        return x;
    if (x.deg != y.deg)
        throw InputError("cannot add homogeneous elements of different degrees");
    return GElem{x.deg, vec_add(F_, x.coeffs, y.coeffs)};
}

GElem GradedAlgebraWindow::scale(const Scalar& c, const GElem& x) const {
    return GElem{x.deg, vec_scale(F_, c, x.coeffs)};
}

GElem GradedAlgebraWindow::mul(const GElem& x, const GElem& y) const {
    int dout = x.deg + y.deg;
    if (laurent_) {
        const auto& L = *laurent_;
        int d = L.d;
        if (x.deg % d != 0 || y.deg % d != 0)
            return zero(dout);
        if (x.is_zero() || y.is_zero())
            return GElem{dout, Vec(L.base->dim(), Scalar(0))};
        long j = y.deg / d;
        Vec tx = L.sigma.power(j).apply(x.coeffs);
        return GElem{dout, L.base->mul(tx, y.coeffs)};
    }
    std::size_t k1 = idx(x.deg), k2 = idx(y.deg);
    std::size_t nout = dim(dout);
    Vec out(nout, Scalar(0));
    const auto& cell = mult_[k1][k2];
    if (cell.empty()) {
        if (vec_is_zero(x.coeffs) || vec_is_zero(y.coeffs))
            return GElem{dout, out};
        throw WindowError("product table missing for degrees " + std::to_string(x.deg) + "," +
                          std::to_string(y.deg));
    }
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i] == 0)
            continue;
        for (std::size_t j = 0; j < y.coeffs.size(); ++j) {
            if (y.coeffs[j] == 0)
                continue;
            const Vec& m = cell[i][j];
            Scalar c = F_.mul(x.coeffs[i], y.coeffs[j]);
            for (std::size_t t = 0; t < nout; ++t)
                if (m[t] != 0)
                    out[t] = F_.add(out[t], F_.mul(c, m[t]));
        }
    }
    return GElem{dout, out};
}

std::size_t GradedAlgebraWindow::total_dim() const {
    std::size_t s = 0;
    for (int d = lo_; d <= hi_; ++d)
        s += dim(d);
    return s;
}

void GradedAlgebraWindow::set_unit(Vec unit_coords) { unit_coords_ = std::move(unit_coords); }

void GradedAlgebraWindow::finalize(std::optional<int> sparse_modulus, std::optional<LaurentData> laurent) {
    sparse_ = sparse_modulus;
    laurent_ = std::move(laurent);
}

GradedAlgebraWindow sparse_laurent(AlgebraPtr A, const Automorphism& sigma, int d, int range_lo, int range_hi) {
    if (d < 1)
        throw InputError("sparseness modulus d must be positive");
    if (range_lo > 0 || range_hi < 0)
        throw InputError("degree range must contain 0");
    if (sigma.algebra().get() != A.get())
        throw InputError("automorphism is not defined on the given algebra");
    GradedAlgebraWindow G(A->field(), range_lo, range_hi);
    for (int deg = range_lo; deg <= range_hi; ++deg) {
        if (deg % d != 0) {
            G.set_component(deg, {});
            continue;
        }
        int k = deg / d;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < A->dim(); ++i) {
            std::string pre = k == 0 ? "" : "i^" + std::to_string(-k) + "*";
            labels.push_back(pre + A->label(i));
        }
        G.set_component(deg, std::move(labels));
    }
    G.finalize(d, GradedAlgebraWindow::LaurentData{A, sigma, d});
    return G;
}

} // namespace homalg
