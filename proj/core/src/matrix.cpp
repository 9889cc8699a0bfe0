#include "homalg/matrix.hpp"

#include <sstream>

namespace homalg {

Field Field::prime(long p) {
    if (p < 2)
        throw InputError("field characteristic must be 0 or a prime");
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0)
            throw InputError("field characteristic must be 0 or a prime: " + std::to_string(p));
    Field F;
    F.p_ = p;
    return F;
}

Scalar Field::reduce(const Scalar& x) const {
    Scalar y(x);
    y.canonicalize();
    if (p_ == 0)
        return y;
    // F_p: x must have denominator invertible mod p; canonical rep in [0,p)
    mpz_class num = y.get_num(), den = y.get_den(), p(p_);
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InputError("denominator not invertible modulo " + std::to_string(p_));
    mpz_class r = (num * dinv) % p;
    if (r < 0)
        r += p;
    return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
    Scalar r = reduce(a);
    if (r == 0)
        throw Error("division by zero");
    if (p_ == 0)
        return Scalar(1) / r;
    mpz_class num = r.get_num(), p(p_), i;
    mpz_invert(i.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    mpz_class rr = i % p;
    if (rr < 0)
        rr += p;
    return Scalar(rr);
}

Scalar Field::of_fraction(long num, long den) const {
    if (den == 0)
        throw Error("zero denominator");
    if (p_ != 0 && den % p_ == 0)
        throw Error("fraction denominator " + std::to_string(den) + " not invertible in characteristic " + std::to_string(p_));
    return div(of_int(num), of_int(den));
}

std::string Field::describe() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = F.add(a[i], b[i]);
    return r;
}

Vec vec_sub(const Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = F.sub(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& F, const Scalar& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = F.mul(c, a[i]);
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0)
            return false;
    return true;
}

Vec vec_zero(std::size_t n) { return Vec(n, Scalar(0)); }

Matrix Matrix::identity(const Field& F, std::size_t n) {
    Matrix I(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        I.set(i, i, F.one());
    return I;
}

Matrix Matrix::from_rows(const Field& F, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix M(F, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw InputError("row length mismatch in from_rows");
        for (std::size_t j = 0; j < cols; ++j)
            M.set(i, j, rows[i][j]);
    }
    return M;
}

Vec Matrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r[j] = at(i, j);
    return r;
}

Vec Matrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = at(i, j);
    return c;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !(F_ == o.F_))
        throw InputError("matrix product shape mismatch");
    Matrix R(F_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0)
                    continue;
                R.set(i, j, F_.add(R.at(i, j), F_.mul(aik, o.at(k, j))));
            }
        }
    return R;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("matrix sum shape mismatch");
    Matrix R(F_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        R.a_[i] = F_.add(a_[i], o.a_[i]);
    return R;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("matrix difference shape mismatch");
    Matrix R(F_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        R.a_[i] = F_.sub(a_[i], o.a_[i]);
    return R;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix R(F_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        R.a_[i] = F_.mul(c, a_[i]);
    return R;
}

Matrix Matrix::transpose() const {
    Matrix R(F_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            R.set(j, i, at(i, j));
    return R;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

Vec Matrix::apply_row(const Vec& v) const {
    if (v.size() != rows_)
        throw InputError("apply_row length mismatch");
    Vec r(cols_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0)
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0)
                r[j] = F_.add(r[j], F_.mul(v[i], at(i, j)));
    }
    return r;
}

Vec Matrix::apply_col(const Vec& x) const {
    if (x.size() != cols_)
        throw InputError("apply_col length mismatch");
    Vec r(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar s(0);
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && x[j] != 0)
                s = F_.add(s, F_.mul(at(i, j), x[j]));
        r[i] = s;
    }
    return r;
}

std::string Matrix::describe() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " [";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i)
            os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

Echelon rref(const Matrix& A) {
    const Field& F = A.field();
    std::size_t m = A.rows(), n = A.cols();
    std::vector<Vec> rows(m);
    for (std::size_t i = 0; i < m; ++i)
        rows[i] = A.row(i);

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t sel = m;
        for (std::size_t i = r; i < m; ++i)
            if (rows[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == m)
            continue;
        std::swap(rows[r], rows[sel]);
        Scalar piv_inv = F.inv(rows[r][c]);
        for (std::size_t j = c; j < n; ++j)
            rows[r][j] = F.mul(piv_inv, rows[r][j]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Scalar f = rows[i][c];
            for (std::size_t j = c; j < n; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivot_cols.push_back(c);
        ++r;
    }
    Echelon E;
    E.mat = Matrix::from_rows(F, rows, n);
    E.pivot_cols = std::move(pivot_cols);
    return E;
}

std::size_t rank(const Matrix& A) { return rref(A).rank(); }

std::vector<Vec> kernel_basis(const Matrix& A) {
    const Field& F = A.field();
    Echelon E = rref(A);
    std::size_t n = A.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : E.pivot_cols)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c])
            continue;
        Vec x(n, Scalar(0));
        x[c] = F.one();
        for (std::size_t r = 0; r < E.pivot_cols.size(); ++r)
            x[E.pivot_cols[r]] = F.neg(E.mat.at(r, c));
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::pair<Vec, std::vector<Vec>>> solve_linear(const Matrix& A, const Vec& b) {
    if (b.size() != A.rows())
        throw InputError("solve_linear: right-hand side length mismatch");
    const Field& F = A.field();
    std::size_t m = A.rows(), n = A.cols();
    Matrix Aug(F, m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            Aug.set(i, j, A.at(i, j));
        Aug.set(i, n, b[i]);
    }
    Echelon E = rref(Aug);
    for (auto c : E.pivot_cols)
        if (c == n)
            return std::nullopt; // inconsistent
    Vec x(n, Scalar(0));
    for (std::size_t r = 0; r < E.pivot_cols.size(); ++r)
        x[E.pivot_cols[r]] = E.mat.at(r, n);
    return std::make_pair(std::move(x), kernel_basis(A));
}

std::vector<Vec> left_kernel_basis(const Matrix& A) { return kernel_basis(A.transpose()); }

std::optional<Vec> solve_row(const Matrix& A, const Vec& target) {
    auto sol = solve_linear(A.transpose(), target);
    if (!sol)
        return std::nullopt;
    return sol->first;
}

bool RowSpan::add(const Vec& v) {
    if (v.size() != width_)
        throw InputError("RowSpan: vector width mismatch");
    Vec w = reduce(v);
    std::size_t piv = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (w[j] != 0) {
            piv = j;
            break;
        }
    if (piv == width_)
        return false;
    Scalar inv = F_.inv(w[piv]);
    for (auto& x : w)
        x = F_.mul(inv, x);
    // keep earlier rows reduced against the new one
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar f = rows_[r][piv];
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < width_; ++j)
            rows_[r][j] = F_.sub(rows_[r][j], F_.mul(f, w[j]));
    }
    // insert keeping pivot order
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(w));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

void RowSpan::add_all(const std::vector<Vec>& vs) {
    for (const auto& v : vs)
        add(v);
}

bool RowSpan::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

std::vector<std::size_t> RowSpan::complement_cols() const {
    std::vector<bool> is_pivot(width_, false);
    for (auto p : pivots_)
        is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < width_; ++c)
        if (!is_pivot[c])
            out.push_back(c);
    return out;
}

Vec RowSpan::reduce(const Vec& v) const {
    Vec w(v);
    for (auto& x : w)
        x = F_.reduce(x);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar f = w[pivots_[r]];
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < width_; ++j)
            w[j] = F_.sub(w[j], F_.mul(f, rows_[r][j]));
    }
    return w;
}

std::optional<Vec> RowSpan::coordinates(const Vec& v) const {
    Vec w(v);
    for (auto& x : w)
        x = F_.reduce(x);
    Vec coords(rows_.size(), Scalar(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar f = w[pivots_[r]];
        if (f == 0)
            continue;
        coords[r] = f;
        for (std::size_t j = 0; j < width_; ++j)
            w[j] = F_.sub(w[j], F_.mul(f, rows_[r][j]));
    }
    if (!vec_is_zero(w))
        return std::nullopt;
    return coords;
}

} // namespace homalg
