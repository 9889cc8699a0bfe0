#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <cstdint>

namespace homalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/* Malformed or inconsistent user input. */
struct InputError : Error {
    using Error::Error;
};
/* A windowed computation would need data outside the window. */
struct WindowError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
/* A search-based decision procedure could not certify either answer. */
struct UndecidedError : Error {
    using Error::Error;
};

using Scalar = mpq_class;

/* Ground field: rationals (characteristic 0) or a prime field F_p.
 * Scalars are stored as canonical mpq_class values; for F_p the canonical
 * representative is the integer in [0, p). All arithmetic goes through the
 * field so equality of scalars is structural. */
class Field {
public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }
    static Field prime(long p);

    long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    Scalar reduce(const Scalar& x) const;
    Scalar of_int(long n) const { return reduce(Scalar(n)); }
    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return of_int(1); }

    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    /* n must be invertible in the field (used by 1/2 in Sq and q/d in the
     * Euler derivation). */
    Scalar of_fraction(long num, long den) const;

    std::string describe() const;

private:
    long p_;
};

} // namespace homalg
