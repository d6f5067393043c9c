#pragma once

#include <gmpxx.h>

#include <string>

#include "cotra/util.hpp"

namespace cotra {

// All scalars are exact.  Over the rationals they are arbitrary-precision
// normalized fractions; over a prime field they are canonical residues
// 0 <= r < p stored in the same representation (denominator 1).
using Scalar = mpq_class;

enum class FieldKind { Rationals, PrimeField };

class Field {
public:
    Field() : kind_(FieldKind::Rationals), p_(0) {}

    static Field rationals() { return Field(); }
    static Field prime(long p);

    FieldKind kind() const { return kind_; }
    long characteristic() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    // Canonical representative (identity over Q, reduction mod p over F_p).
    Scalar reduce(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
    bool eq(const Scalar& a, const Scalar& b) const { return cmp(a, b) == 0; }

    Scalar from_long(long n, long d = 1) const;
    // Accepts "n" or "n/d".
    Scalar from_string(const std::string& s) const;
    std::string to_string(const Scalar& a) const { return a.get_str(); }

    std::string describe() const;

private:
    FieldKind kind_;
    long p_;
};

}  // namespace cotra
