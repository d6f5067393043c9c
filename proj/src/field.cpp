#include "cotra/field.hpp"

namespace cotra {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(long p) {
    require(is_prime(p), "Field::prime: " + std::to_string(p) + " is not prime");
    Field f;
    f.kind_ = FieldKind::PrimeField;
    f.p_ = p;
    return f;
}

Scalar Field::reduce(const Scalar& x) const {
    if (kind_ == FieldKind::Rationals) {
        Scalar r = x;
        r.canonicalize();
        return r;
    }
    mpz_class p(p_);
    mpz_class den = x.get_den();
    mpz_class dmod = den % p;
    if (dmod < 0) dmod += p;
    require(dmod != 0, "Field: denominator divisible by " + std::to_string(p_));
    mpz_class dinv;
    int ok = mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t());
    require(ok != 0, "Field: no inverse mod p");
    mpz_class num = x.get_num() % p;
    if (num < 0) num += p;
    mpz_class r = (num * dinv) % p;
    if (r < 0) r += p;
    return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    Scalar r = a + b;
    return reduce(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    Scalar r = a - b;
    return reduce(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    Scalar r = a * b;
    return reduce(r);
}

Scalar Field::neg(const Scalar& a) const {
    Scalar r = -a;
    return reduce(r);
}

Scalar Field::inv(const Scalar& a) const {
    require(!is_zero(a), "Field::inv: division by zero");
    if (kind_ == FieldKind::Rationals) {
        Scalar r = 1 / a;
        r.canonicalize();
        return r;
    }
    mpz_class p(p_);
    mpz_class n = a.get_num() % p;
    if (n < 0) n += p;
    mpz_class ninv;
    int ok = mpz_invert(ninv.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    require(ok != 0, "Field::inv: not invertible mod p");
    return Scalar(ninv);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::from_long(long n, long d) const {
    require(d != 0, "Field::from_long: zero denominator");
    Scalar r(n, d);
    r.canonicalize();
    return reduce(r);
}

Scalar Field::from_string(const std::string& s) const {
    Scalar r;
    int ok = r.set_str(s, 10);
    require(ok == 0, "Field::from_string: cannot parse '" + s + "'");
    require(r.get_den() != 0, "Field::from_string: zero denominator in '" + s + "'");
    r.canonicalize();
    return reduce(r);
}

std::string Field::describe() const {
    if (kind_ == FieldKind::Rationals) return "Q";
    return "F" + std::to_string(p_);
}

}  // namespace cotra
