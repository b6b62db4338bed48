#include "waring/field.hpp"

#include <sstream>

namespace waring {

FieldRef Field::rationals() {
    static FieldRef q(new Field(FieldKind::rationals, mpz_class(0)));
    return q;
}

FieldRef Field::prime(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
        std::ostringstream os;
        os << "modulus " << p.get_str() << " is not prime";
        throw Error(ErrorKind::field, os.str());
    }
    return FieldRef(new Field(FieldKind::prime_field, p));
}

void Field::ensure_degree_supported(int degree) const {
    if (kind_ == FieldKind::rationals) return;
    if (modulus_ <= degree) {
        std::ostringstream os;
        os << "characteristic " << modulus_.get_str()
           << " too small for degree " << degree << " (need p > d)";
        throw Error(ErrorKind::field, os.str());
    }
}

void Field::ensure_session_degree(int degree) const {
    if (kind_ == FieldKind::rationals) return;
    if (modulus_ <= 2 * degree + 2) {
        std::ostringstream os;
        os << "modulus " << modulus_.get_str() << " violates the session rule p > 2d+2 for degree "
           << degree;
        throw Error(ErrorKind::field, os.str());
    }
}

std::string Field::name() const {
    if (kind_ == FieldKind::rationals) return "q";
    return "fp:" + modulus_.get_str();
}

Scalar::Scalar(FieldRef field, long value) : field_(std::move(field)), v_(value) {
    canonicalize();
}

Scalar::Scalar(FieldRef field, const mpz_class& value)
    : field_(std::move(field)), v_(value) {
    canonicalize();
}

Scalar::Scalar(FieldRef field, const mpq_class& value)
    : field_(std::move(field)), v_(value) {
    v_.canonicalize();
    canonicalize();
}

void Scalar::canonicalize() {
    if (!field_ || !field_->is_prime_field()) return;
    const mpz_class& p = field_->modulus();
    mpz_class num = v_.get_num();
    mpz_class den = v_.get_den();
    if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw Error(ErrorKind::field, "denominator not invertible modulo p");
        num *= inv;
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    v_ = mpq_class(r);
}

void Scalar::check_compatible(const Scalar& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_))
        throw Error(ErrorKind::field, "scalars from incompatible fields");
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.v_ = -r.v_;
    r.canonicalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_compatible(o);
    v_ += o.v_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_compatible(o);
    v_ -= o.v_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_compatible(o);
    v_ *= o.v_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_compatible(o);
    *this *= o.inverse();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::constraint, "division by zero");
    Scalar r(*this);
    if (field_->is_prime_field()) {
        mpz_class inv;
        mpz_class num = v_.get_num();
        mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), field_->modulus().get_mpz_t());
        r.v_ = mpq_class(inv);
        r.canonicalize();
    } else {
        r.v_ = 1 / v_;
    }
    return r;
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar acc = Scalar::one(field_);
    Scalar base(*this);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw Error(ErrorKind::internal, "Rng::below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = gen_();
    } while (v >= limit);
    return v % n;
}

long Rng::range(long lo, long hi) {
    if (hi < lo) throw Error(ErrorKind::internal, "Rng::range: empty interval");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(below(span));
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace

Rng Rng::fork(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

Scalar random_scalar(const FieldRef& field, Rng& rng, long height) {
    if (height < 1) throw Error(ErrorKind::constraint, "height must be >= 1");
    return Scalar(field, rng.range(-height, height));
}

Scalar random_nonzero_scalar(const FieldRef& field, Rng& rng, long height) {
    for (;;) {
        Scalar s = random_scalar(field, rng, height);
        if (!s.is_zero()) return s;
    }
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace waring
