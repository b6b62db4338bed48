#ifndef WARING_FIELD_HPP
#define WARING_FIELD_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>

#include <gmpxx.h>

#include "waring/error.hpp"

namespace waring {

enum class FieldKind { rationals, prime_field };

class Field;
using FieldRef = std::shared_ptr<const Field>;

// Exact base field: the rationals, or Z/p for a prime p. Immutable once
// created; handles are shared freely across threads.
class Field {
public:
    static FieldRef rationals();

    // Rejects composite moduli. The library only needs p > d for a session
    // working in degree d (so factorials stay invertible); the CLI applies
    // the stricter session rule p > 2d+2, see ensure_degree_supported().
    static FieldRef prime(const mpz_class& p);
    static FieldRef prime(unsigned long p) { return prime(mpz_class(p)); }

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::prime_field; }
    const mpz_class& modulus() const { return modulus_; }

    bool same(const Field& other) const {
        return kind_ == other.kind_ && modulus_ == other.modulus_;
    }

    // Characteristic must exceed the working degree for the apolarity
    // pairing (factorials up to d appear in contraction).
    void ensure_degree_supported(int degree) const;

    // Stricter session-level margin used by the CLI front end.
    void ensure_session_degree(int degree) const;

    std::string name() const;  // "q" or "fp:<p>"

private:
    Field(FieldKind kind, mpz_class modulus)
        : kind_(kind), modulus_(std::move(modulus)) {}

    FieldKind kind_;
    mpz_class modulus_;  // 0 for the rationals
};

// A field element in canonical form: reduced fraction with positive
// denominator over Q, or a residue in [0, p) with denominator 1 over F_p.
class Scalar {
public:
    Scalar() = default;  // invalid sentinel; only for container resizing
    Scalar(FieldRef field, long value);
    Scalar(FieldRef field, const mpz_class& value);
    Scalar(FieldRef field, const mpq_class& value);

    static Scalar zero(const FieldRef& field) { return Scalar(field, 0); }
    static Scalar one(const FieldRef& field) { return Scalar(field, 1); }

    const FieldRef& field() const { return field_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) {
        return !(a == b);
    }

    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    std::string str() const;  // "n" or "n/d"

private:
    void canonicalize();
    void check_compatible(const Scalar& o) const;

    FieldRef field_;
    mpq_class v_;
};

// Deterministic RNG used by every randomized operation. mt19937_64 is fully
// specified by the standard, so runs are reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return gen_(); }

    // Uniform in [0, n), n >= 1, via rejection so the distribution is exact.
    std::uint64_t below(std::uint64_t n);

    // Uniform integer in [lo, hi].
    long range(long lo, long hi);

    // Derived stream for parallel-friendly sub-sampling (splitmix64 mix).
    Rng fork(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

// Uniform over the integers in [-height, height], mapped into the field.
Scalar random_scalar(const FieldRef& field, Rng& rng, long height);

// Same, but never zero (used when a degenerate zero coefficient would force
// a resample anyway).
Scalar random_nonzero_scalar(const FieldRef& field, Rng& rng, long height);

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace waring

#endif
