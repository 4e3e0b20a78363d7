#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "leonard/errors.hpp"

namespace leonard {

enum class FieldKind { rational, prime };

/// Identifies the ground field: the rationals, or GF(p) for an odd prime p.
class FieldDescriptor {
public:
    static FieldDescriptor rationals();
    /// GF(modulus). Throws InputError unless modulus is an odd prime > 2.
    static FieldDescriptor prime_field(const mpz_class& modulus);

    FieldKind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == FieldKind::rational; }
    bool is_prime() const noexcept { return kind_ == FieldKind::prime; }
    const mpz_class& modulus() const { return modulus_; }

    bool operator==(const FieldDescriptor& o) const {
        return kind_ == o.kind_ && modulus_ == o.modulus_;
    }
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldDescriptor(FieldKind kind, mpz_class modulus)
        : kind_(kind), modulus_(std::move(modulus)) {}

    FieldKind kind_;
    mpz_class modulus_;  // 0 for the rationals
};

/// An exact element of the ground field, kept in canonical form:
/// a reduced fraction with positive denominator over the rationals,
/// or a residue in [0, p) over GF(p). Equality is representation equality.
class FieldScalar {
public:
    /// Rational zero. Containers need a default state; real values come
    /// from the named constructors below.
    FieldScalar();

    static FieldScalar zero(const FieldDescriptor& f);
    static FieldScalar one(const FieldDescriptor& f);
    static FieldScalar of_int(long v, const FieldDescriptor& f);

    /// Parses "[sign]digits[/digits]". Throws InputError on malformed text,
    /// a zero denominator, or a denominator divisible by p.
    static FieldScalar parse(std::string_view text, const FieldDescriptor& f);

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Canonical literal, re-parseable by parse().
    std::string str() const;

    FieldScalar operator-() const;
    FieldScalar& operator+=(const FieldScalar& o);
    FieldScalar& operator-=(const FieldScalar& o);
    FieldScalar& operator*=(const FieldScalar& o);
    FieldScalar& operator/=(const FieldScalar& o);

    friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
    friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
    friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
    friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

    /// Multiplicative inverse; throws InputError on zero.
    FieldScalar inverse() const;

    bool operator==(const FieldScalar& o) const {
        return field_ == o.field_ && value_ == o.value_;
    }
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

private:
    FieldScalar(FieldDescriptor f, mpq_class v)
        : field_(std::move(f)), value_(std::move(v)) {}

    void require_same_field(const FieldScalar& o) const;
    void reduce();  // prime fields: bring the residue back into [0, p)

    FieldDescriptor field_;
    mpq_class value_;
};

}  // namespace leonard
