#include "leonard/field.hpp"

#include <cctype>

namespace leonard {

FieldDescriptor FieldDescriptor::rationals() {
    return FieldDescriptor(FieldKind::rational, mpz_class(0));
}

FieldDescriptor FieldDescriptor::prime_field(const mpz_class& modulus) {
    if (modulus <= 2) {
        throw InputError("field modulus must exceed 2, got " + modulus.get_str());
    }
    // 40 Miller-Rabin rounds on top of the BPSW test.
    if (mpz_probab_prime_p(modulus.get_mpz_t(), 40) == 0) {
        throw InputError("field modulus is not prime: " + modulus.get_str());
    }
    return FieldDescriptor(FieldKind::prime, modulus);
}

std::string FieldDescriptor::str() const {
    return is_rational() ? "QQ" : "GF(" + modulus_.get_str() + ")";
}

FieldScalar::FieldScalar() : field_(FieldDescriptor::rationals()), value_(0) {}

FieldScalar FieldScalar::zero(const FieldDescriptor& f) {
    return FieldScalar(f, mpq_class(0));
}

FieldScalar FieldScalar::one(const FieldDescriptor& f) {
    return FieldScalar(f, mpq_class(1));
}

FieldScalar FieldScalar::of_int(long v, const FieldDescriptor& f) {
    FieldScalar s(f, mpq_class(v));
    s.reduce();
    return s;
}

void FieldScalar::require_same_field(const FieldScalar& o) const {
    if (field_ != o.field_) {
        throw InputError("field mismatch: " + field_.str() + " vs " + o.field_.str());
    }
}

void FieldScalar::reduce() {
    if (field_.is_prime()) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), value_.get_num().get_mpz_t(), field_.modulus().get_mpz_t());
        value_ = mpq_class(r);
    }
}

bool FieldScalar::is_zero() const { return sgn(value_) == 0; }

bool FieldScalar::is_one() const { return value_ == 1; }

FieldScalar FieldScalar::operator-() const {
    FieldScalar r(field_, mpq_class(-value_));
    r.reduce();
    return r;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
    require_same_field(o);
    value_ += o.value_;
    reduce();
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
    require_same_field(o);
    value_ -= o.value_;
    reduce();
    return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
    require_same_field(o);
    value_ *= o.value_;
    reduce();
    return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
    *this *= o.inverse();
    return *this;
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) {
        throw InputError("division by zero in " + field_.str());
    }
    if (field_.is_rational()) {
        return FieldScalar(field_, mpq_class(1) / value_);
    }
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), value_.get_num().get_mpz_t(), field_.modulus().get_mpz_t());
    return FieldScalar(field_, mpq_class(inv));
}

std::string FieldScalar::str() const { return value_.get_str(); }

FieldScalar FieldScalar::parse(std::string_view text, const FieldDescriptor& f) {
    auto malformed = [&] {
        return InputError("malformed scalar literal: \"" + std::string(text) + "\"");
    };
    size_t pos = 0;
    auto read_integer = [&]() -> mpz_class {
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw malformed();
        return mpz_class(std::string(text.substr(start, pos - start)));
    };

    mpz_class num = read_integer();
    mpz_class den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_integer();
        if (den < 0) throw malformed();  // sign only on the numerator
    }
    if (pos != text.size()) throw malformed();
    if (den == 0) throw InputError("zero denominator in scalar literal: \"" + std::string(text) + "\"");

    if (f.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        return FieldScalar(f, q);
    }
    FieldScalar n(f, mpq_class(num));
    n.reduce();
    FieldScalar d(f, mpq_class(den));
    d.reduce();
    if (d.is_zero()) {
        throw InputError("denominator of \"" + std::string(text) + "\" vanishes in " + f.str());
    }
    return n / d;
}

}  // namespace leonard
