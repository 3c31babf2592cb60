#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cmpn/errors.hpp"

namespace cmpn {

enum class FieldKind { Rationals, PrimeField };

/// A field K: the rationals, or GF(p) for prime p.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }

    /// Throws ParseError unless p is prime.
    static FieldSpec prime_field(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }

    /// Serialized tag: "Q" or "GF:p".
    std::string tag() const;
    static FieldSpec from_tag(const std::string& tag);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint64_t modulus_;
};

/// An element of a FieldSpec's field, always in canonical form:
/// reduced fraction with positive denominator over Q, residue in [0, p)
/// over GF(p). Immutable value type; all arithmetic is exact.
class FieldElement {
public:
    FieldElement(const FieldSpec& spec, long value);
    FieldElement(const FieldSpec& spec, const mpq_class& value);

    static FieldElement zero(const FieldSpec& spec) { return FieldElement(spec, 0); }
    static FieldElement one(const FieldSpec& spec) { return FieldElement(spec, 1); }

    /// Grammar: optional sign, integer, optional "/" positive integer (Q);
    /// signed integer literal reduced mod p (GF(p)).
    static FieldElement parse(const std::string& text, const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; only meaningful over Q.
    const mpq_class& rational() const { return rat_; }
    /// Canonical residue; only meaningful over GF(p).
    std::uint64_t residue() const { return res_; }

    FieldElement operator-() const;
    FieldElement inverse() const; // throws DivisionByZero on 0

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    std::string str() const;

private:
    FieldElement(const FieldSpec& spec) : spec_(spec) {}
    static void require_same_spec(const FieldElement& a, const FieldElement& b);

    FieldSpec spec_;
    mpq_class rat_;           // Rationals only
    std::uint64_t res_ = 0;   // PrimeField only
};

bool is_prime(std::uint64_t n);

} // namespace cmpn
