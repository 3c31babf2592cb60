#include "cmpn/field.hpp"

#include <regex>

namespace cmpn {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0)
            return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p)
{
    if (!is_prime(p))
        throw ParseError("GF modulus must be prime, got " + std::to_string(p));
    return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::tag() const
{
    return is_rationals() ? "Q" : "GF:" + std::to_string(modulus_);
}

FieldSpec FieldSpec::from_tag(const std::string& tag)
{
    if (tag == "Q")
        return rationals();
    if (tag.rfind("GF:", 0) == 0) {
        const std::string body = tag.substr(3);
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad field tag: " + tag);
        return prime_field(std::stoull(body));
    }
    throw ParseError("bad field tag: " + tag + " (expected Q or GF:p)");
}

FieldElement::FieldElement(const FieldSpec& spec, long value) : spec_(spec)
{
    if (spec.is_rationals()) {
        rat_ = value;
    } else {
        const long p = static_cast<long>(spec.modulus());
        long r = value % p;
        if (r < 0)
            r += p;
        res_ = static_cast<std::uint64_t>(r);
    }
}

FieldElement::FieldElement(const FieldSpec& spec, const mpq_class& value) : spec_(spec)
{
    if (spec.is_rationals()) {
        rat_ = value;
        rat_.canonicalize();
    } else {
        if (value.get_den() != 1)
            throw ParseError("non-integer value for GF(p) element");
        mpz_class r = value.get_num() % static_cast<unsigned long>(spec.modulus());
        if (r < 0)
            r += static_cast<unsigned long>(spec.modulus());
        res_ = r.get_ui();
    }
}

FieldElement FieldElement::parse(const std::string& text, const FieldSpec& spec)
{
    static const std::regex rational_re(R"(^([+-]?[0-9]+)(/([0-9]+))?$)");
    std::smatch m;
    if (!std::regex_match(text, m, rational_re))
        throw ParseError("malformed field element: '" + text + "'");
    mpz_class num(m[1].str());
    mpz_class den = m[2].matched ? mpz_class(m[3].str()) : mpz_class(1);
    if (den == 0)
        throw DivisionByZero("zero denominator in '" + text + "'");
    if (!spec.is_rationals()) {
        if (m[2].matched && den != 1)
            throw ParseError("fractions are not GF(p) literals: '" + text + "'");
        return FieldElement(spec, mpq_class(num));
    }
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElement(spec, q);
}

bool FieldElement::is_zero() const
{
    return spec_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const
{
    return spec_.is_rationals() ? rat_ == 1 : res_ == 1;
}

void FieldElement::require_same_spec(const FieldElement& a, const FieldElement& b)
{
    if (a.spec_ != b.spec_)
        throw FieldMismatch("operands from different fields: " + a.spec_.tag() + " vs " +
                            b.spec_.tag());
}

FieldElement FieldElement::operator-() const
{
    FieldElement r(spec_);
    if (spec_.is_rationals())
        r.rat_ = -rat_;
    else
        r.res_ = res_ == 0 ? 0 : spec_.modulus() - res_;
    return r;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    FieldElement r(spec_);
    if (spec_.is_rationals()) {
        r.rat_ = 1 / rat_;
        r.rat_.canonicalize();
    } else {
        // Fermat: a^(p-2) mod p
        r.res_ = powmod(res_, spec_.modulus() - 2, spec_.modulus());
    }
    return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    FieldElement::require_same_spec(a, b);
    FieldElement r(a.spec_);
    if (a.spec_.is_rationals()) {
        r.rat_ = a.rat_ + b.rat_;
    } else {
        const std::uint64_t p = a.spec_.modulus();
        std::uint64_t s = a.res_ + b.res_;
        r.res_ = s >= p ? s - p : s;
    }
    return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    return a + (-b);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    FieldElement::require_same_spec(a, b);
    FieldElement r(a.spec_);
    if (a.spec_.is_rationals())
        r.rat_ = a.rat_ * b.rat_;
    else
        r.res_ = mulmod(a.res_, b.res_, a.spec_.modulus());
    return r;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    if (a.spec_ != b.spec_)
        return false;
    return a.spec_.is_rationals() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::string FieldElement::str() const
{
    if (!spec_.is_rationals())
        return std::to_string(res_);
    if (rat_.get_den() == 1)
        return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

} // namespace cmpn
