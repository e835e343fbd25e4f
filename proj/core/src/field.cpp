#include "palg/field.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace palg {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p) || p > kMaxModulus)
        throw std::invalid_argument("field modulus must be a prime in [2, 97], got " + std::to_string(p));
    return Field{Kind::Prime, p};
}

std::string Field::name() const {
    if (kind_ == Kind::Rationals) return "Q";
    return "GF(" + std::to_string(modulus_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.name(); }

namespace {

std::uint32_t reduce_mod(const BigInt& v, std::uint32_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint32_t>();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // a^(p-2) mod p
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar Scalar::from_int(Field f, long long v) {
    Scalar s(f);
    if (f.is_finite()) {
        long long p = f.modulus();
        long long r = v % p;
        if (r < 0) r += p;
        s.residue_ = static_cast<std::uint32_t>(r);
    } else {
        s.rational_ = v;
    }
    return s;
}

Scalar Scalar::from_rational(Field f, const BigRational& q) {
    Scalar s(f);
    if (!f.is_finite()) {
        s.rational_ = q;
        return s;
    }
    std::uint32_t p = f.modulus();
    std::uint32_t num = reduce_mod(boost::multiprecision::numerator(q), p);
    std::uint32_t den = reduce_mod(boost::multiprecision::denominator(q), p);
    if (den == 0) throw std::domain_error("denominator vanishes in " + f.name());
    s.residue_ = static_cast<std::uint32_t>(std::uint64_t{num} * inverse_mod(den, p) % p);
    return s;
}

Scalar Scalar::parse(Field f, std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("malformed coefficient \"" + std::string(text) + "\""); };
    auto is_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_int(num, true)) fail();
    if (slash != std::string_view::npos && !is_int(den, false)) fail();
    BigInt n(std::string(num.front() == '+' ? num.substr(1) : num));
    BigInt d = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(den));
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    return from_rational(f, BigRational(n, d));
}

bool Scalar::is_zero() const noexcept {
    return field_.is_finite() ? residue_ == 0 : rational_ == 0;
}

bool Scalar::is_one() const noexcept {
    return field_.is_finite() ? residue_ == 1 : rational_ == 1;
}

void Scalar::require_same(const Scalar& o) const {
    if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s(field_);
    if (field_.is_finite())
        s.residue_ = inverse_mod(residue_, field_.modulus());
    else
        s.rational_ = 1 / rational_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same(o);
    if (field_.is_finite()) {
        residue_ += o.residue_;
        if (residue_ >= field_.modulus()) residue_ -= field_.modulus();
    } else {
        rational_ += o.rational_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same(o);
    if (field_.is_finite()) {
        residue_ = residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + field_.modulus() - o.residue_;
    } else {
        rational_ -= o.rational_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same(o);
    if (field_.is_finite())
        residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * o.residue_ % field_.modulus());
    else
        rational_ *= o.rational_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same(o);
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_finite())
        s.residue_ = residue_ == 0 ? 0 : field_.modulus() - residue_;
    else
        s.rational_ = -rational_;
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_finite() ? a.residue_ == b.residue_ : a.rational_ == b.rational_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    a.require_same(b);
    if (a.field_.is_finite()) return a.residue_ <=> b.residue_;
    if (a.rational_ < b.rational_) return std::strong_ordering::less;
    if (a.rational_ > b.rational_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
    if (field_.is_finite()) return std::to_string(residue_);
    return rational_.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace palg
