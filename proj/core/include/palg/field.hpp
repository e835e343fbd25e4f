#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace palg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// The ground field: either the rationals or a prime field GF(p), 2 <= p <= 97.
class Field {
public:
    enum class Kind : std::uint8_t { Rationals, Prime };

    static constexpr std::uint32_t kMaxModulus = 97;

    static Field rationals() noexcept { return Field{Kind::Rationals, 0}; }
    /// Throws std::invalid_argument unless p is a prime in [2, 97].
    static Field prime(std::uint32_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Prime; }
    /// Zero for the rationals.
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t characteristic() const noexcept { return modulus_; }

    /// "Q" or "GF(p)".
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    constexpr Field(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint32_t modulus_;
};

bool is_prime(std::uint32_t n) noexcept;

std::ostream& operator<<(std::ostream& os, const Field& f);

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator (cpp_rational normalizes); residues live in [0, p).
///
/// Arithmetic between scalars of different fields throws std::invalid_argument.
class Scalar {
public:
    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return from_int(f, 1); }
    static Scalar from_int(Field f, long long v);
    /// Throws std::domain_error when the denominator vanishes in GF(p).
    static Scalar from_rational(Field f, const BigRational& q);
    /// Accepts "-12" or "3/4". Anything else (including "0.5") throws std::invalid_argument.
    static Scalar parse(Field f, std::string_view text);

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Residue in [0, p); only meaningful over a prime field.
    std::uint32_t residue() const noexcept { return residue_; }
    /// Exact rational value; only meaningful over Q.
    const BigRational& rational() const noexcept { return rational_; }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Total order: residues numerically for GF(p), values for Q.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// "3", "-1/2", or the residue for GF(p).
    std::string to_string() const;

private:
    explicit Scalar(Field f) : field_(f) {}
    void require_same(const Scalar& o) const;

    Field field_;
    std::uint32_t residue_ = 0;
    BigRational rational_{};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace palg
