#pragma once

#include <string>
#include <utility>
#include <vector>

#include "palg/linalg.hpp"

namespace palg {

/// Univariate polynomial with coefficients stored in ascending degree order.
/// The zero polynomial has no coefficients.
class Polynomial {
public:
    explicit Polynomial(Field f) : field_(f) {}
    Polynomial(Field f, std::vector<Scalar> ascending);
    static Polynomial from_ints(Field f, std::initializer_list<long long> ascending);
    /// (t - root)^multiplicity
    static Polynomial linear_power(const Scalar& root, std::size_t multiplicity);

    Field field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
    Scalar coefficient(std::size_t i) const;

    Scalar evaluate(const Scalar& t) const;
    /// Horner evaluation at a square matrix.
    Matrix evaluate(const Matrix& m) const;

    /// Division by (t - root); returns quotient and remainder.
    std::pair<Polynomial, Scalar> divide_linear(const Scalar& root) const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    std::string to_string() const;

private:
    void trim();

    Field field_;
    std::vector<Scalar> coeffs_;
};

/// Monic det(tI - m), by Berkowitz's division-free recurrence.
Polynomial char_poly(const Matrix& m);

struct Root {
    Scalar value;
    std::size_t multiplicity;
};

/// Roots of a nonzero polynomial that lie in its field, in increasing order.
/// Exhaustive trial over GF(p); rational-root search over Q.
std::vector<Root> roots_in_field(const Polynomial& p);

}  // namespace palg
