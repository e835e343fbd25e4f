#include "palg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace palg {

Polynomial::Polynomial(Field f, std::vector<Scalar> ascending) : field_(f), coeffs_(std::move(ascending)) {
    for (const auto& c : coeffs_)
        if (c.field() != f) throw std::invalid_argument("polynomial coefficient from a different field");
    trim();
}

Polynomial Polynomial::from_ints(Field f, std::initializer_list<long long> ascending) {
    std::vector<Scalar> c;
    for (long long v : ascending) c.push_back(Scalar::from_int(f, v));
    return Polynomial(f, std::move(c));
}

Polynomial Polynomial::linear_power(const Scalar& root, std::size_t multiplicity) {
    Field f = root.field();
    Polynomial linear(f, {-root, Scalar::one(f)});
    Polynomial result(f, {Scalar::one(f)});
    for (std::size_t i = 0; i < multiplicity; ++i) result = result * linear;
    return result;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

Scalar Polynomial::evaluate(const Scalar& t) const {
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
    if (!m.is_square()) throw std::invalid_argument("polynomial evaluated at a non-square matrix");
    const std::size_t n = m.rows();
    Matrix acc = Matrix::zero(field_, n, n);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

std::pair<Polynomial, Scalar> Polynomial::divide_linear(const Scalar& root) const {
    if (coeffs_.empty()) return {Polynomial(field_), Scalar::zero(field_)};
    // synthetic division
    std::vector<Scalar> q(coeffs_.size() - 1, Scalar::zero(field_));
    Scalar carry = Scalar::zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        Scalar v = coeffs_[i] + carry * root;
        if (i == 0) return {Polynomial(field_, std::move(q)), v};
        q[i - 1] = v;
        carry = v;
    }
    return {Polynomial(field_), Scalar::zero(field_)};
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("polynomial field mismatch");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(a.field_, std::move(c));
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        bool unit = coeffs_[i].is_one();
        if (!unit || i == 0) s += coeffs_[i].to_string();
        if (i > 0) s += (unit ? "" : "*") + std::string("t") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
}

Polynomial char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const Field f = m.field();
    const std::size_t n = m.rows();
    // Berkowitz: v holds the coefficients of det(tI - A_r) in descending order, where A_r is
    // the leading r x r block; each step multiplies by a lower-triangular Toeplitz matrix.
    std::vector<Scalar> v{Scalar::one(f)};
    for (std::size_t r = 0; r < n; ++r) {
        // A_{r+1} = [[M, C], [R, a]] with M = A_r.
        const Scalar a = m(r, r);
        std::vector<Scalar> toeplitz;  // first column: 1, -a, -R C, -R M C, ..., -R M^{r-1} C
        toeplitz.push_back(Scalar::one(f));
        toeplitz.push_back(-a);
        std::vector<Scalar> col(r, Scalar::zero(f));  // M^k C
        for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            Scalar rc = Scalar::zero(f);
            for (std::size_t i = 0; i < r; ++i) rc += m(r, i) * col[i];
            toeplitz.push_back(-rc);
            std::vector<Scalar> next(r, Scalar::zero(f));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * col[j];
            col = std::move(next);
        }
        // new v (length r+2) = T * v, T is (r+2) x (r+1) lower-triangular Toeplitz.
        std::vector<Scalar> w(r + 2, Scalar::zero(f));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] += toeplitz[i - j] * v[j];
        v = std::move(w);
    }
    std::reverse(v.begin(), v.end());
    return Polynomial(f, std::move(v));
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Scalar> rational_root_candidates(const Polynomial& p) {
    // Scale to integer coefficients; p(0) != 0 is assumed by the caller.
    const Field f = p.field();
    BigInt lcm = 1;
    for (const auto& c : p.coefficients()) {
        BigInt d = boost::multiprecision::denominator(c.rational());
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    BigRational lead = p.coefficients().back().rational() * lcm;
    BigRational constant = p.coefficients().front().rational() * lcm;
    std::vector<Scalar> out;
    for (const auto& u : positive_divisors(boost::multiprecision::numerator(constant)))
        for (const auto& v : positive_divisors(boost::multiprecision::numerator(lead))) {
            BigRational q(u, v);
            out.push_back(Scalar::from_rational(f, q));
            out.push_back(Scalar::from_rational(f, -q));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<Root> roots_in_field(const Polynomial& poly) {
    if (poly.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    const Field f = poly.field();
    std::vector<Root> roots;
    Polynomial p = poly;
    auto strip = [&](const Scalar& r) {
        std::size_t mult = 0;
        while (p.degree() > 0) {
            auto [q, rem] = p.divide_linear(r);
            if (!rem.is_zero()) break;
            p = std::move(q);
            ++mult;
        }
        if (mult > 0) roots.push_back({r, mult});
    };
    if (f.is_finite()) {
        for (std::uint32_t x = 0; x < f.modulus() && p.degree() > 0; ++x) strip(Scalar::from_int(f, x));
        return roots;
    }
    strip(Scalar::zero(f));
    if (p.degree() <= 0) return roots;
    for (const auto& cand : rational_root_candidates(p)) {
        if (p.degree() <= 0) break;
        strip(cand);
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
    return roots;
}

}  // namespace palg
