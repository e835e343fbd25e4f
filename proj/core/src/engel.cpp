#include "palg/engel.hpp"

#include <stdexcept>

namespace palg {

EngelPair engel(const PoissonAlgebra& p, const Element& a) {
    return EngelPair{a, classify(p, fitting_null(p.p_operator(a))), classify(p, fitting_null(p.q_operator(a)))};
}

SplitPair s_k_split(const PoissonAlgebra& p, const Element& a) {
    const Matrix q = p.q_operator(a);
    Polynomial f(p.field(), {Scalar::one(p.field())});
    for (const auto& root : roots_in_field(char_poly(q))) f = f * Polynomial::linear_power(root.value, root.multiplicity);
    const Matrix fq = f.evaluate(q);
    return SplitPair{a, f, classify(p, fq.kernel()), fq.column_space()};
}

namespace {

Element apply_power(const Matrix& m, Element x, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) x = m.apply(x);
    return x;
}

}  // namespace

Element pa_bracket_identity_residual(const PoissonAlgebra& p, const Element& a, const Element& x, const Element& y,
                                     std::size_t n) {
    if (n == 0) throw std::invalid_argument("identity requires n >= 1");
    const Matrix pa = p.p_operator(a);
    Element lhs = apply_power(pa, p.mul_bracket(x, y), n);
    Element pnx = apply_power(pa, x, n);
    Element pn1x = apply_power(pa, x, n - 1);
    Element rhs = p.mul_bracket(pnx, y) -
                  Scalar::from_int(p.field(), static_cast<long long>(n)) * p.mul_dot(pn1x, p.mul_bracket(a, y));
    return lhs - rhs;
}

Element qa_derivation_power_residual(const PoissonAlgebra& p, const Element& a, const Element& x, const Element& y,
                                     std::size_t r) {
    const Matrix qa = p.q_operator(a);
    Element lhs = apply_power(qa, p.mul_dot(x, y), r);
    std::vector<Element> qx{x}, qy{y};
    for (std::size_t i = 1; i <= r; ++i) {
        qx.push_back(qa.apply(qx.back()));
        qy.push_back(qa.apply(qy.back()));
    }
    Element rhs = p.zero_element();
    BigInt binom = 1;  // C(r, i)
    for (std::size_t i = 0; i <= r; ++i) {
        rhs.add_scaled(Scalar::from_rational(p.field(), BigRational(binom)), p.mul_dot(qx[i], qy[r - i]));
        binom = binom * (r - i) / (i + 1);
    }
    return lhs - rhs;
}

}  // namespace palg
