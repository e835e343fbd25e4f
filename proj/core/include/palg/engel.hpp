#pragma once

#include "palg/algebra.hpp"
#include "palg/polynomial.hpp"

namespace palg {

/// Fitting-null components of left dot- and bracket-multiplication by an element.
struct EngelPair {
    Element element;
    AlgebraSubspace engel_assoc;
    AlgebraSubspace engel_lie;
};

EngelPair engel(const PoissonAlgebra& p, const Element& a);

/// s_part = ker f(Q_a), k_part = im f(Q_a), where f = prod (t - lambda)^r over the
/// eigenvalues of Q_a lying in the field, with algebraic multiplicities r.
struct SplitPair {
    Element element;
    Polynomial splitting_poly;
    AlgebraSubspace s_part;
    Subspace k_part;
};

SplitPair s_k_split(const PoissonAlgebra& p, const Element& a);

/// P_a^n([x,y]) - [P_a^n(x), y] + n P_a^{n-1}(x).[a,y]; zero in every Poisson algebra.
Element pa_bracket_identity_residual(const PoissonAlgebra& p, const Element& a, const Element& x, const Element& y,
                                     std::size_t n);

/// Q_a^r(x.y) - sum_i C(r,i) Q_a^i(x).Q_a^{r-i}(y); zero in every Poisson algebra.
Element qa_derivation_power_residual(const PoissonAlgebra& p, const Element& a, const Element& x, const Element& y,
                                     std::size_t r);

}  // namespace palg
