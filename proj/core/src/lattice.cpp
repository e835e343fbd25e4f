#include "palg/lattice.hpp"

#include <algorithm>

#include "palg/series.hpp"

namespace palg {

BigInt count_subspaces(std::size_t n, std::size_t k, std::uint32_t q) {
    if (k > n) return 0;
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= BigInt(pow(BigInt(q), static_cast<unsigned>(n - i))) - 1;
        den *= BigInt(pow(BigInt(q), static_cast<unsigned>(i + 1))) - 1;
    }
    return num / den;
}

BigInt count_subspaces(std::size_t n, std::uint32_t q) {
    BigInt total = 0;
    for (std::size_t k = 0; k <= n; ++k) total += count_subspaces(n, k, q);
    return total;
}

void require_enumerable(Field f, std::size_t n, const LatticeBudget& budget) {
    if (!f.is_finite()) throw RequiresFiniteField("subspace enumeration");
    if (n > budget.max_dim)
        throw BudgetExceeded("max_dim", "dimension " + std::to_string(n) + " > " + std::to_string(budget.max_dim));
    if (f.modulus() > budget.max_q)
        throw BudgetExceeded("max_q", "modulus " + std::to_string(f.modulus()) + " > " + std::to_string(budget.max_q));
    BigInt count = count_subspaces(n, f.modulus());
    if (count > budget.max_subspaces)
        throw BudgetExceeded("max_subspaces",
                             count.str() + " subspaces > " + std::to_string(budget.max_subspaces));
}

namespace {

// Calls visit for every k-subset of {0..n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        visit(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

void for_each_subspace_of_dim(Field f, std::size_t n, std::size_t k, const std::function<void(const Subspace&)>& visit) {
    if (k == 0) {
        visit(Subspace::zero(f, n));
        return;
    }
    const std::uint32_t q = f.modulus();
    for_each_combination(n, k, [&](const std::vector<std::size_t>& pivots) {
        std::vector<bool> is_pivot(n, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = pivots[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free.emplace_back(r, c);
        Matrix m(f, k, n);
        for (std::size_t r = 0; r < k; ++r) m(r, pivots[r]) = Scalar::one(f);
        std::vector<std::uint32_t> digits(free.size(), 0);
        while (true) {
            visit(Subspace::from_rref(m));
            // odometer, last free entry fastest
            std::size_t i = free.size();
            while (i > 0) {
                --i;
                auto [r, c] = free[i];
                if (++digits[i] < q) {
                    m(r, c) = Scalar::from_int(f, digits[i]);
                    break;
                }
                digits[i] = 0;
                m(r, c) = Scalar::zero(f);
                if (i == 0) return;
            }
            if (free.empty()) return;
        }
    });
}

}  // namespace

void for_each_subspace(Field f, std::size_t n, const LatticeBudget& budget,
                       const std::function<void(const Subspace&)>& visit) {
    require_enumerable(f, n, budget);
    for (std::size_t k = 0; k <= n; ++k) for_each_subspace_of_dim(f, n, k, visit);
}

std::vector<Subspace> enumerate_subspaces(Field f, std::size_t n, const LatticeBudget& budget) {
    std::vector<Subspace> out;
    for_each_subspace(f, n, budget, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

std::vector<Subspace> enumerate_subspaces(Field f, std::size_t n, std::size_t k, const LatticeBudget& budget) {
    require_enumerable(f, n, budget);
    std::vector<Subspace> out;
    for_each_subspace_of_dim(f, n, k, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

SubspaceLattice SubspaceLattice::build(const PoissonAlgebra& p, const LatticeBudget& budget) {
    SubspaceLattice l;
    for_each_subspace(p.field(), p.dim(), budget, [&](const Subspace& s) {
        l.all_.push_back(s);
        const bool dot = is_subalgebra(p, s, Mult::Dot);
        const bool br = is_subalgebra(p, s, Mult::Bracket);
        if (dot) l.dot_subalgebras_.push_back(s);
        if (br) l.bracket_subalgebras_.push_back(s);
        if (dot && br) {
            l.subalgebras_.push_back(s);
            if (is_ideal(p, s)) l.ideals_.push_back(s);
        }
    });
    return l;
}

const std::vector<Subspace>& SubspaceLattice::subalgebras(Mult m) const {
    switch (m) {
        case Mult::Dot: return dot_subalgebras_;
        case Mult::Bracket: return bracket_subalgebras_;
        case Mult::Both: break;
    }
    return subalgebras_;
}

std::vector<Subspace> SubspaceLattice::maximal_subalgebras(Mult m) const {
    const auto& subs = subalgebras(m);
    std::vector<Subspace> out;
    for (const auto& s : subs) {
        if (s.is_whole()) continue;
        bool maximal = true;
        for (const auto& t : subs) {
            if (t.is_whole() || t.dim() <= s.dim()) continue;
            if (t.contains(s)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

std::vector<AlgebraSubspace> maximal_subalgebras(const PoissonAlgebra& p, const LatticeBudget& budget, Mult m) {
    std::vector<AlgebraSubspace> out;
    for (auto& s : SubspaceLattice::build(p, budget).maximal_subalgebras(m)) out.push_back(classify(p, s));
    return out;
}

FrattiniPair frattini(const SubspaceLattice& lattice, const PoissonAlgebra& p, Mult m) {
    Subspace f = p.whole();
    for (const auto& s : lattice.maximal_subalgebras(m)) f = intersect(f, s);
    Subspace phi = ideal_core(p, f, m);
    return FrattiniPair{classify(p, f), classify(p, phi)};
}

FrattiniPair frattini(const PoissonAlgebra& p, const LatticeBudget& budget) {
    return frattini(SubspaceLattice::build(p, budget), p, Mult::Both);
}

FrattiniPair frattini_assoc(const PoissonAlgebra& p, const LatticeBudget& budget) {
    return frattini(SubspaceLattice::build(p, budget), p, Mult::Dot);
}

FrattiniPair frattini_lie(const PoissonAlgebra& p, const LatticeBudget& budget) {
    return frattini(SubspaceLattice::build(p, budget), p, Mult::Bracket);
}

std::vector<AlgebraSubspace> minimal_ideals(const PoissonAlgebra& p, const LatticeBudget& budget) {
    std::vector<Subspace> closures;
    if (p.dim() > 0) {
        require_enumerable(p.field(), p.dim(), budget);
        for_each_subspace_of_dim(p.field(), p.dim(), 1, [&](const Subspace& line) {
            Subspace c = closure_ideal(p, line).space;
            if (std::find(closures.begin(), closures.end(), c) == closures.end()) closures.push_back(std::move(c));
        });
    }
    std::sort(closures.begin(), closures.end());
    std::vector<AlgebraSubspace> out;
    for (const auto& c : closures) {
        bool minimal = true;
        for (const auto& d : closures)
            if (d.dim() < c.dim() && c.contains(d)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(AlgebraSubspace{c, Closure::Ideal});
    }
    return out;
}

AlgebraSubspace socle(const PoissonAlgebra& p, const LatticeBudget& budget) {
    Subspace s = p.zero_subspace();
    for (const auto& b : minimal_ideals(p, budget)) s = sum(s, b.space);
    return AlgebraSubspace{s, Closure::Ideal};
}

AlgebraSubspace zero_socle(const PoissonAlgebra& p, const LatticeBudget& budget) {
    Subspace s = p.zero_subspace();
    for (const auto& b : minimal_ideals(p, budget))
        if (is_zero_subalgebra(p, b.space)) s = sum(s, b.space);
    return AlgebraSubspace{s, Closure::Ideal};
}

AlgebraSubspace radical(const PoissonAlgebra& p, const LatticeBudget& budget) {
    for (const auto& b : minimal_ideals(p, budget)) {
        if (!is_solvable(p, b.space)) continue;
        Quotient q = quotient(p, b.space);
        return AlgebraSubspace{q.preimage(radical(q.algebra, budget).space), Closure::Ideal};
    }
    return AlgebraSubspace{p.zero_subspace(), Closure::Ideal};
}

AlgebraSubspace nilradical(const PoissonAlgebra& p, const LatticeBudget& budget) {
    Subspace n = p.zero_subspace();
    if (p.dim() > 0) {
        require_enumerable(p.field(), p.dim(), budget);
        for_each_subspace_of_dim(p.field(), p.dim(), 1, [&](const Subspace& line) {
            if (n.contains(line)) return;
            Subspace c = closure_ideal(p, line).space;
            if (is_nilpotent(p, c)) n = sum(n, c);
        });
    }
    if (!is_ideal(p, n) || !is_nilpotent(p, n)) throw std::logic_error("nilradical: sum of nilpotent ideals is not nilpotent");
    return AlgebraSubspace{n, Closure::Ideal};
}

namespace {

AlgebraSubspace largest_ideal_with(const PoissonAlgebra& p, const LatticeBudget& budget,
                                   bool (*property)(const PoissonAlgebra&, const Subspace&), const char* what) {
    std::vector<Subspace> found;
    const SubspaceLattice lattice = SubspaceLattice::build(p, budget);
    for (const auto& i : lattice.ideals())
        if (property(p, i)) found.push_back(i);
    // ideals() is ordered by dimension, so the last one is largest
    const Subspace& best = found.back();
    for (const auto& i : found)
        if (!best.contains(i)) throw std::logic_error(std::string(what) + " oracle: no largest ideal");
    return AlgebraSubspace{best, Closure::Ideal};
}

}  // namespace

AlgebraSubspace radical_oracle(const PoissonAlgebra& p, const LatticeBudget& budget) {
    return largest_ideal_with(
        p, budget, [](const PoissonAlgebra& a, const Subspace& s) { return is_solvable(a, s); }, "radical");
}

AlgebraSubspace nilradical_oracle(const PoissonAlgebra& p, const LatticeBudget& budget) {
    return largest_ideal_with(
        p, budget, [](const PoissonAlgebra& a, const Subspace& s) { return is_nilpotent(a, s); }, "nilradical");
}

namespace {

Verification verify_largest(const PoissonAlgebra& p, const Subspace& candidate,
                            bool (*property)(const PoissonAlgebra&, const Subspace&), const char* what) {
    if (!is_ideal(p, candidate)) return {false, "candidate is not an ideal"};
    if (!property(p, candidate)) return {false, std::string("candidate is not ") + what};
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (candidate.contains(p.basis(i))) continue;
        Subspace bigger = closure_ideal(p, sum(candidate, Subspace::span(p.field(), p.dim(), {p.basis(i)}))).space;
        if (property(p, bigger))
            return {false, "closure with e_" + std::to_string(i) + " is a larger " + what + " ideal"};
    }
    return {};
}

}  // namespace

Verification verify_radical(const PoissonAlgebra& p, const Subspace& candidate) {
    return verify_largest(
        p, candidate, [](const PoissonAlgebra& a, const Subspace& s) { return is_solvable(a, s); }, "solvable");
}

Verification verify_nilradical(const PoissonAlgebra& p, const Subspace& candidate) {
    return verify_largest(
        p, candidate, [](const PoissonAlgebra& a, const Subspace& s) { return is_nilpotent(a, s); }, "nilpotent");
}

std::optional<AlgebraSubspace> splits_over(const PoissonAlgebra& p, const Subspace& b, const LatticeBudget& budget) {
    if (b.is_zero()) return classify(p, p.whole());
    require_enumerable(p.field(), p.dim(), budget);
    std::optional<AlgebraSubspace> found;
    for_each_subspace_of_dim(p.field(), p.dim(), p.dim() - b.dim(), [&](const Subspace& c) {
        if (found || !intersect(b, c).is_zero()) return;
        if (is_subalgebra(p, c)) found = classify(p, c);
    });
    return found;
}

std::vector<Element> idempotents(const PoissonAlgebra& p, const LatticeBudget& budget) {
    if (!p.field().is_finite()) throw RequiresFiniteField("idempotent scan");
    BigInt count = pow(BigInt(p.field().modulus()), static_cast<unsigned>(p.dim()));
    if (count > budget.max_elements)
        throw BudgetExceeded("max_elements", count.str() + " elements > " + std::to_string(budget.max_elements));
    const std::uint32_t q = p.field().modulus();
    std::vector<Element> out;
    Element x = p.zero_element();
    std::vector<std::uint32_t> digits(p.dim(), 0);
    while (true) {
        std::size_t i = p.dim();
        while (i > 0) {
            --i;
            if (++digits[i] < q) {
                x[i] = Scalar::from_int(p.field(), digits[i]);
                break;
            }
            digits[i] = 0;
            x[i] = Scalar::zero(p.field());
            if (i == 0) return out;
        }
        if (p.dim() == 0) return out;
        if (p.mul_dot(x, x) == x) out.push_back(x);
    }
}

Peirce peirce(const PoissonAlgebra& p, const Element& e) {
    const Matrix pe = p.p_operator(e);
    const Matrix one_minus = Matrix::identity(p.field(), p.dim()) - pe;
    Peirce r{pe.column_space(), one_minus.column_space()};
    r.direct = intersect(r.e_part, r.complement).is_zero() && r.e_part.dim() + r.complement.dim() == p.dim();
    r.eigen = true;
    for (const auto& v : r.e_part.basis_vectors())
        if (p.mul_dot(e, v) != v) r.eigen = false;
    for (const auto& v : r.complement.basis_vectors())
        if (!p.mul_dot(e, v).is_zero()) r.eigen = false;
    r.orthogonal = subspace_product_dot(p, r.e_part, r.complement).is_zero();
    r.bracket_central = p.q_operator(e).is_zero();
    return r;
}

std::string_view to_string(MaxIdealClass c) noexcept {
    switch (c) {
        case MaxIdealClass::Nilpotent: return "nilpotent";
        case MaxIdealClass::FePlusN: return "Fe-plus-N";
        case MaxIdealClass::Fails: return "fails";
        case MaxIdealClass::Other: return "other";
    }
    return "unknown";
}

MaxIdealReport classify_max_ideal_property(const PoissonAlgebra& p, const LatticeBudget& budget) {
    MaxIdealReport r;
    for (const auto& m : SubspaceLattice::build(p, budget).maximal_subalgebras()) {
        if (!is_ideal(p, m)) {
            r.non_ideal_maximal = m;
            return r;
        }
    }
    r.all_maximals_ideals = true;
    if (is_nilpotent(p)) {
        r.kind = MaxIdealClass::Nilpotent;
        r.nilradical = p.whole();
        return r;
    }
    r.kind = MaxIdealClass::Other;
    const Subspace n = nilradical(p, budget).space;
    r.nilradical = n;
    for (const auto& e : idempotents(p, budget)) {
        Peirce pd = peirce(p, e);
        if (!pd.ok() || !is_assoc_nilpotent(p, pd.complement)) continue;
        r.idempotent = e;
        const Subspace fe = Subspace::span(p.field(), p.dim(), {e});
        const bool direct = intersect(fe, n).is_zero() && fe.dim() + n.dim() == p.dim();
        if (direct && is_ideal(p, fe) && subspace_product(p, fe, n).is_zero()) r.kind = MaxIdealClass::FePlusN;
        return r;
    }
    return r;
}

std::vector<ChiefFactor> chief_factors(const PoissonAlgebra& p, const LatticeBudget& budget) {
    std::vector<ChiefFactor> out;
    Subspace lower = p.zero_subspace();
    while (!lower.is_whole()) {
        Quotient q = quotient(p, lower);
        auto mins = minimal_ideals(q.algebra, budget);
        Subspace upper = q.preimage(mins.front().space);
        Restriction r = restrict_to(p, upper);
        PoissonAlgebra factor = quotient(r.algebra, r.to_local(lower)).algebra;
        out.push_back(ChiefFactor{{upper, Closure::Ideal}, {lower, Closure::Ideal}, std::move(factor)});
        lower = upper;
    }
    return out;
}

namespace {

void require(bool condition, const char* what) {
    if (!condition) throw std::logic_error(std::string("structure report invariant failed: ") + what);
}

}  // namespace

StructureReport analyze(const PoissonAlgebra& p, const LatticeBudget& budget) {
    const SubspaceLattice lattice = SubspaceLattice::build(p, budget);
    StructureReport r{
        radical(p, budget),
        nilradical(p, budget),
        socle(p, budget),
        zero_socle(p, budget),
        frattini(lattice, p, Mult::Both),
        frattini(lattice, p, Mult::Dot),
        frattini(lattice, p, Mult::Bracket),
        false,
        std::nullopt,
        classify_max_ideal_property(p, budget),
    };
    r.phi_free = r.frattini.ideal.space.is_zero();
    r.splitting = splits_over(p, r.zero_socle.space, budget);

    require(is_ideal(p, r.radical.space) && is_solvable(p, r.radical.space), "R is a solvable ideal");
    require(is_ideal(p, r.nilradical.space) && is_nilpotent(p, r.nilradical.space), "N is a nilpotent ideal");
    require(r.radical.space.contains(r.nilradical.space), "N inside R");
    require(r.socle.space.contains(r.zero_socle.space), "zero socle inside socle");
    require(is_ideal(p, r.socle.space) && is_ideal(p, r.zero_socle.space), "socles are ideals");
    for (const FrattiniPair* f : {&r.frattini, &r.frattini_assoc, &r.frattini_lie})
        require(f->frattini.space.contains(f->ideal.space), "phi inside F");
    require(r.frattini.ideal.verified == Closure::Ideal, "phi is an ideal");
    require(r.frattini.frattini.verified != Closure::None, "F is a subalgebra");
    return r;
}

}  // namespace palg
