#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "palg/algebra.hpp"

namespace palg {

/// Limits on exhaustive enumeration. Exceeding any of them is an error.
struct LatticeBudget {
    std::size_t max_dim = 5;
    std::uint32_t max_q = 3;
    std::uint64_t max_subspaces = 1'000'000;
    std::uint64_t max_elements = 100'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string budget, const std::string& detail)
        : std::runtime_error("budget exceeded (" + budget + "): " + detail), budget_(std::move(budget)) {}
    const std::string& budget() const noexcept { return budget_; }

private:
    std::string budget_;
};

class RequiresFiniteField : public std::invalid_argument {
public:
    explicit RequiresFiniteField(const std::string& op)
        : std::invalid_argument(op + " requires a finite field; over Q use the verify_* forms") {}
};

/// Gaussian binomial [n choose k]_q and the total number of subspaces of F_q^n.
BigInt count_subspaces(std::size_t n, std::size_t k, std::uint32_t q);
BigInt count_subspaces(std::size_t n, std::uint32_t q);

/// Throws BudgetExceeded / RequiresFiniteField unless every subspace of F^n may be enumerated.
void require_enumerable(Field f, std::size_t n, const LatticeBudget& budget);

/// Visits every subspace of F_q^n exactly once in canonical form, grouped by dimension,
/// then by pivot pattern, then by the free entries in lexicographic order.
void for_each_subspace(Field f, std::size_t n, const LatticeBudget& budget,
                       const std::function<void(const Subspace&)>& visit);
std::vector<Subspace> enumerate_subspaces(Field f, std::size_t n, const LatticeBudget& budget);
/// Only the subspaces of dimension k.
std::vector<Subspace> enumerate_subspaces(Field f, std::size_t n, std::size_t k, const LatticeBudget& budget);

/// Closure data for every subspace of a finite-field algebra.
class SubspaceLattice {
public:
    static SubspaceLattice build(const PoissonAlgebra& p, const LatticeBudget& budget);

    /// Subalgebras under both multiplications, or under one only.
    const std::vector<Subspace>& subalgebras(Mult m = Mult::Both) const;
    const std::vector<Subspace>& ideals() const noexcept { return ideals_; }
    const std::vector<Subspace>& all() const noexcept { return all_; }

    std::vector<Subspace> maximal_subalgebras(Mult m = Mult::Both) const;

private:
    std::vector<Subspace> all_;
    std::vector<Subspace> subalgebras_;
    std::vector<Subspace> dot_subalgebras_;
    std::vector<Subspace> bracket_subalgebras_;
    std::vector<Subspace> ideals_;
};

std::vector<AlgebraSubspace> maximal_subalgebras(const PoissonAlgebra& p, const LatticeBudget& budget,
                                                 Mult m = Mult::Both);

/// F is the intersection of the maximal subalgebras (P when there are none); phi is the
/// largest ideal contained in F.
struct FrattiniPair {
    AlgebraSubspace frattini;
    AlgebraSubspace ideal;
};

FrattiniPair frattini(const PoissonAlgebra& p, const LatticeBudget& budget);
FrattiniPair frattini_assoc(const PoissonAlgebra& p, const LatticeBudget& budget);
FrattiniPair frattini_lie(const PoissonAlgebra& p, const LatticeBudget& budget);
FrattiniPair frattini(const SubspaceLattice& lattice, const PoissonAlgebra& p, Mult m = Mult::Both);

/// Minimal elements among the ideal closures of all lines, in canonical order.
std::vector<AlgebraSubspace> minimal_ideals(const PoissonAlgebra& p, const LatticeBudget& budget);
AlgebraSubspace socle(const PoissonAlgebra& p, const LatticeBudget& budget);
AlgebraSubspace zero_socle(const PoissonAlgebra& p, const LatticeBudget& budget);

/// Recursive: pulls back the radical of P/B for a solvable minimal ideal B.
AlgebraSubspace radical(const PoissonAlgebra& p, const LatticeBudget& budget);
/// Sum of the ideal closures of lines whose closure is nilpotent.
AlgebraSubspace nilradical(const PoissonAlgebra& p, const LatticeBudget& budget);

/// Largest solvable (resp. nilpotent) ideal among all enumerated ideals.
AlgebraSubspace radical_oracle(const PoissonAlgebra& p, const LatticeBudget& budget);
AlgebraSubspace nilradical_oracle(const PoissonAlgebra& p, const LatticeBudget& budget);

struct Verification {
    bool ok = true;
    std::string reason;
    explicit operator bool() const noexcept { return ok; }
};

/// Field-independent checks of a candidate: ideal, solvable (resp. nilpotent), and no
/// strictly larger solvable (resp. nilpotent) ideal among the ideal closures of
/// candidate + span(e_i).
Verification verify_radical(const PoissonAlgebra& p, const Subspace& candidate);
Verification verify_nilradical(const PoissonAlgebra& p, const Subspace& candidate);

/// A subalgebra C with P = B + C and B n C = 0, first in canonical order, if any.
std::optional<AlgebraSubspace> splits_over(const PoissonAlgebra& p, const Subspace& b, const LatticeBudget& budget);

/// All nonzero x with x.x = x, by exhaustive element scan.
std::vector<Element> idempotents(const PoissonAlgebra& p, const LatticeBudget& budget);

struct Peirce {
    Subspace e_part;
    Subspace complement;
    /// e_part + complement = P with trivial intersection.
    bool direct = false;
    /// e.x = x on e_part and e.x = 0 on complement.
    bool eigen = false;
    /// e_part . complement = 0.
    bool orthogonal = false;
    /// [e, x] = 0 for every x.
    bool bracket_central = false;

    bool ok() const noexcept { return direct && eigen && orthogonal && bracket_central; }
};

Peirce peirce(const PoissonAlgebra& p, const Element& e);

enum class MaxIdealClass { Nilpotent, FePlusN, Fails, Other };

std::string_view to_string(MaxIdealClass c) noexcept;

struct MaxIdealReport {
    MaxIdealClass kind = MaxIdealClass::Fails;
    bool all_maximals_ideals = false;
    /// A maximal subalgebra that is not an ideal, when kind is Fails.
    std::optional<Subspace> non_ideal_maximal;
    std::optional<Element> idempotent;
    std::optional<Subspace> nilradical;
};

MaxIdealReport classify_max_ideal_property(const PoissonAlgebra& p, const LatticeBudget& budget);

struct ChiefFactor {
    AlgebraSubspace upper;
    AlgebraSubspace lower;
    PoissonAlgebra factor;
};

/// One chief series, refined bottom-up by picking the first minimal ideal of each quotient.
std::vector<ChiefFactor> chief_factors(const PoissonAlgebra& p, const LatticeBudget& budget);

struct StructureReport {
    AlgebraSubspace radical;
    AlgebraSubspace nilradical;
    AlgebraSubspace socle;
    AlgebraSubspace zero_socle;
    FrattiniPair frattini;
    FrattiniPair frattini_assoc;
    FrattiniPair frattini_lie;
    bool phi_free = false;
    std::optional<AlgebraSubspace> splitting;
    MaxIdealReport classification;
};

/// Computes every field and checks the report invariants; a failed invariant throws std::logic_error.
StructureReport analyze(const PoissonAlgebra& p, const LatticeBudget& budget);

}  // namespace palg
