#include <doctest.h>

#include "palg/lattice.hpp"
#include "palg/series.hpp"
#include "support.hpp"

using namespace testing;

namespace {

using Set = Brute::Set;

std::set<Set> to_sets(Brute& b, const std::vector<Subspace>& v) {
    std::set<Set> out;
    for (const auto& s : v) out.insert(b.from(s));
    return out;
}

std::set<Set> to_sets(Brute& b, const std::vector<AlgebraSubspace>& v) {
    std::set<Set> out;
    for (const auto& s : v) out.insert(b.from(s.space));
    return out;
}

std::vector<PoissonAlgebra> finite_corpus() {
    std::vector<PoissonAlgebra> out;
    for (const auto& e : standard_corpus())
        if (e.algebra.field().is_finite()) out.push_back(e.algebra);
    out.push_back(rotation_lie(GF3));
    return out;
}

}  // namespace

TEST_SUITE("lattice") {
    TEST_CASE("gaussian binomials") {
        CHECK(count_subspaces(2, 2) == 5);
        CHECK(count_subspaces(3, 2) == 16);
        CHECK(count_subspaces(4, 3) == 212);
        CHECK(count_subspaces(5, 2) == 374);
        CHECK(count_subspaces(4, 2, 3) == 130);
        CHECK(count_subspaces(3, 0, 5) == 1);
        CHECK(count_subspaces(3, 4, 5) == 0);
    }

    TEST_CASE("subspace enumeration matches the counts and a BFS over element sets") {
        for (auto [n, q] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {3u, 3u}, {4u, 3u}, {5u, 2u}, {3u, 5u}}) {
            Field f = Field::prime(q);
            auto all = enumerate_subspaces(f, n, wide_budget());
            CHECK(BigInt(all.size()) == count_subspaces(n, q));
            std::set<Subspace> distinct(all.begin(), all.end());
            CHECK(distinct.size() == all.size());
            for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].dim() <= all[i].dim());
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(BigInt(enumerate_subspaces(f, n, k, wide_budget()).size()) == count_subspaces(n, k, q));
            if (n <= 3) {
                Brute b(constructions::zero(f, n));
                CHECK(b.subspaces().size() == all.size());
                CHECK(to_sets(b, all) == std::set<Set>(b.subspaces().begin(), b.subspaces().end()));
            }
        }
    }

    TEST_CASE("budgets") {
        CHECK_THROWS_AS(require_enumerable(Q, 2, LatticeBudget{}), RequiresFiniteField);
        CHECK_THROWS_AS(require_enumerable(GF5, 2, LatticeBudget{}), BudgetExceeded);
        CHECK_NOTHROW(require_enumerable(GF3, 5, LatticeBudget{}));
        CHECK_THROWS_AS(require_enumerable(GF2, 6, LatticeBudget{}), BudgetExceeded);
        LatticeBudget tight;
        tight.max_subspaces = 100;
        CHECK_THROWS_AS(require_enumerable(GF3, 4, tight), BudgetExceeded);
        try {
            require_enumerable(GF5, 2, LatticeBudget{});
        } catch (const BudgetExceeded& e) {
            CHECK(e.budget() == "max_q");
        }
        CHECK_THROWS_AS(frattini(constructions::lie2(Q), LatticeBudget{}), RequiresFiniteField);
    }

    TEST_CASE("anchors: idempotent line") {
        auto p = constructions::idempotent_line(GF3);
        auto r = analyze(p, LatticeBudget{});
        CHECK(r.frattini.ideal.space.is_zero());
        CHECK(r.frattini.frattini.space.is_zero());
        CHECK(r.phi_free);
        CHECK(r.radical.space.is_zero());
        CHECK(r.nilradical.space.is_zero());
        CHECK(r.socle.space.is_whole());
        CHECK(r.classification.kind == MaxIdealClass::FePlusN);
        REQUIRE(r.classification.idempotent.has_value());
        CHECK(*r.classification.idempotent == p.basis(0));
        REQUIRE(r.classification.nilradical.has_value());
        CHECK(r.classification.nilradical->is_zero());
        auto ids = idempotents(p, LatticeBudget{});
        REQUIRE(ids.size() == 1);
        CHECK(ids[0] == p.basis(0));
    }

    TEST_CASE("anchors: heisenberg over GF(2)") {
        auto p = constructions::heisenberg_zero_dot(GF2);
        auto r = analyze(p, LatticeBudget{});
        CHECK(r.frattini.ideal.space == unit_span(GF2, 3, {2}));
        CHECK(r.frattini.frattini.space == unit_span(GF2, 3, {2}));
        CHECK_FALSE(r.phi_free);
        CHECK(r.nilradical.space.is_whole());
        CHECK(r.classification.kind == MaxIdealClass::Nilpotent);
        CHECK(r.classification.all_maximals_ideals);
        CHECK_FALSE(splits_over(p, unit_span(GF2, 3, {2}), LatticeBudget{}).has_value());
        auto mins = minimal_ideals(p, LatticeBudget{});
        REQUIRE(mins.size() == 1);
        CHECK(mins[0].space == unit_span(GF2, 3, {2}));
    }

    TEST_CASE("anchors: corrected xyz over GF(5)") {
        auto p = constructions::xyz_corrected(GF5);
        LatticeBudget b;
        b.max_q = 5;
        auto r = analyze(p, b);
        CHECK(r.radical.space.is_whole());
        CHECK(r.nilradical.space == unit_span(GF5, 3, {0, 2}));
        CHECK(r.classification.kind == MaxIdealClass::Fails);
        REQUIRE(r.classification.non_ideal_maximal.has_value());
        CHECK_FALSE(is_ideal(p, *r.classification.non_ideal_maximal));
        auto mins = minimal_ideals(p, b);
        REQUIRE(mins.size() == 2);
        CHECK(r.socle.space == unit_span(GF5, 3, {0, 2}));
        CHECK(centre(p).space == unit_span(GF5, 3, {2}));
    }

    TEST_CASE("Fe + N splits, with Peirce decomposition") {
        auto p = fe_plus_n(GF3);
        auto r = analyze(p, LatticeBudget{});
        CHECK(r.classification.kind == MaxIdealClass::FePlusN);
        auto n = unit_span(GF3, 2, {1});
        CHECK(r.nilradical.space == n);
        auto c = splits_over(p, n, LatticeBudget{});
        REQUIRE(c.has_value());
        CHECK(c->space.dim() == 1);
        CHECK(is_subalgebra(p, c->space));
        CHECK(intersect(c->space, n).is_zero());
        auto pe = peirce(p, p.basis(0));
        CHECK(pe.ok());
        CHECK(pe.e_part == unit_span(GF3, 2, {0}));
        CHECK(pe.complement == n);
        auto bad = peirce(constructions::heisenberg_zero_dot(GF3), Vector::zero(GF3, 3));
        CHECK(bad.direct);
    }

    TEST_CASE("lattice queries agree with the element-set oracle") {
        LatticeBudget budget = wide_budget();
        std::size_t checked = 0;
        for (const auto& p : finite_corpus()) {
            CAPTURE(p.name());
            Brute b(p);
            auto lattice = SubspaceLattice::build(p, budget);
            CHECK(lattice.all().size() == b.subspaces().size());
            auto subs = b.subalgebras();
            CHECK(to_sets(b, lattice.subalgebras()) == std::set<Set>(subs.begin(), subs.end()));
            CHECK(to_sets(b, lattice.ideals()) == std::set<Set>(b.ideals().begin(), b.ideals().end()));
            auto maxs = b.maximal_subalgebras();
            CHECK(to_sets(b, maximal_subalgebras(p, budget)) == std::set<Set>(maxs.begin(), maxs.end()));
            auto fr = frattini(p, budget);
            CHECK(b.from(fr.frattini.space) == b.frattini_subalgebra());
            CHECK(b.from(fr.ideal.space) == b.frattini_ideal());
            auto mins = b.minimal_ideals();
            CHECK(to_sets(b, minimal_ideals(p, budget)) == std::set<Set>(mins.begin(), mins.end()));
            CHECK(b.from(radical(p, budget).space) == b.radical());
            CHECK(b.from(nilradical(p, budget).space) == b.nilradical());
            CHECK(radical(p, budget).space == radical_oracle(p, budget).space);
            CHECK(nilradical(p, budget).space == nilradical_oracle(p, budget).space);
            CHECK(verify_radical(p, radical(p, budget).space));
            CHECK(verify_nilradical(p, nilradical(p, budget).space));
            std::set<int> ids;
            for (const auto& e : idempotents(p, budget)) ids.insert(b.code(e));
            auto bi = b.idempotents();
            CHECK(ids == std::set<int>(bi.begin(), bi.end()));
            ++checked;
        }
        CHECK(checked >= 150);
    }

    TEST_CASE("one-multiplication lattices") {
        auto p = constructions::lie2(GF3);
        auto lattice = SubspaceLattice::build(p, LatticeBudget{});
        CHECK(lattice.subalgebras(Mult::Dot).size() == lattice.all().size());
        CHECK(lattice.subalgebras(Mult::Bracket) == lattice.subalgebras());
        CHECK(frattini_lie(p, LatticeBudget{}).frattini.space == frattini(p, LatticeBudget{}).frattini.space);
        CHECK(frattini_assoc(p, LatticeBudget{}).frattini.space.is_zero());
        auto idem = constructions::idempotent_line(GF2);
        CHECK(frattini_lie(idem, LatticeBudget{}).frattini.space.is_zero());
    }

    TEST_CASE("radical verification over Q") {
        auto x = constructions::xyz_corrected(Q);
        CHECK(verify_radical(x, x.whole()));
        CHECK(verify_nilradical(x, unit_span(Q, 3, {0, 2})));
        CHECK_FALSE(verify_nilradical(x, unit_span(Q, 3, {2})));
        CHECK_FALSE(verify_nilradical(x, x.whole()));
        CHECK_FALSE(verify_radical(x, unit_span(Q, 3, {1})));
        auto idem = constructions::idempotent_line(Q);
        CHECK(verify_radical(idem, idem.zero_subspace()));
        CHECK_FALSE(verify_radical(idem, idem.whole()));
    }

    TEST_CASE("chief factors") {
        for (const auto& p : {constructions::heisenberg_zero_dot(GF2), constructions::xyz_corrected(GF5), fe_plus_n(GF3),
                              direct_sum(constructions::lie2(GF2), constructions::idempotent_line(GF2))}) {
            auto factors = chief_factors(p, wide_budget());
            std::size_t total = 0;
            for (const auto& f : factors) {
                CHECK(is_ideal(p, f.upper.space));
                CHECK(is_ideal(p, f.lower.space));
                CHECK(f.upper.space.contains(f.lower.space));
                CHECK(f.factor.dim() == f.upper.space.dim() - f.lower.space.dim());
                total += f.factor.dim();
            }
            CHECK(total == p.dim());
            REQUIRE_FALSE(factors.empty());
            CHECK(factors.front().lower.space.is_zero());
            CHECK(factors.back().upper.space.is_whole());
        }
    }

    TEST_CASE("classification is consistent with the lattice") {
        for (const auto& p : finite_corpus()) {
            CAPTURE(p.name());
            auto r = classify_max_ideal_property(p, wide_budget());
            bool all_ideal = true;
            for (const auto& m : maximal_subalgebras(p, wide_budget())) all_ideal = all_ideal && is_ideal(p, m.space);
            CHECK(r.all_maximals_ideals == all_ideal);
            if (r.kind == MaxIdealClass::Nilpotent) CHECK(is_nilpotent(p));
            if (r.kind == MaxIdealClass::Fails) CHECK_FALSE(all_ideal);
            if (r.kind == MaxIdealClass::FePlusN) {
                REQUIRE(r.idempotent.has_value());
                REQUIRE(r.nilradical.has_value());
                CHECK(p.mul_dot(*r.idempotent, *r.idempotent) == *r.idempotent);
                CHECK(r.nilradical->dim() + 1 == p.dim());
            }
        }
    }
}
