#include <doctest.h>

#include <random>

#include "palg/polynomial.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::from_int(f, d(rng));
    return m;
}

Subspace random_subspace(Field f, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> k(0, n);
    return random_matrix(f, k(rng), n, rng).row_space();
}

/// Laplace expansion along the first row.
Scalar det_cofactor(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Scalar::one(m.field());
    Scalar total = Scalar::zero(m.field());
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        Matrix minor(m.field(), n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        Scalar term = m(0, c) * det_cofactor(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace

TEST_SUITE("field") {
    TEST_CASE("prime field arithmetic") {
        Scalar a = Scalar::from_int(GF7, 3);
        CHECK((a * a.inverse()).is_one());
        CHECK(Scalar::from_int(GF7, -1).residue() == 6);
        CHECK((Scalar::from_int(GF7, 5) + Scalar::from_int(GF7, 4)).residue() == 2);
        CHECK(Scalar::parse(GF5, "3/2").residue() == 4);
        CHECK_THROWS_AS(Scalar::parse(GF5, "1/5"), std::domain_error);
        CHECK_THROWS_AS(Scalar::zero(GF3).inverse(), std::domain_error);
    }

    TEST_CASE("every nonzero residue has an inverse") {
        for (std::uint32_t p : {2u, 3u, 5u, 7u, 97u}) {
            Field f = Field::prime(p);
            for (std::uint32_t v = 1; v < p; ++v) CHECK((Scalar::from_int(f, v) * Scalar::from_int(f, v).inverse()).is_one());
        }
    }

    TEST_CASE("rationals stay in lowest terms") {
        Scalar a = Scalar::parse(Q, "-6/4");
        CHECK(a.to_string() == "-3/2");
        CHECK(boost::multiprecision::denominator(a.rational()) > 0);
        CHECK((a + Scalar::parse(Q, "3/2")).is_zero());
        CHECK(Scalar::parse(Q, "10/5").to_string() == "2");
    }

    TEST_CASE("malformed coefficients are rejected") {
        for (const char* bad : {"0.5", "1e3", "", "1/", "/2", "x", "1/0", "--1"})
            CHECK_THROWS(Scalar::parse(Q, bad));
    }

    TEST_CASE("modulus must be a prime up to 97") {
        CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
        CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
        CHECK_THROWS_AS(Field::prime(101), std::invalid_argument);
        CHECK(Field::prime(97).name() == "GF(97)");
        CHECK(Field::rationals().name() == "Q");
    }

    TEST_CASE("mixing fields throws") {
        CHECK_THROWS_AS(Scalar::one(GF2) + Scalar::one(GF3), std::invalid_argument);
    }
}

TEST_SUITE("linalg") {
    TEST_CASE("rref examples") {
        CHECK(rref(Matrix::from_ints(Q, {{0, 1}, {1, 0}})) == Matrix::from_ints(Q, {{1, 0}, {0, 1}}));
        CHECK(rref(Matrix::from_ints(Q, {{2, 4}})) == Matrix::from_ints(Q, {{1, 2}}));
        CHECK(rref(Matrix::from_ints(GF2, {{1, 1}, {1, 1}})) == Matrix::from_ints(GF2, {{1, 1}}));
        CHECK(rref(Matrix::zero(Q, 2, 3)).rows() == 0);
    }

    TEST_CASE("rref is idempotent and preserves the row space") {
        std::mt19937 rng(7);
        for (Field f : {Q, GF2, GF3, GF5}) {
            for (int t = 0; t < 40; ++t) {
                Matrix m = random_matrix(f, 1 + t % 4, 1 + t % 5, rng);
                Matrix r = rref(m);
                CHECK(rref(r) == r);
                Subspace sm = m.row_space(), sr = Subspace::from_rref(r);
                CHECK(sm == sr);
                for (const auto& row : m.row_vectors()) CHECK(sr.contains(row));
                for (std::size_t i = 0; i < r.rows(); ++i) CHECK(sm.contains(r.row(i)));
            }
        }
    }

    TEST_CASE("canonical basis shape") {
        std::mt19937 rng(11);
        for (int t = 0; t < 50; ++t) {
            Subspace s = random_subspace(Q, 5, rng);
            const auto& piv = s.pivots();
            for (std::size_t i = 0; i < s.dim(); ++i) {
                CHECK(s.basis()(i, piv[i]).is_one());
                if (i) CHECK(piv[i] > piv[i - 1]);
                for (std::size_t r = 0; r < s.dim(); ++r)
                    if (r != i) CHECK(s.basis()(r, piv[i]).is_zero());
            }
        }
    }

    TEST_CASE("sum and intersection examples") {
        auto e = [](std::size_t i) { return Vector::unit(Q, 3, i); };
        CHECK(sum(span(Q, 3, {e(0)}), span(Q, 3, {e(1)})) == span(Q, 3, {e(0), e(1)}));
        CHECK(intersect(span(Q, 3, {e(0), e(1)}), span(Q, 3, {e(1), e(2)})) == span(Q, 3, {e(1)}));
        std::mt19937 rng(3);
        for (int t = 0; t < 30; ++t) {
            Subspace u = random_subspace(GF3, 4, rng);
            CHECK(intersect(u, u) == u);
        }
        CHECK_THROWS(sum(Subspace::zero(Q, 2), Subspace::zero(Q, 3)));
        CHECK_THROWS(intersect(Subspace::zero(Q, 2), Subspace::zero(GF2, 2)));
    }

    TEST_CASE("dimension formula and element-set intersection") {
        std::mt19937 rng(5);
        const auto zero_alg = constructions::zero(GF3, 3);
        Brute oracle(zero_alg);
        for (int t = 0; t < 60; ++t) {
            Subspace u = random_subspace(GF3, 3, rng), v = random_subspace(GF3, 3, rng);
            CHECK(u.dim() + v.dim() == sum(u, v).dim() + intersect(u, v).dim());
            CHECK(oracle.from(intersect(u, v)) == Brute::meet(oracle.from(u), oracle.from(v)));
        }
        for (int t = 0; t < 30; ++t) {
            Subspace u = random_subspace(Q, 5, rng), v = random_subspace(Q, 5, rng);
            CHECK(u.dim() + v.dim() == sum(u, v).dim() + intersect(u, v).dim());
            Subspace w = intersect(u, v);
            CHECK(u.contains(w));
            CHECK(v.contains(w));
        }
    }

    TEST_CASE("quotient basis completes the smaller subspace") {
        std::mt19937 rng(9);
        for (int t = 0; t < 30; ++t) {
            Subspace u = random_subspace(Q, 5, rng);
            Subspace v = intersect(u, random_subspace(Q, 5, rng));
            Matrix reps = quotient_basis(u, v);
            CHECK(reps.rows() + v.dim() == u.dim());
            std::vector<Vector> all = v.basis_vectors();
            for (const auto& r : reps.row_vectors()) all.push_back(r);
            CHECK(Subspace::span(Q, 5, all) == u);
            QuotientCoordinates qc(u, v);
            for (const auto& b : u.basis_vectors()) CHECK(v.contains(b - qc.lift(qc.project(b))));
        }
    }

    TEST_CASE("kernel and rank") {
        Matrix m = Matrix::from_ints(Q, {{1, 2, 3}, {2, 4, 6}});
        CHECK(m.rank() == 1);
        Subspace k = m.kernel();
        CHECK(k.dim() == 2);
        for (const auto& v : k.basis_vectors()) CHECK(m.apply(v).is_zero());
    }

    TEST_CASE("fitting decomposition") {
        Matrix jordan = Matrix::from_ints(Q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
        CHECK(fitting_null(jordan).is_whole());
        CHECK(fitting_one(jordan).is_zero());
        Matrix inv = Matrix::from_ints(GF3, {{1, 1}, {0, 2}});
        CHECK(fitting_null(inv).is_zero());
        CHECK(fitting_one(inv).is_whole());
        Matrix diag = Matrix::from_ints(Q, {{0, 0}, {0, 1}});
        CHECK(fitting_null(diag) == unit_span(Q, 2, {0}));
        CHECK(fitting_one(diag) == unit_span(Q, 2, {1}));

        std::mt19937 rng(13);
        for (Field f : {Q, GF2, GF3}) {
            for (int t = 0; t < 25; ++t) {
                Matrix m = random_matrix(f, 4, 4, rng, -1, 1);
                Subspace n0 = fitting_null(m), n1 = fitting_one(m);
                CHECK(n0.dim() + n1.dim() == 4);
                CHECK(intersect(n0, n1).is_zero());
                for (const auto& v : n0.basis_vectors()) CHECK(n0.contains(m.apply(v)));
                for (const auto& v : n1.basis_vectors()) CHECK(n1.contains(m.apply(v)));
            }
        }
        CHECK_THROWS(fitting_null(Matrix::zero(Q, 2, 3)));
    }
}

TEST_SUITE("polynomial") {
    TEST_CASE("characteristic polynomial examples") {
        CHECK(char_poly(Matrix::zero(Q, 2, 2)) == Polynomial::from_ints(Q, {0, 0, 1}));
        CHECK(char_poly(Matrix::identity(Q, 3)) == Polynomial::from_ints(Q, {-1, 3, -3, 1}));
        // companion matrix of t^2 - t - 1
        Matrix companion = Matrix::from_ints(Q, {{0, 1}, {1, 1}});
        CHECK(char_poly(companion) == Polynomial::from_ints(Q, {-1, -1, 1}));
        CHECK_THROWS(char_poly(Matrix::zero(Q, 2, 3)));
    }

    TEST_CASE("agrees with cofactor expansion of det(tI - M)") {
        std::mt19937 rng(17);
        for (Field f : {Q, GF2, GF3, GF5}) {
            for (int t = 0; t < 20; ++t) {
                const std::size_t n = 1 + t % 5;
                Matrix m = random_matrix(f, n, n, rng);
                Polynomial cp = char_poly(m);
                CHECK(cp.is_monic());
                CHECK(cp.degree() == static_cast<int>(n));
                // n + 1 sample points determine a degree-n polynomial over Q; over GF(p) test every point
                const long long points = f.is_finite() ? f.modulus() : static_cast<long long>(n) + 1;
                for (long long x = 0; x < points; ++x) {
                    Scalar s = Scalar::from_int(f, x);
                    Matrix shifted = s * Matrix::identity(f, n) - m;
                    CHECK(cp.evaluate(s) == det_cofactor(shifted));
                }
            }
        }
    }

    TEST_CASE("Cayley-Hamilton") {
        std::mt19937 rng(19);
        for (Field f : {Q, GF2, GF3, GF7})
            for (int t = 0; t < 15; ++t) {
                Matrix m = random_matrix(f, 1 + t % 6, 1 + t % 6, rng);
                CHECK(char_poly(m).evaluate(m).is_zero());
            }
    }

    TEST_CASE("roots in the field") {
        auto r = roots_in_field(Polynomial::from_ints(Q, {-1, 0, 1}));
        REQUIRE(r.size() == 2);
        CHECK(r[0].value == Scalar::from_int(Q, -1));
        CHECK(r[1].value == Scalar::from_int(Q, 1));
        CHECK(r[0].multiplicity == 1);
        CHECK(roots_in_field(Polynomial::from_ints(Q, {1, 0, 1})).empty());
        auto g = roots_in_field(Polynomial::from_ints(GF2, {0, 1, 1}));
        REQUIRE(g.size() == 2);
        CHECK(g[0].value.residue() == 0);
        CHECK(g[1].value.residue() == 1);
        // (2t - 1)(t + 3)^2 made monic
        Polynomial p = Polynomial::linear_power(Scalar::parse(Q, "1/2"), 1) * Polynomial::linear_power(Scalar::from_int(Q, -3), 2);
        auto pr = roots_in_field(p);
        REQUIRE(pr.size() == 2);
        CHECK(pr[0].value == Scalar::from_int(Q, -3));
        CHECK(pr[0].multiplicity == 2);
        CHECK(pr[1].value == Scalar::parse(Q, "1/2"));
        auto z = roots_in_field(Polynomial::from_ints(GF3, {0, 0, 0, 1}));
        REQUIRE(z.size() == 1);
        CHECK(z[0].multiplicity == 3);
    }
}
