#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "palg/corpus.hpp"
#include "palg/lattice.hpp"

#ifndef PALG_TEST_DATA_DIR
#define PALG_TEST_DATA_DIR "tests/data"
#endif
#ifndef PALG_SOURCE_DIR
#define PALG_SOURCE_DIR "."
#endif

namespace testing {

using namespace palg;

inline const Field Q = Field::rationals();
inline const Field GF2 = Field::prime(2);
inline const Field GF3 = Field::prime(3);
inline const Field GF5 = Field::prime(5);
inline const Field GF7 = Field::prime(7);

inline std::string data_path(const std::string& name) { return std::string(PALG_TEST_DATA_DIR) + "/" + name; }

inline Vector vec(Field f, std::initializer_list<long long> v) { return Vector::from_ints(f, v); }

inline Subspace span(Field f, std::size_t n, std::initializer_list<Vector> vs) { return Subspace::span(f, n, vs); }

inline Subspace unit_span(Field f, std::size_t n, std::initializer_list<std::size_t> idx) {
    std::vector<Vector> vs;
    for (auto i : idx) vs.push_back(Vector::unit(f, n, i));
    return Subspace::span(f, n, vs);
}

inline LatticeBudget wide_budget() {
    LatticeBudget b;
    b.max_q = 7;
    return b;
}

/// Fe + span(n) with n.n = 0.
inline PoissonAlgebra fe_plus_n(Field f) {
    return direct_sum(constructions::idempotent_line(f), constructions::zero(f, 1), "Fe+N");
}

/// [a,u] = v, [a,v] = -u, zero dot: Q_a has char poly t(t^2 + 1).
inline PoissonAlgebra rotation_lie(Field f) {
    return constructions::lie_zero_dot(f, 3, {{0, 1, 2, Scalar::one(f)}, {0, 2, 1, -Scalar::one(f)}}, "rotation");
}

/// One tensor per axiom that violates that axiom and none checked before it.
inline DialgebraTensors violating_tensors(Axiom axiom) {
    const Field f = Q;
    const Scalar one = Scalar::one(f);
    switch (axiom) {
        case Axiom::Commutativity: {
            auto t = DialgebraTensors::zero(f, 2);
            t.dot(0, 1, 0) = one;
            return t;
        }
        case Axiom::Associativity: {
            auto t = DialgebraTensors::zero(f, 2);
            t.set_dot_symmetric(0, 0, 1, one);
            t.set_dot_symmetric(1, 1, 0, one);
            return t;
        }
        case Axiom::Alternating: {
            auto t = DialgebraTensors::zero(f, 1);
            t.bracket(0, 0, 0) = one;
            return t;
        }
        case Axiom::Jacobi: {
            auto t = DialgebraTensors::zero(f, 3);
            t.set_bracket_antisymmetric(0, 1, 1, one);
            t.set_bracket_antisymmetric(1, 2, 0, one);
            return t;
        }
        case Axiom::Leibniz:
        default: {
            auto t = DialgebraTensors::zero(f, 2);
            t.set_dot_symmetric(0, 0, 1, one);
            t.set_bracket_antisymmetric(0, 1, 1, one);
            return t;
        }
    }
}

inline const std::vector<Axiom>& all_axioms() {
    static const std::vector<Axiom> axioms{Axiom::Commutativity, Axiom::Associativity, Axiom::Alternating, Axiom::Jacobi,
                                           Axiom::Leibniz};
    return axioms;
}

/// Element-set oracle over GF(q): subspaces are explicit sets of vectors, products are
/// evaluated from integer structure constants mod q. Shares no code with the library
/// beyond reading the structure constants.
class Brute {
public:
    using Set = std::vector<int>;  // sorted element codes

    explicit Brute(const PoissonAlgebra& p) : n_(static_cast<int>(p.dim())), q_(static_cast<int>(p.field().modulus())) {
        size_ = 1;
        for (int i = 0; i < n_; ++i) size_ *= q_;
        dot_.assign(n_ * n_ * n_, 0);
        br_.assign(n_ * n_ * n_, 0);
        const auto& t = p.tensors();
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k) {
                    dot_[(i * n_ + j) * n_ + k] = static_cast<int>(t.dot(i, j, k).residue());
                    br_[(i * n_ + j) * n_ + k] = static_cast<int>(t.bracket(i, j, k).residue());
                }
        dot_table_.assign(static_cast<std::size_t>(size_) * size_, -1);
        br_table_.assign(static_cast<std::size_t>(size_) * size_, -1);
    }

    int size() const { return size_; }
    int q() const { return q_; }
    int n() const { return n_; }

    std::vector<int> decode(int code) const {
        std::vector<int> v(n_);
        for (int i = 0; i < n_; ++i) {
            v[i] = code % q_;
            code /= q_;
        }
        return v;
    }
    int encode(const std::vector<int>& v) const {
        int code = 0;
        for (int i = n_ - 1; i >= 0; --i) code = code * q_ + ((v[i] % q_) + q_) % q_;
        return code;
    }
    int add(int a, int b) const {
        auto x = decode(a), y = decode(b);
        for (int i = 0; i < n_; ++i) x[i] += y[i];
        return encode(x);
    }
    int scale(int c, int a) const {
        auto x = decode(a);
        for (auto& v : x) v *= c;
        return encode(x);
    }
    int dot(int a, int b) { return product(dot_, dot_table_, a, b); }
    int bracket(int a, int b) { return product(br_, br_table_, a, b); }

    Set span(const std::vector<int>& gens) const {
        std::vector<char> in(size_, 0);
        Set s{0};
        in[0] = 1;
        for (int g : gens) {
            if (in[g]) continue;
            Set next;
            for (int x : s)
                for (int c = 0; c < q_; ++c) {
                    int y = add(x, scale(c, g));
                    if (!in[y]) {
                        in[y] = 1;
                        next.push_back(y);
                    }
                }
            s.insert(s.end(), next.begin(), next.end());
        }
        std::sort(s.begin(), s.end());
        return s;
    }

    std::vector<int> basis_of(const Set& s) const {
        std::vector<int> basis;
        Set cur{0};
        for (int x : s) {
            if (std::binary_search(cur.begin(), cur.end(), x)) continue;
            basis.push_back(x);
            cur = span(basis);
        }
        return basis;
    }

    Set whole() const {
        Set s(size_);
        for (int i = 0; i < size_; ++i) s[i] = i;
        return s;
    }
    Set zero() const { return {0}; }

    static bool contains(const Set& big, const Set& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    }
    static Set meet(const Set& a, const Set& b) {
        Set out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }

    /// span of u.v and [u,v] (and the reversed order) for u in U, v in V.
    Set product(const Set& u, const Set& v, bool with_dot = true, bool with_bracket = true) {
        std::vector<int> gens;
        for (int a : basis_of(u))
            for (int b : basis_of(v)) {
                if (with_dot) gens.push_back(dot(a, b)), gens.push_back(dot(b, a));
                if (with_bracket) gens.push_back(bracket(a, b)), gens.push_back(bracket(b, a));
            }
        return span(gens);
    }

    const std::vector<Set>& subspaces() {
        if (!subspaces_.empty()) return subspaces_;
        std::set<Set> seen{zero()};
        std::vector<Set> frontier{zero()};
        while (!frontier.empty()) {
            std::vector<Set> next;
            for (const auto& s : frontier)
                for (int v = 1; v < size_; ++v) {
                    if (std::binary_search(s.begin(), s.end(), v)) continue;
                    auto basis = basis_of(s);
                    basis.push_back(v);
                    Set t = span(basis);
                    if (seen.insert(t).second) next.push_back(std::move(t));
                }
            frontier = std::move(next);
        }
        subspaces_.assign(seen.begin(), seen.end());
        return subspaces_;
    }

    bool is_subalgebra(const Set& s) { return contains(s, product(s, s)); }
    bool is_ideal(const Set& s) { return contains(s, product(s, whole())); }

    std::vector<Set> subalgebras() {
        std::vector<Set> out;
        for (const auto& s : subspaces())
            if (is_subalgebra(s)) out.push_back(s);
        return out;
    }
    const std::vector<Set>& ideals() {
        if (ideals_ready_) return ideals_;
        for (const auto& s : subspaces())
            if (is_ideal(s)) ideals_.push_back(s);
        ideals_ready_ = true;
        return ideals_;
    }

    bool solvable(const Set& s) {
        Set cur = s;
        for (int step = 0; step <= n_ + 1; ++step) {
            if (cur.size() == 1) return true;
            Set next = product(cur, cur);
            if (next == cur) return false;
            cur = std::move(next);
        }
        return cur.size() == 1;
    }

    /// S^1 = S, S^{k+1} = sum over i of S^i * S^{k+1-i}.
    bool nilpotent(const Set& s) {
        std::vector<Set> powers{Set{}, s};
        for (int k = 1; k <= n_ + 1; ++k) {
            if (powers[k].size() == 1) return true;
            std::vector<int> gens;
            for (int i = 1; i <= k; ++i) {
                auto b = basis_of(product(powers[i], powers[k + 1 - i]));
                gens.insert(gens.end(), b.begin(), b.end());
            }
            Set next = span(gens);
            if (next == powers[k]) return false;
            powers.push_back(std::move(next));
        }
        return powers.back().size() == 1;
    }

    Set largest(const std::function<bool(const Set&)>& pred) {
        Set best = zero();
        for (const auto& i : ideals())
            if (pred(i) && i.size() > best.size()) best = i;
        return best;
    }
    Set radical() {
        return largest([this](const Set& s) { return solvable(s); });
    }
    Set nilradical() {
        return largest([this](const Set& s) { return nilpotent(s); });
    }

    std::vector<Set> maximal_subalgebras() {
        auto subs = subalgebras();
        std::vector<Set> out;
        for (const auto& s : subs) {
            if (static_cast<int>(s.size()) == size_) continue;
            bool maximal = true;
            for (const auto& t : subs)
                if (t.size() > s.size() && static_cast<int>(t.size()) < size_ && contains(t, s)) maximal = false;
            if (maximal) out.push_back(s);
        }
        return out;
    }
    Set frattini_subalgebra() {
        Set f = whole();
        for (const auto& m : maximal_subalgebras()) f = meet(f, m);
        return f;
    }
    Set frattini_ideal() {
        Set f = frattini_subalgebra();
        Set best = zero();
        for (const auto& i : ideals())
            if (contains(f, i) && i.size() > best.size()) best = i;
        return best;
    }

    std::vector<Set> minimal_ideals() {
        const auto& ids = ideals();
        std::vector<Set> out;
        for (const auto& i : ids) {
            if (i.size() == 1) continue;
            bool minimal = true;
            for (const auto& j : ids)
                if (j.size() > 1 && j.size() < i.size() && contains(i, j)) minimal = false;
            if (minimal) out.push_back(i);
        }
        return out;
    }

    bool supersolvable() {
        const auto& ids = ideals();
        std::function<bool(const Set&)> extend = [&](const Set& cur) {
            if (static_cast<int>(cur.size()) == size_) return true;
            for (const auto& i : ids)
                if (static_cast<int>(i.size()) == static_cast<int>(cur.size()) * q_ && contains(i, cur) && extend(i))
                    return true;
            return false;
        };
        return extend(zero());
    }

    std::vector<int> idempotents() {
        std::vector<int> out;
        for (int x = 1; x < size_; ++x)
            if (dot(x, x) == x) out.push_back(x);
        return out;
    }

    Set from(const Subspace& s) const {
        std::vector<int> gens;
        for (const auto& v : s.basis_vectors()) gens.push_back(code(v));
        return span(gens);
    }
    int code(const Vector& v) const {
        std::vector<int> c(n_);
        for (int i = 0; i < n_; ++i) c[i] = static_cast<int>(v[i].residue());
        return encode(c);
    }

private:
    int product(const std::vector<int>& t, std::vector<int>& table, int a, int b) {
        int& cached = table[static_cast<std::size_t>(a) * size_ + b];
        if (cached >= 0) return cached;
        auto x = decode(a), y = decode(b);
        std::vector<int> out(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (!x[i] || !y[j]) continue;
                for (int k = 0; k < n_; ++k) out[k] = (out[k] + x[i] * y[j] * t[(i * n_ + j) * n_ + k]) % q_;
            }
        return cached = encode(out);
    }

    int n_, q_, size_;
    std::vector<int> dot_, br_;
    std::vector<int> dot_table_, br_table_;
    std::vector<Set> subspaces_;
    std::vector<Set> ideals_;
    bool ideals_ready_ = false;
};

/// Direct evaluation of the two operator identities from repeated products.
inline Element pa_residual_oracle(const PoissonAlgebra& p, const Element& a, const Element& x, const Element& y,
                                  std::size_t n) {
    std::vector<Element> powers{x};
    for (std::size_t k = 0; k < n; ++k) powers.push_back(p.mul_dot(a, powers.back()));
    Element lhs = p.mul_bracket(x, y);
    for (std::size_t k = 0; k < n; ++k) lhs = p.mul_dot(a, lhs);
    Element rhs = p.mul_bracket(powers[n], y);
    Element corr = p.mul_dot(powers[n - 1], p.mul_bracket(a, y));
    return lhs - rhs + Scalar::from_int(p.field(), static_cast<long long>(n)) * corr;
}

inline Element qa_residual_oracle(const PoissonAlgebra& p, const Element& a, const Element& x, const Element& y,
                                  std::size_t r) {
    auto q_pow = [&](Element v, std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) v = p.mul_bracket(a, v);
        return v;
    };
    Element acc = q_pow(p.mul_dot(x, y), r);
    long long binom = 1;
    for (std::size_t i = 0; i <= r; ++i) {
        acc -= Scalar::from_int(p.field(), binom) * p.mul_dot(q_pow(x, i), q_pow(y, r - i));
        binom = binom * static_cast<long long>(r - i) / static_cast<long long>(i + 1);
    }
    return acc;
}

/// Number of Poisson structures on GF(q)^n with symmetric dot and alternating bracket,
/// counted by checking every axiom on basis triples in plain modular arithmetic.
inline std::size_t count_poisson_oracle(int n, int q) {
    std::vector<std::array<int, 3>> dot_slots, br_slots;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k) dot_slots.push_back({i, j, k});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) br_slots.push_back({i, j, k});
    const std::size_t slots = dot_slots.size() + br_slots.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots; ++i) total *= static_cast<std::size_t>(q);
    auto md = [q](long v) { return static_cast<int>(((v % q) + q) % q); };
    std::size_t count = 0;
    std::vector<int> d(n * n * n), b(n * n * n);
    auto at = [n](int i, int j, int k) { return (i * n + j) * n + k; };
    for (std::size_t code = 0; code < total; ++code) {
        std::fill(d.begin(), d.end(), 0);
        std::fill(b.begin(), b.end(), 0);
        std::size_t c = code;
        for (std::size_t s = slots; s-- > 0;) {
            int v = static_cast<int>(c % q);
            c /= q;
            if (s < dot_slots.size()) {
                auto [i, j, k] = dot_slots[s];
                d[at(i, j, k)] = d[at(j, i, k)] = v;
            } else {
                auto [i, j, k] = br_slots[s - dot_slots.size()];
                b[at(i, j, k)] = v;
                b[at(j, i, k)] = md(-v);
            }
        }
        // (u . v) as coordinates when u, v are basis vectors
        auto prod = [&](const std::vector<int>& t, const std::vector<int>& x, const std::vector<int>& y) {
            std::vector<int> out(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (x[i] && y[j])
                        for (int k = 0; k < n; ++k) out[k] = md(out[k] + x[i] * y[j] * t[at(i, j, k)]);
            return out;
        };
        auto unit = [n](int i) {
            std::vector<int> e(n, 0);
            e[i] = 1;
            return e;
        };
        auto add = [&](std::vector<int> x, const std::vector<int>& y) {
            for (int i = 0; i < n; ++i) x[i] = md(x[i] + y[i]);
            return x;
        };
        auto neg = [&](std::vector<int> x) {
            for (auto& v : x) v = md(-v);
            return x;
        };
        bool ok = true;
        const std::vector<int> zero(n, 0);
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k) {
                    auto ei = unit(i), ej = unit(j), ek = unit(k);
                    auto assoc = add(prod(d, prod(d, ei, ej), ek), neg(prod(d, ei, prod(d, ej, ek))));
                    auto jac = add(add(prod(b, ei, prod(b, ej, ek)), prod(b, ej, prod(b, ek, ei))),
                                   prod(b, ek, prod(b, ei, ej)));
                    auto leib = add(prod(b, prod(d, ei, ej), ek),
                                    neg(add(prod(d, prod(b, ei, ek), ej), prod(d, ei, prod(b, ej, ek)))));
                    ok = assoc == zero && jac == zero && leib == zero;
                }
        if (ok) ++count;
    }
    return count;
}

}  // namespace testing
