#include "palg/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <thread>

#include "palg/engel.hpp"
#include "palg/series.hpp"

namespace palg {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::PassVacuous: return "pass-vacuous";
        case Status::Fail: return "fail";
        case Status::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

const std::vector<TheoremInfo>& theorem_registry() {
    static const std::vector<TheoremInfo> registry = {
        {"Lemma-2.1", "[B_A^n, C] <= B_A^{n-1}.[B, C] for subalgebras B, C, n >= 1", "any", "per-pair"},
        {"Lemma-2.2", "B.C is an ideal for ideals B, C", "any", "per-pair"},
        {"Lemma-2.3", "minimal ideal B inside a nilpotent ideal N lies in Ann_P(N)", "any", "per-pair"},
        {"Prop-2.4", "nilpotent iff associative and Lie nilpotent", "any", "per-configuration"},
        {"Thm-2.6", "R_A^2 <= N(P)", "any", "per-algebra"},
        {"Cor-2.7", "R^2 is nilpotent", "char 0", "per-algebra"},
        {"Prop-2.8", "supersolvable implies P^2 nilpotent", "any", "per-configuration"},
        {"Lemma-2.9", "Ann_R(N) <= N", "any", "per-algebra"},
        {"Lemma-2.11", "E^A(a), E^L(a) are subalgebras; P_a and Q_a power identities", "any", "per-configuration"},
        {"Lemma-2.13", "Lie subalgebra U containing E^L(a) has I^L(U) = U", "any", "per-configuration"},
        {"Lemma-2.15", "S(a,F) is a subalgebra with Q_a-stable complement K(a,F)", "any", "per-configuration"},
        {"Lemma-3.2", "ideal B inside F(C) for a subalgebra C lies in F(P)", "any", "per-pair"},
        {"Lemma-3.3", "(F+B)/B <= F(P/B), (phi+B)/B <= phi(P/B); equality when B <= F", "any", "per-configuration"},
        {"Lemma-3.4", "F(P/R) = 0 implies F <= R; phi(P/R) = 0 implies phi <= R", "any", "per-configuration"},
        {"Thm-3.5", "phi(A_1 + ... + A_n) = phi(A_1) + ... + phi(A_n)", "any", "per-pair"},
        {"Lemma-3.6", "U minimal with P = B + U implies B n U <= phi(U)", "any", "per-pair"},
        {"Lemma-3.7", "zero ideal B with B n phi = 0 has a complement subalgebra", "any", "per-configuration"},
        {"Thm-4.2", "B subideal, C <= phi ideal of B: B/C nilpotent (supersolvable) implies B is", "any",
         "per-configuration"},
        {"Cor-4.3", "phi(P) is nilpotent", "any", "per-algebra"},
        {"Thm-4.5", "phi-free iff P splits over Zsoc(P)", "any", "per-algebra"},
        {"Thm-4.6", "phi-free implies Zsoc = N = Ann_P(Soc)", "any", "per-algebra"},
        {"Thm-4.7", "phi-free iff P = N + U, U subalgebra, N = Zsoc, R_A^2 = 0", "any", "per-algebra"},
        {"Cor-4.8", "P solvable: phi-free iff P_A^2 = 0 and phi_L = 0", "any", "per-algebra"},
        {"Thm-4.9", "nilpotent iff phi = P^2; either implies every maximal subalgebra is an ideal", "any",
         "per-algebra"},
        {"Lemma-4.10", "every maximal subalgebra an ideal implies Lie nilpotent", "any", "per-algebra"},
        {"Thm-4.11", "every maximal subalgebra an ideal iff nilpotent or P = Fe + N", "any", "per-algebra"},
    };
    return registry;
}

const TheoremInfo* find_theorem(std::string_view id) {
    for (const auto& t : theorem_registry())
        if (t.id == id) return &t;
    return nullptr;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
    for (unsigned char ch : id) h = (h ^ ch) * 0x100000001b3ULL;
    return h;
}

Element random_element(const PoissonAlgebra& p, std::mt19937_64& rng) {
    Element x = p.zero_element();
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p.field().is_finite()) {
            std::uniform_int_distribution<std::uint32_t> d(0, p.field().modulus() - 1);
            x[i] = Scalar::from_int(p.field(), d(rng));
        } else {
            std::uniform_int_distribution<int> d(-3, 3);
            x[i] = Scalar::from_int(p.field(), d(rng));
        }
    }
    return x;
}

}  // namespace

std::vector<IdentitySample> sample_identities(const PoissonAlgebra& p, std::size_t count, std::uint64_t seed) {
    std::vector<IdentitySample> out;
    auto evaluate = [&](Element a, Element x, Element y, std::size_t n) {
        Element pr = pa_bracket_identity_residual(p, a, x, y, n);
        Element qr = qa_derivation_power_residual(p, a, x, y, n);
        out.push_back({std::move(a), std::move(x), std::move(y), n, std::move(pr), std::move(qr)});
    };
    if (p.dim() == 0) return out;
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j)
            for (std::size_t k = 0; k < p.dim(); ++k) evaluate(p.basis(i), p.basis(j), p.basis(k), 1);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> nd(1, 4);
    while (out.size() < count) {
        Element a = random_element(p, rng);
        Element x = random_element(p, rng);
        Element y = random_element(p, rng);
        evaluate(std::move(a), std::move(x), std::move(y), nd(rng));
    }
    return out;
}

namespace {

struct NotApplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Failure {
    std::string detail;
    Witness witness;
};

[[noreturn]] void fail(std::string detail, Witness w) { throw Failure{std::move(detail), std::move(w)}; }

using Named = std::vector<std::pair<std::string, Subspace>>;

[[noreturn]] void fail(std::string detail, Named subspaces, std::string note = {}) {
    fail(std::move(detail), Witness{std::move(subspaces), {}, std::move(note)});
}

struct Outcome {
    std::uint64_t exercised = 0;
    std::uint64_t samples = 0;
    std::string note;
    void hit() { ++exercised; }
};

struct QuotientData {
    Quotient quotient;
    FrattiniPair frattini;
};

class Context {
public:
    Context(const CorpusEntry& e, const SuiteOptions& o) : entry(e), p(e.algebra), opt(o) {}

    const CorpusEntry& entry;
    const PoissonAlgebra& p;
    const SuiteOptions& opt;

    bool finite() const { return p.field().is_finite(); }

    std::uint64_t seed() const { return mix_seed(opt.seed, entry.id); }

    void require_finite() const {
        if (!finite()) throw NotApplicableError("requires subspace enumeration over a finite field");
    }

    const SubspaceLattice& lattice() {
        require_finite();
        if (!lattice_) lattice_ = SubspaceLattice::build(p, opt.budget);
        return *lattice_;
    }

    const std::vector<Subspace>& subalgebras(Mult m = Mult::Both) {
        if (finite()) return lattice().subalgebras(m);
        build_configurations();
        return m == Mult::Bracket ? config_bracket_subalgebras_ : config_subalgebras_;
    }

    const std::vector<Subspace>& ideals() {
        if (finite()) return lattice().ideals();
        build_configurations();
        return config_ideals_;
    }

    /// Over Q only one-dimensional ideals among the configurations are certainly minimal.
    const std::vector<Subspace>& minimal_ideals() {
        if (!minimal_ideals_) {
            std::vector<Subspace> out;
            if (finite()) {
                for (auto& b : palg::minimal_ideals(p, opt.budget)) out.push_back(b.space);
            } else {
                for (const auto& i : ideals())
                    if (i.dim() == 1) out.push_back(i);
            }
            minimal_ideals_ = std::move(out);
        }
        return *minimal_ideals_;
    }

    const FrattiniPair& phi() {
        if (!phi_) phi_ = frattini(lattice(), p, Mult::Both);
        return *phi_;
    }
    const FrattiniPair& phi_lie() {
        if (!phi_lie_) phi_lie_ = frattini(lattice(), p, Mult::Bracket);
        return *phi_lie_;
    }

    const Subspace& socle() {
        require_finite();
        if (!socle_) socle_ = palg::socle(p, opt.budget).space;
        return *socle_;
    }
    const Subspace& zero_socle() {
        require_finite();
        if (!zero_socle_) zero_socle_ = palg::zero_socle(p, opt.budget).space;
        return *zero_socle_;
    }

    const Subspace& radical() {
        if (!radical_) {
            if (finite()) {
                radical_ = palg::radical(p, opt.budget).space;
            } else if (entry.radical_hint) {
                if (auto v = verify_radical(p, *entry.radical_hint); !v)
                    fail("supplied radical rejected: " + v.reason, Named{{"candidate", *entry.radical_hint}});
                radical_ = *entry.radical_hint;
            } else if (is_solvable(p)) {
                radical_ = p.whole();
            } else {
                throw NotApplicableError("no radical available over Q (supply a hint)");
            }
        }
        return *radical_;
    }

    const Subspace& nilradical() {
        if (!nilradical_) {
            if (finite()) {
                nilradical_ = palg::nilradical(p, opt.budget).space;
            } else if (entry.nilradical_hint) {
                if (auto v = verify_nilradical(p, *entry.nilradical_hint); !v)
                    fail("supplied nilradical rejected: " + v.reason, Named{{"candidate", *entry.nilradical_hint}});
                nilradical_ = *entry.nilradical_hint;
            } else if (is_nilpotent(p)) {
                nilradical_ = p.whole();
            } else {
                throw NotApplicableError("no nilradical available over Q (supply a hint)");
            }
        }
        return *nilradical_;
    }

    /// Elements a for the Engel-type checks: every nonzero element of small finite
    /// algebras, otherwise the basis plus seeded random elements.
    const std::vector<Element>& test_elements() {
        if (test_elements_) return *test_elements_;
        std::vector<Element> out;
        const bool exhaustive = finite() && std::pow(double(p.field().modulus()), double(p.dim())) <= 256.0;
        if (exhaustive) {
            const std::uint32_t q = p.field().modulus();
            std::vector<std::uint32_t> digits(p.dim(), 0);
            Element x = p.zero_element();
            while (p.dim() > 0) {
                std::size_t i = p.dim();
                bool done = false;
                while (i > 0) {
                    --i;
                    if (++digits[i] < q) {
                        x[i] = Scalar::from_int(p.field(), digits[i]);
                        break;
                    }
                    digits[i] = 0;
                    x[i] = Scalar::zero(p.field());
                    if (i == 0) done = true;
                }
                if (done) break;
                out.push_back(x);
            }
        } else {
            for (std::size_t i = 0; i < p.dim(); ++i) out.push_back(p.basis(i));
            for (std::size_t i = 0; i < p.dim(); ++i)
                for (std::size_t j = i + 1; j < p.dim(); ++j) out.push_back(p.basis(i) + p.basis(j));
            std::mt19937_64 rng(seed() + 1);
            for (int k = 0; k < 32; ++k) {
                Element x = random_element(p, rng);
                if (!x.is_zero()) out.push_back(std::move(x));
            }
        }
        test_elements_ = std::move(out);
        return *test_elements_;
    }

    /// Frattini pair of a subalgebra, in ambient coordinates.
    const FrattiniPair& frattini_of(const Subspace& c) {
        auto it = sub_frattini_.find(c);
        if (it != sub_frattini_.end()) return it->second;
        if (c.is_whole()) return sub_frattini_.emplace(c, phi()).first->second;
        Restriction r = restrict_to(p, c);
        FrattiniPair local = frattini(SubspaceLattice::build(r.algebra, opt.budget), r.algebra, Mult::Both);
        FrattiniPair f{AlgebraSubspace{r.to_ambient(local.frattini.space), local.frattini.verified},
                       AlgebraSubspace{r.to_ambient(local.ideal.space), local.ideal.verified}};
        return sub_frattini_.emplace(c, std::move(f)).first->second;
    }

    const QuotientData& quotient_by(const Subspace& b) {
        auto it = quotients_.find(b);
        if (it != quotients_.end()) return *it->second;
        Quotient q = quotient(p, b);
        FrattiniPair f = frattini(SubspaceLattice::build(q.algebra, opt.budget), q.algebra, Mult::Both);
        auto data = std::make_unique<QuotientData>(QuotientData{std::move(q), std::move(f)});
        return *quotients_.emplace(b, std::move(data)).first->second;
    }

    const std::vector<Subspace>& maximal_subalgebras() {
        if (!maximals_) maximals_ = lattice().maximal_subalgebras();
        return *maximals_;
    }

private:
    void build_configurations() {
        if (configured_) return;
        configured_ = true;
        std::vector<Subspace> candidates{p.zero_subspace(), p.whole(), centre(p).space};
        for (auto kind : {SeriesKind::Derived, SeriesKind::LowerCentral, SeriesKind::AssocDerived,
                          SeriesKind::AssocLower, SeriesKind::LieDerived, SeriesKind::LieLower})
            for (auto& t : compute_series(p, kind).terms) candidates.push_back(t);
        std::vector<Element> seeds;
        for (std::size_t i = 0; i < p.dim(); ++i) seeds.push_back(p.basis(i));
        for (std::size_t i = 0; i < p.dim(); ++i)
            for (std::size_t j = i + 1; j < p.dim(); ++j) seeds.push_back(p.basis(i) + p.basis(j));
        for (const auto& a : seeds) {
            Subspace line = Subspace::span(p.field(), p.dim(), {a});
            candidates.push_back(closure_subalgebra(p, line).space);
            candidates.push_back(closure_subalgebra(p, line, Mult::Bracket).space);
            candidates.push_back(closure_ideal(p, line).space);
            EngelPair e = engel(p, a);
            candidates.push_back(e.engel_assoc.space);
            candidates.push_back(e.engel_lie.space);
            candidates.push_back(s_k_split(p, a).s_part.space);
        }
        for (const auto* hint : {&entry.radical_hint, &entry.nilradical_hint})
            if (*hint) candidates.push_back(**hint);
        for (const auto& s : entry.subalgebra_hints) candidates.push_back(s);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& s : candidates) {
            const bool br = is_subalgebra(p, s, Mult::Bracket);
            if (br) config_bracket_subalgebras_.push_back(s);
            if (br && is_subalgebra(p, s, Mult::Dot)) {
                config_subalgebras_.push_back(s);
                if (is_ideal(p, s)) config_ideals_.push_back(s);
            }
        }
    }

    std::optional<SubspaceLattice> lattice_;
    std::optional<FrattiniPair> phi_, phi_lie_;
    std::optional<Subspace> socle_, zero_socle_, radical_, nilradical_;
    std::optional<std::vector<Subspace>> minimal_ideals_, maximals_;
    std::optional<std::vector<Element>> test_elements_;
    std::map<Subspace, FrattiniPair> sub_frattini_;
    std::map<Subspace, std::unique_ptr<QuotientData>> quotients_;
    bool configured_ = false;
    std::vector<Subspace> config_subalgebras_, config_bracket_subalgebras_, config_ideals_;
};

Subspace square(const PoissonAlgebra& p, const Subspace& s, Mult m = Mult::Both) { return subspace_product(p, s, s, m); }

// ---- Lemma-2.1 to Lemma-2.15 ---------------------------------------------

void lemma_2_1(Context& c, Outcome& o) {
    const auto& subs = c.subalgebras();
    for (const auto& b : subs) {
        for (const auto& cc : subs) {
            const Subspace bc = subspace_product(c.p, b, cc, Mult::Bracket);
            Subspace prev = b;  // B_A^{n-1}
            for (std::size_t n = 2; n <= c.p.dim() + 2; ++n) {
                Subspace cur = subspace_product(c.p, prev, b, Mult::Dot);  // B_A^n
                Subspace lhs = subspace_product(c.p, cur, cc, Mult::Bracket);
                Subspace rhs = subspace_product(c.p, prev, bc, Mult::Dot);
                o.hit();
                if (!rhs.contains(lhs))
                    fail("[B_A^n, C] not inside B_A^{n-1}.[B,C] at n = " + std::to_string(n),
                         Named{{"B", b}, {"C", cc}, {"lhs", lhs}, {"rhs", rhs}});
                if (cur.is_zero() || cur == prev) break;
                prev = std::move(cur);
            }
        }
    }
}

void lemma_2_2(Context& c, Outcome& o) {
    const auto& ideals = c.ideals();
    for (const auto& b : ideals)
        for (const auto& cc : ideals) {
            Subspace bc = subspace_product(c.p, b, cc, Mult::Dot);
            o.hit();
            if (!is_ideal(c.p, bc)) fail("B.C is not an ideal", Named{{"B", b}, {"C", cc}, {"B.C", bc}});
        }
}

void lemma_2_3(Context& c, Outcome& o) {
    for (const auto& n : c.ideals()) {
        if (!is_assoc_nilpotent(c.p, n) || !is_lie_nilpotent(c.p, n)) continue;
        const Subspace ann = annihilator(c.p, n).space;
        for (const auto& b : c.minimal_ideals()) {
            if (!n.contains(b)) continue;
            o.hit();
            if (!ann.contains(b)) fail("minimal ideal not inside Ann_P(N)", Named{{"B", b}, {"N", n}, {"Ann_P(N)", ann}});
        }
    }
}

void prop_2_4(Context& c, Outcome& o) {
    for (const auto& s : c.subalgebras()) {
        const bool nil = is_nilpotent(c.p, s);
        const bool both = is_assoc_nilpotent(c.p, s) && is_lie_nilpotent(c.p, s);
        o.hit();
        if (nil != both)
            fail(std::string("nilpotent = ") + (nil ? "true" : "false") + " but assoc and Lie nilpotent = " +
                     (both ? "true" : "false"),
                 Named{{"S", s}});
    }
}

void thm_2_6(Context& c, Outcome& o) {
    const Subspace& r = c.radical();
    const Subspace& n = c.nilradical();
    const Subspace ra2 = square(c.p, r, Mult::Dot);
    o.hit();
    if (!n.contains(ra2)) fail("R_A^2 not inside N", Named{{"R", r}, {"N", n}, {"R_A^2", ra2}});
}

void cor_2_7(Context& c, Outcome& o) {
    if (c.p.field().characteristic() != 0) throw NotApplicableError("requires characteristic zero");
    const Subspace& r = c.radical();
    const Subspace r2 = square(c.p, r);
    o.hit();
    if (!is_nilpotent(c.p, r2)) fail("R^2 is not nilpotent", Named{{"R", r}, {"R^2", r2}});
}

void prop_2_8(Context& c, Outcome& o) {
    for (const auto& s : c.subalgebras()) {
        if (s.is_zero()) continue;
        const bool ss = s.is_whole() ? is_supersolvable(c.p) : is_supersolvable(restrict_to(c.p, s).algebra);
        if (!ss) continue;
        const Subspace s2 = square(c.p, s);
        o.hit();
        if (!is_nilpotent(c.p, s2))
            fail(std::string("supersolvable but S^2 not nilpotent (S^2 lie-nilpotent: ") +
                     (is_lie_nilpotent(c.p, s2) ? "yes" : "no") + ", assoc-nilpotent: " +
                     (is_assoc_nilpotent(c.p, s2) ? "yes" : "no") + ")",
                 Named{{"S", s}, {"S^2", s2}});
    }
}

void lemma_2_9(Context& c, Outcome& o) {
    const Subspace& r = c.radical();
    const Subspace& n = c.nilradical();
    const Subspace ann = intersect(r, annihilator(c.p, n).space);
    o.hit();
    if (!n.contains(ann)) fail("Ann_R(N) not inside N", Named{{"R", r}, {"N", n}, {"Ann_R(N)", ann}});
}

void lemma_2_11(Context& c, Outcome& o) {
    for (const auto& a : c.test_elements()) {
        EngelPair e = engel(c.p, a);
        o.hit();
        for (const auto* s : {&e.engel_assoc.space, &e.engel_lie.space}) {
            if (!is_subalgebra(c.p, *s)) {
                const char* name = s == &e.engel_assoc.space ? "E^A(a)" : "E^L(a)";
                fail(std::string(name) + " is not a subalgebra", Witness{{{name, *s}}, {{"a", a}}, {}});
            }
        }
    }
    for (auto& s : sample_identities(c.p, c.opt.identity_samples, c.seed())) {
        ++o.samples;
        const bool pa = !s.pa_residual.is_zero();
        if (pa || !s.qa_residual.is_zero()) {
            Element residual = pa ? s.pa_residual : s.qa_residual;
            fail(std::string(pa ? "P_a^n([x,y]) identity" : "Q_a^n(x.y) identity") + " has nonzero residual at n = " +
                     std::to_string(s.n),
                 Witness{{}, {{"a", s.a}, {"x", s.x}, {"y", s.y}, {"residual", residual}},
                         std::string(pa ? "pa" : "qa") + " n=" + std::to_string(s.n)});
        }
    }
}

void lemma_2_13(Context& c, Outcome& o) {
    const auto& lie_subs = c.subalgebras(Mult::Bracket);
    for (const auto& a : c.test_elements()) {
        const Subspace el = engel(c.p, a).engel_lie.space;
        std::vector<Subspace> us;
        for (const auto& u : lie_subs)
            if (u.contains(el)) us.push_back(u);
        if (!c.finite() && std::find(us.begin(), us.end(), el) == us.end()) us.push_back(el);
        for (const auto& u : us) {
            const Subspace idl = lie_idealiser(c.p, u).space;
            o.hit();
            if (idl != u)
                fail("I^L(U) differs from U", Witness{{{"E^L(a)", el}, {"U", u}, {"I^L(U)", idl}}, {{"a", a}}, {}});
        }
    }
}

void lemma_2_15(Context& c, Outcome& o) {
    for (const auto& a : c.test_elements()) {
        SplitPair sk = s_k_split(c.p, a);
        const Subspace& s = sk.s_part.space;
        const Subspace& k = sk.k_part;
        o.hit();
        Witness w{{{"S", s}, {"K", k}}, {{"a", a}}, {}};
        if (!is_subalgebra(c.p, s)) fail("S(a,F) is not a subalgebra", w);
        if (!intersect(s, k).is_zero() || s.dim() + k.dim() != c.p.dim()) fail("K(a,F) is not a complement of S(a,F)", w);
        const Matrix q = c.p.q_operator(a);
        for (const auto& v : k.basis_vectors())
            if (!k.contains(q.apply(v))) fail("K(a,F) is not Q_a-stable", w);
    }
}

// ---- Lemma-3.2 to Lemma-3.7 ----------------------------------------------

void lemma_3_2(Context& c, Outcome& o) {
    const Subspace& fp = c.phi().frattini.space;
    for (const auto& cc : c.subalgebras()) {
        const Subspace& fc = c.frattini_of(cc).frattini.space;
        for (const auto& b : c.ideals()) {
            if (b.is_zero() || !fc.contains(b)) continue;
            o.hit();
            if (!fp.contains(b)) fail("ideal inside F(C) not inside F(P)", Named{{"C", cc}, {"F(C)", fc}, {"B", b}, {"F(P)", fp}});
        }
    }
}

void lemma_3_3(Context& c, Outcome& o) {
    const Subspace& f = c.phi().frattini.space;
    const Subspace& phi = c.phi().ideal.space;
    for (const auto& b : c.ideals()) {
        const QuotientData& qd = c.quotient_by(b);
        const Subspace f_img = qd.quotient.image(sum(f, b));
        const Subspace phi_img = qd.quotient.image(sum(phi, b));
        const Subspace& fq = qd.frattini.frattini.space;
        const Subspace& phiq = qd.frattini.ideal.space;
        Named w{{"B", b}, {"(F+B)/B", f_img}, {"F(P/B)", fq}, {"(phi+B)/B", phi_img}, {"phi(P/B)", phiq}};
        o.hit();
        if (!fq.contains(f_img)) fail("(F+B)/B not inside F(P/B)", w);
        if (!phiq.contains(phi_img)) fail("(phi+B)/B not inside phi(P/B)", w, "right-hand side read as phi(P/B)");
        if (f.contains(b)) {
            if (f_img != fq) fail("B inside F but F/B differs from F(P/B)", w);
            if (phi_img != phiq) fail("B inside F but phi/B differs from phi(P/B)", w);
        }
    }
    o.note = "(i) implemented as (phi+B)/B <= phi(P/B)";
}

void lemma_3_4(Context& c, Outcome& o) {
    const Subspace& f = c.phi().frattini.space;
    const Subspace& phi = c.phi().ideal.space;
    for (const auto& r : c.ideals()) {
        const QuotientData& qd = c.quotient_by(r);
        if (qd.frattini.frattini.space.is_zero()) {
            o.hit();
            if (!r.contains(f)) fail("F(P/R) = 0 but F not inside R", Named{{"R", r}, {"F", f}});
        }
        if (qd.frattini.ideal.space.is_zero()) {
            o.hit();
            if (!r.contains(phi)) fail("phi(P/R) = 0 but phi not inside R", Named{{"R", r}, {"phi", phi}});
        }
    }
}

PoissonAlgebra partner(Field f, bool idempotent) {
    auto t = DialgebraTensors::zero(f, 1);
    if (idempotent) t.dot(0, 0, 0) = Scalar::one(f);
    return PoissonAlgebra::validated_or_throw(std::move(t), idempotent ? "idempotent_line" : "zero(1)");
}

Subspace embed(const Subspace& s, std::size_t offset, std::size_t total) {
    std::vector<Vector> vs;
    for (const auto& v : s.basis_vectors()) {
        Vector w = Vector::zero(s.field(), total);
        for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
        vs.push_back(std::move(w));
    }
    return Subspace::span(s.field(), total, vs);
}

void thm_3_5(Context& c, Outcome& o) {
    c.require_finite();
    std::vector<std::vector<PoissonAlgebra>> decompositions;
    if (!c.entry.summands.empty()) decompositions.push_back(c.entry.summands);
    if (c.p.dim() + 1 <= c.opt.budget.max_dim)
        for (bool idem : {false, true}) decompositions.push_back({c.p, partner(c.p.field(), idem)});
    for (std::size_t d = 0; d < decompositions.size(); ++d) {
        const auto& parts = decompositions[d];
        PoissonAlgebra total = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i) total = direct_sum(total, parts[i]);
        const bool own = d == 0 && !c.entry.summands.empty();
        if (own && total.tensors() != c.p.tensors()) fail("recorded summands do not sum to the algebra", Named{});
        const Subspace phi = own ? c.phi().ideal.space
                                 : frattini(SubspaceLattice::build(total, c.opt.budget), total, Mult::Both).ideal.space;
        Subspace expected = Subspace::zero(c.p.field(), total.dim());
        std::size_t offset = 0;
        for (const auto& part : parts) {
            Subspace local = frattini(SubspaceLattice::build(part, c.opt.budget), part, Mult::Both).ideal.space;
            expected = sum(expected, embed(local, offset, total.dim()));
            offset += part.dim();
        }
        o.hit();
        if (phi != expected)
            fail("phi of the direct sum differs from the sum of the phi(A_i)",
                 Named{{"phi(A)", phi}, {"sum phi(A_i)", expected}},
                 own ? "recorded summands" : std::string("partner ") + parts.back().name());
    }
}

void lemma_3_6(Context& c, Outcome& o) {
    const auto& subs = c.subalgebras();
    for (const auto& b : c.ideals()) {
        std::vector<const Subspace*> supplements;
        for (const auto& u : subs)
            if (sum(b, u).is_whole()) supplements.push_back(&u);
        for (const auto* u : supplements) {
            bool minimal = true;
            for (const auto* v : supplements)
                if (v->dim() < u->dim() && u->contains(*v)) {
                    minimal = false;
                    break;
                }
            if (!minimal) continue;
            const Subspace bu = intersect(b, *u);
            const Subspace& phi_u = c.frattini_of(*u).ideal.space;
            o.hit();
            if (!phi_u.contains(bu)) fail("B n U not inside phi(U)", Named{{"B", b}, {"U", *u}, {"phi(U)", phi_u}});
        }
    }
}

void lemma_3_7(Context& c, Outcome& o) {
    const Subspace& phi = c.phi().ideal.space;
    for (const auto& b : c.ideals()) {
        if (b.is_zero() || !is_zero_subalgebra(c.p, b) || !intersect(b, phi).is_zero()) continue;
        o.hit();
        if (!splits_over(c.p, b, c.opt.budget)) fail("no complement subalgebra", Named{{"B", b}, {"phi", phi}});
    }
}

// ---- Thm-4.2 to Thm-4.11 -------------------------------------------------

void thm_4_2(Context& c, Outcome& o) {
    const Subspace& phi = c.phi().ideal.space;
    // subideals, found top-down
    std::vector<Subspace> subideals;
    const auto& subs = c.subalgebras();
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        bool sub = it->is_whole();
        for (const auto& s : subideals) {
            if (sub) break;
            if (s.dim() > it->dim() && is_ideal_in(c.p, *it, s)) sub = true;
        }
        if (sub) subideals.push_back(*it);
    }
    const auto& all = c.lattice().all();
    for (const auto& b : subideals) {
        const Subspace bphi = intersect(b, phi);
        Restriction r = restrict_to(c.p, b);
        bool b_nil_known = false, b_ss_known = false, b_nil = false, b_ss = false;
        for (const auto& cc : all) {
            if (cc.dim() > bphi.dim() || !bphi.contains(cc) || !is_ideal_in(c.p, cc, b)) continue;
            const PoissonAlgebra bc = quotient(r.algebra, r.to_local(cc)).algebra;
            if (is_nilpotent(bc)) {
                if (!b_nil_known) b_nil = is_nilpotent(c.p, b), b_nil_known = true;
                o.hit();
                if (!b_nil) fail("B/C nilpotent but B is not", Named{{"B", b}, {"C", cc}, {"phi", phi}});
            }
            if (is_supersolvable(bc)) {
                if (!b_ss_known) b_ss = is_supersolvable(r.algebra), b_ss_known = true;
                o.hit();
                if (!b_ss) fail("B/C supersolvable but B is not", Named{{"B", b}, {"C", cc}, {"phi", phi}});
            }
        }
    }
}

void cor_4_3(Context& c, Outcome& o) {
    const Subspace& phi = c.phi().ideal.space;
    o.hit();
    if (!is_nilpotent(c.p, phi)) fail("phi is not nilpotent", Named{{"phi", phi}});
}

void thm_4_5(Context& c, Outcome& o) {
    const Subspace& phi = c.phi().ideal.space;
    const Subspace& zs = c.zero_socle();
    auto complement = splits_over(c.p, zs, c.opt.budget);
    o.hit();
    if (phi.is_zero() != complement.has_value()) {
        Named w{{"phi", phi}, {"Zsoc", zs}};
        if (complement) w.emplace_back("C", complement->space);
        fail(phi.is_zero() ? "phi-free but no complement to Zsoc" : "splits over Zsoc but phi is nonzero", w);
    }
}

void thm_4_6(Context& c, Outcome& o) {
    if (!c.phi().ideal.space.is_zero()) return;
    const Subspace& zs = c.zero_socle();
    const Subspace& n = c.nilradical();
    const Subspace ann = annihilator(c.p, c.socle()).space;
    o.hit();
    if (zs != n || n != ann) fail("Zsoc, N, Ann_P(Soc) differ", Named{{"Zsoc", zs}, {"N", n}, {"Ann_P(Soc)", ann}});
}

void thm_4_7(Context& c, Outcome& o) {
    const bool phi_free = c.phi().ideal.space.is_zero();
    const Subspace& n = c.nilradical();
    const Subspace& r = c.radical();
    const Subspace& zs = c.zero_socle();
    const Subspace ra2 = square(c.p, r, Mult::Dot);
    auto u = splits_over(c.p, n, c.opt.budget);
    const bool rhs = u.has_value() && n == zs && ra2.is_zero();
    o.hit();
    Named w{{"N", n}, {"Zsoc", zs}, {"R", r}, {"R_A^2", ra2}};
    if (u) w.emplace_back("U", u->space);
    if (phi_free != rhs) fail(phi_free ? "phi-free but decomposition fails" : "decomposition holds but phi is nonzero", w);
    if (phi_free && u) {
        const bool ur2 = square(c.p, intersect(u->space, r)).is_zero();
        o.note = std::string("characteristic-zero clause not asserted; (U n R)^2 = 0 ") + (ur2 ? "holds" : "fails") +
                 " here";
    }
}

void cor_4_8(Context& c, Outcome& o) {
    if (!is_solvable(c.p)) return;
    const bool phi_free = c.phi().ideal.space.is_zero();
    const Subspace pa2 = square(c.p, c.p.whole(), Mult::Dot);
    const Subspace& phi_l = c.phi_lie().ideal.space;
    const bool rhs = pa2.is_zero() && phi_l.is_zero();
    o.hit();
    if (phi_free != rhs)
        fail(phi_free ? "solvable phi-free but P_A^2 or phi_L nonzero" : "P_A^2 = 0 and phi_L = 0 but phi nonzero",
             Named{{"phi", c.phi().ideal.space}, {"P_A^2", pa2}, {"phi_L", phi_l}});
    o.note = "characteristic-zero clause U^2 = 0 not asserted";
}

std::optional<Subspace> non_ideal_maximal(Context& c) {
    for (const auto& m : c.maximal_subalgebras())
        if (!is_ideal(c.p, m)) return m;
    return std::nullopt;
}

void thm_4_9(Context& c, Outcome& o) {
    const Subspace& phi = c.phi().ideal.space;
    const Subspace p2 = square(c.p, c.p.whole());
    const bool nil = is_nilpotent(c.p);
    o.hit();
    if (nil != (phi == p2)) fail(nil ? "nilpotent but phi differs from P^2" : "phi = P^2 but not nilpotent", Named{{"phi", phi}, {"P^2", p2}});
    if (nil)
        if (auto m = non_ideal_maximal(c)) fail("nilpotent but a maximal subalgebra is not an ideal", Named{{"M", *m}});
}

void lemma_4_10(Context& c, Outcome& o) {
    if (non_ideal_maximal(c)) return;
    o.hit();
    if (!is_lie_nilpotent(c.p)) fail("every maximal subalgebra is an ideal but P is not Lie nilpotent", Named{});
}

void thm_4_11(Context& c, Outcome& o) {
    const auto bad = non_ideal_maximal(c);
    const bool nil = is_nilpotent(c.p);
    const Subspace& n = c.nilradical();
    std::optional<Element> decomposition;
    if (!nil) {
        for (const auto& e : idempotents(c.p, c.opt.budget)) {
            const Subspace fe = Subspace::span(c.p.field(), c.p.dim(), {e});
            if (!intersect(fe, n).is_zero() || fe.dim() + n.dim() != c.p.dim()) continue;
            if (is_ideal(c.p, fe) && subspace_product(c.p, fe, n).is_zero()) {
                decomposition = e;
                break;
            }
        }
    }
    const bool rhs = nil || decomposition.has_value();
    o.hit();
    if (!bad && !rhs) fail("every maximal subalgebra is an ideal, but P is neither nilpotent nor Fe + N", Named{{"N", n}});
    if (bad && rhs) {
        Witness w{{{"M", *bad}, {"N", n}}, {}, nil ? "nilpotent" : "Fe + N"};
        if (decomposition) w.elements.emplace_back("e", *decomposition);
        fail("P is nilpotent or Fe + N but a maximal subalgebra is not an ideal", w);
    }
}

using CheckFn = void (*)(Context&, Outcome&);

const std::map<std::string, CheckFn, std::less<>>& check_table() {
    static const std::map<std::string, CheckFn, std::less<>> table = {
        {"Lemma-2.1", lemma_2_1},   {"Lemma-2.2", lemma_2_2},   {"Lemma-2.3", lemma_2_3},   {"Prop-2.4", prop_2_4},
        {"Thm-2.6", thm_2_6},       {"Cor-2.7", cor_2_7},       {"Prop-2.8", prop_2_8},     {"Lemma-2.9", lemma_2_9},
        {"Lemma-2.11", lemma_2_11}, {"Lemma-2.13", lemma_2_13}, {"Lemma-2.15", lemma_2_15}, {"Lemma-3.2", lemma_3_2},
        {"Lemma-3.3", lemma_3_3},   {"Lemma-3.4", lemma_3_4},   {"Thm-3.5", thm_3_5},       {"Lemma-3.6", lemma_3_6},
        {"Lemma-3.7", lemma_3_7},   {"Thm-4.2", thm_4_2},       {"Cor-4.3", cor_4_3},       {"Thm-4.5", thm_4_5},
        {"Thm-4.6", thm_4_6},       {"Thm-4.7", thm_4_7},       {"Cor-4.8", cor_4_8},       {"Thm-4.9", thm_4_9},
        {"Lemma-4.10", lemma_4_10}, {"Thm-4.11", thm_4_11},
    };
    return table;
}

TheoremResult run_check(std::string_view id, Context& c) {
    auto it = check_table().find(id);
    if (it == check_table().end()) throw std::invalid_argument("unknown theorem id '" + std::string(id) + "'");
    TheoremResult r;
    r.theorem = std::string(id);
    r.algebra = c.entry.id;
    Outcome o;
    try {
        it->second(c, o);
        r.status = o.exercised > 0 ? Status::Pass : Status::PassVacuous;
        r.detail = o.note;
    } catch (const Failure& f) {
        r.status = Status::Fail;
        r.detail = f.detail;
        r.witness = f.witness;
    } catch (const NotApplicableError& e) {
        r.status = Status::NotApplicable;
        r.detail = e.what();
    } catch (const RequiresFiniteField& e) {
        r.status = Status::NotApplicable;
        r.detail = e.what();
    } catch (const BudgetExceeded& e) {
        r.status = Status::NotApplicable;
        r.detail = e.what();
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.detail = std::string("error: ") + e.what();
    }
    r.exercised = o.exercised;
    r.samples = o.samples;
    return r;
}

}  // namespace

TheoremResult check_one(std::string_view id, const CorpusEntry& entry, const SuiteOptions& options) {
    Context c(entry, options);
    return run_check(id, c);
}

SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options) {
    std::vector<std::string> ids;
    for (const auto& t : theorem_registry())
        if (options.filter.empty() || std::find(options.filter.begin(), options.filter.end(), t.id) != options.filter.end())
            ids.push_back(t.id);
    for (const auto& f : options.filter)
        if (!find_theorem(f)) throw std::invalid_argument("unknown theorem id '" + f + "'");

    std::vector<std::vector<TheoremResult>> slots(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
            Context c(corpus[i], options);
            for (const auto& id : ids) slots[i].push_back(run_check(id, c));
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(corpus.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SuiteReport report;
    for (auto& slot : slots)
        for (auto& r : slot) {
            switch (r.status) {
                case Status::Pass: ++report.summary.pass; break;
                case Status::PassVacuous: ++report.summary.pass_vacuous; break;
                case Status::Fail: ++report.summary.fail; break;
                case Status::NotApplicable:
                    ++report.summary.not_applicable;
                    if (r.detail.rfind("budget exceeded", 0) == 0) ++report.summary.budget_exceeded;
                    break;
            }
            report.summary.identity_samples += r.samples;
            report.results.push_back(std::move(r));
        }
    return report;
}

}  // namespace palg
