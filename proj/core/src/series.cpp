#include "palg/series.hpp"

#include <stdexcept>

#include "palg/polynomial.hpp"

namespace palg {

std::string_view to_string(SeriesKind k) noexcept {
    switch (k) {
        case SeriesKind::Derived: return "derived";
        case SeriesKind::LowerCentral: return "lower-central";
        case SeriesKind::AssocDerived: return "assoc-derived";
        case SeriesKind::AssocLower: return "assoc-lower";
        case SeriesKind::LieDerived: return "lie-derived";
        case SeriesKind::LieLower: return "lie-lower";
    }
    return "unknown";
}

std::optional<SeriesKind> parse_series_kind(std::string_view s) noexcept {
    for (SeriesKind k : {SeriesKind::Derived, SeriesKind::LowerCentral, SeriesKind::AssocDerived, SeriesKind::AssocLower,
                         SeriesKind::LieDerived, SeriesKind::LieLower})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

namespace {

Subspace next_term(const PoissonAlgebra& p, SeriesKind kind, const Subspace& base, const std::vector<Subspace>& terms) {
    const Subspace& last = terms.back();
    switch (kind) {
        case SeriesKind::Derived: return subspace_product(p, last, last, Mult::Both);
        case SeriesKind::AssocDerived: return subspace_product(p, last, last, Mult::Dot);
        case SeriesKind::LieDerived: return subspace_product(p, last, last, Mult::Bracket);
        case SeriesKind::AssocLower: return subspace_product(p, last, base, Mult::Dot);
        case SeriesKind::LieLower: return subspace_product(p, last, base, Mult::Bracket);
        case SeriesKind::LowerCentral: {
            // terms[i-1] holds A^i; build A^{n+1} with n = terms.size()
            const std::size_t n = terms.size();
            Subspace full = Subspace::zero(p.field(), p.dim());
            for (std::size_t i = 1; i <= n; ++i) full = sum(full, subspace_product(p, terms[i - 1], terms[n - i]));
            if (p.validated()) {
                Subspace shortcut = subspace_product(p, last, base);
                if (shortcut != full)
                    throw std::logic_error("lower central series: shortcut A^n.A + [A^n,A] disagrees with the full sum");
            }
            return full;
        }
    }
    throw std::logic_error("unknown series kind");
}

}  // namespace

SeriesReport compute_series(const PoissonAlgebra& p, SeriesKind kind, const Subspace& base) {
    SeriesReport report{kind, {base}};
    while (!report.terms.back().is_zero()) {
        Subspace next = next_term(p, kind, base, report.terms);
        const bool repeated = next == report.terms.back();
        report.terms.push_back(std::move(next));
        if (repeated) break;
        if (report.terms.size() > p.dim() + 2) throw std::logic_error("series failed to stabilize");
    }
    return report;
}

SeriesReport compute_series(const PoissonAlgebra& p, SeriesKind kind) { return compute_series(p, kind, p.whole()); }

SeriesReport derived_series(const PoissonAlgebra& p) { return compute_series(p, SeriesKind::Derived); }

SeriesReport lower_central_series(const PoissonAlgebra& p) { return compute_series(p, SeriesKind::LowerCentral); }

bool is_solvable(const PoissonAlgebra& p, const Subspace& base) {
    return compute_series(p, SeriesKind::Derived, base).reaches_zero();
}
bool is_nilpotent(const PoissonAlgebra& p, const Subspace& base) {
    return compute_series(p, SeriesKind::LowerCentral, base).reaches_zero();
}
bool is_assoc_solvable(const PoissonAlgebra& p, const Subspace& base) {
    return compute_series(p, SeriesKind::AssocDerived, base).reaches_zero();
}
bool is_assoc_nilpotent(const PoissonAlgebra& p, const Subspace& base) {
    return compute_series(p, SeriesKind::AssocLower, base).reaches_zero();
}
bool is_lie_solvable(const PoissonAlgebra& p, const Subspace& base) {
    return compute_series(p, SeriesKind::LieDerived, base).reaches_zero();
}
bool is_lie_nilpotent(const PoissonAlgebra& p, const Subspace& base) {
    return compute_series(p, SeriesKind::LieLower, base).reaches_zero();
}

std::optional<std::size_t> nilpotency_class(const PoissonAlgebra& p) {
    auto s = lower_central_series(p);
    if (!s.reaches_zero()) return std::nullopt;
    return s.step();
}

std::optional<std::size_t> derived_length(const PoissonAlgebra& p) {
    auto s = derived_series(p);
    if (!s.reaches_zero()) return std::nullopt;
    return s.step();
}

namespace {

struct EigenOperator {
    Matrix matrix;
    std::vector<Root> eigenvalues;
};

std::optional<Element> search_common_eigenvector(const PoissonAlgebra& p, const std::vector<EigenOperator>& ops,
                                                 std::size_t index, const Subspace& current) {
    if (index == ops.size()) {
        for (const auto& v : current.basis_vectors())
            if (is_ideal(p, Subspace::span(p.field(), p.dim(), {v}))) return v;
        return std::nullopt;
    }
    const Matrix& m = ops[index].matrix;
    for (const auto& root : ops[index].eigenvalues) {
        Matrix shifted = m - root.value * Matrix::identity(p.field(), p.dim());
        Subspace next = intersect(current, shifted.kernel());
        if (next.is_zero()) continue;
        if (auto v = search_common_eigenvector(p, ops, index + 1, next)) return v;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Element> find_one_dim_ideal(const PoissonAlgebra& p) {
    if (p.dim() == 0) return std::nullopt;
    std::vector<EigenOperator> ops;
    auto add = [&](Matrix m) {
        if (m.is_zero()) return;
        for (const auto& o : ops)
            if (o.matrix == m) return;
        auto roots = roots_in_field(char_poly(m));
        ops.push_back({std::move(m), std::move(roots)});
    };
    for (std::size_t i = 0; i < p.dim(); ++i) {
        add(p.p_operator(p.basis(i)));
        add(p.q_operator(p.basis(i)));
    }
    if (!p.validated()) {
        // right multiplications as well
        for (std::size_t i = 0; i < p.dim(); ++i) {
            std::vector<Vector> dcols, bcols;
            for (std::size_t j = 0; j < p.dim(); ++j) {
                dcols.push_back(p.mul_dot(p.basis(j), p.basis(i)));
                bcols.push_back(p.mul_bracket(p.basis(j), p.basis(i)));
            }
            add(Matrix::from_columns(p.field(), p.dim(), dcols));
            add(Matrix::from_columns(p.field(), p.dim(), bcols));
        }
    }
    for (const auto& o : ops)
        if (o.eigenvalues.empty()) return std::nullopt;
    return search_common_eigenvector(p, ops, 0, p.whole());
}

std::optional<std::vector<Subspace>> supersolvable_flag(const PoissonAlgebra& p) {
    if (p.dim() == 0) return std::vector<Subspace>{p.zero_subspace()};
    auto v = find_one_dim_ideal(p);
    if (!v) return std::nullopt;
    Subspace line = Subspace::span(p.field(), p.dim(), {*v});
    Quotient q = quotient(p, line);
    auto rest = supersolvable_flag(q.algebra);
    if (!rest) return std::nullopt;
    std::vector<Subspace> flag{p.zero_subspace()};
    for (const auto& s : *rest) flag.push_back(q.preimage(s));
    return flag;
}

}  // namespace palg
