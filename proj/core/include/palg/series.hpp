#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "palg/algebra.hpp"

namespace palg {

enum class SeriesKind { Derived, LowerCentral, AssocDerived, AssocLower, LieDerived, LieLower };

std::string_view to_string(SeriesKind k) noexcept;
std::optional<SeriesKind> parse_series_kind(std::string_view s) noexcept;

/// A descending chain starting at the base subalgebra. The chain stops at the first
/// zero term or at the first term equal to its predecessor.
struct SeriesReport {
    SeriesKind kind;
    std::vector<Subspace> terms;

    bool reaches_zero() const { return terms.back().is_zero(); }
    /// Index of the final term: the zero term, or the repeated term.
    std::size_t step() const { return terms.size() - 1; }
};

/// Series of the whole algebra.
SeriesReport compute_series(const PoissonAlgebra& p, SeriesKind kind);
/// Series of the subalgebra `base`, computed inside p (products taken within base).
SeriesReport compute_series(const PoissonAlgebra& p, SeriesKind kind, const Subspace& base);

SeriesReport derived_series(const PoissonAlgebra& p);
/// Uses the full sum over i of A^i.A^{n+1-i} + [A^i, A^{n+1-i}]. For validated algebras the
/// shortcut A^n.A + [A^n, A] is computed as well and a mismatch throws std::logic_error.
SeriesReport lower_central_series(const PoissonAlgebra& p);

bool is_solvable(const PoissonAlgebra& p, const Subspace& base);
bool is_nilpotent(const PoissonAlgebra& p, const Subspace& base);
bool is_assoc_solvable(const PoissonAlgebra& p, const Subspace& base);
bool is_assoc_nilpotent(const PoissonAlgebra& p, const Subspace& base);
bool is_lie_solvable(const PoissonAlgebra& p, const Subspace& base);
bool is_lie_nilpotent(const PoissonAlgebra& p, const Subspace& base);

inline bool is_solvable(const PoissonAlgebra& p) { return is_solvable(p, p.whole()); }
inline bool is_nilpotent(const PoissonAlgebra& p) { return is_nilpotent(p, p.whole()); }
inline bool is_assoc_solvable(const PoissonAlgebra& p) { return is_assoc_solvable(p, p.whole()); }
inline bool is_assoc_nilpotent(const PoissonAlgebra& p) { return is_assoc_nilpotent(p, p.whole()); }
inline bool is_lie_solvable(const PoissonAlgebra& p) { return is_lie_solvable(p, p.whole()); }
inline bool is_lie_nilpotent(const PoissonAlgebra& p) { return is_lie_nilpotent(p, p.whole()); }

/// Nilpotency class (index of the zero term of the lower central series), if nilpotent.
std::optional<std::size_t> nilpotency_class(const PoissonAlgebra& p);
/// Derived length, if solvable.
std::optional<std::size_t> derived_length(const PoissonAlgebra& p);

/// A nonzero vector spanning a one-dimensional ideal: a common eigenvector of every
/// P_{e_i} and Q_{e_i}. Searches eigenvalue combinations, pruning empty intersections.
std::optional<Element> find_one_dim_ideal(const PoissonAlgebra& p);

/// A full flag 0 = A_0 < A_1 < ... < A_n = P of ideals with dim A_i = i, or nothing.
std::optional<std::vector<Subspace>> supersolvable_flag(const PoissonAlgebra& p);
inline bool is_supersolvable(const PoissonAlgebra& p) { return supersolvable_flag(p).has_value(); }

}  // namespace palg
