#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "palg/algebra.hpp"
#include "palg/lattice.hpp"

namespace palg {

enum class Status { Pass, PassVacuous, Fail, NotApplicable };

std::string_view to_string(Status s) noexcept;

/// Named subspaces and elements demonstrating a failure (or the configuration exercised).
struct Witness {
    std::vector<std::pair<std::string, Subspace>> subspaces;
    std::vector<std::pair<std::string, Element>> elements;
    std::string note;
};

struct TheoremResult {
    std::string theorem;
    std::string algebra;
    Status status = Status::NotApplicable;
    /// Configurations whose hypotheses held and were checked.
    std::uint64_t exercised = 0;
    /// Identity tuples evaluated (Lemma-2.11 only).
    std::uint64_t samples = 0;
    std::string detail;
    std::optional<Witness> witness;
};

struct TheoremInfo {
    std::string id;
    std::string statement;
    /// "any", "char 0"
    std::string requires_field;
    /// "per-algebra", "per-pair", "per-configuration"
    std::string scope;
};

/// Every numbered result, in document order.
const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo* find_theorem(std::string_view id);

/// A corpus member with optional auxiliaries. Over Q, conditional results run on the
/// supplied configurations; the hints are verified before use.
struct CorpusEntry {
    std::string id;
    PoissonAlgebra algebra;
    /// Direct summands whose block-diagonal sum equals `algebra` (in order).
    std::vector<PoissonAlgebra> summands;
    std::optional<Subspace> radical_hint;
    std::optional<Subspace> nilradical_hint;
    std::vector<Subspace> subalgebra_hints;
};

struct SuiteOptions {
    /// Theorem ids to run; empty means all.
    std::vector<std::string> filter;
    LatticeBudget budget;
    unsigned jobs = 1;
    std::size_t identity_samples = 1000;
    std::uint64_t seed = 20240917;
};

struct SuiteSummary {
    std::uint64_t pass = 0;
    std::uint64_t pass_vacuous = 0;
    std::uint64_t fail = 0;
    std::uint64_t not_applicable = 0;
    /// Not-applicable results caused by an exceeded budget.
    std::uint64_t budget_exceeded = 0;
    std::uint64_t identity_samples = 0;
};

struct SuiteReport {
    std::vector<TheoremResult> results;
    SuiteSummary summary;
};

/// Results ordered by corpus position, then registry order.
SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options);

/// Throws std::invalid_argument for an unknown id.
TheoremResult check_one(std::string_view id, const CorpusEntry& entry, const SuiteOptions& options);

/// Residual identities sampled by the Lemma-2.11 check; exposed for the acceptance suite.
struct IdentitySample {
    Element a;
    Element x;
    Element y;
    std::size_t n;
    Element pa_residual;
    Element qa_residual;
};

std::vector<IdentitySample> sample_identities(const PoissonAlgebra& p, std::size_t count, std::uint64_t seed);

}  // namespace palg
