#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "palg/algebra.hpp"
#include "palg/theorems.hpp"

namespace palg {

/// Malformed document or manifest: JSON syntax, unknown keys, bad coefficients, bad indices.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// Well-formed tensors that violate an axiom.
class AxiomError : public std::runtime_error {
public:
    AxiomError(std::string name, AxiomViolation v);
    const AxiomViolation& violation() const noexcept { return violation_; }

private:
    AxiomViolation violation_;
};

struct AlgebraFile {
    PoissonAlgebra algebra;
    std::vector<std::string> basis;
    nlohmann::json metadata = nlohmann::json::object();
};

struct ParseOptions {
    /// Keep tensors that fail validation and accept raw_dot / raw_bracket entries.
    bool allow_invalid = false;
    /// Reinterpret the coefficients over another field.
    std::optional<Field> field_override;
};

Field parse_field(std::string_view text);
nlohmann::json field_to_json(Field f);
Field field_from_json(const nlohmann::json& j, const std::string& where);

AlgebraFile parse_algebra(std::string_view text, const ParseOptions& options = {});
AlgebraFile load_algebra(const std::filesystem::path& path, const ParseOptions& options = {});

/// Canonical document text: sorted entries, i <= j for dot, i < j for bracket, nonzero
/// coefficients only, two-space indentation, trailing newline. Tensors that are not
/// symmetric / alternating are written as raw_dot / raw_bracket lists.
std::string serialize_algebra(const AlgebraFile& file);
std::string serialize_algebra(const PoissonAlgebra& p);

std::vector<std::string> default_basis(std::size_t n);

/// Structure-constant entry e_i * e_j = c e_k.
struct Entry {
    std::size_t i, j, k;
    Scalar c;
};

namespace constructions {

PoissonAlgebra zero(Field f, std::size_t n);
PoissonAlgebra idempotent_line(Field f);
/// [x,y] = z, zero dot.
PoissonAlgebra heisenberg_zero_dot(Field f);
/// [x,y] = x, zero dot.
PoissonAlgebra lie2(Field f);
/// Zero dot; bracket entries with i < j.
PoissonAlgebra lie_zero_dot(Field f, std::size_t n, const std::vector<Entry>& bracket, std::string name = {});
/// Zero bracket; dot entries with i <= j.
PoissonAlgebra assoc_zero_bracket(Field f, std::size_t n, const std::vector<Entry>& dot, std::string name = {});
/// Basis l_1..l_m, a_1..a_d: bracket on L, dot on A, [l_s, a] = action[s] a. Validated.
PoissonAlgebra semidirect(Field f, std::size_t lie_dim, const std::vector<Entry>& lie_bracket, std::size_t assoc_dim,
                          const std::vector<Entry>& assoc_dot, const std::vector<Matrix>& action,
                          std::string name = {});
/// x.x = z, [x,y] = x, [z,y] = 2z, unvalidated (these tensors violate the Leibniz rule).
DialgebraTensors xyz_example_tensors(Field f);
/// Throws AxiomError.
PoissonAlgebra xyz_example(Field f);
/// y.y = z, [x,y] = x.
PoissonAlgebra xyz_corrected(Field f);

}  // namespace constructions

/// Total tensor assignments q^(free entries) for dimension n.
BigInt structure_candidates(std::size_t n, std::uint32_t q);

/// Every assignment of the canonical free structure constants over GF(q) that passes
/// validation, in lexicographic order of the assignment (dot entries first).
std::vector<PoissonAlgebra> enumerate_poisson_structures(std::size_t n, std::uint32_t q, unsigned jobs = 1,
                                                         std::uint64_t max_candidates = 10'000'000);

/// Builds corpus members from a JSON construction object (see README for the schema).
std::vector<CorpusEntry> build_construction(const nlohmann::json& spec, const std::string& where = "build");

/// Manifest: {"schema_version": "1", "members": [{"path": ...} | {"build": ...}, ...]}.
/// Paths are relative to base_dir.
std::vector<CorpusEntry> load_manifest(const nlohmann::json& manifest, const std::filesystem::path& base_dir,
                                       const ParseOptions& options = {});
std::vector<CorpusEntry> load_manifest_file(const std::filesystem::path& path, const ParseOptions& options = {});

/// The exhaustive GF(2)/GF(3) dim <= 2 corpora.
std::vector<CorpusEntry> exhaustive_corpus(std::size_t n, std::uint32_t q, unsigned jobs = 1);
/// Hand-built algebras with recorded summands and hints.
std::vector<CorpusEntry> curated_corpus();
/// exhaustive (1,2), (1,3), (2,2), (2,3) followed by the curated corpus.
std::vector<CorpusEntry> standard_corpus(unsigned jobs = 1);

}  // namespace palg
