#include "palg/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace palg {

using nlohmann::json;

AxiomError::AxiomError(std::string name, AxiomViolation v)
    : std::runtime_error("algebra '" + name + "' violates " + std::string(to_string(v.axiom)) + " at (" +
                         std::to_string(v.witness[0]) + "," + std::to_string(v.witness[1]) + "," +
                         std::to_string(v.witness[2]) + "), residual " + v.residual.to_string()),
      violation_(std::move(v)) {}

Field parse_field(std::string_view text) {
    if (text == "Q" || text == "q") return Field::rationals();
    std::string_view digits = text;
    if (digits.rfind("GF(", 0) == 0 && digits.size() > 4 && digits.back() == ')') digits = digits.substr(3, digits.size() - 4);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        digits.size() > 3)
        throw std::invalid_argument("field must be Q, GF(p) or a prime p, got '" + std::string(text) + "'");
    return Field::prime(static_cast<std::uint32_t>(std::stoul(std::string(digits))));
}

json field_to_json(Field f) {
    if (!f.is_finite()) return "Q";
    return json{{"p", f.modulus()}};
}

Field field_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
        if (j.is_object() && j.size() == 1 && j.contains("p") && j["p"].is_number_unsigned())
            return Field::prime(j["p"].get<std::uint32_t>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where, e.what());
    }
    throw ParseError(where, "field must be \"Q\" or {\"p\": prime}");
}

std::vector<std::string> default_basis(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

namespace {

void require_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw ParseError(where, "unknown field '" + key + "'");
    }
}

std::size_t index_field(const json& e, const char* key, std::size_t dim, const std::string& where) {
    if (!e.contains(key)) throw ParseError(where, std::string("missing '") + key + "'");
    const json& v = e[key];
    if (!v.is_number_unsigned()) throw ParseError(where + "/" + key, "expected a non-negative integer");
    auto i = v.get<std::uint64_t>();
    if (i >= dim) throw ParseError(where + "/" + key, "index " + std::to_string(i) + " out of range for dim " + std::to_string(dim));
    return static_cast<std::size_t>(i);
}

Scalar coefficient(const json& e, Field f, const std::string& where) {
    if (!e.contains("c")) throw ParseError(where, "missing 'c'");
    const json& c = e["c"];
    if (!c.is_string()) throw ParseError(where + "/c", "coefficients must be strings such as \"3\" or \"-1/2\"");
    try {
        return Scalar::parse(f, c.get<std::string>());
    } catch (const std::exception& ex) {
        throw ParseError(where + "/c", ex.what());
    }
}

struct RawEntry {
    std::size_t i, j, k;
    Scalar c;
};

std::vector<RawEntry> read_entries(const json& doc, const char* key, Field f, std::size_t dim) {
    std::vector<RawEntry> out;
    if (!doc.contains(key)) return out;
    const json& list = doc[key];
    const std::string base = std::string("/") + key;
    if (!list.is_array()) throw ParseError(base, "expected an array");
    for (std::size_t n = 0; n < list.size(); ++n) {
        const std::string where = base + "/" + std::to_string(n);
        require_keys(list[n], {"i", "j", "k", "c"}, where);
        out.push_back({index_field(list[n], "i", dim, where), index_field(list[n], "j", dim, where),
                       index_field(list[n], "k", dim, where), coefficient(list[n], f, where)});
    }
    return out;
}

}  // namespace

AlgebraFile parse_algebra(std::string_view text, const ParseOptions& options) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), "syntax error: " + std::string(e.what()));
    }
    require_keys(doc, {"schema_version", "name", "field", "dim", "basis", "dot", "bracket", "raw_dot", "raw_bracket", "metadata"},
                 "");
    if (!doc.contains("schema_version") || doc["schema_version"] != "1")
        throw ParseError("/schema_version", "expected \"1\"");
    if (!doc.contains("field")) throw ParseError("/field", "missing");
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) throw ParseError("/dim", "expected a non-negative integer");
    const Field declared = field_from_json(doc["field"], "/field");
    const Field f = options.field_override.value_or(declared);
    const std::size_t dim = doc["dim"].get<std::size_t>();
    if (dim > 64) throw ParseError("/dim", "dimension above 64 is not supported");

    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("/name", "expected a string");
        name = doc["name"].get<std::string>();
    }
    std::vector<std::string> basis = default_basis(dim);
    if (doc.contains("basis")) {
        const json& b = doc["basis"];
        if (!b.is_array() || b.size() != dim) throw ParseError("/basis", "expected " + std::to_string(dim) + " labels");
        std::set<std::string> seen;
        for (std::size_t i = 0; i < dim; ++i) {
            if (!b[i].is_string()) throw ParseError("/basis/" + std::to_string(i), "expected a string");
            basis[i] = b[i].get<std::string>();
            if (!seen.insert(basis[i]).second) throw ParseError("/basis/" + std::to_string(i), "duplicate label");
        }
    }

    auto t = DialgebraTensors::zero(f, dim);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen_dot, seen_bracket;
    for (auto& e : read_entries(doc, "dot", f, dim)) {
        if (e.i > e.j) std::swap(e.i, e.j);
        if (!seen_dot.insert({e.i, e.j, e.k}).second)
            throw ParseError("/dot", "duplicate entry for (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                                         std::to_string(e.k) + ")");
        t.set_dot_symmetric(e.i, e.j, e.k, e.c);
    }
    for (auto& e : read_entries(doc, "bracket", f, dim)) {
        if (e.i == e.j) throw ParseError("/bracket", "diagonal entry [e_i, e_i] (use raw_bracket for negative controls)");
        if (e.i > e.j) {
            std::swap(e.i, e.j);
            e.c = -e.c;
        }
        if (!seen_bracket.insert({e.i, e.j, e.k}).second)
            throw ParseError("/bracket", "duplicate entry for (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                                             std::to_string(e.k) + ")");
        t.set_bracket_antisymmetric(e.i, e.j, e.k, e.c);
    }
    const bool raw = doc.contains("raw_dot") || doc.contains("raw_bracket");
    if (raw && !options.allow_invalid) throw ParseError("/raw_dot", "raw entries require allow-invalid");
    for (auto& e : read_entries(doc, "raw_dot", f, dim)) t.dot(e.i, e.j, e.k) += e.c;
    for (auto& e : read_entries(doc, "raw_bracket", f, dim)) t.bracket(e.i, e.j, e.k) += e.c;

    json metadata = json::object();
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) throw ParseError("/metadata", "expected an object");
        metadata = doc["metadata"];
    }

    if (options.allow_invalid) {
        auto v = PoissonAlgebra::validate(t, name);
        if (auto* p = std::get_if<PoissonAlgebra>(&v)) return AlgebraFile{std::move(*p), basis, metadata};
        return AlgebraFile{PoissonAlgebra::unchecked(std::move(t), name), basis, metadata};
    }
    auto v = PoissonAlgebra::validate(std::move(t), name);
    if (auto* bad = std::get_if<AxiomViolation>(&v)) throw AxiomError(name, *bad);
    return AlgebraFile{std::get<PoissonAlgebra>(std::move(v)), basis, metadata};
}

AlgebraFile load_algebra(const std::filesystem::path& path, const ParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    AlgebraFile f = parse_algebra(ss.str(), options);
    if (f.algebra.name().empty()) f.algebra.set_name(path.stem().string());
    return f;
}

namespace {

json entry_json(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    return json{{"i", i}, {"j", j}, {"k", k}, {"c", c.to_string()}};
}

bool canonical_shape(const DialgebraTensors& t) {
    const std::size_t n = t.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (t.dot(i, j, k) != t.dot(j, i, k)) return false;
                if (t.bracket(i, j, k) != -t.bracket(j, i, k)) return false;
                if (i == j && !t.bracket(i, i, k).is_zero()) return false;
            }
    return true;
}

}  // namespace

std::string serialize_algebra(const AlgebraFile& file) {
    const PoissonAlgebra& p = file.algebra;
    const auto& t = p.tensors();
    const std::size_t n = p.dim();
    json doc;
    doc["schema_version"] = "1";
    doc["name"] = p.name();
    doc["field"] = field_to_json(p.field());
    doc["dim"] = n;
    doc["basis"] = file.basis.size() == n ? file.basis : default_basis(n);
    json dot = json::array(), bracket = json::array();
    if (canonical_shape(t)) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (!t.dot(i, j, k).is_zero()) dot.push_back(entry_json(i, j, k, t.dot(i, j, k)));
                    if (i < j && !t.bracket(i, j, k).is_zero()) bracket.push_back(entry_json(i, j, k, t.bracket(i, j, k)));
                }
        doc["dot"] = dot;
        doc["bracket"] = bracket;
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (!t.dot(i, j, k).is_zero()) dot.push_back(entry_json(i, j, k, t.dot(i, j, k)));
                    if (!t.bracket(i, j, k).is_zero()) bracket.push_back(entry_json(i, j, k, t.bracket(i, j, k)));
                }
        doc["raw_dot"] = dot;
        doc["raw_bracket"] = bracket;
    }
    doc["metadata"] = file.metadata.is_object() ? file.metadata : json::object();
    return doc.dump(2) + "\n";
}

std::string serialize_algebra(const PoissonAlgebra& p) { return serialize_algebra(AlgebraFile{p, default_basis(p.dim())}); }

namespace constructions {

namespace {

PoissonAlgebra finish(DialgebraTensors t, std::string name) {
    auto v = PoissonAlgebra::validate(std::move(t), name);
    if (auto* bad = std::get_if<AxiomViolation>(&v)) throw AxiomError(name, *bad);
    return std::get<PoissonAlgebra>(std::move(v));
}

std::string with_field(const std::string& base, Field f) { return base + "/" + f.name(); }

}  // namespace

PoissonAlgebra zero(Field f, std::size_t n) {
    return finish(DialgebraTensors::zero(f, n), with_field("zero(" + std::to_string(n) + ")", f));
}

PoissonAlgebra idempotent_line(Field f) {
    auto t = DialgebraTensors::zero(f, 1);
    t.dot(0, 0, 0) = Scalar::one(f);
    return finish(std::move(t), with_field("idempotent_line", f));
}

PoissonAlgebra heisenberg_zero_dot(Field f) {
    return lie_zero_dot(f, 3, {{0, 1, 2, Scalar::one(f)}}, with_field("heisenberg_zero_dot", f));
}

PoissonAlgebra lie2(Field f) { return lie_zero_dot(f, 2, {{0, 1, 0, Scalar::one(f)}}, with_field("lie2", f)); }

PoissonAlgebra lie_zero_dot(Field f, std::size_t n, const std::vector<Entry>& bracket, std::string name) {
    auto t = DialgebraTensors::zero(f, n);
    for (const auto& e : bracket) {
        if (e.i >= e.j || e.k >= n || e.j >= n) throw std::invalid_argument("lie_zero_dot: entries need i < j < n, k < n");
        t.set_bracket_antisymmetric(e.i, e.j, e.k, e.c);
    }
    return finish(std::move(t), name.empty() ? with_field("lie_zero_dot", f) : std::move(name));
}

PoissonAlgebra assoc_zero_bracket(Field f, std::size_t n, const std::vector<Entry>& dot, std::string name) {
    auto t = DialgebraTensors::zero(f, n);
    for (const auto& e : dot) {
        if (e.i > e.j || e.k >= n || e.j >= n) throw std::invalid_argument("assoc_zero_bracket: entries need i <= j < n, k < n");
        t.set_dot_symmetric(e.i, e.j, e.k, e.c);
    }
    return finish(std::move(t), name.empty() ? with_field("assoc_zero_bracket", f) : std::move(name));
}

PoissonAlgebra semidirect(Field f, std::size_t lie_dim, const std::vector<Entry>& lie_bracket, std::size_t assoc_dim,
                          const std::vector<Entry>& assoc_dot, const std::vector<Matrix>& action, std::string name) {
    if (action.size() != lie_dim) throw std::invalid_argument("semidirect: one action matrix per Lie basis vector");
    const std::size_t n = lie_dim + assoc_dim;
    auto t = DialgebraTensors::zero(f, n);
    for (const auto& e : lie_bracket) {
        if (e.i >= e.j || e.j >= lie_dim || e.k >= lie_dim) throw std::invalid_argument("semidirect: bad Lie entry");
        t.set_bracket_antisymmetric(e.i, e.j, e.k, e.c);
    }
    for (const auto& e : assoc_dot) {
        if (e.i > e.j || e.j >= assoc_dim || e.k >= assoc_dim) throw std::invalid_argument("semidirect: bad dot entry");
        t.set_dot_symmetric(lie_dim + e.i, lie_dim + e.j, lie_dim + e.k, e.c);
    }
    for (std::size_t s = 0; s < lie_dim; ++s) {
        const Matrix& d = action[s];
        if (d.rows() != assoc_dim || d.cols() != assoc_dim) throw std::invalid_argument("semidirect: action matrix shape");
        for (std::size_t a = 0; a < assoc_dim; ++a)
            for (std::size_t b = 0; b < assoc_dim; ++b)
                if (!d(b, a).is_zero()) t.set_bracket_antisymmetric(s, lie_dim + a, lie_dim + b, d(b, a));
    }
    return finish(std::move(t), name.empty() ? with_field("semidirect", f) : std::move(name));
}

DialgebraTensors xyz_example_tensors(Field f) {
    auto t = DialgebraTensors::zero(f, 3);
    t.set_dot_symmetric(0, 0, 2, Scalar::one(f));
    t.set_bracket_antisymmetric(0, 1, 0, Scalar::one(f));
    t.set_bracket_antisymmetric(2, 1, 2, Scalar::from_int(f, 2));
    return t;
}

PoissonAlgebra xyz_example(Field f) { return finish(xyz_example_tensors(f), with_field("xyz_example", f)); }

PoissonAlgebra xyz_corrected(Field f) {
    auto t = DialgebraTensors::zero(f, 3);
    t.set_dot_symmetric(1, 1, 2, Scalar::one(f));
    t.set_bracket_antisymmetric(0, 1, 0, Scalar::one(f));
    return finish(std::move(t), with_field("xyz_corrected", f));
}

}  // namespace constructions

namespace {

std::size_t free_entries(std::size_t n) { return n * n * (n + 1) / 2 + n * n * (n - 1) / 2; }

}  // namespace

BigInt structure_candidates(std::size_t n, std::uint32_t q) {
    return pow(BigInt(q), static_cast<unsigned>(free_entries(n)));
}

std::vector<PoissonAlgebra> enumerate_poisson_structures(std::size_t n, std::uint32_t q, unsigned jobs,
                                                         std::uint64_t max_candidates) {
    const Field f = Field::prime(q);
    const BigInt total_big = structure_candidates(n, q);
    if (total_big > max_candidates)
        throw BudgetExceeded("max_candidates", total_big.str() + " tensor assignments > " + std::to_string(max_candidates));
    const auto total = static_cast<std::uint64_t>(total_big);

    // free positions: dot (i <= j, k) then bracket (i < j, k)
    struct Slot {
        bool dot;
        std::size_t i, j, k;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) slots.push_back({true, i, j, k});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) slots.push_back({false, i, j, k});

    auto decode = [&](std::uint64_t code) {
        auto t = DialgebraTensors::zero(f, n);
        // first slot is the most significant digit
        for (std::size_t s = slots.size(); s-- > 0;) {
            const auto digit = static_cast<long long>(code % q);
            code /= q;
            if (digit == 0) continue;
            const Slot& sl = slots[s];
            if (sl.dot)
                t.set_dot_symmetric(sl.i, sl.j, sl.k, Scalar::from_int(f, digit));
            else
                t.set_bracket_antisymmetric(sl.i, sl.j, sl.k, Scalar::from_int(f, digit));
        }
        return t;
    };

    const std::uint64_t chunk = 256;
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    std::vector<std::vector<std::pair<std::uint64_t, DialgebraTensors>>> found(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            for (std::uint64_t code = c * chunk; code < std::min(total, (c + 1) * chunk); ++code) {
                auto t = decode(code);
                if (!find_axiom_violation(t)) found[c].emplace_back(code, std::move(t));
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(chunks)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<PoissonAlgebra> out;
    std::size_t index = 0;
    for (auto& c : found)
        for (auto& [code, t] : c) {
            std::string name = "exh-n" + std::to_string(n) + "-q" + std::to_string(q) + "-" + std::to_string(index++);
            out.push_back(PoissonAlgebra::validated_or_throw(std::move(t), std::move(name)));
        }
    return out;
}

namespace {

std::vector<Entry> entries_from_json(const json& j, Field f, const std::string& where) {
    std::vector<Entry> out;
    if (j.is_null()) return out;
    if (!j.is_array()) throw ParseError(where, "expected an array");
    for (std::size_t n = 0; n < j.size(); ++n) {
        const std::string w = where + "/" + std::to_string(n);
        require_keys(j[n], {"i", "j", "k", "c"}, w);
        out.push_back({index_field(j[n], "i", 64, w), index_field(j[n], "j", 64, w), index_field(j[n], "k", 64, w),
                       coefficient(j[n], f, w)});
    }
    return out;
}

Subspace subspace_from_json(const json& j, Field f, std::size_t dim, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of vectors");
    std::vector<Vector> vs;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != dim) throw ParseError(where + "/" + std::to_string(r), "expected " + std::to_string(dim) + " coordinates");
        Vector v = Vector::zero(f, dim);
        for (std::size_t c = 0; c < dim; ++c) {
            if (!row[c].is_string()) throw ParseError(where, "coordinates must be strings");
            try {
                v[c] = Scalar::parse(f, row[c].get<std::string>());
            } catch (const std::exception& e) {
                throw ParseError(where, e.what());
            }
        }
        vs.push_back(std::move(v));
    }
    return Subspace::span(f, dim, vs);
}

std::size_t size_field(const json& spec, const char* key, const std::string& where) {
    if (!spec.contains(key) || !spec[key].is_number_unsigned())
        throw ParseError(where + "/" + key, "expected a non-negative integer");
    return spec[key].get<std::size_t>();
}

std::vector<CorpusEntry> single(PoissonAlgebra p) {
    std::string id = p.name();
    return {CorpusEntry{std::move(id), std::move(p), {}, std::nullopt, std::nullopt, {}}};
}

}  // namespace

std::vector<CorpusEntry> build_construction(const json& spec, const std::string& where) {
    if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
        throw ParseError(where, "construction needs a string 'kind'");
    const std::string kind = spec["kind"].get<std::string>();
    auto field = [&] { return spec.contains("field") ? field_from_json(spec["field"], where + "/field") : Field::rationals(); };
    try {
        if (kind == "zero") {
            require_keys(spec, {"kind", "field", "n"}, where);
            return single(constructions::zero(field(), size_field(spec, "n", where)));
        }
        if (kind == "idempotent_line") {
            require_keys(spec, {"kind", "field"}, where);
            return single(constructions::idempotent_line(field()));
        }
        if (kind == "heisenberg_zero_dot") {
            require_keys(spec, {"kind", "field"}, where);
            return single(constructions::heisenberg_zero_dot(field()));
        }
        if (kind == "lie2") {
            require_keys(spec, {"kind", "field"}, where);
            return single(constructions::lie2(field()));
        }
        if (kind == "xyz_example") {
            require_keys(spec, {"kind", "field"}, where);
            return single(constructions::xyz_example(field()));
        }
        if (kind == "xyz_corrected") {
            require_keys(spec, {"kind", "field"}, where);
            Field f = field();
            auto out = single(constructions::xyz_corrected(f));
            if (!f.is_finite())
                out[0].nilradical_hint = Subspace::span(f, 3, {Vector::unit(f, 3, 0), Vector::unit(f, 3, 2)});
            return out;
        }
        if (kind == "lie_zero_dot" || kind == "assoc_zero_bracket") {
            require_keys(spec, {"kind", "field", "n", "entries", "name"}, where);
            Field f = field();
            auto entries = entries_from_json(spec.value("entries", json::array()), f, where + "/entries");
            std::string name = spec.value("name", std::string());
            const std::size_t n = size_field(spec, "n", where);
            return single(kind == "lie_zero_dot" ? constructions::lie_zero_dot(f, n, entries, name)
                                                 : constructions::assoc_zero_bracket(f, n, entries, name));
        }
        if (kind == "semidirect") {
            require_keys(spec, {"kind", "field", "lie_dim", "lie_bracket", "assoc_dim", "assoc_dot", "action", "name"}, where);
            Field f = field();
            const std::size_t l = size_field(spec, "lie_dim", where);
            const std::size_t a = size_field(spec, "assoc_dim", where);
            std::vector<Matrix> action;
            const json& acts = spec.value("action", json::array());
            if (!acts.is_array() || acts.size() != l) throw ParseError(where + "/action", "expected one matrix per Lie basis vector");
            for (std::size_t s = 0; s < l; ++s) {
                const json& m = acts[s];
                if (!m.is_array() || m.size() != a) throw ParseError(where + "/action", "matrix must have assoc_dim rows");
                std::vector<Vector> rows;
                for (const auto& row : m) {
                    if (!row.is_array() || row.size() != a) throw ParseError(where + "/action", "matrix must be square");
                    Vector v = Vector::zero(f, a);
                    for (std::size_t c = 0; c < a; ++c) {
                        if (!row[c].is_string()) throw ParseError(where + "/action", "entries must be strings");
                        v[c] = Scalar::parse(f, row[c].get<std::string>());
                    }
                    rows.push_back(std::move(v));
                }
                action.push_back(Matrix::from_rows(f, a, rows));
            }
            return single(constructions::semidirect(f, l, entries_from_json(spec.value("lie_bracket", json::array()), f, where + "/lie_bracket"), a,
                                                    entries_from_json(spec.value("assoc_dot", json::array()), f, where + "/assoc_dot"),
                                                    action, spec.value("name", std::string())));
        }
        if (kind == "direct_sum") {
            require_keys(spec, {"kind", "of", "name"}, where);
            if (!spec.contains("of") || !spec["of"].is_array() || spec["of"].size() < 2)
                throw ParseError(where + "/of", "expected at least two constructions");
            std::vector<PoissonAlgebra> parts;
            for (std::size_t s = 0; s < spec["of"].size(); ++s) {
                auto built = build_construction(spec["of"][s], where + "/of/" + std::to_string(s));
                if (built.size() != 1) throw ParseError(where + "/of", "summands must be single algebras");
                parts.push_back(std::move(built[0].algebra));
            }
            PoissonAlgebra total = parts[0];
            std::string name = parts[0].name();
            for (std::size_t s = 1; s < parts.size(); ++s) {
                name += " + " + parts[s].name();
                total = direct_sum(total, parts[s], name);
            }
            if (spec.contains("name")) total.set_name(spec["name"].get<std::string>());
            auto out = single(std::move(total));
            out[0].summands = std::move(parts);
            return out;
        }
        if (kind == "curated") {
            require_keys(spec, {"kind"}, where);
            return curated_corpus();
        }
        if (kind == "exhaustive") {
            require_keys(spec, {"kind", "n", "q"}, where);
            return exhaustive_corpus(size_field(spec, "n", where), static_cast<std::uint32_t>(size_field(spec, "q", where)));
        }
    } catch (const json::exception& e) {
        throw ParseError(where, e.what());
    }
    throw ParseError(where + "/kind", "unknown construction '" + kind + "'");
}

std::vector<CorpusEntry> load_manifest(const json& manifest, const std::filesystem::path& base_dir,
                                       const ParseOptions& options) {
    require_keys(manifest, {"schema_version", "name", "members"}, "");
    if (!manifest.contains("schema_version") || manifest["schema_version"] != "1")
        throw ParseError("/schema_version", "expected \"1\"");
    if (!manifest.contains("members") || !manifest["members"].is_array()) throw ParseError("/members", "expected an array");
    std::vector<CorpusEntry> out;
    const json& members = manifest["members"];
    for (std::size_t m = 0; m < members.size(); ++m) {
        const std::string where = "/members/" + std::to_string(m);
        const json& member = members[m];
        require_keys(member, {"path", "build", "id", "radical", "nilradical", "subalgebras"}, where);
        std::vector<CorpusEntry> built;
        if (member.contains("path") == member.contains("build")) throw ParseError(where, "exactly one of 'path' or 'build'");
        if (member.contains("path")) {
            if (!member["path"].is_string()) throw ParseError(where + "/path", "expected a string");
            std::filesystem::path path = base_dir / member["path"].get<std::string>();
            AlgebraFile file = load_algebra(path, options);
            built = single(std::move(file.algebra));
        } else {
            built = build_construction(member["build"], where + "/build");
        }
        if (member.contains("id")) {
            if (built.size() != 1) throw ParseError(where + "/id", "id only applies to single members");
            built[0].id = member["id"].get<std::string>();
        }
        for (auto& e : built) {
            const Field f = e.algebra.field();
            const std::size_t n = e.algebra.dim();
            if (member.contains("radical")) e.radical_hint = subspace_from_json(member["radical"], f, n, where + "/radical");
            if (member.contains("nilradical"))
                e.nilradical_hint = subspace_from_json(member["nilradical"], f, n, where + "/nilradical");
            if (member.contains("subalgebras")) {
                if (!member["subalgebras"].is_array()) throw ParseError(where + "/subalgebras", "expected an array");
                for (const auto& s : member["subalgebras"])
                    e.subalgebra_hints.push_back(subspace_from_json(s, f, n, where + "/subalgebras"));
            }
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<CorpusEntry> load_manifest_file(const std::filesystem::path& path, const ParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
    json manifest;
    try {
        manifest = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), "syntax error: " + std::string(e.what()));
    }
    return load_manifest(manifest, path.parent_path(), options);
}

std::vector<CorpusEntry> exhaustive_corpus(std::size_t n, std::uint32_t q, unsigned jobs) {
    std::vector<CorpusEntry> out;
    for (auto& p : enumerate_poisson_structures(n, q, jobs)) {
        auto e = single(std::move(p));
        out.push_back(std::move(e[0]));
    }
    return out;
}

std::vector<CorpusEntry> curated_corpus() {
    using namespace constructions;
    const Field gf2 = Field::prime(2), gf3 = Field::prime(3), gf5 = Field::prime(5), q = Field::rationals();
    std::vector<CorpusEntry> out;
    auto add = [&](PoissonAlgebra p, std::vector<PoissonAlgebra> summands = {}) {
        std::string id = p.name();
        out.push_back(CorpusEntry{std::move(id), std::move(p), std::move(summands), std::nullopt, std::nullopt, {}});
    };
    auto add_sum = [&](const PoissonAlgebra& a, const PoissonAlgebra& b) {
        add(direct_sum(a, b, a.name() + " + " + b.name()), {a, b});
    };
    for (Field f : {gf2, gf3, q})
        for (std::size_t n = 1; n <= 4; ++n) add(zero(f, n));
    for (Field f : {gf2, gf3, q}) {
        add(idempotent_line(f));
        add(heisenberg_zero_dot(f));
        add(lie2(f));
    }
    add(xyz_corrected(gf5));
    add(xyz_corrected(q));
    out.back().nilradical_hint = Subspace::span(q, 3, {Vector::unit(q, 3, 0), Vector::unit(q, 3, 2)});
    for (auto& e : out) {
        if (e.algebra.name() == "idempotent_line/Q") e.radical_hint = e.nilradical_hint = Subspace::zero(q, 1);
        if (e.algebra.name() == "lie2/Q") e.nilradical_hint = Subspace::span(q, 2, {Vector::unit(q, 2, 0)});
    }

    // Fe + N
    add_sum(idempotent_line(gf2), zero(gf2, 1));
    add_sum(idempotent_line(gf3), zero(gf3, 1));
    add_sum(idempotent_line(gf3), heisenberg_zero_dot(gf3));
    add_sum(idempotent_line(gf2), zero(gf2, 2));
    add_sum(lie2(gf2), idempotent_line(gf2));
    add_sum(heisenberg_zero_dot(gf2), lie2(gf2));
    add_sum(idempotent_line(gf3), idempotent_line(gf3));
    add_sum(lie2(gf3), zero(gf3, 1));
    // L = span(l), A = span(a, b, c) with a.a = b and [l, a] = c
    {
        Matrix d(gf3, 3, 3);
        d(2, 0) = Scalar::one(gf3);
        add(semidirect(gf3, 1, {}, 3, {{0, 0, 1, Scalar::one(gf3)}}, {d}, "semidirect(l;a.a=b,[l,a]=c)/GF(3)"));
    }
    return out;
}

std::vector<CorpusEntry> standard_corpus(unsigned jobs) {
    std::vector<CorpusEntry> out;
    for (std::size_t n : {1, 2})
        for (std::uint32_t q : {2u, 3u}) {
            auto part = exhaustive_corpus(n, q, jobs);
            std::move(part.begin(), part.end(), std::back_inserter(out));
        }
    auto curated = curated_corpus();
    std::move(curated.begin(), curated.end(), std::back_inserter(out));
    return out;
}

}  // namespace palg
