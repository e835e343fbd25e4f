#include "palg/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "palg/corpus.hpp"
#include "palg/engel.hpp"
#include "palg/lattice.hpp"
#include "palg/series.hpp"
#include "palg/theorems.hpp"

namespace palg::cli {

using nlohmann::json;
namespace fs = std::filesystem;

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 14];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

namespace {

struct Options {
    std::string field;
    std::size_t budget_dim = LatticeBudget{}.max_dim;
    std::uint32_t budget_q = LatticeBudget{}.max_q;
    std::uint64_t budget_subspaces = LatticeBudget{}.max_subspaces;
    std::uint64_t budget_elements = LatticeBudget{}.max_elements;
    std::string format = "text";
    bool allow_invalid = false;
    unsigned jobs = 1;
    std::string out;

    std::vector<std::string> files;
    std::string kind = "derived";
    std::string manifest;
    std::vector<std::string> theorems;
    std::size_t identity_samples = 1000;
    std::uint64_t seed = SuiteOptions{}.seed;
    std::size_t enum_n = 0;
    std::uint32_t enum_q = 0;
    std::string out_dir;

    LatticeBudget budget() const { return {budget_dim, budget_q, budget_subspaces, budget_elements}; }
    ParseOptions parse_options() const {
        ParseOptions o;
        o.allow_invalid = allow_invalid;
        if (!field.empty()) o.field_override = parse_field(field);
        return o;
    }
    bool json_format() const { return format == "json"; }
};

json vec_json(const Vector& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(v[i].to_string());
    return a;
}

json sub_json(const Subspace& s) {
    json a = json::array();
    for (const auto& v : s.basis_vectors()) a.push_back(vec_json(v));
    return a;
}

std::string label(const Vector& v, const std::vector<std::string>& basis) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string c = v[i].to_string();
        std::string term = c == "1" ? basis[i] : (c == "-1" ? "-" + basis[i] : c + "*" + basis[i]);
        if (!s.empty()) s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
        else s = term;
    }
    return s.empty() ? "0" : s;
}

std::string label(const Subspace& s, const std::vector<std::string>& basis) {
    if (s.is_zero()) return "0";
    if (s.is_whole()) return "P";
    std::string out = "span(";
    bool first = true;
    for (const auto& v : s.basis_vectors()) {
        out += (first ? "" : ", ") + label(v, basis);
        first = false;
    }
    return out + ")";
}

json witness_json(const Witness& w) {
    json sub = json::array(), el = json::array();
    for (const auto& [n, s] : w.subspaces) sub.push_back({{"name", n}, {"basis", sub_json(s)}});
    for (const auto& [n, e] : w.elements) el.push_back({{"name", n}, {"coords", vec_json(e)}});
    return {{"subspaces", sub}, {"elements", el}, {"note", w.note}};
}

json result_json(const TheoremResult& r) {
    json j{{"theorem", r.theorem},   {"algebra", r.algebra}, {"status", std::string(to_string(r.status))},
           {"exercised", r.exercised}, {"samples", r.samples}, {"detail", r.detail}};
    j["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
    return j;
}

class Reporter {
public:
    Reporter(const Options& o, std::string command, std::ostream& out)
        : opts_(o), command_(std::move(command)), out_(out), start_(std::chrono::steady_clock::now()) {}

    void input(const std::string& path) {
        inputs_.push_back({{"path", path}, {"sha256", sha256_file(path)}});
    }
    std::ostringstream& text() { return text_; }

    void emit(const json& results, int code) {
        std::string body;
        if (opts_.json_format()) {
            json env;
            env["tool"] = "palg";
            env["version"] = PALG_VERSION_STRING;
            env["schema_version"] = "1";
            env["command"] = command_;
            env["inputs"] = inputs_;
            env["results"] = results;
            env["exit_code"] = code;
            env["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count()}};
            body = env.dump(2) + "\n";
        } else {
            body = text_.str();
        }
        if (opts_.out.empty()) {
            out_ << body;
        } else {
            std::ofstream f(opts_.out, std::ios::binary);
            if (!f) throw std::system_error(errno, std::generic_category(), "cannot write " + opts_.out);
            f << body;
        }
    }

private:
    const Options& opts_;
    std::string command_;
    std::ostream& out_;
    std::chrono::steady_clock::time_point start_;
    json inputs_ = json::array();
    std::ostringstream text_;
};

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    Reporter rep(o, "validate", out);
    json results = json::array();
    int code = Ok;
    ParseOptions po = o.parse_options();
    po.allow_invalid = true;
    for (const auto& path : o.files) {
        json r{{"path", path}};
        try {
            rep.input(path);
            AlgebraFile f = load_algebra(path, po);
            auto v = find_axiom_violation(f.algebra.tensors());
            if (!v) {
                r["valid"] = true;
                rep.text() << path << ": VALID\n";
            } else {
                code = std::max<int>(code, MathFailure);
                const auto& w = v->witness;
                r["valid"] = false;
                r["axiom"] = std::string(to_string(v->axiom));
                r["witness"] = {w[0], w[1], w[2]};
                r["residual"] = vec_json(v->residual);
                r["witness_residual_recheck"] =
                    vec_json(axiom_residual(f.algebra.tensors(), v->axiom, w[0], w[1], w[2]));
                rep.text() << path << ": INVALID " << to_string(v->axiom) << " violated at (" << f.basis[w[0]] << ", "
                           << f.basis[w[1]] << ", " << f.basis[w[2]] << "), residual " << label(v->residual, f.basis)
                           << "\n";
            }
        } catch (const ParseError& e) {
            code = UsageError;
            r["error"] = std::string("parse error: ") + e.what();
            err << path << ": parse error: " << e.what() << "\n";
        } catch (const std::system_error& e) {
            code = UsageError;
            r["error"] = e.what();
            err << path << ": " << e.what() << "\n";
        } catch (const std::invalid_argument& e) {
            code = UsageError;
            r["error"] = e.what();
            err << path << ": " << e.what() << "\n";
        }
        results.push_back(r);
    }
    rep.emit(results, code);
    return code;
}

AlgebraFile load_checked(const Options& o, const std::string& path) { return load_algebra(path, o.parse_options()); }

json series_flags(const PoissonAlgebra& p) {
    json j;
    j["solvable"] = is_solvable(p);
    j["nilpotent"] = is_nilpotent(p);
    j["assoc_solvable"] = is_assoc_solvable(p);
    j["assoc_nilpotent"] = is_assoc_nilpotent(p);
    j["lie_solvable"] = is_lie_solvable(p);
    j["lie_nilpotent"] = is_lie_nilpotent(p);
    j["supersolvable"] = is_supersolvable(p);
    auto cls = nilpotency_class(p);
    auto len = derived_length(p);
    j["nilpotency_class"] = cls ? json(*cls) : json(nullptr);
    j["derived_length"] = len ? json(*len) : json(nullptr);
    return j;
}

int cmd_analyze(const Options& o, std::ostream& out) {
    Reporter rep(o, "analyze", out);
    const std::string& path = o.files.at(0);
    rep.input(path);
    AlgebraFile f = load_checked(o, path);
    const PoissonAlgebra& p = f.algebra;
    const auto& b = f.basis;
    auto& t = rep.text();
    json r;
    r["algebra"] = p.name();
    r["field"] = field_to_json(p.field());
    r["dim"] = p.dim();
    r["basis"] = b;
    r["properties"] = series_flags(p);
    const Subspace z = centre(p).space;
    r["centre"] = sub_json(z);
    r["square"] = sub_json(subspace_product(p, p.whole(), p.whole(), Mult::Both));

    t << "algebra " << p.name() << " over " << p.field().name() << ", dim " << p.dim() << "\n";
    for (const auto& [k, v] : r["properties"].items()) t << "  " << k << ": " << (v.is_null() ? "-" : v.dump()) << "\n";
    t << "  centre: " << label(z, b) << "\n";

    if (!p.field().is_finite()) {
        const json marker = "requires-finite-field";
        r["radical"] = is_solvable(p) ? sub_json(p.whole()) : marker;
        r["nilradical"] = is_nilpotent(p) ? sub_json(p.whole()) : marker;
        for (const char* k : {"socle", "zero_socle", "frattini", "frattini_assoc", "frattini_lie", "phi_free", "splitting",
                              "classification"})
            r[k] = marker;
        r["partial"] = true;
        t << "  radical: " << (is_solvable(p) ? "P" : "requires-finite-field") << "\n";
        t << "  nilradical: " << (is_nilpotent(p) ? "P" : "requires-finite-field") << "\n";
        t << "  socle, frattini, splitting, classification: requires-finite-field\n";
        rep.emit(r, Ok);
        return Ok;
    }

    const StructureReport s = analyze(p, o.budget());
    auto frat = [&](const FrattiniPair& fp) { return json{{"F", sub_json(fp.frattini.space)}, {"phi", sub_json(fp.ideal.space)}}; };
    r["radical"] = sub_json(s.radical.space);
    r["nilradical"] = sub_json(s.nilradical.space);
    r["socle"] = sub_json(s.socle.space);
    r["zero_socle"] = sub_json(s.zero_socle.space);
    r["frattini"] = frat(s.frattini);
    r["frattini_assoc"] = frat(s.frattini_assoc);
    r["frattini_lie"] = frat(s.frattini_lie);
    r["phi_free"] = s.phi_free;
    r["splitting"] = s.splitting ? sub_json(s.splitting->space) : json(nullptr);
    const auto& c = s.classification;
    r["classification"] = {{"kind", std::string(to_string(c.kind))},
                           {"all_maximals_ideals", c.all_maximals_ideals},
                           {"non_ideal_maximal", c.non_ideal_maximal ? sub_json(*c.non_ideal_maximal) : json(nullptr)},
                           {"idempotent", c.idempotent ? vec_json(*c.idempotent) : json(nullptr)},
                           {"nilradical", c.nilradical ? sub_json(*c.nilradical) : json(nullptr)}};
    r["partial"] = false;

    t << "  radical: " << label(s.radical.space, b) << "\n";
    t << "  nilradical: " << label(s.nilradical.space, b) << "\n";
    t << "  socle: " << label(s.socle.space, b) << "\n";
    t << "  zero socle: " << label(s.zero_socle.space, b) << "\n";
    t << "  frattini: F = " << label(s.frattini.frattini.space, b) << ", phi = " << label(s.frattini.ideal.space, b) << "\n";
    t << "  frattini (assoc): F = " << label(s.frattini_assoc.frattini.space, b)
      << ", phi = " << label(s.frattini_assoc.ideal.space, b) << "\n";
    t << "  frattini (lie): F = " << label(s.frattini_lie.frattini.space, b)
      << ", phi = " << label(s.frattini_lie.ideal.space, b) << "\n";
    t << "  phi-free: " << (s.phi_free ? "true" : "false") << "\n";
    t << "  splits over phi: " << (s.splitting ? label(s.splitting->space, b) : std::string("no")) << "\n";
    t << "  classification: " << to_string(c.kind);
    if (c.idempotent) t << " (e = " << label(*c.idempotent, b) << ")";
    if (c.nilradical) t << " (N = " << label(*c.nilradical, b) << ")";
    t << "\n";
    rep.emit(r, Ok);
    return Ok;
}

int cmd_series(const Options& o, std::ostream& out) {
    Reporter rep(o, "series", out);
    const std::string& path = o.files.at(0);
    rep.input(path);
    AlgebraFile f = load_checked(o, path);
    std::vector<SeriesKind> kinds;
    if (o.kind == "all") {
        kinds = {SeriesKind::Derived,      SeriesKind::LowerCentral, SeriesKind::AssocDerived,
                 SeriesKind::AssocLower,   SeriesKind::LieDerived,   SeriesKind::LieLower};
    } else {
        auto k = parse_series_kind(o.kind);
        if (!k) throw CLI::ValidationError("--kind", "unknown series kind '" + o.kind + "'");
        kinds = {*k};
    }
    json results = json::array();
    for (SeriesKind k : kinds) {
        SeriesReport s = compute_series(f.algebra, k);
        json terms = json::array();
        rep.text() << to_string(k) << ":";
        for (const auto& term : s.terms) {
            terms.push_back(sub_json(term));
            rep.text() << " " << label(term, f.basis);
        }
        rep.text() << (s.reaches_zero() ? "" : " (stabilizes)") << "\n";
        results.push_back({{"kind", std::string(to_string(k))},
                           {"terms", terms},
                           {"dims", [&] {
                                json d = json::array();
                                for (const auto& term : s.terms) d.push_back(term.dim());
                                return d;
                            }()},
                           {"reaches_zero", s.reaches_zero()},
                           {"step", s.step()}});
    }
    rep.emit(results, Ok);
    return Ok;
}

int cmd_check(const Options& o, std::ostream& out) {
    Reporter rep(o, "check", out);
    rep.input(o.manifest);
    auto corpus = load_manifest_file(o.manifest, o.parse_options());
    SuiteOptions so;
    so.filter = o.theorems;
    so.budget = o.budget();
    so.jobs = o.jobs;
    so.identity_samples = o.identity_samples;
    so.seed = o.seed;
    SuiteReport report = run_suite(corpus, so);
    const auto& s = report.summary;
    int code = s.fail > 0 ? MathFailure : (s.budget_exceeded > 0 ? BudgetError : Ok);

    json results;
    json list = json::array();
    for (const auto& r : report.results) {
        list.push_back(result_json(r));
        if (r.status == Status::Fail || o.theorems.size() > 0)
            rep.text() << std::left << std::setw(12) << r.theorem << " " << std::setw(14) << to_string(r.status) << " "
                       << r.algebra << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
    results["corpus_size"] = corpus.size();
    results["results"] = list;
    results["summary"] = {{"pass", s.pass},
                          {"pass_vacuous", s.pass_vacuous},
                          {"fail", s.fail},
                          {"not_applicable", s.not_applicable},
                          {"budget_exceeded", s.budget_exceeded},
                          {"identity_samples", s.identity_samples}};
    rep.text() << corpus.size() << " algebras, " << report.results.size() << " results: " << s.pass << " pass, "
               << s.pass_vacuous << " pass-vacuous, " << s.fail << " fail, " << s.not_applicable << " not-applicable ("
               << s.budget_exceeded << " over budget), " << s.identity_samples << " identity samples\n";
    rep.emit(results, code);
    return code;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    Reporter rep(o, "enumerate", out);
    auto algebras = enumerate_poisson_structures(o.enum_n, o.enum_q, o.jobs);
    json files = json::array();
    json members = json::array();
    if (!o.out_dir.empty()) fs::create_directories(o.out_dir);
    const std::size_t width = std::to_string(algebras.size()).size();
    for (std::size_t i = 0; i < algebras.size(); ++i) {
        std::ostringstream name;
        name << "n" << o.enum_n << "-q" << o.enum_q << "-" << std::setw(static_cast<int>(width)) << std::setfill('0') << i
             << ".palg";
        if (!o.out_dir.empty()) {
            std::ofstream f(fs::path(o.out_dir) / name.str(), std::ios::binary);
            if (!f) throw std::system_error(errno, std::generic_category(), "cannot write " + name.str());
            f << serialize_algebra(algebras[i]);
        }
        files.push_back(name.str());
        members.push_back({{"path", name.str()}});
    }
    if (!o.out_dir.empty()) {
        std::ofstream m(fs::path(o.out_dir) / "manifest.json", std::ios::binary);
        json manifest{{"schema_version", "1"},
                      {"name", "exhaustive n=" + std::to_string(o.enum_n) + " q=" + std::to_string(o.enum_q)},
                      {"members", members}};
        m << manifest.dump(2) << "\n";
    }
    rep.text() << "n=" << o.enum_n << " q=" << o.enum_q << ": " << structure_candidates(o.enum_n, o.enum_q).str()
               << " candidates, " << algebras.size() << " valid" << (o.out_dir.empty() ? "" : ", written to " + o.out_dir)
               << "\n";
    json results{{"n", o.enum_n},
                 {"q", o.enum_q},
                 {"candidates", structure_candidates(o.enum_n, o.enum_q).str()},
                 {"count", algebras.size()},
                 {"files", files}};
    rep.emit(results, Ok);
    return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Structure theory of finite-dimensional Poisson algebras", "palg"};
    app.set_version_flag("--version", PALG_VERSION_STRING);
    app.require_subcommand(1);
    Options o;

    app.add_option("--field", o.field, "Reinterpret coefficients over Q or GF(p)");
    app.add_option("--budget-dim", o.budget_dim, "Largest dimension for subspace enumeration")->capture_default_str();
    app.add_option("--budget-q", o.budget_q, "Largest field size for subspace enumeration")->capture_default_str();
    app.add_option("--budget-subspaces", o.budget_subspaces, "Largest number of enumerated subspaces")->capture_default_str();
    app.add_option("--budget-elements", o.budget_elements, "Largest number of scanned elements")->capture_default_str();
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_flag("--allow-invalid", o.allow_invalid, "Accept tensors that fail validation (negative controls)");
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    app.add_option("--out", o.out, "Write the report to a file instead of stdout");

    auto* validate = app.add_subcommand("validate", "Check the Poisson axioms of algebra files");
    validate->add_option("files", o.files, ".palg files")->required();
    auto* analyze = app.add_subcommand("analyze", "Radicals, socles, Frattini subalgebras and classification");
    analyze->add_option("file", o.files, ".palg file")->required()->expected(1);
    auto* series = app.add_subcommand("series", "Derived and lower central series");
    series->add_option("file", o.files, ".palg file")->required()->expected(1);
    series->add_option("--kind", o.kind, "derived, lower-central, assoc-derived, assoc-lower, lie-derived, lie-lower or all")
        ->capture_default_str();
    auto* check = app.add_subcommand("check", "Run the theorem suite over a corpus manifest");
    check->add_option("manifest", o.manifest, "Corpus manifest (JSON)")->required();
    check->add_option("--theorem", o.theorems, "Restrict to these theorem ids");
    check->add_option("--identity-samples", o.identity_samples, "Identity tuples per algebra")->capture_default_str();
    check->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
    auto* enumerate = app.add_subcommand("enumerate", "All Poisson structures of dimension n over GF(q)");
    enumerate->add_option("n", o.enum_n, "Dimension")->required()->check(CLI::Range(1, 64));
    enumerate->add_option("q", o.enum_q, "Prime field size")->required();
    enumerate->add_option("dir", o.out_dir, "Directory for the .palg files and manifest.json");
    for (auto* sub : {validate, analyze, series, check, enumerate}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? Ok : UsageError;
    }

    try {
        if (*validate) return cmd_validate(o, out, err);
        if (*analyze) return cmd_analyze(o, out);
        if (*series) return cmd_series(o, out);
        if (*check) return cmd_check(o, out);
        if (*enumerate) return cmd_enumerate(o, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return BudgetError;
    } catch (const AxiomError& e) {
        err << "error: " << e.what() << "\n";
        return MathFailure;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return UsageError;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const std::system_error& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return MathFailure;
    }
    return UsageError;
}

}  // namespace palg::cli
