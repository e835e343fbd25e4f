#include "palg/algebra.hpp"

#include <functional>
#include <stdexcept>

namespace palg {

// ---------------------------------------------------------------- tensors

DialgebraTensors DialgebraTensors::zero(Field f, std::size_t n) {
    return DialgebraTensors{f, n, std::vector<Scalar>(n * n * n, Scalar::zero(f)),
                            std::vector<Scalar>(n * n * n, Scalar::zero(f))};
}

void DialgebraTensors::set_dot_symmetric(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    dot(i, j, k) = c;
    dot(j, i, k) = c;
}

void DialgebraTensors::set_bracket_antisymmetric(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    bracket(i, j, k) = c;
    bracket(j, i, k) = -c;
}

namespace {

Element bilinear(const DialgebraTensors& t, const std::vector<Scalar>& constants, const Element& x, const Element& y) {
    const std::size_t n = t.dim;
    if (x.size() != n || y.size() != n) throw std::invalid_argument("element dimension mismatch");
    Element out(t.field, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            const std::size_t base = (i * n + j) * n;
            for (std::size_t k = 0; k < n; ++k)
                if (!constants[base + k].is_zero()) out[k] += xy * constants[base + k];
        }
    }
    return out;
}

}  // namespace

Element DialgebraTensors::dot_product(const Element& x, const Element& y) const {
    return bilinear(*this, dot_constants, x, y);
}

Element DialgebraTensors::bracket_product(const Element& x, const Element& y) const {
    return bilinear(*this, bracket_constants, x, y);
}

std::string_view to_string(Axiom a) noexcept {
    switch (a) {
        case Axiom::Commutativity: return "commutativity";
        case Axiom::Associativity: return "associativity";
        case Axiom::Alternating: return "alternating";
        case Axiom::Jacobi: return "jacobi";
        case Axiom::Leibniz: return "leibniz";
    }
    return "unknown";
}

Element axiom_residual(const DialgebraTensors& t, Axiom axiom, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = t.dim;
    if (i >= n || j >= n || k >= n) throw std::out_of_range("axiom witness index out of range");
    const Element x = Vector::unit(t.field, n, i);
    const Element y = Vector::unit(t.field, n, j);
    const Element z = Vector::unit(t.field, n, k);
    auto dot = [&](const Element& a, const Element& b) { return t.dot_product(a, b); };
    auto br = [&](const Element& a, const Element& b) { return t.bracket_product(a, b); };
    switch (axiom) {
        case Axiom::Commutativity: return dot(x, y) - dot(y, x);
        case Axiom::Associativity: return dot(dot(x, y), z) - dot(x, dot(y, z));
        case Axiom::Alternating: return i == j ? br(x, x) : br(x, y) + br(y, x);
        case Axiom::Jacobi: return br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y));
        case Axiom::Leibniz: return br(dot(x, y), z) - dot(br(x, z), y) - dot(x, br(y, z));
    }
    throw std::logic_error("unknown axiom");
}

std::optional<AxiomViolation> find_axiom_violation(const DialgebraTensors& t) {
    const std::size_t n = t.dim;
    if (t.dot_constants.size() != n * n * n || t.bracket_constants.size() != n * n * n)
        throw std::invalid_argument("structure tensors must have n^3 entries");
    for (const auto& c : t.dot_constants)
        if (c.field() != t.field) throw std::invalid_argument("structure constant from a different field");
    for (const auto& c : t.bracket_constants)
        if (c.field() != t.field) throw std::invalid_argument("structure constant from a different field");

    for (Axiom axiom : {Axiom::Commutativity, Axiom::Associativity, Axiom::Alternating, Axiom::Jacobi, Axiom::Leibniz}) {
        const bool ternary = axiom == Axiom::Associativity || axiom == Axiom::Jacobi || axiom == Axiom::Leibniz;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < (ternary ? n : 1); ++k) {
                    Element r = axiom_residual(t, axiom, i, j, k);
                    if (!r.is_zero()) return AxiomViolation{axiom, {i, j, ternary ? k : 0}, std::move(r)};
                }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- PoissonAlgebra

std::variant<PoissonAlgebra, AxiomViolation> PoissonAlgebra::validate(DialgebraTensors tensors, std::string name) {
    if (auto v = find_axiom_violation(tensors)) return *v;
    return PoissonAlgebra(std::move(tensors), std::move(name), true);
}

PoissonAlgebra PoissonAlgebra::validated_or_throw(DialgebraTensors tensors, std::string name) {
    auto result = validate(std::move(tensors), name);
    if (auto* v = std::get_if<AxiomViolation>(&result)) {
        throw std::invalid_argument("algebra '" + name + "' violates " + std::string(to_string(v->axiom)) + " at (" +
                                    std::to_string(v->witness[0]) + "," + std::to_string(v->witness[1]) + "," +
                                    std::to_string(v->witness[2]) + "), residual " + v->residual.to_string());
    }
    return std::get<PoissonAlgebra>(std::move(result));
}

PoissonAlgebra PoissonAlgebra::unchecked(DialgebraTensors tensors, std::string name) {
    if (tensors.dot_constants.size() != tensors.dim * tensors.dim * tensors.dim ||
        tensors.bracket_constants.size() != tensors.dot_constants.size())
        throw std::invalid_argument("structure tensors must have n^3 entries");
    return PoissonAlgebra(std::move(tensors), std::move(name), false);
}

Matrix PoissonAlgebra::p_operator(const Element& a) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul_dot(a, basis(j)));
    return Matrix::from_columns(field(), dim(), cols);
}

Matrix PoissonAlgebra::q_operator(const Element& a) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul_bracket(a, basis(j)));
    return Matrix::from_columns(field(), dim(), cols);
}

// ---------------------------------------------------------------- products and closures

namespace {

bool uses_dot(Mult m) { return m != Mult::Bracket; }
bool uses_bracket(Mult m) { return m != Mult::Dot; }

/// Calls f on every product of x and y (both orders) under the chosen multiplications.
template <typename F>
void for_each_product(const PoissonAlgebra& p, const Element& x, const Element& y, Mult m, F&& f) {
    if (uses_dot(m)) {
        f(p.mul_dot(x, y));
        if (!p.validated()) f(p.mul_dot(y, x));
    }
    if (uses_bracket(m)) {
        f(p.mul_bracket(x, y));
        if (!p.validated()) f(p.mul_bracket(y, x));
    }
}

void require_ambient(const PoissonAlgebra& p, const Subspace& s) {
    if (s.ambient_dim() != p.dim() || s.field() != p.field())
        throw std::invalid_argument("subspace does not belong to algebra '" + p.name() + "'");
}

Subspace span_of(const PoissonAlgebra& p, const std::vector<Vector>& vectors) {
    return Subspace::span(p.field(), p.dim(), vectors);
}

}  // namespace

Subspace subspace_product_dot(const PoissonAlgebra& p, const Subspace& u, const Subspace& v) {
    return subspace_product(p, u, v, Mult::Dot);
}

Subspace subspace_product_bracket(const PoissonAlgebra& p, const Subspace& u, const Subspace& v) {
    return subspace_product(p, u, v, Mult::Bracket);
}

Subspace subspace_product(const PoissonAlgebra& p, const Subspace& u, const Subspace& v, Mult m) {
    require_ambient(p, u);
    require_ambient(p, v);
    std::vector<Vector> out;
    const auto ub = u.basis_vectors();
    const auto vb = v.basis_vectors();
    for (const auto& a : ub)
        for (const auto& b : vb)
            for_each_product(p, a, b, m, [&](Element e) {
                if (!e.is_zero()) out.push_back(std::move(e));
            });
    return span_of(p, out);
}

bool is_subalgebra(const PoissonAlgebra& p, const Subspace& s, Mult m) {
    require_ambient(p, s);
    const auto b = s.basis_vectors();
    bool ok = true;
    for (std::size_t i = 0; i < b.size() && ok; ++i)
        for (std::size_t j = p.validated() ? i : 0; j < b.size() && ok; ++j)
            for_each_product(p, b[i], b[j], m, [&](const Element& e) { ok = ok && s.contains(e); });
    return ok;
}

bool is_ideal_in(const PoissonAlgebra& p, const Subspace& b, const Subspace& c, Mult m) {
    require_ambient(p, b);
    require_ambient(p, c);
    if (!c.contains(b)) return false;
    const auto bb = b.basis_vectors();
    const auto cb = c.basis_vectors();
    bool ok = true;
    for (std::size_t i = 0; i < bb.size() && ok; ++i)
        for (std::size_t j = 0; j < cb.size() && ok; ++j)
            for_each_product(p, bb[i], cb[j], m, [&](const Element& e) { ok = ok && b.contains(e); });
    return ok;
}

bool is_ideal(const PoissonAlgebra& p, const Subspace& s, Mult m) {
    return is_ideal_in(p, s, p.whole(), m);
}

bool is_zero_subalgebra(const PoissonAlgebra& p, const Subspace& s) {
    return subspace_product(p, s, s).is_zero();
}

AlgebraSubspace classify(const PoissonAlgebra& p, const Subspace& s) {
    if (is_ideal(p, s)) return {s, Closure::Ideal};
    if (is_subalgebra(p, s)) return {s, Closure::Subalgebra};
    return {s, Closure::None};
}

namespace {

/// Least subspace containing s and closed under products with itself (or with the whole
/// algebra). Only products involving newly added vectors are recomputed each round.
AlgebraSubspace close_under(const PoissonAlgebra& p, const Subspace& s, Mult m, bool with_whole) {
    require_ambient(p, s);
    Subspace current = s;
    std::vector<Vector> generated = s.basis_vectors();
    std::vector<Vector> frontier = generated;
    const std::vector<Vector> whole_basis = p.whole().basis_vectors();
    while (!frontier.empty()) {
        std::vector<Vector> fresh;
        const std::vector<Vector>& partners = with_whole ? whole_basis : generated;
        auto absorb = [&](Element e) {
            if (e.is_zero() || current.contains(e)) return;
            current = sum(current, span_of(p, {e}));
            fresh.push_back(std::move(e));
        };
        for (const auto& f : frontier)
            for (const auto& g : partners) for_each_product(p, f, g, m, absorb);
        if (!with_whole)
            for (const auto& f : fresh) generated.push_back(f);
        frontier = std::move(fresh);
    }
    Closure verified = with_whole ? Closure::Ideal : Closure::Subalgebra;
    if (m != Mult::Both) verified = classify(p, current).verified;
    return {current, verified};
}

}  // namespace

AlgebraSubspace closure_subalgebra(const PoissonAlgebra& p, const Subspace& s, Mult m) {
    auto r = close_under(p, s, m, false);
    if (m == Mult::Both && is_ideal(p, r.space)) r.verified = Closure::Ideal;
    return r;
}

AlgebraSubspace closure_ideal(const PoissonAlgebra& p, const Subspace& s, Mult m) {
    return close_under(p, s, m, true);
}

namespace {

using LinearMap = std::function<Element(const Element&)>;

/// {x in domain : f(x) in target for every f in maps}.
Subspace linear_preimage(const Subspace& domain, const Subspace& target, const std::vector<LinearMap>& maps) {
    const std::size_t k = domain.dim();
    const std::size_t n = target.ambient_dim();
    const Field f = domain.field();
    if (k == 0 || maps.empty()) return domain;
    const auto basis = domain.basis_vectors();
    Matrix conditions(f, maps.size() * n, k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t m = 0; m < maps.size(); ++m) {
            Vector r = target.reduce(maps[m](basis[c]));
            for (std::size_t i = 0; i < n; ++i) conditions(m * n + i, c) = r[i];
        }
    Subspace coeffs = conditions.kernel();
    std::vector<Vector> out;
    for (const auto& c : coeffs.basis_vectors()) {
        Vector x(f, domain.ambient_dim());
        for (std::size_t i = 0; i < k; ++i) x.add_scaled(c[i], basis[i]);
        out.push_back(std::move(x));
    }
    return Subspace::span(f, domain.ambient_dim(), out);
}

/// Maps x -> x*b for every product kind selected and every b in `partners`.
std::vector<LinearMap> product_maps(const PoissonAlgebra& p, const std::vector<Vector>& partners, Mult m, bool left_only) {
    std::vector<LinearMap> maps;
    for (const auto& b : partners) {
        if (uses_dot(m)) {
            maps.push_back([&p, b](const Element& x) { return p.mul_dot(x, b); });
            if (!left_only && !p.validated()) maps.push_back([&p, b](const Element& x) { return p.mul_dot(b, x); });
        }
        if (uses_bracket(m)) {
            maps.push_back([&p, b](const Element& x) { return p.mul_bracket(x, b); });
            if (!left_only && !p.validated()) maps.push_back([&p, b](const Element& x) { return p.mul_bracket(b, x); });
        }
    }
    return maps;
}

}  // namespace

Subspace ideal_core(const PoissonAlgebra& p, const Subspace& w, Mult m) {
    require_ambient(p, w);
    const auto maps = product_maps(p, p.whole().basis_vectors(), m, false);
    Subspace current = w;
    while (true) {
        Subspace next = linear_preimage(current, current, maps);
        if (next == current) return current;
        current = std::move(next);
    }
}

// ---------------------------------------------------------------- quotients, sums, restrictions

Subspace Quotient::image(const Subspace& s) const {
    std::vector<Vector> out;
    for (const auto& b : s.basis_vectors()) out.push_back(project(b));
    return Subspace::span(algebra.field(), algebra.dim(), out);
}

Subspace Quotient::preimage(const Subspace& s) const {
    std::vector<Vector> out = kernel.basis_vectors();
    for (const auto& b : s.basis_vectors()) out.push_back(coords.lift(b));
    return Subspace::span(kernel.field(), kernel.ambient_dim(), out);
}

namespace {

PoissonAlgebra finish_derived(const PoissonAlgebra& parent, DialgebraTensors t, std::string name) {
    if (!parent.validated()) return PoissonAlgebra::unchecked(std::move(t), std::move(name));
    auto result = PoissonAlgebra::validate(std::move(t), std::move(name));
    if (std::holds_alternative<AxiomViolation>(result))
        throw std::logic_error("derived structure of a valid algebra failed validation");
    return std::get<PoissonAlgebra>(std::move(result));
}

}  // namespace

Quotient quotient(const PoissonAlgebra& p, const Subspace& i) {
    require_ambient(p, i);
    if (!is_ideal(p, i)) throw std::invalid_argument("quotient requires an ideal");
    QuotientCoordinates coords(p.whole(), i);
    const std::size_t m = coords.dim();
    const auto reps = coords.representatives().row_vectors();
    DialgebraTensors t = DialgebraTensors::zero(p.field(), m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vector d = coords.project(p.mul_dot(reps[a], reps[b]));
            Vector br = coords.project(p.mul_bracket(reps[a], reps[b]));
            for (std::size_t c = 0; c < m; ++c) {
                t.dot(a, b, c) = d[c];
                t.bracket(a, b, c) = br[c];
            }
        }
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < p.dim(); ++j) cols.push_back(coords.project(p.basis(j)));
    Matrix projection = Matrix::from_columns(p.field(), m, cols);
    std::string name = p.name().empty() ? std::string{} : p.name() + "/" + i.to_string();
    return Quotient{finish_derived(p, std::move(t), std::move(name)), i, std::move(coords), std::move(projection)};
}

PoissonAlgebra direct_sum(const PoissonAlgebra& a, const PoissonAlgebra& b, std::string name) {
    if (a.field() != b.field()) throw std::invalid_argument("direct sum of algebras over different fields");
    const std::size_t na = a.dim(), nb = b.dim();
    DialgebraTensors t = DialgebraTensors::zero(a.field(), na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) {
                t.dot(i, j, k) = a.tensors().dot(i, j, k);
                t.bracket(i, j, k) = a.tensors().bracket(i, j, k);
            }
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k) {
                t.dot(na + i, na + j, na + k) = b.tensors().dot(i, j, k);
                t.bracket(na + i, na + j, na + k) = b.tensors().bracket(i, j, k);
            }
    if (name.empty()) name = a.name() + "+" + b.name();
    if (a.validated() && b.validated()) return finish_derived(a, std::move(t), std::move(name));
    return PoissonAlgebra::unchecked(std::move(t), std::move(name));
}

Element Restriction::to_ambient(const Element& local) const {
    Element x(space.field(), space.ambient_dim());
    for (std::size_t i = 0; i < space.dim(); ++i) x.add_scaled(local[i], space.basis_vector(i));
    return x;
}

Subspace Restriction::to_local(const Subspace& s) const {
    std::vector<Vector> out;
    for (const auto& b : s.basis_vectors()) {
        if (!space.contains(b)) throw std::invalid_argument("subspace not inside the restriction");
        out.push_back(to_local(b));
    }
    return Subspace::span(space.field(), space.dim(), out);
}

Subspace Restriction::to_ambient(const Subspace& local) const {
    std::vector<Vector> out;
    for (const auto& b : local.basis_vectors()) out.push_back(to_ambient(b));
    return Subspace::span(space.field(), space.ambient_dim(), out);
}

Restriction restrict_to(const PoissonAlgebra& p, const Subspace& u) {
    require_ambient(p, u);
    if (!is_subalgebra(p, u)) throw std::invalid_argument("restriction requires a subalgebra");
    const std::size_t k = u.dim();
    const auto basis = u.basis_vectors();
    DialgebraTensors t = DialgebraTensors::zero(p.field(), k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            Vector d = u.coordinates(p.mul_dot(basis[a], basis[b]));
            Vector br = u.coordinates(p.mul_bracket(basis[a], basis[b]));
            for (std::size_t c = 0; c < k; ++c) {
                t.dot(a, b, c) = d[c];
                t.bracket(a, b, c) = br[c];
            }
        }
    std::string name = p.name().empty() ? std::string{} : p.name() + "|" + u.to_string();
    return Restriction{finish_derived(p, std::move(t), std::move(name)), u};
}

// ---------------------------------------------------------------- annihilators, idealisers

AlgebraSubspace annihilator(const PoissonAlgebra& p, const Subspace& b) {
    require_ambient(p, b);
    // validated algebras: x.b = b.x and [b,x] = -[x,b], so left products suffice
    const auto maps = product_maps(p, b.basis_vectors(), Mult::Both, false);
    Subspace ann = linear_preimage(p.whole(), p.zero_subspace(), maps);
    return classify(p, ann);
}

AlgebraSubspace centre(const PoissonAlgebra& p) { return annihilator(p, p.whole()); }

namespace {

AlgebraSubspace idealiser_for(const PoissonAlgebra& p, const Subspace& u, Mult m) {
    require_ambient(p, u);
    const auto maps = product_maps(p, u.basis_vectors(), m, true);
    return classify(p, linear_preimage(p.whole(), u, maps));
}

}  // namespace

AlgebraSubspace idealiser(const PoissonAlgebra& p, const Subspace& u) { return idealiser_for(p, u, Mult::Both); }
AlgebraSubspace lie_idealiser(const PoissonAlgebra& p, const Subspace& u) { return idealiser_for(p, u, Mult::Bracket); }
AlgebraSubspace assoc_idealiser(const PoissonAlgebra& p, const Subspace& u) { return idealiser_for(p, u, Mult::Dot); }

bool is_homomorphism(const Matrix& map, const PoissonAlgebra& p1, const PoissonAlgebra& p2) {
    if (map.rows() != p2.dim() || map.cols() != p1.dim() || p1.field() != p2.field())
        throw std::invalid_argument("homomorphism matrix has the wrong shape");
    for (std::size_t i = 0; i < p1.dim(); ++i) {
        const Element xi = map.column(i);
        for (std::size_t j = 0; j < p1.dim(); ++j) {
            const Element xj = map.column(j);
            if (map.apply(p1.mul_dot(p1.basis(i), p1.basis(j))) != p2.mul_dot(xi, xj)) return false;
            if (map.apply(p1.mul_bracket(p1.basis(i), p1.basis(j))) != p2.mul_bracket(xi, xj)) return false;
        }
    }
    return true;
}

AlgebraSubspace kernel_of(const Matrix& map, const PoissonAlgebra& p1, const PoissonAlgebra& p2) {
    if (map.rows() != p2.dim() || map.cols() != p1.dim()) throw std::invalid_argument("kernel_of: wrong shape");
    return classify(p1, map.kernel());
}

}  // namespace palg
