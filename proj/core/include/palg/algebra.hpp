#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "palg/linalg.hpp"

namespace palg {

using Element = Vector;

/// Structure constants of a dialgebra: e_i . e_j = sum_k dot(i,j,k) e_k and
/// [e_i, e_j] = sum_k bracket(i,j,k) e_k. Stored densely, n^3 scalars each.
struct DialgebraTensors {
    Field field;
    std::size_t dim;
    std::vector<Scalar> dot_constants;
    std::vector<Scalar> bracket_constants;

    static DialgebraTensors zero(Field f, std::size_t n);

    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept { return (i * dim + j) * dim + k; }
    Scalar& dot(std::size_t i, std::size_t j, std::size_t k) { return dot_constants[index(i, j, k)]; }
    const Scalar& dot(std::size_t i, std::size_t j, std::size_t k) const { return dot_constants[index(i, j, k)]; }
    Scalar& bracket(std::size_t i, std::size_t j, std::size_t k) { return bracket_constants[index(i, j, k)]; }
    const Scalar& bracket(std::size_t i, std::size_t j, std::size_t k) const { return bracket_constants[index(i, j, k)]; }

    /// Sets e_i.e_j = e_j.e_i = c e_k.
    void set_dot_symmetric(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
    /// Sets [e_i,e_j] = c e_k and [e_j,e_i] = -c e_k.
    void set_bracket_antisymmetric(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

    Element dot_product(const Element& x, const Element& y) const;
    Element bracket_product(const Element& x, const Element& y) const;

    friend bool operator==(const DialgebraTensors&, const DialgebraTensors&) = default;
};

enum class Axiom { Commutativity, Associativity, Alternating, Jacobi, Leibniz };

std::string_view to_string(Axiom a) noexcept;

/// Evaluates the named identity at basis elements (e_i, e_j, e_k). Two-argument axioms
/// ignore k. Alternating evaluates [e_i,e_i] when i == j and [e_i,e_j] + [e_j,e_i] otherwise.
Element axiom_residual(const DialgebraTensors& t, Axiom axiom, std::size_t i, std::size_t j, std::size_t k);

struct AxiomViolation {
    Axiom axiom;
    std::array<std::size_t, 3> witness;
    Element residual;
};

/// First violated axiom on basis triples, checked in the order commutativity,
/// associativity, alternating, Jacobi, Leibniz.
std::optional<AxiomViolation> find_axiom_violation(const DialgebraTensors& t);

/// A finite-dimensional Poisson algebra. Instances come from validate(); unchecked()
/// exists for negative-control corpora and leaves validated() false.
class PoissonAlgebra {
public:
    static std::variant<PoissonAlgebra, AxiomViolation> validate(DialgebraTensors tensors, std::string name = {});
    /// Throws std::invalid_argument carrying the violation when the tensors are not Poisson.
    static PoissonAlgebra validated_or_throw(DialgebraTensors tensors, std::string name = {});
    static PoissonAlgebra unchecked(DialgebraTensors tensors, std::string name = {});

    const DialgebraTensors& tensors() const noexcept { return tensors_; }
    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    bool validated() const noexcept { return validated_; }
    Field field() const noexcept { return tensors_.field; }
    std::size_t dim() const noexcept { return tensors_.dim; }

    Element basis(std::size_t i) const { return Vector::unit(field(), dim(), i); }
    Element zero_element() const { return Vector::zero(field(), dim()); }
    Subspace whole() const { return Subspace::whole(field(), dim()); }
    Subspace zero_subspace() const { return Subspace::zero(field(), dim()); }

    Element mul_dot(const Element& x, const Element& y) const { return tensors_.dot_product(x, y); }
    Element mul_bracket(const Element& x, const Element& y) const { return tensors_.bracket_product(x, y); }

    /// Matrices of y -> a.y and y -> [a,y].
    Matrix p_operator(const Element& a) const;
    Matrix q_operator(const Element& a) const;

private:
    PoissonAlgebra(DialgebraTensors t, std::string name, bool validated)
        : tensors_(std::move(t)), name_(std::move(name)), validated_(validated) {}

    DialgebraTensors tensors_;
    std::string name_;
    bool validated_;
};

/// Which multiplications a closure condition refers to.
enum class Mult { Both, Dot, Bracket };

enum class Closure { None, Subalgebra, Ideal };

struct AlgebraSubspace {
    Subspace space;
    Closure verified = Closure::None;
};

Subspace subspace_product_dot(const PoissonAlgebra& p, const Subspace& u, const Subspace& v);
Subspace subspace_product_bracket(const PoissonAlgebra& p, const Subspace& u, const Subspace& v);
/// u.v + v.u + [u,v] + [v,u] restricted to the chosen multiplications.
Subspace subspace_product(const PoissonAlgebra& p, const Subspace& u, const Subspace& v, Mult m = Mult::Both);

bool is_subalgebra(const PoissonAlgebra& p, const Subspace& s, Mult m = Mult::Both);
bool is_ideal(const PoissonAlgebra& p, const Subspace& s, Mult m = Mult::Both);
/// b is an ideal of the subalgebra c (b inside c, and c multiplies b into b).
bool is_ideal_in(const PoissonAlgebra& p, const Subspace& b, const Subspace& c, Mult m = Mult::Both);
/// Products of s with itself vanish under both multiplications.
bool is_zero_subalgebra(const PoissonAlgebra& p, const Subspace& s);

/// Strongest closure property s satisfies.
AlgebraSubspace classify(const PoissonAlgebra& p, const Subspace& s);

AlgebraSubspace closure_subalgebra(const PoissonAlgebra& p, const Subspace& s, Mult m = Mult::Both);
AlgebraSubspace closure_ideal(const PoissonAlgebra& p, const Subspace& s, Mult m = Mult::Both);

/// Largest ideal of p inside w under the chosen multiplications.
Subspace ideal_core(const PoissonAlgebra& p, const Subspace& w, Mult m = Mult::Both);

struct Quotient {
    PoissonAlgebra algebra;
    Subspace kernel;
    QuotientCoordinates coords;
    /// dim(p/I) x dim(p) matrix of the projection.
    Matrix projection;

    Element project(const Element& x) const { return coords.project(x); }
    Subspace image(const Subspace& s) const;
    /// Full preimage in p of a subspace of the quotient.
    Subspace preimage(const Subspace& s) const;
};

/// Throws std::invalid_argument when i is not an ideal.
Quotient quotient(const PoissonAlgebra& p, const Subspace& i);

/// Block-diagonal direct sum; throws on field mismatch.
PoissonAlgebra direct_sum(const PoissonAlgebra& a, const PoissonAlgebra& b, std::string name = {});

/// The algebra structure of a subalgebra in its canonical basis.
struct Restriction {
    PoissonAlgebra algebra;
    Subspace space;

    /// Coordinates in the subalgebra basis of an element of space.
    Element to_local(const Element& x) const { return space.coordinates(x); }
    Element to_ambient(const Element& local) const;
    Subspace to_local(const Subspace& s) const;
    Subspace to_ambient(const Subspace& local) const;
};

/// Throws std::invalid_argument when u is not closed under both multiplications.
Restriction restrict_to(const PoissonAlgebra& p, const Subspace& u);

/// {x in p : x.b = b.x = [x,b] = [b,x] = 0 for all b in b}.
AlgebraSubspace annihilator(const PoissonAlgebra& p, const Subspace& b);
AlgebraSubspace centre(const PoissonAlgebra& p);

/// {x : x.u in u and [x,u] in u for all u in u}, and the one-multiplication variants.
AlgebraSubspace idealiser(const PoissonAlgebra& p, const Subspace& u);
AlgebraSubspace lie_idealiser(const PoissonAlgebra& p, const Subspace& u);
AlgebraSubspace assoc_idealiser(const PoissonAlgebra& p, const Subspace& u);

/// map is dim(p2) x dim(p1), columns are images of the basis of p1.
bool is_homomorphism(const Matrix& map, const PoissonAlgebra& p1, const PoissonAlgebra& p2);
AlgebraSubspace kernel_of(const Matrix& map, const PoissonAlgebra& p1, const PoissonAlgebra& p2);

}  // namespace palg
