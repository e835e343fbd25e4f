#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "palg/field.hpp"

namespace palg {

/// A coordinate vector over an exact field.
class Vector {
public:
    Vector(Field f, std::size_t n) : field_(f), entries_(n, Scalar::zero(f)) {}
    Vector(Field f, std::vector<Scalar> entries);

    static Vector zero(Field f, std::size_t n) { return Vector(f, n); }
    static Vector unit(Field f, std::size_t n, std::size_t i);
    /// Convenience for tests and constructions: integer coordinates.
    static Vector from_ints(Field f, std::initializer_list<long long> values);

    Field field() const noexcept { return field_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    Scalar& operator[](std::size_t i) { return entries_[i]; }
    std::span<const Scalar> entries() const noexcept { return entries_; }

    bool is_zero() const noexcept;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& s);
    /// this += s * o
    void add_scaled(const Scalar& s, const Vector& o);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
    friend bool operator==(const Vector& a, const Vector& b);

    std::string to_string() const;

private:
    void require_compatible(const Vector& o) const;

    Field field_;
    std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Vector& v);

class Subspace;

/// Dense row-major matrix. Matrices act on column vectors: (M v)_i = sum_j M_ij v_j.
class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

    static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, std::size_t cols, std::span<const Vector> rows);
    static Matrix from_columns(Field f, std::size_t rows, std::span<const Vector> cols);
    static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows);

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> row_vectors() const;

    bool is_zero() const noexcept;

    Matrix transpose() const;
    Matrix pow(std::size_t k) const;
    Vector apply(const Vector& v) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Row space and column space, and the right null space {v : M v = 0}.
    Subspace row_space() const;
    Subspace column_space() const;
    Subspace kernel() const;
    std::size_t rank() const;

    std::string to_string() const;

private:
    void require_same_shape(const Matrix& o) const;

    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Reduced row-echelon form with zero rows dropped.
Matrix rref(const Matrix& m);

/// A linear subspace of F^n, stored as the canonical reduced row-echelon basis.
/// Two subspaces are equal iff their basis matrices are identical.
class Subspace {
public:
    static Subspace zero(Field f, std::size_t n);
    static Subspace whole(Field f, std::size_t n);
    static Subspace span(Field f, std::size_t n, std::span<const Vector> vectors);
    static Subspace span(Field f, std::size_t n, std::initializer_list<Vector> vectors);
    /// Takes a matrix already in reduced row-echelon form without zero rows. Not re-checked.
    static Subspace from_rref(Matrix basis);

    Field field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_whole() const noexcept { return dim() == ambient_dim(); }

    const Matrix& basis() const noexcept { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Remainder of v after eliminating the pivot columns; zero iff v lies in the subspace.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v (assumed to lie in the subspace) in the canonical basis.
    Vector coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    /// Deterministic order: by dimension, then lexicographically by basis entries.
    friend bool operator<(const Subspace& a, const Subspace& b);

    std::string to_string() const;

private:
    explicit Subspace(Matrix basis);

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

std::ostream& operator<<(std::ostream& os, const Subspace& s);

Subspace sum(const Subspace& u, const Subspace& v);
/// Zassenhaus intersection.
Subspace intersect(const Subspace& u, const Subspace& v);
/// For v inside u, rows completing a basis of v to one of u. The rows are in reduced
/// echelon form, vanish on the pivot columns of v, and their pivots index the quotient
/// coordinates (see QuotientCoordinates).
Matrix quotient_basis(const Subspace& u, const Subspace& v);

/// Coordinates on u/v relative to quotient_basis(u, v).
class QuotientCoordinates {
public:
    QuotientCoordinates(const Subspace& u, const Subspace& v);

    std::size_t dim() const noexcept { return reps_.rows(); }
    const Matrix& representatives() const noexcept { return reps_; }
    /// Coordinates of the coset x + v for x in u.
    Vector project(const Vector& x) const;
    /// The representative sum_i c_i r_i.
    Vector lift(const Vector& coords) const;

private:
    Subspace v_;
    Matrix reps_;
    std::vector<std::size_t> rep_pivots_;
};

/// Kernel and image of m^n, n = size of m.
Subspace fitting_null(const Matrix& m);
Subspace fitting_one(const Matrix& m);

}  // namespace palg
