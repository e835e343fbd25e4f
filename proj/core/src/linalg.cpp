#include "palg/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace palg {

// ---------------------------------------------------------------- Vector

Vector::Vector(Field f, std::vector<Scalar> entries) : field_(f), entries_(std::move(entries)) {
    for (const auto& e : entries_)
        if (e.field() != f) throw std::invalid_argument("vector entry from a different field");
}

Vector Vector::unit(Field f, std::size_t n, std::size_t i) {
    Vector v(f, n);
    v[i] = Scalar::one(f);
    return v;
}

Vector Vector::from_ints(Field f, std::initializer_list<long long> values) {
    std::vector<Scalar> e;
    e.reserve(values.size());
    for (long long x : values) e.push_back(Scalar::from_int(f, x));
    return Vector(f, std::move(e));
}

bool Vector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

void Vector::require_compatible(const Vector& o) const {
    if (field_ != o.field_ || size() != o.size())
        throw std::invalid_argument("vector dimension or field mismatch");
}

Vector& Vector::operator+=(const Vector& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

void Vector::add_scaled(const Scalar& s, const Vector& o) {
    require_compatible(o);
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < size(); ++i)
        if (!o.entries_[i].is_zero()) entries_[i] += s * o.entries_[i];
}

bool operator==(const Vector& a, const Vector& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
}

std::string Vector::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) s += ", ";
        s += entries_[i].to_string();
    }
    return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << v.to_string(); }

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, std::span<const Vector> rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols || rows[r].field() != f) throw std::invalid_argument("row shape or field mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, std::span<const Vector> cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows || cols[c].field() != f) throw std::invalid_argument("column shape or field mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(f, rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix literal");
        std::size_t c = 0;
        for (long long x : row) m(r, c++) = Scalar::from_int(f, x);
        ++r;
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    std::vector<Scalar> e(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return Vector(field_, std::move(e));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::pow(std::size_t k) const {
    if (!is_square()) throw std::invalid_argument("power of a non-square matrix");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_ || v.field() != field_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero()) out[r] += a * v[c];
        }
    }
    return out;
}

void Matrix::require_same_shape(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || a.field_ != b.field_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Subspace Matrix::row_space() const { return Subspace::from_rref(rref(*this)); }

Subspace Matrix::column_space() const { return transpose().row_space(); }

Subspace Matrix::kernel() const {
    Matrix r = rref(*this);
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!r(i, c).is_zero()) {
                pivots.push_back(c);
                break;
            }
    std::vector<Vector> basis;
    std::size_t next = 0;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (next < pivots.size() && pivots[next] == free) {
            ++next;
            continue;
        }
        Vector v = Vector::unit(field_, cols_, free);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(field_, cols_, basis);
}

std::size_t Matrix::rank() const { return rref(*this).rows(); }

std::string Matrix::to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) s += ", ";
        s += row(r).to_string();
    }
    return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

Matrix rref(const Matrix& input) {
    Matrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t pivot = lead;
        while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != lead)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(lead, j));
        Scalar inv = m(lead, c).inverse();
        for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || m(i, c).is_zero()) continue;
            Scalar factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(lead, j).is_zero()) m(i, j) -= factor * m(lead, j);
        }
        ++lead;
    }
    Matrix out(m.field(), lead, cols);
    for (std::size_t i = 0; i < lead; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
    return out;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
    pivots_.reserve(basis_.rows());
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t c = 0;
        while (c < basis_.cols() && basis_(r, c).is_zero()) ++c;
        if (c == basis_.cols()) throw std::logic_error("zero row in subspace basis");
        pivots_.push_back(c);
    }
}

Subspace Subspace::zero(Field f, std::size_t n) { return Subspace(Matrix(f, 0, n)); }

Subspace Subspace::whole(Field f, std::size_t n) { return Subspace(Matrix::identity(f, n)); }

Subspace Subspace::span(Field f, std::size_t n, std::span<const Vector> vectors) {
    return Subspace(rref(Matrix::from_rows(f, n, vectors)));
}

Subspace Subspace::span(Field f, std::size_t n, std::initializer_list<Vector> vectors) {
    return span(f, n, std::span<const Vector>(vectors.begin(), vectors.size()));
}

Subspace Subspace::from_rref(Matrix basis) { return Subspace(std::move(basis)); }

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_dim() || v.field() != field()) throw std::invalid_argument("vector does not match subspace ambient space");
    Vector w = v;
    for (std::size_t r = 0; r < dim(); ++r) {
        Scalar coeff = w[pivots_[r]];
        if (coeff.is_zero()) continue;
        for (std::size_t c = pivots_[r]; c < ambient_dim(); ++c)
            if (!basis_(r, c).is_zero()) w[c] -= coeff * basis_(r, c);
    }
    return w;
}

bool Subspace::contains(const Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim() || other.field() != field())
        throw std::invalid_argument("subspace ambient mismatch");
    if (other.dim() > dim()) return false;
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_vector(r))) return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const {
    Vector c(field(), dim());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
    return c;
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.ambient_dim(); ++c) {
            auto cmp = a.basis_(r, c) <=> b.basis_(r, c);
            if (cmp != 0) return cmp < 0;
        }
    return false;
}

std::string Subspace::to_string() const {
    if (is_zero()) return "0";
    std::string s = "span{";
    for (std::size_t r = 0; r < dim(); ++r) {
        if (r) s += ", ";
        s += basis_vector(r).to_string();
    }
    return s + "}";
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) { return os << s.to_string(); }

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim() || u.field() != v.field())
        throw std::invalid_argument("subspaces live in different ambient spaces");
}

}  // namespace

Subspace sum(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    if (u.contains(v)) return u;
    if (v.contains(u)) return v;
    std::vector<Vector> rows = u.basis_vectors();
    for (auto& r : v.basis_vectors()) rows.push_back(std::move(r));
    return Subspace::span(u.field(), u.ambient_dim(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    if (u.contains(v)) return v;
    if (v.contains(u)) return u;
    const std::size_t n = u.ambient_dim();
    const Field f = u.field();
    // Zassenhaus: rows (u, u) and (v, 0); rows with vanishing left half span (0, u ∩ v).
    Matrix z(f, u.dim() + v.dim(), 2 * n);
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            z(r, c) = u.basis()(r, c);
            z(r, n + c) = u.basis()(r, c);
        }
    for (std::size_t r = 0; r < v.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) z(u.dim() + r, c) = v.basis()(r, c);
    Matrix red = rref(z);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < red.rows(); ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = red(r, c).is_zero();
        if (!left_zero) continue;
        Vector w(f, n);
        for (std::size_t c = 0; c < n; ++c) w[c] = red(r, n + c);
        rows.push_back(std::move(w));
    }
    return Subspace::span(f, n, rows);
}

Matrix quotient_basis(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    if (!u.contains(v)) throw std::invalid_argument("quotient_basis requires v to be contained in u");
    std::vector<Vector> reduced;
    for (std::size_t r = 0; r < u.dim(); ++r) {
        Vector w = v.reduce(u.basis_vector(r));
        if (!w.is_zero()) reduced.push_back(std::move(w));
    }
    return rref(Matrix::from_rows(u.field(), u.ambient_dim(), reduced));
}

QuotientCoordinates::QuotientCoordinates(const Subspace& u, const Subspace& v)
    : v_(v), reps_(quotient_basis(u, v)) {
    rep_pivots_ = Subspace::from_rref(reps_).pivots();
}

Vector QuotientCoordinates::project(const Vector& x) const {
    Vector w = v_.reduce(x);
    Vector c(w.field(), dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = w[rep_pivots_[i]];
    return c;
}

Vector QuotientCoordinates::lift(const Vector& coords) const {
    Vector x(reps_.field(), reps_.cols());
    for (std::size_t i = 0; i < dim(); ++i) x.add_scaled(coords[i], reps_.row(i));
    return x;
}

Subspace fitting_null(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("fitting_null of a non-square matrix");
    return m.pow(m.rows()).kernel();
}

Subspace fitting_one(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("fitting_one of a non-square matrix");
    return m.pow(m.rows()).column_space();
}

}  // namespace palg
