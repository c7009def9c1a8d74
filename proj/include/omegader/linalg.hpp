#pragma once

// Deterministic exact linear algebra over a field: reduced row echelon form,
// nullspaces, and subspace arithmetic with an RREF-canonical representation.
// Everything here is generic in the field type; the rest of the library
// instantiates it with Scalar (Gaussian rationals).

#include "omegader/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace omegader {

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Rational& r) { return r == 0; }

inline Rational inv(const Rational& r) {
    if (r == 0) throw division_by_zero();
    return Rational(1) / r;
}

class dimension_mismatch : public std::invalid_argument {
public:
    explicit dimension_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

template <typename K>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int r, int c) { return e_[std::size_t(r) * cols_ + c]; }
    const K& at(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }

    std::vector<K> row(int r) const {
        return std::vector<K>(e_.begin() + std::size_t(r) * cols_,
                              e_.begin() + std::size_t(r + 1) * cols_);
    }
    std::vector<K> col(int c) const {
        std::vector<K> out(rows_);
        for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }
    void set_row(int r, const std::vector<K>& v) {
        for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw dimension_mismatch("matrix product shape mismatch");
        Matrix p(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int k = 0; k < a.cols_; ++k) {
                const K& f = a.at(r, k);
                if (is_zero(f)) continue;
                for (int c = 0; c < b.cols_; ++c) {
                    if (is_zero(b.at(k, c))) continue;
                    p.at(r, c) += f * b.at(k, c);
                }
            }
        return p;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_mismatch("matrix sum shape mismatch");
        Matrix s = a;
        for (std::size_t i = 0; i < s.e_.size(); ++i) s.e_[i] += b.e_[i];
        return s;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_mismatch("matrix difference shape mismatch");
        Matrix s = a;
        for (std::size_t i = 0; i < s.e_.size(); ++i) s.e_[i] -= b.e_[i];
        return s;
    }
    friend Matrix operator*(const K& f, Matrix m) {
        for (auto& e : m.e_) e = f * e;
        return m;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (int(v.size()) != cols_) throw dimension_mismatch("matrix-vector shape mismatch");
        std::vector<K> out(rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) {
                if (is_zero(at(r, c)) || is_zero(v[c])) continue;
                out[r] += at(r, c) * v[c];
            }
        return out;
    }

    /// Commutator a*b - b*a.
    friend Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<K> e_;
};

template <typename K>
struct RrefResult {
    Matrix<K> mat;
    std::vector<int> pivots;  // pivot column per pivot row, strictly increasing

    int rank() const { return int(pivots.size()); }
};

/// Reduced row echelon form with deterministic pivoting: leftmost nonzero
/// column, first available row.  Forward elimination below, then a backward
/// pass; leading entries normalized to 1.  The result is the unique RREF of
/// the row space.
template <typename K>
RrefResult<K> rref(Matrix<K> m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int prow = 0;
    for (int col = 0; col < cols && prow < rows; ++col) {
        int pr = -1;
        for (int r = prow; r < rows; ++r)
            if (!is_zero(m.at(r, col))) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != prow)
            for (int c = col; c < cols; ++c) std::swap(m.at(pr, c), m.at(prow, c));
        K piv_inv = inv(m.at(prow, col));
        m.at(prow, col) = K(1);
        for (int c = col + 1; c < cols; ++c) m.at(prow, c) = piv_inv * m.at(prow, c);
        for (int r = prow + 1; r < rows; ++r) {
            if (is_zero(m.at(r, col))) continue;
            K f = m.at(r, col);
            m.at(r, col) = K(0);
            for (int c = col + 1; c < cols; ++c) {
                if (is_zero(m.at(prow, c))) continue;
                m.at(r, c) -= f * m.at(prow, c);
            }
        }
        pivots.push_back(col);
        ++prow;
    }
    for (int p = int(pivots.size()) - 1; p >= 0; --p) {
        int col = pivots[p];
        for (int r = 0; r < p; ++r) {
            if (is_zero(m.at(r, col))) continue;
            K f = m.at(r, col);
            m.at(r, col) = K(0);
            for (int c = col + 1; c < m.cols(); ++c) {
                if (is_zero(m.at(p, c))) continue;
                m.at(r, c) -= f * m.at(p, c);
            }
        }
    }
    return {std::move(m), std::move(pivots)};
}

/// Basis of { v : M v = 0 }, one vector per free column, re-verified by
/// exact multiplication before returning.
template <typename K>
std::vector<std::vector<K>> nullspace_basis(const Matrix<K>& m) {
    RrefResult<K> r = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<K> v(cols);
        v[fc] = K(1);
        for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
            v[r.pivots[pr]] = -r.mat.at(int(pr), fc);
        for (const K& e : m.apply(v))
            if (!is_zero(e)) throw std::logic_error("nullspace vector failed re-verification");
        basis.push_back(std::move(v));
    }
    return basis;
}

/// A subspace of K^ambient held as the unique RREF basis of its span.
/// Canonical form makes equality a plain comparison.
template <typename K>
class SubspaceT {
public:
    SubspaceT() = default;
    explicit SubspaceT(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    static SubspaceT span(int ambient, const std::vector<std::vector<K>>& vectors) {
        Matrix<K> m(int(vectors.size()), ambient);
        for (std::size_t r = 0; r < vectors.size(); ++r) {
            if (int(vectors[r].size()) != ambient)
                throw dimension_mismatch("span vector has wrong length");
            m.set_row(int(r), vectors[r]);
        }
        return from_rows(std::move(m));
    }

    static SubspaceT full(int ambient) {
        SubspaceT s(ambient);
        s.basis_ = Matrix<K>::identity(ambient);
        for (int i = 0; i < ambient; ++i) s.pivots_.push_back(i);
        return s;
    }

    static SubspaceT nullspace(const Matrix<K>& m) {
        return span(m.cols(), nullspace_basis(m));
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    bool is_zero_space() const { return dim() == 0; }
    const Matrix<K>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    std::vector<K> basis_vector(int r) const { return basis_.row(r); }

    friend bool operator==(const SubspaceT& a, const SubspaceT& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    /// Remainder of v after reduction against the RREF basis; zero iff v lies
    /// in the subspace.
    std::vector<K> reduce(std::vector<K> v) const {
        if (int(v.size()) != ambient_) throw dimension_mismatch("reduce: ambient mismatch");
        for (int r = 0; r < dim(); ++r) {
            const K& lead = v[pivots_[r]];
            if (is_zero(lead)) continue;
            K f = lead;
            for (int c = pivots_[r]; c < ambient_; ++c) {
                if (is_zero(basis_.at(r, c))) continue;
                v[c] -= f * basis_.at(r, c);
            }
        }
        return v;
    }

    bool contains(const std::vector<K>& v) const {
        for (const K& e : reduce(v))
            if (!is_zero(e)) return false;
        return true;
    }

    bool contains(const SubspaceT& other) const {
        require_same_ambient(other);
        for (int r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_vector(r))) return false;
        return true;
    }

    friend SubspaceT subspace_sum(const SubspaceT& a, const SubspaceT& b) {
        a.require_same_ambient(b);
        Matrix<K> m(a.dim() + b.dim(), a.ambient_);
        for (int r = 0; r < a.dim(); ++r) m.set_row(r, a.basis_vector(r));
        for (int r = 0; r < b.dim(); ++r) m.set_row(a.dim() + r, b.basis_vector(r));
        return from_rows(std::move(m));
    }

    /// Intersection via the stacked nullspace: solutions of
    /// A^T a - B^T b = 0 give the common vectors A^T a.
    friend SubspaceT subspace_intersect(const SubspaceT& a, const SubspaceT& b) {
        a.require_same_ambient(b);
        const int da = a.dim(), db = b.dim();
        Matrix<K> stacked(a.ambient_, da + db);
        for (int r = 0; r < da; ++r)
            for (int c = 0; c < a.ambient_; ++c) stacked.at(c, r) = a.basis_.at(r, c);
        for (int r = 0; r < db; ++r)
            for (int c = 0; c < b.ambient_; ++c) stacked.at(c, da + r) = -b.basis_.at(r, c);
        std::vector<std::vector<K>> vectors;
        for (const auto& sol : nullspace_basis(stacked)) {
            std::vector<K> v(a.ambient_);
            for (int r = 0; r < da; ++r) {
                if (is_zero(sol[r])) continue;
                for (int c = 0; c < a.ambient_; ++c) v[c] += sol[r] * a.basis_.at(r, c);
            }
            vectors.push_back(std::move(v));
        }
        return span(a.ambient_, vectors);
    }

    /// Image under the coordinate projection onto [lo, lo+len).
    SubspaceT project_block(int lo, int len) const {
        if (lo < 0 || lo + len > ambient_) throw dimension_mismatch("project_block out of range");
        std::vector<std::vector<K>> vectors;
        vectors.reserve(dim());
        for (int r = 0; r < dim(); ++r) {
            std::vector<K> v(len);
            for (int c = 0; c < len; ++c) v[c] = basis_.at(r, lo + c);
            vectors.push_back(std::move(v));
        }
        return span(len, vectors);
    }

private:
    static SubspaceT from_rows(Matrix<K> m) {
        RrefResult<K> r = rref(std::move(m));
        SubspaceT s(r.mat.cols());
        s.pivots_ = r.pivots;
        Matrix<K> b(int(r.pivots.size()), r.mat.cols());
        for (int row = 0; row < b.rows(); ++row) b.set_row(row, r.mat.row(row));
        s.basis_ = std::move(b);
        return s;
    }

    void require_same_ambient(const SubspaceT& o) const {
        if (ambient_ != o.ambient_) throw dimension_mismatch("subspace ambient mismatch");
    }

    int ambient_ = 0;
    Matrix<K> basis_;
    std::vector<int> pivots_;
};

/// Parametric description of a solution subspace: the coordinates at the
/// basis pivots are free, every other coordinate is a fixed linear
/// combination of them.
template <typename K>
struct AffineDescriptionT {
    std::vector<int> free_vars;      // coordinate indices, increasing
    std::vector<int> bound_vars;     // constrained coordinate indices, increasing
    std::vector<std::vector<K>> bound_exprs;  // per bound var: coefficients over free_vars

    /// Coefficient row describing coordinate `var` over free_vars; the
    /// identity row for a free var.
    std::vector<K> expr_for(int var) const {
        for (std::size_t t = 0; t < bound_vars.size(); ++t)
            if (bound_vars[t] == var) return bound_exprs[t];
        std::vector<K> row(free_vars.size());
        for (std::size_t t = 0; t < free_vars.size(); ++t)
            if (free_vars[t] == var) {
                row[t] = K(1);
                return row;
            }
        throw std::out_of_range("expr_for: no such coordinate");
    }
};

/// Reads the generic form off an RREF-canonical subspace: free coordinates
/// are the basis pivot columns (smallest indices first), and every other
/// coordinate of a generic element is determined by them.
template <typename K>
AffineDescriptionT<K> generic_form(const SubspaceT<K>& s) {
    AffineDescriptionT<K> d;
    d.free_vars = s.pivots();
    std::vector<bool> is_free(s.ambient_dim(), false);
    for (int p : d.free_vars) is_free[p] = true;
    for (int c = 0; c < s.ambient_dim(); ++c) {
        if (is_free[c]) continue;
        std::vector<K> expr(d.free_vars.size());
        for (int r = 0; r < s.dim(); ++r) expr[r] = s.basis().at(r, c);
        d.bound_vars.push_back(c);
        d.bound_exprs.push_back(std::move(expr));
    }
    return d;
}

using Mat = Matrix<Scalar>;
using Subspace = SubspaceT<Scalar>;
using AffineDescription = AffineDescriptionT<Scalar>;

}  // namespace omegader
