#pragma once

// Finite-dimensional algebras with an antisymmetric bracket and a
// skew-symmetric bilinear form, given by structure constants over Q(i).
// Includes the defining-identity validator, center and derived subalgebra,
// and the built-in catalog algebras.

#include "omegader/linalg.hpp"
#include "omegader/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace omegader {

using Vec = std::vector<Scalar>;

inline Vec unit_vec(int n, int i) {
    Vec v(static_cast<std::size_t>(n));
    v[std::size_t(i)] = Scalar(1);
    return v;
}

/// An algebra on basis e_0..e_{n-1} with bracket [e_i,e_j] = sum_k c_{ijk} e_k
/// and bilinear form w(e_i,e_j) = omega_{ij}.  Immutable once built; the
/// bracket tensor is stored densely (n stays small).
class AlgebraSpec {
public:
    AlgebraSpec() = default;
    AlgebraSpec(std::string name, std::vector<std::string> basis_names)
        : name_(std::move(name)),
          basis_(std::move(basis_names)),
          n_(int(basis_.size())),
          c_(std::size_t(n_) * n_ * n_),
          omega_(std::size_t(n_) * n_) {}

    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_names() const { return basis_; }

    const Scalar& c(int i, int j, int k) const { return c_[cidx(i, j, k)]; }
    const Scalar& omega(int i, int j) const { return omega_[oidx(i, j)]; }

    /// Sets [e_i,e_j] = out (and the antisymmetric partner), i < j.
    void set_bracket(int i, int j, const Vec& out) {
        for (int k = 0; k < n_; ++k) {
            c_[cidx(i, j, k)] = out[std::size_t(k)];
            c_[cidx(j, i, k)] = -out[std::size_t(k)];
        }
    }

    /// Sets w(e_i,e_j) = v (and the skew partner), i < j.
    void set_omega(int i, int j, Scalar v) {
        omega_[oidx(j, i)] = -v;
        omega_[oidx(i, j)] = std::move(v);
    }

    // Raw single-entry writes; only the validator tests want these.
    void set_c_raw(int i, int j, int k, Scalar v) { c_[cidx(i, j, k)] = std::move(v); }
    void set_omega_raw(int i, int j, Scalar v) { omega_[oidx(i, j)] = std::move(v); }

    Vec bracket(const Vec& u, const Vec& v) const {
        require_len(u);
        require_len(v);
        Vec out(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            if (u[std::size_t(i)].is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (v[std::size_t(j)].is_zero()) continue;
                Scalar f = u[std::size_t(i)] * v[std::size_t(j)];
                for (int k = 0; k < n_; ++k) {
                    if (c(i, j, k).is_zero()) continue;
                    out[std::size_t(k)] += f * c(i, j, k);
                }
            }
        }
        return out;
    }

    Vec bracket_basis(int i, int j) const {
        Vec out(static_cast<std::size_t>(n_));
        for (int k = 0; k < n_; ++k) out[std::size_t(k)] = c(i, j, k);
        return out;
    }

    Scalar omega_eval(const Vec& u, const Vec& v) const {
        require_len(u);
        require_len(v);
        Scalar out;
        for (int i = 0; i < n_; ++i) {
            if (u[std::size_t(i)].is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (v[std::size_t(j)].is_zero() || omega(i, j).is_zero()) continue;
                out += u[std::size_t(i)] * v[std::size_t(j)] * omega(i, j);
            }
        }
        return out;
    }

private:
    std::size_t cidx(int i, int j, int k) const {
        return (std::size_t(i) * n_ + std::size_t(j)) * n_ + std::size_t(k);
    }
    std::size_t oidx(int i, int j) const { return std::size_t(i) * n_ + std::size_t(j); }
    void require_len(const Vec& v) const {
        if (int(v.size()) != n_) throw dimension_mismatch("vector length != algebra dim");
    }

    std::string name_;
    std::vector<std::string> basis_;
    int n_ = 0;
    std::vector<Scalar> c_;
    std::vector<Scalar> omega_;
};

/// Validation report: structural defects (antisymmetry of the bracket
/// tensor, skew-symmetry of the form) and defining-identity failures, each
/// with enough data to point at the witness.
struct ValidationReport {
    struct PairIssue {
        int i, j;
    };
    struct TripleIssue {
        int i, j, k;
        Vec lhs, rhs;  // Jacobiator vs the form-weighted cyclic sum
    };

    std::vector<PairIssue> bracket_antisymmetry;
    std::vector<PairIssue> form_skew;
    std::vector<TripleIssue> jacobi;

    bool structural_ok() const { return bracket_antisymmetry.empty() && form_skew.empty(); }
    bool ok() const { return structural_ok() && jacobi.empty(); }
};

/// Checks c_{ijk} antisymmetry, form skew-symmetry, and the defining
/// identity [[x,y],z]+[[y,z],x]+[[z,x],y] = w(x,y)z+w(y,z)x+w(z,x)y on all
/// basis triples i<j<k (both sides are alternating trilinear, so those
/// triples are exhaustive).
inline ValidationReport validate(const AlgebraSpec& a) {
    ValidationReport rep;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            for (int k = 0; k < n; ++k)
                if (a.c(i, j, k) != -a.c(j, i, k)) {
                    rep.bracket_antisymmetry.push_back({i, j});
                    break;
                }
            if (a.omega(i, j) != -a.omega(j, i)) rep.form_skew.push_back({i, j});
        }
    if (!rep.structural_ok()) return rep;

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
                Vec lhs(static_cast<std::size_t>(n));
                {
                    Vec t = a.bracket(a.bracket_basis(i, j), ek);
                    for (int p = 0; p < n; ++p) lhs[std::size_t(p)] += t[std::size_t(p)];
                    t = a.bracket(a.bracket_basis(j, k), ei);
                    for (int p = 0; p < n; ++p) lhs[std::size_t(p)] += t[std::size_t(p)];
                    t = a.bracket(a.bracket_basis(k, i), ej);
                    for (int p = 0; p < n; ++p) lhs[std::size_t(p)] += t[std::size_t(p)];
                }
                Vec rhs(static_cast<std::size_t>(n));
                rhs[std::size_t(k)] += a.omega(i, j);
                rhs[std::size_t(i)] += a.omega(j, k);
                rhs[std::size_t(j)] += a.omega(k, i);
                if (lhs != rhs) rep.jacobi.push_back({i, j, k, std::move(lhs), std::move(rhs)});
            }
    return rep;
}

class invalid_algebra : public std::invalid_argument {
public:
    explicit invalid_algebra(const std::string& what) : std::invalid_argument(what) {}
};

/// Structural gate used by every solver entry point: the constraint systems
/// are only meaningful for an antisymmetric bracket and skew form.
inline void require_structural(const AlgebraSpec& a) {
    ValidationReport rep = validate(a);
    if (!rep.structural_ok())
        throw invalid_algebra("algebra '" + a.name() + "' failed structural validation");
}

/// Center { w : [w, e_j] = 0 for all j }, as the exact nullspace of the
/// adjoint constraint system.
inline Subspace center(const AlgebraSpec& a) {
    const int n = a.dim();
    Mat m(n * n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) m.at(j * n + k, i) = a.c(i, j, k);
    return Subspace::nullspace(m);
}

/// Span of all basis brackets [e_i, e_j], i < j.
inline Subspace derived_subalgebra(const AlgebraSpec& a) {
    const int n = a.dim();
    std::vector<Vec> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) gens.push_back(a.bracket_basis(i, j));
    return Subspace::span(n, gens);
}

/// Catalog algebra L1: [x,y] = y, [y,z] = z, w(x,y) = 1.
inline AlgebraSpec make_L1() {
    AlgebraSpec a("L1", {"x", "y", "z"});
    a.set_bracket(0, 1, {Scalar(0), Scalar(1), Scalar(0)});
    a.set_bracket(1, 2, {Scalar(0), Scalar(0), Scalar(1)});
    a.set_omega(0, 1, Scalar(1));
    return a;
}

/// Catalog algebra L2: [x,z] = y, [y,z] = z, w(x,z) = 1.
inline AlgebraSpec make_L2() {
    AlgebraSpec a("L2", {"x", "y", "z"});
    a.set_bracket(0, 2, {Scalar(0), Scalar(1), Scalar(0)});
    a.set_bracket(1, 2, {Scalar(0), Scalar(0), Scalar(1)});
    a.set_omega(0, 2, Scalar(1));
    return a;
}

/// Abelian algebra of the given dimension with zero form.
inline AlgebraSpec make_abelian(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    return AlgebraSpec("abelian" + std::to_string(n), std::move(names));
}

/// sl2 with zero form: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline AlgebraSpec make_sl2() {
    AlgebraSpec a("sl2", {"h", "e", "f"});
    a.set_bracket(0, 1, {Scalar(0), Scalar(2), Scalar(0)});
    a.set_bracket(0, 2, {Scalar(0), Scalar(0), Scalar(-2)});
    a.set_bracket(1, 2, {Scalar(1), Scalar(0), Scalar(0)});
    return a;
}

/// Heisenberg algebra with zero form: [x,y] = z.  Nonzero center.
inline AlgebraSpec make_heisenberg() {
    AlgebraSpec a("heisenberg", {"x", "y", "z"});
    a.set_bracket(0, 1, {Scalar(0), Scalar(0), Scalar(1)});
    return a;
}

}  // namespace omegader
