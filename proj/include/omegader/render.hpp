#pragma once

// Text rendering of linear expressions, equations, and generic matrix forms.
// All output stays exact: coefficients render through the scalar grammar.

#include "omegader/linalg.hpp"
#include "omegader/scalar.hpp"

#include <string>
#include <vector>

namespace omegader {

/// Names for the stacked unknowns of a constraint system: one n x n block of
/// matrix entries per prefix, row-major within each block ("x11", "x12", ...).
struct BlockLayout {
    int n = 0;
    std::vector<std::string> prefixes;

    int block_size() const { return n * n; }
    int blocks() const { return int(prefixes.size()); }
    int total() const { return blocks() * block_size(); }

    int index(int block, int r, int c) const { return block * block_size() + r * n + c; }

    std::string var_name(int idx) const {
        int block = idx / block_size();
        int within = idx % block_size();
        int r = within / n, c = within % n;
        std::string out = prefixes[block];
        if (n <= 9) {
            out += std::to_string(r + 1);
            out += std::to_string(c + 1);
        } else {
            out += std::to_string(r + 1);
            out += '_';
            out += std::to_string(c + 1);
        }
        return out;
    }
};

namespace detail {

inline std::string render_term(const Scalar& coeff, const std::string& name) {
    if (coeff.is_one()) return name;
    if (coeff == Scalar(-1)) return "-" + name;
    std::string s = render_scalar(coeff);
    bool compound = false;
    for (std::size_t p = 1; p < s.size(); ++p)
        if (s[p] == '+' || s[p] == '-') compound = true;
    if (compound) return "(" + s + ")*" + name;
    return s + "*" + name;
}

inline void append_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (term.size() > 1 && term[0] == '-') {
        out += '-';
        out += term.substr(1);
    } else {
        out += '+';
        out += term;
    }
}

}  // namespace detail

/// Renders a coefficient row as "x11+x33-a22"; "0" when all coefficients vanish.
template <typename Names>
std::string render_linear_combination(const std::vector<Scalar>& coeffs, Names&& name_of) {
    std::string out;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (coeffs[t].is_zero()) continue;
        detail::append_term(out, detail::render_term(coeffs[t], name_of(int(t))));
    }
    return out.empty() ? "0" : out;
}

/// One equation per RREF row of a constraint matrix, e.g. "x11+x33-a22 = 0".
inline std::vector<std::string> render_equations(const Matrix<Scalar>& rref_rows,
                                                 const BlockLayout& layout) {
    std::vector<std::string> out;
    for (int r = 0; r < rref_rows.rows(); ++r) {
        std::vector<Scalar> row = rref_rows.row(r);
        bool all_zero = true;
        for (const Scalar& e : row)
            if (!e.is_zero()) all_zero = false;
        if (all_zero) continue;
        out.push_back(render_linear_combination(
                          row, [&](int idx) { return layout.var_name(idx); }) +
                      " = 0");
    }
    return out;
}

/// Constraint lines of a generic form, e.g. "x22 = -x11" / "x13 = 0".
inline std::vector<std::string> render_generic_constraints(const AffineDescription& d,
                                                           const BlockLayout& layout,
                                                           int var_offset = 0) {
    std::vector<std::string> out;
    for (std::size_t t = 0; t < d.bound_vars.size(); ++t) {
        std::string rhs = render_linear_combination(
            d.bound_exprs[t], [&](int f) { return layout.var_name(var_offset + d.free_vars[f]); });
        out.push_back(layout.var_name(var_offset + d.bound_vars[t]) + " = " + rhs);
    }
    return out;
}

/// The generic matrix form of one n x n block of a solved space: each entry
/// rendered as an expression in the free variables.
inline std::vector<std::vector<std::string>> render_generic_block(const AffineDescription& d,
                                                                  const BlockLayout& layout,
                                                                  int block) {
    const int n = layout.n;
    std::vector<std::vector<std::string>> grid(n, std::vector<std::string>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int var = layout.index(block, r, c);
            grid[r][c] = render_linear_combination(
                d.expr_for(var), [&](int f) { return layout.var_name(d.free_vars[f]); });
        }
    return grid;
}

}  // namespace omegader
