#pragma once

// Algebra spec files (JSON), fixture/catalog resolution, and JSON
// serialization of solved spaces and check reports.
//
// File schema: {"dim": n, "basis": [names], "brackets": [{"i","j","out"}],
// "omega": [{"i","j","val"}], "params": {name: scalar-string}} with i < j and
// omitted pairs zero.  Entry strings follow the exact scalar grammar,
// optionally extended to sums of terms `<real>`, `<real>*i`,
// `<real>*<param>`, `<param>` so one file can describe a parametric family;
// parameters are bound to concrete scalars at load time.

#include "omegader/algebra.hpp"
#include "omegader/embedding.hpp"
#include "omegader/render.hpp"
#include "omegader/scalar.hpp"
#include "omegader/spaces.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace omegader {

using Json = nlohmann::ordered_json;
using ParamMap = std::map<std::string, Scalar>;

class spec_file_error : public std::runtime_error {
public:
    explicit spec_file_error(const std::string& what) : std::runtime_error(what) {}
};

class missing_fixture_error : public std::runtime_error {
public:
    explicit missing_fixture_error(const std::string& what) : std::runtime_error(what) {}
};

class unknown_algebra_error : public std::runtime_error {
public:
    explicit unknown_algebra_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
inline bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

}  // namespace detail

/// Evaluates an entry expression: a signed sum of terms, each a scalar
/// literal (full scalar grammar), `<real>*<param>`, or a bare `<param>`.
/// The name `i` always denotes the imaginary unit.
inline Scalar eval_entry_expr(const std::string& text, const ParamMap& params) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw scalar_parse_error(
            "entry syntax error at position " + std::to_string(pos) + ": " + what, pos);
    };
    auto parse_ident = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && detail::ident_char(text[pos])) ++pos;
        return text.substr(start, pos - start);
    };
    auto param_value = [&](const std::string& name) {
        auto it = params.find(name);
        if (it == params.end())
            throw spec_file_error("unbound parameter '" + name + "' in entry \"" + text + "\"");
        return it->second;
    };

    Scalar total;
    bool first = true;
    while (pos < text.size()) {
        bool neg = false;
        if (!first || text[pos] == '+' || text[pos] == '-') {
            if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) fail("expected sign");
            neg = text[pos] == '-';
            ++pos;
        }
        first = false;
        if (pos >= text.size()) fail("dangling sign");
        Scalar term;
        if (detail::ident_start(text[pos]) && text[pos] != 'i') {
            term = param_value(parse_ident());
        } else if (text[pos] == 'i' && (pos + 1 >= text.size() || !detail::ident_char(text[pos + 1]))) {
            ++pos;
            term = Scalar::i();
        } else if (detail::ident_start(text[pos])) {
            term = param_value(parse_ident());
        } else {
            detail::ScalarParser p{text, pos};
            Rational coeff = p.real();
            pos = p.pos;
            if (pos < text.size() && text[pos] == '/') fail("unexpected '/'");
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                if (pos >= text.size()) fail("dangling '*'");
                if (text[pos] == 'i' && (pos + 1 >= text.size() || !detail::ident_char(text[pos + 1]))) {
                    ++pos;
                    term = Scalar(Rational(0), coeff);
                } else if (detail::ident_start(text[pos])) {
                    term = Scalar(coeff) * param_value(parse_ident());
                } else {
                    fail("expected 'i' or parameter name after '*'");
                }
            } else {
                term = Scalar(coeff);
            }
        }
        total += neg ? -term : term;
    }
    if (first) fail("empty entry");
    return total;
}

/// Builds an algebra from its JSON representation.  `overrides` replaces
/// declared parameter defaults; overriding an undeclared parameter is an
/// error.  The result is not validated here.
inline AlgebraSpec algebra_from_json(const Json& j, const ParamMap& overrides = {},
                                     const std::string& fallback_name = "algebra") {
    if (!j.is_object()) throw spec_file_error("spec root must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw spec_file_error("missing integer \"dim\"");
    const int n = j["dim"].get<int>();
    if (n <= 0) throw spec_file_error("\"dim\" must be positive");

    std::vector<std::string> basis;
    if (j.contains("basis")) {
        for (const auto& b : j["basis"]) basis.push_back(b.get<std::string>());
        if (int(basis.size()) != n) throw spec_file_error("\"basis\" length differs from \"dim\"");
    } else {
        for (int i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i + 1));
    }

    ParamMap params;
    if (j.contains("params")) {
        for (const auto& [key, val] : j["params"].items())
            params[key] = parse_scalar(val.get<std::string>());
    }
    for (const auto& [key, val] : overrides) {
        if (params.find(key) == params.end())
            throw spec_file_error("parameter '" + key + "' is not declared by the spec");
        params[key] = val;
    }

    AlgebraSpec a(j.contains("name") ? j["name"].get<std::string>() : fallback_name,
                  std::move(basis));
    auto pair_indices = [&](const Json& e) {
        int i = e.at("i").get<int>(), jj = e.at("j").get<int>();
        if (i < 0 || jj < 0 || i >= n || jj >= n || i >= jj)
            throw spec_file_error("pair indices must satisfy 0 <= i < j < dim");
        return std::pair<int, int>{i, jj};
    };
    if (j.contains("brackets"))
        for (const auto& e : j["brackets"]) {
            auto [i, jj] = pair_indices(e);
            const auto& out = e.at("out");
            if (!out.is_array() || int(out.size()) != n)
                throw spec_file_error("\"out\" must hold dim entries");
            Vec v(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k)
                v[std::size_t(k)] = eval_entry_expr(out[k].get<std::string>(), params);
            a.set_bracket(i, jj, v);
        }
    if (j.contains("omega"))
        for (const auto& e : j["omega"]) {
            auto [i, jj] = pair_indices(e);
            a.set_omega(i, jj, eval_entry_expr(e.at("val").get<std::string>(), params));
        }
    return a;
}

inline Json algebra_to_json(const AlgebraSpec& a) {
    const int n = a.dim();
    Json j;
    j["name"] = a.name();
    j["dim"] = n;
    j["basis"] = a.basis_names();
    Json brackets = Json::array();
    for (int i = 0; i < n; ++i)
        for (int jj = i + 1; jj < n; ++jj) {
            bool nonzero = false;
            Json out = Json::array();
            for (int k = 0; k < n; ++k) {
                nonzero = nonzero || !a.c(i, jj, k).is_zero();
                out.push_back(render_scalar(a.c(i, jj, k)));
            }
            if (nonzero) brackets.push_back({{"i", i}, {"j", jj}, {"out", out}});
        }
    j["brackets"] = std::move(brackets);
    Json omega = Json::array();
    for (int i = 0; i < n; ++i)
        for (int jj = i + 1; jj < n; ++jj)
            if (!a.omega(i, jj).is_zero())
                omega.push_back({{"i", i}, {"j", jj}, {"val", render_scalar(a.omega(i, jj))}});
    j["omega"] = std::move(omega);
    return j;
}

namespace detail {

inline std::pair<int, int> line_col_of_offset(const std::string& text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t p = 0; p < offset && p < text.size(); ++p) {
        if (text[p] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

/// Loads an algebra spec file; JSON syntax errors are reported with
/// line/column.
inline AlgebraSpec load_algebra_file(const std::string& path, const ParamMap& overrides = {}) {
    std::ifstream in(path);
    if (!in) throw spec_file_error(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = detail::line_col_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        throw spec_file_error(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                              ": " + e.what());
    }
    std::string stem = path;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (stem.size() > 5 && stem.substr(stem.size() - 5) == ".json") stem.resize(stem.size() - 5);
    try {
        return algebra_from_json(j, overrides, stem);
    } catch (const spec_file_error& e) {
        throw spec_file_error(path + ": " + e.what());
    } catch (const scalar_parse_error& e) {
        throw spec_file_error(path + ": " + e.what());
    }
}

inline bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

/// Catalog names documented to ship as fixture files rather than built-ins.
inline const std::vector<std::string>& fixture_family_names() {
    static const std::vector<std::string> names = {"B", "A_alpha", "C_alpha"};
    return names;
}

/// Resolves a catalog name: built-ins first (L1, L2), then fixture files in
/// `fixtures_dir`.  Known fixture families raise missing_fixture_error when
/// their file is absent; anything else raises unknown_algebra_error.
inline AlgebraSpec catalog(const std::string& name, const ParamMap& params = {},
                           const std::string& fixtures_dir = "fixtures") {
    if (name == "L1" || name == "L2") {
        if (!params.empty())
            throw spec_file_error("built-in algebra " + name + " takes no parameters");
        return name == "L1" ? make_L1() : make_L2();
    }
    std::string path = fixtures_dir + "/" + name + ".json";
    if (file_exists(path)) return load_algebra_file(path, params);
    for (const std::string& fam : fixture_family_names())
        if (name == fam)
            throw missing_fixture_error("fixture file for " + name + " not found at " + path);
    throw unknown_algebra_error("unknown algebra '" + name + "'");
}

// ---------------------------------------------------------------------------
// JSON serialization of results.

inline Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(render_scalar(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json der_space_to_json(const DerSpace& s) {
    Json j;
    j["kind"] = kind_name(s.kind);
    j["pair_dim"] = s.pair_dim();
    j["f_dim"] = s.f_dim();
    Json basis = Json::array();
    for (const Mat& m : s.f_basis_matrices()) basis.push_back(matrix_to_json(m));
    j["f_basis"] = std::move(basis);
    BlockLayout flay{s.n(), {"x"}};
    Json frees = Json::array();
    for (int v : s.generic.free_vars) frees.push_back(flay.var_name(v));
    j["free"] = std::move(frees);
    j["constraints"] = render_generic_constraints(s.generic, flay);
    return j;
}

inline Json report_to_json(const CheckReport& r) {
    Json j;
    j["name"] = r.name;
    j["applicable"] = r.applicable;
    j["passed"] = r.passed;
    j["notes"] = r.notes;
    j["failures"] = r.failures;
    return j;
}

inline Json validation_to_json(const ValidationReport& rep) {
    Json j;
    j["valid"] = rep.ok();
    Json anti = Json::array();
    for (const auto& p : rep.bracket_antisymmetry) anti.push_back({{"i", p.i}, {"j", p.j}});
    j["bracket_antisymmetry_failures"] = std::move(anti);
    Json skew = Json::array();
    for (const auto& p : rep.form_skew) skew.push_back({{"i", p.i}, {"j", p.j}});
    j["form_skew_failures"] = std::move(skew);
    Json jac = Json::array();
    for (const auto& t : rep.jacobi) {
        Json lhs = Json::array(), rhs = Json::array();
        for (const Scalar& s : t.lhs) lhs.push_back(render_scalar(s));
        for (const Scalar& s : t.rhs) rhs.push_back(render_scalar(s));
        jac.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"lhs", lhs}, {"rhs", rhs}});
    }
    j["jacobi_failures"] = std::move(jac);
    return j;
}

}  // namespace omegader
