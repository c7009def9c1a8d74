#pragma once

// Command-line front end.  Kept in a header with stream parameters so the
// test suite can drive it in-process; tools/omegader.cpp wraps it in main().
//
// Exit codes: 0 success, 1 validation or verification failure, 2 input or
// parse error, 3 missing fixture.

#include "omegader/algebra.hpp"
#include "omegader/embedding.hpp"
#include "omegader/io.hpp"
#include "omegader/render.hpp"
#include "omegader/scalar.hpp"
#include "omegader/spaces.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace omegader::cli {

struct Options {
    std::string input;
    std::string kind;
    bool json = false;
    std::string fixtures_dir = "fixtures";
    std::vector<std::string> params;
};

namespace detail {

inline ParamMap parse_params(const std::vector<std::string>& kv) {
    ParamMap out;
    for (const std::string& s : kv) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw spec_file_error("--param expects name=value, got '" + s + "'");
        out[s.substr(0, eq)] = parse_scalar(s.substr(eq + 1));
    }
    return out;
}

/// Catalog names first, then file paths.
inline AlgebraSpec resolve_input(const std::string& input, const ParamMap& params,
                                 const std::string& fixtures_dir) {
    try {
        return catalog(input, params, fixtures_dir);
    } catch (const unknown_algebra_error&) {
        if (file_exists(input)) return load_algebra_file(input, params);
        throw;
    }
}

inline void print_matrix_rows(std::ostream& out,
                              const std::vector<std::vector<std::string>>& grid,
                              const std::string& indent) {
    for (const auto& row : grid) {
        out << indent << "[";
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ", ";
            out << row[c];
        }
        out << "]\n";
    }
}

inline std::vector<std::vector<std::string>> matrix_strings(const Mat& m) {
    std::vector<std::vector<std::string>> grid(m.rows(), std::vector<std::string>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) grid[r][c] = render_scalar(m.at(r, c));
    return grid;
}

inline int print_validation(std::ostream& out, const AlgebraSpec& a, bool json,
                            bool quiet_on_success = false) {
    ValidationReport rep = validate(a);
    if (quiet_on_success && rep.ok()) return 0;
    if (json) {
        Json j = validation_to_json(rep);
        j["algebra"] = a.name();
        out << j.dump(2) << "\n";
    } else {
        if (rep.ok()) {
            out << a.name() << ": valid (antisymmetry, skew form, defining identity)\n";
        } else {
            const auto& names = a.basis_names();
            for (const auto& p : rep.bracket_antisymmetry)
                out << a.name() << ": bracket tensor not antisymmetric at pair (" << names[p.i]
                    << ", " << names[p.j] << ")\n";
            for (const auto& p : rep.form_skew)
                out << a.name() << ": form not skew-symmetric at pair (" << names[p.i] << ", "
                    << names[p.j] << ")\n";
            for (const auto& t : rep.jacobi) {
                out << a.name() << ": defining identity fails on triple (" << names[t.i] << ", "
                    << names[t.j] << ", " << names[t.k] << "); lhs = [";
                for (std::size_t p = 0; p < t.lhs.size(); ++p)
                    out << (p ? ", " : "") << render_scalar(t.lhs[p]);
                out << "], rhs = [";
                for (std::size_t p = 0; p < t.rhs.size(); ++p)
                    out << (p ? ", " : "") << render_scalar(t.rhs[p]);
                out << "]\n";
            }
        }
    }
    return rep.ok() ? 0 : 1;
}

inline void print_space(std::ostream& out, const AlgebraSpec& a, const DerSpace& s, bool json) {
    if (json) {
        Json j = der_space_to_json(s);
        j["algebra"] = a.name();
        out << j.dump(2) << "\n";
        return;
    }
    BlockLayout flay{s.n(), {"x"}};
    out << a.name() << " " << kind_name(s.kind) << ": dim " << s.f_dim() << "\n";
    out << "free:";
    for (int v : s.generic.free_vars) out << " " << flay.var_name(v);
    out << "\n";
    auto constraints = render_generic_constraints(s.generic, flay);
    out << "constraints:" << (constraints.empty() ? " none" : "") << "\n";
    for (const auto& c : constraints) out << "  " << c << "\n";
    out << "generic form:\n";
    print_matrix_rows(out, render_generic_block(s.generic, flay, 0), "  ");
}

inline void print_table_entry(std::ostream& out, const AlgebraSpec& a) {
    DerSpace gd = compute_space(a, SpaceKind::gder);
    DerSpace gdc = compute_space(a, SpaceKind::gder_c);
    DerSpace qd = compute_space(a, SpaceKind::qder);
    BlockLayout flay{a.dim(), {"x"}};
    out << "algebra " << a.name() << " (dim " << a.dim() << ")\n";
    out << "\n";
    out << "gder  dim " << gd.f_dim() << "\n";
    print_matrix_rows(out, render_generic_block(gd.generic, flay, 0), "  ");
    out << "\n";
    out << "gder_c  dim " << gdc.f_dim() << "\n";
    print_matrix_rows(out, render_generic_block(gdc.generic, flay, 0), "  ");
    out << "\n";
    AffineDescription pair_generic = generic_form(qd.pair_space);
    out << "qder  dim " << qd.f_dim() << "\n";
    out << "  f:\n";
    print_matrix_rows(out, render_generic_block(pair_generic, qd.layout, 0), "  ");
    out << "  f':\n";
    print_matrix_rows(out, render_generic_block(pair_generic, qd.layout, 1), "  ");
}

inline Json table_entry_json(const AlgebraSpec& a) {
    DerSpace gd = compute_space(a, SpaceKind::gder);
    DerSpace gdc = compute_space(a, SpaceKind::gder_c);
    DerSpace qd = compute_space(a, SpaceKind::qder);
    BlockLayout flay{a.dim(), {"x"}};
    AffineDescription pair_generic = generic_form(qd.pair_space);
    Json j;
    j["algebra"] = a.name();
    j["gder"] = {{"dim", gd.f_dim()}, {"generic", render_generic_block(gd.generic, flay, 0)}};
    j["gder_c"] = {{"dim", gdc.f_dim()}, {"generic", render_generic_block(gdc.generic, flay, 0)}};
    j["qder"] = {{"dim", qd.f_dim()},
                 {"f", render_generic_block(pair_generic, qd.layout, 0)},
                 {"f_assoc", render_generic_block(pair_generic, qd.layout, 1)}};
    return j;
}

inline std::vector<CheckReport> run_all_checks(const AlgebraSpec& a) {
    std::vector<CheckReport> reps;
    reps.push_back(check_tower(a));
    for (SpaceKind k : {SpaceKind::gder, SpaceKind::gder_c, SpaceKind::qder, SpaceKind::qder_c})
        reps.push_back(check_lie_closure(a, compute_space(a, k)));
    reps.push_back(check_associate_bracket(a));
    reps.push_back(check_bracket_containments(a));
    reps.push_back(check_sum_decomposition(a));
    reps.push_back(check_embedded_derivations(a));
    reps.push_back(check_embedding_homomorphism(a));
    reps.push_back(check_semidirect_decomposition(a));
    return reps;
}

}  // namespace detail

/// Runs the CLI; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact derivation-space computations for omega-Lie algebras"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("input", opt.input, "catalog name or spec file")->required();
        cmd->add_flag("--json", opt.json, "machine-readable output");
        cmd->add_option("--fixtures-dir", opt.fixtures_dir, "fixture directory")
            ->default_val("fixtures");
        cmd->add_option("--param", opt.params, "bind a parameter, name=value");
    };

    CLI::App* c_validate = app.add_subcommand("validate", "check the defining identities");
    add_common(c_validate, true);

    CLI::App* c_space = app.add_subcommand("space", "compute one derivation-type space");
    c_space->add_option("kind_or_input", opt.kind, "space kind (or input when --kind is used)")
        ->required();
    add_common(c_space, false);
    c_space->add_option("input", opt.input, "catalog name or spec file");
    std::string kind_flag;
    c_space->add_option("--kind", kind_flag, "space kind");

    CLI::App* c_dims = app.add_subcommand("dims", "dimensions of all eleven spaces");
    add_common(c_dims, true);

    CLI::App* c_table = app.add_subcommand("table", "generic forms of gder, gder_c, qder");
    c_table->add_option("input", opt.input, "catalog name or spec file (default: catalog)");
    c_table->add_flag("--json", opt.json, "machine-readable output");
    c_table->add_option("--fixtures-dir", opt.fixtures_dir, "fixture directory")
        ->default_val("fixtures");
    c_table->add_option("--param", opt.params, "bind a parameter, name=value");

    CLI::App* c_embed = app.add_subcommand("embed", "doubled algebra and embedded basis maps");
    add_common(c_embed, true);

    CLI::App* c_verify = app.add_subcommand("verify", "run every verification suite");
    add_common(c_verify, true);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        ParamMap params = detail::parse_params(opt.params);

        if (c_validate->parsed()) {
            AlgebraSpec a = detail::resolve_input(opt.input, params, opt.fixtures_dir);
            return detail::print_validation(out, a, opt.json);
        }

        if (c_space->parsed()) {
            std::string kind_str;
            if (!kind_flag.empty()) {
                kind_str = kind_flag;
                if (!opt.input.empty()) {
                    err << "error: give the input once (positionally) when using --kind\n";
                    return 2;
                }
                opt.input = opt.kind;
            } else {
                kind_str = opt.kind;
                if (opt.input.empty()) {
                    err << "error: space needs a kind and an input\n";
                    return 2;
                }
            }
            auto kind = parse_kind(kind_str);
            if (!kind) {
                err << "error: unknown space kind '" << kind_str << "'\n";
                return 2;
            }
            AlgebraSpec a = detail::resolve_input(opt.input, params, opt.fixtures_dir);
            if (int rc = detail::print_validation(err, a, false, true); rc != 0) return rc;
            detail::print_space(out, a, compute_space(a, *kind), opt.json);
            return 0;
        }

        if (c_dims->parsed()) {
            AlgebraSpec a = detail::resolve_input(opt.input, params, opt.fixtures_dir);
            if (int rc = detail::print_validation(err, a, false, true); rc != 0) return rc;
            Json j;
            j["algebra"] = a.name();
            Json dims;
            for (SpaceKind k : all_space_kinds)
                dims[kind_name(k)] = compute_space(a, k).f_dim();
            if (opt.json) {
                j["dims"] = std::move(dims);
                out << j.dump(2) << "\n";
            } else {
                out << a.name() << "\n";
                for (SpaceKind k : all_space_kinds)
                    out << "  " << kind_name(k) << " " << dims[kind_name(k)].get<int>() << "\n";
            }
            return 0;
        }

        if (c_table->parsed()) {
            std::vector<AlgebraSpec> algebras;
            if (!opt.input.empty()) {
                algebras.push_back(detail::resolve_input(opt.input, params, opt.fixtures_dir));
            } else {
                algebras.push_back(make_L1());
                algebras.push_back(make_L2());
                for (const std::string& fam : fixture_family_names())
                    if (file_exists(opt.fixtures_dir + "/" + fam + ".json"))
                        algebras.push_back(catalog(fam, params, opt.fixtures_dir));
            }
            for (const AlgebraSpec& a : algebras)
                if (!validate(a).ok()) {
                    detail::print_validation(err, a, false);
                    return 1;
                }
            if (opt.json) {
                Json arr = Json::array();
                for (const AlgebraSpec& a : algebras) arr.push_back(detail::table_entry_json(a));
                out << arr.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < algebras.size(); ++i) {
                    if (i) out << "\n";
                    detail::print_table_entry(out, algebras[i]);
                }
            }
            return 0;
        }

        if (c_embed->parsed()) {
            AlgebraSpec a = detail::resolve_input(opt.input, params, opt.fixtures_dir);
            if (int rc = detail::print_validation(err, a, false, true); rc != 0) return rc;
            DoubledAlgebra d = build_doubled(a);
            DerSpace qdc = compute_space(a, SpaceKind::qder_c);
            if (opt.json) {
                Json j;
                j["doubled"] = algebra_to_json(d.doubled);
                Json comp = Json::array();
                for (int c : d.complement) comp.push_back(a.basis_names()[std::size_t(c)]);
                j["complement"] = std::move(comp);
                Json images = Json::array();
                for (const Mat& f : qdc.f_basis_matrices())
                    images.push_back(matrix_to_json(delta_u(d, f)));
                j["qder_c_images"] = std::move(images);
                out << j.dump(2) << "\n";
            } else {
                out << "doubled algebra " << d.doubled.name() << " (dim " << d.doubled.dim()
                    << ")\n";
                const auto& names = d.doubled.basis_names();
                for (int i = 0; i < d.doubled.dim(); ++i)
                    for (int jj = i + 1; jj < d.doubled.dim(); ++jj) {
                        Vec v = d.doubled.bracket_basis(i, jj);
                        bool nz = false;
                        for (const Scalar& s : v) nz = nz || !s.is_zero();
                        if (!nz) continue;
                        out << "  [" << names[i] << ", " << names[jj] << "] = "
                            << render_linear_combination(v, [&](int k) { return names[k]; })
                            << "\n";
                    }
                for (int i = 0; i < d.doubled.dim(); ++i)
                    for (int jj = i + 1; jj < d.doubled.dim(); ++jj)
                        if (!d.doubled.omega(i, jj).is_zero())
                            out << "  w(" << names[i] << ", " << names[jj]
                                << ") = " << render_scalar(d.doubled.omega(i, jj)) << "\n";
                out << "complement of the bracket span:";
                for (int c : d.complement) out << " " << a.basis_names()[std::size_t(c)];
                out << "\n";
                out << "embedded images of the qder_c basis (dim " << qdc.f_dim() << "):\n";
                for (const Mat& f : qdc.f_basis_matrices()) {
                    detail::print_matrix_rows(out, detail::matrix_strings(delta_u(d, f)), "  ");
                    out << "\n";
                }
            }
            return 0;
        }

        if (c_verify->parsed()) {
            AlgebraSpec a = detail::resolve_input(opt.input, params, opt.fixtures_dir);
            if (int rc = detail::print_validation(err, a, false, true); rc != 0) return rc;
            std::vector<CheckReport> reps = detail::run_all_checks(a);
            bool all_ok = true;
            if (opt.json) {
                Json arr = Json::array();
                for (const CheckReport& r : reps) arr.push_back(report_to_json(r));
                out << arr.dump(2) << "\n";
            }
            for (const CheckReport& r : reps) {
                if (!r.applicable) {
                    if (!opt.json) out << "N/A  " << r.name << "\n";
                    continue;
                }
                all_ok = all_ok && r.passed;
                if (!opt.json) {
                    out << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
                    for (const auto& f : r.failures) out << "     " << f << "\n";
                }
            }
            for (const CheckReport& r : reps) all_ok = all_ok && (r.passed || !r.applicable);
            return all_ok ? 0 : 1;
        }
    } catch (const missing_fixture_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const unknown_algebra_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const spec_file_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const scalar_parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace omegader::cli
