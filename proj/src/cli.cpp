#include "birk/cli.hpp"

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "birk/analysis.hpp"
#include "birk/bvn.hpp"
#include "birk/factor.hpp"
#include "birk/generate.hpp"
#include "birk/matrix.hpp"
#include "birk/matrix_io.hpp"
#include "birk/report.hpp"

namespace birk {

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
    std::string input;
    std::string format = "dense";
    bool json = false;
    double sum_tol = 1e-9;
    double zero_tol = 1e-12;

    ToleranceConfig tolerances() const {
        ToleranceConfig tol;
        tol.sum_tol = sum_tol;
        tol.zero_tol = zero_tol;
        return tol;
    }

    MatrixFormat matrix_format() const {
        return format == "csv" ? MatrixFormat::Csv : MatrixFormat::DenseText;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_input) {
    if (needs_input) {
        cmd->add_option("--input", opts.input, "path to the matrix file")->required();
        cmd->add_option("--format", opts.format, "input format")
            ->check(CLI::IsMember({"dense", "csv"}))
            ->capture_default_str();
    }
    cmd->add_flag("--json", opts.json, "emit the structured report");
    cmd->add_option("--sum-tol", opts.sum_tol, "absolute tolerance on row/column sums")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--zero-tol", opts.zero_tol, "threshold for structural zeros")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string kind_name(ExtremeKind kind) {
    switch (kind) {
        case ExtremeKind::Permutation: return "permutation";
        case ExtremeKind::Uniform: return "uniform";
        case ExtremeKind::Interior: return "interior";
        case ExtremeKind::Degenerate: return "degenerate";
    }
    return "interior";
}

void emit(std::ostream& out, bool as_json, const std::string& command,
          const std::string& digest, ordered_json payload,
          const std::function<void(std::ostream&)>& render_text) {
    if (as_json) {
        out << dump_report(make_envelope(command, digest, std::move(payload))) << '\n';
    } else {
        render_text(out);
    }
}

int cmd_validate(const CommonOpts& opts, std::ostream& out) {
    const DenseMatrix m = parse_matrix(opts.input, opts.matrix_format());
    const ClassificationReport r = classify(m, opts.tolerances());
    ordered_json payload;
    payload["n"] = m.order();
    payload["is_nonnegative"] = r.is_nonnegative;
    payload["is_bistochastic"] = r.is_bistochastic;
    payload["is_star_positive"] = r.is_star_positive;
    payload["is_permutation"] = r.is_permutation;
    payload["is_star_permutation"] = r.is_star_permutation;
    payload["is_uniform"] = r.is_uniform;
    payload["is_star_uniform"] = r.is_star_uniform;
    payload["max_sum_residual"] = r.max_sum_residual;
    emit(out, opts.json, "validate", fnv1a_hex(canonical_bytes(m)), payload,
         [&](std::ostream& o) {
             o << "n: " << m.order() << '\n'
               << "is_nonnegative: " << fmt_bool(r.is_nonnegative) << '\n'
               << "is_bistochastic: " << fmt_bool(r.is_bistochastic) << '\n'
               << "is_star_positive: " << fmt_bool(r.is_star_positive) << '\n'
               << "is_permutation: " << fmt_bool(r.is_permutation) << '\n'
               << "is_star_permutation: " << fmt_bool(r.is_star_permutation) << '\n'
               << "is_uniform: " << fmt_bool(r.is_uniform) << '\n'
               << "is_star_uniform: " << fmt_bool(r.is_star_uniform) << '\n'
               << "max_sum_residual: " << format_real(r.max_sum_residual) << '\n';
         });
    return 0;
}

int cmd_factor(const CommonOpts& opts, bool star, std::ostream& out) {
    const DenseMatrix m = parse_matrix(opts.input, opts.matrix_format());
    const MatchingProfile p = star ? star_matching_factor(m) : matching_factor(m);
    ordered_json payload;
    payload["variant"] = star ? "star" : "plain";
    payload["n"] = p.n;
    payload["lambdas"] = p.lambdas;
    payload["log_lambdas"] = p.log_lambdas;
    payload["log_m"] = p.log_m;
    if (p.m_linear > 0.0) payload["m_linear"] = p.m_linear;  // omitted on underflow
    payload["log_lower_bound"] = p.log_lower_bound;
    payload["log_upper_bound"] = p.log_upper_bound;
    emit(out, opts.json, "factor", fnv1a_hex(canonical_bytes(m)), payload,
         [&](std::ostream& o) {
             o << "variant: " << (star ? "star" : "plain") << '\n'
               << "n: " << p.n << '\n';
             for (std::size_t k = 0; k < p.n; ++k) {
                 o << "lambda[" << k << "]: " << format_real(p.lambdas[k]) << '\n';
             }
             o << "log_m: " << format_real(p.log_m) << '\n';
             if (p.m_linear > 0.0) {
                 o << "m_linear: " << format_real(p.m_linear) << '\n';
             }
             o << "log_lower_bound: " << format_real(p.log_lower_bound) << '\n'
               << "log_upper_bound: " << format_real(p.log_upper_bound) << '\n';
         });
    return 0;
}

int cmd_classify(const CommonOpts& opts, std::ostream& out) {
    const DenseMatrix m = parse_matrix(opts.input, opts.matrix_format());
    const ExtremeClass e = classify_extreme(m, opts.tolerances());
    ordered_json payload;
    payload["n"] = m.order();
    payload["kind"] = kind_name(e.kind);
    if (e.permutation) payload["permutation"] = *e.permutation;
    payload["log_m"] = e.log_m;
    emit(out, opts.json, "classify", fnv1a_hex(canonical_bytes(m)), payload,
         [&](std::ostream& o) {
             o << "n: " << m.order() << '\n' << "kind: " << kind_name(e.kind) << '\n';
             if (e.permutation) {
                 o << "permutation:";
                 for (const std::size_t v : *e.permutation) o << ' ' << v;
                 o << '\n';
             }
             o << "log_m: " << format_real(e.log_m) << '\n';
         });
    return 0;
}

struct GenerateOpts {
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double scale_factor = 1.0;
    double lo = 0.5;
    double hi = 2.0;
};

int cmd_generate(const GenerateOpts& g, const CommonOpts& opts, std::ostream& out) {
    DenseMatrix m = [&] {
        if (g.kind == "permutation") {
            return permutation_matrix(random_permutation(g.n, g.seed));
        }
        if (g.kind == "uniform") return uniform_matrix(g.n);
        if (g.kind == "bistochastic") return random_bistochastic(g.n, g.seed);
        if (g.kind == "star-permutation") {
            return star_permutation_random(g.n, g.seed, g.lo, g.hi);
        }
        return star_uniform(g.n, 1.0);  // star-uniform; --scale sets the value
    }();
    if (g.scale_factor != 1.0) m = scale(m, g.scale_factor);

    ordered_json payload;
    payload["kind"] = g.kind;
    payload["n"] = g.n;
    payload["seed"] = g.seed;
    payload["scale"] = g.scale_factor;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
    }
    payload["rows"] = std::move(rows);
    emit(out, opts.json, "generate", fnv1a_hex(canonical_bytes(m)), payload,
         [&](std::ostream& o) { write_dense(o, m); });
    return 0;
}

int cmd_decompose(const CommonOpts& opts, std::size_t max_terms, std::ostream& out) {
    const DenseMatrix m = parse_matrix(opts.input, opts.matrix_format());
    const BvnDecomposition d = bvn_decompose(m, opts.tolerances(), max_terms);
    ordered_json payload;
    payload["n"] = d.n;
    payload["term_count"] = d.terms.size();
    ordered_json terms = ordered_json::array();
    for (const BvnTerm& t : d.terms) {
        ordered_json term;
        term["weight"] = t.weight;
        term["permutation"] = t.permutation.map();
        terms.push_back(std::move(term));
    }
    payload["terms"] = std::move(terms);
    payload["residual_mass"] = d.residual_mass;
    emit(out, opts.json, "decompose", fnv1a_hex(canonical_bytes(m)), payload,
         [&](std::ostream& o) {
             o << "n: " << d.n << '\n' << "term_count: " << d.terms.size() << '\n';
             for (std::size_t t = 0; t < d.terms.size(); ++t) {
                 o << "term[" << t << "]: weight=" << format_real(d.terms[t].weight)
                   << " permutation=";
                 const auto& map = d.terms[t].permutation.map();
                 for (std::size_t i = 0; i < map.size(); ++i) {
                     if (i > 0) o << ' ';
                     o << map[i];
                 }
                 o << '\n';
             }
             o << "residual_mass: " << format_real(d.residual_mass) << '\n';
         });
    return 0;
}

int cmd_trajectory(const CommonOpts& opts, std::size_t t_max, double limit_tol,
                   std::ostream& out) {
    const DenseMatrix m = parse_matrix(opts.input, opts.matrix_format());
    const TrajectoryRecord rec = power_trajectory(m, t_max, limit_tol, opts.tolerances());
    ordered_json payload;
    payload["n"] = rec.n;
    payload["t_max"] = t_max;
    payload["converged"] = rec.converged;
    ordered_json samples = ordered_json::array();
    for (const TrajectorySample& s : rec.samples) {
        ordered_json sample;
        sample["t"] = s.t;
        sample["log_m"] = s.log_m;
        samples.push_back(std::move(sample));
    }
    payload["samples"] = std::move(samples);
    emit(out, opts.json, "trajectory", fnv1a_hex(canonical_bytes(m)), payload,
         [&](std::ostream& o) {
             o << "# n: " << rec.n << '\n'
               << "# converged: " << fmt_bool(rec.converged) << '\n'
               << "t,log_m\n";
             for (const TrajectorySample& s : rec.samples) {
                 o << s.t << ',' << format_real(s.log_m) << '\n';
             }
         });
    return 0;
}

struct OracleOpts {
    std::size_t n = 2;
    std::size_t resolution = 101;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
};

int cmd_oracle(const OracleOpts& oo, const CommonOpts& opts, std::ostream& out) {
    const std::size_t points = oo.n == 2 ? oo.resolution : oo.samples;
    const OracleResult r = oracle_grid_scan(oo.n, points, oo.seed);
    const std::string param_key = "oracle;n=" + std::to_string(oo.n) +
                                  ";points=" + std::to_string(points) +
                                  ";seed=" + std::to_string(oo.seed);
    ordered_json payload;
    payload["n"] = oo.n;
    payload["points"] = points;
    payload["seed"] = oo.seed;
    payload["min_log_m"] = r.min_log_m;
    payload["max_log_m"] = r.max_log_m;
    payload["argmin_is_uniform"] = r.argmin_is_uniform;
    payload["argmax_is_vertex"] = r.argmax_is_vertex;
    payload["points_scanned"] = r.points_scanned;
    emit(out, opts.json, "oracle", fnv1a_hex(param_key), payload,
         [&](std::ostream& o) {
             o << "n: " << oo.n << '\n'
               << "points: " << points << '\n'
               << "seed: " << oo.seed << '\n'
               << "min_log_m: " << format_real(r.min_log_m) << '\n'
               << "max_log_m: " << format_real(r.max_log_m) << '\n'
               << "argmin_is_uniform: " << fmt_bool(r.argmin_is_uniform) << '\n'
               << "argmax_is_vertex: " << fmt_bool(r.argmax_is_vertex) << '\n'
               << "points_scanned: " << r.points_scanned << '\n';
         });
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"matching factor toolkit for bistochastic and *-positive matrices",
                 "birkfactor"};
    app.require_subcommand(1);

    CommonOpts validate_opts;
    CLI::App* validate = app.add_subcommand("validate", "class membership report");
    add_common(validate, validate_opts, true);

    CommonOpts factor_opts;
    bool star = false;
    CLI::App* factor = app.add_subcommand("factor", "per-index and total matching factors");
    add_common(factor, factor_opts, true);
    factor->add_flag("--star", star, "use the sum-normalized *-variant");

    CommonOpts classify_opts;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "extreme-point classification");
    add_common(classify_cmd, classify_opts, true);

    CommonOpts generate_opts;
    GenerateOpts gen;
    CLI::App* generate = app.add_subcommand("generate", "write a matrix of a given class");
    add_common(generate, generate_opts, false);
    generate
        ->add_option("--kind", gen.kind, "matrix class")
        ->check(CLI::IsMember({"permutation", "uniform", "bistochastic",
                               "star-permutation", "star-uniform"}))
        ->required();
    generate->add_option("--n", gen.n, "matrix order")->check(CLI::PositiveNumber)->required();
    generate->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
    generate->add_option("--scale", gen.scale_factor, "entrywise scale factor")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    generate->add_option("--lo", gen.lo, "star-permutation value range lower bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    generate->add_option("--hi", gen.hi, "star-permutation value range upper bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CommonOpts decompose_opts;
    std::size_t max_terms = 0;
    CLI::App* decompose = app.add_subcommand(
        "decompose", "convex combination of permutation matrices");
    add_common(decompose, decompose_opts, true);
    decompose->add_option("--max-terms", max_terms, "term cap (0 = n^2-2n+2)")
        ->capture_default_str();

    CommonOpts trajectory_opts;
    std::size_t t_max = 1;
    double limit_tol = 1e-3;
    CLI::App* trajectory =
        app.add_subcommand("trajectory", "log matching factor of matrix powers");
    add_common(trajectory, trajectory_opts, true);
    trajectory->add_option("--tmax", t_max, "highest power")->check(CLI::PositiveNumber)->required();
    trajectory->add_option("--limit-tol", limit_tol, "band for the converged flag")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CommonOpts oracle_opts;
    OracleOpts oo;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force extreme scan");
    add_common(oracle, oracle_opts, false);
    oracle->add_option("--n", oo.n, "matrix order")->check(CLI::IsMember({2, 3}))->required();
    oracle->add_option("--resolution", oo.resolution, "grid points for n=2")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}))
        ->capture_default_str();
    oracle->add_option("--samples", oo.samples, "random samples for n=3")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}))
        ->capture_default_str();
    oracle->add_option("--seed", oo.seed, "PRNG seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(validate_opts, out);
        if (app.got_subcommand(factor)) return cmd_factor(factor_opts, star, out);
        if (app.got_subcommand(classify_cmd)) return cmd_classify(classify_opts, out);
        if (app.got_subcommand(generate)) return cmd_generate(gen, generate_opts, out);
        if (app.got_subcommand(decompose)) {
            return cmd_decompose(decompose_opts, max_terms, out);
        }
        if (app.got_subcommand(trajectory)) {
            return cmd_trajectory(trajectory_opts, t_max, limit_tol, out);
        }
        if (app.got_subcommand(oracle)) return cmd_oracle(oo, oracle_opts, out);
        err << "usage error: no subcommand selected\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace birk
