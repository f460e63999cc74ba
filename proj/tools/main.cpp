// Command line surface: enumerate combinatorial data, emit graded dimensions
// and filtration tables, and run the verification suites.  Output is
// machine-readable (JSON lines or CSV) and byte-deterministic for a fixed
// configuration.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "specht/basis.hpp"
#include "specht/branching.hpp"
#include "specht/hecke.hpp"
#include "specht/klr.hpp"
#include "specht/sweeps.hpp"
#include "specht/tableau.hpp"
#include "specht/verify.hpp"

using nlohmann::json;
using namespace specht;

namespace {

struct Options {
    long e = 0;
    long level = 1;
    std::string charge_csv;
    long n = -1;
    long n_max = -1;
    long residue = 0;
    std::string shape_json;
    std::string mode = "rational";
    long long p = 2;
    std::string suite;
    std::string format = "json";
    std::string out_path;
};

std::vector<long> parse_charge(const Options& opts) {
    if (opts.charge_csv.empty()) return std::vector<long>(static_cast<std::size_t>(opts.level), 0);
    std::vector<long> charge;
    std::stringstream stream(opts.charge_csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            charge.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--charge", "expected a comma-separated integer list");
        }
    }
    if (static_cast<long>(charge.size()) != opts.level) {
        throw CLI::ValidationError("--charge", "length must equal --level");
    }
    return charge;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw CLI::ValidationError("--out", "cannot open output file");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

json shape_to_json(const Multipartition& mu) {
    json out = json::array();
    for (long l = 1; l <= mu.level(); ++l) {
        json comp = json::array();
        for (long r = 1; r <= mu.row_count(l); ++r) comp.push_back(mu.row_length(l, r));
        out.push_back(comp);
    }
    return out;
}

Multipartition shape_from_json(const std::string& text, long level) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::exception&) {
        throw CLI::ValidationError("--shape", "malformed JSON");
    }
    if (!parsed.is_array()) throw CLI::ValidationError("--shape", "expected a list of components");
    std::vector<std::vector<long>> comps;
    for (const json& comp : parsed) {
        if (!comp.is_array()) throw CLI::ValidationError("--shape", "components must be lists");
        std::vector<long> rows;
        for (const json& part : comp) {
            if (!part.is_number_integer()) {
                throw CLI::ValidationError("--shape", "row lengths must be integers");
            }
            rows.push_back(part.get<long>());
        }
        comps.push_back(std::move(rows));
    }
    if (level > 0 && static_cast<long>(comps.size()) != level) {
        throw CLI::ValidationError("--shape", "component count must equal --level");
    }
    Multipartition mu{comps};
    if (!mu.is_multipartition()) {
        throw CLI::ValidationError("--shape", "components must be partitions");
    }
    return mu;
}

json tableau_to_json(const Tableau& t) {
    json out = json::array();
    const Multipartition& mu = t.shape();
    for (long l = 1; l <= mu.level(); ++l) {
        json comp = json::array();
        for (long r = 1; r <= mu.row_count(l); ++r) {
            json row = json::array();
            for (long c = 1; c <= mu.row_length(l, r); ++c) row.push_back(t.entry({r, c, l}));
            comp.push_back(row);
        }
        out.push_back(comp);
    }
    return out;
}

json laurent_to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [exp, coeff] : p.terms()) out.push_back(json::array({exp, coeff}));
    return out;
}

json params_to_json(const QuiverParams& params, long n) {
    json out;
    out["e"] = params.e;
    out["level"] = params.level();
    out["charge"] = params.charge;
    out["separated"] = params.separated(n);
    return out;
}

int run_enumerate(const Options& opts) {
    if (opts.format != "json" && opts.format != "csv") {
        throw CLI::ValidationError("--format", "expected json or csv");
    }
    long lo = opts.n >= 0 ? opts.n : 0;
    long hi = opts.n_max >= 0 ? opts.n_max : opts.n;
    if (hi < 0) throw CLI::ValidationError("--n", "need --n or --n-max");
    if (opts.n_max >= 0 && opts.n < 0) lo = 0;
    QuiverParams params(opts.e, parse_charge(opts));

    Output output(opts.out_path);
    std::ostream& os = output.stream();
    if (opts.format == "csv") {
        os << "# e=" << params.e << " level=" << params.level() << " separated="
           << (params.separated(hi) ? "true" : "false") << "\n";
        os << "n,shape,tableau,res,deg,codeg\n";
    } else {
        json meta;
        meta["params"] = params_to_json(params, hi);
        os << meta.dump() << "\n";
    }
    for (long n = lo; n <= hi; ++n) {
        for (const Multipartition& mu : enumerate_multipartitions(n, params.level())) {
            for (const Tableau& t : enumerate_standard(mu)) {
                std::vector<long> res = residue_sequence(t, params);
                long deg = degree(t, params);
                long codeg = codegree(t, params);
                if (opts.format == "json") {
                    json row;
                    row["n"] = n;
                    row["shape"] = shape_to_json(mu);
                    row["tableau"] = tableau_to_json(t);
                    row["res"] = res;
                    row["deg"] = deg;
                    row["codeg"] = codeg;
                    os << row.dump() << "\n";
                } else {
                    os << n << "," << mu.str() << "," << t.str() << ",(";
                    for (std::size_t i = 0; i < res.size(); ++i) {
                        if (i) os << " ";
                        os << res[i];
                    }
                    os << ")," << deg << "," << codeg << "\n";
                }
            }
        }
    }
    return 0;
}

int run_branch(const Options& opts) {
    if (opts.format != "json") throw CLI::ValidationError("--format", "branch emits json");
    QuiverParams params(opts.e, parse_charge(opts));
    Multipartition mu = shape_from_json(opts.shape_json, opts.level);

    Filtration filtration = induction_filtration(mu, opts.residue, params);
    json out;
    out["source"] = shape_to_json(mu);
    out["residue"] = filtration.residue;
    out["params"] = params_to_json(params, mu.size() + 1);
    json layers = json::array();
    for (const FiltrationLayer& layer : filtration.layers) {
        json row;
        row["shape"] = shape_to_json(layer.shape);
        row["shift"] = layer.shift;
        row["graded_dim"] = laurent_to_json(graded_dimension(layer.shape, params));
        layers.push_back(row);
    }
    out["layers"] = layers;
    out["graded_dim_induced"] = laurent_to_json(graded_dim_induced(mu, opts.residue, params));

    Output output(opts.out_path);
    output.stream() << out.dump(2) << "\n";
    return 0;
}

json report_to_json(const VerifyReport& report) {
    json out;
    out["suite"] = report.suite;
    json params;
    for (const auto& [key, value] : report.params) params[key] = value;
    out["params"] = params;
    out["checked"] = report.checked;
    out["violations"] = report.violations;
    out["notes"] = report.notes;
    return out;
}

int run_verify(const Options& opts) {
    if (opts.format != "json") throw CLI::ValidationError("--format", "verify emits json");
    if (opts.mode != "rational" && opts.mode != "prime") {
        throw CLI::ValidationError("--mode", "expected rational or prime");
    }

    VerifyReport report;
    if (opts.suite == "combinatorics") {
        long n_max = opts.n_max >= 0 ? opts.n_max : 6;
        report = sweep_combinatorics(n_max, sweep_quiver_grid(3));
        report.merge(sweep_counting(std::min(n_max, 5L), 3));
        report.merge(sweep_dominance(std::min(n_max, 4L), 2));
        report.param("n_max", std::to_string(n_max));
        report.param("grid", "e in {0,2,3,4}, charges (0),(0,0),(3,0),(7,3,0)");
    } else if (opts.suite == "klr") {
        if (opts.mode != "prime") {
            throw CLI::ValidationError("--mode", "the klr suite runs in prime mode");
        }
        long n = opts.n >= 0 ? opts.n : 2;
        HeckeAlgebra<Fp> algebra(make_degenerate_params(
            n, opts.level, opts.p,
            opts.charge_csv.empty() ? std::vector<long>{} : parse_charge(opts)));
        report = verify_klr(algebra);
    } else if (opts.suite == "strong" || opts.suite == "tilting" ||
               opts.suite == "lk-action" || opts.suite == "mlambda" ||
               opts.suite == "cross-model") {
        if (opts.mode != "rational") {
            throw CLI::ValidationError("--mode", "this suite runs in rational mode");
        }
        long n = opts.n >= 0 ? opts.n : 3;
        std::vector<long> kappa =
            opts.charge_csv.empty() ? std::vector<long>{} : parse_charge(opts);
        HeckeParams<Rational> params = make_semisimple_params(n, opts.level, kappa);
        if (!params.quiver.separated(n)) {
            throw CLI::ValidationError("--charge", "rational mode needs charge gaps >= n");
        }
        HeckeAlgebra<Rational> algebra(params);
        if (opts.suite == "cross-model") {
            report = verify_cross_model(algebra);
        } else {
            PairBasis<Rational> basis(algebra, true);
            if (opts.suite == "strong") {
                report = verify_strong_dominance(basis);
                report.merge(verify_eigenrelation(basis));
            } else if (opts.suite == "tilting") {
                report = verify_product_vanishing(basis);
            } else if (opts.suite == "lk-action") {
                report = verify_Lk_action(basis);
            } else {
                report = verify_mlambda_expansion(basis);
            }
            report.param("n", std::to_string(n));
            report.param("level", std::to_string(opts.level));
        }
    } else {
        throw CLI::ValidationError("--suite", "unknown suite " + opts.suite);
    }

    Output output(opts.out_path);
    output.stream() << report_to_json(report).dump(2) << "\n";
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics and small-rank algebra for graded cell modules "
                 "of cyclotomic Hecke algebras"};
    app.require_subcommand(1);
    Options opts;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--e", opts.e, "quantum characteristic (0 or >= 2)");
        cmd->add_option("--level", opts.level, "number of components")->check(CLI::PositiveNumber);
        cmd->add_option("--charge", opts.charge_csv, "multicharge as a comma list, e.g. 3,0");
        cmd->add_option("--format", opts.format, "output format: json or csv");
        cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    };

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "List multipartitions and standard tableaux with residues and degrees");
    add_common(enumerate);
    enumerate->add_option("--n", opts.n, "rank");
    enumerate->add_option("--n-max", opts.n_max, "enumerate ranks 0..n-max");

    CLI::App* branch =
        app.add_subcommand("branch", "Graded filtration layers of an induced cell module");
    add_common(branch);
    branch->add_option("--shape", opts.shape_json, "source multipartition, e.g. [[2,1],[1]]")
        ->required();
    branch->add_option("--residue", opts.residue, "residue of the added node")->required();

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    add_common(verify);
    verify->add_option("--suite", opts.suite,
                       "one of: combinatorics, strong, tilting, lk-action, mlambda, "
                       "klr, cross-model")
        ->required();
    verify->add_option("--n", opts.n, "rank for the algebra suites");
    verify->add_option("--n-max", opts.n_max, "rank bound for the combinatorics sweep");
    verify->add_option("--mode", opts.mode, "scalar mode: rational (xi=2) or prime (xi=1)");
    verify->add_option("--p", opts.p, "prime modulus for prime mode")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) return run_enumerate(opts);
        if (branch->parsed()) return run_branch(opts);
        if (verify->parsed()) return run_verify(opts);
    } catch (const CLI::Error& error) {
        return app.exit(error);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 0;
}
