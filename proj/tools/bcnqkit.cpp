// Command-line front end: construct polynomials, run verification suites,
// and emit dimension tables. All output is deterministic for a fixed job
// spec; reports are line-delimited JSON, one case per line.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bcnqkit/closedforms.hpp"
#include "bcnqkit/serialize.hpp"
#include "bcnqkit/verify.hpp"

using namespace bcnq;

namespace {

struct JobSpec {
    std::string command;
    std::string family = "little";
    std::string space = "padic";
    std::string suite = "eigen";
    int n = 1;
    int d = 2;
    int k = 1;
    int max_weight = 2;
    int max_m = 5;
    std::vector<int> lambda_parts;
    std::string params_text;
    std::vector<long> seeds;
    std::string format = "json";
    std::string out_path;
    std::string exec = "openmp";
    bool d_given = false;

    json to_json_spec() const {
        json j;
        j["command"] = command;
        j["family"] = family;
        j["space"] = space;
        j["suite"] = suite;
        j["n"] = n;
        j["d"] = d;
        j["k"] = k;
        j["max_weight"] = max_weight;
        j["max_m"] = max_m;
        j["lambda"] = lambda_parts;
        j["params"] = params_text;
        j["seeds"] = seeds;
        j["format"] = format;
        j["out"] = out_path;
        j["exec"] = exec;
        return j;
    }
};

long max_cells() {
    const char* env = std::getenv("BCNQKIT_MAX_CELLS");
    if (!env) return 24;
    return std::atol(env);
}

[[noreturn]] void emit_error(const std::string& kind, const std::string& detail) {
    json err;
    err["error"] = kind;
    err["detail"] = detail;
    std::cout << err.dump() << "\n";
    std::exit(1);
}

ParamPoint parse_params_text(const std::string& text, Family family) {
    ParamPoint p;
    p.used_mask = family_param_mask(family);
    unsigned seen = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq != 1)
            throw std::invalid_argument("--params expects comma-separated name=p/q assignments");
        char name = item[0];
        p.set(name, Rat::parse(item.substr(eq + 1)));
        switch (name) {
            case 'a': seen |= PARAM_A; break;
            case 'b': seen |= PARAM_B; break;
            case 'c': seen |= PARAM_C; break;
            case 'd': seen |= PARAM_D; break;
            case 'q': seen |= PARAM_Q; break;
            case 't': seen |= PARAM_T; break;
        }
    }
    if ((seen & p.used_mask) != p.used_mask)
        throw std::invalid_argument("--params must assign every live parameter for the family");
    return p;
}

void write_output(const JobSpec& spec, const std::string& text) {
    if (spec.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(spec.out_path, std::ios::binary);
    if (!out) emit_error("io", "cannot open output file " + spec.out_path);
    out << text;
}

json case_to_json(const CaseResult& c) {
    json j;
    j["check"] = c.check;
    j["family"] = c.tag;
    j["lambda"] = c.lambda;
    j["seed"] = c.seed;
    j["ok"] = c.ok;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    return j;
}

int report_cases(const JobSpec& spec, const std::vector<CaseResult>& cases, bool incomplete) {
    std::ostringstream os;
    for (const CaseResult& c : cases) os << case_to_json(c).dump() << "\n";
    if (incomplete) os << R"({"incomplete":true,"reason":"resource bound BCNQKIT_MAX_CELLS"})" << "\n";
    write_output(spec, os.str());
    std::size_t failed = 0;
    for (const CaseResult& c : cases)
        if (!c.ok) ++failed;
    std::cerr << cases.size() - failed << "/" << cases.size() << " checks ok\n";
    return failed == 0 ? 0 : 1;
}

int run_poly(const JobSpec& spec) {
    Family family = parse_family(spec.family);
    Partition lambda(spec.lambda_parts, spec.n);
    if (lambda.weight() * spec.n > max_cells())
        emit_error("resource limit", "|lambda| * n exceeds BCNQKIT_MAX_CELLS");
    if (!spec.params_text.empty() && !spec.seeds.empty())
        emit_error("usage", "--params and --seed are mutually exclusive");
    ParamPoint params;
    try {
        if (!spec.params_text.empty()) {
            params = parse_params_text(spec.params_text, family);
            certify_generic(params, family, lambda);
        } else {
            params = sample_generic_params(spec.seeds.empty() ? 1 : spec.seeds.front(), family, lambda);
        }
    } catch (const DegenerateError& e) {
        emit_error("degenerate specialization", e.what());
    }

    SymPoly p = compute_polynomial(family, lambda, params);
    json checks = json::array();
    bool all = true;
    for (PointKind pk : admissible_point_kinds(family)) {
        std::vector<Rat> point = substitute_geometric_point(pk, params, spec.n);
        Rat direct = sympoly_eval(p, point);
        ClosedFormRequest req{family, ClosedFormKind::evaluation, pk, lambda, params, spec.n};
        Rat closed = closed_evaluation(req);
        json c;
        c["point"] = point_kind_name(pk);
        c["direct"] = direct.str();
        c["closed_form"] = closed.str();
        c["ok"] = direct == closed;
        all = all && direct == closed;
        checks.push_back(std::move(c));
    }
    json out;
    out["family"] = spec.family;
    out["lambda"] = to_json(lambda);
    out["params"] = params.str();
    out["rejections"] = params.rejections;
    out["polynomial"] = to_json(p);
    out["point_checks"] = std::move(checks);
    write_output(spec, out.dump(2) + "\n");
    return all ? 0 : 1;
}

int run_verify(const JobSpec& spec) {
    par::Mode mode = spec.exec == "serial" ? par::Mode::serial : par::Mode::openmp;
    std::vector<long> seeds = spec.seeds.empty() ? std::vector<long>{1, 2, 3} : spec.seeds;
    bool incomplete = false;
    std::vector<CaseResult> cases;
    if (spec.suite == "q-series") {
        QSeriesConfig cfg;
        cfg.max_m = spec.max_m;
        cfg.seeds = seeds;
        cases = run_q_series_suite(cfg);
    } else if (spec.suite == "dimension-paths") {
        DimensionPathsConfig cfg;
        cfg.max_weight = spec.max_weight;
        cfg.padic_max_weight = spec.max_weight;
        cfg.quantum_max_weight = spec.max_weight;
        cfg.max_n = spec.n;
        cfg.quantum_max_n = std::min(spec.n, cfg.quantum_max_n);
        if (spec.d_given) {
            cfg.padic_max_d = spec.d;
            cfg.quantum_max_d = std::min(spec.d, cfg.quantum_max_d);
            cfg.q_weyl_max_d = std::min(spec.d, cfg.q_weyl_max_d);
        }
        cfg.seeds = seeds;
        cfg.mode = mode;
        cases = run_dimension_paths_suite(cfg);
    } else {
        FamilyRanges cfg;
        cfg.seeds = seeds;
        cfg.mode = mode;
        if (!spec.family.empty() && spec.family != "all") cfg.families = {parse_family(spec.family)};
        cfg.n_weights.clear();
        for (int n = 1; n <= spec.n; ++n) {
            int w = spec.max_weight;
            while (w > 0 && static_cast<long>(w) * n > max_cells()) {
                --w;
                incomplete = true;
            }
            if (w > 0) cfg.n_weights.emplace_back(n, w);
        }
        if (spec.suite == "eigen")
            cases = run_eigen_suite(cfg);
        else if (spec.suite == "evaluation")
            cases = run_evaluation_suite(cfg);
        else if (spec.suite == "orthogonality")
            cases = run_orthogonality_suite(cfg);
        else
            emit_error("usage", "unknown suite '" + spec.suite + "'");
    }
    return report_cases(spec, cases, incomplete);
}

int run_dims(const JobSpec& spec) {
    Space space = parse_space(spec.space);
    if (static_cast<long>(spec.max_weight) * spec.n > max_cells())
        emit_error("resource limit", "max-weight * n exceeds BCNQKIT_MAX_CELLS");
    ParamPoint params;
    params.q = Rat(1, 2);
    params.t = Rat(1, 2);
    try {
        if (!spec.params_text.empty()) {
            std::stringstream ss(spec.params_text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto eq = item.find('=');
                if (eq != 1) throw std::invalid_argument("--params expects name=p/q assignments");
                params.set(item[0], Rat::parse(item.substr(eq + 1)));
            }
        }
        if (space == Space::generalized && (params.a.is_zero() || params.b.is_zero()))
            throw std::invalid_argument("generalized table needs --params a=p/q,b=p/q,q=p/q,t=p/q");
        par::Mode mode = spec.exec == "serial" ? par::Mode::serial : par::Mode::openmp;
        std::vector<DimRecord> records = dim_table(space, spec.n, spec.d, params, spec.max_weight, mode);
        bool all = true;
        for (const DimRecord& r : records) all = all && r.crosscheck_ok;
        if (spec.format == "csv") {
            write_output(spec, dim_records_to_csv(records));
        } else if (spec.format == "table") {
            write_output(spec, dim_records_to_table(records));
        } else {
            json arr = json::array();
            for (const DimRecord& r : records) arr.push_back(to_json(r));
            write_output(spec, arr.dump(2) + "\n");
        }
        return all ? 0 : 1;
    } catch (const DegenerateError& e) {
        emit_error("degenerate specialization", e.what());
    } catch (const std::invalid_argument& e) {
        emit_error("usage", e.what());
    }
    return 1;
}

int run_identities(const JobSpec& spec) {
    if (spec.k < 1) emit_error("usage", "k >= 1 required");
    IdentitiesConfig cfg;
    cfg.max_n = spec.n;
    cfg.max_d = spec.d;
    cfg.max_k = spec.k;
    if (!spec.params_text.empty()) {
        cfg.t_values.clear();
        std::stringstream ss(spec.params_text);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.t_values.push_back(Rat::parse(item));
    }
    return report_cases(spec, run_identities_suite(cfg), false);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Macdonald-Koornwinder / q-Jacobi polynomial and Grassmannian dimension toolkit"};
    app.require_subcommand(1);
    JobSpec spec;
    bool dump_spec = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", spec.n, "number of variables / rows");
        cmd->add_option("--seed", spec.seeds, "parameter seeds (repeat or comma-separate)")->delimiter(',');
        cmd->add_option("--params", spec.params_text, "explicit parameters name=p/q,... (overrides --seed)");
        cmd->add_option("--format", spec.format, "output format: json|csv|table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--out", spec.out_path, "write output to file instead of stdout");
        cmd->add_option("--exec", spec.exec, "execution mode: openmp|serial")
            ->check(CLI::IsMember({"openmp", "serial"}));
        cmd->add_flag("--dump-spec", dump_spec, "print the parsed job spec and exit");
    };

    CLI::App* poly = app.add_subcommand("poly", "construct a polynomial and check its closed-form evaluations");
    poly->add_option("--family", spec.family, "mk|little|big")->required();
    poly->add_option("--lambda", spec.lambda_parts, "partition parts, most significant first")
        ->delimiter(',')
        ->required();
    add_common(poly);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", spec.suite, "eigen|evaluation|orthogonality|dimension-paths|q-series")
        ->required();
    verify->add_option("--family", spec.family, "restrict to one family (default all)");
    verify->add_option("--max-weight", spec.max_weight, "largest |lambda|");
    verify->add_option("--max", spec.max_m, "largest series order m (q-series suite)");
    CLI::Option* verify_d = verify->add_option("--d", spec.d, "largest ambient dimension (dimension-paths)");
    add_common(verify);

    CLI::App* dims = app.add_subcommand("dims", "emit a dimension table");
    dims->add_option("--space", spec.space, "generalized|padic|complex|real|quantum|weyl|q_weyl")->required();
    dims->add_option("--d", spec.d, "ambient dimension d (n <= d/2)");
    dims->add_option("--max-weight", spec.max_weight, "largest |lambda|");
    dims->add_option("--t", [&spec](const std::vector<std::string>& vals) {
        spec.params_text += (spec.params_text.empty() ? "" : ",") + std::string("t=") + vals.back();
        return true;
    }, "residue parameter t = p/q");
    dims->add_option("--q", [&spec](const std::vector<std::string>& vals) {
        spec.params_text += (spec.params_text.empty() ? "" : ",") + std::string("q=") + vals.back();
        return true;
    }, "deformation parameter q = p/q");
    add_common(dims);

    CLI::App* identities = app.add_subcommand("identities", "run the summation and q-factorial identities");
    identities->add_option("--d", spec.d, "largest ambient dimension");
    identities->add_option("--k", spec.k, "largest box width k (k >= 1)");
    add_common(identities);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        spec.d_given = verify_d->count() > 0;
        if (poly->parsed()) spec.command = "poly";
        if (verify->parsed()) spec.command = "verify";
        if (dims->parsed()) spec.command = "dims";
        if (identities->parsed()) spec.command = "identities";
        if (dump_spec) {
            std::cout << spec.to_json_spec().dump(2) << "\n";
            return 0;
        }
        if (poly->parsed()) return run_poly(spec);
        if (verify->parsed()) return run_verify(spec);
        if (dims->parsed()) return run_dims(spec);
        if (identities->parsed()) return run_identities(spec);
    } catch (const DegenerateError& e) {
        emit_error("degenerate specialization", e.what());
    } catch (const std::invalid_argument& e) {
        emit_error("usage", e.what());
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
    }
    return 2;
}
