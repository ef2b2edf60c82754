#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "negcurv/bench.hpp"
#include "negcurv/functions.hpp"
#include "negcurv/matrix_io.hpp"
#include "negcurv/random.hpp"
#include "negcurv/seeker.hpp"

namespace negcurv::cli {
namespace {

std::vector<double> parse_csv_doubles(const std::string& text, std::string_view what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw InvalidInput(fmt::format("bad {} value '{}'", what, item));
        out.push_back(v);
    }
    return out;
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string indices_text(const SeekerResult& r) {
    if (!r.certificate) return "none";
    std::string s = "[";
    for (std::size_t k = 0; k < r.certificate->indices.size(); ++k) {
        s += fmt::format("{}{}", k ? "," : "", r.certificate->indices[k] + 1);
    }
    return s + "]";
}

int seek_exit(const SeekerResult& r) { return r.negative() ? kNegativeFound : kNoNegative; }

struct DetectOptions {
    std::string matrix;
    std::string format = "auto";
    std::string heuristic = "ordered";
    std::string build = "build2";
    double epsilon = 0.0;
    bool json = false;
};

int cmd_detect(const DetectOptions& o, std::ostream& out) {
    const SymMatrix a = load_matrix(o.matrix, parse_matrix_format(o.format));
    const VariantSpec v{parse_heuristic(o.heuristic), parse_build(o.build)};
    ExactOracle oracle(a);
    std::vector<double> diag(a.dim());
    for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = oracle.diagonal(i);
    SeekerConfig config;
    config.epsilon = o.epsilon;
    const SeekerResult r = seek(oracle, variant_order(diag, v), config);
    if (o.json) {
        out << to_json(r, v.name()).dump(2) << '\n';
    } else {
        out << fmt::format("lambda={}, iterations={}, status={}, certificate={}, oracle_cost={}\n",
                           r.lambda, r.iterations, to_string(r.status), indices_text(r),
                           r.oracle_cost);
    }
    return seek_exit(r);
}

struct DetectFdOptions {
    std::string function;
    std::string point;
    double h = 1e-4;
    std::string heuristic = "ordered";
    std::string build = "build2";
    double epsilon = 0.0;
    std::optional<double> lipschitz;
    bool json = false;
};

int cmd_detect_fd(const DetectFdOptions& o, std::ostream& out) {
    std::vector<double> x = parse_csv_doubles(o.point, "point");
    const bool quadratic = o.function.starts_with("quadratic:");
    if (!quadratic && x.empty()) throw InvalidInput("--point is required for " + o.function);
    const auto f = make_function(o.function, x.size());
    if (x.empty()) x.assign(f->dim(), 0.0);
    if (x.size() != f->dim()) {
        throw InvalidInput(fmt::format("point has dimension {} but {} has dimension {}", x.size(),
                                       o.function, f->dim()));
    }
    const VariantSpec v{parse_heuristic(o.heuristic), parse_build(o.build)};
    FDOracle oracle(*f, x, o.h);
    std::vector<double> diag(x.size());
    for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = oracle.diagonal(i);
    SeekerConfig config;
    config.epsilon = o.epsilon;
    const SeekerResult r = seek(oracle, variant_order(diag, v), config);

    std::optional<double> bound;
    if (o.lipschitz) bound = certified_upper_bound(r, x.size(), *o.lipschitz, o.h);
    if (o.json) {
        auto j = to_json(r, v.name());
        j["function"] = o.function;
        j["h"] = o.h;
        j["point"] = x;
        if (bound) j["certified_upper_bound"] = *bound;
        out << j.dump(2) << '\n';
    } else {
        out << fmt::format("lambda={}, iterations={}, status={}, certificate={}, oracle_cost={}",
                           r.lambda, r.iterations, to_string(r.status), indices_text(r),
                           r.oracle_cost);
        if (bound) out << fmt::format(", certified_upper_bound={}", *bound);
        out << '\n';
    }
    return seek_exit(r);
}

struct BenchOptions {
    std::string suite;
    std::string generate;
    std::uint64_t seed = 0;
    std::string transform = "none";
    std::string h;
    std::string out;
    unsigned threads = 0;
    double epsilon = 0.0;
};

int cmd_bench(const BenchOptions& o, std::ostream& out) {
    if (o.suite.empty() == o.generate.empty()) {
        throw InvalidInput("bench needs exactly one of --suite or --generate");
    }
    std::vector<MatrixCase> base = o.suite.empty()
                                       ? synthetic_suite(SyntheticSuiteSpec::parse(o.generate), o.seed)
                                       : load_suite(o.suite);
    if (base.empty()) throw InvalidInput("benchmark suite is empty");

    std::vector<Transform> transforms;
    for (const auto& t : split(o.transform)) transforms.push_back(parse_transform(t));
    if (transforms.empty()) transforms.push_back(Transform::None);
    const std::vector<double> steps = parse_csv_doubles(o.h, "h");

    GridConfig grid;
    grid.threads = o.threads;
    grid.seeker.epsilon = o.epsilon;

    nlohmann::json discarded = nlohmann::json::object();
    std::vector<BenchRecord> records;
    for (Transform t : transforms) {
        auto [kept, dropped] = filter_negative_diagonal(apply_transform(base, t, o.seed));
        discarded[std::string(to_string(t))] = dropped.size();
        std::vector<MatrixCase> cases = kept;
        if (!steps.empty()) {
            auto fd = with_fd_steps(kept, steps);
            cases.insert(cases.end(), std::make_move_iterator(fd.begin()),
                         std::make_move_iterator(fd.end()));
        }
        auto recs = run_grid(cases, all_variants(), grid);
        records.insert(records.end(), std::make_move_iterator(recs.begin()),
                       std::make_move_iterator(recs.end()));
    }
    if (records.empty()) throw InvalidInput("no cases left after discarding negative diagonals");

    const std::filesystem::path dir(o.out);
    std::filesystem::create_directories(dir);
    {
        std::ofstream csv(dir / "records.csv");
        if (!csv) throw InvalidInput("cannot write " + (dir / "records.csv").string());
        write_csv(csv, records);
    }
    nlohmann::json summary = bench_summary(records);
    summary["base_cases"] = base.size();
    summary["discarded_negative_diagonal"] = discarded;
    summary["seed"] = o.seed;
    {
        std::ofstream js(dir / "summary.json");
        if (!js) throw InvalidInput("cannot write " + (dir / "summary.json").string());
        js << summary.dump(2) << '\n';
    }

    for (const auto& g : summary["groups"]) {
        out << fmt::format("transform={} h={}\n", g["transform"].get<std::string>(),
                           g["h"].get<std::string>());
        std::vector<BenchRecord> recs;
        for (const auto& r : records) {
            const std::string step = r.h ? fmt::format("{:g}", *r.h) : "exact";
            if (to_string(r.transform) == g["transform"].get<std::string>() && step == g["h"].get<std::string>()) {
                recs.push_back(r);
            }
        }
        out << render_winner_table(winner_table(recs));
    }
    out << fmt::format("wrote {} records to {}\n", records.size(), (dir / "records.csv").string());
    return kNegativeFound;
}

struct ExhaustiveOptions {
    std::string matrix;
    std::string format = "auto";
    std::string mode = "perm-build";
    std::string baseline = "better";
    double epsilon = 0.0;
    bool json = false;
};

int cmd_exhaustive(const ExhaustiveOptions& o, std::ostream& out) {
    const SymMatrix a = load_matrix(o.matrix, parse_matrix_format(o.format));
    SeekerConfig config;
    config.epsilon = o.epsilon;
    const auto mode = parse_enumeration_mode(o.mode);
    const ExhaustiveResult r = exhaustive_compare(a, mode, parse_ordered_baseline(o.baseline), config);

    std::vector<std::array<std::size_t, 2>> best;
    for (const auto& p : r.best_order) best.push_back({p.i + 1, p.j + 1});
    if (o.json) {
        nlohmann::json j{{"mode", to_string(mode)},
                         {"baseline", o.baseline},
                         {"orders_evaluated", r.orders_evaluated},
                         {"best_iterations", r.best_iterations},
                         {"ordered_iterations", r.ordered_iterations},
                         {"gap", r.gap},
                         {"best_order", best}};
        out << j.dump(2) << '\n';
    } else {
        std::string order;
        for (const auto& p : best) order += fmt::format("{}({},{})", order.empty() ? "" : " ", p[0], p[1]);
        out << fmt::format("orders_evaluated={}, best_iterations={}, ordered_iterations={}, gap={}\n",
                           r.orders_evaluated, r.best_iterations, r.ordered_iterations, r.gap);
        out << "best_order=" << order << '\n';
    }
    return kNegativeFound;
}

struct GenOptions {
    std::size_t n = 4;
    std::size_t neg = 1;
    std::uint64_t seed = 0;
    std::size_t max_attempts = 1000;
    std::string out;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
    Rng rng(o.seed);
    const SymMatrix a = generate_synthetic({o.n, o.neg, o.max_attempts}, rng);
    save_matrix_market(o.out, a);
    out << fmt::format("wrote {}x{} matrix with {} negative eigenvalue(s) to {}\n", o.n, o.n, o.neg, o.out);
    return kNegativeFound;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Negative curvature detection by incremental principal submatrices"};
    app.name("negcurv");
    app.require_subcommand(1);

    const std::string heuristics = "ordered|s2lde|l2sde|ide";
    const std::string builds = "build1|build2";

    DetectOptions det;
    auto* detect = app.add_subcommand("detect", "Run the seeker on a matrix file (exact coefficients)");
    detect->add_option("--matrix", det.matrix, "Matrix file")->required();
    detect->add_option("--format", det.format, "matrix-market|dense-text|auto")->capture_default_str();
    detect->add_option("--heuristic", det.heuristic, heuristics)->capture_default_str();
    detect->add_option("--build", det.build, builds)->capture_default_str();
    detect->add_option("--epsilon", det.epsilon, "Stop once lambda < -epsilon")->capture_default_str();
    detect->add_flag("--json", det.json, "Emit the result record as JSON");

    DetectFdOptions fd;
    auto* detect_fd = app.add_subcommand("detect-fd", "Run the seeker on a finite-difference Hessian");
    detect_fd->set_help_flag("--help", "Print this help message and exit");  // --h is the step
    detect_fd->add_option("--function", fd.function,
                          "sum-of-squares|sum-of-cubes|product-coupling|exp-coupling|quadratic:FILE")
        ->required();
    detect_fd->add_option("--point", fd.point, "Comma-separated base point (default 0 for quadratic:FILE)");
    detect_fd->add_option("--h", fd.h, "Finite-difference step")->capture_default_str();
    detect_fd->add_option("--heuristic", fd.heuristic, heuristics)->capture_default_str();
    detect_fd->add_option("--build", fd.build, builds)->capture_default_str();
    detect_fd->add_option("--epsilon", fd.epsilon, "Stop once lambda < -epsilon")->capture_default_str();
    detect_fd->add_option("--lipschitz", fd.lipschitz, "Hessian Lipschitz constant on the h-ball");
    detect_fd->add_flag("--json", fd.json, "Emit the result record as JSON");

    BenchOptions bo;
    auto* bench = app.add_subcommand("bench", "Run the 8-variant grid and write winner tables");
    bench->set_help_flag("--help", "Print this help message and exit");
    auto* suite_opt = bench->add_option("--suite", bo.suite, "Directory of matrix files");
    auto* gen_opt = bench->add_option("--generate", bo.generate, "Synthetic suite, e.g. count=100,n=4-10,neg=1-2");
    suite_opt->excludes(gen_opt);
    bench->add_option("--seed", bo.seed, "Seed for generation and transforms")->capture_default_str();
    bench->add_option("--transform", bo.transform, "Comma list of none|permute|orthogonal")->capture_default_str();
    bench->add_option("--h", bo.h, "Comma list of finite-difference steps");
    bench->add_option("--out", bo.out, "Output directory")->required();
    bench->add_option("--threads", bo.threads, "Worker threads (0 = all cores)")->capture_default_str();
    bench->add_option("--epsilon", bo.epsilon, "Seeker epsilon")->capture_default_str();

    ExhaustiveOptions eo;
    auto* exhaustive = app.add_subcommand("exhaustive", "Compare Ordered against every possible order");
    exhaustive->add_option("--matrix", eo.matrix, "Matrix file")->required();
    exhaustive->add_option("--format", eo.format, "matrix-market|dense-text|auto")->capture_default_str();
    exhaustive->add_option("--mode", eo.mode, "perm-build|all-pairs")->capture_default_str();
    exhaustive->add_option("--baseline", eo.baseline, "Ordered baseline: build1|build2|better")->capture_default_str();
    exhaustive->add_option("--epsilon", eo.epsilon, "Seeker epsilon")->capture_default_str();
    exhaustive->add_flag("--json", eo.json, "Emit JSON");

    GenOptions go;
    auto* gen = app.add_subcommand("gen", "Write a synthetic matrix (Matrix Market)");
    gen->add_option("--n", go.n, "Dimension")->required();
    gen->add_option("--neg", go.neg, "Number of negative eigenvalues")->required();
    gen->add_option("--seed", go.seed, "Seed")->capture_default_str();
    gen->add_option("--max-attempts", go.max_attempts, "Rejection budget")->capture_default_str();
    gen->add_option("--out", go.out, "Output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (detect->parsed()) return cmd_detect(det, out);
        if (detect_fd->parsed()) return cmd_detect_fd(fd, out);
        if (bench->parsed()) return cmd_bench(bo, out);
        if (exhaustive->parsed()) return cmd_exhaustive(eo, out);
        if (gen->parsed()) return cmd_gen(go, out);
    } catch (const std::exception& e) {
        err << "negcurv: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace negcurv::cli
