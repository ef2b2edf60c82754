#include "negcurv/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "negcurv/functions.hpp"
#include "negcurv/matrix_io.hpp"
#include "negcurv/random.hpp"

namespace negcurv {

std::string_view to_string(Transform t) {
    switch (t) {
        case Transform::None: return "none";
        case Transform::Permute: return "permute";
        case Transform::Orthogonal: return "orthogonal";
    }
    return "?";
}

Transform parse_transform(std::string_view name) {
    for (auto t : {Transform::None, Transform::Permute, Transform::Orthogonal}) {
        if (name == to_string(t)) return t;
    }
    throw InvalidInput("unknown transform '" + std::string(name) + "'");
}

std::vector<MatrixCase> load_suite(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw InvalidInput("suite directory '" + dir.string() + "' not found");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension().string();
        if (ext == ".mtx" || ext == ".mm" || ext == ".txt" || ext == ".dat") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<MatrixCase> cases;
    std::set<std::string> ids;
    for (const auto& f : files) {
        MatrixCase c;
        c.id = f.stem().string();
        if (!ids.insert(c.id).second) throw InvalidInput("duplicate case id '" + c.id + "' in suite");
        c.source = f.string();
        c.matrix = load_matrix(f, MatrixFormat::Auto);
        cases.push_back(std::move(c));
    }
    return cases;
}

namespace {

std::pair<std::size_t, std::size_t> parse_range(std::string_view key, std::string_view text) {
    auto parse_one = [&](std::string_view s) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw InvalidInput(fmt::format("bad value '{}' for '{}'", s, key));
        }
        return v;
    };
    const auto dash = text.find('-');
    if (dash == std::string_view::npos) {
        const auto v = parse_one(text);
        return {v, v};
    }
    const auto lo = parse_one(text.substr(0, dash));
    const auto hi = parse_one(text.substr(dash + 1));
    if (lo > hi) throw InvalidInput(fmt::format("empty range '{}' for '{}'", text, key));
    return {lo, hi};
}

std::string step_label(double h) { return fmt::format("{:g}", h); }

}  // namespace

SyntheticSuiteSpec SyntheticSuiteSpec::parse(std::string_view text) {
    SyntheticSuiteSpec spec;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw InvalidInput("expected key=value, got '" + std::string(item) + "'");
        const auto key = item.substr(0, eq);
        const auto [lo, hi] = parse_range(key, item.substr(eq + 1));
        if (key == "count") {
            spec.count = lo;
        } else if (key == "n") {
            spec.min_n = lo;
            spec.max_n = hi;
        } else if (key == "neg") {
            spec.min_neg = lo;
            spec.max_neg = hi;
        } else {
            throw InvalidInput("unknown generator key '" + std::string(key) + "'");
        }
    }
    if (spec.min_n < 1) throw InvalidInput("generator dimension must be >= 1");
    if (spec.min_neg > spec.min_n) throw InvalidInput("generator asks for more negatives than the dimension");
    return spec;
}

std::vector<MatrixCase> synthetic_suite(const SyntheticSuiteSpec& spec, std::uint64_t seed) {
    std::vector<MatrixCase> cases;
    cases.reserve(spec.count);
    for (std::size_t k = 0; k < spec.count; ++k) {
        MatrixCase c;
        c.id = fmt::format("syn-{:03}", k);
        c.source = fmt::format("synthetic(seed={})", seed);
        Rng rng = case_rng(seed, c.id);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(spec.min_n, spec.max_n)(rng);
        const std::size_t hi_neg = std::min(spec.max_neg, n);
        const std::size_t lo_neg = std::min(spec.min_neg, hi_neg);
        const std::size_t neg = std::uniform_int_distribution<std::size_t>(lo_neg, hi_neg)(rng);
        c.matrix = generate_synthetic({n, neg}, rng);
        cases.push_back(std::move(c));
    }
    return cases;
}

std::pair<std::vector<MatrixCase>, std::vector<MatrixCase>> filter_negative_diagonal(
    std::vector<MatrixCase> cases) {
    std::vector<MatrixCase> kept, discarded;
    for (auto& c : cases) {
        const auto d = c.matrix.diag();
        const bool negative = std::any_of(d.begin(), d.end(), [](double v) { return v < 0.0; });
        (negative ? discarded : kept).push_back(std::move(c));
    }
    return {std::move(kept), std::move(discarded)};
}

std::vector<MatrixCase> apply_transform(const std::vector<MatrixCase>& cases, Transform t,
                                        std::uint64_t seed) {
    std::vector<MatrixCase> out;
    out.reserve(cases.size());
    for (const auto& c : cases) {
        MatrixCase d = c;
        if (t != Transform::None) {
            d.id = fmt::format("{}@{}", c.id, to_string(t));
            const std::uint64_t s = case_rng(seed, d.id)();
            d.matrix = t == Transform::Permute ? random_permutation_transform(c.matrix, s)
                                               : random_orthogonal_transform(c.matrix, s);
        }
        d.transform = t;
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<MatrixCase> with_fd_steps(const std::vector<MatrixCase>& cases,
                                      const std::vector<double>& steps) {
    std::vector<MatrixCase> out;
    out.reserve(cases.size() * steps.size());
    for (const auto& c : cases) {
        for (double h : steps) {
            if (!(h > 0.0)) throw InvalidInput("finite-difference steps must be positive");
            MatrixCase d = c;
            d.id = fmt::format("{}@h={}", c.id, step_label(h));
            d.h = h;
            out.push_back(std::move(d));
        }
    }
    return out;
}

SeekerResult run_variant(const MatrixCase& c, const VariantSpec& v, const SeekerConfig& config) {
    auto run = [&](HessianOracle& oracle) {
        std::vector<double> diag(oracle.dim());
        for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = oracle.diagonal(i);
        return seek(oracle, variant_order(diag, v), config);
    };
    if (c.h) {
        const QuadraticFunction f(c.matrix);
        FDOracle oracle(f, std::vector<double>(c.matrix.dim(), 0.0), *c.h);
        return run(oracle);
    }
    ExactOracle oracle(c.matrix);
    return run(oracle);
}

std::vector<BenchRecord> run_grid(const std::vector<MatrixCase>& cases,
                                  const std::vector<VariantSpec>& variants,
                                  const GridConfig& config) {
    const std::size_t total = cases.size() * variants.size();
    std::vector<BenchRecord> records(total);

    auto work = [&](std::size_t k) {
        const MatrixCase& c = cases[k / variants.size()];
        const VariantSpec& v = variants[k % variants.size()];
        BenchRecord& r = records[k];
        r.case_id = c.id;
        r.variant = v;
        r.n = c.matrix.dim();
        r.transform = c.transform;
        r.h = c.h;
        try {
            const SeekerResult res = run_variant(c, v, config.seeker);
            r.status = res.status;
            r.iterations = res.iterations;
            r.lambda = res.lambda;
            r.oracle_cost = res.oracle_cost;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
    };

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
    if (threads <= 1) {
        for (std::size_t k = 0; k < total; ++k) work(k);
        return records;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < total; k = next++) work(k);
            });
        }
    }
    return records;
}

double WinnerTable::percent_of(const VariantSpec& v) const {
    for (std::size_t k = 0; k < variants.size(); ++k) {
        if (variants[k] == v) return percent[k];
    }
    throw InvalidInput("variant " + v.name() + " not in winner table");
}

WinnerTable winner_table(const std::vector<BenchRecord>& records) {
    if (records.empty()) throw InvalidInput("winner table needs at least one record");
    std::set<VariantSpec> variant_set;
    std::map<std::string, std::map<VariantSpec, const BenchRecord*>> by_case;
    std::vector<std::string> case_order;
    for (const auto& r : records) {
        variant_set.insert(r.variant);
        auto [it, fresh] = by_case.try_emplace(r.case_id);
        if (fresh) case_order.push_back(r.case_id);
        if (!it->second.emplace(r.variant, &r).second) {
            throw InvalidInput(fmt::format("duplicate record for case '{}' variant {}", r.case_id,
                                           r.variant.name()));
        }
    }

    WinnerTable t;
    for (const auto& v : all_variants()) {
        if (variant_set.contains(v)) t.variants.push_back(v);
    }
    t.wins.assign(t.variants.size(), 0);

    for (const auto& id : case_order) {
        const auto& row = by_case[id];
        if (row.size() != t.variants.size()) {
            throw InvalidInput(fmt::format("incomplete grid: case '{}' has {} of {} variants", id,
                                           row.size(), t.variants.size()));
        }
        if (std::any_of(row.begin(), row.end(), [](const auto& kv) { return !kv.second->ok(); })) {
            ++t.excluded;
            continue;
        }
        std::size_t best = SIZE_MAX;
        for (const auto& [v, r] : row) best = std::min(best, r->iterations);
        for (std::size_t k = 0; k < t.variants.size(); ++k) {
            if (row.at(t.variants[k])->iterations == best) ++t.wins[k];
        }
        ++t.cases;
    }
    t.percent.resize(t.variants.size());
    for (std::size_t k = 0; k < t.variants.size(); ++k) {
        t.percent[k] = t.cases ? 100.0 * static_cast<double>(t.wins[k]) / static_cast<double>(t.cases) : 0.0;
    }
    return t;
}

std::string format_percent(double p) { return fmt::format("{:.1f}", p); }

std::string render_winner_table(const WinnerTable& t) {
    std::string out = fmt::format("{:<8}", "");
    const auto heuristics = {Heuristic::Ordered, Heuristic::S2Lde, Heuristic::L2Sde, Heuristic::Ide};
    for (auto h : heuristics) out += fmt::format("{:>9}", to_string(h));
    out += '\n';
    for (auto b : {Build::Build1, Build::Build2}) {
        out += fmt::format("{:<8}", to_string(b));
        for (auto h : heuristics) {
            const VariantSpec v{h, b};
            const bool present = std::find(t.variants.begin(), t.variants.end(), v) != t.variants.end();
            out += fmt::format("{:>9}", present ? format_percent(t.percent_of(v)) : "-");
        }
        out += '\n';
    }
    out += fmt::format("({} cases", t.cases);
    if (t.excluded) out += fmt::format(", {} excluded after failures", t.excluded);
    out += ")\n";
    return out;
}

std::string_view to_string(OrderedBaseline b) {
    switch (b) {
        case OrderedBaseline::Build1: return "build1";
        case OrderedBaseline::Build2: return "build2";
        case OrderedBaseline::BetterOfBoth: return "better";
    }
    return "?";
}

OrderedBaseline parse_ordered_baseline(std::string_view name) {
    for (auto b : {OrderedBaseline::Build1, OrderedBaseline::Build2, OrderedBaseline::BetterOfBoth}) {
        if (name == to_string(b)) return b;
    }
    throw InvalidInput("unknown baseline '" + std::string(name) + "'");
}

ExhaustiveResult exhaustive_compare(const SymMatrix& a, EnumerationMode mode,
                                    OrderedBaseline baseline, const SeekerConfig& config) {
    const std::size_t n = a.dim();
    auto iterations_for = [&](const SelectionOrder& order) {
        ExactOracle oracle(a);
        return seek(oracle, order, config).iterations;
    };

    ExhaustiveResult out;
    if (n < 2) {
        // A single coordinate: nothing to order.
        out.best_order = SelectionOrder(n, {});
        out.orders_evaluated = 1;
        return out;
    }
    OrderStream stream(n, mode);
    out.best_iterations = SIZE_MAX;
    while (auto order = stream.next()) {
        const std::size_t it = iterations_for(*order);
        ++out.orders_evaluated;
        if (it < out.best_iterations) {
            out.best_iterations = it;
            out.best_order = std::move(*order);
        }
    }

    const Permutation id = Permutation::identity(n);
    const std::size_t b1 = iterations_for(build1_order(id));
    const std::size_t b2 = iterations_for(build2_order(id));
    switch (baseline) {
        case OrderedBaseline::Build1: out.ordered_iterations = b1; break;
        case OrderedBaseline::Build2: out.ordered_iterations = b2; break;
        case OrderedBaseline::BetterOfBoth: out.ordered_iterations = std::min(b1, b2); break;
    }
    out.gap = out.ordered_iterations - out.best_iterations;
    return out;
}

GapHistogram ordered_vs_best(const std::vector<MatrixCase>& cases, EnumerationMode mode,
                             OrderedBaseline baseline, const SeekerConfig& config) {
    GapHistogram h;
    for (const auto& c : cases) {
        h.per_case.push_back(exhaustive_compare(c.matrix, mode, baseline, config));
        ++h.counts[h.per_case.back().gap];
    }
    return h;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "case_id,variant,status,iterations,lambda,oracle_cost,n,transform,h\n";
    for (const auto& r : records) {
        const std::string status = r.ok() ? std::string(to_string(*r.status)) : "error";
        const std::string lambda = r.ok() ? fmt::format("{}", r.lambda) : "";
        const std::string h = r.h ? step_label(*r.h) : "";
        out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.case_id, r.variant.name(), status,
                           r.iterations, lambda, r.oracle_cost, r.n, to_string(r.transform), h);
    }
}

nlohmann::json bench_summary(const std::vector<BenchRecord>& records) {
    using nlohmann::json;
    auto table_json = [](const WinnerTable& t) {
        json j;
        j["cases"] = t.cases;
        j["excluded"] = t.excluded;
        json pct = json::object();
        json wins = json::object();
        for (std::size_t k = 0; k < t.variants.size(); ++k) {
            pct[t.variants[k].name()] = std::stod(format_percent(t.percent[k]));
            wins[t.variants[k].name()] = t.wins[k];
        }
        j["percent"] = pct;
        j["wins"] = wins;
        return j;
    };

    // Group key: transform and step (exact cases use "exact").
    std::map<std::pair<std::string, std::string>, std::vector<BenchRecord>> groups;
    std::size_t failures = 0;
    for (const auto& r : records) {
        if (!r.ok()) ++failures;
        const std::string step = r.h ? step_label(*r.h) : "exact";
        groups[{std::string(to_string(r.transform)), step}].push_back(r);
    }

    json summary;
    summary["records"] = records.size();
    summary["failures"] = failures;
    json out_groups = json::array();
    for (const auto& [key, recs] : groups) {
        json g;
        g["transform"] = key.first;
        g["h"] = key.second;
        g["all"] = table_json(winner_table(recs));
        std::vector<BenchRecord> big;
        std::copy_if(recs.begin(), recs.end(), std::back_inserter(big),
                     [](const BenchRecord& r) { return r.n >= 4; });
        g["dim_ge_4"] = big.empty() ? json(nullptr) : table_json(winner_table(big));
        out_groups.push_back(std::move(g));
    }
    summary["groups"] = std::move(out_groups);
    return summary;
}

}  // namespace negcurv
