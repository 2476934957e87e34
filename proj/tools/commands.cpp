#include "commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "bench.hpp"
#include "densewin/evalkit.hpp"
#include "densewin/miner.hpp"
#include "densewin/oracle.hpp"
#include "densewin/result_io.hpp"
#include "densewin/synthgen.hpp"
#include "densewin/transaction_db.hpp"

namespace densewin::tools {

namespace {

using Clock = std::chrono::steady_clock;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Writes through `fn` to `path`, or to `fallback` when path is "-" or empty.
void write_to(const std::string& path, std::ostream& fallback,
              const std::function<void(std::ostream&)>& fn) {
    if (path.empty() || path == "-") {
        fn(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    fn(file);
    file.flush();
    if (!file) throw IoError("write to '" + path + "' failed");
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    return in;
}

// Lets count flags take values such as "1e5" as long as they are whole numbers.
const CLI::Validator scientific_count(
    [](std::string& value) {
        if (value.find_first_of("eE.") == std::string::npos) return std::string();
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(value, &used);
        } catch (const std::exception&) {
            return std::string("not a number: ") + value;
        }
        if (used != value.size() || v < 0 || v != std::floor(v) || v > 9e15) {
            return std::string("not a whole non-negative count: ") + value;
        }
        value = std::to_string(static_cast<std::uint64_t>(v));
        return std::string();
    },
    "COUNT");

// Maps library exceptions onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io_error;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return exit_io_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const oracle::EnumerationLimit& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_flags;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_bad_flags;
    }
}

struct MineFlags {
    std::string input;
    Timestamp window = 0;
    std::int64_t sigma = 0;
    std::optional<std::size_t> k_max;
    std::string mode = "full";
    std::size_t min_len = 1;
    std::string out = "-";
    std::string bench;
    std::size_t threads = 1;
    bool merge = false;
};

int cmd_mine(const MineFlags& f, std::ostream& out, std::ostream& err) {
    auto mode = parse_mode(f.mode);
    if (!mode) {
        err << "invalid argument: unknown mode '" << f.mode << "'\n";
        return exit_bad_flags;
    }
    MiningParams params{f.window, f.sigma, f.k_max, *mode};
    params.validate();
    if (f.threads < 1) throw std::invalid_argument("--threads must be >= 1");

    const auto started = Clock::now();
    auto in = open_input(f.input);
    TransactionDB db = load_db(in, LoadOptions{f.merge});
    const double load_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    if (db.dropped_empty() > 0) {
        err << "note: dropped " << db.dropped_empty() << " empty transaction(s)\n";
    }

    MiningResult result;
    BenchRecord record = measure_mine(db, params, f.threads, &result);
    write_to(f.out, out, [&](std::ostream& o) { write_result_json(result, db.symbols(), o, f.min_len); });

    if (!f.bench.empty()) {
        record.input = f.input;
        record.t = db.size();
        record.i = db.item_count();
        record.load_ms = load_ms;
        record.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        write_to(f.bench, out, [&](std::ostream& o) { o << bench_record_json(record); });
    }
    return exit_ok;
}

struct GenFlags {
    synth::GenParams params;
    std::string out;
    std::string truth;
};

int cmd_gen(const GenFlags& f, std::ostream& out, std::ostream& err) {
    try {
        f.params.validate();
    } catch (const std::invalid_argument& e) {
        err << "infeasible generator parameters: " << e.what() << '\n';
        return exit_bad_flags;
    }
    auto generated = synth::generate(f.params);
    write_to(f.out, out, [&](std::ostream& o) { save_db(generated.db, o); });
    write_to(f.truth, out, [&](std::ostream& o) {
        synth::write_ground_truth(generated.truth, generated.db, f.params, o);
    });
    return exit_ok;
}

struct EvalFlags {
    std::string pred;
    std::string span_db;
    std::string truth;
    std::size_t min_len = eval::default_min_len;
    std::string promo;
    std::string out = "-";
};

int cmd_eval(const EvalFlags& f, std::ostream& out, std::ostream& err) {
    if (f.pred.empty() == f.span_db.empty()) {
        err << "invalid argument: give exactly one of --pred or --span-db\n";
        return exit_bad_flags;
    }
    auto truth_in = open_input(f.truth);
    auto truth = eval::PatternSet::from_entries(read_pattern_file(truth_in).entries, "truth");

    eval::PredictionSet pred;
    std::vector<std::string> span_warnings;
    if (!f.pred.empty()) {
        auto pred_in = open_input(f.pred);
        pred = eval::PatternSet::from_entries(read_pattern_file(pred_in).entries, f.pred);
    } else {
        auto db_in = open_input(f.span_db);
        TransactionDB db = load_db(db_in);
        std::vector<TokenPattern> patterns;
        for (const auto& [p, _] : truth.patterns) patterns.push_back(p);
        auto span = eval::span_reference(db, patterns);
        pred = std::move(span.prediction);
        span_warnings = std::move(span.warnings);
    }

    std::optional<eval::PromoPeriods> promo;
    if (!f.promo.empty()) {
        auto promo_in = open_input(f.promo);
        promo = eval::read_promo_periods(promo_in);
    }

    auto report = eval::evaluate(pred, truth, f.min_len);
    report.f1.warnings.insert(report.f1.warnings.begin(), span_warnings.begin(), span_warnings.end());
    const auto filtered = pred.filtered(f.min_len);
    write_to(f.out, out, [&](std::ostream& o) {
        o << eval::metrics_json(report, &filtered, promo ? &*promo : nullptr);
    });
    return exit_ok;
}

struct OracleFlags {
    oracle::RandomCheckConfig random;
    std::string input;
    Timestamp window = 0;
    std::int64_t sigma = 0;
    std::optional<std::size_t> k_max;
    bool inject_fault = false;
};

int cmd_oracle_check(const OracleFlags& f, std::ostream& out, std::ostream& err) {
    oracle::MinerFn miner = [](const TransactionDB& db, const MiningParams& p) { return mine(db, p); };
    if (f.inject_fault) {
        // Mutation harness: an off-by-one window that the check must catch.
        miner = [](const TransactionDB& db, const MiningParams& p) {
            MiningParams shifted = p;
            shifted.window += 1;
            auto r = mine(db, shifted);
            r.params = p;
            return r;
        };
    }

    oracle::CheckReport report;
    if (!f.input.empty()) {
        MiningParams{f.window, f.sigma, f.k_max}.validate();
        auto in = open_input(f.input);
        TransactionDB db = load_db(in);
        report = oracle::check_database(db, f.window, f.sigma, f.k_max, miner);
        if (report.counterexample) *report.counterexample = oracle::shrink(std::move(*report.counterexample), miner);
    } else {
        if (f.random.trials < 1 || f.random.max_items < 1 || f.random.max_items > oracle::default_item_bound ||
            f.random.max_transactions < 1) {
            err << "invalid argument: need trials >= 1, 1 <= max-items <= "
                << oracle::default_item_bound << ", max-trans >= 1\n";
            return exit_bad_flags;
        }
        report = oracle::check_random(f.random, miner);
    }

    if (report.passed()) {
        out << "oracle-check: PASS (" << report.trials << " instance(s), " << report.comparisons
            << " mode comparison(s))\n";
        return exit_ok;
    }
    out << "oracle-check: FAIL after " << report.trials << " instance(s)\n"
        << oracle::describe(*report.counterexample);
    return exit_check_failed;
}

struct BenchFlags {
    std::string grid;
    std::vector<std::string> inputs;
    std::size_t repeat = 3;
    std::vector<std::string> modes{"full"};
    Timestamp window = 1000;
    std::int64_t sigma = 9;
    std::optional<std::size_t> k_max;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    bool no_warmup = false;
    std::string out = "-";
    std::string plot_data;
};

int cmd_bench(const BenchFlags& f, std::ostream& out, std::ostream& err) {
    BenchConfig config;
    if (f.grid.empty() == f.inputs.empty()) {
        err << "invalid argument: give exactly one of --grid or --inputs\n";
        return exit_bad_flags;
    }
    if (!f.grid.empty()) config.grid = parse_grid(f.grid);
    config.inputs = f.inputs;
    config.modes.clear();
    for (const auto& m : f.modes) {
        if (m == "all") {
            config.modes = {Mode::baseline, Mode::intersect, Mode::full};
            break;
        }
        auto mode = parse_mode(m);
        if (!mode) {
            err << "invalid argument: unknown mode '" << m << "'\n";
            return exit_bad_flags;
        }
        config.modes.push_back(*mode);
    }
    config.repeat = f.repeat;
    config.warmup = !f.no_warmup;
    config.window = f.window;
    config.sigma = f.sigma;
    config.k_max = f.k_max;
    config.threads = f.threads;
    config.base.seed = f.seed;
    MiningParams{f.window, f.sigma, f.k_max}.validate();
    if (f.repeat < 1) throw std::invalid_argument("--repeat must be >= 1");

    auto records = run_bench(config);
    write_to(f.out, out, [&](std::ostream& o) { write_bench_csv(records, o); });
    if (!f.plot_data.empty()) {
        write_to(f.plot_data, out, [&](std::ostream& o) { write_plot_data(records, o); });
    }
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact dense-pattern mining with sliding-window local support", "densewin"};
    app.require_subcommand(1);

    MineFlags mf;
    auto* mine_cmd = app.add_subcommand("mine", "Mine dense patterns and their dense intervals");
    mine_cmd->add_option("--input", mf.input, "Transaction database (text format)")->required();
    mine_cmd->add_option("--window,-W", mf.window, "Window width W")->required();
    mine_cmd->add_option("--minsup,-s", mf.sigma, "Minimum support sigma")->required();
    mine_cmd->add_option("--kmax", mf.k_max, "Maximum pattern length");
    mine_cmd->add_option("--mode", mf.mode, "baseline | intersect | full")->capture_default_str();
    mine_cmd->add_option("--min-len", mf.min_len, "Omit shorter patterns from the output")->capture_default_str();
    mine_cmd->add_option("--out,-o", mf.out, "Result JSON path ('-' for stdout)")->capture_default_str();
    mine_cmd->add_option("--bench", mf.bench, "Write a bench record JSON here");
    mine_cmd->add_option("--threads", mf.threads, "Worker threads within a level")->capture_default_str();
    mine_cmd->add_flag("--merge-duplicates", mf.merge, "Union transactions sharing a timestamp");

    GenFlags gf;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic database with planted dense patterns");
    gen_cmd->add_option("--t", gf.params.transactions, "Number of transactions")->required()->transform(scientific_count);
    gen_cmd->add_option("--i", gf.params.items, "Item universe size")->required()->transform(scientific_count);
    gen_cmd->add_option("--b", gf.params.mean_length, "Mean transaction length")->required();
    gen_cmd->add_option("--seed", gf.params.seed)->capture_default_str();
    gen_cmd->add_option("--n-patterns", gf.params.n_patterns)->capture_default_str();
    gen_cmd->add_option("--pattern-len", gf.params.pattern_len)->capture_default_str();
    gen_cmd->add_option("--interval-len", gf.params.interval_len)->capture_default_str();
    gen_cmd->add_option("--intervals-per-pattern", gf.params.intervals_per_pattern)->capture_default_str();
    gen_cmd->add_option("--occ-per-interval", gf.params.occ_per_interval)->capture_default_str();
    gen_cmd->add_option("--gap-lo", gf.params.gap_lo)->capture_default_str();
    gen_cmd->add_option("--gap-hi", gf.params.gap_hi)->capture_default_str();
    gen_cmd->add_option("--out,-o", gf.out, "Database output path")->required();
    gen_cmd->add_option("--truth", gf.truth, "Ground-truth JSON output path")->required();

    EvalFlags ef;
    auto* eval_cmd = app.add_subcommand("eval", "Score predicted patterns and intervals against a reference");
    eval_cmd->add_option("--pred", ef.pred, "Predicted result JSON");
    eval_cmd->add_option("--span-db", ef.span_db, "Score the first-to-last-occurrence reference on this database");
    eval_cmd->add_option("--truth", ef.truth, "Reference result JSON")->required();
    eval_cmd->add_option("--min-len", ef.min_len)->capture_default_str();
    eval_cmd->add_option("--promo", ef.promo, "Promotional periods JSON");
    eval_cmd->add_option("--out,-o", ef.out)->capture_default_str();

    OracleFlags of;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare the miner with the brute-force oracle");
    oracle_cmd->add_option("--trials", of.random.trials)->capture_default_str();
    oracle_cmd->add_option("--max-items", of.random.max_items)->capture_default_str();
    oracle_cmd->add_option("--max-trans", of.random.max_transactions)->capture_default_str();
    oracle_cmd->add_option("--seed", of.random.seed)->capture_default_str();
    auto* oc_input = oracle_cmd->add_option("--input", of.input, "Check one database instead of random ones");
    auto* oc_window = oracle_cmd->add_option("--window,-W", of.window);
    auto* oc_sigma = oracle_cmd->add_option("--minsup,-s", of.sigma);
    oracle_cmd->add_option("--kmax", of.k_max);
    oracle_cmd->add_flag("--inject-fault", of.inject_fault)->group("");
    oc_input->needs(oc_window)->needs(oc_sigma);

    BenchFlags bf;
    auto* bench_cmd = app.add_subcommand("bench", "Time mining over a generator grid or input files");
    bench_cmd->add_option("--grid", bf.grid, "Generator grid, e.g. t=1e5,2e5:i=10000:b=5");
    bench_cmd->add_option("--inputs", bf.inputs, "Database files");
    bench_cmd->add_option("--repeat", bf.repeat)->capture_default_str();
    bench_cmd->add_option("--modes", bf.modes, "Modes to run, or 'all'")->delimiter(',');
    bench_cmd->add_option("--window,-W", bf.window)->capture_default_str();
    bench_cmd->add_option("--minsup,-s", bf.sigma)->capture_default_str();
    bench_cmd->add_option("--kmax", bf.k_max);
    bench_cmd->add_option("--seed", bf.seed)->capture_default_str();
    bench_cmd->add_option("--threads", bf.threads)->capture_default_str();
    bench_cmd->add_flag("--no-warmup", bf.no_warmup);
    bench_cmd->add_option("--out,-o", bf.out, "CSV output path")->capture_default_str();
    bench_cmd->add_option("--plot-data", bf.plot_data, "Aggregated series CSV");

    std::vector<std::string> argv_storage{"densewin"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_bad_flags;
    }

    if (mine_cmd->parsed()) return guarded(err, [&] { return cmd_mine(mf, out, err); });
    if (gen_cmd->parsed()) return guarded(err, [&] { return cmd_gen(gf, out, err); });
    if (eval_cmd->parsed()) return guarded(err, [&] { return cmd_eval(ef, out, err); });
    if (oracle_cmd->parsed()) return guarded(err, [&] { return cmd_oracle_check(of, out, err); });
    if (bench_cmd->parsed()) return guarded(err, [&] { return cmd_bench(bf, out, err); });
    return exit_bad_flags;
}

}  // namespace densewin::tools
