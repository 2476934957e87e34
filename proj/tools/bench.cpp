#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

#include "densewin/transaction_db.hpp"
#include "memory.hpp"

namespace densewin::tools {

using Clock = std::chrono::steady_clock;

std::size_t BenchRecord::patterns_total() const {
    return std::accumulate(patterns_by_length.begin(), patterns_by_length.end(), std::size_t{0});
}

std::size_t BenchRecord::patterns_len_ge2() const {
    std::size_t n = 0;
    for (std::size_t k = 2; k < patterns_by_length.size(); ++k) n += patterns_by_length[k];
    return n;
}

BenchRecord measure_mine(const TransactionDB& db, const MiningParams& params, std::size_t threads,
                         MiningResult* result_out) {
    BenchRecord r;
    r.params = params;
    r.threads = threads;

    PeakMemory memory;
    memory.reset();
    const auto started = Clock::now();
    MiningResult result = mine(db, params, MineOptions{threads});
    r.mine_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    const auto sample = memory.read();

    r.total_ms = r.mine_ms;
    r.peak_mib = sample.peak_mib;
    r.mem_source = sample.source;
    r.levels = result.levels;
    r.counters = result.counters;
    r.patterns_by_length = result.counts_by_length();
    if (result_out) *result_out = std::move(result);
    return r;
}

std::string bench_record_json(const BenchRecord& r) {
    using json = nlohmann::ordered_json;
    json params = {{"W", r.params.window},
                   {"sigma", r.params.sigma},
                   {"k_max", nullptr},
                   {"mode", std::string(to_string(r.params.mode))},
                   {"threads", r.threads}};
    if (r.params.k_max) params["k_max"] = *r.params.k_max;

    json levels = json::array();
    for (const auto& lv : r.levels) {
        levels.push_back({{"k", lv.k}, {"ms", lv.ms}, {"candidates", lv.candidates}, {"dense", lv.dense}});
    }
    json by_length = json::object();
    for (std::size_t k = 1; k < r.patterns_by_length.size(); ++k) {
        by_length[std::to_string(k)] = r.patterns_by_length[k];
    }
    json doc = {
        {"params", params},
        {"input", r.input},
        {"phases_ms", {{"load", r.load_ms}, {"levels", levels}, {"mine", r.mine_ms}, {"total", r.total_ms}}},
        {"peak_mib", r.peak_mib},
        {"mem_source", r.mem_source},
        {"window_evals", r.counters.window_evals},
        {"counters",
         {{"candidates_generated", r.counters.candidates_generated},
          {"candidates_pruned", r.counters.candidates_pruned},
          {"empty_occurrences", r.counters.empty_occurrences},
          {"empty_regions", r.counters.empty_regions},
          {"scans", r.counters.scans}}},
        {"patterns_by_length", by_length},
        {"patterns_total", r.patterns_total()},
    };
    return doc.dump(2) + "\n";
}

namespace {

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad grid value '" + item + "'");
        }
        if (used != item.size() || v <= 0) throw std::invalid_argument("bad grid value '" + item + "'");
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("empty grid axis");
    return values;
}

std::vector<std::size_t> as_counts(const std::vector<double>& values) {
    std::vector<std::size_t> out;
    for (double v : values) {
        if (v != std::floor(v)) throw std::invalid_argument("grid counts must be integers");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::string format_double(double v) {
    std::ostringstream out;
    out << std::setprecision(10) << v;
    return out.str();
}

}  // namespace

GridAxis parse_grid(const std::string& text) {
    const synth::GenParams defaults;
    GridAxis grid{{defaults.transactions}, {defaults.items}, {defaults.mean_length}};
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ':')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("grid axis needs key=values: '" + part + "'");
        std::string key = part.substr(0, eq);
        std::transform(key.begin(), key.end(), key.begin(), ::tolower);
        auto values = parse_number_list(part.substr(eq + 1));
        if (key == "t") {
            grid.t = as_counts(values);
        } else if (key == "i") {
            grid.i = as_counts(values);
        } else if (key == "b") {
            grid.b = values;
        } else {
            throw std::invalid_argument("unknown grid axis '" + key + "'");
        }
    }
    return grid;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    std::vector<BenchRecord> records;

    auto run_modes = [&](const TransactionDB& db, const BenchRecord& echo) {
        for (Mode mode : config.modes) {
            MiningParams params{config.window, config.sigma, config.k_max, mode};
            if (config.warmup) measure_mine(db, params, config.threads);
            for (std::size_t rep = 0; rep < config.repeat; ++rep) {
                BenchRecord r = measure_mine(db, params, config.threads);
                r.t = echo.t;
                r.i = echo.i;
                r.b = echo.b;
                r.seed = echo.seed;
                r.input = echo.input;
                r.load_ms = echo.load_ms;
                r.total_ms = r.load_ms + r.mine_ms;
                r.rep = rep;
                records.push_back(std::move(r));
            }
        }
    };

    if (config.grid) {
        for (std::size_t t : config.grid->t) {
            for (std::size_t i : config.grid->i) {
                for (double b : config.grid->b) {
                    synth::GenParams gp = config.base;
                    gp.transactions = t;
                    gp.items = i;
                    gp.mean_length = b;
                    auto generated = synth::generate(gp);
                    BenchRecord echo;
                    echo.t = t;
                    echo.i = i;
                    echo.b = b;
                    echo.seed = gp.seed;
                    run_modes(generated.db, echo);
                }
            }
        }
    }

    for (const auto& path : config.inputs) {
        const auto started = Clock::now();
        TransactionDB db = load_db_file(path);
        BenchRecord echo;
        echo.load_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        echo.input = path;
        echo.t = db.size();
        echo.i = db.item_count();
        std::size_t total_items = 0;
        for (const auto& tx : db.transactions()) total_items += tx.items.size();
        echo.b = db.empty() ? 0.0 : static_cast<double>(total_items) / static_cast<double>(db.size());
        run_modes(db, echo);
    }
    return records;
}

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << bench_csv_header << '\n';
    for (const auto& r : records) {
        out << r.t << ',' << r.i << ',' << format_double(r.b) << ',';
        if (r.seed) out << *r.seed;
        out << ',' << to_string(r.params.mode) << ',' << r.rep << ',' << std::fixed
            << std::setprecision(3) << r.total_ms << ',' << r.peak_mib << std::defaultfloat << ','
            << r.counters.window_evals << ',' << r.patterns_total() << ',' << r.patterns_len_ge2()
            << ',' << r.mem_source << '\n';
    }
}

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

void write_plot_data(const std::vector<BenchRecord>& records, std::ostream& out) {
    using Key = std::tuple<std::size_t, std::size_t, double, std::string, std::string>;
    std::map<Key, std::vector<const BenchRecord*>> groups;
    std::vector<Key> order;
    for (const auto& r : records) {
        Key key{r.t, r.i, r.b, std::string(to_string(r.params.mode)), r.input};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.push_back(&r);
    }

    out << "t,i,b,mode,input,reps,mean_wall_ms,median_wall_ms,mean_peak_mib,median_peak_mib,"
           "window_evals,patterns_total\n";
    for (const auto& key : order) {
        const auto& group = groups[key];
        std::vector<double> wall, mem;
        for (const auto* r : group) {
            wall.push_back(r->total_ms);
            mem.push_back(r->peak_mib);
        }
        auto mean = [](const std::vector<double>& v) {
            return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
        };
        const auto& [t, i, b, mode, input] = key;
        out << t << ',' << i << ',' << format_double(b) << ',' << mode << ',' << input << ','
            << group.size() << ',' << std::fixed << std::setprecision(3) << mean(wall) << ','
            << median(wall) << ',' << mean(mem) << ',' << median(mem) << std::defaultfloat << ','
            << group.front()->counters.window_evals << ',' << group.front()->patterns_total()
            << '\n';
    }
}

}  // namespace densewin::tools
