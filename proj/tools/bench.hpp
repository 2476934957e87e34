#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "densewin/miner.hpp"
#include "densewin/synthgen.hpp"

namespace densewin::tools {

/// Measurements for one mining run.
struct BenchRecord {
    // Configuration echo. For file inputs t/i/b are the dataset's transaction
    // count, item count and mean transaction length, and seed is empty.
    std::size_t t = 0;
    std::size_t i = 0;
    double b = 0.0;
    std::optional<std::uint64_t> seed;
    std::string input;
    MiningParams params;
    std::size_t threads = 1;
    std::size_t rep = 0;

    double load_ms = 0.0;
    std::vector<LevelTiming> levels;
    double mine_ms = 0.0;
    double total_ms = 0.0;

    double peak_mib = 0.0;
    std::string mem_source;
    MineCounters counters;
    std::vector<std::size_t> patterns_by_length;  // index = length

    std::size_t patterns_total() const;
    std::size_t patterns_len_ge2() const;
};

/// Times one `mine` call and fills everything except the config echo.
BenchRecord measure_mine(const TransactionDB& db, const MiningParams& params, std::size_t threads,
                         MiningResult* result_out = nullptr);

std::string bench_record_json(const BenchRecord& r);

struct GridAxis {
    std::vector<std::size_t> t;
    std::vector<std::size_t> i;
    std::vector<double> b;
};

/// Parses "t=1e5,2e5:i=10000:b=5". Missing axes take the generator defaults.
GridAxis parse_grid(const std::string& text);

struct BenchConfig {
    std::optional<GridAxis> grid;
    std::vector<std::string> inputs;
    synth::GenParams base;  // embedding parameters and seed for grid runs
    std::vector<Mode> modes{Mode::full};
    std::size_t repeat = 3;
    bool warmup = true;
    Timestamp window = 1000;
    std::int64_t sigma = 9;
    std::optional<std::size_t> k_max;
    std::size_t threads = 1;
};

/// One record per (config, mode, repetition), in that nesting order. A
/// warm-up run per (config, mode) is executed and discarded when enabled.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline constexpr const char* bench_csv_header =
    "t,i,b,seed,mode,rep,wall_ms,peak_mib,window_evals,patterns_total,patterns_len_ge2,mem_source";

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out);

/// Aggregated series per (t, i, b, mode): mean and median wall time and peak
/// memory over repetitions.
void write_plot_data(const std::vector<BenchRecord>& records, std::ostream& out);

double median(std::vector<double> values);

}  // namespace densewin::tools
