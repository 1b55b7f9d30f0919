#pragma once

#include <arithid/evaluators.hpp>

#include <functional>
#include <string>
#include <vector>

namespace arithid {

struct BenchRecord {
    std::string target;
    Int n = 0;
    int reps = 0;
    double min_ns = 0.0;     ///< per evaluation
    double median_ns = 0.0;  ///< per evaluation
    Int checksum = 0;
};

/// Identity ids I1..I26 plus the reference-function baselines.
std::vector<std::string> bench_targets();

/// A prepared evaluation: precomputation (factorization, mu tables) happens
/// when the runner is built, the returned closure is what gets timed. The
/// closure returns the checksum of its result.
std::function<Int()> make_bench_runner(const std::string& target, Int n);

Int checksum_of(const EvalValue& v);
Int checksum_of(const Sides& s);

/// Times every (target, n). n_grid must be strictly ascending and reps >= 3.
/// Throws UnknownTarget before timing anything if a target is not known.
std::vector<BenchRecord> bench(const std::vector<std::string>& targets,
                               const std::vector<Int>& n_grid, int reps);

/// Least-squares slope of log(median_ns) against log(n).
double loglog_slope(const std::vector<BenchRecord>& records);

/// CSV with header target,n,reps,min_ns,median_ns,checksum.
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace arithid
