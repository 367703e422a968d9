#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vsglb/vs.hpp"

namespace vsglb {

inline constexpr const char* kAlgoGreedyReal = "alg1-real";
inline constexpr const char* kAlgoGreedyFast = "alg2";
inline constexpr const char* kAlgoList = "list";

// Statistical checks are asserted only for runs at this seed and trial count;
// other seeds report without asserting.
inline constexpr std::uint64_t kDefaultBenchSeed = 42;
inline constexpr std::size_t kDefaultBenchTrials = 100;

// Instance generator spec: every element i.i.d. uniform on [0,1). Trial t
// draws its n*d entries row-major from SplitMix64 seeded with the t-th output
// of SplitMix64(seed), so streams are reproducible bit-for-bit.
struct GenSpec {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t d = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
};

std::vector<VsInstance> generate(const GenSpec& spec);

struct TrialRecord {
    std::string scenario;
    std::size_t trial = 0;
    std::size_t d = 0;
    std::string algo;
    double makespan = 0.0;
    std::optional<double> opt;
    std::optional<double> ratio;
};

struct MeanRecord {
    std::size_t d = 0;
    std::string algo;
    double mean_makespan = 0.0;
    std::size_t trials = 0;
};

struct BoxStats {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

// Quartiles by linear interpolation between order statistics.
BoxStats box_stats(std::vector<double> values);

// Scenario "ratio": m=3, n=10, d=20; per trial, the greedy schedulers and list
// scheduling against the brute-force optimum.
std::vector<TrialRecord> scenario_ratio(std::uint64_t seed,
                                        std::size_t trials = kDefaultBenchTrials);

// Scenario "makespan": m=10, n=100, d in {10,15,...,40}; mean makespan per
// (d, algorithm). m^n is out of enumeration reach, so no optima or ratios.
std::vector<MeanRecord> scenario_makespan(std::uint64_t seed,
                                          std::size_t trials = kDefaultBenchTrials);

// CSV emission; headers "trial,algo,makespan,opt,ratio" and
// "d,algo,mean_makespan,trials".
std::string ratio_csv(const std::vector<TrialRecord>& records);
std::string makespan_csv(const std::vector<MeanRecord>& means);

// Hard per-trial guarantees: each ratio within its algorithm's worst-case
// bound and >= 1. Returns violation messages; empty means pass.
std::vector<std::string> check_ratio_records(const std::vector<TrialRecord>& records);

// Fixed-seed statistical expectations (mean orderings, closeness, monotone
// growth with d).
std::vector<std::string> check_ratio_stats(const std::vector<TrialRecord>& records);
std::vector<std::string> check_makespan_stats(const std::vector<MeanRecord>& means);

}  // namespace vsglb
