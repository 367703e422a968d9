#include "vsglb/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "vsglb/baselines.hpp"
#include "vsglb/online.hpp"
#include "vsglb/random.hpp"

namespace vsglb {

std::vector<VsInstance> generate(const GenSpec& spec) {
    if (spec.n == 0 || spec.m == 0 || spec.d == 0)
        throw std::invalid_argument("generator needs n >= 1, m >= 1, d >= 1");
    SplitMix64 root(spec.seed);
    std::vector<VsInstance> out;
    out.reserve(spec.trials);
    for (std::size_t t = 0; t < spec.trials; ++t) {
        SplitMix64 rng = root.split();
        std::vector<double> costs(spec.n * spec.d);
        for (double& c : costs) c = rng.next_uniform01();
        out.emplace_back(spec.n, spec.m, spec.d, std::move(costs), false);
    }
    return out;
}

BoxStats box_stats(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("box_stats needs at least one value");
    std::sort(values.begin(), values.end());
    auto quantile = [&](double p) {
        const double h = p * static_cast<double>(values.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(h);
        const double frac = h - static_cast<double>(lo);
        if (lo + 1 >= values.size()) return values.back();
        return values[lo] + frac * (values[lo + 1] - values[lo]);
    };
    return BoxStats{values.front(), quantile(0.25), quantile(0.5), quantile(0.75), values.back()};
}

namespace {

constexpr std::size_t kRatioN = 10;
constexpr std::size_t kRatioM = 3;
constexpr std::size_t kRatioD = 20;
constexpr std::size_t kMakespanN = 100;
constexpr std::size_t kMakespanM = 10;
constexpr std::size_t kMakespanDims[] = {10, 15, 20, 25, 30, 35, 40};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<TrialRecord> scenario_ratio(std::uint64_t seed, std::size_t trials) {
    GenSpec spec{kRatioN, kRatioM, kRatioD, seed, trials};
    const auto instances = generate(spec);
    const auto order = identity_order(kRatioN);

    std::vector<TrialRecord> records;
    records.reserve(trials * 3);
    for (std::size_t t = 0; t < instances.size(); ++t) {
        const VsInstance& inst = instances[t];
        const double opt = brute_force_opt(inst).optimum;
        auto push = [&](const char* algo, const VsAssignment& asg) {
            const double ms = vs_makespan(inst, asg);
            const double ratio = ms / opt;
            if (ratio < 1.0 - 1e-9)
                throw std::logic_error("assignment beats the exhaustive optimum: ratio " +
                                       fmt17(ratio));
            records.push_back(TrialRecord{"ratio", t, kRatioD, algo, ms, opt, ratio});
        };
        push(kAlgoGreedyReal, vs_online_greedy(inst, Tau::real_ln(), order));
        push(kAlgoGreedyFast, vs_online_greedy_fast(inst, order));
        push(kAlgoList, list_schedule(inst, order));
    }
    return records;
}

std::vector<MeanRecord> scenario_makespan(std::uint64_t seed, std::size_t trials) {
    SplitMix64 root(seed);
    std::vector<MeanRecord> means;
    for (std::size_t d : kMakespanDims) {
        GenSpec spec{kMakespanN, kMakespanM, d, root.next(), trials};
        const auto instances = generate(spec);
        const auto order = identity_order(kMakespanN);
        double sum_real = 0.0, sum_fast = 0.0, sum_list = 0.0;
        for (const VsInstance& inst : instances) {
            sum_real += vs_makespan(inst, vs_online_greedy(inst, Tau::real_ln(), order));
            sum_fast += vs_makespan(inst, vs_online_greedy_fast(inst, order));
            sum_list += vs_makespan(inst, list_schedule(inst, order));
        }
        const double count = static_cast<double>(trials);
        means.push_back(MeanRecord{d, kAlgoGreedyReal, sum_real / count, trials});
        means.push_back(MeanRecord{d, kAlgoGreedyFast, sum_fast / count, trials});
        means.push_back(MeanRecord{d, kAlgoList, sum_list / count, trials});
    }
    return means;
}

std::string ratio_csv(const std::vector<TrialRecord>& records) {
    std::string out = "trial,algo,makespan,opt,ratio\n";
    for (const auto& r : records) {
        out += std::to_string(r.trial);
        out += ',';
        out += r.algo;
        out += ',';
        out += fmt17(r.makespan);
        out += ',';
        out += fmt17(r.opt.value());
        out += ',';
        out += fmt17(r.ratio.value());
        out += '\n';
    }
    return out;
}

std::string makespan_csv(const std::vector<MeanRecord>& means) {
    std::string out = "d,algo,mean_makespan,trials\n";
    for (const auto& r : means) {
        out += std::to_string(r.d);
        out += ',';
        out += r.algo;
        out += ',';
        out += fmt17(r.mean_makespan);
        out += ',';
        out += std::to_string(r.trials);
        out += '\n';
    }
    return out;
}

std::vector<std::string> check_ratio_records(const std::vector<TrialRecord>& records) {
    const std::size_t machines = kRatioM * kRatioD;
    const double bound_real = ratio_bound(machines, Tau::real_ln());
    const double bound_fast = ratio_bound(machines, Tau::int_ceil());
    const double bound_list = static_cast<double>(kRatioD) + 1.0;

    std::vector<std::string> violations;
    for (const auto& r : records) {
        if (!r.ratio) continue;
        const double ratio = *r.ratio;
        double bound = 0.0;
        if (r.algo == kAlgoGreedyReal)
            bound = bound_real;
        else if (r.algo == kAlgoGreedyFast)
            bound = bound_fast;
        else if (r.algo == kAlgoList)
            bound = bound_list;
        else
            continue;
        if (ratio > bound + 1e-9)
            violations.push_back("trial " + std::to_string(r.trial) + ": " + r.algo + " ratio " +
                                 fmt17(ratio) + " exceeds bound " + fmt17(bound));
        if (ratio < 1.0 - 1e-9)
            violations.push_back("trial " + std::to_string(r.trial) + ": " + r.algo + " ratio " +
                                 fmt17(ratio) + " below 1");
    }
    return violations;
}

namespace {

double mean_ratio(const std::vector<TrialRecord>& records, const char* algo) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& r : records)
        if (r.algo == algo && r.ratio) {
            sum += *r.ratio;
            ++count;
        }
    if (count == 0) throw std::invalid_argument(std::string("no records for ") + algo);
    return sum / static_cast<double>(count);
}

}  // namespace

std::vector<std::string> check_ratio_stats(const std::vector<TrialRecord>& records) {
    std::vector<std::string> violations;
    const double real = mean_ratio(records, kAlgoGreedyReal);
    const double fast = mean_ratio(records, kAlgoGreedyFast);
    const double list = mean_ratio(records, kAlgoList);
    // real and rounded tau behave nearly identically; 5% headroom on the pair
    if (real > fast * 1.05)
        violations.push_back("mean ratio of alg1-real " + fmt17(real) +
                             " not within 5% above alg2 " + fmt17(fast));
    if (!(fast < list))
        violations.push_back("mean ratio of alg2 " + fmt17(fast) + " not below list " + fmt17(list));
    return violations;
}

std::vector<std::string> check_makespan_stats(const std::vector<MeanRecord>& means) {
    std::map<std::size_t, std::map<std::string, double>> by_d;
    for (const auto& r : means) by_d[r.d][r.algo] = r.mean_makespan;

    std::vector<std::string> violations;
    double prev_real = 0.0, prev_fast = 0.0, prev_list = 0.0;
    bool first = true;
    for (const auto& [d, algos] : by_d) {
        const double real = algos.at(kAlgoGreedyReal);
        const double fast = algos.at(kAlgoGreedyFast);
        const double list = algos.at(kAlgoList);
        const double gap = std::abs(real - fast) / std::min(real, fast);
        if (gap > 0.05)
            violations.push_back("d=" + std::to_string(d) + ": alg1-real and alg2 means differ by " +
                                 fmt17(gap * 100.0) + "%");
        if (!(real < list) || !(fast < list))
            violations.push_back("d=" + std::to_string(d) +
                                 ": greedy means not strictly below list scheduling");
        if (!first) {
            if (real < prev_real || fast < prev_fast || list < prev_list)
                violations.push_back("d=" + std::to_string(d) +
                                     ": mean makespan decreased with growing dimension");
        }
        prev_real = real;
        prev_fast = fast;
        prev_list = list;
        first = false;
    }
    return violations;
}

}  // namespace vsglb
