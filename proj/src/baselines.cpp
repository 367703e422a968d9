#include "vsglb/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "vsglb/random.hpp"

namespace vsglb {

namespace {

std::string format_count(double required) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", required);
    return buf;
}

}  // namespace

OracleBudgetError::OracleBudgetError(double required, std::uint64_t budget)
    : std::runtime_error("exhaustive search needs m^n = " + format_count(required) +
                         " assignments, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

VsAssignment list_schedule(const VsInstance& inst, std::span<const std::size_t> order) {
    validate_order(inst.n(), order);
    std::vector<double> scalar_load(inst.m(), 0.0);
    VsAssignment out;
    out.target.assign(inst.n(), 0);
    for (std::size_t i : order) {
        std::size_t choice = 0;
        for (std::size_t j = 1; j < inst.m(); ++j)
            if (scalar_load[j] < scalar_load[choice]) choice = j;
        auto row = inst.cost_row(i, choice);
        double scalar = 0.0;
        for (double x : row) scalar += x;
        scalar_load[choice] += scalar;
        out.target[i] = choice;
    }
    return out;
}

OracleResult brute_force_opt(const VsInstance& inst, std::uint64_t budget) {
    const std::size_t n = inst.n();
    const std::size_t m = inst.m();
    const std::size_t d = inst.d();

    const double required = std::pow(static_cast<double>(m), static_cast<double>(n));
    if (required > static_cast<double>(budget)) throw OracleBudgetError(required, budget);

    std::vector<std::size_t> asg(n, 0);
    std::vector<double> loads(m * d, 0.0);
    auto evaluate = [&]() {
        std::fill(loads.begin(), loads.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            auto row = inst.cost_row(i, asg[i]);
            double* into = &loads[asg[i] * d];
            for (std::size_t k = 0; k < d; ++k) into[k] += row[k];
        }
        return *std::max_element(loads.begin(), loads.end());
    };

    OracleResult result;
    result.optimum = std::numeric_limits<double>::infinity();
    bool done = false;
    while (!done) {
        const double value = evaluate();
        ++result.explored;
        if (value < result.optimum) {
            result.optimum = value;
            result.witness.target = asg;
        }
        // mixed-radix increment, least-significant digit last: lexicographic order
        std::size_t pos = n;
        for (;;) {
            if (pos == 0) {
                done = true;
                break;
            }
            --pos;
            if (++asg[pos] < m) break;
            asg[pos] = 0;
        }
    }
    return result;
}

}  // namespace vsglb
