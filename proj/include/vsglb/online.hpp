#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vsglb/glb.hpp"
#include "vsglb/vs.hpp"

namespace vsglb {

struct OpCounters {
    std::uint64_t additions = 0;        // vector-element additions
    std::uint64_t multiplications = 0;  // multiplications inside integer powering
    std::uint64_t pow_evals = 0;        // tau-th power evaluations
};

struct PowResult {
    double value = 0.0;
    unsigned multiplications = 0;
};

// a^t by binary square-and-multiply. Uses exactly
// floor(log2 t) + popcount(t) - 1 multiplications; t must be >= 1.
PowResult fast_pow(double a, unsigned t);

// Norm exponent selection. RealLn resolves to ln(l) for l machines (requires
// l >= 2), IntCeil to max(1, ceil(ln l)), Explicit to a caller-chosen positive
// value.
class Tau {
public:
    enum class Mode { RealLn, IntCeil, Explicit };

    static Tau real_ln() noexcept { return Tau(Mode::RealLn, 0.0); }
    static Tau int_ceil() noexcept { return Tau(Mode::IntCeil, 0.0); }
    static Tau explicit_value(double tau);

    Mode mode() const noexcept { return mode_; }
    double exponent(std::size_t machines) const;

private:
    Tau(Mode mode, double value) : mode_(mode), value_(value) {}
    Mode mode_;
    double value_;
};

// Sum of v[k]^tau: the tau-th power of the L_tau norm. The outer 1/tau root is
// omitted; every comparison made with it is monotone-invariant. Integer tau
// goes through fast_pow, fractional tau through std::pow. Entries must be >= 0.
double lnorm_tau(std::span<const double> v, double tau);
double lnorm_tau(std::span<const double> v, double tau, OpCounters& counters);

// Worst-case approximation ratio of the L_tau greedy policy on l >= 2 machines:
// (tau / ln 2) * l^(1/tau) for Explicit tau, e*log2(l) for RealLn, and the
// rounding-loss bound e*log2(l) + e*log2(e)/(ln l + 1) for IntCeil.
double ratio_bound(std::size_t machines, const Tau& tau);

// Online greedy for generalized load balancing: jobs arrive in `order`; each is
// placed on the machine minimizing the norm of the resulting loads. Machines
// whose resulting norm is infinite are skipped; ties break to the lowest
// machine index. Placements are never revised.
GlbAssignment glb_online(const GlbInstance& inst, const Tau& tau,
                         std::span<const std::size_t> order);
GlbAssignment glb_online(const GlbInstance& inst, const Tau& tau,
                         std::span<const std::size_t> order, OpCounters& counters);

// Online greedy for vector scheduling, direct form: an arriving vector goes to
// the lowest-indexed empty partition if one exists, otherwise to the partition
// minimizing the norm of all resulting partition loads, recomputed in full per
// candidate. Ties break to the lowest partition index.
VsAssignment vs_online_greedy(const VsInstance& inst, const Tau& tau,
                              std::span<const std::size_t> order);
VsAssignment vs_online_greedy(const VsInstance& inst, const Tau& tau,
                              std::span<const std::size_t> order, OpCounters& counters);

// Incremental scheduler state: per-partition load vectors mu_j plus cached
// tau-power norms delta_j, updated in O(m d) per placement. Single-owner;
// distinct states over a shared instance may run concurrently.
class GreedyState {
public:
    static constexpr std::size_t kUnplaced = static_cast<std::size_t>(-1);

    explicit GreedyState(const VsInstance& inst, Tau tau = Tau::int_ceil());

    // Places one arriving vector and returns its partition; placements are final.
    std::size_t place(std::size_t vec);

    std::size_t placed() const noexcept { return placed_; }
    double tau() const noexcept { return tau_; }
    std::span<const double> load(std::size_t j) const;
    double cached_norm(std::size_t j) const;
    // target per vector index; kUnplaced where nothing has been placed yet.
    const std::vector<std::size_t>& assignment() const noexcept { return target_; }
    const OpCounters& counters() const noexcept { return counters_; }

private:
    const VsInstance* inst_;
    double tau_;
    unsigned tau_int_;  // 0 when tau is not a positive integer
    std::size_t empty_partitions_;
    std::vector<double> mu_;     // m*d, partition-major
    std::vector<double> delta_;  // m cached norms
    std::vector<std::size_t> target_;
    std::vector<char> filled_;
    std::vector<double> trial_, best_;
    std::size_t placed_ = 0;
    OpCounters counters_;
};

// Online greedy, sped-up form: identical placements to vs_online_greedy under
// the same tau and order, derived from marginal norm increases over the cached
// partition norms instead of full norm recomputation.
VsAssignment vs_online_greedy_fast(const VsInstance& inst, std::span<const std::size_t> order,
                                   Tau tau = Tau::int_ceil());
VsAssignment vs_online_greedy_fast(const VsInstance& inst, std::span<const std::size_t> order,
                                   OpCounters& counters, Tau tau = Tau::int_ceil());

}  // namespace vsglb
