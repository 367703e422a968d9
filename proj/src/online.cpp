#include "vsglb/online.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "vsglb/random.hpp"

namespace vsglb {

PowResult fast_pow(double a, unsigned t) {
    if (t == 0) throw std::invalid_argument("fast_pow: exponent must be >= 1");
    const int top = std::bit_width(t) - 1;
    double r = a;
    unsigned mults = 0;
    for (int b = top - 1; b >= 0; --b) {
        r *= r;
        ++mults;
        if ((t >> b) & 1u) {
            r *= a;
            ++mults;
        }
    }
    return PowResult{r, mults};
}

Tau Tau::explicit_value(double tau) {
    if (!std::isfinite(tau) || tau <= 0.0)
        throw std::invalid_argument("tau must be a positive finite value");
    return Tau(Mode::Explicit, tau);
}

double Tau::exponent(std::size_t machines) const {
    switch (mode_) {
        case Mode::RealLn:
            if (machines < 2)
                throw std::invalid_argument("tau = ln(l) needs at least 2 machines");
            return std::log(static_cast<double>(machines));
        case Mode::IntCeil: {
            if (machines == 0) throw std::invalid_argument("machine count must be >= 1");
            const double t = std::ceil(std::log(static_cast<double>(machines)));
            return std::max(1.0, t);
        }
        case Mode::Explicit:
            return value_;
    }
    throw std::logic_error("unreachable");
}

namespace {

// Positive integer exponents go through fast_pow so the multiplication count
// is the instrumented square-and-multiply cost.
unsigned integral_exponent(double tau) {
    if (tau < 1.0 || tau > 4294967295.0) return 0;
    const double fl = std::floor(tau);
    if (fl != tau) return 0;
    return static_cast<unsigned>(fl);
}

inline double pow_term(double base, double tau, unsigned tau_int, OpCounters* c) {
    if (tau_int != 0) {
        PowResult r = fast_pow(base, tau_int);
        if (c) {
            c->multiplications += r.multiplications;
            ++c->pow_evals;
        }
        return r.value;
    }
    if (c) ++c->pow_evals;
    return std::pow(base, tau);
}

[[noreturn]] void overflow_guard_failure(double tau) {
    throw std::overflow_error("load magnitude overflows double at tau = " + std::to_string(tau) +
                              "; rescale the instance");
}

double lnorm_impl(std::span<const double> v, double tau, OpCounters* c) {
    if (!std::isfinite(tau) || tau <= 0.0)
        throw std::invalid_argument("tau must be a positive finite value");
    const unsigned tau_int = integral_exponent(tau);
    double sum = 0.0;
    for (double x : v) sum += pow_term(x, tau, tau_int, c);
    return sum;
}

}  // namespace

double lnorm_tau(std::span<const double> v, double tau) { return lnorm_impl(v, tau, nullptr); }

double lnorm_tau(std::span<const double> v, double tau, OpCounters& counters) {
    return lnorm_impl(v, tau, &counters);
}

double ratio_bound(std::size_t machines, const Tau& tau) {
    if (machines < 2) throw std::invalid_argument("ratio_bound needs at least 2 machines");
    const double l = static_cast<double>(machines);
    const double e = std::numbers::e;
    switch (tau.mode()) {
        case Tau::Mode::RealLn:
            return e * std::log2(l);
        case Tau::Mode::IntCeil:
            return e * std::log2(l) + e * std::log2(e) / (std::log(l) + 1.0);
        case Tau::Mode::Explicit: {
            const double t = tau.exponent(machines);
            return t / std::numbers::ln2 * std::pow(l, 1.0 / t);
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

GlbAssignment glb_online_impl(const GlbInstance& inst, const Tau& tau,
                              std::span<const std::size_t> order, OpCounters* c) {
    validate_order(inst.jobs(), order);
    const std::size_t machines = inst.machines();
    const double t = tau.exponent(machines);
    const unsigned t_int = integral_exponent(t);

    std::vector<double> load(machines, 0.0);
    GlbAssignment out;
    out.target.assign(inst.jobs(), 0);

    for (std::size_t job : order) {
        bool found = false;
        std::size_t best = 0;
        double best_norm = 0.0;
        for (std::size_t s = 0; s < machines; ++s) {
            auto row = inst.cost_row(job, s);
            double acc = 0.0;
            bool infinite = false;
            for (std::size_t k = 0; k < machines; ++k) {
                if (row[k].is_infinite()) {
                    infinite = true;
                    break;
                }
                const double x = load[k] + row[k].value();
                if (c) ++c->additions;
                acc += pow_term(x, t, t_int, c);
            }
            if (infinite) continue;
            if (!std::isfinite(acc)) overflow_guard_failure(t);
            if (!found || acc < best_norm) {
                found = true;
                best = s;
                best_norm = acc;
            }
        }
        if (!found)
            throw std::runtime_error("job " + std::to_string(job) +
                                     " has no machine with a finite resulting load");
        auto row = inst.cost_row(job, best);
        for (std::size_t k = 0; k < machines; ++k) load[k] += row[k].value();
        out.target[job] = best;
    }
    return out;
}

VsAssignment vs_greedy_impl(const VsInstance& inst, const Tau& tau,
                            std::span<const std::size_t> order, OpCounters* c) {
    validate_order(inst.n(), order);
    const std::size_t m = inst.m();
    const std::size_t d = inst.d();
    const double t = tau.exponent(m * d);
    const unsigned t_int = integral_exponent(t);

    std::vector<double> mu(m * d, 0.0);
    std::vector<char> filled(m, 0);
    std::size_t empty_partitions = m;
    VsAssignment out;
    out.target.assign(inst.n(), 0);

    for (std::size_t i : order) {
        std::size_t choice = 0;
        if (empty_partitions > 0) {
            while (filled[choice]) ++choice;
        } else {
            double best = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                auto row = inst.cost_row(i, j);
                double acc = 0.0;
                for (std::size_t j2 = 0; j2 < m; ++j2) {
                    const double* loads = &mu[j2 * d];
                    if (j2 == j) {
                        for (std::size_t k = 0; k < d; ++k) {
                            const double x = loads[k] + row[k];
                            if (c) ++c->additions;
                            acc += pow_term(x, t, t_int, c);
                        }
                    } else {
                        for (std::size_t k = 0; k < d; ++k) acc += pow_term(loads[k], t, t_int, c);
                    }
                }
                if (!std::isfinite(acc)) overflow_guard_failure(t);
                if (j == 0 || acc < best) {
                    best = acc;
                    choice = j;
                }
            }
        }
        auto row = inst.cost_row(i, choice);
        for (std::size_t k = 0; k < d; ++k) mu[choice * d + k] += row[k];
        if (c) c->additions += d;
        if (!filled[choice]) {
            filled[choice] = 1;
            --empty_partitions;
        }
        out.target[i] = choice;
    }
    return out;
}

}  // namespace

GlbAssignment glb_online(const GlbInstance& inst, const Tau& tau,
                         std::span<const std::size_t> order) {
    return glb_online_impl(inst, tau, order, nullptr);
}

GlbAssignment glb_online(const GlbInstance& inst, const Tau& tau,
                         std::span<const std::size_t> order, OpCounters& counters) {
    return glb_online_impl(inst, tau, order, &counters);
}

VsAssignment vs_online_greedy(const VsInstance& inst, const Tau& tau,
                              std::span<const std::size_t> order) {
    return vs_greedy_impl(inst, tau, order, nullptr);
}

VsAssignment vs_online_greedy(const VsInstance& inst, const Tau& tau,
                              std::span<const std::size_t> order, OpCounters& counters) {
    return vs_greedy_impl(inst, tau, order, &counters);
}

GreedyState::GreedyState(const VsInstance& inst, Tau tau)
    : inst_(&inst),
      tau_(tau.exponent(inst.m() * inst.d())),
      tau_int_(integral_exponent(tau_)),
      empty_partitions_(inst.m()),
      mu_(inst.m() * inst.d(), 0.0),
      delta_(inst.m(), 0.0),
      target_(inst.n(), kUnplaced),
      filled_(inst.m(), 0),
      trial_(inst.d(), 0.0),
      best_(inst.d(), 0.0) {}

std::span<const double> GreedyState::load(std::size_t j) const {
    if (j >= inst_->m()) throw std::out_of_range("partition index out of range");
    return std::span<const double>(mu_).subspan(j * inst_->d(), inst_->d());
}

double GreedyState::cached_norm(std::size_t j) const {
    if (j >= inst_->m()) throw std::out_of_range("partition index out of range");
    return delta_[j];
}

std::size_t GreedyState::place(std::size_t vec) {
    if (vec >= inst_->n()) throw std::invalid_argument("vector index out of range");
    if (target_[vec] != kUnplaced)
        throw std::invalid_argument("vector " + std::to_string(vec) + " already placed");
    const std::size_t m = inst_->m();
    const std::size_t d = inst_->d();

    std::size_t choice = 0;
    if (empty_partitions_ > 0) {
        while (filled_[choice]) ++choice;
        auto row = inst_->cost_row(vec, choice);
        double delta = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            mu_[choice * d + k] = row[k];
            delta += pow_term(row[k], tau_, tau_int_, &counters_);
        }
        if (!std::isfinite(delta)) overflow_guard_failure(tau_);
        delta_[choice] = delta;
    } else {
        std::size_t j_min = 0;
        double delta_min = 0.0;
        {
            auto row = inst_->cost_row(vec, 0);
            for (std::size_t k = 0; k < d; ++k) best_[k] = mu_[k] + row[k];
            counters_.additions += d;
            for (std::size_t k = 0; k < d; ++k)
                delta_min += pow_term(best_[k], tau_, tau_int_, &counters_);
            if (!std::isfinite(delta_min)) overflow_guard_failure(tau_);
        }
        for (std::size_t j = 1; j < m; ++j) {
            auto row = inst_->cost_row(vec, j);
            const double* loads = &mu_[j * d];
            for (std::size_t k = 0; k < d; ++k) trial_[k] = loads[k] + row[k];
            counters_.additions += d;
            double delta_trial = 0.0;
            for (std::size_t k = 0; k < d; ++k)
                delta_trial += pow_term(trial_[k], tau_, tau_int_, &counters_);
            if (!std::isfinite(delta_trial)) overflow_guard_failure(tau_);
            // strict improvement only: the lowest-indexed minimizer wins ties
            if (delta_min - delta_[j_min] > delta_trial - delta_[j]) {
                j_min = j;
                delta_min = delta_trial;
                best_.swap(trial_);
            }
        }
        std::copy(best_.begin(), best_.end(), mu_.begin() + j_min * d);
        delta_[j_min] = delta_min;
        choice = j_min;
    }

    if (!filled_[choice]) {
        filled_[choice] = 1;
        --empty_partitions_;
    }
    target_[vec] = choice;
    ++placed_;
    return choice;
}

namespace {

VsAssignment vs_greedy_fast_impl(const VsInstance& inst, std::span<const std::size_t> order,
                                 Tau tau, OpCounters* c) {
    validate_order(inst.n(), order);
    GreedyState state(inst, tau);
    for (std::size_t i : order) state.place(i);
    if (c) *c = state.counters();
    VsAssignment out;
    out.target = state.assignment();
    return out;
}

}  // namespace

VsAssignment vs_online_greedy_fast(const VsInstance& inst, std::span<const std::size_t> order,
                                   Tau tau) {
    return vs_greedy_fast_impl(inst, order, tau, nullptr);
}

VsAssignment vs_online_greedy_fast(const VsInstance& inst, std::span<const std::size_t> order,
                                   OpCounters& counters, Tau tau) {
    return vs_greedy_fast_impl(inst, order, tau, &counters);
}

}  // namespace vsglb
