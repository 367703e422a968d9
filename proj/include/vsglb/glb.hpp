#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace vsglb {

// Nonnegative cost that may be the distinguished infinite value. Addition
// saturates: infinite plus anything is infinite. Infinite compares equal to
// infinite and above every finite cost.
class GlbCost {
public:
    GlbCost() = default;
    GlbCost(double value);  // implicit: finite nonnegative costs read naturally

    static GlbCost infinity() noexcept {
        GlbCost c;
        c.inf_ = true;
        return c;
    }

    bool is_infinite() const noexcept { return inf_; }
    double value() const;  // finite costs only; throws std::logic_error otherwise

    GlbCost& operator+=(GlbCost rhs) noexcept {
        if (rhs.inf_) inf_ = true;
        if (!inf_) v_ += rhs.v_;
        return *this;
    }
    friend GlbCost operator+(GlbCost a, GlbCost b) noexcept {
        a += b;
        return a;
    }

    friend bool operator==(GlbCost a, GlbCost b) noexcept {
        return a.inf_ ? b.inf_ : (!b.inf_ && a.v_ == b.v_);
    }
    friend bool operator!=(GlbCost a, GlbCost b) noexcept { return !(a == b); }
    friend bool operator<(GlbCost a, GlbCost b) noexcept {
        if (a.inf_) return false;
        return b.inf_ || a.v_ < b.v_;
    }
    friend bool operator>(GlbCost a, GlbCost b) noexcept { return b < a; }
    friend bool operator<=(GlbCost a, GlbCost b) noexcept { return !(b < a); }
    friend bool operator>=(GlbCost a, GlbCost b) noexcept { return !(a < b); }

private:
    double v_ = 0.0;
    bool inf_ = false;
};

// A generalized load balancing instance: assigning job i to machine j incurs
// cost[i][j][k] on every machine k.
class GlbInstance {
public:
    // Flat tensor of jobs*machines*machines entries, indexed
    // (job * machines + chosen) * machines + affected.
    GlbInstance(std::size_t jobs, std::size_t machines, std::vector<GlbCost> cost);

    static GlbInstance from_rows(const std::vector<std::vector<std::vector<GlbCost>>>& rows);

    std::size_t jobs() const noexcept { return jobs_; }
    std::size_t machines() const noexcept { return machines_; }
    std::size_t tensor_size() const noexcept { return cost_.size(); }

    GlbCost cost(std::size_t job, std::size_t chosen, std::size_t affected) const {
        return cost_[(job * machines_ + chosen) * machines_ + affected];
    }
    std::span<const GlbCost> cost_row(std::size_t job, std::size_t chosen) const {
        return std::span<const GlbCost>(cost_).subspan((job * machines_ + chosen) * machines_,
                                                       machines_);
    }

private:
    std::size_t jobs_, machines_;
    std::vector<GlbCost> cost_;
};

// Total map job index -> machine index.
struct GlbAssignment {
    std::vector<std::size_t> target;
    bool operator==(const GlbAssignment&) const = default;
};

struct MachineLoads {
    std::vector<GlbCost> load;
    GlbCost max() const;
};

void validate_assignment(const GlbInstance& inst, const GlbAssignment& asg);

// load[k] = sum over all jobs i of cost[i][target[i]][k], saturating at infinite.
MachineLoads glb_loads(const GlbInstance& inst, const GlbAssignment& asg);
GlbCost glb_makespan(const GlbInstance& inst, const GlbAssignment& asg);

// Text format: header "jobs machines", then jobs*machines rows (job-major,
// chosen-machine-minor) of `machines` entries each; `inf` marks an infinite cost.
GlbInstance read_glb_instance(std::istream& in);
GlbInstance read_glb_instance_file(const std::string& path);
void write_glb_instance(std::ostream& out, const GlbInstance& inst);

}  // namespace vsglb
