#pragma once

#include <cstddef>
#include <stdexcept>

#include "vsglb/glb.hpp"
#include "vsglb/vs.hpp"

namespace vsglb {

// Machine identity (partition, dimension) in a reduced instance. Flat machine
// index = partition * d + dimension; the anchor machine of a partition is its
// dimension-0 machine.
struct MachinePair {
    std::size_t partition = 0;
    std::size_t dimension = 0;
    bool operator==(const MachinePair&) const = default;
};

// A job landed on a non-anchor machine, which carries infinite load by
// construction; such schedules are rejected rather than repaired.
class NonAnchorError : public std::runtime_error {
public:
    NonAnchorError(std::size_t job, MachinePair machine);
    std::size_t job() const noexcept { return job_; }
    MachinePair machine() const noexcept { return machine_; }

private:
    std::size_t job_;
    MachinePair machine_;
};

// Load-balancing encoding of a vector scheduling instance: one machine per
// (partition, dimension) pair. A job choosing the anchor of partition j loads
// machine (j,k) with its dimension-k cost toward j; choosing a non-anchor
// machine costs infinity across that partition; machines of other partitions
// receive 0.
class ReducedInstance {
public:
    const GlbInstance& glb() const noexcept { return glb_; }
    const VsInstance& origin() const noexcept { return origin_; }

    std::size_t machine_index(std::size_t partition, std::size_t dimension) const {
        return partition * origin_.d() + dimension;
    }
    MachinePair machine_pair(std::size_t flat_index) const {
        return MachinePair{flat_index / origin_.d(), flat_index % origin_.d()};
    }
    std::size_t anchor(std::size_t partition) const { return partition * origin_.d(); }
    bool is_anchor(std::size_t flat_index) const { return flat_index % origin_.d() == 0; }

private:
    friend ReducedInstance encode(const VsInstance&);
    ReducedInstance(VsInstance origin, GlbInstance glb)
        : origin_(std::move(origin)), glb_(std::move(glb)) {}

    VsInstance origin_;
    GlbInstance glb_;
};

ReducedInstance encode(const VsInstance& inst);

// Job i follows vector i to the anchor machine of its partition. The load
// balancing makespan of the result equals the scheduling makespan exactly.
GlbAssignment vs_to_glb(const VsAssignment& asg, const ReducedInstance& red);

// Inverse transformation for anchor-only assignments; throws NonAnchorError
// naming the offending job and machine otherwise.
VsAssignment glb_to_vs(const GlbAssignment& asg, const ReducedInstance& red);

}  // namespace vsglb
