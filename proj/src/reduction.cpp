#include "vsglb/reduction.hpp"

#include <string>
#include <utility>

namespace vsglb {

NonAnchorError::NonAnchorError(std::size_t job, MachinePair machine)
    : std::runtime_error("job " + std::to_string(job) + " assigned to non-anchor machine (" +
                         std::to_string(machine.partition) + "," +
                         std::to_string(machine.dimension) + ")"),
      job_(job),
      machine_(machine) {}

ReducedInstance encode(const VsInstance& inst) {
    const std::size_t n = inst.n();
    const std::size_t m = inst.m();
    const std::size_t d = inst.d();
    const std::size_t machines = m * d;

    // Cross-partition entries stay at the default zero cost; only the d x d
    // block of the chosen machine's partition is written.
    std::vector<GlbCost> cost(n * machines * machines);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k1 = 0; k1 < d; ++k1) {
                const std::size_t chosen = j * d + k1;
                GlbCost* block = &cost[(i * machines + chosen) * machines + j * d];
                if (k1 == 0) {
                    for (std::size_t k2 = 0; k2 < d; ++k2) block[k2] = GlbCost(inst.cost(i, j, k2));
                } else {
                    for (std::size_t k2 = 0; k2 < d; ++k2) block[k2] = GlbCost::infinity();
                }
            }
        }
    }
    return ReducedInstance(inst, GlbInstance(n, machines, std::move(cost)));
}

GlbAssignment vs_to_glb(const VsAssignment& asg, const ReducedInstance& red) {
    validate_assignment(red.origin(), asg);
    GlbAssignment out;
    out.target.reserve(asg.target.size());
    for (std::size_t j : asg.target) out.target.push_back(red.anchor(j));
    return out;
}

VsAssignment glb_to_vs(const GlbAssignment& asg, const ReducedInstance& red) {
    validate_assignment(red.glb(), asg);
    VsAssignment out;
    out.target.reserve(asg.target.size());
    for (std::size_t i = 0; i < asg.target.size(); ++i) {
        const std::size_t machine = asg.target[i];
        if (!red.is_anchor(machine)) throw NonAnchorError(i, red.machine_pair(machine));
        out.target.push_back(red.machine_pair(machine).partition);
    }
    return out;
}

}  // namespace vsglb
