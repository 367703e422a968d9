#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "vsglb/vs.hpp"

namespace vsglb {

struct OracleResult {
    double optimum = 0.0;
    VsAssignment witness;        // lexicographically first minimizer
    std::uint64_t explored = 0;  // m^n when enumeration ran to completion
};

class OracleBudgetError : public std::runtime_error {
public:
    OracleBudgetError(double required, std::uint64_t budget);
    double required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    double required_;
    std::uint64_t budget_;
};

// Scalar list scheduling: each vector collapses to the sum of its elements and
// goes to the partition with the smallest current scalar load, ties to the
// lowest index.
VsAssignment list_schedule(const VsInstance& inst, std::span<const std::size_t> order);

// Exact optimum by enumerating all m^n assignments in lexicographic
// (mixed-radix) order. Refuses with the required count when m^n exceeds budget.
OracleResult brute_force_opt(const VsInstance& inst, std::uint64_t budget = 100'000'000ULL);

}  // namespace vsglb
