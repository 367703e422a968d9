#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsglb {

// Raised by the instance file parsers; line numbers are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A vector scheduling instance: n nonnegative d-dimensional cost vectors to be
// split among m partitions. In heterogeneous mode every (vector, partition)
// pair carries its own cost vector; otherwise the cost of a vector is the same
// for every partition.
class VsInstance {
public:
    // Flat storage: n*d entries (homogeneous, vector-major) or n*m*d entries
    // (heterogeneous, vector-major then partition).
    VsInstance(std::size_t n, std::size_t m, std::size_t d, std::vector<double> costs,
               bool heterogeneous);

    static VsInstance homogeneous(std::size_t m, const std::vector<std::vector<double>>& vectors);
    static VsInstance heterogeneous(const std::vector<std::vector<std::vector<double>>>& costs);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }
    std::size_t d() const noexcept { return d_; }
    bool heterogeneous_costs() const noexcept { return hetero_; }

    // Load added to dimension k of partition j when vector i is assigned there.
    double cost(std::size_t i, std::size_t j, std::size_t k) const {
        return hetero_ ? costs_[(i * m_ + j) * d_ + k] : costs_[i * d_ + k];
    }

    // The d costs of vector i toward partition j.
    std::span<const double> cost_row(std::size_t i, std::size_t j) const {
        const std::size_t base = hetero_ ? (i * m_ + j) * d_ : i * d_;
        return std::span<const double>(costs_).subspan(base, d_);
    }

private:
    std::size_t n_, m_, d_;
    bool hetero_;
    std::vector<double> costs_;
};

// Total map vector index -> partition index.
struct VsAssignment {
    std::vector<std::size_t> target;
    bool operator==(const VsAssignment&) const = default;
};

// Per-partition load vectors, partition-major.
struct PartitionLoads {
    std::size_t m = 0;
    std::size_t d = 0;
    std::vector<double> load;

    double at(std::size_t j, std::size_t k) const { return load[j * d + k]; }
    double max_entry() const;
};

// Throws std::invalid_argument when the assignment does not fit the instance.
void validate_assignment(const VsInstance& inst, const VsAssignment& asg);

// Maximum over partitions and dimensions of the summed load.
double vs_makespan(const VsInstance& inst, const VsAssignment& asg);
PartitionLoads partition_loads(const VsInstance& inst, const VsAssignment& asg);

// Text format: header "n m d" (optionally followed by the word "hetero"), then
// one whitespace-separated cost row per non-blank line: n rows, or n*m rows in
// vector-major partition-minor order for heterogeneous instances.
VsInstance read_vs_instance(std::istream& in);
VsInstance read_vs_instance_file(const std::string& path);

}  // namespace vsglb
