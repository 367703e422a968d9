#include "vsglb/vs.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string_view>

namespace vsglb {

namespace {

void check_costs(const std::vector<double>& costs) {
    for (double c : costs) {
        if (!std::isfinite(c)) throw std::invalid_argument("cost entries must be finite");
        if (c < 0.0) throw std::invalid_argument("cost entries must be nonnegative");
    }
}

}  // namespace

VsInstance::VsInstance(std::size_t n, std::size_t m, std::size_t d, std::vector<double> costs,
                       bool heterogeneous)
    : n_(n), m_(m), d_(d), hetero_(heterogeneous), costs_(std::move(costs)) {
    if (n_ == 0 || m_ == 0 || d_ == 0)
        throw std::invalid_argument("instance needs n >= 1, m >= 1, d >= 1");
    const std::size_t expected = hetero_ ? n_ * m_ * d_ : n_ * d_;
    if (costs_.size() != expected)
        throw std::invalid_argument("cost storage has " + std::to_string(costs_.size()) +
                                    " entries, expected " + std::to_string(expected));
    check_costs(costs_);
}

VsInstance VsInstance::homogeneous(std::size_t m, const std::vector<std::vector<double>>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("instance needs at least one vector");
    const std::size_t d = vectors.front().size();
    std::vector<double> flat;
    flat.reserve(vectors.size() * d);
    for (const auto& row : vectors) {
        if (row.size() != d) throw std::invalid_argument("all cost vectors must share one dimension");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return VsInstance(vectors.size(), m, d, std::move(flat), false);
}

VsInstance VsInstance::heterogeneous(const std::vector<std::vector<std::vector<double>>>& costs) {
    if (costs.empty()) throw std::invalid_argument("instance needs at least one vector");
    const std::size_t m = costs.front().size();
    if (m == 0) throw std::invalid_argument("instance needs at least one partition");
    const std::size_t d = costs.front().front().size();
    std::vector<double> flat;
    flat.reserve(costs.size() * m * d);
    for (const auto& per_partition : costs) {
        if (per_partition.size() != m)
            throw std::invalid_argument("every vector needs one cost row per partition");
        for (const auto& row : per_partition) {
            if (row.size() != d)
                throw std::invalid_argument("all cost vectors must share one dimension");
            flat.insert(flat.end(), row.begin(), row.end());
        }
    }
    return VsInstance(costs.size(), m, d, std::move(flat), true);
}

double PartitionLoads::max_entry() const {
    double best = 0.0;
    for (double v : load) best = std::max(best, v);
    return best;
}

void validate_assignment(const VsInstance& inst, const VsAssignment& asg) {
    if (asg.target.size() != inst.n())
        throw std::invalid_argument("assignment covers " + std::to_string(asg.target.size()) +
                                    " vectors, instance has " + std::to_string(inst.n()));
    for (std::size_t j : asg.target)
        if (j >= inst.m())
            throw std::invalid_argument("assignment targets partition " + std::to_string(j) +
                                        ", instance has " + std::to_string(inst.m()));
}

double vs_makespan(const VsInstance& inst, const VsAssignment& asg) {
    validate_assignment(inst, asg);
    double best = 0.0;
    for (std::size_t j = 0; j < inst.m(); ++j) {
        for (std::size_t k = 0; k < inst.d(); ++k) {
            double sum = 0.0;
            for (std::size_t i = 0; i < inst.n(); ++i)
                if (asg.target[i] == j) sum += inst.cost(i, j, k);
            best = std::max(best, sum);
        }
    }
    return best;
}

PartitionLoads partition_loads(const VsInstance& inst, const VsAssignment& asg) {
    validate_assignment(inst, asg);
    PartitionLoads out;
    out.m = inst.m();
    out.d = inst.d();
    out.load.assign(inst.m() * inst.d(), 0.0);
    for (std::size_t i = 0; i < inst.n(); ++i) {
        const std::size_t j = asg.target[i];
        auto row = inst.cost_row(i, j);
        for (std::size_t k = 0; k < inst.d(); ++k) out.load[j * inst.d() + k] += row[k];
    }
    return out;
}

namespace {

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::vector<std::string_view> split_ws(const std::string& s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back(std::string_view(s).substr(start, i - start));
    }
    return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string(what) + " must be an unsigned integer, got '" +
                                   std::string(tok) + "'");
    return v;
}

double parse_cost_token(std::string_view tok, std::size_t line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a decimal cost, got '" + std::string(tok) + "'");
    if (!std::isfinite(v)) throw ParseError(line, "cost must be finite");
    if (v < 0.0) throw ParseError(line, "cost must be nonnegative");
    return v;
}

}  // namespace

VsInstance read_vs_instance(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!blank(line)) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string cur;
    if (!next_line(cur)) throw ParseError(1, "missing header line 'n m d'");
    const std::size_t header_line = lineno;
    auto toks = split_ws(cur);
    if (toks.size() != 3 && toks.size() != 4)
        throw ParseError(header_line, "header must be 'n m d' or 'n m d hetero'");
    bool hetero = false;
    if (toks.size() == 4) {
        if (toks[3] != "hetero")
            throw ParseError(header_line,
                             "unknown header flag '" + std::string(toks[3]) + "', expected 'hetero'");
        hetero = true;
    }
    const std::size_t n = parse_count(toks[0], header_line, "n");
    const std::size_t m = parse_count(toks[1], header_line, "m");
    const std::size_t d = parse_count(toks[2], header_line, "d");
    if (n == 0) throw ParseError(header_line, "n must be >= 1");
    if (m == 0) throw ParseError(header_line, "m must be >= 1");
    if (d == 0) throw ParseError(header_line, "d must be >= 1");

    const std::size_t rows = hetero ? n * m : n;
    std::vector<double> costs;
    costs.reserve(rows * d);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!next_line(cur))
            throw ParseError(lineno + 1, "unexpected end of input: expected " +
                                             std::to_string(rows) + " cost rows, got " +
                                             std::to_string(r));
        auto row = split_ws(cur);
        if (row.size() != d)
            throw ParseError(lineno, "expected " + std::to_string(d) + " costs per row, got " +
                                         std::to_string(row.size()));
        for (auto tok : row) costs.push_back(parse_cost_token(tok, lineno));
    }
    if (next_line(cur)) throw ParseError(lineno, "unexpected trailing content");
    return VsInstance(n, m, d, std::move(costs), hetero);
}

VsInstance read_vs_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_vs_instance(in);
}

}  // namespace vsglb
