#include "vsglb/glb.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "vsglb/vs.hpp"  // ParseError

namespace vsglb {

GlbCost::GlbCost(double value) : v_(value) {
    if (!std::isfinite(value)) throw std::invalid_argument("finite cost expected; use GlbCost::infinity()");
    if (value < 0.0) throw std::invalid_argument("cost must be nonnegative");
}

double GlbCost::value() const {
    if (inf_) throw std::logic_error("value() called on an infinite cost");
    return v_;
}

GlbInstance::GlbInstance(std::size_t jobs, std::size_t machines, std::vector<GlbCost> cost)
    : jobs_(jobs), machines_(machines), cost_(std::move(cost)) {
    if (jobs_ == 0 || machines_ == 0)
        throw std::invalid_argument("instance needs at least one job and one machine");
    if (cost_.size() != jobs_ * machines_ * machines_)
        throw std::invalid_argument("cost tensor has " + std::to_string(cost_.size()) +
                                    " entries, expected jobs*machines^2 = " +
                                    std::to_string(jobs_ * machines_ * machines_));
}

GlbInstance GlbInstance::from_rows(const std::vector<std::vector<std::vector<GlbCost>>>& rows) {
    if (rows.empty()) throw std::invalid_argument("instance needs at least one job");
    const std::size_t machines = rows.front().size();
    std::vector<GlbCost> flat;
    flat.reserve(rows.size() * machines * machines);
    for (const auto& per_machine : rows) {
        if (per_machine.size() != machines)
            throw std::invalid_argument("every job needs one cost row per machine");
        for (const auto& row : per_machine) {
            if (row.size() != machines)
                throw std::invalid_argument("every cost row needs one entry per machine");
            flat.insert(flat.end(), row.begin(), row.end());
        }
    }
    return GlbInstance(rows.size(), machines, std::move(flat));
}

GlbCost MachineLoads::max() const {
    GlbCost best;
    for (GlbCost c : load)
        if (best < c) best = c;
    return best;
}

void validate_assignment(const GlbInstance& inst, const GlbAssignment& asg) {
    if (asg.target.size() != inst.jobs())
        throw std::invalid_argument("assignment covers " + std::to_string(asg.target.size()) +
                                    " jobs, instance has " + std::to_string(inst.jobs()));
    for (std::size_t j : asg.target)
        if (j >= inst.machines())
            throw std::invalid_argument("assignment targets machine " + std::to_string(j) +
                                        ", instance has " + std::to_string(inst.machines()));
}

MachineLoads glb_loads(const GlbInstance& inst, const GlbAssignment& asg) {
    validate_assignment(inst, asg);
    MachineLoads out;
    out.load.assign(inst.machines(), GlbCost());
    for (std::size_t i = 0; i < inst.jobs(); ++i) {
        auto row = inst.cost_row(i, asg.target[i]);
        for (std::size_t k = 0; k < inst.machines(); ++k) out.load[k] += row[k];
    }
    return out;
}

GlbCost glb_makespan(const GlbInstance& inst, const GlbAssignment& asg) {
    return glb_loads(inst, asg).max();
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

GlbCost parse_glb_token(std::string_view tok, std::size_t line) {
    if (tok == "inf") return GlbCost::infinity();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a cost or 'inf', got '" + std::string(tok) + "'");
    if (!std::isfinite(v)) throw ParseError(line, "cost must be finite or the token 'inf'");
    if (v < 0.0) throw ParseError(line, "cost must be nonnegative");
    return GlbCost(v);
}

}  // namespace

GlbInstance read_glb_instance(std::istream& in) {
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
    if (!next_line(cur)) throw ParseError(1, "missing header line 'jobs machines'");
    const std::size_t header_line = lineno;
    auto toks = split_ws(cur);
    if (toks.size() != 2) throw ParseError(header_line, "header must be 'jobs machines'");
    const std::size_t jobs = parse_count(toks[0], header_line, "jobs");
    const std::size_t machines = parse_count(toks[1], header_line, "machines");
    if (jobs == 0) throw ParseError(header_line, "jobs must be >= 1");
    if (machines == 0) throw ParseError(header_line, "machines must be >= 1");

    const std::size_t rows = jobs * machines;
    std::vector<GlbCost> cost;
    cost.reserve(rows * machines);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!next_line(cur))
            throw ParseError(lineno + 1, "unexpected end of input: expected " +
                                             std::to_string(rows) + " cost rows, got " +
                                             std::to_string(r));
        auto row = split_ws(cur);
        if (row.size() != machines)
            throw ParseError(lineno, "expected " + std::to_string(machines) +
                                         " entries per row, got " + std::to_string(row.size()));
        for (auto tok : row) cost.push_back(parse_glb_token(tok, lineno));
    }
    if (next_line(cur)) throw ParseError(lineno, "unexpected trailing content");
    return GlbInstance(jobs, machines, std::move(cost));
}

GlbInstance read_glb_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_glb_instance(in);
}

void write_glb_instance(std::ostream& out, const GlbInstance& inst) {
    out << inst.jobs() << ' ' << inst.machines() << '\n';
    char buf[40];
    for (std::size_t i = 0; i < inst.jobs(); ++i) {
        for (std::size_t s = 0; s < inst.machines(); ++s) {
            auto row = inst.cost_row(i, s);
            for (std::size_t t = 0; t < inst.machines(); ++t) {
                if (t) out << ' ';
                if (row[t].is_infinite()) {
                    out << "inf";
                } else {
                    std::snprintf(buf, sizeof buf, "%.17g", row[t].value());
                    out << buf;
                }
            }
            out << '\n';
        }
    }
}

}  // namespace vsglb
