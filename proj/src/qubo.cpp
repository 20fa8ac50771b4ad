#include "quest/qubo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "quest/errors.hpp"
#include "text_util.hpp"

namespace quest {

QuboMatrix::QuboMatrix(int n_vars, double offset) : n_(n_vars), offset_(offset) {
    if (n_vars < 1)
        throw std::invalid_argument("QUBO needs at least one variable");
    q_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
}

void QuboMatrix::check(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw std::out_of_range("QUBO index out of range");
}

double QuboMatrix::at(int i, int j) const {
    check(i, j);
    return q_[static_cast<std::size_t>(i) * n_ + j];
}

void QuboMatrix::set(int i, int j, double value) {
    check(i, j);
    q_[static_cast<std::size_t>(i) * n_ + j] = value;
    q_[static_cast<std::size_t>(j) * n_ + i] = value;
}

void QuboMatrix::set_entry(int i, int j, double value) {
    check(i, j);
    q_[static_cast<std::size_t>(i) * n_ + j] = value;
}

void QuboMatrix::add(int i, int j, double value) {
    check(i, j);
    q_[static_cast<std::size_t>(i) * n_ + j] += value;
    if (i != j)
        q_[static_cast<std::size_t>(j) * n_ + i] += value;
}

double QuboMatrix::max_abs_entry() const {
    double m = 0;
    for (double v : q_) m = std::max(m, std::abs(v));
    return m;
}

void QuboMatrix::require_symmetric(double tol) const {
    const double scale = std::max(1.0, max_abs_entry());
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (std::abs(at(i, j) - at(j, i)) > tol * scale)
                throw std::domain_error("QUBO matrix is not symmetric at (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ")");
}

QuboMatrix build_qubo(const Instance& inst) {
    inst.validate();
    if (inst.num_segments() != 1)
        throw UnsupportedEncodingError("QUBO encoding covers single-segment instances only");

    const int n = inst.num_pairs();
    const auto w = weight_matrix(inst);
    QuboMatrix q(n * n, 2.0 * n * inst.lambda3);

    for (int s = 0; s < n; ++s)
        for (int b = 0; b < n; ++b)
            q.set(s * n + b, s * n + b, w[s][b] - 2.0 * inst.lambda3);

    // Two distinct variables collide when they share a surfer (same row) or a
    // breaker (same column); expanding the squared constraint terms puts
    // lambda3 on each ordered pair, i.e. lambda3 on both symmetric cells.
    for (int s = 0; s < n; ++s)
        for (int b = 0; b < n; ++b)
            for (int bp = b + 1; bp < n; ++bp)
                q.set(s * n + b, s * n + bp, inst.lambda3);
    for (int b = 0; b < n; ++b)
        for (int s = 0; s < n; ++s)
            for (int sp = s + 1; sp < n; ++sp)
                q.set(s * n + b, sp * n + b, inst.lambda3);
    return q;
}

double energy(const QuboMatrix& q, const BitVector& x) {
    if (static_cast<int>(x.size()) != q.n_vars())
        throw std::domain_error("bit vector length does not match QUBO size");
    std::vector<int> on;
    for (int i = 0; i < q.n_vars(); ++i)
        if (x[i]) on.push_back(i);
    double e = 0;
    for (int i : on)
        for (int j : on)
            e += q.at(i, j);
    return e;
}

double energy_with_offset(const QuboMatrix& q, const BitVector& x) {
    return energy(q, x) + q.offset();
}

namespace {

using detail::format_double;

// Splits on spaces/tabs; no escaping, the format has none.
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

double parse_double(const std::string& s, int line) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ParseError("expected a number, got \"" + s + "\"", line);
    return v;
}

long parse_long(const std::string& s, int line) {
    long v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ParseError("expected an integer, got \"" + s + "\"", line);
    return v;
}

} // namespace

std::string export_qubo(const QuboMatrix& q) {
    q.require_symmetric();
    std::string out = "QUBO " + std::to_string(q.n_vars()) + " " + format_double(q.offset()) + "\n";
    for (int i = 0; i < q.n_vars(); ++i)
        for (int j = i; j < q.n_vars(); ++j)
            if (q.at(i, j) != 0.0)
                out += std::to_string(i) + " " + std::to_string(j) + " " +
                       format_double(q.at(i, j)) + "\n";
    return out;
}

QuboMatrix import_qubo(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    int n_vars = 0;
    double offset = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.size() != 3 || fields[0] != "QUBO")
            throw ParseError("expected header \"QUBO <n_vars> <offset>\"", line_no);
        const long n = parse_long(fields[1], line_no);
        if (n < 1 || n > 1'000'000)
            throw ParseError("variable count out of range", line_no);
        n_vars = static_cast<int>(n);
        offset = parse_double(fields[2], line_no);
        have_header = true;
        break;
    }
    if (!have_header)
        throw ParseError("missing QUBO header");

    QuboMatrix q(n_vars, offset);
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.size() != 3)
            throw ParseError("expected \"<i> <j> <value>\"", line_no);
        const long i = parse_long(fields[0], line_no);
        const long j = parse_long(fields[1], line_no);
        if (i < 0 || j < 0 || i >= n_vars || j >= n_vars)
            throw ParseError("index out of range for " + std::to_string(n_vars) +
                             " variables", line_no);
        if (i > j)
            throw ParseError("entries must be upper-triangular (i <= j)", line_no);
        if (!seen.insert({static_cast<int>(i), static_cast<int>(j)}).second)
            throw ParseError("duplicate entry (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")", line_no);
        q.set(static_cast<int>(i), static_cast<int>(j), parse_double(fields[2], line_no));
    }
    return q;
}

} // namespace quest
