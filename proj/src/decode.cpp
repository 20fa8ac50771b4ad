#include "quest/decode.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "quest/errors.hpp"

namespace quest {

DecodeOutcome decode(const std::string& bits) {
    for (char c : bits)
        if (c != '0' && c != '1')
            throw ParseError(std::string("bitstrings may contain only '0' and '1', got '") +
                             c + "'");

    DecodeOutcome out;
    const auto len = bits.size();
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(len))));
    if (len == 0 || n * n != len) {
        out.violation = "length " + std::to_string(len) + " is not a perfect square";
        return out;
    }

    Matching m;
    m.pairs.assign(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        int count = 0;
        for (std::size_t b = 0; b < n; ++b)
            if (bits[s * n + b] == '1') {
                ++count;
                m.pairs[s] = static_cast<int>(b);
            }
        if (count != 1) {
            out.violation = "surfer " + std::to_string(s) + " is matched " +
                            std::to_string(count) + " times";
            return out;
        }
    }
    for (std::size_t b = 0; b < n; ++b) {
        int count = 0;
        for (std::size_t s = 0; s < n; ++s)
            count += bits[s * n + b] == '1';
        if (count != 1) {
            out.violation = "breaker " + std::to_string(b) + " is matched " +
                            std::to_string(count) + " times";
            return out;
        }
    }
    out.matching = std::move(m);
    return out;
}

std::string clean_bits(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c != '0' && c != '1')
            throw ParseError(std::string("bitstrings may contain only '0' and '1', got '") +
                             c + "'");
        out.push_back(c);
    }
    return out;
}

double bit_similarity(const std::string& a, const std::string& b) {
    if (a.empty() || a.size() != b.size())
        throw std::domain_error("bit similarity needs equal nonzero lengths");
    std::size_t agree = 0;
    for (std::size_t i = 0; i < a.size(); ++i) agree += a[i] == b[i];
    return static_cast<double>(agree) / static_cast<double>(a.size());
}

double matching_cost(const Matching& m, const Instance& inst) {
    const int n = inst.num_pairs();
    if (static_cast<int>(m.pairs.size()) != n)
        throw std::domain_error("matching size does not match instance");
    double cost = 0;
    for (int s = 0; s < n; ++s) {
        const int b = m.pairs[s];
        if (b < 0 || b >= inst.num_breakers())
            throw std::domain_error("matching references breaker " + std::to_string(b));
        cost += pair_weight(inst.surfers[s], inst.breakers[b], inst.lambda1, inst.lambda2);
    }
    return cost;
}

BitVector encode_matching(const Matching& m, int n) {
    if (static_cast<int>(m.pairs.size()) != n)
        throw std::invalid_argument("matching size does not match n");
    BitVector x(static_cast<std::size_t>(n) * n, 0);
    for (int s = 0; s < n; ++s) {
        const int b = m.pairs[s];
        if (b < 0 || b >= n)
            throw std::invalid_argument("matching references breaker " + std::to_string(b));
        x[static_cast<std::size_t>(s) * n + b] = 1;
    }
    return x;
}

std::string to_bitstring(const BitVector& x) {
    std::string s(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) s[i] = '1';
    return s;
}

} // namespace quest
