#pragma once

#include <optional>
#include <string>

#include "quest/classical.hpp"
#include "quest/model.hpp"
#include "quest/qubo.hpp"

namespace quest {

// Result of interpreting a measured bitstring as an assignment. Constraint
// violations are data here, not exceptions: samplers produce them routinely.
struct DecodeOutcome {
    std::optional<Matching> matching;
    std::string violation;  // human-readable reason when !matching

    bool valid() const { return matching.has_value(); }
};

// Reads bits as the row-major n x n one-hot matrix (bit s*n+b set means
// surfer s drafts behind breaker b). Invalid outcomes: length not a perfect
// square, a row without exactly one bit, a column without exactly one bit.
// Characters other than '0'/'1' are a ParseError. The returned matching has
// total_cost = 0; cost it against an instance with matching_cost().
DecodeOutcome decode(const std::string& bits);

// Strips ASCII whitespace; anything else must be '0' or '1' (ParseError).
std::string clean_bits(const std::string& raw);

// Fraction of agreeing positions. Lengths must match and be nonzero.
double bit_similarity(const std::string& a, const std::string& b);

// Sum of pair weights of the matched pairs on the single-segment problem.
double matching_cost(const Matching& m, const Instance& inst);

// Matching -> row-major one-hot bits, the exact inverse of decode().
BitVector encode_matching(const Matching& m, int n);
std::string to_bitstring(const BitVector& x);

} // namespace quest
