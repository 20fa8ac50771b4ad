#include <string>
#include <vector>

#include <doctest.h>

#include "quest/decode.hpp"
#include "quest/errors.hpp"
#include "quest/generator.hpp"

using namespace quest;

TEST_CASE("decoding a clean permutation") {
    const auto outcome = decode("1000001001000001");
    REQUIRE(outcome.valid());
    CHECK(outcome.matching->pairs == std::vector<int>{0, 2, 1, 3});
    CHECK(outcome.matching->total_cost == 0.0);

    const auto identity = decode("1001");
    REQUIRE(identity.valid());
    CHECK(identity.matching->pairs == std::vector<int>{0, 1});

    const auto single = decode("1");
    REQUIRE(single.valid());
    CHECK(single.matching->pairs == std::vector<int>{0});
}

TEST_CASE("constraint violations are reported, not thrown") {
    SUBCASE("surfer with no breaker") {
        const auto outcome = decode("0000");
        CHECK_FALSE(outcome.valid());
        CHECK(outcome.violation.find("surfer 0") != std::string::npos);
    }
    SUBCASE("surfer with two breakers") {
        const auto outcome = decode("1110");
        CHECK_FALSE(outcome.valid());
        CHECK(outcome.violation.find("surfer 0") != std::string::npos);
    }
    SUBCASE("rows are reported before columns") {
        // surfer 1 is unassigned and breaker 1 is empty; the row wins
        const auto outcome = decode("1000");
        CHECK_FALSE(outcome.valid());
        CHECK(outcome.violation.find("surfer 1") != std::string::npos);
    }
    SUBCASE("overloaded breaker") {
        // rows are fine, breaker 0 serves both surfers
        const auto outcome = decode("1010");
        CHECK_FALSE(outcome.valid());
        CHECK(outcome.violation.find("breaker 0") != std::string::npos);
    }
    SUBCASE("length is not a perfect square") {
        const auto outcome = decode("101");
        CHECK_FALSE(outcome.valid());
        CHECK_FALSE(outcome.violation.empty());
    }
    SUBCASE("empty input") {
        CHECK_FALSE(decode("").valid());
    }
}

TEST_CASE("malformed characters are a parse error") {
    CHECK_THROWS_AS(decode("10a1"), ParseError);
    CHECK_THROWS_AS(decode("10 1"), ParseError);
    CHECK_NOTHROW(decode(clean_bits(" 10\t01\n")));
    CHECK(clean_bits(" 10\t01\n") == "1001");
    CHECK_THROWS_AS(clean_bits("10x"), ParseError);
}

TEST_CASE("bit similarity") {
    CHECK(bit_similarity("1001", "1001") == 1.0);
    CHECK(bit_similarity("1000001001000001", "1000001000010100") == 0.75);
    CHECK(bit_similarity("0", "1") == 0.0);
    CHECK(bit_similarity("10", "11") == 0.5);
    CHECK_THROWS_AS(bit_similarity("", ""), std::domain_error);
    CHECK_THROWS_AS(bit_similarity("10", "100"), std::domain_error);
}

TEST_CASE("encode and decode are inverses") {
    for (int n = 1; n <= 4; ++n) {
        Matching m;
        for (int s = 0; s < n; ++s) m.pairs.push_back((s + 1) % n);
        const auto bits = encode_matching(m, n);
        CHECK(static_cast<int>(bits.size()) == n * n);
        const auto outcome = decode(to_bitstring(bits));
        REQUIRE(outcome.valid());
        CHECK(outcome.matching->pairs == m.pairs);
    }
}

TEST_CASE("costing a decoded matching against an instance") {
    const auto inst = generate_instance(3, 41);
    const auto w = weight_matrix(inst);
    Matching m;
    m.pairs = {2, 0, 1};
    CHECK(matching_cost(m, inst) == doctest::Approx(w[0][2] + w[1][0] + w[2][1]));

    Matching wrong_size;
    wrong_size.pairs = {0, 1};
    CHECK_THROWS_AS(matching_cost(wrong_size, inst), std::domain_error);

    Matching out_of_range;
    out_of_range.pairs = {0, 1, 3};
    CHECK_THROWS_AS(matching_cost(out_of_range, inst), std::domain_error);
}
