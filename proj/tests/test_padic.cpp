#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "treeq/json_io.hpp"
#include "treeq/padic.hpp"
#include "treeq/rng.hpp"

using namespace treeq;

namespace {

std::vector<PAdicLabel> all_labels(std::uint32_t p, std::size_t depth) {
    const std::uint64_t count = *checked_pow(p, static_cast<std::uint32_t>(depth));
    std::vector<PAdicLabel> labels;
    labels.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        labels.push_back(PAdicLabel::from_integer(n, p, depth));
    }
    return labels;
}

// Independent reassembly oracle: sum digit_k * p^k over the stored digits.
std::uint64_t reassemble(const PAdicLabel& x) {
    std::uint64_t value = 0, power = 1;
    for (std::size_t k = 0; k < x.depth(); ++k) {
        value += x.digit(k) * power;
        power *= x.prime();
    }
    return value;
}

}  // namespace

TEST_CASE("from_integer expands in base p, least significant power first") {
    CHECK(PAdicLabel::from_integer(0, 2, 4).digits() == std::vector<std::uint8_t>{0, 0, 0, 0});
    // 6 = 0 + 1*2 + 1*4
    CHECK(PAdicLabel::from_integer(6, 2, 4).digits() == std::vector<std::uint8_t>{0, 1, 1, 0});
    // 7 = 2 + 1*5
    CHECK(PAdicLabel::from_integer(7, 5, 3).digits() == std::vector<std::uint8_t>{2, 1, 0});
}

TEST_CASE("from_integer rejects bad inputs") {
    CHECK_THROWS_AS(PAdicLabel::from_integer(16, 2, 4), OverflowDepth);
    CHECK_THROWS_AS(PAdicLabel::from_integer(1, 4, 3), NotPrime);
    CHECK_THROWS_AS(PAdicLabel::from_integer(1, 1, 3), InvalidArgument);
    CHECK_THROWS_AS(PAdicLabel::from_integer(1, 101, 3), InvalidArgument);
    CHECK_THROWS_AS(PAdicLabel::from_integer(1, 2, 0), InvalidArgument);
    CHECK_THROWS_AS(PAdicLabel::from_integer(1, 2, 65), InvalidArgument);
    CHECK_THROWS_AS(PAdicLabel(3, {0, 3}), InvalidArgument);
}

TEST_CASE("round trip holds exhaustively for p^K <= 4096") {
    for (const auto& [p, depth] : std::vector<std::pair<std::uint32_t, std::size_t>>{
             {2, 12}, {3, 7}, {5, 5}, {7, 4}, {61, 2}}) {
        const std::uint64_t count = *checked_pow(p, static_cast<std::uint32_t>(depth));
        REQUIRE(count <= 4096);
        for (std::uint64_t n = 0; n < count; ++n) {
            const auto label = PAdicLabel::from_integer(n, p, depth);
            CHECK(reassemble(label) == n);
            CHECK(label.to_integer() == n);
        }
    }
}

TEST_CASE("norm scans for the first nonzero digit") {
    CHECK(norm(PAdicLabel::zero(2, 4)).is_zero());
    CHECK(norm(PAdicLabel(5, {3, 1, 0})) == PNorm::of_valuation(5, 0));
    const PNorm quarter = norm(PAdicLabel(2, {0, 0, 1, 0}));
    CHECK(quarter == PNorm::of_valuation(2, 2));
    CHECK(quarter.numerator() == 1);
    CHECK(*quarter.denominator_u64() == 4);
}

TEST_CASE("distance scans for the first differing digit") {
    const PAdicLabel x(3, {1, 2, 0});
    CHECK(distance(x, x).is_zero());
    CHECK(distance(PAdicLabel(2, {1, 0, 0}), PAdicLabel(2, {0, 0, 0})) ==
          PNorm::of_valuation(2, 0));
    const PNorm ninth = distance(x, PAdicLabel(3, {1, 2, 1}));
    CHECK(ninth == PNorm::of_valuation(3, 2));
    CHECK(*ninth.denominator_u64() == 9);

    CHECK_THROWS_AS(distance(x, PAdicLabel(5, {1, 2, 0})), MismatchedField);
    CHECK_THROWS_AS(distance(x, PAdicLabel(3, {1, 2})), MismatchedField);
}

TEST_CASE("norm equals the distance to the zero label") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto labels = all_labels(p, 4);
        const auto zero = PAdicLabel::zero(p, 4);
        for (const auto& x : labels) {
            CHECK(norm(x) == distance(x, zero));
        }
    }
}

TEST_CASE("ultrametric inequality, exhaustive for p = 2 up to K = 4") {
    for (std::size_t depth = 1; depth <= 4; ++depth) {
        const auto labels = all_labels(2, depth);
        for (const auto& x : labels) {
            for (const auto& y : labels) {
                CHECK(distance(x, y) == distance(y, x));
                CHECK((distance(x, y).is_zero()) == (x == y));
                for (const auto& z : labels) {
                    const PNorm xz = distance(x, z);
                    const PNorm xy = distance(x, y);
                    const PNorm yz = distance(y, z);
                    const PNorm bound = xy < yz ? yz : xy;
                    CHECK(xz <= bound);
                }
            }
        }
    }
}

TEST_CASE("ultrametric inequality, randomized for larger bases") {
    for (std::uint32_t p : {3u, 5u}) {
        const std::uint64_t count = *checked_pow(p, 6);
        SeededRng rng(20260810 + p);
        for (int trial = 0; trial < 100'000; ++trial) {
            const auto x = PAdicLabel::from_integer(rng.next() % count, p, 6);
            const auto y = PAdicLabel::from_integer(rng.next() % count, p, 6);
            const auto z = PAdicLabel::from_integer(rng.next() % count, p, 6);
            const PNorm xy = distance(x, y);
            const PNorm yz = distance(y, z);
            const PNorm bound = xy < yz ? yz : xy;
            REQUIRE(distance(x, z) <= bound);
        }
    }
}

TEST_CASE("norm ordering is exact") {
    CHECK(PNorm::zero(2) < PNorm::of_valuation(2, 5));
    CHECK(PNorm::of_valuation(2, 5) < PNorm::of_valuation(2, 1));
    CHECK(PNorm::of_valuation(2, 1) < PNorm::of_valuation(2, 0));
    CHECK(PNorm::of_valuation(2, 0) == PNorm::of_valuation(3, 0));
    CHECK(PNorm::zero(2) == PNorm::zero(3));
    CHECK_THROWS_AS((void)(PNorm::of_valuation(2, 1) == PNorm::of_valuation(3, 1)),
                    MismatchedField);
}

TEST_CASE("denominators beyond 64 bits fall back to decimal strings") {
    const PNorm tiny = PNorm::of_valuation(3, 63);
    CHECK(!tiny.denominator_u64().has_value());
    CHECK(tiny.denominator_string() == "1144561273430837494885949696427");
    CHECK(to_json(tiny)["den"] == "1144561273430837494885949696427");
}

TEST_CASE("JSON serialization round-trips labels and matches the schema") {
    const PAdicLabel label(2, {0, 1, 1, 0});
    const Json j = to_json(label);
    CHECK(j.dump() == R"({"p":2,"digits":[0,1,1,0]})");
    CHECK(padic_label_from_json(j) == label);

    const Json n = to_json(norm(PAdicLabel(2, {0, 0, 1, 0})));
    CHECK(n.dump() == R"({"num":1,"den":4})");
    CHECK(to_json(norm(PAdicLabel::zero(2, 4))).dump() == R"({"num":0,"den":1})");

    SeededRng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = PAdicLabel::from_integer(rng.next() % 3125, 5, 5);
        CHECK(padic_label_from_json(to_json(x)) == x);
    }
}
