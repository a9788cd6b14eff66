#include <numeric>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "unioncolor/errors.hpp"
#include "unioncolor/star_partition.hpp"

using namespace unioncolor;

namespace {

Label L(std::initializer_list<int> elems, int k) { return Label::of(elems, k); }

}  // namespace

TEST_CASE("double_split fixed cases") {
    {
        const auto [first, second] = double_split({L({1}, 1)}, 1, 2);
        CHECK(first == StarSequence{L({1}, 2)});
        CHECK(second == StarSequence{L({1, 2}, 2)});
    }
    {
        const auto [first, second] =
            double_split({L({1, 2}, 2), L({1}, 2), L({2}, 2)}, 3, 3);
        CHECK(first == StarSequence{L({1, 2}, 3), L({1}, 3), L({2}, 3)});
        CHECK(second == StarSequence{L({1, 2, 3}, 3), L({1, 3}, 3), L({2, 3}, 3)});
    }
    {
        const auto [first, second] = double_split({L({1, 2}, 2), L({1}, 2)}, 1, 3);
        CHECK(first == StarSequence{L({1}, 3)});
        CHECK(second == StarSequence{L({1, 2, 3}, 3), L({1, 3}, 3), L({1, 2}, 3)});
    }
    CHECK_THROWS_AS(double_split({L({1}, 1)}, 2, 2), input_error);   // even i
    CHECK_THROWS_AS(double_split({L({1}, 1)}, 3, 2), input_error);   // i > m
    CHECK_THROWS_AS(double_split({L({2}, 2)}, 1, 2), input_error);   // k already present
    CHECK_THROWS_AS(double_split({L({1}, 3)}, 1, 3), input_error);   // wrong ground set
}

TEST_CASE("double_plus_singleton fixed cases") {
    CHECK(double_plus_singleton({L({1}, 1)}, 2) ==
          StarSequence{L({1, 2}, 2), L({1}, 2), L({2}, 2)});
    CHECK(double_plus_singleton({}, 1) == StarSequence{L({1}, 1)});
    CHECK(double_plus_singleton({L({1, 2}, 2), L({1}, 2)}, 3) ==
          StarSequence{L({1, 2, 3}, 3), L({1, 2}, 3), L({1}, 3), L({1, 3}, 3), L({3}, 3)});
    CHECK_THROWS_AS(double_plus_singleton({L({2}, 2)}, 2), input_error);
}

TEST_CASE("double_star fixed cases") {
    CHECK(double_star({L({1}, 1)}, 2) == StarSequence{L({1, 2}, 2), L({1}, 2)});
    CHECK(double_star({}, 1) == StarSequence{});
    CHECK(double_star({L({1, 2}, 2), L({1}, 2)}, 3) ==
          StarSequence{L({1, 2, 3}, 3), L({1, 2}, 3), L({1}, 3), L({1, 3}, 3)});
}

TEST_CASE("partition fixed cases") {
    {
        const auto blocks = partition({{1}, 1});
        REQUIRE(blocks.size() == 1);
        CHECK(blocks[0] == StarSequence{L({1}, 1)});
    }
    {
        const auto blocks = partition({{3}, 2});
        REQUIRE(blocks.size() == 1);
        CHECK(blocks[0] == StarSequence{L({1, 2}, 2), L({1}, 2), L({2}, 2)});
    }
    {
        const auto blocks = partition({{1, 2}, 2});
        REQUIRE(blocks.size() == 2);
        CHECK(blocks[0] == StarSequence{L({2}, 2)});
        CHECK(blocks[1] == StarSequence{L({1, 2}, 2), L({1}, 2)});
    }
    CHECK_THROWS_AS(partition({{2}, 2}), input_error);       // sum mismatch
    CHECK_THROWS_AS(partition({{1}, 0}), input_error);       // k too small
    CHECK_THROWS_AS(partition({{-1, 2}, 1}), input_error);   // negative size
}

TEST_CASE("partition_with_empty fixed cases") {
    {
        const auto blocks = partition_with_empty({{1}, 0});
        REQUIRE(blocks.size() == 1);
        CHECK(blocks[0] == StarSequence{Label::empty(0)});
    }
    {
        const auto blocks = partition_with_empty({{2}, 1});
        REQUIRE(blocks.size() == 1);
        CHECK(blocks[0] == StarSequence{L({1}, 1), Label::empty(1)});
    }
    {
        const auto blocks = partition_with_empty({{4}, 2});
        REQUIRE(blocks.size() == 1);
        CHECK(blocks[0].size() == 4);
        CHECK(is_forest_partition(blocks, 2, true));
    }
    CHECK_THROWS_AS(partition_with_empty({{3}, 2}), input_error);
}

TEST_CASE("partition is deterministic") {
    const SizeComposition comp{{5, 0, 7, 2, 1}, 4};
    CHECK(partition(comp) == partition(comp));
}

TEST_CASE("random compositions produce valid partitions") {
    std::mt19937_64 rng(99);
    for (int k = 1; k <= 7; ++k) {
        const std::int64_t total = (std::int64_t{1} << k) - 1;
        for (int trial = 0; trial < 40; ++trial) {
            auto sizes = testsupport::random_composition(rng, total, 2 * k + 2);
            if (trial == 0) sizes.assign(static_cast<std::size_t>(total), 1);
            if (trial == 1) sizes = {0, total, 0};
            const auto blocks = partition({sizes, k});
            REQUIRE(blocks.size() == sizes.size());
            for (std::size_t j = 0; j < sizes.size(); ++j)
                CHECK(static_cast<std::int64_t>(blocks[j].size()) == sizes[j]);
            CHECK(is_forest_partition(blocks, k, false));
        }
    }
}

TEST_CASE("random compositions with the empty set covered") {
    std::mt19937_64 rng(100);
    for (int k = 0; k <= 7; ++k) {
        const std::int64_t total = std::int64_t{1} << k;
        for (int trial = 0; trial < 40; ++trial) {
            auto sizes = testsupport::random_composition(rng, total, 2 * k + 2);
            if (trial == 0) sizes.assign(static_cast<std::size_t>(total), 1);
            const auto blocks = partition_with_empty({sizes, k});
            REQUIRE(blocks.size() == sizes.size());
            for (std::size_t j = 0; j < sizes.size(); ++j)
                CHECK(static_cast<std::int64_t>(blocks[j].size()) == sizes[j]);
            CHECK(is_forest_partition(blocks, k, true));
        }
    }
}
