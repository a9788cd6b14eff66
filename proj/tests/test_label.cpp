#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "unioncolor/errors.hpp"
#include "unioncolor/label.hpp"
#include "unioncolor/star_partition.hpp"

using namespace unioncolor;

namespace {

Label L(std::initializer_list<int> elems, int k) { return Label::of(elems, k); }

}  // namespace

TEST_CASE("label basics and textual form") {
    const Label a = L({1, 3}, 4);
    CHECK(a.str() == "{1,3}");
    CHECK(Label::empty(3).str() == "{}");
    CHECK(a.contains(1));
    CHECK(!a.contains(2));
    CHECK(a.count() == 2);
    CHECK(a.elements() == std::vector<int>{1, 3});
    CHECK(Label::parse("{1,3}", 4) == a);
    CHECK(Label::parse(" { 1 , 3 } ", 4) == a);
    CHECK(Label::parse("{}", 4) == Label::empty(4));
    CHECK_THROWS_AS(Label::parse("{5}", 4), input_error);
    CHECK_THROWS_AS(Label::parse("1,3", 4), input_error);
    CHECK_THROWS_AS(Label::of({0}, 4), input_error);
    CHECK_THROWS_AS(Label(1u << 5, 4), input_error);
    CHECK(L({2}, 2).widened(5).ground_size() == 5);
    CHECK(L({1}, 2).subset_of(L({1, 2}, 2)));
    CHECK(!L({1, 2}, 2).subset_of(L({1}, 2)));
}

TEST_CASE("is_m_star on the small fixed cases") {
    CHECK(is_m_star({}));
    CHECK(is_m_star({L({2}, 3)}));
    CHECK(is_m_star({L({1, 2}, 2), L({1}, 2), L({2}, 2)}));
    CHECK(!is_m_star({L({1}, 2), L({1, 2}, 2)}));  // second set is not below the first
    CHECK(is_m_star({L({1, 2}, 2), L({1}, 2)}));
    CHECK(!is_m_star({L({1}, 2), L({1}, 2)}));  // repeated set
    // the five-set case: union condition plus both chains hold
    CHECK(is_m_star({L({1, 2, 3}, 3), L({1, 2}, 3), L({1}, 3), L({2, 3}, 3), L({2}, 3)}));
    CHECK_THROWS_AS(is_m_star({L({1}, 2), L({1}, 3)}), input_error);
}

TEST_CASE("is_forest_partition on the small fixed cases") {
    CHECK(is_forest_partition({{L({1}, 1)}}, 1, false));
    CHECK(is_forest_partition({{L({1, 2}, 2), L({1}, 2), L({2}, 2)}}, 2, false));
    CHECK(!is_forest_partition({{L({1}, 2)}, {L({2}, 2), L({1, 2}, 2)}}, 2, false));
    CHECK(!is_forest_partition({{L({1}, 2)}}, 2, false));  // does not cover everything
    CHECK(!is_forest_partition({{L({1}, 2)}, {L({1}, 2), L({1, 2}, 2), L({2}, 2)}}, 2,
                               false));  // overlap
    CHECK(is_forest_partition({{Label::empty(0)}}, 0, true));
    CHECK(!is_forest_partition({{Label::empty(2)}, {L({1}, 2), L({2}, 2), L({1, 2}, 2)}},
                               2, false));  // empty label needs include_empty
}

TEST_CASE("exhaustive agreement with the set-based restatement for small k") {
    for (int k = 1; k <= 3; ++k) {
        const int universe = (1 << k) - 1;
        std::vector<Label> labels;
        for (int bits = 1; bits <= universe; ++bits)
            labels.emplace_back(static_cast<std::uint64_t>(bits), k);

        // all distinct ordered sequences
        StarSequence seq;
        std::vector<char> used(labels.size(), 0);
        long long checked = 0;
        auto walk = [&](auto&& self) -> void {
            CHECK(is_m_star(seq) == testsupport::reference_is_m_star(testsupport::to_sets(seq)));
            ++checked;
            if (seq.size() == labels.size()) return;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (used[i]) continue;
                used[i] = 1;
                seq.push_back(labels[i]);
                self(self);
                seq.pop_back();
                used[i] = 0;
            }
        };
        walk(walk);
        CHECK(checked > universe);

        // short sequences with repetition as well
        const int max_len = 3;
        std::vector<std::size_t> pick;
        auto walk_rep = [&](auto&& self) -> void {
            StarSequence s;
            for (std::size_t i : pick) s.push_back(labels[i]);
            CHECK(is_m_star(s) == testsupport::reference_is_m_star(testsupport::to_sets(s)));
            if (pick.size() == max_len) return;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                pick.push_back(i);
                self(self);
                pick.pop_back();
            }
        };
        walk_rep(walk_rep);
    }
}

TEST_CASE("accepted sequences keep every set below the first") {
    std::mt19937_64 rng(2024);
    for (int k = 2; k <= 6; ++k) {
        const auto sizes = testsupport::random_composition(rng, (1 << k) - 1, 8);
        for (const StarSequence& block : partition({sizes, k})) {
            if (block.size() < 2) continue;
            REQUIRE(is_m_star(block));
            for (const Label& a : block) CHECK(a.subset_of(block.front()));
            CHECK(is_m_star(StarSequence{block.front()}));  // length-1 prefix
        }
    }
}
