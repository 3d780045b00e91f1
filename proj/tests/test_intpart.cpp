#include "ncsf/error.hpp"
#include "ncsf/int_partition.hpp"
#include "ncsf/set_partition.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace ncsf;
using namespace ncsf::testing;

namespace {

// Semistandard tableaux of shape λ and content μ, filled cell by cell.
Integer count_ssyt(const IntPartition& shape, const IntPartition& content) {
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
    std::vector<int> left(content.parts());
    const int values = content.length();
    Integer count = 0;
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == shape.length()) {
            ++count;
            return;
        }
        if (c == shape[r]) return fill(r + 1, 0);
        for (int v = 1; v <= values; ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
            if (c > 0 && rows[r][c - 1] > v) continue;
            if (r > 0 && rows[r - 1][c] >= v) continue;
            --left[static_cast<std::size_t>(v - 1)];
            rows[r][c] = v;
            fill(r, c + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(0, 0);
    return count;
}

}  // namespace

TEST(IntPartition, Construction) {
    EXPECT_EQ(L({1, 3, 0, 2}).parts(), (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(L({1, 3}).size(), 4);
    EXPECT_THROW(L({2, -1}), SemanticError);
    EXPECT_EQ(parse_int_partition("(3,1)"), L({3, 1}));
    EXPECT_EQ(parse_int_partition("3,1"), L({3, 1}));
    EXPECT_EQ(parse_int_partition("()"), IntPartition());
    EXPECT_THROW(parse_int_partition("(3,x)"), ParseError);
    EXPECT_EQ(to_string(L({3, 1})), "(3,1)");
}

TEST(IntPartition, Factorials) {
    EXPECT_EQ(fact_parts(L({2, 2})), 4);
    EXPECT_EQ(fact_parts(L({1, 1, 1, 1})), 1);
    EXPECT_EQ(fact_parts(L({3, 1})), 6);
    EXPECT_EQ(fact_mults(L({2, 2})), 2);
    EXPECT_EQ(fact_mults(L({3, 2, 1})), 1);
    EXPECT_EQ(fact_mults(L({1, 1, 1})), 6);
    EXPECT_EQ(fact_parts(IntPartition()), 1);
    EXPECT_EQ(fact_mults(IntPartition()), 1);
}

TEST(IntPartition, CountOfTypeMatchesEnumeration) {
    EXPECT_EQ(count_of_type(L({2, 2})), 3);
    EXPECT_EQ(count_of_type(L({2, 1})), 3);
    EXPECT_EQ(count_of_type(L({5})), 1);
    for (int n = 0; n <= 6; ++n) {
        std::map<IntPartition, Integer> counts;
        for (const auto& pi : enumerate(n)) ++counts[type_of(pi)];
        Integer total = 0;
        for (const auto& lambda : partitions_of(n)) {
            EXPECT_EQ(count_of_type(lambda), counts[lambda]) << to_string(lambda);
            total += count_of_type(lambda);
        }
        EXPECT_EQ(total, bell(n));
    }
}

TEST(IntPartition, PartitionsOf) {
    EXPECT_EQ(partitions_of(0).size(), 1u);
    EXPECT_EQ(partitions_of(5).size(), 7u);
    EXPECT_EQ(partitions_of(7).size(), 15u);
    EXPECT_EQ(partitions_of(4).front(), L({4}));
    EXPECT_EQ(partitions_of(4).back(), L({1, 1, 1, 1}));
}

TEST(IntPartition, DominanceAndConjugate) {
    EXPECT_TRUE(dominates(L({2, 1}), L({1, 1, 1})));
    EXPECT_FALSE(dominates(L({1, 1, 1}), L({2, 1})));
    EXPECT_FALSE(dominates(L({3, 1, 1, 1}), L({2, 2, 2})));
    EXPECT_FALSE(dominates(L({2, 2, 2}), L({3, 1, 1, 1})));
    EXPECT_THROW(dominates(L({2}), L({1})), SemanticError);
    EXPECT_EQ(conjugate(L({3, 1})), L({2, 1, 1}));
    for (int n = 0; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n)) EXPECT_EQ(conjugate(conjugate(lambda)), lambda);
    EXPECT_EQ(lex_compare(L({3, 1}), L({2, 2})), std::strong_ordering::greater);
}

TEST(IntPartition, Kostka) {
    EXPECT_EQ(kostka(L({2, 1}), L({1, 1, 1})), 2);
    EXPECT_EQ(kostka(L({1, 1}), L({2})), 0);
    EXPECT_EQ(kostka(L({3, 2}), L({2, 2, 1})), 2);
    EXPECT_THROW(kostka(L({2}), L({1})), SemanticError);
    for (int n = 0; n <= 5; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            EXPECT_EQ(kostka(lambda, lambda), 1);
            for (const auto& mu : partitions_of(n)) {
                const Integer k = kostka(lambda, mu);
                EXPECT_EQ(k, count_ssyt(lambda, mu)) << to_string(lambda) << to_string(mu);
                EXPECT_EQ(k > 0, dominates(lambda, mu));
            }
        }
    }
}
