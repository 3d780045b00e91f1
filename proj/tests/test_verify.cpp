#include "ncsf/error.hpp"
#include "ncsf/verify.hpp"

#include <gtest/gtest.h>

using namespace ncsf;

TEST(Verify, SuiteNames) {
    const auto& names = suite_names();
    ASSERT_EQ(names.size(), 10u);
    EXPECT_EQ(names.front(), "worked-examples");
    EXPECT_EQ(names.back(), "rsk");
    EXPECT_THROW(run_suite("nosuch"), SemanticError);
    EXPECT_THROW(run_suite("mobius", -1), SemanticError);
}

TEST(Verify, SmallSuitesPass) {
    for (const auto& name : suite_names()) {
        const auto result = run_suite(name, 3);
        EXPECT_TRUE(result.passed()) << name;
        EXPECT_FALSE(result.checks.empty());
        for (const auto& check : result.checks) EXPECT_TRUE(check.passed) << name << ": " << check.name << " " << check.detail;
    }
}

TEST(Verify, MaxNCapsSizes) {
    const auto small = run_suite("mobius", 2);
    const auto large = run_suite("mobius", 4);
    ASSERT_EQ(small.checks.size(), large.checks.size());
    EXPECT_EQ(small.checks[1].detail, "4 cases");
    EXPECT_EQ(large.checks[1].detail, "24 cases");
}
