#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "toda/partition.hpp"

using namespace toda;

namespace {

const Partition kExample{7, 5, 4, 4, 1};

TEST(Partition, ParseAndPrint)
{
    EXPECT_EQ(Partition::parse("7,5,4,4,1"), kExample);
    EXPECT_EQ(kExample.to_string(), "7,5,4,4,1");
    EXPECT_EQ(Partition::parse(""), Partition{});
    EXPECT_EQ(Partition::parse("[]"), Partition{});
    EXPECT_EQ(Partition::parse("[3, 1]"), (Partition{3, 1}));
    EXPECT_THROW(Partition::parse("1,2"), PartitionError);
    EXPECT_THROW(Partition::parse("2,,1"), PartitionError);
    EXPECT_THROW(Partition::parse("2,0"), PartitionError);
    EXPECT_THROW(Partition::parse("x"), PartitionError);
}

TEST(Partition, SizeLengthAndZeroParts)
{
    EXPECT_EQ(kExample.size(), 21);
    EXPECT_EQ(kExample.length(), 5);
    EXPECT_EQ(kExample.part(6), 0);
    EXPECT_EQ(Partition(std::vector<int>{3, 1, 0, 0}).length(), 2);
}

TEST(Partition, UIndex)
{
    // parts >= 4 are 7,5,4,4; the inserted part lands at index u + 1 = 5
    EXPECT_EQ(u_index(kExample, 4), 4);
    EXPECT_EQ(raise(kExample, 4).part(u_index(kExample, 4) + 1), 3);
    EXPECT_EQ(u_index(Partition{}, 1), 0);
    EXPECT_EQ(u_index(Partition{}, 7), 0);
    EXPECT_EQ(u_index(Partition{1, 1, 1}, 1), 3);
}

TEST(Partition, RaiseExamples)
{
    EXPECT_EQ(raise(kExample, 4), (Partition{6, 4, 3, 3, 3, 1}));
    EXPECT_EQ(raise(kExample, 3), (Partition{6, 4, 3, 3, 2, 1}));
    EXPECT_EQ(raise(Partition{}, 1), Partition{});
    EXPECT_EQ(raise(Partition{}, 5), Partition{4});
    EXPECT_EQ(raise(Partition{1, 1, 1, 1}, 1), Partition{});
}

TEST(Partition, LowerExamples)
{
    EXPECT_EQ(lower(Partition{6, 4, 3, 3, 3, 1}, 5), kExample);
    EXPECT_EQ(lower(Partition{}, 1), Partition{});
    EXPECT_EQ(lower(Partition{}, 4), (Partition{1, 1, 1}));
    EXPECT_EQ(lower(Partition{5}, 1), Partition{});
}

TEST(Partition, ConjugateContentsAut)
{
    EXPECT_EQ(conjugate(Partition{}), Partition{});
    EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
    EXPECT_EQ(conjugate(Partition{2, 2}), (Partition{2, 2}));
    EXPECT_TRUE(contents(Partition{}).empty());
    auto c = contents(Partition{2, 1});
    std::sort(c.begin(), c.end());
    EXPECT_EQ(c, (std::vector<int>{-1, 0, 1}));
    c = contents(Partition{3});
    std::sort(c.begin(), c.end());
    EXPECT_EQ(c, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(aut_size(Partition{}), 1u);
    EXPECT_EQ(aut_size(Partition{2, 2, 1, 1, 1}), 12u);
    EXPECT_EQ(aut_size(Partition{5}), 1u);
}

TEST(Partition, Enumeration)
{
    EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition{}});
    EXPECT_EQ(enumerate_partitions(1), std::vector<Partition>{Partition{1}});
    EXPECT_EQ(enumerate_partitions(4),
              (std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
    // p(n) for n <= 10
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        const auto all = enumerate_partitions(n);
        EXPECT_EQ(all.size(), counts[n]);
        for (const auto& p : all)
            EXPECT_EQ(p.size(), n);
        for (std::size_t k = 1; k < all.size(); ++k)
            EXPECT_GT(all[k - 1].parts(), all[k].parts());
    }
}

TEST(Partition, SolveSizes)
{
    EXPECT_EQ(solve_raise_sizes(Partition{}, 3), std::vector<int>{4});
    EXPECT_TRUE(solve_raise_sizes(Partition{}, -1).empty());
    EXPECT_EQ(solve_raise_sizes(kExample, 20), std::vector<int>{4});
    EXPECT_EQ(solve_lower_sizes(Partition{}, 2), std::vector<int>{3});
    EXPECT_EQ(solve_lower_sizes(Partition{3}, 0), std::vector<int>{1});
    // |mu lowered j| = 3 + j - mu_j - 1, so j = 8 reaches 10
    EXPECT_EQ(solve_lower_sizes((Partition{2, 1}), 10), std::vector<int>{8});
    EXPECT_EQ(solve_lower_sizes((Partition{2, 1}), 11), std::vector<int>{9});
}

TEST(Partition, MayaPrefix)
{
    EXPECT_EQ(maya_prefix(Partition{}, 3), (std::vector<int>{-1, -2, -3}));
    EXPECT_EQ(maya_prefix(Partition{2, 1}, 4), (std::vector<int>{1, -1, -3, -4}));
    EXPECT_EQ(maya_prefix(Partition{3}, 2), (std::vector<int>{2, -2}));
    EXPECT_THROW(maya_prefix(Partition{2, 1}, 1), PartitionError);
}

TEST(PartitionProperty, RaiseLowerInverse)
{
    for (const auto& lambda : partitions_up_to(8))
        for (int i = 1; i <= 10; ++i) {
            EXPECT_EQ(lower(raise(lambda, i), u_index(lambda, i) + 1), lambda);
            EXPECT_EQ(raise_size(lambda, i), raise(lambda, i).size());
            EXPECT_EQ(raise(lambda, i).size(), lambda.size() + i - u_index(lambda, i) - 1);
        }
    for (const auto& lambda : partitions_up_to(8))
        for (int j = 1; j <= lambda.length() + 3; ++j)
            EXPECT_EQ(raise(lower(lambda, j), lambda.part(j) + 1), lambda);
    for (const auto& lambda : partitions_up_to(8))
        for (int j = 1; j <= 10; ++j) {
            EXPECT_EQ(lower_size(lambda, j), lower(lambda, j).size());
            EXPECT_EQ(lower(lambda, j).size(), lambda.size() + j - lambda.part(j) - 1);
        }
}

TEST(PartitionProperty, StrictSizeChains)
{
    for (const auto& lambda : partitions_up_to(8))
        for (int k = 1; k < 10; ++k) {
            EXPECT_LT(raise_size(lambda, k), raise_size(lambda, k + 1));
            EXPECT_LT(lower_size(lambda, k), lower_size(lambda, k + 1));
        }
}

TEST(PartitionProperty, SolversAgreeWithScan)
{
    for (const auto& lambda : partitions_up_to(6))
        for (int target = -2; target <= 14; ++target) {
            std::vector<int> up, down;
            for (int k = 1; k <= 30; ++k) {
                if (raise(lambda, k).size() == target)
                    up.push_back(k);
                if (lower(lambda, k).size() == target)
                    down.push_back(k);
            }
            EXPECT_EQ(solve_raise_sizes(lambda, target), up);
            EXPECT_EQ(solve_lower_sizes(lambda, target), down);
        }
}

TEST(PartitionProperty, ConjugationDuality)
{
    for (const auto& lambda : partitions_up_to(8)) {
        EXPECT_EQ(conjugate(conjugate(lambda)), lambda);
        for (int i = 1; i <= 10; ++i)
            EXPECT_EQ(raise(conjugate(lambda), i), conjugate(lower(lambda, i)));
    }
}

TEST(PartitionProperty, ContentsAgainstDiagramWalk)
{
    for (const auto& lambda : partitions_up_to(8)) {
        auto a = contents(lambda);
        auto b = oracle::cell_contents(lambda);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
        long long sum = 0;
        for (int k = 1; k <= lambda.length(); ++k)
            sum += lambda.part(k) * (lambda.part(k) - 1) / 2 - (k - 1) * lambda.part(k);
        EXPECT_EQ(std::accumulate(a.begin(), a.end(), 0LL), sum);
    }
}

TEST(PartitionProperty, MayaRoundTrip)
{
    gen::Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Partition lambda = g.partition(10);
        const int depth = lambda.length() + g.uniform(0, 4);
        if (depth == 0)
            continue;
        const auto prefix = maya_prefix(lambda, depth);
        for (std::size_t k = 1; k < prefix.size(); ++k)
            EXPECT_GT(prefix[k - 1], prefix[k]);
        EXPECT_EQ(from_maya_prefix(prefix), lambda);
        const auto full = oracle::maya_set(lambda, -depth);
        for (int v : prefix)
            EXPECT_TRUE(full.count(v));
    }
}

TEST(PartitionProperty, ColumnOperations)
{
    for (const auto& lambda : partitions_up_to(7)) {
        const Partition eta = remove_column(lambda);
        EXPECT_EQ(add_column(lambda.length(), eta), lambda);
        if (lambda.length() > 0)
            EXPECT_EQ(prepend_part(lambda.part(1), tail(lambda)), lambda);
    }
}

}  // namespace
