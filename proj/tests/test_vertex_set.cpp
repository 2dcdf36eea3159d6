#include <gdom/rng.hpp>
#include <gdom/vertex_set.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace gdom;

TEST(VertexSet, SetTestCountAcrossWordBoundary)
{
    VertexSet s(130);
    for (int v : {0, 63, 64, 127, 129})
        s.set(v);
    EXPECT_EQ(s.count(), 5);
    EXPECT_TRUE(s.test(64));
    EXPECT_FALSE(s.test(65));
    EXPECT_EQ(s.indices(), (std::vector<int>{0, 63, 64, 127, 129}));
    EXPECT_EQ(s.find_next(65), 127);
    s.reset(63);
    EXPECT_EQ(s.find_next(1), 64);
}

TEST(VertexSet, ComplementStaysWithinWidth)
{
    VertexSet s(70);
    s.set(3);
    auto c = ~s;
    EXPECT_EQ(c.count(), 69);
    EXPECT_EQ(VertexSet::full(70).count(), 70);
    EXPECT_EQ(~VertexSet::full(70), VertexSet(70));
}

TEST(VertexSet, FromIndicesRejectsOutOfRange)
{
    std::vector<int> bad{0, 5};
    EXPECT_THROW(VertexSet::from_indices(5, bad), ParameterError);
}

TEST(VertexSet, OperationsAgreeWithStdSet)
{
    Rng rng(7);
    for (int round = 0; round < 200; ++round) {
        const int width = 1 + static_cast<int>(rng.below(150));
        VertexSet a(width), b(width);
        std::set<int> sa, sb;
        for (int v = 0; v < width; ++v) {
            if (rng.bernoulli(0.4)) { a.set(v); sa.insert(v); }
            if (rng.bernoulli(0.4)) { b.set(v); sb.insert(v); }
        }
        std::set<int> sunion = sa, sinter, sdiff;
        sunion.insert(sb.begin(), sb.end());
        for (int v : sa) {
            if (sb.count(v)) sinter.insert(v);
            else sdiff.insert(v);
        }
        EXPECT_EQ((a | b).indices(), std::vector<int>(sunion.begin(), sunion.end()));
        EXPECT_EQ((a & b).indices(), std::vector<int>(sinter.begin(), sinter.end()));
        EXPECT_EQ((a - b).indices(), std::vector<int>(sdiff.begin(), sdiff.end()));
        EXPECT_EQ(a.count_common(b), static_cast<int>(sinter.size()));
        EXPECT_EQ(a.intersects(b), ! sinter.empty());
        EXPECT_EQ(a.is_subset_of(b), sdiff.empty());
    }
}

TEST(Rng, StreamIsFixedFunctionOfSeed)
{
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        auto x = a.next();
        EXPECT_EQ(x, b.next());
        (void)c;
    }
    EXPECT_NE(Rng(42).next(), Rng(43).next());
}

TEST(Rng, SplitMixReferenceValue)
{
    // first output of SplitMix64 from state 0
    std::uint64_t state = 0;
    EXPECT_EQ(splitmix64(state), 0xE220A8397B1DCDAFULL);
}

TEST(Rng, BelowAndBernoulliEdges)
{
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_LT(rng.below(7), 7U);
        EXPECT_FALSE(rng.bernoulli(0.0));
        EXPECT_TRUE(rng.bernoulli(1.0));
    }
}
