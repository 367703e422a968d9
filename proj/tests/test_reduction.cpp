#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "vsglb/random.hpp"
#include "vsglb/reduction.hpp"

using namespace vsglb;

namespace {

// Straight-line re-statement of the cost rules, kept independent of encode():
// for job i choosing machine s=(s1,s2), the cost to machine t=(t1,t2) is the
// dimension-t2 cost of vector i toward partition t1 when s is t's anchor,
// infinite when s shares t's partition without being the anchor, 0 otherwise.
GlbCost naive_rule(const VsInstance& inst, std::size_t i, std::size_t s1, std::size_t s2,
                   std::size_t t1, std::size_t t2) {
    if (s1 != t1) return GlbCost(0.0);
    if (s2 == 0) return GlbCost(inst.cost(i, t1, t2));
    return GlbCost::infinity();
}

VsInstance random_instance(SplitMix64& rng, std::size_t n, std::size_t m, std::size_t d,
                           bool hetero) {
    std::vector<double> costs((hetero ? n * m : n) * d);
    for (double& c : costs) c = rng.next_uniform01();
    return VsInstance(n, m, d, std::move(costs), hetero);
}

VsAssignment random_assignment(SplitMix64& rng, std::size_t n, std::size_t m) {
    VsAssignment asg;
    asg.target.resize(n);
    for (auto& t : asg.target) t = rng.next() % m;
    return asg;
}

}  // namespace

TEST_CASE("d=1 reductions have no infinite entries and diagonal costs") {
    auto inst = VsInstance::homogeneous(3, {{2.0}, {5.0}});
    auto red = encode(inst);
    REQUIRE(red.glb().machines() == 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t s = 0; s < 3; ++s)
            for (std::size_t t = 0; t < 3; ++t) {
                auto c = red.glb().cost(i, s, t);
                CHECK_FALSE(c.is_infinite());
                if (s == t)
                    CHECK(c == GlbCost(inst.cost(i, s, 0)));
                else
                    CHECK(c == GlbCost(0.0));
            }
}

TEST_CASE("n=1, m=1, d=2 tensor spelled out") {
    auto inst = VsInstance::homogeneous(1, {{4.0, 7.0}});
    auto red = encode(inst);
    REQUIRE(red.glb().machines() == 2);
    const std::size_t anchor = red.anchor(0);
    CHECK(anchor == 0);
    CHECK(red.glb().cost(0, anchor, 0) == GlbCost(4.0));
    CHECK(red.glb().cost(0, anchor, 1) == GlbCost(7.0));
    CHECK(red.glb().cost(0, 1, 0).is_infinite());
    CHECK(red.glb().cost(0, 1, 1).is_infinite());
}

TEST_CASE("every tensor entry matches the naive rule") {
    SplitMix64 rng(11);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t n = 1 + rng.next() % 5;
        const std::size_t m = 1 + rng.next() % 3;
        const std::size_t d = 1 + rng.next() % 4;
        const bool hetero = rep % 3 == 0;
        auto inst = random_instance(rng, n, m, d, hetero);
        auto red = encode(inst);
        REQUIRE(red.glb().machines() == m * d);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t s = 0; s < m * d; ++s)
                for (std::size_t t = 0; t < m * d; ++t) {
                    auto sp = red.machine_pair(s);
                    auto tp = red.machine_pair(t);
                    CHECK(red.glb().cost(i, s, t) ==
                          naive_rule(inst, i, sp.partition, sp.dimension, tp.partition,
                                     tp.dimension));
                }
    }
}

TEST_CASE("tensor size is exactly n * (m*d)^2") {
    SplitMix64 rng(12);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 1 + rng.next() % 6;
        const std::size_t m = 1 + rng.next() % 3;
        const std::size_t d = 1 + rng.next() % 5;
        auto red = encode(random_instance(rng, n, m, d, false));
        CHECK(red.glb().tensor_size() == n * (m * d) * (m * d));
    }
}

TEST_CASE("machine layout and anchors") {
    auto inst = VsInstance::homogeneous(3, {{1.0, 1.0, 1.0, 1.0}});
    auto red = encode(inst);
    CHECK(red.machine_index(2, 3) == 11);
    CHECK(red.machine_pair(11) == MachinePair{2, 3});
    std::size_t anchors = 0;
    for (std::size_t s = 0; s < red.glb().machines(); ++s)
        if (red.is_anchor(s)) ++anchors;
    CHECK(anchors == 3);  // one per partition
    CHECK(red.anchor(0) == 0);
    CHECK(red.anchor(1) == 4);
    CHECK(red.anchor(2) == 8);
}

TEST_CASE("non-anchor choices cost infinity across their own partition") {
    SplitMix64 rng(13);
    auto inst = random_instance(rng, 3, 2, 3, false);
    auto red = encode(inst);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t s = 0; s < 6; ++s) {
            if (red.is_anchor(s)) continue;
            const std::size_t partition = red.machine_pair(s).partition;
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(red.glb().cost(i, s, red.machine_index(partition, k)).is_infinite());
        }
}

TEST_CASE("assigning a job to a non-anchor machine yields an infinite load") {
    SplitMix64 rng(14);
    auto inst = random_instance(rng, 2, 2, 2, false);
    auto red = encode(inst);
    GlbAssignment asg{{red.machine_index(0, 1), red.anchor(1)}};
    auto loads = glb_loads(red.glb(), asg);
    bool any_infinite = false;
    for (auto c : loads.load) any_infinite = any_infinite || c.is_infinite();
    CHECK(any_infinite);
    CHECK(glb_makespan(red.glb(), asg).is_infinite());
}

TEST_CASE("forward transformation targets anchors and preserves the objective") {
    SplitMix64 rng(15);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 1 + rng.next() % 10;
        const std::size_t m = 1 + rng.next() % 3;
        const std::size_t d = 1 + rng.next() % 20;
        const bool hetero = rep % 4 == 0;
        auto inst = random_instance(rng, n, m, d, hetero);
        auto red = encode(inst);
        auto asg = random_assignment(rng, n, m);
        auto glb_asg = vs_to_glb(asg, red);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(red.is_anchor(glb_asg.target[i]));
            CHECK(glb_asg.target[i] == asg.target[i] * d);
        }
        auto glb_value = glb_makespan(red.glb(), glb_asg);
        REQUIRE_FALSE(glb_value.is_infinite());
        CHECK(glb_value.value() == doctest::Approx(vs_makespan(inst, asg)).epsilon(1e-9));
    }
}

TEST_CASE("d=1 objective equality is exact by substitution") {
    SplitMix64 rng(16);
    auto inst = random_instance(rng, 6, 3, 1, false);
    auto red = encode(inst);
    for (int rep = 0; rep < 20; ++rep) {
        auto asg = random_assignment(rng, 6, 3);
        CHECK(glb_makespan(red.glb(), vs_to_glb(asg, red)).value() == vs_makespan(inst, asg));
    }
}

TEST_CASE("backward transformation inverts the forward one") {
    SplitMix64 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 1 + rng.next() % 8;
        const std::size_t m = 1 + rng.next() % 3;
        const std::size_t d = 1 + rng.next() % 6;
        auto inst = random_instance(rng, n, m, d, false);
        auto red = encode(inst);

        auto asg = random_assignment(rng, n, m);
        CHECK(glb_to_vs(vs_to_glb(asg, red), red) == asg);

        GlbAssignment anchor_asg;
        for (std::size_t i = 0; i < n; ++i)
            anchor_asg.target.push_back(red.anchor(rng.next() % m));
        CHECK(vs_to_glb(glb_to_vs(anchor_asg, red), red) == anchor_asg);

        auto lifted = glb_to_vs(anchor_asg, red);
        CHECK(glb_makespan(red.glb(), anchor_asg).value() ==
              doctest::Approx(vs_makespan(inst, lifted)).epsilon(1e-9));
    }
}

TEST_CASE("non-anchor assignments are rejected with the offending job and machine") {
    auto inst = VsInstance::homogeneous(2, {{1.0, 2.0}, {3.0, 4.0}});
    auto red = encode(inst);
    GlbAssignment bad{{red.anchor(0), red.machine_index(1, 1)}};
    CHECK_THROWS_AS(glb_to_vs(bad, red), NonAnchorError);
    try {
        glb_to_vs(bad, red);
    } catch (const NonAnchorError& e) {
        CHECK(e.job() == 1);
        CHECK(e.machine() == MachinePair{1, 1});
        CHECK(std::string(e.what()).find("job 1") != std::string::npos);
        CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    }
}

TEST_CASE("machine loads follow the anchor closed form") {
    SplitMix64 rng(18);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 1 + rng.next() % 8;
        const std::size_t m = 1 + rng.next() % 3;
        const std::size_t d = 1 + rng.next() % 6;
        const bool hetero = rep % 5 == 0;
        auto inst = random_instance(rng, n, m, d, hetero);
        auto red = encode(inst);
        auto asg = random_assignment(rng, n, m);
        auto loads = glb_loads(red.glb(), vs_to_glb(asg, red));
        for (std::size_t t = 0; t < m * d; ++t) {
            auto pair = red.machine_pair(t);
            double expected = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                if (asg.target[i] == pair.partition)
                    expected += inst.cost(i, pair.partition, pair.dimension);
            REQUIRE_FALSE(loads.load[t].is_infinite());
            CHECK(loads.load[t].value() == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}
