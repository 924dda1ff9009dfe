#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mgrowth/ball.hpp"
#include "oracle.hpp"

using namespace mgrowth;

namespace {

std::vector<std::uint64_t> spheres(const GroupInstance& g, int radius, unsigned workers = 1)
{
    return enumerate_spheres(GeneratorSet::canonical(g), radius, {kDefaultMaxElements, workers}).spheres;
}

using Counts = std::vector<std::uint64_t>;

}  // namespace

TEST_CASE("spec examples")
{
    CHECK(spheres(GroupInstance::lamplighter(2), 4) == Counts{1, 3, 6, 12, 22});
    CHECK(spheres(GroupInstance::baumslag_solitar(3), 2) == Counts{1, 4, 12});
    CHECK(spheres(GroupInstance::wreath_z(), 0) == Counts{1});
    CHECK(spheres(GroupInstance::baumslag_solitar(2), 0) == Counts{1});
}

TEST_CASE("BFS agrees with the word-expansion oracle at R <= 4")
{
    for (long n : {2L, 3L, 5L})
        CHECK(spheres(GroupInstance::baumslag_solitar(n), 4) == oracle::bs_spheres(n, 4));
    for (long p : {2L, 3L, 5L})
        CHECK(spheres(GroupInstance::lamplighter(p), 4) == oracle::lamp_spheres(p, 4));
    CHECK(spheres(GroupInstance::wreath_z(), 4) == oracle::lamp_spheres(0, 4));
}

TEST_CASE("sphere counts are consistent")
{
    const auto counts = enumerate_spheres(GeneratorSet::canonical(GroupInstance::baumslag_solitar(2)), 8);
    CHECK(counts.radius == 8);
    CHECK(counts.group == "bs:2");
    CHECK(counts.generators == std::vector<std::string>{"a", "t"});
    CHECK(counts.spheres.front() == 1);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < counts.spheres.size(); ++i) {
        sum += counts.spheres[i];
        CHECK(counts.balls[i] == sum);
        if (i > 0)
            CHECK(counts.balls[i] > counts.balls[i - 1]);
    }
}

TEST_CASE("quotients do not increase ball sizes")
{
    const auto zz = enumerate_spheres(GeneratorSet::canonical(GroupInstance::wreath_z()), 7).balls;
    for (const auto& g : {GroupInstance::baumslag_solitar(2), GroupInstance::baumslag_solitar(3),
                          GroupInstance::lamplighter(2), GroupInstance::lamplighter(3)}) {
        const auto balls = enumerate_spheres(GeneratorSet::canonical(g), 7).balls;
        for (std::size_t m = 0; m < balls.size(); ++m)
            CHECK(balls[m] <= zz[m]);
    }
}

TEST_CASE("parallel expansion is deterministic")
{
    for (const auto& g : {GroupInstance::baumslag_solitar(3), GroupInstance::lamplighter(2), GroupInstance::wreath_z()}) {
        const auto gens = GeneratorSet::canonical(g);
        CHECK(enumerate_spheres(gens, 8, {kDefaultMaxElements, 1}) == enumerate_spheres(gens, 8, {kDefaultMaxElements, 4}));
    }
}

TEST_CASE("custom generating sets")
{
    const auto g = GroupInstance::baumslag_solitar(3);
    const auto gens = GeneratorSet::from_words(g, {{"x", parse_word("a t")}, {"y", parse_word("t")}});
    const auto counts = enumerate_spheres(gens, 3);
    CHECK(counts.generators == std::vector<std::string>{"x", "y"});
    CHECK(counts.spheres[1] == 4);
    // {t} generates an infinite cyclic subgroup.
    const GeneratorSet cyclic(g, {{"t", g.t()}});
    CHECK(enumerate_spheres(cyclic, 5).spheres == Counts{1, 2, 2, 2, 2, 2});
}

TEST_CASE("budget exceeded reports the last completed radius")
{
    const auto gens = GeneratorSet::canonical(GroupInstance::wreath_z());
    try {
        enumerate_spheres(gens, 10, {100, 1});
        FAIL("expected EnumerationBudgetExceeded");
    } catch (const EnumerationBudgetExceeded& e) {
        CHECK(e.last_completed() == 3);  // balls 1, 5, 17, 53, 153
        CHECK(e.partial().spheres == Counts{1, 4, 12, 36});
    }
}

TEST_CASE("rate estimates")
{
    const double phi = (1 + std::sqrt(5.0)) / 2;
    const auto l2 = estimate_rate(enumerate_spheres(GeneratorSet::canonical(GroupInstance::lamplighter(2)), 14));
    CHECK(std::abs(to_double(l2.ball_ratio) - phi) < 0.05);
    const auto bs3 = estimate_rate(enumerate_spheres(GeneratorSet::canonical(GroupInstance::baumslag_solitar(3)), 12));
    CHECK(std::abs(to_double(bs3.ball_ratio) - 2.0) < 0.1);
    CHECK(bs3.lower() <= bs3.upper());

    const auto g = GroupInstance::baumslag_solitar(2);
    const auto linear = estimate_rate(enumerate_spheres(GeneratorSet(g, {{"t", g.t()}}), 60));
    CHECK(std::abs(to_double(linear.ball_ratio) - 1.0) < 0.05);

    CHECK_THROWS_AS(estimate_rate(make_sphere_counts("bs:2", {"a", "t"}, {1, 4})), PreconditionViolation);
}

TEST_CASE("free monoid distinctness")
{
    const auto bs2 = GroupInstance::baumslag_solitar(2);
    const auto gens = GeneratorSet::canonical(bs2);
    const std::vector<GroupElement> theorem{element_from_word(gens, parse_word("t")),
                                            element_from_word(gens, parse_word("a t^2")),
                                            element_from_word(gens, parse_word("a^-1 t^2"))};
    const auto free = free_monoid_distinctness(theorem, 7);
    CHECK(free.distinct);
    CHECK(free.products == 3280);  // 1 + 3 + ... + 3^7

    CHECK(free_monoid_distinctness({bs2.t()}, 5).distinct);

    const auto l2 = GroupInstance::lamplighter(2);
    const auto dup = free_monoid_distinctness({l2.a(), l2.a()}, 2);
    CHECK_FALSE(dup.distinct);
    REQUIRE(dup.collision);
    CHECK(dup.collision->first.size() == 1);

    // a and t a t^-1 commute, so ab = ba at depth 2.
    const auto comm = free_monoid_distinctness({l2.a(), multiply(l2.t(), multiply(l2.a(), invert(l2.t())))}, 3);
    CHECK_FALSE(comm.distinct);
}

TEST_CASE("word lengths")
{
    const auto g = GroupInstance::baumslag_solitar(3);
    const auto gens = GeneratorSet::canonical(g);
    const std::vector<GroupElement> targets{g.identity(), g.t(), element_from_word(gens, parse_word("a t")),
                                            power(g.a(), 3), power(g.a(), 100)};
    const auto lengths = word_lengths(gens, targets, 5);
    CHECK(lengths[0] == 0);
    CHECK(lengths[1] == 1);
    CHECK(lengths[2] == 2);
    CHECK(lengths[3] == 3);
    CHECK_FALSE(lengths[4].has_value());
}
