#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "mgrowth/errors.hpp"
#include "mgrowth/group.hpp"
#include "oracle.hpp"

using namespace mgrowth;

namespace {

const GroupInstance kBs2 = GroupInstance::baumslag_solitar(2);
const GroupInstance kBs3 = GroupInstance::baumslag_solitar(3);
const GroupInstance kL2 = GroupInstance::lamplighter(2);
const GroupInstance kL3 = GroupInstance::lamplighter(3);
const GroupInstance kZZ = GroupInstance::wreath_z();

std::vector<GroupInstance> families()
{
    return {kBs2, kBs3, GroupInstance::baumslag_solitar(5), kL2, kL3, GroupInstance::lamplighter(5), kZZ};
}

GroupElement word(const GroupInstance& g, const char* text)
{
    return element_from_word(GeneratorSet::canonical(g), parse_word(text));
}

}  // namespace

TEST_CASE("BS(1,3): t a t^-1 = a^3")
{
    const auto g = word(kBs3, "t a t^-1");
    CHECK(g == GroupElement(BsElement(3, 0, 3, 0)));
    CHECK(g == power(kBs3.a(), 3));
}

TEST_CASE("identity is neutral in every family")
{
    oracle::Gen gen(1);
    for (const auto& group : families()) {
        for (int i = 0; i < 50; ++i) {
            const auto g = gen.element(group, 10);
            CHECK(multiply(g, group.identity()) == g);
            CHECK(multiply(group.identity(), g) == g);
        }
    }
}

TEST_CASE("L_2 commutator word is trivial")
{
    CHECK(is_identity(word(kL2, "a t a t^-1 a^-1 t a^-1 t^-1")));
}

TEST_CASE("invert examples")
{
    CHECK(invert(kBs2.identity()) == kBs2.identity());
    CHECK(invert(kBs2.t()) == GroupElement(BsElement(2, -1, 0, 0)));
    const GroupElement g = LampElement(3, {{1, 2}}, 2);
    CHECK(invert(g) == GroupElement(LampElement(3, {{-1, 1}}, -2)));
}

TEST_CASE("phi_exponent examples and homomorphism")
{
    CHECK(phi_exponent(kBs3.t()) == 1);
    CHECK(phi_exponent(kBs3.a()) == 0);
    CHECK(phi_exponent(word(kL3, "a t^3 a^-1 t^-1")) == 2);
    oracle::Gen gen(2);
    for (const auto& group : families()) {
        for (int i = 0; i < 100; ++i) {
            const auto g = gen.element(group, 12), h = gen.element(group, 12);
            CHECK(phi_exponent(multiply(g, h)) == phi_exponent(g) + phi_exponent(h));
        }
    }
}

TEST_CASE("element_from_word examples")
{
    CHECK(is_identity(element_from_word(GeneratorSet::canonical(kBs2), {})));
    CHECK(word(kBs2, "t a t^-1") == GroupElement(BsElement(2, 0, 2, 0)));
    CHECK(word(kL2, "a t a") == GroupElement(LampElement(2, {{0, 1}, {1, 1}}, 1)));
    CHECK_THROWS_AS(word(kL2, "a b"), UnknownLabel);
}

TEST_CASE("group axioms on random triples")
{
    oracle::Gen gen(3);
    for (const auto& group : families()) {
        for (int i = 0; i < 200; ++i) {
            const auto g = gen.element(group, 10), h = gen.element(group, 10), k = gen.element(group, 10);
            CHECK(multiply(multiply(g, h), k) == multiply(g, multiply(h, k)));
            CHECK(is_identity(multiply(g, invert(g))));
            CHECK(is_identity(multiply(invert(g), g)));
        }
    }
}

TEST_CASE("defining relations")
{
    for (long n : {2L, 3L, 5L, 7L}) {
        const auto g = GroupInstance::baumslag_solitar(n);
        CHECK(multiply(multiply(g.t(), g.a()), invert(g.t())) == power(g.a(), n));
    }
    for (long p : {2L, 3L, 5L}) {
        const auto g = GroupInstance::lamplighter(p);
        CHECK(is_identity(power(g.a(), p)));
        CHECK_FALSE(is_identity(power(g.a(), p - 1)));
    }
    for (const auto& g : {kL2, kL3, GroupInstance::lamplighter(5), kZZ}) {
        for (int k = 1; k <= 8; ++k) {
            const auto conj = multiply(multiply(power(g.t(), k), g.a()), power(g.t(), -k));
            const auto comm = multiply(multiply(g.a(), conj), multiply(invert(g.a()), invert(conj)));
            CHECK(is_identity(comm));
        }
    }
    CHECK_FALSE(is_identity(power(kZZ.a(), 12)));
}

TEST_CASE("BS multiplication is affine composition")
{
    oracle::Gen gen(4);
    for (long n : {2L, 3L, 6L}) {
        const auto group = GroupInstance::baumslag_solitar(n);
        for (int i = 0; i < 200; ++i) {
            const auto g = std::get<BsElement>(gen.element(group, 10));
            const auto h = std::get<BsElement>(gen.element(group, 10));
            const auto gh = std::get<BsElement>(multiply(g, h));
            const Rational x = gen.rational();
            CHECK(gh.apply(x) == g.apply(h.apply(x)));
        }
    }
}

TEST_CASE("BS canonical form")
{
    const BsElement g(3, 0, 9, 2);  // 9/9 = 1
    CHECK(g.numerator() == 1);
    CHECK(g.denominator_exponent() == 0);
    const BsElement z(3, 1, 0, 4);
    CHECK(z.denominator_exponent() == 0);
    oracle::Gen gen(5);
    for (int i = 0; i < 200; ++i) {
        const auto e = std::get<BsElement>(gen.element(kBs3, 14));
        if (e.denominator_exponent() > 0)
            CHECK(e.numerator() % 3 != 0);
        if (e.numerator() == 0)
            CHECK(e.denominator_exponent() == 0);
    }
}

TEST_CASE("lamp elements store no zero values")
{
    const LampElement g(3, {{0, 3}, {2, -1}, {5, 4}}, 1);
    CHECK(g.lamps() == Lamps{{2, 2}, {5, 1}});
    const WreathZElement w({{1, 0}, {3, -2}}, 0);
    CHECK(w.lamps() == Lamps{{3, -2}});
}

TEST_CASE("mismatched groups")
{
    CHECK_THROWS_AS(multiply(kBs2.a(), kBs3.a()), GroupMismatch);
    CHECK_THROWS_AS(multiply(kL2.a(), kZZ.a()), GroupMismatch);
}

TEST_CASE("quotient_map examples")
{
    const WreathZElement id = WreathZElement::identity();
    CHECK(is_identity(quotient_map(id, kBs3)));
    CHECK(quotient_map(WreathZElement({{1, 1}}, 0), kBs3) == GroupElement(BsElement(3, 0, 3, 0)));
    CHECK(quotient_map(WreathZElement({{2, 1}}, 0), kBs3) == GroupElement(BsElement(3, 0, 9, 0)));
    CHECK(quotient_map(WreathZElement({{0, 5}}, 1), kL3) == GroupElement(LampElement(3, {{0, 2}}, 1)));
    CHECK_THROWS_AS(quotient_map(id, kZZ), InvalidTarget);
}

TEST_CASE("quotient_map is a homomorphism")
{
    oracle::Gen gen(6);
    for (const auto& target : {kBs2, kBs3, kL2, kL3}) {
        CHECK(quotient_map(std::get<WreathZElement>(kZZ.a()), target) == target.a());
        CHECK(quotient_map(std::get<WreathZElement>(kZZ.t()), target) == target.t());
        for (int i = 0; i < 250; ++i) {
            const auto g = std::get<WreathZElement>(gen.element(kZZ, 12));
            const auto h = std::get<WreathZElement>(gen.element(kZZ, 12));
            const auto gh = std::get<WreathZElement>(multiply(g, h));
            CHECK(quotient_map(gh, target) == multiply(quotient_map(g, target), quotient_map(h, target)));
        }
    }
}

TEST_CASE("canonical encoding")
{
    CHECK(canonical_encode(kBs2.identity()) == canonical_encode(multiply(kBs2.a(), invert(kBs2.a()))));
    CHECK(canonical_encode(BsElement(2, 0, 1, 0)) != canonical_encode(BsElement(2, 0, 2, 0)));
    CHECK(canonical_encode(kBs2.a()) != canonical_encode(kBs3.a()));
    oracle::Gen gen(7);
    for (const auto& group : families()) {
        for (int i = 0; i < 150; ++i) {
            const auto g = gen.element(group, 16);
            CHECK(canonical_decode(canonical_encode(g)) == g);
            const auto h = gen.element(group, 4);
            CHECK((canonical_encode(g) == canonical_encode(h)) == (g == h));
        }
    }
    CHECK_THROWS_AS(canonical_decode("Q"), ParseError);
    CHECK_THROWS_AS(canonical_decode(""), ParseError);
}

TEST_CASE("words and selectors")
{
    const Word w = parse_word("x^-1 y^3 * z . x");
    REQUIRE(w.size() == 4);
    CHECK(w[0] == Letter{"x", -1});
    CHECK(w[1] == Letter{"y", 3});
    CHECK(word_length(w) == 6);
    CHECK(parse_word(to_string(w)) == w);
    CHECK_THROWS_AS(parse_word("x^"), ParseError);
    CHECK_THROWS_AS(parse_word("^2"), ParseError);

    for (const auto& g : families())
        CHECK(GroupInstance::parse(g.selector()) == g);
    CHECK(GroupInstance::parse("lp:3") == kL3);
    CHECK(kBs3.name() == "BS(1,3)");
    CHECK(kL2.name() == "L_2");
    CHECK_THROWS_AS(GroupInstance::parse("bs:1"), ParseError);
    CHECK_THROWS_AS(GroupInstance::parse("free:2"), ParseError);
}

TEST_CASE("generator sets")
{
    const auto l2 = GeneratorSet::canonical(kL2);
    CHECK(l2.closure().size() == 3);  // a = a^-1
    const auto bs = GeneratorSet::canonical(kBs2);
    CHECK(bs.closure().size() == 4);
    for (const auto& [label, g] : bs.generators()) {
        const auto inv = invert(g);
        CHECK(std::find(bs.closure().begin(), bs.closure().end(), inv) != bs.closure().end());
    }
    CHECK_THROWS_AS(GeneratorSet(kBs2, {{"x", kBs2.a()}, {"x", kBs2.t()}}), PreconditionViolation);
    CHECK_THROWS_AS(GeneratorSet(kBs2, {{"x", kBs3.a()}}), GroupMismatch);
    const auto custom = GeneratorSet::from_words(kBs3, {{"x", parse_word("a t t")}, {"y", parse_word("t")}});
    CHECK(custom.element("x") == word(kBs3, "a t^2"));
    CHECK_THROWS_AS(custom.element("a"), UnknownLabel);
}

TEST_CASE("quotients are onto the ball of the same radius")
{
    // Every element of the radius-R ball of a quotient is the image of an
    // element of the radius-R ball of Z wr Z.
    for (const auto& target : {kBs2, kBs3, kL2, kL3}) {
        std::set<std::string> image, ball;
        std::vector<std::pair<GroupElement, GroupElement>> layer{{kZZ.identity(), target.identity()}};
        const auto tg = std::vector<GroupElement>{target.a(), invert(target.a()), target.t(), invert(target.t())};
        const std::vector<GroupElement> zl{kZZ.a(), invert(kZZ.a()), kZZ.t(), invert(kZZ.t())};
        for (int r = 0; r <= 5; ++r) {
            std::vector<std::pair<GroupElement, GroupElement>> next;
            for (const auto& [z, q] : layer) {
                image.insert(canonical_encode(quotient_map(std::get<WreathZElement>(z), target)));
                ball.insert(canonical_encode(q));
                if (r < 5)
                    for (std::size_t i = 0; i < 4; ++i)
                        next.emplace_back(multiply(z, zl[i]), multiply(q, tg[i]));
            }
            layer = std::move(next);
        }
        CHECK(image == ball);
    }
}
