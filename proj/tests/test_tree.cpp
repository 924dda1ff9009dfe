#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "mgrowth/errors.hpp"
#include "mgrowth/tree.hpp"
#include "oracle.hpp"

using namespace mgrowth;

namespace {

const std::vector<GroupInstance>& tree_groups()
{
    static const std::vector<GroupInstance> groups = {
        GroupInstance::parse("bs:2"),          GroupInstance::parse("bs:3"),
        GroupInstance::parse("bs:5"),          GroupInstance::parse("lamplighter:2"),
        GroupInstance::parse("lamplighter:3"),
    };
    return groups;
}

GroupElement word(const GroupInstance& g, const char* text)
{
    return element_from_word(GeneratorSet::canonical(g), parse_word(text));
}

BsVertex bs(long n, std::int64_t k, Rational r) { return BsVertex{n, k, std::move(r)}; }

// gH = hH iff g^-1 h lies in the vertex stabilizer H of the base: integer
// translations in BS(1,n), lamps at positions >= 0 in L_p.
bool same_coset(const GroupElement& g, const GroupElement& h)
{
    const GroupElement q = multiply(invert(g), h);
    if (phi_exponent(q) != 0)
        return false;
    if (const auto* b = std::get_if<BsElement>(&q))
        return b->translation().get_den() == 1;
    const auto& lamps = std::get<LampElement>(q).lamps();
    return std::all_of(lamps.begin(), lamps.end(), [](const auto& l) { return l.first >= 0; });
}

std::string key(const TreeVertex& v) { return to_string(v); }

}  // namespace

TEST_CASE("neighbors")
{
    const auto base = base_vertex(GroupInstance::parse("bs:2"));
    CHECK(base == TreeVertex(bs(2, 0, 0)));
    const auto nb = vertex_neighbors(base);
    CHECK(nb.parent == TreeVertex(bs(2, -1, 0)));
    CHECK(nb.children == std::vector<TreeVertex>{bs(2, 1, 0), bs(2, 1, 1)});

    const auto lamp_base = base_vertex(GroupInstance::parse("lamplighter:3"));
    const auto kids = children(lamp_base);
    REQUIRE(kids.size() == 3);
    CHECK(kids[0] == TreeVertex(LampVertex{3, 1, {}}));
    CHECK(kids[1] == TreeVertex(LampVertex{3, 1, {{0, 1}}}));
    CHECK(kids[2] == TreeVertex(LampVertex{3, 1, {{0, 2}}}));
    CHECK(parent(lamp_base) == TreeVertex(LampVertex{3, -1, {}}));

    CHECK_THROWS_AS(base_vertex(GroupInstance::wreath_z()), Unsupported);
}

TEST_CASE("coset model matches the group action")
{
    oracle::Gen gen(17);
    for (const auto& group : tree_groups()) {
        INFO(group.name());
        const auto base = base_vertex(group);
        for (int trial = 0; trial < 300; ++trial) {
            const auto g = gen.element(group, 10);
            const auto h = gen.element(group, 10);
            CHECK((act_on_vertex(g, base) == act_on_vertex(h, base)) == same_coset(g, h));

            const auto v = act_on_vertex(g, base);
            CHECK(parent(v) == act_on_vertex(multiply(g, invert(group.t())), base));
            std::set<std::string> expected, got;
            const long p = *group.parameter();
            for (long j = 0; j < p; ++j)
                expected.insert(key(act_on_vertex(multiply(g, multiply(power(group.a(), j), group.t())), base)));
            for (const auto& c : children(v))
                got.insert(key(c));
            CHECK(got == expected);
            CHECK(got.size() == static_cast<std::size_t>(p));
        }
    }
}

TEST_CASE("parent of child round trip")
{
    oracle::Gen gen(3);
    for (const auto& group : tree_groups()) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto v = gen.vertex(group, 12);
            for (const auto& c : children(v)) {
                CHECK(parent(c) == v);
                CHECK(level(c) == level(v) + 1);
                CHECK(is_descendant(c, v));
                CHECK_FALSE(is_descendant(v, c));
            }
            if (const auto* b = std::get_if<BsVertex>(&v)) {
                CHECK(b->residue >= 0);
                if (b->level >= 0)
                    CHECK(b->residue < Rational(ipow(b->base, b->level)));
            } else {
                const auto& lv = std::get<LampVertex>(v);
                for (const auto& [pos, val] : lv.prefix) {
                    CHECK(pos < lv.level);
                    CHECK(val % lv.modulus != 0);
                }
            }
        }
    }
}

TEST_CASE("action examples")
{
    const auto g = GroupInstance::parse("bs:2");
    const TreeVertex v10 = bs(2, 1, 0);
    CHECK(act_on_vertex(g.a(), v10) == TreeVertex(bs(2, 1, 1)));
    CHECK(act_on_vertex(power(g.a(), 2), v10) == v10);
    CHECK(act_on_vertex(g.t(), base_vertex(g)) == v10);
    CHECK_THROWS_AS(act_on_vertex(GroupInstance::parse("bs:3").a(), v10), GroupMismatch);
    CHECK(tree_group(v10) == g);
}

TEST_CASE("meet and distance")
{
    const TreeVertex u = bs(2, 1, 0), w = bs(2, 1, 1);
    const auto m = tree_meet(u, w);
    CHECK(m.vertex == TreeVertex(bs(2, 0, 0)));
    CHECK(m.distance == 2);
    CHECK(tree_meet(u, u).distance == 0);
    CHECK(tree_meet(u, u).vertex == u);
    CHECK(tree_distance(u, parent(parent(u))) == 2);
    CHECK_THROWS_AS(tree_meet(u, base_vertex(GroupInstance::parse("bs:3"))), GroupMismatch);

    oracle::Gen gen(23);
    for (const auto& group : tree_groups()) {
        for (int trial = 0; trial < 300; ++trial) {
            const auto a = gen.vertex(group, 8), b = gen.vertex(group, 8), c = gen.vertex(group, 8);
            const auto mab = tree_meet(a, b);
            CHECK(mab.distance == (level(a) - level(mab.vertex)) + (level(b) - level(mab.vertex)));
            CHECK(tree_distance(a, b) == tree_distance(b, a));
            CHECK(tree_distance(a, c) <= tree_distance(a, b) + tree_distance(b, c));
            CHECK((tree_distance(a, b) == 0) == (a == b));
            CHECK(comparable(a, mab.vertex));
            // Isometry.
            const auto g = gen.element(group, 8);
            CHECK(tree_distance(act_on_vertex(g, a), act_on_vertex(g, b)) == tree_distance(a, b));
        }
    }
}

TEST_CASE("ancestors")
{
    const TreeVertex v = bs(3, 3, 17);
    CHECK(ancestor_at_level(v, 3) == v);
    CHECK(ancestor_at_level(v, 2) == TreeVertex(bs(3, 2, 8)));
    CHECK(ancestor_at_level(v, 0) == TreeVertex(bs(3, 0, 0)));
    CHECK_THROWS_AS(ancestor_at_level(v, 4), PreconditionViolation);
    CHECK(comparable(v, ancestor_at_level(v, -2)));
    CHECK_FALSE(comparable(TreeVertex(bs(3, 1, 0)), TreeVertex(bs(3, 1, 1))));
}

TEST_CASE("tree invariants")
{
    oracle::Gen gen(99);
    for (const auto& group : tree_groups()) {
        INFO(group.name());
        for (int trial = 0; trial < 400; ++trial) {
            const auto g = gen.element(group, 10);
            const auto v = gen.vertex(group, 10);
            const auto gv = act_on_vertex(g, v);
            CHECK(level(gv) == level(v) + phi_exponent(g));
            CHECK(tree_distance(act_on_vertex(g, parent(v)), gv) == 1);

            const auto z = gen.elliptic(group, 10);
            if (act_on_vertex(z, v) == v)
                CHECK(act_on_vertex(z, parent(v)) == parent(v));

            const auto& kids = children(v);
            const auto& u = kids[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(kids.size()) - 1))];
            CHECK(is_descendant(act_on_vertex(g, u), gv));
        }
    }
}

TEST_CASE("classification")
{
    const auto bs3 = GroupInstance::parse("bs:3");
    const auto a = classify_element(bs3.a());
    CHECK(a.kind == ElementKind::Elliptic);
    REQUIRE(a.fixed_vertex);
    CHECK(*a.fixed_vertex == base_vertex(bs3));

    const auto t = classify_element(bs3.t());
    CHECK(t.positive_hyperbolic());
    CHECK(t.translation_length == 1);

    const auto l2 = GroupInstance::parse("lamplighter:2");
    const auto at2 = classify_element(word(l2, "a t^2"));
    CHECK(at2.kind == ElementKind::Hyperbolic);
    CHECK(at2.translation_length == 2);
    const auto neg = classify_element(word(l2, "t^-3 a"));
    CHECK(neg.sign == -1);
    CHECK_FALSE(neg.positive_hyperbolic());

    oracle::Gen gen(7);
    for (const auto& group : tree_groups()) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto z = gen.elliptic(group, 12);
            const auto c = classify_element(z);
            CHECK(c.kind == ElementKind::Elliptic);
            REQUIRE(c.fixed_vertex);
            CHECK(act_on_vertex(z, *c.fixed_vertex) == *c.fixed_vertex);
            const auto g = gen.element(group, 12);
            CHECK((classify_element(g).kind == ElementKind::Hyperbolic) == (phi_exponent(g) != 0));
        }
    }
}

TEST_CASE("classification depth bound")
{
    const auto bs2 = GroupInstance::parse("bs:2");
    // t^-40 a t^40 fixes only vertices 40 levels up.
    const auto deep = multiply(power(bs2.t(), -40), multiply(bs2.a(), power(bs2.t(), 40)));
    CHECK(classify_element(deep).kind == ElementKind::Elliptic);
    CHECK_THROWS_AS(classify_element(deep, 10), ResourceExceeded);
}

TEST_CASE("axis projection")
{
    const auto bs2 = GroupInstance::parse("bs:2");
    CHECK(axis_projection(bs2.t(), base_vertex(bs2)) == base_vertex(bs2));
    CHECK(axis_projection(bs2.t(), TreeVertex(bs(2, 1, 1))) == TreeVertex(bs(2, 0, 0)));
    CHECK_THROWS_AS(axis_projection(bs2.a(), base_vertex(bs2)), PreconditionViolation);

    oracle::Gen gen(31);
    for (const auto& group : tree_groups()) {
        for (int trial = 0; trial < 500; ++trial) {
            auto x = gen.element(group, 8);
            if (phi_exponent(x) == 0)
                continue;
            const auto v = gen.vertex(group, 8);
            const auto q = axis_projection(x, v);
            const auto len = std::abs(phi_exponent(x));
            CHECK(tree_distance(q, act_on_vertex(x, q)) == len);
            CHECK((q == v || is_descendant(v, q)));
            // Axis vertices at every level are translated along the axis.
            const auto w = axis_vertex_at_level(x, level(q) + 3);
            CHECK(tree_distance(w, act_on_vertex(x, w)) == len);
            CHECK(comparable(w, q));
        }
    }
}

TEST_CASE("lowest fixed vertex on an axis")
{
    const auto bs2 = GroupInstance::parse("bs:2");
    CHECK(lowest_fixed_vertex_on_axis(bs2.a(), bs2.t()) == base_vertex(bs2));
    const auto bs5 = GroupInstance::parse("bs:5");
    CHECK(lowest_fixed_vertex_on_axis(power(bs5.a(), 2), bs5.t()) == base_vertex(bs5));
    CHECK_THROWS_AS(lowest_fixed_vertex_on_axis(bs2.identity(), bs2.t()), PreconditionViolation);
    CHECK_THROWS_AS(lowest_fixed_vertex_on_axis(bs2.t(), bs2.t()), PreconditionViolation);

    // The answer is fixed, and its axis child is not.
    oracle::Gen gen(41);
    for (const auto& group : tree_groups()) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto z = gen.elliptic(group, 8);
            const auto x = multiply(gen.elliptic(group, 6), group.t());
            TreeVertex v = base_vertex(group);
            try {
                v = lowest_fixed_vertex_on_axis(z, x);
            } catch (const PreconditionViolation&) {
                continue;
            }
            CHECK(act_on_vertex(z, v) == v);
            const auto below = axis_vertex_at_level(x, level(v) + 1);
            CHECK(parent(below) == v);
            CHECK(act_on_vertex(z, below) != below);
        }
    }
}

TEST_CASE("lowest common axis vertex")
{
    const auto bs5 = GroupInstance::parse("bs:5");
    const auto y = bs5.t();
    const auto x = word(bs5, "a t^2");
    const auto v = lowest_common_axis_vertex(x, y);
    CHECK(v == base_vertex(bs5));
    CHECK_THROWS_AS(lowest_common_axis_vertex(y, power(y, 2)), PreconditionViolation);
}

TEST_CASE("vertex strings")
{
    CHECK(to_string(TreeVertex(bs(3, 2, 7))) == "(2, 7)");
    CHECK(to_string(TreeVertex(bs(2, -1, Rational(1, 2)))) == "(-1, 1/2)");
    CHECK(to_string(TreeVertex(LampVertex{2, 1, {{-1, 1}, {0, 1}}})) == "(1, {-1:1,0:1})");
}
