#include "mgrowth/tree.hpp"

#include <map>
#include <sstream>

#include "mgrowth/errors.hpp"

namespace mgrowth {

namespace {

Rational reduce(const Rational& r, long base, std::int64_t level)
{
    const Rational m = rpow(base, level);
    Rational out = r - m * Rational(floor(r / m));
    out.canonicalize();
    return out;
}

Lamps restrict_below(const Lamps& lamps, std::int64_t bound)
{
    Lamps out;
    for (const auto& lamp : lamps)
        if (lamp.first < bound)
            out.push_back(lamp);
    return out;
}

long residue_mod(long value, long modulus)
{
    long r = value % modulus;
    return r < 0 ? r + modulus : r;
}

void check_same_tree(const TreeVertex& u, const TreeVertex& w)
{
    if (!(tree_group(u) == tree_group(w)))
        throw GroupMismatch("vertices of different trees: " + to_string(u) + ", " + to_string(w));
}

}  // namespace

TreeVertex base_vertex(const GroupInstance& group)
{
    switch (group.family()) {
    case Family::BaumslagSolitar: return BsVertex{*group.parameter(), 0, 0};
    case Family::Lamplighter: return LampVertex{*group.parameter(), 0, {}};
    case Family::WreathZ: break;
    }
    throw Unsupported("no Bass-Serre tree model for " + group.name());
}

GroupInstance tree_group(const TreeVertex& v)
{
    if (const auto* b = std::get_if<BsVertex>(&v))
        return GroupInstance::baumslag_solitar(b->base);
    return GroupInstance::lamplighter(std::get<LampVertex>(v).modulus);
}

std::int64_t level(const TreeVertex& v)
{
    return std::visit([](const auto& x) { return x.level; }, v);
}

TreeVertex ancestor_at_level(const TreeVertex& v, std::int64_t target)
{
    if (target > level(v))
        throw PreconditionViolation("ancestor level below the vertex");
    if (const auto* b = std::get_if<BsVertex>(&v))
        return BsVertex{b->base, target, reduce(b->residue, b->base, target)};
    const auto& l = std::get<LampVertex>(v);
    return LampVertex{l.modulus, target, restrict_below(l.prefix, target)};
}

TreeVertex parent(const TreeVertex& v) { return ancestor_at_level(v, level(v) - 1); }

std::vector<TreeVertex> children(const TreeVertex& v)
{
    std::vector<TreeVertex> out;
    if (const auto* b = std::get_if<BsVertex>(&v)) {
        const Rational step = rpow(b->base, b->level);
        for (long j = 0; j < b->base; ++j) {
            Rational r = b->residue + step * j;
            r.canonicalize();
            out.push_back(BsVertex{b->base, b->level + 1, r});
        }
        return out;
    }
    const auto& l = std::get<LampVertex>(v);
    for (long j = 0; j < l.modulus; ++j) {
        Lamps prefix = l.prefix;
        if (j != 0)
            prefix.emplace_back(l.level, j);
        out.push_back(LampVertex{l.modulus, l.level + 1, std::move(prefix)});
    }
    return out;
}

Neighbors vertex_neighbors(const TreeVertex& v) { return {parent(v), children(v)}; }

bool is_descendant(const TreeVertex& u, const TreeVertex& v)
{
    check_same_tree(u, v);
    return level(u) > level(v) && ancestor_at_level(u, level(v)) == v;
}

bool comparable(const TreeVertex& u, const TreeVertex& v)
{
    return u == v || is_descendant(u, v) || is_descendant(v, u);
}

Meet tree_meet(const TreeVertex& u, const TreeVertex& w)
{
    check_same_tree(u, w);
    std::int64_t m = std::min(level(u), level(w));
    TreeVertex x = ancestor_at_level(u, m);
    TreeVertex y = ancestor_at_level(w, m);
    while (!(x == y)) {
        --m;
        x = ancestor_at_level(x, m);
        y = ancestor_at_level(y, m);
    }
    return {x, (level(u) - m) + (level(w) - m)};
}

std::int64_t tree_distance(const TreeVertex& u, const TreeVertex& w) { return tree_meet(u, w).distance; }

TreeVertex act_on_vertex(const GroupElement& g, const TreeVertex& v)
{
    if (!(group_of(g) == tree_group(v)))
        throw GroupMismatch(to_string(g) + " does not act on the tree of " + tree_group(v).name());
    if (const auto* b = std::get_if<BsVertex>(&v)) {
        const auto& e = std::get<BsElement>(g);
        const std::int64_t target = checked_add(b->level, e.k());
        Rational image = rpow(b->base, e.k()) * b->residue + e.translation();
        return BsVertex{b->base, target, reduce(image, b->base, target)};
    }
    const auto& l = std::get<LampVertex>(v);
    const auto& e = std::get<LampElement>(g);
    const std::int64_t target = checked_add(l.level, e.shift());
    std::map<std::int64_t, long> sum;
    for (const auto& [pos, val] : e.lamps())
        sum[pos] += val;
    for (const auto& [pos, val] : l.prefix)
        sum[checked_add(pos, e.shift())] += val;
    Lamps prefix;
    for (const auto& [pos, val] : sum) {
        const long r = residue_mod(val, l.modulus);
        if (r != 0 && pos < target)
            prefix.emplace_back(pos, r);
    }
    return LampVertex{l.modulus, target, std::move(prefix)};
}

Classification classify_element(const GroupElement& g, int depth_bound)
{
    const std::int64_t phi = phi_exponent(g);
    if (phi != 0)
        return {ElementKind::Hyperbolic, phi > 0 ? 1 : -1, phi > 0 ? phi : -phi, std::nullopt};
    TreeVertex q = base_vertex(group_of(g));
    for (int depth = 0; depth <= depth_bound; ++depth) {
        if (act_on_vertex(g, q) == q)
            return {ElementKind::Elliptic, 0, 0, q};
        q = parent(q);
    }
    throw ResourceExceeded("no fixed vertex of " + to_string(g) + " within " + std::to_string(depth_bound)
                               + " levels above the base",
                           depth_bound);
}

TreeVertex axis_projection(const GroupElement& x, const TreeVertex& v, int depth_bound)
{
    const std::int64_t phi = phi_exponent(x);
    if (phi == 0)
        throw PreconditionViolation(to_string(x) + " is elliptic and has no axis");
    const std::int64_t length = phi > 0 ? phi : -phi;
    TreeVertex q = v;
    for (int depth = 0; depth <= depth_bound; ++depth) {
        if (tree_distance(q, act_on_vertex(x, q)) == length)
            return q;
        q = parent(q);
    }
    throw ResourceExceeded("axis of " + to_string(x) + " not reached within " + std::to_string(depth_bound)
                               + " levels",
                           depth_bound);
}

TreeVertex axis_vertex_at_level(const GroupElement& x, std::int64_t target, int depth_bound)
{
    const GroupElement down = phi_exponent(x) < 0 ? invert(x) : x;
    TreeVertex q = axis_projection(down, base_vertex(group_of(x)), depth_bound);
    while (level(q) < target)
        q = act_on_vertex(down, q);
    return ancestor_at_level(q, target);
}

TreeVertex lowest_fixed_vertex_on_axis(const GroupElement& z, const GroupElement& x, int depth_bound)
{
    if (phi_exponent(z) != 0)
        throw PreconditionViolation(to_string(z) + " is not elliptic");
    const TreeVertex q0 = axis_projection(x, base_vertex(group_of(x)), depth_bound);
    TreeVertex q = axis_vertex_at_level(x, level(q0) + depth_bound, depth_bound);
    if (act_on_vertex(z, q) == q)
        throw PreconditionViolation(to_string(z) + " fixes the axis of " + to_string(x)
                                    + " throughout the searched window");
    for (int step = 0; step < 2 * depth_bound; ++step) {
        q = parent(q);
        if (act_on_vertex(z, q) == q)
            return q;
    }
    throw ResourceExceeded("no vertex of the axis of " + to_string(x) + " fixed by " + to_string(z), depth_bound);
}

TreeVertex lowest_common_axis_vertex(const GroupElement& x, const GroupElement& y, int depth_bound)
{
    const TreeVertex base = base_vertex(group_of(x));
    const std::int64_t deep = std::max(level(axis_projection(x, base, depth_bound)),
                                       level(axis_projection(y, base, depth_bound)))
                              + depth_bound;
    const TreeVertex dx = axis_vertex_at_level(x, deep, depth_bound);
    const TreeVertex dy = axis_vertex_at_level(y, deep, depth_bound);
    if (dx == dy)
        throw PreconditionViolation("the axes of " + to_string(x) + " and " + to_string(y)
                                    + " agree throughout the searched window");
    return tree_meet(dx, dy).vertex;
}

std::string to_string(const TreeVertex& v)
{
    std::ostringstream out;
    if (const auto* b = std::get_if<BsVertex>(&v)) {
        out << '(' << b->level << ", " << to_string(b->residue) << ')';
        return out.str();
    }
    const auto& l = std::get<LampVertex>(v);
    out << '(' << l.level << ", {";
    for (std::size_t i = 0; i < l.prefix.size(); ++i)
        out << (i ? "," : "") << l.prefix[i].first << ':' << l.prefix[i].second;
    out << "})";
    return out.str();
}

}  // namespace mgrowth
