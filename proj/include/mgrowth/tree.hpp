#pragma once

// Coset models of the Bass-Serre trees of BS(1,n) and L_p, the action of
// the group on them, and the elliptic/hyperbolic geometry used by the
// ping-pong certificates.  Levels grow downward: children sit one level
// below (level + 1) their unique parent.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mgrowth/group.hpp"

namespace mgrowth {

/// Search bound, in levels, for every ascent or descent.
inline constexpr int kDefaultDepthBound = 64;

/// Coset (n^k, b)<a>: level k and b reduced mod n^k Z, so 0 <= residue < n^k.
struct BsVertex {
    long base = 2;
    std::int64_t level = 0;
    Rational residue;

    friend bool operator==(const BsVertex&, const BsVertex&) = default;
};

/// Coset of (f, s) in L_p: level s and the lamps of f at positions < s.
struct LampVertex {
    long modulus = 2;
    std::int64_t level = 0;
    Lamps prefix;

    friend bool operator==(const LampVertex&, const LampVertex&) = default;
};

using TreeVertex = std::variant<BsVertex, LampVertex>;

/// The vertex fixed by <a>.  Throws Unsupported for Z wr Z.
TreeVertex base_vertex(const GroupInstance& group);
GroupInstance tree_group(const TreeVertex& v);

std::int64_t level(const TreeVertex& v);
TreeVertex parent(const TreeVertex& v);
/// Children in residue order: child j extends the coset by a^j t.
std::vector<TreeVertex> children(const TreeVertex& v);

struct Neighbors {
    TreeVertex parent;
    std::vector<TreeVertex> children;
};
Neighbors vertex_neighbors(const TreeVertex& v);

/// The ascendant of v at level `target` (<= level(v)).
TreeVertex ancestor_at_level(const TreeVertex& v, std::int64_t target);

/// u lies strictly below v in v's subtree.
bool is_descendant(const TreeVertex& u, const TreeVertex& v);
bool comparable(const TreeVertex& u, const TreeVertex& v);

struct Meet {
    TreeVertex vertex;
    std::int64_t distance = 0;
};

/// Lowest common ascendant and the graph distance.  Throws GroupMismatch.
Meet tree_meet(const TreeVertex& u, const TreeVertex& w);
std::int64_t tree_distance(const TreeVertex& u, const TreeVertex& w);

/// Left multiplication of the coset by g.  Throws GroupMismatch.
TreeVertex act_on_vertex(const GroupElement& g, const TreeVertex& v);

enum class ElementKind { Elliptic, Hyperbolic };

struct Classification {
    ElementKind kind = ElementKind::Elliptic;
    int sign = 0;  // +1 positive, -1 negative, 0 elliptic
    std::int64_t translation_length = 0;
    std::optional<TreeVertex> fixed_vertex;  // elliptic only

    bool positive_hyperbolic() const { return kind == ElementKind::Hyperbolic && sign > 0; }
};

/// Elliptic iff phi(g) = 0.  The fixed witness is the first ascendant of the
/// base vertex fixed by g; ResourceExceeded past depth_bound levels.
Classification classify_element(const GroupElement& g, int depth_bound = kDefaultDepthBound);

/// The lowest ascendant q of v with d(q, xq) = |phi(x)|, which lies on the
/// axis of x.  Throws PreconditionViolation for elliptic x.
TreeVertex axis_projection(const GroupElement& x, const TreeVertex& v, int depth_bound = kDefaultDepthBound);

/// The unique vertex of the axis of x at the given level.
TreeVertex axis_vertex_at_level(const GroupElement& x, std::int64_t target, int depth_bound = kDefaultDepthBound);

/// The lowest vertex of L_x fixed by the elliptic z.  Fixed sets are
/// up-closed, so the answer is found by ascending the axis from depth_bound
/// levels below its projection of the base.  PreconditionViolation when z
/// fixes that whole window.
TreeVertex lowest_fixed_vertex_on_axis(const GroupElement& z, const GroupElement& x,
                                       int depth_bound = kDefaultDepthBound);

/// The lowest vertex of L_x n L_y.  PreconditionViolation when the axes
/// agree throughout the searched window.
TreeVertex lowest_common_axis_vertex(const GroupElement& x, const GroupElement& y,
                                     int depth_bound = kDefaultDepthBound);

/// "(k, r)" for BS, "(s, {pos:val,...})" for lamps.
std::string to_string(const TreeVertex& v);

}  // namespace mgrowth
