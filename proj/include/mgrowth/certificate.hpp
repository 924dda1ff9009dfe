#pragma once

// Ping-pong certificates for free submonoids and the concrete generating
// sets of the lower-bound constructions, each checked on the tree and
// turned into a growth bound through lemma10_polynomial.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgrowth/ball.hpp"
#include "mgrowth/roots.hpp"
#include "mgrowth/tree.hpp"

namespace mgrowth {

/// Width of the bound intervals attached to passing certificates.
Rational default_bound_tolerance();

/// A reference root the bound is compared with, e.g. omega_2 or 1 + sqrt 2.
struct Expectation {
    enum class Relation { Equal, AtLeast };

    std::string name;
    RootInterval root;
    Relation relation = Relation::Equal;
    bool holds = false;
};

struct Certificate {
    Certificate(std::string name, GroupInstance group, TreeVertex vertex)
        : name(std::move(name)), group(group), vertex(std::move(vertex))
    {
    }

    std::string name;
    GroupInstance group;
    std::vector<std::string> labels;
    /// Each element as a word, over the case's witnesses or over {a, t}.
    std::vector<std::string> words;
    std::vector<GroupElement> elements;
    std::vector<int> lengths;
    TreeVertex vertex;
    bool passed = false;
    std::string reason;
    /// Root of lemma10_polynomial(lengths); present iff passed.
    std::optional<RootInterval> bound;

    std::optional<std::string> failed_hypothesis;
    std::vector<Expectation> expectations;
    std::optional<FreenessResult> freeness;
    int freeness_depth = 0;
    std::vector<std::string> notes;

    /// Verdict, every expectation, and the brute-force freeness check when run.
    bool fully_passed() const;
};

/// Pass iff (i) every x_i is positive hyperbolic, (ii) every x_i(v) is a
/// strict descendant of v and (iii) the x_i(v) are pairwise incomparable.
/// These make the subtrees below the x_i(v) disjoint ping-pong sets, so the
/// x_i freely generate a free monoid.  The check is sufficient, not
/// necessary.  `lengths` must match xs in size.
Certificate check_ping_pong(const std::vector<GroupElement>& xs, const TreeVertex& v, const std::vector<int>& lengths,
                            const Rational& tolerance = default_bound_tolerance());

/// Runs free_monoid_distinctness on the certificate's elements.  A failed
/// certificate with no collision gets a note that failure does not mean the
/// monoid is not free.
void attach_freeness(Certificate& certificate, int depth = 6, std::size_t max_elements = kDefaultMaxElements);

bool is_prime(long n);

struct OrbitCheck {
    bool passed = false;
    bool fixed = false;
    /// g^-k v, ..., g^k v.
    std::vector<TreeVertex> orbit;
};

/// For p = 2k + 1 an odd prime: g(v) = v or g^-k v, ..., g^k v are pairwise
/// distinct.  PreconditionViolation for other groups or hyperbolic g.
OrbitCheck lemma4_orbit_check(const GroupElement& g, const TreeVertex& v);

/// v, g v, g^2 v, ... up to the first return, at most max_length vertices.
std::vector<TreeVertex> vertex_orbit(const GroupElement& g, const TreeVertex& v, std::size_t max_length);

enum class CaseId { Theorem1, Case1, Case2A, Case2B, Case2C, Case2D };

CaseId parse_case_id(std::string_view text);
std::string to_string(CaseId id);
std::vector<CaseId> all_case_ids();

/// Witness words over {a, t} keyed by x, y, z.  Missing keys use defaults:
///   theorem1, case1: x = t, z = a
///   case2a: y = t, x = a t      case2b: y = t, x = a t^3
///   case2c: y = t, x = a t^2    case2d: y = t^2, x = a t^3
using Witnesses = std::map<std::string, Word>;

/// Builds the case's generating set from the witnesses, checks the case's
/// hypotheses, and runs check_ping_pong at the case's vertex with S-lengths
/// over S = {x, z} (theorem1, case1) or {x, y} (case 2).  A failed
/// hypothesis yields a failed certificate naming it.
Certificate preset_certificate(CaseId id, const GroupInstance& group, const Witnesses& overrides = {},
                              const Rational& tolerance = default_bound_tolerance());

}  // namespace mgrowth
