#include "mgrowth/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "mgrowth/certificate.hpp"
#include "mgrowth/errors.hpp"
#include "mgrowth/roots.hpp"
#include "mgrowth/series.hpp"
#include "mgrowth/tree.hpp"

namespace mgrowth {

namespace {

Rational ten_to_minus(unsigned digits) { return Rational(Integer(1), ipow(10, digits)); }

struct Check {
    std::string id;
    int criterion;
    std::function<void(CheckResult&, const AcceptanceOptions&)> run;
};

void fail(CheckResult& r, const std::string& message) { r.failures.push_back(message); }

int series_radius(const AcceptanceOptions& o, int pinned)
{
    if (o.radius)
        return *o.radius;
    return o.quick ? std::min(pinned, 10) : pinned;
}

void series_check(CheckResult& r, const AcceptanceOptions& o, const GroupInstance& group, const RationalFn& series,
                  int pinned)
{
    const int radius = series_radius(o, pinned);
    const SphereCounts counts = enumerate_spheres(GeneratorSet::canonical(group), radius,
                                                  EnumerationOptions{o.max_elements, o.workers});
    const SeriesComparison cmp = compare_series_to_counts(series, counts);
    if (cmp.first_mismatch) {
        const auto& e = cmp.entries[static_cast<std::size_t>(*cmp.first_mismatch)];
        fail(r, "radius " + std::to_string(e.radius) + ": series " + to_string(e.coefficient) + ", BFS "
                    + std::to_string(e.sphere));
    }
    for (int bad : cmp.formula_errors)
        fail(r, "non-integral or negative coefficient at radius " + std::to_string(bad));
    std::ostringstream s;
    s << group.name() << " R=" << radius << " balls(R)=" << counts.balls.back();
    r.summary = s.str();
}

// ---------------------------------------------------------------------------
// random elements and vertices

struct Sampler {
    std::mt19937_64 rng;

    GroupElement element(const GroupInstance& g, int max_length)
    {
        std::uniform_int_distribution<int> len(0, max_length);
        std::uniform_int_distribution<int> pick(0, 3);
        GroupElement out = g.identity();
        const GroupElement a = g.a(), t = g.t();
        const GroupElement letters[] = {a, invert(a), t, invert(t)};
        for (int i = len(rng); i > 0; --i)
            out = multiply(out, letters[pick(rng)]);
        return out;
    }

    GroupElement elliptic(const GroupInstance& g, int max_length)
    {
        GroupElement e = element(g, max_length);
        return multiply(e, power(g.t(), -phi_exponent(e)));
    }

    TreeVertex vertex(const GroupInstance& g, int max_length)
    {
        return act_on_vertex(element(g, max_length), base_vertex(g));
    }

    TreeVertex descendant(const TreeVertex& v, int max_depth)
    {
        std::uniform_int_distribution<int> depth(1, max_depth);
        TreeVertex u = v;
        for (int i = depth(rng); i > 0; --i) {
            auto kids = children(u);
            std::uniform_int_distribution<std::size_t> pick(0, kids.size() - 1);
            u = kids[pick(rng)];
        }
        return u;
    }
};

std::vector<GroupInstance> tree_groups()
{
    return {GroupInstance::baumslag_solitar(2), GroupInstance::baumslag_solitar(3),
            GroupInstance::baumslag_solitar(5), GroupInstance::lamplighter(2), GroupInstance::lamplighter(3)};
}

// ---------------------------------------------------------------------------

void rates_check(CheckResult& r, const AcceptanceOptions&)
{
    const Rational tol = ten_to_minus(12);
    const RootInterval omega1 = unique_positive_root(family_polynomial(FamilyKind::T, 1), tol);
    if (!(omega1.is_exact() && omega1.lower == 2))
        fail(r, "omega_1 is not exactly 2");
    const GrowthRate bs3 = growth_rate(canonical_growth_series(GroupInstance::baumslag_solitar(3)), tol);
    if (!(bs3.rate.is_exact() && bs3.rate.lower == 2))
        fail(r, "omega(BS(1,3)) is not exactly 2");

    auto rate_equals = [&](const GroupInstance& g, const Polynomial& p, const std::string& name) {
        const GrowthRate rate = growth_rate(canonical_growth_series(g), tol);
        const RootInterval ref = unique_positive_root(p, tol);
        if (rate.rate.width() > tol)
            fail(r, g.name() + " rate interval wider than 1e-12");
        if (distance_bound(rate.rate, ref) >= tol || compare_roots(rate.rate, ref) != Order::Equal)
            fail(r, "omega(" + g.name() + ") != " + name);
        return rate;
    };
    const GrowthRate l2 = rate_equals(GroupInstance::lamplighter(2), Polynomial{-1, -1, 1}, "golden ratio");
    rate_equals(GroupInstance::wreath_z(), Polynomial{-1, -2, 1}, "1 + sqrt 2");
    rate_equals(GroupInstance::baumslag_solitar(2), Polynomial{-2, 0, -1, 1}, "beta");

    const RootInterval beta = unique_positive_root(Polynomial{-2, 0, -1, 1}, tol);
    if (beta.width() > tol || !beta.verify())
        fail(r, "beta interval not certified at 1e-12");
    const Rational reference = parse_rational("169572/100000");
    const Rational slack = parse_rational("15/100000");
    if (abs(beta.lower - reference) >= slack || abs(beta.upper - reference) >= slack)
        fail(r, "|beta - 1.69572| >= 1.5e-4");

    const RootInterval psi = unique_positive_root(reciprocal_polynomial(Polynomial{1, 0, -1, -1}), tol);
    if (compare_roots(psi, l2.rate) != Order::Less || !(psi.upper < l2.rate.lower))
        fail(r, "psi is not below the golden ratio");

    r.summary = "omega_1 = 2, phi = " + to_decimal(l2.rate.lower, 12) + ", beta = " + to_decimal(beta.lower, 12)
                + ", psi = " + to_decimal(psi.lower, 12);
}

void lemma11b_check(CheckResult& r, const AcceptanceOptions&)
{
    const Rational tol = ten_to_minus(12);
    const Rational agreement = ten_to_minus(10);
    for (int k = 1; k <= 5; ++k) {
        const long p = 2 * k + 1;
        const RootInterval omega = unique_positive_root(family_polynomial(FamilyKind::T, k), tol);
        const GrowthRate bs = growth_rate(bs_growth_series(p), tol);
        if (distance_bound(bs.rate, omega) >= agreement)
            fail(r, "BS(1," + std::to_string(p) + "): 1/pole differs from omega_" + std::to_string(k));
        const RootInterval rk = unique_positive_root(family_polynomial(FamilyKind::R, k), tol);
        const CertifiedInterval inverse{reciprocal_polynomial(rk.polynomial), 1 / rk.upper, 1 / rk.lower};
        if (distance_bound(inverse, omega) >= agreement)
            fail(r, "1/root(R_" + std::to_string(k) + ") differs from omega_" + std::to_string(k));
        const GrowthRate lp = growth_rate(canonical_growth_series(GroupInstance::lamplighter(p)), tol);
        if (distance_bound(lp.rate, inverse) >= agreement)
            fail(r, "L_" + std::to_string(p) + ": rate differs from 1/root(R_" + std::to_string(k) + ")");
    }
    r.summary = "k = 1..5, BS and lamplighter sides within 1e-10";
}

void lemma12_check(CheckResult& r, const AcceptanceOptions& o)
{
    const int kmax = o.kmax.value_or(50);
    const InequalityChainReport chain = verify_inequality_chain(kmax, ten_to_minus(12), ten_to_minus(9));
    for (const auto& row : chain.rows)
        if (!row.holds())
            fail(r, "chain fails at k = " + std::to_string(row.k));
    if (!chain.converged())
        fail(r, "|omega_" + std::to_string(kmax) + " - (1 + sqrt 2)| <= " + to_decimal(chain.convergence_gap, 15)
                    + " is not < 1e-9");
    int identities = 0;
    for (const auto& check : identity_suite()) {
        ++identities;
        if (!check.passed)
            fail(r, "identity " + check.name + (check.k ? " at k = " + std::to_string(*check.k) : ""));
    }
    r.summary = "k_max = " + std::to_string(kmax) + ", gap <= " + to_decimal(chain.convergence_gap, 15) + ", "
                + std::to_string(identities) + " identities";
}

void certificates_check(CheckResult& r, const AcceptanceOptions& o)
{
    struct Item {
        CaseId id;
        GroupInstance group;
    };
    const std::vector<Item> items{
        {CaseId::Theorem1, GroupInstance::baumslag_solitar(2)}, {CaseId::Case1, GroupInstance::baumslag_solitar(3)},
        {CaseId::Case1, GroupInstance::baumslag_solitar(5)},    {CaseId::Case1, GroupInstance::baumslag_solitar(7)},
        {CaseId::Case2C, GroupInstance::baumslag_solitar(5)},   {CaseId::Case2D, GroupInstance::baumslag_solitar(5)},
    };
    std::uint64_t products = 0;
    for (const auto& item : items) {
        Certificate c = preset_certificate(item.id, item.group);
        attach_freeness(c, 6, o.max_elements);
        products += c.freeness ? c.freeness->products : 0;
        const std::string where = to_string(item.id) + " on " + item.group.name();
        if (!c.passed)
            fail(r, where + ": " + c.reason);
        for (const auto& e : c.expectations)
            if (!e.holds)
                fail(r, where + ": bound does not match " + e.name);
        if (c.freeness && !c.freeness->distinct)
            fail(r, where + ": products collide by depth 6");
    }

    // a cycles the four second-generation descendants of the base of BS(1,2).
    const GroupInstance bs2 = GroupInstance::baumslag_solitar(2);
    const TreeVertex start = act_on_vertex(power(bs2.t(), 2), base_vertex(bs2));
    const auto orbit = vertex_orbit(bs2.a(), start, 8);
    bool covers = orbit.size() == 4;
    for (const auto& v : orbit)
        covers = covers && level(v) == 2 && is_descendant(v, base_vertex(bs2));
    if (!covers)
        fail(r, "a does not cycle the level-2 descendants of BS(1,2) with order 4");

    r.summary = std::to_string(items.size()) + " certificates, " + std::to_string(products)
                + " products checked to depth 6";
}

void lemma4_check(CheckResult& r, const AcceptanceOptions& o)
{
    Sampler sampler{std::mt19937_64(o.seed ^ 0x4c34)};
    const std::vector<GroupInstance> groups{GroupInstance::baumslag_solitar(3), GroupInstance::baumslag_solitar(5),
                                            GroupInstance::baumslag_solitar(7), GroupInstance::lamplighter(3),
                                            GroupInstance::lamplighter(5)};
    int moved = 0;
    for (const auto& g : groups) {
        for (int i = 0; i < 1000; ++i) {
            const GroupElement e = sampler.elliptic(g, 8);
            const TreeVertex v = sampler.vertex(g, 6);
            const OrbitCheck check = lemma4_orbit_check(e, v);
            moved += check.fixed ? 0 : 1;
            if (!check.passed)
                fail(r, g.name() + ": " + to_string(e) + " at " + to_string(v));
        }
    }
    r.summary = "5000 pairs, " + std::to_string(moved) + " with a moved vertex";
}

void tree_check(CheckResult& r, const AcceptanceOptions& o)
{
    Sampler sampler{std::mt19937_64(o.seed ^ 0x7ee)};
    const auto groups = tree_groups();
    constexpr int kTrials = 10'000;
    int upward = 0;
    for (int i = 0; i < kTrials; ++i) {
        const GroupInstance& g = groups[static_cast<std::size_t>(i) % groups.size()];
        const GroupElement x = sampler.element(g, 8);
        const TreeVertex v = sampler.vertex(g, 8);

        if (level(act_on_vertex(x, v)) != level(v) + phi_exponent(x))
            fail(r, "orientation: " + to_string(x) + " at " + to_string(v));

        const GroupElement z = sampler.elliptic(g, 8);
        TreeVertex fixed = v;
        for (int d = 0; d < kDefaultDepthBound && !(act_on_vertex(z, fixed) == fixed); ++d)
            fixed = parent(fixed);
        if (act_on_vertex(z, fixed) == fixed) {
            ++upward;
            const TreeVertex up = parent(fixed);
            if (!(act_on_vertex(z, up) == up))
                fail(r, "fixed set not up-closed: " + to_string(z) + " at " + to_string(fixed));
        }

        const TreeVertex u = sampler.descendant(v, 4);
        if (!is_descendant(act_on_vertex(x, u), act_on_vertex(x, v)))
            fail(r, "descendant equivariance: " + to_string(x) + " at " + to_string(v));

        const TreeVertex w = sampler.vertex(g, 8);
        const TreeVertex m = sampler.vertex(g, 8);
        if (tree_distance(v, w) > tree_distance(v, m) + tree_distance(m, w))
            fail(r, "triangle inequality: " + to_string(v) + ", " + to_string(m) + ", " + to_string(w));
    }
    if (upward < kTrials)
        fail(r, "only " + std::to_string(upward) + " up-closure assertions were exercised");
    r.summary = std::to_string(kTrials) + " assertions per property over " + std::to_string(groups.size())
                + " trees";
}

const std::vector<Check>& checks()
{
    static const std::vector<Check> all{
        {"series-l2", 1,
         [](CheckResult& r, const AcceptanceOptions& o) {
             series_check(r, o, GroupInstance::lamplighter(2), canonical_growth_series(GroupInstance::lamplighter(2)),
                          14);
         }},
        {"series-l3", 1,
         [](CheckResult& r, const AcceptanceOptions& o) {
             series_check(r, o, GroupInstance::lamplighter(3), canonical_growth_series(GroupInstance::lamplighter(3)),
                          12);
         }},
        {"series-l5", 1,
         [](CheckResult& r, const AcceptanceOptions& o) {
             series_check(r, o, GroupInstance::lamplighter(5), canonical_growth_series(GroupInstance::lamplighter(5)),
                          10);
         }},
        {"series-bs3", 2,
         [](CheckResult& r, const AcceptanceOptions& o) {
             series_check(r, o, GroupInstance::baumslag_solitar(3), bs_growth_series(3), 12);
         }},
        {"series-bs5", 2,
         [](CheckResult& r, const AcceptanceOptions& o) {
             series_check(r, o, GroupInstance::baumslag_solitar(5), bs_growth_series(5), 10);
         }},
        {"series-bs7", 2,
         [](CheckResult& r, const AcceptanceOptions& o) {
             series_check(r, o, GroupInstance::baumslag_solitar(7), bs_growth_series(7), 10);
         }},
        {"series-bs2", 2,
         [](CheckResult& r, const AcceptanceOptions& o) {
             series_check(r, o, GroupInstance::baumslag_solitar(2), bs_growth_series(2), 12);
         }},
        {"series-zz", 3,
         [](CheckResult& r, const AcceptanceOptions& o) {
             series_check(r, o, GroupInstance::wreath_z(), wreath_zz_series(), 12);
             if (!(wreath_zz_series() == parry_wreath(RationalFn(Polynomial{1, 1}, Polynomial{1, -1}))))
                 fail(r, "closed form differs from the wreath transform of (1+x)/(1-x)");
         }},
        {"rates", 4, rates_check},
        {"lemma11b", 5, lemma11b_check},
        {"lemma12", 6, lemma12_check},
        {"certificates", 7, certificates_check},
        {"lemma4", 8, lemma4_check},
        {"tree-invariants", 9, tree_check},
    };
    return all;
}

}  // namespace

bool AcceptanceReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::pair<int, bool>> AcceptanceReport::by_criterion() const
{
    std::map<int, bool> grouped;
    for (const auto& c : checks) {
        auto [it, inserted] = grouped.emplace(c.criterion, c.passed);
        if (!inserted)
            it->second = it->second && c.passed;
    }
    return {grouped.begin(), grouped.end()};
}

std::vector<std::string> acceptance_check_ids()
{
    std::vector<std::string> ids;
    for (const auto& c : checks())
        ids.push_back(c.id);
    return ids;
}

CheckResult run_acceptance_check(const std::string& id, const AcceptanceOptions& options)
{
    for (const auto& check : checks()) {
        if (check.id != id)
            continue;
        CheckResult result;
        result.id = id;
        result.criterion = check.criterion;
        const auto start = std::chrono::steady_clock::now();
        try {
            check.run(result, options);
        } catch (const Error& e) {
            result.failures.push_back(std::string("error: ") + e.what());
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.passed = result.failures.empty();
        return result;
    }
    throw ParseError("unknown acceptance check '" + id + "'");
}

AcceptanceReport run_acceptance(const AcceptanceOptions& options)
{
    const auto known = acceptance_check_ids();
    for (const auto& id : options.only)
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw ParseError("unknown acceptance check '" + id + "'");
    AcceptanceReport report;
    for (const auto& id : known)
        if (options.only.empty() || std::find(options.only.begin(), options.only.end(), id) != options.only.end())
            report.checks.push_back(run_acceptance_check(id, options));
    return report;
}

}  // namespace mgrowth
