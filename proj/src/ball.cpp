#include "mgrowth/ball.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace mgrowth {

namespace {

struct Product {
    std::string code;
    GroupElement element;
};

// Every neighbor g*s of the frontier, in frontier-major, generator-minor
// order.  Chunks are computed independently and concatenated in order, so
// the output is identical for any worker count.
std::vector<Product> expand(const std::vector<GroupElement>& frontier, const std::vector<GroupElement>& closure,
                            unsigned workers)
{
    if (frontier.empty() || closure.empty())
        return {};
    std::vector<Product> out(frontier.size() * closure.size(), Product{{}, closure.front()});
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < closure.size(); ++j) {
                Product& slot = out[i * closure.size() + j];
                slot.element = multiply(frontier[i], closure[j]);
                slot.code = canonical_encode(slot.element);
            }
    };
    if (workers <= 1 || frontier.size() < 2 * workers) {
        work(0, frontier.size());
        return out;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (frontier.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < frontier.size(); begin += chunk)
        pool.emplace_back(work, begin, std::min(frontier.size(), begin + chunk));
    for (auto& th : pool)
        th.join();
    return out;
}

unsigned resolve_workers(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

SphereCounts make_sphere_counts(std::string group, std::vector<std::string> generators,
                                std::vector<std::uint64_t> spheres)
{
    SphereCounts counts;
    counts.group = std::move(group);
    counts.generators = std::move(generators);
    counts.radius = static_cast<int>(spheres.size()) - 1;
    std::uint64_t total = 0;
    for (auto s : spheres) {
        total += s;
        counts.balls.push_back(total);
    }
    counts.spheres = std::move(spheres);
    return counts;
}

SphereCounts enumerate_spheres(const GeneratorSet& gens, int radius, const EnumerationOptions& options)
{
    if (radius < 0)
        throw PreconditionViolation("radius must be nonnegative");
    const unsigned workers = resolve_workers(options.workers);
    const auto& closure = gens.closure();

    GroupElement identity = gens.group().identity();
    std::unordered_set<std::string> seen{canonical_encode(identity)};
    std::vector<GroupElement> frontier{identity};
    std::vector<std::uint64_t> spheres{1};

    for (int r = 1; r <= radius; ++r) {
        std::vector<GroupElement> next;
        for (Product& p : expand(frontier, closure, workers)) {
            if (seen.insert(std::move(p.code)).second)
                next.push_back(std::move(p.element));
        }
        if (seen.size() > options.max_elements) {
            throw EnumerationBudgetExceeded(
                "stored-element cap of " + std::to_string(options.max_elements) + " exceeded at radius "
                    + std::to_string(r),
                make_sphere_counts(gens.group().selector(), gens.labels(), spheres));
        }
        spheres.push_back(next.size());
        frontier = std::move(next);
    }
    return make_sphere_counts(gens.group().selector(), gens.labels(), std::move(spheres));
}

double RateEstimate::lower() const { return std::min(ball_ratio.get_d(), nth_root); }
double RateEstimate::upper() const { return std::max(ball_ratio.get_d(), nth_root); }

RateEstimate estimate_rate(const SphereCounts& counts)
{
    if (counts.radius < 2)
        throw PreconditionViolation("estimate_rate needs radius >= 2");
    const auto R = static_cast<std::size_t>(counts.radius);
    RateEstimate est;
    est.ball_ratio = Rational(Integer(std::to_string(counts.balls[R])), Integer(std::to_string(counts.balls[R - 1])));
    est.ball_ratio.canonicalize();
    est.nth_root = std::pow(static_cast<double>(counts.balls[R]), 1.0 / static_cast<double>(R));
    return est;
}

FreenessResult free_monoid_distinctness(const std::vector<GroupElement>& gens, int depth, std::size_t max_elements)
{
    if (gens.empty() || depth < 0)
        throw PreconditionViolation("free_monoid_distinctness needs generators and depth >= 0");
    GroupElement identity = group_of(gens.front()).identity();

    struct Node {
        GroupElement value;
        std::vector<std::size_t> word;
    };
    FreenessResult result;
    std::unordered_map<std::string, std::vector<std::size_t>> seen{{canonical_encode(identity), {}}};
    std::vector<Node> level{{identity, {}}};
    result.products = 1;

    for (int d = 1; d <= depth; ++d) {
        std::vector<Node> next;
        next.reserve(level.size() * gens.size());
        for (const Node& node : level) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                Node child{multiply(node.value, gens[i]), node.word};
                child.word.push_back(i);
                auto [it, inserted] = seen.emplace(canonical_encode(child.value), child.word);
                ++result.products;
                if (!inserted) {
                    result.distinct = false;
                    result.collision = std::make_pair(it->second, child.word);
                    return result;
                }
                next.push_back(std::move(child));
            }
        }
        if (seen.size() > max_elements)
            throw ResourceExceeded("free-monoid check exceeded " + std::to_string(max_elements) + " products",
                                   d - 1);
        level = std::move(next);
    }
    return result;
}

std::vector<std::optional<int>> word_lengths(const GeneratorSet& gens, const std::vector<GroupElement>& targets,
                                             int max_radius, std::size_t max_elements)
{
    std::vector<std::optional<int>> lengths(targets.size());
    std::unordered_map<std::string, std::vector<std::size_t>> wanted;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (!gens.group().contains(targets[i]))
            throw GroupMismatch("target is not an element of " + gens.group().name());
        wanted[canonical_encode(targets[i])].push_back(i);
    }
    std::size_t remaining = wanted.size();
    auto resolve = [&](const std::string& code, int r) {
        auto it = wanted.find(code);
        if (it == wanted.end())
            return;
        for (std::size_t idx : it->second)
            lengths[idx] = r;
        wanted.erase(it);
        --remaining;
    };

    GroupElement identity = gens.group().identity();
    std::string id_code = canonical_encode(identity);
    resolve(id_code, 0);
    std::unordered_set<std::string> seen{id_code};
    std::vector<GroupElement> frontier{identity};
    for (int r = 1; r <= max_radius && remaining > 0; ++r) {
        std::vector<GroupElement> next;
        for (Product& p : expand(frontier, gens.closure(), 1)) {
            if (!seen.insert(p.code).second)
                continue;
            resolve(p.code, r);
            next.push_back(std::move(p.element));
        }
        if (seen.size() > max_elements)
            throw ResourceExceeded("word-length search exceeded " + std::to_string(max_elements) + " elements",
                                   r - 1);
        frontier = std::move(next);
    }
    return lengths;
}

}  // namespace mgrowth
