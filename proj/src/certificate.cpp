#include "mgrowth/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "mgrowth/errors.hpp"

namespace mgrowth {

namespace {

std::string power_word(std::string_view label, long exponent)
{
    if (exponent == 0)
        return {};
    std::string out(label);
    if (exponent != 1)
        out += "^" + std::to_string(exponent);
    return out;
}

std::string join(std::initializer_list<std::string> parts)
{
    std::string out;
    for (const auto& part : parts) {
        if (part.empty())
            continue;
        if (!out.empty())
            out += ' ';
        out += part;
    }
    return out;
}

std::string repeat(const std::string& word, int times)
{
    std::string out;
    for (int i = 0; i < times; ++i)
        out = join({out, word});
    return out;
}

std::string describe(const RootInterval& root)
{
    return to_decimal(root.lower, 12) + " (root of " + root.polynomial.to_string() + ")";
}

Certificate failed_hypothesis(std::string name, const GroupInstance& group, const std::string& hypothesis)
{
    Certificate c(std::move(name), group, base_vertex(group));
    c.failed_hypothesis = hypothesis;
    c.reason = "hypothesis failed: " + hypothesis;
    return c;
}

Witnesses default_witnesses(CaseId id)
{
    switch (id) {
    case CaseId::Theorem1:
    case CaseId::Case1: return {{"x", parse_word("t")}, {"z", parse_word("a")}};
    case CaseId::Case2A: return {{"y", parse_word("t")}, {"x", parse_word("a t")}};
    case CaseId::Case2B: return {{"y", parse_word("t")}, {"x", parse_word("a t^3")}};
    case CaseId::Case2C: return {{"y", parse_word("t")}, {"x", parse_word("a t^2")}};
    case CaseId::Case2D: break;
    }
    return {{"y", parse_word("t^2")}, {"x", parse_word("a t^3")}};
}

std::vector<std::string> case_words(CaseId id, long p)
{
    const int k = static_cast<int>((p - 1) / 2);
    std::vector<std::string> words{"x"};
    switch (id) {
    case CaseId::Theorem1: return {"x", "z x^2", "z^-1 x^2"};
    case CaseId::Case1:
        if (p == 2)
            return {"x", "z x"};
        for (int i = 1; i <= k; ++i)
            words.push_back(join({power_word("z", i), "x"}));
        for (int i = 1; i <= k; ++i)
            words.push_back(join({power_word("z", -i), "x"}));
        return words;
    case CaseId::Case2A:
        words.push_back("y");
        for (int i = 2; i <= k; ++i)
            words.push_back(join({repeat("y x^-1", i - 1), "y"}));
        for (int i = 1; i <= k; ++i)
            words.push_back(join({repeat("x y^-1", i), "x"}));
        return words;
    case CaseId::Case2B:
        for (int s = 1; s <= k; ++s)
            words.push_back(join({power_word("y", s), "x"}));
        words.push_back("y^-1 x");
        words.push_back("y^-2 x");
        for (int s = 1; s <= k - 2; ++s)
            words.push_back(join({power_word("y", s), "x^-1 y x"}));
        return words;
    case CaseId::Case2C:
        return {"x", "y", "x y^-1 x", "x y^-2 x", "x y^-1 x y^-1 x", "y^2 x^-1 y", "x y x^-1 y"};
    case CaseId::Case2D: break;
    }
    return {"x", "y", "x y^-1 x", "x y^-2 x", "y x^-1 y"};
}

void expect(Certificate& c, std::string name, const RootInterval& root, Expectation::Relation relation)
{
    Expectation e{std::move(name), root, relation, false};
    if (c.bound) {
        const Order order = compare_roots(*c.bound, root);
        e.holds = relation == Expectation::Relation::Equal ? order == Order::Equal : order != Order::Less;
    }
    c.expectations.push_back(std::move(e));
}

}  // namespace

Rational default_bound_tolerance() { return Rational(Integer(1), ipow(2, 50)); }

bool Certificate::fully_passed() const
{
    return passed && std::all_of(expectations.begin(), expectations.end(), [](const auto& e) { return e.holds; })
           && (!freeness || freeness->distinct);
}

Certificate check_ping_pong(const std::vector<GroupElement>& xs, const TreeVertex& v, const std::vector<int>& lengths,
                            const Rational& tolerance)
{
    if (xs.empty())
        throw PreconditionViolation("check_ping_pong needs at least one element");
    if (lengths.size() != xs.size())
        throw PreconditionViolation("one word length per element is required");
    Certificate c("ping-pong", tree_group(v), v);
    c.elements = xs;
    c.lengths = lengths;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        c.labels.push_back("x" + std::to_string(i + 1));
        c.words.push_back(to_string(xs[i]));
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (phi_exponent(xs[i]) <= 0) {
            c.reason = c.labels[i] + " is not positive hyperbolic";
            return c;
        }
    }
    std::vector<TreeVertex> images;
    for (const auto& x : xs)
        images.push_back(act_on_vertex(x, v));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!is_descendant(images[i], v)) {
            c.reason = c.labels[i] + "(v) is not a strict descendant of v";
            return c;
        }
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (images[i] == images[j]) {
                c.reason = c.labels[i] + "(v) = " + c.labels[j] + "(v)";
                return c;
            }
            if (comparable(images[i], images[j])) {
                c.reason = c.labels[i] + "(v) and " + c.labels[j] + "(v) are comparable";
                return c;
            }
        }
    }
    c.passed = true;
    c.reason = "images are pairwise incomparable strict descendants of v";
    c.bound = unique_positive_root(lemma10_polynomial(lengths), tolerance);
    return c;
}

void attach_freeness(Certificate& certificate, int depth, std::size_t max_elements)
{
    if (certificate.elements.empty())
        return;
    certificate.freeness = free_monoid_distinctness(certificate.elements, depth, max_elements);
    certificate.freeness_depth = depth;
    if (!certificate.passed && certificate.freeness->distinct)
        certificate.notes.push_back("fail != not-free: no collision among products of length <= "
                                    + std::to_string(depth) + "; the ping-pong check is sufficient, not necessary");
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

OrbitCheck lemma4_orbit_check(const GroupElement& g, const TreeVertex& v)
{
    const GroupInstance group = group_of(g);
    if (group.family() == Family::WreathZ)
        throw PreconditionViolation("orbit check needs BS(1,p) or L_p");
    const long p = *group.parameter();
    if (p % 2 == 0 || !is_prime(p))
        throw PreconditionViolation("orbit check needs an odd prime p, got " + std::to_string(p));
    if (phi_exponent(g) != 0)
        throw PreconditionViolation(to_string(g) + " is not elliptic");
    const long k = (p - 1) / 2;
    OrbitCheck out;
    out.fixed = act_on_vertex(g, v) == v;
    for (long i = -k; i <= k; ++i)
        out.orbit.push_back(act_on_vertex(power(g, i), v));
    bool distinct = true;
    for (std::size_t i = 0; i < out.orbit.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < out.orbit.size() && distinct; ++j)
            distinct = !(out.orbit[i] == out.orbit[j]);
    out.passed = out.fixed || distinct;
    return out;
}

std::vector<TreeVertex> vertex_orbit(const GroupElement& g, const TreeVertex& v, std::size_t max_length)
{
    std::vector<TreeVertex> orbit{v};
    TreeVertex q = act_on_vertex(g, v);
    while (!(q == v) && orbit.size() < max_length) {
        orbit.push_back(q);
        q = act_on_vertex(g, q);
    }
    return orbit;
}

CaseId parse_case_id(std::string_view text)
{
    for (CaseId id : all_case_ids())
        if (to_string(id) == text)
            return id;
    throw ParseError("unknown case '" + std::string(text)
                     + "' (expected theorem1, case1, case2a, case2b, case2c or case2d)");
}

std::string to_string(CaseId id)
{
    switch (id) {
    case CaseId::Theorem1: return "theorem1";
    case CaseId::Case1: return "case1";
    case CaseId::Case2A: return "case2a";
    case CaseId::Case2B: return "case2b";
    case CaseId::Case2C: return "case2c";
    case CaseId::Case2D: break;
    }
    return "case2d";
}

std::vector<CaseId> all_case_ids()
{
    return {CaseId::Theorem1, CaseId::Case1, CaseId::Case2A, CaseId::Case2B, CaseId::Case2C, CaseId::Case2D};
}

Certificate preset_certificate(CaseId id, const GroupInstance& group, const Witnesses& overrides,
                              const Rational& tolerance)
{
    const std::string name = to_string(id);
    if (group.family() == Family::WreathZ)
        throw PreconditionViolation(name + " needs BS(1,p) or L_p");
    const long p = *group.parameter();
    const bool elliptic_case = id == CaseId::Theorem1 || id == CaseId::Case1;
    if (id == CaseId::Theorem1 && !(group == GroupInstance::baumslag_solitar(2)))
        throw PreconditionViolation("theorem1 is the BS(1,2) certificate");
    if (id == CaseId::Case1 && !is_prime(p))
        throw PreconditionViolation("case1 needs a prime p, got " + std::to_string(p));
    if (!elliptic_case) {
        const long least = id == CaseId::Case2A ? 3 : 5;
        if (p < least || p % 2 == 0 || !is_prime(p))
            throw PreconditionViolation(name + " needs an odd prime p >= " + std::to_string(least) + ", got "
                                        + std::to_string(p));
    }

    Witnesses words = default_witnesses(id);
    for (const auto& [label, word] : overrides) {
        if (!words.count(label))
            throw UnknownLabel(name + " has no witness '" + label + "'");
        words[label] = word;
    }
    const GeneratorSet canonical = GeneratorSet::canonical(group);
    std::vector<std::pair<std::string, GroupElement>> witnesses;
    for (const auto& [label, word] : words)
        witnesses.emplace_back(label, element_from_word(canonical, word));
    const GeneratorSet s(group, witnesses);
    const GroupElement& x = s.element("x");

    if (!classify_element(x).positive_hyperbolic())
        return failed_hypothesis(name, group, "x is not positive hyperbolic");

    TreeVertex vertex = base_vertex(group);
    std::vector<std::string> notes;
    if (elliptic_case) {
        const GroupElement& z = s.element("z");
        if (phi_exponent(z) != 0)
            return failed_hypothesis(name, group, "z is not elliptic");
        try {
            vertex = lowest_fixed_vertex_on_axis(z, x);
        } catch (const PreconditionViolation&) {
            return failed_hypothesis(name, group, "z preserves the axis of x");
        }
    } else {
        const GroupElement& y = s.element("y");
        if (!classify_element(y).positive_hyperbolic())
            return failed_hypothesis(name, group, "y is not positive hyperbolic");
        const std::int64_t lx = phi_exponent(x);
        const std::int64_t ly = phi_exponent(y);
        const bool lengths_ok = (id == CaseId::Case2A && lx == ly) || (id == CaseId::Case2B && 2 * ly < lx)
                                || (id == CaseId::Case2C && lx == 2 * ly)
                                || (id == CaseId::Case2D && ly < lx && lx < 2 * ly);
        if (!lengths_ok)
            return failed_hypothesis(name, group,
                                     "translation lengths l(x) = " + std::to_string(lx) + ", l(y) = "
                                         + std::to_string(ly) + " do not fit " + name);
        TreeVertex v0 = vertex;
        try {
            v0 = lowest_common_axis_vertex(x, y);
        } catch (const PreconditionViolation&) {
            return failed_hypothesis(name, group, "the axes of x and y coincide");
        }
        switch (id) {
        case CaseId::Case2A:
            vertex = lowest_fixed_vertex_on_axis(multiply(y, invert(x)), x);
            break;
        case CaseId::Case2B: {
            const TreeVertex vx = axis_vertex_at_level(x, level(v0) + 1);
            vertex = act_on_vertex(invert(x), vx);
            notes.push_back("generating set uses y^s x^-1 y x in place of y^(k-2) x^-1 x y");
            break;
        }
        case CaseId::Case2C: vertex = v0; break;
        default: {
            const GroupElement y_inv = invert(y);
            vertex = 2 * lx <= 3 * ly ? act_on_vertex(multiply(x, multiply(y_inv, y_inv)), v0)
                                      : act_on_vertex(multiply(y, invert(x)), v0);
            break;
        }
        }
    }

    std::vector<GroupElement> elements;
    std::size_t longest = 0;
    const auto texts = case_words(id, p);
    for (const auto& text : texts) {
        const Word word = parse_word(text);
        longest = std::max(longest, word_length(word));
        elements.push_back(element_from_word(s, word));
    }
    const GeneratorSet metric(group, elliptic_case ? std::vector<std::pair<std::string, GroupElement>>{
                                                         {"x", x}, {"z", s.element("z")}}
                                                   : std::vector<std::pair<std::string, GroupElement>>{
                                                         {"x", x}, {"y", s.element("y")}});
    std::vector<int> lengths;
    for (const auto& length : word_lengths(metric, elements, static_cast<int>(longest)))
        lengths.push_back(length.value_or(static_cast<int>(longest)));

    Certificate c = check_ping_pong(elements, vertex, lengths, tolerance);
    c.name = name;
    c.words = texts;
    c.notes.insert(c.notes.end(), notes.begin(), notes.end());

    const int k = static_cast<int>((p - 1) / 2);
    const Polynomial silver{-1, -2, 1};
    switch (id) {
    case CaseId::Theorem1:
        expect(c, "beta", unique_positive_root(Polynomial{-2, 0, -1, 1}, tolerance), Expectation::Relation::Equal);
        break;
    case CaseId::Case1:
        if (p == 2)
            expect(c, "golden ratio", unique_positive_root(Polynomial{-1, -1, 1}, tolerance),
                   Expectation::Relation::Equal);
        else
            expect(c, "omega_" + std::to_string(k),
                   unique_positive_root(family_polynomial(FamilyKind::T, k), tolerance), Expectation::Relation::Equal);
        break;
    case CaseId::Case2A: {
        expect(c, "omega_" + std::to_string(k), unique_positive_root(family_polynomial(FamilyKind::T, k), tolerance),
               Expectation::Relation::AtLeast);
        const RootInterval delta = unique_positive_root(family_polynomial(FamilyKind::D, k), tolerance);
        c.notes.push_back("delta_" + std::to_string(k) + " = " + describe(delta));
        if (c.bound)
            c.notes.push_back("bound from S-lengths = " + describe(*c.bound));
        break;
    }
    case CaseId::Case2B:
        expect(c, "omega_" + std::to_string(k), unique_positive_root(family_polynomial(FamilyKind::T, k), tolerance),
               Expectation::Relation::AtLeast);
        break;
    case CaseId::Case2C:
    case CaseId::Case2D: {
        expect(c, "1 + sqrt 2", unique_positive_root(silver, tolerance), Expectation::Relation::Equal);
        const Polynomial cofactor = id == CaseId::Case2C ? Polynomial{1, 1, 0, 1} : Polynomial{1, 0, 1};
        if (c.passed) {
            const Polynomial q = lemma10_polynomial(c.lengths);
            c.notes.push_back(q == silver * cofactor ? "Q = (" + silver.to_string() + ")(" + cofactor.to_string() + ")"
                                                     : "Q = " + q.to_string() + " does not factor as expected");
        }
        break;
    }
    }
    return c;
}

}  // namespace mgrowth
