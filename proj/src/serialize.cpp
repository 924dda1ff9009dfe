#include "mgrowth/serialize.hpp"

#include <sstream>

#include "mgrowth/errors.hpp"

namespace mgrowth {

namespace {

Json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0)
            throw ParseError("malformed integer: " + j.dump());
        return z;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

}  // namespace

Json to_json(const SphereCounts& counts)
{
    return {{"group", counts.group},
            {"generators", counts.generators},
            {"radius", counts.radius},
            {"spheres", counts.spheres},
            {"balls", counts.balls}};
}

SphereCounts sphere_counts_from_json(const Json& j)
{
    try {
        SphereCounts counts = make_sphere_counts(j.at("group").get<std::string>(),
                                                 j.at("generators").get<std::vector<std::string>>(),
                                                 j.at("spheres").get<std::vector<std::uint64_t>>());
        if (counts.radius != j.at("radius").get<int>()
            || counts.balls != j.at("balls").get<std::vector<std::uint64_t>>())
            throw ParseError("inconsistent sphere counts");
        return counts;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad sphere counts: ") + e.what());
    }
}

std::string to_csv(const SphereCounts& counts)
{
    std::ostringstream out;
    out << "radius,sphere\n";
    for (std::size_t r = 0; r < counts.spheres.size(); ++r)
        out << r << ',' << counts.spheres[r] << '\n';
    return out.str();
}

Json to_json(const Polynomial& p)
{
    Json out = Json::array();
    for (const auto& c : p.coefficients())
        out.push_back(integer_json(c));
    return out;
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("polynomial must be a coefficient array");
    std::vector<Integer> coefficients;
    for (const auto& c : j)
        coefficients.push_back(integer_from_json(c));
    return Polynomial(std::move(coefficients));
}

Json to_json(const CertifiedInterval& interval, int digits)
{
    return {{"polynomial", to_json(interval.polynomial)},
            {"polynomial_text", interval.polynomial.to_string()},
            {"lower", to_string(interval.lower)},
            {"upper", to_string(interval.upper)},
            {"lower_decimal", to_decimal(interval.lower, digits)},
            {"upper_decimal", to_decimal(interval.upper, digits)},
            {"exact", interval.is_exact()}};
}

CertifiedInterval interval_from_json(const Json& j)
{
    try {
        CertifiedInterval out{polynomial_from_json(j.at("polynomial")),
                              parse_rational(j.at("lower").get<std::string>()),
                              parse_rational(j.at("upper").get<std::string>())};
        return out;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad interval: ") + e.what());
    }
}

Json to_json(const TreeVertex& v)
{
    if (const auto* b = std::get_if<BsVertex>(&v))
        return {{"level", b->level}, {"residue", to_string(b->residue)}};
    const auto& l = std::get<LampVertex>(v);
    Json prefix = Json::array();
    for (const auto& [pos, val] : l.prefix)
        prefix.push_back({pos, val});
    return {{"level", l.level}, {"prefix", prefix}};
}

Json to_json(const Certificate& c, int digits)
{
    Json elements = Json::array();
    for (std::size_t i = 0; i < c.elements.size(); ++i)
        elements.push_back({{"label", c.labels.at(i)},
                            {"word", c.words.at(i)},
                            {"normal_form", to_string(c.elements[i])},
                            {"length", c.lengths.at(i)}});
    Json out{{"name", c.name},
             {"group", c.group.selector()},
             {"elements", elements},
             {"lengths", c.lengths},
             {"vertex", to_json(c.vertex)},
             {"vertex_text", to_string(c.vertex)},
             {"verdict", c.passed ? "pass" : "fail"},
             {"reason", c.reason},
             {"bound", c.bound ? to_json(*c.bound, digits) : Json(nullptr)},
             {"notes", c.notes},
             {"fully_passed", c.fully_passed()}};
    if (c.failed_hypothesis)
        out["failed_hypothesis"] = *c.failed_hypothesis;
    Json expectations = Json::array();
    for (const auto& e : c.expectations)
        expectations.push_back({{"name", e.name},
                                {"relation", e.relation == Expectation::Relation::Equal ? "equal" : "at_least"},
                                {"root", to_json(e.root, digits)},
                                {"holds", e.holds}});
    out["expectations"] = expectations;
    if (c.freeness) {
        Json freeness{{"depth", c.freeness_depth}, {"distinct", c.freeness->distinct},
                      {"products", c.freeness->products}};
        if (c.freeness->collision)
            freeness["collision"] = {c.freeness->collision->first, c.freeness->collision->second};
        out["freeness"] = freeness;
    }
    return out;
}

Json to_json(const SeriesComparison& comparison)
{
    Json entries = Json::array();
    for (const auto& e : comparison.entries)
        entries.push_back({{"radius", e.radius},
                           {"coefficient", to_string(e.coefficient)},
                           {"sphere", e.sphere},
                           {"match", e.match}});
    return {{"entries", entries},
            {"first_mismatch", comparison.first_mismatch ? Json(*comparison.first_mismatch) : Json(nullptr)},
            {"formula_errors", comparison.formula_errors},
            {"all_match", comparison.all_match()}};
}

Json to_json(const GrowthRate& rate, int digits)
{
    return {{"series", rate.series.to_string()},
            {"pole", to_json(rate.pole, digits)},
            {"pole_factor", to_json(rate.pole_factor)},
            {"rate", to_json(rate.rate, digits)}};
}

}  // namespace mgrowth
