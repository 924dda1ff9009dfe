// mgrowth: sphere counts, growth rates, ping-pong certificates and the
// acceptance suite from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource cap reached.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mgrowth/acceptance.hpp"
#include "mgrowth/ball.hpp"
#include "mgrowth/certificate.hpp"
#include "mgrowth/errors.hpp"
#include "mgrowth/roots.hpp"
#include "mgrowth/serialize.hpp"
#include "mgrowth/series.hpp"

namespace {

using namespace mgrowth;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::size_t max_elements_from_env(std::size_t fallback)
{
    const char* value = std::getenv("MGROWTH_MAX_ELEMENTS");
    if (!value || !*value)
        return fallback;
    try {
        return static_cast<std::size_t>(std::stoull(value));
    } catch (const std::exception&) {
        throw ParseError(std::string("MGROWTH_MAX_ELEMENTS is not a number: ") + value);
    }
}

std::pair<std::string, Word> parse_assignment(const std::string& text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ParseError("expected label=word, got '" + text + "'");
    return {text.substr(0, eq), parse_word(text.substr(eq + 1))};
}

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(item);
    return out;
}

void print_counts(const SphereCounts& counts, const std::string& format)
{
    if (format == "json") {
        std::cout << to_json(counts).dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << to_csv(counts);
    } else {
        std::cout << std::setw(6) << "radius" << std::setw(14) << "sphere" << std::setw(14) << "ball" << '\n';
        for (std::size_t r = 0; r < counts.spheres.size(); ++r)
            std::cout << std::setw(6) << r << std::setw(14) << counts.spheres[r] << std::setw(14) << counts.balls[r]
                      << '\n';
    }
}

struct SpheresArgs {
    std::string group;
    int radius = 0;
    std::string format = "text";
    std::vector<std::string> gens;
    unsigned workers = 1;
};

int cmd_spheres(const SpheresArgs& args)
{
    const GroupInstance group = GroupInstance::parse(args.group);
    GeneratorSet gens = GeneratorSet::canonical(group);
    if (!args.gens.empty()) {
        std::vector<std::pair<std::string, Word>> words;
        for (const auto& g : args.gens)
            words.push_back(parse_assignment(g));
        gens = GeneratorSet::from_words(group, words);
    }
    EnumerationOptions options{max_elements_from_env(kDefaultMaxElements), args.workers};
    try {
        print_counts(enumerate_spheres(gens, args.radius, options), args.format);
    } catch (const EnumerationBudgetExceeded& e) {
        std::cerr << "resource cap reached: " << e.what() << "; partial results up to radius "
                  << e.partial().radius << '\n';
        if (e.partial().radius >= 0)
            print_counts(e.partial(), args.format);
        return kExitResource;
    }
    return kExitOk;
}

struct RateArgs {
    std::string group;
    std::string tolerance = "1/1000000000000";
    std::string format = "text";
    int digits = kDefaultDigits;
};

int cmd_rate(const RateArgs& args)
{
    const GroupInstance group = GroupInstance::parse(args.group);
    const Rational tol = parse_rational(args.tolerance);
    if (tol <= 0)
        throw ParseError("tolerance must be positive");
    const GrowthRate rate = growth_rate(canonical_growth_series(group), tol);
    if (args.format == "json") {
        Json out = to_json(rate, args.digits);
        out["group"] = group.selector();
        std::cout << out.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "group:      " << group.name() << " with {a, t}\n"
              << "series:     " << rate.series.to_string() << '\n'
              << "polynomial: " << rate.rate.polynomial.to_string() << '\n'
              << "rate:       [" << to_decimal(rate.rate.lower, args.digits) << ", "
              << to_decimal(rate.rate.upper, args.digits) << "]\n"
              << "exact:      [" << to_string(rate.rate.lower) << ", " << to_string(rate.rate.upper) << "]\n";
    return kExitOk;
}

struct CertifyArgs {
    std::string group;
    std::string preset;
    std::string elements;
    std::string vertex = "base";
    std::vector<std::string> witnesses;
    int freeness_depth = 6;
    std::string format = "text";
};

void print_certificate(const Certificate& c)
{
    std::cout << c.name << " on " << c.group.name() << ": " << (c.fully_passed() ? "PASS" : "FAIL") << '\n'
              << "  vertex: " << to_string(c.vertex) << '\n'
              << "  reason: " << c.reason << '\n';
    for (std::size_t i = 0; i < c.elements.size(); ++i)
        std::cout << "  " << c.labels[i] << " = " << c.words[i] << "  length " << c.lengths[i] << '\n';
    if (c.bound)
        std::cout << "  bound: root of " << c.bound->polynomial.to_string() << " in ["
                  << to_decimal(c.bound->lower, 12) << ", " << to_decimal(c.bound->upper, 12) << "]\n";
    for (const auto& e : c.expectations)
        std::cout << "  expected " << (e.relation == Expectation::Relation::Equal ? "= " : ">= ") << e.name << ": "
                  << (e.holds ? "yes" : "no") << '\n';
    if (c.freeness)
        std::cout << "  freeness to depth " << c.freeness_depth << ": "
                  << (c.freeness->distinct ? "distinct" : "collision") << " (" << c.freeness->products
                  << " products)\n";
    for (const auto& note : c.notes)
        std::cout << "  note: " << note << '\n';
}

int cmd_certify(const CertifyArgs& args)
{
    const GroupInstance group = GroupInstance::parse(args.group);
    std::vector<Certificate> certificates;
    const std::size_t cap = max_elements_from_env(kDefaultMaxElements);
    if (!args.preset.empty()) {
        Witnesses overrides;
        for (const auto& w : args.witnesses)
            overrides.insert(parse_assignment(w));
        if (args.preset != "all") {
            certificates.push_back(preset_certificate(parse_case_id(args.preset), group, overrides));
        } else {
            // Cases whose group precondition fails are skipped.
            for (CaseId id : all_case_ids()) {
                try {
                    certificates.push_back(preset_certificate(id, group, overrides));
                } catch (const PreconditionViolation& e) {
                    std::cerr << to_string(id) << " skipped: " << e.what() << '\n';
                }
            }
            if (certificates.empty())
                throw PreconditionViolation("no case applies to " + group.name());
        }
    } else {
        if (args.elements.empty())
            throw ParseError("certify needs --preset or --elements");
        const GeneratorSet canonical = GeneratorSet::canonical(group);
        std::vector<GroupElement> xs;
        std::vector<std::string> words;
        int longest = 0;
        for (const auto& text : split_commas(args.elements)) {
            const Word word = parse_word(text);
            if (word.empty())
                throw ParseError("empty element word");
            longest = std::max(longest, static_cast<int>(word_length(word)));
            xs.push_back(element_from_word(canonical, word));
            words.push_back(to_string(word));
        }
        TreeVertex v = base_vertex(group);
        if (args.vertex != "base")
            v = act_on_vertex(element_from_word(canonical, parse_word(args.vertex)), v);
        std::vector<int> lengths;
        for (const auto& l : word_lengths(canonical, xs, longest, cap))
            lengths.push_back(l.value_or(longest));
        Certificate c = check_ping_pong(xs, v, lengths);
        c.name = "custom";
        c.words = words;
        certificates.push_back(std::move(c));
    }
    bool all = true;
    Json out = Json::array();
    for (auto& c : certificates) {
        if (args.freeness_depth > 0)
            attach_freeness(c, args.freeness_depth, cap);
        all = all && c.fully_passed();
        if (args.format == "json")
            out.push_back(to_json(c));
        else
            print_certificate(c);
    }
    if (args.format == "json")
        std::cout << out.dump(2) << '\n';
    return all ? kExitOk : kExitFailed;
}

struct VerifyArgs {
    bool quick = false;
    std::vector<std::string> criteria;
    int kmax = 0;
    int radius = -1;
    std::string format = "text";
    std::uint64_t seed = AcceptanceOptions{}.seed;
    unsigned workers = 1;
};

int cmd_verify(const VerifyArgs& args)
{
    AcceptanceOptions options;
    options.quick = args.quick;
    options.only = args.criteria;
    if (args.kmax > 0)
        options.kmax = args.kmax;
    if (args.radius >= 0)
        options.radius = args.radius;
    options.seed = args.seed;
    options.workers = args.workers;
    options.max_elements = max_elements_from_env(kDefaultMaxElements);
    const AcceptanceReport report = run_acceptance(options);
    if (args.format == "json") {
        Json checks = Json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"id", c.id},
                              {"criterion", c.criterion},
                              {"passed", c.passed},
                              {"summary", c.summary},
                              {"failures", c.failures},
                              {"seconds", c.seconds}});
        Json criteria = Json::array();
        for (const auto& [criterion, passed] : report.by_criterion())
            criteria.push_back({{"criterion", criterion}, {"passed", passed}});
        std::cout << Json{{"checks", checks}, {"criteria", criteria}, {"passed", report.passed()}}.dump(2) << '\n';
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(16) << c.id << std::right << ' '
                      << c.summary << " (" << std::fixed << std::setprecision(2) << c.seconds << "s)\n";
            for (const auto& f : c.failures)
                std::cout << "     " << f << '\n';
        }
        for (const auto& [criterion, passed] : report.by_criterion())
            std::cout << "criterion " << criterion << ": " << (passed ? "PASS" : "FAIL") << '\n';
        std::cout << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
    }
    return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Growth rates of BS(1,n), lamplighter groups and Z wr Z"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"json", "csv", "text"};
    const std::vector<std::string> doc_formats{"json", "text"};

    SpheresArgs spheres;
    auto* sp = app.add_subcommand("spheres", "Sphere sizes of a Cayley ball by breadth-first search");
    sp->add_option("--group", spheres.group, "bs:N, lamplighter:P or wreathzz")->required();
    sp->add_option("--radius", spheres.radius, "Largest radius")->required()->check(CLI::NonNegativeNumber);
    sp->add_option("--format", spheres.format)->check(CLI::IsMember(formats));
    sp->add_option("--gen", spheres.gens, "Generator as label=word over a, t (repeatable)");
    sp->add_option("--workers", spheres.workers, "Expansion threads, 0 for all cores");

    RateArgs rate;
    auto* rt = app.add_subcommand("rate", "Certified growth rate with respect to {a, t}");
    rt->add_option("--group", rate.group)->required();
    rt->add_option("--tolerance", rate.tolerance, "Interval width as a rational, e.g. 1/10^12 as 1/1000000000000");
    rt->add_option("--digits", rate.digits)->check(CLI::Range(1, 200));
    rt->add_option("--format", rate.format)->check(CLI::IsMember(doc_formats));

    CertifyArgs certify;
    auto* ct = app.add_subcommand("certify", "Ping-pong certificate for a free submonoid");
    ct->add_option("--group", certify.group)->required();
    auto* preset = ct->add_option("--preset", certify.preset, "theorem1, case1, case2a..case2d or all");
    auto* elements = ct->add_option("--elements", certify.elements, "Comma separated words over a, t");
    preset->excludes(elements);
    ct->add_option("--vertex", certify.vertex, "base, or a word w for the vertex w.base");
    ct->add_option("--witness", certify.witnesses, "Preset witness as x=word, y=word or z=word");
    ct->add_option("--freeness-depth", certify.freeness_depth, "Brute-force depth, 0 to skip")
        ->check(CLI::Range(0, 12));
    ct->add_option("--format", certify.format)->check(CLI::IsMember(doc_formats));

    VerifyArgs verify;
    auto* vf = app.add_subcommand("verify", "Run the acceptance suite");
    vf->add_flag("--quick", verify.quick, "Series radii at most 10");
    vf->add_option("--criterion", verify.criteria, "Check id (repeatable)");
    vf->add_option("--kmax", verify.kmax)->check(CLI::PositiveNumber);
    vf->add_option("--radius", verify.radius)->check(CLI::NonNegativeNumber);
    vf->add_option("--seed", verify.seed);
    vf->add_option("--workers", verify.workers);
    vf->add_option("--format", verify.format)->check(CLI::IsMember(doc_formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*sp)
            return cmd_spheres(spheres);
        if (*rt)
            return cmd_rate(rate);
        if (*ct)
            return cmd_certify(certify);
        return cmd_verify(verify);
    } catch (const ResourceExceeded& e) {
        std::cerr << "resource cap reached: " << e.what() << '\n';
        return kExitResource;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
