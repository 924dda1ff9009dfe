#include "mgrowth/group.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "mgrowth/errors.hpp"

namespace mgrowth {

namespace {

std::int64_t mod_positive(std::int64_t value, long modulus)
{
    std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

// f + g(. - shift), values reduced mod `modulus` (0 = no reduction).
Lamps add_shifted(const Lamps& f, const Lamps& g, std::int64_t shift, long modulus)
{
    Lamps out;
    out.reserve(f.size() + g.size());
    auto push = [&](std::int64_t pos, std::int64_t value) {
        if (modulus != 0)
            value = mod_positive(value, modulus);
        if (value != 0)
            out.emplace_back(pos, value);
    };
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        if (j == g.size()) {
            push(f[i].first, f[i].second);
            ++i;
            continue;
        }
        std::int64_t gpos = checked_add(g[j].first, shift);
        if (i == f.size() || gpos < f[i].first) {
            push(gpos, g[j].second);
            ++j;
        } else if (f[i].first < gpos) {
            push(f[i].first, f[i].second);
            ++i;
        } else {
            push(gpos, checked_add(f[i].second, g[j].second));
            ++i;
            ++j;
        }
    }
    return out;
}

Lamps normalize_lamps(Lamps lamps, long modulus)
{
    std::sort(lamps.begin(), lamps.end());
    Lamps out;
    for (auto [pos, value] : lamps) {
        if (!out.empty() && out.back().first == pos)
            out.back().second = checked_add(out.back().second, value);
        else
            out.emplace_back(pos, value);
    }
    std::erase_if(out, [&](auto& entry) {
        if (modulus != 0)
            entry.second = mod_positive(entry.second, modulus);
        return entry.second == 0;
    });
    return out;
}

// -(f(. + shift)) : the lamp part of (f, s)^-1 = (-f(. + s), -s).
Lamps negate_unshift(const Lamps& f, std::int64_t shift, long modulus)
{
    Lamps out;
    out.reserve(f.size());
    for (auto [pos, value] : f) {
        std::int64_t v = -value;
        if (modulus != 0)
            v = mod_positive(v, modulus);
        out.emplace_back(checked_add(pos, -shift), v);
    }
    return out;
}

// n^shift * (num / n^exp) as (num', exp').
std::pair<Integer, std::uint64_t> scale_by_power(long base, const Integer& num, std::uint64_t exp,
                                                 std::int64_t shift)
{
    if (shift >= 0)
        return {num * ipow(base, static_cast<std::uint64_t>(shift)), exp};
    return {num, exp + static_cast<std::uint64_t>(-shift)};
}

std::string mismatch_message(const GroupElement& g, const GroupElement& h)
{
    return "elements of " + group_of(g).name() + " and " + group_of(h).name() + " cannot be combined";
}

}  // namespace

// ---------------------------------------------------------------------------

BsElement::BsElement(long base, std::int64_t k, Integer numerator, std::uint64_t denominator_exponent)
    : base_(base), k_(k), numerator_(std::move(numerator)), exponent_(denominator_exponent)
{
    if (base_ < 2)
        throw PreconditionViolation("BS(1,n) requires n >= 2");
    if (numerator_ == 0) {
        exponent_ = 0;
        return;
    }
    Integer q, r;
    while (exponent_ > 0) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), numerator_.get_mpz_t(),
                       static_cast<unsigned long>(base_));
        if (r != 0)
            break;
        numerator_ = q;
        --exponent_;
    }
}

Rational BsElement::translation() const
{
    Rational q(numerator_, ipow(base_, exponent_));
    q.canonicalize();
    return q;
}

Rational BsElement::apply(const Rational& x) const
{
    return rpow(base_, k_) * x + translation();
}

LampElement::LampElement(long modulus, Lamps lamps, std::int64_t shift)
    : modulus_(modulus), lamps_(normalize_lamps(std::move(lamps), modulus)), shift_(shift)
{
    if (modulus_ < 2)
        throw PreconditionViolation("L_p requires p >= 2");
}

WreathZElement::WreathZElement(Lamps lamps, std::int64_t shift)
    : lamps_(normalize_lamps(std::move(lamps), 0)), shift_(shift)
{
}

// ---------------------------------------------------------------------------

GroupInstance GroupInstance::baumslag_solitar(long n)
{
    if (n < 2)
        throw PreconditionViolation("BS(1,n) requires n >= 2");
    return {Family::BaumslagSolitar, n};
}

GroupInstance GroupInstance::lamplighter(long p)
{
    if (p < 2)
        throw PreconditionViolation("L_p requires p >= 2");
    return {Family::Lamplighter, p};
}

GroupInstance GroupInstance::wreath_z() { return {Family::WreathZ, 0}; }

GroupInstance GroupInstance::parse(std::string_view selector)
{
    auto colon = selector.find(':');
    std::string_view head = selector.substr(0, colon);
    if (colon == std::string_view::npos) {
        if (head == "wreathzz" || head == "zwrz")
            return wreath_z();
        throw ParseError("unknown group selector '" + std::string(selector) + "'");
    }
    std::string_view tail = selector.substr(colon + 1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
    if (ec != std::errc() || ptr != tail.data() + tail.size())
        throw ParseError("bad group parameter in '" + std::string(selector) + "'");
    try {
        if (head == "bs")
            return baumslag_solitar(value);
        if (head == "lamplighter" || head == "lp")
            return lamplighter(value);
    } catch (const PreconditionViolation& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown group family '" + std::string(head) + "'");
}

std::optional<long> GroupInstance::parameter() const
{
    if (family_ == Family::WreathZ)
        return std::nullopt;
    return parameter_;
}

GroupElement GroupInstance::identity() const
{
    switch (family_) {
    case Family::BaumslagSolitar: return BsElement::identity(parameter_);
    case Family::Lamplighter: return LampElement::identity(parameter_);
    case Family::WreathZ: break;
    }
    return WreathZElement::identity();
}

GroupElement GroupInstance::a() const
{
    switch (family_) {
    case Family::BaumslagSolitar: return BsElement(parameter_, 0, 1, 0);
    case Family::Lamplighter: return LampElement(parameter_, {{0, 1}}, 0);
    case Family::WreathZ: break;
    }
    return WreathZElement({{0, 1}}, 0);
}

GroupElement GroupInstance::t() const
{
    switch (family_) {
    case Family::BaumslagSolitar: return BsElement(parameter_, 1, 0, 0);
    case Family::Lamplighter: return LampElement(parameter_, {}, 1);
    case Family::WreathZ: break;
    }
    return WreathZElement({}, 1);
}

bool GroupInstance::contains(const GroupElement& g) const { return group_of(g) == *this; }

std::string GroupInstance::name() const
{
    switch (family_) {
    case Family::BaumslagSolitar: return "BS(1," + std::to_string(parameter_) + ")";
    case Family::Lamplighter: return "L_" + std::to_string(parameter_);
    case Family::WreathZ: break;
    }
    return "Z wr Z";
}

std::string GroupInstance::selector() const
{
    switch (family_) {
    case Family::BaumslagSolitar: return "bs:" + std::to_string(parameter_);
    case Family::Lamplighter: return "lamplighter:" + std::to_string(parameter_);
    case Family::WreathZ: break;
    }
    return "wreathzz";
}

GroupInstance group_of(const GroupElement& g)
{
    struct Visitor {
        GroupInstance operator()(const BsElement& e) const
        {
            return GroupInstance::baumslag_solitar(e.base());
        }
        GroupInstance operator()(const LampElement& e) const
        {
            return GroupInstance::lamplighter(e.modulus());
        }
        GroupInstance operator()(const WreathZElement&) const { return GroupInstance::wreath_z(); }
    };
    return std::visit(Visitor{}, g);
}

// ---------------------------------------------------------------------------

GroupElement multiply(const GroupElement& g, const GroupElement& h)
{
    if (g.index() != h.index())
        throw GroupMismatch(mismatch_message(g, h));
    if (auto* x = std::get_if<BsElement>(&g)) {
        const auto& y = std::get<BsElement>(h);
        if (x->base() != y.base())
            throw GroupMismatch(mismatch_message(g, h));
        const long n = x->base();
        // (k1,b1)(k2,b2) = (k1 + k2, n^k1 b2 + b1)
        auto [num2, exp2] = scale_by_power(n, y.numerator(), y.denominator_exponent(), x->k());
        std::uint64_t exp = std::max(exp2, x->denominator_exponent());
        Integer num = x->numerator() * ipow(n, exp - x->denominator_exponent())
                      + num2 * ipow(n, exp - exp2);
        return BsElement(n, checked_add(x->k(), y.k()), std::move(num), exp);
    }
    if (auto* x = std::get_if<LampElement>(&g)) {
        const auto& y = std::get<LampElement>(h);
        if (x->modulus() != y.modulus())
            throw GroupMismatch(mismatch_message(g, h));
        return LampElement(x->modulus(), add_shifted(x->lamps(), y.lamps(), x->shift(), x->modulus()),
                           checked_add(x->shift(), y.shift()));
    }
    const auto& x = std::get<WreathZElement>(g);
    const auto& y = std::get<WreathZElement>(h);
    return WreathZElement(add_shifted(x.lamps(), y.lamps(), x.shift(), 0),
                          checked_add(x.shift(), y.shift()));
}

GroupElement invert(const GroupElement& g)
{
    if (auto* x = std::get_if<BsElement>(&g)) {
        // (k,b)^-1 = (-k, -n^-k b)
        auto [num, exp] = scale_by_power(x->base(), x->numerator(), x->denominator_exponent(), -x->k());
        return BsElement(x->base(), -x->k(), -num, exp);
    }
    if (auto* x = std::get_if<LampElement>(&g))
        return LampElement(x->modulus(), negate_unshift(x->lamps(), x->shift(), x->modulus()), -x->shift());
    const auto& x = std::get<WreathZElement>(g);
    return WreathZElement(negate_unshift(x.lamps(), x.shift(), 0), -x.shift());
}

GroupElement power(const GroupElement& g, std::int64_t exponent)
{
    GroupElement base = exponent < 0 ? invert(g) : g;
    std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
    GroupElement result = group_of(g).identity();
    while (e > 0) {
        if (e & 1u)
            result = multiply(result, base);
        e >>= 1;
        if (e > 0)
            base = multiply(base, base);
    }
    return result;
}

bool is_identity(const GroupElement& g) { return g == group_of(g).identity(); }

std::int64_t phi_exponent(const GroupElement& g)
{
    if (auto* x = std::get_if<BsElement>(&g))
        return x->k();
    if (auto* x = std::get_if<LampElement>(&g))
        return x->shift();
    return std::get<WreathZElement>(g).shift();
}

GroupElement quotient_map(const WreathZElement& g, const GroupInstance& target)
{
    switch (target.family()) {
    case Family::WreathZ:
        throw InvalidTarget("quotient_map target must be BS(1,n) or L_p");
    case Family::Lamplighter:
        return LampElement(*target.parameter(), g.lamps(), g.shift());
    case Family::BaumslagSolitar: break;
    }
    const long n = *target.parameter();
    std::uint64_t exp = 0;
    if (!g.lamps().empty() && g.lamps().front().first < 0)
        exp = static_cast<std::uint64_t>(-g.lamps().front().first);
    Integer num = 0;
    for (auto [pos, value] : g.lamps())
        num += Integer(static_cast<long>(value)) * ipow(n, static_cast<std::uint64_t>(pos + static_cast<std::int64_t>(exp)));
    return BsElement(n, g.shift(), std::move(num), exp);
}

// ---------------------------------------------------------------------------
// Encoding: tag byte, then LEB128 varints (zigzag for signed values).

namespace {

void put_unsigned(std::string& out, std::uint64_t v)
{
    do {
        unsigned char byte = v & 0x7f;
        v >>= 7;
        if (v != 0)
            byte |= 0x80;
        out.push_back(static_cast<char>(byte));
    } while (v != 0);
}

void put_signed(std::string& out, std::int64_t v)
{
    put_unsigned(out, (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63));
}

void put_integer(std::string& out, const Integer& z)
{
    std::size_t count = (mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8;
    std::string bytes(count, '\0');
    std::size_t written = 0;
    if (z != 0)
        mpz_export(bytes.data(), &written, 1, 1, 1, 0, z.get_mpz_t());
    bytes.resize(written);
    out.push_back(static_cast<char>(sgn(z) < 0 ? 1 : 0));
    put_unsigned(out, written);
    out += bytes;
}

void put_lamps(std::string& out, const Lamps& lamps)
{
    put_unsigned(out, lamps.size());
    for (auto [pos, value] : lamps) {
        put_signed(out, pos);
        put_signed(out, value);
    }
}

class Reader {
public:
    explicit Reader(std::string_view bytes) : bytes_(bytes) {}

    unsigned char byte()
    {
        if (pos_ >= bytes_.size())
            throw ParseError("truncated element encoding");
        return static_cast<unsigned char>(bytes_[pos_++]);
    }

    std::uint64_t get_unsigned()
    {
        std::uint64_t v = 0;
        for (int shift = 0; shift < 64; shift += 7) {
            unsigned char b = byte();
            v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
            if (!(b & 0x80))
                return v;
        }
        throw ParseError("varint too long");
    }

    std::int64_t get_signed()
    {
        std::uint64_t v = get_unsigned();
        return static_cast<std::int64_t>((v >> 1) ^ (~(v & 1) + 1));
    }

    Integer get_integer()
    {
        bool negative = byte() != 0;
        std::uint64_t count = get_unsigned();
        if (count > bytes_.size() - pos_)
            throw ParseError("truncated integer");
        Integer z = 0;
        if (count > 0)
            mpz_import(z.get_mpz_t(), count, 1, 1, 1, 0, bytes_.data() + pos_);
        pos_ += count;
        return negative ? Integer(-z) : z;
    }

    Lamps get_lamps()
    {
        std::uint64_t count = get_unsigned();
        Lamps lamps;
        for (std::uint64_t i = 0; i < count; ++i) {
            std::int64_t pos = get_signed();
            lamps.emplace_back(pos, get_signed());
        }
        return lamps;
    }

    bool done() const { return pos_ == bytes_.size(); }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string canonical_encode(const GroupElement& g)
{
    std::string out;
    if (auto* x = std::get_if<BsElement>(&g)) {
        out.push_back('B');
        put_unsigned(out, static_cast<std::uint64_t>(x->base()));
        put_signed(out, x->k());
        put_unsigned(out, x->denominator_exponent());
        put_integer(out, x->numerator());
    } else if (auto* x = std::get_if<LampElement>(&g)) {
        out.push_back('L');
        put_unsigned(out, static_cast<std::uint64_t>(x->modulus()));
        put_signed(out, x->shift());
        put_lamps(out, x->lamps());
    } else {
        const auto& w = std::get<WreathZElement>(g);
        out.push_back('W');
        put_signed(out, w.shift());
        put_lamps(out, w.lamps());
    }
    return out;
}

GroupElement canonical_decode(std::string_view bytes)
{
    Reader in(bytes);
    unsigned char tag = in.byte();
    GroupElement result = WreathZElement::identity();
    if (tag == 'B') {
        auto base = static_cast<long>(in.get_unsigned());
        std::int64_t k = in.get_signed();
        std::uint64_t exp = in.get_unsigned();
        result = BsElement(base, k, in.get_integer(), exp);
    } else if (tag == 'L') {
        auto modulus = static_cast<long>(in.get_unsigned());
        std::int64_t shift = in.get_signed();
        result = LampElement(modulus, in.get_lamps(), shift);
    } else if (tag == 'W') {
        std::int64_t shift = in.get_signed();
        result = WreathZElement(in.get_lamps(), shift);
    } else {
        throw ParseError("unknown element tag");
    }
    if (!in.done())
        throw ParseError("trailing bytes in element encoding");
    return result;
}

std::size_t ElementHash::operator()(const GroupElement& g) const
{
    return std::hash<std::string>{}(canonical_encode(g));
}

std::string to_string(const GroupElement& g)
{
    std::ostringstream os;
    auto lamps_str = [&](const Lamps& lamps) {
        os << '{';
        for (std::size_t i = 0; i < lamps.size(); ++i)
            os << (i ? ", " : "") << lamps[i].first << ':' << lamps[i].second;
        os << '}';
    };
    if (auto* x = std::get_if<BsElement>(&g)) {
        os << "(k=" << x->k() << ", b=" << to_string(x->translation()) << ')';
    } else if (auto* x = std::get_if<LampElement>(&g)) {
        os << "(lamps=";
        lamps_str(x->lamps());
        os << ", shift=" << x->shift() << ')';
    } else {
        const auto& w = std::get<WreathZElement>(g);
        os << "(lamps=";
        lamps_str(w.lamps());
        os << ", shift=" << w.shift() << ')';
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Word parse_word(std::string_view text)
{
    Word word;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '*' || c == '.'; };
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !is_space(text[i]) && text[i] != '^')
            ++i;
        Letter letter{std::string(text.substr(start, i - start)), 1};
        if (letter.label.empty())
            throw ParseError("missing generator label in '" + std::string(text) + "'");
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t exp_start = i;
            while (i < text.size() && !is_space(text[i]))
                ++i;
            std::string_view exp = text.substr(exp_start, i - exp_start);
            auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), letter.exponent);
            if (ec != std::errc() || ptr != exp.data() + exp.size() || letter.exponent == 0)
                throw ParseError("bad exponent in '" + std::string(text) + "'");
        }
        word.push_back(std::move(letter));
    }
    return word;
}

std::string to_string(const Word& word)
{
    std::string out;
    for (const auto& letter : word) {
        if (!out.empty())
            out += ' ';
        out += letter.label;
        if (letter.exponent != 1)
            out += '^' + std::to_string(letter.exponent);
    }
    return out;
}

std::size_t word_length(const Word& word)
{
    std::size_t n = 0;
    for (const auto& letter : word)
        n += static_cast<std::size_t>(letter.exponent < 0 ? -letter.exponent : letter.exponent);
    return n;
}

GeneratorSet::GeneratorSet(GroupInstance group, std::vector<std::pair<std::string, GroupElement>> generators)
    : group_(group), generators_(std::move(generators))
{
    std::vector<std::string> seen_labels;
    std::vector<std::string> seen_codes;
    for (const auto& [label, element] : generators_) {
        if (label.empty())
            throw PreconditionViolation("generator labels must be nonempty");
        if (std::find(seen_labels.begin(), seen_labels.end(), label) != seen_labels.end())
            throw PreconditionViolation("duplicate generator label '" + label + "'");
        seen_labels.push_back(label);
        if (!group_.contains(element))
            throw GroupMismatch("generator '" + label + "' is not an element of " + group_.name());
        for (const GroupElement& candidate : {element, invert(element)}) {
            std::string code = canonical_encode(candidate);
            if (std::find(seen_codes.begin(), seen_codes.end(), code) == seen_codes.end()) {
                seen_codes.push_back(std::move(code));
                closure_.push_back(candidate);
            }
        }
    }
}

GeneratorSet GeneratorSet::canonical(const GroupInstance& group)
{
    return GeneratorSet(group, {{"a", group.a()}, {"t", group.t()}});
}

GeneratorSet GeneratorSet::from_words(const GroupInstance& group,
                                      const std::vector<std::pair<std::string, Word>>& generators)
{
    GeneratorSet base = canonical(group);
    std::vector<std::pair<std::string, GroupElement>> elements;
    for (const auto& [label, word] : generators) {
        if (word.empty())
            throw PreconditionViolation("generator '" + label + "' has an empty word");
        elements.emplace_back(label, element_from_word(base, word));
    }
    return GeneratorSet(group, std::move(elements));
}

std::vector<std::string> GeneratorSet::labels() const
{
    std::vector<std::string> out;
    for (const auto& entry : generators_)
        out.push_back(entry.first);
    return out;
}

bool GeneratorSet::has_label(std::string_view label) const
{
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const auto& entry) { return entry.first == label; });
}

const GroupElement& GeneratorSet::element(std::string_view label) const
{
    for (const auto& entry : generators_)
        if (entry.first == label)
            return entry.second;
    throw UnknownLabel("unknown generator label '" + std::string(label) + "'");
}

GroupElement element_from_word(const GeneratorSet& gens, const Word& word)
{
    GroupElement g = gens.group().identity();
    for (const auto& letter : word)
        g = multiply(g, power(gens.element(letter.label), letter.exponent));
    return g;
}

}  // namespace mgrowth
