#pragma once

// Exact normal forms for BS(1,n), the lamplighter groups L_p = (Z/p) wr Z
// and the wreath product Z wr Z, plus words over named generating sets.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mgrowth/numeric.hpp"

namespace mgrowth {

enum class Family { BaumslagSolitar, Lamplighter, WreathZ };

/// Finitely supported function Z -> values, sorted by position, no zero
/// values stored.
using Lamps = std::vector<std::pair<std::int64_t, std::int64_t>>;

/// Element of BS(1,n) = <a, t | t a t^-1 = a^n> realized as the affine map
/// x -> n^k x + b with b in Z[1/n].  Stored as b = numerator / n^e where
/// e = 0 when numerator = 0 and n does not divide numerator when e > 0.
/// Multiplication is composition: (g*h)(x) = g(h(x)); a = (0,1), t = (1,0).
class BsElement {
public:
    BsElement(long base, std::int64_t k, Integer numerator, std::uint64_t denominator_exponent);

    static BsElement identity(long base) { return {base, 0, 0, 0}; }

    long base() const noexcept { return base_; }
    std::int64_t k() const noexcept { return k_; }
    const Integer& numerator() const noexcept { return numerator_; }
    std::uint64_t denominator_exponent() const noexcept { return exponent_; }

    /// b as an exact rational.
    Rational translation() const;
    /// n^k x + b.
    Rational apply(const Rational& x) const;

    friend bool operator==(const BsElement&, const BsElement&) = default;

private:
    long base_;
    std::int64_t k_;
    Integer numerator_;
    std::uint64_t exponent_;
};

/// Element (f, s) of L_p: f is the lamp configuration with values in Z/p,
/// s the lamplighter position.  (f,s)(f',s') = (f + f'(. - s), s + s');
/// a is the lamp at position 0, t = (0, 1).
class LampElement {
public:
    LampElement(long modulus, Lamps lamps, std::int64_t shift);

    static LampElement identity(long modulus) { return {modulus, {}, 0}; }

    long modulus() const noexcept { return modulus_; }
    const Lamps& lamps() const noexcept { return lamps_; }
    std::int64_t shift() const noexcept { return shift_; }

    friend bool operator==(const LampElement&, const LampElement&) = default;

private:
    long modulus_;
    Lamps lamps_;
    std::int64_t shift_;
};

/// Element of Z wr Z, same conventions as LampElement with integer lamps.
class WreathZElement {
public:
    WreathZElement(Lamps lamps, std::int64_t shift);

    static WreathZElement identity() { return {{}, 0}; }

    const Lamps& lamps() const noexcept { return lamps_; }
    std::int64_t shift() const noexcept { return shift_; }

    friend bool operator==(const WreathZElement&, const WreathZElement&) = default;

private:
    Lamps lamps_;
    std::int64_t shift_;
};

using GroupElement = std::variant<BsElement, LampElement, WreathZElement>;

class GroupInstance {
public:
    static GroupInstance baumslag_solitar(long n);
    static GroupInstance lamplighter(long p);
    static GroupInstance wreath_z();

    /// Accepts "bs:N", "lamplighter:P" (or "lp:P") and "wreathzz".
    static GroupInstance parse(std::string_view selector);

    Family family() const noexcept { return family_; }
    /// n for BS(1,n), p for L_p, empty for Z wr Z.
    std::optional<long> parameter() const;

    GroupElement identity() const;
    GroupElement a() const;
    GroupElement t() const;

    bool contains(const GroupElement& g) const;

    /// Human-readable name, e.g. "BS(1,3)", "L_2", "Z wr Z".
    std::string name() const;
    /// Round-trips through parse().
    std::string selector() const;

    friend bool operator==(const GroupInstance&, const GroupInstance&) = default;

private:
    GroupInstance(Family family, long parameter) : family_(family), parameter_(parameter) {}

    Family family_;
    long parameter_;
};

GroupInstance group_of(const GroupElement& g);

/// Throws GroupMismatch when g and h live in different group instances.
GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement invert(const GroupElement& g);
GroupElement power(const GroupElement& g, std::int64_t exponent);
bool is_identity(const GroupElement& g);

/// Image under the exponent-sum homomorphism a -> 0, t -> 1.
std::int64_t phi_exponent(const GroupElement& g);

/// Z wr Z -> BS(1,n) via (f, s) -> (s, sum_x f(x) n^x), or Z wr Z -> L_p by
/// reducing lamps mod p.  Throws InvalidTarget for a Z wr Z target.
GroupElement quotient_map(const WreathZElement& g, const GroupInstance& target);

/// Injective byte encoding; equal elements have equal encodings.
std::string canonical_encode(const GroupElement& g);
GroupElement canonical_decode(std::string_view bytes);

std::string to_string(const GroupElement& g);

struct ElementHash {
    std::size_t operator()(const GroupElement& g) const;
};

// ---------------------------------------------------------------------------
// Words and generating sets

/// One syllable label^exponent of a word.
struct Letter {
    std::string label;
    std::int64_t exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Parses whitespace separated syllables "x", "x^-1", "x^3".  A bare upper
/// case single letter is not special.  Throws ParseError.
Word parse_word(std::string_view text);
std::string to_string(const Word& word);
std::size_t word_length(const Word& word);

/// Ordered, labelled generating set S together with the deduplicated
/// closure S u S^-1 used for enumeration.
class GeneratorSet {
public:
    GeneratorSet(GroupInstance group, std::vector<std::pair<std::string, GroupElement>> generators);

    /// {a, t}.
    static GeneratorSet canonical(const GroupInstance& group);

    /// Generators given as words over the canonical alphabet {a, t}.
    static GeneratorSet from_words(const GroupInstance& group,
                                   const std::vector<std::pair<std::string, Word>>& generators);

    const GroupInstance& group() const noexcept { return group_; }
    std::size_t size() const noexcept { return generators_.size(); }
    const std::vector<std::pair<std::string, GroupElement>>& generators() const noexcept
    {
        return generators_;
    }
    std::vector<std::string> labels() const;
    const GroupElement& element(std::string_view label) const;
    bool has_label(std::string_view label) const;

    /// S u S^-1 with duplicates (by canonical form) removed, in the order
    /// s_1, s_1^-1, s_2, s_2^-1, ...
    const std::vector<GroupElement>& closure() const noexcept { return closure_; }

private:
    GroupInstance group_;
    std::vector<std::pair<std::string, GroupElement>> generators_;
    std::vector<GroupElement> closure_;
};

/// Left-to-right product of the letters.  Throws UnknownLabel.
GroupElement element_from_word(const GeneratorSet& gens, const Word& word);

}  // namespace mgrowth
