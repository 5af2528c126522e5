#ifndef CDP_ZERO_DIVISORS_HPP
#define CDP_ZERO_DIVISORS_HPP

#include "cdp/core.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cdp {

/**
 * Plane spanned by a low unit i_lo (1 <= lo < G) and a high unit i_hi
 * (G < hi < 2^N). Its two diagonals i_lo + i_hi and i_lo - i_hi are the
 * primitive zero-divisor lines. Equality is plane equality; slope lives in
 * Diagonal.
 */
struct Assessor {
    Index lo = 0;
    Index hi = 0;
    Level lvl{4};

    friend bool operator==(const Assessor&, const Assessor&) = default;
};

/// Validating constructor; throws DomainError when the plane does not straddle G.
Assessor make_assessor(Index lo, Index hi, Level lvl);

/// lo xor hi xor G: the strut constant of the box-kites this plane can belong to.
Index strut_constant(const Assessor& a) noexcept;

bool operator<(const Assessor& l, const Assessor& r) noexcept;
std::string to_string(const Assessor& a);

enum class Slope { kSlash, kBackslash };

constexpr Coeff slope_sign(Slope s) noexcept { return s == Slope::kSlash ? 1 : -1; }
constexpr Slope flip(Slope s) noexcept { return s == Slope::kSlash ? Slope::kBackslash : Slope::kSlash; }
constexpr char slope_symbol(Slope s) noexcept { return s == Slope::kSlash ? '/' : '\\'; }

/// Line k(i_lo + i_hi) for kSlash, k(i_lo - i_hi) for kBackslash.
struct Diagonal {
    Assessor assessor;
    Slope slope = Slope::kSlash;

    Element element() const { return Element::dyad(assessor.lo, 1, assessor.hi, slope_sign(slope)); }

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

std::string to_string(const Diagonal& d);

/// Which slope pairing annihilates: same slopes (//, \\) or opposite (/\, \/).
struct DmzPattern {
    bool same_slope_zero = false;

    friend bool operator==(const DmzPattern&, const DmzPattern&) = default;
};

/// Exact four-term product of two diagonals; throws on level mismatch.
Element diagonal_product(const Diagonal& d1, const Diagonal& d2);

bool is_dmz(const Diagonal& d1, const Diagonal& d2);

/**
 * Annihilating slope class of two distinct assessors, or nullopt when no
 * pairing of their diagonals multiplies to zero. Throws DomainError if the
 * zero set is not one full slope class (a broken dichotomy).
 */
std::optional<DmzPattern> dmz_pattern(const Assessor& a1, const Assessor& a2);

/// Outcome of an exhaustive scan.
struct TheoremCheck {
    std::string name;
    bool pass = true;
    std::uint64_t cases = 0;
    std::vector<std::string> counterexamples;  // first few only
    std::string note;

    void fail(std::string what);
};

/// No zero product between a dyad with both indices below G and a dyad
/// straddling G (one index below, one at or above), in either order.
TheoremCheck theorem1_check(Level lvl);

/// No dyad containing i_G annihilates with any two-term dyad, in either order.
TheoremCheck theorem2_check(Level lvl);

/// Every candidate assessor pair with an annihilating pairing has exactly one
/// full slope class annihilating.
TheoremCheck theorem3_check(Level lvl);

/// The two diagonals of one plane never annihilate; their product is
/// 2 * (i_hi * i_lo), a single imaginary term.
bool theorem4_check(const Assessor& a);
TheoremCheck theorem4_scan(Level lvl);

/// Third assessor produced by a DMZ pair: (lo1 xor lo2, lo1 xor hi2).
/// Throws DomainError if the inputs are not a DMZ pair.
Assessor emanate(const Assessor& a1, const Assessor& a2);

/**
 * True when the four-term product of a DMZ pair splits, row by row of the
 * first factor, into two oppositely signed copies of one dyad over the
 * emanated assessor's indices, with the (lo,hi) cross terms canceling each
 * other and the (lo,lo)/(hi,hi) terms canceling each other.
 */
bool emanation_cancels(const Diagonal& d1, const Diagonal& d2);

/// Emanation closure over every DMZ pair of candidate assessors.
TheoremCheck theorem5_check(Level lvl);

struct TwistResult {
    Diagonal first;   // U + s2*v, on plane (v, U)
    Diagonal second;  // V - s1*u, on plane (u, V)
    bool is_dmz = false;
};

/// Twist products of a DMZ pair (U + s1 u), (V + s2 v). Always returns the
/// twisted diagonals; `is_dmz` reports whether they annihilate.
TwistResult twist(const Diagonal& d1, const Diagonal& d2);

/// Number of twists needed to return to (d1, d2); 0 if a step is not a DMZ
/// or `max_steps` is exceeded.
std::size_t twist_orbit_length(const Diagonal& d1, const Diagonal& d2, std::size_t max_steps = 64);

struct TwistRecord {
    Diagonal d1;
    Diagonal d2;
    TwistResult result;
    Index source_strut = 0;
    Index target_strut = 0;
};

struct TwistSurvey {
    std::uint64_t total = 0;
    std::uint64_t valid = 0;
    std::vector<TwistRecord> invalid;
};

/// Twists every ordered DMZ diagonal pair of candidate assessors.
TwistSurvey twist_survey(Level lvl);

/// Candidate planes: each lo in 1..G-1 with each hi in G+1..2^N-1 except lo xor G.
/// Sorted by (lo, hi). Empty for N < 4.
std::vector<Assessor> enumerate_assessors(Level lvl);

struct DmzRecord {
    Assessor first;
    Assessor second;
    DmzPattern pattern;
};

/// All unordered candidate pairs that make zero, optionally restricted to
/// one strut constant. Sorted by (first, second).
std::vector<DmzRecord> dmz_scan(Level lvl, std::optional<Index> strut = std::nullopt);

/// "lo1 hi1 lo2 hi2 same|opposite"
void write_dmz_scan(std::ostream& out, const std::vector<DmzRecord>& records);

} // namespace cdp

#endif // CDP_ZERO_DIVISORS_HPP
