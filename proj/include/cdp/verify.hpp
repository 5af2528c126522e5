#ifndef CDP_VERIFY_HPP
#define CDP_VERIFY_HPP

#include "cdp/core.hpp"
#include "cdp/zero_divisors.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace cdp {

enum class Verdict { kPass, kFail, kNote };

std::string_view verdict_name(Verdict v) noexcept;

struct TheoremReport {
    TheoremCheck check;
    Verdict verdict = Verdict::kPass;
};

/**
 * Exhaustive Theorem 1-7 checks at one level (N >= 4).
 *
 * Theorem 6 is reported as NOTE rather than FAIL above the sedenions when
 * some twists leave the box-kite family; the invalid twists are summarized.
 * Theorem 7 covers every box-kite of every strut constant.
 */
std::vector<TheoremReport> verify_level(Level lvl);

/// One "PASS|FAIL|NOTE <name> cases=<k>" line per theorem, then indented
/// counterexamples and notes.
void write_verify(std::ostream& out, const std::vector<TheoremReport>& reports);

/// Theorem 7 over every census kite of one level.
TheoremCheck theorem7_check(Level lvl);

/// Theorem 6 from a twist survey; `pass` is false whenever some twist is invalid.
TheoremCheck theorem6_check(Level lvl);

} // namespace cdp

#endif // CDP_VERIFY_HPP
