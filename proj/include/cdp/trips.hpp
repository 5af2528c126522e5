#ifndef CDP_TRIPS_HPP
#define CDP_TRIPS_HPP

#include "cdp/core.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cdp {

/// Three indices written in cyclically positive order: i_x * i_y = +i_z.
using CpoTriple = std::array<Index, 3>;

/**
 * Associative triplet stored ascending (a < b < c).
 *
 * `good` is true when the ascending order is itself cyclically positive,
 * i.e. i_a * i_b = +i_c. Otherwise the positive orientation is (a, c, b).
 */
struct Trip {
    Index a = 0;
    Index b = 0;
    Index c = 0;
    bool good = true;

    CpoTriple cpo() const noexcept { return good ? CpoTriple{a, b, c} : CpoTriple{a, c, b}; }

    friend bool operator==(const Trip&, const Trip&) = default;
    friend auto operator<=>(const Trip&, const Trip&) = default;
};

struct TripCount {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t good = 0;
    std::uint64_t bad = 0;

    friend bool operator==(const TripCount&, const TripCount&) = default;
};

/// True iff a xor b = c for three distinct nonzero indices. Out-of-range throws.
bool is_trip(Index a, Index b, Index c, Level lvl);

/// Canonical trip for the given indices in any order; throws if they do not form a trip.
Trip cpo_orient(Index a, Index b, Index c, Level lvl);

/// All trips at `lvl`, sorted by (a, b, c). Empty for N < 2.
std::vector<Trip> enumerate_trips(Level lvl);

/// Closed-form counts: total = (2^N-1)(2^N-2)/6, bad = 2 * total(N-1).
TripCount trip_count(int n);

/// True iff the triple is cyclically positive under the basis product.
bool is_cpo(const CpoTriple& t) noexcept;

/**
 * Adds `g` to two terms of each rotation of a CPO trip, which reverses the
 * orientation: (a, b, c) -> (a, c+g, b+g). Returns the three new trips in CPO,
 * in the order produced from the rotations starting at a, b, c.
 */
std::array<CpoTriple, 3> rule2_expand(const CpoTriple& t, Index g);

/// "a b c good|bad"
std::string format_trip(const Trip& t);
void write_trips(std::ostream& out, const std::vector<Trip>& trips);

} // namespace cdp

#endif // CDP_TRIPS_HPP
