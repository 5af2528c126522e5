#include "cdp/trips.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <tuple>

namespace cdp {

bool is_trip(Index a, Index b, Index c, Level lvl)
{
    for (Index i : {a, b, c}) {
        if (!lvl.contains(i)) {
            throw DomainError("index " + std::to_string(i) + " out of range for N=" +
                              std::to_string(lvl.n()));
        }
    }
    if (a == 0 || b == 0 || c == 0 || a == b || b == c || a == c) return false;
    return (a ^ b) == c;
}

Trip cpo_orient(Index a, Index b, Index c, Level lvl)
{
    if (!is_trip(a, b, c, lvl)) {
        throw DomainError("(" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ") is not a trip");
    }
    std::array<Index, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return Trip{v[0], v[1], v[2], basis_sign(v[0], v[1]) > 0};
}

std::vector<Trip> enumerate_trips(Level lvl)
{
    std::vector<Trip> out;
    if (lvl.n() < 2) return out;
    const Index d = lvl.dim();
    for (Index a = 1; a < d; ++a) {
        for (Index b = a + 1; b < d; ++b) {
            const Index c = a ^ b;
            if (c > b) out.push_back(Trip{a, b, c, basis_sign(a, b) > 0});
        }
    }
    return out;
}

TripCount trip_count(int n)
{
    if (n < 2 || n > 31) throw DomainError("trip_count needs 2 <= N <= 31");
    auto total = [](int k) -> std::uint64_t {
        const std::uint64_t u = (std::uint64_t{1} << k) - 1;
        return u * (u - 1) / 6;
    };
    TripCount tc;
    tc.n = n;
    tc.total = total(n);
    tc.bad = n == 2 ? 0 : 2 * total(n - 1);
    tc.good = tc.total - tc.bad;
    return tc;
}

bool is_cpo(const CpoTriple& t) noexcept
{
    return (t[0] ^ t[1]) == t[2] && t[0] != 0 && t[1] != 0 && t[2] != 0 && t[0] != t[1] &&
           basis_sign(t[0], t[1]) > 0;
}

std::array<CpoTriple, 3> rule2_expand(const CpoTriple& t, Index g)
{
    if (g == 0 || !std::has_single_bit(g)) {
        throw DomainError("generator " + std::to_string(g) + " is not a power of two");
    }
    for (Index i : t) {
        if (i >= g) {
            throw DomainError("index " + std::to_string(i) + " not below generator " +
                              std::to_string(g));
        }
    }
    if (!is_cpo(t)) throw DomainError("input triple is not a trip in cyclically positive order");
    std::array<CpoTriple, 3> out{};
    for (std::size_t r = 0; r < 3; ++r) {
        const Index x = t[r];
        const Index y = t[(r + 1) % 3];
        const Index z = t[(r + 2) % 3];
        out[r] = CpoTriple{x, z + g, y + g};
    }
    return out;
}

std::string format_trip(const Trip& t)
{
    return std::to_string(t.a) + ' ' + std::to_string(t.b) + ' ' + std::to_string(t.c) +
           (t.good ? " good" : " bad");
}

void write_trips(std::ostream& out, const std::vector<Trip>& trips)
{
    std::vector<Trip> sorted = trips;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Trip& l, const Trip& r) {
        return std::tie(l.a, l.b, l.c) < std::tie(r.a, r.b, r.c);
    });
    for (const Trip& t : sorted) out << format_trip(t) << '\n';
}

} // namespace cdp
