#ifndef CDP_BOX_KITE_HPP
#define CDP_BOX_KITE_HPP

#include "cdp/core.hpp"
#include "cdp/trips.hpp"
#include "cdp/zero_divisors.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cdp {

/// Octahedral vertex labels. Struts join A-F, B-E and C-D.
enum class Label { A, B, C, D, E, F };

inline constexpr std::array<Label, 6> kLabels{Label::A, Label::B, Label::C,
                                              Label::D, Label::E, Label::F};

char label_char(Label l) noexcept;
Label strut_opposite(Label l) noexcept;

/// RED joins diagonals of opposite inner sign, BLUE joins like-signed ones.
enum class EdgeSign { kRed, kBlue };

std::string_view edge_sign_name(EdgeSign s) noexcept;

struct Edge {
    Label from;
    Label to;
    EdgeSign sign;
};

/**
 * Six assessors on an octahedral frame with strut constant S.
 *
 * Every vertex has hi = lo xor (G + S); strut-opposite vertices have L-indices
 * XORing to S; the twelve non-strut vertex pairs all make zero. A carries the
 * smallest L-index of the zigzag sail, (A, B, C) is cyclically positive, and
 * F, E, D are the strut partners of A, B, C.
 */
class BoxKite {
public:
    Level level() const noexcept { return lvl_; }
    Index strut() const noexcept { return s_; }
    Index x() const noexcept { return lvl_.generator() + s_; }

    const Assessor& vertex(Label l) const noexcept { return vertices_[static_cast<std::size_t>(l)]; }
    const std::array<Assessor, 6>& vertices() const noexcept { return vertices_; }
    /// Twelve edges in label order AB AC AD AE BC BD BF CE CF DE DF EF.
    const std::array<Edge, 12>& edges() const noexcept { return edges_; }
    EdgeSign edge_sign(Label a, Label b) const;

private:
    friend BoxKite build_boxkite(Level lvl, Index s, const std::array<Index, 3>& zigzag);

    BoxKite(Level lvl, Index s) : lvl_(lvl), s_(s) {}

    Level lvl_;
    Index s_;
    std::array<Assessor, 6> vertices_{};
    std::array<Edge, 12> edges_{};
};

/// Builds a kite from its zigzag L-trip (any order). Throws DomainError when the
/// trip is invalid, touches a strut pair or S itself, some edge is not a DMZ,
/// or the trip's edges are not all RED.
BoxKite build_boxkite(Level lvl, Index s, const std::array<Index, 3>& zigzag);

/// Closed triple of strut pairs whose cross edges do not all make zero.
struct BrokenFrame {
    std::array<Index, 6> lo{};  // pair-wise: {x, x^S, y, y^S, z, z^S}
    std::size_t zero_edges = 0;
};

struct Census {
    Level lvl{4};
    Index s = 0;
    std::vector<BoxKite> kites;
    std::vector<BrokenFrame> broken;
};

/// All box-kites for (N, S), 1 <= S < G, ordered by their A, B, C L-indices.
Census census(Level lvl, Index s);

enum class SailKind { kZigzag, kTrefoil };

struct Sail {
    SailKind kind;
    std::array<Label, 3> labels;  // zigzag ABC; trefoils ADE, FDB, FCE
    std::array<CpoTriple, 4> trips;  // L-trip, then the three U-trips
};

/// Zigzag first, then trefoils (A,D,E), (F,D,B), (F,C,E). Throws if the edge
/// signs do not follow the zigzag/trefoil pattern.
std::array<Sail, 4> classify_sails(const BoxKite& bk);

enum class LanyardKind { kZigzag, kTrefoil, kCatamaran, kBlues };

struct Lanyard {
    std::vector<Diagonal> visited;  // closed cycle, no repeated start
    std::string signature;          // one '/' or '\\' per visited diagonal
};

/**
 * Walks a closed chain of zero products.
 *
 * `which` picks the trefoil (0..2, same order as classify_sails), the
 * catamaran by its mast strut (0 = AF over BCED, 1 = BE over ACFD,
 * 2 = CD over ABFE), or the Blues (0 = all slash, 1 = all backslash).
 * Sails are traversed twice so all six diagonals are engaged.
 */
Lanyard trace_lanyard(const BoxKite& bk, LanyardKind kind, int which = 0);

/// Walks `cycle` from (cycle[0], start), choosing at each step the slope that
/// makes zero, until the start diagonal recurs. Throws if the chain breaks.
Lanyard trace_cycle(const BoxKite& bk, const std::vector<Label>& cycle, Slope start);

/// Cyclic equality of slope strings.
bool same_signature(std::string_view a, std::string_view b);

enum class KiteType { kTypeI, kTypeII, kOther };

struct StrutViziers {
    Label zigzag;  // z, Z
    Label vent;    // v, V
    std::array<bool, 2> vz1{};  // v*z = +S, V*Z = +S
    std::array<bool, 2> vz2{};  // V*z = +G, Z*v = +G
    std::array<bool, 2> vz3{};  // V*v = +X, z*Z = +X
    bool vz1_unsigned = false;
    bool vz2_unsigned = false;
    bool vz3_unsigned = false;
    bool reversed = false;  // vent and zigzag signing swapped
};

struct VizierReport {
    std::array<StrutViziers, 3> struts{};
    KiteType type = KiteType::kOther;
};

VizierReport viziers_check(const BoxKite& bk);

struct EdgeColorStats {
    std::size_t red = 0;
    std::size_t blue = 0;
    bool red_is_zigzag_and_vent = false;  // RED set = triangle ABC + triangle DEF
};

EdgeColorStats edge_color_stats(const BoxKite& bk);

/// Strut constants reached by twisting each side of a catamaran square, in
/// traversal order of trace_lanyard(kCatamaran, which).
std::array<Index, 4> catamaran_twist_targets(const BoxKite& bk, int which);

/// Header "N S", six "label lo hi" lines, twelve "label1 label2 RED|BLUE" lines.
void write_boxkite(std::ostream& out, const BoxKite& bk);

/// Re-checks every vertex and edge invariant; returns a description of the
/// first violation, or an empty string.
std::string check_invariants(const BoxKite& bk);

} // namespace cdp

#endif // CDP_BOX_KITE_HPP
