#include "cdp/box_kite.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

namespace cdp {

namespace {

constexpr std::array<std::pair<Label, Label>, 12> kEdgePairs{{
    {Label::A, Label::B}, {Label::A, Label::C}, {Label::A, Label::D}, {Label::A, Label::E},
    {Label::B, Label::C}, {Label::B, Label::D}, {Label::B, Label::F}, {Label::C, Label::E},
    {Label::C, Label::F}, {Label::D, Label::E}, {Label::D, Label::F}, {Label::E, Label::F},
}};

constexpr std::array<std::array<Label, 3>, 4> kSailLabels{{
    {Label::A, Label::B, Label::C},
    {Label::A, Label::D, Label::E},
    {Label::F, Label::D, Label::B},
    {Label::F, Label::C, Label::E},
}};

// Vertex of each trefoil shared with the zigzag.
constexpr std::array<Label, 3> kTrefoilHub{Label::A, Label::B, Label::C};

constexpr std::array<std::array<Label, 4>, 3> kCatamarans{{
    {Label::B, Label::C, Label::E, Label::D},
    {Label::A, Label::C, Label::F, Label::D},
    {Label::A, Label::B, Label::F, Label::E},
}};

constexpr std::array<Label, 6> kBluesHexagon{Label::A, Label::D, Label::B,
                                             Label::F, Label::C, Label::E};

void check_strut(Level lvl, Index s)
{
    if (lvl.n() < 4) throw DomainError("box-kites need N >= 4");
    if (s == 0 || s >= lvl.generator()) {
        throw DomainError("strut constant " + std::to_string(s) + " must be in 1.." +
                          std::to_string(lvl.generator() - 1));
    }
}

bool is_red(const Assessor& a, const Assessor& b, bool& dmz)
{
    const auto p = dmz_pattern(a, b);
    dmz = p.has_value();
    return p && !p->same_slope_zero;
}

bool edge_is(const BoxKite& bk, Label a, Label b, EdgeSign s) { return bk.edge_sign(a, b) == s; }

} // namespace

char label_char(Label l) noexcept { return static_cast<char>('A' + static_cast<int>(l)); }

Label strut_opposite(Label l) noexcept { return static_cast<Label>(5 - static_cast<int>(l)); }

std::string_view edge_sign_name(EdgeSign s) noexcept { return s == EdgeSign::kRed ? "RED" : "BLUE"; }

EdgeSign BoxKite::edge_sign(Label a, Label b) const
{
    for (const Edge& e : edges_) {
        if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) return e.sign;
    }
    throw DomainError(std::string("no edge between strut opposites ") + label_char(a) + label_char(b));
}

BoxKite build_boxkite(Level lvl, Index s, const std::array<Index, 3>& zigzag)
{
    check_strut(lvl, s);
    const Index g = lvl.generator();
    for (Index i : zigzag) {
        if (i == 0 || i >= g) throw DomainError("zigzag L-index " + std::to_string(i) + " not below G");
        if (i == s) throw DomainError("zigzag L-trip contains the strut constant");
    }
    if (!is_trip(zigzag[0], zigzag[1], zigzag[2], lvl)) throw DomainError("zigzag L-indices are not a trip");
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if ((zigzag[i] ^ zigzag[j]) == s) throw DomainError("zigzag L-trip contains a strut pair");
        }
    }

    const CpoTriple cpo = cpo_orient(zigzag[0], zigzag[1], zigzag[2], lvl).cpo();
    const Index x = g + s;
    BoxKite bk(lvl, s);
    const std::array<Index, 6> lo{cpo[0], cpo[1], cpo[2], cpo[2] ^ s, cpo[1] ^ s, cpo[0] ^ s};
    for (std::size_t i = 0; i < 6; ++i) bk.vertices_[i] = make_assessor(lo[i], lo[i] ^ x, lvl);

    for (std::size_t k = 0; k < kEdgePairs.size(); ++k) {
        const auto [a, b] = kEdgePairs[k];
        bool dmz = false;
        const bool red = is_red(bk.vertex(a), bk.vertex(b), dmz);
        if (!dmz) {
            throw DomainError(std::string("broken frame: edge ") + label_char(a) + label_char(b) +
                              " does not make zero");
        }
        bk.edges_[k] = Edge{a, b, red ? EdgeSign::kRed : EdgeSign::kBlue};
    }
    for (auto [a, b] : {std::pair{Label::A, Label::B}, {Label::A, Label::C}, {Label::B, Label::C}}) {
        if (!edge_is(bk, a, b, EdgeSign::kRed)) throw DomainError("given trip is not the zigzag sail");
    }
    return bk;
}

Census census(Level lvl, Index s)
{
    check_strut(lvl, s);
    const Index g = lvl.generator();
    const Index x = g + s;

    std::vector<Index> reps;  // smaller member of each strut pair
    for (Index l = 1; l < g; ++l) {
        if (l != s && l < (l ^ s)) reps.push_back(l);
    }
    auto rep_of = [s](Index l) { return std::min(l, l ^ s); };
    auto plane = [&](Index l) { return Assessor{l, l ^ x, lvl}; };

    Census out{lvl, s, {}, {}};
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const Index k = rep_of(reps[i] ^ reps[j]);
            if (k <= reps[j]) continue;
            const std::array<Index, 6> lo{reps[i], reps[i] ^ s, reps[j], reps[j] ^ s, k, k ^ s};

            std::size_t zero_edges = 0;
            for (std::size_t p = 0; p < 6; ++p) {
                for (std::size_t q = p + 1; q < 6; ++q) {
                    if ((lo[p] ^ lo[q]) == s) continue;
                    if (dmz_pattern(plane(lo[p]), plane(lo[q]))) ++zero_edges;
                }
            }
            if (zero_edges != 12) {
                out.broken.push_back({lo, zero_edges});
                continue;
            }

            // Sails are the four faces whose L-indices XOR to zero; the zigzag is the all-RED one.
            std::vector<std::array<Index, 3>> zigzags;
            for (Index a : {lo[0], lo[1]}) {
                for (Index b : {lo[2], lo[3]}) {
                    for (Index c : {lo[4], lo[5]}) {
                        if ((a ^ b ^ c) != 0) continue;
                        bool dmz = false;
                        if (is_red(plane(a), plane(b), dmz) && is_red(plane(a), plane(c), dmz) &&
                            is_red(plane(b), plane(c), dmz)) {
                            zigzags.push_back({a, b, c});
                        }
                    }
                }
            }
            if (zigzags.size() != 1) {
                throw DomainError("kite frame at S=" + std::to_string(s) + " has " +
                                  std::to_string(zigzags.size()) + " all-RED sails");
            }
            out.kites.push_back(build_boxkite(lvl, s, zigzags.front()));
        }
    }
    std::sort(out.kites.begin(), out.kites.end(), [](const BoxKite& l, const BoxKite& r) {
        return std::tuple(l.vertex(Label::A).lo, l.vertex(Label::B).lo, l.vertex(Label::C).lo) <
               std::tuple(r.vertex(Label::A).lo, r.vertex(Label::B).lo, r.vertex(Label::C).lo);
    });
    return out;
}

std::array<Sail, 4> classify_sails(const BoxKite& bk)
{
    const Level lvl = bk.level();
    std::array<Sail, 4> sails{};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& labels = kSailLabels[i];
        const Assessor& p = bk.vertex(labels[0]);
        const Assessor& q = bk.vertex(labels[1]);
        const Assessor& r = bk.vertex(labels[2]);
        const std::array<std::array<Index, 3>, 4> raw{{
            {p.lo, q.lo, r.lo},
            {p.lo, q.hi, r.hi},
            {p.hi, q.lo, r.hi},
            {p.hi, q.hi, r.lo},
        }};
        Sail sail{i == 0 ? SailKind::kZigzag : SailKind::kTrefoil, labels, {}};
        for (std::size_t t = 0; t < 4; ++t) {
            if (!is_trip(raw[t][0], raw[t][1], raw[t][2], lvl)) {
                throw DomainError("sail " + std::to_string(i) + " index triple " + std::to_string(t) +
                                  " is not a trip");
            }
            sail.trips[t] = cpo_orient(raw[t][0], raw[t][1], raw[t][2], lvl).cpo();
        }
        sails[i] = sail;
    }

    for (auto [a, b] : {std::pair{Label::A, Label::B}, {Label::A, Label::C}, {Label::B, Label::C}}) {
        if (!edge_is(bk, a, b, EdgeSign::kRed)) throw DomainError("zigzag has a BLUE edge");
    }
    for (std::size_t i = 0; i < 3; ++i) {
        const Label hub = kTrefoilHub[i];
        for (Label other : kSailLabels[i + 1]) {
            if (other != hub && !edge_is(bk, hub, other, EdgeSign::kBlue)) {
                throw DomainError("trefoil edge at the zigzag vertex is RED");
            }
        }
    }
    return sails;
}

Lanyard trace_cycle(const BoxKite& bk, const std::vector<Label>& cycle, Slope start)
{
    if (cycle.size() < 2) throw DomainError("lanyard cycle needs at least two vertices");
    Lanyard out;
    Diagonal current{bk.vertex(cycle[0]), start};
    const Diagonal first = current;
    std::size_t pos = 0;
    const std::size_t limit = 2 * cycle.size();
    for (std::size_t step = 0; step < limit; ++step) {
        out.visited.push_back(current);
        out.signature.push_back(slope_symbol(current.slope));
        const std::size_t next_pos = (pos + 1) % cycle.size();
        const Assessor& next = bk.vertex(cycle[next_pos]);
        Diagonal chosen{next, Slope::kSlash};
        if (!is_dmz(current, chosen)) {
            chosen.slope = Slope::kBackslash;
            if (!is_dmz(current, chosen)) {
                throw DomainError(std::string("lanyard broken at ") + label_char(cycle[pos]) + "->" +
                                  label_char(cycle[next_pos]));
            }
        }
        if (chosen == first) return out;
        current = chosen;
        pos = next_pos;
    }
    throw DomainError("lanyard did not close");
}

Lanyard trace_lanyard(const BoxKite& bk, LanyardKind kind, int which)
{
    auto check_which = [which](int count) {
        if (which < 0 || which >= count) throw DomainError("lanyard selector out of range");
    };
    switch (kind) {
    case LanyardKind::kZigzag: {
        const auto& l = kSailLabels[0];
        return trace_cycle(bk, {l.begin(), l.end()}, Slope::kSlash);
    }
    case LanyardKind::kTrefoil: {
        check_which(3);
        const auto& l = kSailLabels[static_cast<std::size_t>(which) + 1];
        return trace_cycle(bk, {l.begin(), l.end()}, Slope::kSlash);
    }
    case LanyardKind::kCatamaran: {
        check_which(3);
        const auto& l = kCatamarans[static_cast<std::size_t>(which)];
        return trace_cycle(bk, {l.begin(), l.end()}, Slope::kSlash);
    }
    case LanyardKind::kBlues:
        check_which(2);
        return trace_cycle(bk, {kBluesHexagon.begin(), kBluesHexagon.end()},
                           which == 0 ? Slope::kSlash : Slope::kBackslash);
    }
    throw DomainError("unknown lanyard kind");
}

bool same_signature(std::string_view a, std::string_view b)
{
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const std::string doubled = std::string(a) + std::string(a);
    return doubled.find(b) != std::string::npos;
}

VizierReport viziers_check(const BoxKite& bk)
{
    const Index g = bk.level().generator();
    const Index s = bk.strut();
    const Index x = bk.x();
    auto pos = [](Index p, Index q) { return basis_sign(p, q) > 0; };

    VizierReport r;
    std::size_t reversed = 0;
    bool all_oriented = true;
    for (std::size_t i = 0; i < 3; ++i) {
        StrutViziers& sv = r.struts[i];
        sv.zigzag = kLabels[i];
        sv.vent = strut_opposite(sv.zigzag);
        const Index z = bk.vertex(sv.zigzag).lo;
        const Index big_z = bk.vertex(sv.zigzag).hi;
        const Index v = bk.vertex(sv.vent).lo;
        const Index big_v = bk.vertex(sv.vent).hi;

        sv.vz1 = {pos(v, z), pos(big_v, big_z)};
        sv.vz2 = {pos(big_v, z), pos(big_z, v)};
        sv.vz3 = {pos(big_v, v), pos(z, big_z)};
        sv.vz1_unsigned = (v ^ z) == s && (big_v ^ big_z) == s;
        sv.vz2_unsigned = (big_v ^ z) == g && (big_z ^ v) == g;
        sv.vz3_unsigned = (big_v ^ v) == x && (z ^ big_z) == x;
        sv.reversed = !sv.vz1[0] && !sv.vz1[1];
        if (sv.reversed) ++reversed;
        for (bool b : {sv.vz1[0], sv.vz1[1], sv.vz2[0], sv.vz2[1], sv.vz3[0], sv.vz3[1]}) {
            all_oriented = all_oriented && b;
        }
    }
    if (all_oriented) {
        r.type = KiteType::kTypeI;
    } else if (reversed == 2) {
        r.type = KiteType::kTypeII;
    }
    return r;
}

EdgeColorStats edge_color_stats(const BoxKite& bk)
{
    EdgeColorStats st;
    bool matches = true;
    for (const Edge& e : bk.edges()) {
        const bool red = e.sign == EdgeSign::kRed;
        red ? ++st.red : ++st.blue;
        const bool both_low = e.from <= Label::C && e.to <= Label::C;
        const bool both_high = e.from >= Label::D && e.to >= Label::D;
        matches = matches && (red == (both_low || both_high));
    }
    st.red_is_zigzag_and_vent = matches;
    return st;
}

std::array<Index, 4> catamaran_twist_targets(const BoxKite& bk, int which)
{
    const Lanyard lan = trace_lanyard(bk, LanyardKind::kCatamaran, which);
    if (lan.visited.size() != 4) throw DomainError("catamaran lanyard did not close in four steps");
    std::array<Index, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) {
        const TwistResult t = twist(lan.visited[k], lan.visited[(k + 1) % 4]);
        out[k] = strut_constant(t.first.assessor);
    }
    return out;
}

void write_boxkite(std::ostream& out, const BoxKite& bk)
{
    out << bk.level().n() << ' ' << bk.strut() << '\n';
    for (Label l : kLabels) out << label_char(l) << ' ' << bk.vertex(l).lo << ' ' << bk.vertex(l).hi << '\n';
    for (const Edge& e : bk.edges()) {
        out << label_char(e.from) << ' ' << label_char(e.to) << ' ' << edge_sign_name(e.sign) << '\n';
    }
}

std::string check_invariants(const BoxKite& bk)
{
    const Index s = bk.strut();
    const Index x = bk.x();
    for (Label l : kLabels) {
        const Assessor& a = bk.vertex(l);
        if (a.hi != (a.lo ^ x)) return std::string("vertex ") + label_char(l) + " has hi != lo xor (G+S)";
        if ((a.lo ^ bk.vertex(strut_opposite(l)).lo) != s) {
            return std::string("strut at ") + label_char(l) + " does not XOR to S";
        }
    }
    for (Label l : {Label::A, Label::B, Label::C}) {
        if (dmz_pattern(bk.vertex(l), bk.vertex(strut_opposite(l)))) {
            return std::string("strut ") + label_char(l) + label_char(strut_opposite(l)) + " makes zero";
        }
    }
    std::size_t red = 0;
    for (const Edge& e : bk.edges()) {
        const auto p = dmz_pattern(bk.vertex(e.from), bk.vertex(e.to));
        if (!p) return std::string("edge ") + label_char(e.from) + label_char(e.to) + " is not a DMZ";
        if ((e.sign == EdgeSign::kRed) != !p->same_slope_zero) {
            return std::string("edge ") + label_char(e.from) + label_char(e.to) + " has the wrong sign";
        }
        if (e.sign == EdgeSign::kRed) ++red;
    }
    if (red != 6) return "RED edge count is " + std::to_string(red);
    return {};
}

} // namespace cdp
