#include "cdp/zero_divisors.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

namespace cdp {

namespace {

constexpr std::size_t kMaxCounterexamples = 8;

void require_same_level(Level a, Level b)
{
    if (a != b) {
        throw DomainError("level mismatch: N=" + std::to_string(a.n()) + " vs N=" +
                          std::to_string(b.n()));
    }
}

std::string dyad_string(Index a, Coeff sa, Index b, Coeff sb)
{
    return to_string(Element::dyad(a, sa, b, sb));
}

// Signed two-term dyads over indices p < q, both signs on the second term.
struct Dyad {
    Index p;
    Index q;
    Coeff s;
    Element element() const { return Element::dyad(p, 1, q, s); }
};

std::vector<Dyad> dyads_where(Level lvl, auto&& keep)
{
    std::vector<Dyad> out;
    for (Index p = 1; p < lvl.dim(); ++p) {
        for (Index q = p + 1; q < lvl.dim(); ++q) {
            if (!keep(p, q)) continue;
            out.push_back({p, q, 1});
            out.push_back({p, q, -1});
        }
    }
    return out;
}

} // namespace

void TheoremCheck::fail(std::string what)
{
    pass = false;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(what));
}

Assessor make_assessor(Index lo, Index hi, Level lvl)
{
    if (lvl.n() < 2) throw DomainError("assessors need N >= 2");
    const Index g = lvl.generator();
    if (lo == 0 || lo >= g || hi <= g || !lvl.contains(hi)) {
        throw DomainError("(" + std::to_string(lo) + "," + std::to_string(hi) +
                          ") is not an assessor plane for N=" + std::to_string(lvl.n()));
    }
    return Assessor{lo, hi, lvl};
}

Index strut_constant(const Assessor& a) noexcept { return a.lo ^ a.hi ^ a.lvl.generator(); }

bool operator<(const Assessor& l, const Assessor& r) noexcept
{
    return std::tuple(l.lvl.n(), l.lo, l.hi) < std::tuple(r.lvl.n(), r.lo, r.hi);
}

std::string to_string(const Assessor& a)
{
    return "(" + std::to_string(a.lo) + "," + std::to_string(a.hi) + ")";
}

std::string to_string(const Diagonal& d)
{
    return "(" + std::to_string(d.assessor.lo) + "," + std::to_string(d.assessor.hi) + "," +
           slope_symbol(d.slope) + ")";
}

Element diagonal_product(const Diagonal& d1, const Diagonal& d2)
{
    require_same_level(d1.assessor.lvl, d2.assessor.lvl);
    return mul_element(d1.element(), d2.element(), d1.assessor.lvl);
}

bool is_dmz(const Diagonal& d1, const Diagonal& d2) { return diagonal_product(d1, d2).is_zero(); }

std::optional<DmzPattern> dmz_pattern(const Assessor& a1, const Assessor& a2)
{
    require_same_level(a1.lvl, a2.lvl);
    if (a1 == a2) throw DomainError("dmz_pattern needs two distinct assessors");
    const bool ss = is_dmz({a1, Slope::kSlash}, {a2, Slope::kSlash});
    const bool bb = is_dmz({a1, Slope::kBackslash}, {a2, Slope::kBackslash});
    const bool sb = is_dmz({a1, Slope::kSlash}, {a2, Slope::kBackslash});
    const bool bs = is_dmz({a1, Slope::kBackslash}, {a2, Slope::kSlash});
    const bool same = ss || bb;
    const bool opposite = sb || bs;
    if (!same && !opposite) return std::nullopt;
    if ((same && opposite) || ss != bb || sb != bs) {
        throw DomainError("slope dichotomy broken for " + to_string(a1) + " x " + to_string(a2));
    }
    return DmzPattern{same};
}

TheoremCheck theorem1_check(Level lvl)
{
    TheoremCheck r;
    r.name = "Theorem 1";
    if (lvl.n() < 2) return r;
    const Index g = lvl.generator();
    const auto low = dyads_where(lvl, [g](Index, Index q) { return q < g; });
    const auto straddling = dyads_where(lvl, [g](Index p, Index q) { return p < g && q >= g; });
    for (const Dyad& x : low) {
        const Element ex = x.element();
        for (const Dyad& y : straddling) {
            const Element ey = y.element();
            r.cases += 2;
            if (mul_element(ex, ey, lvl).is_zero() || mul_element(ey, ex, lvl).is_zero()) {
                r.fail(dyad_string(x.p, 1, x.q, x.s) + " x " + dyad_string(y.p, 1, y.q, y.s));
            }
        }
    }
    return r;
}

TheoremCheck theorem2_check(Level lvl)
{
    TheoremCheck r;
    r.name = "Theorem 2";
    if (lvl.n() < 2) return r;
    const Index g = lvl.generator();
    const auto with_g = dyads_where(lvl, [g](Index p, Index q) { return p == g || q == g; });
    const auto all = dyads_where(lvl, [](Index, Index) { return true; });
    for (const Dyad& x : with_g) {
        const Element ex = x.element();
        for (const Dyad& y : all) {
            const Element ey = y.element();
            r.cases += 2;
            if (mul_element(ex, ey, lvl).is_zero() || mul_element(ey, ex, lvl).is_zero()) {
                r.fail(dyad_string(x.p, 1, x.q, x.s) + " x " + dyad_string(y.p, 1, y.q, y.s));
            }
        }
    }
    return r;
}

TheoremCheck theorem3_check(Level lvl)
{
    TheoremCheck r;
    r.name = "Theorem 3";
    const auto planes = enumerate_assessors(lvl);
    for (const Assessor& a1 : planes) {
        for (const Assessor& a2 : planes) {
            if (a1 == a2) continue;
            ++r.cases;
            try {
                (void)dmz_pattern(a1, a2);
            } catch (const DomainError&) {
                r.fail(to_string(a1) + " x " + to_string(a2));
            }
        }
    }
    return r;
}

bool theorem4_check(const Assessor& a)
{
    const Element p = diagonal_product({a, Slope::kSlash}, {a, Slope::kBackslash});
    const SignedUnit hl = mul_basis(a.hi, a.lo, a.lvl);
    return !p.is_zero() && p == Element::unit(hl.index, 2 * hl.sign);
}

TheoremCheck theorem4_scan(Level lvl)
{
    TheoremCheck r;
    r.name = "Theorem 4";
    for (const Assessor& a : enumerate_assessors(lvl)) {
        ++r.cases;
        if (!theorem4_check(a)) r.fail(to_string(a));
    }
    return r;
}

Assessor emanate(const Assessor& a1, const Assessor& a2)
{
    if (a1 == a2 || !dmz_pattern(a1, a2)) {
        throw DomainError(to_string(a1) + " and " + to_string(a2) + " are not a DMZ pair");
    }
    const Index w = a1.lo ^ a2.lo;
    if (w != (a1.hi ^ a2.hi)) {
        throw DomainError("emanation indices disagree for " + to_string(a1) + " x " + to_string(a2));
    }
    return make_assessor(w, a1.lo ^ a2.hi, a1.lvl);
}

bool emanation_cancels(const Diagonal& d1, const Diagonal& d2)
{
    if (!is_dmz(d1, d2)) return false;
    const Level lvl = d1.assessor.lvl;
    const Coeff s1 = slope_sign(d1.slope);
    const Coeff s2 = slope_sign(d2.slope);
    const Element lo1 = Element::unit(d1.assessor.lo);
    const Element hi1 = Element::unit(d1.assessor.hi, s1);
    const Element lo2 = Element::unit(d2.assessor.lo);
    const Element hi2 = Element::unit(d2.assessor.hi, s2);

    const Element ll = mul_element(lo1, lo2, lvl);
    const Element lh = mul_element(lo1, hi2, lvl);
    const Element hl = mul_element(hi1, lo2, lvl);
    const Element hh = mul_element(hi1, hi2, lvl);
    if (!(lh + hl).is_zero() || !(ll + hh).is_zero()) return false;

    const Element row_lo = ll + lh;
    const Element row_hi = hl + hh;
    if (row_lo != -row_hi || row_lo.size() != 2) return false;
    const Assessor w = emanate(d1.assessor, d2.assessor);
    return row_lo.coefficient(w.lo) != 0 && row_lo.coefficient(w.hi) != 0;
}

TheoremCheck theorem5_check(Level lvl)
{
    TheoremCheck r;
    r.name = "Theorem 5";
    const auto planes = enumerate_assessors(lvl);
    for (std::size_t i = 0; i < planes.size(); ++i) {
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            const Assessor& a1 = planes[i];
            const Assessor& a2 = planes[j];
            const auto pat = dmz_pattern(a1, a2);
            if (!pat) continue;
            ++r.cases;
            const std::string tag = to_string(a1) + " x " + to_string(a2);
            Assessor w;
            try {
                w = emanate(a1, a2);
            } catch (const DomainError& e) {
                r.fail(tag + ": " + e.what());
                continue;
            }
            if (!(emanate(a2, a1) == w)) r.fail(tag + ": emanation not symmetric");
            if (!dmz_pattern(a1, w) || !dmz_pattern(a2, w)) {
                r.fail(tag + ": emanated " + to_string(w) + " does not zero-divide both");
            }
            const Slope s2 = pat->same_slope_zero ? Slope::kSlash : Slope::kBackslash;
            if (!emanation_cancels({a1, Slope::kSlash}, {a2, s2})) {
                r.fail(tag + ": product does not split into copies of the emanated dyad");
            }
        }
    }
    return r;
}

TwistResult twist(const Diagonal& d1, const Diagonal& d2)
{
    if (!is_dmz(d1, d2)) {
        throw DomainError(to_string(d1) + " x " + to_string(d2) + " is not a DMZ");
    }
    const Level lvl = d1.assessor.lvl;
    const Index u = d1.assessor.lo;
    const Index big_u = d1.assessor.hi;
    const Index v = d2.assessor.lo;
    const Index big_v = d2.assessor.hi;
    TwistResult r{
        .first = {make_assessor(v, big_u, lvl), d2.slope},
        .second = {make_assessor(u, big_v, lvl), flip(d1.slope)},
    };
    r.is_dmz = is_dmz(r.first, r.second);
    return r;
}

std::size_t twist_orbit_length(const Diagonal& d1, const Diagonal& d2, std::size_t max_steps)
{
    Diagonal x = d1;
    Diagonal y = d2;
    for (std::size_t step = 1; step <= max_steps; ++step) {
        const TwistResult t = twist(x, y);
        if (!t.is_dmz) return 0;
        x = t.first;
        y = t.second;
        if (x == d1 && y == d2) return step;
    }
    return 0;
}

TwistSurvey twist_survey(Level lvl)
{
    TwistSurvey s;
    const auto planes = enumerate_assessors(lvl);
    for (const Assessor& a1 : planes) {
        for (const Assessor& a2 : planes) {
            if (a1 == a2) continue;
            for (Slope s1 : {Slope::kSlash, Slope::kBackslash}) {
                for (Slope s2 : {Slope::kSlash, Slope::kBackslash}) {
                    const Diagonal d1{a1, s1};
                    const Diagonal d2{a2, s2};
                    if (!is_dmz(d1, d2)) continue;
                    ++s.total;
                    const TwistResult t = twist(d1, d2);
                    if (t.is_dmz) {
                        ++s.valid;
                    } else {
                        s.invalid.push_back({d1, d2, t, strut_constant(a1), strut_constant(t.first.assessor)});
                    }
                }
            }
        }
    }
    return s;
}

std::vector<Assessor> enumerate_assessors(Level lvl)
{
    std::vector<Assessor> out;
    if (lvl.n() < 4) return out;
    const Index g = lvl.generator();
    for (Index lo = 1; lo < g; ++lo) {
        for (Index hi = g + 1; hi < lvl.dim(); ++hi) {
            if (hi != (lo ^ g)) out.push_back(Assessor{lo, hi, lvl});
        }
    }
    return out;
}

std::vector<DmzRecord> dmz_scan(Level lvl, std::optional<Index> strut)
{
    std::vector<Assessor> planes = enumerate_assessors(lvl);
    if (strut) {
        std::erase_if(planes, [&](const Assessor& a) { return strut_constant(a) != *strut; });
    }
    std::vector<DmzRecord> out;
    for (std::size_t i = 0; i < planes.size(); ++i) {
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            if (auto p = dmz_pattern(planes[i], planes[j])) out.push_back({planes[i], planes[j], *p});
        }
    }
    return out;
}

void write_dmz_scan(std::ostream& out, const std::vector<DmzRecord>& records)
{
    for (const DmzRecord& r : records) {
        out << r.first.lo << ' ' << r.first.hi << ' ' << r.second.lo << ' ' << r.second.hi << ' '
            << (r.pattern.same_slope_zero ? "same" : "opposite") << '\n';
    }
}

} // namespace cdp
