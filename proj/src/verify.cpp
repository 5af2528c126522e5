#include "cdp/verify.hpp"

#include "cdp/box_kite.hpp"

#include <map>
#include <ostream>

namespace cdp {

std::string_view verdict_name(Verdict v) noexcept
{
    switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kNote: return "NOTE";
    }
    return "?";
}

TheoremCheck theorem6_check(Level lvl)
{
    TheoremCheck r;
    r.name = "Theorem 6";
    const TwistSurvey survey = twist_survey(lvl);
    r.cases = survey.total;
    if (survey.invalid.empty()) return r;

    std::map<Index, std::uint64_t> by_target;
    for (const auto& rec : survey.invalid) {
        ++by_target[rec.target_strut];
        if (r.counterexamples.size() < 8) {
            r.fail(to_string(rec.d1) + " * " + to_string(rec.d2) + " -> " + to_string(rec.result.first) + " * " +
                   to_string(rec.result.second) + " (S " + std::to_string(rec.source_strut) + " -> " +
                   std::to_string(rec.target_strut) + ")");
        }
    }
    r.pass = false;
    r.note = std::to_string(survey.invalid.size()) + " of " + std::to_string(survey.total) +
             " twists do not make zero; target S:";
    for (const auto& [s, k] : by_target) r.note += " " + std::to_string(s) + "x" + std::to_string(k);
    return r;
}

TheoremCheck theorem7_check(Level lvl)
{
    TheoremCheck r;
    r.name = "Theorem 7";
    for (Index s = 1; s < lvl.generator(); ++s) {
        for (const BoxKite& bk : census(lvl, s).kites) {
            ++r.cases;
            const std::string where = "N " + std::to_string(lvl.n()) + " S " + std::to_string(s) + " A " +
                                      to_string(bk.vertex(Label::A));
            if (const std::string bad = check_invariants(bk); !bad.empty()) {
                r.fail(where + ": " + bad);
                continue;
            }
            try {
                classify_sails(bk);
            } catch (const DomainError& e) {
                r.fail(where + ": " + e.what());
                continue;
            }
            const EdgeColorStats st = edge_color_stats(bk);
            if (st.red != 6 || !st.red_is_zigzag_and_vent) r.fail(where + ": RED edges are not zigzag plus vent");
        }
    }
    return r;
}

std::vector<TheoremReport> verify_level(Level lvl)
{
    if (lvl.n() < 4) throw DomainError("verify needs N >= 4 (no zero divisors below)");
    std::vector<TheoremReport> out;
    auto add = [&out](TheoremCheck c) {
        const Verdict v = c.pass ? Verdict::kPass : Verdict::kFail;
        out.push_back({std::move(c), v});
    };
    add(theorem1_check(lvl));
    add(theorem2_check(lvl));
    add(theorem3_check(lvl));
    add(theorem4_scan(lvl));
    add(theorem5_check(lvl));
    add(theorem6_check(lvl));
    if (lvl.n() > 4 && out.back().verdict == Verdict::kFail) out.back().verdict = Verdict::kNote;
    add(theorem7_check(lvl));
    return out;
}

void write_verify(std::ostream& out, const std::vector<TheoremReport>& reports)
{
    for (const auto& rep : reports) {
        out << verdict_name(rep.verdict) << ' ' << rep.check.name << " cases=" << rep.check.cases << '\n';
        if (rep.verdict != Verdict::kPass) {
            for (const auto& c : rep.check.counterexamples) out << "  " << c << '\n';
        }
        if (!rep.check.note.empty()) out << "  " << rep.check.note << '\n';
    }
}

} // namespace cdp
