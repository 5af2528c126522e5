#include "cdp/cli.hpp"

#include "cdp/box_kite.hpp"
#include "cdp/core.hpp"
#include "cdp/emanation_table.hpp"
#include "cdp/trips.hpp"
#include "cdp/verify.hpp"
#include "cdp/zero_divisors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace cdp::cli {

namespace {

struct Options {
    int n = 4;
    std::optional<unsigned> s;
    std::string format = "text";
    std::string out;
    std::string range;
    std::string palette = "spectrum";
    int block = 8;
    bool count = false;
    bool stats = false;
    std::vector<unsigned> values;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<Index, Index> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("--range must look like a..b");
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const auto number = [&text](const std::string& part) {
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            part.size() > 9) {
            throw UsageError("--range must look like a..b, got '" + text + "'");
        }
        return static_cast<Index>(std::stoul(part));
    };
    return {number(a), number(b)};
}

Index require_s(const Options& o)
{
    if (!o.s) throw UsageError("this command needs --s");
    return *o.s;
}

std::string kite_line(const BoxKite& bk)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < kLabels.size(); ++i) {
        if (i) os << ' ';
        os << label_char(kLabels[i]) << to_string(bk.vertex(kLabels[i]));
    }
    return os.str();
}

SignedUnit multiply(Index a, Index b, Level lvl)
{
    const char* dir = std::getenv(kCacheDirEnv);
    if (dir && *dir && lvl.n() <= SignTable::kMaxCachedLevel) {
        if (!lvl.contains(a) || !lvl.contains(b)) return mul_basis(a, b, lvl);  // reports the range error
        return SignTable::load_or_build(lvl, dir).mul(a, b);
    }
    return mul_basis(a, b, lvl);
}

int cmd_mul(const Options& o, std::ostream& out)
{
    if (o.values.size() != 2) throw UsageError("mul takes two basis indices");
    out << to_string(multiply(o.values[0], o.values[1], Level(o.n))) << '\n';
    return 0;
}

int cmd_trips(const Options& o, std::ostream& out)
{
    if (o.count || o.stats) {
        const TripCount c = trip_count(o.n);
        if (o.stats) {
            out << "total " << c.total << " good " << c.good << " bad " << c.bad << '\n';
        } else {
            out << c.total << '\n';
        }
        return 0;
    }
    const auto trips = enumerate_trips(Level(o.n));
    if (o.format == "csv") {
        out << "a,b,c,kind\n";
        for (const Trip& t : trips) out << t.a << ',' << t.b << ',' << t.c << ',' << (t.good ? "good" : "bad") << '\n';
    } else if (o.format == "text") {
        write_trips(out, trips);
    } else {
        throw DomainError("trips has no image format");
    }
    return 0;
}

int cmd_assessors(const Options& o, std::ostream& out)
{
    const Level lvl(o.n);
    if (o.s && (*o.s == 0 || *o.s >= lvl.generator())) throw DomainError("--s must be in 1..G-1");
    if (o.format == "image") throw DomainError("assessors has no image format");
    const char sep = o.format == "csv" ? ',' : ' ';
    if (o.format == "csv") out << "lo,hi,s\n";
    for (const Assessor& a : enumerate_assessors(lvl)) {
        const Index s = strut_constant(a);
        if (!o.s || *o.s == s) out << a.lo << sep << a.hi << sep << s << '\n';
    }
    return 0;
}

int cmd_dmz(const Options& o, std::ostream& out)
{
    const Level lvl(o.n);
    if (o.s && (*o.s == 0 || *o.s >= lvl.generator())) throw DomainError("--s must be in 1..G-1");
    std::optional<Index> s;
    if (o.s) s = *o.s;
    write_dmz_scan(out, dmz_scan(lvl, s));
    return 0;
}

int cmd_boxkite(const Options& o, std::ostream& out)
{
    const Level lvl(o.n);
    const Index s = require_s(o);
    if (o.values.size() == 3) {
        write_boxkite(out, build_boxkite(lvl, s, {o.values[0], o.values[1], o.values[2]}));
        return 0;
    }
    if (!o.values.empty()) throw UsageError("boxkite takes no indices or a zigzag trip of three");
    bool first = true;
    for (const BoxKite& bk : census(lvl, s).kites) {
        if (!first) out << '\n';
        first = false;
        write_boxkite(out, bk);
    }
    return 0;
}

int cmd_census(const Options& o, std::ostream& out)
{
    const Level lvl(o.n);
    if (!o.s) {
        std::size_t total = 0;
        for (Index s = 1; s < lvl.generator(); ++s) {
            const Census c = census(lvl, s);
            total += c.kites.size();
            out << "S " << s << " kites " << c.kites.size() << " broken " << c.broken.size() << '\n';
        }
        out << "total " << total << '\n';
        return 0;
    }
    const Census c = census(lvl, *o.s);
    out << "N " << lvl.n() << " S " << c.s << " kites " << c.kites.size() << " broken " << c.broken.size() << '\n';
    std::map<Index, std::size_t> strut_use;
    for (std::size_t i = 0; i < c.kites.size(); ++i) {
        out << "kite " << i + 1 << ' ' << kite_line(c.kites[i]) << '\n';
        for (Label l : {Label::A, Label::B, Label::C}) {
            const Index lo = c.kites[i].vertex(l).lo;
            ++strut_use[std::min(lo, lo ^ c.s)];
        }
    }
    if (c.kites.size() > 1) {
        for (const auto& [lo, k] : strut_use) {
            if (k == c.kites.size()) {
                out << "common strut " << lo << ' ' << (lo ^ c.s) << '\n';
            }
        }
    }
    for (const BrokenFrame& b : c.broken) {
        out << "broken";
        for (Index lo : b.lo) out << ' ' << lo;
        out << " zero-edges " << b.zero_edges << '\n';
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto reports = verify_level(Level(o.n));
    write_verify(out, reports);
    const bool failed =
        std::any_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.verdict == Verdict::kFail; });
    return failed ? 1 : 0;
}

int cmd_et(const Options& o, std::ostream& out)
{
    const EmanationTable et = build_et(Level(o.n), require_s(o));
    if (o.stats) {
        const EtStats st = et_stats(et);
        out << "filled " << st.filled << " hidden " << st.hidden << " kites " << st.boxkite_count << " density "
            << std::fixed << std::setprecision(4) << st.density << '\n';
        return 0;
    }
    if (o.format == "csv") {
        out << render_csv(et);
    } else if (o.format == "image") {
        out << render_image(et, parse_palette(o.palette), o.block);
    } else {
        out << render_text(et);
    }
    return 0;
}

int cmd_flipbook(const Options& o, std::ostream& out)
{
    const Level lvl(o.n);
    if (o.out.empty()) throw UsageError("flipbook needs --out <directory>");
    Index from = 1;
    Index to = lvl.generator() - 1;
    if (!o.range.empty()) std::tie(from, to) = parse_range(o.range);
    for (const FlipbookPage& p : flipbook(lvl, from, to, o.out, parse_palette(o.palette), o.block)) {
        out << lvl.n() << ' ' << p.s << ' ' << p.file_name << '\n';
    }
    return 0;
}

using Handler = std::function<int(const Options&, std::ostream&)>;

struct Verb {
    const char* name;
    const char* help;
    Handler handler;
    bool writes_dir = false;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cayley-Dickson zero-divisor explorer", "cdp"};
    app.require_subcommand(1);
    Options o;

    const std::vector<Verb> verbs{
        {"mul", "sign and index of i_a * i_b", cmd_mul},
        {"trips", "associative triplets with good/bad orientation", cmd_trips},
        {"assessors", "candidate assessor planes with their strut constant", cmd_assessors},
        {"dmz", "assessor pairs whose diagonals make zero", cmd_dmz},
        {"boxkite", "box-kite dump for one strut constant", cmd_boxkite},
        {"census", "box-kites per strut constant", cmd_census},
        {"verify", "exhaustive theorem checks", cmd_verify},
        {"et", "emanation table", cmd_et},
        {"flipbook", "emanation table pixmaps over a range of S", cmd_flipbook, true},
    };

    const Handler* chosen = nullptr;
    bool to_dir = false;
    for (const Verb& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        sub->add_option("--n", o.n, "level: algebra of dimension 2^N")->capture_default_str();
        sub->add_option("--s", o.s, "strut constant");
        sub->add_option("--format", o.format, "text, csv or image")
            ->check(CLI::IsMember({"text", "csv", "image"}))
            ->capture_default_str();
        sub->add_option("--out", o.out, v.writes_dir ? "output directory" : "output file (default stdout)");
        sub->add_option("--range", o.range, "S range a..b");
        sub->add_option("--palette", o.palette, "spectrum or grey")->capture_default_str();
        sub->add_option("--block", o.block, "pixels per cell side")->capture_default_str();
        sub->add_flag("--count", o.count, "print only the number of trips");
        sub->add_flag("--stats", o.stats, "print summary counts");
        sub->add_option("values", o.values, "verb-specific indices");
        sub->callback([&chosen, &to_dir, &v] {
            chosen = &v.handler;
            to_dir = v.writes_dir;
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!o.out.empty() && !to_dir) {
            std::ostringstream buf;
            const int code = (*chosen)(o, buf);
            std::ofstream file(o.out, std::ios::binary);
            if (!file) throw DomainError("cannot write " + o.out);
            file << buf.str();
            return code;
        }
        return (*chosen)(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nRun with --help for more information.\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace cdp::cli
