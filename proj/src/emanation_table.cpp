#include "cdp/emanation_table.hpp"

#include "cdp/zero_divisors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cdp {

namespace {

void check_et_args(Level lvl, Index s)
{
    if (lvl.n() < 4) throw DomainError("emanation tables need N >= 4 (no zero divisors below)");
    if (s == 0 || s >= lvl.generator()) {
        throw DomainError("strut constant " + std::to_string(s) + " must be in 1.." +
                          std::to_string(lvl.generator() - 1));
    }
}

std::size_t digits(Index v)
{
    std::size_t d = 1;
    while (v >= 10) {
        v /= 10;
        ++d;
    }
    return d;
}

void pad(std::ostream& os, const std::string& field, std::size_t width)
{
    for (std::size_t i = field.size(); i < width; ++i) os << ' ';
    os << field;
}

Index parse_index(const std::string& tok)
{
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(tok, &used);
    } catch (const std::exception&) {
        throw DomainError("bad number in emanation table: " + tok);
    }
    if (used != tok.size()) throw DomainError("bad number in emanation table: " + tok);
    return static_cast<Index>(v);
}

} // namespace

std::vector<Index> et_axis(Level lvl, Index s)
{
    check_et_args(lvl, s);
    std::vector<Index> axis;
    for (Index l = 1; l < lvl.generator(); ++l) {
        if (l != s) axis.push_back(l);
    }
    return axis;
}

EmanationTable::EmanationTable(Level lvl, Index s, std::vector<Cell> cells)
    : lvl_(lvl), s_(s), axis_(et_axis(lvl, s)), cells_(std::move(cells))
{
    if (cells_.size() != axis_.size() * axis_.size()) {
        throw DomainError("emanation table needs " + std::to_string(axis_.size() * axis_.size()) +
                          " cells, got " + std::to_string(cells_.size()));
    }
}

std::size_t EmanationTable::position(Index lo) const
{
    const auto it = std::lower_bound(axis_.begin(), axis_.end(), lo);
    if (it == axis_.end() || *it != lo) throw DomainError("L-index " + std::to_string(lo) + " not on the axis");
    return static_cast<std::size_t>(it - axis_.begin());
}

const EmanationTable::Cell& EmanationTable::at(Index row_lo, Index col_lo) const
{
    return cell(position(row_lo), position(col_lo));
}

EmanationTable build_et(Level lvl, Index s)
{
    const auto axis = et_axis(lvl, s);
    const Index x = lvl.generator() + s;
    const std::size_t n = axis.size();
    std::vector<EmanationTable::Cell> cells(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
            const Index lr = axis[r];
            const Index lc = axis[c];
            if ((lr ^ lc) == s) continue;
            if (dmz_pattern(Assessor{lr, lr ^ x, lvl}, Assessor{lc, lc ^ x, lvl})) {
                cells[r * n + c] = lr ^ lc;
                cells[c * n + r] = lr ^ lc;
            }
        }
    }
    return EmanationTable(lvl, s, std::move(cells));
}

EtStats et_stats(const EmanationTable& et)
{
    EtStats st;
    const std::size_t n = et.size();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) et.cell(r, c) ? ++st.filled : ++st.hidden;
    }
    st.density = n == 0 ? 0.0 : static_cast<double>(st.filled) / static_cast<double>(n * n);

    const Index s = et.strut();
    std::vector<Index> reps;
    for (Index l : et.axis()) {
        if (l < (l ^ s)) reps.push_back(l);
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const Index k = std::min(reps[i] ^ reps[j], reps[i] ^ reps[j] ^ s);
            if (k <= reps[j]) continue;
            const std::array<Index, 6> lo{reps[i], reps[i] ^ s, reps[j], reps[j] ^ s, k, k ^ s};
            bool all = true;
            for (std::size_t p = 0; p < 6 && all; ++p) {
                for (std::size_t q = 0; q < 6 && all; ++q) {
                    if (p != q && (lo[p] ^ lo[q]) != s) all = et.at(lo[p], lo[q]).has_value();
                }
            }
            if (all) ++st.boxkite_count;
        }
    }
    return st;
}

std::string render_text(const EmanationTable& et)
{
    const std::size_t w = digits(et.level().dim() - 1);
    std::ostringstream os;
    os << "N " << et.level().n() << " S " << et.strut() << '\n';
    pad(os, "", w);
    for (Index l : et.axis()) {
        os << ' ';
        pad(os, std::to_string(l), w);
    }
    os << '\n';
    for (std::size_t r = 0; r < et.size(); ++r) {
        pad(os, std::to_string(et.axis()[r]), w);
        for (std::size_t c = 0; c < et.size(); ++c) {
            os << ' ';
            const auto& v = et.cell(r, c);
            pad(os, v ? std::to_string(*v) : ".", w);
        }
        os << '\n';
    }
    return os.str();
}

EmanationTable parse_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty emanation table text");
    std::istringstream head(line);
    std::string tn;
    std::string ts;
    int n = 0;
    Index s = 0;
    if (!(head >> tn >> n >> ts >> s) || tn != "N" || ts != "S") {
        throw DomainError("emanation table must start with 'N <n> S <s>'");
    }
    const Level lvl(n);
    const auto axis = et_axis(lvl, s);

    if (!std::getline(in, line)) throw DomainError("missing emanation table header row");
    std::istringstream hdr(line);
    std::vector<Index> header;
    for (std::string tok; hdr >> tok;) header.push_back(parse_index(tok));
    if (header != axis) throw DomainError("emanation table header does not match N and S");

    std::vector<EmanationTable::Cell> cells;
    cells.reserve(axis.size() * axis.size());
    for (Index expected : axis) {
        if (!std::getline(in, line)) throw DomainError("emanation table is missing rows");
        std::istringstream row(line);
        std::string tok;
        if (!(row >> tok) || parse_index(tok) != expected) throw DomainError("unexpected row label");
        std::size_t count = 0;
        while (row >> tok) {
            cells.push_back(tok == "." ? EmanationTable::Cell{} : EmanationTable::Cell{parse_index(tok)});
            ++count;
        }
        if (count != axis.size()) throw DomainError("emanation table row has wrong width");
    }
    return EmanationTable(lvl, s, std::move(cells));
}

std::string render_csv(const EmanationTable& et)
{
    std::ostringstream os;
    for (Index l : et.axis()) os << ',' << l;
    os << '\n';
    for (std::size_t r = 0; r < et.size(); ++r) {
        os << et.axis()[r];
        for (std::size_t c = 0; c < et.size(); ++c) {
            os << ',';
            if (const auto& v = et.cell(r, c)) os << *v;
        }
        os << '\n';
    }
    return os.str();
}

Rgb cell_color(const EmanationTable::Cell& v, Level lvl, Palette palette)
{
    if (!v) return {};
    const std::uint64_t g = lvl.generator();
    const std::uint64_t value = std::min<std::uint64_t>(*v, g - 1);
    if (palette == Palette::kGrey) {
        const auto level = static_cast<std::uint8_t>(55 + (200 * value) / (g - 1));
        return {level, level, level};
    }
    const std::uint64_t t = (1536 * value) / g;
    const auto ramp = static_cast<std::uint8_t>(t % 256);
    const auto down = static_cast<std::uint8_t>(255 - ramp);
    switch (t / 256) {
    case 0: return {255, ramp, 0};
    case 1: return {down, 255, 0};
    case 2: return {0, 255, ramp};
    case 3: return {0, down, 255};
    case 4: return {ramp, 0, 255};
    default: return {255, 0, down};
    }
}

Palette parse_palette(std::string_view name)
{
    if (name == "spectrum") return Palette::kSpectrum;
    if (name == "grey" || name == "gray") return Palette::kGrey;
    throw DomainError("unknown palette '" + std::string(name) + "'");
}

std::string render_image(const EmanationTable& et, Palette palette, int block)
{
    if (block < 1 || block > 64) throw DomainError("pixel block size must be in 1..64");
    const std::size_t n = et.size();
    const std::size_t side = n * static_cast<std::size_t>(block);
    std::ostringstream os;
    os << "P3\n" << side << ' ' << side << "\n255\n";
    for (std::size_t py = 0; py < side; ++py) {
        const std::size_t r = py / static_cast<std::size_t>(block);
        for (std::size_t px = 0; px < side; ++px) {
            const Rgb c = cell_color(et.cell(r, px / static_cast<std::size_t>(block)), et.level(), palette);
            if (px) os << ' ';
            os << int{c.r} << ' ' << int{c.g} << ' ' << int{c.b};
        }
        os << '\n';
    }
    return os.str();
}

std::string flipbook_file_name(Level lvl, Index s)
{
    const std::size_t w = digits(lvl.generator() - 1);
    std::string num = std::to_string(s);
    num.insert(0, w > num.size() ? w - num.size() : 0, '0');
    return "et-n" + std::to_string(lvl.n()) + "-s" + num + ".ppm";
}

std::vector<FlipbookPage> flipbook(Level lvl, Index s_from, Index s_to, const std::filesystem::path& out_dir,
                                   Palette palette, int block)
{
    if (s_from > s_to) {
        throw DomainError("reversed S range " + std::to_string(s_from) + ".." + std::to_string(s_to));
    }
    check_et_args(lvl, s_from);
    check_et_args(lvl, s_to);
    std::filesystem::create_directories(out_dir);

    std::vector<FlipbookPage> pages;
    std::ostringstream manifest;
    for (Index s = s_from; s <= s_to; ++s) {
        FlipbookPage page{s, flipbook_file_name(lvl, s)};
        std::ofstream out(out_dir / page.file_name, std::ios::binary);
        if (!out) throw DomainError("cannot write " + (out_dir / page.file_name).string());
        out << render_image(build_et(lvl, s), palette, block);
        manifest << lvl.n() << ' ' << s << ' ' << page.file_name << '\n';
        pages.push_back(std::move(page));
    }
    std::ofstream m(out_dir / "manifest.txt", std::ios::binary);
    if (!m) throw DomainError("cannot write manifest in " + out_dir.string());
    m << manifest.str();
    return pages;
}

} // namespace cdp
