#ifndef CDP_EMANATION_TABLE_HPP
#define CDP_EMANATION_TABLE_HPP

#include "cdp/core.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cdp {

/**
 * Emanation table for one (N, S).
 *
 * Rows and columns run over the L-indices {1..G-1} \ {S} in ascending order.
 * Each L-index stands for the plane (L, L xor (G+S)). A cell holds r xor c
 * when the row and column planes make zero, and is hidden otherwise.
 */
class EmanationTable {
public:
    using Cell = std::optional<Index>;

    EmanationTable(Level lvl, Index s, std::vector<Cell> cells);

    Level level() const noexcept { return lvl_; }
    Index strut() const noexcept { return s_; }
    const std::vector<Index>& axis() const noexcept { return axis_; }
    std::size_t size() const noexcept { return axis_.size(); }

    const Cell& cell(std::size_t row, std::size_t col) const { return cells_.at(row * axis_.size() + col); }
    /// Cell addressed by L-indices; throws if either is not on the axis.
    const Cell& at(Index row_lo, Index col_lo) const;
    std::size_t position(Index lo) const;

    friend bool operator==(const EmanationTable&, const EmanationTable&) = default;

private:
    Level lvl_;
    Index s_;
    std::vector<Index> axis_;
    std::vector<Cell> cells_;
};

/// Axis for (N, S): ascending L-indices below G, excluding S.
std::vector<Index> et_axis(Level lvl, Index s);

/// Every cell decided by exact zero-product testing. Needs N >= 4 and 1 <= S < G.
EmanationTable build_et(Level lvl, Index s);

struct EtStats {
    std::size_t filled = 0;
    std::size_t hidden = 0;
    std::size_t boxkite_count = 0;  // closed strut-pair triples with all 12 cross cells filled
    double density = 0.0;           // filled / cells
};

EtStats et_stats(const EmanationTable& et);

/// Fixed-width grid: a "N <n> S <s>" line, a header row of L-indices, then one
/// row per L-index. Hidden cells print as ".".
std::string render_text(const EmanationTable& et);
EmanationTable parse_text(std::string_view text);

/// Header row ",l1,l2,..." then "r,cell,..." rows; hidden cells are empty fields.
std::string render_csv(const EmanationTable& et);

enum class Palette { kSpectrum, kGrey };

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Hidden cells are black. Filled value v (1 <= v < G):
///   kSpectrum: hue ramp t = floor(1536 * v / G) over red-yellow-green-cyan-blue-magenta;
///   kGrey:     level 55 + floor(200 * v / (G - 1)).
Rgb cell_color(const EmanationTable::Cell& v, Level lvl, Palette palette);

Palette parse_palette(std::string_view name);

/// Plain (P3) portable pixmap with a `block` x `block` pixel square per cell.
std::string render_image(const EmanationTable& et, Palette palette = Palette::kSpectrum, int block = 8);

struct FlipbookPage {
    Index s = 0;
    std::string file_name;
};

/// File name "et-n<N>-s<S>.ppm", S zero-padded to the width of G-1.
std::string flipbook_file_name(Level lvl, Index s);

/**
 * Writes one pixmap per S in [s_from, s_to] plus "manifest.txt" with lines
 * "N S filename". Throws on a reversed or out-of-range S range.
 */
std::vector<FlipbookPage> flipbook(Level lvl, Index s_from, Index s_to, const std::filesystem::path& out_dir,
                                   Palette palette = Palette::kSpectrum, int block = 8);

} // namespace cdp

#endif // CDP_EMANATION_TABLE_HPP
