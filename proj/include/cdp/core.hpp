#ifndef CDP_CORE_HPP
#define CDP_CORE_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdp {

/// Index of a basis unit i_k; 0 is the real unit.
using Index = std::uint32_t;

/// Exact coefficient type. Zero-testing must be exact, so no floating point.
using Coeff = std::int64_t;

/// Raised for invalid arguments and violated preconditions in the domain layer.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Ambient level of a Cayley-Dickson algebra: the 2^N-ions.
 *
 * The generator G is fixed as half the ambient dimension, so G = 8 for the
 * sedenions (N = 4) and G = 16 for the pathions (N = 5).
 */
class Level {
public:
    static constexpr int kMax = 30;

    explicit Level(int n);

    int n() const noexcept { return n_; }
    Index dim() const noexcept { return Index{1} << n_; }
    Index generator() const noexcept { return Index{1} << (n_ - 1); }
    bool contains(Index i) const noexcept { return i < dim(); }

    friend bool operator==(Level, Level) = default;
    friend auto operator<=>(Level, Level) = default;

private:
    int n_;
};

/// A signed basis unit, +i_k or -i_k.
struct SignedUnit {
    int sign = 1;
    Index index = 0;

    friend bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

std::string to_string(const SignedUnit& u);
std::ostream& operator<<(std::ostream& os, const SignedUnit& u);

/// Sign of i_a * i_b. Independent of the ambient level.
int basis_sign(Index a, Index b) noexcept;

/// Product of two basis units; throws DomainError if either index is outside `lvl`.
SignedUnit mul_basis(Index a, Index b, Level lvl);

/// Finite integer combination of basis units, kept in canonical sparse form
/// (no stored zero coefficient).
class Element {
public:
    using Terms = std::map<Index, Coeff>;

    Element() = default;

    static Element unit(Index i, Coeff c = 1);
    static Element dyad(Index a, Coeff ca, Index b, Coeff cb);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Coeff coefficient(Index i) const noexcept;
    /// Largest index carrying a nonzero coefficient; 0 for the zero element.
    Index max_index() const noexcept;

    void add_term(Index i, Coeff c);

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(Coeff k);
    Element operator-() const;

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(Element lhs, Coeff k) { return lhs *= k; }
    friend Element operator*(Coeff k, Element rhs) { return rhs *= k; }
    friend bool operator==(const Element&, const Element&) = default;

private:
    Terms terms_;
};

std::string to_string(const Element& x);
std::ostream& operator<<(std::ostream& os, const Element& x);

/// Bilinear product. Every index of both operands must lie inside `lvl`.
Element mul_element(const Element& x, const Element& y, Level lvl);

/// Negates every coefficient except the real one.
Element conjugate(const Element& x);

/// Sum of squared coefficients.
Coeff norm_squared(const Element& x) noexcept;

/**
 * Full sign table for one level, cacheable as flat text.
 *
 * File format: one line per ordered pair, `a b +1` or `a b -1`, with a
 * running over rows and b over columns in ascending order. No header.
 */
class SignTable {
public:
    static constexpr int kMaxCachedLevel = 8;

    static SignTable build(Level lvl);
    /// Parses the flat text format; throws DomainError on malformed or incomplete input.
    static SignTable read(std::istream& in, Level lvl);
    /// Reads `<dir>/signs-n<N>.txt` if present, otherwise builds and writes it.
    static SignTable load_or_build(Level lvl, const std::filesystem::path& dir);

    static std::string file_name(Level lvl);

    Level level() const noexcept { return lvl_; }
    int sign(Index a, Index b) const;
    SignedUnit mul(Index a, Index b) const;
    void write(std::ostream& out) const;

private:
    SignTable(Level lvl, std::vector<std::int8_t> signs);

    Level lvl_;
    std::vector<std::int8_t> signs_;
};

} // namespace cdp

#endif // CDP_CORE_HPP
