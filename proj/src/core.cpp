#include "cdp/core.hpp"

#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cdp {

Level::Level(int n) : n_(n)
{
    if (n < 1 || n > kMax) {
        throw DomainError("level N must be in 1.." + std::to_string(kMax) + ", got " +
                          std::to_string(n));
    }
}

namespace {

// Doubling product (a,b)(c,d) = (ac - d*b, da + bc*) reduced to basis units.
// Each step strips the top bit G of the larger index:
//   p<G, q>=G : i_p * i_q = s(q-G, p)
//   p>=G, q<G : s(p-G, q), negated when q != 0 (conjugate of an imaginary)
//   p>=G, q>=G: s(q-G, p-G) when q != G, and -1 when q == G
int recursive_sign(Index a, Index b) noexcept
{
    int sign = 1;
    while (a != 0 && b != 0) {
        const Index g = std::bit_floor(a | b);
        if (a < g) {
            const Index hi = b - g;
            b = a;
            a = hi;
        } else if (b < g) {
            a -= g;
            sign = -sign;
        } else {
            const Index x = a - g;
            const Index y = b - g;
            if (y == 0) return -sign;
            a = y;
            b = x;
        }
    }
    return sign;
}

constexpr Index kMemoDim = Index{1} << SignTable::kMaxCachedLevel;

const std::vector<std::int8_t>& memo_table()
{
    static const std::vector<std::int8_t> table = [] {
        std::vector<std::int8_t> t(std::size_t{kMemoDim} * kMemoDim);
        for (Index a = 0; a < kMemoDim; ++a) {
            for (Index b = 0; b < kMemoDim; ++b) {
                t[std::size_t{a} * kMemoDim + b] = static_cast<std::int8_t>(recursive_sign(a, b));
            }
        }
        return t;
    }();
    return table;
}

void check_index(Index i, Level lvl)
{
    if (!lvl.contains(i)) {
        throw DomainError("index " + std::to_string(i) + " out of range for N=" +
                          std::to_string(lvl.n()));
    }
}

} // namespace

int basis_sign(Index a, Index b) noexcept
{
    if (a < kMemoDim && b < kMemoDim) return memo_table()[std::size_t{a} * kMemoDim + b];
    return recursive_sign(a, b);
}

SignedUnit mul_basis(Index a, Index b, Level lvl)
{
    check_index(a, lvl);
    check_index(b, lvl);
    return {basis_sign(a, b), a ^ b};
}

std::string to_string(const SignedUnit& u)
{
    return (u.sign < 0 ? "-" : "+") + std::to_string(u.index);
}

std::ostream& operator<<(std::ostream& os, const SignedUnit& u) { return os << to_string(u); }

// ---------------------------------------------------------------------------
// Element

Element Element::unit(Index i, Coeff c)
{
    Element e;
    e.add_term(i, c);
    return e;
}

Element Element::dyad(Index a, Coeff ca, Index b, Coeff cb)
{
    Element e;
    e.add_term(a, ca);
    e.add_term(b, cb);
    return e;
}

Coeff Element::coefficient(Index i) const noexcept
{
    const auto it = terms_.find(i);
    return it == terms_.end() ? 0 : it->second;
}

Index Element::max_index() const noexcept
{
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

void Element::add_term(Index i, Coeff c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& rhs)
{
    for (const auto& [i, c] : rhs.terms_) add_term(i, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs)
{
    for (const auto& [i, c] : rhs.terms_) add_term(i, -c);
    return *this;
}

Element& Element::operator*=(Coeff k)
{
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [i, c] : terms_) c *= k;
    return *this;
}

Element Element::operator-() const
{
    Element r = *this;
    return r *= -1;
}

std::string to_string(const Element& x)
{
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : x.terms()) {
        const Coeff mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << 'i' << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

Element mul_element(const Element& x, const Element& y, Level lvl)
{
    if (!x.is_zero()) check_index(x.max_index(), lvl);
    if (!y.is_zero()) check_index(y.max_index(), lvl);
    Element r;
    for (const auto& [i, ci] : x.terms()) {
        for (const auto& [j, cj] : y.terms()) {
            r.add_term(i ^ j, basis_sign(i, j) * ci * cj);
        }
    }
    return r;
}

Element conjugate(const Element& x)
{
    Element r;
    for (const auto& [i, c] : x.terms()) r.add_term(i, i == 0 ? c : -c);
    return r;
}

Coeff norm_squared(const Element& x) noexcept
{
    Coeff n = 0;
    for (const auto& [i, c] : x.terms()) n += c * c;
    return n;
}

// ---------------------------------------------------------------------------
// SignTable

SignTable::SignTable(Level lvl, std::vector<std::int8_t> signs)
    : lvl_(lvl), signs_(std::move(signs))
{
}

SignTable SignTable::build(Level lvl)
{
    if (lvl.n() > kMaxCachedLevel) {
        throw DomainError("sign tables are cached only up to N=" + std::to_string(kMaxCachedLevel));
    }
    const Index d = lvl.dim();
    std::vector<std::int8_t> signs(std::size_t{d} * d);
    for (Index a = 0; a < d; ++a) {
        for (Index b = 0; b < d; ++b) {
            signs[std::size_t{a} * d + b] = static_cast<std::int8_t>(basis_sign(a, b));
        }
    }
    return SignTable(lvl, std::move(signs));
}

SignTable SignTable::read(std::istream& in, Level lvl)
{
    if (lvl.n() > kMaxCachedLevel) {
        throw DomainError("sign tables are cached only up to N=" + std::to_string(kMaxCachedLevel));
    }
    const Index d = lvl.dim();
    std::vector<std::int8_t> signs(std::size_t{d} * d);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Index a = 0;
        Index b = 0;
        std::string s;
        if (!(ls >> a >> b >> s) || (s != "+1" && s != "-1")) {
            throw DomainError("malformed sign table line: " + line);
        }
        if (row >= signs.size() || a != row / d || b != row % d) {
            throw DomainError("sign table out of order at line: " + line);
        }
        signs[row++] = static_cast<std::int8_t>(s == "+1" ? 1 : -1);
    }
    if (row != signs.size()) {
        throw DomainError("sign table incomplete: " + std::to_string(row) + " of " +
                          std::to_string(signs.size()) + " entries");
    }
    return SignTable(lvl, std::move(signs));
}

std::string SignTable::file_name(Level lvl) { return "signs-n" + std::to_string(lvl.n()) + ".txt"; }

SignTable SignTable::load_or_build(Level lvl, const std::filesystem::path& dir)
{
    const auto path = dir / file_name(lvl);
    if (std::ifstream in{path}; in) return read(in, lvl);
    SignTable t = build(lvl);
    std::filesystem::create_directories(dir);
    std::ofstream out{path, std::ios::binary};
    if (!out) throw DomainError("cannot write sign table cache " + path.string());
    t.write(out);
    return t;
}

int SignTable::sign(Index a, Index b) const
{
    check_index(a, lvl_);
    check_index(b, lvl_);
    return signs_[std::size_t{a} * lvl_.dim() + b];
}

SignedUnit SignTable::mul(Index a, Index b) const { return {sign(a, b), a ^ b}; }

void SignTable::write(std::ostream& out) const
{
    const Index d = lvl_.dim();
    for (Index a = 0; a < d; ++a) {
        for (Index b = 0; b < d; ++b) {
            out << a << ' ' << b << ' ' << (signs_[std::size_t{a} * d + b] > 0 ? "+1" : "-1") << '\n';
        }
    }
}

} // namespace cdp
