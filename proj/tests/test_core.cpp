#include "oracle.hpp"

#include "cdp/core.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace cdp;

namespace {

Element from_vec(const oracle::Vec& v)
{
    Element e;
    for (Index i = 0; i < v.size(); ++i) e.add_term(i, v[i]);
    return e;
}

oracle::Vec to_vec(const Element& e, int n)
{
    oracle::Vec v(std::size_t{1} << n, 0);
    for (const auto& [i, c] : e.terms()) v[i] = c;
    return v;
}

std::filesystem::path scratch_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("cdp-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("basis products from the worked examples")
{
    CHECK(mul_basis(1, 2, Level(2)) == SignedUnit{1, 3});
    CHECK(mul_basis(0, 5, Level(3)) == SignedUnit{1, 5});
    CHECK(mul_basis(7, 7, Level(3)) == SignedUnit{-1, 0});
    CHECK(mul_basis(3, 8, Level(4)) == SignedUnit{1, 11});
    // (1,7,6) is cyclically positive, so 7*1 runs against the cycle.
    CHECK(mul_basis(1, 7, Level(3)) == SignedUnit{1, 6});
    CHECK(mul_basis(7, 1, Level(3)) == SignedUnit{-1, 6});
    CHECK(oracle::sign(3, 7, 1) == -1);
}

TEST_CASE("signed unit formatting")
{
    CHECK(to_string(SignedUnit{1, 3}) == "+3");
    CHECK(to_string(SignedUnit{-1, 6}) == "-6");
    CHECK(to_string(SignedUnit{-1, 0}) == "-0");
}

TEST_CASE("basis signs agree with the dense oracle")
{
    for (int n = 1; n <= 6; ++n) {
        const Level lvl(n);
        const auto table = oracle::sign_table(n);
        bool all = true;
        for (Index a = 0; a < lvl.dim(); ++a) {
            for (Index b = 0; b < lvl.dim(); ++b) {
                const SignedUnit u = mul_basis(a, b, lvl);
                all = all && u.index == (a ^ b) && u.sign == table[a * lvl.dim() + b];
            }
        }
        CHECK_MESSAGE(all, "N=" << n);
    }
    // N=7: low rows against every column.
    bool all7 = true;
    for (Index a = 0; a < 4; ++a) {
        for (Index b = 0; b < 128; ++b) all7 = all7 && basis_sign(a, b) == oracle::sign(7, a, b);
    }
    CHECK(all7);
}

TEST_CASE("index, identity and square laws up to N=8")
{
    const Level lvl(8);
    bool ok = true;
    for (Index a = 0; a < lvl.dim(); ++a) {
        ok = ok && mul_basis(0, a, lvl) == SignedUnit{1, a} && mul_basis(a, 0, lvl) == SignedUnit{1, a};
        if (a) ok = ok && mul_basis(a, a, lvl) == SignedUnit{-1, 0};
        for (Index b = 0; b < lvl.dim(); ++b) ok = ok && mul_basis(a, b, lvl).index == (a ^ b);
    }
    CHECK(ok);
}

TEST_CASE("generator law: i_L * i_g = +i_(g+L) for every power of two g")
{
    for (int n = 2; n <= 10; ++n) {
        const Level lvl(n);
        bool ok = true;
        for (Index g = 1; g <= lvl.generator(); g <<= 1) {
            for (Index l = 0; l < g; ++l) ok = ok && mul_basis(l, g, lvl) == SignedUnit{1, g + l};
        }
        CHECK_MESSAGE(ok, "N=" << n);
    }
}

TEST_CASE("signs do not depend on the level")
{
    for (Index a = 0; a < 16; ++a) {
        for (Index b = 0; b < 16; ++b) {
            CHECK(mul_basis(a, b, Level(4)) == mul_basis(a, b, Level(9)));
        }
    }
    CHECK(basis_sign(300, 700) == mul_basis(300, 700, Level(10)).sign);
}

TEST_CASE("out-of-range indices and levels are rejected")
{
    CHECK_THROWS_AS(mul_basis(16, 1, Level(4)), DomainError);
    CHECK_THROWS_AS(mul_basis(1, 16, Level(4)), DomainError);
    CHECK_THROWS_AS(Level(0), DomainError);
    CHECK_THROWS_AS(Level(31), DomainError);
    CHECK_THROWS_AS(mul_element(Element::unit(20), Element::unit(1), Level(4)), DomainError);
}

TEST_CASE("element canonical form and arithmetic")
{
    Element x = Element::dyad(3, 2, 3, -2);
    CHECK(x.is_zero());
    CHECK(to_string(x) == "0");

    Element y = Element::unit(0, 3) + Element::unit(7, -2);
    CHECK(to_string(y) == "3 - 2*i7");
    CHECK(y.coefficient(7) == -2);
    CHECK(y.coefficient(5) == 0);
    CHECK(y.max_index() == 7);
    CHECK((y - y).is_zero());
    CHECK((2 * y).coefficient(0) == 6);
    CHECK(-y == y * -1);
}

TEST_CASE("conjugation")
{
    CHECK(conjugate(Element::unit(0)) == Element::unit(0));
    CHECK(conjugate(Element::unit(5)) == Element::unit(5, -1));
    CHECK(conjugate(Element::unit(0, 3) + Element::unit(7, 2)) == Element::unit(0, 3) + Element::unit(7, -2));
    CHECK(norm_squared(Element::dyad(1, 3, 9, -4)) == 25);
}

TEST_CASE("sedenion zero product (i1 + i13)(i2 - i14)")
{
    const Element p = mul_element(Element::dyad(1, 1, 13, 1), Element::dyad(2, 1, 14, -1), Level(4));
    CHECK(p.is_zero());
    CHECK(oracle::is_zero(oracle::mul(oracle::dyad(4, 1, 1, 13, 1), oracle::dyad(4, 2, 1, 14, -1))));
    CHECK(mul_element(Element::unit(1), Element::unit(2), Level(2)) == Element::unit(3));
}

TEST_CASE("element products agree with the dense oracle on random inputs")
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            oracle::Vec a(std::size_t{1} << n), b(std::size_t{1} << n);
            for (auto& c : a) c = coeff(rng);
            for (auto& c : b) c = coeff(rng);
            const Element got = mul_element(from_vec(a), from_vec(b), Level(n));
            REQUIRE(to_vec(got, n) == oracle::mul(a, b));
        }
    }
}

TEST_CASE("sign table cache round-trips byte for byte")
{
    const Level lvl(5);
    const SignTable t = SignTable::build(lvl);
    std::ostringstream a, b;
    t.write(a);
    SignTable::build(lvl).write(b);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, 7) == "0 0 +1\n");

    std::istringstream in(a.str());
    const SignTable back = SignTable::read(in, lvl);
    for (Index x = 0; x < lvl.dim(); ++x) {
        for (Index y = 0; y < lvl.dim(); ++y) REQUIRE(back.sign(x, y) == basis_sign(x, y));
    }
    CHECK(back.mul(7, 1) == SignedUnit{-1, 6});

    const auto dir = scratch_dir("signs");
    const SignTable cached = SignTable::load_or_build(lvl, dir);
    CHECK(std::filesystem::exists(dir / SignTable::file_name(lvl)));
    CHECK(SignTable::file_name(lvl) == "signs-n5.txt");
    CHECK(SignTable::load_or_build(lvl, dir).sign(12, 9) == cached.sign(12, 9));
    std::filesystem::remove_all(dir);
}

TEST_CASE("malformed sign tables are rejected")
{
    std::istringstream truncated("0 0 +1\n0 1 +1\n");
    CHECK_THROWS_AS(SignTable::read(truncated, Level(2)), DomainError);
    std::istringstream garbage("0 0 +2\n");
    CHECK_THROWS_AS(SignTable::read(garbage, Level(1)), DomainError);
    CHECK_THROWS_AS(SignTable::build(Level(SignTable::kMaxCachedLevel + 1)), DomainError);
}
