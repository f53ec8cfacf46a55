#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "ringrep/finitemodels.hpp"

using namespace ringrep;

namespace {

Fraction frac(long long p, long long q) {
    return Fraction(RingElement::integer(Int(p)), RingElement::integer(Int(q)));
}

// all reduced fractions p/q, |p| <= bound, 1 <= q <= bound, den coprime to m
std::vector<Fraction> admissible_fractions(std::uint32_t m, long long bound) {
    std::vector<Fraction> out;
    for (long long q = 1; q <= bound; ++q) {
        for (long long p = -bound; p <= bound; ++p) {
            Fraction f = frac(p, q);
            long long den = f.den().as_integer().convert_to<long long>();
            if (std::gcd(den % m, static_cast<long long>(m)) != 1 && m > 1) continue;
            bool seen = false;
            for (const Fraction& g : out) {
                if (g == f) {
                    seen = true;
                    break;
                }
            }
            if (!seen) out.push_back(f);
        }
    }
    return out;
}

} // namespace

TEST_CASE("permutation basics") {
    PermMatrix id = PermMatrix::identity(4);
    PermMatrix c({1, 2, 3, 0});
    CHECK(c.compose_after(c.inverse()) == id);
    CHECK(c.power(4) == id);
    CHECK(c.power(-1) == c.inverse());
    CHECK(c.to_string() == "[1 2 3 0]");
    CHECK_THROWS_AS(PermMatrix({0, 0, 1}), ArgumentError);
}

TEST_CASE("cyclic model construction") {
    FiniteModel trivial = FiniteModel::cyclic(1);
    CHECK(trivial.shift() == PermMatrix::identity(1));

    FiniteModel m5 = FiniteModel::cyclic(5);
    // T_2 V = V^2 T_2: both send j to 2j+2
    CHECK(m5.multiplier(2).compose_after(m5.shift()) ==
          m5.shift().power(2).compose_after(m5.multiplier(2)));

    FiniteModel m6 = FiniteModel::cyclic(6);
    CHECK(m6.multiplier_residues() == std::vector<std::uint32_t>{1, 5});
    CHECK_THROWS_AS(m6.multiplier(2), ArgumentError);

    CHECK_THROWS_AS(FiniteModel::cyclic(0), ArgumentError);
}

TEST_CASE("model verification report") {
    Report rep = verify_model(FiniteModel::cyclic(5));
    CHECK(rep.verdict() == Report::Verdict::Pass);
    CHECK(rep.count(Report::PointClass::Violated) == 0);
    // the two conventions for u[1/2] differ: corrected gives 2^{-1} = 3, the
    // paper's operator order gives 1*2 = 2
    CHECK(rep.value_of("convention.u[1/2].corrected") == "translation 3");
    CHECK(rep.value_of("convention.u[1/2].paper-order") == "translation 2");
}

TEST_CASE("fraction extension examples") {
    FiniteModel m5 = FiniteModel::cyclic(5);

    CHECK(extend_to_fractions(m5, frac(1, 1), Generator::Kind::S) == PermMatrix::identity(5));

    // s_{1/2} = multiplication by 2^{-1} = 3 mod 5
    PermMatrix s_half = extend_to_fractions(m5, frac(1, 2), Generator::Kind::S);
    std::uint32_t a = 0, b = 0;
    REQUIRE(as_affine_map(s_half, 5, &a, &b));
    CHECK(a == 3);
    CHECK(b == 0);

    // u_{1/2} = translation by 3 mod 5
    PermMatrix u_half = extend_to_fractions(m5, frac(1, 2), Generator::Kind::U);
    REQUIRE(as_affine_map(u_half, 5, &a, &b));
    CHECK(a == 1);
    CHECK(b == 3);

    CHECK_THROWS_AS(extend_to_fractions(m5, frac(1, 5), Generator::Kind::U), ArgumentError);
    CHECK_THROWS_AS(extend_to_fractions(m5, frac(5, 2), Generator::Kind::S), ArgumentError);
    CHECK_THROWS_AS(extend_to_fractions(m5, frac(0, 2), Generator::Kind::S), ArgumentError);
}

TEST_CASE("extension is well defined on unreduced pairs") {
    std::mt19937_64 rng(0xE11);
    std::uniform_int_distribution<long long> entry(-12, 12);
    for (std::uint32_t m : {5u, 7u, 9u, 11u}) {
        FiniteModel model = FiniteModel::cyclic(m);
        for (int k = 0; k < 300; ++k) {
            long long p = entry(rng), q = entry(rng), c = entry(rng);
            if (q == 0 || c == 0) continue;
            auto admissible = [&](long long num, long long den, Generator::Kind kind) {
                if (std::gcd(std::abs(den) % m, static_cast<long long>(m)) != 1) return false;
                if (kind == Generator::Kind::S &&
                    (num == 0 || std::gcd(std::abs(num) % m, static_cast<long long>(m)) != 1))
                    return false;
                return true;
            };
            for (Generator::Kind kind : {Generator::Kind::U, Generator::Kind::S}) {
                if (!admissible(p, q, kind) || !admissible(p * c, q * c, kind)) continue;
                CHECK(extend_raw(model, Int(p), Int(q), kind) ==
                      extend_raw(model, Int(p * c), Int(q * c), kind));
            }
        }
    }
}

TEST_CASE("quotient relation examples") {
    FiniteModel m5 = FiniteModel::cyclic(5);
    // u_{1/2} u_{1/3} = u_{5/6}: translations by 3 and 2 compose to 0
    PermMatrix lhs = extend_to_fractions(m5, frac(1, 2), Generator::Kind::U)
                         .compose_after(extend_to_fractions(m5, frac(1, 3), Generator::Kind::U));
    PermMatrix rhs = extend_to_fractions(m5, frac(5, 6), Generator::Kind::U);
    CHECK(lhs == rhs);
    CHECK(rhs == PermMatrix::identity(5));

    // m=7: s_{2/3} u_{1/2} = u_{(2/3)(1/2)} s_{2/3}
    FiniteModel m7 = FiniteModel::cyclic(7);
    Fraction sa = frac(2, 3), ub = frac(1, 2);
    PermMatrix l = extend_to_fractions(m7, sa, Generator::Kind::S)
                       .compose_after(extend_to_fractions(m7, ub, Generator::Kind::U));
    PermMatrix r = extend_to_fractions(m7, sa.mul(ub), Generator::Kind::U)
                       .compose_after(extend_to_fractions(m7, sa, Generator::Kind::S));
    CHECK(l == r);
}

TEST_CASE("quotient relation suite passes exactly") {
    for (std::uint32_t m : {5u, 7u, 9u}) {
        FiniteModel model = FiniteModel::cyclic(m);
        std::vector<Fraction> fractions = admissible_fractions(m, 4);
        std::vector<std::pair<Fraction, Fraction>> pairs;
        for (std::size_t i = 0; i < fractions.size(); i += 3)
            for (std::size_t j = 0; j < fractions.size(); j += 3)
                pairs.emplace_back(fractions[i], fractions[j]);
        Report rep = verify_quotient_relations(model, pairs);
        CHECK(rep.verdict() == Report::Verdict::Pass);
        CHECK(rep.count(Report::PointClass::Violated) == 0);
    }

    // trivial pair
    FiniteModel m5 = FiniteModel::cyclic(5);
    Report rep = verify_quotient_relations(m5, {{frac(1, 1), frac(1, 1)}});
    CHECK(rep.verdict() == Report::Verdict::Pass);
}

TEST_CASE("factorization through the quotient field") {
    FiniteModel m5 = FiniteModel::cyclic(5);
    CHECK(extend_raw(m5, Int(0), Int(1), Generator::Kind::U) == PermMatrix::identity(5));
    CHECK(extend_raw(m5, Int(2), Int(1), Generator::Kind::S) == m5.multiplier(2));

    // m=7, normal form (3, 2): V^2 T_3 directly vs through fractions
    FiniteModel m7 = FiniteModel::cyclic(7);
    PermMatrix direct = m7.shift().power(2).compose_after(m7.multiplier(3));
    PermMatrix through = extend_raw(m7, Int(2), Int(1), Generator::Kind::U)
                             .compose_after(extend_raw(m7, Int(3), Int(1), Generator::Kind::S));
    CHECK(direct == through);

    for (std::uint32_t m : {1u, 5u, 7u, 9u, 11u}) {
        Report rep = check_factorization(FiniteModel::cyclic(m), 42);
        CHECK(rep.verdict() == Report::Verdict::Pass);
        CHECK(rep.count(Report::PointClass::Violated) == 0);
        CHECK(rep.value_of("seed") == "42");
    }
}

TEST_CASE("extended permutations lie in the affine group") {
    std::mt19937_64 rng(0xAF1);
    std::uniform_int_distribution<long long> entry(-9, 9);
    for (std::uint32_t m : {5u, 7u, 11u}) {
        FiniteModel model = FiniteModel::cyclic(m);
        for (int k = 0; k < 200; ++k) {
            long long p = entry(rng), q = entry(rng);
            if (q == 0 || std::gcd(std::abs(q) % m, static_cast<long long>(m)) != 1) continue;
            PermMatrix u = extend_raw(model, Int(p), Int(q), Generator::Kind::U);
            CHECK(as_affine_map(u, m, nullptr, nullptr));
            if (p != 0 && std::gcd(std::abs(p) % m, static_cast<long long>(m)) == 1) {
                PermMatrix s = extend_raw(model, Int(p), Int(q), Generator::Kind::S);
                CHECK(as_affine_map(s, m, nullptr, nullptr));
            }
        }
    }
}
