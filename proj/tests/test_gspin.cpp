#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equik/gspin.hpp"

using namespace equik;
using namespace equik::gspin;

namespace {

Rat vec_sum(const std::vector<Rat>& v) {
    Rat s(0);
    for (const auto& q : v) s += q;
    s.canonicalize();
    return s;
}

}  // namespace

TEST_CASE("free actions") {
    for (long m : {2L, 3L, 4L}) {
        for (Parity lift : {Parity::Even, Parity::Odd}) {
            FixedPointData d;
            d.m = m;
            d.lift = lift;
            d.sigma = Rat(-16);
            CharVector c = s_characters(d);
            CHECK(c.chars[0] == CycNum(Rat(-16)));
            CHECK(c.chars[m] == CycNum(Rat(lift == Parity::Even ? -16 : 16)));
            for (long k = 1; k < 2 * m; ++k)
                if (k != m) CHECK(c.chars[k].is_zero());
            auto v = frakS_vector(d);
            CHECK(vec_sum(v) == Rat(-16));
            if (m == 2 && lift == Parity::Even) {
                CHECK(v[0] == Rat(-16));
                CHECK(v[1] == Rat(0));
            }
        }
    }
}

TEST_CASE("involution specializations") {
    // surface with psi = pi contributes S(pi) = 0
    FixedPointData d;
    d.m = 2;
    d.lift = Parity::Odd;
    d.sigma = Rat(0);
    d.surfaces.push_back(SurfaceComponent{1, -2, Turn{1, 2}, 1});
    d.surfaces.push_back(SurfaceComponent{3, -2, Turn{3, 2}, -1});
    CharVector c = s_characters(d);
    CHECK(c.chars[1].is_zero());
    CHECK(c.chars[3].is_zero());

    // isolated point with (alpha, beta) = (pi, pi): contribution 2*R(pi,pi) = 2
    FixedPointData d2;
    d2.m = 2;
    d2.lift = Parity::Even;
    d2.sigma = Rat(0);
    d2.isolated.push_back(IsolatedPoint{1, Turn{1, 2}, Turn{1, 2}, 1});
    CharVector c2 = s_characters(d2);
    CHECK(c2.chars[1] == CycNum(2));
}

TEST_CASE("character-vector transform") {
    // constant characters, even lift: vector is (sigma, 0, ..., 0)
    for (long m : {2L, 3L, 4L}) {
        CharVector c;
        c.m = m;
        c.lift = Parity::Even;
        c.chars.assign(2 * m, CycNum(Rat(7)));
        auto v = char_to_vector(c);
        CHECK(v[0] == Rat(7));
        for (long j = 1; j < m; ++j) CHECK(v[j] == Rat(0));
    }
    // epsilon-alternating constant, odd lift, m = 2: (sigma/2, sigma/2)
    {
        CharVector c;
        c.m = 2;
        c.lift = Parity::Odd;
        c.chars = {CycNum(6), CycNum(0), CycNum(-6), CycNum(0)};
        auto v = char_to_vector(c);
        CHECK(v[0] == Rat(3));
        CHECK(v[1] == Rat(3));
    }
    // inversion round-trip
    for (Parity lift : {Parity::Even, Parity::Odd}) {
        std::vector<Rat> v{Rat(1, 2), Rat(-3), Rat(5, 8)};
        CharVector c = vector_to_char(3, lift, v);
        auto w = char_to_vector(c);
        CHECK(w == v);
    }
}

TEST_CASE("correction term from a filling") {
    // Spin = 0, free action: n^{mu^0} = sigma/8
    FixedPointData d;
    d.m = 2;
    d.lift = Parity::Even;
    d.sigma = Rat(-16);
    std::vector<Int> spin(4, Int(0));
    Correction n = correction_from_filling(spin, d);
    CHECK(n.chars.chars[0] == CycNum(Rat(-2)));
    // even lift: characters repeat with period m
    for (long k = 0; k < 2; ++k) CHECK(n.chars.chars[k] == n.chars.chars[k + 2]);

    // odd lift m=2 with psi = pi surfaces: n^mu = 0 when eta is absent
    FixedPointData d3;
    d3.m = 2;
    d3.lift = Parity::Odd;
    d3.sigma = Rat(0);
    d3.surfaces.push_back(SurfaceComponent{1, 4, Turn{1, 2}, 1});
    d3.surfaces.push_back(SurfaceComponent{3, 4, Turn{3, 2}, 1});
    std::vector<Int> spin3(4, Int(0));
    Correction n3 = correction_from_filling(spin3, d3);
    CHECK(n3.chars.chars[1].is_zero());
}

TEST_CASE("spin lift classification") {
    auto both = classify_spin_lift_parity(3, 5, {}, std::nullopt);
    CHECK(both.size() == 2);
    auto odd3 = classify_spin_lift_parity(3, 2, {1, 1}, std::nullopt);
    REQUIRE(odd3.size() == 1);
    CHECK(odd3[0] == Parity::Odd);
    auto even4 = classify_spin_lift_parity(4, 2, {0, 0, 0}, std::nullopt);
    REQUIRE(even4.size() == 1);
    CHECK(even4[0] == Parity::Even);
    auto odd4 = classify_spin_lift_parity(4, 4, {2}, std::nullopt);
    REQUIRE(odd4.size() == 1);
    CHECK(odd4[0] == Parity::Odd);
    CHECK(classify_spin_lift_parity(4, 2, {}, true)[0] == Parity::Even);
    CHECK_THROWS(classify_spin_lift_parity(3, 2, {2}, std::nullopt));
    CHECK_THROWS(classify_spin_lift_parity(4, 2, {0, 2}, std::nullopt));
}

TEST_CASE("random consistent data: augmentation, rationality, flip invariance") {
    std::mt19937 rng(2024);
    for (long m : {2L, 3L, 4L, 5L}) {
        for (Parity lift : {Parity::Even, Parity::Odd}) {
            for (int trial = 0; trial < 30; ++trial) {
                FixedPointData d = random_fixed_point_data(m, lift, rng);
                CharVector c = s_characters(d);
                // conjugation symmetry
                for (long k = 1; k < m; ++k) CHECK(c.chars[k] == c.chars[2 * m - k]);
                // lift symmetry
                long eps = lift == Parity::Even ? 1 : -1;
                for (long k = 1; k < m; ++k)
                    CHECK(c.chars[m + k] == CycNum(eps) * c.chars[k]);
                auto v = char_to_vector(c);  // throws if not rational
                CHECK(vec_sum(v) == d.sigma);
                auto f = frakS_vector(d);
                CHECK(vec_sum(f) == d.sigma);
                auto f2 = frakS_vector(spin_flip(d));
                CHECK(f == f2);
            }
        }
    }
}

TEST_CASE("angle symmetries of the data") {
    // (alpha, beta) -> (beta, alpha) and (alpha, beta) -> (-alpha, -beta)
    // leave frakS unchanged; psi -> -psi too.
    FixedPointData d;
    d.m = 3;
    d.lift = Parity::Even;
    d.sigma = Rat(4);
    for (long k = 1; k < 6; ++k) {
        if (k == 3) continue;
        d.isolated.push_back(IsolatedPoint{k, Turn{k, 3}, Turn{2 * k, 3}, 1});
        d.surfaces.push_back(SurfaceComponent{k, 2, Turn{k, 3}, -1});
    }
    auto base = frakS_vector(d);
    FixedPointData swapped = d;
    for (auto& p : swapped.isolated) std::swap(p.alpha, p.beta);
    CHECK(frakS_vector(swapped) == base);
    FixedPointData negated = d;
    for (auto& p : negated.isolated) {
        p.alpha.num = -p.alpha.num;
        p.beta.num = -p.beta.num;
    }
    for (auto& s : negated.surfaces) s.psi.num = -s.psi.num;
    CHECK(frakS_vector(negated) == base);
}

TEST_CASE("json round trip") {
    FixedPointData d;
    d.m = 2;
    d.lift = Parity::Odd;
    d.sigma = Rat(-3, 2);
    d.isolated.push_back(IsolatedPoint{1, Turn{1, 2}, Turn{1, 2}, -1});
    d.surfaces.push_back(SurfaceComponent{3, -2, Turn{3, 2}, 1});
    FixedPointData back = filling_from_json(filling_to_json(d));
    CHECK(back.m == d.m);
    CHECK(back.lift == d.lift);
    CHECK(back.sigma == d.sigma);
    REQUIRE(back.isolated.size() == 1);
    CHECK(back.isolated[0].sign == -1);
    REQUIRE(back.surfaces.size() == 1);
    CHECK(back.surfaces[0].self_int == -2);
}
