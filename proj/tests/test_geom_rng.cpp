#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "trafficlab/geom.hpp"
#include "trafficlab/rng.hpp"

using namespace trafficlab;

TEST_CASE("heading conventions") {
    CHECK(vec_heading({0, 1}) == doctest::Approx(0.0));
    CHECK(vec_heading({1, 0}) == doctest::Approx(90.0));
    CHECK(vec_heading({0, -1}) == doctest::Approx(180.0));
    CHECK(vec_heading({-1, 0}) == doctest::Approx(270.0));
    CHECK(vec_heading({1, 1}) == doctest::Approx(45.0));

    CHECK(heading_dir(0.0).x == doctest::Approx(0.0));
    CHECK(heading_dir(0.0).z == doctest::Approx(1.0));
    CHECK(heading_dir(90.0).x == doctest::Approx(1.0));
    CHECK(heading_dir(90.0).z == doctest::Approx(0.0).epsilon(1e-9));

    CHECK(norm_deg(-20.0) == doctest::Approx(340.0));
    CHECK(norm_deg(360.0) == doctest::Approx(0.0));
    CHECK(norm_deg(725.0) == doctest::Approx(5.0));

    // Round trip: any direction's heading points back at it.
    RngStream rng(1);
    for (int i = 0; i < 200; ++i) {
        const double yaw = rng.uniform(0.0, 360.0);
        CHECK(vec_heading(heading_dir(yaw)) == doctest::Approx(yaw).epsilon(1e-9));
    }
}

TEST_CASE("local frame: z forward, x rightward") {
    // Facing +z: world coordinates are already local.
    Vec2 l = to_local({1, 2}, 0.0);
    CHECK(l.x == doctest::Approx(1.0));
    CHECK(l.z == doctest::Approx(2.0));
    // Facing +x: a point ahead is (0, 1); a point to the left has negative x.
    l = to_local({1, 0}, 90.0);
    CHECK(l.x == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(l.z == doctest::Approx(1.0));
    l = to_local({0, 1}, 90.0);
    CHECK(l.x == doctest::Approx(-1.0));
    CHECK(l.z == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("oriented rectangle corners") {
    Obb box{{0, 0}, 1.0, 2.0, 0.0};
    Vec2 c[4];
    box.corners(c);
    CHECK(c[0].x == doctest::Approx(1.0));   // front-right
    CHECK(c[0].z == doctest::Approx(2.0));
    CHECK(c[1].x == doctest::Approx(-1.0));  // front-left
    CHECK(c[1].z == doctest::Approx(2.0));
    CHECK(c[2].x == doctest::Approx(-1.0));  // back-left
    CHECK(c[2].z == doctest::Approx(-2.0));
    CHECK(c[3].x == doctest::Approx(1.0));   // back-right
    CHECK(c[3].z == doctest::Approx(-2.0));

    // Facing +x the footprint's long side lies along x.
    Obb turned{{0, 0}, 1.0, 2.0, 90.0};
    turned.corners(c);
    CHECK(c[0].x == doctest::Approx(2.0));
    CHECK(c[0].z == doctest::Approx(-1.0));
}

TEST_CASE("separating-axis distance for rectangle pairs") {
    const Obb unit{{0, 0}, 1.0, 1.0, 0.0};

    SUBCASE("separated along x") {
        const SatResult r = sat_obb(unit, Obb{{3, 0}, 1.0, 1.0, 0.0});
        CHECK(r.separation == doctest::Approx(1.0));
        CHECK(r.axis.x == doctest::Approx(1.0));
        CHECK(r.axis.z == doctest::Approx(0.0).epsilon(1e-9));
    }
    SUBCASE("overlapping by 0.5") {
        const SatResult r = sat_obb(unit, Obb{{1.5, 0}, 1.0, 1.0, 0.0});
        CHECK(r.separation == doctest::Approx(-0.5));
        CHECK(r.axis.x == doctest::Approx(1.0));
    }
    SUBCASE("exactly touching") {
        const SatResult r = sat_obb(unit, Obb{{2, 0}, 1.0, 1.0, 0.0});
        CHECK(r.separation == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("coincident vehicle footprints overlap by the footprint width") {
        const Obb car{{5, -3}, 0.95, 2.25, 40.0};
        const SatResult r = sat_obb(car, car);
        CHECK(r.separation == doctest::Approx(-1.9));
    }
    SUBCASE("rotated neighbor") {
        // The 45-degree box projects a half-diagonal of sqrt(2) onto x.
        const SatResult r = sat_obb(unit, Obb{{2.8, 0}, 1.0, 1.0, 45.0});
        CHECK(r.separation == doctest::Approx(2.8 - 1.0 - std::sqrt(2.0)));
    }
    SUBCASE("axis always points from the first box to the second") {
        const SatResult r = sat_obb(Obb{{3, 0}, 1, 1, 0}, unit);
        CHECK(r.axis.x == doctest::Approx(-1.0));
    }
}

TEST_CASE("ray versus oriented rectangle") {
    const Obb box{{0, 0}, 1.0, 1.0, 0.0};
    SUBCASE("head-on hit") {
        auto d = ray_obb({-5, 0}, {1, 0}, 10.0, box);
        REQUIRE(d.has_value());
        CHECK(*d == doctest::Approx(4.0));
    }
    SUBCASE("origin inside reports zero distance") {
        auto d = ray_obb({0.2, -0.3}, {1, 0}, 10.0, box);
        REQUIRE(d.has_value());
        CHECK(*d == doctest::Approx(0.0));
    }
    SUBCASE("miss to the side") {
        CHECK(!ray_obb({-5, 2.5}, {1, 0}, 10.0, box).has_value());
    }
    SUBCASE("beyond range") {
        CHECK(!ray_obb({-5, 0}, {1, 0}, 3.9, box).has_value());
    }
    SUBCASE("pointing away") {
        CHECK(!ray_obb({-5, 0}, {-1, 0}, 10.0, box).has_value());
    }
    SUBCASE("rotated box") {
        // Box corner toward the ray: at 45 degrees the near face sits sqrt(2) from center.
        const Obb rot{{0, 0}, 1.0, 1.0, 45.0};
        auto d = ray_obb({-5, 0}, {1, 0}, 10.0, rot);
        REQUIRE(d.has_value());
        CHECK(*d == doctest::Approx(5.0 - std::sqrt(2.0)));
    }
}

TEST_CASE("random streams are reproducible and independent") {
    RngStream a(12345), b(12345), c(54321);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t va = a.next_u64();
        all_equal = all_equal && (va == b.next_u64());
        any_diff = any_diff || (va != c.next_u64());
    }
    CHECK(all_equal);
    CHECK(any_diff);

    // Named derivation separates streams under one master seed.
    CHECK(derive_seed(7, "spawning") != derive_seed(7, "paths"));
    CHECK(derive_seed(7, "spawning") != derive_seed(8, "spawning"));
    RngStreams s1(99), s2(99);
    CHECK(s1.spawning.next_u64() == s2.spawning.next_u64());
    CHECK(s1.paths.next_u64() == s2.paths.next_u64());
}

TEST_CASE("uniform draws respect their bounds") {
    RngStream rng(7);
    for (int i = 0; i < 5000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = rng.uniform(5.0, 60.0);
        CHECK(v >= 5.0);
        CHECK(v < 60.0);
        CHECK(rng.uniform_int(7) < 7);
    }
}

TEST_CASE("normal draws have the right first two moments") {
    RngStream rng(11);
    const int n = 20000;
    double sum = 0, sum2 = 0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(std::fabs(mean) < 0.05);
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("index sampling is a uniform draw without replacement") {
    RngStream rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto picked = rng.sample_indices(120, 50);
        REQUIRE(picked.size() == 50);
        std::set<std::uint32_t> unique(picked.begin(), picked.end());
        CHECK(unique.size() == 50);
        for (auto idx : picked) CHECK(idx < 120);
    }
    // k == n returns a permutation; k == 0 returns nothing.
    auto all = rng.sample_indices(10, 10);
    std::sort(all.begin(), all.end());
    for (std::uint32_t i = 0; i < 10; ++i) CHECK(all[i] == i);
    CHECK(rng.sample_indices(10, 0).empty());

    // Every index gets picked eventually (coverage sanity).
    std::set<std::uint32_t> seen;
    for (int trial = 0; trial < 200; ++trial)
        for (auto idx : rng.sample_indices(20, 5)) seen.insert(idx);
    CHECK(seen.size() == 20);
}
