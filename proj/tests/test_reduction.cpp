#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace floerkit;
using testutil::grading_multiset;
using testutil::region_grid;

namespace {

void check_oracle(const BifilteredComplex& input, const std::string& label) {
    auto red = reduce(input);
    CHECK(validate(red).ok);
    int W = std::max(input.default_window(), red.default_window());
    auto grid = region_grid();
    REQUIRE(grid.size() == 20);
    for (size_t r = 0; r < grid.size(); ++r) {
        INFO(label << ", region " << r);
        auto before = RegionModel(input, grid[r], W).homology_ranks();
        auto after = RegionModel(red, grid[r], W).homology_ranks();
        CHECK(before == after);
    }
}

}  // namespace

TEST_CASE("reduce is the identity on reduced fixtures") {
    auto cable = catalog_get("cable").complex;
    auto r = reduce(cable);
    CHECK(grading_multiset(r) == grading_multiset(cable));
    CHECK(r.differential.size() == cable.differential.size());
    CHECK(r.reduced);
}

TEST_CASE("reduce cancels an acyclic pair") {
    BifilteredComplex c;
    c.generators = {{"x", 0, 1}, {"y", 0, 0}};
    c.differential = {{"x", "y", 0}};
    c.genus = 0;
    c.reduced = false;
    auto r = reduce(c);
    CHECK(r.generators.empty());
    CHECK(r.differential.empty());
}

TEST_CASE("reduce is idempotent") {
    auto cable = catalog_get("cable");
    auto cone = build_cone(cable.complex, *cable.flip, 1, -2, 3, true);
    auto r1 = reduce(cone);
    auto r2 = reduce(r1);
    CHECK(grading_multiset(r1) == grading_multiset(r2));
    CHECK(r1.differential == r2.differential);
}

TEST_CASE("reduction preserves subquotient homology on fixtures") {
    for (const auto& nm : catalog_names()) check_oracle(catalog_get(nm).complex, nm);
}

TEST_CASE("reduction preserves subquotient homology on built cones") {
    auto cable = catalog_get("cable");
    check_oracle(build_cone(cable.complex, *cable.flip, 1, -2, 3, true), "cable +1 cone");
    auto t23 = catalog_get("t23");
    check_oracle(build_cone(t23.complex, *t23.flip, 1, 0, 1, true), "t23 +1 cone");
    auto fig8 = catalog_get("fig8");
    check_oracle(build_cone(fig8.complex, *fig8.flip, 1, 0, 1, true), "fig8 +1 cone");
}

TEST_CASE("output gradings match the associated graded homology") {
    // generator count of reduce(X) at each alexander grading equals the rank
    // of the hat piece homology of the cone
    auto cable = catalog_get("cable");
    auto core = core_complex(cable.complex, *cable.flip);
    std::map<int, int> per_alex;
    for (const auto& g : core.generators) ++per_alex[g.alexander];
    for (auto [s, r] : hfk_hat_core(cable.complex, *cable.flip)) {
        INFO("alexander " << s);
        CHECK((per_alex.count(s) ? per_alex[s] : 0) == r);
    }
}
