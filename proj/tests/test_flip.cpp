#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace floerkit;
using testutil::flips_agree_on_homology;
using testutil::grading_multiset;

TEST_CASE("shipped flip maps verify") {
    for (const auto& nm : catalog_names()) {
        auto e = catalog_get(nm);
        if (!e.flip) continue;
        auto chk = verify_flip(e.complex, *e.flip);
        INFO(nm << (chk.ok ? "" : ": " + chk.violation));
        CHECK(chk.ok);
    }
}

TEST_CASE("verify_flip rejects bad candidates") {
    auto cable = catalog_get("cable").complex;

    // the identity map preserves gradings and is a chain map, but fails the
    // level quasi-isomorphism axiom on an asymmetric complex
    FlipMap id;
    for (const auto& g : cable.generators) id.entries.push_back({g.name, g.name, 0});
    CHECK_FALSE(verify_flip(cable, id).ok);

    // the zero map fails the quasi-isomorphism axiom
    FlipMap zero;
    auto chk = verify_flip(cable, zero);
    CHECK_FALSE(chk.ok);
    CHECK(chk.violation.find("quasi-isomorphism") != std::string::npos);

    // a grading breach is reported as such
    FlipMap bad;
    bad.entries.push_back({"a", "b", 0});  // M(b) - M(a) = 1, odd
    auto chk2 = verify_flip(cable, bad);
    CHECK_FALSE(chk2.ok);
    CHECK(chk2.violation.find("grading") != std::string::npos);

    // dangling names are caught
    FlipMap dangling;
    dangling.entries.push_back({"a", "ghost", 0});
    CHECK_FALSE(verify_flip(cable, dangling).ok);
}

TEST_CASE("find_flip recovers a valid flip on every fixture") {
    for (const auto& nm : catalog_names()) {
        INFO(nm);
        auto e = catalog_get(nm);
        auto found = find_flip(e.complex);
        CHECK(verify_flip(e.complex, found).ok);
        if (e.flip) CHECK(flips_agree_on_homology(e.complex, found, *e.flip));
    }
}

TEST_CASE("find_flip on the unknot is the identity up to homotopy") {
    auto u = catalog_get("unknot").complex;
    auto f = find_flip(u);
    REQUIRE(f.entries.size() == 1);
    CHECK(f.entries[0].from == "u");
    CHECK(f.entries[0].to == "u");
    CHECK(f.entries[0].u_power == 0);
}

TEST_CASE("surgery output does not depend on the flip representative") {
    for (const auto& nm : {"t23", "fig8", "cable"}) {
        INFO(nm);
        auto e = catalog_get(nm);
        REQUIRE(e.flip.has_value());
        auto found = find_flip(e.complex);
        auto c1 = core_complex(e.complex, *e.flip);
        auto c2 = core_complex(e.complex, found);
        CHECK(grading_multiset(c1) == grading_multiset(c2));
        CHECK(tau(c1) == tau(c2));
        CHECK(d_invariant(c1) == d_invariant(c2));
        CHECK(d_of_1_over_n_surgery(e.complex, *e.flip, 2) ==
              d_of_1_over_n_surgery(e.complex, found, 2));
    }
}
