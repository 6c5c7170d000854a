#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace floerkit;
using testutil::grading_multiset;

TEST_CASE("validate accepts the fixtures") {
    for (const auto& nm : catalog_names()) {
        auto e = catalog_get(nm);
        auto rep = validate(e.complex);
        INFO(nm << (rep.ok ? "" : ": " + rep.errors.front()));
        CHECK(rep.ok);
    }
}

TEST_CASE("validate rejects broken complexes") {
    BifilteredComplex c;
    c.generators = {{"x", 0, 0}, {"y", 0, -1}};
    c.differential = {{"x", "y", 0}, {"y", "x", 0}};
    c.genus = 0;
    c.reduced = false;
    CHECK_FALSE(validate(c).ok);  // d^2 != 0 (and gradings clash)

    BifilteredComplex dup;
    dup.generators = {{"x", 0, 0}, {"x", 0, 0}};
    CHECK_FALSE(validate(dup).ok);

    BifilteredComplex dangling;
    dangling.generators = {{"x", 0, 0}};
    dangling.differential = {{"x", "ghost", 0}};
    CHECK_FALSE(validate(dangling).ok);

    BifilteredComplex wrong_genus = catalog_get("t23").complex;
    wrong_genus.genus = 2;
    CHECK_FALSE(validate(wrong_genus).ok);

    BifilteredComplex breach;
    breach.generators = {{"x", 0, 0}, {"y", 1, -1}};
    breach.differential = {{"x", "y", 0}};  // j increases
    breach.genus = 1;
    CHECK_FALSE(validate(breach).ok);
}

TEST_CASE("tensor with the unknot is the identity") {
    auto cable = catalog_get("cable").complex;
    auto t = tensor(cable, catalog_get("unknot").complex);
    CHECK(validate(t).ok);
    CHECK(t.generators.size() == cable.generators.size());
    CHECK(t.differential.size() == cable.differential.size());
    CHECK(grading_multiset(t) == grading_multiset(cable));
}

TEST_CASE("tensor is valid, commutative and associative up to renaming") {
    auto a = catalog_get("t23").complex;
    auto b = catalog_get("fig8").complex;
    auto c = catalog_get("t-23").complex;
    auto ab = tensor(a, b), ba = tensor(b, a);
    CHECK(validate(ab).ok);
    CHECK(grading_multiset(ab) == grading_multiset(ba));
    CHECK(tower_report(ab) == tower_report(ba));
    auto abc = tensor(ab, c), acb = tensor(a, tensor(b, c));
    CHECK(validate(abc).ok);
    CHECK(grading_multiset(abc) == grading_multiset(acb));
    CHECK(tower_report(abc) == tower_report(acb));
    // genus is subadditive
    CHECK(ab.genus <= a.genus + b.genus);
}

TEST_CASE("dualize is a validity-preserving involution") {
    for (const auto& nm : catalog_names()) {
        auto c = catalog_get(nm).complex;
        auto d = dualize(c);
        CHECK(validate(d).ok);
        auto dd = dualize(d);
        CHECK(grading_multiset(dd) == grading_multiset(c));
        CHECK(dd.differential.size() == c.differential.size());
    }
    auto u = catalog_get("unknot").complex;
    CHECK(grading_multiset(dualize(u)) == grading_multiset(u));
}

TEST_CASE("subquotient translate counts") {
    auto cable = catalog_get("cable").complex;
    int W = cable.default_window();
    CHECK(subquotient(cable, Region::column(), W).size() == 11);
    Region col_jneg = Region::column();
    col_jneg.jmax = 0;
    CHECK(subquotient(cable, col_jneg, W).size() == 7);
    auto u = catalog_get("unknot").complex;
    auto m = subquotient(u, Region::column(), u.default_window());
    CHECK(m.size() == 1);
    CHECK(m.total_homology_rank() == 1);
}

TEST_CASE("subquotient detects a too-small window") {
    auto cable = catalog_get("cable").complex;
    // a j-band wide enough that arrows point at in-region translates with
    // |k| beyond the translate window
    Region band;
    band.jmin = -100;
    band.jmax = 0;
    CHECK_THROWS(subquotient(cable, band, 1));
}

TEST_CASE("hat differential rank of the cable column is 5") {
    auto cable = catalog_get("cable").complex;
    auto m = subquotient(cable, Region::column(), cable.default_window());
    int rank = 0;
    for (auto& [g, sl] : m.slices()) rank += f2_rank(m.boundary(g), m.slice_dim(g - 1));
    CHECK(rank == 5);
    CHECK(m.total_homology_rank() == 11 - 2 * 5);
}

TEST_CASE("f2 basics") {
    std::vector<BitVec> id3;
    for (int i = 0; i < 3; ++i) {
        BitVec v(3);
        v.set(i);
        id3.push_back(v);
    }
    CHECK(f2_rank(id3, 3) == 3);
    std::vector<BitVec> zero(4, BitVec(3));
    CHECK(f2_rank(zero, 3) == 0);
    CHECK(f2_kernel(zero, 3, 4).size() == 4);
    BitVec b(3);
    b.set(1);
    auto sol = f2_solve(id3, b, 3);
    REQUIRE(sol.has_value());
    CHECK(sol->get(1));
}

TEST_CASE("graded Euler characteristic of the column is symmetric") {
    for (const auto& nm : catalog_names()) {
        auto c = catalog_get(nm).complex;
        std::map<int, int> chi;
        for (const auto& g : c.generators) chi[g.alexander] += (g.maslov % 2 == 0) ? 1 : -1;
        for (int s = -c.genus; s <= c.genus; ++s) {
            INFO(nm << " at alexander " << s);
            int a = chi.count(s) ? chi[s] : 0;
            int b = chi.count(-s) ? chi[-s] : 0;
            CHECK(a == b);
        }
    }
}
