#include <doctest.h>

#include <cstdlib>

#include "goodsemi/catalog.hpp"
#include "goodsemi/duality.hpp"
#include "goodsemi/idealops.hpp"
#include "goodsemi/io.hpp"
#include "oracle.hpp"

using namespace goodsemi;

namespace {

bool same(const std::vector<GoodSemigroup>& fast, const std::vector<Representation>& slow) {
    if (fast.size() != slow.size()) return false;
    for (std::size_t k = 0; k < fast.size(); ++k)
        if (!(fast[k].rep() == slow[k])) return false;
    return true;
}

}  // namespace

TEST_CASE("numerical semigroups") {
    const auto s = numerical({3, 4, 5});
    CHECK(s.gamma() == Point{3});
    CHECK((s.small() == std::vector<Point>{Point{0}, Point{3}}));
    CHECK((numerical({2, 3}).gamma() == Point{2}));
    CHECK(numerical({1}).gamma() == Point{0});
    CHECK((numerical({3, 4}).gamma() == Point{6}));
    CHECK((numerical({5, 7}).gamma() == Point{24}));
    CHECK_THROWS_AS((numerical({2, 4})), DomainError);
    CHECK_THROWS_AS((numerical({0, 1})), DomainError);
    CHECK_THROWS_AS((numerical({})), DomainError);
}

TEST_CASE("products") {
    const auto c = numerical({2, 3});
    const auto p = product(c, c);
    CHECK((p.gamma() == Point{2, 2}));
    CHECK(p.small().size() == 4);
    const auto q = product(p, p);
    CHECK(q.dim() == 4);
    CHECK_THROWS_AS(product(q, c), DimensionMismatch);
}

TEST_CASE("enumeration of semigroups matches subset brute force") {
    const auto s1 = enumerate_good(1, Point{3});
    REQUIRE(s1.size() == 3);
    CHECK(s1[0] == numerical({1}));
    CHECK((s1[1] == numerical({2, 3})));
    CHECK((s1[2] == numerical({3, 4, 5})));
    for (const auto& gm : {Point{6}, Point{2, 2}, Point{3, 2}, Point{3, 3}})
        CHECK(same(enumerate_good(gm.size(), gm), oracle::good_semigroups(gm)));
}

TEST_CASE("pinned universe sizes") {
    // Produced by the first oracle-checked run; they guard against regressions.
    CHECK((enumerate_good(1, Point{5}).size() == 7));
    CHECK((enumerate_good(2, Point{2, 2}).size() == 9));
    CHECK((enumerate_good(2, Point{3, 3}).size() == 23));
    std::size_t ideals = 0;
    for (const auto& s : enumerate_good(2, Point{2, 2})) ideals += enumerate_normalized_ideals(s).size();
    CHECK(ideals == 39);
}

TEST_CASE("enumeration of ideals matches subset brute force") {
    for (const auto& s : enumerate_good(2, Point{3, 3})) {
        const auto fast = enumerate_normalized_ideals(s);
        const auto slow = oracle::normalized_ideals(s);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t k = 0; k < fast.size(); ++k) CHECK(fast[k].rep() == slow[k]);
        CHECK(std::find(fast.begin(), fast.end(), Ideal::whole(s)) != fast.end());
        for (const auto& e : fast) CHECK(validate_good(2, e.mu(), e.gamma(), e.small(), &s).passed);
    }
    const auto s = numerical({3, 4, 5});
    const auto all = enumerate_ideals(s, Box(Point{-1}, Point{1}));
    CHECK((std::find(all.begin(), all.end(), translate(Ideal::whole(s), Point{-1})) != all.end()));
    const auto boxed = enumerate_ideals(s, Box(Point{-1}, Point{1}), Box(Point{0}, Point{3}));
    for (const auto& e : boxed) CHECK((Box(Point{0}, Point{3}).contains(e.gamma())));
}

TEST_CASE("budget is enforced") {
    Budget tiny;
    tiny.max_candidates = 5;
    CHECK_THROWS_AS((enumerate_good(2, Point{3, 3}, tiny)), BudgetExceeded);
    setenv("GOODSEMI_BUDGET", "17", 1);
    CHECK(Budget::from_env().max_candidates == 17);
    setenv("GOODSEMI_BUDGET", "lots", 1);
    CHECK_THROWS_AS(Budget::from_env(), DomainError);
    unsetenv("GOODSEMI_BUDGET");
}

TEST_CASE("hunt accounting and determinism") {
    HuntParams params;
    params.gamma_max = Point{2, 2};
    params.mu_box = Box(Point{-1, -1}, Point{1, 1});
    const auto a = hunt_symmetry(params);
    std::uint64_t pairs = 0;
    for (const auto& s : enumerate_good(2, Point{2, 2})) pairs += enumerate_ideals(s, params.mu_box).size();
    CHECK(a.tested == pairs);
    CHECK(a.semigroups == 9);
    params.jobs = 4;
    const auto b = hunt_symmetry(params);
    CHECK(io::print(io::report_json(a)) == io::print(io::report_json(b)));
    for (const auto& f : a.failures) CHECK_FALSE(symmetry_report(f.semigroup, f.ideal).all_true());
}

TEST_CASE("hunt over canonical translates and S itself finds nothing") {
    for (const auto& s : enumerate_good(2, Point{2, 2})) {
        const auto k0 = normalized_canonical(s);
        CHECK(symmetry_report(s, Ideal::whole(s)).all_true());
        Box(Point{-2, -2}, Point{2, 2}).for_each([&](const Point& a) {
            CHECK(symmetry_report(s, translate(k0, a)).all_true());
        });
    }
}
