#include <doctest.h>

#include "goodsemi/duality.hpp"
#include "goodsemi/idealops.hpp"
#include "goodsemi/metric.hpp"
#include "oracle.hpp"
#include "universe.hpp"

using namespace goodsemi;

namespace {

GoodSemigroup node() { return GoodSemigroup::from_small(Point{1, 1}, {Point{0, 0}, Point{1, 1}}); }

}  // namespace

TEST_CASE("canonical ideal examples") {
    const auto cusp = numerical({2, 3});
    CHECK(normalized_canonical(cusp) == Ideal::whole(cusp));

    const auto s = numerical({3, 4, 5});
    const auto k0 = normalized_canonical(s);
    CHECK(k0.gamma() == Point{3});
    CHECK(k0.mu() == Point{0});
    CHECK((k0.small() == std::vector<Point>{Point{0}, Point{1}, Point{3}}));
    CHECK(is_canonical(s, k0));
    CHECK((is_canonical(s, translate(k0, Point{5}))));
    CHECK_FALSE(is_canonical(s, Ideal::whole(s)));

    const auto n = node();
    CHECK(normalized_canonical(n) == Ideal::whole(n));
    CHECK((is_canonical(n, translate(Ideal::whole(n), Point{2, 5}))));
}

TEST_CASE("dual examples") {
    const auto s = numerical({3, 4, 5});
    const auto m = filtration(Ideal::whole(s), Point{3});
    const auto dm = dual(s, m);
    CHECK((dm == Ideal::lattice_orthant(s, Point{0})));
    CHECK(dual(s, dm) == m);
    CHECK(check_reflexivity(s, m));
    CHECK(dual(s, Ideal::whole(s)) == normalized_canonical(s));
    const auto n = node();
    CHECK(dual(n, Ideal::whole(n)) == Ideal::whole(n));
}

TEST_CASE("canonical ideal matches the definition scan") {
    for (const auto& s : enumerate_good(1, Point{6})) CHECK(normalized_canonical(s) == oracle::normalized_canonical(s));
    for (const auto& s : enumerate_good(2, Point{3, 3})) {
        const auto k0 = normalized_canonical(s);
        CHECK(k0 == oracle::normalized_canonical(s));
        CHECK(k0.gamma() == s.gamma());
        CHECK(k0.mu() == Point(2));
    }
}

TEST_CASE("symmetric numerical semigroups") {
    for (const auto& s : enumerate_good(1, Point{8})) {
        const Coord tau = s.tau()[0];
        bool symmetric = true;
        for (Coord x = 0; x <= tau; ++x) symmetric &= s.contains(Point{x}) != s.contains(Point{tau - x});
        CHECK(equals(Ideal::whole(s), normalized_canonical(s)) == symmetric);
    }
}

TEST_CASE("duality laws on the enumerated universe") {
    const auto sgs = testing::semigroups(3, 2);
    for (const auto& s : sgs) {
        const auto ideals = enumerate_ideals(s, Box(Point::filled(s.dim(), -1), Point::filled(s.dim(), 1)));
        for (const auto& e : ideals) {
            const auto ke = dual(s, e);
            CHECK(ke.gamma() == s.gamma() - e.mu());
            CHECK(ke.mu() == s.gamma() - e.gamma());
            CHECK(ke.goodness() == Goodness::verified_good);
            CHECK(oracle::is_good(ke.rep()));
            CHECK(ke == oracle::difference(normalized_canonical(s), e));
            CHECK(check_reflexivity(s, e));
            CHECK(is_canonical(s, e) == is_canonical(s, translate(e, Point::filled(s.dim(), 3))));
        }
        for (std::size_t a = 0; a < ideals.size(); a += 2)
            for (std::size_t b = 0; b < ideals.size(); b += 3)
                if (is_subset(ideals[a], ideals[b])) CHECK(is_subset(dual(s, ideals[b]), dual(s, ideals[a])));
    }
}

TEST_CASE("symmetry report examples") {
    const auto n = node();
    const auto r = symmetry_report(n, Ideal::whole(n));
    CHECK(r.all_true());
    CHECK(r.violations.empty());

    const auto s = numerical({3, 4, 5});
    const auto m = filtration(Ideal::whole(s), Point{3});
    CHECK(symmetry_report(s, m).all_true());
    CHECK(pointwise_equivalence(s, m, m.mu(), m.gamma()));
    CHECK((pointwise_equivalence(s, m, Point{1}, Point{1})));
    CHECK_THROWS_AS((pointwise_equivalence(s, m, Point{2}, Point{1})), DomainError);
}

TEST_CASE("pointwise conditions agree with brute-force delta scans") {
    for (const auto& [s, e] : testing::pairs(testing::semigroups(3, 2), -1, 1)) {
        const auto ke = dual(s, e);
        const auto r = symmetry_report(s, e, ke);
        CHECK(r.consistent());
        bool iii = true, iv = true;
        const Point tau = s.tau();
        Box(e.mu(), e.gamma()).for_each([&](const Point& a) {
            for (std::size_t i = 0; i < e.dim(); ++i) {
                if (a[i] + 1 <= e.gamma()[i])
                    iii &= oracle::delta_nonempty(e, a, i, true) != oracle::delta_nonempty(ke, tau - a, i, false);
                if (a[i] - 1 >= e.mu()[i])
                    iv &= oracle::delta_nonempty(ke, tau - a, i, true) != oracle::delta_nonempty(e, a, i, false);
                // one-directional implication, unconditional
                if (oracle::delta_nonempty(ke, tau - a, i, true)) CHECK_FALSE(oracle::delta_nonempty(e, a, i, false));
            }
        });
        CHECK(r.cond_iii == iii);
        CHECK(r.cond_iv == iv);
    }
}

TEST_CASE("window inequality and window conditions") {
    for (const auto& [s, e] : testing::pairs(testing::semigroups(3, 2), -1, 1)) {
        const auto ke = dual(s, e);
        const Point one = Point::filled(e.dim(), 1);
        const Box window(e.mu() - one, e.gamma() + one);
        for (int k = 0; k < 8; ++k) {
            Point a = testing::random_point(window), b = testing::random_point(window);
            a = meet(a, b);
            const auto lhs = filtration_distance(e, a, b);
            const auto rhs = lattice_distance(a, b) - filtration_distance(ke, s.gamma() - b, s.gamma() - a);
            CHECK(lhs <= rhs);
            const auto w = window_conditions(s, e, ke, a, b);
            CHECK(w.distance == (lhs == rhs));
        }
    }
}
