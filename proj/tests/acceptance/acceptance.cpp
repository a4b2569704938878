// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "goodsemi/catalog.hpp"
#include "goodsemi/duality.hpp"
#include "goodsemi/idealops.hpp"
#include "goodsemi/io.hpp"
#include "goodsemi/metric.hpp"
#include "goodsemi/poincare.hpp"
#include "oracle.hpp"
#include "universe.hpp"

using namespace goodsemi;
using Clock = std::chrono::steady_clock;

namespace {

struct Tally {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first_failure = what();
    }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string describe(const Ideal& e) {
    return "E with mu " + e.mu().str() + ", gamma " + e.gamma().str() + " over S with gamma " + e.parent().gamma().str();
}

// The acceptance universe: s in {1, 2}, conductor of S up to (2,2), minimum of E in [-2,2]^s.
// Normalized ideals have conductor at most that of S, so the bound on the
// conductor of E holds for every translate in the box.
const std::vector<testing::Pair>& universe() {
    static const auto pairs = testing::pairs(testing::semigroups(2, 2), -2, 2);
    return pairs;
}

Polynomial poly(std::size_t s, std::initializer_list<std::pair<Point, std::int64_t>> terms) {
    Polynomial p(s);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

int report(int n, const std::string& title, const Tally& t, const std::string& detail) {
    const bool ok = t.failures == 0 && t.checks > 0;
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << title << " (" << t.checks
              << " checks" << (detail.empty() ? "" : ", " + detail) << ")";
    if (!ok) std::cout << "  first failure: " << (t.checks == 0 ? "nothing checked" : t.first_failure);
    std::cout << "\n" << std::flush;
    return ok ? 0 : 1;
}

int flagship_values() {
    Tally t;
    double slowest = 0;
    auto check = [&](const std::string& name, const Ideal& e, const Polynomial& want) {
        const auto start = Clock::now();
        const auto got = poincare_polynomial(e);
        const double took = seconds_since(start);
        slowest = std::max(slowest, took);
        t.expect(got == want, [&] { return name + " gave " + got.str() + ", expected " + want.str(); });
        t.expect(oracle::poincare(e) == want, [&] { return name + ": series product disagrees"; });
        t.expect(took < 1.0, [&] { return name + " took " + std::to_string(took) + " s"; });
    };
    const auto cusp = numerical({2, 3});
    check("P of <2,3>", Ideal::whole(cusp), poly(1, {{Point{0}, -1}, {Point{1}, 1}, {Point{2}, -1}}));
    const auto node = GoodSemigroup::from_small(Point{1, 1}, {Point{0, 0}, Point{1, 1}});
    check("P of the node", Ideal::whole(node), poly(2, {{Point{0, 0}, -1}, {Point{1, 1}, 1}}));
    const auto s345 = numerical({3, 4, 5});
    const auto m = filtration(Ideal::whole(s345), Point{3});
    check("P of M", m, poly(1, {{Point{3}, -1}}));
    check("P of K - M", dual(s345, m), poly(1, {{Point{0}, -1}}));
    check("P of <2,3> x <2,3>", Ideal::whole(product(cusp, cusp)), Polynomial(2));
    std::ostringstream d;
    d << "slowest " << static_cast<int>(slowest * 1000) << " ms";
    return report(1, "flagship Poincare polynomials are exact", t, d.str());
}

int symmetry_identity() {
    Tally t;
    const auto start = Clock::now();
    std::uint64_t eligible = 0;
    for (const auto& [s, e] : universe()) {
        const auto v = check_symmetry_theorem(s, e);
        if (!v.report.all_true()) continue;
        ++eligible;
        const Point one = Point::filled(s.dim(), 1);
        const std::int64_t sign = s.dim() % 2 == 1 ? 1 : -1;
        const Box support(meet(e.mu(), s.gamma() - e.gamma()) - one, join(e.gamma(), s.gamma() - e.mu()) + one);
        bool ok = true;
        support.for_each([&](const Point& a) { ok &= v.p_dual.coeff(a) == sign * v.p_e.coeff(s.gamma() - a); });
        t.expect(ok && v.identity_holds, [&] { return "coefficient identity fails for " + describe(e); });
    }
    const double took = seconds_since(start);
    t.expect(took < 300, [&] { return "suite took " + std::to_string(took) + " s"; });
    std::ostringstream d;
    d << universe().size() << " pairs, " << eligible << " with all conditions true, " << took << " s";
    return report(2, "coefficient symmetry between E and K - E", t, d.str());
}

int duality_involution() {
    Tally t;
    for (const auto& [s, e] : universe()) {
        const auto ke = dual(s, e);
        const auto kke = dual(s, ke);
        t.expect(is_subset(e, kke) && equals(e, kke), [&] { return "K-(K-E) != E for " + describe(e); });
        for (const auto& [inner, d] : {std::pair{e, ke}, std::pair{ke, kke}}) {
            t.expect(d.gamma() == s.gamma() - inner.mu(), [&] { return "conductor formula fails for " + describe(inner); });
            t.expect(d.mu() == s.gamma() - inner.gamma(), [&] { return "minimum formula fails for " + describe(inner); });
        }
    }
    return report(3, "K - (K - E) = E and the conductor/minimum formulas for duals", t,
                  std::to_string(universe().size()) + " ideals");
}

int distance_laws() {
    Tally unit, additivity, zero;
    for (const auto& [s, e] : universe()) {
        const Point one = Point::filled(s.dim(), 1);
        Box(e.mu() - one, e.gamma() + one).for_each([&](const Point& a) {
            for (std::size_t i = 0; i < s.dim(); ++i) {
                const auto d = filtration_distance(e, a, a + Point::unit(s.dim(), i));
                unit.expect(d == 0 || d == 1, [&] { return "unit step distance " + std::to_string(d); });
                unit.expect((d == 1) == delta_nonempty(e, a, i, true).nonempty,
                            [&] { return "closed delta criterion fails at " + a.str() + " for " + describe(e); });
            }
        });
    }
    // comparable pairs and nested triples, per semigroup
    std::size_t k = 0;
    std::uint64_t comparable = 0;
    while (k < universe().size()) {
        std::size_t end = k;
        while (end < universe().size() && universe()[end].s == universe()[k].s) ++end;
        std::vector<Ideal> ideals;
        for (std::size_t j = k; j < end; ++j) ideals.push_back(universe()[j].e);
        std::vector<std::vector<bool>> sub(ideals.size(), std::vector<bool>(ideals.size()));
        for (std::size_t a = 0; a < ideals.size(); ++a)
            for (std::size_t b = 0; b < ideals.size(); ++b) {
                sub[a][b] = is_subset(ideals[a], ideals[b]);
                if (!sub[a][b]) continue;
                ++comparable;
                const auto d = ideal_distance(ideals[b], ideals[a]);
                zero.expect((d == 0) == (ideals[a] == ideals[b]), [&] { return "distance 0 mismatch for " + describe(ideals[a]); });
            }
        for (int trial = 0; trial < 400; ++trial) {
            const auto n = static_cast<Coord>(ideals.size()) - 1;
            const auto a = static_cast<std::size_t>(testing::uniform(0, n));
            const auto b = static_cast<std::size_t>(testing::uniform(0, n));
            const auto c = static_cast<std::size_t>(testing::uniform(0, n));
            if (!sub[a][b] || !sub[b][c]) continue;
            additivity.expect(ideal_distance(ideals[c], ideals[a]) ==
                                  ideal_distance(ideals[c], ideals[b]) + ideal_distance(ideals[b], ideals[a]),
                              [&] { return "additivity fails for " + describe(ideals[a]); });
        }
        k = end;
    }
    Tally all;
    all.checks = unit.checks + additivity.checks + zero.checks;
    all.failures = unit.failures + additivity.failures + zero.failures;
    all.first_failure = unit.failures ? unit.first_failure : additivity.failures ? additivity.first_failure : zero.first_failure;
    if (additivity.checks < 100) {
        all.failures++;
        all.first_failure = "only " + std::to_string(additivity.checks) + " nested triples";
    }
    std::ostringstream d;
    d << unit.checks << " unit-step checks, " << additivity.checks << " nested triples, " << comparable
      << " comparable pairs";
    return report(4, "unit bound, closed delta criterion, additivity, zero distance iff equal", all, d.str());
}

int chain_uniqueness() {
    Tally t;
    for (const auto& [s, e] : universe()) {
        const Box window(e.mu(), e.gamma() + Point::filled(s.dim(), 1));
        for (int k = 0; k < 50; ++k) {
            const Point a = testing::random_member(e, window);
            const Point b = testing::random_member(e, Box(a, join(a, e.gamma()) + Point::filled(s.dim(), 1)));
            const auto chains = oracle::element_distance(e, a, b);
            t.expect(chains.all_lengths.size() == 1,
                     [&] { return "saturated chains of different lengths from " + a.str() + " to " + b.str(); });
        }
    }
    return report(5, "all saturated chains between two members have one length", t,
                  std::to_string(universe().size()) + " ideals, 50 pairs each");
}

int support_ring() {
    Tally t;
    for (const auto& [s, e] : universe()) {
        const std::size_t n = s.dim();
        const Box box(e.mu(), e.gamma());
        const Box ring = box.grown(2);
        ring.for_each([&](const Point& a) {
            if (box.contains(a)) return;
            std::int64_t c = 0;
            for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                Point shifted = a;
                std::size_t complement = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (mask >> i & 1)
                        --shifted[i];
                    else
                        ++complement;
                }
                const auto d = local_distance(e, shifted);
                c += complement % 2 == 0 ? d : -d;
            }
            t.expect(c == 0, [&] { return "coefficient " + std::to_string(c) + " at " + a.str() + " for " + describe(e); });
        });
        try {
            poincare_polynomial(e);
        } catch (const InternalError& err) {
            t.expect(false, [&] { return std::string(err.what()); });
        }
    }
    return report(6, "Poincare coefficients vanish on the width-2 ring", t,
                  std::to_string(universe().size()) + " ideals");
}

int condition_consistency() {
    Tally cons, lemma_dir, ineq;
    for (const auto& [s, e] : universe()) {
        const auto ke = dual(s, e);
        const auto r = symmetry_report(s, e, ke);
        cons.expect(r.consistent(), [&, r = r] {
            std::ostringstream os;
            os << "conditions (" << r.cond_i << r.cond_ii << r.cond_iii << r.cond_iv << ") for " << describe(e);
            return os.str();
        });
        const Point one = Point::filled(s.dim(), 1);
        const Point tau = s.tau();
        const Box window(e.mu() - one, e.gamma() + one);
        window.for_each([&](const Point& a) {
            for (std::size_t i = 0; i < s.dim(); ++i)
                if (delta_nonempty(ke, tau - a, i, true).nonempty)
                    lemma_dir.expect(!delta_nonempty(e, a, i, false).nonempty,
                                     [&] { return "one-directional implication fails at " + a.str(); });
                else
                    ++lemma_dir.checks;
            window.for_each([&](const Point& b) {
                if (!leq(a, b)) return;
                const auto lhs = filtration_distance(e, a, b);
                const auto rhs = lattice_distance(a, b) - filtration_distance(ke, s.gamma() - b, s.gamma() - a);
                ineq.expect(lhs <= rhs, [&] { return "window inequality fails on [" + a.str() + ", " + b.str() + "]"; });
            });
        });
    }
    Tally all;
    all.checks = cons.checks + lemma_dir.checks + ineq.checks;
    all.failures = cons.failures + lemma_dir.failures + ineq.failures;
    all.first_failure = cons.failures ? cons.first_failure : lemma_dir.failures ? lemma_dir.first_failure : ineq.first_failure;
    std::ostringstream d;
    d << cons.checks << " reports, " << lemma_dir.checks << " points, " << ineq.checks << " windows";
    return report(7, "the four symmetry conditions agree; implication and window inequality hold", all, d.str());
}

int oracle_equivalence() {
    Tally diff, dist, poin;
    std::size_t k = 0;
    while (k < universe().size()) {
        std::size_t end = k;
        while (end < universe().size() && universe()[end].s == universe()[k].s) ++end;
        for (int trial = 0; trial < 40; ++trial) {
            const auto& e = universe()[static_cast<std::size_t>(testing::uniform(static_cast<Coord>(k), static_cast<Coord>(end) - 1))].e;
            const auto& f = universe()[static_cast<std::size_t>(testing::uniform(static_cast<Coord>(k), static_cast<Coord>(end) - 1))].e;
            diff.expect(difference(e, f) == oracle::difference(e, f), [&] { return "difference disagrees for " + describe(e); });
        }
        k = end;
    }
    for (const auto& [s, e] : universe()) {
        const Box window(e.mu(), e.gamma() + Point::filled(s.dim(), 1));
        const Point a = testing::random_member(e, window);
        const Point b = testing::random_member(e, Box(a, join(a, e.gamma()) + Point::filled(s.dim(), 1)));
        dist.expect(element_distance(e, a, b) == oracle::element_distance(e, a, b).length,
                    [&] { return "element distance disagrees from " + a.str() + " to " + b.str(); });
        poin.expect(poincare_polynomial(e) == oracle::poincare(e), [&] { return "polynomial disagrees for " + describe(e); });
    }
    Tally all;
    all.checks = diff.checks + dist.checks + poin.checks;
    all.failures = diff.failures + dist.failures + poin.failures;
    all.first_failure = diff.failures ? diff.first_failure : dist.failures ? dist.first_failure : poin.first_failure;
    for (const auto* part : {&diff, &dist, &poin})
        if (part->checks < 200) {
            all.failures++;
            all.first_failure = "fewer than 200 instances in one family";
        }
    std::ostringstream d;
    d << diff.checks << " differences, " << dist.checks << " element distances, " << poin.checks << " polynomials";
    return report(8, "fast paths equal the brute-force oracles", all, d.str());
}

int hunt_determinism() {
    Tally t;
    HuntParams params;
    params.s = 2;
    params.gamma_max = Point{2, 2};
    params.mu_box = Box(Point{-2, -2}, Point{2, 2});
    params.jobs = 4;
    const auto a = hunt_symmetry(params);
    const auto b = hunt_symmetry(params);
    const auto ta = io::print(io::report_json(a)), tb = io::print(io::report_json(b));
    t.expect(ta == tb, [] { return "two runs produced different reports"; });
    t.expect(io::print(io::parse(ta)) == ta, [] { return "report does not round-trip"; });
    for (const auto& f : a.failures)
        t.expect(!symmetry_report(f.semigroup, f.ideal).all_true(), [&] { return "failure did not re-fail: " + describe(f.ideal); });
    std::ostringstream d;
    d << a.tested << " pairs, " << a.failures.size() << " failures, report " << ta.size() << " bytes";
    return report(9, "search reports are byte-identical and failures re-fail", t, d.str());
}

}  // namespace

int main() {
    int failed = 0, n = 0;
    for (auto* criterion : {flagship_values, symmetry_identity, duality_involution, distance_laws, chain_uniqueness,
                            support_ring, condition_consistency, oracle_equivalence, hunt_determinism}) {
        ++n;
        try {
            failed += criterion();
        } catch (const std::exception& e) {
            std::cout << "criterion " << n << ": FAIL  uncaught exception: " << e.what() << "\n";
            ++failed;
        }
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
    return failed ? 1 : 0;
}
