#include "goodsemi/duality.hpp"

#include "goodsemi/idealops.hpp"
#include "goodsemi/metric.hpp"

namespace goodsemi {

namespace {

void require_parent(const GoodSemigroup& s, const Ideal& e) {
    if (!(e.parent() == s)) throw DomainError("ideal does not belong to the given semigroup");
}

bool closed_nonempty(const Ideal& e, const Point& p, std::size_t i) { return delta_nonempty(e, p, i, true).nonempty; }
bool open_nonempty(const Ideal& e, const Point& p, std::size_t i) { return delta_nonempty(e, p, i, false).nonempty; }

}  // namespace

Ideal dual(const GoodSemigroup& s, const Ideal& e) {
    require_parent(s, e);
    const Point one = Point::filled(s.dim(), 1);
    const Point tau = s.tau();
    const Box box(s.gamma() - e.gamma() - one, s.gamma() - e.mu() + one);
    auto rep = Representation::from_box_scan(box, [&](const Point& a) { return delta_union_empty(e, tau - a, false); });
    auto report = validate_good(rep.dim(), rep.mu(), rep.conductor(), rep.small(), &s);
    if (!report.passed) throw InternalError("dual ideal failed validation: " + report.summary());
    return Ideal::with_goodness(s, std::move(rep), Goodness::verified_good);
}

Ideal normalized_canonical(const GoodSemigroup& s) { return dual(s, Ideal::whole(s)); }

bool is_canonical(const GoodSemigroup& s, const Ideal& e) {
    require_parent(s, e);
    return e == translate(normalized_canonical(s), e.gamma() - s.gamma());
}

bool check_reflexivity(const GoodSemigroup& s, const Ideal& e) {
    const Ideal back = dual(s, dual(s, e));
    if (!is_subset(e, back)) return false;
    return equals(e, back);
}

SymmetryReport symmetry_report(const GoodSemigroup& s, const Ideal& e) { return symmetry_report(s, e, dual(s, e)); }

SymmetryReport symmetry_report(const GoodSemigroup& s, const Ideal& e, const Ideal& ke) {
    require_parent(s, e);
    require_parent(s, ke);
    SymmetryReport r;
    const std::size_t n = s.dim();
    const Point tau = s.tau();
    const Point& mu = e.mu();
    const Point& ge = e.gamma();
    const Point top = s.gamma() - mu;

    r.dist_lattice_over_e = ideal_distance(Ideal::lattice_orthant(s, mu), e);
    r.dist_dual_over_lattice = ideal_distance(ke, Ideal::lattice_orthant(s, top));
    r.cond_i = r.dist_lattice_over_e == r.dist_dual_over_lattice;
    if (!r.cond_i) r.violations.push_back({"i", mu, std::nullopt});

    r.dist_e_over_conductor = ideal_distance(e, conductor_ideal(e));
    r.dist_lattice_window = lattice_distance(mu, ge);
    r.dist_dual_over_filtration = ideal_distance(ke, filtration(ke, top));
    r.cond_ii = r.dist_e_over_conductor == r.dist_lattice_window - r.dist_dual_over_filtration;
    if (!r.cond_ii) r.violations.push_back({"ii", mu, std::nullopt});

    r.cond_iii = true;
    r.cond_iv = true;
    Box(mu, ge).for_each([&](const Point& a) {
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] + 1 <= ge[i]) {
                const bool lhs = closed_nonempty(e, a, i);
                const bool rhs = !open_nonempty(ke, tau - a, i);
                if (lhs != rhs) {
                    r.cond_iii = false;
                    r.violations.push_back({"iii", a, i});
                }
            }
            if (a[i] - 1 >= mu[i]) {
                const bool lhs = closed_nonempty(ke, tau - a, i);
                const bool rhs = !open_nonempty(e, a, i);
                if (lhs != rhs) {
                    r.cond_iv = false;
                    r.violations.push_back({"iv", a, i});
                }
            }
        }
    });
    return r;
}

WindowConditions window_conditions(const GoodSemigroup& s, const Ideal& e, const Ideal& ke, const Point& alpha,
                                   const Point& beta) {
    if (!leq(alpha, beta)) throw DomainError(alpha.str() + " is not <= " + beta.str());
    const std::size_t n = s.dim();
    const Point tau = s.tau();
    const Point& g = s.gamma();
    WindowConditions w;
    w.distance = filtration_distance(e, alpha, beta) ==
                 lattice_distance(alpha, beta) - filtration_distance(ke, g - beta, g - alpha);
    w.upward = true;
    w.downward = true;
    Box(alpha, beta).for_each([&](const Point& d) {
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i] + 1 <= beta[i] && closed_nonempty(e, d, i) != !open_nonempty(ke, tau - d, i)) w.upward = false;
            if (d[i] - 1 >= alpha[i] && closed_nonempty(ke, tau - d, i) != !open_nonempty(e, d, i)) w.downward = false;
        }
    });
    return w;
}

bool pointwise_equivalence(const GoodSemigroup& s, const Ideal& e, const Point& alpha, const Point& beta) {
    const auto w = window_conditions(s, e, dual(s, e), alpha, beta);
    if (w.distance != w.upward || w.upward != w.downward)
        throw InternalError("window conditions disagree on [" + alpha.str() + ", " + beta.str() + "]");
    return w.distance;
}

}  // namespace goodsemi
