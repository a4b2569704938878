#include "goodsemi/poincare.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "goodsemi/metric.hpp"

namespace goodsemi {

std::int64_t Polynomial::coeff(const Point& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Point& exponent, std::int64_t c) {
    if (exponent.size() != dim_) throw DimensionMismatch("exponent dimension differs from polynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("polynomial dimensions differ");
    Polynomial r(dim_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

Polynomial Polynomial::shifted(const Point& by) const {
    Polynomial r(dim_);
    for (const auto& [e, c] : terms_) r.add_term(e + by, c);
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool constant = std::all_of(e.begin(), e.end(), [](Coord x) { return x == 0; });
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        const auto mag = std::llabs(c);
        if (constant) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        bool first_var = true;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << '*';
            first_var = false;
            os << 't';
            if (dim_ > 1) os << (i + 1);
            if (e[i] != 1) os << '^' << e[i];
        }
    }
    return os.str();
}

std::int64_t local_distance(const Ideal& e, const Point& alpha, ChainPolicy policy) {
    return filtration_distance(e, alpha, alpha + Point::filled(e.dim(), 1), policy);
}

Polynomial poincare_polynomial(const Ideal& e) {
    const std::size_t s = e.dim();
    const Box support(e.mu(), e.gamma());
    const Box ring = support.grown(2);
    // dist_E cached on the ring shifted by all e_J, i.e. [μ-3, γ+2].
    const Box table_box(ring.lo() - Point::filled(s, 1), ring.hi());
    std::vector<std::uint64_t> stride(s, 1);
    for (std::size_t k = s; k-- > 1;)
        stride[k - 1] = stride[k] * static_cast<std::uint64_t>(table_box.hi()[k] - table_box.lo()[k] + 1);
    auto index = [&](const Point& p) {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < s; ++i) idx += static_cast<std::uint64_t>(p[i] - table_box.lo()[i]) * stride[i];
        return static_cast<std::size_t>(idx);
    };
    std::vector<std::int64_t> dist(static_cast<std::size_t>(table_box.volume()));
    table_box.for_each([&](const Point& p) { dist[index(p)] = local_distance(e, p); });

    const std::size_t subsets = std::size_t{1} << s;
    Polynomial poly(s);
    ring.for_each([&](const Point& a) {
        std::int64_t c = 0;
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            Point shifted = a;
            int complement = 0;
            for (std::size_t i = 0; i < s; ++i) {
                if (mask & (std::size_t{1} << i))
                    --shifted[i];
                else
                    ++complement;
            }
            const std::int64_t d = dist[index(shifted)];
            c += (complement % 2 == 0) ? d : -d;
        }
        if (c == 0) return;
        if (!support.contains(a))
            throw InternalError("Poincare coefficient " + std::to_string(c) + " at " + a.str() + " outside support");
        poly.add_term(a, c);
    });
    return poly;
}

Polynomial reflected(const Polynomial& p, const Point& gamma) {
    Polynomial r(p.dim());
    const std::int64_t sign = (p.dim() % 2 == 1) ? 1 : -1;  // (-1)^{s+1}
    for (const auto& [e, c] : p.terms()) r.add_term(gamma - e, sign * c);
    return r;
}

SymmetryVerdict check_symmetry_theorem(const GoodSemigroup& s, const Ideal& e) {
    const Ideal ke = dual(s, e);
    SymmetryVerdict v{false, symmetry_report(s, e, ke), poincare_polynomial(e), poincare_polynomial(ke)};
    v.identity_holds = v.p_dual == reflected(v.p_e, s.gamma());
    if (v.report.all_true() && !v.identity_holds)
        throw InternalError("symmetry conditions hold but the Poincare identity fails");
    return v;
}

}  // namespace goodsemi
