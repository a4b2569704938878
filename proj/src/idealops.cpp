#include "goodsemi/idealops.hpp"

namespace goodsemi {

namespace {

void require_same_parent(const Ideal& e, const Ideal& f) {
    if (!(e.parent() == f.parent())) throw DomainError("ideals belong to different semigroups");
}

}  // namespace

Ideal translate(const Ideal& e, const Point& alpha) {
    return Ideal::with_goodness(e.parent(), e.rep().translated(alpha), e.goodness());
}

Ideal difference(const Ideal& e, const Ideal& f) {
    require_same_parent(e, f);
    const Box box(e.mu() - f.mu(), e.gamma() - f.mu());
    auto member = [&](const Point& alpha) {
        // f beyond max(γ^F, γ^E - α) clamps to the same point of E as its meet
        // with that bound, and that meet is still in F.
        const Box fbox(f.mu(), join(f.gamma(), join(e.gamma() - alpha, f.mu())));
        bool ok = true;
        fbox.for_each([&](const Point& x) {
            if (ok && f.contains(x) && !e.contains(alpha + x)) ok = false;
        });
        return ok;
    };
    Representation rep = Representation::from_box_scan(box, member);
    const auto report = validate_good(rep.dim(), rep.mu(), rep.conductor(), rep.small(), &e.parent());
    return Ideal::with_goodness(e.parent(), std::move(rep), report.passed ? Goodness::verified_good : Goodness::e1_only);
}

Ideal filtration(const Ideal& e, const Point& alpha) {
    require_same_dim(alpha, e.mu());
    const Box box(join(alpha, e.mu()), join(alpha, e.gamma()));
    auto rep = Representation::from_box_scan(box, [&](const Point& p) { return e.contains(p); });
    return Ideal::with_goodness(e.parent(), std::move(rep), e.goodness());
}

Ideal conductor_ideal(const Ideal& e) { return filtration(e, e.gamma()); }

bool is_subset(const Ideal& e, const Ideal& f) {
    require_same_dim(e.mu(), f.mu());
    bool ok = true;
    Box(e.mu(), join(e.gamma(), join(f.gamma(), e.mu()))).for_each([&](const Point& p) {
        if (ok && e.contains(p) && !f.contains(p)) ok = false;
    });
    return ok;
}

}  // namespace goodsemi
