#include "goodsemi/semigroup.hpp"

#include <algorithm>
#include <sstream>

namespace goodsemi {

namespace {

constexpr std::uint64_t kMaxRepresentationVolume = std::uint64_t{1} << 26;

void sort_unique(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// Representation

Representation::Representation(Point mu, Point conductor, std::vector<Point> small)
    : mu_(std::move(mu)), conductor_(std::move(conductor)), small_(std::move(small)) {
    const Box b(mu_, conductor_);
    const auto vol = b.volume();
    if (vol > kMaxRepresentationVolume) throw BudgetExceeded("representation box too large: " + std::to_string(vol));
    const std::size_t s = dim();
    strides_.assign(s, 1);
    for (std::size_t k = s; k-- > 1;)
        strides_[k - 1] = strides_[k] * static_cast<std::uint64_t>(conductor_[k] - mu_[k] + 1);
    bits_.assign(static_cast<std::size_t>(vol), false);
    for (const auto& p : small_) bits_[index(p)] = true;
}

std::size_t Representation::index(const Point& p) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < dim(); ++i) idx += static_cast<std::uint64_t>(p[i] - mu_[i]) * strides_[i];
    return static_cast<std::size_t>(idx);
}

bool Representation::small_box_member(const Point& p) const { return bits_[index(p)]; }

Representation Representation::raw(Point mu, Point conductor, std::vector<Point> small) {
    require_same_dim(mu, conductor);
    if (!leq(mu, conductor)) throw DomainError("malformed box: mu " + mu.str() + " not <= conductor " + conductor.str());
    sort_unique(small);
    const Box b(mu, conductor);
    bool has_mu = false, has_cond = false;
    for (const auto& p : small) {
        require_same_dim(p, mu);
        if (!b.contains(p)) throw DomainError("small element " + p.str() + " outside [mu, conductor]");
        has_mu = has_mu || p == mu;
        has_cond = has_cond || p == conductor;
    }
    if (!has_mu) throw DomainError("mu " + mu.str() + " missing from small elements");
    if (!has_cond) throw DomainError("conductor " + conductor.str() + " missing from small elements");
    return Representation(std::move(mu), std::move(conductor), std::move(small));
}

Representation Representation::canonical(Point mu, Point conductor, std::vector<Point> small) {
    return raw(std::move(mu), std::move(conductor), std::move(small)).shrink_conductor();
}

Representation Representation::shrink_conductor() const {
    Representation cur = *this;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < cur.dim(); ++i) {
            const Coord c = cur.conductor_[i];
            if (c <= cur.mu_[i]) continue;
            // Lowering the conductor on axis i only changes the clamp of points
            // on the face α_i = c; those must agree with their neighbour below.
            Point lo = cur.mu_, hi = cur.conductor_;
            lo[i] = c;
            bool same = true;
            Box(lo, hi).for_each([&](const Point& p) {
                if (!same) return;
                Point q = p;
                --q[i];
                if (cur.small_box_member(p) != cur.small_box_member(q)) same = false;
            });
            if (!same) continue;
            Point nc = cur.conductor_;
            --nc[i];
            std::vector<Point> ns;
            for (const auto& p : cur.small_)
                if (p[i] < c) ns.push_back(p);
            cur = Representation(cur.mu_, nc, std::move(ns));
            changed = true;
        }
    }
    return cur;
}

bool Representation::is_canonical() const { return shrink_conductor().conductor_ == conductor_; }

Representation Representation::from_box_scan(const Box& box, const std::function<bool(const Point&)>& member) {
    std::vector<Point> members;
    box.for_each([&](const Point& p) {
        if (member(p)) members.push_back(p);
    });
    if (members.empty() || !(members.back() == box.hi()))
        throw DomainError("box scan: upper corner " + box.hi().str() + " is not a member");
    Point mu = members.front();
    for (const auto& p : members) mu = meet(mu, p);
    if (!std::binary_search(members.begin(), members.end(), mu, LexLess{}))
        throw DomainError("box scan: member set has no minimum (not meet-closed)");
    return canonical(mu, box.hi(), std::move(members));
}

bool Representation::contains(const Point& alpha) const {
    require_same_dim(alpha, mu_);
    if (!leq(mu_, alpha)) return false;
    return small_box_member(meet(alpha, conductor_));
}

std::optional<Point> Representation::closed_delta_witness(const Point& delta, std::size_t axis) const {
    require_same_dim(delta, mu_);
    if (axis >= dim()) throw DomainError("axis out of range");
    if (delta[axis] > conductor_[axis]) return join(delta, conductor_);
    if (delta[axis] < mu_[axis]) return std::nullopt;
    for (const auto& q : small_) {
        if (q[axis] != delta[axis]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < dim() && ok; ++j)
            if (j != axis && q[j] < std::min(delta[j], conductor_[j])) ok = false;
        if (!ok) continue;
        Point w = q;
        for (std::size_t j = 0; j < dim(); ++j)
            if (j != axis) w[j] = std::max(q[j], delta[j]);
        return w;
    }
    return std::nullopt;
}

Representation Representation::translated(const Point& shift) const {
    std::vector<Point> ns;
    ns.reserve(small_.size());
    for (const auto& p : small_) ns.push_back(p + shift);
    return Representation(mu_ + shift, conductor_ + shift, std::move(ns));
}

bool operator==(const Representation& a, const Representation& b) {
    return a.mu_ == b.mu_ && a.conductor_ == b.conductor_ && a.small_ == b.small_;
}

// ---------------------------------------------------------------------------
// Validation

std::string to_string(Axiom a) {
    switch (a) {
        case Axiom::E0: return "E0";
        case Axiom::E1: return "E1";
        case Axiom::E2: return "E2";
        case Axiom::ideal_closure: return "ideal-closure";
        case Axiom::representation: return "representation";
    }
    return "?";
}

void ValidationReport::add(Axiom axiom, std::vector<Point> witnesses, std::string message) {
    passed = false;
    violations.push_back({axiom, std::move(witnesses), std::move(message)});
}

std::string ValidationReport::summary() const {
    if (passed) return "passed";
    std::ostringstream os;
    os << violations.size() << " violation(s)";
    for (const auto& v : violations) {
        os << "\n  [" << to_string(v.axiom) << "] " << v.message;
        if (!v.witnesses.empty()) {
            os << " :";
            for (const auto& w : v.witnesses) os << ' ' << w.str();
        }
    }
    return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : Error("validation failed: " + report.summary()), report_(std::move(report)) {}

ValidationReport validate_good(std::size_t s, const Point& mu, const Point& gamma, const std::vector<Point>& small,
                               const GoodSemigroup* parent) {
    ValidationReport report;
    if (mu.size() != s || gamma.size() != s) {
        report.add(Axiom::representation, {}, "mu/gamma dimension differs from s=" + std::to_string(s));
        return report;
    }
    if (!leq(mu, gamma)) {
        report.add(Axiom::representation, {mu, gamma}, "mu is not <= gamma");
        return report;
    }
    bool has_mu = false, has_gamma = false;
    for (const auto& p : small) {
        if (p.size() != s) {
            report.add(Axiom::representation, {p}, "small element has wrong dimension");
            continue;
        }
        if (!leq(mu, p) || !leq(p, gamma)) report.add(Axiom::representation, {p}, "small element outside [mu, gamma]");
        has_mu = has_mu || p == mu;
        has_gamma = has_gamma || p == gamma;
    }
    if (!has_mu) report.add(Axiom::representation, {mu}, "mu missing from small elements");
    if (!has_gamma) report.add(Axiom::representation, {gamma}, "gamma missing from small elements");
    if (!report.passed) return report;

    const Representation rep = Representation::raw(mu, gamma, small);
    const auto& pts = rep.small();
    const Point& c = rep.conductor();

    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const Point m = meet(pts[a], pts[b]);
            if (!rep.contains(m)) report.add(Axiom::E1, {pts[a], pts[b]}, "meet " + m.str() + " not in set");
        }

    // (E2) on small pairs. A witness ε may be replaced by q = meet(ε, γ^E) ∈
    // Small(E); the conditions on ε translate into conditions on q.
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const Point& x = pts[a];
            const Point& y = pts[b];
            const Point m = meet(x, y);
            for (std::size_t j = 0; j < s; ++j) {
                if (x[j] != y[j]) continue;
                bool found = false;
                for (const auto& q : pts) {
                    if (!(q[j] > x[j] || q[j] == c[j])) continue;
                    bool ok = true;
                    for (std::size_t i = 0; i < s && ok; ++i) {
                        if (i == j) continue;
                        ok = (x[i] != y[i]) ? q[i] == m[i] : q[i] >= m[i];
                    }
                    if (ok) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    report.add(Axiom::E2, {x, y}, "no witness epsilon for axis " + std::to_string(j + 1));
            }
        }

    if (parent) {
        if (parent->dim() != s) {
            report.add(Axiom::ideal_closure, {}, "parent dimension differs");
            return report;
        }
        // Sums with a semigroup element beyond Q clamp the same way as with its
        // meet with Q, so S ∩ [0, Q] suffices.
        const Point q_hi = join(parent->gamma(), gamma - mu);
        std::vector<Point> s_pts;
        Box(Point(s), q_hi).for_each([&](const Point& p) {
            if (parent->contains(p)) s_pts.push_back(p);
        });
        for (const auto& p : pts)
            for (const auto& q : s_pts)
                if (!rep.contains(p + q))
                    report.add(Axiom::ideal_closure, {p, q}, "sum " + (p + q).str() + " not in set");
    }
    return report;
}

ValidationReport validate_semigroup(const Point& gamma, const std::vector<Point>& small) {
    const std::size_t s = gamma.size();
    ValidationReport report = validate_good(s, Point(s), gamma, small);
    if (!report.passed) return report;
    const Representation rep = Representation::raw(Point(s), gamma, small);
    const auto& pts = rep.small();
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a; b < pts.size(); ++b)
            if (!rep.contains(pts[a] + pts[b]))
                report.add(Axiom::ideal_closure, {pts[a], pts[b]},
                           "sum " + (pts[a] + pts[b]).str() + " not in semigroup");
    return report;
}

// ---------------------------------------------------------------------------
// GoodSemigroup / Ideal

GoodSemigroup GoodSemigroup::from_small(Point gamma, std::vector<Point> small) {
    auto report = validate_semigroup(gamma, small);
    if (!report.passed) throw ValidationError(std::move(report));
    const std::size_t s = gamma.size();
    return trusted(Representation::canonical(Point(s), std::move(gamma), std::move(small)));
}

GoodSemigroup GoodSemigroup::trusted(Representation rep) {
    return GoodSemigroup(std::make_shared<const Representation>(std::move(rep)));
}

Point GoodSemigroup::tau() const { return gamma() - Point::filled(dim(), 1); }

bool operator==(const GoodSemigroup& a, const GoodSemigroup& b) { return a.rep_ == b.rep_ || *a.rep_ == *b.rep_; }

std::string to_string(Goodness g) {
    switch (g) {
        case Goodness::verified_good: return "verified-good";
        case Goodness::e1_only: return "E1-only";
        case Goodness::invalid: return "invalid";
    }
    return "?";
}

Ideal Ideal::from_small(const GoodSemigroup& parent, Point mu, Point gamma, std::vector<Point> small) {
    auto report = validate_good(parent.dim(), mu, gamma, small, &parent);
    if (!report.passed) throw ValidationError(std::move(report));
    return with_goodness(parent, Representation::canonical(std::move(mu), std::move(gamma), std::move(small)),
                         Goodness::verified_good);
}

Ideal Ideal::with_goodness(const GoodSemigroup& parent, Representation rep, Goodness goodness) {
    if (rep.dim() != parent.dim()) throw DimensionMismatch("ideal and parent differ in dimension");
    return Ideal(parent, std::make_shared<const Representation>(std::move(rep)), goodness);
}

Ideal Ideal::whole(const GoodSemigroup& parent) {
    return with_goodness(parent, parent.rep(), Goodness::verified_good);
}

Ideal Ideal::lattice_orthant(const GoodSemigroup& parent, const Point& alpha) {
    return with_goodness(parent, Representation::canonical(alpha, alpha, {alpha}), Goodness::verified_good);
}

bool operator==(const Ideal& a, const Ideal& b) { return a.parent_ == b.parent_ && *a.rep_ == *b.rep_; }

bool contains(const Ideal& e, const Point& alpha) { return e.contains(alpha); }
bool contains(const GoodSemigroup& s, const Point& alpha) { return s.contains(alpha); }

// ---------------------------------------------------------------------------
// Δ-sets

DeltaResult delta_nonempty(const Representation& e, const Point& alpha, std::size_t axis, bool closed) {
    require_same_dim(alpha, e.mu());
    if (axis >= e.dim()) throw DomainError("axis " + std::to_string(axis) + " out of range");
    // Δ_i(α) = Δ̄_i(α + 1 - e_i)
    Point delta = alpha;
    if (!closed)
        for (std::size_t j = 0; j < e.dim(); ++j)
            if (j != axis) delta = delta + Point::unit(e.dim(), j);
    auto w = e.closed_delta_witness(delta, axis);
    return {w.has_value(), std::move(w)};
}

DeltaResult delta_nonempty(const Ideal& e, const Point& alpha, std::size_t axis, bool closed) {
    return delta_nonempty(e.rep(), alpha, axis, closed);
}

bool delta_union_empty(const Representation& e, const Point& alpha, bool closed) {
    for (std::size_t i = 0; i < e.dim(); ++i)
        if (delta_nonempty(e, alpha, i, closed).nonempty) return false;
    return true;
}

bool delta_union_empty(const Ideal& e, const Point& alpha, bool closed) {
    return delta_union_empty(e.rep(), alpha, closed);
}

}  // namespace goodsemi
