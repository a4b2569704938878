#include "goodsemi/metric.hpp"

#include "goodsemi/idealops.hpp"

namespace goodsemi {

namespace {

std::int64_t count_nonempty(const Ideal& e, const std::vector<ChainStep>& steps, std::size_t from) {
    std::int64_t n = 0;
    for (std::size_t j = from; j < steps.size(); ++j)
        if (e.rep().closed_delta_witness(steps[j].from, steps[j].axis)) ++n;
    return n;
}

}  // namespace

std::int64_t filtration_distance(const Ideal& e, const Point& alpha, const Point& beta, ChainPolicy policy) {
    require_same_dim(alpha, e.mu());
    return count_nonempty(e, unit_chain(alpha, beta, policy), 0);
}

std::int64_t element_distance(const Ideal& e, const Point& alpha, const Point& beta) {
    if (!e.contains(alpha)) throw DomainError(alpha.str() + " is not in the ideal");
    if (!e.contains(beta)) throw DomainError(beta.str() + " is not in the ideal");
    if (!leq(alpha, beta)) throw DomainError(alpha.str() + " is not <= " + beta.str());
    // For α ∈ E the minimum of E^α is α itself, so dist_E(α, β) = dist(E^α \ E^β).
    return filtration_distance(e, alpha, beta);
}

std::int64_t ideal_distance(const Ideal& outer, const Ideal& inner) {
    if (!(outer.parent() == inner.parent())) throw DomainError("ideals belong to different semigroups");
    if (!is_subset(inner, outer)) throw DomainError("inner ideal is not contained in outer ideal");
    // μ^E ∈ F forces μ^F ≤ μ^E.
    auto chain = unit_chain(outer.mu(), inner.mu());
    const std::size_t m = chain.size();
    auto tail = unit_chain(inner.mu(), inner.gamma());
    chain.insert(chain.end(), tail.begin(), tail.end());
    return count_nonempty(outer, chain, 0) - count_nonempty(inner, chain, m);
}

bool equals(const Ideal& inner, const Ideal& outer) {
    const bool by_distance = ideal_distance(outer, inner) == 0;
    if (by_distance != (inner == outer))
        throw InternalError("distance-zero test disagrees with representation equality");
    return by_distance;
}

ChainCertificate saturated_chain(const Ideal& e, const Point& alpha, const Point& beta) {
    if (!e.contains(alpha) || !e.contains(beta) || !leq(alpha, beta))
        throw DomainError("saturated_chain needs members alpha <= beta");
    ChainCertificate cert;
    cert.points.push_back(alpha);
    for (const auto& step : unit_chain(alpha, beta)) {
        Point next = step.from;
        ++next[step.axis];
        Point m = filtration(e, next).mu();
        if (!(m == cert.points.back())) cert.points.push_back(std::move(m));
    }
    return cert;
}

}  // namespace goodsemi
