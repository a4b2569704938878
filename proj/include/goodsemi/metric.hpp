#pragma once

#include <cstdint>
#include <vector>

#include "goodsemi/semigroup.hpp"

namespace goodsemi {

/// dist(E^α \ E^β) for α ≤ β: the number of unit steps (x, i) along a
/// saturated chain of Z^s from α to β with Δ̄^E_i(x) ≠ ∅. Independent of the
/// chain; `policy` selects which one is walked.
std::int64_t filtration_distance(const Ideal& e, const Point& alpha, const Point& beta,
                                 ChainPolicy policy = ChainPolicy::axis_major);

/// dist_E(α, β): common length of saturated chains from α to β inside E.
/// Requires α, β ∈ E and α ≤ β.
std::int64_t element_distance(const Ideal& e, const Point& alpha, const Point& beta);

/// dist(F \ E) for E ⊆ F, counted along the chain μ^F → μ^E → γ^E.
/// Throws DomainError when E ⊄ F.
std::int64_t ideal_distance(const Ideal& outer, const Ideal& inner);

/// E = F decided as dist(F \ E) = 0; requires E ⊆ F. Throws InternalError
/// if the distance verdict disagrees with representation equality.
bool equals(const Ideal& inner, const Ideal& outer);

/// A saturated chain of E between two members, each step consecutive in E.
struct ChainCertificate {
    std::vector<Point> points;
};

/// Builds a saturated chain from α to β inside E by walking the filtration
/// minima along a unit chain. Its length equals element_distance.
ChainCertificate saturated_chain(const Ideal& e, const Point& alpha, const Point& beta);

}  // namespace goodsemi
