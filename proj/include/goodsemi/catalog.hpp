#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "goodsemi/duality.hpp"
#include "goodsemi/semigroup.hpp"

namespace goodsemi {

/// Search limits. `max_candidates` bounds the number of candidate subsets an
/// enumerator may examine; exceeding it throws BudgetExceeded.
struct Budget {
    std::uint64_t max_candidates = std::uint64_t{1} << 22;

    /// Defaults, with max_candidates taken from GOODSEMI_BUDGET when set.
    static Budget from_env();
};

/// Numerical semigroup ⟨gens⟩ (s = 1). Throws DomainError unless the
/// generators are positive with gcd 1.
GoodSemigroup numerical(const std::vector<Coord>& gens);

/// S1 × S2 with concatenated coordinates. Throws DimensionMismatch when the
/// combined dimension exceeds kMaxDim.
GoodSemigroup product(const GoodSemigroup& a, const GoodSemigroup& b);

/// Canonicalizes and validates; throws ValidationError with the report.
GoodSemigroup from_small(const Point& gamma, const std::vector<Point>& small);

/// Every good semigroup with canonical conductor γ ≤ gamma_max, each once,
/// ordered by (γ, small) lexicographically. Exhaustive mode needs s ≤ 2.
std::vector<GoodSemigroup> enumerate_good(std::size_t s, const Point& gamma_max, const Budget& budget = {});

/// Every good ideal E of S with μ^E = 0, ordered by small elements. These
/// are exactly the good ideals with S ⊆ E ⊆ N^s; all others are translates.
std::vector<Ideal> enumerate_normalized_ideals(const GoodSemigroup& s, const Budget& budget = {});

/// Every good ideal of S with μ^E ∈ mu_box and γ^E ∈ gamma_box (when
/// given), ordered by μ^E and then by small elements.
std::vector<Ideal> enumerate_ideals(const GoodSemigroup& s, const Box& mu_box,
                                    const std::optional<Box>& gamma_box = std::nullopt, const Budget& budget = {});

struct HuntParams {
    std::size_t s = 2;
    Point gamma_max;
    Box mu_box{Point(2), Point(2)};
    std::optional<Box> gamma_box;
    unsigned jobs = 1;
    Budget budget;
};

struct HuntFailure {
    GoodSemigroup semigroup;
    Ideal ideal;
    SymmetryReport report;
};

struct HuntReport {
    HuntParams params;
    std::uint64_t semigroups = 0;
    std::uint64_t tested = 0;
    /// Pairs whose four conditions did not all agree.
    std::uint64_t inconsistent = 0;
    std::vector<HuntFailure> failures;
    std::chrono::milliseconds elapsed{0};
};

/// Runs symmetry_report on every (S, E) of the enumerated universe and
/// records each pair whose conditions are not all true. Results are in
/// enumeration order regardless of `jobs`.
HuntReport hunt_symmetry(const HuntParams& params);

}  // namespace goodsemi
