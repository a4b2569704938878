#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goodsemi/semigroup.hpp"

namespace goodsemi {

/// K₀ = {α | Δ^S(τ - α) = ∅}; the canonical ideal with conductor γ and
/// minimum 0.
Ideal normalized_canonical(const GoodSemigroup& s);

/// True iff E is a translate of K₀, i.e. E = (γ^E - γ) + K₀.
bool is_canonical(const GoodSemigroup& s, const Ideal& e);

/// K₀ - E = {α | Δ^E(τ - α) = ∅}, scanned over [γ - γ^E, γ - μ^E] with a
/// one-cell margin. The result is validated; failure is an InternalError.
Ideal dual(const GoodSemigroup& s, const Ideal& e);

/// K - (K - E) = E.
bool check_reflexivity(const GoodSemigroup& s, const Ideal& e);

struct SymmetryViolation {
    std::string condition;  // "i", "ii", "iii" or "iv"
    Point delta;
    std::optional<std::size_t> axis;  // 0-based; empty for distance conditions
};

/// The four equivalent conditions relating E and K - E, each evaluated on
/// its own. Distances are kept for display.
struct SymmetryReport {
    bool cond_i = false;
    bool cond_ii = false;
    bool cond_iii = false;
    bool cond_iv = false;
    std::vector<SymmetryViolation> violations;

    // (i):  dist(D^μ \ E)  vs  dist((K-E) \ D^{γ-μ})
    std::int64_t dist_lattice_over_e = 0;
    std::int64_t dist_dual_over_lattice = 0;
    // (ii): dist(E \ E^{γ^E})  vs  dist(D^μ \ D^{γ^E}) - dist((K-E) \ (K-E)^{γ-μ})
    std::int64_t dist_e_over_conductor = 0;
    std::int64_t dist_lattice_window = 0;
    std::int64_t dist_dual_over_filtration = 0;

    bool all_true() const { return cond_i && cond_ii && cond_iii && cond_iv; }
    bool consistent() const { return cond_i == cond_ii && cond_ii == cond_iii && cond_iii == cond_iv; }
};

SymmetryReport symmetry_report(const GoodSemigroup& s, const Ideal& e);

/// As symmetry_report but with K - E supplied by the caller.
SymmetryReport symmetry_report(const GoodSemigroup& s, const Ideal& e, const Ideal& dual_e);

/// The three window conditions for α ≤ β: the distance identity, and the
/// pointwise Δ-equivalences indexed by upward and downward unit steps.
struct WindowConditions {
    bool distance = false;
    bool upward = false;
    bool downward = false;
};

WindowConditions window_conditions(const GoodSemigroup& s, const Ideal& e, const Ideal& dual_e, const Point& alpha,
                                   const Point& beta);

/// Common truth value of window_conditions; throws InternalError when they
/// disagree.
bool pointwise_equivalence(const GoodSemigroup& s, const Ideal& e, const Point& alpha, const Point& beta);

}  // namespace goodsemi
