#pragma once

#include "goodsemi/semigroup.hpp"

namespace goodsemi {

/// α + E. Goodness is preserved.
Ideal translate(const Ideal& e, const Point& alpha);

/// E - F = {α | α + F ⊆ E}, represented on [μ^E - μ^F, γ^E - μ^F].
/// The result is validated: verified-good when it passes, E1-only otherwise
/// (E - F is always meet-closed). Throws DomainError on different parents.
Ideal difference(const Ideal& e, const Ideal& f);

/// E^α = {β ∈ E | β ≥ α}. filtration(E, γ^E) is the conductor ideal C_E.
Ideal filtration(const Ideal& e, const Point& alpha);

/// C_E = γ^E + N^s.
Ideal conductor_ideal(const Ideal& e);

/// E ⊆ F, decided on [μ^E, γ^E ∨ γ^F]; membership beyond that box is
/// conductor-determined for both sets.
bool is_subset(const Ideal& e, const Ideal& f);

}  // namespace goodsemi
