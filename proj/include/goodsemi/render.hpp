#pragma once

#include <string>

#include "goodsemi/semigroup.hpp"

namespace goodsemi {

enum class RenderFormat { ascii, svg };

struct RenderOptions {
    /// Overwrite the member marks at μ and γ with 'M' and 'G' (ASCII) or
    /// labels (SVG). Off gives the bare membership map.
    bool mark_extremes = true;
};

/// Staircase picture of a set in the plane over `window`, highest row
/// first. ASCII: '#' member, '.' non-member, 'M' at μ, 'G' at γ, one row
/// per line. SVG: one self-contained document; small elements are drawn in
/// a separate colour from the other members. Throws DimensionMismatch
/// unless s = 2.
std::string render_staircase(const Representation& e, const Box& window, RenderFormat format,
                             const RenderOptions& options = {});

}  // namespace goodsemi
