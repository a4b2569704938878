#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "goodsemi/duality.hpp"
#include "goodsemi/semigroup.hpp"

namespace goodsemi {

/// Sparse Laurent polynomial in t1..ts with integer coefficients, kept in
/// graded-lexicographic exponent order. Zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Point, std::int64_t, GradedLexLess>;

    explicit Polynomial(std::size_t s) : dim_(s) {}

    std::size_t dim() const noexcept { return dim_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::int64_t coeff(const Point& exponent) const;
    void add_term(const Point& exponent, std::int64_t coeff);

    Polynomial operator*(const Polynomial& other) const;
    Polynomial shifted(const Point& by) const;

    /// Human form such as "-1 + t1*t2"; "t" is used when s = 1.
    std::string str() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    std::size_t dim_;
    Terms terms_;
};

/// dist_E(α) = dist(E^α \ E^{α+1}), an integer in [0, s].
std::int64_t local_distance(const Ideal& e, const Point& alpha, ChainPolicy policy = ChainPolicy::axis_major);

/// Σ c_E(α) t^α with c_E(α) = Σ_J (-1)^{|J^c|} dist_E(α - e_J), evaluated on
/// [μ^E, γ^E]. Throws InternalError if c_E is nonzero anywhere on the
/// width-2 ring around that box.
Polynomial poincare_polynomial(const Ideal& e);

struct SymmetryVerdict {
    bool identity_holds = false;
    SymmetryReport report;
    Polynomial p_e;
    Polynomial p_dual;
};

/// Evaluates the four conditions and the coefficient identity
/// c_{K-E}(α) = (-1)^{s+1} c_E(γ - α). If the conditions hold but the
/// identity does not, throws InternalError.
SymmetryVerdict check_symmetry_theorem(const GoodSemigroup& s, const Ideal& e);

/// (-1)^{s+1} t^γ P(1/t).
Polynomial reflected(const Polynomial& p, const Point& gamma);

}  // namespace goodsemi
