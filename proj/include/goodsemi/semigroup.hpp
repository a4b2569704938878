#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "goodsemi/lattice.hpp"

namespace goodsemi {

/// A subset E of Z^s stored by its small elements.
///
/// The set is {α | α ≥ mu and meet(α, conductor) ∈ small}, where small is
/// E ∩ [mu, conductor]. Every good semigroup and every good semigroup ideal
/// has this form, with mu = min E and conductor = γ^E. Instances are
/// immutable; `small` is kept lexicographically sorted.
class Representation {
public:
    /// Well-formed but not necessarily canonical: mu and conductor must be in
    /// small and every small point must lie in [mu, conductor].
    /// Throws DomainError otherwise.
    static Representation raw(Point mu, Point conductor, std::vector<Point> small);

    /// As `raw`, then shrinks the conductor while the represented set is
    /// unchanged, so equal sets get equal representations.
    static Representation canonical(Point mu, Point conductor, std::vector<Point> small);

    /// Builds the set whose members inside `box` are given by `member`,
    /// assuming the set lies in box.lo() + N^s and that membership of any
    /// α ≥ box.lo() equals membership of meet(α, box.hi()). The minimum is
    /// the meet of all members found; throws DomainError if that meet is not
    /// itself a member or box.hi() is not a member.
    static Representation from_box_scan(const Box& box, const std::function<bool(const Point&)>& member);

    std::size_t dim() const noexcept { return mu_.size(); }
    const Point& mu() const noexcept { return mu_; }
    const Point& conductor() const noexcept { return conductor_; }
    const std::vector<Point>& small() const noexcept { return small_; }
    Box box() const { return Box(mu_, conductor_); }

    bool contains(const Point& alpha) const;

    /// Witness for the closed Δ-set Δ̄_i(δ) = {β ∈ E | β_i = δ_i, β_j ≥ δ_j},
    /// or nullopt when it is empty. Bounded by one scan of small.
    std::optional<Point> closed_delta_witness(const Point& delta, std::size_t axis) const;

    Representation translated(const Point& shift) const;

    /// True when the conductor cannot be lowered without changing the set.
    bool is_canonical() const;

    friend bool operator==(const Representation& a, const Representation& b);

private:
    Representation(Point mu, Point conductor, std::vector<Point> small);

    bool small_box_member(const Point& p) const;
    std::size_t index(const Point& p) const;
    Representation shrink_conductor() const;

    Point mu_, conductor_;
    std::vector<Point> small_;
    std::vector<std::uint64_t> strides_;
    std::vector<bool> bits_;
};

enum class Axiom { E0, E1, E2, ideal_closure, representation };
std::string to_string(Axiom a);

struct Violation {
    Axiom axiom;
    std::vector<Point> witnesses;
    std::string message;
};

struct ValidationReport {
    bool passed = true;
    std::vector<Violation> violations;

    void add(Axiom axiom, std::vector<Point> witnesses, std::string message);
    std::string summary() const;
};

class ValidationError : public Error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// A good semigroup S ⊆ N^s, held by shared immutable representation.
class GoodSemigroup {
public:
    /// Validates the axioms and monoid closure, canonicalizes γ.
    /// Throws ValidationError with the failing report.
    static GoodSemigroup from_small(Point gamma, std::vector<Point> small);

    /// Wraps a representation already known to be a good semigroup.
    static GoodSemigroup trusted(Representation rep);

    std::size_t dim() const noexcept { return rep_->dim(); }
    const Point& gamma() const noexcept { return rep_->conductor(); }
    /// τ = γ - 1.
    Point tau() const;
    const std::vector<Point>& small() const noexcept { return rep_->small(); }
    const Representation& rep() const noexcept { return *rep_; }
    bool contains(const Point& alpha) const { return rep_->contains(alpha); }

    friend bool operator==(const GoodSemigroup& a, const GoodSemigroup& b);

private:
    explicit GoodSemigroup(std::shared_ptr<const Representation> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Representation> rep_;
};

enum class Goodness { verified_good, e1_only, invalid };
std::string to_string(Goodness g);

/// A semigroup ideal E of a good semigroup, stored as (μ^E, γ^E, Small(E)).
class Ideal {
public:
    /// Validates E1, E2 and E + S ⊆ E; throws ValidationError on failure.
    static Ideal from_small(const GoodSemigroup& parent, Point mu, Point gamma, std::vector<Point> small);

    /// Wraps an already canonical representation with a known goodness flag.
    static Ideal with_goodness(const GoodSemigroup& parent, Representation rep, Goodness goodness);

    /// S regarded as an ideal of itself.
    static Ideal whole(const GoodSemigroup& parent);

    /// D_S^α = α + N^s, an ideal of every good semigroup.
    static Ideal lattice_orthant(const GoodSemigroup& parent, const Point& alpha);

    const GoodSemigroup& parent() const noexcept { return parent_; }
    std::size_t dim() const noexcept { return rep_->dim(); }
    const Point& mu() const noexcept { return rep_->mu(); }
    const Point& gamma() const noexcept { return rep_->conductor(); }
    const std::vector<Point>& small() const noexcept { return rep_->small(); }
    const Representation& rep() const noexcept { return *rep_; }
    Goodness goodness() const noexcept { return goodness_; }
    bool contains(const Point& alpha) const { return rep_->contains(alpha); }

    /// Representation equality (same parent, same canonical small data).
    friend bool operator==(const Ideal& a, const Ideal& b);

private:
    Ideal(GoodSemigroup parent, std::shared_ptr<const Representation> rep, Goodness g)
        : parent_(std::move(parent)), rep_(std::move(rep)), goodness_(g) {}

    GoodSemigroup parent_;
    std::shared_ptr<const Representation> rep_;
    Goodness goodness_;
};

/// Membership: α ≥ μ^E and meet(α, γ^E) ∈ Small(E).
bool contains(const Ideal& e, const Point& alpha);
bool contains(const GoodSemigroup& s, const Point& alpha);

/// Checks the representation, (E1) and (E2), and E + S ⊆ E when a parent
/// is given. (E0) holds by construction since the conductor is encoded.
ValidationReport validate_good(std::size_t s, const Point& mu, const Point& gamma, const std::vector<Point>& small,
                               const GoodSemigroup* parent = nullptr);

/// validate_good with μ = 0 plus closure under addition.
ValidationReport validate_semigroup(const Point& gamma, const std::vector<Point>& small);

struct DeltaResult {
    bool nonempty = false;
    std::optional<Point> witness;
};

/// Tests Δ̄^E_i(α) ≠ ∅ (closed) or Δ^E_i(α) ≠ ∅ (open) for 0-based axis i.
/// The witness, when present, is a member of E in the Δ-set.
DeltaResult delta_nonempty(const Ideal& e, const Point& alpha, std::size_t axis, bool closed);
DeltaResult delta_nonempty(const Representation& e, const Point& alpha, std::size_t axis, bool closed);

/// True iff every Δ_i (or Δ̄_i when closed) is empty.
bool delta_union_empty(const Ideal& e, const Point& alpha, bool closed);
bool delta_union_empty(const Representation& e, const Point& alpha, bool closed);

}  // namespace goodsemi
