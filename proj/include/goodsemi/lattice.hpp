#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "goodsemi/errors.hpp"

#ifndef GOODSEMI_MAX_DIM
#define GOODSEMI_MAX_DIM 4
#endif

namespace goodsemi {

using Coord = std::int64_t;

/// Largest supported ambient dimension s. Override at build time with
/// -DGOODSEMI_MAX_DIM=n.
inline constexpr std::size_t kMaxDim = GOODSEMI_MAX_DIM;

/// An element of Z^s, stored inline.
class Point {
public:
    Point() = default;
    /// Zero vector of dimension s.
    explicit Point(std::size_t s);
    Point(std::initializer_list<Coord> coords);
    explicit Point(std::span<const Coord> coords);

    static Point filled(std::size_t s, Coord value);
    /// The i-th canonical basis vector (0-based axis).
    static Point unit(std::size_t s, std::size_t axis);

    std::size_t size() const noexcept { return dim_; }
    Coord operator[](std::size_t i) const noexcept { return c_[i]; }
    Coord& operator[](std::size_t i) noexcept { return c_[i]; }

    const Coord* begin() const noexcept { return c_.data(); }
    const Coord* end() const noexcept { return c_.data() + dim_; }

    std::vector<Coord> to_vector() const { return {begin(), end()}; }
    std::string str() const;

    friend bool operator==(const Point& a, const Point& b) noexcept;

private:
    std::array<Coord, kMaxDim> c_{};
    std::uint8_t dim_ = 0;
};

/// Throws DimensionMismatch unless a and b live in the same Z^s.
void require_same_dim(const Point& a, const Point& b);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);

/// Componentwise minimum.
Point meet(const Point& a, const Point& b);
/// Componentwise maximum.
Point join(const Point& a, const Point& b);

/// Componentwise a ≤ b.
bool leq(const Point& a, const Point& b);

enum class Order { less_or_equal, greater_or_equal, equal, incomparable };

/// Position of a relative to b in the componentwise order. `less_or_equal`
/// means a ≤ b with a ≠ b.
Order compare(const Point& a, const Point& b);

/// Lexicographic strict order; used for containers and deterministic output.
struct LexLess {
    bool operator()(const Point& a, const Point& b) const noexcept;
};

/// Graded order: total degree first, then lexicographically descending, so
/// that t1 precedes t2 among monomials of equal degree.
struct GradedLexLess {
    bool operator()(const Point& a, const Point& b) const noexcept;
};

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept;
};

/// Sum of coordinates.
Coord degree(const Point& p);

/// Length of any saturated chain from a to b in Z^s, i.e. sum of b - a.
/// Requires a ≤ b.
Coord lattice_distance(const Point& a, const Point& b);

/// Closed box [lo, hi] in Z^s.
class Box {
public:
    Box(Point lo, Point hi);

    const Point& lo() const noexcept { return lo_; }
    const Point& hi() const noexcept { return hi_; }
    std::size_t dim() const noexcept { return lo_.size(); }

    bool contains(const Point& p) const;
    /// Number of lattice points; throws OverflowError past 2^62.
    std::uint64_t volume() const;

    /// Calls fn on every point, in lexicographic order (last axis fastest).
    void for_each(const std::function<void(const Point&)>& fn) const;
    std::vector<Point> points() const;

    /// Box widened by `margin` on every side.
    Box grown(Coord margin) const;

private:
    Point lo_, hi_;
};

enum class ChainPolicy {
    /// Raise axis 1 completely, then axis 2, and so on.
    axis_major,
    /// Round-robin over the axes that have not yet reached their target.
    interleaved,
};

struct ChainStep {
    Point from;
    std::size_t axis;  // 0-based
};

/// Saturated chain a = x0 < x1 < ... < xn = b in Z^s with unit steps
/// x_{j+1} = x_j + e_{axis_j}. Returns the n steps (x_j, axis_j).
std::vector<ChainStep> unit_chain(const Point& a, const Point& b,
                                  ChainPolicy policy = ChainPolicy::axis_major);

}  // namespace goodsemi
