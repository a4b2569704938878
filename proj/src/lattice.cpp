#include "goodsemi/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace goodsemi {

namespace {

Coord checked_add(Coord a, Coord b) {
    Coord r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coordinate overflow in addition");
    return r;
}

Coord checked_sub(Coord a, Coord b) {
    Coord r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coordinate overflow in subtraction");
    return r;
}

void check_dim(std::size_t s) {
    if (s == 0 || s > kMaxDim)
        throw DimensionMismatch("dimension " + std::to_string(s) + " outside [1, " +
                                std::to_string(kMaxDim) + "]");
}

}  // namespace

Point::Point(std::size_t s) {
    check_dim(s);
    dim_ = static_cast<std::uint8_t>(s);
}

Point::Point(std::initializer_list<Coord> coords)
    : Point(std::span<const Coord>(coords.begin(), coords.size())) {}

Point::Point(std::span<const Coord> coords) {
    check_dim(coords.size());
    dim_ = static_cast<std::uint8_t>(coords.size());
    std::copy(coords.begin(), coords.end(), c_.begin());
}

Point Point::filled(std::size_t s, Coord value) {
    Point p(s);
    for (std::size_t i = 0; i < s; ++i) p.c_[i] = value;
    return p;
}

Point Point::unit(std::size_t s, std::size_t axis) {
    Point p(s);
    if (axis >= s) throw DomainError("axis out of range");
    p.c_[axis] = 1;
    return p;
}

std::string Point::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ')';
    return os.str();
}

bool operator==(const Point& a, const Point& b) noexcept {
    return a.dim_ == b.dim_ && std::equal(a.begin(), a.end(), b.begin());
}

void require_same_dim(const Point& a, const Point& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("points " + a.str() + " and " + b.str() + " differ in dimension");
}

Point operator+(const Point& a, const Point& b) {
    require_same_dim(a, b);
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

Point operator-(const Point& a, const Point& b) {
    require_same_dim(a, b);
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

Point operator-(const Point& a) { return Point(a.size()) - a; }

Point meet(const Point& a, const Point& b) {
    require_same_dim(a, b);
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

Point join(const Point& a, const Point& b) {
    require_same_dim(a, b);
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool leq(const Point& a, const Point& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Order compare(const Point& a, const Point& b) {
    require_same_dim(a, b);
    bool le = true, ge = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) le = false;
        if (a[i] < b[i]) ge = false;
    }
    if (le && ge) return Order::equal;
    if (le) return Order::less_or_equal;
    if (ge) return Order::greater_or_equal;
    return Order::incomparable;
}

bool LexLess::operator()(const Point& a, const Point& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool GradedLexLess::operator()(const Point& a, const Point& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    Coord da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da < db;
    return LexLess{}(b, a);
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
    std::size_t h = p.size();
    for (auto x : p) h ^= std::hash<Coord>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Coord degree(const Point& p) {
    Coord d = 0;
    for (auto x : p) d = checked_add(d, x);
    return d;
}

Coord lattice_distance(const Point& a, const Point& b) {
    if (!leq(a, b)) throw DomainError(a.str() + " is not <= " + b.str());
    return degree(b - a);
}

Box::Box(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!leq(lo_, hi_)) throw DomainError("malformed box [" + lo_.str() + ", " + hi_.str() + "]");
}

bool Box::contains(const Point& p) const { return leq(lo_, p) && leq(p, hi_); }

std::uint64_t Box::volume() const {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < dim(); ++i) {
        auto side = static_cast<std::uint64_t>(checked_add(checked_sub(hi_[i], lo_[i]), 1));
        if (__builtin_mul_overflow(v, side, &v) || v > (std::uint64_t{1} << 62))
            throw OverflowError("box volume too large");
    }
    return v;
}

void Box::for_each(const std::function<void(const Point&)>& fn) const {
    Point p = lo_;
    const std::size_t s = dim();
    while (true) {
        fn(p);
        std::size_t k = s;
        while (k > 0) {
            --k;
            if (p[k] < hi_[k]) {
                ++p[k];
                break;
            }
            p[k] = lo_[k];
            if (k == 0) return;
        }
    }
}

std::vector<Point> Box::points() const {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(volume()));
    for_each([&](const Point& p) { out.push_back(p); });
    return out;
}

Box Box::grown(Coord margin) const {
    const Point m = Point::filled(dim(), margin);
    return Box(lo_ - m, hi_ + m);
}

std::vector<ChainStep> unit_chain(const Point& a, const Point& b, ChainPolicy policy) {
    if (!leq(a, b)) throw DomainError("unit_chain: " + a.str() + " is not <= " + b.str());
    std::vector<ChainStep> steps;
    steps.reserve(static_cast<std::size_t>(lattice_distance(a, b)));
    Point cur = a;
    const std::size_t s = a.size();
    if (policy == ChainPolicy::axis_major) {
        for (std::size_t i = 0; i < s; ++i) {
            while (cur[i] < b[i]) {
                steps.push_back({cur, i});
                ++cur[i];
            }
        }
    } else {
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t i = 0; i < s; ++i) {
                if (cur[i] < b[i]) {
                    steps.push_back({cur, i});
                    ++cur[i];
                    moved = true;
                }
            }
        }
    }
    return steps;
}

}  // namespace goodsemi
