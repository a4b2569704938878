#include "goodsemi/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "goodsemi/idealops.hpp"

namespace goodsemi {

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("GOODSEMI_BUDGET")) {
        try {
            b.max_candidates = std::stoull(env);
        } catch (const std::exception&) {
            throw DomainError(std::string("GOODSEMI_BUDGET is not a number: ") + env);
        }
    }
    return b;
}

GoodSemigroup numerical(const std::vector<Coord>& gens) {
    if (gens.empty()) throw DomainError("no generators");
    Coord g = 0;
    for (auto x : gens) {
        if (x <= 0) throw DomainError("generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw DomainError("generators have gcd " + std::to_string(g) + ", no conductor exists");
    const Coord smallest = *std::min_element(gens.begin(), gens.end());
    std::vector<bool> in{true};
    Coord run = 1;  // length of the current run of members ending at the last index
    while (run < smallest) {
        const Coord n = static_cast<Coord>(in.size());
        bool member = false;
        for (auto x : gens)
            if (x <= n && in[static_cast<std::size_t>(n - x)]) member = true;
        in.push_back(member);
        run = member ? run + 1 : 0;
    }
    const Coord conductor = static_cast<Coord>(in.size()) - run;
    std::vector<Point> small;
    for (Coord n = 0; n <= conductor; ++n)
        if (in[static_cast<std::size_t>(n)]) small.push_back(Point{n});
    return GoodSemigroup::from_small(Point{conductor}, std::move(small));
}

GoodSemigroup product(const GoodSemigroup& a, const GoodSemigroup& b) {
    const std::size_t s = a.dim() + b.dim();
    if (s > kMaxDim) throw DimensionMismatch("product dimension " + std::to_string(s) + " exceeds the cap");
    auto concat = [&](const Point& x, const Point& y) {
        Point r(s);
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
        for (std::size_t i = 0; i < y.size(); ++i) r[x.size() + i] = y[i];
        return r;
    };
    std::vector<Point> small;
    for (const auto& x : a.small())
        for (const auto& y : b.small()) small.push_back(concat(x, y));
    return GoodSemigroup::from_small(concat(a.gamma(), b.gamma()), std::move(small));
}

GoodSemigroup from_small(const Point& gamma, const std::vector<Point>& small) {
    return GoodSemigroup::from_small(gamma, small);
}

namespace {

/// Backtracking over subsets of the free points of a box. Fixed points are
/// always in. Free points are decided in graded order, so a meet of two
/// decided points is already decided; branches whose partial set is not
/// meet-closed, or where a required sum is already excluded, are cut.
class SubsetSearch {
public:
    SubsetSearch(Box box, const std::vector<Point>& fixed, std::vector<Point> free, std::vector<Point> addends,
                 bool self_addition, std::uint64_t max_candidates)
        : box_(std::move(box)),
          free_(std::move(free)),
          addends_(std::move(addends)),
          self_addition_(self_addition),
          max_candidates_(max_candidates) {
        std::sort(free_.begin(), free_.end(), GradedLexLess{});
        state_.assign(static_cast<std::size_t>(box_.volume()), kOut);
        for (const auto& p : free_) state_[index(p)] = kUndecided;
        for (const auto& p : fixed) {
            state_[index(p)] = kIn;
            chosen_.push_back(p);
        }
    }

    void run(const std::function<void(const std::vector<Point>&)>& leaf) { recurse(0, leaf); }

private:
    static constexpr signed char kOut = 0, kIn = 1, kUndecided = -1;

    std::size_t index(const Point& p) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            idx = idx * static_cast<std::uint64_t>(box_.hi()[i] - box_.lo()[i] + 1) +
                  static_cast<std::uint64_t>(p[i] - box_.lo()[i]);
        return static_cast<std::size_t>(idx);
    }

    bool excluded(const Point& p) const { return state_[index(meet(p, box_.hi()))] == kOut; }

    bool can_add(const Point& p) const {
        for (const auto& q : chosen_) {
            const Point m = meet(p, q);
            if (!(m == p) && state_[index(m)] != kIn) return false;
            if (self_addition_ && excluded(p + q)) return false;
        }
        if (self_addition_ && excluded(p + p)) return false;
        for (const auto& a : addends_)
            if (excluded(p + a)) return false;
        return true;
    }

    bool consistent_exclusion(const Point& p) const {
        // p out is impossible if it is already forced by two chosen points.
        for (const auto& q : chosen_) {
            if (self_addition_)
                for (const auto& r : chosen_)
                    if (meet(q + r, box_.hi()) == p) return false;
            for (const auto& a : addends_)
                if (meet(q + a, box_.hi()) == p) return false;
        }
        return true;
    }

    void recurse(std::size_t k, const std::function<void(const std::vector<Point>&)>& leaf) {
        if (++visited_ > max_candidates_) throw BudgetExceeded("enumeration exceeded its candidate budget");
        if (k == free_.size()) {
            leaf(chosen_);
            return;
        }
        const Point& p = free_[k];
        if (consistent_exclusion(p)) {
            state_[index(p)] = kOut;
            recurse(k + 1, leaf);
            state_[index(p)] = kUndecided;
        }
        if (can_add(p)) {
            state_[index(p)] = kIn;
            chosen_.push_back(p);
            recurse(k + 1, leaf);
            chosen_.pop_back();
        }
        state_[index(p)] = kUndecided;
    }

    Box box_;
    std::vector<Point> free_;
    std::vector<Point> addends_;
    bool self_addition_;
    std::uint64_t max_candidates_;
    std::uint64_t visited_ = 0;
    std::vector<signed char> state_;
    std::vector<Point> chosen_;
};

bool small_less(const std::vector<Point>& a, const std::vector<Point>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
}

}  // namespace

std::vector<GoodSemigroup> enumerate_good(std::size_t s, const Point& gamma_max, const Budget& budget) {
    if (s > 2) throw DomainError("exhaustive enumeration supports s <= 2");
    if (gamma_max.size() != s) throw DimensionMismatch("gamma_max has the wrong dimension");
    const Point zero(s);
    std::vector<GoodSemigroup> out;
    std::uint64_t spent = 0;
    Box(zero, gamma_max).for_each([&](const Point& gamma) {
        const Box box(zero, gamma);
        std::vector<Point> fixed{zero}, free;
        if (!(gamma == zero)) fixed.push_back(gamma);
        box.for_each([&](const Point& p) {
            if (!(p == zero) && !(p == gamma)) free.push_back(p);
        });
        SubsetSearch search(box, fixed, free, {}, true, budget.max_candidates - spent);
        std::vector<GoodSemigroup> found;
        search.run([&](const std::vector<Point>& members) {
            ++spent;
            if (!validate_semigroup(gamma, members).passed) return;
            auto rep = Representation::raw(zero, gamma, members);
            if (!rep.is_canonical()) return;
            found.push_back(GoodSemigroup::trusted(std::move(rep)));
        });
        std::sort(found.begin(), found.end(),
                  [](const GoodSemigroup& a, const GoodSemigroup& b) { return small_less(a.small(), b.small()); });
        out.insert(out.end(), found.begin(), found.end());
    });
    return out;
}

std::vector<Ideal> enumerate_normalized_ideals(const GoodSemigroup& s, const Budget& budget) {
    const std::size_t n = s.dim();
    const Point zero(n);
    const Box box(zero, s.gamma());
    std::vector<Point> free;
    box.for_each([&](const Point& p) {
        if (!s.contains(p)) free.push_back(p);
    });
    SubsetSearch search(box, s.small(), free, s.small(), false, budget.max_candidates);
    std::vector<Ideal> out;
    search.run([&](const std::vector<Point>& members) {
        if (!validate_good(n, zero, s.gamma(), members, &s).passed) return;
        out.push_back(Ideal::with_goodness(s, Representation::canonical(zero, s.gamma(), members),
                                           Goodness::verified_good));
    });
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (!(a.gamma() == b.gamma())) return LexLess{}(a.gamma(), b.gamma());
        return small_less(a.small(), b.small());
    });
    return out;
}

std::vector<Ideal> enumerate_ideals(const GoodSemigroup& s, const Box& mu_box, const std::optional<Box>& gamma_box,
                                    const Budget& budget) {
    if (mu_box.dim() != s.dim()) throw DimensionMismatch("mu box has the wrong dimension");
    const auto normalized = enumerate_normalized_ideals(s, budget);
    std::vector<Ideal> out;
    mu_box.for_each([&](const Point& mu) {
        for (const auto& e : normalized) {
            if (gamma_box && !gamma_box->contains(e.gamma() + mu)) continue;
            out.push_back(translate(e, mu));
        }
    });
    return out;
}

HuntReport hunt_symmetry(const HuntParams& params) {
    const auto start = std::chrono::steady_clock::now();
    HuntReport report;
    report.params = params;
    const auto semigroups = enumerate_good(params.s, params.gamma_max, params.budget);
    report.semigroups = semigroups.size();

    std::vector<std::pair<std::size_t, Ideal>> work;
    for (std::size_t k = 0; k < semigroups.size(); ++k)
        for (auto& e : enumerate_ideals(semigroups[k], params.mu_box, params.gamma_box, params.budget))
            work.emplace_back(k, std::move(e));

    std::vector<std::optional<SymmetryReport>> results(work.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t idx; (idx = next.fetch_add(1)) < work.size();) {
            try {
                results[idx] = symmetry_report(semigroups[work[idx].first], work[idx].second);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, params.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    report.tested = work.size();
    for (std::size_t idx = 0; idx < work.size(); ++idx) {
        auto& r = *results[idx];
        if (!r.consistent()) ++report.inconsistent;
        if (!r.all_true()) report.failures.push_back({semigroups[work[idx].first], work[idx].second, std::move(r)});
    }
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace goodsemi
