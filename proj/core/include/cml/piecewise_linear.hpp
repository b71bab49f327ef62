#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cml/error.hpp"
#include "cml/interval.hpp"
#include "cml/rational.hpp"

namespace cml {

class BranchExplosionError : public Error {
public:
    using Error::Error;
};

// One linear piece. y0/y1 are the values at x0/x1 taken from inside the
// branch, so a discontinuous map is just a list of branches whose endpoint
// values disagree with their neighbours'.
struct LinearBranch {
    Rational x0, x1, y0, y1;

    Rational slope() const { return (y1 - y0) / (x1 - x0); }
    Rational eval(const Rational& x) const { return y0 + (y1 - y0) * (x - x0) / (x1 - x0); }
    bool increasing() const { return y1 > y0; }
    bool constant() const { return y1 == y0; }
    Interval range() const {
        return y0 <= y1 ? Interval{y0, y1} : Interval{y1, y0};
    }
};

// Exact piecewise linear map on a closed interval. Branches tile the domain
// contiguously. Evaluation at an internal breakpoint is right-continuous.
class PiecewiseLinearMap {
public:
    PiecewiseLinearMap() = default;

    static PiecewiseLinearMap from_branches(std::vector<LinearBranch> branches);
    // Continuous map through the given (x, y) nodes, x strictly increasing.
    static PiecewiseLinearMap from_nodes(const std::vector<std::pair<Rational, Rational>>& nodes);

    const std::vector<LinearBranch>& branches() const { return branches_; }
    size_t branch_count() const { return branches_.size(); }
    Rational domain_lo() const { return branches_.front().x0; }
    Rational domain_hi() const { return branches_.back().x1; }
    bool continuous() const;

    Rational operator()(const Rational& x) const;
    // Index of the branch used to evaluate x (right-continuous convention).
    size_t branch_index(const Rational& x) const;

    Rational min_abs_slope() const;
    Rational max_abs_slope() const;

    // All breakpoints, including both domain endpoints.
    std::vector<Rational> breakpoints() const;

    IntervalSet image(const Interval& iv) const;
    IntervalSet image(const IntervalSet& set) const;

    // Map with every value multiplied by f (f != 0).
    PiecewiseLinearMap scaled_values(const Rational& f) const;
    // Restriction to [iv.lo, iv.hi]; the interval must be inside the domain.
    PiecewiseLinearMap restricted(const Interval& iv) const;

    bool is_odd() const;

    // Maximal intervals on which the map is continuous and strictly monotone.
    std::vector<Interval> monotone_intervals() const;

    Interval value_hull() const;

private:
    std::vector<LinearBranch> branches_;
};

// outer(inner(x)) as an exact piecewise linear map. Throws
// BranchExplosionError when the result would exceed branch_cap pieces.
PiecewiseLinearMap compose(const PiecewiseLinearMap& outer, const PiecewiseLinearMap& inner,
                           size_t branch_cap);

// n-fold self composition (n >= 1).
PiecewiseLinearMap iterate_map(const PiecewiseLinearMap& m, int n, size_t branch_cap = 10'000'000);

}  // namespace cml
