#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "cml/rational.hpp"

namespace cml {

struct Interval {
    Rational lo, hi;

    bool empty() const { return lo > hi; }
    bool degenerate() const { return lo == hi; }
    Rational length() const { return empty() ? Rational(0) : Rational(hi - lo); }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend bool operator<(const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    }
};

inline Interval intersect(const Interval& a, const Interval& b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

// Finite union of closed intervals, kept sorted and coalesced.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(Interval iv) {
        if (!iv.empty()) parts_.push_back(std::move(iv));
    }

    void add(Interval iv) {
        if (iv.empty()) return;
        parts_.push_back(std::move(iv));
        normalize();
    }

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    // Smallest interval containing the set.
    Interval hull() const {
        return parts_.empty() ? Interval{Rational(1), Rational(0)}
                              : Interval{parts_.front().lo, parts_.back().hi};
    }

    bool covers(const Interval& iv) const {
        for (const auto& p : parts_)
            if (p.contains(iv)) return true;
        return false;
    }

    Rational total_length() const {
        Rational s(0);
        for (const auto& p : parts_) s += p.length();
        return s;
    }

private:
    void normalize() {
        std::sort(parts_.begin(), parts_.end());
        std::vector<Interval> out;
        for (auto& p : parts_) {
            if (!out.empty() && p.lo <= out.back().hi) {
                if (p.hi > out.back().hi) out.back().hi = p.hi;
            } else {
                out.push_back(p);
            }
        }
        parts_ = std::move(out);
    }

    std::vector<Interval> parts_;
};

}  // namespace cml
