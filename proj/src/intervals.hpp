// Sorted, pairwise-disjoint closed intervals: bands, spectra, covers.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fibspec {

struct Interval {
  double left;
  double right;
};

class IntervalSet {
 public:
  static constexpr double kMergeTol = 1e-9;

  IntervalSet() = default;

  // Sorts and fuses overlaps and sub-tolerance gaps.
  static IntervalSet normalized(std::vector<Interval> iv, double merge_tol = kMergeTol) {
    std::sort(iv.begin(), iv.end(),
              [](const Interval& a, const Interval& b) { return a.left < b.left; });
    IntervalSet out;
    for (const Interval& b : iv) {
      if (b.right < b.left) throw std::invalid_argument("interval: right < left");
      if (!out.iv_.empty() && b.left <= out.iv_.back().right + merge_tol) {
        out.iv_.back().right = std::max(out.iv_.back().right, b.right);
      } else {
        out.iv_.push_back(b);
      }
    }
    return out;
  }

  std::size_t size() const { return iv_.size(); }
  bool empty() const { return iv_.empty(); }
  const Interval& operator[](std::size_t i) const { return iv_[i]; }
  const std::vector<Interval>& intervals() const { return iv_; }

  double measure() const {
    double m = 0.0;
    for (const Interval& b : iv_) m += b.right - b.left;
    return m;
  }

  double hull_left() const { return iv_.front().left; }
  double hull_right() const { return iv_.back().right; }
  double diameter() const { return empty() ? 0.0 : hull_right() - hull_left(); }

  double min_width() const {
    double w = diameter();
    for (const Interval& b : iv_)
      if (b.right > b.left) w = std::min(w, b.right - b.left);
    return w;
  }

  bool contains(double x, double slack = 0.0) const {
    for (const Interval& b : iv_)
      if (x >= b.left - slack && x <= b.right + slack) return true;
    return false;
  }

  // Every interval of *this fits inside one interval of other, up to slack.
  bool subset_of(const IntervalSet& other, double slack) const {
    for (const Interval& a : iv_) {
      bool ok = false;
      for (const Interval& b : other.iv_) {
        if (a.left >= b.left - slack && a.right <= b.right + slack) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  static IntervalSet unite(const IntervalSet& a, const IntervalSet& b,
                           double merge_tol = kMergeTol) {
    std::vector<Interval> all = a.iv_;
    all.insert(all.end(), b.iv_.begin(), b.iv_.end());
    return normalized(std::move(all), merge_tol);
  }

  static IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      double lo = std::max(a[i].left, b[j].left);
      double hi = std::min(a[i].right, b[j].right);
      if (lo <= hi) out.push_back({lo, hi});
      if (a[i].right < b[j].right) {
        ++i;
      } else {
        ++j;
      }
    }
    return normalized(std::move(out), 0.0);
  }

  IntervalSet clip(double lo, double hi) const {
    std::vector<Interval> out;
    for (const Interval& b : iv_) {
      double l = std::max(b.left, lo);
      double r = std::min(b.right, hi);
      if (l <= r) out.push_back({l, r});
    }
    return normalized(std::move(out), 0.0);
  }

 private:
  std::vector<Interval> iv_;
};

}  // namespace fibspec
