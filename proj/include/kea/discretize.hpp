#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace kea {

using CutPoints = std::vector<double>;

namespace detail {

inline double entropy2(long long a, long long b) {
  if (a == 0 || b == 0) return 0.0;
  double total = static_cast<double>(a + b);
  double pa = a / total;
  double pb = b / total;
  return -pa * std::log2(pa) - pb * std::log2(pb);
}

struct LabeledValue {
  double value;
  bool positive;
};

// Recursive entropy minimization over boundary points with the
// Fayyad-Irani minimum-description-length stopping test.
inline void mdl_split(std::span<const LabeledValue> data, CutPoints* cuts) {
  const std::size_t n = data.size();
  long long pos = 0, neg = 0;
  for (const LabeledValue& d : data) (d.positive ? pos : neg)++;
  if (pos == 0 || neg == 0 || n < 2) return;

  // Purity of each run of equal values; a split between two runs is only
  // worth evaluating when the runs are not both pure with the same class.
  std::vector<char> run_class;   // 'p', 'n' or 'm' per run
  std::vector<std::size_t> run_end;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    bool has_pos = false, has_neg = false;
    while (j < n && data[j].value == data[i].value) {
      (data[j].positive ? has_pos : has_neg) = true;
      ++j;
    }
    run_class.push_back(has_pos && has_neg ? 'm' : (has_pos ? 'p' : 'n'));
    run_end.push_back(j);
    i = j;
  }

  const double total_entropy = entropy2(pos, neg);
  double best_weighted = 0.0;
  std::size_t best_split = 0;  // index of the first element right of the cut
  long long best_lp = 0, best_ln = 0;
  bool found = false;

  long long left_pos = 0, left_neg = 0;
  std::size_t run = 0, next = 0;
  for (std::size_t i = 0; i + 1 < run_end.size(); ++i) {
    for (; next < run_end[i]; ++next) (data[next].positive ? left_pos : left_neg)++;
    run = i;
    if (run_class[run] != 'm' && run_class[run] == run_class[run + 1]) continue;
    std::size_t split = run_end[i];
    long long right_pos = pos - left_pos, right_neg = neg - left_neg;
    double weighted =
        (static_cast<double>(left_pos + left_neg) / n) * entropy2(left_pos, left_neg) +
        (static_cast<double>(right_pos + right_neg) / n) * entropy2(right_pos, right_neg);
    if (!found || weighted < best_weighted - 1e-12) {
      found = true;
      best_weighted = weighted;
      best_split = split;
      best_lp = left_pos;
      best_ln = left_neg;
    }
  }
  if (!found) return;

  double gain = total_entropy - best_weighted;
  int k1 = (best_lp > 0) + (best_ln > 0);
  int k2 = (pos - best_lp > 0) + (neg - best_ln > 0);
  double e1 = entropy2(best_lp, best_ln);
  double e2 = entropy2(pos - best_lp, neg - best_ln);
  double delta = std::log2(7.0) - (2.0 * total_entropy - k1 * e1 - k2 * e2);
  double threshold = (std::log2(static_cast<double>(n) - 1.0) + delta) / static_cast<double>(n);
  if (gain <= threshold) return;

  cuts->push_back((data[best_split - 1].value + data[best_split].value) / 2.0);
  mdl_split(data.subspan(0, best_split), cuts);
  mdl_split(data.subspan(best_split), cuts);
}

}  // namespace detail

// Learns cut points from labeled feature values via supervised MDL
// discretization. Ties between equal-entropy cuts go to the smallest cut
// value; an empty or single-class input yields no cuts (one level).
inline CutPoints fit_discretization(std::span<const double> values, const std::vector<bool>& labels) {
  if (values.size() != labels.size())
    throw std::invalid_argument("fit_discretization: values and labels differ in length");
  std::vector<detail::LabeledValue> data(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) data[i] = {values[i], labels[i]};
  std::sort(data.begin(), data.end(), [](const detail::LabeledValue& a, const detail::LabeledValue& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.positive < b.positive;
  });
  CutPoints cuts;
  detail::mdl_split(data, &cuts);
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

// Maps a value to its 1-based level. Level i covers [cut[i-2], cut[i-1]),
// with open ends below the first and at or above the last cut.
inline int apply_discretization(const CutPoints& cuts, double value) {
  if (std::isnan(value)) throw std::invalid_argument("apply_discretization: NaN feature value");
  auto it = std::upper_bound(cuts.begin(), cuts.end(), value);
  return static_cast<int>(it - cuts.begin()) + 1;
}

inline int level_count(const CutPoints& cuts) { return static_cast<int>(cuts.size()) + 1; }

}  // namespace kea
