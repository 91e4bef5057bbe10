#pragma once

// The zeta map on Dyck paths and its inverse. zeta carries dinv to area and
// area to bounce; it is assembled from the value histogram of the area
// sequence ("bounce counts") and one interleaving word per adjacent pair of
// values ("rectangle words").

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "catalan_zeta/dyck.hpp"
#include "catalan_zeta/errors.hpp"

namespace catalan_zeta {

class BounceCounts;
BounceCounts bounce_counts_from_values(std::vector<int> counts);

/// Value histogram d_1..d_m of an area sequence: d_i is the number of
/// entries equal to i-1. Every d_i is positive because the values of an
/// area sequence form an interval starting at 0.
class BounceCounts {
 public:
  BounceCounts() = default;

  const std::vector<int>& counts() const noexcept { return counts_; }
  int blocks() const noexcept { return static_cast<int>(counts_.size()); }
  int total() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(counts_[i]);
    }
    return s;
  }

  friend auto operator<=>(const BounceCounts&, const BounceCounts&) = default;

 private:
  friend BounceCounts bounce_counts_from_values(std::vector<int> counts);
  explicit BounceCounts(std::vector<int> counts) : counts_(std::move(counts)) {}

  std::vector<int> counts_;
};

inline BounceCounts bounce_counts_from_values(std::vector<int> counts) {
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] < 1)
      throw InvalidFormat("bounce count at index " + std::to_string(i + 1) +
                          " must be positive");
  return BounceCounts(std::move(counts));
}

inline BounceCounts bounce_counts(const AreaSequence& a) {
  if (a.empty()) return {};
  const int m = *std::max_element(a.entries().begin(), a.entries().end()) + 1;
  std::vector<int> d(static_cast<std::size_t>(m), 0);
  for (int v : a.entries()) ++d[static_cast<std::size_t>(v)];
  return bounce_counts_from_values(std::move(d));
}

/// The staircase N^{d_1} E^{d_1} N^{d_2} E^{d_2} ... built from the counts.
inline DyckPath bounce_path_of_counts(const BounceCounts& d) {
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(d.total()));
  for (int block : d.counts()) {
    for (int i = 0; i < block; ++i) steps.push_back(Step::North);
    for (int i = 0; i < block; ++i) steps.push_back(Step::East);
  }
  return validate_path(std::move(steps));
}

/// Rectangle word R_k for k = 1..m-1: scan the area sequence left to right
/// and record East for each entry k-1, North for each entry k. For a valid
/// area sequence every rectangle word begins with East, because the first
/// k-1 appears before the first k.
inline std::vector<std::vector<Step>> rectangle_words(const AreaSequence& a) {
  const BounceCounts d = bounce_counts(a);
  std::vector<std::vector<Step>> rects;
  for (int k = 1; k < d.blocks(); ++k) {
    std::vector<Step> r;
    r.reserve(static_cast<std::size_t>(d.counts()[static_cast<std::size_t>(k - 1)] +
                                       d.counts()[static_cast<std::size_t>(k)]));
    for (int v : a.entries()) {
      if (v == k - 1)
        r.push_back(Step::East);
      else if (v == k)
        r.push_back(Step::North);
    }
    rects.push_back(std::move(r));
  }
  return rects;
}

/// zeta image: N^{d_1}, then the rectangle words R_1..R_{m-1}, then E^{d_m}.
inline DyckPath zeta(const DyckPath& path) {
  const AreaSequence a = area_sequence_of(path);
  const BounceCounts d = bounce_counts(a);
  std::vector<Step> steps;
  steps.reserve(path.steps().size());
  if (d.blocks() > 0) {
    for (int i = 0; i < d.counts().front(); ++i) steps.push_back(Step::North);
    for (auto& r : rectangle_words(a))
      steps.insert(steps.end(), r.begin(), r.end());
    for (int i = 0; i < d.counts().back(); ++i) steps.push_back(Step::East);
  }
  return validate_path(std::move(steps));
}

/// Inverse of zeta. The image is parsed back into its rectangle words:
/// d_1 is the length of the initial north run, and each following segment
/// is the shortest one holding exactly d_k east steps, extended through any
/// norths up to the next east step. A segment without norths is the final
/// east run. The area sequence is then rebuilt value by value: the k's
/// sitting between the j-th and (j+1)-st east of R_k go immediately after
/// the j-th occurrence of k-1, which pins them down because in the
/// subsequence of values <= k every k follows a k-1 or another k.
inline DyckPath zeta_inverse(const DyckPath& image) {
  const auto& s = image.steps();
  if (s.empty()) return image;

  std::size_t pos = 0;
  int d1 = 0;
  while (pos < s.size() && s[pos] == Step::North) {
    ++d1;
    ++pos;
  }

  std::vector<std::vector<Step>> rects;
  int d_prev = d1;
  while (true) {
    std::vector<Step> seg;
    int easts = 0;
    while (pos < s.size() && easts < d_prev) {
      if (s[pos] == Step::East) ++easts;
      seg.push_back(s[pos]);
      ++pos;
    }
    if (easts < d_prev)
      throw NotZetaImageShape("ran out of steps while reading a segment of " +
                              std::to_string(d_prev) + " east steps");
    while (pos < s.size() && s[pos] == Step::North) {
      seg.push_back(s[pos]);
      ++pos;
    }
    const int norths = static_cast<int>(
        std::count(seg.begin(), seg.end(), Step::North));
    if (norths == 0) {
      if (pos != s.size())
        throw NotZetaImageShape("steps remain after the final east run");
      break;
    }
    if (seg.front() != Step::East)
      throw NotZetaImageShape("rectangle word must begin with an east step");
    rects.push_back(std::move(seg));
    d_prev = norths;
  }

  std::vector<int> a;
  if (rects.empty()) {
    a.assign(static_cast<std::size_t>(d1), 0);
  } else {
    for (Step st : rects.front()) a.push_back(st == Step::North ? 1 : 0);
    for (std::size_t r = 1; r < rects.size(); ++r) {
      const int k = static_cast<int>(r) + 1;
      int j = 0;  // easts seen so far in R_k
      std::size_t idx = 0;
      while (idx < rects[r].size()) {
        if (rects[r][idx] == Step::East) {
          ++j;
          ++idx;
          continue;
        }
        int run = 0;
        while (idx < rects[r].size() && rects[r][idx] == Step::North) {
          ++run;
          ++idx;
        }
        if (j == 0)
          throw NotZetaImageShape("rectangle word must begin with an east step");
        // locate the j-th occurrence of k-1; insertions of k cannot shift it
        int count = 0;
        std::size_t at = 0;
        for (; at < a.size(); ++at)
          if (a[at] == k - 1 && ++count == j) break;
        if (count != j)
          throw NotZetaImageShape("segment references a missing occurrence of value " +
                                  std::to_string(k - 1));
        a.insert(a.begin() + static_cast<std::ptrdiff_t>(at) + 1,
                 static_cast<std::size_t>(run), k);
      }
    }
  }

  try {
    return path_from_area_sequence(area_sequence_from_entries(std::move(a)));
  } catch (const NotAreaSequence& e) {
    throw NotZetaImageShape(std::string("rebuilt sequence is not an area sequence: ") +
                            e.what());
  }
}

/// #{i : i+1 occurs in a, and the last i precedes the first i+1}; for a
/// valid area sequence i ranges over 0..max-1.
inline int adjacent_separation_count(const AreaSequence& a) {
  if (a.empty()) return 0;
  const int m = *std::max_element(a.entries().begin(), a.entries().end()) + 1;
  std::vector<int> first(static_cast<std::size_t>(m), -1), last(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < a.length(); ++i) {
    const auto v = static_cast<std::size_t>(a.entries()[static_cast<std::size_t>(i)]);
    if (first[v] < 0) first[v] = i;
    last[v] = i;
  }
  int count = 0;
  for (int i = 0; i + 1 < m; ++i)
    if (last[static_cast<std::size_t>(i)] < first[static_cast<std::size_t>(i + 1)]) ++count;
  return count;
}

/// The number of zero entries in the area sequence equals rises(zeta(path)).
inline bool zeros_to_rises_holds(const DyckPath& path) {
  const AreaSequence a = area_sequence_of(path);
  const int zeros = static_cast<int>(
      std::count(a.entries().begin(), a.entries().end(), 0));
  return zeros == rises(zeta(path));
}

/// adjacent_separation_count(area sequence) equals the inner touch points of
/// the image; in particular the area sequence satisfies (C3) exactly when
/// the image returns to the diagonal only at its end.
inline bool c3_to_single_return_holds(const DyckPath& path) {
  return adjacent_separation_count(area_sequence_of(path)) ==
         inner_touch_points(zeta(path));
}

}  // namespace catalan_zeta
