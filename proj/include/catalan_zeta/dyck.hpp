#pragma once

// Dyck paths, their area sequences, and the classical statistics
// (area, dinv, bounce, rises, returns).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catalan_zeta/errors.hpp"

namespace catalan_zeta {

enum class Step : std::uint8_t { North = 0, East = 1 };

inline char step_char(Step s) { return s == Step::North ? 'N' : 'E'; }

class DyckPath;
DyckPath validate_path(std::vector<Step> steps);

/// Lattice path from (0,0) to (n,n) with unit north/east steps that never
/// falls below the diagonal. The empty path (n = 0) is a valid instance.
/// Ordering is lexicographic with North < East.
class DyckPath {
 public:
  DyckPath() = default;

  const std::vector<Step>& steps() const noexcept { return steps_; }
  int semilength() const noexcept { return static_cast<int>(steps_.size()) / 2; }
  bool empty() const noexcept { return steps_.empty(); }

  std::string str() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) s.push_back(step_char(st));
    return s;
  }

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  friend DyckPath validate_path(std::vector<Step> steps);
  explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::vector<Step> steps_;
};

/// Checks balance first, then the diagonal condition. Indices in messages
/// are 1-based.
inline DyckPath validate_path(std::vector<Step> steps) {
  const auto norths = std::count(steps.begin(), steps.end(), Step::North);
  const auto easts = static_cast<long>(steps.size()) - norths;
  if (norths != easts)
    throw UnbalancedPath("path has " + std::to_string(norths) + " north and " +
                         std::to_string(easts) + " east steps");
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] == Step::North ? 1 : -1;
    if (height < 0)
      throw BelowDiagonal("path dips below the diagonal at index " + std::to_string(i + 1));
  }
  return DyckPath(std::move(steps));
}

/// Accepts N/E, the aliases U/D, and 1/0 (case-insensitive); whitespace is
/// skipped. The empty string denotes the empty path.
inline DyckPath parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) continue;
    switch (std::toupper(c)) {
      case 'N':
      case 'U':
      case '1':
        steps.push_back(Step::North);
        break;
      case 'E':
      case 'D':
      case '0':
        steps.push_back(Step::East);
        break;
      default:
        throw InvalidFormat("unexpected path character '" + std::string(1, text[i]) +
                            "' at index " + std::to_string(i + 1));
    }
  }
  return validate_path(std::move(steps));
}

class AreaSequence;
AreaSequence area_sequence_from_entries(std::vector<int> entries);

/// Integer sequence a_1..a_n with a_1 = 0 and a_{i+1} <= a_i + 1. These are
/// exactly the area sequences of Dyck paths; entry a_i counts the full cells
/// between the i-th north step and the diagonal.
class AreaSequence {
 public:
  AreaSequence() = default;

  const std::vector<int>& entries() const noexcept { return entries_; }
  int length() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(entries_[i]);
    }
    return s;
  }

  friend auto operator<=>(const AreaSequence&, const AreaSequence&) = default;

 private:
  friend AreaSequence area_sequence_from_entries(std::vector<int> entries);
  explicit AreaSequence(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::vector<int> entries_;
};

inline AreaSequence area_sequence_from_entries(std::vector<int> entries) {
  if (!entries.empty() && entries.front() != 0)
    throw NotAreaSequence("entry at index 1 is " + std::to_string(entries.front()) +
                          ", expected 0");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0)
      throw NotAreaSequence("negative entry at index " + std::to_string(i + 1));
    if (i + 1 < entries.size() && entries[i + 1] > entries[i] + 1)
      throw NotAreaSequence("rise greater than one at index " + std::to_string(i + 2));
  }
  return AreaSequence(std::move(entries));
}

/// a_i = i - x_i - 1 where x_i is the number of east steps before the i-th
/// north step.
inline AreaSequence area_sequence_of(const DyckPath& path) {
  std::vector<int> entries;
  entries.reserve(path.semilength());
  int norths = 0, easts = 0;
  for (Step s : path.steps()) {
    if (s == Step::North) {
      ++norths;
      entries.push_back(norths - easts - 1);
    } else {
      ++easts;
    }
  }
  return area_sequence_from_entries(std::move(entries));
}

inline DyckPath path_from_area_sequence(const AreaSequence& a) {
  const int n = a.length();
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  int easts = 0;
  for (int i = 1; i <= n; ++i) {
    const int x = i - a.entries()[i - 1] - 1;  // east steps before the i-th north
    for (; easts < x; ++easts) steps.push_back(Step::East);
    steps.push_back(Step::North);
  }
  for (; easts < n; ++easts) steps.push_back(Step::East);
  return validate_path(std::move(steps));
}

/// Number of full cells between the path and the diagonal.
inline int area(const DyckPath& path) {
  int total = 0, norths = 0, easts = 0;
  for (Step s : path.steps()) {
    if (s == Step::North) {
      ++norths;
      total += norths - easts - 1;
    } else {
      ++easts;
    }
  }
  return total;
}

/// Count of index pairs k < l with a_k - a_l in {0, 1}.
inline int dinv(const DyckPath& path) {
  const auto a = area_sequence_of(path).entries();
  int total = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t l = k + 1; l < a.size(); ++l) {
      const int diff = a[k] - a[l];
      if (diff == 0 || diff == 1) ++total;
    }
  return total;
}

/// Length of the initial north run.
inline int rises(const DyckPath& path) {
  int r = 0;
  for (Step s : path.steps()) {
    if (s != Step::North) break;
    ++r;
  }
  return r;
}

/// Number of diagonal touch points after the start, equivalently the number
/// of zero entries in the area sequence.
inline int returns(const DyckPath& path) {
  int zeros = 0, norths = 0, easts = 0;
  for (Step s : path.steps()) {
    if (s == Step::North) {
      ++norths;
      if (norths - easts - 1 == 0) ++zeros;
    } else {
      ++easts;
    }
  }
  return zeros;
}

/// returns(path) - 1 for nonempty paths, 0 for the empty path.
inline int inner_touch_points(const DyckPath& path) {
  return path.empty() ? 0 : returns(path) - 1;
}

/// Bounce statistic. The bounce path starts at (0,0), travels north as far
/// as the path allows, turns east to the diagonal, and repeats; with
/// H(x) = number of north steps before the (x+1)-st east step, its diagonal
/// touch points are the iterates j_{t+1} = H(j_t) from j_0 = 0. The bounce
/// value is the sum of n - j over the inner touch points.
inline int bounce(const DyckPath& path) {
  const int n = path.semilength();
  if (n == 0) return 0;
  std::vector<int> h(static_cast<std::size_t>(n));
  int norths = 0, easts = 0;
  for (Step s : path.steps()) {
    if (s == Step::North) {
      ++norths;
    } else {
      h[static_cast<std::size_t>(easts)] = norths;
      ++easts;
    }
  }
  int total = 0;
  // H is strictly increasing along the iteration, so this terminates
  for (int j = h[0]; j < n; j = h[static_cast<std::size_t>(j)]) total += n - j;
  return total;
}

/// Catalan numbers by the standard convolution; exact for n <= 35.
inline std::uint64_t catalan_number(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::uint64_t sum = 0;
    for (int i = 0; i < m; ++i) sum += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    c[static_cast<std::size_t>(m)] = sum;
  }
  return c[static_cast<std::size_t>(n)];
}

/// Streams all Dyck paths of a given semilength in lexicographic order
/// (North < East): first N^n E^n, last (NE)^n. Instances are independent;
/// there is no shared state.
class DyckPathEnumerator {
 public:
  explicit DyckPathEnumerator(int semilength) : n_(semilength) {
    if (semilength < 0) throw InvalidFormat("semilength must be nonnegative");
    cur_.assign(static_cast<std::size_t>(2 * n_), Step::East);
    for (int i = 0; i < n_; ++i) cur_[static_cast<std::size_t>(i)] = Step::North;
  }

  std::optional<DyckPath> next() {
    if (done_) return std::nullopt;
    if (first_) {
      first_ = false;
      return validate_path(cur_);
    }
    if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    return validate_path(cur_);
  }

 private:
  // Successor in lexicographic order: flip the rightmost north step that may
  // become east, then refill the suffix with the smallest valid completion.
  bool advance() {
    int pn = n_, pe = n_;  // step counts in cur_[0..i) while scanning down
    for (int i = static_cast<int>(cur_.size()) - 1; i >= 0; --i) {
      const auto ui = static_cast<std::size_t>(i);
      if (cur_[ui] == Step::North)
        --pn;
      else
        --pe;
      if (cur_[ui] == Step::North && pe + 1 <= pn) {
        cur_[ui] = Step::East;
        std::size_t pos = ui + 1;
        for (int k = 0; k < n_ - pn; ++k) cur_[pos++] = Step::North;
        for (int k = 0; k < n_ - pe - 1; ++k) cur_[pos++] = Step::East;
        return true;
      }
    }
    return false;
  }

  int n_;
  bool first_ = true;
  bool done_ = false;
  std::vector<Step> cur_;
};

inline std::vector<DyckPath> all_paths(int semilength) {
  std::vector<DyckPath> out;
  DyckPathEnumerator e(semilength);
  while (auto p = e.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace catalan_zeta
