#pragma once

// Words over the nonnegative integers, the five membership conditions
// (A1), (A2), (B1), (C1), (C3), and the adjacent-swap bijection between
// the (A) and (B) families.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "catalan_zeta/dyck.hpp"
#include "catalan_zeta/errors.hpp"

namespace catalan_zeta {

class Word;
Word word_from_entries(std::vector<int> entries);

/// Finite word of nonnegative integers, length at least one.
class Word {
 public:
  const std::vector<int>& entries() const noexcept { return entries_; }
  int length() const noexcept { return static_cast<int>(entries_.size()); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(entries_[i]);
    }
    return s;
  }

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend Word word_from_entries(std::vector<int> entries);
  explicit Word(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::vector<int> entries_;
};

inline Word word_from_entries(std::vector<int> entries) {
  if (entries.empty()) throw InvalidFormat("a word needs at least one entry");
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] < 0)
      throw InvalidFormat("negative entry at index " + std::to_string(i + 1));
  return Word(std::move(entries));
}

namespace detail {

inline int parse_int_token(std::string_view token) {
  std::size_t b = 0, e = token.size();
  while (b < e && std::isspace(static_cast<unsigned char>(token[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(token[e - 1]))) --e;
  int value = 0;
  const auto res = std::from_chars(token.data() + b, token.data() + e, value);
  if (res.ec != std::errc{} || res.ptr != token.data() + e || b == e)
    throw InvalidFormat("bad integer token '" + std::string(token) + "'");
  return value;
}

}  // namespace detail

/// Canonical form is comma-separated ("0,1,2,0,1"). A bare digit string
/// ("01201") is accepted as shorthand when every value fits in one digit.
inline Word parse_word(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  text = text.substr(b, e - b);
  if (text.empty()) throw InvalidFormat("empty word");

  std::vector<int> entries;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const auto token = text.substr(start, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - start);
      entries.push_back(detail::parse_int_token(token));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidFormat("unexpected word character '" + std::string(1, text[i]) +
                            "' at index " + std::to_string(i + 1));
      entries.push_back(text[i] - '0');
    }
  }
  return word_from_entries(std::move(entries));
}

enum class WordProperty { A1, A2, B1, C1, C3 };

inline const char* property_name(WordProperty p) {
  switch (p) {
    case WordProperty::A1: return "A1";
    case WordProperty::A2: return "A2";
    case WordProperty::B1: return "B1";
    case WordProperty::C1: return "C1";
    case WordProperty::C3: return "C3";
  }
  return "?";
}

struct PropertyViolation {
  WordProperty property;
  int index;  // 1-based; for A2/C3 the first index of the offending value
  int value;  // entry at that index; for A2/C3 the value lacking a witness

  std::string describe() const {
    const std::string idx = std::to_string(index);
    const std::string val = std::to_string(value);
    switch (property) {
      case WordProperty::A1:
        return "Property (A1) fails at index " + idx + ": drop greater than one onto value " + val;
      case WordProperty::B1:
        return "Property (B1) fails at index " + idx + ": rise greater than one onto value " + val;
      case WordProperty::C1:
        return "Property (C1) fails: first entry is " + val + ", expected 0";
      case WordProperty::A2:
        return "Property (A2) fails for value " + val + ": first occurrence at index " + idx +
               " is missing a " + std::to_string(value - 1) + " before or after it";
      case WordProperty::C3:
        return "Property (C3) fails for value " + val + ": no " + std::to_string(value - 1) +
               " after the first occurrence at index " + idx;
    }
    return {};
  }
};

/// Membership flags for one word. (A) = (A1) and (A2); (B) = (B1) and (A2);
/// (C) = (C1), (B1) and (C3); (D) = (C1) and (B1). first_violation is the
/// earliest failing index over all five checks, ties broken in the order
/// A1, A2, B1, C1, C3.
struct PropertyReport {
  bool satisfies_a1 = true;
  bool satisfies_a2 = true;
  bool satisfies_b1 = true;
  bool satisfies_c1 = true;
  bool satisfies_c3 = true;
  std::optional<PropertyViolation> first_violation;

  bool satisfies_a() const noexcept { return satisfies_a1 && satisfies_a2; }
  bool satisfies_b() const noexcept { return satisfies_b1 && satisfies_a2; }
  bool satisfies_c() const noexcept { return satisfies_c1 && satisfies_b1 && satisfies_c3; }
  bool satisfies_d() const noexcept { return satisfies_c1 && satisfies_b1; }
};

namespace detail {

// Witness scan shared by (A2) and (C3): at the first occurrence of each
// value k > 0, look for k-1 strictly before and strictly after. Dense
// index tables when values are small, hashed fallback otherwise.
struct WitnessScan {
  std::optional<PropertyViolation> a2;
  std::optional<PropertyViolation> c3;
};

inline WitnessScan witness_scan(const std::vector<int>& a) {
  WitnessScan out;
  const int max_value = a.empty() ? 0 : *std::max_element(a.begin(), a.end());
  const bool dense = max_value <= (1 << 20);

  std::vector<std::int64_t> last_dense;
  std::unordered_map<int, std::size_t> last_sparse;
  if (dense) {
    last_dense.assign(static_cast<std::size_t>(max_value) + 1, -1);
    for (std::size_t i = 0; i < a.size(); ++i)
      last_dense[static_cast<std::size_t>(a[i])] = static_cast<std::int64_t>(i);
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) last_sparse[a[i]] = i;
  }
  const auto last_of = [&](int v) -> std::int64_t {
    if (dense) return last_dense[static_cast<std::size_t>(v)];
    const auto it = last_sparse.find(v);
    return it == last_sparse.end() ? -1 : static_cast<std::int64_t>(it->second);
  };

  std::vector<char> seen_dense;
  std::unordered_set<int> seen_sparse;
  if (dense) seen_dense.assign(static_cast<std::size_t>(max_value) + 1, 0);
  const auto seen = [&](int v) -> bool {
    return dense ? seen_dense[static_cast<std::size_t>(v)] != 0 : seen_sparse.count(v) != 0;
  };
  const auto mark = [&](int v) {
    if (dense)
      seen_dense[static_cast<std::size_t>(v)] = 1;
    else
      seen_sparse.insert(v);
  };

  for (std::size_t i = 0; i < a.size(); ++i) {
    const int k = a[i];
    if (!seen(k)) {
      if (k > 0) {
        const bool left = seen(k - 1);
        const bool right = last_of(k - 1) > static_cast<std::int64_t>(i);
        if (!out.a2 && !(left && right))
          out.a2 = PropertyViolation{WordProperty::A2, static_cast<int>(i + 1), k};
        if (!out.c3 && !right)
          out.c3 = PropertyViolation{WordProperty::C3, static_cast<int>(i + 1), k};
      }
      mark(k);
    }
  }
  return out;
}

inline PropertyReport classify_entries(const std::vector<int>& a) {
  PropertyReport report;
  std::optional<PropertyViolation> va1, vb1, vc1;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (!va1 && a[i + 1] < a[i] - 1)
      va1 = PropertyViolation{WordProperty::A1, static_cast<int>(i + 2), a[i + 1]};
    if (!vb1 && a[i + 1] > a[i] + 1)
      vb1 = PropertyViolation{WordProperty::B1, static_cast<int>(i + 2), a[i + 1]};
  }
  if (!a.empty() && a.front() != 0)
    vc1 = PropertyViolation{WordProperty::C1, 1, a.front()};
  const WitnessScan ws = witness_scan(a);

  report.satisfies_a1 = !va1;
  report.satisfies_a2 = !ws.a2;
  report.satisfies_b1 = !vb1;
  report.satisfies_c1 = !vc1;
  report.satisfies_c3 = !ws.c3;

  for (const auto& cand : {va1, ws.a2, vb1, vc1, ws.c3})
    if (cand && (!report.first_violation || cand->index < report.first_violation->index))
      report.first_violation = cand;
  return report;
}

}  // namespace detail

inline PropertyReport classify(const Word& w) { return detail::classify_entries(w.entries()); }

/// Repeatedly swaps the leftmost adjacent pair that rises by more than one.
/// Maps the (A) family bijectively onto the (B) family; the letter multiset
/// is preserved.
inline Word a_to_b(const Word& w) {
  {
    const PropertyReport r = classify(w);
    if (!r.satisfies_a()) {
      // earliest offending index over the (A1) and (A2) checks, ties to (A1)
      auto v = [&]() -> PropertyViolation {
        std::optional<PropertyViolation> drop;
        for (std::size_t i = 0; i + 1 < w.entries().size(); ++i)
          if (w.entries()[i + 1] < w.entries()[i] - 1) {
            drop = PropertyViolation{WordProperty::A1, static_cast<int>(i + 2),
                                     w.entries()[i + 1]};
            break;
          }
        const auto a2 = detail::witness_scan(w.entries()).a2;
        if (drop && (!a2 || drop->index <= a2->index)) return *drop;
        return *a2;
      }();
      throw NotPropertyA("word does not satisfy Property (A): " + v.describe());
    }
  }
  std::vector<int> a = w.entries();
  // after a swap at (i, i+1) the next violation can only appear at i-1
  std::size_t i = 0;
  while (i + 1 < a.size()) {
    if (a[i + 1] > a[i] + 1) {
      std::swap(a[i], a[i + 1]);
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  return word_from_entries(std::move(a));
}

/// Inverse direction: repeatedly swaps the rightmost adjacent pair that
/// drops by more than one.
inline Word b_to_a(const Word& w) {
  {
    const PropertyReport r = classify(w);
    if (!r.satisfies_b()) {
      // earliest offending index over the (B1) and (A2) checks, ties to (B1)
      auto v = [&]() -> PropertyViolation {
        std::optional<PropertyViolation> rise;
        for (std::size_t i = 0; i + 1 < w.entries().size(); ++i)
          if (w.entries()[i + 1] > w.entries()[i] + 1) {
            rise = PropertyViolation{WordProperty::B1, static_cast<int>(i + 2),
                                     w.entries()[i + 1]};
            break;
          }
        const auto a2 = detail::witness_scan(w.entries()).a2;
        if (rise && (!a2 || rise->index <= a2->index)) return *rise;
        return *a2;
      }();
      throw NotPropertyB("word does not satisfy Property (B): " + v.describe());
    }
  }
  std::vector<int> a = w.entries();
  if (a.size() >= 2) {
    // after a swap at (i, i+1) the next violation can only appear at i+1
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(a.size()) - 2;
    while (i >= 0) {
      const auto ui = static_cast<std::size_t>(i);
      if (a[ui + 1] < a[ui] - 1) {
        std::swap(a[ui], a[ui + 1]);
        i = std::min<std::ptrdiff_t>(i + 1, static_cast<std::ptrdiff_t>(a.size()) - 2);
      } else {
        --i;
      }
    }
  }
  return word_from_entries(std::move(a));
}

/// Streams the words of a given length satisfying Property (A) in
/// lexicographic order. Enumeration walks the prefix tree with the bounds
/// max(0, previous - 1) <= next <= prefix maximum + 1 and keeps the leaves
/// whose right witnesses exist; the bounds force every prefix value set to
/// be an interval starting at 0, so left witnesses hold by construction.
class WordEnumeratorA {
 public:
  explicit WordEnumeratorA(int length) : n_(length) {
    if (length < 1) throw InvalidFormat("word length must be at least 1");
    cur_.assign(static_cast<std::size_t>(length), 0);
  }

  std::optional<Word> next() {
    while (true) {
      if (first_)
        first_ = false;
      else if (!advance_raw())
        return std::nullopt;
      if (detail::classify_entries(cur_).satisfies_a()) return word_from_entries(cur_);
    }
  }

 private:
  bool advance_raw() {
    for (int i = n_ - 1; i >= 1; --i) {
      const auto ui = static_cast<std::size_t>(i);
      const int prefix_max = *std::max_element(cur_.begin(), cur_.begin() + i);
      if (cur_[ui] < prefix_max + 1) {
        ++cur_[ui];
        for (std::size_t j = ui + 1; j < cur_.size(); ++j)
          cur_[j] = std::max(0, cur_[j - 1] - 1);
        return true;
      }
    }
    return false;
  }

  int n_;
  bool first_ = true;
  std::vector<int> cur_;
};

inline std::vector<Word> all_words_a(int length) {
  std::vector<Word> out;
  WordEnumeratorA e(length);
  while (auto w = e.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace catalan_zeta
