#pragma once

// Exhaustive small-size invariant suites behind `verify`, each returning a
// SuiteResult with the minimal counterexample on failure. The maps under
// test can be swapped out (see VerifyOptions), which the tests use to check
// that deliberately broken implementations are caught at small sizes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catalan_zeta/dyck.hpp"
#include "catalan_zeta/errors.hpp"
#include "catalan_zeta/pipeline.hpp"
#include "catalan_zeta/trees.hpp"
#include "catalan_zeta/words.hpp"
#include "catalan_zeta/zeta.hpp"

namespace catalan_zeta {

using PathMap = std::function<DyckPath(const DyckPath&)>;
using WordMap = std::function<Word(const Word&)>;

struct SuiteResult {
  std::string name;
  int bound = 0;               // largest size exercised
  std::uint64_t checked = 0;   // objects examined
  bool passed = true;
  int fail_n = -1;             // size of the minimal counterexample
  std::string counterexample;  // empty when passed
  double millis = 0.0;
};

struct VerifyOptions {
  int max_n = std::numeric_limits<int>::max();
  unsigned seed = 1;
  // Replacements for the maps under test; empty means the real one.
  PathMap zeta_map;
  PathMap zeta_inverse_map;
  WordMap a_to_b_map;
  WordMap b_to_a_map;
};

namespace detail {

struct SuiteFailure {
  int n;
  std::string message;
};

template <typename MsgFn>
void require(bool ok, int n, MsgFn&& message) {
  if (!ok) throw SuiteFailure{n, std::forward<MsgFn>(message)()};
}

// Runs a map under test, turning a domain error into a suite failure that
// names the offending input.
template <typename F>
auto guarded(int n, const char* label, const std::string& input, F&& f) {
  try {
    return std::forward<F>(f)();
  } catch (const DomainError& e) {
    throw SuiteFailure{n, std::string(label) + "(" + input + ") threw " + e.name() + ": " +
                              e.what()};
  }
}

template <typename Body>
SuiteResult run_suite(std::string name, int bound, Body&& body) {
  SuiteResult r;
  r.name = std::move(name);
  r.bound = bound;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const SuiteFailure& f) {
    r.passed = false;
    r.fail_n = f.n;
    r.counterexample = f.message;
  } catch (const std::exception& e) {
    r.passed = false;
    r.counterexample = std::string("unexpected exception: ") + e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

inline PathMap path_map_or(const PathMap& m, DyckPath (*real)(const DyckPath&)) {
  return m ? m : PathMap(real);
}

inline WordMap word_map_or(const WordMap& m, Word (*real)(const Word&)) {
  return m ? m : WordMap(real);
}

// Visits every tuple in {0,...,base-1}^length.
template <typename Fn>
void for_each_tuple(int length, int base, Fn&& fn) {
  std::vector<int> t(static_cast<std::size_t>(length), 0);
  for (;;) {
    fn(t);
    int i = length - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == base - 1) {
      t[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++t[static_cast<std::size_t>(i)];
  }
}

inline int count_zeros(const std::vector<int>& entries) {
  return static_cast<int>(std::count(entries.begin(), entries.end(), 0));
}

// Area sequences of length n whose words additionally satisfy (A2); these
// are exactly the words with property (B).
inline std::vector<Word> all_words_b(int length) {
  std::vector<Word> out;
  DyckPathEnumerator e(length);
  while (auto p = e.next()) {
    Word w = word_from_entries(area_sequence_of(*p).entries());
    if (classify(w).satisfies_b()) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace detail

/// Every path reconstructs from its area sequence and from its text form.
inline SuiteResult verify_path_area_roundtrip(int bound) {
  return detail::run_suite("path-areaseq-roundtrip", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      DyckPathEnumerator e(n);
      while (auto p = e.next()) {
        ++r.checked;
        const AreaSequence a = area_sequence_of(*p);
        detail::require(path_from_area_sequence(a) == *p, n, [&] {
          return "area sequence " + a.str() + " does not rebuild path " + p->str();
        });
        detail::require(area_sequence_from_entries(a.entries()) == a, n, [&] {
          return "validator rejects area sequence " + a.str();
        });
        detail::require(parse_path(p->str()) == *p, n, [&] {
          return "text form does not parse back: " + p->str();
        });
      }
    }
  });
}

/// The lexicographic enumerator emits each path once, in order, with the
/// Catalan number as total count.
inline SuiteResult verify_path_enumeration(int bound) {
  return detail::run_suite("path-enumeration", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      DyckPathEnumerator e(n);
      std::optional<DyckPath> prev;
      std::uint64_t count = 0;
      while (auto p = e.next()) {
        ++r.checked;
        ++count;
        detail::require(!prev || prev->steps() < p->steps(), n, [&] {
          return "enumeration not strictly increasing at " + p->str() + " after " + prev->str();
        });
        prev = std::move(*p);
      }
      detail::require(count == catalan_number(n), n, [&] {
        return "enumerated " + std::to_string(count) + " paths, expected " +
               std::to_string(catalan_number(n));
      });
    }
  });
}

/// area, dinv and bounce have the same distribution over each D_n, and the
/// extreme paths take the known extreme values.
inline SuiteResult verify_dyck_statistics(int bound) {
  return detail::run_suite("dyck-statistics", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      std::vector<int> areas, dinvs, bounces;
      DyckPathEnumerator e(n);
      while (auto p = e.next()) {
        ++r.checked;
        areas.push_back(area(*p));
        dinvs.push_back(dinv(*p));
        bounces.push_back(bounce(*p));
        // column-by-column count of the full cells between path and diagonal
        int cells = 0, norths = 0, easts = 0;
        for (const Step s : p->steps()) {
          if (s == Step::North)
            ++norths;
          else
            cells += norths - ++easts;
        }
        detail::require(cells == area(*p), n, [&] {
          return "cell count " + std::to_string(cells) + " disagrees with area on " + p->str();
        });
        detail::require(n == 0 || (returns(*p) >= 1 && rises(*p) >= 1), n, [&] {
          return "returns or rises vanish on the nonempty path " + p->str();
        });
        detail::require(inner_touch_points(*p) == (n >= 1 ? returns(*p) - 1 : 0), n, [&] {
          return "inner touch points disagree with returns on " + p->str();
        });
      }
      std::sort(areas.begin(), areas.end());
      std::sort(dinvs.begin(), dinvs.end());
      std::sort(bounces.begin(), bounces.end());
      detail::require(areas == dinvs && areas == bounces, n, [&] {
        return "area, dinv and bounce are not equidistributed over semilength " +
               std::to_string(n);
      });
      if (n >= 1) {
        const int maxstat = n * (n - 1) / 2;
        std::vector<Step> stair;
        for (int i = 0; i < n; ++i) stair.push_back(Step::North);
        for (int i = 0; i < n; ++i) stair.push_back(Step::East);
        const DyckPath tall = validate_path(stair);
        std::vector<Step> saw;
        for (int i = 0; i < n; ++i) {
          saw.push_back(Step::North);
          saw.push_back(Step::East);
        }
        const DyckPath flat = validate_path(saw);
        detail::require(area(tall) == maxstat && dinv(tall) == 0 && bounce(tall) == 0, n, [&] {
          return "extreme statistics wrong on " + tall.str();
        });
        detail::require(area(flat) == 0 && dinv(flat) == maxstat && bounce(flat) == maxstat, n,
                        [&] { return "extreme statistics wrong on " + flat.str(); });
      }
    }
  });
}

/// The word enumerator agrees with a brute-force filter at small lengths
/// and with the shifted Catalan count everywhere.
inline SuiteResult verify_word_enumeration(int bound) {
  return detail::run_suite("word-enumeration", bound, [&](SuiteResult& r) {
    for (int n = 1; n <= bound; ++n) {
      const std::vector<Word> words = all_words_a(n);
      detail::require(words.size() == catalan_number(n - 1), n, [&] {
        return "enumerated " + std::to_string(words.size()) + " words of length " +
               std::to_string(n) + ", expected " + std::to_string(catalan_number(n - 1));
      });
      for (std::size_t i = 0; i < words.size(); ++i) {
        ++r.checked;
        detail::require(classify(words[i]).satisfies_a(), n, [&] {
          return "enumerated word violates property (A): " + words[i].str();
        });
        // (A2) forces a leading 0 and a gap-free value set
        const std::set<int> values(words[i].entries().begin(), words[i].entries().end());
        detail::require(words[i].entries().front() == 0 &&
                            *values.rbegin() + 1 == static_cast<int>(values.size()),
                        n, [&] {
                          return "value set of " + words[i].str() +
                                 " is not an interval starting at 0";
                        });
        detail::require(parse_word(words[i].str()) == words[i], n, [&] {
          return "text form does not parse back: " + words[i].str();
        });
        detail::require(i == 0 || words[i - 1].entries() < words[i].entries(), n, [&] {
          return "enumeration not strictly increasing at " + words[i].str();
        });
      }
      if (n <= 6) {
        std::vector<std::vector<int>> brute;
        detail::for_each_tuple(n, n, [&](const std::vector<int>& t) {
          if (detail::classify_entries(t).satisfies_a()) brute.push_back(t);
        });
        detail::require(brute.size() == words.size(), n, [&] {
          return "brute-force filter finds " + std::to_string(brute.size()) +
                 " words, enumerator " + std::to_string(words.size());
        });
        for (std::size_t i = 0; i < brute.size(); ++i)
          detail::require(brute[i] == words[i].entries(), n, [&] {
            return "brute-force and enumerator disagree at position " + std::to_string(i);
          });
      }
    }
  });
}

/// a_to_b sends (A)-words to (B)-words and b_to_a inverts it, in both
/// directions, preserving the multiset of values.
inline SuiteResult verify_swap_roundtrip(int bound, const WordMap& a2b_in = {},
                                         const WordMap& b2a_in = {}) {
  const WordMap a2b = detail::word_map_or(a2b_in, a_to_b);
  const WordMap b2a = detail::word_map_or(b2a_in, b_to_a);
  return detail::run_suite("swap-roundtrip", bound, [&](SuiteResult& r) {
    const auto sorted = [](const Word& w) {
      std::vector<int> v = w.entries();
      std::sort(v.begin(), v.end());
      return v;
    };
    for (int n = 1; n <= bound; ++n) {
      for (const Word& w : all_words_a(n)) {
        ++r.checked;
        const Word b = detail::guarded(n, "a_to_b", w.str(), [&] { return a2b(w); });
        detail::require(classify(b).satisfies_b(), n, [&] {
          return "a_to_b(" + w.str() + ") = " + b.str() + " violates property (B)";
        });
        detail::require(sorted(b) == sorted(w), n, [&] {
          return "a_to_b(" + w.str() + ") = " + b.str() + " changes the multiset of values";
        });
        const Word back = detail::guarded(n, "b_to_a", b.str(), [&] { return b2a(b); });
        detail::require(back == w, n, [&] {
          return "b_to_a(a_to_b(" + w.str() + ")) = " + back.str();
        });
      }
      const std::vector<Word> bwords = detail::all_words_b(n);
      detail::require(bwords.size() == catalan_number(n - 1), n, [&] {
        return std::to_string(bwords.size()) + " words of length " + std::to_string(n) +
               " satisfy property (B), expected " + std::to_string(catalan_number(n - 1));
      });
      for (const Word& b : bwords) {
        ++r.checked;
        const Word w = detail::guarded(n, "b_to_a", b.str(), [&] { return b2a(b); });
        detail::require(classify(w).satisfies_a(), n, [&] {
          return "b_to_a(" + b.str() + ") = " + w.str() + " violates property (A)";
        });
        detail::require(sorted(w) == sorted(b), n, [&] {
          return "b_to_a(" + b.str() + ") = " + w.str() + " changes the multiset of values";
        });
        const Word back = detail::guarded(n, "a_to_b", w.str(), [&] { return a2b(w); });
        detail::require(back == b, n, [&] {
          return "a_to_b(b_to_a(" + b.str() + ")) = " + back.str();
        });
      }
    }
  });
}

/// Applying the swaps at randomly chosen applicable positions always ends
/// in the same word as the fixed leftmost/rightmost strategy.
inline SuiteResult verify_swap_confluence(int bound, unsigned seed) {
  return detail::run_suite("swap-confluence", bound, [&](SuiteResult& r) {
    std::mt19937 rng(seed);
    constexpr int kTrials = 20;
    constexpr int kStepCap = 100000;
    // direction -1: lower the right neighbour (towards property (B) fails);
    // +1 swaps where the right neighbour drops too far (towards (A)).
    const auto random_normalize = [&](std::vector<int> e, int dir, int n) {
      for (int steps = 0;; ++steps) {
        detail::require(steps < kStepCap, n,
                        [&] { return "random swap sequence does not terminate"; });
        std::vector<std::size_t> spots;
        for (std::size_t i = 0; i + 1 < e.size(); ++i) {
          if (dir > 0 ? e[i + 1] > e[i] + 1 : e[i + 1] < e[i] - 1) spots.push_back(i);
        }
        if (spots.empty()) return e;
        std::uniform_int_distribution<std::size_t> pick(0, spots.size() - 1);
        const std::size_t i = spots[pick(rng)];
        std::swap(e[i], e[i + 1]);
      }
    };
    for (int n = 1; n <= bound; ++n) {
      for (const Word& w : all_words_a(n)) {
        const Word target = a_to_b(w);
        for (int t = 0; t < kTrials; ++t) {
          ++r.checked;
          const std::vector<int> got = random_normalize(w.entries(), +1, n);
          detail::require(got == target.entries(), n, [&] {
            return "random swap order on " + w.str() + " ends at " +
                   word_from_entries(got).str() + ", leftmost strategy gives " + target.str();
          });
        }
      }
      for (const Word& b : detail::all_words_b(n)) {
        const Word target = b_to_a(b);
        for (int t = 0; t < kTrials; ++t) {
          ++r.checked;
          const std::vector<int> got = random_normalize(b.entries(), -1, n);
          detail::require(got == target.entries(), n, [&] {
            return "random swap order on " + b.str() + " ends at " +
                   word_from_entries(got).str() + ", rightmost strategy gives " + target.str();
          });
        }
      }
    }
  });
}

/// Properties (B) and (C) agree on every word: brute force over all tuples
/// at small lengths, over all words with unit rises and first entry 0
/// (the only candidates) beyond that.
inline SuiteResult verify_b_equiv_c(int bound) {
  return detail::run_suite("b-equiv-c", bound, [&](SuiteResult& r) {
    for (int n = 1; n <= std::min(bound, 6); ++n) {
      detail::for_each_tuple(n, n, [&](const std::vector<int>& t) {
        ++r.checked;
        const PropertyReport rep = detail::classify_entries(t);
        detail::require(rep.satisfies_b() == rep.satisfies_c(), n, [&] {
          return "properties (B) and (C) disagree on " + word_from_entries(t).str();
        });
      });
    }
    for (int n = 7; n <= bound; ++n) {
      DyckPathEnumerator e(n);
      while (auto p = e.next()) {
        ++r.checked;
        const PropertyReport rep = detail::classify_entries(area_sequence_of(*p).entries());
        detail::require(rep.satisfies_b() == rep.satisfies_c(), n, [&] {
          return "properties (B) and (C) disagree on " + area_sequence_of(*p).str();
        });
      }
    }
  });
}

/// zeta is a bijection on each D_n and zeta_inverse undoes it.
inline SuiteResult verify_zeta_roundtrip(int bound, const PathMap& zmap_in = {},
                                         const PathMap& zinv_in = {}) {
  const PathMap zmap = detail::path_map_or(zmap_in, zeta);
  const PathMap zinv = detail::path_map_or(zinv_in, zeta_inverse);
  return detail::run_suite("zeta-roundtrip", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      std::set<std::string> images;
      DyckPathEnumerator e(n);
      while (auto p = e.next()) {
        ++r.checked;
        const DyckPath image = detail::guarded(n, "zeta", p->str(), [&] { return zmap(*p); });
        detail::require(image.semilength() == n, n, [&] {
          return "zeta(" + p->str() + ") = " + image.str() + " has wrong semilength";
        });
        const DyckPath back =
            detail::guarded(n, "zeta_inverse", image.str(), [&] { return zinv(image); });
        detail::require(back == *p, n, [&] {
          return "zeta_inverse(zeta(" + p->str() + ")) = " + back.str();
        });
        images.insert(image.str());
      }
      detail::require(images.size() == catalan_number(n), n, [&] {
        return "zeta takes only " + std::to_string(images.size()) + " values on semilength " +
               std::to_string(n);
      });
    }
  });
}

/// zeta carries dinv to area and area to bounce.
inline SuiteResult verify_zeta_transport(int bound, const PathMap& zmap_in = {}) {
  const PathMap zmap = detail::path_map_or(zmap_in, zeta);
  return detail::run_suite("zeta-transport", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      DyckPathEnumerator e(n);
      while (auto p = e.next()) {
        ++r.checked;
        const DyckPath image = detail::guarded(n, "zeta", p->str(), [&] { return zmap(*p); });
        detail::require(area(image) == dinv(*p), n, [&] {
          return "area(zeta(" + p->str() + ")) = " + std::to_string(area(image)) +
                 ", dinv = " + std::to_string(dinv(*p));
        });
        detail::require(bounce(image) == area(*p), n, [&] {
          return "bounce(zeta(" + p->str() + ")) = " + std::to_string(bounce(image)) +
                 ", area = " + std::to_string(area(*p));
        });
      }
    }
  });
}

/// Structural facts about zeta images: returns become initial rises, the
/// separation count becomes inner touch points, property (C3) of the area
/// sequence is equivalent to a single return, and bounce comes from the
/// value counts.
inline SuiteResult verify_zeta_properties(int bound) {
  return detail::run_suite("zeta-properties", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      DyckPathEnumerator e(n);
      while (auto p = e.next()) {
        ++r.checked;
        const AreaSequence a = area_sequence_of(*p);
        const DyckPath image = zeta(*p);
        detail::require(zeros_to_rises_holds(*p), n, [&] {
          return "zero count of " + a.str() + " differs from rises of " + image.str();
        });
        detail::require(c3_to_single_return_holds(*p), n, [&] {
          return "property (C3) does not match single return on " + p->str();
        });
        detail::require(rises(image) == detail::count_zeros(a.entries()), n, [&] {
          return "rises(zeta(" + p->str() + ")) = " + std::to_string(rises(image));
        });
        detail::require(inner_touch_points(image) == adjacent_separation_count(a), n, [&] {
          return "inner touch points of " + image.str() + " differ from separation count of " +
                 a.str();
        });
        // each value k > 0 first appears after k - 1, so every eastward scan
        // pass of the image opens with an East step; the inverse parse needs this
        std::map<int, std::size_t> first;
        for (std::size_t i = 0; i < a.entries().size(); ++i) first.emplace(a.entries()[i], i);
        for (const auto& [value, at] : first)
          if (value > 0) {
            const auto below = first.find(value - 1);
            detail::require(below != first.end() && below->second < at, n, [&] {
              return "value " + std::to_string(value) + " shows up before " +
                     std::to_string(value - 1) + " in " + a.str();
            });
          }
        if (n >= 1) {
          const bool c = detail::classify_entries(a.entries()).satisfies_c();
          detail::require(c == (returns(image) == 1), n, [&] {
            return "property (C) of " + a.str() + " does not match returns of " + image.str();
          });
        }
        int weighted = 0;
        const BounceCounts d = bounce_counts(a);
        for (std::size_t i = 0; i < d.counts().size(); ++i)
          weighted += static_cast<int>(i) * d.counts()[i];
        detail::require(bounce(image) == weighted, n, [&] {
          return "bounce(zeta(" + p->str() + ")) differs from the value-count formula";
        });
      }
    }
  });
}

/// zeta_inverse agrees with a brute-force preimage search through the full
/// enumeration of each D_n.
inline SuiteResult verify_zeta_inverse_oracle(int bound, const PathMap& zmap_in = {},
                                              const PathMap& zinv_in = {}) {
  const PathMap zmap = detail::path_map_or(zmap_in, zeta);
  const PathMap zinv = detail::path_map_or(zinv_in, zeta_inverse);
  return detail::run_suite("zeta-inverse-oracle", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      const std::vector<DyckPath> paths = all_paths(n);
      std::vector<DyckPath> images;
      images.reserve(paths.size());
      for (const DyckPath& p : paths)
        images.push_back(detail::guarded(n, "zeta", p.str(), [&] { return zmap(p); }));
      for (const DyckPath& p : paths) {
        ++r.checked;
        // linear scan for the preimage of this path under zeta
        const DyckPath* found = nullptr;
        for (std::size_t i = 0; i < paths.size(); ++i) {
          if (images[i] == p) {
            detail::require(found == nullptr, n, [&] {
              return "two preimages under zeta for " + p.str();
            });
            found = &paths[i];
          }
        }
        detail::require(found != nullptr, n, [&] {
          return "no preimage under zeta for " + p.str();
        });
        const DyckPath back =
            detail::guarded(n, "zeta_inverse", p.str(), [&] { return zinv(p); });
        detail::require(back == *found, n, [&] {
          return "zeta_inverse(" + p.str() + ") = " + back.str() +
                 ", brute-force search finds " + found->str();
        });
      }
    }
  });
}

/// The composite map sends the words of length n with property (A)
/// bijectively onto the paths of semilength n - 1, with the stated inverse.
inline SuiteResult verify_word_path_bijection(int bound, const VerifyOptions& opts = {}) {
  const WordMap a2b = detail::word_map_or(opts.a_to_b_map, a_to_b);
  const WordMap b2a = detail::word_map_or(opts.b_to_a_map, b_to_a);
  const PathMap zmap = detail::path_map_or(opts.zeta_map, zeta);
  const PathMap zinv = detail::path_map_or(opts.zeta_inverse_map, zeta_inverse);
  const bool stock = !opts.a_to_b_map && !opts.b_to_a_map && !opts.zeta_map &&
                     !opts.zeta_inverse_map;
  return detail::run_suite("word-path-bijection", bound, [&](SuiteResult& r) {
    const auto forward = [&](const Word& w, int n) {
      const Word b = detail::guarded(n, "a_to_b", w.str(), [&] { return a2b(w); });
      const AreaSequence a = detail::guarded(n, "area_sequence", b.str(), [&] {
        return area_sequence_from_entries(b.entries());
      });
      const DyckPath pre = path_from_area_sequence(a);
      const DyckPath image = detail::guarded(n, "zeta", pre.str(), [&] { return zmap(pre); });
      detail::require(returns(image) == 1 && rises(image) >= 1, n, [&] {
        return "image " + image.str() + " of " + w.str() +
               " does not form a single arch before stripping";
      });
      return detail::guarded(n, "strip_outer_arch", image.str(),
                             [&] { return strip_outer_arch(image); });
    };
    const auto backward = [&](const DyckPath& p, int n) {
      const DyckPath wrapped = wrap_outer_arch(p);
      const DyckPath pre =
          detail::guarded(n, "zeta_inverse", wrapped.str(), [&] { return zinv(wrapped); });
      const Word w = word_from_entries(area_sequence_of(pre).entries());
      return detail::guarded(n, "b_to_a", w.str(), [&] { return b2a(w); });
    };
    for (int n = 1; n <= bound; ++n) {
      std::set<std::string> outputs;
      for (const Word& w : all_words_a(n)) {
        ++r.checked;
        const DyckPath p = forward(w, n);
        detail::require(p.semilength() == n - 1, n, [&] {
          return "image of " + w.str() + " has semilength " + std::to_string(p.semilength());
        });
        const Word back = backward(p, n);
        detail::require(back == w, n, [&] {
          return "inverse image of " + p.str() + " is " + back.str() + ", expected " + w.str();
        });
        if (stock) {
          detail::require(word_to_path(w) == p && path_to_word(p) == w, n, [&] {
            return "pipeline entry points disagree with the staged composition on " + w.str();
          });
        }
        outputs.insert(p.str());
      }
      detail::require(outputs.size() == catalan_number(n - 1), n, [&] {
        return "images cover " + std::to_string(outputs.size()) + " of " +
               std::to_string(catalan_number(n - 1)) + " paths";
      });
      DyckPathEnumerator e(n - 1);
      while (auto p = e.next()) {
        ++r.checked;
        const Word w = backward(*p, n);
        detail::require(classify(w).satisfies_a(), n, [&] {
          return "inverse image of " + p->str() + " violates property (A): " + w.str();
        });
        const DyckPath round = forward(w, n);
        detail::require(round == *p, n, [&] {
          return "roundtrip of path " + p->str() + " gives " + round.str();
        });
      }
    }
  });
}

/// Trees rebuild from area sequences, parenthesis words and parent arrays,
/// and the parenthesis word coincides with the path.
inline SuiteResult verify_tree_roundtrip(int bound) {
  return detail::run_suite("tree-roundtrip", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      DyckPathEnumerator e(n);
      while (auto p = e.next()) {
        ++r.checked;
        const AreaSequence a = area_sequence_of(*p);
        const PlantedTree t = tree_from_area_sequence(a);
        detail::require(area_sequence_from_tree(t) == a, n, [&] {
          return "tree of " + a.str() + " reads back as " + area_sequence_from_tree(t).str();
        });
        std::string parens = p->str();
        for (char& c : parens) c = c == 'N' ? '(' : ')';
        detail::require(t.parenthesis_str() == parens, n, [&] {
          return "tree traversal gives " + t.parenthesis_str() + ", path is " + parens;
        });
        detail::require(parse_tree(t.parenthesis_str()) == t, n, [&] {
          return "parenthesis form does not parse back: " + t.parenthesis_str();
        });
        detail::require(parse_tree(t.parent_array_str()) == t, n, [&] {
          return "parent array does not parse back: " + t.parent_array_str();
        });
      }
    }
  });
}

/// Root degree counts the zeros and non-root crucial vertices count the
/// separated adjacent value pairs of the area sequence.
inline SuiteResult verify_tree_proposition(int bound) {
  return detail::run_suite("tree-proposition", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      DyckPathEnumerator e(n);
      while (auto p = e.next()) {
        ++r.checked;
        const AreaSequence a = area_sequence_of(*p);
        const PlantedTree t = tree_from_area_sequence(a);
        detail::require(t.root_degree() == detail::count_zeros(a.entries()), n, [&] {
          return "root degree of tree of " + a.str() + " is " + std::to_string(t.root_degree());
        });
        const std::vector<int> crucial = crucial_vertices(t);
        const bool root_crucial = !crucial.empty() && crucial.front() == 0;
        detail::require(root_crucial == (t.root_degree() > 0), n, [&] {
          return "root cruciality wrong on tree of " + a.str();
        });
        const int nonroot = static_cast<int>(crucial.size()) - (root_crucial ? 1 : 0);
        detail::require(nonroot == adjacent_separation_count(a), n, [&] {
          return std::to_string(nonroot) + " non-root crucial vertices on tree of " + a.str() +
                 ", separation count is " + std::to_string(adjacent_separation_count(a));
        });
      }
    }
  });
}

/// The (returns, rises) table of paths equals the (crucial vertices, root
/// degree) table of trees, totals the Catalan number, only depends on the
/// sum of the two parameters, and its p = 1 row and q = 1 column each sum
/// to the previous Catalan number.
inline SuiteResult verify_stat_table(int bound) {
  return detail::run_suite("stat-table", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      ++r.checked;
      const StatTable paths = stat_table_from_paths(n);
      const StatTable trees = stat_table_from_trees(n);
      detail::require(paths == trees, n, [&] {
        return "path and tree tables disagree: " + paths.polynomial_str() + " vs " +
               trees.polynomial_str();
      });
      detail::require(paths.total() == catalan_number(n), n, [&] {
        return "table totals " + std::to_string(paths.total());
      });
      if (n == 0) {
        detail::require(paths.at(0, 0) == 1 && paths.counts().size() == 1, n,
                        [&] { return "degenerate table is " + paths.polynomial_str(); });
        continue;
      }
      std::uint64_t row1 = 0, col1 = 0;
      std::map<int, std::uint64_t> by_sum;
      for (const auto& [key, c] : paths.counts()) {
        detail::require(key.first >= 1 && key.second >= 1, n, [&] {
          return "table key (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                 ") leaves the positive quadrant";
        });
        if (key.first == 1) row1 += c;
        if (key.second == 1) col1 += c;
        const auto it = by_sum.find(key.first + key.second);
        if (it == by_sum.end())
          by_sum.emplace(key.first + key.second, c);
        else
          detail::require(it->second == c, n, [&] {
            return "count at (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                   ") breaks the dependence on the parameter sum";
          });
      }
      detail::require(row1 == catalan_number(n - 1) && col1 == catalan_number(n - 1), n, [&] {
        return "single-return row sums to " + std::to_string(row1) + ", single-rise column to " +
               std::to_string(col1);
      });
    }
  });
}

/// Merging the first two arches is a bijection from paths with at least two
/// returns onto paths with at least two initial rises, shifting the pair
/// (returns, rises) by (-1, +1).
inline SuiteResult verify_speyer_bijection(int bound) {
  return detail::run_suite("speyer-bijection", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      std::set<std::string> images, codomain;
      DyckPathEnumerator e(n);
      while (auto p = e.next()) {
        ++r.checked;
        if (rises(*p) >= 2) codomain.insert(p->str());
        if (returns(*p) < 2) {
          bool threw = false;
          try {
            speyer_step(*p);
          } catch (const TooFewReturns&) {
            threw = true;
          }
          detail::require(threw, n, [&] {
            return "merge accepted " + p->str() + " with fewer than two returns";
          });
          continue;
        }
        const DyckPath q = detail::guarded(n, "speyer_step", p->str(), [&] {
          return speyer_step(*p);
        });
        detail::require(q.semilength() == n && returns(q) == returns(*p) - 1 &&
                            rises(q) == rises(*p) + 1,
                        n, [&] {
                          return "merge of " + p->str() + " gives " + q.str() +
                                 " with wrong statistics";
                        });
        const DyckPath back = detail::guarded(n, "speyer_step_inverse", q.str(), [&] {
          return speyer_step_inverse(q);
        });
        detail::require(back == *p, n, [&] {
          return "split of " + q.str() + " gives " + back.str();
        });
        images.insert(q.str());
      }
      detail::require(images == codomain, n, [&] {
        return "merge image misses paths with two initial rises at semilength " +
               std::to_string(n);
      });
    }
  });
}

/// Through zeta, crucial vertices turn into returns and the root degree
/// into initial rises.
inline SuiteResult verify_tree_zeta_consistency(int bound) {
  return detail::run_suite("tree-zeta-consistency", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      DyckPathEnumerator e(n);
      while (auto p = e.next()) {
        ++r.checked;
        const PlantedTree t = tree_from_area_sequence(area_sequence_of(*p));
        const DyckPath image = zeta(*p);
        detail::require(returns(image) == static_cast<int>(crucial_vertices(t).size()), n, [&] {
          return "returns of " + image.str() + " differ from crucial vertices of the tree of " +
                 p->str();
        });
        detail::require(rises(image) == t.root_degree(), n, [&] {
          return "rises of " + image.str() + " differ from the root degree of the tree of " +
                 p->str();
        });
      }
    }
  });
}

/// The tree operator trades one crucial vertex for one root child and is a
/// bijection from trees with at least two crucial vertices onto trees whose
/// root has at least two children.
inline SuiteResult verify_tree_operator(int bound) {
  return detail::run_suite("tree-operator", bound, [&](SuiteResult& r) {
    for (int n = 0; n <= bound; ++n) {
      std::set<std::string> images, codomain;
      DyckPathEnumerator e(n);
      while (auto p = e.next()) {
        ++r.checked;
        const PlantedTree t = tree_from_area_sequence(area_sequence_of(*p));
        if (t.root_degree() >= 2) codomain.insert(t.parenthesis_str());
        const auto crucial = crucial_vertices(t);
        if (crucial.size() < 2) {
          bool threw = false;
          try {
            tree_operator(t);
          } catch (const TooFewCrucial&) {
            threw = true;
          }
          detail::require(threw, n, [&] {
            return "operator accepted tree " + t.parenthesis_str() +
                   " with fewer than two crucial vertices";
          });
          continue;
        }
        const PlantedTree u = detail::guarded(n, "tree_operator", t.parenthesis_str(), [&] {
          return tree_operator(t);
        });
        detail::require(u.vertex_count() == t.vertex_count() &&
                            crucial_vertices(u).size() == crucial.size() - 1 &&
                            u.root_degree() == t.root_degree() + 1,
                        n, [&] {
                          return "operator on " + t.parenthesis_str() + " gives " +
                                 u.parenthesis_str() + " with wrong statistics";
                        });
        images.insert(u.parenthesis_str());
      }
      detail::require(images == codomain, n, [&] {
        return "operator image misses trees with two root children at " + std::to_string(n) +
               " edges";
      });
    }
  });
}

/// Full battery with the documented default bounds, capped by max_n.
inline std::vector<SuiteResult> run_all(const VerifyOptions& opts = {}) {
  const auto cap = [&](int d) { return std::min(d, opts.max_n); };
  std::vector<SuiteResult> out;
  out.push_back(verify_path_area_roundtrip(cap(10)));
  out.push_back(verify_path_enumeration(cap(10)));
  out.push_back(verify_dyck_statistics(cap(10)));
  out.push_back(verify_word_enumeration(cap(10)));
  out.push_back(verify_swap_roundtrip(cap(8), opts.a_to_b_map, opts.b_to_a_map));
  out.push_back(verify_swap_confluence(cap(7), opts.seed));
  out.push_back(verify_b_equiv_c(cap(8)));
  out.push_back(verify_zeta_roundtrip(cap(8), opts.zeta_map, opts.zeta_inverse_map));
  out.push_back(verify_zeta_transport(cap(10), opts.zeta_map));
  out.push_back(verify_zeta_properties(cap(10)));
  out.push_back(verify_zeta_inverse_oracle(cap(8), opts.zeta_map, opts.zeta_inverse_map));
  out.push_back(verify_word_path_bijection(cap(8), opts));
  out.push_back(verify_tree_roundtrip(cap(10)));
  out.push_back(verify_tree_proposition(cap(10)));
  out.push_back(verify_stat_table(cap(10)));
  out.push_back(verify_speyer_bijection(cap(8)));
  out.push_back(verify_tree_zeta_consistency(cap(10)));
  out.push_back(verify_tree_operator(cap(8)));
  return out;
}

inline bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed; });
}

}  // namespace catalan_zeta
