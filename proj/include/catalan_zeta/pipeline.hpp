#pragma once

// The full chain: words satisfying property (A) correspond to Dyck paths of
// one shorter semilength by swapping to a (B)-word, reading it as an area
// sequence, applying zeta and stripping the enclosing arch.

#include <utility>
#include <vector>

#include "catalan_zeta/dyck.hpp"
#include "catalan_zeta/errors.hpp"
#include "catalan_zeta/words.hpp"
#include "catalan_zeta/zeta.hpp"

namespace catalan_zeta {

/// Removes the outer arch of a path that touches the diagonal only at its
/// endpoints, i.e. N P E becomes P.
inline DyckPath strip_outer_arch(const DyckPath& path) {
  if (path.empty() || returns(path) != 1)
    throw NotSingleReturn("path must touch the diagonal exactly once, got " +
                          std::to_string(returns(path)) + " returns");
  std::vector<Step> inner(path.steps().begin() + 1, path.steps().end() - 1);
  return validate_path(std::move(inner));
}

inline DyckPath wrap_outer_arch(const DyckPath& path) {
  std::vector<Step> steps;
  steps.reserve(path.steps().size() + 2);
  steps.push_back(Step::North);
  steps.insert(steps.end(), path.steps().begin(), path.steps().end());
  steps.push_back(Step::East);
  return validate_path(std::move(steps));
}

struct WordToPathStages {
  Word b_word;
  AreaSequence area;
  DyckPath pre_zeta;
  DyckPath zeta_image;
  DyckPath result;
};

struct PathToWordStages {
  DyckPath wrapped;
  DyckPath preimage;
  AreaSequence area;
  Word result;
};

/// A word of length n satisfying (A) maps to a path of semilength n - 1.
inline WordToPathStages word_to_path_stages(const Word& w) {
  Word b = a_to_b(w);
  AreaSequence area = area_sequence_from_entries(b.entries());
  DyckPath pre = path_from_area_sequence(area);
  DyckPath image = zeta(pre);
  DyckPath result = strip_outer_arch(image);
  return {std::move(b), std::move(area), std::move(pre), std::move(image), std::move(result)};
}

inline DyckPath word_to_path(const Word& w) { return word_to_path_stages(w).result; }

inline PathToWordStages path_to_word_stages(const DyckPath& p) {
  DyckPath wrapped = wrap_outer_arch(p);
  DyckPath preimage = zeta_inverse(wrapped);
  AreaSequence area = area_sequence_of(preimage);
  Word result = b_to_a(word_from_entries(area.entries()));
  return {std::move(wrapped), std::move(preimage), std::move(area), std::move(result)};
}

inline Word path_to_word(const DyckPath& p) { return path_to_word_stages(p).result; }

}  // namespace catalan_zeta
