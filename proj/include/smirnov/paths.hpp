#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "smirnov/core.hpp"

namespace smirnov {

enum class Step : char { north = 'N', east = 'E' };

// A labelled Dyck path with decorated rises (*) and decorated contractible
// valleys. Decoration indices are 1-based indices of north steps.
class DecoratedLabelledDyckPath {
 public:
  DecoratedLabelledDyckPath() = default;
  // Throws std::invalid_argument if any invariant fails.
  DecoratedLabelledDyckPath(std::vector<Step> steps, std::vector<Letter> labels, std::vector<std::size_t> decorated_rises,
                            std::vector<std::size_t> decorated_valleys);

  std::size_t size() const { return labels_.size(); }
  const std::vector<Step>& steps() const { return steps_; }
  const std::vector<Letter>& labels() const { return labels_; }
  const std::vector<std::size_t>& decorated_rises() const { return rises_; }
  const std::vector<std::size_t>& decorated_valleys() const { return valleys_; }

  bool is_rise(std::size_t i) const;  // 1-based north index
  bool is_valley(std::size_t i) const;
  bool is_contractible_valley(std::size_t i) const;

  std::string step_string() const;
  // "steps=NNEE;labels=1,2;rises=2;valleys="
  std::string to_string() const;
  static DecoratedLabelledDyckPath parse(std::string_view text);
  // Grid drawing, top row first; labels in the cell right of each north step,
  // '*' or 'o' in the cell left of a decorated rise or valley.
  std::string ascii_grid() const;

  friend bool operator==(const DecoratedLabelledDyckPath&, const DecoratedLabelledDyckPath&) = default;

 private:
  std::vector<Step> steps_;
  std::vector<Letter> labels_;
  std::vector<std::size_t> rises_;
  std::vector<std::size_t> valleys_;
  std::vector<std::size_t> north_pos_;  // step index of each north step
};

std::vector<std::size_t> area_word(const DecoratedLabelledDyckPath& d);
std::size_t area(const DecoratedLabelledDyckPath& d);
// Primary plus secondary diagonal inversions minus #decorated valleys.
long path_dinv(const DecoratedLabelledDyckPath& d);

// An area-0 path as blocks of factors. A factor is the label column of one
// N^i E^i piece (strictly increasing). Inside a block, the first factor
// starts on the diagonal undecorated and every later factor starts with a
// decorated valley; every rise is decorated.
class AreaZeroDecoratedPath {
 public:
  using Factor = std::vector<Letter>;
  using Block = std::vector<Factor>;

  AreaZeroDecoratedPath() = default;
  explicit AreaZeroDecoratedPath(std::vector<Block> blocks);
  static AreaZeroDecoratedPath from_path(const DecoratedLabelledDyckPath& d);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const;
  std::size_t decorated_rise_count() const;
  std::size_t decorated_valley_count() const;
  WeakComposition content() const;

  DecoratedLabelledDyckPath to_path() const;
  // Blocks separated by '/', factors by ' ', labels by ','.
  std::string to_string() const;

  friend bool operator==(const AreaZeroDecoratedPath&, const AreaZeroDecoratedPath&) = default;
  friend auto operator<=>(const AreaZeroDecoratedPath&, const AreaZeroDecoratedPath&) = default;

 private:
  std::vector<Block> blocks_;
};

AreaZeroDecoratedPath phi(const SegmentedSmirnovWord& w);
SegmentedSmirnovWord phi_inverse(const AreaZeroDecoratedPath& d);
std::size_t unified_dinv(const AreaZeroDecoratedPath& d);

// Every element of LD_0(mu) with k decorated rises and l decorated valleys,
// generated directly on the path side, sorted.
std::vector<AreaZeroDecoratedPath> enumerate_area_zero_paths(const WeakComposition& mu, int k, int l);

}  // namespace smirnov
