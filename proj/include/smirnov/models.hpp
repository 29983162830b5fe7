#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "smirnov/core.hpp"

namespace smirnov {

// descent count -> (exponent vector of length bound -> number of colorings)
using ColoringTally = std::map<int, std::map<std::vector<int>, std::uint64_t>>;

// Proper colorings of the path graph 1-2-...-n with colors <= bound, i.e.
// one-block Smirnov words, tallied by descents and monomial.
ColoringTally chromatic_path_enumerator(int n, int bound);

// Parallelogram polyomino in a width x height box with labelled cells.
// Paths are strings over {N,E}; cells are (column, row) from the bottom left.
class LabelledPolyomino {
 public:
  using Cell = std::pair<int, int>;

  LabelledPolyomino(std::string upper, std::string lower, std::map<Cell, Letter> labels);

  const std::string& upper() const { return upper_; }
  const std::string& lower() const { return lower_; }
  const std::map<Cell, Letter>& labels() const { return labels_; }
  int width() const { return width_; }
  int height() const { return height_; }
  // Cells whose left border is an upper north step or whose bottom border
  // is a lower east step.
  std::vector<Cell> labelled_cells() const;
  std::size_t cell_count() const;
  // Cells between the paths that carry no label.
  std::size_t area() const;
  // Labels column by column, bottom to top inside a column.
  std::vector<Letter> reading_word() const;
  std::string to_string() const;

  friend bool operator==(const LabelledPolyomino&, const LabelledPolyomino&) = default;
  friend auto operator<=>(const LabelledPolyomino&, const LabelledPolyomino&) = default;

 private:
  std::string upper_;
  std::string lower_;
  std::map<Cell, Letter> labels_;
  int width_ = 0;
  int height_ = 0;
};

// One-block word of length n with k ascents -> area-0 polyomino of size
// (n-k) x (k+1). Throws on a word with more than one block.
LabelledPolyomino smirnov_to_polyomino(const SegmentedSmirnovWord& w);
// Inverse; throws unless the polyomino has area 0.
SegmentedSmirnovWord polyomino_to_smirnov(const LabelledPolyomino& p);
// All area-0 labelled polyominoes of size (n-k) x (k+1) with label content mu,
// built from pairs of lattice paths.
std::vector<LabelledPolyomino> enumerate_area_zero_polyominoes(const WeakComposition& mu, int k);

bool is_231_avoiding(const std::vector<int>& perm);
std::size_t permutation_descents(const std::vector<int>& perm);
std::size_t permutation_ascents(const std::vector<int>& perm);

class NoncrossingPartition {
 public:
  // Throws std::invalid_argument unless blocks partition [n] without crossings.
  NoncrossingPartition(int n, std::vector<std::vector<int>> blocks);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }  // each ascending, ordered by minimum
  std::string to_string() const;

  friend bool operator==(const NoncrossingPartition&, const NoncrossingPartition&) = default;
  friend auto operator<=>(const NoncrossingPartition&, const NoncrossingPartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

std::vector<NoncrossingPartition> enumerate_noncrossing_partitions(int n);
// Blocks by increasing minimum, each written in decreasing order.
std::vector<int> noncrossing_to_permutation(const NoncrossingPartition& p);
// Maximal runs of consecutive decreasing entries.
std::vector<std::vector<int>> decreasing_runs(const std::vector<int>& perm);
NoncrossingPartition permutation_to_noncrossing(const std::vector<int>& perm);

// Number of segmented permutations of size n with sminv 0, for n = 0..n_max.
std::vector<std::uint64_t> zero_sminv_segmented_counts(int n_max);

}  // namespace smirnov
