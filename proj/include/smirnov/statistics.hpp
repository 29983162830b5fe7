#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "smirnov/core.hpp"

namespace smirnov {

// Which definitional clause made a pair count. A pair may carry several.
enum InversionCase : std::uint8_t {
  // sminv
  kFirstLetter = 1u << 0,       // w_j starts its block
  kBiggerEntry = 1u << 1,       // w_{j-1} > w_i inside the block
  kEqualThenFirst = 1u << 2,    // i != j-1, w_{j-1} = w_i starts its block
  kEqualThenBigger = 1u << 3,   // i != j-1, w_{j-2} > w_{j-1} = w_i
  // sdinv
  kDiagRight = 1u << 4,         // i not a peak, i < j, equal heights
  kDiagLeft = 1u << 5,          // i not a peak, i > j+1, height offset one
  kDiagPeak = 1u << 6,          // i a peak and (i,j) an sminversion
};

std::string case_tags(std::uint8_t mask);

struct InversionPair {
  std::size_t i;  // 1-based
  std::size_t j;  // 1-based
  std::uint8_t cases;
  friend bool operator==(const InversionPair&, const InversionPair&) = default;
};

struct InversionReport {
  std::vector<InversionPair> pairs;  // sorted by (i, j)
  std::size_t count = 0;

  bool contains(std::size_t i, std::size_t j) const;
};

InversionReport sminv(const SegmentedSmirnovWord& w);
std::size_t sminv_count(const SegmentedSmirnovWord& w);
// 0-based predicate for the pair (i, j), i < j.
std::uint8_t sminv_cases(const SegmentedSmirnovWord& w, std::size_t i, std::size_t j);

// Letters smaller than m between start_m(i) and i (1-based i).
std::size_t height(const SegmentedSmirnovWord& w, Letter m, std::size_t i);

InversionReport sdinv(const SegmentedSmirnovWord& w);
std::size_t sdinv_count(const SegmentedSmirnovWord& w);

enum class Statistic { sminv, sdinv };
std::size_t statistic(const SegmentedSmirnovWord& w, Statistic s);
std::string_view statistic_name(Statistic s);
Statistic parse_statistic(std::string_view name);

// Ordered sequence of multisets, each stored sorted ascending.
class OrderedMultisetPartition {
 public:
  OrderedMultisetPartition() = default;
  explicit OrderedMultisetPartition(std::vector<std::vector<Letter>> blocks);

  const std::vector<std::vector<Letter>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  bool is_set_partition() const;
  std::string to_string() const;

  friend bool operator==(const OrderedMultisetPartition&, const OrderedMultisetPartition&) = default;
  friend auto operator<=>(const OrderedMultisetPartition&, const OrderedMultisetPartition&) = default;

 private:
  std::vector<std::vector<Letter>> blocks_;
};

OrderedMultisetPartition project(const SegmentedSmirnovWord& w);

// Both throw std::invalid_argument on a block with a repeated element.
std::size_t omp_inv(const OrderedMultisetPartition& p);
std::size_t omp_dinv(const OrderedMultisetPartition& p);

// OP(mu, r): every set-block ordered partition of the content mu with r blocks.
std::vector<OrderedMultisetPartition> enumerate_ordered_set_partitions(const WeakComposition& mu, int r);

// Word whose blocks list the blocks of p in increasing (or decreasing) order.
SegmentedSmirnovWord increasing_block_word(const OrderedMultisetPartition& p);
SegmentedSmirnovWord decreasing_block_word(const OrderedMultisetPartition& p);

}  // namespace smirnov
