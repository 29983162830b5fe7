#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smirnov {

// Letters are positive integers. Kept as a plain alias: letters take part in
// comparisons everywhere and a wrapper buys nothing over the validation done
// when a word is constructed.
using Letter = int;

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t index) : std::invalid_argument(what), index_(index) {}
  // 1-based position of the offending item (letter or block), 0 when not applicable.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Finite sequence of positive parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int sum() const { return sum_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  // Partial sums excluding the total, i.e. the associated subset of [n-1].
  std::vector<int> partial_sums() const;
  static Composition from_subset(std::span<const int> subset, int n);

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

// Finite sequence of nonnegative parts, stored with trailing zeros trimmed.
// Entry i is the multiplicity of letter i+1.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> parts);
  static WeakComposition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int sum() const { return sum_; }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  // Parts sorted in decreasing order with zeros dropped.
  WeakComposition sorted_partition() const;
  // mu^-: drops the last nonzero part.
  WeakComposition without_last() const;
  // Sorted multiset {i^{mu_i}}.
  std::vector<Letter> letter_multiset() const;
  std::string to_string() const;

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
  friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

// All partitions of n in decreasing lexicographic order.
std::vector<WeakComposition> partitions_of(int n);
// All weak compositions of n with exactly `parts` entries (before trimming).
std::vector<WeakComposition> weak_compositions_of(int n, int parts);

// A concatenation of Smirnov blocks: adjacent letters inside a block differ,
// equal letters may touch across a block boundary.
class SegmentedSmirnovWord {
 public:
  SegmentedSmirnovWord() = default;
  SegmentedSmirnovWord(std::vector<Letter> letters, Composition shape);
  static SegmentedSmirnovWord from_blocks(const std::vector<std::vector<Letter>>& blocks);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const Composition& shape() const { return shape_; }
  std::size_t block_count() const { return shape_.length(); }
  std::size_t block_of(std::size_t i) const { return block_id_[i]; }
  std::size_t block_start(std::size_t b) const { return starts_[b]; }
  std::span<const Letter> block(std::size_t b) const;
  std::vector<std::vector<Letter>> blocks() const;

  // 0-based positional predicates.
  bool is_initial(std::size_t i) const { return i == starts_[block_id_[i]]; }
  bool is_final(std::size_t i) const { return i + 1 == starts_[block_id_[i]] + static_cast<std::size_t>(shape_[block_id_[i]]); }

  Letter max_letter() const;
  std::size_t ascent_count() const;
  std::size_t descent_count() const;

  // Display form: commas omitted when every letter is a single digit.
  std::string to_string() const;

  friend bool operator==(const SegmentedSmirnovWord& a, const SegmentedSmirnovWord& b) {
    return a.letters_ == b.letters_ && a.shape_ == b.shape_;
  }
  friend auto operator<=>(const SegmentedSmirnovWord& a, const SegmentedSmirnovWord& b) {
    if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
    return a.shape_ <=> b.shape_;
  }

 private:
  std::vector<Letter> letters_;
  Composition shape_;
  std::vector<std::size_t> block_id_;
  std::vector<std::size_t> starts_;
};

SegmentedSmirnovWord parse_word(std::string_view text);
std::string format_word(const SegmentedSmirnovWord& w);

WeakComposition content(const SegmentedSmirnovWord& w);

enum class Role { peak, valley, double_rise, double_fall };
std::string_view role_name(Role r);

struct PositionInfo {
  Role role;
  bool is_initial;
  bool is_final;
  bool is_ascent;   // same block, next letter larger
  bool is_descent;  // same block, next letter smaller
};

// Roles are read off the padded word a(w) = inf w^1 inf w^2 ... w^s inf.
struct PositionProfile {
  std::vector<PositionInfo> positions;  // 0-based
  std::size_t ascents = 0;
  std::size_t descents = 0;
};

PositionProfile classify(const SegmentedSmirnovWord& w);
Role role_at(const SegmentedSmirnovWord& w, std::size_t i);

// Every element of SW(mu) exactly once; letters lexicographic, then shapes
// from finest to coarsest (separator masks read as binary, descending).
void for_each_word(const WeakComposition& mu, const std::function<void(const SegmentedSmirnovWord&)>& visit);
std::vector<SegmentedSmirnovWord> enumerate_words(const WeakComposition& mu);
std::vector<SegmentedSmirnovWord> enumerate_words_by_stat(const WeakComposition& mu, int k, int l);
// All segmented words with letters in [1, bound] whose shape is `shape`.
std::vector<SegmentedSmirnovWord> enumerate_words_of_shape(const Composition& shape, int bound);

// Distinct permutations of a sorted multiset, lexicographic.
std::vector<std::vector<Letter>> multiset_permutations(std::vector<Letter> letters);

enum class InsertionKind { peak, double_fall, double_rise, singleton };
std::string_view insertion_kind_name(InsertionKind k);

// Inserts one occurrence of m, m >= max letter of w. Slots (0-based):
//   peak          separator index in [0, s-2]; requires m > max letter
//   double_fall   block index; block must not start with m
//   double_rise   block index; block must not end with m
//   singleton     gap index in [0, s]
SegmentedSmirnovWord insert_maximal(const SegmentedSmirnovWord& w, InsertionKind kind, std::size_t slot, Letter m);
// 0-based position the inserted letter occupies in the result.
std::size_t insertion_position(const SegmentedSmirnovWord& w, InsertionKind kind, std::size_t slot);
// Number of valid slots for `kind` (ignoring the letter-specific collisions).
std::size_t insertion_slot_count(const SegmentedSmirnovWord& w, InsertionKind kind);
// Removes the letter at position i. An interior letter becomes a block
// separator again, a singleton block disappears, an end letter is dropped.
SegmentedSmirnovWord remove_at(const SegmentedSmirnovWord& w, std::size_t i);

}  // namespace smirnov
