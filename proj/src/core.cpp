#include "smirnov/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace smirnov {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
    sum_ += p;
  }
}

std::vector<int> Composition::partial_sums() const {
  std::vector<int> out;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    acc += parts_[i];
    out.push_back(acc);
  }
  return out;
}

Composition Composition::from_subset(std::span<const int> subset, int n) {
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> parts;
  int prev = 0;
  for (int s : sorted) {
    if (s <= prev || s >= n) throw std::invalid_argument("Composition::from_subset: subset must be a set inside [1, n-1]");
    parts.push_back(s - prev);
    prev = s;
  }
  if (n > 0) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("WeakComposition: parts must be nonnegative");
    sum_ += p;
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

WeakComposition WeakComposition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&](std::size_t index) {
    if (token.empty()) throw ParseError("weak composition: empty part", index);
    for (char ch : token) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("weak composition: bad part '" + token + "'", index);
    }
    parts.push_back(std::stoi(token));
    token.clear();
  };
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.empty() || t == "()") return {};
  if (t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  for (char ch : t) {
    if (ch == ',') {
      flush(parts.size() + 1);
    } else {
      token += ch;
    }
  }
  flush(parts.size() + 1);
  return WeakComposition(std::move(parts));
}

WeakComposition WeakComposition::sorted_partition() const {
  std::vector<int> p;
  for (int x : parts_) {
    if (x > 0) p.push_back(x);
  }
  std::sort(p.begin(), p.end(), std::greater<>());
  return WeakComposition(std::move(p));
}

WeakComposition WeakComposition::without_last() const {
  std::vector<int> p = parts_;
  if (!p.empty()) p.pop_back();
  return WeakComposition(std::move(p));
}

std::vector<Letter> WeakComposition::letter_multiset() const {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < parts_.size(); ++i) out.insert(out.end(), static_cast<std::size_t>(parts_[i]), static_cast<Letter>(i + 1));
  return out;
}

std::string WeakComposition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<WeakComposition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void weak_rec(int remaining, int slots, std::vector<int>& cur, std::vector<WeakComposition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  for (int p = 0; p <= remaining; ++p) {
    cur.push_back(p);
    weak_rec(remaining - p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<WeakComposition> partitions_of(int n) {
  std::vector<WeakComposition> out;
  std::vector<int> cur;
  if (n < 0) return out;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<WeakComposition> weak_compositions_of(int n, int parts) {
  std::vector<WeakComposition> out;
  std::vector<int> cur;
  if (n < 0 || parts < 0) return out;
  weak_rec(n, parts, cur, out);
  return out;
}

SegmentedSmirnovWord::SegmentedSmirnovWord(std::vector<Letter> letters, Composition shape)
    : letters_(std::move(letters)), shape_(std::move(shape)) {
  if (static_cast<std::size_t>(shape_.sum()) != letters_.size())
    throw std::invalid_argument("SegmentedSmirnovWord: shape does not sum to the letter count");
  block_id_.resize(letters_.size());
  std::size_t pos = 0;
  for (std::size_t b = 0; b < shape_.length(); ++b) {
    starts_.push_back(pos);
    for (int t = 0; t < shape_[b]; ++t, ++pos) {
      if (letters_[pos] < 1) throw ParseError("SegmentedSmirnovWord: letters must be positive", pos + 1);
      block_id_[pos] = b;
      if (t > 0 && letters_[pos] == letters_[pos - 1])
        throw ParseError("Smirnov violation in block " + std::to_string(b + 1) + " at in-block index " + std::to_string(t), pos);
    }
  }
}

SegmentedSmirnovWord SegmentedSmirnovWord::from_blocks(const std::vector<std::vector<Letter>>& blocks) {
  std::vector<Letter> letters;
  std::vector<int> parts;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("SegmentedSmirnovWord::from_blocks: empty block");
    letters.insert(letters.end(), b.begin(), b.end());
    parts.push_back(static_cast<int>(b.size()));
  }
  return SegmentedSmirnovWord(std::move(letters), Composition(std::move(parts)));
}

std::span<const Letter> SegmentedSmirnovWord::block(std::size_t b) const {
  return std::span<const Letter>(letters_).subspan(starts_[b], static_cast<std::size_t>(shape_[b]));
}

std::vector<std::vector<Letter>> SegmentedSmirnovWord::blocks() const {
  std::vector<std::vector<Letter>> out;
  out.reserve(block_count());
  for (std::size_t b = 0; b < block_count(); ++b) {
    auto s = block(b);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

Letter SegmentedSmirnovWord::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::size_t SegmentedSmirnovWord::ascent_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    if (!is_final(i) && letters_[i + 1] > letters_[i]) ++c;
  }
  return c;
}

std::size_t SegmentedSmirnovWord::descent_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    if (!is_final(i) && letters_[i + 1] < letters_[i]) ++c;
  }
  return c;
}

std::string SegmentedSmirnovWord::to_string() const {
  const bool commas = std::any_of(letters_.begin(), letters_.end(), [](Letter x) { return x > 9; });
  std::string s;
  bool any_comma = false;
  for (std::size_t b = 0; b < block_count(); ++b) {
    if (b) s += '|';
    auto blk = block(b);
    for (std::size_t t = 0; t < blk.size(); ++t) {
      if (t && commas) {
        s += ',';
        any_comma = true;
      }
      s += std::to_string(blk[t]);
    }
  }
  // A trailing comma marks decimal tokens when no block has two letters.
  if (commas && !any_comma) s += ',';
  return s;
}

std::string format_word(const SegmentedSmirnovWord& w) { return w.to_string(); }

SegmentedSmirnovWord parse_word(std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.empty()) return {};
  const bool decimal = t.find(',') != std::string::npos;
  if (decimal && t.back() == ',') t.pop_back();

  std::vector<std::vector<Letter>> blocks;
  std::size_t letter_index = 0;
  std::size_t pos = 0;
  while (true) {
    std::size_t bar = t.find('|', pos);
    std::string blk = t.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
    if (blk.empty()) throw ParseError("empty block", blocks.size() + 1);
    std::vector<Letter> letters;
    auto push = [&](const std::string& tok) {
      ++letter_index;
      if (tok.empty()) throw ParseError("empty letter", letter_index);
      for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("unexpected character '" + tok + "'", letter_index);
      }
      long v = std::stol(tok);
      if (v < 1) throw ParseError("letters must be positive", letter_index);
      letters.push_back(static_cast<Letter>(v));
    };
    if (decimal) {
      std::size_t p = 0;
      while (true) {
        std::size_t c = blk.find(',', p);
        push(blk.substr(p, c == std::string::npos ? std::string::npos : c - p));
        if (c == std::string::npos) break;
        p = c + 1;
      }
    } else {
      for (char ch : blk) push(std::string(1, ch));
    }
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == letters[i + 1])
        throw ParseError("Smirnov violation in block " + std::to_string(blocks.size() + 1) + " at in-block index " + std::to_string(i + 1), i + 1);
    }
    blocks.push_back(std::move(letters));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return SegmentedSmirnovWord::from_blocks(blocks);
}

WeakComposition content(const SegmentedSmirnovWord& w) {
  std::vector<int> parts(static_cast<std::size_t>(w.max_letter()), 0);
  for (Letter x : w.letters()) ++parts[static_cast<std::size_t>(x - 1)];
  return WeakComposition(std::move(parts));
}

std::string_view role_name(Role r) {
  switch (r) {
    case Role::peak: return "peak";
    case Role::valley: return "valley";
    case Role::double_rise: return "double_rise";
    case Role::double_fall: return "double_fall";
  }
  return "?";
}

Role role_at(const SegmentedSmirnovWord& w, std::size_t i) {
  // inf-padding: block ends see an infinite neighbour.
  const bool left_smaller = !w.is_initial(i) && w[i - 1] < w[i];
  const bool right_smaller = !w.is_final(i) && w[i + 1] < w[i];
  if (left_smaller && right_smaller) return Role::peak;
  if (!left_smaller && !right_smaller) return Role::valley;
  return left_smaller ? Role::double_rise : Role::double_fall;
}

PositionProfile classify(const SegmentedSmirnovWord& w) {
  PositionProfile prof;
  prof.positions.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto& p = prof.positions[i];
    p.role = role_at(w, i);
    p.is_initial = w.is_initial(i);
    p.is_final = w.is_final(i);
    p.is_ascent = !p.is_final && w[i + 1] > w[i];
    p.is_descent = !p.is_final && w[i + 1] < w[i];
    prof.ascents += p.is_ascent;
    prof.descents += p.is_descent;
  }
  return prof;
}

std::vector<std::vector<Letter>> multiset_permutations(std::vector<Letter> letters) {
  std::sort(letters.begin(), letters.end());
  std::vector<std::vector<Letter>> out;
  do {
    out.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

namespace {

// Separator after position p is the bit 1 << (n-2-p).
Composition shape_from_mask(std::size_t n, unsigned mask) {
  std::vector<int> parts;
  int len = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (mask & (1u << (n - 2 - p))) {
      parts.push_back(len);
      len = 1;
    } else {
      ++len;
    }
  }
  parts.push_back(len);
  return Composition(std::move(parts));
}

unsigned equal_adjacent_mask(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  unsigned m = 0;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (letters[p] == letters[p + 1]) m |= 1u << (n - 2 - p);
  }
  return m;
}

}  // namespace

void for_each_word(const WeakComposition& mu, const std::function<void(const SegmentedSmirnovWord&)>& visit) {
  auto letters = mu.letter_multiset();
  const std::size_t n = letters.size();
  if (n == 0) {
    visit(SegmentedSmirnovWord{});
    return;
  }
  if (n > 20) throw std::invalid_argument("for_each_word: word length too large for exhaustive enumeration");
  const unsigned full = (1u << (n - 1)) - 1;
  do {
    const unsigned eq = equal_adjacent_mask(letters);
    for (unsigned mask = full + 1; mask-- > 0;) {
      // every equal adjacent pair needs a separator
      if ((eq & ~mask) != 0) continue;
      visit(SegmentedSmirnovWord(letters, shape_from_mask(n, mask)));
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
}

std::vector<SegmentedSmirnovWord> enumerate_words(const WeakComposition& mu) {
  std::vector<SegmentedSmirnovWord> out;
  for_each_word(mu, [&](const SegmentedSmirnovWord& w) { out.push_back(w); });
  return out;
}

std::vector<SegmentedSmirnovWord> enumerate_words_by_stat(const WeakComposition& mu, int k, int l) {
  std::vector<SegmentedSmirnovWord> out;
  if (k < 0 || l < 0) return out;
  const int n = mu.sum();
  if (n > 0 && k + l >= n) return out;
  for_each_word(mu, [&](const SegmentedSmirnovWord& w) {
    if (static_cast<int>(w.ascent_count()) == k && static_cast<int>(w.descent_count()) == l) out.push_back(w);
  });
  return out;
}

std::vector<SegmentedSmirnovWord> enumerate_words_of_shape(const Composition& shape, int bound) {
  std::vector<SegmentedSmirnovWord> out;
  const std::size_t n = static_cast<std::size_t>(shape.sum());
  if (bound < 1) return out;
  std::vector<bool> initial(n, false);
  for (int s : shape.partial_sums()) initial[static_cast<std::size_t>(s)] = true;
  if (n > 0) initial[0] = true;
  std::vector<Letter> cur(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      out.emplace_back(cur, shape);
      return;
    }
    for (Letter x = 1; x <= bound; ++x) {
      if (!initial[pos] && cur[pos - 1] == x) continue;
      cur[pos] = x;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::string_view insertion_kind_name(InsertionKind k) {
  switch (k) {
    case InsertionKind::peak: return "peak";
    case InsertionKind::double_fall: return "double_fall";
    case InsertionKind::double_rise: return "double_rise";
    case InsertionKind::singleton: return "singleton";
  }
  return "?";
}

std::size_t insertion_slot_count(const SegmentedSmirnovWord& w, InsertionKind kind) {
  const std::size_t s = w.block_count();
  switch (kind) {
    case InsertionKind::peak: return s == 0 ? 0 : s - 1;
    case InsertionKind::double_fall:
    case InsertionKind::double_rise: return s;
    case InsertionKind::singleton: return s + 1;
  }
  return 0;
}

std::size_t insertion_position(const SegmentedSmirnovWord& w, InsertionKind kind, std::size_t slot) {
  if (slot >= insertion_slot_count(w, kind)) throw std::out_of_range("insertion slot out of range");
  switch (kind) {
    case InsertionKind::peak: return w.block_start(slot + 1);
    case InsertionKind::double_fall: return w.block_start(slot);
    case InsertionKind::double_rise: return w.block_start(slot) + w.block(slot).size();
    case InsertionKind::singleton: return slot < w.block_count() ? w.block_start(slot) : w.size();
  }
  return 0;
}

SegmentedSmirnovWord insert_maximal(const SegmentedSmirnovWord& w, InsertionKind kind, std::size_t slot, Letter m) {
  const Letter mx = w.max_letter();
  if (m < 1 || m < mx) throw std::invalid_argument("insert_maximal: inserted letter must be at least the maximal letter");
  if (slot >= insertion_slot_count(w, kind)) throw std::out_of_range("insert_maximal: slot out of range");
  auto blocks = w.blocks();
  switch (kind) {
    case InsertionKind::peak: {
      if (m <= mx) throw std::invalid_argument("insert_maximal: a peak needs a letter strictly larger than the word");
      auto& left = blocks[slot];
      left.push_back(m);
      left.insert(left.end(), blocks[slot + 1].begin(), blocks[slot + 1].end());
      blocks.erase(blocks.begin() + static_cast<long>(slot) + 1);
      break;
    }
    case InsertionKind::double_fall: {
      auto& b = blocks[slot];
      if (b.front() == m) throw std::invalid_argument("insert_maximal: block already starts with m");
      b.insert(b.begin(), m);
      break;
    }
    case InsertionKind::double_rise: {
      auto& b = blocks[slot];
      if (b.back() == m) throw std::invalid_argument("insert_maximal: block already ends with m");
      b.push_back(m);
      break;
    }
    case InsertionKind::singleton:
      blocks.insert(blocks.begin() + static_cast<long>(slot), std::vector<Letter>{m});
      break;
  }
  return SegmentedSmirnovWord::from_blocks(blocks);
}

SegmentedSmirnovWord remove_at(const SegmentedSmirnovWord& w, std::size_t i) {
  if (i >= w.size()) throw std::out_of_range("remove_at: index out of range");
  auto blocks = w.blocks();
  const std::size_t b = w.block_of(i);
  const std::size_t off = i - w.block_start(b);
  auto& blk = blocks[b];
  if (blk.size() == 1) {
    blocks.erase(blocks.begin() + static_cast<long>(b));
  } else if (off == 0 || off + 1 == blk.size()) {
    blk.erase(blk.begin() + static_cast<long>(off));
  } else {
    std::vector<Letter> right(blk.begin() + static_cast<long>(off) + 1, blk.end());
    blk.resize(off);
    blocks.insert(blocks.begin() + static_cast<long>(b) + 1, std::move(right));
  }
  return SegmentedSmirnovWord::from_blocks(blocks);
}

}  // namespace smirnov
