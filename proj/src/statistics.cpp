#include "smirnov/statistics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace smirnov {

std::string case_tags(std::uint8_t mask) {
  static constexpr std::pair<std::uint8_t, const char*> kNames[] = {
      {kFirstLetter, "first_letter"}, {kBiggerEntry, "bigger_entry"},   {kEqualThenFirst, "equal_then_first"},
      {kEqualThenBigger, "equal_then_bigger"}, {kDiagRight, "right"}, {kDiagLeft, "left"},
      {kDiagPeak, "peak"},
  };
  std::string s;
  for (auto [bit, name] : kNames) {
    if (mask & bit) {
      if (!s.empty()) s += '+';
      s += name;
    }
  }
  return s;
}

bool InversionReport::contains(std::size_t i, std::size_t j) const {
  return std::any_of(pairs.begin(), pairs.end(), [&](const InversionPair& p) { return p.i == i && p.j == j; });
}

std::uint8_t sminv_cases(const SegmentedSmirnovWord& w, std::size_t i, std::size_t j) {
  if (!(i < j) || w[i] <= w[j]) return 0;
  std::uint8_t c = 0;
  if (w.is_initial(j)) {
    c |= kFirstLetter;
  } else {
    const std::size_t p = j - 1;
    if (w[p] > w[i]) c |= kBiggerEntry;
    if (i != p && w[p] == w[i]) {
      if (w.is_initial(p)) {
        c |= kEqualThenFirst;
      } else if (w[p - 1] > w[p]) {
        c |= kEqualThenBigger;
      }
    }
  }
  return c;
}

InversionReport sminv(const SegmentedSmirnovWord& w) {
  InversionReport r;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (auto c = sminv_cases(w, i, j)) r.pairs.push_back({i + 1, j + 1, c});
    }
  }
  r.count = r.pairs.size();
  return r;
}

std::size_t sminv_count(const SegmentedSmirnovWord& w) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) c += sminv_cases(w, i, j) != 0;
  }
  return c;
}

namespace {

// 0-based height_m(i).
std::size_t height0(const SegmentedSmirnovWord& w, Letter m, std::size_t i) {
  std::size_t start = i;
  while (!w.is_initial(start) && !(w[start - 1] > m)) --start;
  std::size_t h = 0;
  for (std::size_t t = start; t < i; ++t) h += w[t] < m;
  return h;
}

std::uint8_t sdinv_cases(const SegmentedSmirnovWord& w, std::size_t i, std::size_t j, bool i_is_peak) {
  if (i == j || w[i] <= w[j]) return 0;
  if (i_is_peak) return (i < j && sminv_cases(w, i, j)) ? kDiagPeak : 0;
  const Letter m = w[i];
  const std::size_t hi = height0(w, m, i);
  const std::size_t hj = height0(w, m, j);
  if (i < j) {
    if (hi == hj && (j != i + 1 || w.is_initial(j))) return kDiagRight;
  } else if (i > j + 1) {
    if (hi == hj + 1) return kDiagLeft;
  }
  return 0;
}

}  // namespace

std::size_t height(const SegmentedSmirnovWord& w, Letter m, std::size_t i) {
  if (i < 1 || i > w.size()) throw std::out_of_range("height: index out of range");
  return height0(w, m, i - 1);
}

InversionReport sdinv(const SegmentedSmirnovWord& w) {
  InversionReport r;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool peak = role_at(w, i) == Role::peak;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (auto c = sdinv_cases(w, i, j, peak)) r.pairs.push_back({i + 1, j + 1, c});
    }
  }
  r.count = r.pairs.size();
  return r;
}

std::size_t sdinv_count(const SegmentedSmirnovWord& w) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool peak = role_at(w, i) == Role::peak;
    for (std::size_t j = 0; j < w.size(); ++j) c += sdinv_cases(w, i, j, peak) != 0;
  }
  return c;
}

std::size_t statistic(const SegmentedSmirnovWord& w, Statistic s) {
  return s == Statistic::sminv ? sminv_count(w) : sdinv_count(w);
}

std::string_view statistic_name(Statistic s) { return s == Statistic::sminv ? "sminv" : "sdinv"; }

Statistic parse_statistic(std::string_view name) {
  if (name == "sminv") return Statistic::sminv;
  if (name == "sdinv") return Statistic::sdinv;
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "' (expected sminv or sdinv)");
}

OrderedMultisetPartition::OrderedMultisetPartition(std::vector<std::vector<Letter>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("OrderedMultisetPartition: empty block");
    std::sort(b.begin(), b.end());
  }
}

bool OrderedMultisetPartition::is_set_partition() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const auto& b) { return std::adjacent_find(b.begin(), b.end()) == b.end(); });
}

std::string OrderedMultisetPartition::to_string() const {
  std::string s;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) s += '|';
    s += '{';
    for (std::size_t t = 0; t < blocks_[b].size(); ++t) {
      if (t) s += ',';
      s += std::to_string(blocks_[b][t]);
    }
    s += '}';
  }
  return s;
}

OrderedMultisetPartition project(const SegmentedSmirnovWord& w) { return OrderedMultisetPartition(w.blocks()); }

namespace {

void require_sets(const OrderedMultisetPartition& p) {
  if (!p.is_set_partition()) throw std::invalid_argument("ordered multiset partition has a block with a repeated element");
}

}  // namespace

std::size_t omp_inv(const OrderedMultisetPartition& p) {
  require_sets(p);
  const auto& bl = p.blocks();
  std::size_t c = 0;
  for (std::size_t j = 0; j < bl.size(); ++j) {
    const Letter b = bl[j].front();
    for (std::size_t i = 0; i < j; ++i) c += static_cast<std::size_t>(std::count_if(bl[i].begin(), bl[i].end(), [b](Letter a) { return a > b; }));
  }
  return c;
}

std::size_t omp_dinv(const OrderedMultisetPartition& p) {
  require_sets(p);
  const auto& bl = p.blocks();
  std::size_t c = 0;
  for (std::size_t i = 0; i < bl.size(); ++i) {
    for (std::size_t j = 0; j < bl.size(); ++j) {
      if (i < j) {
        for (std::size_t h = 0; h < bl[i].size() && h < bl[j].size(); ++h) c += bl[i][h] > bl[j][h];
      } else if (i > j) {
        for (std::size_t h = 0; h + 1 < bl[i].size() && h < bl[j].size(); ++h) c += bl[i][h + 1] > bl[j][h];
      }
    }
  }
  return c;
}

std::vector<OrderedMultisetPartition> enumerate_ordered_set_partitions(const WeakComposition& mu, int r) {
  std::vector<OrderedMultisetPartition> out;
  if (r < 0) return out;
  const std::size_t blocks = static_cast<std::size_t>(r);
  std::vector<std::vector<Letter>> cur(blocks);
  // Letter v goes to a mu_v-subset of the blocks; subsets chosen by increasing block index.
  std::function<void(std::size_t)> place_value = [&](std::size_t v) {
    if (v == mu.length()) {
      if (std::all_of(cur.begin(), cur.end(), [](const auto& b) { return !b.empty(); })) out.emplace_back(cur);
      return;
    }
    const int need = mu[v];
    std::function<void(std::size_t, int)> choose = [&](std::size_t from, int left) {
      if (left == 0) {
        place_value(v + 1);
        return;
      }
      for (std::size_t b = from; b + static_cast<std::size_t>(left) <= blocks; ++b) {
        cur[b].push_back(static_cast<Letter>(v + 1));
        choose(b + 1, left - 1);
        cur[b].pop_back();
      }
    };
    choose(0, need);
  };
  if (blocks == 0) {
    if (mu.sum() == 0) out.emplace_back();
    return out;
  }
  place_value(0);
  std::sort(out.begin(), out.end());
  return out;
}

SegmentedSmirnovWord increasing_block_word(const OrderedMultisetPartition& p) {
  return SegmentedSmirnovWord::from_blocks(p.blocks());
}

SegmentedSmirnovWord decreasing_block_word(const OrderedMultisetPartition& p) {
  auto bl = p.blocks();
  for (auto& b : bl) std::reverse(b.begin(), b.end());
  return SegmentedSmirnovWord::from_blocks(bl);
}

}  // namespace smirnov
