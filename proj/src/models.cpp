#include "smirnov/models.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "smirnov/statistics.hpp"

namespace smirnov {

ColoringTally chromatic_path_enumerator(int n, int bound) {
  if (n < 1) throw std::invalid_argument("chromatic_path_enumerator: n must be positive");
  ColoringTally out;
  if (bound < 1) return out;
  for (const auto& w : enumerate_words_of_shape(Composition({n}), bound)) {
    std::vector<int> exps(static_cast<std::size_t>(bound), 0);
    for (Letter x : w.letters()) ++exps[static_cast<std::size_t>(x) - 1];
    out[static_cast<int>(w.descent_count())][exps] += 1;
  }
  return out;
}

namespace {

void check_path(const std::string& p, const char* what) {
  if (!std::all_of(p.begin(), p.end(), [](char c) { return c == 'N' || c == 'E'; }))
    throw std::invalid_argument(std::string(what) + " path must use only N and E");
}

std::vector<LabelledPolyomino::Cell> cells_of(const std::string& upper, const std::string& lower) {
  std::set<LabelledPolyomino::Cell> cells;
  int x = 0, y = 0;
  for (char c : upper) {
    if (c == 'N') cells.insert({x, y++});
    else ++x;
  }
  x = 0, y = 0;
  for (char c : lower) {
    if (c == 'E') cells.insert({x++, y});
    else ++y;
  }
  return {cells.begin(), cells.end()};
}

// y-level of the east step leaving column x, for each x.
std::vector<int> east_levels(const std::string& p) {
  std::vector<int> lv;
  int y = 0;
  for (char c : p) {
    if (c == 'N') ++y;
    else lv.push_back(y);
  }
  return lv;
}

std::size_t cells_between(const std::string& upper, const std::string& lower) {
  const auto top = east_levels(upper);
  const auto bottom = east_levels(lower);
  std::size_t c = 0;
  for (std::size_t x = 0; x < top.size(); ++x) c += static_cast<std::size_t>(top[x] - bottom[x]);
  return c;
}

}  // namespace

LabelledPolyomino::LabelledPolyomino(std::string upper, std::string lower, std::map<Cell, Letter> labels)
    : upper_(std::move(upper)), lower_(std::move(lower)), labels_(std::move(labels)) {
  check_path(upper_, "upper");
  check_path(lower_, "lower");
  width_ = static_cast<int>(std::count(upper_.begin(), upper_.end(), 'E'));
  height_ = static_cast<int>(std::count(upper_.begin(), upper_.end(), 'N'));
  if (width_ < 1 || height_ < 1) throw std::invalid_argument("polyomino needs positive width and height");
  if (std::count(lower_.begin(), lower_.end(), 'E') != width_ || std::count(lower_.begin(), lower_.end(), 'N') != height_)
    throw std::invalid_argument("upper and lower paths must span the same box");
  int nu = 0, nl = 0;
  for (std::size_t t = 0; t + 1 < upper_.size(); ++t) {
    nu += upper_[t] == 'N';
    nl += lower_[t] == 'N';
    if (nu <= nl) throw std::invalid_argument("upper path must stay strictly above the lower path");
  }
  const auto cells = labelled_cells();
  if (cells.size() != labels_.size() ||
      !std::all_of(cells.begin(), cells.end(), [&](const Cell& c) { return labels_.count(c) == 1; }))
    throw std::invalid_argument("labels must sit exactly on the labelled cells");
  for (const auto& [cell, value] : labels_) {
    if (value < 1) throw std::invalid_argument("polyomino labels must be positive");
    auto above = labels_.find({cell.first, cell.second + 1});
    if (above != labels_.end() && above->second <= value)
      throw std::invalid_argument("polyomino columns must increase bottom to top");
    auto right = labels_.find({cell.first + 1, cell.second});
    if (right != labels_.end() && right->second >= value)
      throw std::invalid_argument("polyomino rows must decrease left to right");
  }
}

std::vector<LabelledPolyomino::Cell> LabelledPolyomino::labelled_cells() const { return cells_of(upper_, lower_); }

std::size_t LabelledPolyomino::cell_count() const { return cells_between(upper_, lower_); }

std::size_t LabelledPolyomino::area() const { return cell_count() - labelled_cells().size(); }

std::vector<Letter> LabelledPolyomino::reading_word() const {
  std::vector<Letter> out;
  out.reserve(labels_.size());
  for (const auto& [cell, value] : labels_) out.push_back(value);  // map order is (column, row)
  return out;
}

std::string LabelledPolyomino::to_string() const {
  std::string s = "upper=" + upper_ + ";lower=" + lower_ + ";labels=";
  bool first = true;
  for (const auto& [cell, value] : labels_) {
    if (!first) s += ',';
    first = false;
    s += '(' + std::to_string(cell.first) + ',' + std::to_string(cell.second) + ':' + std::to_string(value) + ')';
  }
  return s;
}

LabelledPolyomino smirnov_to_polyomino(const SegmentedSmirnovWord& w) {
  if (w.block_count() != 1) throw std::invalid_argument("smirnov_to_polyomino: word must have exactly one block");
  std::string moves;
  std::map<LabelledPolyomino::Cell, Letter> labels;
  int x = 0, y = 0;
  labels[{0, 0}] = w[0];
  for (std::size_t i = 1; i < w.size(); ++i) {
    const bool up = w[i] > w[i - 1];
    moves += up ? 'N' : 'E';
    up ? ++y : ++x;
    labels[{x, y}] = w[i];
  }
  return LabelledPolyomino("N" + moves + "E", "E" + moves + "N", std::move(labels));
}

SegmentedSmirnovWord polyomino_to_smirnov(const LabelledPolyomino& p) {
  if (p.area() != 0) throw std::invalid_argument("polyomino_to_smirnov: polyomino must have area 0");
  auto letters = p.reading_word();
  const int n = static_cast<int>(letters.size());
  return SegmentedSmirnovWord(std::move(letters), Composition({n}));
}

std::vector<LabelledPolyomino> enumerate_area_zero_polyominoes(const WeakComposition& mu, int k) {
  std::vector<LabelledPolyomino> out;
  const int n = mu.sum();
  if (n < 1 || k < 0 || k > n - 1) return out;
  const int w = n - k, h = k + 1;
  const int len = w + h;
  std::vector<std::string> paths;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    if (__builtin_popcount(mask) != h) continue;
    std::string p;
    for (int t = 0; t < len; ++t) p += (mask >> t) & 1u ? 'N' : 'E';
    paths.push_back(std::move(p));
  }
  const auto letters = mu.letter_multiset();
  const auto arrangements = multiset_permutations(letters);
  for (const auto& up : paths) {
    if (up.front() != 'N' || up.back() != 'E') continue;
    for (const auto& lo : paths) {
      if (lo.front() != 'E' || lo.back() != 'N') continue;
      int nu = 0, nl = 0;
      bool above = true;
      for (int t = 0; t + 1 < len && above; ++t) {
        nu += up[static_cast<std::size_t>(t)] == 'N';
        nl += lo[static_cast<std::size_t>(t)] == 'N';
        above = nu > nl;
      }
      if (!above) continue;
      const auto cells = cells_of(up, lo);
      if (cells.size() != cells_between(up, lo)) continue;
      for (const auto& arr : arrangements) {
        std::map<LabelledPolyomino::Cell, Letter> labels;
        for (std::size_t c = 0; c < cells.size(); ++c) labels[cells[c]] = arr[c];
        bool ok = true;
        for (const auto& [cell, value] : labels) {
          auto over = labels.find({cell.first, cell.second + 1});
          auto beside = labels.find({cell.first + 1, cell.second});
          if ((over != labels.end() && over->second <= value) || (beside != labels.end() && beside->second >= value)) {
            ok = false;
            break;
          }
        }
        if (ok) out.emplace_back(up, lo, std::move(labels));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_231_avoiding(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (perm[i] >= perm[j]) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (perm[k] < perm[i]) return false;
      }
    }
  }
  return true;
}

std::size_t permutation_descents(const std::vector<int>& perm) {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) d += perm[i] > perm[i + 1];
  return d;
}

std::size_t permutation_ascents(const std::vector<int>& perm) {
  std::size_t a = 0;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) a += perm[i] < perm[i + 1];
  return a;
}

NoncrossingPartition::NoncrossingPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("noncrossing partition: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    for (int x : blocks_[bi]) {
      if (x < 1 || x > n || owner[static_cast<std::size_t>(x)] != -1)
        throw std::invalid_argument("noncrossing partition: blocks must partition [n]");
      owner[static_cast<std::size_t>(x)] = static_cast<int>(bi);
    }
  }
  for (int x = 1; x <= n; ++x) {
    if (owner[static_cast<std::size_t>(x)] == -1) throw std::invalid_argument("noncrossing partition: blocks must partition [n]");
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          const auto oa = owner[static_cast<std::size_t>(a)], ob = owner[static_cast<std::size_t>(b)];
          if (oa != ob && oa == owner[static_cast<std::size_t>(c)] && ob == owner[static_cast<std::size_t>(d)])
            throw std::invalid_argument("noncrossing partition: blocks cross at " + std::to_string(a) + "<" +
                                        std::to_string(b) + "<" + std::to_string(c) + "<" + std::to_string(d));
        }
}

std::string NoncrossingPartition::to_string() const {
  std::string s = "{";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) s += ',';
    s += '{';
    for (std::size_t t = 0; t < blocks_[b].size(); ++t) {
      if (t) s += ',';
      s += std::to_string(blocks_[b][t]);
    }
    s += '}';
  }
  return s + '}';
}

std::vector<NoncrossingPartition> enumerate_noncrossing_partitions(int n) {
  std::vector<NoncrossingPartition> out;
  if (n < 0) return out;
  // restricted growth strings, filtered by the crossing test
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == n) {
      std::vector<std::vector<int>> bl(static_cast<std::size_t>(blocks));
      for (int i = 0; i < n; ++i) bl[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
      try {
        out.emplace_back(n, std::move(bl));
      } catch (const std::invalid_argument&) {
      }
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> noncrossing_to_permutation(const NoncrossingPartition& p) {
  std::vector<int> out;
  for (const auto& b : p.blocks()) out.insert(out.end(), b.rbegin(), b.rend());
  return out;
}

std::vector<std::vector<int>> decreasing_runs(const std::vector<int>& perm) {
  std::vector<std::vector<int>> runs;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i == 0 || perm[i - 1] < perm[i]) runs.emplace_back();
    runs.back().push_back(perm[i]);
  }
  return runs;
}

NoncrossingPartition permutation_to_noncrossing(const std::vector<int>& perm) {
  return NoncrossingPartition(static_cast<int>(perm.size()), decreasing_runs(perm));
}

std::vector<std::uint64_t> zero_sminv_segmented_counts(int n_max) {
  std::vector<std::uint64_t> out;
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t c = 0;
    for_each_word(WeakComposition(std::vector<int>(static_cast<std::size_t>(n), 1)),
                  [&](const SegmentedSmirnovWord& w) { c += sminv_count(w) == 0; });
    out.push_back(c);
  }
  return out;
}

}  // namespace smirnov
