#include "smirnov/paths.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "smirnov/statistics.hpp"

namespace smirnov {

namespace {

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw std::invalid_argument(std::string("duplicate index in ") + what);
  return v;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

template <typename T>
std::vector<T> parse_list(std::string_view text, const char* what) {
  std::vector<T> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string item(text.substr(pos, end - pos));
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument(std::string("bad entry '") + item + "' in " + what);
    out.push_back(static_cast<T>(std::stoul(item)));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

DecoratedLabelledDyckPath::DecoratedLabelledDyckPath(std::vector<Step> steps, std::vector<Letter> labels,
                                                     std::vector<std::size_t> decorated_rises,
                                                     std::vector<std::size_t> decorated_valleys)
    : steps_(std::move(steps)),
      labels_(std::move(labels)),
      rises_(sorted_unique(std::move(decorated_rises), "decorated rises")),
      valleys_(sorted_unique(std::move(decorated_valleys), "decorated valleys")) {
  long height = 0;
  for (std::size_t p = 0; p < steps_.size(); ++p) {
    if (steps_[p] == Step::north) {
      north_pos_.push_back(p);
      ++height;
    } else {
      if (--height < 0) throw std::invalid_argument("path goes below the diagonal at step " + std::to_string(p + 1));
    }
  }
  if (height != 0) throw std::invalid_argument("path does not end on the diagonal");
  if (north_pos_.size() != labels_.size()) throw std::invalid_argument("label count differs from the number of north steps");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 1) throw std::invalid_argument("labels must be positive");
    if (is_rise(i + 1) && labels_[i - 1] >= labels_[i])
      throw std::invalid_argument("labels must increase up each column (north step " + std::to_string(i + 1) + ")");
  }
  for (std::size_t r : rises_) {
    if (r < 1 || r > size() || !is_rise(r)) throw std::invalid_argument("decorated index " + std::to_string(r) + " is not a rise");
  }
  for (std::size_t v : valleys_) {
    if (v < 1 || v > size() || !is_contractible_valley(v))
      throw std::invalid_argument("decorated index " + std::to_string(v) + " is not a contractible valley");
  }
}

bool DecoratedLabelledDyckPath::is_rise(std::size_t i) const {
  const std::size_t p = north_pos_[i - 1];
  return p > 0 && steps_[p - 1] == Step::north;
}

bool DecoratedLabelledDyckPath::is_valley(std::size_t i) const {
  const std::size_t p = north_pos_[i - 1];
  return p > 0 && steps_[p - 1] == Step::east;
}

bool DecoratedLabelledDyckPath::is_contractible_valley(std::size_t i) const {
  if (!is_valley(i)) return false;
  const std::size_t p = north_pos_[i - 1];
  if (p < 2) return false;
  if (steps_[p - 2] == Step::east) return true;
  // the north step two places back is the previous one in label order
  return labels_[i - 2] < labels_[i - 1];
}

std::string DecoratedLabelledDyckPath::step_string() const {
  std::string s;
  for (Step st : steps_) s += static_cast<char>(st);
  return s;
}

std::string DecoratedLabelledDyckPath::to_string() const {
  std::string labels;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) labels += ',';
    labels += std::to_string(labels_[i]);
  }
  return "steps=" + step_string() + ";labels=" + labels + ";rises=" + join(rises_) + ";valleys=" + join(valleys_);
}

DecoratedLabelledDyckPath DecoratedLabelledDyckPath::parse(std::string_view text) {
  std::string steps_text, labels_text, rises_text, valleys_text;
  bool seen[4] = {false, false, false, false};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string_view field = text.substr(pos, end - pos);
    const std::size_t eq = field.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("path field without '=': " + std::string(field));
    const std::string_view key = field.substr(0, eq);
    const std::string value(field.substr(eq + 1));
    if (key == "steps") steps_text = value, seen[0] = true;
    else if (key == "labels") labels_text = value, seen[1] = true;
    else if (key == "rises") rises_text = value, seen[2] = true;
    else if (key == "valleys") valleys_text = value, seen[3] = true;
    else throw std::invalid_argument("unknown path field '" + std::string(key) + "'");
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (!seen[0] || !seen[1]) throw std::invalid_argument("path text needs steps= and labels=");
  std::vector<Step> steps;
  for (char c : steps_text) {
    if (c == 'N') steps.push_back(Step::north);
    else if (c == 'E') steps.push_back(Step::east);
    else throw std::invalid_argument(std::string("bad step character '") + c + "'");
  }
  return DecoratedLabelledDyckPath(std::move(steps), parse_list<Letter>(labels_text, "labels"),
                                   parse_list<std::size_t>(rises_text, "rises"),
                                   parse_list<std::size_t>(valleys_text, "valleys"));
}

std::string DecoratedLabelledDyckPath::ascii_grid() const {
  const std::size_t n = size();
  std::size_t width = 1;
  for (Letter l : labels_) width = std::max(width, std::to_string(l).size());
  // Column 0 is a margin so decorations left of the first column have a cell.
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n + 1, "."));
  for (std::size_t y = 0; y < n; ++y) {
    cells[y][0] = " ";
    cells[y][y + 1] = "\\";
  }
  for (std::size_t i = 0; i < n; ++i) cells[i][north_pos_[i] - i + 1] = std::to_string(labels_[i]);
  for (std::size_t r : rises_) cells[r - 1][north_pos_[r - 1] - (r - 1)] = "*";
  for (std::size_t v : valleys_) cells[v - 1][north_pos_[v - 1] - (v - 1)] = "o";
  std::ostringstream out;
  for (std::size_t y = n; y-- > 0;) {
    for (const auto& c : cells[y]) out << std::string(width + 1 - c.size(), ' ') << c;
    out << '\n';
  }
  return out.str();
}

std::vector<std::size_t> area_word(const DecoratedLabelledDyckPath& d) {
  std::vector<std::size_t> a;
  a.reserve(d.size());
  std::size_t north = 0;
  std::size_t east = 0;
  for (Step s : d.steps()) {
    if (s == Step::north) {
      a.push_back(north - east);
      ++north;
    } else {
      ++east;
    }
  }
  return a;
}

std::size_t area(const DecoratedLabelledDyckPath& d) {
  const auto a = area_word(d);
  const auto& rises = d.decorated_rises();
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::binary_search(rises.begin(), rises.end(), i + 1)) total += a[i];
  }
  return total;
}

long path_dinv(const DecoratedLabelledDyckPath& d) {
  const auto a = area_word(d);
  const auto& lab = d.labels();
  const auto& valleys = d.decorated_valleys();
  long count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::binary_search(valleys.begin(), valleys.end(), i + 1)) continue;
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == a[j] && lab[i] < lab[j]) ++count;
      else if (a[i] == a[j] + 1 && lab[i] > lab[j]) ++count;
    }
  }
  return count - static_cast<long>(valleys.size());
}

AreaZeroDecoratedPath::AreaZeroDecoratedPath(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("area-zero path: empty block");
    for (std::size_t f = 0; f < b.size(); ++f) {
      const auto& fac = b[f];
      if (fac.empty()) throw std::invalid_argument("area-zero path: empty factor");
      if (fac.front() < 1) throw std::invalid_argument("area-zero path: labels must be positive");
      for (std::size_t t = 1; t < fac.size(); ++t) {
        if (fac[t - 1] >= fac[t]) throw std::invalid_argument("area-zero path: labels must increase up each column");
      }
      if (f > 0) {
        const auto& prev = b[f - 1];
        if (!(prev.size() >= 2 || prev.front() < fac.front()))
          throw std::invalid_argument("area-zero path: decorated valley labelled " + std::to_string(fac.front()) +
                                      " is not contractible");
      }
    }
  }
}

AreaZeroDecoratedPath AreaZeroDecoratedPath::from_path(const DecoratedLabelledDyckPath& d) {
  const auto& steps = d.steps();
  const auto& labels = d.labels();
  const auto& valleys = d.decorated_valleys();
  std::vector<Block> blocks;
  std::size_t p = 0;
  std::size_t north = 0;
  while (p < steps.size()) {
    std::size_t run = 0;
    while (p < steps.size() && steps[p] == Step::north) ++run, ++p;
    std::size_t back = 0;
    while (p < steps.size() && steps[p] == Step::east && back < run) ++back, ++p;
    if (run == 0 || back != run || (p < steps.size() && steps[p] == Step::east))
      throw std::invalid_argument("path does not have area zero (not a concatenation of N^iE^i)");
    Factor f(labels.begin() + static_cast<long>(north), labels.begin() + static_cast<long>(north + run));
    const bool joins = std::binary_search(valleys.begin(), valleys.end(), north + 1);
    if (joins) {
      blocks.back().push_back(std::move(f));
    } else {
      blocks.push_back({std::move(f)});
    }
    north += run;
  }
  auto z = AreaZeroDecoratedPath(std::move(blocks));
  if (z.decorated_rise_count() != d.decorated_rises().size())
    throw std::invalid_argument("path does not have area zero (an undecorated rise)");
  return z;
}

std::size_t AreaZeroDecoratedPath::size() const {
  std::size_t n = 0;
  for (const auto& b : blocks_)
    for (const auto& f : b) n += f.size();
  return n;
}

std::size_t AreaZeroDecoratedPath::decorated_rise_count() const {
  std::size_t c = 0;
  for (const auto& b : blocks_)
    for (const auto& f : b) c += f.size() - 1;
  return c;
}

std::size_t AreaZeroDecoratedPath::decorated_valley_count() const {
  std::size_t c = 0;
  for (const auto& b : blocks_) c += b.size() - 1;
  return c;
}

WeakComposition AreaZeroDecoratedPath::content() const {
  std::vector<int> mu;
  for (const auto& b : blocks_) {
    for (const auto& f : b) {
      for (Letter l : f) {
        if (static_cast<std::size_t>(l) > mu.size()) mu.resize(static_cast<std::size_t>(l), 0);
        ++mu[static_cast<std::size_t>(l) - 1];
      }
    }
  }
  return WeakComposition(std::move(mu));
}

DecoratedLabelledDyckPath AreaZeroDecoratedPath::to_path() const {
  std::vector<Step> steps;
  std::vector<Letter> labels;
  std::vector<std::size_t> rises, valleys;
  for (const auto& b : blocks_) {
    for (std::size_t f = 0; f < b.size(); ++f) {
      if (f > 0) valleys.push_back(labels.size() + 1);
      for (std::size_t t = 0; t < b[f].size(); ++t) {
        if (t > 0) rises.push_back(labels.size() + 1);
        labels.push_back(b[f][t]);
        steps.push_back(Step::north);
      }
      steps.insert(steps.end(), b[f].size(), Step::east);
    }
  }
  return DecoratedLabelledDyckPath(std::move(steps), std::move(labels), std::move(rises), std::move(valleys));
}

std::string AreaZeroDecoratedPath::to_string() const {
  std::string s;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) s += " / ";
    for (std::size_t f = 0; f < blocks_[b].size(); ++f) {
      if (f) s += ' ';
      s += '(';
      for (std::size_t t = 0; t < blocks_[b][f].size(); ++t) {
        if (t) s += ',';
        s += std::to_string(blocks_[b][f][t]);
      }
      s += ')';
    }
  }
  return s;
}

AreaZeroDecoratedPath phi(const SegmentedSmirnovWord& w) {
  if (w.empty()) return {};
  const Letter m = w.max_letter();
  struct Shape {
    bool singleton = false, fall = false, rise = false;
    std::size_t first_piece = 0, pieces = 0;
  };
  std::vector<Shape> shapes(w.block_count());
  std::vector<std::vector<Letter>> reduced;
  for (std::size_t b = 0; b < w.block_count(); ++b) {
    const auto blk = w.block(b);
    Shape& sh = shapes[b];
    if (blk.size() == 1 && blk[0] == m) {
      sh.singleton = true;
      continue;
    }
    sh.fall = blk.front() == m;
    sh.rise = blk.back() == m;
    const std::size_t lo = sh.fall ? 1 : 0;
    const std::size_t hi = blk.size() - (sh.rise ? 1 : 0);
    sh.first_piece = reduced.size();
    std::vector<Letter> piece;
    for (std::size_t t = lo; t < hi; ++t) {
      if (blk[t] == m) {
        reduced.push_back(std::move(piece));
        piece.clear();
      } else {
        piece.push_back(blk[t]);
      }
    }
    reduced.push_back(std::move(piece));
    sh.pieces = reduced.size() - sh.first_piece;
  }
  const AreaZeroDecoratedPath sub = phi(SegmentedSmirnovWord::from_blocks(reduced));
  const auto& sub_blocks = sub.blocks();
  const std::size_t total = sub_blocks.size();
  // word block u of the reduced word is path block total-1-u
  auto path_of = [&](std::size_t u) -> const AreaZeroDecoratedPath::Block& { return sub_blocks[total - 1 - u]; };

  std::vector<AreaZeroDecoratedPath::Block> out;
  for (std::size_t b = w.block_count(); b-- > 0;) {
    const Shape& sh = shapes[b];
    if (sh.singleton) {
      out.push_back({{m}});
      continue;
    }
    AreaZeroDecoratedPath::Block blk;
    const std::size_t last = sh.first_piece + sh.pieces - 1;
    for (std::size_t t = 0; t < sh.pieces; ++t) {
      const auto& q = path_of(last - t);
      blk.insert(blk.end(), q.begin(), q.end());
      if (t + 1 < sh.pieces) blk.back().push_back(m);
    }
    if (sh.rise) blk.back().push_back(m);
    if (sh.fall) blk.push_back({m});
    out.push_back(std::move(blk));
  }
  return AreaZeroDecoratedPath(std::move(out));
}

SegmentedSmirnovWord phi_inverse(const AreaZeroDecoratedPath& d) {
  if (d.blocks().empty()) return {};
  Letter m = 0;
  for (const auto& b : d.blocks())
    for (const auto& f : b) m = std::max(m, f.back());

  struct Shape {
    bool singleton = false, fall = false, rise = false;
    std::size_t first_piece = 0, pieces = 0;
  };
  const auto& blocks = d.blocks();
  std::vector<Shape> shapes(blocks.size());
  std::vector<AreaZeroDecoratedPath::Block> reduced;
  auto malformed = [m]() {
    return std::invalid_argument("phi_inverse: label " + std::to_string(m) + " sits where no insertion can place it");
  };
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    Shape& sh = shapes[t];
    auto factors = blocks[t];
    if (factors.size() == 1 && factors[0] == AreaZeroDecoratedPath::Factor{m}) {
      sh.singleton = true;
      continue;
    }
    if (factors.size() >= 2 && factors.back() == AreaZeroDecoratedPath::Factor{m}) {
      sh.fall = true;
      factors.pop_back();
    }
    if (factors.back().back() == m) {
      sh.rise = true;
      factors.back().pop_back();
      if (factors.back().empty()) throw malformed();
    }
    sh.first_piece = reduced.size();
    AreaZeroDecoratedPath::Block piece;
    for (auto& f : factors) {
      const bool peak = f.back() == m;
      if (peak) f.pop_back();
      if (f.empty()) throw malformed();
      piece.push_back(std::move(f));
      if (peak) {
        reduced.push_back(std::move(piece));
        piece.clear();
      }
    }
    if (piece.empty()) throw malformed();
    reduced.push_back(std::move(piece));
    sh.pieces = reduced.size() - sh.first_piece;
  }
  const std::size_t total = reduced.size();
  const SegmentedSmirnovWord sub = phi_inverse(AreaZeroDecoratedPath(std::move(reduced)));
  if (sub.block_count() != total) throw malformed();
  // path block u of the reduced path is word block total-1-u
  auto word_of = [&](std::size_t u) { return sub.block(total - 1 - u); };

  std::vector<std::vector<Letter>> out;
  for (std::size_t t = blocks.size(); t-- > 0;) {
    const Shape& sh = shapes[t];
    std::vector<Letter> blk;
    if (sh.singleton) {
      out.push_back({m});
      continue;
    }
    if (sh.fall) blk.push_back(m);
    for (std::size_t c = sh.pieces; c-- > 0;) {
      const auto piece = word_of(sh.first_piece + c);
      blk.insert(blk.end(), piece.begin(), piece.end());
      if (c > 0) blk.push_back(m);
    }
    if (sh.rise) blk.push_back(m);
    out.push_back(std::move(blk));
  }
  return SegmentedSmirnovWord::from_blocks(out);
}

std::size_t unified_dinv(const AreaZeroDecoratedPath& d) { return sdinv_count(phi_inverse(d)); }

std::vector<AreaZeroDecoratedPath> enumerate_area_zero_paths(const WeakComposition& mu, int k, int l) {
  std::vector<AreaZeroDecoratedPath> out;
  if (k < 0 || l < 0) return out;
  std::vector<int> left(mu.parts().begin(), mu.parts().end());
  int remaining = mu.sum();
  std::vector<AreaZeroDecoratedPath::Block> cur;
  std::function<void(int, int)> rec = [&](int rises, int valleys) {
    if (remaining == 0) {
      if (rises == k && valleys == l) out.emplace_back(cur);
      return;
    }
    // next factor: a nonempty set of available values, listed increasingly
    const std::size_t values = left.size();
    for (unsigned mask = 1; mask < (1u << values); ++mask) {
      AreaZeroDecoratedPath::Factor f;
      bool ok = true;
      for (std::size_t v = 0; v < values && ok; ++v) {
        if (mask & (1u << v)) {
          if (left[v] == 0) ok = false;
          else f.push_back(static_cast<Letter>(v + 1));
        }
      }
      if (!ok) continue;
      const int more_rises = rises + static_cast<int>(f.size()) - 1;
      if (more_rises > k) continue;
      for (Letter x : f) --left[static_cast<std::size_t>(x) - 1];
      remaining -= static_cast<int>(f.size());
      cur.push_back({f});
      rec(more_rises, valleys);
      cur.pop_back();
      if (!cur.empty() && valleys < l) {
        const auto& prev = cur.back().back();
        if (prev.size() >= 2 || prev.front() < f.front()) {
          cur.back().push_back(f);
          rec(more_rises, valleys + 1);
          cur.back().pop_back();
        }
      }
      remaining += static_cast<int>(f.size());
      for (Letter x : f) ++left[static_cast<std::size_t>(x) - 1];
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace smirnov
