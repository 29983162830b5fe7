#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "smirnov/models.hpp"
#include "smirnov/qengine.hpp"
#include "smirnov/statistics.hpp"

using namespace smirnov;

TEST_CASE("polyomino of 213532142") {
  const auto w = parse_word("213532142");
  const auto p = smirnov_to_polyomino(w);
  CHECK(p.width() == 6);
  CHECK(p.height() == 4);
  CHECK(p.area() == 0);
  CHECK(p.upper() == "NENNEEENEE");
  CHECK(p.lower() == "EENNEEENEN");
  CHECK(p.cell_count() == 9);
  CHECK(polyomino_to_smirnov(p) == w);
  CHECK(std::vector<Letter>(p.reading_word()) == std::vector<Letter>{2, 1, 3, 5, 3, 2, 1, 4, 2});
  CHECK_THROWS(smirnov_to_polyomino(parse_word("21|3")));
}

TEST_CASE("polyomino validation") {
  CHECK_THROWS_AS(LabelledPolyomino("NE", "NE", {}), std::invalid_argument);
  CHECK_THROWS_AS(LabelledPolyomino("NNEE", "ENEN", {}), std::invalid_argument);
}

TEST_CASE("area-zero polyominoes match one-block words") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n))
      for (int k = 0; k < n; ++k) {
        const auto polys = enumerate_area_zero_polyominoes(mu, k);
        CHECK(polys.size() == enumerate_words_by_stat(mu, k, n - 1 - k).size());
        for (const auto& p : polys) {
          CHECK(p.area() == 0);
          CHECK(smirnov_to_polyomino(polyomino_to_smirnov(p)) == p);
        }
      }
}

TEST_CASE("231 avoidance and zero sminv") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t zero = 0;
    do {
      // brute-force pattern search
      bool has = false;
      for (int a = 0; a < n && !has; ++a)
        for (int b = a + 1; b < n && !has; ++b)
          for (int c = b + 1; c < n && !has; ++c) has = perm[c] < perm[a] && perm[a] < perm[b];
      CHECK(is_231_avoiding(perm) == !has);
      const SegmentedSmirnovWord w(std::vector<Letter>(perm.begin(), perm.end()), Composition({n}));
      if (oracle::sminv(w) == 0) ++zero;
      CHECK((oracle::sminv(w) == 0) == !has);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(zero == oracle::catalan(n));
  }
  CHECK(permutation_descents({3, 1, 2}) == 1);
  CHECK(permutation_ascents({3, 1, 2}) == 1);
}

TEST_CASE("noncrossing partitions") {
  const NoncrossingPartition p(9, {{1, 2, 5}, {3, 4}, {6, 8, 9}, {7}});
  CHECK(noncrossing_to_permutation(p) == std::vector<int>{5, 2, 1, 4, 3, 9, 8, 6, 7});
  CHECK(permutation_to_noncrossing({5, 2, 1, 4, 3, 9, 8, 6, 7}) == p);
  CHECK(decreasing_runs({5, 2, 1, 4, 3}) == std::vector<std::vector<int>>{{5, 2, 1}, {4, 3}});
  CHECK_THROWS_AS(NoncrossingPartition(4, {{1, 3}, {2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(NoncrossingPartition(3, {{1, 2}}), std::invalid_argument);
  for (int n = 1; n <= 7; ++n) {
    const auto all = enumerate_noncrossing_partitions(n);
    CHECK(all.size() == oracle::catalan(n));
    std::vector<std::uint64_t> by_blocks(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& q : all) {
      const auto img = noncrossing_to_permutation(q);
      CHECK(is_231_avoiding(img));
      CHECK(permutation_to_noncrossing(img) == q);
      ++by_blocks[q.blocks().size()];
    }
    for (int b = 1; b <= n; ++b) CHECK(by_blocks[static_cast<std::size_t>(b)] == oracle::binomial(n, b) * oracle::binomial(n, b - 1) / static_cast<std::uint64_t>(n));
  }
}

TEST_CASE("chromatic tallies") {
  const auto t2 = chromatic_path_enumerator(2, 2);
  CHECK(t2.at(0).at({1, 1}) == 1);
  CHECK(t2.at(1).at({1, 1}) == 1);
  CHECK(t2.at(0).size() == 1);
  for (int n = 1; n <= 5; ++n) {
    const auto tally = chromatic_path_enumerator(n, n);
    for (const auto& [d, by_mono] : tally)
      for (const auto& [exps, count] : by_mono) {
        const WeakComposition mu(exps);
        CHECK(BigInt(count) == enumerative_q_sum(mu, n - 1 - d, d, Statistic::sminv).at_one());
      }
  }
}

TEST_CASE("zero-sminv segmented permutation counts") {
  const auto counts = zero_sminv_segmented_counts(7);
  CHECK(counts == std::vector<std::uint64_t>{1, 1, 3, 10, 35, 126, 462, 1716});
  for (int n = 1; n <= 7; ++n) CHECK(counts[static_cast<std::size_t>(n)] == oracle::binomial(2 * n - 1, n));
}
