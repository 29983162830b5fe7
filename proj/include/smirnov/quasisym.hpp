#pragma once

#include <map>
#include <vector>

#include "smirnov/core.hpp"
#include "smirnov/qpoly.hpp"

namespace smirnov {

struct StandardizationProfile {
  std::vector<bool> thick;                // 0-based positions
  std::vector<std::size_t> reading_rank;  // reading_rank[i] = st(w)_i, 1-based
};

// Thick: first letter of its block, or preceded by a larger letter.
std::vector<bool> thick_positions(const SegmentedSmirnovWord& w);
StandardizationProfile standardization_profile(const SegmentedSmirnovWord& w);
SegmentedSmirnovWord standardize(const SegmentedSmirnovWord& w);

bool is_segmented_permutation(const SegmentedSmirnovWord& w);
// Values v in [1, n-1] that split sigma. Throws std::invalid_argument unless
// sigma uses each of 1..n once.
std::vector<int> split_set(const SegmentedSmirnovWord& sigma);

// Whether w lies in the standardization fiber described by sigma's splitting
// data: w at the position of v+1 is at least w at the position of v, and
// strictly larger whenever v splits.
bool satisfies_fiber_conditions(const SegmentedSmirnovWord& sigma, const SegmentedSmirnovWord& w);

struct FundamentalTerm {
  std::vector<int> split_set;
  Composition composition;
  QPolynomial coefficient;
};

// Terms grouped by split set, in increasing lexicographic order of the set.
std::vector<FundamentalTerm> fundamental_expansion(int n, int k, int l);

// Exponent vector of length alphabet_bound -> coefficient.
using MonomialExpansion = std::map<std::vector<int>, QPolynomial>;

MonomialExpansion expand_to_monomials(const std::vector<FundamentalTerm>& terms, int alphabet_bound);
// Sum of q^sminv(w) x^w over SW(n,k,l) with letters <= alphabet_bound.
MonomialExpansion direct_monomial_expansion(int n, int k, int l, int alphabet_bound);

}  // namespace smirnov
