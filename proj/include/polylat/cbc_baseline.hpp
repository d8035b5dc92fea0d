#pragma once

#include <cstdint>
#include <vector>

#include "polylat/cbc_dbd.hpp"
#include "polylat/weights.hpp"

namespace polylat {

enum class ModulusKind { power, primitive };

/// Modulus x^m or the tabulated primitive polynomial of degree m (b = 2).
Poly baseline_modulus(int m, ModulusKind kind);

/// Candidate components for a modulus: encodings g in 1..2^m-1 with
/// gcd(g, p) = 1, ascending.
std::vector<std::uint64_t> baseline_candidates(int m, ModulusKind kind);

/// Greedy CBC that picks each component by exhaustive search over the
/// candidates, minimising the exact worst-case error e_{2^m,r,alpha,gamma}.
/// Per-point running products are cached so each candidate costs O(2^m).
/// The first component is 1 because every candidate yields the same
/// one-dimensional point set. Ties go to the smallest encoding.
GeneratingVector construct_cbc_naive(int m, std::size_t d, double alpha, const ProductWeights& weights,
                                     ModulusKind kind, unsigned threads = 1);

/// Worst-case error of the prefix (previous..., candidate) computed from
/// scratch without the running-product cache; the baseline's own cross-check.
double baseline_error_from_scratch(int m, const std::vector<std::uint64_t>& components, double alpha,
                                   const ProductWeights& weights, ModulusKind kind);

}  // namespace polylat
