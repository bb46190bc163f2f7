#pragma once

#include <vector>

#include "opk/perm.hpp"

namespace opk {

// Shape (alpha_1, ..., alpha_k) of consecutive blocks
// L_i = (A_i + 1, ..., A_i + alpha_i), A_i = alpha_1 + ... + alpha_{i-1}.
// Entries are non-negative; empty blocks are legal.
using CompositionShape = std::vector<int>;

// Block permutation T_alpha(sigma) in S_{|alpha|}: write the two-row array
// whose upper row is (L_1 ... L_k) = (1, ..., |alpha|) and whose lower row is
// (L_{sigma(1)} ... L_{sigma(k)}), then read it entrywise as a function.
// Requires sigma in S_k with k = alpha.size().
Permutation tmap(const CompositionShape& alpha, const Permutation& sigma);

// Independent oracle: per-block index arithmetic. Block i is carried,
// offset-preservingly, onto the segment at position sigma^{-1}(i) of the
// rearranged shape; the resulting position map is inverted to give T.
// Used by tests only.
Permutation tmap_block_oracle(const CompositionShape& alpha,
                              const Permutation& sigma);

}  // namespace opk
