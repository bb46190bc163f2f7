#include "opk/tmap.hpp"

#include <numeric>

#include "opk/errors.hpp"

namespace opk {

Permutation tmap(const CompositionShape& alpha, const Permutation& sigma) {
  const int k = static_cast<int>(alpha.size());
  if (sigma.n() != k) throw input_error("tmap: sigma must lie in S_k");
  for (int a : alpha)
    if (a < 0) throw input_error("tmap: negative block size");

  std::vector<int> start(k + 1, 0);  // start[i] = A_i (0-based prefix sums)
  for (int i = 0; i < k; ++i) start[i + 1] = start[i] + alpha[i];
  const int total = start[k];

  std::vector<int> img(total);
  int pos = 0;
  for (int j = 1; j <= k; ++j) {
    const int blk = sigma.image(j);
    for (int r = 1; r <= alpha[blk - 1]; ++r) img[pos++] = start[blk - 1] + r;
  }
  return Permutation(img);
}

Permutation tmap_block_oracle(const CompositionShape& alpha,
                              const Permutation& sigma) {
  const int k = static_cast<int>(alpha.size());
  std::vector<int> start(k + 1, 0);
  for (int i = 0; i < k; ++i) start[i + 1] = start[i] + alpha[i];
  const int total = start[k];

  // Segment offsets of the rearranged shape (alpha_{sigma(1)}, ...).
  std::vector<int> seg_start(k + 1, 0);
  for (int j = 1; j <= k; ++j)
    seg_start[j] = seg_start[j - 1] + alpha[sigma.image(j) - 1];

  const Permutation sigma_inv = inverse(sigma);
  std::vector<int> placed(total);  // block i, offset r  ->  new position
  for (int i = 1; i <= k; ++i) {
    const int j = sigma_inv.image(i);
    for (int r = 1; r <= alpha[i - 1]; ++r)
      placed[start[i - 1] + r - 1] = seg_start[j - 1] + r;
  }
  return inverse(Permutation(placed));
}

}  // namespace opk
