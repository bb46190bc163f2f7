#pragma once

#include <string>
#include <vector>

namespace opk {

// Permutation of {1..n}, stored as one-line images: image(i) = img_[i-1].
// Composition is "p after q": (p*q)(i) = p(q(i)), a left action.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);

  int n() const { return static_cast<int>(img_.size()); }
  int image(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  // "2134" for n <= 9, else comma separated.
  std::string label() const;

 private:
  std::vector<int> img_;
};

Permutation compose(const Permutation& p, const Permutation& q);  // p after q
Permutation inverse(const Permutation& p);

// Number of inversions mod 2; 0 = even, 1 = odd.
int parity(const Permutation& p);
long long inversion_count(const Permutation& p);

// tau_1 (+) ... (+) tau_k acting block-diagonally on {1..sum n_i}.
Permutation block_sum(const std::vector<Permutation>& parts);

// Transposition (a b) in S_n.
Permutation transposition(int n, int a, int b);

// All of S_n in lexicographic one-line order; S_0 = { empty } and
// S_1 = { id } each have one element.
std::vector<Permutation> all_permutations(int n);

Permutation perm_from_label(const std::string& label);

}  // namespace opk
