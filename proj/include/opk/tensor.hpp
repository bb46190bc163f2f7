#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "opk/chain_complex.hpp"
#include "opk/graded_map.hpp"

namespace opk {

// Tensor product of two chain complexes, both bounded below. The basis
// in total degree n is every pair (a, b) with deg a + deg b = n, ordered
// by (deg a, index a, deg b, index b); labels read "(a)(x)(b)".
// d(a(x)b) = da(x)b + (-1)^{deg a} a(x)db.
class Tensor {
 public:
  Tensor(ComplexPtr left, ComplexPtr right);

  const ComplexPtr& left() const { return a_; }
  const ComplexPtr& right() const { return b_; }
  const ComplexPtr& product() const { return prod_; }

  struct Pair {
    int left_degree, left_index, right_degree, right_index;
  };

  const std::vector<Pair>& pairs(int degree) const;
  int index_of(int degree, int left_degree, int left_index,
               int right_index) const;

 private:
  ComplexPtr a_, b_, prod_;
  std::map<int, std::vector<Pair>> table_;
  std::map<std::tuple<int, int, int, int>, int> pos_;
};

// n-fold tensor power of a complex bounded on both sides. Words are
// ordered lexicographically by (deg_1, idx_1, ..., deg_n, idx_n); a
// 1-fold power reuses the factor labels verbatim.
class Power {
 public:
  Power(ComplexPtr factor, int arity);

  const ComplexPtr& factor() const { return c_; }
  int arity() const { return n_; }
  const ComplexPtr& product() const { return prod_; }

  // factor coordinates of one basis word: (degree, index) per slot
  using Word = std::vector<std::pair<int, int>>;
  const Word& word(int degree, int index) const;
  int index_of(const Word& w) const;
  static int word_degree(const Word& w);

  std::string word_label(const Word& w) const;

 private:
  ComplexPtr c_;
  int n_ = 1;
  ComplexPtr prod_;
  std::map<int, std::vector<Word>> words_;
  std::map<Word, int> pos_;
};

// f(x)g on tensor products: (f(x)g)(a(x)b) = (-1)^{deg g deg a} fa(x)gb.
GradedMap tensor_product_map(const GradedMap& f, const GradedMap& g,
                             const Tensor& from, const Tensor& to);

// a(x)b -> (-1)^{deg a deg b} b(x)a.
GradedMap transpose_map(const Tensor& from, const Tensor& to);

// x -> up^k x with no sign. Thanks to the (-1)^k in the shifted
// differential this is a degree-k chain map (its graded boundary is 0).
GradedMap degree_shift_map(ComplexPtr from, ComplexPtr to, int k);

// x -> (-1)^{k deg x} up^k x. Strictly intertwines the differentials,
// d_to . f = f . d_from with no sign; for odd k it is not a graded cycle.
GradedMap signed_degree_shift_map(ComplexPtr from, ComplexPtr to, int k);

}  // namespace opk
