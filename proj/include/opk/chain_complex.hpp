#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "opk/errors.hpp"
#include "opk/sparse_matrix.hpp"

namespace opk {

// Degrees outside [min_degree, max_degree] are not stored. Whether they are
// genuinely zero is tracked separately (see ChainComplex bounded flags).
struct TruncationWindow {
  int min_degree = 0;
  int max_degree = 0;
  bool contains(int d) const { return d >= min_degree && d <= max_degree; }
};

// Chain element in a fixed degree of an implicit complex: index -> coeff.
struct Element {
  int degree = 0;
  std::map<int, Int> c;

  bool is_zero() const { return c.empty(); }
  void add(int index, const Int& v);
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scaled(const Element& a, const Int& k);
bool operator==(const Element& a, const Element& b);

// Graded chain complex of free Z-modules with an ordered, labelled basis per
// degree and integer differentials d_k : C_k -> C_{k-1}.
class ChainComplex {
 public:
  ChainComplex(std::string name, TruncationWindow w, bool bounded_below,
               bool bounded_above);

  const std::string& name() const { return name_; }
  const TruncationWindow& window() const { return window_; }
  bool bounded_below() const { return bounded_below_; }
  bool bounded_above() const { return bounded_above_; }

  void add_basis_element(int degree, const std::string& label);
  void set_differential(int degree, SparseIntMatrix m);

  // 0 when the degree lies outside the window on a bounded side; throws
  // window_error when the truncation hides unknown data.
  int dim(int degree) const;
  const std::vector<std::string>& basis(int degree) const;
  const std::string& label(int degree, int index) const;
  int index_of(int degree, const std::string& label) const;

  // d_degree, including the genuinely-zero edge matrices of bounded sides.
  SparseIntMatrix differential(int degree) const;
  bool differential_known(int degree) const;

  Element basis_element(int degree, int index) const;
  Element boundary(const Element& e) const;

  // shape checks and d(d(x)) = 0 wherever both matrices are known
  void validate() const;

  std::string format(const Element& e) const;

 private:
  std::string name_;
  TruncationWindow window_;
  bool bounded_below_;
  bool bounded_above_;
  std::map<int, std::vector<std::string>> basis_;
  std::map<int, std::map<std::string, int>> index_;
  std::map<int, SparseIntMatrix> diff_;
  static const std::vector<std::string> empty_;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

// Degree shift by k with the iterated single-shift boundary convention:
// the differential picks up the sign (-1)^k.  Labels and order are kept.
ComplexPtr suspend(const ComplexPtr& c, int k);

// Complexes are equal as labelled objects: same name excluded, same window,
// bounds, bases (order and labels) and differentials.
bool same_labelled_complex(const ChainComplex& a, const ChainComplex& b);

}  // namespace opk
