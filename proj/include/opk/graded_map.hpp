#pragma once

#include <map>
#include <optional>

#include "opk/chain_complex.hpp"
#include "opk/sparse_matrix.hpp"

namespace opk {

// A degree-k linear map between chain complexes, stored as one integer
// matrix per source degree. Blocks left unset are zero. A map carries a
// validity interval of source degrees: outside it the map is simply not
// known, and asking for a block there throws window_error. Operations
// that combine maps shrink validity to where every ingredient is known.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(ComplexPtr source, ComplexPtr target, int degree);

  static GradedMap zero(ComplexPtr source, ComplexPtr target, int degree);
  static GradedMap identity(ComplexPtr c);

  const ComplexPtr& source() const { return src_; }
  const ComplexPtr& target() const { return tgt_; }
  int degree() const { return degree_; }

  int valid_min() const { return valid_min_; }
  int valid_max() const { return valid_max_; }
  void restrict_validity(int lo, int hi);
  bool valid_at(int source_degree) const;

  void set_block(int source_degree, SparseIntMatrix m);
  void add_entry(int source_degree, int target_index, int source_index,
                 const Int& value);

  // Zero-extends past a bounded end of the source; throws window_error
  // when the block is genuinely unknown.
  SparseIntMatrix block(int source_degree) const;

  Element apply(const Element& x) const;

  bool is_zero_on(int lo, int hi) const;

 private:
  ComplexPtr src_, tgt_;
  int degree_ = 0;
  int valid_min_ = 0, valid_max_ = -1;
  std::map<int, SparseIntMatrix> blocks_;
};

// f after g; degrees add.
GradedMap compose(const GradedMap& f, const GradedMap& g);
GradedMap add(const GradedMap& f, const GradedMap& g);
GradedMap sub(const GradedMap& f, const GradedMap& g);
GradedMap scaled(const GradedMap& f, const Int& k);

// d(f) = d_target . f - (-1)^deg(f) f . d_source, one degree lower.
GradedMap boundary_of_map(const GradedMap& f);

// The differential of c packaged as a degree -1 map c -> c.
GradedMap differential_map(ComplexPtr c);

// True when boundary_of_map(f) vanishes for source degrees lo..hi.
bool is_chain_map_on(const GradedMap& f, int lo, int hi);

bool equal_on(const GradedMap& f, const GradedMap& g, int lo, int hi);

// Degreewise direct sum with the canonical inclusions and projections.
// Labels of summand i are prefixed "s<i>:".
struct DirectSumParts {
  ComplexPtr sum;
  std::vector<GradedMap> include;  // summand -> sum
  std::vector<GradedMap> project;  // sum -> summand
};
DirectSumParts direct_sum(const std::vector<ComplexPtr>& parts,
                          const std::string& name);

}  // namespace opk
