#pragma once

#include <map>
#include <string>
#include <vector>

#include "opk/chain_complex.hpp"
#include "opk/graded_map.hpp"

namespace opk {

// H_k as an abstract finitely generated abelian group: free part and the
// torsion divisors > 1 in ascending divisibility order.
struct HomologySummand {
  int free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologySummand& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};

std::string format(const HomologySummand& h);

// H_k for lo <= k <= hi. Throws window_error when a requested group is not
// determined by the stored window (truncated data never reads as zero).
std::map<int, HomologySummand> homology(const ChainComplex& c, int lo, int hi);

// Mapping cone of a degree-0 map f : C -> D.  Cone_k = C_{k-1} (+) D_k with
// d(c, d) = (-dc, dd - f(c)); labels are prefixed "c:" and "d:".
ComplexPtr mapping_cone(const GradedMap& f);

// f induces isomorphisms H_k(C) -> H_k(D) for lo <= k <= hi, decided by
// vanishing of H_k(cone f) for lo <= k <= hi + 1.
bool is_quasi_iso(const GradedMap& f, int lo, int hi);

}  // namespace opk
