#pragma once

#include <map>
#include <string>
#include <vector>

#include "opk/chain_complex.hpp"
#include "opk/graded_map.hpp"
#include "opk/homology.hpp"
#include "opk/perm.hpp"

namespace opk {

// One basis element g[g1|...|gk] of the bar resolution of Z over Z[S_n]:
// a free module generator [g1|...|gk] (every letter != identity) moved by
// the group element g acting on the left.
struct BarWord {
  Permutation lead;
  std::vector<Permutation> letters;

  int degree() const { return static_cast<int>(letters.size()); }
  bool operator==(const BarWord& o) const {
    return lead == o.lead && letters == o.letters;
  }
};

std::string bar_label(const BarWord& w);
// Inverse of bar_label for elements of S_n; rejects identity letters.
BarWord parse_bar_label(const std::string& s, int n);

// The bar resolution of Z over Z[S_n], stored through max_degree. Degrees
// above the cutoff exist but are not stored, so the complex is flagged
// unbounded above. d(g[g1|..|gk]) = (g g1)[g2|..]
// + sum_i (-1)^i g[..|g_i g_{i+1}|..] + (-1)^k g[g1|..|g_{k-1}], with
// merged identity letters dropped.
class BarComplex {
 public:
  BarComplex(int group_rank, int max_degree);

  const ComplexPtr& complex() const { return c_; }
  int group_rank() const { return n_; }
  int max_degree() const { return max_degree_; }

  const std::vector<BarWord>& words(int degree) const;
  const BarWord& word(int degree, int index) const;
  int index_of(const BarWord& w) const;

  // free generators [g1|...|gk], i.e. the words with identity lead, in
  // the order shared by the coefficient complexes
  const std::vector<std::vector<Permutation>>& generators(int degree) const;
  int generator_index(int degree, const std::vector<Permutation>& ls) const;

  // h(g[g1|..]) = [g|g1|..] for g != identity, 0 otherwise; degree +1
  GradedMap contraction() const;
  // composite of the augmentation g[] -> 1 with the unit 1 -> e[]
  GradedMap unit_counit() const;
  // left multiplication by g on the lead, a degree-0 chain map
  GradedMap group_action(const Permutation& g) const;

 private:
  int n_, max_degree_;
  ComplexPtr c_;
  std::map<int, std::vector<BarWord>> words_;
  std::map<int, std::vector<std::vector<Permutation>>> gens_;
  std::map<int, std::map<std::string, int>> gen_pos_;
};

// Coefficients in Z, acting trivially or by parity sign: the quotient
// complex M (x)_{Z[S_n]} Bar with basis [g1|...|gk].
ComplexPtr bar_coefficient_complex(const BarComplex& bar, bool sign_module);

// Its twisted differential Q_k -> Q_{k-1} as a bare matrix.
SparseIntMatrix coefficient_differential(const BarComplex& bar,
                                         bool sign_module, int k);

// Cochain complex Hom_{Z[S_n]}(Bar, M) regraded to negative degrees:
// degree -k holds the k-cochains, the differential at -k is the
// transposed twisted boundary, and H^k = H_{-k}.
ComplexPtr bar_cochain_complex(const BarComplex& bar, bool sign_module);

std::map<int, HomologySummand> group_homology(int n, bool sign_module, int lo,
                                              int hi);
// key k holds H^k
std::map<int, HomologySummand> group_cohomology(int n, bool sign_module,
                                                int lo, int hi);

// c assigns an integer to each generator of degree k (by generator index).
bool is_cocycle(const BarComplex& bar, bool sign_module, int k,
                const std::map<int, Int>& c);
bool is_coboundary(const BarComplex& bar, bool sign_module, int k,
                   const std::map<int, Int>& c);

}  // namespace opk
