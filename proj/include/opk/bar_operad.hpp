#pragma once

#include <memory>
#include <vector>

#include "opk/bar.hpp"
#include "opk/operad.hpp"
#include "opk/operads_basic.hpp"
#include "opk/tensor.hpp"

namespace opk {

// Operad whose rank-n component is the bar resolution of Z over Z[S_n],
// stored through a shared degree cap.  Substitution runs levelwise: a bar
// word converts to its chain of group elements, the two chains interleave
// over every monotone staircase with the shuffle sign, and each level
// composes by permutation substitution.  Composites above the degree cap
// throw window_error.  The group acts by left translation on the lead.
class BarOperad : public Operad {
public:
    BarOperad(int max_rank, int max_degree);

    std::string name() const override { return "bar"; }
    int min_rank() const override { return 1; }
    int max_rank() const override { return max_rank_; }
    ComplexPtr component(int rank) const override;

    int max_degree() const { return max_degree_; }
    const BarComplex& bar(int rank) const;
    OpElement element_of(const BarWord& w) const;

protected:
    Element act_basis(const Permutation& g, int rank, int degree, int index) const override;
    OpElement circ_basis(int rank_a, int deg_a, int idx_a, int i,
                         int rank_b, int deg_b, int idx_b) const override;
    OpElement unit_element() const override;

private:
    int max_rank_;
    int max_degree_;
    std::vector<BarComplex> bars_;
};

using BarOperadPtr = std::shared_ptr<const BarOperad>;

// Levels of the staircase under a bar word: h_0 = lead, h_t = h_{t-1} g_t.
std::vector<Permutation> word_levels(const BarWord& w);

// One front/back cut of a bar word: the first `cut` letters keep the lead,
// the rest start from level `cut`.
std::pair<BarWord, BarWord> split_word(const BarWord& w, int cut);

// Rank-indexed front/back splitting diagonal on bar words,
//   g[g_1|..|g_k] -> sum_i g[g_1|..|g_i] (x) (g g_1..g_i)[g_{i+1}|..|g_k],
// strictly coassociative and counital per rank.  It also turns substitution
// into slotwise substitution on the nose; that is a law about the whole
// rank-indexed family, not a map between operads, so it lives in its own
// checker instead of an OperadMorphism.
class BarDiagonal {
public:
    explicit BarDiagonal(BarOperadPtr op);

    const BarOperadPtr& operad() const { return op_; }
    const Tensor& square(int rank) const;
    const GradedMap& component(int rank) const;

    // counit against the degree-0-to-unit collapse on either side
    bool is_counital(int rank) const;
    // (diag (x) 1) diag = (1 (x) diag) diag, checked entrywise
    bool is_coassociative(int rank, int degree_cap) const;

private:
    BarOperadPtr op_;
    std::vector<std::shared_ptr<Tensor>> squares_;
    std::vector<GradedMap> maps_;
};

// Verifies diag(a circ_i b) = sum (a' circ_i b') (x) (a'' circ_i b'') with
// the interchange sign (-1)^{deg a'' * deg b'} over every basis instance in
// the budget.  Instances whose composite would exceed the stored degree cap
// are recorded as skips.
CheckReport check_diagonal_substitution(const BarDiagonal& d,
                                        const AxiomOptions& opts);

// Coefficient collapse g[..] -> generator: every rank lands on the one
// generator of its rank and every positive degree dies.  A full operad
// morphism, chain map included.
OperadMorphism bar_augmentation(BarOperadPtr bar,
                                std::shared_ptr<const CoassocOperad> target);

// Degree-0 slice g[] -> g.  Only valid in degree 0: the group ring carries
// no differential, so the slice cannot extend to a chain map and the
// morphism is validity-restricted; checks skip other degrees.
OperadMorphism bar_degree_zero_slice(BarOperadPtr bar,
                                     std::shared_ptr<const S0Operad> target);

}  // namespace opk
