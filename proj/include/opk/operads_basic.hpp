#pragma once

#include <vector>

#include "opk/operad.hpp"
#include "opk/tensor.hpp"

namespace opk {

// Substitute a into slot i of b, 1 <= i <= size(b).  The block of new slots
// lands where b routes slot i, so the result equals
//   compose(tmap(shape_j, b), block_sum(1,..,a@j,..,1)),  j = b^{-1}(i),
// which is the unique choice equivariant for the left translation action.
Permutation perm_circ(const Permutation& a, int i, const Permutation& b);

// Closed form for the full composition gamma(a_1..a_k; b): blocks arranged
// by where b sends each slot, then the block rearrangement of b itself.
Permutation perm_gamma(const std::vector<Permutation>& inputs, const Permutation& b);

// Group rings of the symmetric groups in degree 0; composition substitutes
// permutations blockwise, the group acts by left translation.
class S0Operad : public Operad {
public:
    explicit S0Operad(int max_rank);

    std::string name() const override { return "perms"; }
    int min_rank() const override { return 1; }
    int max_rank() const override { return max_rank_; }
    ComplexPtr component(int rank) const override;

    const Permutation& basis_perm(int rank, int index) const;
    int index_of_perm(const Permutation& p) const;
    OpElement element_of(const Permutation& p) const;

protected:
    Element act_basis(const Permutation& g, int rank, int degree, int index) const override;
    OpElement circ_basis(int rank_a, int deg_a, int idx_a, int i,
                         int rank_b, int deg_b, int idx_b) const override;
    OpElement unit_element() const override;

private:
    int max_rank_;
    std::vector<ComplexPtr> components_;
    std::vector<std::vector<Permutation>> perms_;
};

// One generator per rank in degree 0, trivial action, composition collapses
// generators.  Rank 0 is included: substituting it deletes a slot.
class CoassocOperad : public Operad {
public:
    explicit CoassocOperad(int max_rank);

    std::string name() const override { return "coassoc"; }
    int min_rank() const override { return 0; }
    int max_rank() const override { return max_rank_; }
    ComplexPtr component(int rank) const override;

    OpElement generator(int rank) const;

protected:
    Element act_basis(const Permutation& g, int rank, int degree, int index) const override;
    OpElement circ_basis(int rank_a, int deg_a, int idx_a, int i,
                         int rank_b, int deg_b, int idx_b) const override;
    OpElement unit_element() const override;

private:
    int max_rank_;
    std::vector<ComplexPtr> components_;
};

// One generator s_n per rank, placed in degree n-1 (direction +1) or 1-n
// (direction -1).  Both directions share the structure constants
//   s_n o_i s_m = (-1)^{(i-1)(n-1)} s_{n+m-1}
// and the sign action of the symmetric group.
class SuspOperad : public Operad {
public:
    SuspOperad(int direction, int max_rank);

    std::string name() const override;
    int min_rank() const override { return 1; }
    int max_rank() const override { return max_rank_; }
    ComplexPtr component(int rank) const override;

    int direction() const { return direction_; }
    int generator_degree(int rank) const { return direction_ * (rank - 1); }
    OpElement generator(int rank) const;

protected:
    Element act_basis(const Permutation& g, int rank, int degree, int index) const override;
    OpElement circ_basis(int rank_a, int deg_a, int idx_a, int i,
                         int rank_b, int deg_b, int idx_b) const override;
    OpElement unit_element() const override;

private:
    int direction_;
    int max_rank_;
    std::vector<ComplexPtr> components_;
};

// Componentwise tensor product.  The action is diagonal; composition
// interleaves with the sign (-1)^{deg(right of a) * deg(left of b)}.
class TensorOperad : public Operad {
public:
    TensorOperad(OperadPtr left, OperadPtr right);

    std::string name() const override;
    int min_rank() const override { return min_rank_; }
    int max_rank() const override { return max_rank_; }
    ComplexPtr component(int rank) const override;

    OperadPtr left() const { return left_; }
    OperadPtr right() const { return right_; }

    // x and y must live in matching ranks of the factors.
    OpElement pair(const OpElement& x, const OpElement& y) const;

    // pairing table behind component(rank), for decoding basis indices
    const Tensor& component_tensor(int rank) const { return tensor_of(rank); }

protected:
    Element act_basis(const Permutation& g, int rank, int degree, int index) const override;
    OpElement circ_basis(int rank_a, int deg_a, int idx_a, int i,
                         int rank_b, int deg_b, int idx_b) const override;
    OpElement unit_element() const override;

private:
    const Tensor& tensor_of(int rank) const;
    Element combine(int rank, int left_degree, const Element& x, const Element& y) const;

    OperadPtr left_;
    OperadPtr right_;
    int min_rank_;
    int max_rank_;
    std::vector<Tensor> tensors_;
};

}  // namespace opk
