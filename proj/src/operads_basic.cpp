#include "opk/operads_basic.hpp"

#include <memory>
#include <string>

#include "opk/errors.hpp"
#include "opk/ints.hpp"
#include "opk/resources.hpp"
#include "opk/tmap.hpp"

namespace opk {

Permutation perm_circ(const Permutation& a, int i, const Permutation& b) {
    int n = a.n();
    int m = b.n();
    if (i < 1 || i > m) throw input_error("perm_circ: slot index out of range");
    // the shape lists ranks in input order; the block sum arranges the
    // inputs by where b routes them, so a lands at block b^{-1}(i), and the
    // block rearrangement of b itself is applied last
    int j = inverse(b).image(i);
    CompositionShape shape(m, 1);
    shape[i - 1] = n;
    std::vector<Permutation> parts;
    parts.reserve(m);
    for (int t = 1; t <= m; ++t) parts.push_back(t == j ? a : Permutation(1));
    return compose(tmap(shape, b), block_sum(parts));
}

Permutation perm_gamma(const std::vector<Permutation>& inputs, const Permutation& b) {
    int k = b.n();
    if (static_cast<int>(inputs.size()) != k)
        throw input_error("perm_gamma: need one input per slot");
    CompositionShape shape;
    shape.reserve(k);
    for (const Permutation& p : inputs) shape.push_back(p.n());
    std::vector<Permutation> arranged;
    arranged.reserve(k);
    for (int j = 1; j <= k; ++j) arranged.push_back(inputs[b.image(j) - 1]);
    return compose(tmap(shape, b), block_sum(arranged));
}

S0Operad::S0Operad(int max_rank) : max_rank_(max_rank) {
    if (max_rank < 1) throw input_error("perm operad needs max rank >= 1");
    std::size_t total = 0;
    for (int n = 1; n <= max_rank; ++n) {
        perms_.push_back(all_permutations(n));
        total += perms_.back().size();
    }
    charge_basis(total, "perm operad");
    for (int n = 1; n <= max_rank; ++n) {
        auto c = std::make_shared<ChainComplex>(
            "perms(" + std::to_string(n) + ")", TruncationWindow{0, 0}, true, true);
        for (const Permutation& p : perms_[n - 1]) c->add_basis_element(0, p.label());
        components_.push_back(std::move(c));
    }
}

ComplexPtr S0Operad::component(int rank) const {
    require_rank(rank);
    return components_[rank - 1];
}

const Permutation& S0Operad::basis_perm(int rank, int index) const {
    require_rank(rank);
    return perms_[rank - 1].at(index);
}

int S0Operad::index_of_perm(const Permutation& p) const {
    return component(p.n())->index_of(0, p.label());
}

OpElement S0Operad::element_of(const Permutation& p) const {
    return basis_element(p.n(), 0, index_of_perm(p));
}

Element S0Operad::act_basis(const Permutation& g, int rank, int /*degree*/,
                            int index) const {
    Permutation moved = compose(g, basis_perm(rank, index));
    Element out;
    out.degree = 0;
    out.add(index_of_perm(moved), 1);
    return out;
}

OpElement S0Operad::circ_basis(int rank_a, int /*deg_a*/, int idx_a, int i,
                               int rank_b, int /*deg_b*/, int idx_b) const {
    Permutation out = perm_circ(basis_perm(rank_a, idx_a), i, basis_perm(rank_b, idx_b));
    return element_of(out);
}

OpElement S0Operad::unit_element() const { return element_of(Permutation(1)); }

CoassocOperad::CoassocOperad(int max_rank) : max_rank_(max_rank) {
    if (max_rank < 1) throw input_error("coassoc operad needs max rank >= 1");
    charge_basis(static_cast<std::size_t>(max_rank) + 1, "coassoc operad");
    for (int n = 0; n <= max_rank; ++n) {
        auto c = std::make_shared<ChainComplex>(
            "coassoc(" + std::to_string(n) + ")", TruncationWindow{0, 0}, true, true);
        c->add_basis_element(0, "b" + std::to_string(n));
        components_.push_back(std::move(c));
    }
}

ComplexPtr CoassocOperad::component(int rank) const {
    require_rank(rank);
    return components_[rank];
}

OpElement CoassocOperad::generator(int rank) const {
    return basis_element(rank, 0, 0);
}

Element CoassocOperad::act_basis(const Permutation&, int, int, int index) const {
    Element out;
    out.degree = 0;
    out.add(index, 1);
    return out;
}

OpElement CoassocOperad::circ_basis(int rank_a, int, int, int, int rank_b, int,
                                    int) const {
    return generator(rank_a + rank_b - 1);
}

OpElement CoassocOperad::unit_element() const { return generator(1); }

SuspOperad::SuspOperad(int direction, int max_rank)
    : direction_(direction), max_rank_(max_rank) {
    if (direction != 1 && direction != -1)
        throw input_error("suspension operad direction must be +1 or -1");
    if (max_rank < 1) throw input_error("suspension operad needs max rank >= 1");
    charge_basis(static_cast<std::size_t>(max_rank), "suspension operad");
    for (int n = 1; n <= max_rank; ++n) {
        int d = direction_ * (n - 1);
        auto c = std::make_shared<ChainComplex>(
            name() + "(" + std::to_string(n) + ")", TruncationWindow{d, d}, true, true);
        c->add_basis_element(d, "s" + std::to_string(n));
        components_.push_back(std::move(c));
    }
}

std::string SuspOperad::name() const {
    return direction_ > 0 ? "susp[+1]" : "susp[-1]";
}

ComplexPtr SuspOperad::component(int rank) const {
    require_rank(rank);
    return components_[rank - 1];
}

OpElement SuspOperad::generator(int rank) const {
    return basis_element(rank, generator_degree(rank), 0);
}

Element SuspOperad::act_basis(const Permutation& g, int rank, int, int index) const {
    Element out;
    out.degree = generator_degree(rank);
    out.add(index, sign_pow(parity(g)));
    return out;
}

OpElement SuspOperad::circ_basis(int rank_a, int, int, int i, int rank_b, int,
                                 int) const {
    int s = sign_pow(static_cast<long long>(i - 1) * (rank_a - 1));
    return scaled(generator(rank_a + rank_b - 1), s);
}

OpElement SuspOperad::unit_element() const { return generator(1); }

TensorOperad::TensorOperad(OperadPtr left, OperadPtr right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (!left_ || !right_) throw input_error("tensor operad needs two factors");
    min_rank_ = std::max(left_->min_rank(), right_->min_rank());
    max_rank_ = std::min(left_->max_rank(), right_->max_rank());
    if (max_rank_ < min_rank_)
        throw input_error("tensor operad: factor rank ranges do not overlap");
    tensors_.reserve(max_rank_ - min_rank_ + 1);
    for (int n = min_rank_; n <= max_rank_; ++n)
        tensors_.emplace_back(left_->component(n), right_->component(n));
}

std::string TensorOperad::name() const {
    return "tensor(" + left_->name() + "," + right_->name() + ")";
}

ComplexPtr TensorOperad::component(int rank) const {
    return tensor_of(rank).product();
}

const Tensor& TensorOperad::tensor_of(int rank) const {
    require_rank(rank);
    return tensors_[rank - min_rank_];
}

OpElement TensorOperad::pair(const OpElement& x, const OpElement& y) const {
    if (x.rank != y.rank) throw input_error("tensor operad pair: rank mismatch");
    return OpElement(x.rank, combine(x.rank, x.degree(), x.e, y.e));
}

// x lives in left(rank) at left_degree, y in right(rank); the result has
// total degree left_degree + deg y.
Element TensorOperad::combine(int rank, int left_degree, const Element& x,
                              const Element& y) const {
    const Tensor& t = tensor_of(rank);
    Element out;
    out.degree = left_degree + y.degree;
    for (const auto& [xi, xv] : x.c)
        for (const auto& [yi, yv] : y.c)
            out.add(t.index_of(out.degree, left_degree, xi, yi), xv * yv);
    return out;
}

Element TensorOperad::act_basis(const Permutation& g, int rank, int degree,
                                int index) const {
    const Tensor& t = tensor_of(rank);
    const Tensor::Pair& p = t.pairs(degree).at(index);
    OpElement gx = left_->act(g, left_->basis_element(rank, p.left_degree, p.left_index));
    OpElement gy = right_->act(g, right_->basis_element(rank, p.right_degree, p.right_index));
    return combine(rank, p.left_degree, gx.e, gy.e);
}

OpElement TensorOperad::circ_basis(int rank_a, int deg_a, int idx_a, int i,
                                   int rank_b, int deg_b, int idx_b) const {
    const Tensor::Pair& pa = tensor_of(rank_a).pairs(deg_a).at(idx_a);
    const Tensor::Pair& pb = tensor_of(rank_b).pairs(deg_b).at(idx_b);
    OpElement xa = left_->basis_element(rank_a, pa.left_degree, pa.left_index);
    OpElement ya = right_->basis_element(rank_a, pa.right_degree, pa.right_index);
    OpElement xb = left_->basis_element(rank_b, pb.left_degree, pb.left_index);
    OpElement yb = right_->basis_element(rank_b, pb.right_degree, pb.right_index);
    OpElement xc = left_->circ(xa, i, xb);
    OpElement yc = right_->circ(ya, i, yb);
    int rank = rank_a + rank_b - 1;
    Element out = combine(rank, xc.degree(), xc.e, yc.e);
    int s = sign_pow(static_cast<long long>(pa.right_degree) * pb.left_degree);
    return scaled(OpElement(rank, out), s);
}

OpElement TensorOperad::unit_element() const {
    return pair(left_->unit(), right_->unit());
}

}  // namespace opk
