#include "opk/bar_operad.hpp"

#include <array>
#include <map>
#include <sstream>
#include <utility>

#include "opk/errors.hpp"
#include "opk/ints.hpp"

namespace opk {

std::vector<Permutation> word_levels(const BarWord& w) {
    std::vector<Permutation> h{w.lead};
    h.reserve(w.letters.size() + 1);
    for (const Permutation& g : w.letters) h.push_back(compose(h.back(), g));
    return h;
}

std::pair<BarWord, BarWord> split_word(const BarWord& w, int cut) {
    if (cut < 0 || cut > w.degree())
        throw input_error("split_word: cut outside the word");
    const std::vector<Permutation> h = word_levels(w);
    BarWord front{w.lead, {w.letters.begin(), w.letters.begin() + cut}};
    BarWord back{h[cut], {w.letters.begin() + cut, w.letters.end()}};
    return {std::move(front), std::move(back)};
}

namespace {

// next p-subset of {0..total-1} in lexicographic order
bool next_combination(std::vector<int>& comb, int total) {
    const int k = static_cast<int>(comb.size());
    for (int c = k - 1; c >= 0; --c) {
        if (comb[c] < total - (k - c)) {
            ++comb[c];
            for (int d = c + 1; d < k; ++d) comb[d] = comb[d - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

BarOperad::BarOperad(int max_rank, int max_degree)
    : max_rank_(max_rank), max_degree_(max_degree) {
    if (max_rank_ < 1)
        throw input_error("bar operad: max rank must be at least 1");
    if (max_degree_ < 0)
        throw input_error("bar operad: max degree must not be negative");
    bars_.reserve(max_rank_);
    for (int n = 1; n <= max_rank_; ++n) bars_.emplace_back(n, max_degree_);
}

ComplexPtr BarOperad::component(int rank) const {
    require_rank(rank);
    return bars_[rank - 1].complex();
}

const BarComplex& BarOperad::bar(int rank) const {
    require_rank(rank);
    return bars_[rank - 1];
}

OpElement BarOperad::element_of(const BarWord& w) const {
    const int rank = w.lead.n();
    const BarComplex& b = bar(rank);
    OpElement out(rank, Element{w.degree(), {}});
    out.e.add(b.index_of(w), 1);
    return out;
}

Element BarOperad::act_basis(const Permutation& g, int rank, int degree,
                             int index) const {
    const BarComplex& b = bar(rank);
    const BarWord& w = b.word(degree, index);
    Element out{degree, {}};
    out.add(b.index_of({compose(g, w.lead), w.letters}), 1);
    return out;
}

OpElement BarOperad::circ_basis(int rank_a, int deg_a, int idx_a, int i,
                                int rank_b, int deg_b, int idx_b) const {
    const int rank = rank_a + rank_b - 1;
    if (deg_a + deg_b > max_degree_) {
        std::ostringstream os;
        os << "bar operad: composite degree " << deg_a + deg_b
           << " exceeds the stored cap " << max_degree_;
        throw window_error(os.str());
    }
    const BarComplex& result = bar(rank);
    const std::vector<Permutation> x = word_levels(bar(rank_a).word(deg_a, idx_a));
    const std::vector<Permutation> y = word_levels(bar(rank_b).word(deg_b, idx_b));
    const int p = deg_a, q = deg_b;

    OpElement out(rank, Element{p + q, {}});
    std::vector<int> comb(p);
    for (int c = 0; c < p; ++c) comb[c] = c;
    do {
        long long inversions = 0;
        for (int c = 0; c < p; ++c) inversions += comb[c] - c;

        std::vector<Permutation> z;
        z.reserve(p + q + 1);
        z.push_back(perm_circ(x[0], i, y[0]));
        int xi = 0, yi = 0, next_x = 0;
        for (int s = 0; s < p + q; ++s) {
            if (next_x < p && comb[next_x] == s) {
                ++xi;
                ++next_x;
            } else {
                ++yi;
            }
            z.push_back(perm_circ(x[xi], i, y[yi]));
        }

        BarWord w{z[0], {}};
        bool degenerate = false;
        for (int t = 1; t <= p + q; ++t) {
            Permutation letter = compose(inverse(z[t - 1]), z[t]);
            if (letter.is_identity()) {
                degenerate = true;
                break;
            }
            w.letters.push_back(std::move(letter));
        }
        if (!degenerate) out.e.add(result.index_of(w), sign_pow(inversions));
    } while (next_combination(comb, p + q));
    return out;
}

OpElement BarOperad::unit_element() const {
    return element_of({Permutation(1), {}});
}

BarDiagonal::BarDiagonal(BarOperadPtr op) : op_(std::move(op)) {
    for (int n = 1; n <= op_->max_rank(); ++n) {
        const BarComplex& bar = op_->bar(n);
        auto square = std::make_shared<Tensor>(bar.complex(), bar.complex());
        GradedMap f(bar.complex(), square->product(), 0);
        for (int k = 0; k <= op_->max_degree(); ++k) {
            for (int j = 0; j < bar.complex()->dim(k); ++j) {
                const BarWord& w = bar.word(k, j);
                for (int cut = 0; cut <= k; ++cut) {
                    const auto [front, back] = split_word(w, cut);
                    f.add_entry(k,
                                square->index_of(k, cut, bar.index_of(front),
                                                 bar.index_of(back)),
                                j, 1);
                }
            }
        }
        squares_.push_back(std::move(square));
        maps_.push_back(std::move(f));
    }
}

const Tensor& BarDiagonal::square(int rank) const {
    return *squares_.at(rank - 1);
}

const GradedMap& BarDiagonal::component(int rank) const {
    return maps_.at(rank - 1);
}

bool BarDiagonal::is_counital(int rank) const {
    const BarComplex& bar = op_->bar(rank);
    const Tensor& sq = square(rank);
    const GradedMap& f = component(rank);
    for (int k = 0; k <= op_->max_degree(); ++k) {
        for (int j = 0; j < bar.complex()->dim(k); ++j) {
            // collapsing either factor of degree 0 must give the word back:
            // the counit sends every degree-0 word to 1
            const Element img = f.apply(bar.complex()->basis_element(k, j));
            Element left_slice{k, {}}, right_slice{k, {}};
            for (const auto& [idx, v] : img.c) {
                const Tensor::Pair& p = sq.pairs(k)[idx];
                if (p.left_degree == 0) right_slice.add(p.right_index, v);
                if (p.right_degree == 0) left_slice.add(p.left_index, v);
            }
            Element want{k, {}};
            want.add(j, 1);
            if (!(left_slice == want) || !(right_slice == want)) return false;
        }
    }
    return true;
}

bool BarDiagonal::is_coassociative(int rank, int degree_cap) const {
    const BarComplex& bar = op_->bar(rank);
    const Tensor& sq = square(rank);
    const GradedMap& f = component(rank);
    const int top = std::min(degree_cap, op_->max_degree());
    using Triple = std::array<int, 6>;
    for (int k = 0; k <= top; ++k) {
        for (int j = 0; j < bar.complex()->dim(k); ++j) {
            // expand both association orders into (piece, piece, piece) keys
            std::map<Triple, Int> lhs, rhs;
            const Element img = f.apply(bar.complex()->basis_element(k, j));
            for (const auto& [idx, v] : img.c) {
                const Tensor::Pair& p = sq.pairs(k)[idx];
                const Element left_again = f.apply(
                    bar.complex()->basis_element(p.left_degree, p.left_index));
                for (const auto& [idx2, v2] : left_again.c) {
                    const Tensor::Pair& q = sq.pairs(p.left_degree)[idx2];
                    lhs[{q.left_degree, q.left_index, q.right_degree,
                         q.right_index, p.right_degree, p.right_index}] +=
                        v * v2;
                }
                const Element right_again = f.apply(
                    bar.complex()->basis_element(p.right_degree, p.right_index));
                for (const auto& [idx2, v2] : right_again.c) {
                    const Tensor::Pair& q = sq.pairs(p.right_degree)[idx2];
                    rhs[{p.left_degree, p.left_index, q.left_degree,
                         q.left_index, q.right_degree, q.right_index}] +=
                        v * v2;
                }
            }
            for (auto it = lhs.begin(); it != lhs.end();)
                it = it->second == 0 ? lhs.erase(it) : std::next(it);
            for (auto it = rhs.begin(); it != rhs.end();)
                it = it->second == 0 ? rhs.erase(it) : std::next(it);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

CheckReport check_diagonal_substitution(const BarDiagonal& d,
                                        const AxiomOptions& opts) {
    CheckReport report;
    const BarOperad& op = *d.operad();
    const int hi = std::min(opts.max_rank, op.max_rank());
    long long overflow = 0;
    for (int n = 1; n <= hi; ++n)
        for (int m = 1; n + m - 1 <= hi; ++m) {
            const int r = n + m - 1;
            for (const OpElement& a : op.basis_up_to(n, opts.max_degree))
                for (const OpElement& b : op.basis_up_to(m, opts.max_degree)) {
                    if (a.degree() + b.degree() > op.max_degree()) {
                        overflow += m;
                        continue;
                    }
                    for (int i = 1; i <= m; ++i) {
                        const Element lhs =
                            d.component(r).apply(op.circ(a, i, b).e);

                        Element rhs{a.degree() + b.degree(), {}};
                        const Element da = d.component(n).apply(a.e);
                        const Element db = d.component(m).apply(b.e);
                        for (const auto& [ia, va] : da.c) {
                            const Tensor::Pair& pa =
                                d.square(n).pairs(a.degree())[ia];
                            for (const auto& [ib, vb] : db.c) {
                                const Tensor::Pair& pb =
                                    d.square(m).pairs(b.degree())[ib];
                                const OpElement first = op.circ(
                                    op.basis_element(n, pa.left_degree, pa.left_index), i,
                                    op.basis_element(m, pb.left_degree, pb.left_index));
                                const OpElement second = op.circ(
                                    op.basis_element(n, pa.right_degree, pa.right_index), i,
                                    op.basis_element(m, pb.right_degree, pb.right_index));
                                const int sign =
                                    sign_pow(static_cast<long long>(pa.right_degree) *
                                             pb.left_degree);
                                for (const auto& [if_, vf] : first.e.c)
                                    for (const auto& [is_, vs] : second.e.c)
                                        rhs.add(d.square(r).index_of(
                                                    a.degree() + b.degree(),
                                                    first.degree(), if_, is_),
                                                va * vb * vf * vs * sign);
                            }
                        }
                        ++report.checked;
                        if (!(lhs == rhs)) {
                            std::ostringstream os;
                            os << "rank " << n << " deg " << a.degree()
                               << " o_" << i << " rank " << m << " deg "
                               << b.degree();
                            report.fail(os.str());
                            if (static_cast<int>(report.failures.size()) >=
                                opts.max_failures)
                                return report;
                        }
                    }
                }
        }
    if (overflow > 0)
        report.skip("diagonal substitution: " + std::to_string(overflow) +
                    " instance(s) above the stored degree cap");
    return report;
}

OperadMorphism bar_augmentation(BarOperadPtr bar,
                                std::shared_ptr<const CoassocOperad> target) {
    const int hi = std::min(bar->max_rank(), target->max_rank());
    OperadMorphism m(bar, target, "bar collapse onto one generator per rank");
    for (int n = 1; n <= hi; ++n) {
        GradedMap f(bar->component(n), target->component(n), 0);
        for (int j = 0; j < bar->component(n)->dim(0); ++j)
            f.add_entry(0, 0, j, 1);
        m.set_component(n, f);
    }
    return m;
}

OperadMorphism bar_degree_zero_slice(BarOperadPtr bar,
                                     std::shared_ptr<const S0Operad> target) {
    const int hi = std::min(bar->max_rank(), target->max_rank());
    OperadMorphism m(bar, target, "bar degree zero slice");
    for (int n = 1; n <= hi; ++n) {
        GradedMap f(bar->component(n), target->component(n), 0);
        for (int j = 0; j < bar->component(n)->dim(0); ++j) {
            const BarWord& w = bar->bar(n).word(0, j);
            f.add_entry(0, target->index_of_perm(w.lead), j, 1);
        }
        f.restrict_validity(0, 0);
        m.set_component(n, f);
    }
    return m;
}

}  // namespace opk
