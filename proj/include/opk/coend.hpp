#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "opk/operad.hpp"
#include "opk/tensor.hpp"

namespace opk {

// One basis map between a complex and a tensor power of it: the map that
// sends a single basis element to a single basis word (or the other way
// round) and everything else to zero.
struct HomEntry {
    int letter_degree = 0;
    int letter_index = 0;
    Power::Word word;  // carrier coordinates (degree, index) per factor
};

// Letters move to the slots a permutation dictates; the sign counts the
// Koszul inversions, one (-1)^{deg s * deg t} per swapped pair.
std::pair<Power::Word, int> permute_word(const Permutation& g,
                                         const Power::Word& w);

// Operad of all maps C -> C^n for a carrier bounded on both sides.  The
// rank-n component in degree d has basis "[x->w]" with deg w - deg x = d.
// Substitution composes through one output factor,
//   a circ_i b = (1 (x) .. (x) a (x) .. (x) 1) . b,
// and the group permutes output factors, both with Koszul signs.  Rank 0,
// when enabled, is the full dual Hom(C, Z) written "[x->e]".
class CoEndOperad : public Operad {
public:
    CoEndOperad(ComplexPtr carrier, int max_rank, bool with_rank_zero = false);

    std::string name() const override;
    int min_rank() const override { return with_rank_zero_ ? 0 : 1; }
    int max_rank() const override { return max_rank_; }
    ComplexPtr component(int rank) const override;

    const ComplexPtr& carrier() const { return carrier_; }

    HomEntry entry(int rank, int degree, int index) const;
    int entry_index(int rank, const HomEntry& he) const;
    static int entry_degree(const HomEntry& he);

protected:
    Element act_basis(const Permutation& g, int rank, int degree, int index) const override;
    OpElement circ_basis(int rank_a, int deg_a, int idx_a, int i,
                         int rank_b, int deg_b, int idx_b) const override;
    OpElement unit_element() const override;

private:
    struct Table;
    const Table& table(int rank) const;

    ComplexPtr carrier_;
    int max_rank_;
    bool with_rank_zero_;
    std::vector<std::shared_ptr<const Table>> tables_;  // index = rank
};

// Operad of all maps C^n -> C; basis "[w->x]" in degree deg x - deg w.
// Substitution feeds the left map into one input slot of the right one,
//   a circ_i b = (-1)^{deg a deg b} b . (1 (x) .. (x) a (x) .. (x) 1);
// the twist is forced by the Leibniz rule because the substituted map acts
// first.  The group permutes input factors through the inverse, so the
// action stays a left action.
class EndOperad : public Operad {
public:
    EndOperad(ComplexPtr carrier, int max_rank);

    std::string name() const override;
    int min_rank() const override { return 1; }
    int max_rank() const override { return max_rank_; }
    ComplexPtr component(int rank) const override;

    const ComplexPtr& carrier() const { return carrier_; }

    HomEntry entry(int rank, int degree, int index) const;
    int entry_index(int rank, const HomEntry& he) const;
    static int entry_degree(const HomEntry& he);

protected:
    Element act_basis(const Permutation& g, int rank, int degree, int index) const override;
    OpElement circ_basis(int rank_a, int deg_a, int idx_a, int i,
                         int rank_b, int deg_b, int idx_b) const override;
    OpElement unit_element() const override;

private:
    struct Table;
    const Table& table(int rank) const;

    ComplexPtr carrier_;
    int max_rank_;
    std::vector<std::shared_ptr<const Table>> tables_;  // index = rank - 1
};

// Complex with a single generator "u" in the given degree and no other
// data; the carrier that turns the map operad above into the one-line
// suspension rules.
ComplexPtr line_complex(int degree);

// Identity-on-generators morphism from the map operad of line_complex(dir)
// onto the closed-form suspension operad of the same direction.  Each rank
// has a single basis map on both sides and every coefficient is +1; the
// morphism checks verify that the substitution signs (-1)^{(i-1)(n-1)} and
// the parity action drop out of the map operad by themselves.
OperadMorphism suspension_line_iso(int direction, int max_rank);

// Interleaving morphism CoEnd(A) (x) CoEnd(B) -> CoEnd(A (x) B): a pair of
// maps is sent to the factor-shuffled tensor map with Koszul signs.  The
// returned morphism owns freshly built endpoint operads; reach them through
// from() / to().
OperadMorphism coend_pairing(ComplexPtr a, ComplexPtr b, int max_rank);

}  // namespace opk
