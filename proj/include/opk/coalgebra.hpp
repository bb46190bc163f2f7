#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "opk/bar_operad.hpp"
#include "opk/chain_complex.hpp"
#include "opk/operad.hpp"
#include "opk/tensor.hpp"

namespace opk {

// Coalgebra over an operad: a table of structure values r_n(a (x) x) in
// carrier^n, one per operad basis element a of rank n and carrier basis
// element x, extended bilinearly.  Pairs without a stored value are zero.
// The table is only complete for operad degrees up to max_op_degree;
// evaluating an element above that cap throws window_error rather than
// passing off missing rows as zeros.
class Coalgebra {
public:
    Coalgebra(std::string name, OperadPtr op, ComplexPtr carrier, int max_rank,
              int max_op_degree);

    const std::string& name() const { return name_; }
    const OperadPtr& operad() const { return op_; }
    const ComplexPtr& carrier() const { return carrier_; }
    int max_rank() const { return max_rank_; }
    int max_op_degree() const { return max_op_degree_; }

    const Power& power(int rank) const;

    void set_value(int rank, int op_degree, int op_index, int carrier_degree,
                   int carrier_index, Element value);
    // zero element of the right degree when nothing is stored
    Element value(int rank, int op_degree, int op_index, int carrier_degree,
                  int carrier_index) const;

    Element apply(int rank, const OpElement& a, const Element& x) const;

    struct Entry {
        int rank = 0;
        int op_degree = 0, op_index = 0;
        int carrier_degree = 0, carrier_index = 0;
    };
    // keys of the stored nonzero values, in deterministic order
    std::vector<Entry> entries() const;

private:
    std::string name_;
    OperadPtr op_;
    ComplexPtr carrier_;
    int max_rank_;
    int max_op_degree_;
    std::vector<Power> powers_;  // index = rank - 1
    std::vector<std::map<std::array<int, 4>, Element>> table_;
};

// Letters permuted into the slots g dictates, with the Koszul sign of each
// crossing, extended linearly.
Element act_on_power(const Power& pw, const Permutation& g, const Element& v);

// The same map in every slot of a tensor power; f must have degree 0.
Element map_letters(const Power& from, const Power& to, const GradedMap& f,
                    const Element& v);

// Verifies on every instance inside the budget: the operad unit acts as the
// identity, each r_n satisfies the two-variable chain rule, the symmetric
// group moves through r_n into the tensor factors, and substitution in the
// operad becomes slotwise splicing with the sign (-1)^{deg a * deg prefix}.
// Instances above a stored cap count as skips.
CheckReport check_coalgebra(const Coalgebra& K, const AxiomOptions& opts);

// Same laws through independent code: a |-> r(a (x) -) as a morphism into
// the map operad of the carrier, to be fed to check_morphism.  The returned
// morphism owns its target; reach it through to().
OperadMorphism as_coend_morphism(const Coalgebra& K);

// Structure squares r_to(a (x) f x) = f^n r_from(a (x) x) plus the chain map
// condition, for a degree-0 carrier map between coalgebras over one operad.
CheckReport check_coalgebra_map(const Coalgebra& from, const Coalgebra& to,
                                const GradedMap& f, const AxiomOptions& opts);

// Coalgebra with a distinguished group-like basis element.  level records
// how many desuspensions separate the operad from its unshifted shape; 0
// for plain operads.
struct PointedCoalgebra {
    Coalgebra base;
    int basepoint_degree = 0;
    int basepoint_index = 0;
    int level = 0;
};

// Basepoint laws: zero differential, the basepoint spans a subcoalgebra
// with unit coefficients, and collapsing everything else to it is again a
// map of coalgebras.
CheckReport check_pointed(const PointedCoalgebra& K, const AxiomOptions& opts);

// True when the rank-2 value of the trivial degree-0 word on every
// non-basepoint basis element x is basepoint (x) x + x (x) basepoint.
// Needs a bar-shaped operad of rank at least 2.
bool is_reduced(const PointedCoalgebra& K);

// One basis element in degree 0; every degree-0 operad basis element acts
// as the n-fold repetition and everything else as zero.  Only consistent
// over operads whose degree-0 part collapses onto one composition-closed
// line per rank, the bar shape included.
PointedCoalgebra make_point(OperadPtr op);

// Which endpoint the lift contracts onto.  Both choices satisfy every law;
// values they share are pinned in tests, values they need not share feed
// the seed-invariance checks downstream.
enum class IntervalSeed { collapse_to_start, collapse_to_end };

// The unit interval: p0, p1 in degree 0, q in degree 1 with d q = p1 - p0.
// Degree-0 words act through the iterated front/back diagonal; the value of
// a positive-degree word w with trivial lead is the one-sided contraction
// of the value of dw, and translation fills in the other leads.  The
// construction is by degree induction and deterministic for a fixed seed.
PointedCoalgebra make_interval(BarOperadPtr op,
                               IntervalSeed seed = IntervalSeed::collapse_to_start);

// Basepoint plus one cell in the given dimension with zero differential.
// Degree-0 words act by the symmetric coproduct, positive degrees by zero;
// the result is reduced.
PointedCoalgebra make_sphere(BarOperadPtr op, int dim);

// Quotient by the basepoint line.  Surviving labels are kept; structure
// words that touch the basepoint letter die.  When the quotient empties the
// bottom degree the window is trimmed by one.  Throws input_error when the
// basepoint does not span a subcoalgebra.
Coalgebra reduce(const PointedCoalgebra& K);

// Structure precomposed with a morphism into this coalgebra's operad; the
// carrier does not change.  Every rank of the shared window must carry a
// fully valid component, otherwise input_error: a partial pullback would
// fabricate zeros.
Coalgebra pullback(const OperadMorphism& f, const Coalgebra& K);
PointedCoalgebra pullback(const OperadMorphism& f, const PointedCoalgebra& K);

// Smash with the interval.  The carrier keeps the basepoint in degree 0 and
// one shifted copy of the reduced carrier above it, so stripping the
// basepoint gives suspend(reduce(K).carrier(), 1) label for label.  Each
// structure value splits the word front/back, feeds the front through the
// interval and the back through K, interleaves the two value words with
// Koszul signs and projects letterwise back into the smash.
PointedCoalgebra suspend_pointed(const PointedCoalgebra& K);

}  // namespace opk
