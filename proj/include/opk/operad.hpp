#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "opk/chain_complex.hpp"
#include "opk/graded_map.hpp"
#include "opk/perm.hpp"

namespace opk {

// Element of a single rank component of an operad.
struct OpElement {
    int rank = 0;
    Element e;

    OpElement() = default;
    OpElement(int rank_, Element e_) : rank(rank_), e(std::move(e_)) {}

    int degree() const { return e.degree; }
    bool is_zero() const { return e.is_zero(); }
};

OpElement add(const OpElement& a, const OpElement& b);
OpElement sub(const OpElement& a, const OpElement& b);
OpElement scaled(const OpElement& a, const Int& k);
bool operator==(const OpElement& a, const OpElement& b);

// A graded operad over the integers, truncated in rank and (per component)
// in degree.  Composition takes the LEFT argument and substitutes it into
// slot i of the right argument, 1 <= i <= rank(b):
//   rank(a circ_i b) = rank(a) + rank(b) - 1.
// The symmetric group S_rank acts on each component on the left.
class Operad {
public:
    virtual ~Operad() = default;

    virtual std::string name() const = 0;
    virtual int min_rank() const = 0;
    virtual int max_rank() const = 0;

    // Stable per-rank complexes: repeated calls return the same pointer so
    // graded maps built on them compose.
    virtual ComplexPtr component(int rank) const = 0;

    OpElement act(const Permutation& g, const OpElement& x) const;
    OpElement circ(const OpElement& a, int i, const OpElement& b) const;
    OpElement unit() const;

    OpElement basis_element(int rank, int degree, int index) const;
    OpElement zero_element(int rank, int degree) const;
    // All basis elements of one rank with degree <= degree_cap.
    std::vector<OpElement> basis_up_to(int rank, int degree_cap) const;

    OpElement boundary(const OpElement& x) const;

    // gamma(a_1,...,a_k; b) with k = rank(b): substitutes a_j into slot j,
    // evaluated right to left so slot indices never shift.
    OpElement gamma(const std::vector<OpElement>& inputs, const OpElement& b) const;

protected:
    virtual Element act_basis(const Permutation& g, int rank, int degree, int index) const = 0;
    virtual OpElement circ_basis(int rank_a, int deg_a, int idx_a, int i,
                                 int rank_b, int deg_b, int idx_b) const = 0;
    virtual OpElement unit_element() const = 0;

    void require_rank(int rank) const;
};

using OperadPtr = std::shared_ptr<const Operad>;

struct AxiomOptions {
    int max_rank = 3;       // never exceeds the operad's own truncation
    int max_degree = 3;     // cap on degrees of elements fed into the laws
    int max_failures = 8;   // stop collecting beyond this many
    bool check_boundary = true;
};

struct CheckReport {
    bool ok = true;
    long long checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> skipped;

    void fail(std::string msg);
    void skip(std::string msg);
};

// Verifies, over every basis tuple inside the rank/degree budget:
//   unit laws, associativity, disjoint-slot commutativity (with the sign
//   (-1)^{deg a * deg b}), equivariance against tmap, that circ_i satisfies
//   the Leibniz rule, and that each group action is a chain map and a left
//   group homomorphism.  Laws whose operands fall outside stored windows are
//   recorded as skips, never silently dropped.
CheckReport check_axioms(const Operad& op, const AxiomOptions& opts);

// Rank-indexed family of graded maps commuting with all structure.
class OperadMorphism {
public:
    OperadMorphism(OperadPtr from, OperadPtr to, std::string name);

    const std::string& name() const { return name_; }
    OperadPtr from() const { return from_; }
    OperadPtr to() const { return to_; }

    void set_component(int rank, GradedMap map);
    bool has_component(int rank) const;
    const GradedMap& component(int rank) const;

    OpElement apply(const OpElement& x) const;

private:
    OperadPtr from_;
    OperadPtr to_;
    std::string name_;
    std::map<int, GradedMap> maps_;
};

// Checks each stored rank: chain map, equivariance f(g.x) = g.f(x),
// multiplicativity f(a circ_i b) = f(a) circ_i f(b), unit preservation.
CheckReport check_morphism(const OperadMorphism& m, const AxiomOptions& opts);

// Identity components on every rank of one operad.
OperadMorphism identity_morphism(const OperadPtr& op);

// g after f, rank by rank on the ranks both define.  The middle operads
// must be the same object.
OperadMorphism compose_morphisms(const OperadMorphism& g,
                                 const OperadMorphism& f);

// Test instrument: forwards to an inner operad but corrupts one structure
// map, so axiom checking must report a failure.
class PerturbedOperad : public Operad {
public:
    enum class Mode { negate_circ, negate_act };

    PerturbedOperad(OperadPtr inner, Mode mode, int target_rank);

    std::string name() const override;
    int min_rank() const override { return inner_->min_rank(); }
    int max_rank() const override { return inner_->max_rank(); }
    ComplexPtr component(int rank) const override { return inner_->component(rank); }

protected:
    Element act_basis(const Permutation& g, int rank, int degree, int index) const override;
    OpElement circ_basis(int rank_a, int deg_a, int idx_a, int i,
                         int rank_b, int deg_b, int idx_b) const override;
    OpElement unit_element() const override { return inner_->unit(); }

private:
    OperadPtr inner_;
    Mode mode_;
    int target_rank_;
};

}  // namespace opk
