#include "opk/operad.hpp"

#include <algorithm>
#include <sstream>

#include "opk/checks.hpp"
#include "opk/errors.hpp"
#include "opk/ints.hpp"
#include "opk/tmap.hpp"

namespace opk {

OpElement add(const OpElement& a, const OpElement& b) {
    if (!a.is_zero() && !b.is_zero() && a.rank != b.rank)
        throw input_error("operad element sum: rank mismatch");
    OpElement out = a.is_zero() ? b : a;
    if (!a.is_zero()) out.e = add(a.e, b.e);
    return out;
}

OpElement sub(const OpElement& a, const OpElement& b) {
    return add(a, scaled(b, -1));
}

OpElement scaled(const OpElement& a, const Int& k) {
    return OpElement(a.rank, scaled(a.e, k));
}

bool operator==(const OpElement& a, const OpElement& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.rank == b.rank && a.e == b.e;
}

void Operad::require_rank(int rank) const {
    if (rank < min_rank() || rank > max_rank()) {
        std::ostringstream os;
        os << name() << ": rank " << rank << " outside stored range ["
           << min_rank() << ", " << max_rank() << "]";
        throw window_error(os.str());
    }
}

OpElement Operad::act(const Permutation& g, const OpElement& x) const {
    if (g.n() != x.rank)
        throw input_error("operad action: permutation size differs from rank");
    OpElement out = zero_element(x.rank, x.degree());
    for (const auto& [idx, v] : x.e.c)
        out.e = add(out.e, scaled(act_basis(g, x.rank, x.degree(), idx), v));
    return out;
}

OpElement Operad::circ(const OpElement& a, int i, const OpElement& b) const {
    if (i < 1 || i > b.rank)
        throw input_error("operad circ: slot index out of range");
    int rank = a.rank + b.rank - 1;
    require_rank(rank);
    OpElement out = zero_element(rank, a.degree() + b.degree());
    for (const auto& [ia, va] : a.e.c)
        for (const auto& [ib, vb] : b.e.c) {
            OpElement term =
                circ_basis(a.rank, a.degree(), ia, i, b.rank, b.degree(), ib);
            out = add(out, scaled(term, va * vb));
        }
    return out;
}

OpElement Operad::unit() const {
    OpElement u = unit_element();
    if (u.rank != 1) throw input_error("operad unit must have rank 1");
    return u;
}

OpElement Operad::basis_element(int rank, int degree, int index) const {
    require_rank(rank);
    return OpElement(rank, component(rank)->basis_element(degree, index));
}

OpElement Operad::zero_element(int rank, int degree) const {
    Element e;
    e.degree = degree;
    return OpElement(rank, e);
}

std::vector<OpElement> Operad::basis_up_to(int rank, int degree_cap) const {
    require_rank(rank);
    ComplexPtr c = component(rank);
    std::vector<OpElement> out;
    int lo = c->window().min_degree;
    int hi = std::min(degree_cap, c->window().max_degree);
    for (int d = lo; d <= hi; ++d)
        for (int i = 0; i < c->dim(d); ++i)
            out.push_back(basis_element(rank, d, i));
    return out;
}

OpElement Operad::boundary(const OpElement& x) const {
    require_rank(x.rank);
    return OpElement(x.rank, component(x.rank)->boundary(x.e));
}

OpElement Operad::gamma(const std::vector<OpElement>& inputs, const OpElement& b) const {
    if (static_cast<int>(inputs.size()) != b.rank)
        throw input_error("gamma: need one input per slot");
    OpElement r = b;
    for (int j = b.rank; j >= 1; --j) r = circ(inputs[j - 1], j, r);
    return r;
}

void CheckReport::fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
}

void CheckReport::skip(std::string msg) { skipped.push_back(std::move(msg)); }

namespace {

std::string describe(const Operad& op, const OpElement& x) {
    std::ostringstream os;
    os << "rank " << x.rank << " deg " << x.degree() << " "
       << op.component(x.rank)->format(x.e);
    return os.str();
}

}  // namespace

CheckReport check_axioms(const Operad& op, const AxiomOptions& opts) {
    CheckReport report;
    int lo = op.min_rank();
    int hi = std::min(opts.max_rank, op.max_rank());
    if (hi < lo) {
        report.skip("no ranks inside the requested budget");
        return report;
    }

    auto basis_of = [&](int rank) { return op.basis_up_to(rank, opts.max_degree); };

    {
        LawScope law(report, "unit law", opts.max_failures);
        OpElement u = op.unit();
        for (int m = lo; m <= hi; ++m)
            for (const OpElement& b : basis_of(m)) {
                for (int i = 1; i <= m; ++i)
                    law.instance([&] {
                        if (!(op.circ(u, i, b) == b))
                            law.fail_instance("unit circ_" + std::to_string(i) +
                                              " " + describe(op, b));
                    });
                law.instance([&] {
                    if (!(op.circ(b, 1, u) == b))
                        law.fail_instance(describe(op, b) + " circ_1 unit");
                });
            }
    }

    {
        LawScope law(report, "associativity", opts.max_failures);
        for (int n = lo; n <= hi; ++n)
            for (int m = lo; m <= hi; ++m)
                for (int p = lo; p <= hi; ++p) {
                    if (n + m + p - 2 > hi) continue;
                    for (const OpElement& a : basis_of(n))
                        for (const OpElement& b : basis_of(m))
                            for (const OpElement& c : basis_of(p))
                                for (int i = 1; i <= m; ++i)
                                    for (int j = 1; j <= p; ++j)
                                        law.instance([&] {
                                            OpElement lhs = op.circ(op.circ(a, i, b), j, c);
                                            OpElement rhs = op.circ(a, i + j - 1, op.circ(b, j, c));
                                            if (!(lhs == rhs)) {
                                                std::ostringstream os;
                                                os << "(" << describe(op, a) << " o_" << i << " "
                                                   << describe(op, b) << ") o_" << j << " "
                                                   << describe(op, c);
                                                law.fail_instance(os.str());
                                            }
                                        });
                }
    }

    {
        LawScope law(report, "disjoint-slot commutativity", opts.max_failures);
        for (int n = lo; n <= hi; ++n)
            for (int m = lo; m <= hi; ++m)
                for (int p = lo; p <= hi; ++p) {
                    if (n + m + p - 2 > hi) continue;
                    for (const OpElement& a : basis_of(n))
                        for (const OpElement& b : basis_of(m))
                            for (const OpElement& c : basis_of(p))
                                for (int j = 1; j <= p; ++j)
                                    for (int i = j + 1; i <= p; ++i)
                                        law.instance([&] {
                                            OpElement lhs =
                                                op.circ(a, i + m - 1, op.circ(b, j, c));
                                            OpElement rhs =
                                                op.circ(b, j, op.circ(a, i, c));
                                            int s = sign_pow(static_cast<long long>(a.degree()) *
                                                             b.degree());
                                            if (!(lhs == scaled(rhs, s))) {
                                                std::ostringstream os;
                                                os << describe(op, a) << " at " << i << " vs "
                                                   << describe(op, b) << " at " << j << " in "
                                                   << describe(op, c);
                                                law.fail_instance(os.str());
                                            }
                                        });
                }
    }

    {
        LawScope law(report, "equivariance", opts.max_failures);
        for (int n = lo; n <= hi; ++n)
            for (int m = std::max(lo, 1); m <= hi; ++m) {
                if (n + m - 1 > hi) continue;
                std::vector<Permutation> group = all_permutations(m);
                for (const OpElement& a : basis_of(n))
                    for (const OpElement& b : basis_of(m))
                        for (const Permutation& g : group)
                            for (int i = 1; i <= m; ++i)
                                law.instance([&] {
                                    OpElement lhs = op.circ(a, g.image(i), op.act(g, b));
                                    // the fat entry of the shape sits at the
                                    // slot a ends up in, g(i)
                                    CompositionShape shape(m, 1);
                                    shape[g.image(i) - 1] = n;
                                    OpElement rhs = op.act(tmap(shape, g), op.circ(a, i, b));
                                    if (!(lhs == rhs)) {
                                        std::ostringstream os;
                                        os << describe(op, a) << " o_" << i << " "
                                           << describe(op, b) << " under " << g.label();
                                        law.fail_instance(os.str());
                                    }
                                });
            }
    }

    {
        LawScope law(report, "action identity and composition", opts.max_failures);
        for (int n = std::max(lo, 0); n <= hi; ++n) {
            std::vector<Permutation> group = all_permutations(n);
            Permutation e(n);
            for (const OpElement& x : basis_of(n)) {
                law.instance([&] {
                    if (!(op.act(e, x) == x))
                        law.fail_instance("identity action moved " + describe(op, x));
                });
                for (const Permutation& g : group)
                    for (const Permutation& h : group)
                        law.instance([&] {
                            OpElement lhs = op.act(g, op.act(h, x));
                            OpElement rhs = op.act(compose(g, h), x);
                            if (!(lhs == rhs))
                                law.fail_instance("g=" + g.label() + " h=" + h.label() +
                                                  " on " + describe(op, x));
                        });
            }
        }
    }

    if (opts.check_boundary) {
        LawScope law(report, "circ Leibniz rule", opts.max_failures);
        for (int n = lo; n <= hi; ++n)
            for (int m = std::max(lo, 1); m <= hi; ++m) {
                if (n + m - 1 > hi) continue;
                for (const OpElement& a : basis_of(n))
                    for (const OpElement& b : basis_of(m))
                        for (int i = 1; i <= m; ++i)
                            law.instance([&] {
                                OpElement lhs = op.boundary(op.circ(a, i, b));
                                OpElement rhs = add(
                                    op.circ(op.boundary(a), i, b),
                                    scaled(op.circ(a, i, op.boundary(b)),
                                           sign_pow(a.degree())));
                                if (!(lhs == rhs)) {
                                    std::ostringstream os;
                                    os << describe(op, a) << " o_" << i << " "
                                       << describe(op, b);
                                    law.fail_instance(os.str());
                                }
                            });
            }

        LawScope act_law(report, "action chain map", opts.max_failures);
        for (int n = std::max(lo, 0); n <= hi; ++n) {
            std::vector<Permutation> group = all_permutations(n);
            for (const OpElement& x : basis_of(n))
                for (const Permutation& g : group)
                    act_law.instance([&] {
                        OpElement lhs = op.boundary(op.act(g, x));
                        OpElement rhs = op.act(g, op.boundary(x));
                        if (!(lhs == rhs))
                            act_law.fail_instance("g=" + g.label() + " on " +
                                                  describe(op, x));
                    });
        }
    }

    return report;
}

OperadMorphism::OperadMorphism(OperadPtr from, OperadPtr to, std::string name)
    : from_(std::move(from)), to_(std::move(to)), name_(std::move(name)) {
    if (!from_ || !to_) throw input_error("operad morphism needs both ends");
}

void OperadMorphism::set_component(int rank, GradedMap map) {
    if (map.source() != from_->component(rank) ||
        map.target() != to_->component(rank))
        throw input_error("operad morphism component endpoints do not match");
    maps_.insert_or_assign(rank, std::move(map));
}

bool OperadMorphism::has_component(int rank) const {
    return maps_.count(rank) > 0;
}

const GradedMap& OperadMorphism::component(int rank) const {
    auto it = maps_.find(rank);
    if (it == maps_.end())
        throw input_error(name_ + ": no component at rank " + std::to_string(rank));
    return it->second;
}

OpElement OperadMorphism::apply(const OpElement& x) const {
    const GradedMap& f = component(x.rank);
    return OpElement(x.rank, f.apply(x.e));
}

CheckReport check_morphism(const OperadMorphism& m, const AxiomOptions& opts) {
    CheckReport report;
    const Operad& from = *m.from();
    const Operad& to = *m.to();
    int lo = std::max(from.min_rank(), to.min_rank());
    int hi = std::min({opts.max_rank, from.max_rank(), to.max_rank()});

    std::vector<int> ranks;
    for (int r = lo; r <= hi; ++r) {
        if (m.has_component(r))
            ranks.push_back(r);
        else
            report.skip("no component stored at rank " + std::to_string(r));
    }

    for (int r : ranks) {
        const GradedMap& f = m.component(r);
        int a = std::max(f.valid_min(), from.component(r)->window().min_degree);
        int b = std::min(f.valid_max(), opts.max_degree);
        if (a > b) {
            report.skip("rank " + std::to_string(r) + ": empty degree range");
            continue;
        }
        if (!is_chain_map_on(f, a, b))
            report.fail("rank " + std::to_string(r) + ": not a chain map on [" +
                        std::to_string(a) + ", " + std::to_string(b) + "]");
        else
            ++report.checked;
    }

    {
        LawScope law(report, "morphism equivariance", opts.max_failures);
        for (int r : ranks) {
            std::vector<Permutation> group = all_permutations(r);
            for (const OpElement& x : from.basis_up_to(r, opts.max_degree))
                for (const Permutation& g : group)
                    law.instance([&] {
                        OpElement lhs = m.apply(from.act(g, x));
                        OpElement rhs = to.act(g, m.apply(x));
                        if (!(lhs == rhs))
                            law.fail_instance("g=" + g.label() + " on " +
                                              describe(from, x));
                    });
        }
    }

    {
        LawScope law(report, "morphism multiplicativity", opts.max_failures);
        for (int n : ranks)
            for (int mm : ranks) {
                if (mm < 1) continue;
                int composite = n + mm - 1;
                if (composite > hi || !m.has_component(composite)) continue;
                for (const OpElement& a : from.basis_up_to(n, opts.max_degree))
                    for (const OpElement& b : from.basis_up_to(mm, opts.max_degree))
                        for (int i = 1; i <= mm; ++i)
                            law.instance([&] {
                                OpElement lhs = m.apply(from.circ(a, i, b));
                                OpElement rhs = to.circ(m.apply(a), i, m.apply(b));
                                if (!(lhs == rhs)) {
                                    std::ostringstream os;
                                    os << describe(from, a) << " o_" << i << " "
                                       << describe(from, b);
                                    law.fail_instance(os.str());
                                }
                            });
            }
    }

    if (m.has_component(1)) {
        if (!(m.apply(from.unit()) == to.unit()))
            report.fail("unit is not preserved");
        else
            ++report.checked;
    } else {
        report.skip("rank 1 missing, unit preservation unchecked");
    }

    return report;
}

OperadMorphism identity_morphism(const OperadPtr& op) {
    OperadMorphism m(op, op, "id(" + op->name() + ")");
    for (int r = op->min_rank(); r <= op->max_rank(); ++r)
        m.set_component(r, GradedMap::identity(op->component(r)));
    return m;
}

OperadMorphism compose_morphisms(const OperadMorphism& g,
                                 const OperadMorphism& f) {
    if (f.to().get() != g.from().get())
        throw input_error("compose_morphisms: middle operads differ");
    OperadMorphism out(f.from(), g.to(), g.name() + "." + f.name());
    int lo = f.from()->min_rank();
    int hi = std::min(f.from()->max_rank(), g.to()->max_rank());
    for (int r = lo; r <= hi; ++r)
        if (f.has_component(r) && g.has_component(r))
            out.set_component(r, compose(g.component(r), f.component(r)));
    return out;
}

PerturbedOperad::PerturbedOperad(OperadPtr inner, Mode mode, int target_rank)
    : inner_(std::move(inner)), mode_(mode), target_rank_(target_rank) {
    if (!inner_) throw input_error("perturbed operad needs a base operad");
}

std::string PerturbedOperad::name() const {
    return "perturbed(" + inner_->name() + ")";
}

Element PerturbedOperad::act_basis(const Permutation& g, int rank, int degree,
                                   int index) const {
    OpElement img = inner_->act(g, inner_->basis_element(rank, degree, index));
    if (mode_ == Mode::negate_act && rank == target_rank_)
        return scaled(img.e, -1);
    return img.e;
}

OpElement PerturbedOperad::circ_basis(int rank_a, int deg_a, int idx_a, int i,
                                      int rank_b, int deg_b, int idx_b) const {
    OpElement out = inner_->circ(inner_->basis_element(rank_a, deg_a, idx_a), i,
                                 inner_->basis_element(rank_b, deg_b, idx_b));
    if (mode_ == Mode::negate_circ && rank_a == target_rank_)
        return scaled(out, -1);
    return out;
}

}  // namespace opk
