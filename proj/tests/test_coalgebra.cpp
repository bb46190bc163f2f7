#include <memory>
#include <utility>
#include <vector>

#include "doctest.h"
#include "opk/coalgebra.hpp"
#include "opk/errors.hpp"
#include "opk/operads_basic.hpp"

using namespace opk;

namespace {

Element pword(const Power& pw, const Power::Word& w, const Int& c = 1) {
    Element out{Power::word_degree(w), {}};
    out.add(pw.index_of(w), c);
    return out;
}

int word_index(const BarOperad& op, const std::string& label, int n) {
    return op.bar(n).index_of(parse_bar_label(label, n));
}

bool same_table(const Coalgebra& a, const Coalgebra& b) {
    const auto ea = a.entries();
    const auto eb = b.entries();
    if (ea.size() != eb.size()) return false;
    for (std::size_t k = 0; k < ea.size(); ++k) {
        const auto& x = ea[k];
        const auto& y = eb[k];
        if (x.rank != y.rank || x.op_degree != y.op_degree ||
            x.op_index != y.op_index || x.carrier_degree != y.carrier_degree ||
            x.carrier_index != y.carrier_index)
            return false;
        if (!(a.value(x.rank, x.op_degree, x.op_index, x.carrier_degree,
                      x.carrier_index) ==
              b.value(y.rank, y.op_degree, y.op_index, y.carrier_degree,
                      y.carrier_index)))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("a single vertex carries the group-like structure") {
    const auto op = std::make_shared<BarOperad>(3, 3);
    const PointedCoalgebra pt = make_point(op);

    AxiomOptions opts;
    opts.max_rank = 3;
    opts.max_degree = 2;
    const CheckReport r = check_coalgebra(pt.base, opts);
    CHECK(r.ok);
    CHECK(r.failures.empty());
    CHECK(r.checked > 50);
    CHECK(check_pointed(pt, opts).ok);
    CHECK(is_reduced(pt));
}

TEST_CASE("the interval structure matches the hand-built table") {
    const auto op = std::make_shared<BarOperad>(3, 3);
    const PointedCoalgebra seg = make_interval(op);
    const Coalgebra& K = seg.base;
    const ComplexPtr cx = K.carrier();
    const Power& p2 = K.power(2);

    const std::pair<int, int> P0{0, 0}, P1{0, 1}, Q{1, 0};
    const int e2 = word_index(*op, "12*[]", 2);
    const int te2 = word_index(*op, "21*[]", 2);
    const int t2 = word_index(*op, "12*[21]", 2);
    const int tt2 = word_index(*op, "21*[21]", 2);

    SUBCASE("unit") {
        const Element q = cx->basis_element(1, 0);
        CHECK(K.apply(1, op->unit(), q) == q);
    }

    SUBCASE("degree zero is the front/back diagonal") {
        CHECK(K.value(2, 0, e2, 0, 0) == pword(p2, {P0, P0}));
        CHECK(K.value(2, 0, e2, 0, 1) == pword(p2, {P1, P1}));
        CHECK(K.value(2, 0, e2, 1, 0) ==
              add(pword(p2, {P0, Q}), pword(p2, {Q, P1})));
        // a shifted lead translates the whole value
        CHECK(K.value(2, 0, te2, 1, 0) ==
              add(pword(p2, {Q, P0}), pword(p2, {P1, Q})));
    }

    SUBCASE("degree one is the contracted boundary") {
        CHECK(K.value(2, 1, t2, 1, 0) == pword(p2, {Q, Q}));
        CHECK(K.value(2, 1, t2, 0, 0).is_zero());
        CHECK(K.value(2, 1, t2, 0, 1).is_zero());
        // two odd letters cross under the lead translation
        CHECK(K.value(2, 1, tt2, 1, 0) == pword(p2, {Q, Q}, -1));
    }

    SUBCASE("rank two values vanish above degree one") {
        const BarComplex& b2 = op->bar(2);
        for (int d = 2; d <= 3; ++d)
            for (int j = 0; j < b2.complex()->dim(d); ++j)
                for (const auto& [cd, ci] :
                     std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}})
                    CHECK(K.value(2, d, j, cd, ci).is_zero());
    }

    SUBCASE("the chain rule closes on the one-letter word") {
        const OpElement t = op->element_of(parse_bar_label("12*[21]", 2));
        const Element q = cx->basis_element(1, 0);
        const Element lhs = p2.product()->boundary(K.apply(2, t, q));
        const Element rhs = add(K.apply(2, op->boundary(t), q),
                                scaled(K.apply(2, t, cx->boundary(q)), -1));
        Element want{1, {}};
        want.add(p2.index_of({P1, Q}), 1);
        want.add(p2.index_of({P0, Q}), -1);
        want.add(p2.index_of({Q, P1}), -1);
        want.add(p2.index_of({Q, P0}), 1);
        CHECK(lhs == want);
        CHECK(rhs == want);
    }

    SUBCASE("rank three values forced by coherence") {
        const Power& p3 = K.power(3);
        const int i213 = word_index(*op, "123*[213]", 3);
        const int i312 = word_index(*op, "123*[312]", 3);
        CHECK(K.value(3, 1, i213, 1, 0) == pword(p3, {Q, Q, P1}));
        CHECK(K.value(3, 1, i312, 1, 0) ==
              add(pword(p3, {P0, Q, Q}), pword(p3, {Q, P1, Q})));
    }

    SUBCASE("every law holds inside the budget") {
        AxiomOptions opts;
        opts.max_rank = 3;
        opts.max_degree = 2;
        const CheckReport r = check_coalgebra(K, opts);
        CHECK(r.ok);
        CHECK(r.failures.empty());
        CHECK(r.checked > 500);
        CHECK(check_pointed(seg, opts).ok);
        CHECK_FALSE(is_reduced(seg));
    }

    SUBCASE("the same laws through the map operad") {
        const OperadMorphism m = as_coend_morphism(K);
        AxiomOptions opts;
        opts.max_rank = 3;
        opts.max_degree = 2;
        const CheckReport r = check_morphism(m, opts);
        CHECK(r.ok);
        CHECK(r.failures.empty());
        CHECK(r.checked > 100);
    }

    SUBCASE("the identity is a map of coalgebras") {
        AxiomOptions opts;
        opts.max_rank = 3;
        opts.max_degree = 2;
        const CheckReport r =
            check_coalgebra_map(K, K, GradedMap::identity(cx), opts);
        CHECK(r.ok);
        CHECK(r.failures.empty());
    }

    SUBCASE("both contraction seeds satisfy the laws and agree at rank two") {
        const PointedCoalgebra alt =
            make_interval(op, IntervalSeed::collapse_to_end);
        AxiomOptions opts;
        opts.max_rank = 3;
        opts.max_degree = 2;
        const CheckReport r = check_coalgebra(alt.base, opts);
        CHECK(r.ok);
        CHECK(r.failures.empty());
        const BarComplex& b2 = op->bar(2);
        for (int d = 0; d <= 3; ++d)
            for (int j = 0; j < b2.complex()->dim(d); ++j)
                for (const auto& [cd, ci] :
                     std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}})
                    CHECK(K.value(2, d, j, cd, ci) ==
                          alt.base.value(2, d, j, cd, ci));
    }

    SUBCASE("zeroing one stored value breaks the chain rule") {
        Coalgebra bad = K;
        bad.set_value(2, 1, t2, 1, 0, Element{2, {}});
        AxiomOptions opts;
        opts.max_rank = 2;
        opts.max_degree = 2;
        const CheckReport r = check_coalgebra(bad, opts);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.failures.empty());
    }

    SUBCASE("reads above the stored cap refuse instead of claiming zero") {
        CHECK_THROWS_AS((void)K.value(2, 4, 0, 1, 0), window_error);
        // a table cut off below the operad window refuses deeper elements
        const Coalgebra low("low", op, cx, 2, 1);
        const Element q = cx->basis_element(1, 0);
        CHECK_THROWS_AS(
            (void)low.apply(2, op->basis_element(2, 2, 0), q), window_error);
        // a genuinely zero element needs no table row
        CHECK(low.apply(2, op->zero_element(2, 2), q).is_zero());
    }
}

TEST_CASE("spheres are reduced, the interval is not") {
    const auto op = std::make_shared<BarOperad>(3, 2);
    AxiomOptions opts;
    opts.max_rank = 3;
    opts.max_degree = 2;

    const PointedCoalgebra s2 = make_sphere(op, 2);
    CHECK(check_coalgebra(s2.base, opts).ok);
    CHECK(check_pointed(s2, opts).ok);
    CHECK(is_reduced(s2));

    const PointedCoalgebra s1 = make_sphere(op, 1);
    CHECK(check_coalgebra(s1.base, opts).ok);
    CHECK(check_pointed(s1, opts).ok);
    CHECK(is_reduced(s1));

    CHECK_FALSE(is_reduced(make_interval(op)));
    CHECK_THROWS_AS((void)make_sphere(op, 0), input_error);
}

TEST_CASE("reducing strips the basepoint line") {
    const auto op = std::make_shared<BarOperad>(2, 3);
    const PointedCoalgebra seg = make_interval(op);
    const Coalgebra red = reduce(seg);
    const ComplexPtr rc = red.carrier();

    CHECK(rc->window().min_degree == 0);
    CHECK(rc->window().max_degree == 1);
    CHECK(rc->dim(0) == 1);
    CHECK(rc->dim(1) == 1);
    CHECK(rc->label(0, 0) == "p1");
    CHECK(rc->label(1, 0) == "q");
    CHECK(rc->boundary(rc->basis_element(1, 0)) == rc->basis_element(0, 0));

    // words that touched the basepoint letter are gone
    const Power& rp2 = red.power(2);
    const int e2 = word_index(*op, "12*[]", 2);
    const int t2 = word_index(*op, "12*[21]", 2);
    CHECK(red.value(2, 0, e2, 1, 0) == pword(rp2, {{1, 0}, {0, 0}}));
    CHECK(red.value(2, 0, e2, 0, 0) == pword(rp2, {{0, 0}, {0, 0}}));
    CHECK(red.value(2, 1, t2, 1, 0) == pword(rp2, {{1, 0}, {1, 0}}));

    // the quotient is again a coalgebra
    AxiomOptions opts;
    opts.max_rank = 2;
    opts.max_degree = 2;
    const CheckReport r = check_coalgebra(red, opts);
    CHECK(r.ok);
    CHECK(r.failures.empty());

    // reducing the point leaves the empty coalgebra in degree zero
    const Coalgebra rpt = reduce(make_point(op));
    CHECK(rpt.carrier()->window().min_degree == 0);
    CHECK(rpt.carrier()->window().max_degree == 0);
    CHECK(rpt.carrier()->dim(0) == 0);
}

TEST_CASE("pullbacks precompose the structure with a morphism") {
    const auto bar = std::make_shared<BarOperad>(3, 3);
    const auto coassoc = std::make_shared<CoassocOperad>(3);
    const PointedCoalgebra seg = make_interval(bar);

    SUBCASE("along the identity nothing moves") {
        const Coalgebra back = pullback(identity_morphism(bar), seg.base);
        CHECK(back.max_op_degree() == seg.base.max_op_degree());
        CHECK(same_table(back, seg.base));
    }

    SUBCASE("the collapse onto one generator per rank pulls the point back") {
        const OperadMorphism aug = bar_augmentation(bar, coassoc);
        const PointedCoalgebra ptc = make_point(OperadPtr(coassoc));
        const Coalgebra pulled = pullback(aug, ptc.base);
        CHECK(same_table(pulled, make_point(OperadPtr(bar)).base));
        // the pulled table is only as deep as the source table
        CHECK(pulled.max_op_degree() == 0);
        CHECK_THROWS_AS((void)pulled.value(2, 1, 0, 0, 0), window_error);

        // pulling back in two steps matches the composed morphism
        const OperadMorphism idb = identity_morphism(bar);
        const Coalgebra two_step = pullback(idb, pulled);
        const Coalgebra one_step =
            pullback(compose_morphisms(aug, idb), ptc.base);
        CHECK(same_table(two_step, one_step));
    }

    SUBCASE("a partially valid component is refused") {
        OperadMorphism partial = identity_morphism(bar);
        GradedMap g2 = GradedMap::identity(bar->component(2));
        g2.restrict_validity(0, 0);
        partial.set_component(2, std::move(g2));
        CHECK_THROWS_AS((void)pullback(partial, seg.base), input_error);
    }
}

TEST_CASE("coalgebra maps square with the structure") {
    const auto op = std::make_shared<BarOperad>(2, 3);
    const PointedCoalgebra seg = make_interval(op);
    const Coalgebra& K = seg.base;
    const ComplexPtr cx = K.carrier();
    AxiomOptions opts;
    opts.max_rank = 2;
    opts.max_degree = 2;

    // collapsing the interval onto its start vertex respects everything
    GradedMap f(cx, cx, 0);
    f.add_entry(0, 0, 0, 1);
    f.add_entry(0, 0, 1, 1);
    f.set_block(1, SparseIntMatrix(1, 1));
    const CheckReport good = check_coalgebra_map(K, K, f, opts);
    CHECK(good.ok);
    CHECK(good.failures.empty());

    // keeping the far vertex but killing the edge is not even a chain map
    GradedMap g(cx, cx, 0);
    g.add_entry(0, 0, 0, 1);
    g.add_entry(0, 1, 1, 1);
    g.set_block(1, SparseIntMatrix(1, 1));
    CHECK_FALSE(check_coalgebra_map(K, K, g, opts).ok);
}

TEST_CASE("suspending smashes with the interval") {
    const auto op = std::make_shared<BarOperad>(3, 3);
    const PointedCoalgebra seg = make_interval(op);
    const PointedCoalgebra si = suspend_pointed(seg);
    AxiomOptions opts;
    opts.max_rank = 3;
    opts.max_degree = 2;

    SUBCASE("the carrier is the basepoint plus the shifted reduced carrier") {
        CHECK(si.basepoint_degree == 0);
        CHECK(si.basepoint_index == 0);
        CHECK(same_labelled_complex(*reduce(si).carrier(),
                                    *suspend(reduce(seg).carrier(), 1)));
    }

    SUBCASE("the smashed structure satisfies every law and is reduced") {
        const CheckReport r = check_coalgebra(si.base, opts);
        CHECK(r.ok);
        CHECK(r.failures.empty());
        CHECK(r.checked > 200);
        CHECK(check_pointed(si, opts).ok);
        CHECK(is_reduced(si));
    }

    SUBCASE("hand-computed values of the suspended interval") {
        const Power& p2 = si.base.power(2);
        const int e2 = word_index(*op, "12*[]", 2);
        const int t2 = word_index(*op, "12*[21]", 2);
        // letters: base (0,0), x1 = old p1 shifted (1,0), x2 = old q (2,0)
        const std::pair<int, int> B{0, 0}, X1{1, 0}, X2{2, 0};
        CHECK(si.base.value(2, 0, e2, 0, 0) == pword(p2, {B, B}));
        CHECK(si.base.value(2, 0, e2, 1, 0) ==
              add(pword(p2, {B, X1}), pword(p2, {X1, B})));
        CHECK(si.base.value(2, 0, e2, 2, 0) ==
              add(pword(p2, {B, X2}), pword(p2, {X2, B})));
        CHECK(si.base.value(2, 1, t2, 1, 0) == pword(p2, {X1, X1}));
        CHECK(si.base.value(2, 1, t2, 2, 0) == pword(p2, {X1, X2}));
    }

    SUBCASE("suspending the point keeps only the basepoint") {
        const PointedCoalgebra sp = suspend_pointed(make_point(op));
        CHECK(sp.base.carrier()->window().max_degree == 1);
        CHECK(sp.base.carrier()->dim(0) == 1);
        CHECK(sp.base.carrier()->dim(1) == 0);
        CHECK(check_coalgebra(sp.base, opts).ok);
        CHECK(check_pointed(sp, opts).ok);
    }

    SUBCASE("a basepoint away from degree zero is refused") {
        PointedCoalgebra odd = make_sphere(op, 1);
        odd.basepoint_degree = 1;
        CHECK_THROWS_AS((void)suspend_pointed(odd), input_error);
    }

    SUBCASE("boundaries with nonzero vertex sums are refused") {
        auto spike = std::make_shared<ChainComplex>(
            "spike", TruncationWindow{0, 1}, true, true);
        spike->add_basis_element(0, "p");
        spike->add_basis_element(1, "x");
        SparseIntMatrix d(1, 1);
        d.set(0, 0, 1);
        spike->set_differential(1, std::move(d));
        spike->validate();
        const PointedCoalgebra pk{Coalgebra("spike", op, spike, 2, 0), 0, 0, 0};
        CHECK_THROWS_AS((void)suspend_pointed(pk), input_error);
    }
}

TEST_CASE("suspending a sphere gives the sphere one dimension up") {
    const auto op = std::make_shared<BarOperad>(3, 3);
    const PointedCoalgebra s1 = make_sphere(op, 1);
    const PointedCoalgebra ss1 = suspend_pointed(s1);
    const PointedCoalgebra s2 = make_sphere(op, 2);

    CHECK(same_labelled_complex(*ss1.base.carrier(), *s2.base.carrier()));
    CHECK(same_table(ss1.base, s2.base));
    CHECK(is_reduced(ss1));
}
