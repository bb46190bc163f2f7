#include "opk/coend.hpp"

#include <memory>
#include <vector>

#include "doctest.h"
#include "opk/operads_basic.hpp"

using namespace opk;

namespace {

// x in degree 0, y in degree 1, dy = x
ComplexPtr two_generator_complex() {
    auto c = std::make_shared<ChainComplex>("pair", TruncationWindow{0, 1},
                                            true, true);
    c->add_basis_element(0, "x");
    c->add_basis_element(1, "y");
    SparseIntMatrix d(1, 1);
    d.set(0, 0, 1);
    c->set_differential(1, std::move(d));
    c->validate();
    return c;
}

// p0, p1 in degree 0, q in degree 1, dq = p1 - p0
ComplexPtr segment_complex() {
    auto c = std::make_shared<ChainComplex>("segment", TruncationWindow{0, 1},
                                            true, true);
    c->add_basis_element(0, "p0");
    c->add_basis_element(0, "p1");
    c->add_basis_element(1, "q");
    SparseIntMatrix d(2, 1);
    d.set(0, 0, -1);
    d.set(1, 0, 1);
    c->set_differential(1, std::move(d));
    c->validate();
    return c;
}

bool is_signed_bijection(const GradedMap& f) {
    const auto& w = f.source()->window();
    for (int d = w.min_degree; d <= w.max_degree; ++d) {
        const int n = f.source()->dim(d);
        if (f.target()->dim(d + 0) != n) return false;
        if (n == 0) continue;
        const SparseIntMatrix m = f.block(d);
        if (static_cast<int>(m.nnz()) != n) return false;
        std::vector<int> row_hits(n, 0), col_hits(n, 0);
        for (const auto& [rc, v] : m.entries()) {
            if (v != 1 && v != -1) return false;
            ++row_hits[rc.first];
            ++col_hits[rc.second];
        }
        for (int i = 0; i < n; ++i)
            if (row_hits[i] != 1 || col_hits[i] != 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("line map operad has one basis map per rank") {
    for (int dir : {1, -1}) {
        CoEndOperad op(line_complex(dir), 5);
        for (int n = 1; n <= 5; ++n) {
            const auto c = op.component(n);
            int total = 0;
            for (int d = c->window().min_degree; d <= c->window().max_degree; ++d)
                total += c->dim(d);
            CHECK(total == 1);
            CHECK(c->dim(dir * (n - 1)) == 1);
        }
        CHECK(op.unit() == op.basis_element(1, 0, 0));
    }
}

TEST_CASE("line substitution signs match the closed suspension law") {
    for (int dir : {1, -1}) {
        CAPTURE(dir);
        CoEndOperad op(line_complex(dir), 5);
        for (int n = 1; n <= 5; ++n)
            for (int m = 1; n + m - 1 <= 5; ++m)
                for (int i = 1; i <= m; ++i) {
                    const OpElement got =
                        op.circ(op.basis_element(n, dir * (n - 1), 0), i,
                                op.basis_element(m, dir * (m - 1), 0));
                    const int sign = ((i - 1) * (n - 1)) % 2 ? -1 : 1;
                    CHECK(got == scaled(op.basis_element(n + m - 1,
                                                         dir * (n + m - 2), 0),
                                        sign));
                }
        // the parity action also drops out of the Koszul letter count
        const Permutation tau = transposition(2, 1, 2);
        CHECK(op.act(tau, op.basis_element(2, dir, 0)) ==
              scaled(op.basis_element(2, dir, 0), -1));
    }
}

TEST_CASE("line map operad is isomorphic to the suspension rules") {
    for (int dir : {1, -1}) {
        CAPTURE(dir);
        const OperadMorphism iso = suspension_line_iso(dir, 5);
        AxiomOptions opts;
        opts.max_rank = 5;
        opts.max_degree = 5;
        const CheckReport r = check_morphism(iso, opts);
        CHECK(r.ok);
        CHECK(r.failures.empty());
        CHECK(r.skipped.empty());
        for (int n = 1; n <= 5; ++n) CHECK(is_signed_bijection(iso.component(n)));
    }
}

TEST_CASE("map operads satisfy the axioms on a two generator carrier") {
    const ComplexPtr c = two_generator_complex();
    AxiomOptions opts;
    opts.max_rank = 3;
    opts.max_degree = 4;

    // one rank beyond the checked window: with a rank zero component the
    // associativity detour passes through rank four composites
    auto coend = std::make_shared<CoEndOperad>(c, 4, true);
    CheckReport r = check_axioms(*coend, opts);
    CHECK(r.ok);
    CHECK(r.skipped.empty());

    EndOperad end(c, 3);
    r = check_axioms(end, opts);
    CHECK(r.ok);
    CHECK(r.skipped.empty());

    PerturbedOperad bad_circ(coend, PerturbedOperad::Mode::negate_circ, 2);
    CHECK_FALSE(check_axioms(bad_circ, opts).ok);
    PerturbedOperad bad_act(coend, PerturbedOperad::Mode::negate_act, 2);
    CHECK_FALSE(check_axioms(bad_act, opts).ok);
}

TEST_CASE("map operad boundaries expand through both sides") {
    const ComplexPtr c = two_generator_complex();
    CoEndOperad op(c, 2);

    // d(x -> y) picks up both the word side and the letter side
    const int exy = op.entry_index(1, {0, 0, {{1, 0}}});
    const int exx = op.entry_index(1, {0, 0, {{0, 0}}});
    const int eyy = op.entry_index(1, {1, 0, {{1, 0}}});
    Element want{0, {}};
    want.add(exx, 1);
    want.add(eyy, 1);
    CHECK(op.boundary(op.basis_element(1, 1, exy)) == OpElement(1, want));

    // the identity map is a cycle
    CHECK(op.boundary(op.unit()).is_zero());
}

TEST_CASE("rank zero maps delete one tensor factor") {
    const ComplexPtr c = segment_complex();
    CoEndOperad op(c, 2, true);
    const int p0 = c->index_of(0, "p0");
    const int p1 = c->index_of(0, "p1");
    const int q = c->index_of(1, "q");

    const OpElement dual_p0 = op.basis_element(0, 0, op.entry_index(0, {0, p0, {}}));
    const OpElement dual_q = op.basis_element(0, -1, op.entry_index(0, {1, q, {}}));
    const OpElement b = op.basis_element(
        2, 1, op.entry_index(2, {0, p1, {{0, p0}, {1, q}}}));

    // slot 1 carries p0: the p0 dual deletes it, the q dual misses it
    CHECK(op.circ(dual_p0, 1, b) ==
          op.basis_element(1, 1, op.entry_index(1, {0, p1, {{1, q}}})));
    CHECK(op.circ(dual_q, 1, b).is_zero());
    CHECK(op.circ(dual_p0, 2, b).is_zero());
    CHECK(op.circ(dual_q, 2, b) ==
          op.basis_element(1, 0, op.entry_index(1, {0, p1, {{0, p0}}})));

    // walking an odd dual past an odd letter flips the sign
    const OpElement bb = op.basis_element(
        2, 2, op.entry_index(2, {0, p1, {{1, q}, {1, q}}}));
    CHECK(op.circ(dual_q, 2, bb) ==
          scaled(op.basis_element(1, 1, op.entry_index(1, {0, p1, {{1, q}}})),
                 -1));
}

TEST_CASE("input substitution composes like evaluation") {
    const ComplexPtr c = two_generator_complex();
    EndOperad op(c, 3);
    const int x = 0, y = 0;  // indices within their degrees

    const OpElement a =
        op.basis_element(1, -1, op.entry_index(1, {0, x, {{1, y}}}));
    const OpElement b =
        op.basis_element(2, 1, op.entry_index(2, {1, y, {{0, x}, {0, x}}}));
    // odd map into an odd map costs the interchange sign
    CHECK(op.circ(a, 1, b) ==
          scaled(op.basis_element(
                     2, 0, op.entry_index(2, {1, y, {{1, y}, {0, x}}})),
                 -1));

    // substituting past a degree one input letter costs a sign
    const OpElement b2 =
        op.basis_element(2, 0, op.entry_index(2, {1, y, {{1, y}, {0, x}}}));
    CHECK(op.circ(a, 2, b2) ==
          scaled(op.basis_element(
                     2, -1, op.entry_index(2, {1, y, {{1, y}, {1, y}}})),
                 -1));

    // swapping two odd input letters is the sign action
    const Permutation tau = transposition(2, 1, 2);
    const OpElement sym =
        op.basis_element(2, -2, op.entry_index(2, {0, x, {{1, y}, {1, y}}}));
    CHECK(op.act(tau, sym) == scaled(sym, -1));
    const OpElement mixed =
        op.basis_element(2, 0, op.entry_index(2, {1, y, {{1, y}, {0, x}}}));
    CHECK(op.act(tau, mixed) ==
          op.basis_element(2, 0, op.entry_index(2, {1, y, {{0, x}, {1, y}}})));
}

TEST_CASE("component dimensions count letter word pairs") {
    const ComplexPtr c = two_generator_complex();
    CoEndOperad op(c, 2);
    const auto comp = op.component(2);
    CHECK(comp->window().min_degree == -1);
    CHECK(comp->window().max_degree == 2);
    CHECK(comp->dim(-1) == 1);
    CHECK(comp->dim(0) == 3);
    CHECK(comp->dim(1) == 3);
    CHECK(comp->dim(2) == 1);
    CHECK(comp->label(-1, 0) == "[y->(x)(x)(x)]");
    CHECK(comp->label(2, 0) == "[x->(y)(x)(y)]");

    EndOperad end(c, 2);
    CHECK(end.component(2)->dim(-1) == 3);
    CHECK(end.component(2)->label(1, 0) == "[(x)(x)(x)->y]");
}

TEST_CASE("the pairing morphism interleaves tensor factors") {
    const ComplexPtr a = line_complex(1);
    const ComplexPtr b = two_generator_complex();
    const OperadMorphism pairing = coend_pairing(a, b, 3);

    AxiomOptions opts;
    opts.max_rank = 3;
    opts.max_degree = 6;
    const CheckReport r = check_morphism(pairing, opts);
    CHECK(r.ok);
    CHECK(r.failures.empty());
    CHECK(r.skipped.empty());

    // one line generator tensor one ordinary map: rank one is the plain
    // tensor of maps, with the Koszul sign of the pair evaluation
    auto from = std::dynamic_pointer_cast<const TensorOperad>(pairing.from());
    REQUIRE(from);
    auto ca = std::dynamic_pointer_cast<const CoEndOperad>(from->left());
    auto cb = std::dynamic_pointer_cast<const CoEndOperad>(from->right());
    auto to = std::dynamic_pointer_cast<const CoEndOperad>(pairing.to());
    REQUIRE(ca);
    REQUIRE(cb);
    REQUIRE(to);

    const OpElement uu = ca->basis_element(1, 0, 0);
    const OpElement xy = cb->basis_element(
        1, 1, cb->entry_index(1, {0, 0, {{1, 0}}}));
    const OpElement xx = cb->basis_element(
        1, 0, cb->entry_index(1, {0, 0, {{0, 0}}}));

    const ComplexPtr abc = to->carrier();
    const int ux = abc->index_of(1, "(u)(x)(x)");
    const int uy = abc->index_of(2, "(u)(x)(y)");
    const HomEntry image_entry{1, ux, {{2, uy}}};
    CHECK(pairing.apply(from->pair(uu, xy)) ==
          scaled(to->basis_element(1, 1, to->entry_index(1, image_entry)), -1));
    const HomEntry plain{1, ux, {{1, ux}}};
    CHECK(pairing.apply(from->pair(uu, xx)) ==
          to->basis_element(1, 0, to->entry_index(1, plain)));

    // with the line on the left the pairing is a rank by rank bijection
    for (int n = 1; n <= 3; ++n) CHECK(is_signed_bijection(pairing.component(n)));
}
