#include "opk/coend.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "opk/errors.hpp"
#include "opk/operads_basic.hpp"
#include "opk/resources.hpp"

namespace opk {

namespace {

using ColumnTable = std::map<int, std::vector<std::pair<int, Int>>>;

ColumnTable columns_of(const SparseIntMatrix& m) {
    ColumnTable cols;
    for (const auto& [rc, v] : m.entries()) cols[rc.second].push_back({rc.first, v});
    return cols;
}

struct HomTableData {
    std::shared_ptr<Power> power;  // null at rank 0
    ComplexPtr comp;
    std::map<int, std::vector<HomEntry>> entries;
    std::map<std::tuple<int, int, Power::Word>, int> pos;

    const HomEntry& at(int degree, int index) const {
        const auto it = entries.find(degree);
        if (it == entries.end() || index < 0 ||
            index >= static_cast<int>(it->second.size()))
            throw input_error("map operad: no basis element at degree " +
                              std::to_string(degree) + " index " +
                              std::to_string(index));
        return it->second[index];
    }

    int index_of(const HomEntry& he) const {
        const auto it =
            pos.find({he.letter_degree, he.letter_index, he.word});
        if (it == pos.end())
            throw input_error("map operad: basis element not stored");
        return it->second;
    }
};

// rank-n Hom table between a carrier and its n-fold power; words_are_target
// distinguishes maps out of the carrier from maps into it.
std::shared_ptr<HomTableData> build_hom_table(const ComplexPtr& carrier,
                                              int rank, bool words_are_target,
                                              const std::string& comp_name) {
    if (!carrier->bounded_below() || !carrier->bounded_above())
        throw input_error("map operad: carrier must be bounded on both sides");

    auto t = std::make_shared<HomTableData>();
    const int cmin = carrier->window().min_degree;
    const int cmax = carrier->window().max_degree;

    int wmin = 0, wmax = 0;
    if (rank >= 1) {
        t->power = std::make_shared<Power>(carrier, rank);
        wmin = t->power->product()->window().min_degree;
        wmax = t->power->product()->window().max_degree;
    }
    const int lo = words_are_target ? wmin - cmax : cmin - wmax;
    const int hi = words_are_target ? wmax - cmin : cmax - wmin;

    auto comp = std::make_shared<ChainComplex>(
        comp_name, TruncationWindow{lo, hi}, true, true);

    std::size_t total = 0;
    for (int d = lo; d <= hi; ++d) {
        std::vector<HomEntry> es;
        for (int dx = cmin; dx <= cmax; ++dx) {
            if (carrier->dim(dx) == 0) continue;
            if (rank == 0) {
                if (d != (words_are_target ? -dx : dx)) continue;
                for (int ix = 0; ix < carrier->dim(dx); ++ix)
                    es.push_back({dx, ix, {}});
                continue;
            }
            const int dw = words_are_target ? dx + d : dx - d;
            if (dw < wmin || dw > wmax) continue;
            const int nw = t->power->product()->dim(dw);
            for (int ix = 0; ix < carrier->dim(dx); ++ix)
                for (int iw = 0; iw < nw; ++iw)
                    es.push_back({dx, ix, t->power->word(dw, iw)});
        }
        total += es.size();
        charge_basis(total, "map operad component");
        for (int j = 0; j < static_cast<int>(es.size()); ++j) {
            const HomEntry& e = es[j];
            const std::string letter = carrier->label(e.letter_degree, e.letter_index);
            const std::string word =
                rank == 0 ? "e" : t->power->word_label(e.word);
            comp->add_basis_element(
                d, words_are_target ? "[" + letter + "->" + word + "]"
                                    : "[" + word + "->" + letter + "]");
            t->pos[{e.letter_degree, e.letter_index, e.word}] = j;
        }
        t->entries[d] = std::move(es);
    }

    // d(f) = d_out . f - (-1)^{deg f} f . d_in, expanded entrywise
    for (int d = lo + 1; d <= hi; ++d) {
        SparseIntMatrix m(comp->dim(d - 1), comp->dim(d));
        const auto& es = t->entries[d];
        const int in_sign = sign_pow(d + 1);  // -(-1)^d
        std::map<int, ColumnTable> power_cols;
        std::map<int, ColumnTable> carrier_cols;
        for (int j = 0; j < static_cast<int>(es.size()); ++j) {
            const HomEntry& e = es[j];
            const int dw = Power::word_degree(e.word);
            if (words_are_target) {
                if (rank >= 1 && t->power->product()->dim(dw - 1) >= 0 && comp->dim(d - 1) > 0) {
                    if (!power_cols.count(dw))
                        power_cols[dw] = columns_of(t->power->product()->differential(dw));
                    const int iw = t->power->index_of(e.word);
                    for (const auto& [row, val] : power_cols[dw][iw]) {
                        const HomEntry out{e.letter_degree, e.letter_index,
                                           t->power->word(dw - 1, row)};
                        m.add_to(t->index_of(out), j, val);
                    }
                }
                const int dy = e.letter_degree + 1;
                if (dy <= cmax && carrier->dim(dy) > 0) {
                    if (!carrier_cols.count(dy))
                        carrier_cols[dy] = columns_of(carrier->differential(dy));
                    for (const auto& [col, rows] : carrier_cols[dy])
                        for (const auto& [row, val] : rows)
                            if (row == e.letter_index)
                                m.add_to(t->index_of({dy, col, e.word}), j,
                                         val * in_sign);
                }
            } else {
                const int dx = e.letter_degree;
                if (carrier->dim(dx - 1) >= 0 && dx - 1 >= cmin) {
                    if (!carrier_cols.count(dx))
                        carrier_cols[dx] = columns_of(carrier->differential(dx));
                    for (const auto& [row, val] : carrier_cols[dx][e.letter_index])
                        m.add_to(t->index_of({dx - 1, row, e.word}), j, val);
                }
                if (rank >= 1) {
                    const int du = dw + 1;
                    if (du <= wmax && t->power->product()->dim(du) > 0) {
                        if (!power_cols.count(du))
                            power_cols[du] = columns_of(t->power->product()->differential(du));
                        const int iw = t->power->index_of(e.word);
                        for (const auto& [col, rows] : power_cols[du])
                            for (const auto& [row, val] : rows)
                                if (row == iw)
                                    m.add_to(t->index_of({e.letter_degree,
                                                          e.letter_index,
                                                          t->power->word(du, col)}),
                                             j, val * in_sign);
                    }
                }
            }
        }
        comp->set_differential(d, std::move(m));
    }
    comp->validate();
    t->comp = comp;
    return t;
}

// shared substitution: the left map's letter must match letter i of the
// right map's word, which gets replaced by the left map's word; extra_sign
// carries the orientation twist of the operad using the table
OpElement hom_circ(const HomTableData& ta, const HomTableData& tb,
                   const HomTableData& tr, int result_rank, int deg_a,
                   int idx_a, int i, int deg_b, int idx_b, int extra_sign) {
    const HomEntry& a = ta.at(deg_a, idx_a);
    const HomEntry& b = tb.at(deg_b, idx_b);
    OpElement out(result_rank, Element{deg_a + deg_b, {}});
    const auto& vi = b.word[i - 1];
    if (vi.first != a.letter_degree || vi.second != a.letter_index) return out;
    long long prefix = 0;
    for (int s = 0; s + 1 < i; ++s) prefix += b.word[s].first;
    Power::Word spliced(b.word.begin(), b.word.begin() + (i - 1));
    spliced.insert(spliced.end(), a.word.begin(), a.word.end());
    spliced.insert(spliced.end(), b.word.begin() + i, b.word.end());
    const HomEntry res{b.letter_degree, b.letter_index, std::move(spliced)};
    out.e.add(tr.index_of(res), extra_sign * sign_pow(deg_a * prefix));
    return out;
}

Element hom_act(const HomTableData& t, const Permutation& g, int degree,
                int index) {
    const HomEntry& e = t.at(degree, index);
    auto [word, sign] = permute_word(g, e.word);
    Element out{degree, {}};
    out.add(t.index_of({e.letter_degree, e.letter_index, std::move(word)}),
            sign);
    return out;
}

OpElement hom_unit(const HomTableData& t, const ComplexPtr& carrier) {
    OpElement u(1, Element{0, {}});
    const auto& w = carrier->window();
    for (int d = w.min_degree; d <= w.max_degree; ++d)
        for (int ix = 0; ix < carrier->dim(d); ++ix)
            u.e.add(t.index_of({d, ix, {{d, ix}}}), 1);
    return u;
}

}  // namespace

std::pair<Power::Word, int> permute_word(const Permutation& g,
                                         const Power::Word& w) {
    const int n = g.n();
    if (n != static_cast<int>(w.size()))
        throw input_error("permute_word: word length differs from the group");
    Power::Word u(w.size());
    for (int t = 1; t <= n; ++t) u[g.image(t) - 1] = w[t - 1];
    long long inv = 0;
    for (int s = 1; s <= n; ++s)
        for (int t = s + 1; t <= n; ++t)
            if (g.image(s) > g.image(t))
                inv += static_cast<long long>(w[s - 1].first) * w[t - 1].first;
    return {std::move(u), sign_pow(inv)};
}

struct CoEndOperad::Table : HomTableData {};
struct EndOperad::Table : HomTableData {};

CoEndOperad::CoEndOperad(ComplexPtr carrier, int max_rank, bool with_rank_zero)
    : carrier_(std::move(carrier)),
      max_rank_(max_rank),
      with_rank_zero_(with_rank_zero) {
    if (max_rank_ < 1) throw input_error("coend: max rank must be at least 1");
    tables_.resize(max_rank_ + 1);
    for (int n = with_rank_zero_ ? 0 : 1; n <= max_rank_; ++n) {
        auto t = std::make_shared<Table>();
        static_cast<HomTableData&>(*t) = std::move(*build_hom_table(
            carrier_, n, true, name() + "(" + std::to_string(n) + ")"));
        tables_[n] = t;
    }
}

std::string CoEndOperad::name() const { return "coend(" + carrier_->name() + ")"; }

ComplexPtr CoEndOperad::component(int rank) const {
    require_rank(rank);
    return tables_[rank]->comp;
}

const CoEndOperad::Table& CoEndOperad::table(int rank) const {
    require_rank(rank);
    return *tables_[rank];
}

HomEntry CoEndOperad::entry(int rank, int degree, int index) const {
    return table(rank).at(degree, index);
}

int CoEndOperad::entry_index(int rank, const HomEntry& he) const {
    return table(rank).index_of(he);
}

int CoEndOperad::entry_degree(const HomEntry& he) {
    return Power::word_degree(he.word) - he.letter_degree;
}

Element CoEndOperad::act_basis(const Permutation& g, int rank, int degree,
                               int index) const {
    return hom_act(table(rank), g, degree, index);
}

OpElement CoEndOperad::circ_basis(int rank_a, int deg_a, int idx_a, int i,
                                  int rank_b, int deg_b, int idx_b) const {
    return hom_circ(table(rank_a), table(rank_b),
                    table(rank_a + rank_b - 1), rank_a + rank_b - 1, deg_a,
                    idx_a, i, deg_b, idx_b, 1);
}

OpElement CoEndOperad::unit_element() const {
    return hom_unit(table(1), carrier_);
}

EndOperad::EndOperad(ComplexPtr carrier, int max_rank)
    : carrier_(std::move(carrier)), max_rank_(max_rank) {
    if (max_rank_ < 1) throw input_error("end: max rank must be at least 1");
    for (int n = 1; n <= max_rank_; ++n) {
        auto t = std::make_shared<Table>();
        static_cast<HomTableData&>(*t) = std::move(*build_hom_table(
            carrier_, n, false, name() + "(" + std::to_string(n) + ")"));
        tables_.push_back(t);
    }
}

std::string EndOperad::name() const { return "end(" + carrier_->name() + ")"; }

ComplexPtr EndOperad::component(int rank) const {
    require_rank(rank);
    return tables_[rank - 1]->comp;
}

const EndOperad::Table& EndOperad::table(int rank) const {
    require_rank(rank);
    return *tables_[rank - 1];
}

HomEntry EndOperad::entry(int rank, int degree, int index) const {
    return table(rank).at(degree, index);
}

int EndOperad::entry_index(int rank, const HomEntry& he) const {
    return table(rank).index_of(he);
}

int EndOperad::entry_degree(const HomEntry& he) {
    return he.letter_degree - Power::word_degree(he.word);
}

Element EndOperad::act_basis(const Permutation& g, int rank, int degree,
                             int index) const {
    return hom_act(table(rank), g, degree, index);
}

OpElement EndOperad::circ_basis(int rank_a, int deg_a, int idx_a, int i,
                                int rank_b, int deg_b, int idx_b) const {
    // the substituted map acts first here, so matching the Leibniz rule
    // costs the Koszul interchange of the two maps
    return hom_circ(table(rank_a), table(rank_b),
                    table(rank_a + rank_b - 1), rank_a + rank_b - 1, deg_a,
                    idx_a, i, deg_b, idx_b,
                    sign_pow(static_cast<long long>(deg_a) * deg_b));
}

OpElement EndOperad::unit_element() const {
    return hom_unit(table(1), carrier_);
}

ComplexPtr line_complex(int degree) {
    auto c = std::make_shared<ChainComplex>(
        "line[" + std::to_string(degree) + "]",
        TruncationWindow{degree, degree}, true, true);
    c->add_basis_element(degree, "u");
    c->validate();
    return c;
}

OperadMorphism suspension_line_iso(int direction, int max_rank) {
    if (direction != 1 && direction != -1)
        throw input_error("suspension_line_iso: direction must be +1 or -1");
    auto from = std::make_shared<CoEndOperad>(line_complex(direction), max_rank);
    auto to = std::make_shared<SuspOperad>(direction, max_rank);
    OperadMorphism iso(from, to, "line map operad onto suspension rules");
    for (int n = 1; n <= max_rank; ++n) {
        GradedMap f(from->component(n), to->component(n), 0);
        const int d = direction * (n - 1);
        f.add_entry(d, 0, 0, 1);
        iso.set_component(n, f);
    }
    return iso;
}

OperadMorphism coend_pairing(ComplexPtr a, ComplexPtr b, int max_rank) {
    auto ca = std::make_shared<CoEndOperad>(a, max_rank);
    auto cb = std::make_shared<CoEndOperad>(b, max_rank);
    auto from = std::make_shared<TensorOperad>(ca, cb);
    Tensor ab(a, b);
    auto to = std::make_shared<CoEndOperad>(ab.product(), max_rank);

    OperadMorphism pairing(from, to, "coend pairing");
    for (int n = 1; n <= max_rank; ++n) {
        const Tensor& comp = from->component_tensor(n);
        GradedMap f(from->component(n), to->component(n), 0);
        const auto& w = from->component(n)->window();
        for (int d = w.min_degree; d <= w.max_degree; ++d) {
            for (int j = 0; j < from->component(n)->dim(d); ++j) {
                const Tensor::Pair& p = comp.pairs(d)[j];
                const HomEntry ea = ca->entry(n, p.left_degree, p.left_index);
                const HomEntry eb = cb->entry(n, p.right_degree, p.right_index);
                // Koszul: the right map walks past the left source, then
                // each right letter walks left past the later left letters.
                long long cross = static_cast<long long>(p.right_degree) *
                                  ea.letter_degree;
                long long tail = 0;
                for (int s = n - 1; s >= 0; --s) {
                    cross += eb.word[s].first * tail;
                    tail += ea.word[s].first;
                }
                HomEntry out;
                out.letter_degree = ea.letter_degree + eb.letter_degree;
                out.letter_index = ab.index_of(out.letter_degree, ea.letter_degree,
                                               ea.letter_index, eb.letter_index);
                for (int s = 0; s < n; ++s) {
                    const int dz = ea.word[s].first + eb.word[s].first;
                    out.word.push_back(
                        {dz, ab.index_of(dz, ea.word[s].first, ea.word[s].second,
                                         eb.word[s].second)});
                }
                f.add_entry(d, to->entry_index(n, out), j, sign_pow(cross));
            }
        }
        pairing.set_component(n, f);
    }
    return pairing;
}

}  // namespace opk
