#include "opk/bar.hpp"

#include <utility>

#include "opk/errors.hpp"
#include "opk/resources.hpp"
#include "opk/snf.hpp"

namespace opk {

std::string bar_label(const BarWord& w) {
  std::string out = w.lead.label() + "*[";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += "|";
    out += w.letters[i].label();
  }
  return out + "]";
}

BarWord parse_bar_label(const std::string& s, int n) {
  auto star = s.find("*[");
  if (star == std::string::npos || s.empty() || s.back() != ']')
    throw input_error("malformed bar label '" + s + "'");
  BarWord w;
  w.lead = perm_from_label(s.substr(0, star));
  if (w.lead.n() != n) throw input_error("bar label rank mismatch in '" + s + "'");
  std::string body = s.substr(star + 2, s.size() - star - 3);
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto bar = body.find('|', pos);
    if (bar == std::string::npos) bar = body.size();
    Permutation g = perm_from_label(body.substr(pos, bar - pos));
    if (g.n() != n) throw input_error("bar label rank mismatch in '" + s + "'");
    if (g.is_identity())
      throw input_error("identity letter in bar label '" + s + "'");
    w.letters.push_back(std::move(g));
    pos = bar + 1;
  }
  return w;
}

namespace {

std::string letters_label(const std::vector<Permutation>& ls) {
  std::string out = "[";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += "|";
    out += ls[i].label();
  }
  return out + "]";
}

// boundary terms of [g1|...|gk] shared by the resolution, the coefficient
// complexes and the cochain complexes: (coeff, leading letter consumed by
// the module action, remaining letters)
struct BoundaryTerm {
  Int coeff;
  Permutation acting;  // identity when no letter leaves on the left
  std::vector<Permutation> letters;
};

std::vector<BoundaryTerm> letters_boundary(const std::vector<Permutation>& ls,
                                           int n) {
  const int k = static_cast<int>(ls.size());
  std::vector<BoundaryTerm> out;
  if (k == 0) return out;
  {
    BoundaryTerm t;
    t.coeff = 1;
    t.acting = ls[0];
    t.letters.assign(ls.begin() + 1, ls.end());
    out.push_back(std::move(t));
  }
  for (int i = 1; i < k; ++i) {
    Permutation merged = compose(ls[i - 1], ls[i]);
    if (merged.is_identity()) continue;  // normalized bar construction
    BoundaryTerm t;
    t.coeff = sign_pow(i);
    t.acting = Permutation(n);
    t.letters.assign(ls.begin(), ls.end());
    t.letters[i - 1] = std::move(merged);
    t.letters.erase(t.letters.begin() + i);
    out.push_back(std::move(t));
  }
  {
    BoundaryTerm t;
    t.coeff = sign_pow(k);
    t.acting = Permutation(n);
    t.letters.assign(ls.begin(), ls.end() - 1);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

BarComplex::BarComplex(int group_rank, int max_degree)
    : n_(group_rank), max_degree_(max_degree) {
  if (n_ < 0 || max_degree_ < 0)
    throw input_error("bar resolution needs rank >= 0 and degree >= 0");
  std::vector<Permutation> group = all_permutations(n_);
  std::vector<Permutation> nonid;
  for (const auto& g : group)
    if (!g.is_identity()) nonid.push_back(g);

  // generator tuples per degree, lexicographically
  gens_[0] = {std::vector<Permutation>{}};
  std::size_t total = 0;
  for (int k = 1; k <= max_degree_; ++k) {
    auto& cur = gens_[k];
    for (const auto& shorter : gens_[k - 1])
      for (const auto& g : nonid) {
        auto ls = shorter;
        ls.push_back(g);
        cur.push_back(std::move(ls));
      }
    // rebuilt below in lexicographic order of the whole tuple
    std::sort(cur.begin(), cur.end(),
              [](const auto& a, const auto& b) {
                for (std::size_t i = 0; i < a.size(); ++i) {
                  if (a[i] < b[i]) return true;
                  if (b[i] < a[i]) return false;
                }
                return false;
              });
    total += cur.size() * group.size();
    charge_basis(total, "bar resolution basis");
  }
  for (int k = 0; k <= max_degree_; ++k) {
    auto& pos = gen_pos_[k];
    for (std::size_t i = 0; i < gens_[k].size(); ++i)
      pos[letters_label(gens_[k][i])] = static_cast<int>(i);
  }

  auto cx = std::make_shared<ChainComplex>(
      "bar(S" + std::to_string(n_) + ")", TruncationWindow{0, max_degree_},
      true, false);
  for (int k = 0; k <= max_degree_; ++k) {
    auto& wk = words_[k];
    for (const auto& lead : group)
      for (const auto& ls : gens_[k]) {
        BarWord w{lead, ls};
        cx->add_basis_element(k, bar_label(w));
        wk.push_back(std::move(w));
      }
  }

  for (int k = 1; k <= max_degree_; ++k) {
    SparseIntMatrix d(cx->dim(k - 1), cx->dim(k));
    const auto& wk = words_.at(k);
    for (int j = 0; j < static_cast<int>(wk.size()); ++j) {
      const auto& w = wk[j];
      for (const auto& t : letters_boundary(w.letters, n_)) {
        BarWord tw{compose(w.lead, t.acting), t.letters};
        d.add_to(cx->index_of(k - 1, bar_label(tw)), j, t.coeff);
      }
    }
    cx->set_differential(k, std::move(d));
  }
  cx->validate();
  c_ = cx;
}

const std::vector<BarWord>& BarComplex::words(int degree) const {
  auto it = words_.find(degree);
  if (it == words_.end())
    throw window_error("bar resolution not stored in degree " +
                       std::to_string(degree));
  return it->second;
}

const BarWord& BarComplex::word(int degree, int index) const {
  return words(degree).at(static_cast<std::size_t>(index));
}

int BarComplex::index_of(const BarWord& w) const {
  return c_->index_of(w.degree(), bar_label(w));
}

const std::vector<std::vector<Permutation>>& BarComplex::generators(
    int degree) const {
  auto it = gens_.find(degree);
  if (it == gens_.end())
    throw window_error("bar resolution not stored in degree " +
                       std::to_string(degree));
  return it->second;
}

int BarComplex::generator_index(int degree,
                                const std::vector<Permutation>& ls) const {
  const auto& pos = gen_pos_.at(degree);
  auto it = pos.find(letters_label(ls));
  if (it == pos.end()) throw input_error("no such bar generator");
  return it->second;
}

GradedMap BarComplex::contraction() const {
  GradedMap h(c_, c_, 1);
  for (int k = h.valid_min(); k <= h.valid_max(); ++k) {
    SparseIntMatrix m(c_->dim(k + 1), c_->dim(k));
    const auto& wk = words_.at(k);
    for (int j = 0; j < static_cast<int>(wk.size()); ++j) {
      const auto& w = wk[j];
      if (w.lead.is_identity()) continue;
      std::vector<Permutation> ls;
      ls.reserve(w.letters.size() + 1);
      ls.push_back(w.lead);
      ls.insert(ls.end(), w.letters.begin(), w.letters.end());
      m.set(index_of(BarWord{Permutation(n_), std::move(ls)}), j, 1);
    }
    h.set_block(k, std::move(m));
  }
  return h;
}

GradedMap BarComplex::unit_counit() const {
  GradedMap f(c_, c_, 0);
  SparseIntMatrix m(c_->dim(0), c_->dim(0));
  int e_row = index_of(BarWord{Permutation(n_), {}});
  for (int j = 0; j < c_->dim(0); ++j) m.set(e_row, j, 1);
  f.set_block(0, std::move(m));
  return f;
}

GradedMap BarComplex::group_action(const Permutation& g) const {
  if (g.n() != n_) throw input_error("group action rank mismatch");
  GradedMap f(c_, c_, 0);
  for (int k = 0; k <= max_degree_; ++k) {
    SparseIntMatrix m(c_->dim(k), c_->dim(k));
    const auto& wk = words_.at(k);
    for (int j = 0; j < static_cast<int>(wk.size()); ++j)
      m.set(index_of(BarWord{compose(g, wk[j].lead), wk[j].letters}), j, 1);
    f.set_block(k, std::move(m));
  }
  return f;
}

SparseIntMatrix coefficient_differential(const BarComplex& bar,
                                         bool sign_module, int k) {
  const auto& from = bar.generators(k);
  const auto& to = bar.generators(k - 1);
  SparseIntMatrix d(static_cast<int>(to.size()), static_cast<int>(from.size()));
  for (int j = 0; j < static_cast<int>(from.size()); ++j) {
    for (const auto& t : letters_boundary(from[j], bar.group_rank())) {
      Int v = t.coeff;
      if (sign_module && parity(t.acting)) v = -v;
      d.add_to(bar.generator_index(k - 1, t.letters), j, v);
    }
  }
  return d;
}

ComplexPtr bar_coefficient_complex(const BarComplex& bar, bool sign_module) {
  auto cx = std::make_shared<ChainComplex>(
      std::string(sign_module ? "sign" : "triv") + "(x)bar(S" +
          std::to_string(bar.group_rank()) + ")",
      TruncationWindow{0, bar.max_degree()}, true, false);
  for (int k = 0; k <= bar.max_degree(); ++k)
    for (const auto& ls : bar.generators(k))
      cx->add_basis_element(k, letters_label(ls));
  for (int k = 1; k <= bar.max_degree(); ++k)
    cx->set_differential(k, coefficient_differential(bar, sign_module, k));
  cx->validate();
  return cx;
}

ComplexPtr bar_cochain_complex(const BarComplex& bar, bool sign_module) {
  auto cx = std::make_shared<ChainComplex>(
      std::string("hom(bar(S") + std::to_string(bar.group_rank()) + ")," +
          (sign_module ? "sign" : "triv") + ")",
      TruncationWindow{-bar.max_degree(), 0}, false, true);
  for (int k = 0; k <= bar.max_degree(); ++k)
    for (const auto& ls : bar.generators(k))
      cx->add_basis_element(-k, letters_label(ls));
  for (int k = 0; k + 1 <= bar.max_degree(); ++k)
    cx->set_differential(
        -k, coefficient_differential(bar, sign_module, k + 1).transposed());
  cx->validate();
  return cx;
}

std::map<int, HomologySummand> group_homology(int n, bool sign_module, int lo,
                                              int hi) {
  if (lo < 0 || hi < lo) throw input_error("bad group homology range");
  BarComplex bar(n, hi + 1);
  return homology(*bar_coefficient_complex(bar, sign_module), lo, hi);
}

std::map<int, HomologySummand> group_cohomology(int n, bool sign_module,
                                                int lo, int hi) {
  if (lo < 0 || hi < lo) throw input_error("bad group cohomology range");
  BarComplex bar(n, hi + 1);
  auto h = homology(*bar_cochain_complex(bar, sign_module), -hi, -lo);
  std::map<int, HomologySummand> out;
  for (auto& [d, s] : h) out[-d] = std::move(s);
  return out;
}

namespace {

std::map<int, Int> apply_transposed(const SparseIntMatrix& m,
                                    const std::map<int, Int>& v) {
  return m.transposed().apply(v);
}

}  // namespace

bool is_cocycle(const BarComplex& bar, bool sign_module, int k,
                const std::map<int, Int>& c) {
  if (k + 1 > bar.max_degree())
    throw window_error("cocycle check needs the bar resolution one degree up");
  // (delta c)(w) = c(dw)
  auto dc = apply_transposed(coefficient_differential(bar, sign_module, k + 1),
                             c);
  for (const auto& [i, v] : dc)
    if (v != 0) return false;
  return true;
}

bool is_coboundary(const BarComplex& bar, bool sign_module, int k,
                   const std::map<int, Int>& c) {
  if (k < 1) {
    for (const auto& [i, v] : c)
      if (v != 0) return false;
    return true;
  }
  return in_column_span(
      coefficient_differential(bar, sign_module, k).transposed(), c);
}

}  // namespace opk
