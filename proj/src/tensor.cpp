#include "opk/tensor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "opk/errors.hpp"
#include "opk/resources.hpp"

namespace opk {

namespace {

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

Tensor::Tensor(ComplexPtr left, ComplexPtr right)
    : a_(std::move(left)), b_(std::move(right)) {
  if (!a_ || !b_) throw std::invalid_argument("tensor of null complexes");
  if (!a_->bounded_below() || !b_->bounded_below())
    throw input_error("tensor factors must be bounded below");
  const auto& wa = a_->window();
  const auto& wb = b_->window();

  int min = wa.min_degree + wb.min_degree;
  long long max = std::numeric_limits<int>::max();
  bool bounded_above = a_->bounded_above() && b_->bounded_above();
  if (bounded_above) {
    max = static_cast<long long>(wa.max_degree) + wb.max_degree;
  } else {
    // a complete degree must see every contributing factor degree
    if (!a_->bounded_above())
      max = std::min(max, static_cast<long long>(wa.max_degree) + wb.min_degree);
    if (!b_->bounded_above())
      max = std::min(max, static_cast<long long>(wb.max_degree) + wa.min_degree);
  }
  if (max < min) throw window_error("tensor product has no complete degree");

  TruncationWindow w{min, static_cast<int>(max)};
  auto prod = std::make_shared<ChainComplex>(
      "tensor(" + a_->name() + "," + b_->name() + ")", w, true, bounded_above);

  std::size_t total = 0;
  for (int n = w.min_degree; n <= w.max_degree; ++n) {
    auto& tab = table_[n];
    for (int da = wa.min_degree; da <= wa.max_degree && da <= n - wb.min_degree;
         ++da) {
      int db = n - da;
      if (!wb.contains(db)) continue;
      for (int ia = 0; ia < a_->dim(da); ++ia)
        for (int ib = 0; ib < b_->dim(db); ++ib) {
          pos_[{n, da, ia, ib}] = static_cast<int>(tab.size());
          tab.push_back({da, ia, db, ib});
          prod->add_basis_element(
              n, paren(a_->label(da, ia)) + "(x)" + paren(b_->label(db, ib)));
        }
    }
    total += tab.size();
    charge_basis(total, "tensor product basis");
  }

  for (int n = w.min_degree + 1; n <= w.max_degree; ++n) {
    SparseIntMatrix d(prod->dim(n - 1), prod->dim(n));
    const auto& tab = table_.at(n);
    for (int j = 0; j < static_cast<int>(tab.size()); ++j) {
      const auto& p = tab[j];
      const SparseIntMatrix da = a_->differential(p.left_degree);
      for (const auto& [rc, v] : da.entries()) {
        if (rc.second != p.left_index) continue;
        d.add_to(index_of(n - 1, p.left_degree - 1, rc.first, p.right_index), j,
                 v);
      }
      const int sgn = sign_pow(p.left_degree);
      const SparseIntMatrix db = b_->differential(p.right_degree);
      for (const auto& [rc, v] : db.entries()) {
        if (rc.second != p.right_index) continue;
        d.add_to(index_of(n - 1, p.left_degree, p.left_index, rc.first), j,
                 sgn == 1 ? v : Int(-v));
      }
    }
    prod->set_differential(n, std::move(d));
  }
  prod_ = prod;
}

const std::vector<Tensor::Pair>& Tensor::pairs(int degree) const {
  static const std::vector<Pair> empty;
  auto it = table_.find(degree);
  if (it != table_.end()) return it->second;
  if (prod_->dim(degree) == 0) return empty;  // throws when unknowable
  return empty;
}

int Tensor::index_of(int degree, int left_degree, int left_index,
                     int right_index) const {
  auto it = pos_.find({degree, left_degree, left_index, right_index});
  if (it == pos_.end())
    throw input_error("no such tensor basis pair in degree " +
                      std::to_string(degree));
  return it->second;
}

Power::Power(ComplexPtr factor, int arity) : c_(std::move(factor)), n_(arity) {
  if (!c_) throw std::invalid_argument("power of null complex");
  if (n_ < 1) throw input_error("tensor power needs arity >= 1");
  if (!c_->bounded_below() || !c_->bounded_above())
    throw input_error("tensor power factor must be bounded on both sides");
  const auto& wc = c_->window();
  TruncationWindow w{wc.min_degree * n_, wc.max_degree * n_};
  auto prod = std::make_shared<ChainComplex>(
      "power(" + c_->name() + "," + std::to_string(n_) + ")", w, true, true);

  // lexicographic enumeration by (deg_1, idx_1, deg_2, idx_2, ...)
  std::size_t total = 0;
  Word cur(n_);
  auto emit = [&](auto&& self, int slot, int deg_sum) -> void {
    if (slot == n_) {
      int n = deg_sum;
      pos_[cur] = static_cast<int>(words_[n].size());
      words_[n].push_back(cur);
      ++total;
      return;
    }
    for (int d = wc.min_degree; d <= wc.max_degree; ++d)
      for (int i = 0; i < c_->dim(d); ++i) {
        cur[slot] = {d, i};
        self(self, slot + 1, deg_sum + d);
      }
  };
  emit(emit, 0, 0);
  charge_basis(total, "tensor power basis");

  // the recursion above emits words grouped by degree in lexicographic
  // order within each group, which is the order we register them in
  for (int n = w.min_degree; n <= w.max_degree; ++n) {
    auto it = words_.find(n);
    if (it == words_.end()) continue;
    for (const auto& word : it->second) prod->add_basis_element(n, word_label(word));
  }

  for (int n = w.min_degree + 1; n <= w.max_degree; ++n) {
    SparseIntMatrix d(prod->dim(n - 1), prod->dim(n));
    auto it = words_.find(n);
    if (it == words_.end()) {
      prod->set_differential(n, std::move(d));
      continue;
    }
    for (int j = 0; j < static_cast<int>(it->second.size()); ++j) {
      const auto& word = it->second[j];
      int sign_deg = 0;
      for (int slot = 0; slot < n_; ++slot) {
        const auto [dd, ii] = word[slot];
        const int sgn = sign_pow(sign_deg);
        const SparseIntMatrix dc = c_->differential(dd);
        for (const auto& [rc, v] : dc.entries()) {
          if (rc.second != ii) continue;
          Word target = word;
          target[slot] = {dd - 1, rc.first};
          d.add_to(index_of(target), j, sgn == 1 ? v : Int(-v));
        }
        sign_deg += dd;
      }
    }
    prod->set_differential(n, std::move(d));
  }
  prod_ = prod;
}

const Power::Word& Power::word(int degree, int index) const {
  auto it = words_.find(degree);
  if (it == words_.end() || index < 0 ||
      index >= static_cast<int>(it->second.size()))
    throw input_error("no such tensor power word");
  return it->second[index];
}

int Power::index_of(const Word& w) const {
  auto it = pos_.find(w);
  if (it == pos_.end()) throw input_error("no such tensor power word");
  return it->second;
}

int Power::word_degree(const Word& w) {
  int n = 0;
  for (const auto& [d, i] : w) n += d;
  return n;
}

std::string Power::word_label(const Word& w) const {
  if (n_ == 1) return c_->label(w[0].first, w[0].second);
  std::string out;
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (s) out += "(x)";
    out += paren(c_->label(w[s].first, w[s].second));
  }
  return out;
}

GradedMap tensor_product_map(const GradedMap& f, const GradedMap& g,
                             const Tensor& from, const Tensor& to) {
  if (from.left() != f.source() || from.right() != g.source() ||
      to.left() != f.target() || to.right() != g.target())
    throw std::invalid_argument("tensor_product_map: complexes do not line up");
  const int deg = f.degree() + g.degree();
  GradedMap out(from.product(), to.product(), deg);

  std::map<int, SparseIntMatrix> built;
  for (int n = out.valid_min(); n <= out.valid_max(); ++n) {
    try {
      SparseIntMatrix m(to.product()->dim(n + deg), from.product()->dim(n));
      const auto& tab = from.pairs(n);
      for (int j = 0; j < static_cast<int>(tab.size()); ++j) {
        const auto& p = tab[j];
        SparseIntMatrix fb = f.block(p.left_degree);
        SparseIntMatrix gb = g.block(p.right_degree);
        const int sgn = sign_pow(static_cast<long long>(g.degree()) *
                                 p.left_degree);
        for (const auto& [frc, fv] : fb.entries()) {
          if (frc.second != p.left_index) continue;
          for (const auto& [grc, gv] : gb.entries()) {
            if (grc.second != p.right_index) continue;
            Int v = fv * gv;
            if (sgn == -1) v = -v;
            m.add_to(to.index_of(n + deg, p.left_degree + f.degree(), frc.first,
                                 grc.first),
                     j, v);
          }
        }
      }
      built.emplace(n, std::move(m));
    } catch (const window_error&) {
      // degree not fully determined by the known windows
    }
  }
  if (built.empty()) {
    out.restrict_validity(1, 0);
    return out;
  }
  int lo = built.begin()->first, hi = lo;
  while (built.count(hi + 1)) ++hi;
  out.restrict_validity(lo, hi);
  for (int n = lo; n <= hi; ++n) out.set_block(n, std::move(built.at(n)));
  return out;
}

GradedMap transpose_map(const Tensor& from, const Tensor& to) {
  if (from.left() != to.right() || from.right() != to.left())
    throw std::invalid_argument("transpose_map: factors do not line up");
  GradedMap out(from.product(), to.product(), 0);
  for (int n = out.valid_min(); n <= out.valid_max(); ++n) {
    SparseIntMatrix m(to.product()->dim(n), from.product()->dim(n));
    const auto& tab = from.pairs(n);
    for (int j = 0; j < static_cast<int>(tab.size()); ++j) {
      const auto& p = tab[j];
      const int sgn =
          sign_pow(static_cast<long long>(p.left_degree) * p.right_degree);
      m.set(to.index_of(n, p.right_degree, p.right_index, p.left_index), j,
            Int(sgn));
    }
    out.set_block(n, std::move(m));
  }
  return out;
}

namespace {

void check_shift_compatible(const ComplexPtr& from, const ComplexPtr& to,
                            int k) {
  const auto& wf = from->window();
  if (to->window().min_degree != wf.min_degree + k ||
      to->window().max_degree != wf.max_degree + k ||
      to->bounded_below() != from->bounded_below() ||
      to->bounded_above() != from->bounded_above())
    throw input_error("degree shift: windows do not match");
  for (int d = wf.min_degree; d <= wf.max_degree; ++d)
    if (from->basis(d) != to->basis(d + k))
      throw input_error("degree shift: bases do not match");
}

}  // namespace

GradedMap degree_shift_map(ComplexPtr from, ComplexPtr to, int k) {
  check_shift_compatible(from, to, k);
  GradedMap out(from, to, k);
  for (int d = out.valid_min(); d <= out.valid_max(); ++d)
    out.set_block(d, SparseIntMatrix::identity(from->dim(d)));
  return out;
}

GradedMap signed_degree_shift_map(ComplexPtr from, ComplexPtr to, int k) {
  check_shift_compatible(from, to, k);
  GradedMap out(from, to, k);
  for (int d = out.valid_min(); d <= out.valid_max(); ++d) {
    SparseIntMatrix m = SparseIntMatrix::identity(from->dim(d));
    if (sign_pow(static_cast<long long>(d) * k) == -1) m = m.scaled(-1);
    out.set_block(d, std::move(m));
  }
  return out;
}

}  // namespace opk
