#include "opk/graded_map.hpp"

#include <stdexcept>
#include <utility>

#include "opk/errors.hpp"

namespace opk {

namespace {

// Natural validity: every source degree whose basis is known and whose
// image degree is representable in the target.
std::pair<int, int> natural_validity(const ComplexPtr& src,
                                     const ComplexPtr& tgt, int degree) {
  int lo = src->window().min_degree;
  int hi = src->window().max_degree;
  if (!tgt->bounded_below()) lo = std::max(lo, tgt->window().min_degree - degree);
  if (!tgt->bounded_above()) hi = std::min(hi, tgt->window().max_degree - degree);
  return {lo, hi};
}

}  // namespace

GradedMap::GradedMap(ComplexPtr source, ComplexPtr target, int degree)
    : src_(std::move(source)), tgt_(std::move(target)), degree_(degree) {
  if (!src_ || !tgt_) throw std::invalid_argument("graded map needs both complexes");
  auto [lo, hi] = natural_validity(src_, tgt_, degree_);
  valid_min_ = lo;
  valid_max_ = hi;
}

GradedMap GradedMap::zero(ComplexPtr source, ComplexPtr target, int degree) {
  return GradedMap(std::move(source), std::move(target), degree);
}

GradedMap GradedMap::identity(ComplexPtr c) {
  GradedMap f(c, c, 0);
  for (int d = f.valid_min_; d <= f.valid_max_; ++d)
    f.set_block(d, SparseIntMatrix::identity(c->dim(d)));
  return f;
}

void GradedMap::restrict_validity(int lo, int hi) {
  valid_min_ = std::max(valid_min_, lo);
  valid_max_ = std::min(valid_max_, hi);
}

bool GradedMap::valid_at(int source_degree) const {
  if (source_degree >= valid_min_ && source_degree <= valid_max_) return true;
  // source known to vanish outside a bounded end
  if (source_degree < src_->window().min_degree && src_->bounded_below()) return true;
  if (source_degree > src_->window().max_degree && src_->bounded_above()) return true;
  return false;
}

void GradedMap::set_block(int source_degree, SparseIntMatrix m) {
  if (source_degree < valid_min_ || source_degree > valid_max_)
    throw window_error("block set outside validity of graded map");
  int rows = tgt_->dim(source_degree + degree_);
  int cols = src_->dim(source_degree);
  if (m.rows() != rows || m.cols() != cols)
    throw std::invalid_argument("graded map block has wrong shape");
  if (m.is_zero())
    blocks_.erase(source_degree);
  else
    blocks_[source_degree] = std::move(m);
}

void GradedMap::add_entry(int source_degree, int target_index, int source_index,
                          const Int& value) {
  if (source_degree < valid_min_ || source_degree > valid_max_)
    throw window_error("entry set outside validity of graded map");
  auto it = blocks_.find(source_degree);
  if (it == blocks_.end()) {
    SparseIntMatrix m(tgt_->dim(source_degree + degree_), src_->dim(source_degree));
    it = blocks_.emplace(source_degree, std::move(m)).first;
  }
  it->second.add_to(target_index, source_index, value);
}

SparseIntMatrix GradedMap::block(int source_degree) const {
  auto it = blocks_.find(source_degree);
  if (it != blocks_.end()) return it->second;
  if (!valid_at(source_degree))
    throw window_error("graded map queried outside its validity");
  // dim() itself may throw when the image degree is unknowable
  return SparseIntMatrix(tgt_->dim(source_degree + degree_),
                         src_->dim(source_degree));
}

Element GradedMap::apply(const Element& x) const {
  Element out(x.degree + degree_);
  if (x.c.empty()) return out;
  out.c = block(x.degree).apply(x.c);
  return out;
}

bool GradedMap::is_zero_on(int lo, int hi) const {
  for (int d = lo; d <= hi; ++d)
    if (!block(d).is_zero()) return false;
  return true;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (f.source() != g.target())
    throw std::invalid_argument("compose: inner complexes differ");
  GradedMap out(g.source(), f.target(), f.degree() + g.degree());
  int lo = std::max(out.valid_min(), g.valid_min());
  int hi = std::min(out.valid_max(), g.valid_max());
  // shrink to degrees where the outer block is also known
  while (lo <= hi && !f.valid_at(lo + g.degree())) ++lo;
  while (lo <= hi && !f.valid_at(hi + g.degree())) --hi;
  out.restrict_validity(lo, hi);
  for (int d = lo; d <= hi; ++d) {
    if (!f.valid_at(d + g.degree()))
      throw window_error("compose: outer map has a gap in its validity");
    out.set_block(d, f.block(d + g.degree()) * g.block(d));
  }
  return out;
}

GradedMap add(const GradedMap& f, const GradedMap& g) {
  if (f.source() != g.source() || f.target() != g.target() ||
      f.degree() != g.degree())
    throw std::invalid_argument("add: graded maps are not parallel");
  GradedMap out(f.source(), f.target(), f.degree());
  out.restrict_validity(std::max(f.valid_min(), g.valid_min()),
                        std::min(f.valid_max(), g.valid_max()));
  for (int d = out.valid_min(); d <= out.valid_max(); ++d)
    out.set_block(d, f.block(d) + g.block(d));
  return out;
}

GradedMap sub(const GradedMap& f, const GradedMap& g) {
  return add(f, scaled(g, Int(-1)));
}

GradedMap scaled(const GradedMap& f, const Int& k) {
  GradedMap out(f.source(), f.target(), f.degree());
  out.restrict_validity(f.valid_min(), f.valid_max());
  for (int d = out.valid_min(); d <= out.valid_max(); ++d)
    out.set_block(d, f.block(d).scaled(k));
  return out;
}

GradedMap boundary_of_map(const GradedMap& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  int k = f.degree();
  GradedMap out(src, tgt, k - 1);
  int lo = std::max(out.valid_min(), f.valid_min());
  int hi = std::min(out.valid_max(), f.valid_max());
  // term f . d_source consumes the block one degree below
  while (lo <= hi && !f.valid_at(lo - 1)) ++lo;
  // term d_target . f needs the target differential at d + k
  while (lo <= hi && !tgt->differential_known(lo + k)) ++lo;
  while (hi >= lo && !tgt->differential_known(hi + k)) --hi;
  while (lo <= hi && !src->differential_known(lo)) ++lo;
  while (hi >= lo && !src->differential_known(hi)) --hi;
  out.restrict_validity(lo, hi);
  int sgn = sign_pow(k);
  for (int d = lo; d <= hi; ++d) {
    SparseIntMatrix m = tgt->differential(d + k) * f.block(d);
    SparseIntMatrix n = f.block(d - 1) * src->differential(d);
    out.set_block(d, sgn == 1 ? m - n : m + n);
  }
  return out;
}

GradedMap differential_map(ComplexPtr c) {
  GradedMap f(c, c, -1);
  int lo = f.valid_min(), hi = f.valid_max();
  while (lo <= hi && !c->differential_known(lo)) ++lo;
  while (hi >= lo && !c->differential_known(hi)) --hi;
  f.restrict_validity(lo, hi);
  for (int d = lo; d <= hi; ++d) f.set_block(d, c->differential(d));
  return f;
}

bool is_chain_map_on(const GradedMap& f, int lo, int hi) {
  return boundary_of_map(f).is_zero_on(lo, hi);
}

bool equal_on(const GradedMap& f, const GradedMap& g, int lo, int hi) {
  if (f.source() != g.source() || f.target() != g.target() ||
      f.degree() != g.degree())
    return false;
  for (int d = lo; d <= hi; ++d)
    if (!(f.block(d) == g.block(d))) return false;
  return true;
}

DirectSumParts direct_sum(const std::vector<ComplexPtr>& parts,
                          const std::string& name) {
  if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
  bool bb = true, ba = true;
  for (const auto& p : parts) {
    bb = bb && p->bounded_below();
    ba = ba && p->bounded_above();
  }
  int lo = parts[0]->window().min_degree, hi = parts[0]->window().max_degree;
  for (const auto& p : parts) {
    // a degree is usable only when every summand knows it
    lo = bb ? std::min(lo, p->window().min_degree)
            : std::max(lo, p->window().min_degree);
    hi = ba ? std::max(hi, p->window().max_degree)
            : std::min(hi, p->window().max_degree);
  }
  if (lo > hi) throw window_error("direct sum has no common degree");

  auto sum = std::make_shared<ChainComplex>(name, TruncationWindow{lo, hi}, bb,
                                            ba);
  for (int d = lo; d <= hi; ++d)
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (const auto& l : parts[i]->basis(d))
        sum->add_basis_element(d, "s" + std::to_string(i) + ":" + l);

  for (int d = lo + 1; d <= hi; ++d) {
    SparseIntMatrix m(sum->dim(d - 1), sum->dim(d));
    int roff = 0, coff = 0;
    for (const auto& p : parts) {
      const SparseIntMatrix dp = p->differential(d);
      for (const auto& [pos, v] : dp.entries())
        m.set(roff + pos.first, coff + pos.second, v);
      roff += p->dim(d - 1);
      coff += p->dim(d);
    }
    sum->set_differential(d, std::move(m));
  }

  DirectSumParts out;
  out.sum = sum;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    GradedMap inc(parts[i], out.sum, 0);
    GradedMap prj(out.sum, parts[i], 0);
    for (int d = std::max(lo, inc.valid_min());
         d <= std::min(hi, inc.valid_max()); ++d) {
      int off = 0;
      for (std::size_t j = 0; j < i; ++j) off += parts[j]->dim(d);
      SparseIntMatrix mi(sum->dim(d), parts[i]->dim(d));
      SparseIntMatrix mp(parts[i]->dim(d), sum->dim(d));
      for (int r = 0; r < parts[i]->dim(d); ++r) {
        mi.set(off + r, r, 1);
        mp.set(r, off + r, 1);
      }
      inc.set_block(d, std::move(mi));
      prj.set_block(d, std::move(mp));
    }
    inc.restrict_validity(lo, hi);
    prj.restrict_validity(lo, hi);
    out.include.push_back(std::move(inc));
    out.project.push_back(std::move(prj));
  }
  return out;
}

}  // namespace opk
