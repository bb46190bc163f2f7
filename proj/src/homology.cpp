#include "opk/homology.hpp"

#include <algorithm>
#include <sstream>

#include "opk/errors.hpp"
#include "opk/snf.hpp"

namespace opk {

std::string format(const HomologySummand& h) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < h.free_rank; ++i) {
    if (!first) os << " + ";
    os << "Z";
    first = false;
  }
  for (const auto& t : h.torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::map<int, HomologySummand> homology(const ChainComplex& c, int lo,
                                        int hi) {
  std::map<int, HomologySummand> out;
  for (int k = lo; k <= hi; ++k) {
    if (!c.differential_known(k) || !c.differential_known(k + 1))
      throw window_error("homology of " + c.name() + " at degree " +
                         std::to_string(k) + " is not determined");
    SnfResult below = smith_normal_form(c.differential(k));
    SnfResult above = smith_normal_form(c.differential(k + 1));
    HomologySummand h;
    h.free_rank = c.dim(k) - below.rank - above.rank;
    for (const auto& d : above.divisors)
      if (d > 1) h.torsion.push_back(d);
    out[k] = std::move(h);
  }
  return out;
}

ComplexPtr mapping_cone(const GradedMap& f) {
  if (f.degree() != 0) throw input_error("mapping cone needs a degree-0 map");
  const auto& c = f.source();
  const auto& d = f.target();
  const auto& wc = c->window();
  const auto& wd = d->window();

  int kmin = std::min(wc.min_degree + 1, wd.min_degree);
  int kmax = std::max(wc.max_degree + 1, wd.max_degree);
  if (!c->bounded_below()) kmin = std::max(kmin, wc.min_degree + 1);
  if (!d->bounded_below()) kmin = std::max(kmin, wd.min_degree);
  if (!c->bounded_above()) kmax = std::min(kmax, wc.max_degree + 1);
  if (!d->bounded_above()) kmax = std::min(kmax, wd.max_degree);
  while (kmin <= kmax && !f.valid_at(kmin - 1)) ++kmin;
  while (kmax >= kmin && !f.valid_at(kmax - 1)) --kmax;
  if (kmin > kmax) throw window_error("mapping cone has no complete degree");

  auto cone = std::make_shared<ChainComplex>(
      "cone(" + c->name() + "->" + d->name() + ")",
      TruncationWindow{kmin, kmax}, c->bounded_below() && d->bounded_below(),
      c->bounded_above() && d->bounded_above());

  for (int k = kmin; k <= kmax; ++k) {
    for (const auto& l : c->basis(k - 1)) cone->add_basis_element(k, "c:" + l);
    for (const auto& l : d->basis(k)) cone->add_basis_element(k, "d:" + l);
  }
  for (int k = kmin + 1; k <= kmax; ++k) {
    const int rc = c->dim(k - 2), cc = c->dim(k - 1);
    SparseIntMatrix m(rc + d->dim(k - 1), cc + d->dim(k));
    const SparseIntMatrix dc = c->differential(k - 1);
    for (const auto& [pos, v] : dc.entries())
      m.set(pos.first, pos.second, -v);
    const SparseIntMatrix fb = f.block(k - 1);
    for (const auto& [pos, v] : fb.entries())
      m.set(rc + pos.first, pos.second, -v);
    const SparseIntMatrix dd = d->differential(k);
    for (const auto& [pos, v] : dd.entries())
      m.set(rc + pos.first, cc + pos.second, v);
    cone->set_differential(k, std::move(m));
  }
  try {
    cone->validate();
  } catch (const input_error&) {
    throw input_error("mapping cone of " + c->name() + " -> " + d->name() +
                      " does not square to zero; the map is not a chain map");
  }
  return cone;
}

bool is_quasi_iso(const GradedMap& f, int lo, int hi) {
  ComplexPtr cone = mapping_cone(f);
  for (const auto& [k, h] : homology(*cone, lo, hi + 1))
    if (!h.is_trivial()) return false;
  return true;
}

}  // namespace opk
