#include "opk/chain_complex.hpp"

#include <sstream>

namespace opk {

const std::vector<std::string> ChainComplex::empty_{};

void Element::add(int index, const Int& v) {
  if (v == 0) return;
  auto it = c.find(index);
  if (it == c.end()) {
    c[index] = v;
  } else {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

Element add(const Element& a, const Element& b) {
  if (!a.c.empty() && !b.c.empty() && a.degree != b.degree)
    throw input_error("element sum: degree mismatch");
  Element out = a.c.empty() ? b : a;
  if (a.c.empty()) return out;
  for (const auto& [i, v] : b.c) out.add(i, v);
  return out;
}

Element sub(const Element& a, const Element& b) {
  return add(a, scaled(b, -1));
}

Element scaled(const Element& a, const Int& k) {
  Element out;
  out.degree = a.degree;
  if (k == 0) return out;
  for (const auto& [i, v] : a.c) out.c[i] = v * k;
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.c.empty() && b.c.empty()) return true;
  return a.degree == b.degree && a.c == b.c;
}

ChainComplex::ChainComplex(std::string name, TruncationWindow w,
                           bool bounded_below, bool bounded_above)
    : name_(std::move(name)),
      window_(w),
      bounded_below_(bounded_below),
      bounded_above_(bounded_above) {
  if (w.min_degree > w.max_degree) throw input_error("empty window");
}

void ChainComplex::add_basis_element(int degree, const std::string& label) {
  if (!window_.contains(degree))
    throw window_error("basis element outside window of " + name_);
  auto& idx = index_[degree];
  if (idx.count(label))
    throw input_error("duplicate basis label '" + label + "' in " + name_);
  idx[label] = static_cast<int>(basis_[degree].size());
  basis_[degree].push_back(label);
}

void ChainComplex::set_differential(int degree, SparseIntMatrix m) {
  if (degree <= window_.min_degree || degree > window_.max_degree)
    throw window_error("differential outside window of " + name_);
  if (m.rows() != dim(degree - 1) || m.cols() != dim(degree))
    throw input_error("differential shape mismatch in " + name_);
  diff_[degree] = std::move(m);
}

int ChainComplex::dim(int degree) const {
  if (window_.contains(degree)) {
    auto it = basis_.find(degree);
    return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
  }
  if (degree < window_.min_degree && bounded_below_) return 0;
  if (degree > window_.max_degree && bounded_above_) return 0;
  throw window_error("degree " + std::to_string(degree) +
                     " outside window of " + name_);
}

const std::vector<std::string>& ChainComplex::basis(int degree) const {
  if (dim(degree) == 0) return empty_;
  return basis_.at(degree);
}

const std::string& ChainComplex::label(int degree, int index) const {
  return basis(degree).at(index);
}

int ChainComplex::index_of(int degree, const std::string& label) const {
  auto it = index_.find(degree);
  if (it == index_.end()) throw input_error("no basis in degree");
  auto jt = it->second.find(label);
  if (jt == it->second.end())
    throw input_error("unknown basis label '" + label + "' in " + name_);
  return jt->second;
}

SparseIntMatrix ChainComplex::differential(int degree) const {
  auto it = diff_.find(degree);
  if (it != diff_.end()) return it->second;
  // unset differential means zero; dim() rejects unknowable degrees
  return SparseIntMatrix(dim(degree - 1), dim(degree));
}

bool ChainComplex::differential_known(int degree) const {
  if (diff_.count(degree)) return true;
  try {
    (void)dim(degree);
    (void)dim(degree - 1);
    return true;
  } catch (const window_error&) {
    return false;
  }
}

Element ChainComplex::basis_element(int degree, int index) const {
  Element e;
  e.degree = degree;
  e.c[index] = 1;
  return e;
}

Element ChainComplex::boundary(const Element& e) const {
  Element out;
  out.degree = e.degree - 1;
  if (e.c.empty()) return out;
  out.c = differential(e.degree).apply(e.c);
  return out;
}

void ChainComplex::validate() const {
  for (const auto& [d, m] : diff_) {
    if (m.rows() != dim(d - 1) || m.cols() != dim(d))
      throw input_error("differential shape mismatch in " + name_);
  }
  for (int d = window_.min_degree; d + 1 <= window_.max_degree; ++d) {
    if (!differential_known(d) || !differential_known(d + 1)) continue;
    SparseIntMatrix dd = differential(d) * differential(d + 1);
    if (!dd.is_zero())
      throw input_error("d(d(x)) != 0 in " + name_ + " at degree " +
                        std::to_string(d + 1));
  }
}

std::string ChainComplex::format(const Element& e) const {
  if (e.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, v] : e.c) {
    if (v > 0 && !first) os << " + ";
    if (v < 0) os << (first ? "-" : " - ");
    Int av = abs_int(v);
    if (av != 1) os << av << "*";
    os << label(e.degree, i);
    first = false;
  }
  return os.str();
}

ComplexPtr suspend(const ComplexPtr& c, int k) {
  TruncationWindow w{c->window().min_degree + k, c->window().max_degree + k};
  std::string nm = c->name();
  if (k != 0)
    nm = "shift[" + std::to_string(k) + "](" + nm + ")";
  auto out = std::make_shared<ChainComplex>(nm, w, c->bounded_below(),
                                            c->bounded_above());
  for (int d = c->window().min_degree; d <= c->window().max_degree; ++d)
    for (const auto& l : c->basis(d)) out->add_basis_element(d + k, l);
  const int sgn = sign_pow(k);
  for (int d = c->window().min_degree + 1; d <= c->window().max_degree; ++d) {
    SparseIntMatrix m = c->differential(d);
    out->set_differential(d + k, sgn == 1 ? m : m.scaled(-1));
  }
  return out;
}

bool same_labelled_complex(const ChainComplex& a, const ChainComplex& b) {
  if (a.window().min_degree != b.window().min_degree ||
      a.window().max_degree != b.window().max_degree ||
      a.bounded_below() != b.bounded_below() ||
      a.bounded_above() != b.bounded_above())
    return false;
  for (int d = a.window().min_degree; d <= a.window().max_degree; ++d) {
    if (a.basis(d) != b.basis(d)) return false;
    if (d > a.window().min_degree && !(a.differential(d) == b.differential(d)))
      return false;
  }
  return true;
}

}  // namespace opk
