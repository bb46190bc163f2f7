#include "opk/sparse_matrix.hpp"

#include "opk/errors.hpp"

namespace opk {

SparseIntMatrix SparseIntMatrix::identity(int n) {
  SparseIntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void SparseIntMatrix::set(int r, int c, Int v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw input_error("matrix index out of range");
  if (v == 0)
    a_.erase({r, c});
  else
    a_[{r, c}] = std::move(v);
}

void SparseIntMatrix::add_to(int r, int c, const Int& v) {
  if (v == 0) return;
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw input_error("matrix index out of range");
  auto it = a_.find({r, c});
  if (it == a_.end()) {
    a_.emplace(std::make_pair(r, c), v);
  } else {
    it->second += v;
    if (it->second == 0) a_.erase(it);
  }
}

Int SparseIntMatrix::get(int r, int c) const {
  auto it = a_.find({r, c});
  return it == a_.end() ? Int(0) : it->second;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  SparseIntMatrix t(cols_, rows_);
  for (const auto& [rc, v] : a_) t.a_[{rc.second, rc.first}] = v;
  return t;
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::map<int, Int> SparseIntMatrix::apply(const std::map<int, Int>& v) const {
  // iterate entries grouped by column; a_ is row-major, so walk v per entry
  std::map<int, Int> out;
  for (const auto& [rc, val] : a_) {
    auto it = v.find(rc.second);
    if (it == v.end()) continue;
    Int& slot = out[rc.first];
    slot += val * it->second;
    if (slot == 0) out.erase(rc.first);
  }
  return out;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols_ != b.rows_) throw input_error("matrix product: shape mismatch");
  // rows of b, indexed for the inner loop
  std::vector<std::vector<std::pair<int, Int>>> brow(b.rows_);
  for (const auto& [rc, v] : b.a_) brow[rc.first].push_back({rc.second, v});
  SparseIntMatrix out(a.rows_, b.cols_);
  for (const auto& [rc, v] : a.a_) {
    for (const auto& [c2, w] : brow[rc.second]) out.add_to(rc.first, c2, v * w);
  }
  return out;
}

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw input_error("matrix sum: shape mismatch");
  SparseIntMatrix out = a;
  for (const auto& [rc, v] : b.a_) out.add_to(rc.first, rc.second, v);
  return out;
}

SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  return a + b.scaled(-1);
}

SparseIntMatrix SparseIntMatrix::scaled(const Int& k) const {
  SparseIntMatrix out(rows_, cols_);
  if (k == 0) return out;
  for (const auto& [rc, v] : a_) out.a_[rc] = v * k;
  return out;
}

}  // namespace opk
