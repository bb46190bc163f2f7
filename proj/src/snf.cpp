#include "opk/snf.hpp"

#include <set>

#include "opk/errors.hpp"

namespace opk {

namespace {

// Elimination workspace: row-major maps plus per-column row sets so pivot
// search and column updates stay proportional to the nonzeros touched.
struct Work {
  int R = 0, C = 0;
  std::vector<std::map<int, Int>> row;
  std::vector<std::set<int>> colrows;
  std::vector<char> rdone, cdone;
  bool track_u = false;
  std::vector<std::map<int, Int>> u;  // left transform, u = (row ops) * I

  explicit Work(const SparseIntMatrix& m, bool with_u)
      : R(m.rows()),
        C(m.cols()),
        row(m.rows()),
        colrows(m.cols()),
        rdone(m.rows(), 0),
        cdone(m.cols(), 0),
        track_u(with_u) {
    for (const auto& [rc, v] : m.entries()) {
      row[rc.first][rc.second] = v;
      colrows[rc.second].insert(rc.first);
    }
    if (track_u) {
      u.resize(R);
      for (int i = 0; i < R; ++i) u[i][i] = 1;
    }
  }

  void put(int r, int c, const Int& v) {
    if (v == 0) {
      row[r].erase(c);
      colrows[c].erase(r);
    } else {
      if (row[r].emplace(c, v).second)
        colrows[c].insert(r);
      else
        row[r][c] = v;
    }
  }

  // row[dst] -= q * row[src]
  void row_axpy(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (const auto& [c, v] : row[src]) {
      auto it = row[dst].find(c);
      if (it == row[dst].end()) {
        row[dst][c] = -q * v;
        colrows[c].insert(dst);
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          row[dst].erase(it);
          colrows[c].erase(dst);
        }
      }
    }
    if (track_u) {
      for (const auto& [c, v] : u[src]) {
        auto it = u[dst].find(c);
        if (it == u[dst].end()) {
          u[dst][c] = -q * v;
        } else {
          it->second -= q * v;
          if (it->second == 0) u[dst].erase(it);
        }
      }
    }
  }

  // col[dst] -= q * col[src]
  void col_axpy(int dst, int src, const Int& q) {
    if (q == 0) return;
    std::vector<int> rs(colrows[src].begin(), colrows[src].end());
    for (int r : rs) {
      const Int& v = row[r].at(src);
      auto it = row[r].find(dst);
      if (it == row[r].end()) {
        row[r][dst] = -q * v;
        colrows[dst].insert(r);
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          row[r].erase(it);
          colrows[dst].erase(r);
        }
      }
    }
  }

  // Smallest-magnitude entry, sparsity as tie break.
  bool find_pivot(int& pr, int& pc) const {
    bool found = false;
    Int best_mag = 0;
    size_t best_fill = 0;
    for (int r = 0; r < R; ++r) {
      if (rdone[r]) continue;
      for (const auto& [c, v] : row[r]) {
        if (cdone[c]) continue;
        Int mag = abs_int(v);
        size_t fill = (row[r].size() - 1) * (colrows[c].size() - 1);
        if (!found || mag < best_mag ||
            (mag == best_mag && fill < best_fill)) {
          found = true;
          best_mag = mag;
          best_fill = fill;
          pr = r;
          pc = c;
          if (mag == 1 && fill == 0) return true;
        }
      }
    }
    return found;
  }

  // Clear column pc then row pr, descending to gcd via remainders.
  void reduce_at(int& pr, int& pc) {
    while (true) {
      const Int p = row[pr].at(pc);
      bool moved = false;
      std::vector<int> rs(colrows[pc].begin(), colrows[pc].end());
      for (int r : rs) {
        if (r == pr || rdone[r]) continue;
        Int q = row[r].at(pc) / p;
        row_axpy(r, pr, q);
        if (row[r].count(pc)) {  // nonzero remainder, strictly smaller pivot
          pr = r;
          moved = true;
          break;
        }
      }
      if (moved) continue;
      std::vector<int> cs;
      for (const auto& [c, v] : row[pr])
        if (c != pc && !cdone[c]) cs.push_back(c);
      for (int c : cs) {
        Int q = row[pr].at(c) / p;
        col_axpy(c, pc, q);
        if (row[pr].count(c)) {
          pc = c;
          moved = true;
          break;
        }
      }
      if (!moved) return;
    }
  }
};

void normalize_divisors(std::vector<Int>& d) {
  for (auto& v : d) v = abs_int(v);
  const size_t k = d.size();
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      if (d[j] % d[i] == 0) continue;
      Int g = gcd_int(d[i], d[j]);
      Int l = (d[i] / g) * d[j];
      d[i] = g;
      d[j] = l;
    }
}

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m) {
  Work w(m, false);
  SnfResult res;
  int pr = 0, pc = 0;
  while (w.find_pivot(pr, pc)) {
    w.reduce_at(pr, pc);
    res.divisors.push_back(w.row[pr].at(pc));
    w.rdone[pr] = 1;
    w.cdone[pc] = 1;
  }
  res.rank = static_cast<int>(res.divisors.size());
  normalize_divisors(res.divisors);
  return res;
}

bool in_column_span(const SparseIntMatrix& m, const std::map<int, Int>& v) {
  for (const auto& [i, x] : v)
    if (x != 0 && (i < 0 || i >= m.rows()))
      throw input_error("in_column_span: vector index out of range");
  Work w(m, true);
  std::vector<std::pair<std::pair<int, int>, Int>> pivots;
  int pr = 0, pc = 0;
  while (w.find_pivot(pr, pc)) {
    w.reduce_at(pr, pc);
    pivots.push_back({{pr, pc}, w.row[pr].at(pc)});
    w.rdone[pr] = 1;
    w.cdone[pc] = 1;
  }
  // y = U v must be supported on pivot rows, divisibly.
  std::vector<Int> y(m.rows(), 0);
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, uv] : w.u[r]) {
      auto it = v.find(c);
      if (it != v.end()) y[r] += uv * it->second;
    }
  std::vector<char> is_pivot_row(m.rows(), 0);
  for (const auto& [rc, d] : pivots) {
    is_pivot_row[rc.first] = 1;
    if (y[rc.first] % d != 0) return false;
  }
  for (int r = 0; r < m.rows(); ++r)
    if (!is_pivot_row[r] && y[r] != 0) return false;
  return true;
}

}  // namespace opk
