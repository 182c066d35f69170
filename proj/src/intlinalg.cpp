#include "surfcls/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "surfcls/error.hpp"

namespace surfcls {

namespace {

[[noreturn]] void overflow() {
  throw Error(ErrorCode::Overflow, "integer overflow in exact arithmetic");
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t abs_checked(std::int64_t a) {
  if (a == INT64_MIN) overflow();
  return a < 0 ? -a : a;
}

// row_i -= q * row_t from column `from` on
void row_axpy(IntMatrix& a, std::size_t i, std::size_t t, std::int64_t q, std::size_t from) {
  for (std::size_t c = from; c < a.cols(); ++c) a(i, c) = add(a(i, c), mul(-q, a(t, c)));
}

void col_axpy(IntMatrix& a, std::size_t j, std::size_t t, std::int64_t q, std::size_t from) {
  for (std::size_t r = from; r < a.rows(); ++r) a(r, j) = add(a(r, j), mul(-q, a(r, t)));
}

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

std::vector<std::int64_t> dense_snf(IntMatrix a) {
  std::vector<std::int64_t> d;
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the remaining block goes to (t, t).
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          std::int64_t v = abs_checked(a(r, c));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      }
      if (best == 0) return d;
      swap_rows(a, t, pr);
      swap_cols(a, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        row_axpy(a, r, t, a(r, t) / a(t, t), t);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        col_axpy(a, c, t, a(t, c) / a(t, t), t);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder now exists; pivot on it

      // Divisibility: pull any entry not divisible by the pivot into row t.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a(r, c) % a(t, t) != 0) {
            for (std::size_t cc = t; cc < cols; ++cc) a(t, cc) = add(a(t, cc), a(r, cc));
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      d.push_back(abs_checked(a(t, t)));
      break;
    }
  }
  return d;
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = add(c(i, j), mul(a(i, k), b(k, j)));
    }
  }
  return c;
}

// Boundary matrices are large and very sparse with many unit entries.
// Unit pivots are eliminated first on a sparse copy (cheapest row/column
// product first); the rest goes through the dense routine.
std::vector<std::int64_t> smith_normal_form(const IntMatrix& m) {
  using Row = std::map<std::size_t, std::int64_t>;
  std::vector<Row> rows(m.rows());
  std::vector<std::set<std::size_t>> col_rows(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) {
        rows[r][c] = m(r, c);
        col_rows[c].insert(r);
      }
    }
  }
  std::vector<bool> row_alive(m.rows(), true), col_alive(m.cols(), true);
  std::size_t units = 0;
  for (;;) {
    std::size_t pr = 0, pc = 0, best = SIZE_MAX;
    for (std::size_t r = 0; r < rows.size() && best > 0; ++r) {
      if (!row_alive[r]) continue;
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        std::size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
        if (cost < best) {
          best = cost;
          pr = r;
          pc = c;
        }
      }
    }
    if (best == SIZE_MAX) break;
    std::int64_t pv = rows[pr].at(pc);
    std::vector<std::size_t> others(col_rows[pc].begin(), col_rows[pc].end());
    for (std::size_t r : others) {
      if (r == pr) continue;
      std::int64_t q = mul(rows[r].at(pc), pv);  // pv = +-1, so this is the quotient
      for (const auto& [c, v] : rows[pr]) {
        std::int64_t nv = add(rows[r].count(c) ? rows[r][c] : 0, mul(-q, v));
        if (nv == 0) {
          rows[r].erase(c);
          col_rows[c].erase(r);
        } else {
          rows[r][c] = nv;
          col_rows[c].insert(r);
        }
      }
    }
    // Column pc is now zero outside row pr; column operations clear row pr.
    for (const auto& [c, v] : rows[pr]) col_rows[c].erase(pr);
    rows[pr].clear();
    row_alive[pr] = false;
    col_alive[pc] = false;
    ++units;
  }
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (row_alive[r] && !rows[r].empty()) live_rows.push_back(r);
  }
  for (std::size_t c = 0; c < col_rows.size(); ++c) {
    if (col_alive[c] && !col_rows[c].empty()) live_cols.push_back(c);
  }
  IntMatrix rest(live_rows.size(), live_cols.size());
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    for (std::size_t j = 0; j < live_cols.size(); ++j) {
      auto it = rows[live_rows[i]].find(live_cols[j]);
      if (it != rows[live_rows[i]].end()) rest(i, j) = it->second;
    }
  }
  std::vector<std::int64_t> d(units, 1);
  auto tail = dense_snf(std::move(rest));
  d.insert(d.end(), tail.begin(), tail.end());
  return d;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).size(); }

FgAbelianGroup cokernel(std::size_t ambient_rank, const IntMatrix& m) {
  if (m.cols() == 0) return FgAbelianGroup{ambient_rank, {}};
  if (m.rows() != ambient_rank) {
    throw Error(ErrorCode::DimensionMismatch,
                "relation matrix has " + std::to_string(m.rows()) + " rows, expected " +
                    std::to_string(ambient_rank));
  }
  auto f = smith_normal_form(m);
  FgAbelianGroup g;
  g.free_rank = ambient_rank - f.size();
  for (auto x : f) {
    if (x > 1) g.torsion.push_back(x);
  }
  return g;
}

std::string group_format(const FgAbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1) parts.emplace_back("Z");
  if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
  for (auto t : g.torsion) parts.push_back("Z/" + std::to_string(t));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " (+) " + parts[i];
  return s;
}

}  // namespace surfcls
