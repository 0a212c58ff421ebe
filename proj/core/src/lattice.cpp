#include "blowchern/lattice.hpp"

#include "blowchern/error.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace blowchern {
namespace {

std::size_t first_nonzero(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

void axpy(IntVector& y, const Integer& a, const IntVector& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

}  // namespace

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& c) { return c == 0; });
}

Lattice::Lattice(std::size_t dim, const std::vector<IntVector>& generators) : dim_(dim) {
  for (const IntVector& v : generators)
    if (v.size() != dim) throw Error(ErrorKind::InvalidArgument, "lattice generator has wrong length");

  // Generators of the form +-e_j kill column j outright. Most presentations
  // carry many of them (monomials above a truncation), and clearing those
  // columns first keeps the elimination below small.
  std::vector<IntVector> pending(generators.begin(), generators.end());
  std::vector<bool> killed(dim, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (IntVector& v : pending) {
      std::size_t nonzero = 0, where = dim;
      for (std::size_t i = 0; i < dim; ++i)
        if (v[i] != 0 && !killed[i]) {
          ++nonzero;
          where = i;
        }
      if (nonzero == 1 && abs(v[where]) == 1) {
        killed[where] = true;
        changed = true;
      }
    }
  }
  std::map<std::size_t, IntVector> echelon;
  for (std::size_t j = 0; j < dim; ++j)
    if (killed[j]) {
      IntVector e(dim);
      e[j] = 1;
      echelon.emplace(j, std::move(e));
    }

  // Brings v into [0, pivot) at every pivot column from `from` on.
  auto reduce_tail = [&](IntVector& v, std::size_t from) {
    for (auto it = echelon.lower_bound(from); it != echelon.end(); ++it) {
      const std::size_t p = it->first;
      if (v[p] == 0) continue;
      const Integer q = floor_div(v[p], it->second[p]);
      axpy(v, -q, it->second);
    }
  };

  for (IntVector v : pending) {
    reduce_tail(v, 0);
    while (true) {
      const std::size_t p = first_nonzero(v);
      if (p == dim) break;
      auto it = echelon.find(p);
      if (it == echelon.end()) {
        if (v[p] < 0)
          for (auto& c : v) c = -c;
        reduce_tail(v, p + 1);
        echelon.emplace(p, std::move(v));
        break;
      }
      IntVector& row = it->second;
      const Bezout b = extended_gcd(row[p], v[p]);
      const Integer a_row = row[p] / b.gcd;
      const Integer a_v = v[p] / b.gcd;
      IntVector merged(dim), rest(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        merged[i] = b.x * row[i] + b.y * v[i];
        rest[i] = a_row * v[i] - a_v * row[i];
      }
      if (merged[p] < 0)
        for (auto& c : merged) c = -c;
      row = std::move(merged);
      reduce_tail(row, p + 1);
      v = std::move(rest);
      reduce_tail(v, p + 1);
    }
  }

  rows_.reserve(echelon.size());
  for (auto& [p, row] : echelon) {
    pivots_.push_back(p);
    rows_.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    for (std::size_t j = 0; j < i; ++j) {
      const Integer q = floor_div(rows_[j][p], rows_[i][p]);
      axpy(rows_[j], -q, rows_[i]);
    }
  }
}

IntVector Lattice::reduce(IntVector v) const {
  if (v.size() != dim_) throw Error(ErrorKind::InvalidArgument, "vector has wrong length");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p] == 0) continue;
    const Integer q = floor_div(v[p], rows_[i][p]);
    axpy(v, -q, rows_[i]);
  }
  return v;
}

bool Lattice::contains(const IntVector& v) const { return is_zero(reduce(v)); }

std::vector<Integer> Lattice::invariant_factors() const {
  return smith_invariants(rows_, dim_);
}

std::vector<Integer> smith_invariants(std::vector<IntVector> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pick the smallest nonzero entry of the trailing block as pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = floor_div(a[i][t], a[t][t]);
        axpy(a[i], -q, a[t]);
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = floor_div(a[t][j], a[t][t]);
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            axpy(a[t], 1, a[i]);
            clean = false;
            break;
          }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace blowchern
