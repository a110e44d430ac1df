#pragma once
#include "dpa/coeff.hpp"
#include "dpa/error.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dpa {

template <class Key> using SVec = std::map<Key, Coeff>;

template <class Key> void svec_add(SVec<Key> &a, const SVec<Key> &b, const Coeff &c) {
  if (c.is_zero()) return;
  for (auto &[k, v] : b) {
    auto it = a.find(k);
    if (it == a.end()) {
      Coeff nv = c * v;
      if (!nv.is_zero()) a.emplace(k, nv);
    } else {
      it->second += c * v;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

// Row-echelon set of sparse vectors in fully reduced form; supports canonical
// reduction modulo the stored span.
template <class Key> struct Sifter {
  std::map<Key, SVec<Key>> rows; // pivot (smallest key) -> row, pivot coeff 1

  SVec<Key> reduce(SVec<Key> v) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto &[k, c] : v) {
        auto it = rows.find(k);
        if (it != rows.end()) {
          svec_add(v, it->second, -c);
          changed = true;
          break;
        }
      }
    }
    return v;
  }

  // returns true if v was independent of the span (and got inserted)
  bool add(SVec<Key> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Key pivot = v.begin()->first;
    Coeff lead = v.begin()->second;
    SVec<Key> row;
    for (auto &[k, c] : v) row.emplace(k, c / lead);
    for (auto &[p, r] : rows) { // back-reduce to keep full RREF
      auto it = r.find(pivot);
      if (it != r.end()) svec_add(r, row, -it->second);
    }
    rows.emplace(pivot, std::move(row));
    return true;
  }

  size_t rank() const { return rows.size(); }
};

// Incremental column solver: feed columns A_j; then solve sum_j x_j A_j = b.
// Also reports null combinations among the fed columns.
template <class Key> struct ColSolver {
  struct PivRow {
    Key pivot;
    SVec<Key> col;      // column reduced, pivot coeff 1
    SVec<int> combo;    // expression of col in the original columns
  };
  std::vector<PivRow> pivots;
  int ncols = 0;

  // returns a null combination if the column is dependent, else nullopt
  std::optional<SVec<int>> add_col(SVec<Key> col, int chr) {
    SVec<int> combo;
    combo.emplace(ncols, Coeff::one(chr));
    reduce(col, combo);
    ++ncols;
    if (col.empty()) return combo;
    Coeff lead = col.begin()->second;
    Key pivot = col.begin()->first;
    SVec<Key> ncol;
    for (auto &[k, c] : col) ncol.emplace(k, c / lead);
    SVec<int> ncombo;
    for (auto &[k, c] : combo) ncombo.emplace(k, c / lead);
    pivots.push_back({pivot, std::move(ncol), std::move(ncombo)});
    return std::nullopt;
  }

  // solve sum_j x_j A_j = b over the fed columns; nullopt if unsolvable
  std::optional<SVec<int>> solve(SVec<Key> b, int chr) const {
    SVec<int> combo;
    reduce(b, combo);
    if (!b.empty()) return std::nullopt;
    SVec<int> x;
    svec_add(x, combo, -Coeff::one(chr));
    return x;
  }

private:
  void reduce(SVec<Key> &col, SVec<int> &combo) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto &pr : pivots) {
        auto it = col.find(pr.pivot);
        if (it != col.end()) {
          Coeff c = it->second;
          svec_add(col, pr.col, -c);
          svec_add(combo, pr.combo, -c);
          changed = true;
        }
      }
    }
  }
};

} // namespace dpa
