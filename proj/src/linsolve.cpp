#include "mbfun/linsolve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mbfun {

void LinearSystem::add_equation(SparseRow row, const Rational& rhs) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= unknowns_) throw std::out_of_range("unknown index");
    it = it->second == 0 ? row.erase(it) : std::next(it);
  }
  if (row.empty() && rhs == 0) return;
  rows_.push_back(std::move(row));
  rhs_.push_back(rhs);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Row echelon form built incrementally; each pivot row is scaled so the
// pivot entry (its smallest column) is 1.
class Echelon {
 public:
  // Returns false if the row reduces to 0 = nonzero.
  bool insert(SparseRow row, Rational rhs) {
    auto it = row.begin();
    while (it != row.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const Rational f = it->second;
      const std::size_t col = it->first;
      for (const auto& [c, v] : p->second.row) {
        auto [slot, inserted] = row.try_emplace(c, 0);
        slot->second -= f * v;
        if (slot->second == 0 && c != col) row.erase(slot);
      }
      rhs -= f * p->second.rhs;
      row.erase(col);
      it = row.upper_bound(col);
    }
    if (row.empty()) return rhs == 0;
    const std::size_t col = row.begin()->first;
    const Rational lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
    rhs /= lead;
    pivots_.emplace(col, Pivot{std::move(row), std::move(rhs)});
    return true;
  }

  bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }

  // Back substitution into x (free variables already assigned).
  void back_substitute(std::vector<Rational>& x) const {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Rational v = it->second.rhs;
      for (const auto& [c, a] : it->second.row) {
        if (c != it->first) v -= a * x[c];
      }
      x[it->first] = v;
    }
  }

  void zero_rhs() {
    for (auto& [c, p] : pivots_) p.rhs = 0;
  }

 private:
  struct Pivot {
    SparseRow row;
    Rational rhs;
  };
  std::map<std::size_t, Pivot> pivots_;
};

}  // namespace

std::vector<std::vector<std::size_t>> LinearSystem::components(bool only_inhomogeneous) const {
  UnionFind uf(unknowns_ + rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) uf.join(unknowns_ + r, c);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  std::map<std::size_t, bool> touched;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto root = uf.find(unknowns_ + r);
    groups[root].push_back(r);
    if (rhs_[r] != 0) touched[root] = true;
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, rows] : groups) {
    if (only_inhomogeneous && !touched[root]) continue;
    out.push_back(std::move(rows));
  }
  return out;
}

std::optional<std::vector<Rational>> LinearSystem::solve() const {
  std::vector<Rational> x(unknowns_, Rational(0));
  for (const auto& rows : components(true)) {
    Echelon e;
    for (auto r : rows) {
      if (!e.insert(rows_[r], rhs_[r])) return std::nullopt;
    }
    e.back_substitute(x);
  }
  return x;
}

std::vector<std::vector<Rational>> LinearSystem::nullspace() const {
  std::vector<std::vector<Rational>> basis;
  std::vector<bool> constrained(unknowns_, false);
  for (const auto& rows : components(false)) {
    Echelon e;
    std::vector<std::size_t> cols;
    for (auto r : rows) {
      for (const auto& [c, v] : rows_[r]) cols.push_back(c);
      e.insert(rows_[r], 0);
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (auto c : cols) constrained[c] = true;
    for (auto f : cols) {
      if (e.is_pivot(f)) continue;
      std::vector<Rational> x(unknowns_, Rational(0));
      x[f] = 1;
      e.back_substitute(x);
      basis.push_back(std::move(x));
    }
  }
  for (std::size_t c = 0; c < unknowns_; ++c) {
    if (constrained[c]) continue;
    std::vector<Rational> x(unknowns_, Rational(0));
    x[c] = 1;
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace mbfun
