#include "hopfwreath/linalg.hpp"

#include <algorithm>
#include <set>

namespace hopfwreath {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Scalar inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

namespace {

// Rows indexed by the union of codomain symbols, columns by the domain.
std::pair<Matrix, std::vector<Sym>> matrix_of(const LinMap& m) {
  std::set<Sym> rows_set;
  for (const auto& s : m.domain())
    for (const auto& [t, c] : m.apply(s)) rows_set.insert(t);
  std::vector<Sym> rows(rows_set.begin(), rows_set.end());
  Matrix a(rows.size(), std::vector<Scalar>(m.domain().size(), Scalar(0)));
  for (std::size_t j = 0; j < m.domain().size(); ++j) {
    const LinComb& img = m.apply(m.domain()[j]);
    for (std::size_t i = 0; i < rows.size(); ++i) a[i][j] = img.coeff(rows[i]);
  }
  return {std::move(a), std::move(rows)};
}

} // namespace

std::vector<LinComb> kernel_basis(const LinMap& m) {
  const auto& dom = m.domain();
  auto [a, rows] = matrix_of(m);
  if (rows.empty()) { // zero map: full kernel
    std::vector<LinComb> basis;
    for (const auto& s : dom) basis.emplace_back(s);
    return basis;
  }
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(dom.size(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<LinComb> basis;
  for (std::size_t f = 0; f < dom.size(); ++f) {
    if (is_pivot[f]) continue;
    LinComb v(dom[f]);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v.add(dom[pivots[r]], -a[r][f]);
    // canonical scaling: +1 at the first supported domain symbol
    for (const auto& s : dom)
      if (v.coeff(s) != 0) {
        v *= 1 / v.coeff(s);
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

LinComb solve(const LinMap& m, const LinComb& y) {
  const auto& dom = m.domain();
  std::set<Sym> rows_set;
  for (const auto& s : dom)
    for (const auto& [t, c] : m.apply(s)) rows_set.insert(t);
  for (const auto& [t, c] : y) rows_set.insert(t);
  std::vector<Sym> rows(rows_set.begin(), rows_set.end());

  Matrix a(rows.size(), std::vector<Scalar>(dom.size() + 1, Scalar(0)));
  for (std::size_t j = 0; j < dom.size(); ++j) {
    const LinComb& img = m.apply(dom[j]);
    for (std::size_t i = 0; i < rows.size(); ++i) a[i][j] = img.coeff(rows[i]);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) a[i][dom.size()] = y.coeff(rows[i]);

  const auto pivots = rref(a);
  if (!pivots.empty() && pivots.back() == dom.size())
    throw NoSolution("right-hand side outside the image");

  LinComb v;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    v.add(dom[pivots[r]], a[r][dom.size()]);
  return v;
}

std::size_t rank(const std::vector<LinComb>& vecs) {
  std::set<Sym> cols_set;
  for (const auto& v : vecs)
    for (const auto& [s, c] : v) cols_set.insert(s);
  std::vector<Sym> cols(cols_set.begin(), cols_set.end());
  Matrix a(vecs.size(), std::vector<Scalar>(cols.size(), Scalar(0)));
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) a[i][j] = vecs[i].coeff(cols[j]);
  return rref(a).size();
}

std::vector<Scalar> coordinates(const std::vector<LinComb>& basis, const LinComb& x) {
  std::vector<Sym> dom;
  std::map<Sym, LinComb> action;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Sym s = Sym::atom("#" + std::to_string(i));
    dom.push_back(s);
    action.emplace(s, basis[i]);
  }
  LinComb sol = solve(LinMap(std::move(dom), std::move(action)), x);
  std::vector<Scalar> coords(basis.size(), Scalar(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    coords[i] = sol.coeff(Sym::atom("#" + std::to_string(i)));
  return coords;
}

} // namespace hopfwreath
