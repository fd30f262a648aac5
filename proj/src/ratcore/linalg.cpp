#include "facekit/linalg.hpp"

#include "facekit/errors.hpp"

namespace facekit::linalg {

namespace {

void check_dims(const std::vector<RatVec>& vectors, std::size_t dim)
{
  for (const RatVec& v : vectors)
    if (v.size() != dim)
      throw InputError("vector of dimension " + std::to_string(v.size()) + " in a dimension-" +
                       std::to_string(dim) + " system");
}

// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& m, std::size_t dim)
{
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][col]) == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[row], m[p]);
    Rat inv = 1 / m[row][col];
    for (std::size_t j = col; j < dim; ++j)
      m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0)
        continue;
      Rat f = m[r][col];
      for (std::size_t j = col; j < dim; ++j)
        m[r][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

std::size_t rank(const std::vector<RatVec>& vectors, std::size_t dim)
{
  return span_basis(vectors, dim).size();
}

std::vector<RatVec> independent_subset(const std::vector<RatVec>& vectors, std::size_t dim)
{
  check_dims(vectors, dim);
  std::vector<RatVec> chosen;
  std::vector<RatVec> echelon;
  for (const RatVec& v : vectors) {
    std::vector<RatVec> trial = echelon;
    trial.push_back(v);
    rref(trial, dim);
    if (trial.size() > echelon.size()) {
      echelon = std::move(trial);
      chosen.push_back(v);
    }
  }
  return chosen;
}

std::vector<RatVec> span_basis(const std::vector<RatVec>& vectors, std::size_t dim)
{
  check_dims(vectors, dim);
  std::vector<RatVec> m = vectors;
  rref(m, dim);
  return m;
}

bool in_span(const std::vector<RatVec>& basis, const RatVec& v)
{
  std::size_t dim = v.size();
  std::vector<RatVec> m = span_basis(basis, dim);
  std::size_t before = m.size();
  m.push_back(v);
  rref(m, dim);
  return m.size() == before;
}

std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& vectors, std::size_t dim)
{
  std::vector<RatVec> m = span_basis(vectors, dim);
  std::vector<bool> is_pivot(dim, false);
  std::vector<std::size_t> pivot_col(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::size_t c = 0;
    while (sgn(m[r][c]) == 0)
      ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  std::vector<RatVec> out;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free])
      continue;
    RatVec y = zeros(dim);
    y[free] = 1;
    for (std::size_t r = 0; r < m.size(); ++r)
      y[pivot_col[r]] = -m[r][free];
    out.push_back(std::move(y));
  }
  return out;
}

std::optional<RatVec> solve_square(const std::vector<RatVec>& rows, const RatVec& rhs)
{
  std::size_t n = rows.size();
  if (rhs.size() != n)
    throw InputError("right-hand side size mismatch");
  if (n == 0)
    return RatVec{};
  std::vector<RatVec> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw InputError("solve_square needs a square system");
    aug[i] = rows[i];
    aug[i].push_back(rhs[i]);
  }
  std::vector<std::size_t> pivots = rref(aug, n + 1);
  if (pivots.size() != n || pivots.back() != n - 1)
    return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = aug[i][n];
  return x;
}

}  // namespace facekit::linalg
