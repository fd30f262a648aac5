#include "facekit/lp.hpp"

#include "facekit/errors.hpp"

#include <limits>

namespace facekit {

namespace lp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau in standard form  T y = b, y >= 0, b >= 0, with one
// artificial column per row appended after the structural and slack columns.
class Tableau {
 public:
  Tableau(const Problem& p)
  {
    const std::size_t m = p.rows.size();
    const std::size_t n = p.num_vars;
    bool all_free = p.nonneg.empty();
    if (!all_free && p.nonneg.size() != n)
      throw InputError("sign restriction list has the wrong length");

    // structural columns: one per nonneg variable, two for a free one
    for (std::size_t j = 0; j < n; ++j) {
      pos_col_.push_back(num_cols_++);
      neg_col_.push_back(all_free || !p.nonneg[j] ? num_cols_++ : kNone);
    }
    std::vector<std::size_t> slack_col(m, kNone);
    for (std::size_t i = 0; i < m; ++i)
      if (p.rows[i].rel != Relation::Equal)
        slack_col[i] = num_cols_++;
    first_art_ = num_cols_;
    num_cols_ += m;

    rows_.assign(m, RatVec(num_cols_, Rat(0)));
    rhs_.resize(m);
    flip_.resize(m);
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint& c = p.rows[i];
      if (c.coeffs.size() != n)
        throw InputError("constraint " + std::to_string(i) + " has dimension " +
                         std::to_string(c.coeffs.size()) + ", expected " + std::to_string(n));
      int sigma = sgn(c.rhs) < 0 ? -1 : 1;
      flip_[i] = sigma;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(c.coeffs[j]) == 0)
          continue;
        rows_[i][pos_col_[j]] = sigma * c.coeffs[j];
        if (neg_col_[j] != kNone)
          rows_[i][neg_col_[j]] = -sigma * c.coeffs[j];
      }
      if (slack_col[i] != kNone)
        rows_[i][slack_col[i]] = c.rel == Relation::LessEq ? sigma : -sigma;
      rows_[i][first_art_ + i] = 1;
      rhs_[i] = sigma * c.rhs;
      basis_[i] = first_art_ + i;
    }
  }

  // Phase I; returns false (and fills farkas) when infeasible.
  bool phase_one(RatVec& farkas)
  {
    RatVec cost(num_cols_, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      cost[first_art_ + i] = -1;
    price(cost);
    run(num_cols_);
    if (sgn(value_) < 0) {
      // w = c_B B^-1 read off the artificial reduced costs: r_a = -1 - w_a
      farkas.resize(rows_.size());
      for (std::size_t i = 0; i < rows_.size(); ++i)
        farkas[i] = flip_[i] * (-1 - reduced_[first_art_ + i]);
      return false;
    }
    drive_out_artificials();
    return true;
  }

  Status phase_two(const RatVec& objective)
  {
    RatVec cost(num_cols_, Rat(0));
    for (std::size_t j = 0; j < objective.size(); ++j) {
      cost[pos_col_[j]] = objective[j];
      if (neg_col_[j] != kNone)
        cost[neg_col_[j]] = -objective[j];
    }
    price(cost);
    return run(first_art_) ? Status::Optimal : Status::Unbounded;
  }

  RatVec primal(std::size_t n) const
  {
    RatVec col_value(num_cols_, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      col_value[basis_[i]] = rhs_[i];
    RatVec x(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = col_value[pos_col_[j]];
      if (neg_col_[j] != kNone)
        x[j] -= col_value[neg_col_[j]];
    }
    return x;
  }

  const Rat& value() const { return value_; }

 private:
  void price(const RatVec& cost)
  {
    cost_ = cost;
    reduced_ = cost;
    value_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& cb = cost_[basis_[i]];
      if (sgn(cb) == 0)
        continue;
      for (std::size_t j = 0; j < num_cols_; ++j)
        if (sgn(rows_[i][j]) != 0)
          reduced_[j] -= cb * rows_[i][j];
      value_ += cb * rhs_[i];
    }
  }

  // Simplex iterations restricted to entering columns < col_limit. Returns
  // false when the objective is unbounded along an entering column.
  bool run(std::size_t col_limit)
  {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < col_limit; ++j)
        if (sgn(reduced_[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == kNone)
        return true;
      std::size_t leave = kNone;
      Rat best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0)
          continue;
        Rat ratio = rhs_[i] / rows_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone)
        return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c)
  {
    RatVec& prow = rows_[r];
    Rat inv = 1 / prow[c];
    for (std::size_t j = 0; j < num_cols_; ++j)
      if (sgn(prow[j]) != 0)
        prow[j] *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0)
        continue;
      Rat f = rows_[i][c];
      for (std::size_t j = 0; j < num_cols_; ++j)
        if (sgn(prow[j]) != 0)
          rows_[i][j] -= f * prow[j];
      rhs_[i] -= f * rhs_[r];
    }
    if (sgn(reduced_[c]) != 0) {
      Rat f = reduced_[c];
      for (std::size_t j = 0; j < num_cols_; ++j)
        if (sgn(prow[j]) != 0)
          reduced_[j] -= f * prow[j];
      value_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Artificials still basic (at level zero) are pivoted out when the row has
  // a structural entry; otherwise the row is redundant and stays inert.
  void drive_out_artificials()
  {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < first_art_)
        continue;
      for (std::size_t j = 0; j < first_art_; ++j)
        if (sgn(rows_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  std::size_t num_cols_ = 0;
  std::size_t first_art_ = 0;
  std::vector<std::size_t> pos_col_, neg_col_;
  std::vector<RatVec> rows_;
  RatVec rhs_;
  std::vector<int> flip_;
  std::vector<std::size_t> basis_;
  RatVec cost_, reduced_;
  Rat value_;
};

}  // namespace

Solution solve(const Problem& problem)
{
  if (!problem.objective.empty() && problem.objective.size() != problem.num_vars)
    throw InputError("objective has the wrong dimension");
  Tableau t(problem);
  Solution s;
  if (!t.phase_one(s.farkas)) {
    s.status = Status::Infeasible;
    return s;
  }
  if (problem.objective.empty()) {
    s.status = Status::Optimal;
    s.x = t.primal(problem.num_vars);
    s.value = 0;
    return s;
  }
  s.status = t.phase_two(problem.objective);
  s.x = t.primal(problem.num_vars);
  s.value = t.value();
  return s;
}

std::optional<RatVec> strictly_feasible(const Problem& problem, const std::vector<bool>& strict)
{
  if (strict.size() != problem.rows.size())
    throw InputError("strict flag list has the wrong length");
  bool any = false;
  for (std::size_t i = 0; i < strict.size(); ++i) {
    if (!strict[i])
      continue;
    if (problem.rows[i].rel == Relation::Equal)
      throw InputError("an equality row cannot be strict");
    any = true;
  }
  if (!any) {
    Solution s = solve(problem);
    if (s.status == Status::Infeasible)
      return std::nullopt;
    return s.x;
  }

  const std::size_t n = problem.num_vars;
  Problem aug;
  aug.num_vars = n + 1;
  aug.nonneg = problem.nonneg.empty() ? std::vector<bool>(n, false) : problem.nonneg;
  aug.nonneg.push_back(true);
  for (std::size_t i = 0; i < problem.rows.size(); ++i) {
    Constraint c = problem.rows[i];
    Rat t_coeff = 0;
    if (strict[i])
      t_coeff = c.rel == Relation::LessEq ? 1 : -1;
    c.coeffs.push_back(t_coeff);
    aug.rows.push_back(std::move(c));
  }
  Constraint cap{zeros(n + 1), 1, Relation::LessEq};
  cap.coeffs[n] = 1;
  aug.rows.push_back(std::move(cap));
  aug.objective = zeros(n + 1);
  aug.objective[n] = 1;

  Solution s = solve(aug);
  if (s.status != Status::Optimal || sgn(s.value) <= 0)
    return std::nullopt;
  s.x.pop_back();
  return s.x;
}

}  // namespace lp

LpOutcome lp_feasible(const std::vector<Constraint>& constraints, std::size_t dim)
{
  if (dim == 0)
    throw InputError("dimension must be positive");
  lp::Problem p;
  p.num_vars = dim;
  p.rows = constraints;
  lp::Solution s = lp::solve(p);
  LpOutcome out;
  if (s.status == lp::Status::Infeasible) {
    out.status = LpStatus::Infeasible;
    out.certificate = std::move(s.farkas);
  } else {
    out.status = LpStatus::Feasible;
    out.witness = std::move(s.x);
  }
  return out;
}

bool satisfies(const std::vector<Constraint>& constraints, const RatVec& x)
{
  for (const Constraint& c : constraints) {
    int side = cmp(dot(c.coeffs, x), c.rhs);
    if ((c.rel == Relation::LessEq && side > 0) || (c.rel == Relation::GreaterEq && side < 0) ||
        (c.rel == Relation::Equal && side != 0))
      return false;
  }
  return true;
}

bool certifies_infeasible(const std::vector<Constraint>& constraints, const RatVec& y)
{
  if (y.size() != constraints.size() || constraints.empty())
    return false;
  std::size_t dim = constraints.front().coeffs.size();
  RatVec combo = zeros(dim);
  Rat rhs = 0;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const Constraint& c = constraints[i];
    if ((c.rel == Relation::LessEq && sgn(y[i]) < 0) || (c.rel == Relation::GreaterEq && sgn(y[i]) > 0))
      return false;
    combo = combo + y[i] * c.coeffs;
    rhs += y[i] * c.rhs;
  }
  return is_zero(combo) && sgn(rhs) < 0;
}

}  // namespace facekit
