#ifndef FACEKIT_LP_HPP
#define FACEKIT_LP_HPP

#include "facekit/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace facekit {

enum class Relation { LessEq, Equal, GreaterEq };

// coeffs . x  (rel)  rhs
struct Constraint {
  RatVec coeffs;
  Rat rhs;
  Relation rel = Relation::LessEq;
};

enum class LpStatus { Feasible, Infeasible };

// A Feasible outcome carries a witness point; an Infeasible one carries a
// multiplier y (one entry per constraint) with y >= 0 on <= rows, y <= 0 on
// >= rows, sum_i y_i a_i = 0 and sum_i y_i b_i < 0.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<RatVec> witness;
  std::optional<RatVec> certificate;
};

/// Exact feasibility of a system over free variables x in Q^dim.
/// Throws InputError when a constraint has the wrong dimension.
LpOutcome lp_feasible(const std::vector<Constraint>& constraints, std::size_t dim);

bool satisfies(const std::vector<Constraint>& constraints, const RatVec& x);
bool certifies_infeasible(const std::vector<Constraint>& constraints, const RatVec& y);

namespace lp {

// Kernel behind lp_feasible: maximise objective . x subject to rows, with a
// per-variable sign restriction. Exact two-phase tableau simplex, Bland's rule.
struct Problem {
  std::size_t num_vars = 0;
  std::vector<bool> nonneg;  // empty means all variables free
  std::vector<Constraint> rows;
  RatVec objective;  // empty means feasibility only
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  RatVec x;
  Rat value;
  RatVec farkas;  // filled when Infeasible
};

Solution solve(const Problem& problem);

/// Feasibility with some rows required to hold strictly. Each strict row gets
/// a shared slack t bounded by 0 <= t <= 1 and t is maximised; the system is
/// strictly feasible iff the optimum is positive. Equality rows must not be
/// flagged strict.
std::optional<RatVec> strictly_feasible(const Problem& problem, const std::vector<bool>& strict);

}  // namespace lp

}  // namespace facekit

#endif
