#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubewords::detail {

using Rational = boost::multiprecision::cpp_rational;

// Exact simplex method for  max cᵀx  s.t.  Ax = b, x >= 0.
// Two phases, Bland's rule (no cycling).  Sizes here are tiny, so the
// dense rational tableau is fine.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    Rational objective;
    std::vector<Rational> x;
};

LpResult solve_lp_equality(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                           std::vector<Rational> c);

}  // namespace cubewords::detail
