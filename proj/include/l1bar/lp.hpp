#ifndef L1BAR_LP_HPP
#define L1BAR_LP_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Sparse>

#include "l1bar/rational.hpp"

namespace l1bar {

class LpError : public std::runtime_error
{
    public:
        explicit LpError(const std::string& what) : std::runtime_error(what) {}
};

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

/**
 * minimize cost . x  subject to  a x (senses) b,  0 <= x <= upper.
 *
 * All data is exact. `senses` defaults to all-equality when left empty and
 * `upper` to no upper bounds.
 */
struct LpProblem
{
    Eigen::SparseMatrix<Rational, Eigen::RowMajor> a;
    VectorXr b;
    VectorXr cost;
    std::vector<Sense> senses;
    std::vector<std::optional<Rational>> upper;

    static LpProblem equality(const MatrixXr& a, const VectorXr& b, const VectorXr& cost);
    Eigen::Index variables() const { return a.cols(); }
    Eigen::Index constraints() const { return a.rows(); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution
{
    LpStatus status = LpStatus::kInfeasible;
    VectorXr x;                          // original variables
    Rational value = 0;
    std::vector<Eigen::Index> basis;     // basic original variables, by row
    std::size_t pivots = 0;
};

/// Exact two-phase primal simplex on a dense rational tableau with Bland's
/// rule (smallest eligible index enters; ties in the ratio test leave by
/// smallest basic index). Deterministic and terminating.
LpSolution lp_solve(const LpProblem& problem);

const char* to_string(LpStatus s);

}   // namespace l1bar

#endif
