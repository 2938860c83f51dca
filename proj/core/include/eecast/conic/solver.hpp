#pragma once

#include <optional>
#include <string>

#include "eecast/conic/problem.hpp"

namespace eecast::conic {

struct SolverOptions {
    double gap_tol = 1e-9;          // target duality-gap bound on the objective
    double interior_margin = 1e-9;  // phase-1 strict-interiority target
    int max_newton_steps = 4000;    // budget across both phases
    double t_init = 1.0;            // initial path parameter
    double t_mult = 12.0;           // geometric path update
};

struct ConicSolution {
    enum class Status { Optimal, Infeasible, Unbounded, NumericalFailure };

    Status status = Status::NumericalFailure;
    Eigen::VectorXd primal;   // present iff status == Optimal
    double objective = 0.0;   // maximized value
    double gap_bound = 0.0;   // certified duality-gap bound at termination
    int newton_steps = 0;
    double solve_seconds = 0.0;
    std::string message;

    bool ok() const { return status == Status::Optimal; }
};

const char* to_string(ConicSolution::Status s);

/// Path-following barrier solve of a ConicProblem. Deterministic for
/// identical input. Iterates stay strictly inside every cone, so at
/// Status::Optimal all cone constraints hold exactly and the reported
/// objective is within gap_bound of the true optimum. Failures surface as
/// statuses, never as silently wrong primal values.
///
/// An optional warm point speeds up the interiorization phase; it does not
/// have to be feasible.
ConicSolution solve_conic(const ConicProblem& p, const SolverOptions& opts = {},
                          const std::optional<Eigen::VectorXd>& warm = std::nullopt);

}  // namespace eecast::conic
