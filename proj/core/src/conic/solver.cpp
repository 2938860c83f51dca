#include "eecast/conic/solver.hpp"

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

// Path-following barrier method over the block cones. Two phases: a
// big-shift interiorization phase (minimize the common shift tau until the
// point is strictly inside every cone), then the usual central path on the
// actual objective. All Newton linear algebra runs in long double; problems
// here are small and dense, so the extended precision is cheap and buys the
// tight duality gaps the successive-approximation loop needs.

namespace eecast::conic {
namespace {

using Real = long double;
using VecR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using MatR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

Real barrier_nu(BlockKind k) {
    switch (k) {
        case BlockKind::LinearIneq: return 1;
        case BlockKind::RotatedSoc: return 2;
        case BlockKind::ExpCone: return 3;
        default: return 0;
    }
}

struct CBlock {
    BlockKind kind;
    std::vector<int> support;  // variable indices this block touches
    MatR J;                    // m x |support|
    VecR off;                  // m
    VecR shift;                // m, phase-1 interior direction
    int m = 0;
};

struct Compiled {
    int n = 0;     // reduced variable count
    VecR c;        // maximize c.x (reduced space)
    Real obj_const = 0;
    std::vector<CBlock> cones;
    Real nu = 0;
    // x_full = x0 + Z * x_reduced; identity when the problem has no equalities
    bool has_eq = false;
    MatR Z;
    VecR x0;
    std::string error;
};

VecR cone_shift(BlockKind kind, int m) {
    VecR e = VecR::Zero(m);
    switch (kind) {
        case BlockKind::LinearIneq: e(0) = 1; break;
        case BlockKind::RotatedSoc: e(0) = 1; e(1) = 1; break;
        case BlockKind::ExpCone: e(0) = -1; e(1) = 1; e(2) = 1; break;
        default: break;
    }
    return e;
}

Compiled compile(const ConicProblem& p) {
    Compiled C;

    // equality rows, if any, are eliminated once through a nullspace basis
    std::vector<const LinExpr*> eq_rows;
    for (const auto& blk : p.blocks)
        if (blk.kind == BlockKind::LinearEq) eq_rows.push_back(&blk.rows[0]);

    MatR Z;
    VecR x0 = VecR::Zero(p.num_cols);
    if (!eq_rows.empty()) {
        MatR A = MatR::Zero(static_cast<int>(eq_rows.size()), p.num_cols);
        VecR b = VecR::Zero(static_cast<int>(eq_rows.size()));
        for (int r = 0; r < static_cast<int>(eq_rows.size()); ++r) {
            for (const auto& [col, w] : eq_rows[r]->terms) A(r, col) += static_cast<Real>(w);
            b(r) = -static_cast<Real>(eq_rows[r]->offset);
        }
        Eigen::FullPivLU<MatR> lu(A);
        lu.setThreshold(Real(1e-12));
        // consistency check
        x0 = lu.solve(b);
        if ((A * x0 - b).cwiseAbs().maxCoeff() > Real(1e-9) * (Real(1) + b.cwiseAbs().maxCoeff())) {
            C.error = "inconsistent linear equalities";
            return C;
        }
        Z = lu.kernel();
        C.has_eq = true;
        C.Z = Z;
        C.x0 = x0;
        C.n = static_cast<int>(Z.cols());
    } else {
        C.n = p.num_cols;
        C.x0 = x0;
    }

    // objective in reduced coordinates
    VecR c_full = VecR::Zero(p.num_cols);
    for (const auto& [col, w] : p.objective.terms) c_full(col) += static_cast<Real>(w);
    if (C.has_eq) {
        C.c = C.Z.transpose() * c_full;
        C.obj_const = static_cast<Real>(p.objective.offset) + c_full.dot(C.x0);
    } else {
        C.c = c_full;
        C.obj_const = static_cast<Real>(p.objective.offset);
    }

    for (const auto& blk : p.blocks) {
        if (blk.kind == BlockKind::LinearEq) continue;
        CBlock cb;
        cb.kind = blk.kind;
        cb.m = static_cast<int>(blk.rows.size());
        if (C.has_eq) {
            // dense over all reduced variables; equality problems stay tiny
            MatR Jf = MatR::Zero(cb.m, p.num_cols);
            VecR of = VecR::Zero(cb.m);
            for (int r = 0; r < cb.m; ++r) {
                for (const auto& [col, w] : blk.rows[r].terms) Jf(r, col) += static_cast<Real>(w);
                of(r) = static_cast<Real>(blk.rows[r].offset);
            }
            cb.J = Jf * C.Z;
            cb.off = of + Jf * C.x0;
            cb.support.resize(C.n);
            for (int i = 0; i < C.n; ++i) cb.support[i] = i;
        } else {
            std::vector<int> sup;
            for (const auto& row : blk.rows)
                for (const auto& [col, w] : row.terms) sup.push_back(col);
            std::sort(sup.begin(), sup.end());
            sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
            cb.support = sup;
            cb.J = MatR::Zero(cb.m, static_cast<int>(sup.size()));
            cb.off = VecR::Zero(cb.m);
            for (int r = 0; r < cb.m; ++r) {
                for (const auto& [col, w] : blk.rows[r].terms) {
                    const int j = static_cast<int>(
                        std::lower_bound(sup.begin(), sup.end(), col) - sup.begin());
                    cb.J(r, j) += static_cast<Real>(w);
                }
                cb.off(r) = static_cast<Real>(blk.rows[r].offset);
            }
        }
        // joint row scaling keeps cone membership intact and conditions the barrier
        Real scale = 0;
        for (int r = 0; r < cb.m; ++r)
            scale = std::max({scale, cb.off.cwiseAbs()(r), cb.J.row(r).cwiseAbs().maxCoeff()});
        if (scale > 0) {
            cb.J /= scale;
            cb.off /= scale;
        }
        cb.shift = cone_shift(cb.kind, cb.m);
        C.nu += barrier_nu(cb.kind);
        C.cones.push_back(std::move(cb));
    }
    return C;
}

// Smallest "distance to the boundary" proxy; positive iff strictly interior.
Real block_margin(const CBlock& b, const VecR& u) {
    switch (b.kind) {
        case BlockKind::LinearIneq:
            return u(0);
        case BlockKind::RotatedSoc: {
            const Real p = u(0), q = u(1);
            const Real d = p * q - u.tail(b.m - 2).squaredNorm();
            return std::min({p, q, d});
        }
        case BlockKind::ExpCone: {
            const Real y = u(1), z = u(2);
            if (!(y > 0) || !(z > 0)) return std::min(y, z);
            const Real rho = y * std::log(z / y) - u(0);
            return std::min({y, z, rho});
        }
        default:
            return Real(1);
    }
}

// Barrier value, or +inf outside the domain.
Real block_value(const CBlock& b, const VecR& u) {
    constexpr Real inf = std::numeric_limits<Real>::infinity();
    switch (b.kind) {
        case BlockKind::LinearIneq:
            return u(0) > 0 ? -std::log(u(0)) : inf;
        case BlockKind::RotatedSoc: {
            const Real p = u(0), q = u(1);
            if (!(p > 0) || !(q > 0)) return inf;
            const Real d = p * q - u.tail(b.m - 2).squaredNorm();
            return d > 0 ? -std::log(d) : inf;
        }
        case BlockKind::ExpCone: {
            const Real y = u(1), z = u(2);
            if (!(y > 0) || !(z > 0)) return inf;
            const Real rho = y * std::log(z / y) - u(0);
            return rho > 0 ? -(std::log(rho) + std::log(y) + std::log(z)) : inf;
        }
        default:
            return 0;
    }
}

// Gradient and Hessian of the block barrier in block-local coordinates.
void block_deriv(const CBlock& b, const VecR& u, VecR& g, MatR& H) {
    g.setZero(b.m);
    H.setZero(b.m, b.m);
    switch (b.kind) {
        case BlockKind::LinearIneq: {
            g(0) = -1 / u(0);
            H(0, 0) = 1 / (u(0) * u(0));
            break;
        }
        case BlockKind::RotatedSoc: {
            const Real p = u(0), q = u(1);
            const int mz = b.m - 2;
            const auto z = u.tail(mz);
            const Real d = p * q - z.squaredNorm();
            VecR dd(b.m);  // gradient of d
            dd(0) = q;
            dd(1) = p;
            dd.tail(mz) = -2 * z;
            g = -dd / d;
            H = dd * dd.transpose() / (d * d);
            // minus (Hessian of d)/d
            H(0, 1) -= 1 / d;
            H(1, 0) -= 1 / d;
            for (int i = 0; i < mz; ++i) H(2 + i, 2 + i) += 2 / d;
            break;
        }
        case BlockKind::ExpCone: {
            const Real y = u(1), z = u(2);
            const Real lg = std::log(z / y);
            const Real rho = y * lg - u(0);
            VecR dr(3);
            dr << -1, lg - 1, y / z;
            g = -dr / rho;
            g(1) -= 1 / y;
            g(2) -= 1 / z;
            H = dr * dr.transpose() / (rho * rho);
            // minus (Hessian of rho)/rho
            H(1, 1) += (1 / y) / rho;
            H(1, 2) -= (1 / z) / rho;
            H(2, 1) -= (1 / z) / rho;
            H(2, 2) += (y / (z * z)) / rho;
            H(1, 1) += 1 / (y * y);
            H(2, 2) += 1 / (z * z);
            break;
        }
        default:
            break;
    }
}

struct View {
    const Compiled* C;
    bool with_tau = false;  // phase 1: extra trailing variable added to every cone
    int nvar() const { return C->n + (with_tau ? 1 : 0); }

    VecR block_arg(const CBlock& b, const VecR& x) const {
        VecR u = b.off;
        for (int j = 0; j < static_cast<int>(b.support.size()); ++j)
            u += b.J.col(j) * x(b.support[j]);
        if (with_tau) u += b.shift * x(C->n);
        return u;
    }

    bool interior(const VecR& x, Real margin = 0) const {
        for (const auto& b : C->cones)
            if (!(block_margin(b, block_arg(b, x)) > margin)) return false;
        return true;
    }

    // t * (minimized objective) + barrier; +inf outside the domain
    Real merit(const VecR& x, Real t) const {
        Real f = t * objective_min(x);
        for (const auto& b : C->cones) {
            const Real v = block_value(b, block_arg(b, x));
            if (!std::isfinite(static_cast<double>(v))) return std::numeric_limits<Real>::infinity();
            f += v;
        }
        return f;
    }

    Real objective_min(const VecR& x) const {
        if (with_tau) return x(C->n);  // phase 1 minimizes tau
        return -C->c.dot(x);
    }

    void assemble(const VecR& x, Real t, VecR& g, MatR& H) const {
        const int n = nvar();
        g.setZero(n);
        H.setZero(n, n);
        if (with_tau)
            g(C->n) = t;
        else
            g = -t * C->c;
        VecR gu;
        MatR Hu;
        for (const auto& b : C->cones) {
            const VecR u = block_arg(b, x);
            block_deriv(b, u, gu, Hu);
            const int s = static_cast<int>(b.support.size());
            // scatter J^T gu and J^T Hu J into the global system
            const VecR Jg = b.J.transpose() * gu;
            const MatR JH = b.J.transpose() * Hu;  // s x m
            for (int i = 0; i < s; ++i) {
                g(b.support[i]) += Jg(i);
                for (int j = 0; j < s; ++j) H(b.support[i], b.support[j]) += JH.row(i).dot(b.J.col(j));
            }
            if (with_tau) {
                const Real gt = b.shift.dot(gu);
                const VecR Hs = Hu * b.shift;
                g(C->n) += gt;
                H(C->n, C->n) += b.shift.dot(Hs);
                const VecR JHs = b.J.transpose() * Hs;
                for (int i = 0; i < s; ++i) {
                    H(b.support[i], C->n) += JHs(i);
                    H(C->n, b.support[i]) += JHs(i);
                }
            }
        }
    }
};

enum class CenterOutcome { Centered, EarlyStop, Stalled, Budget };

CenterOutcome center(const View& V, VecR& x, Real t, Real lam2_tol, int& budget, int& steps_used,
                     const std::function<bool(const VecR&)>& early_stop = nullptr) {
    const int n = V.nvar();
    VecR g(n);
    MatR H(n, n);
    while (budget > 0) {
        V.assemble(x, t, g, H);
        Real reg = 0;
        VecR d;
        for (int attempt = 0; attempt < 6; ++attempt) {
            MatR Hr = H;
            if (reg > 0) Hr.diagonal().array() += reg;
            Eigen::LDLT<MatR> ldlt(Hr);
            if (ldlt.info() == Eigen::Success) {
                d = ldlt.solve(-g);
                if (d.allFinite()) break;
            }
            d.resize(0);
            reg = reg == 0 ? Real(1e-22) * (Real(1) + H.diagonal().cwiseAbs().maxCoeff())
                           : reg * Real(1e4);
        }
        if (d.size() == 0) return CenterOutcome::Stalled;

        Real lam2 = -g.dot(d);
        if (lam2 < 0) {
            if (lam2 > -Real(1e-20) * (Real(1) + std::abs(g.dot(g)))) lam2 = 0;
            else return CenterOutcome::Stalled;
        }
        if (lam2 <= lam2_tol) return CenterOutcome::Centered;

        const Real f0 = V.merit(x, t);
        Real s = 1;
        int halvings = 0;
        while (halvings < 180) {
            const VecR xn = x + s * d;
            if (V.interior(xn) && V.merit(xn, t) <= f0 - Real(0.25) * s * lam2) break;
            s *= Real(0.5);
            ++halvings;
        }
        if (halvings >= 180) return CenterOutcome::Stalled;
        x += s * d;
        --budget;
        ++steps_used;
        if (early_stop && early_stop(x)) return CenterOutcome::EarlyStop;
    }
    return CenterOutcome::Budget;
}

}  // namespace

const char* to_string(ConicSolution::Status s) {
    switch (s) {
        case ConicSolution::Status::Optimal: return "optimal";
        case ConicSolution::Status::Infeasible: return "infeasible";
        case ConicSolution::Status::Unbounded: return "unbounded";
        case ConicSolution::Status::NumericalFailure: return "numerical-failure";
    }
    return "?";
}

ConicSolution solve_conic(const ConicProblem& p, const SolverOptions& opts,
                          const std::optional<Eigen::VectorXd>& warm) {
    const auto t_start = std::chrono::steady_clock::now();
    ConicSolution sol;
    auto finish = [&](ConicSolution::Status st, const std::string& msg) -> ConicSolution& {
        sol.status = st;
        sol.message = msg;
        sol.solve_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
        return sol;
    };

    p.validate();
    Compiled C = compile(p);
    if (!C.error.empty()) return finish(ConicSolution::Status::Infeasible, C.error);

    auto to_full = [&](const VecR& xr) {
        VecR xf = C.has_eq ? VecR(C.x0 + C.Z * xr) : xr;
        Eigen::VectorXd out(p.num_cols);
        for (int i = 0; i < p.num_cols; ++i) out(i) = static_cast<double>(xf(i));
        return out;
    };
    auto obj_of = [&](const VecR& xr) { return C.c.dot(xr) + C.obj_const; };

    int budget = opts.max_newton_steps;

    if (C.cones.empty()) {
        // purely affine problem: optimal iff the objective has no free direction
        VecR x = VecR::Zero(C.n);
        if (C.c.cwiseAbs().maxCoeff() > 1e-12 * (1 + C.c.size()))
            return finish(ConicSolution::Status::Unbounded, "no cones bound the objective");
        sol.primal = to_full(x);
        sol.objective = static_cast<double>(obj_of(x));
        sol.gap_bound = 0;
        return finish(ConicSolution::Status::Optimal, "affine");
    }

    // ---- phase 1: interiorization ----
    View V1{&C, true};
    VecR x1 = VecR::Zero(C.n + 1);
    if (warm && warm->size() == p.num_cols) {
        if (C.has_eq) {
            // project the warm point onto the equality manifold
            VecR wf(p.num_cols);
            for (int i = 0; i < p.num_cols; ++i) wf(i) = static_cast<Real>((*warm)(i));
            x1.head(C.n) = C.Z.transpose() * (wf - C.x0);  // Z has orthonormal-ish kernel columns
        } else {
            for (int i = 0; i < C.n; ++i) x1(i) = static_cast<Real>((*warm)(i));
        }
    }
    {
        Real tau = 1;
        bool ok = false;
        for (int i = 0; i < 160; ++i) {
            x1(C.n) = tau;
            if (V1.interior(x1, Real(0.5))) {
                ok = true;
                break;
            }
            tau *= 2;
        }
        if (!ok) return finish(ConicSolution::Status::NumericalFailure, "interiorization shift overflow");
    }

    const Real margin = static_cast<Real>(opts.interior_margin);
    auto deep_enough = [&](const VecR& x) { return x(C.n) < -margin && V1.interior(x); };

    bool phase1_done = deep_enough(x1);
    Real t = static_cast<Real>(opts.t_init);
    while (!phase1_done) {
        int used = 0;
        const auto out = center(V1, x1, t, Real(0.01), budget, used, deep_enough);
        if (out == CenterOutcome::EarlyStop) {
            phase1_done = true;
            break;
        }
        if (out == CenterOutcome::Centered) {
            if (deep_enough(x1)) {
                phase1_done = true;
                break;
            }
            const Real tau_lb = x1(C.n) - (C.nu + 1) / t;
            if (tau_lb > -margin) {
                if (tau_lb > Real(1e-9))
                    return finish(ConicSolution::Status::Infeasible, "interiorization lower bound positive");
                return finish(ConicSolution::Status::NumericalFailure,
                              "feasible set has no usable interior");
            }
            t *= static_cast<Real>(opts.t_mult);
        } else if (out == CenterOutcome::Stalled) {
            return finish(ConicSolution::Status::NumericalFailure, "interiorization stalled");
        } else {
            return finish(ConicSolution::Status::NumericalFailure, "newton budget exhausted (phase 1)");
        }
    }

    // ---- phase 2: central path on the real objective ----
    View V2{&C, false};
    VecR x = x1.head(C.n);
    if (!V2.interior(x))
        return finish(ConicSolution::Status::NumericalFailure, "interior point lost on handoff");

    const Real obj_scale_guard = Real(1e13) * (Real(1) + std::abs(obj_of(x)));
    t = static_cast<Real>(opts.t_init);
    Real best_gap = std::numeric_limits<Real>::infinity();
    while (true) {
        int used = 0;
        const auto out = center(V2, x, t, Real(0.01), budget, used);
        const Real gap = C.nu / t;
        if (out == CenterOutcome::Centered) best_gap = std::min(best_gap, gap * Real(1.1));
        if (std::abs(obj_of(x)) > obj_scale_guard)
            return finish(ConicSolution::Status::Unbounded, "objective diverged along the path");

        if (out == CenterOutcome::Centered && gap <= static_cast<Real>(opts.gap_tol)) {
            int used2 = 0;
            (void)center(V2, x, t, Real(1e-16), budget, used2);  // polish
            sol.primal = to_full(x);
            sol.objective = static_cast<double>(obj_of(x));
            sol.gap_bound = static_cast<double>(gap);
            sol.newton_steps = opts.max_newton_steps - budget;
            return finish(ConicSolution::Status::Optimal, "");
        }
        if (out == CenterOutcome::Stalled || out == CenterOutcome::Budget) {
            // accept an early stop only when the certificate already meets the
            // module contract; otherwise fail loudly
            const double cert = static_cast<double>(best_gap);
            if (std::isfinite(cert) && cert <= 1e-7 * (1.0 + std::abs(static_cast<double>(obj_of(x))))) {
                sol.primal = to_full(x);
                sol.objective = static_cast<double>(obj_of(x));
                sol.gap_bound = cert;
                sol.newton_steps = opts.max_newton_steps - budget;
                return finish(ConicSolution::Status::Optimal, "early stop within contract tolerance");
            }
            return finish(ConicSolution::Status::NumericalFailure,
                          out == CenterOutcome::Stalled ? "newton stalled" : "newton budget exhausted");
        }
        t *= static_cast<Real>(opts.t_mult);
    }
}

}  // namespace eecast::conic
