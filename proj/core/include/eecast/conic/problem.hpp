#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

namespace eecast::conic {

enum class BlockKind {
    LinearEq,    // rows = {e},       e == 0
    LinearIneq,  // rows = {e},       e >= 0
    RotatedSoc,  // rows = {p,q,z..}, ||z||^2 <= p*q with p,q >= 0
    ExpCone,     // rows = {x,y,z},   y*exp(x/y) <= z with y > 0
};

/// Semantic role of a constraint block inside the scaled convex subproblem.
/// The structural audit groups the block list by this tag.
enum class ConstraintRole {
    DenominatorBudget,  // scaled power budget <= 1
    AntennaCoupling,    // ||w_hat_bar||^2 <= v_bar * t
    AntennaPowerCap,    // v_bar <= phi * P_max
    SelectionBox,       // 0 <= a_bar <= phi
    SinrSurrogate,      // gamma_bar <= scaled affine SINR lower bound
    QosFloor,           // gamma_bar >= phi * target
    InterferenceCone,   // sigma^2 phi^2 + sum |h w_bar|^2 <= phi * beta_bar
    RateHypograph,      // r_bar <= phi * log(1 + gamma_bar / phi)
    CardinalityCut,     // sum_i a_bar >= phi * X_b
    VariableBound,      // compactness bounds (never active at a sane optimum)
    SlackPenalty,       // feasibility-slack sign and size constraints
    Generic,            // free-form problems (tests, external use)
};

const char* to_string(ConstraintRole role);
const char* to_string(BlockKind kind);

/// Sparse affine expression sum_i coeff_i * x_{col_i} + offset.
struct LinExpr {
    std::vector<std::pair<int, double>> terms;
    double offset = 0.0;

    LinExpr() = default;
    explicit LinExpr(double constant) : offset(constant) {}

    LinExpr& add(int col, double coeff) {
        if (coeff != 0.0) terms.emplace_back(col, coeff);
        return *this;
    }
    double eval(const Eigen::VectorXd& x) const {
        double v = offset;
        for (const auto& [c, w] : terms) v += w * x(c);
        return v;
    }
};

struct Block {
    BlockKind kind;
    ConstraintRole role = ConstraintRole::Generic;
    std::vector<LinExpr> rows;
};

/// Standard-form conic program over real columns: maximize a linear
/// objective subject to affine expressions lying in linear, rotated
/// second-order, and exponential cones. Column names tie semantic variables
/// to indices for recovery and for the debug dump.
struct ConicProblem {
    int num_cols = 0;
    LinExpr objective;  // maximized
    std::vector<Block> blocks;
    std::vector<std::string> column_names;

    int add_column(const std::string& name) {
        column_names.push_back(name);
        return num_cols++;
    }
    int column(const std::string& name) const;  // -1 when absent

    Block& add_block(BlockKind kind, ConstraintRole role) {
        blocks.push_back({kind, role, {}});
        return blocks.back();
    }

    /// Throws std::invalid_argument on malformed blocks or column indices.
    void validate() const;

    /// Structural audit: number of blocks per constraint role.
    std::map<ConstraintRole, int> block_census() const;

    /// Self-describing text dump (column map plus every block row) for
    /// cross-checking against external modeling tools.
    std::string dump() const;
};

}  // namespace eecast::conic
