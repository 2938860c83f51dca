#include "eecast/conic/problem.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eecast::conic {

const char* to_string(ConstraintRole role) {
    switch (role) {
        case ConstraintRole::DenominatorBudget: return "denominator-budget";
        case ConstraintRole::AntennaCoupling: return "antenna-coupling";
        case ConstraintRole::AntennaPowerCap: return "antenna-power-cap";
        case ConstraintRole::SelectionBox: return "selection-box";
        case ConstraintRole::SinrSurrogate: return "sinr-surrogate";
        case ConstraintRole::QosFloor: return "qos-floor";
        case ConstraintRole::InterferenceCone: return "interference-cone";
        case ConstraintRole::RateHypograph: return "rate-hypograph";
        case ConstraintRole::CardinalityCut: return "cardinality-cut";
        case ConstraintRole::VariableBound: return "variable-bound";
        case ConstraintRole::SlackPenalty: return "slack-penalty";
        case ConstraintRole::Generic: return "generic";
    }
    return "?";
}

const char* to_string(BlockKind kind) {
    switch (kind) {
        case BlockKind::LinearEq: return "lin-eq";
        case BlockKind::LinearIneq: return "lin-ineq";
        case BlockKind::RotatedSoc: return "rsoc";
        case BlockKind::ExpCone: return "exp";
    }
    return "?";
}

int ConicProblem::column(const std::string& name) const {
    const auto it = std::find(column_names.begin(), column_names.end(), name);
    return it == column_names.end() ? -1 : static_cast<int>(it - column_names.begin());
}

void ConicProblem::validate() const {
    auto check_expr = [this](const LinExpr& e) {
        for (const auto& [c, w] : e.terms) {
            if (c < 0 || c >= num_cols) throw std::invalid_argument("ConicProblem: column out of range");
            if (!std::isfinite(w)) throw std::invalid_argument("ConicProblem: non-finite coefficient");
        }
        if (!std::isfinite(e.offset)) throw std::invalid_argument("ConicProblem: non-finite offset");
    };
    check_expr(objective);
    for (const auto& blk : blocks) {
        switch (blk.kind) {
            case BlockKind::LinearEq:
            case BlockKind::LinearIneq:
                if (blk.rows.size() != 1) throw std::invalid_argument("linear block needs 1 row");
                break;
            case BlockKind::RotatedSoc:
                if (blk.rows.size() < 2) throw std::invalid_argument("rsoc block needs >= 2 rows");
                break;
            case BlockKind::ExpCone:
                if (blk.rows.size() != 3) throw std::invalid_argument("exp block needs 3 rows");
                break;
        }
        for (const auto& row : blk.rows) check_expr(row);
    }
}

std::map<ConstraintRole, int> ConicProblem::block_census() const {
    std::map<ConstraintRole, int> census;
    for (const auto& blk : blocks) census[blk.role]++;
    return census;
}

std::string ConicProblem::dump() const {
    std::ostringstream os;
    os.precision(17);
    auto expr = [&os](const LinExpr& e) {
        if (e.offset != 0.0) os << e.offset;
        bool first = e.offset == 0.0;
        for (const auto& [c, w] : e.terms) {
            if (!first || w < 0) os << (w < 0 ? " - " : " + ");
            os << std::abs(w) << "*x" << c;
            first = false;
        }
        if (first) os << "0";
        os << "\n";
    };
    os << "eecast-conic-problem v1\n";
    os << "columns " << num_cols << "\n";
    for (int c = 0; c < num_cols; ++c) os << "  x" << c << " " << column_names[c] << "\n";
    os << "maximize ";
    expr(objective);
    os << "blocks " << blocks.size() << "\n";
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        const auto& blk = blocks[j];
        os << "block " << j << " kind=" << to_string(blk.kind) << " role=" << to_string(blk.role)
           << " rows=" << blk.rows.size() << "\n";
        for (const auto& row : blk.rows) {
            os << "  ";
            expr(row);
        }
    }
    return os.str();
}

}  // namespace eecast::conic
