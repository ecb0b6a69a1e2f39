#include "csg/spec.hpp"

#include <sstream>

namespace csg {

std::optional<std::string> spec_violation(int n1, int n2, const MatrixM& rows) {
    if (n1 < 1) {
        return "n1 must be at least 1 (both classes nonempty)";
    }
    if (n2 < 1) {
        return "n2 must be at least 1 (both classes nonempty)";
    }
    if (rows.empty()) {
        return "matrix must have at least one row";
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].m1 < 0 || rows[i].m1 > n1) {
            std::ostringstream msg;
            msg << "row " << i + 1 << ": m_{i,1}=" << rows[i].m1
                << " outside [0, n1=" << n1 << "]";
            return msg.str();
        }
        if (rows[i].m2 < 0 || rows[i].m2 > n2) {
            std::ostringstream msg;
            msg << "row " << i + 1 << ": m_{i,2}=" << rows[i].m2
                << " outside [0, n2=" << n2 << "]";
            return msg.str();
        }
    }
    if (rows.size() == 1) {
        if (rows[0].m1 <= 0) {
            return "single-row matrix requires m_{1,1}>0";
        }
        if (rows[0].m2 >= n2) {
            return "single-row matrix requires m_{1,2}<n2";
        }
        return std::nullopt;
    }
    // Pairwise strictness is equivalent to consecutive strictness.
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].m1 <= rows[i + 1].m1) {
            std::ostringstream msg;
            msg << "rows " << i + 1 << "," << i + 2
                << ": first components must strictly decrease (m_{i,1}>m_{j,1});"
                   " rows are required in canonical order";
            return msg.str();
        }
        if (rows[i].m1 + rows[i].m2 >= rows[i + 1].m1 + rows[i + 1].m2) {
            std::ostringstream msg;
            msg << "rows " << i + 1 << "," << i + 2
                << ": row sums must strictly increase (m_{i,1}+m_{i,2}<m_{j,1}+m_{j,2})";
            return msg.str();
        }
    }
    return std::nullopt;
}

CompleteGameSpec validate_spec(int n1, int n2, MatrixM rows) {
    if (auto violation = spec_violation(n1, n2, rows)) {
        throw SpecError(*violation);
    }
    return CompleteGameSpec{n1, n2, std::move(rows)};
}

std::ostream& operator<<(std::ostream& os, const CompleteGameSpec& spec) {
    os << '(' << spec.n1 << ',' << spec.n2 << ";";
    for (std::size_t i = 0; i < spec.rows.size(); ++i) {
        os << (i ? " " : "") << spec.rows[i];
    }
    return os << ')';
}

} // namespace csg
