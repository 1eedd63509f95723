#include "verdict.hpp"

#include "errors.hpp"

namespace freespace {

std::string status_str(Status status) {
    switch (status) {
        case Status::Proven: return "proven";
        case Status::Refuted: return "refuted";
        case Status::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

bool evidence_relation_holds(const EvidenceItem& item) {
    if (item.op == "eq") return item.lhs == item.rhs;
    if (item.op == "lt") return item.lhs < item.rhs;
    if (item.op == "le") return item.lhs <= item.rhs;
    if (item.op == "gt") return item.lhs > item.rhs;
    if (item.op == "ge") return item.lhs >= item.rhs;
    fail(ErrorCode::Internal, "unknown evidence relation: " + item.op);
}

}  // namespace freespace
