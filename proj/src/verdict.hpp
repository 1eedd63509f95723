#pragma once

#include <optional>
#include <string>
#include <vector>

#include "free_element.hpp"
#include "rational.hpp"

namespace freespace {

enum class Status { Proven, Refuted, Inconclusive };

std::string status_str(Status status);

/// One machine-checkable inequality: the checker recomputes lhs and rhs from
/// the raw distances (and the f_xy formula where the kind calls for it) and
/// verifies both the stated relation and the stored values.
struct EvidenceItem {
    std::string kind;
    std::string witness;  // point label, "u|v" for molecules, "" for vacuous rows
    Rational lhs, rhs;
    std::string op;  // eq | lt | le | gt | ge
    std::optional<long> level;
    std::optional<Rational> eps;
    std::optional<Rational> delta;
};

struct Verdict {
    Status status = Status::Inconclusive;
    std::vector<EvidenceItem> evidence;
    std::optional<std::string> certificate;  // tail-certificate tag backing the tail claims
    std::optional<long> search_depth;        // recorded for Inconclusive verdicts
    std::string note;
};

struct ClassificationRow {
    Molecule molecule;
    Verdict extreme;
    Verdict exposed_by_fxy;
    Verdict denting;
    Verdict strongly_exposed;
    std::optional<bool> oracle_extreme;  // finite spaces within the oracle cap
};

bool evidence_relation_holds(const EvidenceItem& item);

}  // namespace freespace
