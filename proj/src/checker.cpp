#include "report.hpp"

#include <optional>
#include <set>

#include "errors.hpp"

namespace freespace {

namespace {

struct CheckContext {
    const MetricSpace& space;
    CheckResult& result;

    void failure(const std::string& message) {
        result.passed = false;
        result.failures.push_back(message);
    }
    void ok() { ++result.checked_items; }
    void skip() { ++result.skipped_items; }
};

Rational need_rational(const Json& doc, const std::string& key, const std::string& where) {
    if (!doc.contains(key)) fail(ErrorCode::ParseError, where + " misses " + key);
    auto parsed = parse_rational(doc.at(key).get<std::string>());
    if (!parsed) fail(ErrorCode::ParseError, where + " has an unreadable " + key);
    return *parsed;
}

int need_point(const MetricSpace& space, const std::string& label, const std::string& where) {
    auto index = space.index_of(label);
    if (!index) fail(ErrorCode::ParseError, where + " names an unknown point " + label);
    return *index;
}

bool relation_holds(const std::string& op, const Rational& lhs, const Rational& rhs) {
    EvidenceItem item;
    item.op = op;
    item.lhs = lhs;
    item.rhs = rhs;
    return evidence_relation_holds(item);
}

// Re-derives lhs/rhs of one evidence row from the raw distances and compares
// them to the stored values before testing the relation.
void check_evidence_item(CheckContext& ctx, int x, int y, const Json& item, const std::string& where) {
    const MetricSpace& space = ctx.space;
    const std::string kind = item.at("kind").get<std::string>();
    const std::string op = item.at("op").get<std::string>();
    const Rational lhs = need_rational(item, "lhs", where);
    const Rational rhs = need_rational(item, "rhs", where);
    const std::string witness = item.value("witness", "");
    const Rational dxy = space.distance(x, y);

    auto confirm = [&](const Rational& expected_lhs, const Rational& expected_rhs) {
        if (lhs != expected_lhs || rhs != expected_rhs) {
            ctx.failure(where + ": stored values disagree with the recomputation");
            return;
        }
        if (!relation_holds(op, lhs, rhs)) {
            ctx.failure(where + ": relation " + op + " does not hold");
            return;
        }
        ctx.ok();
    };

    if (kind == "segment_excess" || kind == "segment_member" || kind == "denting_witness") {
        int z = need_point(space, witness, where);
        confirm(space.distance(x, z) + space.distance(z, y), dxy);
        if (kind == "denting_witness" && item.contains("eps")) {
            Rational eps = need_rational(item, "eps", where);
            if (min_distance(space, x, y, z) < eps)
                ctx.failure(where + ": witness closer than the claimed eps");
        }
        return;
    }
    if (kind == "z_witness" || kind == "z_fail") {
        int z = need_point(space, witness, where);
        long level = item.at("level").get<long>();
        confirm(space.distance(x, z) + space.distance(y, z),
                dxy + min_distance(space, x, y, z) / level);
        if (kind == "z_fail") {
            // the refutation claims no witness anywhere in the truncation
            for (int other = 0; other < space.point_count(); ++other) {
                if (other == x || other == y) continue;
                if (space.distance(x, other) + space.distance(y, other) <=
                    dxy + min_distance(space, x, y, other) / level) {
                    ctx.failure(where + ": " + space.label(other) + " witnesses level " +
                                std::to_string(level));
                    return;
                }
            }
        }
        return;
    }
    if (kind == "denting_delta" || kind == "denting_delta_tail" || kind == "denting_vacuous") {
        const Rational eps = need_rational(item, "eps", where);
        std::optional<Rational> truncation_min;
        for (int z = 0; z < space.point_count(); ++z) {
            if (z == x || z == y) continue;
            if (min_distance(space, x, y, z) < eps) continue;
            Rational sum = space.distance(x, z) + space.distance(z, y);
            if (!truncation_min || sum < *truncation_min) truncation_min = sum;
        }
        if (kind == "denting_vacuous") {
            if (truncation_min) ctx.failure(where + ": qualifying points exist, row is not vacuous");
            else ctx.ok();
            return;
        }
        const Rational delta = need_rational(item, "delta", where);
        if (delta != 1 - rhs / lhs) {
            ctx.failure(where + ": delta does not match 1 - d(x,y)/min_sum");
            return;
        }
        if (kind == "denting_delta") {
            int z = need_point(space, witness, where);
            if (min_distance(space, x, y, z) < eps) {
                ctx.failure(where + ": delta witness closer than eps");
                return;
            }
            if (!truncation_min || *truncation_min != space.distance(x, z) + space.distance(z, y)) {
                ctx.failure(where + ": delta witness does not attain the truncation minimum");
                return;
            }
            confirm(*truncation_min, dxy);
        } else {
            // the tail bound decided the row: rebuild the certificate and recompute
            auto cert = tail_certificate(space, x, y);
            if (!cert) {
                ctx.failure(where + ": tail row on a space without certificates");
                return;
            }
            auto bound = cert->excess_lower_bound(eps);
            if (!bound) {
                ctx.failure(where + ": certificate reports no qualifying tail at this eps");
                return;
            }
            if (truncation_min && *truncation_min < dxy + *bound) {
                ctx.failure(where + ": a truncation point beats the claimed tail minimum");
                return;
            }
            confirm(dxy + *bound, dxy);
        }
        return;
    }
    if (kind == "exposure_unique" || kind == "exposure_tie") {
        LipFunction f = build_f_xy(space, x, y);
        auto split = witness.find('|');
        if (split == std::string::npos) {
            ctx.failure(where + ": exposure witness must name a molecule u|v");
            return;
        }
        int u = need_point(space, witness.substr(0, split), where);
        int v = need_point(space, witness.substr(split + 1), where);
        if (kind == "exposure_tie") {
            confirm(pair_molecule(f, u, v), Rational(1));
            return;
        }
        // unique maximizer: the stored runner-up must match a full rescan
        std::optional<Rational> best_other;
        int ties = 0;
        for (int a = 0; a < space.point_count(); ++a)
            for (int b = 0; b < space.point_count(); ++b) {
                if (a == b) continue;
                Rational value = pair_molecule(f, a, b);
                if (value == 1) {
                    if (!(a == x && b == y)) ++ties;
                } else if (!best_other || value > *best_other) {
                    best_other = value;
                }
            }
        if (ties > 0) {
            ctx.failure(where + ": other molecules reach pairing 1, uniqueness fails");
            return;
        }
        if (!best_other || *best_other != pair_molecule(f, u, v)) {
            ctx.failure(where + ": stored runner-up pairing is not the scan maximum");
            return;
        }
        confirm(pair_molecule(f, u, v), Rational(1));
        return;
    }
    ctx.failure(where + ": unknown evidence kind " + kind);
}

void check_verdict(CheckContext& ctx, int x, int y, const Json& verdict, const std::string& where) {
    if (!verdict.contains("evidence")) return;
    // rows backed by a certificate: rebuilding it re-validates the closed
    // forms against the truncation
    if (verdict.contains("certificate")) {
        try {
            auto cert = tail_certificate(ctx.space, x, y);
            if (!cert) ctx.failure(where + ": certificate cited on a non-gallery space");
            else ctx.ok();
        } catch (const Error& e) {
            ctx.failure(where + ": certificate rebuild failed: " + e.what());
        }
    }
    std::size_t index = 0;
    for (const Json& item : verdict.at("evidence"))
        check_evidence_item(ctx, x, y, item, where + "/evidence[" + std::to_string(index++) + "]");
}

void check_classification(CheckContext& ctx, const Json& report) {
    auto rank = [](const std::string& status) {
        return status == "proven" ? 2 : status == "inconclusive" ? 1 : 0;
    };
    std::size_t row_index = 0;
    for (const Json& row : report.at("rows")) {
        const std::string where = "rows[" + std::to_string(row_index++) + "]";
        int x = need_point(ctx.space, row.at("molecule").at("x").get<std::string>(), where);
        int y = need_point(ctx.space, row.at("molecule").at("y").get<std::string>(), where);
        for (const char* column : {"extreme", "denting", "strongly_exposed", "exposed_by_fxy"})
            if (row.contains(column)) check_verdict(ctx, x, y, row.at(column), where + "/" + column);
        // chain: strongly_exposed => denting => extreme under the proven order
        int se = rank(row.at("strongly_exposed").at("status").get<std::string>());
        int de = rank(row.at("denting").at("status").get<std::string>());
        int ex = rank(row.at("extreme").at("status").get<std::string>());
        if (se > de || de > ex) ctx.failure(where + ": implication chain violated");
        else ctx.ok();
        if (row.contains("oracle_extreme")) {
            bool oracle = row.at("oracle_extreme").get<bool>();
            bool proven = row.at("extreme").at("status").get<std::string>() == "proven";
            if (oracle != proven) ctx.failure(where + ": oracle column disagrees with the extreme verdict");
            else ctx.ok();
        }
    }
}

void check_segment(CheckContext& ctx, const Json& report) {
    int x = need_point(ctx.space, report.at("pair").at("x").get<std::string>(), "pair");
    int y = need_point(ctx.space, report.at("pair").at("y").get<std::string>(), "pair");
    std::vector<std::string> expected;
    for (int z : metric_segment(ctx.space, x, y)) expected.push_back(ctx.space.label(z));
    std::vector<std::string> stored = report.at("segment").get<std::vector<std::string>>();
    if (stored != expected) ctx.failure("segment members disagree with the recomputation");
    else ctx.ok();
}

void check_validation(CheckContext& ctx, const Json& report) {
    std::vector<std::string> expected;
    for (const Violation& v : validate(ctx.space)) expected.push_back(v.describe(ctx.space));
    std::vector<std::string> stored = report.at("violations").get<std::vector<std::string>>();
    if (stored != expected) ctx.failure("violations disagree with the recomputation");
    else ctx.ok();
    if (report.at("valid").get<bool>() != expected.empty()) ctx.failure("valid flag is wrong");
    else ctx.ok();
}

void check_norm(CheckContext& ctx, const Json& report) {
    FreeElement mu = element_from_json(ctx.space, report.at("element"));
    std::optional<Rational> dual_value, primal_value;
    if (report.contains("dual")) {
        const Json& dual = report.at("dual");
        dual_value = need_rational(dual, "value", "dual");
        LipFunction witness = function_from_json(ctx.space, dual.at("witness"));
        if (ctx.space.point_count() >= 2 && lip_norm(witness).norm > 1)
            ctx.failure("dual witness is not 1-Lipschitz");
        else if (pair(witness, mu) != *dual_value)
            ctx.failure("dual witness does not attain the claimed value");
        else
            ctx.ok();
    }
    if (report.contains("primal")) {
        const Json& primal = report.at("primal");
        primal_value = need_rational(primal, "value", "primal");
        std::vector<Rational> divergence(static_cast<std::size_t>(ctx.space.point_count()), Rational(0));
        Rational cost = 0;
        for (const Json& arc : primal.at("plan")) {
            int from = need_point(ctx.space, arc.at("from").get<std::string>(), "plan");
            int to = need_point(ctx.space, arc.at("to").get<std::string>(), "plan");
            Rational amount = need_rational(arc, "amount", "plan");
            if (amount <= 0) {
                ctx.failure("plan carries a non-positive arc");
                return;
            }
            divergence[static_cast<std::size_t>(from)] += amount;
            divergence[static_cast<std::size_t>(to)] -= amount;
            cost += amount * ctx.space.distance(from, to);
        }
        bool feasible = true;
        for (int i = 0; i < ctx.space.point_count(); ++i)
            feasible &= divergence[static_cast<std::size_t>(i)] == mu.coeff(i);
        if (!feasible) ctx.failure("plan divergence does not match the element");
        else if (cost != *primal_value) ctx.failure("plan cost does not match the claimed value");
        else ctx.ok();
    }
    if (dual_value && primal_value) {
        if (*dual_value != *primal_value) ctx.failure("dual and primal values disagree");
        else ctx.ok();
    }
}

void check_slice(CheckContext& ctx, const Json& report) {
    LipFunction f = function_from_json(ctx.space, report.at("function"));
    Rational alpha = need_rational(report, "alpha", "slice");
    const Rational threshold = 1 - alpha;
    std::set<std::pair<int, int>> stored;
    for (const Json& m : report.at("molecules"))
        stored.insert({need_point(ctx.space, m.at("x").get<std::string>(), "molecules"),
                       need_point(ctx.space, m.at("y").get<std::string>(), "molecules")});
    bool good = true;
    for (int u = 0; u < ctx.space.point_count() && good; ++u)
        for (int v = 0; v < ctx.space.point_count() && good; ++v) {
            if (u == v) continue;
            bool in = pair_molecule(f, u, v) > threshold;
            if (in != (stored.count({u, v}) > 0)) good = false;
        }
    if (!good) ctx.failure("slice membership disagrees with the recomputation");
    else ctx.ok();
    ctx.skip();  // the diameter claim would need the transport solver again
}

void check_attainment(CheckContext& ctx, const Json& report) {
    LipFunction f = function_from_json(ctx.space, report.at("function"));
    Rational claimed = need_rational(report, "lip_norm", "attainment");
    if (lip_norm(f).norm != claimed) {
        ctx.failure("lip_norm disagrees with the recomputation");
        return;
    }
    ctx.ok();
    for (const Json& p : report.at("attaining_pairs")) {
        int u = need_point(ctx.space, p.at("x").get<std::string>(), "attaining_pairs");
        int v = need_point(ctx.space, p.at("y").get<std::string>(), "attaining_pairs");
        if (abs(f.value(u) - f.value(v)) != claimed * ctx.space.distance(u, v))
            ctx.failure("attaining pair does not attain the norm");
        else
            ctx.ok();
    }
}

void check_attainment_random(CheckContext& ctx, const Json& report) {
    for (const Json& row : report.at("rows")) {
        LipFunction f = function_from_json(ctx.space, row.at("function"));
        Rational norm = need_rational(row, "lip_norm", "rows");
        if (lip_norm(f).norm != norm) {
            ctx.failure("sample lip_norm disagrees with the recomputation");
            continue;
        }
        int u = need_point(ctx.space, row.at("vertex").at("x").get<std::string>(), "vertex");
        int v = need_point(ctx.space, row.at("vertex").at("y").get<std::string>(), "vertex");
        if (abs(pair_molecule(f, u, v)) != norm)
            ctx.failure("sample vertex molecule does not attain the functional norm");
        else
            ctx.ok();
    }
    ctx.skip();  // vertex extremality itself would need the oracle again
}

}  // namespace

CheckResult check_report(const Json& report) {
    CheckResult result;
    if (!report.is_object() || !report.contains("kind") || !report.contains("space"))
        fail(ErrorCode::ParseError, "report misses kind or space");
    const std::string kind = report.at("kind").get<std::string>();
    // validation reports legitimately embed broken spaces
    MetricSpace space = kind == "validation" ? space_from_json_unchecked(report.at("space"))
                                             : space_from_json(report.at("space"));
    CheckContext ctx{space, result};
    if (kind == "classification") check_classification(ctx, report);
    else if (kind == "segment") check_segment(ctx, report);
    else if (kind == "validation") check_validation(ctx, report);
    else if (kind == "norm") check_norm(ctx, report);
    else if (kind == "slice") check_slice(ctx, report);
    else if (kind == "attainment") check_attainment(ctx, report);
    else if (kind == "attainment_random") check_attainment_random(ctx, report);
    else if (kind == "oracle") result.skipped_items += 1;  // vertex list needs the LP to re-verify
    else fail(ErrorCode::ParseError, "cannot check reports of kind " + kind);
    return result;
}

Json check_result_to_json(const CheckResult& result) {
    Json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["kind"] = "check";
    doc["passed"] = result.passed;
    doc["checked_items"] = result.checked_items;
    doc["skipped_items"] = result.skipped_items;
    doc["failures"] = result.failures;
    return doc;
}

}  // namespace freespace
