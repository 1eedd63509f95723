#include "report.hpp"

#include <algorithm>

#include "errors.hpp"

namespace freespace {

namespace {

Rational parse_rational_json(const Json& value, const std::string& where) {
    std::optional<Rational> parsed;
    if (value.is_string()) {
        parsed = parse_rational(value.get<std::string>());
    } else if (value.is_number_integer()) {
        parsed = Rational(static_cast<long>(value.get<std::int64_t>()));
    } else if (value.is_number_unsigned()) {
        parsed = Rational(static_cast<unsigned long>(value.get<std::uint64_t>()));
    } else if (value.is_number_float()) {
        parsed = rational_from_double_decimal(value.get<double>());
    }
    if (!parsed) fail(ErrorCode::ParseError, "cannot read a rational at " + where);
    return *parsed;
}

}  // namespace

Json space_to_json(const MetricSpace& space) {
    Json doc;
    doc["kind"] = space.is_gallery() ? "gallery" : "finite";
    doc["points"] = space.labels();
    doc["base"] = space.label(0);
    Json matrix = Json::array();
    for (int i = 0; i < space.point_count(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < space.point_count(); ++j) row.push_back(rational_str(space.distance(i, j)));
        matrix.push_back(std::move(row));
    }
    doc["d"] = std::move(matrix);
    if (space.is_gallery())
        doc["gallery"] = Json{{"name", space.gallery()->name}, {"N", space.gallery()->depth}};
    if (!space.exact_construction()) doc["arithmetic"] = "float";
    return doc;
}

MetricSpace space_from_json_unchecked(const Json& doc) {
    if (!doc.is_object()) fail(ErrorCode::ParseError, "space document must be a JSON object");
    const std::string kind = doc.value("kind", "finite");
    if (kind == "gallery" || doc.contains("gallery")) {
        if (!doc.contains("gallery")) fail(ErrorCode::ParseError, "gallery space needs a gallery stanza");
        const Json& g = doc.at("gallery");
        if (!g.contains("name") || !g.contains("N"))
            fail(ErrorCode::ParseError, "gallery stanza needs name and N");
        MetricSpace rebuilt = make_gallery(g.at("name").get<std::string>(), g.at("N").get<int>());
        if (doc.contains("d")) {
            // the explicit matrix must equal the closed form on the truncation
            const Json& matrix = doc.at("d");
            if (matrix.size() != static_cast<std::size_t>(rebuilt.point_count()))
                fail(ErrorCode::ParseError, "gallery matrix size disagrees with N");
            for (int i = 0; i < rebuilt.point_count(); ++i)
                for (int j = 0; j < rebuilt.point_count(); ++j) {
                    Rational value = parse_rational_json(matrix.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)),
                                                         "d[" + std::to_string(i) + "][" + std::to_string(j) + "]");
                    if (value != rebuilt.distance(i, j))
                        fail(ErrorCode::ParseError, "gallery matrix disagrees with the closed-form distance at (" +
                                                        std::to_string(i) + "," + std::to_string(j) + ")");
                }
        }
        return rebuilt;
    }
    if (!doc.contains("points") || !doc.contains("d"))
        fail(ErrorCode::ParseError, "space document needs points and d");
    std::vector<std::string> labels = doc.at("points").get<std::vector<std::string>>();
    if (doc.contains("base")) {
        const std::string base = doc.at("base").get<std::string>();
        if (labels.empty() || labels.front() != base)
            fail(ErrorCode::ParseError, "the base point must be listed first");
    }
    const Json& matrix = doc.at("d");
    if (matrix.size() != labels.size()) fail(ErrorCode::ParseError, "matrix rows do not match the point count");
    std::vector<std::vector<Rational>> dist;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const Json& row = matrix.at(i);
        if (row.size() != labels.size()) fail(ErrorCode::ParseError, "matrix is not square");
        std::vector<Rational> parsed_row;
        for (std::size_t j = 0; j < labels.size(); ++j)
            parsed_row.push_back(parse_rational_json(row.at(j), "d[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
        dist.push_back(std::move(parsed_row));
    }
    return MetricSpace(std::move(labels), std::move(dist));
}

MetricSpace space_from_json(const Json& doc) {
    MetricSpace space = space_from_json_unchecked(doc);
    for (int i = 0; i < space.point_count(); ++i)
        for (int j = i + 1; j < space.point_count(); ++j)
            if (space.distance(i, j) != space.distance(j, i))
                fail(ErrorCode::ParseError, "asymmetric distance matrix at (" + space.label(i) + "," + space.label(j) + ")");
    require_valid(space);
    if (doc.is_object() && doc.value("arithmetic", "exact") == std::string("float")) {
        MetricSpace marked = space;
        marked.mark_inexact();
        return marked;
    }
    return space;
}

Json function_to_json(const LipFunction& f) {
    Json doc;
    for (int i = 0; i < f.point_count(); ++i) doc[f.space().label(i)] = rational_str(f.value(i));
    return doc;
}

LipFunction function_from_json(const MetricSpace& space, const Json& doc) {
    if (!doc.is_object()) fail(ErrorCode::ParseError, "function document must be a JSON map label -> rational");
    std::vector<Rational> values(static_cast<std::size_t>(space.point_count()), Rational(0));
    std::vector<bool> present(static_cast<std::size_t>(space.point_count()), false);
    for (const auto& [label, value] : doc.items()) {
        auto index = space.index_of(label);
        if (!index) fail(ErrorCode::ParseError, "function names an unknown point: " + label);
        values[static_cast<std::size_t>(*index)] = parse_rational_json(value, label);
        present[static_cast<std::size_t>(*index)] = true;
    }
    if (present[0] && values[0] != 0)
        fail(ErrorCode::ParseError, "the function must vanish at the base point");
    for (int i = 1; i < space.point_count(); ++i)
        if (!present[static_cast<std::size_t>(i)])
            fail(ErrorCode::ParseError, "function misses the point " + space.label(i));
    return LipFunction(space, std::move(values));
}

Json element_to_json(const FreeElement& mu) {
    Json coeffs;
    coeffs[mu.space().label(0)] = rational_str(mu.base_coefficient());
    for (const auto& [index, value] : mu.coeffs()) coeffs[mu.space().label(index)] = rational_str(value);
    return Json{{"coeffs", std::move(coeffs)}};
}

FreeElement element_from_json(const MetricSpace& space, const Json& doc) {
    if (!doc.is_object() || !doc.contains("coeffs"))
        fail(ErrorCode::ParseError, "element document needs a coeffs map");
    std::map<int, Rational> coeffs;
    for (const auto& [label, value] : doc.at("coeffs").items()) {
        auto index = space.index_of(label);
        if (!index) fail(ErrorCode::ParseError, "element names an unknown point: " + label);
        if (*index == 0) continue;  // the base coefficient is recomputed from the zero-sum form
        coeffs[*index] = parse_rational_json(value, label);
    }
    return FreeElement(space, std::move(coeffs));
}

// ---- reports -------------------------------------------------------------------

Json report_envelope(const MetricSpace& space, const std::string& kind) {
    Json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["arithmetic"] = space.exact_construction() ? "exact" : "float";
    doc["kind"] = kind;
    doc["space"] = space_to_json(space);
    return doc;
}

Json verdict_to_json(const Verdict& verdict) {
    Json doc;
    doc["status"] = status_str(verdict.status);
    Json evidence = Json::array();
    for (const EvidenceItem& item : verdict.evidence) {
        Json row;
        row["kind"] = item.kind;
        row["witness"] = item.witness;
        row["lhs"] = rational_str(item.lhs);
        row["rhs"] = rational_str(item.rhs);
        row["op"] = item.op;
        if (item.level) row["level"] = *item.level;
        if (item.eps) row["eps"] = rational_str(*item.eps);
        if (item.delta) row["delta"] = rational_str(*item.delta);
        evidence.push_back(std::move(row));
    }
    doc["evidence"] = std::move(evidence);
    if (verdict.certificate) doc["certificate"] = *verdict.certificate;
    if (verdict.search_depth) doc["search_depth"] = *verdict.search_depth;
    if (!verdict.note.empty()) doc["note"] = verdict.note;
    return doc;
}

Json classification_row_to_json(const MetricSpace& space, const ClassificationRow& row) {
    Json doc;
    doc["molecule"] = Json{{"x", space.label(row.molecule.x)}, {"y", space.label(row.molecule.y)}};
    doc["extreme"] = verdict_to_json(row.extreme);
    doc["exposed_by_fxy"] = verdict_to_json(row.exposed_by_fxy);
    doc["denting"] = verdict_to_json(row.denting);
    doc["strongly_exposed"] = verdict_to_json(row.strongly_exposed);
    if (row.oracle_extreme) doc["oracle_extreme"] = *row.oracle_extreme;
    return doc;
}

Json classification_report(const MetricSpace& space, const std::vector<ClassificationRow>& rows,
                           const ClassifyOptions& options) {
    Json doc = report_envelope(space, "classification");
    doc["depth"] = options.depth;
    Json grid = Json::array();
    for (const Rational& eps : options.eps_grid) grid.push_back(rational_str(eps));
    doc["eps_grid"] = std::move(grid);
    Json out = Json::array();
    for (const ClassificationRow& row : rows) out.push_back(classification_row_to_json(space, row));
    doc["rows"] = std::move(out);
    return doc;
}

Json validation_report(const MetricSpace& space, const std::vector<Violation>& violations) {
    Json doc = report_envelope(space, "validation");
    doc["valid"] = violations.empty();
    Json rows = Json::array();
    for (const Violation& v : violations) rows.push_back(v.describe(space));
    doc["violations"] = std::move(rows);
    return doc;
}

Json segment_report(const MetricSpace& space, int x, int y) {
    Json doc = report_envelope(space, "segment");
    doc["pair"] = Json{{"x", space.label(x)}, {"y", space.label(y)}};
    Json members = Json::array();
    for (int z : metric_segment(space, x, y)) members.push_back(space.label(z));
    doc["segment"] = std::move(members);
    doc["trivial"] = metric_segment(space, x, y).size() == 2;
    return doc;
}

Json norm_report(const MetricSpace& space, const FreeElement& mu, const std::string& method) {
    Json doc = report_envelope(space, "norm");
    doc["element"] = element_to_json(mu);
    doc["method"] = method;
    std::optional<Rational> dual_value, primal_value;
    if (method == "dual" || method == "both") {
        DualNorm dual = kr_norm_dual(mu);
        dual_value = dual.value;
        doc["dual"] = Json{{"value", rational_str(dual.value)}, {"witness", function_to_json(dual.witness)}};
    }
    if (method == "primal" || method == "both") {
        PrimalNorm primal = kr_norm_primal(mu);
        primal_value = primal.value;
        Json plan = Json::array();
        for (const FlowArc& arc : primal.plan.arcs)
            plan.push_back(Json{{"from", space.label(arc.from)},
                                {"to", space.label(arc.to)},
                                {"amount", rational_str(arc.amount)}});
        doc["primal"] = Json{{"value", rational_str(primal.value)}, {"plan", std::move(plan)}};
    }
    if (dual_value && primal_value) {
        if (*dual_value != *primal_value)
            fail(ErrorCode::Internal, "strong duality violated: dual != primal");
        doc["agree"] = true;
    }
    if (dual_value) doc["value"] = rational_str(*dual_value);
    else if (primal_value) doc["value"] = rational_str(*primal_value);
    return doc;
}

Json oracle_report(const MetricSpace& space, const std::vector<Molecule>& vertices) {
    Json doc = report_envelope(space, "oracle");
    Json rows = Json::array();
    for (const Molecule& m : vertices)
        rows.push_back(Json{{"x", space.label(m.x)}, {"y", space.label(m.y)}});
    doc["vertices"] = std::move(rows);
    doc["molecule_count"] = space.point_count() * (space.point_count() - 1);
    return doc;
}

Json slice_report(const MetricSpace& space, const LipFunction& f, const Rational& alpha,
                  bool restrict_to_molecules) {
    Json doc = report_envelope(space, "slice");
    doc["function"] = function_to_json(f);
    doc["alpha"] = rational_str(alpha);
    doc["restricted_to_molecules"] = restrict_to_molecules;
    Json rows = Json::array();
    for (const Molecule& m : slice_molecules(f, alpha))
        rows.push_back(Json{{"x", space.label(m.x)}, {"y", space.label(m.y)}});
    doc["molecules"] = std::move(rows);
    doc["diameter"] = rational_str(slice_diameter(f, alpha, restrict_to_molecules));
    return doc;
}

Json attainment_report(const MetricSpace& space, const LipFunction& f) {
    Json doc = report_envelope(space, "attainment");
    doc["function"] = function_to_json(f);
    AttainmentReport report = strongly_attains(f);
    doc["lip_norm"] = rational_str(report.lip_norm);
    Json pairs = Json::array();
    for (const auto& [u, v] : report.attaining_pairs)
        pairs.push_back(Json{{"x", space.label(u)}, {"y", space.label(v)}});
    doc["attaining_pairs"] = std::move(pairs);
    if (report.trivial_segment_pair)
        doc["trivial_segment_pair"] = Json{{"x", space.label(report.trivial_segment_pair->first)},
                                           {"y", space.label(report.trivial_segment_pair->second)}};
    return doc;
}

Json attainment_random_report(const MetricSpace& space, const NormAttainmentResult& result) {
    Json doc = report_envelope(space, "attainment_random");
    doc["seed"] = result.seed;
    doc["samples"] = result.samples.size();
    doc["all_passed"] = result.all_passed;
    if (result.counterexample) doc["counterexample"] = *result.counterexample;
    else doc["counterexample"] = nullptr;
    Json rows = Json::array();
    for (const NormAttainmentSample& sample : result.samples) {
        Json row;
        row["function"] = function_to_json(sample.function);
        row["lip_norm"] = rational_str(sample.norm);
        row["vertex"] = Json{{"x", space.label(sample.vertex_molecule.x)},
                             {"y", space.label(sample.vertex_molecule.y)}};
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

}  // namespace freespace
