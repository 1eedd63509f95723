#include "freespace/freespace.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "errors.hpp"
#include "report.hpp"

using namespace freespace;

struct fs_space {
    std::shared_ptr<const MetricSpace> space;
};

struct fs_function {
    std::shared_ptr<const MetricSpace> space;  // keeps the function's space alive
    LipFunction function;
};

struct fs_element {
    std::shared_ptr<const MetricSpace> space;
    FreeElement element;
};

namespace {

thread_local std::string g_last_error;

fs_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return FS_ERR_INVALID_ARGUMENT;
        case ErrorCode::ParseError: return FS_ERR_PARSE;
        case ErrorCode::InvalidSpace: return FS_ERR_INVALID_SPACE;
        case ErrorCode::SpaceMismatch: return FS_ERR_SPACE_MISMATCH;
        case ErrorCode::EmptySpace: return FS_ERR_EMPTY_SPACE;
        case ErrorCode::DegenerateInput: return FS_ERR_DEGENERATE_INPUT;
        case ErrorCode::UnknownGallery: return FS_ERR_UNKNOWN_GALLERY;
        case ErrorCode::TooLarge: return FS_ERR_TOO_LARGE;
        case ErrorCode::Internal: return FS_ERR_INTERNAL;
    }
    return FS_ERR_INTERNAL;
}

template <typename F>
fs_status guarded(F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const Json::exception& e) {
        g_last_error = e.what();
        return FS_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FS_ERR_INTERNAL;
    }
}

char* copy_out(const std::string& text) {
    char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buffer) return nullptr;
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return buffer;
}

fs_status emit(const std::string& text, char** out) {
    if (!out) {
        g_last_error = "null output pointer";
        return FS_ERR_INVALID_ARGUMENT;
    }
    *out = copy_out(text);
    if (!*out) {
        g_last_error = "out of memory";
        return FS_ERR_INTERNAL;
    }
    return FS_OK;
}

fs_status emit_json(const Json& doc, char** out) { return emit(doc.dump(2), out); }

Rational parse_rational_arg(const char* text, const char* what) {
    if (!text) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
    auto parsed = parse_rational(text);
    if (!parsed) fail(ErrorCode::ParseError, std::string(what) + " is not a rational: " + text);
    return *parsed;
}

const MetricSpace& deref(const fs_space* space) {
    if (!space) fail(ErrorCode::InvalidArgument, "null space handle");
    return *space->space;
}

void require_point(const MetricSpace& space, int index, const char* what) {
    if (index < 0 || index >= space.point_count())
        fail(ErrorCode::InvalidArgument, std::string(what) + " out of range");
}

std::vector<Rational> parse_grid(const char* eps_grid_json) {
    if (!eps_grid_json) return default_eps_grid();
    Json doc = Json::parse(eps_grid_json);
    if (!doc.is_array() || doc.empty()) fail(ErrorCode::ParseError, "eps grid must be a nonempty array");
    std::vector<Rational> grid;
    for (const Json& entry : doc) {
        auto eps = parse_rational(entry.get<std::string>());
        if (!eps || *eps <= 0) fail(ErrorCode::ParseError, "eps grid entries must be positive rationals");
        grid.push_back(*eps);
    }
    // descending, duplicates dropped
    std::sort(grid.begin(), grid.end(), [](const Rational& a, const Rational& b) { return a > b; });
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

ClassifyOptions options_of(long depth, const char* eps_grid_json) {
    ClassifyOptions options;
    if (depth > 0) options.depth = depth;
    options.eps_grid = parse_grid(eps_grid_json);
    return options;
}

}  // namespace

extern "C" {

const char* fs_version(void) { return kToolVersion; }

const char* fs_last_error(void) { return g_last_error.c_str(); }

void fs_string_free(char* text) { std::free(text); }

fs_status fs_space_parse_json(const char* json_text, fs_space** out) {
    return guarded([&]() -> fs_status {
        if (!json_text || !out) fail(ErrorCode::InvalidArgument, "null argument");
        Json doc = Json::parse(json_text);
        *out = new fs_space{std::make_shared<MetricSpace>(space_from_json(doc))};
        return FS_OK;
    });
}

fs_status fs_space_gallery(const char* name, int depth, fs_space** out) {
    return guarded([&]() -> fs_status {
        if (!name || !out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = new fs_space{std::make_shared<MetricSpace>(make_gallery(name, depth))};
        return FS_OK;
    });
}

fs_status fs_space_snowflake(const fs_space* space, const char* exponent, int force_float,
                             fs_space** out) {
    return guarded([&]() -> fs_status {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        Rational p = parse_rational_arg(exponent, "exponent");
        *out = new fs_space{
            std::make_shared<MetricSpace>(snowflake(deref(space), p, force_float != 0))};
        return FS_OK;
    });
}

void fs_space_free(fs_space* space) { delete space; }

int fs_space_point_count(const fs_space* space) {
    return space ? space->space->point_count() : 0;
}

const char* fs_space_label(const fs_space* space, int index) {
    if (!space || index < 0 || index >= space->space->point_count()) return nullptr;
    return space->space->label(index).c_str();
}

fs_status fs_space_point_index(const fs_space* space, const char* label, int* out) {
    return guarded([&]() -> fs_status {
        if (!label || !out) fail(ErrorCode::InvalidArgument, "null argument");
        auto index = deref(space).index_of(label);
        if (!index) fail(ErrorCode::InvalidArgument, std::string("unknown point: ") + label);
        *out = *index;
        return FS_OK;
    });
}

fs_status fs_space_distance(const fs_space* space, int i, int j, char** out) {
    return guarded([&]() -> fs_status {
        const MetricSpace& s = deref(space);
        require_point(s, i, "i");
        require_point(s, j, "j");
        return emit(rational_str(s.distance(i, j)), out);
    });
}

fs_status fs_space_to_json(const fs_space* space, char** out) {
    return guarded([&]() -> fs_status { return emit_json(space_to_json(deref(space)), out); });
}

fs_status fs_validate_json(const char* json_text, char** report_json) {
    return guarded([&]() -> fs_status {
        if (!json_text) fail(ErrorCode::InvalidArgument, "null argument");
        Json doc = Json::parse(json_text);
        MetricSpace space = space_from_json_unchecked(doc);
        return emit_json(validation_report(space, validate(space)), report_json);
    });
}

fs_status fs_segment(const fs_space* space, int x, int y, char** report_json) {
    return guarded([&]() -> fs_status {
        const MetricSpace& s = deref(space);
        require_point(s, x, "x");
        require_point(s, y, "y");
        return emit_json(segment_report(s, x, y), report_json);
    });
}

fs_status fs_function_parse_json(const fs_space* space, const char* json_text, fs_function** out) {
    return guarded([&]() -> fs_status {
        if (!json_text || !out) fail(ErrorCode::InvalidArgument, "null argument");
        const MetricSpace& s = deref(space);
        Json doc = Json::parse(json_text);
        *out = new fs_function{space->space, function_from_json(s, doc)};
        return FS_OK;
    });
}

fs_status fs_function_fxy(const fs_space* space, int x, int y, fs_function** out) {
    return guarded([&]() -> fs_status {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        const MetricSpace& s = deref(space);
        require_point(s, x, "x");
        require_point(s, y, "y");
        *out = new fs_function{space->space, build_f_xy(s, x, y)};
        return FS_OK;
    });
}

fs_status fs_function_fdent(const fs_space* space, int x, int y, const char* eps, const char* tau,
                            fs_function** out) {
    return guarded([&]() -> fs_status {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        const MetricSpace& s = deref(space);
        require_point(s, x, "x");
        require_point(s, y, "y");
        *out = new fs_function{space->space, build_fdent(s, x, y, parse_rational_arg(eps, "eps"),
                                                         parse_rational_arg(tau, "tau"))};
        return FS_OK;
    });
}

fs_status fs_function_bump(const fs_space* space, int x, int y, int z, const char* eps,
                           fs_function** out) {
    return guarded([&]() -> fs_status {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        const MetricSpace& s = deref(space);
        require_point(s, x, "x");
        require_point(s, y, "y");
        require_point(s, z, "z");
        *out = new fs_function{space->space, build_g(s, x, y, z, parse_rational_arg(eps, "eps"))};
        return FS_OK;
    });
}

fs_status fs_function_mcshane(const fs_space* space, const int* domain, const char* const* values,
                              size_t count, int base_shift, fs_function** out) {
    return guarded([&]() -> fs_status {
        if (!domain || !values || !out) fail(ErrorCode::InvalidArgument, "null argument");
        const MetricSpace& s = deref(space);
        PartialFunction partial;
        for (size_t k = 0; k < count; ++k) {
            require_point(s, domain[k], "domain point");
            partial.domain.push_back(domain[k]);
            partial.values.push_back(parse_rational_arg(values[k], "partial value"));
        }
        LipFunction extended = mcshane_extend(s, partial);
        if (base_shift) extended = extended.base_shifted();
        *out = new fs_function{space->space, std::move(extended)};
        return FS_OK;
    });
}

void fs_function_free(fs_function* function) { delete function; }

fs_status fs_function_value(const fs_function* function, int point, char** out) {
    return guarded([&]() -> fs_status {
        if (!function) fail(ErrorCode::InvalidArgument, "null function handle");
        require_point(function->function.space(), point, "point");
        return emit(rational_str(function->function.value(point)), out);
    });
}

fs_status fs_function_lip_norm(const fs_function* function, char** value, int* argmax_u,
                               int* argmax_v) {
    return guarded([&]() -> fs_status {
        if (!function) fail(ErrorCode::InvalidArgument, "null function handle");
        LipNormResult result = lip_norm(function->function);
        if (argmax_u) *argmax_u = result.argmax ? result.argmax->first : -1;
        if (argmax_v) *argmax_v = result.argmax ? result.argmax->second : -1;
        return emit(rational_str(result.norm), value);
    });
}

fs_status fs_function_to_json(const fs_function* function, char** out) {
    return guarded([&]() -> fs_status {
        if (!function) fail(ErrorCode::InvalidArgument, "null function handle");
        return emit_json(function_to_json(function->function), out);
    });
}

fs_status fs_element_parse_json(const fs_space* space, const char* json_text, fs_element** out) {
    return guarded([&]() -> fs_status {
        if (!json_text || !out) fail(ErrorCode::InvalidArgument, "null argument");
        const MetricSpace& s = deref(space);
        *out = new fs_element{space->space, element_from_json(s, Json::parse(json_text))};
        return FS_OK;
    });
}

fs_status fs_element_molecule(const fs_space* space, int x, int y, fs_element** out) {
    return guarded([&]() -> fs_status {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        const MetricSpace& s = deref(space);
        require_point(s, x, "x");
        require_point(s, y, "y");
        *out = new fs_element{space->space, FreeElement::molecule(s, x, y)};
        return FS_OK;
    });
}

void fs_element_free(fs_element* element) { delete element; }

fs_status fs_element_to_json(const fs_element* element, char** out) {
    return guarded([&]() -> fs_status {
        if (!element) fail(ErrorCode::InvalidArgument, "null element handle");
        return emit_json(element_to_json(element->element), out);
    });
}

fs_status fs_pair(const fs_function* function, const fs_element* element, char** out) {
    return guarded([&]() -> fs_status {
        if (!function || !element) fail(ErrorCode::InvalidArgument, "null handle");
        return emit(rational_str(pair(function->function, element->element)), out);
    });
}

fs_status fs_norm(const fs_space* space, const fs_element* element, const char* method,
                  char** report_json) {
    return guarded([&]() -> fs_status {
        if (!element) fail(ErrorCode::InvalidArgument, "null element handle");
        const MetricSpace& s = deref(space);
        if (&element->element.space() != &s) fail(ErrorCode::SpaceMismatch, "element built on another space");
        std::string chosen = method ? method : "both";
        if (chosen != "dual" && chosen != "primal" && chosen != "both")
            fail(ErrorCode::InvalidArgument, "method must be dual, primal or both");
        return emit_json(norm_report(s, element->element, chosen), report_json);
    });
}

fs_status fs_slice(const fs_space* space, const fs_function* function, const char* alpha,
                   int restrict_to_molecules, char** report_json) {
    return guarded([&]() -> fs_status {
        if (!function) fail(ErrorCode::InvalidArgument, "null function handle");
        const MetricSpace& s = deref(space);
        if (&function->function.space() != &s)
            fail(ErrorCode::SpaceMismatch, "function built on another space");
        return emit_json(slice_report(s, function->function, parse_rational_arg(alpha, "alpha"),
                                      restrict_to_molecules != 0),
                         report_json);
    });
}

fs_status fs_classify_pair(const fs_space* space, int x, int y, long depth,
                           const char* eps_grid_json, char** report_json) {
    return guarded([&]() -> fs_status {
        const MetricSpace& s = deref(space);
        require_point(s, x, "x");
        require_point(s, y, "y");
        ClassifyOptions options = options_of(depth, eps_grid_json);
        std::vector<ClassificationRow> rows{classify_pair(s, x, y, options)};
        if (!s.is_gallery() && s.point_count() <= options.oracle_cap) {
            std::vector<Molecule> vertices = oracle_extreme_points(s, options.oracle_cap);
            bool is_vertex = false;
            for (const Molecule& m : vertices) is_vertex |= (m.x == x && m.y == y);
            rows.front().oracle_extreme = is_vertex;
        }
        return emit_json(classification_report(s, rows, options), report_json);
    });
}

fs_status fs_classify_all(const fs_space* space, long depth, const char* eps_grid_json,
                          char** report_json) {
    return guarded([&]() -> fs_status {
        const MetricSpace& s = deref(space);
        ClassifyOptions options = options_of(depth, eps_grid_json);
        return emit_json(classification_report(s, classify_all(s, options), options), report_json);
    });
}

fs_status fs_oracle(const fs_space* space, char** report_json) {
    return guarded([&]() -> fs_status {
        const MetricSpace& s = deref(space);
        return emit_json(oracle_report(s, oracle_extreme_points(s)), report_json);
    });
}

fs_status fs_attain_function(const fs_space* space, const fs_function* function,
                             char** report_json) {
    return guarded([&]() -> fs_status {
        if (!function) fail(ErrorCode::InvalidArgument, "null function handle");
        const MetricSpace& s = deref(space);
        if (&function->function.space() != &s)
            fail(ErrorCode::SpaceMismatch, "function built on another space");
        return emit_json(attainment_report(s, function->function), report_json);
    });
}

fs_status fs_attain_random(const fs_space* space, int samples, unsigned long long seed,
                           char** report_json) {
    return guarded([&]() -> fs_status {
        if (samples <= 0) fail(ErrorCode::InvalidArgument, "sample count must be positive");
        const MetricSpace& s = deref(space);
        return emit_json(attainment_random_report(s, verify_na_equals_sna(s, samples, seed)),
                         report_json);
    });
}

fs_status fs_check_report(const char* report_json, char** result_json) {
    return guarded([&]() -> fs_status {
        if (!report_json) fail(ErrorCode::InvalidArgument, "null argument");
        CheckResult result = check_report(Json::parse(report_json));
        fs_status status = result.passed ? FS_OK : FS_ERR_CHECK_FAILED;
        if (!result.passed) g_last_error = "report evidence failed re-verification";
        fs_status emit_status = emit_json(check_result_to_json(result), result_json);
        return emit_status == FS_OK ? status : emit_status;
    });
}

}  // extern "C"
