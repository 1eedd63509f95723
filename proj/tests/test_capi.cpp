// Exercises the shared-library surface exactly as an external client would:
// only freespace/freespace.h, no internal headers.
#include <doctest.h>

#include <json.hpp>
#include <random>
#include <string>

#include "freespace/freespace.h"

namespace {

using nlohmann::json;

struct OwnedString {
    char* value = nullptr;
    ~OwnedString() { fs_string_free(value); }
    std::string str() const { return value ? value : ""; }
};

constexpr const char* kSquareJson = R"({
  "kind": "finite",
  "points": ["0", "a", "b", "c"],
  "base": "0",
  "d": [["0","1","2","1"],
        ["1","0","1","2"],
        ["2","1","0","1"],
        ["1","2","1","0"]]
})";

}  // namespace

TEST_CASE("version and error text are always available") {
    CHECK(std::string(fs_version()) == "0.1.0");
    CHECK(fs_last_error() != nullptr);
}

TEST_CASE("space lifecycle over the C boundary") {
    fs_space* space = nullptr;
    REQUIRE(fs_space_parse_json(kSquareJson, &space) == FS_OK);
    CHECK(fs_space_point_count(space) == 4);
    CHECK(std::string(fs_space_label(space, 2)) == "b");
    CHECK(fs_space_label(space, 9) == nullptr);
    int index = -1;
    REQUIRE(fs_space_point_index(space, "c", &index) == FS_OK);
    CHECK(index == 3);
    OwnedString d;
    REQUIRE(fs_space_distance(space, 0, 2, &d.value) == FS_OK);
    CHECK(d.str() == "2");
    fs_space_free(space);
}

TEST_CASE("parse failures come back as status codes with messages") {
    fs_space* space = nullptr;
    CHECK(fs_space_parse_json("{not json", &space) == FS_ERR_PARSE);
    CHECK(std::string(fs_last_error()).size() > 0);
    const char* broken = R"({"kind":"finite","points":["0","a","b"],"base":"0",
                             "d":[["0","1","3"],["1","0","1"],["3","1","0"]]})";
    CHECK(fs_space_parse_json(broken, &space) == FS_ERR_INVALID_SPACE);
    CHECK(fs_space_gallery("moebius", 5, &space) == FS_ERR_UNKNOWN_GALLERY);
    CHECK(fs_space_gallery("ag", 1, &space) == FS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("validate reports violations instead of failing") {
    const char* broken = R"({"kind":"finite","points":["0","a","b"],"base":"0",
                             "d":[["0","1","3"],["1","0","1"],["3","1","0"]]})";
    OwnedString report;
    REQUIRE(fs_validate_json(broken, &report.value) == FS_OK);
    json doc = json::parse(report.str());
    CHECK_FALSE(doc.at("valid").get<bool>());
    CHECK(doc.at("violations").size() == 1);
}

TEST_CASE("norm, pairing and segment through the C API") {
    fs_space* space = nullptr;
    REQUIRE(fs_space_parse_json(kSquareJson, &space) == FS_OK);

    fs_element* mu = nullptr;
    REQUIRE(fs_element_parse_json(space, R"({"coeffs": {"a": "1", "c": "1", "0": "-2"}})", &mu) == FS_OK);
    OwnedString norm;
    REQUIRE(fs_norm(space, mu, "both", &norm.value) == FS_OK);
    json doc = json::parse(norm.str());
    CHECK(doc.at("value") == "2");
    CHECK(doc.at("agree") == true);
    CHECK(doc.at("dual").at("value") == "2");
    CHECK(doc.at("primal").at("value") == "2");

    fs_function* fxy = nullptr;
    REQUIRE(fs_function_fxy(space, 0, 1, &fxy) == FS_OK);
    fs_element* molecule = nullptr;
    REQUIRE(fs_element_molecule(space, 0, 1, &molecule) == FS_OK);
    OwnedString pairing;
    REQUIRE(fs_pair(fxy, molecule, &pairing.value) == FS_OK);
    CHECK(pairing.str() == "1");

    OwnedString lip;
    int u = -1, v = -1;
    REQUIRE(fs_function_lip_norm(fxy, &lip.value, &u, &v) == FS_OK);
    CHECK(lip.str() == "1");
    CHECK(u == 0);

    OwnedString segment;
    REQUIRE(fs_segment(space, 0, 2, &segment.value) == FS_OK);
    json seg = json::parse(segment.str());
    CHECK(seg.at("segment").size() == 4);
    CHECK_FALSE(seg.at("trivial").get<bool>());

    fs_element_free(molecule);
    fs_element_free(mu);
    fs_function_free(fxy);
    fs_space_free(space);
}

TEST_CASE("classification and check round-trip over the C API") {
    fs_space* ag = nullptr;
    REQUIRE(fs_space_gallery("ag", 10, &ag) == FS_OK);
    OwnedString report;
    REQUIRE(fs_classify_pair(ag, 0, 1, 10, nullptr, &report.value) == FS_OK);
    json doc = json::parse(report.str());
    REQUIRE(doc.at("rows").size() == 1);
    const json& row = doc.at("rows")[0];
    CHECK(row.at("extreme").at("status") == "proven");
    CHECK(row.at("denting").at("status") == "refuted");
    CHECK(row.at("strongly_exposed").at("status") == "refuted");

    OwnedString check;
    REQUIRE(fs_check_report(report.str().c_str(), &check.value) == FS_OK);
    json verdict = json::parse(check.str());
    CHECK(verdict.at("passed") == true);

    // doctor the report: the checker must reject it
    json bad = doc;
    bad["rows"][0]["extreme"]["evidence"][0]["lhs"] = "999";
    OwnedString second;
    CHECK(fs_check_report(bad.dump().c_str(), &second.value) == FS_ERR_CHECK_FAILED);
    json failures = json::parse(second.str());
    CHECK(failures.at("passed") == false);
    fs_space_free(ag);
}

TEST_CASE("oracle, slice and attainment surfaces") {
    fs_space* space = nullptr;
    REQUIRE(fs_space_parse_json(kSquareJson, &space) == FS_OK);

    OwnedString oracle;
    REQUIRE(fs_oracle(space, &oracle.value) == FS_OK);
    CHECK(json::parse(oracle.str()).at("vertices").size() == 8);

    fs_function* fxy = nullptr;
    REQUIRE(fs_function_fxy(space, 0, 1, &fxy) == FS_OK);
    OwnedString slice;
    REQUIRE(fs_slice(space, fxy, "1/2", 1, &slice.value) == FS_OK);
    CHECK(json::parse(slice.str()).at("molecules").size() >= 1);

    OwnedString attain;
    REQUIRE(fs_attain_function(space, fxy, &attain.value) == FS_OK);
    CHECK(json::parse(attain.str()).at("lip_norm") == "1");

    OwnedString random_attain;
    REQUIRE(fs_attain_random(space, 10, 42, &random_attain.value) == FS_OK);
    json doc = json::parse(random_attain.str());
    CHECK(doc.at("all_passed") == true);
    CHECK(doc.at("rows").size() == 10);

    // same seed, same bytes
    OwnedString again;
    REQUIRE(fs_attain_random(space, 10, 42, &again.value) == FS_OK);
    CHECK(again.str() == random_attain.str());

    fs_function_free(fxy);
    fs_space_free(space);
}

TEST_CASE("snowflake and gallery construction through the C API") {
    fs_space* space = nullptr;
    REQUIRE(fs_space_parse_json(kSquareJson, &space) == FS_OK);
    fs_space* flaked = nullptr;
    REQUIRE(fs_space_snowflake(space, "1/2", 0, &flaked) == FS_OK);
    OwnedString oracle;
    REQUIRE(fs_oracle(flaked, &oracle.value) == FS_OK);
    CHECK(json::parse(oracle.str()).at("vertices").size() == 12);
    CHECK(fs_space_snowflake(space, "3/2", 0, &flaked) == FS_ERR_INVALID_ARGUMENT);
    fs_space_free(flaked);
    fs_space_free(space);
}

TEST_CASE("mutated inputs never crash the boundary, they return statuses") {
    std::mt19937_64 rng(0xF00D);
    const std::string base = kSquareJson;
    std::uniform_int_distribution<std::size_t> pos(0, base.size() - 1);
    std::uniform_int_distribution<int> byte(32, 126);
    std::uniform_int_distribution<int> mode(0, 2);
    for (int trial = 0; trial < 400; ++trial) {
        std::string mutated = base;
        switch (mode(rng)) {
            case 0: mutated[pos(rng)] = static_cast<char>(byte(rng)); break;
            case 1: mutated = mutated.substr(0, pos(rng)); break;
            default: mutated.insert(pos(rng), 1, static_cast<char>(byte(rng))); break;
        }
        fs_space* space = nullptr;
        if (fs_space_parse_json(mutated.c_str(), &space) == FS_OK) {
            CHECK(fs_space_point_count(space) >= 1);
            fs_space_free(space);
        } else {
            CHECK(std::string(fs_last_error()).size() > 0);
        }
        char* report = nullptr;
        if (fs_validate_json(mutated.c_str(), &report) == FS_OK) fs_string_free(report);
        char* check = nullptr;
        if (fs_check_report(mutated.c_str(), &check) == FS_OK) fs_string_free(check);
        else if (check) fs_string_free(check);
    }
}

TEST_CASE("mcshane and special functions through the C API") {
    fs_space* space = nullptr;
    REQUIRE(fs_space_parse_json(kSquareJson, &space) == FS_OK);
    const int domain[] = {0, 2};
    const char* values[] = {"2", "0"};
    fs_function* extended = nullptr;
    REQUIRE(fs_function_mcshane(space, domain, values, 2, 0, &extended) == FS_OK);
    OwnedString at_zero;
    REQUIRE(fs_function_value(extended, 0, &at_zero.value) == FS_OK);
    CHECK(at_zero.str() == "2");

    fs_function* dent = nullptr;
    REQUIRE(fs_function_fdent(space, 0, 1, "1/8", "1/2", &dent) == FS_OK);
    fs_element* molecule = nullptr;
    REQUIRE(fs_element_molecule(space, 0, 1, &molecule) == FS_OK);
    OwnedString pairing;
    REQUIRE(fs_pair(dent, molecule, &pairing.value) == FS_OK);
    CHECK(pairing.str() == "4/5");  // 1/(1+4*(1/8)*(1/2))

    fs_function* bump = nullptr;
    REQUIRE(fs_function_bump(space, 0, 1, 2, "1/2", &bump) == FS_OK);
    CHECK(fs_function_bump(space, 0, 2, 1, "1/10", &bump) == FS_ERR_INVALID_ARGUMENT);

    fs_function_free(bump);
    fs_function_free(dent);
    fs_function_free(extended);
    fs_element_free(molecule);
    fs_space_free(space);
}
