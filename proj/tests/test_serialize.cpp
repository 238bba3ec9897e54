#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "affgraph/serialize.hpp"
#include "json.hpp"
#include "poly_parse.hpp"

using namespace affgraph;

namespace {

int count(const std::string& text, const std::string& needle) {
    int c = 0;
    for (std::size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++c;
    return c;
}

int lines(const std::string& text) { return static_cast<int>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_CASE("DOT export of rho in A2") {
    const auto a2 = build_affine_data("A", 2);
    const std::string dot = to_dot(document_of(a2, build_gamma_rho(a2)));
    CHECK(count(dot, " [label=") == 6);
    CHECK(count(dot, " -> ") == 9);
    // only the three wrap-around arrows carry a weight other than 1
    CHECK(count(dot, ", label=") == 3);
    CHECK(count(dot, "label=\"z1^-1*z2^-1\"") == 1);
    CHECK(count(dot, "color=red") == 3);
    CHECK(count(dot, "color=blue") == 3);
    CHECK(count(dot, "color=black") == 3);
}

TEST_CASE("JSON schema") {
    const auto g2 = build_affine_data("G2", 2);
    const auto doc = document_of(g2, build_gamma_B0(g2));
    const auto j = nlohmann::json::parse(to_json(doc));
    CHECK(j["model"] == "root-datum");
    CHECK(j["graph"] == "B0");
    CHECK(j["nvars"] == 2);
    CHECK(j["legend"]["z1"] == "omega1");
    CHECK(j["vertices"].size() == 12);
    CHECK(j["vertices"][0]["word"] == "e");
    CHECK(j["vertices"][0]["id"] == 0);
    CHECK(j["edges"].size() == 18);
    bool saw_two = false;
    for (const auto& e : j["edges"])
        for (const auto& t : e["weight"]) {
            CHECK(t["coef"].is_string());
            CHECK(t["exps"].size() == 2);
            if (t["coef"] == "2" && t["exps"] == std::vector<int>{0, 1}) saw_two = true;
        }
    CHECK(saw_two);
}

TEST_CASE("JSON round trip is byte-identical") {
    std::vector<std::string> texts;
    const auto a2 = build_affine_data("A", 2), g2 = build_affine_data("G2", 2), c3 = build_affine_data("C", 3),
               a3 = build_affine_data("A", 3);
    texts.push_back(to_json(document_of(a2, build_gamma_rho(a2))));
    texts.push_back(to_json(document_of(g2, build_gamma_rho(g2))));
    texts.push_back(to_json(document_of(g2, build_gamma_B0(g2))));
    texts.push_back(to_json(document_of(c3, build_gamma_gamma(c3, {2}))));
    texts.push_back(to_json(document_of(c3, {2}, build_particle_graph(c3, {2}))));
    texts.push_back(to_json(document_of(a3, {1, 2}, key_orbit_graph(a3, {1, 2}))));

    WeightedDigraph odd(2);
    odd.add_vertex("x");
    odd.add_vertex("y \"quoted\"");
    odd.add_edge(0, 1, kUntyped, testutil::lp("z1/2 + 3*z2^-2", 2));
    GraphDocument doc;
    doc.graph = "custom";
    doc.legend = {"a", "b"};
    doc.digraph = odd;
    texts.push_back(to_json(doc));

    for (const auto& t : texts) {
        const GraphDocument back = from_json(t);
        CHECK(to_json(back) == t);
    }
    const GraphDocument back = from_json(texts.back());
    REQUIRE(back.digraph.edges().size() == 1);
    CHECK(back.digraph.edges()[0].weight == testutil::lp("z1/2 + 3*z2^-2", 2));
    CHECK(back.digraph.label(1) == "y \"quoted\"");
    CHECK(count(texts.back(), "\"1/2\"") == 1);
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(from_json("{\"nvars\": 0, \"legend\": {}, \"vertices\": [{\"id\": 1, \"word\": \"e\", \"label\": \"e\"}], "
                              "\"edges\": []}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(from_json("{\"nvars\": 0, \"legend\": {}, \"vertices\": [], \"edges\": [{\"src\": 0, \"dst\": 0, "
                              "\"type\": 1, \"weight\": []}]}"),
                    std::invalid_argument);
}

TEST_CASE("canonical adjacency string of B0 in A2") {
    const auto a2 = build_affine_data("A", 2);
    const GammaGraph g = build_gamma_B0(a2);
    CHECK(matrix_string(g.graph.adjacency_laurent()) == "[[0, z1 + z2], [1, 0]]");
}

TEST_CASE("CSV exports") {
    const auto a2 = build_affine_data("A", 2);
    const std::string csv = to_csv(document_of(a2, build_gamma_rho(a2)));
    CHECK(lines(csv) == 10);
    CHECK(csv.rfind("src,dst,type,weight\n", 0) == 0);
    CHECK(count(csv, "121,e,0,z1^-1*z2^-1\n") == 1);

    const std::string table = structure_table_csv(structure_constants(build_gamma_B0(a2)));
    CHECK(count(table, "0,0,e,\"z1 + z2\"\n") == 1);
    CHECK(count(table, "# z1 = omega1") == 1);
    const auto j = nlohmann::json::parse(structure_table_json(structure_constants(build_gamma_B0(a2))));
    CHECK(j["entries"].size() == 4);
    CHECK(j["verdict"] == "positively_multiplicative");
}
