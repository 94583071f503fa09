#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "sstk/cli.hpp"
#include "sstk/json_io.hpp"
#include "support.hpp"

using namespace sstk;

namespace {

int run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"sstk"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name + ".json";
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("serialize-parse-serialize is byte-identical") {
    std::vector<SimplicialSet> corpus;
    corpus.push_back(standard_simplex(2, 3));
    corpus.push_back(nerve(FiniteCategory::walking_isomorphism(), 3));
    corpus.push_back(counterexample_input(3));
    corpus.push_back(plus(random_semisimplicial(3, 4, 5)).sset());
    for (const auto& X : corpus) {
        std::string once = sset_to_json(X).dump();
        SimplicialSet Y = sset_from_json(parse_json(once, "roundtrip"));
        CHECK(sset_to_json(Y).dump() == once);
    }
    SemisimplicialSet S = random_semisimplicial(3, 4, 9);
    std::string once = semi_to_json(S).dump();
    CHECK(semi_to_json(semi_from_json(parse_json(once, "roundtrip"))).dump() == once);

    FiniteCategory C = FiniteCategory::walking_isomorphism();
    std::string cat = category_to_json(C).dump();
    CHECK(category_to_json(category_from_json(parse_json(cat, "cat"))).dump() == cat);
}

TEST_CASE("parse errors carry positions; validation failures reject documents") {
    CHECK_THROWS_WITH_AS(parse_json("{\"trunc_dim\": 1,", "input"),
                         doctest::Contains("byte"), input_error);
    Json j = sset_to_json(standard_simplex(1, 2));
    j["dims"][1]["faces"][0][0] = 77;
    CHECK_THROWS_AS(sset_from_json(j), integrity_error);
}

TEST_CASE("plus documents carry the provenance table") {
    PlusSet P = plus(restrict_sset(standard_simplex(1, 3)));
    Json j = plus_to_json(P);
    REQUIRE(j.contains("plus_pairs"));
    for (int n = 0; n <= 3; ++n) {
        REQUIRE(static_cast<int>(j["plus_pairs"][static_cast<size_t>(n)].size()) ==
                P.sset().size(n));
        for (int id = 0; id < P.sset().size(n); ++id) {
            const Json& e = j["plus_pairs"][static_cast<size_t>(n)][static_cast<size_t>(id)];
            CHECK(e["base"].get<int>() == P.pair(n, id).base);
            CHECK(e["surj"].get<std::vector<int>>() == P.pair(n, id).surj.values);
        }
    }
}

TEST_CASE("cli: build, plus, count pipeline through files") {
    std::string built = temp_path("built");
    std::string plused = temp_path("plused");
    std::string counted = temp_path("counted");
    CHECK(run_cli({"build", "--simplex", "1", "--dim", "4", "--output", built.c_str()}) == 0);
    CHECK(run_cli({"plus", "--input", built.c_str(), "--output", plused.c_str()}) == 0);
    CHECK(run_cli({"count", "--input", plused.c_str(), "--output", counted.c_str()}) == 0);
    Json j = parse_json(slurp_file(counted), "counts");
    CHECK(j["counts"].get<std::vector<int>>() == std::vector<int>{2, 5, 12, 28, 64});
    CHECK(j["nondegenerate"].get<std::vector<int>>() == std::vector<int>{2, 3, 4, 5, 6});
    std::remove(built.c_str());
    std::remove(plused.c_str());
    std::remove(counted.c_str());
}

TEST_CASE("cli: build output is deterministic") {
    std::string a = temp_path("det_a"), b = temp_path("det_b");
    CHECK(run_cli({"build", "--nerve-poset", "2", "--dim", "3", "--output", a.c_str()}) == 0);
    CHECK(run_cli({"build", "--nerve-poset", "2", "--dim", "3", "--output", b.c_str()}) == 0);
    CHECK(slurp_file(a) == slurp_file(b));
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("cli: quasicheck exit codes distinguish pass, fail, and input errors") {
    std::string ce = temp_path("ce");
    std::string ce_plus = temp_path("ce_plus");
    CHECK(run_cli({"build", "--counterexample", "--dim", "4", "--output", ce.c_str()}) == 0);
    CHECK(run_cli({"plus", "--input", ce.c_str(), "--output", ce_plus.c_str()}) == 0);
    std::string report = temp_path("report");
    CHECK(run_cli({"quasicheck", "--input", ce_plus.c_str(), "--max-dim", "3", "--output",
                   report.c_str()}) == 1);
    Json j = parse_json(slurp_file(report), "report");
    CHECK(j["unfilled"].size() == 8);
    CHECK(j["quasi_up_to_max_dim"] == false);

    std::string junk = temp_path("junk");
    write_file(junk, "{\"trunc_dim\": ");
    CHECK(run_cli({"quasicheck", "--input", junk.c_str(), "--max-dim", "2"}) == 2);
    CHECK(run_cli({"homology", "--input", junk.c_str()}) == 2);
    std::remove(ce.c_str());
    std::remove(ce_plus.c_str());
    std::remove(report.c_str());
    std::remove(junk.c_str());
}

TEST_CASE("cli: triangle-check on random inputs and f-iso report") {
    CHECK(run_cli({"triangle-check", "--random", "3", "--trunc-dim", "3", "--seed", "1",
                   "--output", temp_path("tri").c_str()}) == 0);
    std::remove(temp_path("tri").c_str());
    std::string fiso = temp_path("fiso");
    CHECK(run_cli({"f-iso", "--k", "1", "--max-m", "3", "--output", fiso.c_str()}) == 0);
    Json j = parse_json(slurp_file(fiso), "fiso");
    CHECK(j["pass"] == true);
    std::remove(fiso.c_str());
}

TEST_CASE("cli: homology and pi1 reports") {
    std::string pt_plus = temp_path("pt_plus");
    std::string built = temp_path("pt");
    CHECK(run_cli({"build", "--simplex", "0", "--dim", "8", "--output", built.c_str()}) == 0);
    CHECK(run_cli({"plus", "--input", built.c_str(), "--output", pt_plus.c_str()}) == 0);
    std::string hom = temp_path("hom");
    CHECK(run_cli({"homology", "--input", pt_plus.c_str(), "--max-deg", "7", "--output",
                   hom.c_str()}) == 0);
    Json hj = parse_json(slurp_file(hom), "homology");
    CHECK(hj[0]["betti"] == 1);
    for (size_t d = 1; d < hj.size(); ++d) CHECK(hj[d]["betti"] == 0);
    std::string pi = temp_path("pi1");
    CHECK(run_cli({"pi1", "--input", pt_plus.c_str(), "--output", pi.c_str()}) == 0);
    Json pj = parse_json(slurp_file(pi), "pi1");
    CHECK(pj["triviality"] == "trivial");
    CHECK(pj["relators"].size() == 1);
    std::remove(built.c_str());
    std::remove(pt_plus.c_str());
    std::remove(hom.c_str());
    std::remove(pi.c_str());
}

TEST_CASE("cli: probe verdict and exit code") {
    std::string out = temp_path("probe");
    CHECK(run_cli({"probe", "--k", "1", "--from", "0", "--to", "1", "--bound", "3", "--max-deg",
                   "2", "--output", out.c_str()}) == 0);
    Json j = parse_json(slurp_file(out), "probe");
    CHECK(j["pass"] == true);
    CHECK(j["bounds"]["max_total_dim"] == 3);
    std::remove(out.c_str());
}

TEST_CASE("cli: nerve ingestion, necklace counts, finality diagnostics") {
    std::string cat = temp_path("cat"), built = temp_path("nerve_built");
    write_file(cat, category_to_json(FiniteCategory::walking_isomorphism()).dump());
    CHECK(run_cli({"build", "--nerve", "--input", cat.c_str(), "--dim", "3", "--output",
                   built.c_str()}) == 0);
    SimplicialSet N = sset_from_json(parse_json(slurp_file(built), "nerve"));
    CHECK(N.counts == nerve(FiniteCategory::walking_isomorphism(), 3).counts);

    std::string neck = temp_path("neck");
    CHECK(run_cli({"necklace", "--k", "1", "--from", "0", "--to", "1", "--bound", "2",
                   "--output", neck.c_str()}) == 0);
    Json nj = parse_json(slurp_file(neck), "necklace");
    CHECK(nj["counts"]["single_bead_objects"] == 3);
    FiniteCategory round = category_from_json(nj["category"]);
    CHECK(round.num_objects == nj["category"]["objects"].size());

    std::string fin = temp_path("fin");
    // the finality report is emitted even though the check fails (exit 1)
    CHECK(run_cli({"finality", "--k", "1", "--from", "0", "--to", "1", "--bound", "2",
                   "--output", fin.c_str()}) == 1);
    Json fj = parse_json(slurp_file(fin), "finality");
    CHECK(fj.contains("nondegenerate_into_comma"));
    CHECK(fj["pass"] == false);
    std::remove(cat.c_str());
    std::remove(built.c_str());
    std::remove(neck.c_str());
    std::remove(fin.c_str());
}

TEST_CASE("cli: restrict emits a degeneracy-free document") {
    std::string built = temp_path("r_in"), restricted = temp_path("r_out");
    CHECK(run_cli({"build", "--simplex", "1", "--dim", "3", "--output", built.c_str()}) == 0);
    CHECK(run_cli({"restrict", "--input", built.c_str(), "--output", restricted.c_str()}) == 0);
    Json j = parse_json(slurp_file(restricted), "restricted");
    CHECK(!json_has_degeneracies(j));
    SemisimplicialSet S = semi_from_json(j);
    CHECK(S.counts == standard_simplex(1, 3).counts);
    std::remove(built.c_str());
    std::remove(restricted.c_str());
}
