#include "sstk/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sstk/json_io.hpp"

namespace sstk {

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Json& j, const std::string& out_path) {
    std::string doc = j.dump() + "\n";
    if (out_path == "-") {
        std::cout << doc;
        std::cout.flush();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw input_error("cannot open output file: " + out_path);
        out << doc;
    }
}

SimplicialSet load_sset(const std::string& path) {
    Json j = parse_json(slurp(path), "input");
    if (!json_has_degeneracies(j))
        throw input_error("expected a simplicial-set document with degeneracy tables");
    return sset_from_json(j);
}

SemisimplicialSet load_semi_or_restrict(const std::string& path) {
    Json j = parse_json(slurp(path), "input");
    if (json_has_degeneracies(j)) return restrict_sset(sset_from_json(j));
    return semi_from_json(j);
}

struct Options {
    std::string input = "-";
    std::string output = "-";
    int trunc_dim = 6;
    int max_dim = 3;
    int max_deg = 2;
    int bound = 3;
    unsigned seed = 0;
    int budget = 10000;
    int basepoint = 0;
    int k = 0;
    int from = 0;
    int to = 0;
    int max_m = 3;
    int simplex = -1;
    int nerve_poset = -1;
    bool counterexample = false;
    bool walking_iso = false;
    bool nerve_input = false;
    int random_count = 0;
    int max_per_dim = 5;
};

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"desk-scale toolkit for truncated simplicial sets"};
    app.require_subcommand(1);
    Options o;

    auto add_io = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input) cmd->add_option("--input", o.input, "input path or - for stdin");
        cmd->add_option("--output", o.output, "output path or - for stdout");
    };

    auto* build = app.add_subcommand("build", "construct a simplicial set");
    build->add_option("--simplex", o.simplex, "standard k-simplex");
    build->add_option("--nerve-poset", o.nerve_poset, "nerve of the linear order [k]");
    build->add_flag("--walking-iso", o.walking_iso, "nerve of the walking isomorphism");
    build->add_flag("--counterexample", o.counterexample,
                    "the two-composite witness with parallel edges");
    build->add_flag("--nerve", o.nerve_input, "nerve of the category given by --input");
    build->add_option("--trunc-dim,--dim", o.trunc_dim, "truncation dimension");
    add_io(build);

    auto* restrict_cmd = app.add_subcommand("restrict", "drop degeneracy tables");
    add_io(restrict_cmd);

    auto* plus_cmd = app.add_subcommand("plus", "free simplicial set on a semisimplicial set");
    add_io(plus_cmd);

    auto* counit_cmd = app.add_subcommand("counit-check",
                                          "validate the counit plus(restrict(X)) -> X");
    add_io(counit_cmd);

    auto* triangle = app.add_subcommand("triangle-check", "verify both triangle identities");
    triangle->add_option("--random", o.random_count, "check N seeded random semisimplicial sets");
    triangle->add_option("--seed", o.seed, "seed for randomized checks");
    triangle->add_option("--trunc-dim,--dim", o.trunc_dim, "truncation for random inputs");
    triangle->add_option("--max-per-dim", o.max_per_dim, "random size cap per dimension");
    add_io(triangle);

    auto* quasi = app.add_subcommand("quasicheck", "report unfilled inner horns");
    quasi->add_option("--max-dim", o.max_dim, "largest horn dimension");
    add_io(quasi);

    auto* hom = app.add_subcommand("homology", "integer homology of normalized chains");
    hom->add_option("--max-deg", o.max_deg, "largest degree reported");
    add_io(hom);

    auto* pi1 = app.add_subcommand("pi1", "edge-path presentation and triviality check");
    pi1->add_option("--basepoint", o.basepoint, "basepoint vertex");
    pi1->add_option("--budget", o.budget, "coset enumeration budget");
    add_io(pi1);

    auto* probe = app.add_subcommand("probe", "mapping-space probe over the localization");
    probe->add_option("--k", o.k, "simplex dimension k")->required();
    probe->add_option("--from", o.from, "source vertex");
    probe->add_option("--to", o.to, "target vertex");
    probe->add_option("--bound", o.bound, "max total necklace dimension");
    probe->add_option("--max-deg", o.max_deg, "homology degree bound");
    probe->add_option("--budget", o.budget, "coset enumeration budget");
    add_io(probe, false);

    auto* neck = app.add_subcommand("necklace", "bounded necklace comma category");
    neck->add_option("--k", o.k, "build over the localization of the k-simplex");
    neck->add_option("--input", o.input, "or over this simplicial set");
    neck->add_option("--from", o.from, "source vertex");
    neck->add_option("--to", o.to, "target vertex");
    neck->add_option("--bound", o.bound, "max total necklace dimension");
    neck->add_option("--output", o.output, "output path");

    auto* fin = app.add_subcommand("finality", "fiber checks for both inclusions");
    fin->add_option("--k", o.k, "simplex dimension k")->required();
    fin->add_option("--from", o.from, "source vertex");
    fin->add_option("--to", o.to, "target vertex");
    fin->add_option("--bound", o.bound, "max total necklace dimension");
    add_io(fin, false);

    auto* fiso = app.add_subcommand("f-iso", "single-bead category vs product category");
    fiso->add_option("--k", o.k, "simplex dimension k")->required();
    fiso->add_option("--max-m", o.max_m, "max bead dimension");
    add_io(fiso, false);

    auto* count = app.add_subcommand("count", "per-dimension simplex counts");
    add_io(count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            int picked = (o.simplex >= 0) + (o.nerve_poset >= 0) + o.counterexample +
                         o.walking_iso + o.nerve_input;
            if (picked != 1)
                throw input_error("build: pick exactly one of --simplex, --nerve-poset, "
                                  "--walking-iso, --counterexample, --nerve");
            SimplicialSet X;
            if (o.simplex >= 0) X = standard_simplex(o.simplex, o.trunc_dim);
            else if (o.nerve_poset >= 0)
                X = nerve(FiniteCategory::poset_chain(o.nerve_poset), o.trunc_dim);
            else if (o.walking_iso)
                X = nerve(FiniteCategory::walking_isomorphism(), o.trunc_dim);
            else if (o.counterexample)
                X = counterexample_input(o.trunc_dim);
            else
                X = nerve(category_from_json(parse_json(slurp(o.input), "category")), o.trunc_dim);
            emit(sset_to_json(X), o.output);
            std::cerr << "built simplicial set, truncation " << X.trunc_dim << "\n";
            return 0;
        }
        if (restrict_cmd->parsed()) {
            SimplicialSet X = load_sset(o.input);
            emit(semi_to_json(restrict_sset(X)), o.output);
            return 0;
        }
        if (plus_cmd->parsed()) {
            SemisimplicialSet X = load_semi_or_restrict(o.input);
            PlusSet P = plus(X);
            emit(plus_to_json(P), o.output);
            std::cerr << "plus construction with " << P.sset().size(0) << " vertices\n";
            return 0;
        }
        if (counit_cmd->parsed()) {
            SimplicialSet X = load_sset(o.input);
            PlusSet P = plus(restrict_sset(X));
            SSetMap eps = counit(X, P);
            auto violations = simplicial_map_violations(P.sset(), X, eps);
            bool surjective = true;
            for (int n = 0; n <= X.trunc_dim; ++n) {
                std::vector<char> hit(static_cast<size_t>(X.size(n)), 0);
                for (int id = 0; id < P.sset().size(n); ++id)
                    hit[static_cast<size_t>(eps(n, id))] = 1;
                for (char h : hit)
                    if (!h) surjective = false;
            }
            Json j;
            j["simplicial_map"] = violations.empty();
            j["surjective"] = surjective;
            j["violations"] = violations;
            emit(j, o.output);
            return violations.empty() && surjective ? 0 : 1;
        }
        if (triangle->parsed()) {
            TriangleReport total;
            if (o.random_count > 0) {
                for (int i = 0; i < o.random_count; ++i) {
                    SemisimplicialSet X =
                        random_semisimplicial(o.trunc_dim, o.max_per_dim, o.seed + static_cast<unsigned>(i));
                    SimplicialSet Y = plus(X).sset();
                    TriangleReport r = check_triangle_identities(X, Y);
                    if (!r.ok) total.ok = false;
                    total.violations.insert(total.violations.end(), r.violations.begin(),
                                            r.violations.end());
                }
            } else {
                SimplicialSet Y = load_sset(o.input);
                TriangleReport r = check_triangle_identities(restrict_sset(Y), Y);
                total = r;
            }
            emit(triangle_to_json(total), o.output);
            std::cerr << (total.ok ? "triangle identities hold\n"
                                   : "triangle identities violated\n");
            return total.ok ? 0 : 1;
        }
        if (quasi->parsed()) {
            SimplicialSet X = load_sset(o.input);
            QuasiReport r = quasicheck(X, o.max_dim);
            emit(quasireport_to_json(r), o.output);
            std::cerr << "checked " << r.horns_checked << " inner horns, " << r.unfilled.size()
                      << " unfilled\n";
            return r.unfilled.empty() ? 0 : 1;
        }
        if (hom->parsed()) {
            SimplicialSet X = load_sset(o.input);
            ChainComplex C = normalized_chains(X);
            check_boundary_squares_to_zero(C);
            emit(homology_to_json(homology(C, o.max_deg)), o.output);
            return 0;
        }
        if (pi1->parsed()) {
            SimplicialSet X = load_sset(o.input);
            GroupPresentation P = pi1_presentation(X, o.basepoint);
            TrivialityResult t = is_trivial_group(P, o.budget);
            emit(presentation_to_json(P, t), o.output);
            return 0;
        }
        if (probe->parsed()) {
            MappingSpaceProbe r = mapping_space_probe(o.k, o.from, o.to, o.bound, o.max_deg,
                                                      o.budget);
            emit(probe_to_json(r), o.output);
            std::cerr << r.verdict << "\n";
            return r.pass ? 0 : 1;
        }
        if (neck->parsed()) {
            SimplicialSet X;
            if (neck->count("--input")) X = load_sset(o.input);
            else X = localization_pushout(o.k, o.bound).P;
            CommaCategory C = comma_category(X, o.from, o.to, CommaBounds{o.bound, o.bound});
            Subcategory N = full_subcategory_N(C, X);
            Subcategory F = full_subcategory_F(C, X);
            Json j;
            j["category"] = category_to_json(C.cat);
            j["counts"] = {{"comma_objects", C.objects.size()},
                           {"comma_morphisms", C.morphisms.size()},
                           {"nondegenerate_objects", N.cat.num_objects},
                           {"nondegenerate_morphisms", N.cat.num_morphisms()},
                           {"single_bead_objects", F.cat.num_objects},
                           {"single_bead_morphisms", F.cat.num_morphisms()}};
            emit(j, o.output);
            return 0;
        }
        if (fin->parsed()) {
            Localization loc = localization_pushout(o.k, o.bound);
            CommaCategory C = comma_category(loc.P, o.from, o.to, CommaBounds{o.bound, o.bound});
            Subcategory N = full_subcategory_N(C, loc.P);
            FinalityReport rN = check_finality(N, C.cat, Extremal::initial);
            Subcategory Fc = full_subcategory_F(C, loc.P);
            std::vector<int> f_in_n;
            for (int fo : Fc.object_in_big)
                for (size_t i = 0; i < N.object_in_big.size(); ++i)
                    if (N.object_in_big[i] == fo) f_in_n.push_back(static_cast<int>(i));
            Subcategory F = full_subcategory_of(N.cat, f_in_n);
            FinalityReport rF = check_finality(F, N.cat, Extremal::terminal);
            Json j;
            j["nondegenerate_into_comma"] = finality_to_json(rN);
            j["single_bead_into_nondegenerate"] = finality_to_json(rF);
            j["pass"] = rN.pass && rF.pass;
            emit(j, o.output);
            return rN.pass && rF.pass ? 0 : 1;
        }
        if (fiso->parsed()) {
            FIsoReport r = f_iso_check(o.k, o.max_m);
            emit(f_iso_to_json(r), o.output);
            return r.pass ? 0 : 1;
        }
        if (count->parsed()) {
            SimplicialSet X = load_sset(o.input);
            auto flags = X.nondegenerate_flags();
            Json j;
            j["counts"] = X.counts;
            Json nd = Json::array();
            for (int n = 0; n <= X.trunc_dim; ++n) {
                int c = 0;
                for (char f : flags[static_cast<size_t>(n)]) c += f;
                nd.push_back(c);
            }
            j["nondegenerate"] = std::move(nd);
            emit(j, o.output);
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const truncation_error& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace sstk
