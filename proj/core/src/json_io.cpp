#include "sstk/json_io.hpp"

#include <sstream>

namespace sstk {

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(what + ": JSON parse error at byte " + std::to_string(e.byte) + ": " +
                          e.what());
    }
}

Json sset_to_json(const SimplicialSet& X) {
    Json j;
    j["trunc_dim"] = X.trunc_dim;
    j["dims"] = Json::array();
    for (int n = 0; n <= X.trunc_dim; ++n) {
        Json d;
        d["count"] = X.size(n);
        d["faces"] = n >= 1 ? Json(X.faces[static_cast<size_t>(n)]) : Json::array();
        d["degens"] = n < X.trunc_dim ? Json(X.degens[static_cast<size_t>(n)]) : Json::array();
        j["dims"].push_back(std::move(d));
    }
    return j;
}

Json semi_to_json(const SemisimplicialSet& X) {
    Json j;
    j["trunc_dim"] = X.trunc_dim;
    j["dims"] = Json::array();
    for (int n = 0; n <= X.trunc_dim; ++n) {
        Json d;
        d["count"] = X.size(n);
        d["faces"] = n >= 1 ? Json(X.faces[static_cast<size_t>(n)]) : Json::array();
        j["dims"].push_back(std::move(d));
    }
    return j;
}

bool json_has_degeneracies(const Json& j) {
    return j.contains("dims") && !j["dims"].empty() && j["dims"][0].contains("degens");
}

namespace {

void read_dims(const Json& j, int& trunc, std::vector<int>& counts, StructureTable& faces,
               StructureTable* degens) {
    if (!j.contains("trunc_dim") || !j.contains("dims"))
        throw input_error("simplicial set document needs trunc_dim and dims");
    trunc = j["trunc_dim"].get<int>();
    const Json& dims = j["dims"];
    if (static_cast<int>(dims.size()) != trunc + 1)
        throw input_error("dims length does not match trunc_dim");
    counts.resize(static_cast<size_t>(trunc) + 1);
    faces.resize(static_cast<size_t>(trunc) + 1);
    if (degens) degens->resize(static_cast<size_t>(trunc) + 1);
    for (int n = 0; n <= trunc; ++n) {
        const Json& d = dims[static_cast<size_t>(n)];
        counts[static_cast<size_t>(n)] = d.at("count").get<int>();
        if (n >= 1)
            faces[static_cast<size_t>(n)] = d.at("faces").get<std::vector<std::vector<int>>>();
        if (degens && n < trunc)
            (*degens)[static_cast<size_t>(n)] =
                d.at("degens").get<std::vector<std::vector<int>>>();
    }
}

}  // namespace

SimplicialSet sset_from_json(const Json& j) {
    SimplicialSet X;
    read_dims(j, X.trunc_dim, X.counts, X.faces, &X.degens);
    X.validate();
    return X;
}

SemisimplicialSet semi_from_json(const Json& j) {
    SemisimplicialSet X;
    read_dims(j, X.trunc_dim, X.counts, X.faces, nullptr);
    X.validate();
    return X;
}

Json category_to_json(const FiniteCategory& C) {
    Json j;
    j["objects"] = Json::array();
    for (int x = 0; x < C.num_objects; ++x) j["objects"].push_back(x);
    j["morphisms"] = Json::array();
    for (int m = 0; m < C.num_morphisms(); ++m) {
        Json e;
        e["src"] = C.mor_src[static_cast<size_t>(m)];
        e["tgt"] = C.mor_tgt[static_cast<size_t>(m)];
        j["morphisms"].push_back(std::move(e));
    }
    j["compose"] = C.comp;
    j["ids"] = C.identities;
    return j;
}

FiniteCategory category_from_json(const Json& j) {
    FiniteCategory C;
    C.num_objects = static_cast<int>(j.at("objects").size());
    for (const auto& m : j.at("morphisms")) {
        C.mor_src.push_back(m.at("src").get<int>());
        C.mor_tgt.push_back(m.at("tgt").get<int>());
    }
    C.comp = j.at("compose").get<std::vector<std::vector<int>>>();
    C.identities = j.at("ids").get<std::vector<int>>();
    C.validate();
    return C;
}

Json plus_to_json(const PlusSet& P) {
    Json j = sset_to_json(P.sset());
    Json pairs = Json::array();
    for (int n = 0; n <= P.sset().trunc_dim; ++n) {
        Json level = Json::array();
        for (int id = 0; id < P.sset().size(n); ++id) {
            const EzPair& p = P.pair(n, id);
            Json e;
            e["base"] = p.base;
            e["surj"] = p.surj.values;
            level.push_back(std::move(e));
        }
        pairs.push_back(std::move(level));
    }
    j["plus_pairs"] = std::move(pairs);
    return j;
}

Json horn_to_json(const HornInstance& h) {
    Json j;
    j["dim"] = h.dim;
    j["missing_face"] = h.missing_face;
    Json faces = Json::array();
    for (int i = 0; i <= h.dim; ++i)
        if (i == h.missing_face) faces.push_back(nullptr);
        else faces.push_back(h.faces[static_cast<size_t>(i)]);
    j["faces"] = std::move(faces);
    return j;
}

Json quasireport_to_json(const QuasiReport& r) {
    Json j;
    j["max_dim"] = r.max_dim;
    j["horns_checked"] = r.horns_checked;
    Json list = Json::array();
    for (const auto& e : r.unfilled) {
        Json entry;
        entry["horn"] = horn_to_json(e.horn);
        entry["status"] = "unfilled";
        list.push_back(std::move(entry));
    }
    j["unfilled"] = std::move(list);
    j["quasi_up_to_max_dim"] = r.quasi_up_to_max_dim();
    j["caveat"] = r.caveat;
    return j;
}

Json homology_to_json(const std::vector<AbelianGroup>& groups) {
    Json j = Json::array();
    for (size_t k = 0; k < groups.size(); ++k) {
        Json g;
        g["degree"] = k;
        g["betti"] = groups[k].betti;
        Json tor = Json::array();
        for (const Int& d : groups[k].torsion) tor.push_back(d.convert_to<long long>());
        g["torsion"] = std::move(tor);
        j.push_back(std::move(g));
    }
    return j;
}

namespace {

std::string word_to_string(const std::vector<int>& w) {
    if (w.empty()) return "1";
    std::string s;
    for (int l : w) {
        if (!s.empty()) s += "*";
        s += (l > 0 ? "g" : "G") + std::to_string(std::abs(l) - 1);
    }
    return s;
}

}  // namespace

Json presentation_to_json(const GroupPresentation& P, const TrivialityResult& t) {
    Json j;
    j["generators"] = P.num_generators;
    Json rel = Json::array();
    for (const auto& r : P.relators) rel.push_back(word_to_string(r));
    j["relators"] = std::move(rel);
    j["generator_edges"] = P.generator_edges;
    switch (t.verdict) {
        case Triviality::trivial: j["triviality"] = "trivial"; break;
        case Triviality::nontrivial: j["triviality"] = "nontrivial"; break;
        default: j["triviality"] = "unknown";
    }
    j["method"] = t.method;
    return j;
}

Json triangle_to_json(const TriangleReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["violations"] = r.violations;
    return j;
}

Json contractibility_to_json(const ContractibilityReport& r) {
    Json j;
    j["max_deg"] = r.max_deg;
    j["connected"] = r.connected;
    j["homology"] = homology_to_json(r.groups);
    j["reduced_homology_trivial"] = r.reduced_homology_trivial;
    switch (r.pi1) {
        case Triviality::trivial: j["pi1"] = "trivial"; break;
        case Triviality::nontrivial: j["pi1"] = "nontrivial"; break;
        default: j["pi1"] = "unknown";
    }
    j["pass"] = r.pass;
    j["verdict"] = r.verdict;
    return j;
}

Json finality_to_json(const FinalityReport& r) {
    Json j;
    j["mode"] = r.mode == Extremal::initial ? "initial" : "terminal";
    j["pass"] = r.pass;
    Json fibers = Json::array();
    for (const auto& f : r.fibers) {
        Json e;
        e["object"] = f.big_object;
        e["fiber_objects"] = f.fiber_objects;
        e["has_extremal"] = f.has_extremal;
        e["witness"] = f.witness;
        fibers.push_back(std::move(e));
    }
    j["fibers"] = std::move(fibers);
    return j;
}

Json f_iso_to_json(const FIsoReport& r) {
    Json j;
    j["k"] = r.k;
    j["max_m"] = r.max_m;
    j["objects"] = {{"single_bead", r.objects_single_bead}, {"product", r.objects_product}};
    j["morphisms"] = {{"single_bead", r.morphisms_single_bead}, {"product", r.morphisms_product}};
    j["object_bijection"] = r.object_bijection;
    j["morphism_bijection"] = r.morphism_bijection;
    j["functorial"] = r.functorial;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    return j;
}

Json probe_to_json(const MappingSpaceProbe& r) {
    Json j;
    j["reduction_chain"] = Json::array();
    j["reduction_chain"].push_back(
        {{"category", "comma"}, {"objects", r.comma_objects}, {"morphisms", r.comma_morphisms}});
    j["reduction_chain"].push_back(
        {{"category", "nondegenerate_beads"}, {"objects", r.n_objects}, {"morphisms", r.n_morphisms}});
    j["reduction_chain"].push_back(
        {{"category", "single_bead"}, {"objects", r.f_objects}, {"morphisms", r.f_morphisms}});
    j["finality"] = {{"nondegenerate_into_comma", finality_to_json(r.finality_N)},
                     {"single_bead_into_nondegenerate", finality_to_json(r.finality_F)}};
    j["homology"] = contractibility_to_json(r.probe);
    j["verdict"] = r.verdict;
    j["pass"] = r.pass;
    j["bounds"] = {{"k", r.k},       {"x", r.x},
                   {"y", r.y},       {"max_total_dim", r.bound},
                   {"max_deg", r.max_deg}};
    return j;
}

}  // namespace sstk
