#include "superhom/report.hpp"

namespace superhom {

Json vector_to_json(const SparseVector& v) {
    Json out = Json::array();
    for (const auto& [i, x] : v) out.push_back({i, x.get_str()});
    return out;
}

SparseVector vector_from_json(const Json& j) {
    SparseVector v;
    for (const auto& e : j) v.emplace_back(e.at(0).get<int>(), Scalar(e.at(1).get<std::string>()));
    for (auto& [i, x] : v) x.canonicalize();
    return v;
}

Json to_json(const ComplexityEstimate& c) {
    return {{"c", c.c},
            {"constant", c.constant.get_str()},
            {"window", {c.window_begin, c.window_end}},
            {"low_confidence", c.low_confidence},
            {"evidence", c.evidence}};
}

ComplexityEstimate complexity_from_json(const Json& j) {
    ComplexityEstimate c;
    c.c = j.at("c").get<int>();
    c.constant = Scalar(j.at("constant").get<std::string>());
    c.constant.canonicalize();
    c.window_begin = j.at("window").at(0).get<int>();
    c.window_end = j.at("window").at(1).get<int>();
    c.low_confidence = j.at("low_confidence").get<bool>();
    c.evidence = j.at("evidence").get<std::string>();
    return c;
}

Json to_json(const ResolutionReport& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"summands", s.summands}, {"dim", s.dim}, {"even", s.parity_dims.even}, {"odd", s.parity_dims.odd}});
    return {{"algebra", r.algebra}, {"module", r.module},   {"dims", r.dims()},
            {"steps", steps},       {"n_max", r.n_max},     {"minimal", r.minimal},
            {"complexity", to_json(r.complexity)}};
}

ResolutionReport resolution_from_json(const Json& j) {
    ResolutionReport r;
    r.algebra = j.at("algebra").get<std::string>();
    r.module = j.at("module").get<std::string>();
    r.n_max = j.at("n_max").get<int>();
    r.minimal = j.at("minimal").get<bool>();
    for (const auto& s : j.at("steps")) {
        ResolutionStep step;
        step.summands = s.at("summands").get<std::vector<std::string>>();
        step.dim = s.at("dim").get<int>();
        step.parity_dims = {s.at("even").get<int>(), s.at("odd").get<int>()};
        r.steps.push_back(std::move(step));
    }
    r.complexity = complexity_from_json(j.at("complexity"));
    return r;
}

Json to_json(const ExtTable& t) {
    Json deg = Json::array();
    for (const auto& d : t.degrees) deg.push_back({{"even", d.even}, {"odd", d.odd}});
    return {{"degrees", deg}};
}

ExtTable ext_from_json(const Json& j) {
    ExtTable t;
    for (const auto& d : j.at("degrees")) t.degrees.push_back({d.at("even").get<int>(), d.at("odd").get<int>()});
    return t;
}

Json to_json(const SupportResult& s) {
    Json v = Json::array();
    for (const auto& [r, free] : s.verdicts) v.push_back({{"rank", r}, {"projective", free}});
    return {{"side", s.side}, {"stratum_rank", s.stratum_rank}, {"verdicts", v}, {"certificate", s.certificate}};
}

SupportResult support_from_json(const Json& j) {
    SupportResult s;
    s.side = j.at("side").get<int>();
    s.stratum_rank = j.at("stratum_rank").get<int>();
    for (const auto& v : j.at("verdicts")) s.verdicts.emplace_back(v.at("rank").get<int>(), v.at("projective").get<bool>());
    s.certificate = j.at("certificate").get<std::string>();
    return s;
}

Json to_json(const OrbitCatalog& c, const LieSuperalgebra& g) {
    Json strata = Json::array();
    for (const auto& s : c.strata) {
        Json named = Json::object();
        for (const auto& [i, x] : s.representative) named[g.label(i)] = x.get_str();
        strata.push_back({{"rank", s.rank},
                          {"closure_order", s.closure_order},
                          {"representative", vector_to_json(s.representative)},
                          {"representative_labels", named}});
    }
    return {{"algebra", c.algebra}, {"side", c.side}, {"strata", strata}, {"chain", c.chain}, {"note", c.note}};
}

OrbitCatalog orbits_from_json(const Json& j) {
    OrbitCatalog c;
    c.algebra = j.at("algebra").get<std::string>();
    c.side = j.at("side").get<int>();
    c.chain = j.at("chain").get<bool>();
    c.note = j.at("note").get<std::string>();
    for (const auto& s : j.at("strata")) {
        OrbitStratum o;
        o.side = c.side;
        o.rank = s.at("rank").get<int>();
        o.closure_order = s.at("closure_order").get<int>();
        o.representative = vector_from_json(s.at("representative"));
        c.strata.push_back(std::move(o));
    }
    return c;
}

Json to_json(const CartanWindow& w) {
    std::vector<int> complete(w.complete.begin(), w.complete.end());
    return {{"weights", w.weights}, {"matrix", w.matrix},   {"complete", complete},
            {"interior", w.interior}, {"block", w.block}, {"symmetric", w.symmetric}};
}

CartanWindow cartan_from_json(const Json& j) {
    CartanWindow w;
    w.weights = j.at("weights").get<std::vector<std::vector<int>>>();
    w.matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
    for (int c : j.at("complete").get<std::vector<int>>()) w.complete.push_back(c != 0);
    w.interior = j.at("interior").get<std::vector<int>>();
    w.block = j.at("block").get<std::vector<int>>();
    w.symmetric = j.at("symmetric").get<bool>();
    return w;
}

}  // namespace superhom
