#include "qclaw/json_io.hpp"

#include <sstream>

namespace qclaw {

namespace {

Json intmat_to_json(const IntMat& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(row);
    return a;
}

IntMat intmat_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " is not an array");
    IntMat m;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError(std::string(what) + " row is not an array");
        m.push_back(row.get<IntVec>());
    }
    return m;
}

} // namespace

Json torus_element_to_json(const TorusElement& f) {
    Json terms = Json::array();
    for (const auto& [a, c] : f.terms()) {
        Json t;
        t["exponent"] = a;
        t["coeff"] = c.to_string();
        terms.push_back(std::move(t));
    }
    return terms;
}

TorusElement torus_element_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("torus element is not an array of terms");
    TorusElement f;
    for (const auto& t : j) {
        if (!t.contains("exponent") || !t.contains("coeff"))
            throw ParseError("torus term needs 'exponent' and 'coeff'");
        f.add_term(t["exponent"].get<ExpVec>(), QInt::parse(t["coeff"].get<std::string>()));
    }
    return f;
}

Json seed_to_json(const QuantumSeed& seed) {
    const Int l = seed.size();
    Json j;
    j["schema"] = kSchemaTag;
    IntVec indices(static_cast<size_t>(l));
    for (Int i = 0; i < l; ++i) indices[static_cast<size_t>(i)] = i + 1;
    j["indices"] = indices;
    j["labels"] = seed.labels();
    IntVec ex1, fr1;
    for (Int i = 0; i < l; ++i)
        (seed.is_exchangeable(i) ? ex1 : fr1).push_back(i + 1);
    j["exchangeable"] = ex1;
    j["frozen"] = fr1;
    j["L"] = intmat_to_json(seed.L().entries());
    j["L_init"] = intmat_to_json(seed.L_init().entries());
    j["Btilde"] = intmat_to_json(seed.Btilde());
    Json wts = Json::array();
    for (const auto& w : seed.weights()) wts.push_back(w.coords);
    j["weights"] = wts;
    Json exps = Json::array();
    for (const auto& e : seed.expansions()) exps.push_back(torus_element_to_json(e));
    j["expansions"] = exps;
    if (seed.cartan()) j["cartan"] = intmat_to_json(seed.cartan()->matrix());
    if (seed.word()) {
        IntVec w1;
        for (Int i : seed.word()->letters) w1.push_back(i + 1);
        j["word"] = w1;
    }
    return j;
}

QuantumSeed seed_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("seed JSON is not an object");
    if (j.value("schema", std::string()) != kSchemaTag)
        throw ParseError("missing or unsupported 'schema' tag");
    for (const char* f : {"exchangeable", "L", "L_init", "Btilde", "weights", "expansions"})
        if (!j.contains(f)) throw ParseError(std::string("seed JSON lacks '") + f + "'");

    LambdaMatrix L(intmat_from_json(j["L"], "L"));
    LambdaMatrix L_init(intmat_from_json(j["L_init"], "L_init"));
    IntMat btilde = intmat_from_json(j["Btilde"], "Btilde");
    IntVec ex;
    for (Int k : j["exchangeable"].get<IntVec>()) ex.push_back(k - 1);
    std::sort(ex.begin(), ex.end());
    std::vector<RootVec> weights;
    for (const auto& w : j["weights"]) weights.push_back(RootVec{w.get<IntVec>()});
    std::vector<TorusElement> exps;
    for (const auto& e : j["expansions"]) exps.push_back(torus_element_from_json(e));
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j["labels"].get<std::vector<std::string>>();
    } else {
        for (size_t i = 0; i < exps.size(); ++i) labels.push_back("x" + std::to_string(i + 1));
    }
    std::optional<CartanDatum> cartan;
    if (j.contains("cartan")) cartan = CartanDatum(intmat_from_json(j["cartan"], "cartan"));
    std::optional<ReducedWord> word;
    if (j.contains("word")) {
        IntVec w;
        for (Int i : j["word"].get<IntVec>()) w.push_back(i - 1);
        word = ReducedWord{std::move(w)};
    }
    return QuantumSeed(std::move(L), std::move(btilde), std::move(ex), std::move(weights),
                       std::move(exps), std::move(L_init), std::move(labels), std::move(cartan),
                       std::move(word));
}

Json graph_to_json(const ExchangeGraph& g, bool include_seeds) {
    Json j;
    j["schema"] = kSchemaTag;
    j["root"] = g.root;
    j["closed"] = g.closed;
    j["node_count"] = g.node_count();
    const auto canon = g.canonical_edges();
    j["edge_count"] = canon.size();
    Json edges = Json::array();
    for (const auto& [a, k, b] : canon) edges.push_back(IntVec{a, k + 1, b});
    j["edges"] = edges;
    Json nodes = Json::array();
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        Json n;
        n["id"] = i;
        if (include_seeds) n["seed"] = seed_to_json(g.nodes[i]);
        nodes.push_back(std::move(n));
    }
    j["nodes"] = nodes;
    return j;
}

std::string graph_to_dot(const ExchangeGraph& g) {
    std::ostringstream os;
    os << "graph exchange {\n";
    os << "  node [shape=circle];\n";
    for (Int i = 0; i < g.node_count(); ++i) os << "  n" << i << ";\n";
    for (const auto& [a, k, b] : g.canonical_edges())
        os << "  n" << a << " -- n" << b << " [label=\"" << (k + 1) << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace qclaw
