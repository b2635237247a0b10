#include "bethe/io.hpp"

#include <sstream>

namespace bethe {

using nlohmann::json;

namespace {

const json& require(const json& j, const std::string& field) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(field);
    if (it == j.end()) throw ParseError("missing field '" + field + "'");
    return *it;
}

Rational rational_from_json(const json& j, const std::string& field) {
    if (!j.is_string())
        throw ParseError("field '" + field + "' must be a rational string like \"p/q\"");
    try {
        return Rational::from_string(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError("field '" + field + "': " + e.what());
    }
}

}  // namespace

std::vector<long long> parse_integer_vector(const json& j, const std::string& field) {
    if (!j.is_array()) throw ParseError("field '" + field + "' must be an array of integers");
    std::vector<long long> out;
    for (size_t k = 0; k < j.size(); ++k) {
        const json& v = j[k];
        if (!v.is_number_integer())
            throw ParseError("field '" + field + "[" + std::to_string(k) + "]' must be an integer");
        out.push_back(v.get<long long>());
    }
    return out;
}

Weight parse_weight(const json& j, const std::string& field) {
    return Weight(parse_integer_vector(j, field));
}

nlohmann::json weight_to_json(const Weight& w) {
    json out = json::array();
    for (long long v : w.m) out.push_back(v);
    return out;
}

Polynomial polynomial_from_json(const json& j, const std::string& field) {
    if (!j.is_array())
        throw ParseError("field '" + field + "' must be an array of rational coefficient strings");
    std::vector<Rational> coeffs;
    for (size_t k = 0; k < j.size(); ++k)
        coeffs.push_back(rational_from_json(j[k], field + "[" + std::to_string(k) + "]"));
    return Polynomial(std::move(coeffs));
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
    json out = json::array();
    for (const Rational& c : p.coefficients()) out.push_back(c.str());
    return out;
}

Tuple parse_tuple(const json& j, int rank) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw ParseError("field 'tuple' must be an array of " + std::to_string(rank) +
                         " coefficient arrays");
    std::vector<ProjectivePolynomial> polys;
    for (int i = 0; i < rank; ++i) {
        Polynomial p = polynomial_from_json(j[static_cast<size_t>(i)], "tuple[" + std::to_string(i) + "]");
        if (p.is_zero())
            throw ParseError("field 'tuple[" + std::to_string(i) + "]' is the zero polynomial");
        polys.emplace_back(p);
    }
    return Tuple(std::move(polys));
}

nlohmann::json tuple_to_json(const Tuple& t) {
    json out = json::array();
    for (const auto& p : t.polys()) out.push_back(polynomial_to_json(p.poly()));
    return out;
}

bool problem_has_tuple(const json& j) { return j.is_object() && j.contains("tuple"); }

BetheProblem parse_problem(const json& j, WronskianStep step) {
    const json& jc = require(j, "cartan");
    if (!jc.is_array() || jc.empty()) throw ParseError("field 'cartan' must be a nonempty array of rows");
    std::vector<std::vector<long long>> rows;
    for (size_t i = 0; i < jc.size(); ++i)
        rows.push_back(parse_integer_vector(jc[i], "cartan[" + std::to_string(i) + "]"));

    CartanData cartan = [&rows]() {
        try {
            return build_cartan(rows);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("field 'cartan': ") + e.what());
        }
    }();

    Rational h = rational_from_json(require(j, "h"), "h");

    const json& jp = require(j, "points");
    if (!jp.is_array()) throw ParseError("field 'points' must be an array of rational strings");
    std::vector<Rational> z;
    for (size_t s = 0; s < jp.size(); ++s)
        z.push_back(rational_from_json(jp[s], "points[" + std::to_string(s) + "]"));

    const json& jw = require(j, "weights");
    if (!jw.is_array()) throw ParseError("field 'weights' must be an array of integer vectors");
    std::vector<Weight> lambdas;
    for (size_t s = 0; s < jw.size(); ++s)
        lambdas.push_back(parse_weight(jw[s], "weights[" + std::to_string(s) + "]"));

    try {
        return BetheProblem(std::move(cartan), std::move(h), std::move(z), std::move(lambdas), step);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json problem_to_json(const BetheProblem& p) {
    json out;
    json cartan = json::array();
    for (int i = 0; i < p.rank(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < p.rank(); ++j2) row.push_back(p.cartan().a(i, j2));
        cartan.push_back(row);
    }
    out["cartan"] = cartan;
    out["h"] = p.h().str();
    json points = json::array();
    for (const Rational& zs : p.z()) points.push_back(zs.str());
    out["points"] = points;
    json weights = json::array();
    for (const Weight& w : p.lambdas()) weights.push_back(weight_to_json(w));
    out["weights"] = weights;
    return out;
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "Bethe") return Verdict::Bethe;
    if (s == "FertileNotGeneric") return Verdict::FertileNotGeneric;
    if (s == "NotFertile") return Verdict::NotFertile;
    throw ParseError("unknown verdict \"" + s + "\"");
}

nlohmann::json graph_to_json(const PopulationGraph& g) {
    json out;
    out["wronskian_step"] = to_string(g.step);
    out["truncated"] = g.truncated;
    json nodes = json::array();
    for (const auto& node : g.nodes) {
        json jn;
        jn["id"] = node.id;
        jn["polynomials"] = tuple_to_json(node.tuple);
        json degrees = json::array();
        for (long long l : node.degrees) degrees.push_back(l);
        jn["degrees"] = degrees;
        jn["weight"] = weight_to_json(node.weight);
        jn["verdict"] = to_string(node.verdict);
        jn["depth"] = node.depth;
        nodes.push_back(jn);
    }
    out["nodes"] = nodes;
    json edges = json::array();
    for (const auto& edge : g.edges) {
        json je;
        je["source"] = edge.source;
        je["target"] = edge.target;
        je["direction"] = edge.direction + 1;  // 1-based in files
        je["offset"] = polynomial_to_json(edge.family.offset.poly());
        je["degree_changed"] = edge.family.degree_changed;
        edges.push_back(je);
    }
    out["edges"] = edges;
    return out;
}

PopulationGraph graph_from_json(const json& j) {
    PopulationGraph g;
    g.step = wronskian_step_from_string(require(j, "wronskian_step").get<std::string>());
    const json& jt = require(j, "truncated");
    if (!jt.is_boolean()) throw ParseError("field 'truncated' must be a boolean");
    g.truncated = jt.get<bool>();

    const json& jn = require(j, "nodes");
    if (!jn.is_array()) throw ParseError("field 'nodes' must be an array");
    for (size_t k = 0; k < jn.size(); ++k) {
        const json& node = jn[k];
        const size_t id = require(node, "id").get<size_t>();
        if (id != k) throw ParseError("nodes must be sorted by id");
        const json& jpolys = require(node, "polynomials");
        if (!jpolys.is_array() || jpolys.empty()) throw ParseError("node polynomials must be a nonempty array");
        std::vector<ProjectivePolynomial> polys;
        for (size_t i = 0; i < jpolys.size(); ++i)
            polys.emplace_back(
                polynomial_from_json(jpolys[i], "nodes[" + std::to_string(k) + "].polynomials"));
        Tuple tuple(std::move(polys));
        g.nodes.push_back(PopulationNode{
            id, tuple, parse_integer_vector(require(node, "degrees"), "degrees"),
            parse_weight(require(node, "weight"), "weight"),
            verdict_from_string(require(node, "verdict").get<std::string>()),
            require(node, "depth").get<size_t>()});
    }

    const json& je = require(j, "edges");
    if (!je.is_array()) throw ParseError("field 'edges' must be an array");
    for (size_t k = 0; k < je.size(); ++k) {
        const json& edge = je[k];
        PopulationEdge e;
        e.source = require(edge, "source").get<size_t>();
        e.target = require(edge, "target").get<size_t>();
        if (e.source >= g.nodes.size() || e.target >= g.nodes.size())
            throw ParseError("edge endpoints out of range");
        e.direction = require(edge, "direction").get<int>() - 1;
        const int rank = g.nodes.front().tuple.rank();
        if (e.direction < 0 || e.direction >= rank) throw ParseError("edge direction out of range");
        e.family.direction = e.direction;
        e.family.offset = ProjectivePolynomial(
            polynomial_from_json(require(edge, "offset"), "edges[" + std::to_string(k) + "].offset"));
        e.family.canonical = g.nodes[e.target].tuple[e.direction];
        const json& jd = require(edge, "degree_changed");
        if (!jd.is_boolean()) throw ParseError("field 'degree_changed' must be a boolean");
        e.family.degree_changed = jd.get<bool>();
        e.family.exceptional = !e.family.degree_changed;
        g.edges.push_back(std::move(e));
    }
    return g;
}

std::string graph_to_dot(const PopulationGraph& g) {
    std::ostringstream os;
    os << "digraph population {\n";
    for (const auto& node : g.nodes) {
        os << "  n" << node.id << " [label=\"l=(";
        for (size_t k = 0; k < node.degrees.size(); ++k) os << (k ? "," : "") << node.degrees[k];
        os << ") w=(";
        for (size_t k = 0; k < node.weight.m.size(); ++k) os << (k ? "," : "") << node.weight.m[k];
        os << ") " << to_string(node.verdict) << "\"];\n";
    }
    for (const auto& edge : g.edges)
        os << "  n" << edge.source << " -> n" << edge.target << " [label=\"" << edge.direction + 1
           << "\"];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json harness_report_to_json(const HarnessReport& report) {
    json out;
    out["trials_per_type"] = report.trials_per_type;
    out["self_factor_convention_ok"] = report.self_factor_convention_ok;
    json types;
    for (const auto& [name, tally] : report.per_type) {
        json jt;
        jt["instances"] = tally.instances;
        jt["generic"] = tally.generic;
        jt["fertile"] = tally.fertile;
        jt["bethe"] = tally.bethe;
        jt["direct_applicable"] = tally.direct_applicable;
        jt["direct_pass"] = tally.direct_pass;
        types[name] = jt;
    }
    out["per_type"] = types;
    out["discrepancies"] = report.discrepancies;
    return out;
}

}  // namespace bethe
