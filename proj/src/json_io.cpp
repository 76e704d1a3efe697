#include "anticomm/json_io.hpp"

namespace anticomm {

namespace {

const Json& require_key(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

Index require_count(const Json& j, const char* key) {
    const Json& v = require_key(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError(std::string("'") + key + "' must be a nonnegative integer");
    return v.get<Index>();
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("rational entries must be strings \"p\" or \"p/q\"");
}

Json to_json(const RatMatrix& m) {
    Json entries = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RatMatrix matrix_from_json(const Json& j) {
    const Index rows = require_count(j, "rows");
    const Index cols = require_count(j, "cols");
    const Json& entries = require_key(j, "entries");
    if (!entries.is_array() || static_cast<Index>(entries.size()) != rows)
        throw ParseError("'entries' must be an array of 'rows' rows");
    RatMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const Json& row = entries[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw ParseError("matrix row " + std::to_string(i) + " must have 'cols' entries");
        for (Index k = 0; k < cols; ++k) m(i, k) = rational_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("partition must be an array of positive integers");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("partition parts must be integers");
        parts.push_back(v.get<int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const JordanData& data) {
    Json out = Json::array();
    for (const auto& b : data.blocks)
        out.push_back(Json{{"eigenvalue", to_string(b.eigenvalue)}, {"partition", to_json(b.partition)}});
    return out;
}

JordanData jordan_data_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("Jordan data must be an array");
    JordanData data;
    for (const auto& b : j)
        data.blocks.push_back({rational_from_json(require_key(b, "eigenvalue")),
                               partition_from_json(require_key(b, "partition"))});
    try {
        data.validate();
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
    return data;
}

Json to_json(const ComponentTriple& t) { return Json{{"p", t.p}, {"m", t.m}, {"r", t.r}, {"n", t.n()}}; }

ComponentTriple triple_from_json(const Json& j) {
    const ComponentTriple t{static_cast<int>(require_count(j, "p")), static_cast<int>(require_count(j, "m")),
                            static_cast<int>(require_count(j, "r"))};
    if (j.contains("n") && j.at("n") != t.n()) throw ParseError("triple: 2p + m + r != n");
    return t;
}

Json to_json(const ClassificationReport& rep) {
    Json paired = Json::array();
    for (const auto& p : rep.paired)
        paired.push_back(Json{{"a", to_string(p.a)},
                              {"nu", to_json(p.nu)},
                              {"mu", to_json(p.mu)},
                              {"p", p.p},
                              {"m", p.m}});
    Json singletons = Json::array();
    for (const auto& s : rep.singletons)
        singletons.push_back(Json{{"a", to_string(s.a)}, {"multiplicity", s.multiplicity}});
    return Json{{"triple", to_json(rep.triple)},
                {"nilpotentPart",
                 Json{{"partition", to_json(rep.nilpotent.partition)}, {"p0", rep.nilpotent.p0}, {"r", rep.nilpotent.r}}},
                {"pairedPart", std::move(paired)},
                {"singletonPart", std::move(singletons)}};
}

Json to_json(const CommutantBasis& basis) {
    Json elems = Json::array();
    for (const auto& e : basis.basis) elems.push_back(to_json(e));
    return Json{{"A", to_json(basis.A)}, {"sigma", value(basis.sigma)}, {"dim", basis.dim()}, {"basis", std::move(elems)}};
}

Json to_json(const DimReport& rep) {
    return Json{{"tangentDim", rep.tangentDim},
                {"orbitDim", rep.orbitDim},
                {"stabilizerDim", rep.stabilizerDim},
                {"fiberDim", rep.fiberDim}};
}

Json to_json(const InvariantVector& inv) {
    Json values = Json::array();
    for (const auto& [ij, t] : inv.values) values.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"t", to_string(t)}});
    return Json{{"d", inv.degreeBound}, {"values", std::move(values)}};
}

InvariantVector invariants_from_json(const Json& j) {
    InvariantVector inv;
    inv.degreeBound = static_cast<int>(require_count(j, "d"));
    const Json& values = require_key(j, "values");
    if (!values.is_array()) throw ParseError("'values' must be an array");
    for (const auto& v : values)
        inv.values[{static_cast<int>(require_count(v, "i")), static_cast<int>(require_count(v, "j"))}] =
            rational_from_json(require_key(v, "t"));
    return inv;
}

Json to_json(const PlanePointMultiset& pts) {
    Json out = Json::array();
    for (const auto& p : pts.points) out.push_back(Json{{"x", to_string(p.x)}, {"y", to_string(p.y)}});
    return out;
}

std::pair<RatMatrix, RatMatrix> pair_from_json(const Json& j) {
    return {matrix_from_json(require_key(j, "A")), matrix_from_json(require_key(j, "B"))};
}

}  // namespace anticomm
