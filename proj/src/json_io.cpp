#include "padlat/json_io.hpp"

namespace padlat {

namespace {

long get_prime(const Json& j, const std::string& where) {
    if (!j.is_object())
        throw ParseError(where + ": expected a JSON object");
    if (!j.contains("p") || !j["p"].is_number_integer())
        throw ParseError(where + ": \"p\" must be an integer");
    return j["p"].get<long>();
}

int get_dim(const Json& j, const std::string& where) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError(where + ": \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 1)
        throw ParseError(where + ": \"n\" must be positive");
    return n;
}

Scalar get_scalar(const Json& j, const std::string& at) {
    if (!j.is_string())
        throw ParseError(at + ": scalars are strings like \"3\" or \"-1/2\"");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(at + ": " + e.what());
    }
}

std::vector<std::vector<Scalar>> get_generators(const Json& j, int len,
                                                const std::string& where) {
    if (!j.contains("generators") || !j["generators"].is_array())
        throw ParseError(where + ": \"generators\" must be an array");
    std::vector<std::vector<Scalar>> gens;
    int gi = 0;
    for (const Json& row : j["generators"]) {
        std::string at = where + ": generators[" + std::to_string(gi) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != len)
            throw ParseError(at + ": expected an array of " + std::to_string(len) +
                             " scalars");
        std::vector<Scalar> g;
        int ci = 0;
        for (const Json& cell : row)
            g.push_back(get_scalar(cell, at + "[" + std::to_string(ci++) + "]"));
        gens.push_back(std::move(g));
        ++gi;
    }
    return gens;
}

PadicContext get_context(const Json& j, const std::string& where) {
    long p = get_prime(j, where);
    try {
        return PadicContext(p);
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": \"p\": " + e.what());
    }
}

} // namespace

Json lattice_to_json(const Lattice& l) {
    Json j;
    j["p"] = l.context().p();
    j["n"] = l.dim();
    Json gens = Json::array();
    for (int c = 0; c < l.dim(); ++c) {
        Json col = Json::array();
        for (int i = 0; i < l.dim(); ++i)
            col.push_back(format_scalar(l.basis()(i, c)));
        gens.push_back(std::move(col));
    }
    j["generators"] = std::move(gens);
    return j;
}

Lattice lattice_from_json(const Json& j, const std::string& where) {
    PadicContext ctx = get_context(j, where);
    int n = get_dim(j, where);
    auto gens = get_generators(j, n, where);
    try {
        return Lattice::from_generators(ctx, n, gens);
    } catch (const RankError& e) {
        throw ParseError(where + ": generators: " + e.what());
    }
}

Json relation_to_json(const Relation& h) {
    Json j;
    j["p"] = h.context().p();
    j["n"] = h.dim();
    j["blocks"] = Json::array({"source", "target"});
    Json gens = Json::array();
    for (int c = 0; c < 2 * h.dim(); ++c) {
        Json col = Json::array();
        for (int i = 0; i < 2 * h.dim(); ++i)
            col.push_back(format_scalar(h.carrier().basis()(i, c)));
        gens.push_back(std::move(col));
    }
    j["generators"] = std::move(gens);
    return j;
}

Relation relation_from_json(const Json& j, const std::string& where) {
    PadicContext ctx = get_context(j, where);
    int n = get_dim(j, where);
    if (j.contains("blocks")) {
        const Json& b = j["blocks"];
        if (!b.is_array() || b.size() != 2 || b[0] != "source" || b[1] != "target")
            throw ParseError(where +
                             ": \"blocks\" must be [\"source\", \"target\"] when present");
    }
    auto gens = get_generators(j, 2 * n, where);
    try {
        return Relation::from_generators(ctx, n, gens);
    } catch (const RankError& e) {
        throw ParseError(where + ": generators: " + e.what());
    }
}

Json matrix_to_json(const PadicContext& ctx, const Matrix& m) {
    Json j;
    j["p"] = ctx.p();
    j["n"] = m.rows();
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(format_scalar(m(i, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Matrix matrix_from_json(const Json& j, const std::string& where, PadicContext* ctx_out) {
    PadicContext ctx = get_context(j, where);
    int n = get_dim(j, where);
    if (!j.contains("entries") || !j["entries"].is_array() ||
        static_cast<int>(j["entries"].size()) != n)
        throw ParseError(where + ": \"entries\" must be an array of " + std::to_string(n) +
                         " rows");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const Json& row = j["entries"][i];
        std::string at = where + ": entries[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(at + ": expected an array of " + std::to_string(n) + " scalars");
        for (int c = 0; c < n; ++c)
            m(i, c) = get_scalar(row[c], at + "[" + std::to_string(c) + "]");
    }
    if (ctx_out)
        *ctx_out = ctx;
    return m;
}

std::vector<Scalar> vector_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + ": expected a non-empty array of scalar strings");
    std::vector<Scalar> v;
    int i = 0;
    for (const Json& cell : j)
        v.push_back(get_scalar(cell, where + "[" + std::to_string(i++) + "]"));
    return v;
}

Json vector_to_json(const std::vector<Scalar>& v) {
    Json j = Json::array();
    for (const Scalar& x : v)
        j.push_back(format_scalar(x));
    return j;
}

Json complex_distance_to_json(const ComplexDistance& k) {
    Json j;
    j["k"] = k.k;
    return j;
}

Json quotient_invariants_to_json(const QuotientInvariants& q) {
    Json j;
    j["pos"] = q.pos;
    j["neg"] = q.neg;
    return j;
}

Json parse_document(const std::string& text, const std::string& where) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

} // namespace padlat
