#include "edisc/io.hpp"

namespace edisc {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) { return z.str(); }

Json to_json(const QVec& v) {
    Json a = Json::array();
    for (auto& x : v) a.push_back(to_json(x));
    return a;
}

Json lattice_json(const QVec& v) {
    Json a = Json::array();
    for (auto& x : v) a.push_back(to_long(x));
    return a;
}

Json to_json(const PointConfiguration& c) {
    Json pts = Json::array();
    for (auto& p : c.points) pts.push_back(c.is_lattice() ? lattice_json(p) : to_json(p));
    return {{"dim", c.dim}, {"points", pts}};
}

Json to_json(const Tuple& a) {
    Json ms = Json::array();
    for (auto& m : a.members) ms.push_back(to_json(m));
    return {{"n", a.dim}, {"members", ms}};
}

Json to_json(const Polytope& p) {
    Json vs = Json::array();
    for (auto& v : p.vertices) vs.push_back(to_json(v));
    return {{"ambient", p.ambient}, {"dim", p.dim()}, {"vertices", vs}};
}

Json to_json(const Facing& g) {
    Json parts = Json::array();
    for (auto& c : g.parts) parts.push_back(to_json(c)["points"]);
    return {{"support", g.support}, {"parts", parts}, {"witness", to_json(g.witness)}};
}

Json to_json(const Cone& c) {
    Json ge = Json::array(), eq = Json::array();
    for (auto& r : c.ge) ge.push_back(to_json(r));
    for (auto& r : c.eq) eq.push_back(to_json(r));
    return {{"dim", c.dim}, {"ge", ge}, {"eq", eq}, {"interior", to_json(c.interior)}};
}

Json to_json(const WeightedFan& f) {
    Json cones = Json::array();
    for (size_t i = 0; i < f.cones.size(); ++i) {
        Json c = to_json(f.cones[i]);
        c["weight"] = to_json(f.weights[i]);
        cones.push_back(c);
    }
    return {{"ambient", f.ambient}, {"dim", f.dim()}, {"cones", cones}};
}

Json to_json(const PurityReport& r) {
    Json comps = Json::array();
    for (auto& c : r.components)
        comps.push_back({{"pieces", c.pieces},
                         {"dim", c.dim},
                         {"affine_hull_dim", c.affine_hull_dim},
                         {"in_affine_subspace", c.in_affine_subspace}});
    return {{"ambient", r.ambient},
            {"fan_dim", r.fan_dim},
            {"polyhedron_dim", r.polyhedron_dim},
            {"k", r.k},
            {"intersection_dim", r.intersection_dim},
            {"boundary_dim", r.boundary_dim},
            {"components", comps},
            {"violations", r.violations},
            {"ok", r.ok()}};
}

Json to_json(const Triangulation& t) {
    Json h = Json::array();
    for (auto& x : t.heights) h.push_back(to_json(x));
    return {{"simplices", t.simplices}, {"heights", h}};
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception&) {
            throw SchemaError("not a rational: " + j.get<std::string>());
        }
    }
    throw SchemaError("expected an integer or a \"p/q\" string, got " + j.dump());
}

QVec vector_from_json(const Json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw SchemaError("expected a vector of length " + std::to_string(dim) + ", got " + j.dump());
    QVec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rational_from_json(j[i]);
    return v;
}

std::vector<QVec> points_from_json(const Json& j, int dim) {
    if (!j.is_array()) throw SchemaError("expected a list of points");
    std::vector<QVec> pts;
    for (auto& p : j) pts.push_back(vector_from_json(p, dim));
    return pts;
}

namespace {

PointConfiguration config_of(const Json& pts, int dim) {
    auto v = points_from_json(pts, dim);
    const size_t n = v.size();
    PointConfiguration c(dim, std::move(v));
    if (c.size() != n) throw SchemaError("duplicate points in a configuration");
    return c;
}

int dim_field(const Json& j) {
    int d = int_field(j, "dim");
    if (d < 0) throw SchemaError("dimension must be nonnegative");
    return d;
}

}  // namespace

PointConfiguration config_from_json(const Json& j) { return config_of(field(j, "points"), dim_field(j)); }

Tuple members_from_json(const Json& ms, int d) {
    if (!ms.is_array() || ms.empty()) throw SchemaError("'members' must be a nonempty list");
    if (ms.size() > 16) throw SchemaError("at most 16 members");
    std::vector<PointConfiguration> members;
    for (auto& m : ms) {
        if (m.is_object()) {
            if (int_field(m, "dim") != d) throw SchemaError("member dimension differs from the tuple's");
            members.push_back(config_of(field(m, "points"), d));
        } else {
            members.push_back(config_of(m, d));
        }
        if (members.back().empty()) throw SchemaError("members must be nonempty");
    }
    return Tuple(d, members);
}

Tuple tuple_from_json(const Json& j) {
    int d = int_field(j, "n");
    if (d < 0) throw SchemaError("dimension must be nonnegative");
    return members_from_json(field(j, "members"), d);
}

Facing facing_from_json(const Json& j, int dim) {
    Facing g;
    const Json& sup = field(j, "support");
    const Json& parts = field(j, "parts");
    if (!sup.is_array() || !parts.is_array() || sup.size() != parts.size())
        throw SchemaError("'support' and 'parts' must be lists of equal length");
    for (auto& s : sup) {
        if (!s.is_number_integer()) throw SchemaError("support entries must be integers");
        g.support.push_back(s.get<int>());
    }
    for (auto& p : parts) g.parts.push_back(config_of(p, dim));
    if (j.contains("witness")) g.witness = vector_from_json(j.at("witness"), static_cast<int>(j.at("witness").size()));
    return g;
}

}  // namespace edisc
