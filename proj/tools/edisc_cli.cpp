#include "edisc/checks.hpp"
#include "edisc/discriminant.hpp"
#include "edisc/fiber.hpp"
#include "edisc/io.hpp"
#include "edisc/secondary.hpp"
#include "edisc/tropical.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

using namespace edisc;

namespace {

enum Exit { Ok = 0, Violation = 1, Schema = 2, Contradicted = 3 };

struct Options {
    std::string input = "-";
    std::string output;
    std::uint64_t seed = 0;
    int trials = 100;
    int max_dim = 4;
    int max_points = 4;
    int max_coord = 2;
    int sample = 0;
    bool full = false;
};

Json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw SchemaError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw SchemaError("cannot write " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
    void emit(const Json& j) { out() << j.dump(2) << '\n'; }
    void line(const Json& j) { out() << j.dump() << '\n'; }

private:
    std::ofstream file_;
};

Json indices(Mask m) { return mask_indices(m); }

Json rationals(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (auto& x : v) a.push_back(to_json(x));
    return a;
}

Json integers(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (auto& x : v) a.push_back(to_json(x));
    return a;
}

Json vertices(const Polytope& p) { return to_json(p)["vertices"]; }

// the tuple, plus the facings to report: the one given, or all of them
std::pair<Tuple, std::vector<Facing>> tuple_and_facings(const Json& j) {
    if (!j.contains("tuple")) {
        Tuple a = tuple_from_json(j);
        return {a, enumerate_facings(a)};
    }
    Tuple a = tuple_from_json(j.at("tuple"));
    std::vector<Facing> fs;
    if (j.contains("facing")) {
        Facing g = facing_from_json(j.at("facing"), a.dim);
        if (!is_facing(a, g)) throw InputError("not a facing of the tuple");
        fs.push_back(g);
    } else {
        fs = enumerate_facings(a);
    }
    return {a, fs};
}

Tuple split_tuple(const Json& j, int& n) {
    n = int_field(j, "n");
    const int m = int_field(j, "m");
    if (n < 0 || m < 0) throw SchemaError("'n' and 'm' must be nonnegative");
    return members_from_json(field(j, "members"), n + m);
}

Json relevance(const Json& in) {
    Tuple a = tuple_from_json(in);
    return {{"relevant", is_relevant(a)},
            {"relevant_in_span", is_relevant_in_span(a)},
            {"essential", is_essential(a)},
            {"linearly_independent", is_linearly_independent(a)},
            {"tuple_dim", tuple_dim(a)},
            {"min_dim", min_dim(a)},
            {"maximal_essential_subtuple", indices(maximal_essential_subtuple(a))}};
}

Json essential(const Json& in) {
    Tuple a = tuple_from_json(in);
    auto s = essential_facings(a);
    Json fs = Json::array(), adj = Json::array(), chains = Json::array();
    for (size_t e = 0; e < s.facings.size(); ++e) {
        auto& f = s.facings[e];
        Json parts = Json::array();
        for (auto& p : f.parts) parts.push_back(to_json(p)["points"]);
        fs.push_back({{"support", f.support}, {"parts", parts}, {"dim", f.dim}, {"trivial", f.trivial}, {"provenance", f.provenance}});
        for (size_t g = 0; g < s.facings.size(); ++g)
            if (s.adjacent[e][g]) adj.push_back({e, g});
    }
    const bool relevant = is_relevant(a);
    if (relevant)
        for (size_t e = 0; e < s.facings.size(); ++e)
            if (!s.facings[e].trivial && s.facings[e].dim < 0)
                chains.push_back({{"facing", e}, {"chain", dimension_chain(s, static_cast<int>(e))}});
    return {{"min_dim", min_dim(a)}, {"facings", fs}, {"adjacent", adj}, {"chains", chains}};
}

Json mixed_volume_of(const Json& in) {
    Tuple a = tuple_from_json(in);
    std::vector<Polytope> ps;
    for (auto& m : a.members) ps.push_back(convex_hull(m));
    Json out;
    if (in.contains("multiplicities")) {
        const Json& mj = in.at("multiplicities");
        if (!mj.is_array() || mj.size() != ps.size()) throw SchemaError("one multiplicity per member");
        std::vector<int> mult;
        for (auto& x : mj) {
            if (!x.is_number_integer() || x.get<int>() < 0) throw SchemaError("multiplicities are nonnegative integers");
            mult.push_back(x.get<int>());
        }
        out["mixed_volume"] = to_json(mixed_volume(ps, mult, a.dim));
        return out;
    }
    if (a.size() != a.dim) throw InputError("need as many members as the dimension, or multiplicities");
    out["mixed_volume"] = to_json(mixed_volume(ps, a.dim));
    out["tropical_multiplicity"] = to_json(tropical_multiplicity(ps, a.dim));
    return out;
}

Json facings(const Json& in) {
    Tuple a = tuple_from_json(in);
    Json fs = Json::array();
    for (auto& g : enumerate_facings(a)) {
        Json j = to_json(g);
        j["trivial"] = g.is_trivial(a);
        fs.push_back(j);
    }
    return {{"facings", fs}};
}

Json important(const Json& in) {
    auto [a, fs] = tuple_and_facings(in);
    auto faces = enumerate_faces(a);
    Json out = Json::array();
    for (auto& g : fs) {
        Json j = to_json(g);
        j["important"] = is_important(a, g, faces);
        out.push_back(j);
    }
    return {{"facings", out}};
}

Json milnor(const Json& in) {
    auto [a, fs] = tuple_and_facings(in);
    Json out = Json::array();
    for (auto& g : fs) {
        auto m = milnor_datum(a, g);
        Json j = to_json(g);
        j["milnor"] = to_json(m.milnor);
        j["index"] = to_json(m.index);
        j["jump"] = to_json(m.jump);
        out.push_back(j);
    }
    return {{"facings", out}};
}

Json divisor(const Json& in) {
    Tuple a = tuple_from_json(in);
    auto e = euler_divisor(a);
    Json cs = Json::array();
    for (auto& c : e.components) {
        Json j = to_json(c.facing);
        j["multiplicity"] = to_json(c.multiplicity);
        j["factor_degree"] = to_json(c.factor_degree);
        cs.push_back(j);
    }
    return {{"sign_exponent", e.sign_exponent}, {"components", cs}, {"total_degree", to_json(e.total_degree())}};
}

Json degrees(const Json& in) {
    Tuple a = tuple_from_json(in);
    std::vector<Integer> d;
    for (int i = 0; i < a.size(); ++i) d.push_back(degree(a, i));
    Json out{{"degrees", integers(d)}, {"total_degree", to_json(total_degree(a))}};
    if (in.contains("covectors")) {
        Json q = Json::array();
        for (auto& v : in.at("covectors")) q.push_back(to_json(quasidegree(a, vector_from_json(v, a.dim))));
        out["quasidegrees"] = q;
    }
    return out;
}

Json newton_secondary(const Json& in) {
    Tuple a = tuple_from_json(in);
    Polytope p = mixed_secondary_polytope(a);
    std::vector<Integer> d;
    for (int i = 0; i < a.size(); ++i) d.push_back(degree(a, i));
    return {{"vertices", vertices(p)}, {"degrees", integers(d)}};
}

Json newton_epi(const Json& in) {
    int n = 0;
    Tuple h = split_tuple(in, n);
    Polytope p = newton_E_pi(h, n);
    return {{"vertices", vertices(p)}, {"is_point", p.is_point()}, {"point_criterion", is_point_criterion(h, n)}};
}

Json fiber(const Json& in) {
    const int n = int_field(in, "n"), m = int_field(in, "m");
    if (n < 0 || m < 0) throw SchemaError("'n' and 'm' must be nonnegative");
    auto pts = points_from_json(field(in, "points"), n + m);
    if (pts.empty()) throw SchemaError("'points' must be nonempty");
    return {{"vertices", vertices(fiber_polytope(convex_hull(n + m, pts), n))}};
}

Json obstructions(const Json& in) {
    Tuple a = tuple_from_json(in);
    auto t = obstruction_table(a);
    const int F = static_cast<int>(t.facings.size());
    Json fs = Json::array(), matrix = Json::array(), inverse = Json::array(), e = Json::array();
    for (int g = 0; g < F; ++g) {
        fs.push_back(to_json(t.facings[g]));
        Json row = Json::array(), irow = Json::array();
        for (int b = 0; b < F; ++b) {
            row.push_back(to_json(Integer(t.matrix(g, b))));
            irow.push_back(to_json(t.inverse(g, b)));
        }
        matrix.push_back(row);
        inverse.push_back(irow);
        e.push_back(to_json(t.obstruction(g)));
    }
    std::vector<Rational> degs;
    for (int i = 0; i < a.size(); ++i) degs.push_back(discriminant_degree(t, a, i));
    return {{"facings", fs},         {"index", integers(t.index)},     {"matrix", matrix},
            {"inverse", inverse},    {"tuple_position", t.tuple_position}, {"obstructions", e},
            {"discriminant_degrees", rationals(degs)}};
}

Json decompose(const Json& in) {
    Tuple a = tuple_from_json(in);
    Json fs = Json::array();
    for (auto& [I, exp] : decomposition_exponents(a))
        fs.push_back({{"support", I}, {"exponent", to_json(exp)}, {"factor_degree", to_json(cayley_factor_degree(a, I))}});
    return {{"factors", fs}, {"degree_from_factors", to_json(decomposition_degree(a))}, {"total_degree", to_json(total_degree(a))}};
}

Json triangulations(const Json& in, const Options& o) {
    PointConfiguration c;
    if (in.contains("members")) {
        Tuple a = tuple_from_json(in);
        std::vector<int> all(a.size());
        std::iota(all.begin(), all.end(), 0);
        c = cayley_config(a, all);
    } else {
        c = config_from_json(in);
    }
    auto ts = o.sample > 0 ? sampled_triangulations(c, o.sample, static_cast<unsigned>(o.seed)) : coherent_triangulations(c);
    Json out = Json::array();
    for (auto& t : ts) {
        Json j = to_json(t);
        j["verified"] = verify_lift(t);
        out.push_back(j);
    }
    return {{"config", to_json(c)}, {"triangulations", out}};
}

int check_purity(const Options& o, Sink& sink) {
    if (o.max_dim < 1 || o.max_points < 1 || o.max_coord < 1 || o.trials < 0)
        throw SchemaError("fuzz parameters must be positive");
    long bad = 0;
    for (int t = 0; t < o.trials; ++t) {
        auto trial = purity_trial(o.seed + t, o.max_dim, o.max_points, o.max_coord);
        Json j = to_json(trial.report);
        j["seed"] = o.seed + t;
        Json ps = Json::array();
        for (auto& p : trial.polytopes) ps.push_back(vertices(p));
        j["polytopes"] = ps;
        Json simplex = Json::array();
        for (auto& v : trial.simplex) simplex.push_back(to_json(v));
        j["simplex"] = simplex;
        sink.line(j);
        bad += !trial.report.ok();
    }
    sink.line({{"trials", o.trials}, {"violations", bad}});
    return bad ? Violation : Ok;
}

int selftest(const Options& o, Sink& sink) {
    bool all = true;
    Json out = Json::array();
    for (auto& r : run_checks(o.full ? Scale::Full : Scale::Quick)) {
        out.push_back({{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"failures", r.failures}, {"detail", r.detail}});
        all = all && r.pass;
    }
    sink.emit(out);
    return all ? Ok : Contradicted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorics of Euler discriminants of sparse polynomial systems"};
    app.require_subcommand(1);
    Options o;

    using Handler = std::function<Json(const Json&)>;
    std::vector<std::pair<CLI::App*, Handler>> json_commands;
    auto command = [&](const std::string& name, const std::string& help, Handler h) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", o.input, "JSON input file, - for stdin");
        sub->add_option("-o,--output", o.output, "write the report here instead of stdout");
        json_commands.emplace_back(sub, std::move(h));
        return sub;
    };
    command("relevance", "relevance, essentiality and linear independence of a tuple", relevance);
    command("essential", "essential facings, adjacency and dimension chains", essential);
    command("mixed-volume", "mixed volume of the members' hulls", mixed_volume_of);
    command("euler-char", "generic Euler characteristic of the solution set", [](const Json& in) {
        return Json{{"euler_characteristic", to_json(generic_euler_characteristic(tuple_from_json(in)))}};
    });
    command("facings", "faces of the Cayley configuration by support", facings);
    command("important", "importance of one facing or of all of them", important);
    command("milnor", "Milnor numbers, lattice indices and Euler characteristic jumps", milnor);
    command("divisor", "components of the Euler discriminant with multiplicities", divisor);
    command("degree", "per-member degrees and quasidegrees", degrees);
    command("newton-secondary", "mixed secondary polytope", newton_secondary);
    command("newton-epi", "Newton polytope of the Euler discriminant after base change", newton_epi);
    command("fiber-polytope", "fiber polytope of one configuration over the first n coordinates", fiber);
    command("obstructions", "Milnor matrix over facings and its inverse", obstructions);
    command("decompose", "exponents of the Cayley principal determinants", decompose);
    command("codim", "codimension of the resultant variety", [](const Json& in) {
        return Json{{"codim", resultant_codim(tuple_from_json(in))}};
    });
    command("bif-empty", "whether the bifurcation set of a family is empty", [](const Json& in) {
        int n = 0;
        Tuple h = split_tuple(in, n);
        auto v = bifurcation_emptiness(h, n);
        return Json{{"empty", v.empty}, {"reason", v.reason}, {"codim", v.codim}};
    });
    auto* tri = command("triangulations", "coherent triangulations with lifting heights", {});
    tri->add_option("--sample", o.sample, "draw this many random lifts instead of walking the secondary fan");
    tri->add_option("--seed", o.seed, "seed for --sample");

    auto* purity = app.add_subcommand("check-purity", "fuzz the purity of stable intersections against simplices");
    purity->add_option("--seed", o.seed, "first seed");
    purity->add_option("--trials", o.trials, "number of trials");
    purity->add_option("--max-dim", o.max_dim, "largest ambient dimension");
    purity->add_option("--max-points", o.max_points, "largest number of points per polytope");
    purity->add_option("--max-coord", o.max_coord, "largest coordinate");
    purity->add_option("-o,--output", o.output, "write the JSON lines here instead of stdout");

    auto* self = app.add_subcommand("selftest", "run the invariant suite");
    self->add_flag("--full", o.full, "use the acceptance corpora");
    self->add_option("-o,--output", o.output, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Schema;
    }

    try {
        Sink sink(o.output);
        if (purity->parsed()) return check_purity(o, sink);
        if (self->parsed()) return selftest(o, sink);
        if (tri->parsed()) {
            sink.emit(triangulations(read_input(o.input), o));
            return Ok;
        }
        for (auto& [sub, handler] : json_commands)
            if (sub->parsed()) {
                sink.emit(handler(read_input(o.input)));
                return Ok;
            }
    } catch (const SchemaError& e) {
        std::cerr << Json{{"error", "schema"}, {"message", e.what()}}.dump() << '\n';
        return Schema;
    } catch (const Json::exception& e) {
        std::cerr << Json{{"error", "schema"}, {"message", e.what()}}.dump() << '\n';
        return Schema;
    } catch (const InputError& e) {
        std::cerr << Json{{"error", "input"}, {"message", e.what()}}.dump() << '\n';
        return Schema;
    } catch (const Contradiction& e) {
        std::cerr << Json{{"error", "contradiction"}, {"message", e.what()}}.dump() << '\n';
        return Contradicted;
    }
    return Ok;
}
