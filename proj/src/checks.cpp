#include "edisc/checks.hpp"

#include "edisc/discriminant.hpp"
#include "edisc/fiber.hpp"
#include "edisc/io.hpp"
#include "edisc/secondary.hpp"
#include "edisc/tropical.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace edisc {

namespace {

using Pts = std::vector<std::vector<long>>;
using Clock = std::chrono::steady_clock;

class Tally {
public:
    Tally(int id, std::string name) {
        r_.id = id;
        r_.name = std::move(name);
    }

    void ok() { ++r_.cases; }

    void fail(const std::string& what) {
        ++r_.cases;
        ++r_.failures;
        r_.pass = false;
        if (r_.detail.empty()) r_.detail = what;
    }

    void expect(bool good, const std::function<std::string()>& what) { good ? ok() : fail(what()); }

    // runs one case; any exception is a failure
    void run(const std::string& label, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            fail(label + ": " + e.what());
        }
    }

    void note(const std::string& s) {
        if (r_.pass) r_.detail = s;
    }

    CheckResult done() {
        r_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return r_;
    }

private:
    CheckResult r_;
    Clock::time_point start_ = Clock::now();
};

std::string show(const Tuple& a) { return to_json(a).dump(); }

std::string show(const std::vector<Polytope>& ps) {
    Json j = Json::array();
    for (auto& p : ps) j.push_back(to_json(p)["vertices"]);
    return j.dump();
}

Pts grid(int n, int max_coord) {
    Pts out{{}};
    for (int d = 0; d < n; ++d) {
        Pts next;
        for (auto& p : out)
            for (long c = 0; c <= max_coord; ++c) {
                auto q = p;
                q.push_back(c);
                next.push_back(q);
            }
        out = next;
    }
    return out;
}

// translated into the positive orthant touching every coordinate hyperplane, then sorted
Pts normalized(Pts pts) {
    auto low = pts.front();
    for (auto& p : pts)
        for (size_t i = 0; i < p.size(); ++i) low[i] = std::min(low[i], p[i]);
    for (auto& p : pts)
        for (size_t i = 0; i < p.size(); ++i) p[i] -= low[i];
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<Pts> point_classes(int n, int max_points, int max_coord) {
    const Pts g = grid(n, max_coord);
    std::set<Pts> seen;
    std::vector<int> pick;
    std::function<void(int)> grow = [&](int from) {
        if (!pick.empty()) {
            Pts pts;
            for (int i : pick) pts.push_back(g[i]);
            seen.insert(normalized(pts));
        }
        if (static_cast<int>(pick.size()) == max_points) return;
        for (int i = from; i < static_cast<int>(g.size()); ++i) {
            pick.push_back(i);
            grow(i + 1);
            pick.pop_back();
        }
    };
    grow(0);
    return {seen.begin(), seen.end()};
}

std::vector<int> everyone(const Tuple& a) {
    std::vector<int> v(a.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// multisets of `size` indices below `count`: all of them, or `limit` distinct seeded draws
std::vector<std::vector<int>> multisets(int count, int size, long limit, std::mt19937& rng) {
    std::vector<std::vector<int>> out;
    long total = 1;
    for (int i = 0; i < size; ++i) total = total * (count + i) / (i + 1);
    if (limit < 0 || total <= limit) {
        std::vector<int> cur;
        std::function<void(int)> grow = [&](int from) {
            if (static_cast<int>(cur.size()) == size) {
                out.push_back(cur);
                return;
            }
            for (int i = from; i < count; ++i) {
                cur.push_back(i);
                grow(i);
                cur.pop_back();
            }
        };
        grow(0);
        return out;
    }
    std::uniform_int_distribution<int> pick(0, count - 1);
    std::set<std::vector<int>> seen;
    while (static_cast<long>(seen.size()) < limit) {
        std::vector<int> cur(size);
        for (auto& x : cur) x = pick(rng);
        std::sort(cur.begin(), cur.end());
        seen.insert(cur);
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> positive_compositions(int total, int parts) {
    if (parts == 0) return total == 0 ? std::vector<std::vector<int>>{{}} : std::vector<std::vector<int>>{};
    std::vector<std::vector<int>> out;
    for (int first = 1; first <= total; ++first)
        for (auto rest : positive_compositions(total - first, parts - 1)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

Tuple tuple_of(int dim, const std::vector<Pts>& members) {
    std::vector<PointConfiguration> m;
    for (auto& p : members) m.push_back(make_config(dim, p));
    return Tuple(dim, m);
}

Pts interval(int d) {
    Pts p;
    for (int i = 0; i <= d; ++i) p.push_back({i});
    return p;
}

Polytope poly(int dim, const Pts& pts) { return convex_hull(make_config(dim, pts)); }

Pts random_pts(std::mt19937& rng, int dim, int count, int max_coord) {
    std::uniform_int_distribution<int> coord(0, max_coord);
    Pts p;
    for (int j = 0; j < count; ++j) {
        std::vector<long> x(dim);
        for (auto& v : x) v = coord(rng);
        p.push_back(x);
    }
    return p;
}

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// polytope cases for the mixed-volume criteria: n polytopes in R^n
std::vector<std::vector<Polytope>> square_cases(Scale s, std::mt19937& rng) {
    const bool full = s == Scale::Full;
    std::vector<std::vector<Polytope>> out;
    for (int n = 1; n <= 3; ++n) {
        auto polys = small_polytopes(n, 4, 2);
        const long limit = n == 1 ? -1 : n == 2 ? (full ? -1 : 40) : (full ? 800 : 15);
        for (auto& idx : multisets(static_cast<int>(polys.size()), n, limit, rng)) {
            std::vector<Polytope> ps;
            for (int i : idx) ps.push_back(polys[i]);
            out.push_back(ps);
        }
    }
    return out;
}

}  // namespace

std::vector<Polytope> small_polytopes(int n, int max_vertices, int max_coord) {
    std::vector<Polytope> out;
    for (auto& pts : point_classes(n, max_vertices, max_coord)) {
        Polytope p = poly(n, pts);
        if (p.vertices.size() == pts.size()) out.push_back(p);
    }
    return out;
}

std::vector<Tuple> tuple_corpus(Scale s) {
    const bool full = s == Scale::Full;
    std::mt19937 rng(2718);
    std::vector<Tuple> out;
    for (int n = 1; n <= 3; ++n) {
        std::vector<PointConfiguration> members;
        for (auto& pts : point_classes(n, 4, 2)) members.push_back(make_config(n, pts));
        const int count = static_cast<int>(members.size());
        for (int k = 1; k <= 3; ++k) {
            long limit = -1;
            if (n == 2) limit = k == 1 ? (full ? -1 : 12) : k == 2 ? (full ? 400 : 12) : (full ? 200 : 6);
            if (n == 3) limit = k == 1 ? (full ? 150 : 4) : k == 2 ? (full ? 150 : 4) : (full ? 100 : 3);
            for (auto& idx : multisets(count, k, limit, rng)) {
                std::vector<PointConfiguration> ms;
                for (int i : idx) ms.push_back(members[i]);
                out.emplace_back(n, ms);
            }
        }
    }
    return out;
}

CheckResult check_mixed_volume_tropical(Scale s) {
    Tally t(1, "mixed volume equals tropical multiplicity");
    std::mt19937 rng(1);
    for (auto& ps : square_cases(s, rng)) {
        const int n = ps.front().ambient;
        t.run(show(ps), [&] {
            Rational mv = mixed_volume(ps, n), trop = tropical_multiplicity(ps, n);
            t.expect(mv == trop, [&] { return show(ps) + ": mixed volume " + to_string(mv) + ", tropical " + to_string(trop); });
        });
    }
    return t.done();
}

CheckResult check_equivalence_lemma(Scale s) {
    Tally t(2, "dimension condition, positive monomial, stable intersection agree");
    std::mt19937 rng(2);
    auto cases = square_cases(s, rng);
    // fewer polytopes than the dimension
    auto polys2 = small_polytopes(2, 4, 2), polys3 = small_polytopes(3, 4, 2);
    for (auto& p : polys2) cases.push_back({p});
    for (auto& idx : multisets(static_cast<int>(polys3.size()), 1, s == Scale::Full ? 200 : 10, rng)) cases.push_back({polys3[idx[0]]});
    for (auto& idx : multisets(static_cast<int>(polys3.size()), 2, s == Scale::Full ? 400 : 10, rng))
        cases.push_back({polys3[idx[0]], polys3[idx[1]]});
    for (auto& ps : cases) {
        const int n = ps.front().ambient, k = static_cast<int>(ps.size());
        t.run(show(ps), [&] {
            std::vector<PointConfiguration> ms;
            std::vector<WeightedFan> fans;
            for (auto& p : ps) {
                ms.push_back(PointConfiguration(n, p.vertices));
                fans.push_back(dual_fan(p));
            }
            Tuple a(n, ms);
            const bool dimension_condition = is_linearly_independent(a);
            const bool tropical = !stable_intersection(fans, n).empty();
            bool monomial = false;
            for (auto& mult : positive_compositions(sum_dim(a, a.full()), k))
                if (mixed_volume(ps, mult, n) != 0) monomial = true;
            t.expect(dimension_condition == tropical && tropical == monomial, [&] {
                std::ostringstream o;
                o << show(ps) << ": dimension " << dimension_condition << ", tropical " << tropical << ", monomial " << monomial;
                return o.str();
            });
        });
    }
    return t.done();
}

CheckResult check_univariate_ladder() {
    Tally t(3, "univariate ladder");
    // frozen from tests/oracles/univariate.py
    const std::map<int, Pts> principal{
        {2, {{1, 2, 1}, {2, 0, 2}}},
        {3, {{1, 2, 2, 1}, {1, 3, 0, 2}, {2, 0, 3, 1}, {3, 0, 0, 3}}},
        {4,
         {{1, 2, 2, 2, 1},
          {1, 2, 3, 0, 2},
          {1, 3, 0, 3, 1},
          {1, 4, 0, 0, 3},
          {2, 0, 3, 2, 1},
          {2, 0, 4, 0, 2},
          {3, 0, 0, 4, 1},
          {4, 0, 0, 0, 4}}},
    };
    for (auto& [d, verts] : principal) {
        const std::string label = "d=" + std::to_string(d);
        t.run(label, [&] {
            Tuple a = tuple_of(1, {interval(d)});
            Rational e = euler_divisor(a).total_degree();
            t.expect(e == 2 * d, [&] { return label + ": divisor degree " + to_string(e); });
            Integer g = total_degree(a);
            t.expect(g == 2 * d, [&] { return label + ": total degree " + g.str(); });
            t.expect(mixed_secondary_polytope(a) == poly(d + 1, verts), [&] { return label + ": secondary polytope differs"; });
        });
    }
    return t.done();
}

CheckResult check_intro_example() {
    Tally t(4, "square and collinear triple");
    t.run("example", [&] {
        const Pts square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        Tuple a = tuple_of(2, {square, {{0, 0}, {1, 0}, {2, 0}}});
        t.expect(is_relevant(a), [] { return "not relevant"; });
        const std::vector<PointConfiguration> want{make_config(2, {{0, 0}, {1, 0}}), make_config(2, {{0, 0}, {1, 0}, {2, 0}})};
        auto facings = enumerate_facings(a);
        auto it = std::find_if(facings.begin(), facings.end(),
                               [&](const Facing& g) { return g.support == std::vector<int>{0, 1} && g.parts == want; });
        if (it == facings.end()) {
            t.fail("bottom-edge facing missing");
            return;
        }
        t.expect(is_important(a, *it), [] { return "bottom-edge facing not important"; });
        Integer ic = facing_index(a, *it) * milnor_number(a, *it);
        t.expect(ic == 1, [&] { return "bottom-edge i*c = " + ic.str(); });
        t.expect(is_important(a, trivial_facing(a)), [] { return "trivial facing not important"; });
    });
    return t.done();
}

CheckResult check_purity(Scale s) {
    Tally t(5, "purity of stable intersections against simplices");
    const int trials = s == Scale::Full ? 1000 : 25;
    for (int seed = 0; seed < trials; ++seed) {
        const std::string label = "seed " + std::to_string(seed);
        t.run(label, [&] {
            auto trial = purity_trial(seed, 4, 4, 2);
            t.expect(trial.report.ok(), [&] {
                std::string v;
                for (auto& x : trial.report.violations) v += " " + x;
                return label + ":" + v;
            });
        });
    }
    return t.done();
}

CheckResult check_essential_structure(Scale s) {
    Tally t(6, "essential facings climb and chain");
    long chains = 0;
    for (auto& a : tuple_corpus(s)) {
        const bool relevant = is_relevant(a);
        t.run(show(a), [&] {
            auto st = essential_facings(a);
            for (size_t e = 0; e < st.facings.size(); ++e) {
                auto& f = st.facings[e];
                if (f.trivial) continue;
                bool up = false;
                for (size_t g = 0; g < st.facings.size(); ++g)
                    if (st.adjacent[e][g] && st.facings[g].dim == f.dim + 1) up = true;
                t.expect(up, [&] { return show(a) + ": facing " + std::to_string(e) + " has no adjacent facing above"; });
                if (f.dim >= 0 || !relevant) continue;
                auto chain = dimension_chain(st, static_cast<int>(e));
                bool good = static_cast<int>(chain.size()) == -f.dim && chain.back() == static_cast<int>(e);
                for (size_t i = 0; good && i < chain.size(); ++i) {
                    good = st.facings[chain[i]].dim == -static_cast<int>(i) - 1;
                    if (good && i + 1 < chain.size()) good = st.adjacent[chain[i + 1]][chain[i]];
                }
                ++chains;
                t.expect(good, [&] { return show(a) + ": malformed chain for facing " + std::to_string(e); });
            }
        });
    }
    t.note(std::to_string(chains) + " chains");
    return t.done();
}

CheckResult check_milnor_importance(Scale s) {
    Tally t(7, "Milnor numbers are nonnegative and positive exactly on important facings");
    for (auto& a : tuple_corpus(s)) {
        if (!is_relevant(a)) continue;
        t.run(show(a), [&] {
            auto faces = enumerate_faces(a);
            for (auto& g : enumerate_facings(a)) {
                Integer c = milnor_number_unchecked(a, g);
                const bool important = is_important(a, g, faces);
                t.expect(c >= 0 && (c > 0) == important, [&] {
                    return show(a) + ": facing " + to_json(g).dump() + " has c = " + c.str() + ", important " + (important ? "yes" : "no");
                });
            }
        });
    }
    return t.done();
}

CheckResult check_cayley_milnor(Scale s) {
    Tally t(8, "Cayley lift sums the Milnor numbers of the subtuples");
    for (auto& a : tuple_corpus(s)) {
        if (!is_relevant(a)) continue;
        t.run(show(a), [&] {
            for (auto& g : enumerate_facings(a)) {
                auto [lhs, rhs] = cayley_milnor_sides(a, g);
                t.expect(lhs == rhs, [&] { return show(a) + ": facing " + to_json(g).dump() + ": " + lhs.str() + " != " + rhs.str(); });
            }
        });
    }
    return t.done();
}

CheckResult check_degree_coherence(Scale s) {
    Tally t(9, "triangulation degrees, degree formula and factor degrees agree");
    long relevant = 0, enumerated = 0;
    unsigned seed = 0;
    for (auto& a : tuple_corpus(s)) {
        if (!is_relevant(a)) continue;
        ++relevant;
        t.run(show(a), [&] {
            std::vector<Integer> want;
            for (int i = 0; i < a.size(); ++i) want.push_back(degree(a, i));
            auto config = cayley_config(a, everyone(a));
            const bool small = config.size() <= 9;
            enumerated += small;
            auto ts = small ? coherent_triangulations(config) : sampled_triangulations(config, 12, ++seed);
            std::set<std::vector<Integer>> seen;
            for (auto& tr : ts) seen.insert(group_degrees(a, triangulation_monomial(a, tr)));
            t.expect(seen.size() == 1 && *seen.begin() == want, [&] { return show(a) + ": triangulation degrees disagree"; });
            Integer total = total_degree(a), rebuilt = decomposition_degree(a);
            Rational divisor = euler_divisor(a).total_degree();
            t.expect(total == rebuilt && Rational(total) == divisor, [&] {
                return show(a) + ": degree " + total.str() + ", from factors " + rebuilt.str() + ", divisor " + to_string(divisor);
            });
        });
    }
    t.note(std::to_string(relevant) + " relevant tuples, " + std::to_string(enumerated) + " with every coherent triangulation");
    return t.done();
}

CheckResult check_fiber(Scale s) {
    Tally t(10, "fiber polytope cross-checks");
    const bool full = s == Scale::Full;
    std::mt19937 rng(10);

    // diagonal
    for (int trial = 0, done = 0; done < (full ? 40 : 4); ++trial) {
        const int n = 1 + trial % 2, m = 1 + (trial / 2) % 2;
        Polytope h = poly(n + m, random_pts(rng, n + m, 3 + trial % 3, 2));
        std::vector<QVec> base;
        for (auto& v : h.vertices) base.push_back(v.head(n));
        if (affine_dim(base, n) != n) continue;
        ++done;
        t.run(show({h}), [&] {
            std::vector<Polytope> same(n + 1, h);
            t.expect(mixed_fiber_polytope(same, n) == scale(fiber_polytope(h, n), factorial(n + 1)),
                     [&] { return show({h}) + ": diagonal differs from the scaled fiber polytope"; });
        });
    }

    // segment batteries: m - 1 segments in the fiber space
    std::uniform_int_distribution<int> coord(-2, 2);
    const std::vector<std::pair<int, int>> shapes{{1, 2}, {2, 2}, {1, 3}};
    const int families = full ? 30 : 2, per_family = 4;
    for (int trial = 0; trial < families; ++trial) {
        auto [n, m] = shapes[trial % shapes.size()];
        std::vector<Polytope> hs;
        for (int i = 0; i <= n; ++i) hs.push_back(poly(n + m, random_pts(rng, n + m, 3, 2)));
        t.run(show(hs), [&] {
            Polytope mp = mixed_fiber_polytope(hs, n);
            for (int k = 0; k < per_family; ++k) {
                std::vector<Polytope> lhs{mp}, rhs = hs;
                for (int j = 1; j < m; ++j) {
                    QVec d(m);
                    for (auto& x : d) x = coord(rng);
                    QVec lifted = QVec::Zero(n + m);
                    lifted.tail(m) = d;
                    lhs.push_back(convex_hull(m, {QVec::Zero(m), d}));
                    rhs.push_back(convex_hull(n + m, {QVec::Zero(n + m), lifted}));
                }
                Rational left = mixed_volume(lhs, m), right = mixed_volume(rhs, n + m);
                t.expect(left == right, [&] { return show(hs) + ": " + to_string(left) + " != " + to_string(right); });
            }
        });
    }

    // point criterion on every small instance
    for (int m = 1; m <= 2; ++m) {
        auto cube = grid(1 + m, 1);
        std::vector<Pts> members;
        for (unsigned mask = 1; mask < (1u << cube.size()); ++mask) {
            Pts p;
            for (size_t i = 0; i < cube.size(); ++i)
                if (mask >> i & 1) p.push_back(cube[i]);
            members.push_back(p);
        }
        const int count = static_cast<int>(members.size());
        for (int k = 1; k <= (m == 1 ? 2 : 1); ++k)
            for (auto& idx : multisets(count, k, full ? -1 : 10, rng)) {
                std::vector<Pts> ms;
                for (int i : idx) ms.push_back(members[i]);
                Tuple h = tuple_of(1 + m, ms);
                if (!is_relevant(project_tuple(h, 1))) continue;
                t.run(show(h), [&] {
                    const bool point = newton_E_pi(h, 1).is_point(), predicted = is_point_criterion(h, 1);
                    t.expect(point == predicted, [&] { return show(h) + ": point criterion disagrees"; });
                });
            }
    }

    // universal lift
    std::vector<Tuple> universal{
        tuple_of(1, {interval(2)}),
        tuple_of(1, {interval(3)}),
        tuple_of(1, {interval(1), interval(2)}),
        tuple_of(1, {{{0}, {2}}, {{0}, {1}}}),
        tuple_of(2, {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}),
        tuple_of(2, {{{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 1}}}),
        tuple_of(2, {{{0, 0}, {2, 0}, {0, 1}}}),
    };
    if (full) {
        universal.push_back(tuple_of(1, {interval(4)}));
        universal.push_back(tuple_of(2, {{{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 0}, {0, 1}}}));
        universal.push_back(tuple_of(2, {{{0, 0}, {1, 0}, {2, 0}, {0, 1}}}));
        universal.push_back(tuple_of(2, {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}, {1, 1}}}));
    }
    for (auto& a : universal)
        t.run(show(a), [&] {
            Polytope lifted = translate_to_origin(newton_E_pi(universal_lift(a), a.dim));
            t.expect(lifted == translate_to_origin(mixed_secondary_polytope(a)),
                     [&] { return show(a) + ": universal lift differs from the mixed secondary polytope"; });
        });
    return t.done();
}

CheckResult check_obstructions(Scale s) {
    Tally t(11, "obstruction tables and discriminant degrees");
    long tables = 0;
    for (auto& a : tuple_corpus(s)) {
        if (!is_relevant_in_span(a)) continue;
        ++tables;
        t.run(show(a), [&] {
            auto tab = obstruction_table(a);
            const int F = static_cast<int>(tab.facings.size());
            QMat m(F, F);
            for (int r = 0; r < F; ++r)
                for (int c = 0; c < F; ++c) m(r, c) = Rational(tab.matrix(r, c));
            bool diagonal = true;
            for (int f = 0; f < F; ++f) diagonal = diagonal && Integer(tab.matrix(f, f)) == tab.index[f];
            t.expect(m * tab.inverse == QMat::Identity(F, F) && diagonal, [&] { return show(a) + ": table is not inverted"; });
        });
    }
    // single supports with a hand-computable discriminant degree
    const std::vector<std::pair<Tuple, int>> classical{
        {tuple_of(1, {interval(2)}), 2},
        {tuple_of(1, {interval(3)}), 4},
        {tuple_of(2, {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}), 2},
        {tuple_of(2, {{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}}}), 3},
    };
    for (auto& [a, deg] : classical)
        t.run(show(a), [&] {
            auto v = newton_delta(a);
            Rational sum = discriminant_total_degree(a);
            bool good = v.convex && sum == deg;
            for (auto& p : v.pieces) good = good && p.sum() == sum;
            t.expect(good, [&] { return show(a) + ": discriminant degree " + to_string(sum) + ", expected " + std::to_string(deg); });
        });
    t.note(std::to_string(tables) + " tables");
    return t.done();
}

std::vector<CheckResult> run_checks(Scale s) {
    return {check_mixed_volume_tropical(s), check_equivalence_lemma(s), check_univariate_ladder(), check_intro_example(),
            check_purity(s),                check_essential_structure(s), check_milnor_importance(s), check_cayley_milnor(s),
            check_degree_coherence(s),      check_fiber(s),               check_obstructions(s)};
}

}  // namespace edisc
