#include "edisc/lp.hpp"

#include "edisc/linalg.hpp"

namespace edisc {

namespace {

template <class R>
struct Tableau {
    int rows = 0, cols = 0;
    std::vector<std::vector<Rational>> T;
    std::vector<R> rhs;
    std::vector<Rational> obj;
    R obj_rhs{};
    std::vector<int> basis;

    void pivot(int r, int c) {
        Rational p = T[r][c];
        for (int j = 0; j < cols; ++j)
            if (!T[r][j].is_zero()) T[r][j] /= p;
        rhs[r] = rhs[r] / p;
        auto eliminate = [&](std::vector<Rational>& row, R& b) {
            if (row[c].is_zero()) return;
            Rational f = row[c];
            for (int j = 0; j < cols; ++j)
                if (!T[r][j].is_zero()) row[j] -= f * T[r][j];
            b -= rhs[r] * f;
        };
        for (int i = 0; i < rows; ++i)
            if (i != r) eliminate(T[i], rhs[i]);
        eliminate(obj, obj_rhs);
        basis[r] = c;
    }

    // Bland's rule; columns >= limit never enter.
    LPStatus run(int limit) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < limit; ++j)
                if (obj[j].sign() < 0) { enter = j; break; }
            if (enter < 0) return LPStatus::Optimal;
            int leave = -1;
            R best{};
            for (int i = 0; i < rows; ++i) {
                if (T[i][enter].sign() <= 0) continue;
                R ratio = rhs[i] / T[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return LPStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

template <class R>
LPResult<R> solve_lp(const LinearProgram<R>& lp) {
    const int n = lp.vars;
    const int nle = static_cast<int>(lp.le_rows.size());
    const int neq = static_cast<int>(lp.eq_rows.size());
    const int m = nle + neq;

    std::vector<bool> needs_art(m, true);
    for (int i = 0; i < nle; ++i) needs_art[i] = lp_sign(lp.le_rhs[i]) < 0;
    int nart = 0;
    for (int i = 0; i < m; ++i) nart += needs_art[i];
    const int art0 = 2 * n + nle;

    Tableau<R> t;
    t.rows = m;
    t.cols = art0 + nart;
    t.T.assign(m, std::vector<Rational>(t.cols));
    t.rhs.resize(m);
    t.basis.resize(m);
    int a = art0;
    for (int i = 0; i < m; ++i) {
        const QVec& row = i < nle ? lp.le_rows[i] : lp.eq_rows[i - nle];
        R b = i < nle ? lp.le_rhs[i] : lp.eq_rhs[i - nle];
        Rational flip = lp_sign(b) < 0 ? Rational(-1) : Rational(1);
        for (int j = 0; j < n; ++j) {
            t.T[i][j] = row[j] * flip;
            t.T[i][n + j] = -row[j] * flip;
        }
        if (i < nle) t.T[i][2 * n + i] = flip;
        t.rhs[i] = b * flip;
        if (needs_art[i]) {
            t.T[i][a] = 1;
            t.basis[i] = a++;
        } else {
            t.basis[i] = 2 * n + i;
        }
    }

    LPResult<R> res;
    if (nart > 0) {
        t.obj.assign(t.cols, Rational(0));
        t.obj_rhs = R{};
        for (int i = 0; i < m; ++i) {
            if (!needs_art[i]) continue;
            for (int j = 0; j < art0; ++j) t.obj[j] -= t.T[i][j];
            t.obj_rhs -= t.rhs[i];
        }
        t.run(art0);
        if (lp_sign(t.obj_rhs) != 0) return res;
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < art0) continue;
            for (int j = 0; j < art0; ++j)
                if (!t.T[i][j].is_zero()) { t.pivot(i, j); break; }
        }
    }

    t.obj.assign(t.cols, Rational(0));
    t.obj_rhs = R{};
    for (int j = 0; j < n && j < lp.objective.size(); ++j) {
        t.obj[j] = -lp.objective[j];
        t.obj[n + j] = lp.objective[j];
    }
    for (int i = 0; i < m; ++i) {
        Rational f = t.obj[t.basis[i]];
        if (f.is_zero()) continue;
        for (int j = 0; j < t.cols; ++j)
            if (!t.T[i][j].is_zero()) t.obj[j] -= f * t.T[i][j];
        t.obj_rhs -= t.rhs[i] * f;
    }
    res.status = t.run(art0);
    if (res.status != LPStatus::Optimal) return res;
    res.value = t.obj_rhs;
    std::vector<R> val(t.cols);
    for (int i = 0; i < m; ++i) val[t.basis[i]] = t.rhs[i];
    res.x.resize(n);
    for (int j = 0; j < n; ++j) res.x[j] = val[j] - val[n + j];
    return res;
}

template LPResult<Rational> solve_lp(const LinearProgram<Rational>&);
template LPResult<Lex> solve_lp(const LinearProgram<Lex>&);

void Polyhedron::append(const Polyhedron& o) {
    A.insert(A.end(), o.A.begin(), o.A.end());
    b.insert(b.end(), o.b.begin(), o.b.end());
    E.insert(E.end(), o.E.begin(), o.E.end());
    e.insert(e.end(), o.e.begin(), o.e.end());
}

bool Polyhedron::contains(const QVec& x) const {
    for (size_t i = 0; i < A.size(); ++i)
        if (A[i].dot(x) > b[i]) return false;
    for (size_t i = 0; i < E.size(); ++i)
        if (E[i].dot(x) != e[i]) return false;
    return true;
}

namespace {

QVec widen(const QVec& r, int size) {
    QVec w = QVec::Zero(size);
    w.head(r.size()) = r;
    return w;
}

LinearProgram<Rational> base_program(const Polyhedron& p, int extra) {
    LinearProgram<Rational> lp;
    lp.vars = p.dim + extra;
    for (size_t i = 0; i < p.E.size(); ++i) lp.eq(widen(p.E[i], lp.vars), p.e[i]);
    lp.objective = QVec::Zero(lp.vars);
    return lp;
}

QVec head_of(const std::vector<Rational>& x, int d) {
    QVec v(d);
    for (int i = 0; i < d; ++i) v[i] = x[i];
    return v;
}

// max t subject to A_i x + t <= b_i (i not in fixed), A_i x = b_i (i in fixed), t <= 1.
std::optional<QVec> slack_point(const Polyhedron& p, const std::vector<bool>& fixed, bool& strict) {
    auto lp = base_program(p, 1);
    const int d = p.dim;
    for (size_t i = 0; i < p.A.size(); ++i) {
        QVec r = widen(p.A[i], d + 1);
        if (fixed[i]) {
            lp.eq(r, p.b[i]);
        } else {
            r[d] = 1;
            lp.le(r, p.b[i]);
        }
    }
    QVec cap = QVec::Zero(d + 1);
    cap[d] = 1;
    lp.le(cap, Rational(1));
    lp.objective = cap;
    auto res = solve_lp(lp);
    if (res.status != LPStatus::Optimal) return std::nullopt;
    strict = res.value.sign() > 0;
    return head_of(res.x, d);
}

}  // namespace

std::optional<QVec> find_point(const Polyhedron& p) {
    auto lp = base_program(p, 0);
    for (size_t i = 0; i < p.A.size(); ++i) lp.le(p.A[i], p.b[i]);
    auto res = solve_lp(lp);
    if (res.status == LPStatus::Infeasible) return std::nullopt;
    return head_of(res.x, p.dim);
}

std::vector<int> implicit_equalities(const Polyhedron& p) {
    const int m = static_cast<int>(p.A.size());
    std::vector<bool> loose(m, false);
    bool strict = false;
    auto x = slack_point(p, std::vector<bool>(m, false), strict);
    if (!x) throw InputError("implicit equalities of an empty polyhedron");
    if (strict) return {};
    auto mark = [&](const QVec& y) {
        for (int i = 0; i < m; ++i)
            if (p.A[i].dot(y) < p.b[i]) loose[i] = true;
    };
    mark(*x);
    std::vector<int> out;
    for (int i = 0; i < m; ++i) {
        if (loose[i]) continue;
        auto lp = base_program(p, 0);
        for (int j = 0; j < m; ++j) lp.le(p.A[j], p.b[j]);
        lp.objective = -p.A[i];
        auto res = solve_lp(lp);
        if (res.status == LPStatus::Unbounded) { loose[i] = true; continue; }
        QVec y = head_of(res.x, p.dim);
        mark(y);
        if (!loose[i]) out.push_back(i);
    }
    return out;
}

int dimension(const Polyhedron& p) {
    if (!find_point(p)) return -1;
    auto imp = implicit_equalities(p);
    std::vector<QVec> rows = p.E;
    for (int i : imp) rows.push_back(p.A[i]);
    return p.dim - rank_of_rows(rows, p.dim);
}

std::optional<QVec> relative_interior_point(const Polyhedron& p) {
    if (!find_point(p)) return std::nullopt;
    std::vector<bool> fixed(p.A.size(), false);
    for (int i : implicit_equalities(p)) fixed[i] = true;
    bool strict = false;
    return slack_point(p, fixed, strict);
}

std::optional<QVec> point_strict_on(const Polyhedron& p, const std::vector<bool>& strict) {
    auto lp = base_program(p, 1);
    const int d = p.dim;
    bool any = false;
    for (size_t i = 0; i < p.A.size(); ++i) {
        QVec r = widen(p.A[i], d + 1);
        if (strict[i]) {
            r[d] = 1;
            any = true;
        }
        lp.le(r, p.b[i]);
    }
    QVec cap = QVec::Zero(d + 1);
    cap[d] = 1;
    lp.le(cap, Rational(1));
    lp.objective = cap;
    auto res = solve_lp(lp);
    if (res.status != LPStatus::Optimal || (any && res.value.sign() <= 0)) return std::nullopt;
    return head_of(res.x, d);
}

std::optional<QVec> strictly_feasible_point(const Polyhedron& p) {
    bool strict = false;
    auto x = slack_point(p, std::vector<bool>(p.A.size(), false), strict);
    if (!x || (!strict && !p.A.empty())) return std::nullopt;
    return x;
}

}  // namespace edisc
