#pragma once

#include "edisc/rational.hpp"

#include <optional>
#include <vector>

namespace edisc {

/// a + b*eps for an infinitesimal eps > 0.
struct Lex {
    Rational a, b;

    Lex() = default;
    Lex(const Rational& a_) : a(a_) {}
    Lex(const Rational& a_, const Rational& b_) : a(a_), b(b_) {}

    Lex operator+(const Lex& o) const { return {a + o.a, b + o.b}; }
    Lex operator-(const Lex& o) const { return {a - o.a, b - o.b}; }
    Lex operator-() const { return {-a, -b}; }
    Lex operator*(const Rational& s) const { return {a * s, b * s}; }
    Lex operator/(const Rational& s) const { return {a / s, b / s}; }
    Lex& operator+=(const Lex& o) { a += o.a; b += o.b; return *this; }
    Lex& operator-=(const Lex& o) { a -= o.a; b -= o.b; return *this; }
    bool operator==(const Lex& o) const { return a == o.a && b == o.b; }
    bool operator<(const Lex& o) const { return a < o.a || (a == o.a && b < o.b); }
    int sign() const { return a.sign() != 0 ? a.sign() : b.sign(); }
};

inline int lp_sign(const Rational& x) { return x.sign(); }
inline int lp_sign(const Lex& x) { return x.sign(); }

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// maximize objective . x subject to le_rows[i] . x <= le_rhs[i] and
/// eq_rows[i] . x = eq_rhs[i]; variables are free.
template <class R>
struct LinearProgram {
    int vars = 0;
    std::vector<QVec> le_rows;
    std::vector<R> le_rhs;
    std::vector<QVec> eq_rows;
    std::vector<R> eq_rhs;
    QVec objective;

    void le(const QVec& row, const R& rhs) { le_rows.push_back(row); le_rhs.push_back(rhs); }
    void eq(const QVec& row, const R& rhs) { eq_rows.push_back(row); eq_rhs.push_back(rhs); }
};

template <class R>
struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    R value{};
    std::vector<R> x;
};

template <class R>
LPResult<R> solve_lp(const LinearProgram<R>& lp);

extern template LPResult<Rational> solve_lp(const LinearProgram<Rational>&);
extern template LPResult<Lex> solve_lp(const LinearProgram<Lex>&);

/// { x : A x <= b, E x = e } over the rationals.
struct Polyhedron {
    int dim = 0;
    std::vector<QVec> A;
    std::vector<Rational> b;
    std::vector<QVec> E;
    std::vector<Rational> e;

    explicit Polyhedron(int d = 0) : dim(d) {}
    void le(const QVec& row, const Rational& rhs) { A.push_back(row); b.push_back(rhs); }
    void ge(const QVec& row, const Rational& rhs) { A.push_back(-row); b.push_back(-rhs); }
    void eq(const QVec& row, const Rational& rhs) { E.push_back(row); e.push_back(rhs); }
    void append(const Polyhedron& o);
    bool contains(const QVec& x) const;
};

std::optional<QVec> find_point(const Polyhedron& p);

/// Indices of inequalities that hold with equality on all of p; p must be nonempty.
std::vector<int> implicit_equalities(const Polyhedron& p);

/// Dimension of p, or -1 when empty.
int dimension(const Polyhedron& p);

std::optional<QVec> relative_interior_point(const Polyhedron& p);

/// Point satisfying the flagged inequalities strictly and the rest weakly, if any.
std::optional<QVec> point_strict_on(const Polyhedron& p, const std::vector<bool>& strict);
/// Point satisfying every inequality strictly (and equalities exactly), if any.
std::optional<QVec> strictly_feasible_point(const Polyhedron& p);

}  // namespace edisc
