#include "edisc/rational.hpp"

namespace edisc {

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer p(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw InputError("zero denominator in " + s);
        return Rational(p) / Rational(d);
    } catch (const std::runtime_error&) {
        throw InputError("not a rational number: " + s);
    }
}

QVec to_q(const ZVec& v) {
    QVec r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

ZVec to_z(const QVec& v) {
    ZVec r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = to_long(v[i]);
    return r;
}

Integer lcm_denominators(const QVec& v) {
    Integer l = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Integer d = denominator(v[i]);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    return l;
}

QVec primitive(const QVec& v) {
    Integer l = lcm_denominators(v);
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        g = boost::multiprecision::gcd(g, numerator(v[i] * Rational(l)));
    if (g == 0) return v;
    QVec r(v.size());
    Rational s = Rational(l) / Rational(g);
    for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

}  // namespace edisc
