#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace edisc {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<long, Eigen::Dynamic, 1>;
using ZMat = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

/// Raised when an input violates a documented precondition.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a computed result contradicts a proven identity.
struct Contradiction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational num(const Rational& q) { return Rational(boost::multiprecision::numerator(q)); }
inline Rational den(const Rational& q) { return Rational(boost::multiprecision::denominator(q)); }
inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw InputError("expected an integer, got " + q.str());
    return numerator(q).convert_to<long>();
}

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

QVec to_q(const ZVec& v);
ZVec to_z(const QVec& v);

/// Lexicographic comparison of coordinate vectors.
template <class V>
bool lex_less(const V& a, const V& b) {
    const auto n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

template <class V>
bool vec_equal(const V& a, const V& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

struct LexLess {
    template <class V>
    bool operator()(const V& a, const V& b) const { return lex_less(a, b); }
};

/// Scales a rational vector to a primitive integer vector with the same direction.
QVec primitive(const QVec& v);

Integer lcm_denominators(const QVec& v);

}  // namespace edisc
