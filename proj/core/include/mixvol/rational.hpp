#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "mixvol/errors.hpp"

namespace mixvol {

// Exact arithmetic everywhere. Rationals are kept in lowest terms with a
// positive denominator by the GMP backend; expression templates are off so
// the types behave like ordinary values.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// A point of R^n, and (interchangeably) a direction vector.
using Point = std::vector<Rat>;

/// An integer vector; primitive where the context demands it.
using IntVec = std::vector<Int>;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Exact conversion; throws if r is not an integer.
inline Int to_int(const Rat& r) {
    check_internal(is_integer(r), "to_int: value is not an integer");
    return numerator(r);
}

/// Parses "p/q", "p", with optional sign. Throws InputError on junk.
Rat parse_rat(const std::string& text);

/// "p/q" when the denominator is not 1, plain integer text otherwise.
std::string rat_to_string(const Rat& r);

inline Rat dot(const Point& a, const Point& b) {
    check_internal(a.size() == b.size(), "dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Point sub(const Point& a, const Point& b) {
    check_internal(a.size() == b.size(), "sub: length mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point add(const Point& a, const Point& b) {
    check_internal(a.size() == b.size(), "add: length mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point scale(const Rat& c, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const Point& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline Point to_rational(const IntVec& v) {
    Point r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

/// Exact integer vector from a rational point; throws if any entry is
/// fractional.
inline IntVec to_integral(const Point& p) {
    IntVec r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = to_int(p[i]);
    return r;
}

inline bool is_lattice_point(const Point& p) {
    for (const auto& x : p)
        if (!is_integer(x)) return false;
    return true;
}

/// Factorial as an exact integer.
Int factorial(unsigned n);

/// Scales a rational vector by the positive constant that makes it a
/// primitive integer vector (direction preserved). Throws on the zero
/// vector.
IntVec primitive_direction(const Point& v);

/// Divides by the gcd of the entries; sign is preserved. Throws on zero.
IntVec make_primitive(IntVec v);

bool is_primitive(const IntVec& v);

} // namespace mixvol
