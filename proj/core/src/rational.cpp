#include "mixvol/rational.hpp"

#include <cctype>

namespace mixvol {

Rat parse_rat(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw InputError("empty rational literal");
    auto ok_int = [](const std::string& s) {
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            if (!ok_int(t)) throw InputError("bad rational literal '" + text + "'");
            return Rat(Int(t));
        }
        std::string ns = t.substr(0, slash), ds = t.substr(slash + 1);
        if (!ok_int(ns) || !ok_int(ds)) throw InputError("bad rational literal '" + text + "'");
        Int den(ds);
        if (den == 0) throw InputError("zero denominator in '" + text + "'");
        return Rat(Int(ns)) / Rat(den);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad rational literal '") + text + "': " + e.what());
    }
}

std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

IntVec make_primitive(IntVec v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    check_input(g != 0, "primitive vector must be non-zero");
    for (auto& x : v) x /= g;
    return v;
}

IntVec primitive_direction(const Point& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = numerator(v[i] * Rat(l));
    return make_primitive(std::move(w));
}

bool is_primitive(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g == 1;
}

} // namespace mixvol
