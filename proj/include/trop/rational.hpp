#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "trop/errors.hpp"

namespace trop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// canonical serialization: reduced "p/q" with q >= 1
inline std::string rat_to_string(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// accepts "p/q" and bare integers "p"; anything else (decimals in particular) is rejected
Rat rat_from_string(const std::string& s);

inline Rat rat_from_string(const std::string& s) {
    auto is_int_literal = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int_literal(s)) fail(errc::schema_error, "malformed rational '" + s + "'");
        return Rat(Int(s));
    }
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!is_int_literal(p) || !is_int_literal(q)) fail(errc::schema_error, "malformed rational '" + s + "'");
    Int den(q);
    if (den == 0) fail(errc::schema_error, "zero denominator in '" + s + "'");
    return Rat(Int(p), den);
}

} // namespace trop
