#pragma once

#include <doctest.h>

#include "weierstab/surface.hpp"

namespace test_support {

using weierstab::ChernClass;
using weierstab::Rational;
using weierstab::SurfaceParams;

inline Rational q(const char* text) { return Rational::parse(text); }

inline SurfaceParams params(const char* e, const char* m, const char* alpha, const char* lambda) {
    return SurfaceParams::create(q(e), q(m), q(alpha), q(lambda));
}

inline SurfaceParams default_params() { return params("0", "2", "1", "1"); }

} // namespace test_support

namespace doctest {
template <>
struct StringMaker<weierstab::Rational> {
    static String convert(const weierstab::Rational& r) { return r.str().c_str(); }
};
template <>
struct StringMaker<weierstab::ChernClass> {
    static String convert(const weierstab::ChernClass& x) { return x.str().c_str(); }
};
} // namespace doctest
