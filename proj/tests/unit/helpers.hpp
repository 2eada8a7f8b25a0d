#pragma once

#include "protoric/lattice.hpp"

#include <doctest.h>

#include <sstream>

namespace doctest {

template <>
struct StringMaker<protoric::IntVec> {
    static String convert(const protoric::IntVec& v) { return v.to_string().c_str(); }
};

template <>
struct StringMaker<protoric::IntMatrix> {
    static String convert(const protoric::IntMatrix& m) { return m.to_string().c_str(); }
};

} // namespace doctest

namespace testing {

inline std::vector<protoric::IntVec> vecs(std::initializer_list<protoric::IntVec> vs)
{
    return std::vector<protoric::IntVec>(vs);
}

} // namespace testing
