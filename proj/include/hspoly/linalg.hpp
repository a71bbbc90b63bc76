#pragma once

#include "hspoly/rational.hpp"

#include <vector>

namespace hspoly {

struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> data;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, Rational(0)) {}

    Rational& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

/* Exact nullspace basis in the reduced echelon normal form: each basis
 * vector carries value 1 at "its" free column and 0 at every other free
 * column, so the output is deterministic for a given matrix. Elimination
 * runs fraction-free (Bareiss) on denominator-cleared integer rows; no
 * floating point anywhere. Every returned vector is re-verified against
 * the input matrix. */
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

int exact_rank(const RationalMatrix& m);

}  // namespace hspoly
