#pragma once

#include <stdexcept>
#include <string>

namespace hspoly {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* An operation's mathematical hypotheses are violated (repeated roots,
 * complex roots, zero step, ...). CLI maps these to exit code 2. */
struct hypothesis_error : error {
    using error::error;
};

/* A pole was hit: vanishing leading coefficient on the iteration lattice,
 * an uncancelled Gamma_h pole, a vanishing Bethe-Ansatz denominator. */
struct pole_error : hypothesis_error {
    using hypothesis_error::hypothesis_error;
};

/* A numeric procedure failed to converge or to certify its result.
 * CLI maps these to exit code 3. */
struct numeric_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

}  // namespace hspoly
