#pragma once

#include <stdexcept>
#include <string>

namespace sigmaor {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Im(tau) <= 0, bad tolerances, malformed descriptors, and the like.
struct parameter_error : error {
    using error::error;
};

// A jet whose constant term is (numerically) zero was asked to act as a unit.
struct not_a_unit : error {
    using error::error;
};

// Cocharacter fails the lattice membership predicate.
struct not_in_lattice : error {
    using error::error;
};

struct incompatible_lattices : error {
    using error::error;
};

// A c2-matching hypothesis required by a section construction fails.
struct hypothesis_violated : error {
    using error::error;
};

struct division_near_zero : error {
    using error::error;
};

// A random sample landed on a zero of a theta function; callers resample.
struct sample_at_zero : error {
    using error::error;
};

}  // namespace sigmaor
