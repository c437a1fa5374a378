#ifndef SU2HOM_ERRORS_HPP
#define SU2HOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace su2hom {

// Consecutive boundary maps failed to compose to zero; the input is not a
// chain complex.
struct CompositionNotZero : std::runtime_error {
    explicit CompositionNotZero(const std::string& what) : std::runtime_error(what) {}
};

// quotient_by_gamma needs every cell to lie in a two-element orbit.
struct ActionNotFree : std::runtime_error {
    explicit ActionNotFree(const std::string& what) : std::runtime_error(what) {}
};

// Elements of two different ring presentations (or different n) were mixed.
struct RingMismatch : std::runtime_error {
    explicit RingMismatch(const std::string& what) : std::runtime_error(what) {}
};

// An operation that needs a fully determined element received one carrying
// an undetermined 2-torsion atom.
struct UndeterminedInput : std::runtime_error {
    explicit UndeterminedInput(const std::string& what) : std::runtime_error(what) {}
};

// restrict_generator only accepts u, v(i) and x(i,j).
struct UnsupportedGenerator : std::runtime_error {
    explicit UnsupportedGenerator(const std::string& what) : std::runtime_error(what) {}
};

// choose_a received I = J = {}.
struct EmptyInput : std::runtime_error {
    explicit EmptyInput(const std::string& what) : std::runtime_error(what) {}
};

// polynomial_growth_test needs at least max_degree + 2 samples.
struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

// A cell-level computation was requested beyond the configured size guard.
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace su2hom

#endif
