#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relcyc {

/* Base of every exception thrown by this library. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Exact division in Z[x] requested but no quotient exists. */
struct NotDivisible : Error {
    using Error::Error;
};

/* The chosen prime divides the leading coefficient. */
struct BadPrime : Error {
    using Error::Error;
};

/* Hensel lifting called with factors that are not coprime, or with an
 * input that is not squarefree modulo the prime. */
struct LiftPreconditionViolated : Error {
    using Error::Error;
};

/* alpha^m has degree smaller than deg(f): f_m is not squarefree and the
 * F_m construction is undefined at this exponent. */
struct DefectivePower : Error {
    using Error::Error;
};

/* A structural identity that must hold mathematically failed in the
 * implementation (e.g. a guaranteed exact division left a remainder). */
struct InternalInconsistency : Error {
    using Error::Error;
};

/* Base polynomial has 0 as a root (f(0) == 0). */
struct ZeroRoot : Error {
    using Error::Error;
};

/* Base polynomial is not monic. */
struct NotMonic : Error {
    using Error::Error;
};

/* Base polynomial is reducible over the rationals. */
struct NotIrreducible : Error {
    using Error::Error;
};

/* Polynomial expression text does not conform to the grammar. Carries the
 * byte offset of the offending token and a description of what was
 * expected there. */
struct ParseError : Error {
    ParseError(std::size_t pos, std::string expected_tokens, const std::string& what_arg)
        : Error(what_arg), position(pos), expected(std::move(expected_tokens)) {}
    std::size_t position;
    std::string expected;
};

}  // namespace relcyc
