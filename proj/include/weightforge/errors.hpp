#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weightforge {

/// Base class of all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- field construction / arithmetic ---

/// q has two distinct prime factors (or q < 2).
struct NotPrimePower : Error {
    using Error::Error;
};

/// A resource guard tripped: q > 256, q^k beyond the enumeration cap,
/// or an intermediate value would overflow 2^62.
struct CapExceeded : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// An element encoding >= q (or an out-of-range index).
struct OutOfRange : Error {
    using Error::Error;
};

// --- linear algebra ---

struct DimensionMismatch : Error {
    using Error::Error;
};

/// A generator matrix whose rank is below its row count.
struct NotFullRank : Error {
    NotFullRank(const std::string& msg, std::size_t computed_rank)
        : Error(msg), rank(computed_rank) {}
    std::size_t rank;
};

// --- enumeration / translates ---

struct EnumerationCapExceeded : CapExceeded {
    using CapExceeded::CapExceeded;
};

/// The translate vector x lies inside the code.
struct XInCode : Error {
    using Error::Error;
};

/// extend_full_translate was given a translate whose coset spectrum
/// has a collision.
struct TranslateNotFull : Error {
    using Error::Error;
};

/// refine_translate was given a translate whose coset spectrum is
/// already full.
struct NoCollision : Error {
    using Error::Error;
};

/// The code is the whole space (n = k); no translate exists.
struct NoVectorOutsideCode : Error {
    using Error::Error;
};

/// Requested distinct-weight count outside {1, ..., 2^k - 1}.
struct SOutOfRange : Error {
    using Error::Error;
};

/// A code exceeded the distinct-weight bound, or a trace failed the
/// length-bound inequality. Either indicates an implementation bug.
struct BoundViolated : Error {
    using Error::Error;
};

/// An enumeration-verified construction postcondition failed.
struct VerificationFailed : Error {
    using Error::Error;
};

// --- file format ---

struct ParseError : Error {
    using Error::Error;
};

}  // namespace weightforge
