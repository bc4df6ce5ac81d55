#pragma once

#include <stdexcept>
#include <string>

namespace rcds {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Transport-level failures: connect/accept errors, truncated streams,
// frames above the size cap.
class TransportError : public Error {
public:
    using Error::Error;
};

class FrameTooLarge : public TransportError {
public:
    using TransportError::TransportError;
};

// Peers disagree on negotiated parameters (magic, version, tree params,
// IBLT geometry).
class ParamMismatch : public Error {
public:
    using Error::Error;
};

// Two distinct byte strings mapped to the same 64-bit hash.
class CatalogCollision : public Error {
public:
    using Error::Error;
};

// Set-difference application was asked to remove an element that is not
// present; the reconciled delta cannot be trusted.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

// Interactive reconciliation did not converge within the doubling budget.
class MaxRoundsExceeded : public Error {
public:
    using Error::Error;
};

// The true child ordering is not a walk of the level graph.
class TraceNotFound : public Error {
public:
    using Error::Error;
};

// Fewer complete walks exist than the requested trace number.
class TraceExhausted : public Error {
public:
    using Error::Error;
};

// A peer requested a hash this side never had.
class UnknownHash : public Error {
public:
    using Error::Error;
};

// Post-session verification failed and fallback was not permitted,
// or a peer signalled an unrecoverable failure.
class VerifyMismatch : public Error {
public:
    using Error::Error;
};

// Unexpected frame kind or malformed payload.
class ProtocolError : public Error {
public:
    using Error::Error;
};

}  // namespace rcds
