#pragma once

#include <stdexcept>
#include <string>

namespace mathverify {

/// Candidate text does not conform to the expression grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Evaluation left the real domain (log of a nonpositive value, gamma pole, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The guard-digit protocol never converged.
class InstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A declared-but-unimplemented function tier was referenced.
class UnsupportedTierError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnboundVariableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An interval operation was asked to leave its domain (division by an
/// interval containing zero, log of an interval touching zero, ...).
/// Callers are expected to bisect or give up.
class IntervalDomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientPrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ManifestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structural violation in a Ramsey certificate file.
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Candidate file is malformed for the problem's expected shape.
class CandidateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mathverify
