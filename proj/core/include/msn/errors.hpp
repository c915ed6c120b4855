#ifndef MSN_ERRORS_HPP
#define MSN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msn {

/// Base class for every error raised by this library.
class MsnError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- network construction -------------------------------------------------

class ValidationError : public MsnError {
public:
    using MsnError::MsnError;
};

/// An arc or identity pair references an account that was never declared.
class UnknownAccountError : public ValidationError {
public:
    UnknownAccountError(std::string stratum, std::string local_id)
        : ValidationError("unknown account '" + local_id + "' in stratum '" + stratum + "'"),
          stratum_(std::move(stratum)),
          local_id_(std::move(local_id)) {}

    const std::string& stratum() const { return stratum_; }
    const std::string& local_id() const { return local_id_; }

private:
    std::string stratum_;
    std::string local_id_;
};

/// An identity pair links two distinct accounts of the same stratum.
class SameStratumPairError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DuplicateArcError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SelfLoopArcError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// --- lookups --------------------------------------------------------------

class UnknownActorError : public MsnError {
public:
    explicit UnknownActorError(const std::string& name)
        : MsnError("unknown actor '" + name + "'") {}
};

class UnknownStratumError : public MsnError {
public:
    explicit UnknownStratumError(const std::string& name)
        : MsnError("unknown stratum '" + name + "'") {}
};

// --- statistics -----------------------------------------------------------

/// A constant input makes the correlation undefined.
class ZeroVarianceError : public MsnError {
public:
    ZeroVarianceError() : MsnError("zero variance: correlation undefined") {}
};

class LengthMismatchError : public MsnError {
public:
    LengthMismatchError(std::size_t x, std::size_t y)
        : MsnError("cannot correlate vectors of length " + std::to_string(x) + " and " +
                   std::to_string(y) + " (need two equal lengths of at least 2)") {}
};

class InsufficientOverlapError : public MsnError {
public:
    InsufficientOverlapError(const std::string& s1, const std::string& s2, std::size_t shared)
        : MsnError("strata '" + s1 + "' and '" + s2 + "' share " + std::to_string(shared) +
                   " actor(s); at least 2 required") {}
};

class EmptyActorSetError : public MsnError {
public:
    EmptyActorSetError() : MsnError("cannot rank an empty actor set") {}
};

// --- generator ------------------------------------------------------------

class InvalidSpecError : public MsnError {
public:
    using MsnError::MsnError;
};

// --- file formats ---------------------------------------------------------

/// Carries the file and 1-based line the problem was found on.
class ParseError : public MsnError {
public:
    ParseError(std::string file, std::size_t line, const std::string& reason)
        : MsnError(file + ":" + std::to_string(line) + ": " + reason),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const { return file_; }
    std::size_t line() const { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

}  // namespace msn

#endif  // MSN_ERRORS_HPP
