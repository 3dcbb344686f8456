#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace padic {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation needs a square root that the working field does not contain.
class UnsupportedExtension : public Error {
public:
    explicit UnsupportedExtension(const std::string& what,
                                  std::optional<long> needed_disc = std::nullopt)
        : Error(what), needed_disc_(needed_disc) {}

    /// Squarefree discriminant that would make the operation succeed, when known.
    std::optional<long> needed_disc() const { return needed_disc_; }

private:
    std::optional<long> needed_disc_;
};

class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class DegenerateConfiguration : public Error {
public:
    using Error::Error;
};

class WrongClass : public Error {
public:
    using Error::Error;
};

class TypeIPoint : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class InvalidContext : public Error {
public:
    using Error::Error;
};

/// A supplied family escapes ellipticity; carries the offending word.
class NotAllElliptic : public Error {
public:
    NotAllElliptic(const std::string& what, std::string word)
        : Error(what), word_(std::move(word)) {}
    const std::string& word() const { return word_; }

private:
    std::string word_;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace padic
