#pragma once

#include <stdexcept>
#include <string>

namespace legdga {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AlgebraMismatchError : public Error {
public:
    AlgebraMismatchError() : Error("operands belong to different ambient algebras") {}
};

class UnknownGeneratorError : public Error {
public:
    explicit UnknownGeneratorError(const std::string& name)
        : Error("unknown generator '" + name + "'") {}
};

/// A multiplication tried to build a word longer than the algebra's cap.
class WordCapError : public Error {
public:
    explicit WordCapError(std::size_t cap)
        : Error("product exceeds the word length cap of " + std::to_string(cap)) {}
};

/// An iteration budget ran out (rewrite steps, enumeration, search space).
class BudgetError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace legdga
