#pragma once

#include <stdexcept>
#include <string>

namespace delsarte {

/// Base of all library errors. The category maps onto CLI exit codes.
class Error : public std::runtime_error {
public:
    enum class Category { invalid_input, precondition, consistency };

    Error(Category category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    Category category() const noexcept { return category_; }

private:
    Category category_;
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(Category::invalid_input, what) {}
};

/// Text that could not be parsed. `position` is a 0-based column or a 1-based line.
class ParseError : public InvalidInput {
public:
    ParseError(const std::string& what, std::size_t position)
        : InvalidInput(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DegenerateSupport : public InvalidInput {
public:
    explicit DegenerateSupport(const std::string& what) : InvalidInput(what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(Category::precondition, what) {}
};

/// det(A_f) = 0: the four-term method does not apply.
class SingularMatrix : public PreconditionError {
public:
    explicit SingularMatrix(const std::string& what) : PreconditionError(what) {}
};

class NonElliptic : public PreconditionError {
public:
    explicit NonElliptic(const std::string& what) : PreconditionError(what) {}
};

class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error(Category::consistency, what) {}
};

}  // namespace delsarte
