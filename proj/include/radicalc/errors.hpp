#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace radicalc {

/// Half-open byte range [begin, end) into the source text of an expression.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const Span&) const = default;
};

class Error : public std::runtime_error {
public:
    Error(const std::string& what, std::optional<Span> span = std::nullopt)
        : std::runtime_error(what), span_(span) {}

    const std::optional<Span>& span() const noexcept { return span_; }
    virtual const char* kind() const noexcept = 0;

private:
    std::optional<Span> span_;
};

/// Input outside the mathematical domain of an operation (b <= 0, m = 0,
/// irrational radicand, division by an irrational sum, ...).
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DomainError"; }
};

/// A work limit (factorization steps, enumerated tuples) ran out. The input
/// is too large for the configured budget; no wrong answer was produced.
class BudgetExceeded : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "BudgetExceeded"; }
};

/// A radical sum references a prime or exponent denominator that the
/// given reduced set cannot represent.
class BasisMismatch : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "BasisMismatch"; }
};

/// A numeric interval is too wide to decide the requested question.
class PrecisionInsufficient : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "PrecisionInsufficient"; }
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset, std::vector<std::string> expected)
        : Error(what, Span{offset, offset + 1}), offset_(offset), expected_(std::move(expected)) {}

    const char* kind() const noexcept override { return "SyntaxError"; }
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// `rt(x, 0)`: a radical index must be at least 1.
class IndexError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "IndexError"; }
};

} // namespace radicalc
