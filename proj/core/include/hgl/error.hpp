#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different fields.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// Shapes or ambient dimensions do not agree.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Invalid field description, or an operation unsupported over the given field.
class FieldError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class GroupTableError : public Error {
public:
    using Error::Error;
};

/// A documented mathematical invariant failed on data that should satisfy it.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class EnumerationUnsupported : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class PosetError : public Error {
public:
    using Error::Error;
};

/// Either a value or the reason it could not be produced, plus an optional witness.
template <class T>
class Result {
public:
    static Result ok(T value) { return Result(std::move(value)); }

    static Result fail(std::string reason, std::vector<std::size_t> witness = {})
    {
        Result r;
        r.reason_ = std::move(reason);
        r.witness_ = std::move(witness);
        return r;
    }

    explicit operator bool() const noexcept { return value_.has_value(); }
    bool has_value() const noexcept { return value_.has_value(); }

    const T& value() const&
    {
        if (!value_) throw Error("Result::value on failure: " + reason_);
        return *value_;
    }
    T&& value() &&
    {
        if (!value_) throw Error("Result::value on failure: " + reason_);
        return std::move(*value_);
    }
    const T* operator->() const { return &value(); }

    const std::string& reason() const noexcept { return reason_; }
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    Result() = default;
    explicit Result(T value) : value_(std::move(value)) {}

    std::optional<T> value_;
    std::string reason_;
    std::vector<std::size_t> witness_;
};

} // namespace hgl
