#pragma once

#include <stdexcept>
#include <string>

namespace goodsemi {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold (e.g. a ≰ b).
class DomainError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Two independently computed quantities that must agree did not.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace goodsemi
