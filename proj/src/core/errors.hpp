#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stheat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Zero or near-zero pivot met during a factorization without pivoting.
class SingularFactorizationError : public Error {
public:
    SingularFactorizationError(std::size_t pivot_index, double pivot_value)
        : Error("singular factorization: pivot " + std::to_string(pivot_value) +
                " at index " + std::to_string(pivot_index)),
          pivot_index_(pivot_index),
          pivot_value_(pivot_value) {}

    std::size_t pivot_index() const { return pivot_index_; }
    double pivot_value() const { return pivot_value_; }

private:
    std::size_t pivot_index_;
    double pivot_value_;
};

class NotSpdError : public Error {
public:
    using Error::Error;
};

/// Eigenvector matrix numerically singular (cond2 above the defectiveness threshold).
class DefectivePencilError : public Error {
public:
    explicit DefectivePencilError(double cond)
        : Error("defective pencil: eigenvector matrix cond2 = " + std::to_string(cond)),
          cond_(cond) {}

    double cond() const { return cond_; }

private:
    double cond_;
};

class SingularBlockError : public Error {
public:
    using Error::Error;
};

class GeometryError : public Error {
public:
    using Error::Error;
};

}  // namespace stheat
