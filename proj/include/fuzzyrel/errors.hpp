#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzyrel {

/// Operand shapes do not agree (matrix columns vs. vector length, ragged data, ...).
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A value lies outside [0,1] by more than the construction tolerance.
class OutOfUnitInterval : public std::domain_error {
public:
    explicit OutOfUnitInterval(const std::string& what) : std::domain_error(what) {}
};

/// The covering enumeration would generate more candidates than allowed.
class EnumerationBudgetExceeded : public std::runtime_error {
public:
    EnumerationBudgetExceeded(std::size_t required, std::size_t cap)
        : std::runtime_error("covering enumeration needs " + std::to_string(required) +
                             " combinations, cap is " + std::to_string(cap)),
          required_(required),
          cap_(cap) {}

    std::size_t required() const noexcept { return required_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t required_;
    std::size_t cap_;
};

/// The subset characterization was asked to range over too many index subsets.
class SubsetCapExceeded : public std::runtime_error {
public:
    SubsetCapExceeded(std::size_t columns, std::size_t cap)
        : std::runtime_error("subset characterization over " + std::to_string(columns) +
                             " columns exceeds cap of " + std::to_string(cap)) {}
};

/// A brute-force oracle would exceed its grid or sample budget.
class OracleBudgetExceeded : public std::runtime_error {
public:
    explicit OracleBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fuzzyrel
