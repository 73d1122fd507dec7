#pragma once

#include <stdexcept>
#include <string>

namespace scarf {

// Domain-level failures. Each carries a stable `kind()` tag so the CLI can
// emit machine-readable reasons without string matching on what().
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct NotPointedError : DomainError {
    explicit NotPointedError(const std::string& w) : DomainError("NotPointed", w) {}
};

struct BudgetExceededError : DomainError {
    explicit BudgetExceededError(const std::string& w) : DomainError("BudgetExceeded", w) {}
};

struct NotSublatticeError : DomainError {
    explicit NotSublatticeError(const std::string& w) : DomainError("NotSublattice", w) {}
};

struct InfiniteIndexError : DomainError {
    explicit InfiniteIndexError(const std::string& w) : DomainError("InfiniteIndex", w) {}
};

struct GcdNotOneError : DomainError {
    explicit GcdNotOneError(const std::string& w) : DomainError("GcdNotOne", w) {}
};

struct WrongDimensionError : DomainError {
    explicit WrongDimensionError(const std::string& w) : DomainError("WrongDimension", w) {}
};

struct NonGenericInputError : DomainError {
    explicit NonGenericInputError(const std::string& w) : DomainError("NonGenericInput", w) {}
};

struct IncomparableRegionsError : DomainError {
    explicit IncomparableRegionsError(const std::string& w) : DomainError("IncomparableRegions", w) {}
};

struct DegenerateGradingError : DomainError {
    explicit DegenerateGradingError(const std::string& w) : DomainError("DegenerateGrading", w) {}
};

}  // namespace scarf
