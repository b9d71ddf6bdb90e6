#pragma once
// Error types shared across the library.
//
// DomainError: a precondition on parameters or input data does not hold.
// BudgetExceeded: a search ran out of its node or time budget; carries the
//   best bound found so far, clearly marked non-exact.
// BoundViolation: a verification run found a family beating a proved bound.
//   This should never fire; if it does, the counterexample is serialized in
//   `witness_json` so it can be inspected and replayed.
// PropertyViolation: an operation that promises to preserve a property
//   detected that the property broke; carries a JSON description.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace katona {

class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t nodes, std::string partial_bound)
        : std::runtime_error(what), nodes_explored(nodes), partial_bound(std::move(partial_bound)) {}
    std::uint64_t nodes_explored;
    std::string partial_bound;   // best objective value seen, as a fraction string
};

class BoundViolation : public std::runtime_error {
public:
    BoundViolation(const std::string& what, std::string witness_json)
        : std::runtime_error(what), witness_json(std::move(witness_json)) {}
    std::string witness_json;
};

class PropertyViolation : public std::runtime_error {
public:
    PropertyViolation(const std::string& what, std::string detail_json)
        : std::runtime_error(what), detail_json(std::move(detail_json)) {}
    std::string detail_json;
};

} // namespace katona
