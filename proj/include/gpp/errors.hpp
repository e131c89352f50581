#pragma once

#include <stdexcept>
#include <string>

namespace gpp {

// Bad user input: malformed files, out-of-domain parameters. CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// The operation declines to run: a formula outside its validity range, or a
// graph over budget. CLI exit code 3.
class RefusalError : public std::runtime_error {
public:
    explicit RefusalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Graph order exceeds the configured vertex budget.
class VertexBudgetError : public RefusalError {
public:
    VertexBudgetError(int order, int budget)
        : RefusalError("graph order " + std::to_string(order) +
                       " exceeds vertex budget " + std::to_string(budget)) {}
};

// Enumeration aborted mid-run: the search visited more nodes than allowed.
class NodeBudgetError : public RefusalError {
public:
    explicit NodeBudgetError(unsigned long long budget)
        : RefusalError("enumeration exceeded node budget " + std::to_string(budget) +
                       "; result would be partial") {}
};

}  // namespace gpp
