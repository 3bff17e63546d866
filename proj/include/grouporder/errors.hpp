#ifndef GROUPORDER_ERRORS_HPP
#define GROUPORDER_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace grouporder {

// Domain-rule violation (rank mismatch, radius cap, ...). `name()` is the
// stable machine-readable tag echoed by the CLI; `what()` adds context.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

} // namespace grouporder

#endif // GROUPORDER_ERRORS_HPP
