#ifndef DIKROMA_ERRORS_HPP
#define DIKROMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dikroma {

// Malformed input text. `where` names the location ("line 3" / "byte 7").
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what) {}
};

// Instance exceeds a documented size cap or the configured time budget.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// A recorded run is not step-by-step legal for the given digraph.
class ReplayError : public std::runtime_error {
public:
    ReplayError(int step, const std::string& what)
        : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
    int step() const { return step_; }

private:
    int step_;
};

} // namespace dikroma

#endif
