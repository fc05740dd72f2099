#ifndef CUTFORGE_ERRORS_HPP
#define CUTFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cutforge {

// A query on lazily presented data ran out of its inspection budget.
// This is an honest "don't know", not a bug.
struct undecided_error : std::runtime_error {
    int fuel;
    explicit undecided_error(int f, const std::string& what = "undecided at fuel limit")
        : std::runtime_error(what + " (fuel=" + std::to_string(f) + ")"), fuel(f) {}
};

struct unsupported_stream_op : std::runtime_error {
    explicit unsupported_stream_op(const std::string& what)
        : std::runtime_error("unsupported stream operation: " + what) {}
};

struct precondition_error : std::logic_error {
    explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

// A bounded-height search found an element of the target field filling a
// cut that the caller asserted was unfilled.
struct realized_in_field : std::runtime_error {
    std::string witness;
    explicit realized_in_field(std::string w)
        : std::runtime_error("cut is realized by " + w), witness(std::move(w)) {}
};

}  // namespace cutforge

#endif
