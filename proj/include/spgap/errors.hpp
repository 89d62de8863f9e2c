#pragma once

#include <stdexcept>
#include <string>

namespace spgap {

// Bad arguments or violated preconditions. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical routine or a mathematical self-check failed (solver did not
// converge, an invariant did not hold). Exit code 2.
class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File access and parse errors. Exit code 3.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace spgap
