#pragma once

#include <stdexcept>
#include <string>

namespace megha {

enum class Err {
    NegativeValuation,
    CountMismatch,
    InvalidEdge,
    Overflow,
    NotABijection,
    NonSquare,
    GroundSetMismatch,
    BoundTooLarge,
    TooLarge,
    NotBinary,
    DegreeTooHigh,
    InvalidDecomposition,
    StateBudgetExceeded,
    NotACover,
    NotAModulator,
    NotCompleteBipartite,
    NotATree,
    BudgetExceeded,
    ComponentSolverFailure,
    InfeasibleSpec,
    OddOrder,
    NoApplicableSolver,
    ParseError,
    IoError,
    Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
  public:
    Err code;
    Error(Err c, const std::string& msg)
        : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void raise(Err c, const std::string& msg) { throw Error(c, msg); }

// True for error classes caused by the shape/contents of the input instance
// rather than by I/O or parsing; the CLI maps these to exit code 2.
bool is_structural(Err e);

} // namespace megha
