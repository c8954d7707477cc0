#ifndef ZECC_ERRORS_HPP
#define ZECC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zecc {

// Bad arguments to an operation (wrong parity, negative counts, shape
// mismatches). Maps to CLI exit code 2.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// A construction would exceed a configured size cap. Exit code 2.
class SizeError : public std::runtime_error {
public:
    SizeError(const std::string& what, std::uint64_t requested, std::uint64_t cap)
        : std::runtime_error(what), requested_(requested), cap_(cap) {}
    std::uint64_t requested() const { return requested_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

// Supplied data fails validation (bad clique cover, non-stochastic channel
// row, malformed distribution table). Exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Text or JSON input could not be parsed. Carries a 1-based line number when
// known (0 otherwise). Exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// An exact search ran out of node budget. The result is inexact; the best
// bound found so far is carried along. Exit code 3.
class BudgetExhaustedError : public std::runtime_error {
public:
    BudgetExhaustedError(const std::string& what, long long best_bound)
        : std::runtime_error(what), best_bound_(best_bound) {}
    long long best_bound() const { return best_bound_; }

private:
    long long best_bound_;
};

// Numerical solver failed to converge. Carries the last duality gap. Exit 3.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double last_gap)
        : std::runtime_error(what), last_gap_(last_gap) {}
    double last_gap() const { return last_gap_; }

private:
    double last_gap_;
};

}  // namespace zecc

#endif  // ZECC_ERRORS_HPP
