#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsample {

using NodeId = std::uint32_t;
using Degree = std::uint32_t;

/// Malformed edge-list input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Coverage fraction above what exploration can reach (f > 1 - p_0).
class UnreachableCoverage : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative solver gave up; best residual is kept for diagnostics.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_residual, std::size_t iterations)
      : std::runtime_error(what), best_residual_(best_residual), iterations_(iterations) {}
  double best_residual() const noexcept { return best_residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double best_residual_;
  std::size_t iterations_;
};

}  // namespace gsample
