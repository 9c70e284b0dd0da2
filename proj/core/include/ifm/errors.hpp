#pragma once

#include <stdexcept>
#include <string>

namespace ifm {

/// Base for domain failures that callers are expected to handle. Argument
/// validation failures are reported as std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A probability came out further than the round-off budget from [0, 1].
class ProbabilityOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The triangularizing transform is singular (|s| or |t| below tolerance).
class DegenerateDecomposition : public Error {
 public:
  using Error::Error;
};

/// No splitter count up to the search cap meets the target.
class NotReachable : public Error {
 public:
  NotReachable(const std::string& what, int best_n, double best_p)
      : Error(what), best_n_(best_n), best_p_(best_p) {}

  int best_n() const noexcept { return best_n_; }
  double best_p() const noexcept { return best_p_; }

 private:
  int best_n_;
  double best_p_;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class NonMonotoneBracket : public Error {
 public:
  using Error::Error;
};

}  // namespace ifm
