#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace fkdeg {

/// Malformed edge-list input. Carries the 1-based line number of the offending line.
class parse_error : public std::runtime_error {
public:
  parse_error(int line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

/// An exhaustive search was asked to run on a graph above its order limit.
class limit_error : public std::runtime_error {
public:
  limit_error(int order, int limit)
      : std::runtime_error("graph order " + std::to_string(order) + " exceeds limit " +
                           std::to_string(limit)),
        order_(order), limit_(limit) {}

  int order() const noexcept { return order_; }
  int limit() const noexcept { return limit_; }

private:
  int order_;
  int limit_;
};

/// A constructive procedure was invoked outside its hypothesis.
class precondition_error : public std::invalid_argument {
public:
  enum class kind { girth, parameter, degree_inequality, not_forest };

  precondition_error(kind k, const std::string &what) : std::invalid_argument(what), kind_(k) {}

  kind which() const noexcept { return kind_; }

private:
  kind kind_;
};

class timeout_error : public std::runtime_error {
public:
  timeout_error() : std::runtime_error("deadline exceeded") {}
};

/// Cooperative deadline; long-running searches poll it and throw timeout_error.
struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;

  static Deadline none() { return {}; }
  static Deadline after(std::chrono::milliseconds d) {
    return {std::chrono::steady_clock::now() + d};
  }

  bool expired() const { return at && std::chrono::steady_clock::now() >= *at; }
  void check() const {
    if (expired())
      throw timeout_error();
  }
};

} // namespace fkdeg
