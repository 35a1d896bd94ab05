#pragma once

#include <stdexcept>
#include <string>

namespace nlab {

/// Bad user input or precondition violation (CLI exit code 2).
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured node/size/wall-clock budget was exceeded (CLI exit code 3).
/// Never a silent wrong answer: callers either get a result or this.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant violation (CLI exit code 1).
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nlab
