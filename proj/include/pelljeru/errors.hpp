#pragma once

#include <stdexcept>
#include <string>

namespace pelljeru {

/// Base of every error raised by the library. The CLI prints what() verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Pell index above kMaxPellIndex (or below an operation's minimum).
class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

/// n < 2 where a ratio p_n / p_{n-1} is needed.
class DegenerateIndex : public Error {
 public:
  explicit DegenerateIndex(const std::string& what) : Error("degenerate index: " + what) {}
};

class CoordinateOutOfRange : public Error {
 public:
  explicit CoordinateOutOfRange(const std::string& what)
      : Error("coordinate out of range: " + what) {}
};

/// A dense grid request above the configured build limit.
class BuildLimitExceeded : public Error {
 public:
  explicit BuildLimitExceeded(const std::string& what)
      : Error("build limit exceeded: " + what) {}
};

class LevelTooSmall : public Error {
 public:
  explicit LevelTooSmall(const std::string& what) : Error("level too small: " + what) {}
};

class TooFewEntries : public Error {
 public:
  explicit TooFewEntries(const std::string& what) : Error("too few entries: " + what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("invalid argument: " + what) {}
};

class WriteError : public Error {
 public:
  explicit WriteError(const std::string& what) : Error("write failed: " + what) {}
};

}  // namespace pelljeru
