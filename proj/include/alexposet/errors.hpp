#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alexposet {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class DuplicateLabel : public Error {
 public:
  explicit DuplicateLabel(const std::string& label)
      : Error("duplicate label '" + label + "'") {}
};

class EmptyPoset : public Error {
 public:
  EmptyPoset() : Error("operation undefined on the empty poset") {}
};

/// An enumeration would exceed its configured size limit.
/// `observed` is the count reached (or estimated) before aborting.
class GuardExceeded : public Error {
 public:
  GuardExceeded(const std::string& what, std::size_t limit, std::size_t observed)
      : Error(what + ": limit " + std::to_string(limit) + " exceeded (reached " +
              std::to_string(observed) + ")"),
        limit_(limit),
        observed_(observed) {}
  std::size_t limit() const noexcept { return limit_; }
  std::size_t observed() const noexcept { return observed_; }

 private:
  std::size_t limit_;
  std::size_t observed_;
};

class NotDownSet : public Error {
 public:
  using Error::Error;
};

class NotATopology : public Error {
 public:
  using Error::Error;
};

class NotABeatPoint : public Error {
 public:
  using Error::Error;
};

class HeightExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace alexposet
