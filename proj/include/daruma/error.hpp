#pragma once

#include <stdexcept>
#include <string>

namespace daruma {

// Base class for all library errors. Subclasses map onto the CLI exit
// codes: configuration/schema problems exit with 2, runtime problems with 3.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class OutOfRange : public Error {
public:
  explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

class OutOfHorizon : public Error {
public:
  explicit OutOfHorizon(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Schema violation with a JSON-pointer-ish path to the offending field.
class SchemaError : public Error {
public:
  SchemaError(const std::string& path, const std::string& msg)
      : Error(path + ": " + msg), path_(path) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

class BadTarget : public Error {
public:
  explicit BadTarget(const std::string& msg) : Error(msg) {}
};

class UnknownScenario : public Error {
public:
  explicit UnknownScenario(const std::string& msg) : Error(msg) {}
};

class MismatchedTimestamps : public Error {
public:
  explicit MismatchedTimestamps(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class UnknownCurrentChannel : public Error {
public:
  explicit UnknownCurrentChannel(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace daruma
