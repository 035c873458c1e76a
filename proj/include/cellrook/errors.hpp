#pragma once

#include <stdexcept>
#include <string>

namespace cellrook {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyCollectionError : public Error {
 public:
  EmptyCollectionError() : Error("collection of cells must be non-empty") {}
};

class BoardTooLargeError : public Error {
 public:
  using Error::Error;
};

class CellNotInCollectionError : public Error {
 public:
  using Error::Error;
};

class KOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class InvalidConfigError : public Error {
 public:
  using Error::Error;
};

class NotCanonicalError : public Error {
 public:
  using Error::Error;
};

class NotSquareBoardError : public Error {
 public:
  using Error::Error;
};

class NotDominoStableError : public Error {
 public:
  using Error::Error;
};

class EmptyResidueError : public Error {
 public:
  EmptyResidueError() : Error("gluing of an empty residue is undefined") {}
};

class NotGridError : public Error {
 public:
  using Error::Error;
};

class RankOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Thrown by batch verification when a shape fails a check; carries the
/// offending shape in grid text form.
class CounterexampleError : public Error {
 public:
  CounterexampleError(std::string what, std::string shape_text)
      : Error(std::move(what)), shape_text_(std::move(shape_text)) {}
  const std::string& shape_text() const { return shape_text_; }

 private:
  std::string shape_text_;
};

}  // namespace cellrook
