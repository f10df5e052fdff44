#pragma once

#include <stdexcept>
#include <string>

namespace gwfano {

// Base class for every error raised by the library.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroConstantTerm : public MathError {
 public:
  using MathError::MathError;
};

class BadConstantTerm : public MathError {
 public:
  using MathError::MathError;
};

class NotInvertible : public MathError {
 public:
  using MathError::MathError;
};

// A coefficient was requested outside the range where it is known exactly.
class WindowUnderflow : public MathError {
 public:
  using MathError::MathError;
};

class OutOfRange : public MathError {
 public:
  using MathError::MathError;
};

class InsufficientBounds : public MathError {
 public:
  using MathError::MathError;
};

class InvalidGeometry : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace gwfano
