//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cellfeat {

class Error: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SyntaxError: public Error {
public:
  SyntaxError(std::size_t position, const std::string &message)
      : Error("syntax error at position " + std::to_string(position) + ": "
              + message),
        position_(position), detail_(message) { }

  std::size_t position() const noexcept { return position_; }
  const std::string &detail() const noexcept { return detail_; }

private:
  std::size_t position_;
  std::string detail_;
};

class DuplicateBond: public Error {
public:
  DuplicateBond(int a, int b)
      : Error("duplicate bond between atoms " + std::to_string(a) + " and "
              + std::to_string(b)),
        a_(a), b_(b) { }

  int first() const noexcept { return a_; }
  int second() const noexcept { return b_; }

private:
  int a_, b_;
};

class SchemaError: public Error {
public:
  SchemaError(std::string path, const std::string &message)
      : Error("schema error at " + path + ": " + message),
        path_(std::move(path)) { }

  const std::string &path() const noexcept { return path_; }

private:
  std::string path_;
};

class UnknownElement: public Error {
public:
  explicit UnknownElement(const std::string &symbol)
      : Error("unknown element '" + symbol + "'"), symbol_(symbol) { }

  const std::string &symbol() const noexcept { return symbol_; }

private:
  std::string symbol_;
};

class InvalidGraph: public Error {
public:
  using Error::Error;
};

class DimensionOutOfRange: public Error {
public:
  using Error::Error;
};

class InvalidComplex: public Error {
public:
  using Error::Error;
};

class NonConvergence: public Error {
public:
  using Error::Error;
};

class EmptyDimension: public Error {
public:
  using Error::Error;
};

class PadOverflow: public Error {
public:
  using Error::Error;
};

class FormatVersionMismatch: public Error {
public:
  using Error::Error;
};

class LengthMismatch: public Error {
public:
  using Error::Error;
};

class ShapeMismatch: public Error {
public:
  using Error::Error;
};

class NonFiniteWeights: public Error {
public:
  using Error::Error;
};

class BadK: public Error {
public:
  using Error::Error;
};

class BadLength: public Error {
public:
  using Error::Error;
};

class BadP: public Error {
public:
  using Error::Error;
};

class UnknownControl: public Error {
public:
  using Error::Error;
};

} // namespace cellfeat
