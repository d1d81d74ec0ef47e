// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sessrec {

// Bad input data (files, config, CLI arguments). CLI exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Evaluation-protocol violations (short timespan, leakage). CLI exit code 3.
class ProtocolError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Broken precondition or internal invariant. CLI exit code 4.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class IngestError : public InputError {
public:
  using InputError::InputError;
};

class EmptyCorpusError : public InputError {
public:
  using InputError::InputError;
};

class DimensionMismatchError : public InputError {
public:
  using InputError::InputError;
};

class DuplicateItemError : public InputError {
public:
  using InputError::InputError;
};

class ZeroVectorError : public InputError {
public:
  using InputError::InputError;
};

class MissingEmbeddingError : public InputError {
public:
  using InputError::InputError;
};

class UnknownItemError : public InputError {
public:
  using InputError::InputError;
};

class ZeroVarianceError : public InputError {
public:
  using InputError::InputError;
};

}  // namespace sessrec
