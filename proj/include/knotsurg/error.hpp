#pragma once

#include <stdexcept>
#include <string>

namespace knotsurg {

// Bad user input: malformed text, out-of-range indices, links where a knot
// is required, mismatched ranks. The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
  using InputError::InputError;
};

class IndexError : public InputError {
public:
  using InputError::InputError;
};

class ComponentError : public InputError {
public:
  using InputError::InputError;
};

class DimensionError : public InputError {
public:
  using InputError::InputError;
};

class DomainError : public InputError {
public:
  using InputError::InputError;
};

// A computation whose result is fixed by algebra came out wrong, e.g. a
// division that must be exact left a remainder. Exit code 2.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class InexactDivision : public InternalError {
public:
  using InternalError::InternalError;
};

} // namespace knotsurg
