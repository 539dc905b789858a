#pragma once

#include <stdexcept>
#include <string>

namespace graphkit {

/// Misuse of the API: stepping an invalid iterator, stale handles,
/// deleting through a foreign iterator.
class usage_error : public std::logic_error {
public:
  explicit usage_error(const std::string& what) : std::logic_error(what) {}
};

/// Malformed external input: bad edge-list files, infeasible generator
/// parameters, negative lengths, cyclic input where a DAG is required.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Operation not supported by the target: mutation of an immutable
/// backend, writing through a read-only accessor.
class capability_error : public std::logic_error {
public:
  explicit capability_error(const std::string& what) : std::logic_error(what) {}
};

/// A library invariant failed to hold. Always a bug, never user input.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace graphkit
