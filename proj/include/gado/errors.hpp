#pragma once

#include <stdexcept>
#include <string>

namespace gado {

// Base class for errors raised by this library.
class GadoError : public std::runtime_error {
 public:
  explicit GadoError(const std::string& msg) : std::runtime_error(msg) {}
};

// A named entity (entry, tag) does not exist in the store.
class NotFoundError : public GadoError {
 public:
  explicit NotFoundError(const std::string& msg) : GadoError(msg) {}
};

// Store persistence failed: I/O error or malformed table file.
class StoreError : public GadoError {
 public:
  explicit StoreError(const std::string& msg) : GadoError(msg) {}
};

// A document could not be fetched from its URI.
class FetchError : public GadoError {
 public:
  explicit FetchError(const std::string& msg) : GadoError(msg) {}
};

}  // namespace gado
