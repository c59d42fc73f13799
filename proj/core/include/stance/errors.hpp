#pragma once

#include <stdexcept>
#include <string>

namespace stance {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A required column or field is missing from an input.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A data row failed to parse; the message names the offending row.
class RowError : public Error {
 public:
  using Error::Error;
};

/// A resource file (lexicon, knowledge base, model) failed to load.
class LoadError : public Error {
 public:
  using Error::Error;
};

/// An invalid combination of settings, feature groups, or resources.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace stance
