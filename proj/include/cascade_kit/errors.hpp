#pragma once

#include <stdexcept>
#include <string>

namespace ckit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unparsable or non-canonical type label.
struct InvalidType : Error {
  using Error::Error;
};

/// Rank outside the bounds of the family (e.g. B1, D3, E5).
struct InvalidRank : Error {
  using Error::Error;
};

struct OrderOverflow : Error {
  using Error::Error;
};

/// Some root takes a value outside {-1,0,1,2} on the grading element.
struct NotAdmissible : Error {
  NotAdmissible(std::string root_text, std::string value_text)
      : Error("not admissible: root " + root_text + " takes value " + value_text),
        root(std::move(root_text)),
        value(std::move(value_text)) {}
  std::string root;
  std::string value;
};

struct DecompositionMismatch : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

struct NoChain : Error {
  using Error::Error;
};

struct NotClassical : Error {
  using Error::Error;
};

}  // namespace ckit
