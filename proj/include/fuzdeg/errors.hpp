#pragma once

#include <stdexcept>
#include <string>

namespace fuzdeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size limit (group order, chain count, pair count, oracle enumeration) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A group spec string or CLI argument could not be parsed.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

// A Cayley table failed one of the group axioms.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A membership map handed to a fuzzy-level routine is not a fuzzy subgroup.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// The oracle grid has fewer positive values than the longest subgroup chain.
class DepthError : public Error {
 public:
  using Error::Error;
};

// Two independent characterizations disagreed. Reaching this is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzdeg
