#pragma once

#include <stdexcept>
#include <string>

namespace pdisc {

/// A violated library contract (bad field value, point outside the raster
/// cube, grid cell cap exceeded, ...). Mapped to exit code 2 by the CLI.
class ContractError : public std::runtime_error {
public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested acceleration rate is not bracketed by the gamma bounds.
/// Mapped to exit code 3 by the CLI.
class RateUnreachableError : public std::runtime_error {
public:
  explicit RateUnreachableError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace pdisc
