#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace ssdual {

/// Domain error with a stable machine-readable code ("Singular",
/// "NotMonotone", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// A transform produced negative entries; carries every offending position.
class NotMonotoneError : public Error {
 public:
  NotMonotoneError(const std::string& message,
                   std::vector<std::pair<Eigen::Index, Eigen::Index>> entries)
      : Error("NotMonotone", message), negative_entries(std::move(entries)) {}

  std::vector<std::pair<Eigen::Index, Eigen::Index>> negative_entries;
};

/// A prescribed-FSST matrix has negative entries; carries every (k,s) pair.
class NotRealizableError : public Error {
 public:
  NotRealizableError(const std::string& message,
                     std::vector<std::pair<Eigen::Index, Eigen::Index>> entries)
      : Error("NotRealizable", message), negative_entries(std::move(entries)) {}

  std::vector<std::pair<Eigen::Index, Eigen::Index>> negative_entries;
};

}  // namespace ssdual
