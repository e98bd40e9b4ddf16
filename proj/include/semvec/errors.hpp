#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semvec {

/// Raised when input data violates a format or a domain invariant.
/// `position()` is a 1-based line or record number when one applies, 0 otherwise.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what, std::size_t position = 0)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownTokenError : public DataError {
 public:
  explicit UnknownTokenError(const std::string& token)
      : DataError("unknown token: " + token), token_(token) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace semvec
