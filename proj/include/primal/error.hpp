#ifndef PRIMAL_ERROR_HPP
#define PRIMAL_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primal {

enum class ErrorCode {
  IndexOutOfRange,
  EmptyDomain,
  DomainTooLarge,
  LimitExceeded,
  BudgetExceeded,
  CertificateFailure,
  MalformedInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::uint64_t count = 0)
      : std::runtime_error(what), code_(code), count_(count) {}

  ErrorCode code() const noexcept { return code_; }

  // Only meaningful for LimitExceeded: how many items the request would have
  // produced (saturated at UINT64_MAX).
  std::uint64_t count() const noexcept { return count_; }

 private:
  ErrorCode code_;
  std::uint64_t count_;
};

}  // namespace primal

#endif  // PRIMAL_ERROR_HPP
