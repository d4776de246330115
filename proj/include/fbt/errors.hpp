#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace fbt {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using WarningHandler = std::function<void(const std::string&)>;

// Installs a process-wide sink for truncation and resolution warnings.
// The default handler writes to stderr.
void set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

}  // namespace fbt
