#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lipq {

using Complex = std::complex<double>;

// Error taxonomy mirrors the CLI exit codes: domain/config -> 2,
// numerical -> 3, io -> 4.
class Error : public std::runtime_error {
public:
  enum class Kind { Domain, Config, Numerical, Io };
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

inline Error domain_error(const std::string& msg) { return Error(Error::Kind::Domain, msg); }
inline Error config_error(const std::string& msg) { return Error(Error::Kind::Config, msg); }
inline Error numerical_error(const std::string& msg) { return Error(Error::Kind::Numerical, msg); }
inline Error io_error(const std::string& msg) { return Error(Error::Kind::Io, msg); }

}  // namespace lipq
