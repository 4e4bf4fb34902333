#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace zolo {

using cplx = std::complex<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// bad configuration or violated preconditions; the CLI exits with 1
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// a computation could not reach its accuracy contract; the CLI exits with 2
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class MapNotResolved : public NumericalFailure {
 public:
  MapNotResolved(const std::string& what, double residual)
      : NumericalFailure(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

using WarningSink = std::function<void(const std::string&)>;

// Replaces the sink used by warn(). Passing an empty function restores std::clog.
void set_warning_sink(WarningSink sink);
void warn(const std::string& msg);

}  // namespace zolo
