#ifndef CARTIER_ERROR_HPP
#define CARTIER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cartier {

// Every failure mode the engine can report. The CLI maps these onto exit
// codes: Parse/Config -> 2, resource caps (Overflow/WordLimit/IterLimit) -> 3,
// verification failures (NoTestElement/Descent/NotFpure) -> 4.
enum class ErrorKind {
  Parse,
  Config,
  Overflow,
  WordLimit,
  IterLimit,
  NotMonomial,
  MissingMinimalPrimes,
  NoTestElement,
  DescentFailure,
  NotFpure,
  NotSupported,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace cartier

#endif
