#ifndef ELLBENCH_TYPES_HPP
#define ELLBENCH_TYPES_HPP

#include <stdexcept>
#include <string>

namespace ellbench {

enum class Domain { rectangle, annulus, shell };
enum class Variant { dirichlet, robin };
enum class FieldKind { state, adjoint };
enum class ControlKind { distributed, flux, temperature, simultaneous };

enum class Errc {
  invalid_argument,
  constraint_violation,
  internal_inconsistency,
};

// Library error; the C API maps code() onto integer error codes.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

const char* to_string(Domain d);
const char* to_string(Variant v);
const char* to_string(ControlKind k);

} // namespace ellbench

#endif
