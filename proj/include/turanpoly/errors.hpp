#ifndef TURANPOLY_ERRORS_HPP
#define TURANPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace turanpoly {

// Error categories surfaced through the library API and mapped to CLI
// failure reports.
enum class Errc {
  invalid_argument,
  parse_error,
  out_of_table,
  not_normalized,
  non_log_concave,
  negative_discriminant,
  division_by_zero,
  unsupported_g,
  family_mismatch,
  non_squarefree,
  bracket_collision,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc c);

}  // namespace turanpoly

#endif
