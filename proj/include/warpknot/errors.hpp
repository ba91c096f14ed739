#pragma once

#include <stdexcept>
#include <string>

namespace warpknot {

// Every failure the library can signal, one code per condition so tests can
// match on the exact cause rather than on message text.
enum class errc {
  syntax_error,
  validation_error,
  not_divisible,
  degree_too_high,
  zero_polynomial,
  not_planar,
  bad_outer_face,
  bad_base_edge,
  length_mismatch,
  unknown_crossing,
  index_out_of_range,
  empty_diagram,
  empty_shadow,
  too_many_crossings,
  too_large,
  not_found,
  even_crossing_number,
  odd_crossing_number,
  no_crossings,
  missing_base,
  internal_inconsistency,
  bad_file,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::syntax_error: return "syntax_error";
    case errc::validation_error: return "validation_error";
    case errc::not_divisible: return "not_divisible";
    case errc::degree_too_high: return "degree_too_high";
    case errc::zero_polynomial: return "zero_polynomial";
    case errc::not_planar: return "not_planar";
    case errc::bad_outer_face: return "bad_outer_face";
    case errc::bad_base_edge: return "bad_base_edge";
    case errc::length_mismatch: return "length_mismatch";
    case errc::unknown_crossing: return "unknown_crossing";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::empty_diagram: return "empty_diagram";
    case errc::empty_shadow: return "empty_shadow";
    case errc::too_many_crossings: return "too_many_crossings";
    case errc::too_large: return "too_large";
    case errc::not_found: return "not_found";
    case errc::even_crossing_number: return "even_crossing_number";
    case errc::odd_crossing_number: return "odd_crossing_number";
    case errc::no_crossings: return "no_crossings";
    case errc::missing_base: return "missing_base";
    case errc::internal_inconsistency: return "internal_inconsistency";
    case errc::bad_file: return "bad_file";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace warpknot
