#ifndef MDPROD_ERROR_HPP
#define MDPROD_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mdprod {

enum class Errc {
  loop_arc,
  parallel_arc,
  vertex_out_of_range,
  not_strong,
  size_overflow,
  parse_error,
  invalid_config,
  unknown_set_name,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. `line()` is set when the error was
/// produced while reading an edge-list document.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  Errc code_;
  std::optional<std::size_t> line_;
};

}  // namespace mdprod

#endif  // MDPROD_ERROR_HPP
