#include "mdprod/error.hpp"

namespace mdprod {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::loop_arc: return "LoopArc";
    case Errc::parallel_arc: return "ParallelArc";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::not_strong: return "NotStrong";
    case Errc::size_overflow: return "SizeOverflow";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::unknown_set_name: return "UnknownSetName";
  }
  return "Unknown";
}

}  // namespace mdprod
