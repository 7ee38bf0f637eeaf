#include "ipc/oracle.hpp"

#include <charconv>

#include "ipc/error.hpp"
#include "ipc/semantics.hpp"

namespace ipc {

std::string to_string(const OracleMode& mode) {
  if (mode.kind == OracleMode::Kind::Semantic) return "semantic";
  return "search:" + std::to_string(mode.search_depth);
}

OracleMode oracle_mode_from_string(std::string_view text) {
  if (text == "semantic") return OracleMode::semantic();
  if (text.rfind("search:", 0) == 0) {
    std::string_view num = text.substr(7);
    int depth = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), depth);
    if (ec == std::errc{} && ptr == num.data() + num.size() && depth >= 0)
      return OracleMode::search(depth);
  }
  throw Error("unknown oracle mode '" + std::string(text) +
              "' (expected semantic or search:<depth>)");
}

bool theoremhood_in(const Extension& ext, const Formula& f, const OracleMode& mode) {
  if (mode.kind == OracleMode::Kind::Semantic) return entails(ext.added_axioms, f);
  return search_proof(ext, f, mode.search_depth, mode.search_limits).has_value();
}

}  // namespace ipc
