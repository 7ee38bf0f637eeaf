#pragma once

#include <string>
#include <string_view>

#include "ipc/proof.hpp"
#include "ipc/search.hpp"

namespace ipc {

// How theoremhood questions about an extension are answered: by semantic
// entailment over the added axioms (exact for this calculus, by the
// completeness property the pipeline demonstrates) or by bounded proof
// search (sound but incomplete).
struct OracleMode {
  enum class Kind { Semantic, Search };
  Kind kind = Kind::Semantic;
  int search_depth = 4;
  SearchLimits search_limits{};

  static OracleMode semantic() { return {}; }
  static OracleMode search(int depth) {
    return {Kind::Search, depth, SearchLimits{}};
  }
  bool operator==(const OracleMode&) const = default;
};

std::string to_string(const OracleMode& mode);       // "semantic" or "search:<depth>"
OracleMode oracle_mode_from_string(std::string_view text);  // inverse; throws Error

bool theoremhood_in(const Extension& ext, const Formula& f, const OracleMode& mode);

}  // namespace ipc
