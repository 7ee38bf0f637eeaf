#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ipc {

// Base class for everything the toolkit throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed formula or proof-file text. `offset` is the byte position of the
// offending character within the input handed to the parser.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset_in)
      : Error(what), offset(offset_in) {}
  std::size_t offset = 0;
};

// A proof step failed to verify. `step` is 0-based; messages carry the
// 1-based step numbers used by the proof file format.
struct ProofError : Error {
  ProofError(const std::string& what, std::size_t step_in)
      : Error(what), step(step_in) {}
  std::size_t step = 0;
};

// A configured resource bound was exceeded: truth-table width, universe
// size, or proof-search fact count.
struct LimitError : Error {
  using Error::Error;
};

// countermodel() refuses tautologies; no falsifying valuation exists.
struct TautologyError : Error {
  using Error::Error;
};

// extract_valuation() could not settle some universe formula: either
// neither QQA nor QA is a theorem at this bound (Undefined) or both are
// (Contradiction, i.e. the extension is not Q-consistent).
struct ExtractionError : Error {
  enum class Kind { Undefined, Contradiction };
  ExtractionError(const std::string& what, Kind kind_in, std::string formula_in)
      : Error(what), kind(kind_in), formula(std::move(formula_in)) {}
  Kind kind;
  std::string formula;  // canonical text of the formula concerned
};

}  // namespace ipc
