#pragma once

#include <string>
#include <string_view>

#include "ipc/proof.hpp"

namespace ipc {

struct ProofFile {
  Proof proof;
  Extension extension;
  bool operator==(const ProofFile&) const = default;
};

// Line-oriented proof file format (see FORMAT.md):
//
//   hyp: <formula> ; <formula>
//   ext: <formula>
//   1. <formula> | AX1{A:=<formula>,B:=<formula>}
//   2. <formula> | HYP 0
//   3. <formula> | MP 1 2
//
// Header lines are omitted when their list is empty. Step numbers are
// 1-based and sequential; HYP/EXT indices are 0-based; MP cites 1-based
// step numbers. write_proof emits the canonical form;
// read_proof(write_proof(p)) == p and write_proof(read_proof(t)) == t for
// canonical text, so emitted files round-trip bit-exactly.
std::string write_proof(const Proof& proof, const Extension& ext);
ProofFile read_proof(std::string_view text);

}  // namespace ipc
