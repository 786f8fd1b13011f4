// Copyright 2026 Hashrep Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HASHREP_RESOURCE_STATE_H
#define HASHREP_RESOURCE_STATE_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hashrep/gf2.hpp"
#include "hashrep/stabilizer_tableau.hpp"

namespace hashrep {

class Rng;

/// One of the 24 single-qubit Cliffords, stored by its conjugation action on
/// X and Z (letter and sign of the image).
class SingleQubitClifford {
 public:
  struct SignedPauli {
    bool x = false, z = false;  // letter bits; (1,1) is Y, (0,0) only for I
    bool neg = false;
    bool operator==(const SignedPauli&) const = default;
  };

  SingleQubitClifford();  // identity

  static SingleQubitClifford identity() { return SingleQubitClifford(); }
  static SingleQubitClifford hadamard();
  static SingleQubitClifford phase_gate();      // S
  static SingleQubitClifford phase_gate_dag();  // S+

  /// All 24 elements, in canonical (sorted-encoding) order.
  static const std::vector<SingleQubitClifford>& all();

  /// Composition: `*this` applied first, then `next`.
  SingleQubitClifford then(const SingleQubitClifford& next) const;
  SingleQubitClifford inverse() const;

  /// Image of a Hermitian Pauli (x, z) under conjugation U P U+.
  SignedPauli conjugate(bool x, bool z) const;

  SignedPauli x_image() const { return x_image_; }
  SignedPauli z_image() const { return z_image_; }

  /// Shortest H/S word generating the element, applied left to right
  /// ("HS" means H first, then S). "I" for the identity.
  std::string word() const;
  /// Index in all(), stable across runs.
  int index() const;

  bool operator==(const SingleQubitClifford&) const = default;

 private:
  SingleQubitClifford(SignedPauli xi, SignedPauli zi) : x_image_(xi), z_image_(zi) {}
  SignedPauli x_image_, z_image_;
};

enum class IoLabel { kInput, kOutput };

/// Graph state plus per-qubit local Cliffords and input/output labeling:
/// the stored form of a measurement-based resource.
struct GraphResource {
  std::vector<BitVec> adjacency;  // symmetric, zero diagonal
  std::vector<SingleQubitClifford> local_cliffords;
  std::vector<IoLabel> io_labels;

  size_t num_qubits() const { return adjacency.size(); }
  std::vector<size_t> inputs() const;
  std::vector<size_t> outputs() const;

  /// Rebuilds the stabilizer state: CZ-prepared graph state with the local
  /// Cliffords applied on top.
  StabilizerTableau to_tableau() const;

  /// Adjacency-list JSON export:
  /// {"qubits":N,"io":["input"|"output",...],
  ///  "local_cliffords":[{"word":...,"x_image":...,"z_image":...},...],
  ///  "edges":[[i,j],...]}
  std::string to_json() const;
};

/// Hashing circuit on `n` pairs: per round, CNOTs from the subset members
/// into the target pair, which is then measured. Targets are measured once
/// and never reused; m = n - rounds surviving pairs.
struct HashingRound {
  std::vector<int> subset;  // pair indices, must contain target
  int target = 0;
};

struct HashingCircuit {
  int n = 0;
  std::vector<HashingRound> rounds;

  int m() const { return n - static_cast<int>(rounds.size()); }
  /// Pair indices never measured, ascending.
  std::vector<int> survivors() const;
  void validate() const;
};

/// Uniformly random valid circuit for tests and the CLI.
HashingCircuit random_circuit(int n, int rounds, Rng& rng);

/// Resource state of the hashing map: the circuit applied to the second
/// halves of n Bell pairs, target qubits measured out in the +1 branch.
/// n inputs + m outputs; n is capped at 32.
GraphResource jamiolkowski_resource(const HashingCircuit& circuit);

/// Repeater-station resource: Bell-measures the output qubits of two hashing
/// resources pairwise (the entanglement swap), leaving exactly 2n inputs.
GraphResource station_resource(const GraphResource& left, const GraphResource& right);

/// Graph extraction with local-Clifford pivoting; labels default to all-input
/// when omitted. Throws std::logic_error if the internal round-trip check
/// fails.
GraphResource to_graph_state(const StabilizerTableau& tableau,
                             std::vector<IoLabel> labels = {});

struct ReadInResult {
  StabilizerTableau state;
  /// Bell outcome bits (k, l) per coupled input, in coupling order.
  std::vector<std::pair<int, int>> outcomes;
  /// Positions of the resource output qubits in `state`.
  std::vector<size_t> output_positions;
};

/// Couples `sources[k]` of `state` to the k-th input of `resource` via Bell
/// measurements (the read-in). Measured qubits are removed. Corrections are
/// not applied here; byproducts propagate through the map and may be applied
/// at the very end.
ReadInResult apply_resource(const StabilizerTableau& state,
                            const std::vector<size_t>& sources,
                            const GraphResource& resource, Rng* rng,
                            bool force_trivial_outcomes = false);

/// Pauli byproduct of read-in outcomes pushed through the circuit:
/// X^l Z^k enters on each input, CNOT conjugation carries it forward, target
/// measurements absorb it into outcome flips.
struct PropagatedByproduct {
  BitVec x_letters;  // on surviving outputs, ascending survivor order
  BitVec z_letters;
  std::vector<int> target_flips;  // one per round
};

PropagatedByproduct propagate_byproduct(const HashingCircuit& circuit,
                                        std::span<const std::pair<int, int>> outcomes);

struct DirectRunResult {
  StabilizerTableau state;
  std::vector<size_t> output_positions;
};

/// Direct (non-measurement-based) protocol run: n Bell pairs, the circuit on
/// their second halves, targets Z-measured with the given outcome bits.
DirectRunResult run_circuit_direct(const HashingCircuit& circuit,
                                   std::span<const int> target_outcomes);

}  // namespace hashrep

#endif
