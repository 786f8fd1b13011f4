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

#include "hashrep/resource_state.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "hashrep/rng.hpp"
#include "row_phase.hpp"

namespace hashrep {

namespace {

/// i-exponent of the Hermitian single-qubit product sigma(a,b) * sigma(c,d).
int pauli_phase(bool a, bool b, bool c, bool d) {
  if ((a && b && d && !c) || (a && !b && c && d) || (!a && b && c && !d)) return 1;
  if ((a && b && c && !d) || (a && !b && d && !c) || (!a && b && c && d)) return -1;
  return 0;
}

int encode(const SingleQubitClifford& c) {
  const auto xi = c.x_image();
  const auto zi = c.z_image();
  return (xi.x << 5) | (xi.z << 4) | (xi.neg << 3) | (zi.x << 2) | (zi.z << 1) |
         static_cast<int>(zi.neg);
}

struct CliffordCatalog {
  std::vector<SingleQubitClifford> elements;  // sorted by encode()
  std::map<int, std::string> words;           // encode -> shortest H/S word
};

const CliffordCatalog& catalog() {
  static const CliffordCatalog cat = [] {
    CliffordCatalog c;
    std::map<int, std::string> seen;
    std::vector<std::pair<SingleQubitClifford, std::string>> frontier{
        {SingleQubitClifford::identity(), ""}};
    seen[encode(SingleQubitClifford::identity())] = "";
    while (!frontier.empty()) {
      std::vector<std::pair<SingleQubitClifford, std::string>> next;
      for (const auto& [elem, word] : frontier) {
        for (const auto& [gen, letter] :
             {std::pair{SingleQubitClifford::hadamard(), 'H'},
              std::pair{SingleQubitClifford::phase_gate(), 'S'}}) {
          const SingleQubitClifford composed = elem.then(gen);
          const int key = encode(composed);
          if (!seen.contains(key)) {
            seen[key] = word + letter;
            next.push_back({composed, word + letter});
          }
        }
      }
      frontier = std::move(next);
    }
    if (seen.size() != 24) throw std::logic_error("Clifford catalog must have 24 elements");
    for (auto& [key, word] : seen) {
      c.words[key] = word.empty() ? "I" : word;
    }
    // Rebuild elements in encode order by replaying their words.
    for (const auto& [key, word] : seen) {
      SingleQubitClifford elem = SingleQubitClifford::identity();
      const std::string& w = c.words.at(key);
      if (w != "I") {
        for (char g : w) {
          elem = elem.then(g == 'H' ? SingleQubitClifford::hadamard()
                                    : SingleQubitClifford::phase_gate());
        }
      }
      c.elements.push_back(elem);
    }
    return c;
  }();
  return cat;
}

}  // namespace

SingleQubitClifford::SingleQubitClifford()
    : x_image_{true, false, false}, z_image_{false, true, false} {}

SingleQubitClifford SingleQubitClifford::hadamard() {
  return SingleQubitClifford({false, true, false}, {true, false, false});
}

SingleQubitClifford SingleQubitClifford::phase_gate() {
  // S X S+ = Y, S Z S+ = Z.
  return SingleQubitClifford({true, true, false}, {false, true, false});
}

SingleQubitClifford SingleQubitClifford::phase_gate_dag() {
  // S+ X S = -Y.
  return SingleQubitClifford({true, true, true}, {false, true, false});
}

SingleQubitClifford::SignedPauli SingleQubitClifford::conjugate(bool x, bool z) const {
  if (!x && !z) return {false, false, false};
  if (x && !z) return x_image_;
  if (!x && z) return z_image_;
  // Y = i X Z, so the image is i * x_image * z_image.
  const int g = 1 + pauli_phase(x_image_.x, x_image_.z, z_image_.x, z_image_.z);
  const int mod = ((g % 4) + 4) % 4;
  if (mod != 0 && mod != 2) throw std::logic_error("SingleQubitClifford: non-real Y image");
  SignedPauli out;
  out.x = x_image_.x != z_image_.x;
  out.z = x_image_.z != z_image_.z;
  out.neg = (mod == 2) != (x_image_.neg != z_image_.neg);
  return out;
}

SingleQubitClifford SingleQubitClifford::then(const SingleQubitClifford& next) const {
  // (next . this): conjugation acts as next(this(P)).
  const auto push = [&](const SignedPauli& p) {
    SignedPauli img = next.conjugate(p.x, p.z);
    img.neg = img.neg != p.neg;
    return img;
  };
  return SingleQubitClifford(push(x_image_), push(z_image_));
}

SingleQubitClifford SingleQubitClifford::inverse() const {
  for (const auto& cand : all()) {
    if (this->then(cand) == SingleQubitClifford::identity()) return cand;
  }
  throw std::logic_error("SingleQubitClifford: inverse not found");
}

const std::vector<SingleQubitClifford>& SingleQubitClifford::all() {
  return catalog().elements;
}

std::string SingleQubitClifford::word() const { return catalog().words.at(encode(*this)); }

int SingleQubitClifford::index() const {
  const auto& elems = all();
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] == *this) return static_cast<int>(i);
  }
  throw std::logic_error("SingleQubitClifford: not in catalog");
}

std::vector<size_t> GraphResource::inputs() const {
  std::vector<size_t> out;
  for (size_t q = 0; q < io_labels.size(); ++q) {
    if (io_labels[q] == IoLabel::kInput) out.push_back(q);
  }
  return out;
}

std::vector<size_t> GraphResource::outputs() const {
  std::vector<size_t> out;
  for (size_t q = 0; q < io_labels.size(); ++q) {
    if (io_labels[q] == IoLabel::kOutput) out.push_back(q);
  }
  return out;
}

StabilizerTableau GraphResource::to_tableau() const {
  const size_t n = num_qubits();
  if (n == 0) throw std::invalid_argument("GraphResource: empty");
  StabilizerTableau t = StabilizerTableau::computational_zero(n);
  for (size_t q = 0; q < n; ++q) t.apply_h(q);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (adjacency[i].get(j)) t.apply_cz(i, j);
    }
  }
  for (size_t q = 0; q < n; ++q) {
    const std::string w = local_cliffords[q].word();
    if (w == "I") continue;
    for (char g : w) {
      if (g == 'H') {
        t.apply_h(q);
      } else {
        t.apply_s(q);
      }
    }
  }
  return t;
}

std::string GraphResource::to_json() const {
  nlohmann::json doc;
  doc["qubits"] = num_qubits();
  auto& io = doc["io"] = nlohmann::json::array();
  for (IoLabel l : io_labels) io.push_back(l == IoLabel::kInput ? "input" : "output");
  auto& lc = doc["local_cliffords"] = nlohmann::json::array();
  const auto describe = [](const SingleQubitClifford::SignedPauli& p) {
    std::string s = p.neg ? "-" : "+";
    s += p.x && p.z ? "Y" : (p.x ? "X" : "Z");
    return s;
  };
  for (const auto& c : local_cliffords) {
    lc.push_back({{"word", c.word()},
                  {"x_image", describe(c.x_image())},
                  {"z_image", describe(c.z_image())}});
  }
  auto& edges = doc["edges"] = nlohmann::json::array();
  for (size_t i = 0; i < num_qubits(); ++i) {
    for (size_t j = i + 1; j < num_qubits(); ++j) {
      if (adjacency[i].get(j)) edges.push_back({i, j});
    }
  }
  return doc.dump(2);
}

std::vector<int> HashingCircuit::survivors() const {
  std::vector<uint8_t> measured(n, 0);
  for (const auto& r : rounds) measured[r.target] = 1;
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (!measured[i]) out.push_back(i);
  }
  return out;
}

void HashingCircuit::validate() const {
  if (n < 1) throw std::invalid_argument("HashingCircuit: n must be >= 1");
  if (static_cast<int>(rounds.size()) > n) {
    throw std::invalid_argument("HashingCircuit: more rounds than pairs");
  }
  std::vector<uint8_t> measured(n, 0);
  for (const auto& r : rounds) {
    if (r.target < 0 || r.target >= n) throw std::invalid_argument("HashingCircuit: bad target");
    if (measured[r.target]) throw std::invalid_argument("HashingCircuit: target reused");
    if (r.subset.empty()) throw std::invalid_argument("HashingCircuit: empty subset");
    bool has_target = false;
    for (int j : r.subset) {
      if (j < 0 || j >= n) throw std::invalid_argument("HashingCircuit: bad subset index");
      if (measured[j] && j != r.target) {
        throw std::invalid_argument("HashingCircuit: subset uses a measured pair");
      }
      has_target |= j == r.target;
    }
    if (!has_target) throw std::invalid_argument("HashingCircuit: subset must contain target");
    measured[r.target] = 1;
  }
}

HashingCircuit random_circuit(int n, int rounds, Rng& rng) {
  if (rounds >= n) throw std::invalid_argument("random_circuit: need rounds < n");
  HashingCircuit c;
  c.n = n;
  std::vector<int> alive(n);
  for (int i = 0; i < n; ++i) alive[i] = i;
  for (int r = 0; r < rounds; ++r) {
    // Non-empty random subset of the still-alive pairs; one member is the target.
    std::vector<int> subset;
    while (subset.empty()) {
      subset.clear();
      for (int q : alive) {
        if (rng.next_bit()) subset.push_back(q);
      }
    }
    const int target = subset[rng.next_below(subset.size())];
    c.rounds.push_back({subset, target});
    alive.erase(std::find(alive.begin(), alive.end(), target));
  }
  c.validate();
  return c;
}

namespace {

/// Z-measures qubit q expecting (or forcing) the given outcome bit, then
/// flips |1> results to |0> so the qubit can be removed.
void measure_flip_zero(StabilizerTableau& t, size_t q, std::optional<int> forced, Rng* rng) {
  const auto res = t.measure(q, MeasureBasis::kZ, forced, rng);
  if (forced && res.deterministic && res.outcome != *forced) {
    throw std::logic_error("measure_flip_zero: deterministic outcome defies the forced branch");
  }
  if (res.outcome == 1) t.apply_x(q);
}

void remove_descending(StabilizerTableau& t, std::vector<size_t> qubits) {
  std::sort(qubits.begin(), qubits.end());
  for (auto it = qubits.rbegin(); it != qubits.rend(); ++it) t.remove_zeroed_qubit(*it);
}

/// Applies the circuit's CNOT rounds to the tableau on given qubit indices,
/// measuring each round's target (forced outcome bit per round).
std::vector<size_t> apply_circuit_gates(StabilizerTableau& t, const HashingCircuit& circuit,
                                        const std::vector<size_t>& qubit_of_pair,
                                        std::span<const int> outcomes) {
  std::vector<size_t> measured;
  for (size_t r = 0; r < circuit.rounds.size(); ++r) {
    const auto& round = circuit.rounds[r];
    for (int j : round.subset) {
      if (j != round.target) t.apply_cnot(qubit_of_pair[j], qubit_of_pair[round.target]);
    }
    const int forced = outcomes.empty() ? 0 : outcomes[r];
    measure_flip_zero(t, qubit_of_pair[round.target], forced, nullptr);
    measured.push_back(qubit_of_pair[round.target]);
  }
  return measured;
}

std::vector<size_t> positions_after_removal(const std::vector<size_t>& keep,
                                            const std::vector<size_t>& removed) {
  std::vector<size_t> sorted_removed = removed;
  std::sort(sorted_removed.begin(), sorted_removed.end());
  std::vector<size_t> out;
  out.reserve(keep.size());
  for (size_t q : keep) {
    const size_t below =
        std::lower_bound(sorted_removed.begin(), sorted_removed.end(), q) - sorted_removed.begin();
    out.push_back(q - below);
  }
  return out;
}

}  // namespace

GraphResource jamiolkowski_resource(const HashingCircuit& circuit) {
  circuit.validate();
  if (circuit.n > 32) throw std::invalid_argument("jamiolkowski_resource: n capped at 32");
  const size_t n = static_cast<size_t>(circuit.n);

  // Inputs [0, n), circuit side [n, 2n), one Bell pair per column.
  StabilizerTableau t = StabilizerTableau::computational_zero(2 * n);
  for (size_t i = 0; i < n; ++i) {
    t.apply_h(i);
    t.apply_cnot(i, n + i);
  }
  std::vector<size_t> qubit_of_pair(n);
  for (size_t i = 0; i < n; ++i) qubit_of_pair[i] = n + i;
  const auto measured = apply_circuit_gates(t, circuit, qubit_of_pair, {});
  remove_descending(t, measured);

  std::vector<IoLabel> labels(t.num_qubits(), IoLabel::kInput);
  for (size_t q = n; q < t.num_qubits(); ++q) labels[q] = IoLabel::kOutput;
  return to_graph_state(t, std::move(labels));
}

GraphResource station_resource(const GraphResource& left, const GraphResource& right) {
  const auto louts = left.outputs();
  const auto routs = right.outputs();
  if (louts.empty() || louts.size() != routs.size()) {
    throw std::invalid_argument("station_resource: output counts must match and be nonzero");
  }
  StabilizerTableau t = left.to_tableau().tensor_with(right.to_tableau());
  const size_t offset = left.num_qubits();
  std::vector<size_t> measured;
  for (size_t j = 0; j < louts.size(); ++j) {
    // Entanglement swap: Bell measurement in the trivial branch.
    t.bell_measure(louts[j], offset + routs[j], std::pair<int, int>{0, 0}, nullptr);
    measured.push_back(louts[j]);
    measured.push_back(offset + routs[j]);
  }
  remove_descending(t, measured);
  std::vector<IoLabel> labels(t.num_qubits(), IoLabel::kInput);
  return to_graph_state(t, std::move(labels));
}

GraphResource to_graph_state(const StabilizerTableau& tableau, std::vector<IoLabel> labels) {
  const size_t n = tableau.num_qubits();
  if (labels.empty()) labels.assign(n, IoLabel::kInput);
  if (labels.size() != n) throw std::invalid_argument("to_graph_state: label count mismatch");

  const size_t words = (n + 63) / 64;
  std::vector<uint64_t> x(n * words, 0), z(n * words, 0);
  std::vector<uint8_t> sign(n, 0);
  for (size_t r = 0; r < n; ++r) {
    for (size_t q = 0; q < n; ++q) {
      if (tableau.stab_x(r, q)) x[r * words + (q >> 6)] |= uint64_t{1} << (q & 63);
      if (tableau.stab_z(r, q)) z[r * words + (q >> 6)] |= uint64_t{1} << (q & 63);
    }
    sign[r] = tableau.stab_sign(r) ? 1 : 0;
  }
  const auto getbit = [&](const std::vector<uint64_t>& m, size_t r, size_t q) {
    return ((m[r * words + (q >> 6)] >> (q & 63)) & 1) != 0;
  };
  const auto mul_into = [&](size_t target, size_t source) {
    internal::multiply_row_into(std::span<const uint64_t>(&x[source * words], words),
                                std::span<const uint64_t>(&z[source * words], words),
                                sign[source], std::span<uint64_t>(&x[target * words], words),
                                std::span<uint64_t>(&z[target * words], words), sign[target]);
  };
  const auto swap_rows = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t w = 0; w < words; ++w) {
      std::swap(x[a * words + w], x[b * words + w]);
      std::swap(z[a * words + w], z[b * words + w]);
    }
    std::swap(sign[a], sign[b]);
  };

  // Per-qubit ops applied to the state during reduction (composed in
  // application order); the stored local Cliffords are their inverses.
  std::vector<SingleQubitClifford> applied(n, SingleQubitClifford::identity());
  const auto apply_h_col = [&](size_t q) {
    for (size_t r = 0; r < n; ++r) {
      const bool xr = getbit(x, r, q), zr = getbit(z, r, q);
      sign[r] ^= static_cast<uint8_t>(xr && zr);
      if (xr != zr) {
        x[r * words + (q >> 6)] ^= uint64_t{1} << (q & 63);
        z[r * words + (q >> 6)] ^= uint64_t{1} << (q & 63);
      }
    }
    applied[q] = applied[q].then(SingleQubitClifford::hadamard());
  };
  const auto apply_sdg_col = [&](size_t q) {
    for (size_t r = 0; r < n; ++r) {
      const bool xr = getbit(x, r, q), zr = getbit(z, r, q);
      const bool nz = xr != zr;
      if (nz != zr) z[r * words + (q >> 6)] ^= uint64_t{1} << (q & 63);
      sign[r] ^= static_cast<uint8_t>(xr && nz);
    }
    applied[q] = applied[q].then(SingleQubitClifford::phase_gate_dag());
  };
  const auto apply_z_col = [&](size_t q) {
    for (size_t r = 0; r < n; ++r) sign[r] ^= static_cast<uint8_t>(getbit(x, r, q));
    applied[q] = applied[q].then(SingleQubitClifford::identity().then(
        SingleQubitClifford::phase_gate().then(SingleQubitClifford::phase_gate())));
  };

  // Hadamards until the X block reaches full rank, then RREF to the identity.
  for (size_t pass = 0; pass <= 4 * n; ++pass) {
    // Row echelon on the X block.
    size_t next = 0;
    std::vector<uint8_t> is_pivot_col(n, 0);
    for (size_t col = 0; col < n && next < n; ++col) {
      size_t pivot = n;
      for (size_t r = next; r < n; ++r) {
        if (getbit(x, r, col)) {
          pivot = r;
          break;
        }
      }
      if (pivot == n) continue;
      swap_rows(pivot, next);
      for (size_t r = 0; r < n; ++r) {
        if (r != next && getbit(x, r, col)) mul_into(r, next);
      }
      is_pivot_col[col] = 1;
      ++next;
    }
    if (next == n) break;
    if (pass == 4 * n) throw std::logic_error("to_graph_state: X block never reached full rank");
    // A zero-X row is pure Z; a Hadamard on one of its non-pivot support
    // columns turns it into an X pivot.
    size_t h_col = n;
    for (size_t r = next; r < n && h_col == n; ++r) {
      for (size_t q = 0; q < n; ++q) {
        if (getbit(z, r, q) && !is_pivot_col[q]) {
          h_col = q;
          break;
        }
      }
    }
    if (h_col == n) {
      for (size_t r = next; r < n && h_col == n; ++r) {
        for (size_t q = 0; q < n; ++q) {
          if (getbit(z, r, q)) {
            h_col = q;
            break;
          }
        }
      }
    }
    if (h_col == n) throw std::logic_error("to_graph_state: stabilizer rank deficit");
    apply_h_col(h_col);
  }

  // Sort rows so the X block is the identity.
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = n;
    for (size_t r = col; r < n; ++r) {
      if (getbit(x, r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) throw std::logic_error("to_graph_state: lost X pivot");
    swap_rows(pivot, col);
    for (size_t r = 0; r < n; ++r) {
      if (r != col && getbit(x, r, col)) mul_into(r, col);
    }
  }

  // Clear Y's on the diagonal, then normalize signs.
  for (size_t q = 0; q < n; ++q) {
    if (getbit(z, q, q)) apply_sdg_col(q);
  }
  for (size_t q = 0; q < n; ++q) {
    if (sign[q]) apply_z_col(q);
  }

  GraphResource out;
  out.adjacency.assign(n, BitVec(n));
  for (size_t r = 0; r < n; ++r) {
    for (size_t q = 0; q < n; ++q) {
      if (getbit(z, r, q)) out.adjacency[r].set(q, true);
    }
    if (sign[r]) throw std::logic_error("to_graph_state: sign normalization failed");
  }
  for (size_t i = 0; i < n; ++i) {
    if (out.adjacency[i].get(i)) throw std::logic_error("to_graph_state: diagonal not cleared");
    for (size_t j = 0; j < n; ++j) {
      if (out.adjacency[i].get(j) != out.adjacency[j].get(i)) {
        throw std::logic_error("to_graph_state: adjacency not symmetric");
      }
    }
  }
  out.local_cliffords.reserve(n);
  for (size_t q = 0; q < n; ++q) out.local_cliffords.push_back(applied[q].inverse());
  out.io_labels = std::move(labels);

  if (!out.to_tableau().same_state(tableau)) {
    throw std::logic_error("to_graph_state: round-trip check failed");
  }
  return out;
}

ReadInResult apply_resource(const StabilizerTableau& state, const std::vector<size_t>& sources,
                            const GraphResource& resource, Rng* rng,
                            bool force_trivial_outcomes) {
  const auto inputs = resource.inputs();
  if (inputs.size() != sources.size()) {
    throw std::invalid_argument("apply_resource: source count must match resource inputs");
  }
  ReadInResult out{state.tensor_with(resource.to_tableau()), {}, {}};
  const size_t offset = state.num_qubits();

  std::vector<size_t> measured;
  for (size_t k = 0; k < sources.size(); ++k) {
    const std::optional<std::pair<int, int>> forced =
        force_trivial_outcomes ? std::optional(std::pair{0, 0}) : std::nullopt;
    const auto [kk, ll] = out.state.bell_measure(sources[k], offset + inputs[k], forced, rng);
    if (kk) out.state.apply_x(sources[k]);
    if (ll) out.state.apply_x(offset + inputs[k]);
    out.outcomes.push_back({kk, ll});
    measured.push_back(sources[k]);
    measured.push_back(offset + inputs[k]);
  }
  std::vector<size_t> output_qubits;
  for (size_t q : resource.outputs()) output_qubits.push_back(offset + q);
  out.output_positions = positions_after_removal(output_qubits, measured);
  remove_descending(out.state, measured);
  return out;
}

PropagatedByproduct propagate_byproduct(const HashingCircuit& circuit,
                                        std::span<const std::pair<int, int>> outcomes) {
  circuit.validate();
  if (outcomes.size() != static_cast<size_t>(circuit.n)) {
    throw std::invalid_argument("propagate_byproduct: outcome count mismatch");
  }
  const size_t n = static_cast<size_t>(circuit.n);
  BitVec px(n), pz(n);
  for (size_t k = 0; k < n; ++k) {
    if (outcomes[k].second) px.set(k, true);  // amplitude bit -> X
    if (outcomes[k].first) pz.set(k, true);   // phase bit -> Z
  }
  PropagatedByproduct out{BitVec(0), BitVec(0), {}};
  for (const auto& round : circuit.rounds) {
    for (int j : round.subset) {
      if (j == round.target) continue;
      // CNOT conjugation: X_c -> X_c X_t, Z_t -> Z_c Z_t.
      if (px.get(j)) px.flip(round.target);
      if (pz.get(round.target)) pz.flip(j);
    }
    out.target_flips.push_back(px.get(round.target) ? 1 : 0);
    px.set(round.target, false);
    pz.set(round.target, false);
  }
  const auto survivors = circuit.survivors();
  out.x_letters = BitVec(survivors.size());
  out.z_letters = BitVec(survivors.size());
  for (size_t i = 0; i < survivors.size(); ++i) {
    out.x_letters.set(i, px.get(survivors[i]));
    out.z_letters.set(i, pz.get(survivors[i]));
  }
  return out;
}

DirectRunResult run_circuit_direct(const HashingCircuit& circuit,
                                   std::span<const int> target_outcomes) {
  circuit.validate();
  if (!target_outcomes.empty() && target_outcomes.size() != circuit.rounds.size()) {
    throw std::invalid_argument("run_circuit_direct: outcome count mismatch");
  }
  const size_t n = static_cast<size_t>(circuit.n);
  StabilizerTableau t = StabilizerTableau::computational_zero(2 * n);
  for (size_t i = 0; i < n; ++i) {
    t.apply_h(i);
    t.apply_cnot(i, n + i);
  }
  std::vector<size_t> qubit_of_pair(n);
  for (size_t i = 0; i < n; ++i) qubit_of_pair[i] = n + i;
  const auto measured = apply_circuit_gates(t, circuit, qubit_of_pair, target_outcomes);

  std::vector<size_t> outputs;
  for (int s : circuit.survivors()) outputs.push_back(n + static_cast<size_t>(s));
  DirectRunResult out{StabilizerTableau::computational_zero(1), {}};
  out.output_positions = positions_after_removal(outputs, measured);
  remove_descending(t, measured);
  out.state = std::move(t);
  return out;
}

}  // namespace hashrep
