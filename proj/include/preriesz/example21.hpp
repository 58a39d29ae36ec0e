#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "preriesz/goperator.hpp"
#include "preriesz/lmatrix.hpp"
#include "preriesz/report.hpp"

namespace preriesz {

struct TriSlotInvariants {
  bool partition = true;     ///< every position in blocks 1..K carries exactly one 1 among the T(e_i)
  bool limsup_one = true;    ///< limsup T(e_i) = 1 for i ≤ K, with a 1 in every block k ≥ i
  bool partial_sums = true;  ///< Σ_{i≤n} T(e_i) ≤ T(𝟙) on blocks 1..K for n ≤ K
  std::size_t blocks = 0;

  bool all() const { return partition && limsup_one && partial_sums; }
};

/// Direct enumeration over the first `blocks` blocks of the triangular partition.
TriSlotInvariants check_trislot_invariants(const GOperator& t, std::size_t blocks);

struct MajorantCandidate {
  std::string name;
  LMatrix s;
};

/// Hand-built candidate majorants of T: identity, multiples of the limit
/// functional, the matrices P and Q, and a few designed to pass the basis
/// comparison on small positions.
std::vector<MajorantCandidate> hand_built_candidates();

Report run_example21();
Report run_example23();

}  // namespace preriesz
