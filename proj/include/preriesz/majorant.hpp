#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "preriesz/goperator.hpp"
#include "preriesz/lmatrix.hpp"
#include "preriesz/scalar.hpp"

namespace preriesz {

/// One exact inequality lhs ≤ rhs (or lhs < rhs when `strict`).
struct ChainLink {
  std::string statement;
  Scalar lhs;
  Scalar rhs;
  bool strict = false;

  bool holds() const { return strict ? lhs < rhs : lhs <= rhs; }
};

/// Inequality chain forced on any positive S ≥ T:
///   Σ_{i≤n} limsup T(e_i) ≤ Σ_{i≤n} lim S(e_i) ≤ lim S(𝟙).
/// The universal form leaves S symbolic and concludes lim S(𝟙) ≥ `conclusion`.
struct MajorizationCertificate {
  std::size_t n = 0;
  std::vector<ChainLink> chain;
  Scalar conclusion;
};

/// Universal certificate for T and n: every majorant S of T has lim S(𝟙) ≥ Σ_{i≤n} limsup T(e_i).
MajorizationCertificate universal_certificate(const GOperator& t, std::size_t n);
bool verify(const MajorizationCertificate& cert, const GOperator& t);

/// (S − T)(x)(position) < 0 for a positive x.
struct DominationWitness {
  std::string element;    ///< "1", "e_i", or "1 - e_1 - ... - e_n"
  std::size_t basis = 0;  ///< 0 for 𝟙, i for e_i, n for the combination
  std::size_t position = 0;
  Scalar s_value;
  Scalar t_value;
};

struct MajorantRefutation {
  /// Chain evaluated on the concrete S; n is the least index with
  /// Σ_{i≤n} limsup T(e_i) > lim S(𝟙), so at least one link fails.
  MajorizationCertificate chain;
  std::optional<std::size_t> failing_link;
  /// First violation of S ≥ T over 𝟙, e_1, ..., e_n (basis-major order).
  std::optional<DominationWitness> domination;
  /// A concrete violation derived from the failing link.
  std::optional<DominationWitness> link_witness;
  bool refuted = false;
  std::string note;
};

/// Shows S is not a majorant of T. Either a basis comparison already fails, or
/// the forced chain breaks for S and the broken link yields a concrete witness.
MajorantRefutation refute_majorant(const GOperator& t, const LMatrix& s, std::size_t max_n = 10'000);
/// Recomputes every stored value and inequality from T and S.
bool verify(const MajorantRefutation& r, const GOperator& t, const LMatrix& s);

}  // namespace preriesz
