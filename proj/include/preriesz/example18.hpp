#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "preriesz/ecseq.hpp"
#include "preriesz/goperator.hpp"
#include "preriesz/report.hpp"
#include "preriesz/zseq.hpp"

namespace preriesz {

/// T = T1 − T2 with T1(x)_n = x_n and T2(x)_n = x_{n−1}, reading x_k = 0 for k ∉ ℕ.
enum class ShiftPart { T, T1, T2 };

ZSeq t_apply(const EcSeq& x, ShiftPart which = ShiftPart::T);

enum class SpaceYZ { Y, Z };

struct MembershipReport {
  bool member = false;
  Scalar limit;
  Scalar weighted_sum;  ///< Σ_{k≥1} z_{−k}/2^k
};

/// Every representable sequence lies in Y; Z adds the weighted-sum equation.
MembershipReport check_membership(const ZSeq& z, SpaceYZ space);

/// x^{(n)}: 1 at n, −1 at n+1.
ZSeq bump(std::size_t n);

/// ω with ω_{−j} = δ and ω_{−j−1} = −2δ.
struct ObstructionWitness {
  std::size_t j = 1;
  Scalar delta;
  ZSeq omega;
};

ObstructionWitness make_obstruction(std::size_t j, Scalar delta);

/// The operator whose images x^{(n)} = S(e^{(n)}) a candidate family must dominate.
enum class ShiftOperator { difference, zero };

struct RefuterResult {
  enum class Outcome { check_failed, obstruction, not_triggered };
  Outcome outcome = Outcome::not_triggered;
  int failed_check = 0;  ///< 1..4 when check_failed
  std::size_t term = 0;  ///< 1-based family position of the violation
  std::optional<std::int64_t> index;
  std::string detail;
  std::optional<ObstructionWitness> witness;
};

/// Runs the argument that no decreasing z^{(n)} in Z with ±x^{(n)} ≤ z^{(n)}
/// has infimum 0 on a presented finite family:
///   (1) z^{(n)} ∈ Z, (2) ±x^{(n)} ≤ z^{(n)}, (3) z^{(n+1)} ≤ z^{(n)},
///   (4) z^{(n)}_m ≥ 1 for n ≤ m ≤ horizon and lim z^{(n)} ≥ 1,
///   (5) a common positive lower bound δ at some index −j, turned into ω.
/// A horizon of 0 means twice the family length.
RefuterResult refute_oconvergence(const std::vector<ZSeq>& family, std::size_t horizon = 0,
                                  ShiftOperator op = ShiftOperator::difference);

/// Re-checks the stored violation or witness from scratch.
bool verify(const RefuterResult& r, const std::vector<ZSeq>& family, std::size_t horizon = 0,
            ShiftOperator op = ShiftOperator::difference);

struct ScriptedFamily {
  std::string name;
  std::vector<ZSeq> terms;
  RefuterResult::Outcome expected = RefuterResult::Outcome::check_failed;
  int expected_check = 0;
};

/// Hand-built candidate families, each of the given length.
std::vector<ScriptedFamily> scripted_families(std::size_t length = 6);

/// T1 and T2 restricted to positions n ≥ 1 (both vanish below), as operators into ℓ^∞.
GOperator t1_operator();
GOperator t2_operator();

Report run_example18(std::size_t horizon = 0, ShiftOperator op = ShiftOperator::difference);

}  // namespace preriesz
