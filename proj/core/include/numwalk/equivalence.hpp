#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numwalk/classify.hpp"
#include "numwalk/digits.hpp"
#include "numwalk/rational.hpp"
#include "numwalk/walk.hpp"

namespace numwalk {

/// Length of the shortest run of a single digit that traces a closed loop:
/// D/gcd(|turn|, D) steps. Digits with turn 0 walk straight and have no
/// closing run; asking for one is a domain error.
int run_length_for(Digit z, const TurnMap& tm);

struct SurgeryOp {
  enum class Kind : std::uint8_t { Insert, Remove };
  Kind kind = Kind::Insert;
  std::int64_t position = 1;  // 1-based digit position in the current expansion
  Digit digit = 0;            // inserted digit, or the digit a removal took out
};

std::string to_string(const SurgeryOp& op);  // "insert@n:z" / "remove@n"

struct EquivalenceWitness {
  std::vector<SurgeryOp> ops;  // applied left to right, re-expanding after each
};

std::string to_string(const EquivalenceWitness& w);

/// Splices a closing run of digit z in front of position n. The value-level
/// overloads act on the canonical expansion of r (the terminating one for
/// dyadic values); reach the other branch via alternate_expansion.
DigitExpansion insert_run(const DigitExpansion& d, std::int64_t n, Digit z, const TurnMap& tm);
Rational insert_run(const Rational& r, std::int64_t n, Digit z, const TurnMap& tm);
Rational insert_run(const Rational& r, std::int64_t n, Digit z, int base = 2);

/// Removes the closing run starting at position n; the digits there must
/// all equal digit_at(n), otherwise the offending window is reported.
DigitExpansion remove_run(const DigitExpansion& d, std::int64_t n, const TurnMap& tm);
Rational remove_run(const Rational& r, std::int64_t n, const TurnMap& tm);
Rational remove_run(const Rational& r, std::int64_t n, int base = 2);

Rational apply_op(const Rational& r, const SurgeryOp& op, const TurnMap& tm);
Rational replay(const Rational& r, const EquivalenceWitness& w, const TurnMap& tm);

/// Exact value change of one op, evaluated in closed form from the digit
/// prefix and tail instead of by splicing. Agrees with apply_op.
Rational op_value_delta(const Rational& r, const SurgeryOp& op, const TurnMap& tm);

/// Plain value difference r1 - r2; always rational here, and equal to the
/// summed op deltas along any witness from r2 to r1.
inline Rational difference(const Rational& r1, const Rational& r2) { return r1 - r2; }

/// Budget for the witness search: total op count, how deep into the digit
/// stream ops may act, and a hard cap on explored values.
struct SearchBudget {
  int max_ops = 4;
  std::int64_t max_position = 16;
  std::size_t max_states = 100000;
};

/// Bidirectional breadth-first search over surgery ops. Equivalence is only
/// semidecidable, so an empty result means "not found within the budget",
/// never "not equivalent". Deterministic: ops are enumerated in a fixed
/// order and frontiers expanded in discovery order.
std::optional<EquivalenceWitness> equivalent_witness(const Rational& r1, const Rational& r2,
                                                     const SearchBudget& budget, const TurnMap& tm);

/// Smallest (by i1+i2, then i1) pair of step indices from which the two
/// walks coincide forever: same position, same direction, same remaining
/// digit stream. Empty if no such pair exists within the horizon.
std::optional<std::pair<std::int64_t, std::int64_t>> tails_agree(const Rational& r1, const Rational& r2,
                                                                 const TurnMap& tm, std::int64_t horizon);

/// Greedy budgeted hunt for a value equivalent to r whose walk leaves the
/// radius-M class: repeatedly applies the insert that pushes the walk
/// farthest out. Best effort only; an empty result promises nothing.
struct EscapeResult {
  Rational value;
  EquivalenceWitness witness;
  std::int64_t escape_step = 0;
};

std::optional<EscapeResult> escape_search(const Rational& r, const Rational& M, int max_ops, const TurnMap& tm);

}  // namespace numwalk
