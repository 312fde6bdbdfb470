#include "numwalk/equivalence.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace numwalk {

namespace {

constexpr std::int64_t kMaxSplicePrefix = 1'000'000;

// Rebuilds an expansion as: first keep digits of d, then middle, then the
// tail of d resuming at 1-based position resume.
DigitExpansion splice(const DigitExpansion& d, std::int64_t keep, const std::vector<Digit>& middle,
                      std::int64_t resume) {
  if (keep < 0 || keep > kMaxSplicePrefix) throw std::domain_error("surgery position out of supported range");
  const std::int64_t m = d.preperiod_length();
  const std::int64_t L = d.period_length();
  std::vector<Digit> pre;
  pre.reserve(static_cast<std::size_t>(keep) + middle.size() + d.preperiod().size());
  for (std::int64_t i = 1; i <= keep; ++i) pre.push_back(d.digit_at(i));
  pre.insert(pre.end(), middle.begin(), middle.end());
  std::vector<Digit> per;
  if (resume <= m) {
    const auto& dp = d.preperiod();
    pre.insert(pre.end(), dp.begin() + static_cast<std::ptrdiff_t>(resume - 1), dp.end());
    per = d.period();
  } else {
    const auto phase = static_cast<std::ptrdiff_t>((resume - 1 - m) % L);
    const auto& word = d.period();
    per.assign(word.begin() + phase, word.end());
    per.insert(per.end(), word.begin(), word.begin() + phase);
  }
  return DigitExpansion(d.base(), std::move(pre), std::move(per));
}

void check_surgery_args(const DigitExpansion& d, std::int64_t n, const TurnMap& tm) {
  if (d.base() != tm.base) throw std::domain_error("expansion base does not match the turn map");
  if (n < 1) throw std::domain_error("surgery positions are 1-based");
}

}  // namespace

int run_length_for(Digit z, const TurnMap& tm) {
  const int t = tm.turn_for(z);
  if (t == 0)
    throw std::domain_error("digit " + std::to_string(int(z)) + " walks straight and has no closing run");
  return dir_count(tm.grid) / std::gcd(std::abs(t), dir_count(tm.grid));
}

std::string to_string(const SurgeryOp& op) {
  if (op.kind == SurgeryOp::Kind::Insert)
    return "insert@" + std::to_string(op.position) + ":" + std::to_string(int(op.digit));
  return "remove@" + std::to_string(op.position);
}

std::string to_string(const EquivalenceWitness& w) {
  std::string out;
  for (const auto& op : w.ops) {
    if (!out.empty()) out.push_back(' ');
    out += to_string(op);
  }
  return out;
}

DigitExpansion insert_run(const DigitExpansion& d, std::int64_t n, Digit z, const TurnMap& tm) {
  check_surgery_args(d, n, tm);
  const int rl = run_length_for(z, tm);
  return splice(d, n - 1, std::vector<Digit>(static_cast<std::size_t>(rl), z), n);
}

DigitExpansion remove_run(const DigitExpansion& d, std::int64_t n, const TurnMap& tm) {
  check_surgery_args(d, n, tm);
  const Digit z = d.digit_at(n);
  const int rl = run_length_for(z, tm);
  std::string window;
  bool is_run = true;
  for (std::int64_t i = n; i < n + rl; ++i) {
    const Digit zi = d.digit_at(i);
    window += std::to_string(int(zi));
    is_run = is_run && zi == z;
  }
  if (!is_run)
    throw std::domain_error("remove_run: digits " + std::to_string(n) + ".." + std::to_string(n + rl - 1) +
                            " are \"" + window + "\", not a run of one digit");
  return splice(d, n - 1, {}, n + rl);
}

Rational insert_run(const Rational& r, std::int64_t n, Digit z, const TurnMap& tm) {
  return value_of(insert_run(expand(r, tm.base), n, z, tm));
}

Rational insert_run(const Rational& r, std::int64_t n, Digit z, int base) {
  return insert_run(r, n, z, TurnMap::standard(base));
}

Rational remove_run(const Rational& r, std::int64_t n, const TurnMap& tm) {
  return value_of(remove_run(expand(r, tm.base), n, tm));
}

Rational remove_run(const Rational& r, std::int64_t n, int base) {
  return remove_run(r, n, TurnMap::standard(base));
}

Rational apply_op(const Rational& r, const SurgeryOp& op, const TurnMap& tm) {
  return op.kind == SurgeryOp::Kind::Insert ? insert_run(r, op.position, op.digit, tm)
                                            : remove_run(r, op.position, tm);
}

Rational replay(const Rational& r, const EquivalenceWitness& w, const TurnMap& tm) {
  Rational cur = r;
  for (const auto& op : w.ops) cur = apply_op(cur, op, tm);
  return cur;
}

Rational op_value_delta(const Rational& r, const SurgeryOp& op, const TurnMap& tm) {
  const DigitExpansion d = expand(r, tm.base);
  const std::int64_t n = op.position;
  if (n < 1) throw std::domain_error("surgery positions are 1-based");
  const Digit z = op.kind == SurgeryOp::Kind::Insert ? op.digit : d.digit_at(n);
  const int rl = run_length_for(z, tm);
  const Int b = tm.base;

  Int head = 0;  // digits 1..n-1 as an integer
  for (std::int64_t i = 1; i < n; ++i) head = head * b + d.digit_at(i);
  const Rational h(head, pow(b, static_cast<unsigned>(n - 1)));
  const Int brl = pow(b, static_cast<unsigned>(rl));
  // sum of b^-i for i = n .. n+rl-1
  const Rational run_sum(brl - 1, (b - 1) * pow(b, static_cast<unsigned>(n - 1)) * brl);
  const Rational tail = r - h;

  if (op.kind == SurgeryOp::Kind::Insert) return z * run_sum + tail / Rational(brl) - tail;
  return (tail - z * run_sum) * Rational(brl) - tail;
}

std::optional<EquivalenceWitness> equivalent_witness(const Rational& r1, const Rational& r2,
                                                     const SearchBudget& budget, const TurnMap& tm) {
  if (!in_unit_interval(r1) || !in_unit_interval(r2))
    throw std::domain_error("witness search needs values in [0, 1)");
  if (r1 == r2) return EquivalenceWitness{};

  using OpList = std::vector<SurgeryOp>;

  auto neighbors = [&](const Rational& r) {
    std::vector<std::pair<SurgeryOp, Rational>> out;
    const DigitExpansion d = expand(r, tm.base);
    for (std::int64_t n = 1; n <= budget.max_position; ++n)
      for (int z = 0; z < tm.base; ++z) {
        if (tm.turn_for(static_cast<Digit>(z)) == 0) continue;
        SurgeryOp op{SurgeryOp::Kind::Insert, n, static_cast<Digit>(z)};
        out.emplace_back(op, value_of(insert_run(d, n, static_cast<Digit>(z), tm)));
      }
    for (std::int64_t n = 1; n <= budget.max_position; ++n) {
      const Digit z = d.digit_at(n);
      if (tm.turn_for(z) == 0) continue;
      const int rl = run_length_for(z, tm);
      bool run = true;
      for (std::int64_t i = n + 1; run && i < n + rl; ++i) run = d.digit_at(i) == z;
      if (run) out.emplace_back(SurgeryOp{SurgeryOp::Kind::Remove, n, z}, value_of(remove_run(d, n, tm)));
    }
    return out;
  };

  auto invert = [](SurgeryOp op) {
    op.kind = op.kind == SurgeryOp::Kind::Insert ? SurgeryOp::Kind::Remove : SurgeryOp::Kind::Insert;
    return op;
  };
  // forward ops reach the meet from r1; backward ops ran from r2 and are
  // undone in reverse to continue on to r2.
  auto combine = [&](const OpList& fwd, const OpList& bwd) {
    EquivalenceWitness w;
    w.ops = fwd;
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) w.ops.push_back(invert(*it));
    return w;
  };

  std::map<Rational, OpList> seen_f{{r1, {}}}, seen_b{{r2, {}}};
  std::vector<Rational> front_f{r1}, front_b{r2};
  int depth_f = 0, depth_b = 0;

  while (depth_f + depth_b < budget.max_ops && (!front_f.empty() || !front_b.empty())) {
    bool forward;
    if (front_f.empty()) forward = false;
    else if (front_b.empty()) forward = true;
    else forward = front_f.size() <= front_b.size();

    auto& front = forward ? front_f : front_b;
    auto& mine = forward ? seen_f : seen_b;
    auto& other = forward ? seen_b : seen_f;

    std::vector<Rational> next;
    for (const auto& r : front) {
      const OpList& base_ops = mine.at(r);
      for (const auto& [op, value] : neighbors(r)) {
        if (mine.contains(value)) continue;
        OpList ops = base_ops;
        ops.push_back(op);
        mine.emplace(value, std::move(ops));
        next.push_back(value);
        if (auto hit = other.find(value); hit != other.end())
          return forward ? combine(mine.at(value), hit->second) : combine(hit->second, mine.at(value));
        if (mine.size() + other.size() > budget.max_states) return std::nullopt;
      }
    }
    front = std::move(next);
    ++(forward ? depth_f : depth_b);
  }
  return std::nullopt;
}

std::optional<std::pair<std::int64_t, std::int64_t>> tails_agree(const Rational& r1, const Rational& r2,
                                                                 const TurnMap& tm, std::int64_t horizon) {
  if (horizon < 0) throw std::domain_error("horizon must be nonnegative");
  const DigitExpansion d1 = expand(r1, tm.base);
  const DigitExpansion d2 = expand(r2, tm.base);
  const auto st1 = walk_prefix(d1, horizon, tm).states;
  const auto st2 = walk_prefix(d2, horizon, tm).states;
  for (std::int64_t sum = 0; sum <= 2 * horizon; ++sum) {
    const std::int64_t lo = std::max<std::int64_t>(0, sum - horizon);
    const std::int64_t hi = std::min(sum, horizon);
    for (std::int64_t i1 = lo; i1 <= hi; ++i1) {
      const std::int64_t i2 = sum - i1;
      if (same_pose(st1[static_cast<std::size_t>(i1)], st2[static_cast<std::size_t>(i2)]) &&
          streams_equal(d1, i1, d2, i2))
        return std::make_pair(i1, i2);
    }
  }
  return std::nullopt;
}

std::optional<EscapeResult> escape_search(const Rational& r, const Rational& M, int max_ops, const TurnMap& tm) {
  if (max_ops < 0) throw std::domain_error("escape budget must be nonnegative");
  Rational current = r;
  EquivalenceWitness witness;
  for (int used = 0;; ++used) {
    const auto cw = classify(current, tm);
    const auto verdict = in_class_K(cw, M);
    if (!verdict.member) return EscapeResult{current, witness, verdict.escape_step.value_or(0)};
    if (used == max_ops) return std::nullopt;

    // Greedy: among single inserts across the verified window, keep the one
    // that pushes the farthest excursion out the most.
    const std::int64_t span = cw.c.preperiod_len + cw.c.cycle_length + 1;
    std::int64_t best_score = -1;
    Rational best_value;
    SurgeryOp best_op;
    for (std::int64_t n = 1; n <= span; ++n)
      for (int z = 0; z < tm.base; ++z) {
        if (tm.turn_for(static_cast<Digit>(z)) == 0) continue;
        const Rational r2 = value_of(insert_run(cw.digits, n, static_cast<Digit>(z), tm));
        const auto cw2 = classify(r2, tm);
        const std::int64_t score = cw2.c.kind == WalkKind::Drift
                                       ? std::numeric_limits<std::int64_t>::max()
                                       : cw2.c.max_norm_sq;
        if (score > best_score) {
          best_score = score;
          best_value = r2;
          best_op = {SurgeryOp::Kind::Insert, n, static_cast<Digit>(z)};
        }
      }
    current = best_value;
    witness.ops.push_back(best_op);
  }
}

}  // namespace numwalk
