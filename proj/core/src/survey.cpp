#include "numwalk/survey.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <thread>

#include <nlohmann/json.hpp>

#include "numwalk/classify.hpp"
#include "numwalk/io.hpp"

namespace numwalk {

std::vector<Rational> survey_range(std::int64_t max_q) {
  std::vector<Rational> out;
  for (std::int64_t q = 1; q <= max_q; ++q) {
    if (q == 1) {
      out.emplace_back(0);
      continue;
    }
    for (std::int64_t p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(Int(p), Int(q));
  }
  return out;
}

std::string survey(const SurveyOptions& opt) {
  const std::vector<Rational> range = survey_range(opt.max_q);
  const TurnMap tm = TurnMap::standard(opt.base, opt.turn_sign);

  struct Slot {
    std::string record;
    WalkKind kind = WalkKind::Closed;
    std::int64_t multiplier = 0;  // 0 for drifting walks
  };
  std::vector<Slot> slots(range.size());
  std::vector<std::exception_ptr> errors;

  const int jobs = std::max(1, opt.jobs);
  auto work = [&](int worker, std::exception_ptr& err) {
    try {
      for (std::size_t i = static_cast<std::size_t>(worker); i < range.size(); i += jobs) {
        const ClassifiedWalk w = classify(range[i], tm);
        Slot& s = slots[i];
        s.record = opt.jsonl ? classification_jsonl(range[i], w) : classification_csv_row(range[i], w);
        s.kind = w.c.kind;
        s.multiplier = w.c.kind == WalkKind::Closed ? w.c.multiplier : 0;
      }
    } catch (...) {
      err = std::current_exception();
    }
  };

  if (jobs == 1 || range.size() <= 1) {
    std::exception_ptr err;
    work(0, err);
    if (err) std::rethrow_exception(err);
  } else {
    errors.assign(static_cast<std::size_t>(jobs), nullptr);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t, std::ref(errors[static_cast<std::size_t>(t)]));
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  std::int64_t closed = 0, drift = 0;
  std::map<std::int64_t, std::int64_t> per_k;
  for (const Slot& s : slots) {
    if (s.kind == WalkKind::Closed) {
      ++closed;
      ++per_k[s.multiplier];
    } else {
      ++drift;
    }
  }

  std::string out;
  if (!opt.jsonl) out += classification_csv_header() + "\n";
  for (const Slot& s : slots) out += s.record + "\n";

  if (opt.jsonl) {
    nlohmann::ordered_json footer;
    footer["total"] = slots.size();
    footer["kinds"] = {{"Closed", closed}, {"Drift", drift}};
    nlohmann::ordered_json ks = nlohmann::ordered_json::object();
    for (const auto& [k, n] : per_k) ks[std::to_string(k)] = n;
    footer["k"] = ks;
    out += footer.dump() + "\n";
  } else {
    out += "# total " + std::to_string(slots.size()) + "\n";
    out += "# kind Closed " + std::to_string(closed) + "\n";
    out += "# kind Drift " + std::to_string(drift) + "\n";
    for (const auto& [k, n] : per_k) out += "# k " + std::to_string(k) + " " + std::to_string(n) + "\n";
  }
  return out;
}

}  // namespace numwalk
