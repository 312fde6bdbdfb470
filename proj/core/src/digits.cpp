#include "numwalk/digits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace numwalk {

namespace {

constexpr std::int64_t kMaxExpansionDigits = 4'000'000;

void check_base(int base) {
  if (base < 2 || base > 255) throw std::domain_error("digit base must be in [2, 255]");
}

void check_digits(const std::vector<Digit>& ds, int base) {
  for (Digit d : ds)
    if (d >= base) throw std::domain_error("digit " + std::to_string(int(d)) + " out of range for base " + std::to_string(base));
}

// Is w a repetition of its prefix of length d?
bool repeats_with(const std::vector<Digit>& w, std::size_t d) {
  for (std::size_t i = d; i < w.size(); ++i)
    if (w[i] != w[i - d]) return false;
  return true;
}

char digit_char(Digit d) { return d < 10 ? char('0' + d) : char('a' + (d - 10)); }

Digit char_digit(char c, int base) {
  int v;
  if (c >= '0' && c <= '9') v = c - '0';
  else if (c >= 'a' && c <= 'z') v = c - 'a' + 10;
  else throw std::invalid_argument(std::string("bad digit character '") + c + "'");
  if (v >= base) throw std::domain_error(std::string("digit '") + c + "' out of range for base " + std::to_string(base));
  return static_cast<Digit>(v);
}

}  // namespace

DigitExpansion::DigitExpansion(int base, std::vector<Digit> preperiod, std::vector<Digit> period)
    : base_(base), pre_(std::move(preperiod)), per_(std::move(period)) {
  check_base(base_);
  if (per_.empty()) throw std::domain_error("expansion period must be nonempty");
  check_digits(pre_, base_);
  check_digits(per_, base_);
  canonicalize();
}

void DigitExpansion::canonicalize() {
  // Shortest period first: cut the word down to its primitive root.
  for (std::size_t d = 1; d <= per_.size() / 2; ++d) {
    if (per_.size() % d == 0 && repeats_with(per_, d)) {
      per_.resize(d);
      break;
    }
  }
  // Then the shortest preperiod: while its last digit matches the period's
  // last digit, rotate the period right and drop that preperiod digit.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    per_.insert(per_.begin(), per_.back());
    per_.pop_back();
    pre_.pop_back();
  }
}

Digit DigitExpansion::digit_at(std::int64_t i) const {
  if (i < 1) throw std::out_of_range("digit positions are 1-based");
  const auto m = static_cast<std::int64_t>(pre_.size());
  if (i <= m) return pre_[static_cast<std::size_t>(i - 1)];
  return per_[static_cast<std::size_t>((i - m - 1) % static_cast<std::int64_t>(per_.size()))];
}

Rational DigitExpansion::value() const {
  const Int b = base_;
  Int p = 0;
  for (Digit z : pre_) p = p * b + z;
  Int q = 0;
  for (Digit z : per_) q = q * b + z;
  const Int bm = pow(b, static_cast<unsigned>(pre_.size()));
  const Int bl = pow(b, static_cast<unsigned>(per_.size()));
  // 0.(pre)(per)^inf = (p*(b^L - 1) + q) / (b^m * (b^L - 1))
  return Rational(p * (bl - 1) + q, bm * (bl - 1));
}

std::string DigitExpansion::to_string() const {
  if (base_ > 36) throw std::domain_error("textual digit notation supports bases up to 36");
  std::string out;
  out.reserve(pre_.size() + per_.size() + 1);
  for (Digit d : pre_) out.push_back(digit_char(d));
  out.push_back('|');
  for (Digit d : per_) out.push_back(digit_char(d));
  return out;
}

DigitExpansion DigitExpansion::parse(std::string_view text, int base) {
  check_base(base);
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("expected \"preperiod|period\" notation");
  std::vector<Digit> pre, per;
  for (char c : text.substr(0, bar)) pre.push_back(char_digit(c, base));
  for (char c : text.substr(bar + 1)) per.push_back(char_digit(c, base));
  return DigitExpansion(base, std::move(pre), std::move(per));
}

DigitExpansion expand(const Rational& r, int base) {
  check_base(base);
  if (!in_unit_interval(r)) throw std::domain_error("expand: value must lie in [0, 1)");
  const Int& qi = denominator(r);
  std::vector<Digit> digits;
  std::size_t period_start;

  if (qi <= Int(std::int64_t(1) << 22)) {
    // Long division in machine words with a directly indexed remainder
    // table; the period closes at the first repeated remainder.
    const auto q = qi.convert_to<std::int64_t>();
    auto rem = numerator(r).convert_to<std::int64_t>();
    std::vector<std::int32_t> seen(static_cast<std::size_t>(q), -1);
    for (;;) {
      auto& slot = seen[static_cast<std::size_t>(rem)];
      if (slot >= 0) {
        period_start = static_cast<std::size_t>(slot);
        break;
      }
      slot = static_cast<std::int32_t>(digits.size());
      const auto prod = rem * base;
      digits.push_back(static_cast<Digit>(prod / q));
      rem = prod % q;
    }
  } else if (qi <= Int(std::int64_t(1) << 40)) {
    // Still machine words (rem * base cannot overflow), but the remainder
    // table would be q-sized, so track only the remainders actually seen.
    const auto q = qi.convert_to<std::int64_t>();
    auto rem = numerator(r).convert_to<std::int64_t>();
    std::unordered_map<std::int64_t, std::int32_t> seen;
    for (;;) {
      const auto [it, inserted] =
          seen.emplace(rem, static_cast<std::int32_t>(digits.size()));
      if (!inserted) {
        period_start = static_cast<std::size_t>(it->second);
        break;
      }
      if (static_cast<std::int64_t>(digits.size()) > kMaxExpansionDigits)
        throw std::length_error("expand: expansion exceeds the supported digit count");
      const auto prod = rem * base;
      digits.push_back(static_cast<Digit>(prod / q));
      rem = prod % q;
    }
  } else {
    Int rem = numerator(r);
    std::map<Int, std::int64_t> seen;
    for (;;) {
      auto [it, inserted] = seen.emplace(rem, static_cast<std::int64_t>(digits.size()));
      if (!inserted) {
        period_start = static_cast<std::size_t>(it->second);
        break;
      }
      if (static_cast<std::int64_t>(digits.size()) > kMaxExpansionDigits)
        throw std::length_error("expand: expansion exceeds the supported digit count");
      rem *= base;
      digits.push_back(static_cast<Digit>(Int(rem / qi).convert_to<unsigned>()));
      rem %= qi;
    }
  }

  std::vector<Digit> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(period_start));
  std::vector<Digit> per(digits.begin() + static_cast<std::ptrdiff_t>(period_start), digits.end());
  return DigitExpansion(base, std::move(pre), std::move(per));
}

std::optional<DigitExpansion> alternate_expansion(const DigitExpansion& d) {
  const auto top = static_cast<Digit>(d.base() - 1);
  if (d.terminating()) {
    // 0.u a 000... = 0.u (a-1) (b-1)(b-1)...  for the last nonzero digit a.
    if (d.preperiod().empty()) return std::nullopt;  // zero has no second form
    auto pre = d.preperiod();
    pre.back() = static_cast<Digit>(pre.back() - 1);
    return DigitExpansion(d.base(), std::move(pre), {top});
  }
  if (d.period().size() == 1 && d.period()[0] == top) {
    if (d.preperiod().empty()) return std::nullopt;  // 0.(b-1)^inf represents 1
    auto pre = d.preperiod();
    pre.back() = static_cast<Digit>(pre.back() + 1);
    return DigitExpansion(d.base(), std::move(pre), {0});
  }
  return std::nullopt;
}

DigitExpansion complement(const DigitExpansion& d) {
  auto flip = [&](std::vector<Digit> v) {
    for (auto& z : v) z = static_cast<Digit>(d.base() - 1 - z);
    return v;
  };
  return DigitExpansion(d.base(), flip(d.preperiod()), flip(d.period()));
}

bool streams_equal(const DigitExpansion& d1, std::int64_t from1,
                   const DigitExpansion& d2, std::int64_t from2) {
  if (d1.base() != d2.base()) return false;
  if (from1 < 0 || from2 < 0) throw std::out_of_range("stream offsets must be nonnegative");
  // Past both preperiods the streams are periodic, so agreement over the
  // remaining preperiod plus lcm of the periods decides equality.
  const std::int64_t rest1 = std::max<std::int64_t>(0, d1.preperiod_length() - from1);
  const std::int64_t rest2 = std::max<std::int64_t>(0, d2.preperiod_length() - from2);
  const std::int64_t window = std::max(rest1, rest2) + std::lcm(d1.period_length(), d2.period_length());
  for (std::int64_t t = 1; t <= window; ++t)
    if (d1.digit_at(from1 + t) != d2.digit_at(from2 + t)) return false;
  return true;
}

BufferSource::BufferSource(std::vector<Digit> digits, int base) : digits_(std::move(digits)), base_(base) {
  check_base(base_);
  check_digits(digits_, base_);
}

}  // namespace numwalk
