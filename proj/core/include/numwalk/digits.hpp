#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numwalk/rational.hpp"

namespace numwalk {

using Digit = std::uint8_t;

/// Eventually periodic base-b expansion 0.(preperiod)(period)(period)...
///
/// Instances are kept in canonical form: the period is primitive (not a
/// repetition of a shorter word) and as short as possible, the preperiod is
/// as short as possible (its last digit always differs from the period's
/// last digit), and a terminating expansion carries the period "0".
/// The represented value lies in [0, 1]; the value 1 occurs only as the
/// all-(b-1) expansion, which arises from digit complementation.
class DigitExpansion {
 public:
  DigitExpansion(int base, std::vector<Digit> preperiod, std::vector<Digit> period);

  int base() const { return base_; }
  const std::vector<Digit>& preperiod() const { return pre_; }
  const std::vector<Digit>& period() const { return per_; }
  std::int64_t preperiod_length() const { return static_cast<std::int64_t>(pre_.size()); }
  std::int64_t period_length() const { return static_cast<std::int64_t>(per_.size()); }

  /// 1-based digit access into the infinite digit stream.
  Digit digit_at(std::int64_t i) const;

  /// Exact value of the expansion.
  Rational value() const;

  /// True when the digit stream is eventually all zero (period "0").
  bool terminating() const { return per_.size() == 1 && per_[0] == 0; }

  /// "preperiod|period" with one character per digit (bases up to 36).
  std::string to_string() const;
  static DigitExpansion parse(std::string_view text, int base);

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;

 private:
  void canonicalize();

  int base_;
  std::vector<Digit> pre_;
  std::vector<Digit> per_;
};

/// Base-b expansion of r in [0, 1) by long division; the period is closed at
/// the first repeated remainder, so the result is canonical.
DigitExpansion expand(const Rational& r, int base);

inline Rational value_of(const DigitExpansion& d) { return d.value(); }

inline Digit digit_at(const DigitExpansion& d, std::int64_t i) { return d.digit_at(i); }

/// The other expansion with the same value, when one exists: a terminating
/// expansion pairs with the one ending in repeated (b-1), and vice versa.
std::optional<DigitExpansion> alternate_expansion(const DigitExpansion& d);

/// Digit-wise complement z -> b-1-z.
DigitExpansion complement(const DigitExpansion& d);

/// Compares the infinite digit streams starting after positions from1/from2,
/// i.e. digit_at(d1, from1+t) == digit_at(d2, from2+t) for all t >= 1.
bool streams_equal(const DigitExpansion& d1, std::int64_t from1,
                   const DigitExpansion& d2, std::int64_t from2);

/// Pull-based digit feed for walks; it may be finite (next() empty) and is
/// the only way irrational or file-provided digit streams enter the engine.
class DigitSource {
 public:
  virtual ~DigitSource() = default;
  virtual int base() const = 0;
  virtual std::optional<Digit> next() = 0;
};

/// Infinite source reading a DigitExpansion from position 1 on.
class ExpansionSource final : public DigitSource {
 public:
  explicit ExpansionSource(DigitExpansion d) : d_(std::move(d)) {}
  int base() const override { return d_.base(); }
  std::optional<Digit> next() override { return d_.digit_at(++i_); }

 private:
  DigitExpansion d_;
  std::int64_t i_ = 0;
};

/// Finite source over a digit buffer.
class BufferSource final : public DigitSource {
 public:
  BufferSource(std::vector<Digit> digits, int base);
  int base() const override { return base_; }
  std::optional<Digit> next() override {
    if (i_ >= digits_.size()) return std::nullopt;
    return digits_[i_++];
  }

 private:
  std::vector<Digit> digits_;
  int base_;
  std::size_t i_ = 0;
};

}  // namespace numwalk
