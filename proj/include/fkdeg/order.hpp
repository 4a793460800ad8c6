#pragma once

#include <cassert>
#include <compare>
#include <ostream>
#include <string>

namespace fkdeg {

/**
   A subforest order, or NEG_INF for "no such subforest".

   NEG_INF is a separate state, not a large negative number: it absorbs
   under addition and loses every comparison, so sums of many child
   values can never wrap around.
 */
class Order {
public:
  constexpr Order() = default;
  constexpr explicit Order(int v) : value_(v), finite_(true) { assert(v >= 0); }

  constexpr bool is_finite() const { return finite_; }
  constexpr int value() const {
    assert(finite_);
    return value_;
  }

  friend constexpr Order operator+(Order a, Order b) {
    if (!a.finite_ || !b.finite_)
      return Order{};
    return Order(a.value_ + b.value_);
  }
  constexpr Order &operator+=(Order b) { return *this = *this + b; }

  friend constexpr bool operator==(Order a, Order b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Order a, Order b) {
    if (a.finite_ != b.finite_)
      return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!a.finite_)
      return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return finite_ ? std::to_string(value_) : "-inf"; }
  friend std::ostream &operator<<(std::ostream &os, Order o) { return os << o.str(); }

private:
  int value_ = 0;
  bool finite_ = false;
};

inline constexpr Order NEG_INF{};

constexpr Order max(Order a, Order b) { return a < b ? b : a; }

} // namespace fkdeg
