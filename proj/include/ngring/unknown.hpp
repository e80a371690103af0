#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ngring {

// A value that may honestly be undecidable.  Unknown always carries a reason,
// which ends up in CLI evidence chains.
template <class T>
class OrUnknown {
 public:
  OrUnknown(T value) : value_(std::move(value)) {}  // NOLINT: implicit by design

  static OrUnknown unknown(std::string reason) {
    OrUnknown r;
    if (reason.empty()) reason = "undetermined";
    r.reason_ = std::move(reason);
    return r;
  }

  bool known() const { return value_.has_value(); }
  explicit operator bool() const { return known(); }

  const T& value() const {
    if (!value_) throw std::logic_error("value() on unknown: " + reason_);
    return *value_;
  }
  const T& operator*() const { return value(); }

  const std::string& reason() const { return reason_; }

  bool operator==(const T& rhs) const { return known() && value() == rhs; }

  template <class F>
  auto map(F&& f) const -> OrUnknown<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    if (!known()) return OrUnknown<U>::unknown(reason_);
    return OrUnknown<U>(f(value()));
  }

 private:
  OrUnknown() = default;
  std::optional<T> value_;
  std::string reason_;
};

using NatOrUnknown = OrUnknown<long>;
using BoolOrUnknown = OrUnknown<bool>;

}  // namespace ngring
