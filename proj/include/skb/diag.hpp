#pragma once
// Validators either accept or name the first violated law together with a
// witness. A Diag is that name plus the witness indices.

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace skb {

struct Diag {
  std::string code;          // stable identifier, e.g. "NotAssociative"
  std::vector<int> witness;  // element indices; meaning depends on code
  std::string detail;        // human-readable rendering
  bool input_error = false;  // malformed input rather than a failed verdict

  std::string str() const {
    std::ostringstream os;
    os << code;
    if (!witness.empty()) {
      os << " at (";
      for (size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
      os << ")";
    }
    if (!detail.empty()) os << ": " << detail;
    return os.str();
  }
};

inline Diag make_diag(std::string code, std::vector<int> witness = {}, std::string detail = {}) {
  return Diag{std::move(code), std::move(witness), std::move(detail), false};
}

inline Diag input_diag(std::string code, std::string detail = {}) {
  return Diag{std::move(code), {}, std::move(detail), true};
}

// Value of a validating constructor: the object, or the diagnosis that
// rejected it.
template <typename T>
class Checked {
 public:
  Checked(T value) : v_(std::move(value)) {}
  Checked(Diag d) : v_(std::move(d)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }
  const T& value() const& { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }
  const Diag& diag() const { return std::get<Diag>(v_); }

 private:
  std::variant<T, Diag> v_;
};

// nullopt means the check passed.
using Status = std::optional<Diag>;

}  // namespace skb
