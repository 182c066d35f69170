#pragma once

// Oriented edge symbols and cyclic boundary words.
//
// A word is written as whitespace-separated tokens; `x` is the edge x and
// `x'` its inverse.  Names reserved for generated edges start with `_`.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace surfcls {

enum class Sign : int { Plus = 1, Minus = -1 };

constexpr Sign flip(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

class EdgeSym {
 public:
  EdgeSym() = default;
  // Throws Error(MalformedToken) unless name matches [A-Za-z_][A-Za-z0-9_]*.
  EdgeSym(std::string name, Sign sign = Sign::Plus);

  const std::string& name() const noexcept { return name_; }
  Sign sign() const noexcept { return sign_; }
  bool positive() const noexcept { return sign_ == Sign::Plus; }

  EdgeSym inverse() const { return EdgeSym(name_, flip(sign_), Trusted{}); }

  // Ordering: by name, then + before -.
  friend bool operator==(const EdgeSym&, const EdgeSym&) = default;
  friend std::strong_ordering operator<=>(const EdgeSym& a, const EdgeSym& b) {
    if (auto c = a.name_ <=> b.name_; c != 0) return c;
    return static_cast<int>(b.sign_) <=> static_cast<int>(a.sign_);
  }

 private:
  struct Trusted {};
  EdgeSym(std::string name, Sign sign, Trusted)
      : name_(std::move(name)), sign_(sign) {}

  std::string name_;
  Sign sign_ = Sign::Plus;
};

bool is_user_identifier(std::string_view name) noexcept;
bool is_identifier(std::string_view name) noexcept;

// Immutable cyclic sequence of oriented edges.  Equality is sequence
// equality; use cyclic_equal for equality up to rotation.
class Word {
 public:
  using const_iterator = std::vector<EdgeSym>::const_iterator;

  Word() = default;
  explicit Word(std::vector<EdgeSym> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<EdgeSym> symbols) : symbols_(symbols) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const EdgeSym& operator[](std::size_t i) const { return symbols_[i]; }
  // Cyclic indexing.
  const EdgeSym& at_cyclic(std::ptrdiff_t i) const;
  const_iterator begin() const noexcept { return symbols_.begin(); }
  const_iterator end() const noexcept { return symbols_.end(); }
  const std::vector<EdgeSym>& symbols() const noexcept { return symbols_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<EdgeSym> symbols_;
};

// Parses whitespace-separated tokens; `#` starts a comment running to end
// of line.  Throws Error(MalformedToken) naming the 1-based token position.
// Reserved `_` names are accepted only when allow_reserved is set.
Word parse_word(std::string_view text, bool allow_reserved = false);
std::string format_word(const Word& w);

Word inverse_word(const Word& w);
// Left rotation: result[i] = w[(i + k) mod n].
Word rotate(const Word& w, std::ptrdiff_t k);
Word concat(std::initializer_list<const Word*> parts);
Word slice(const Word& w, std::size_t begin, std::size_t end);

bool cyclic_equal(const Word& a, const Word& b);
// Lexicographically least rotation.
Word cyclic_canonical(const Word& w);

}  // namespace surfcls
