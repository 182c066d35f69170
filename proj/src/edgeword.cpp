#include "surfcls/edgeword.hpp"

#include <algorithm>
#include <cctype>

#include "surfcls/error.hpp"

namespace surfcls {

namespace {

bool is_ident_tail(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

bool is_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  char c0 = name.front();
  if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_')) return false;
  return std::all_of(name.begin() + 1, name.end(), is_ident_tail);
}

bool is_user_identifier(std::string_view name) noexcept {
  return is_identifier(name) &&
         std::isalpha(static_cast<unsigned char>(name.front()));
}

EdgeSym::EdgeSym(std::string name, Sign sign)
    : name_(std::move(name)), sign_(sign) {
  if (!is_identifier(name_)) {
    throw Error(ErrorCode::MalformedToken,
                "illegal edge name '" + name_ + "'");
  }
}

const EdgeSym& Word::at_cyclic(std::ptrdiff_t i) const {
  auto n = static_cast<std::ptrdiff_t>(symbols_.size());
  return symbols_[static_cast<std::size_t>(((i % n) + n) % n)];
}

Word parse_word(std::string_view text, bool allow_reserved) {
  std::vector<EdgeSym> out;
  std::size_t i = 0;
  std::size_t position = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
      ++i;
    }
    ++position;
    std::string_view token = text.substr(start, i - start);
    Sign sign = Sign::Plus;
    if (token.back() == '\'') {
      sign = Sign::Minus;
      token.remove_suffix(1);
    }
    bool ok = allow_reserved ? is_identifier(token) : is_user_identifier(token);
    if (!ok) {
      throw Error(ErrorCode::MalformedToken,
                  "malformed token at position " + std::to_string(position) +
                      ": '" + std::string(text.substr(start, i - start)) + "'");
    }
    out.emplace_back(std::string(token), sign);
  }
  return Word(std::move(out));
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].name();
    if (!w[i].positive()) out += '\'';
  }
  return out;
}

Word inverse_word(const Word& w) {
  std::vector<EdgeSym> out;
  out.reserve(w.size());
  for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word rotate(const Word& w, std::ptrdiff_t k) {
  if (w.empty()) return w;
  std::vector<EdgeSym> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w.at_cyclic(static_cast<std::ptrdiff_t>(i) + k));
  }
  return Word(std::move(out));
}

Word concat(std::initializer_list<const Word*> parts) {
  std::vector<EdgeSym> out;
  for (const Word* p : parts) {
    out.insert(out.end(), p->begin(), p->end());
  }
  return Word(std::move(out));
}

Word slice(const Word& w, std::size_t begin, std::size_t end) {
  return Word(std::vector<EdgeSym>(w.begin() + static_cast<std::ptrdiff_t>(begin),
                                   w.begin() + static_cast<std::ptrdiff_t>(end)));
}

bool cyclic_equal(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto n = static_cast<std::ptrdiff_t>(a.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    bool match = true;
    for (std::ptrdiff_t i = 0; i < n && match; ++i) {
      match = a.at_cyclic(i + k) == b[static_cast<std::size_t>(i)];
    }
    if (match) return true;
  }
  return false;
}

Word cyclic_canonical(const Word& w) {
  if (w.empty()) return w;
  auto n = static_cast<std::ptrdiff_t>(w.size());
  std::ptrdiff_t best = 0;
  for (std::ptrdiff_t k = 1; k < n; ++k) {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto& x = w.at_cyclic(k + i);
      const auto& y = w.at_cyclic(best + i);
      if (x < y) {
        best = k;
        break;
      }
      if (y < x) break;
    }
  }
  return rotate(w, best);
}

}  // namespace surfcls
