#include <cctype>
#include <string>

#include "wittlab/algebra.hpp"
#include "wittlab/errors.hpp"

namespace wittlab {
namespace {

class TermParser {
 public:
  explicit TermParser(std::string text) : s_(std::move(text)) {}

  SparseVector parse() {
    if (s_.empty()) fail("empty element");
    if (s_ == "0") return {};
    std::vector<Entry> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(negative));
    }
    return SparseVector::from_unsorted(std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse element '" + s_ + "' at offset " + std::to_string(pos_) + ": " +
                     why);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Entry term(bool negative) {
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string lit = digits();
      if (peek() == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) fail("missing denominator");
        lit += "/" + den;
      }
      coeff = Rational::parse(lit);
      if (peek() != '*') fail("expected '*' after coefficient");
      ++pos_;
    }
    if (s_.compare(pos_, 2, "e_") != 0) fail("expected basis symbol e_<index>");
    pos_ += 2;
    bool neg_index = false;
    if (peek() == '-') {
      neg_index = true;
      ++pos_;
    }
    const std::string idx = digits();
    if (idx.empty()) fail("missing basis index");
    Index index = 0;
    try {
      index = static_cast<Index>(std::stoll(idx));
    } catch (const std::out_of_range&) {
      fail("basis index out of range");
    }
    if (neg_index) index = -index;
    return {index, negative ? -coeff : coeff};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

Element parse_element(AlgebraKind kind, std::string_view text) {
  SparseVector coeffs = TermParser(strip_spaces(text)).parse();
  return Element(kind, std::move(coeffs));
}

std::string to_string(const SparseVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [index, value] : v) {
    const bool negative = value.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = value.abs();
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += "e_" + std::to_string(index);
  }
  return out;
}

std::string to_string(const Element& x) { return to_string(x.coeffs()); }

}  // namespace wittlab
