#include "odplab/epexpr.hpp"

#include <cctype>
#include <cstdint>
#include <vector>

namespace odplab {

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : s_(text) {}

  EPSet parse() {
    EPSet v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw StructuralError("expression: column " + std::to_string(pos_ + 1) +
                          ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::uint64_t number() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
      v = v * 10 + (std::uint64_t)(s_[pos_] - '0');
      if (v > (std::uint64_t)1 << 40) fail("number too large");
      ++pos_;
    }
    return v;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  EPSet finite_set() {
    expect('{');
    std::vector<std::uint64_t> elems;
    skip_ws();
    if (!eat('}')) {
      do elems.push_back(number());
      while (eat(','));
      expect('}');
    }
    return EPSet::from_elements(elems);
  }

  EPSet ep_literal() {
    expect('(');
    std::uint32_t p = 1;
    std::vector<bool> prefix, tail;
    bool have_p = false, have_prefix = false, have_tail = false;
    std::vector<std::uint64_t> residues;
    for (;;) {
      skip_ws();
      if (eat(')')) break;
      std::string field = ident();
      expect('=');
      if (field == "p") {
        if (have_p) fail("duplicate field p");
        have_p = true;
        std::uint64_t v = number();
        if (v == 0) fail("period must be positive");
        p = (std::uint32_t)v;
      } else if (field == "prefix") {
        if (have_prefix) fail("duplicate field prefix");
        have_prefix = true;
        skip_ws();
        if (pos_ + 1 >= s_.size() || s_[pos_] != '0' || s_[pos_ + 1] != 'b')
          fail("prefix must start with 0b");
        pos_ += 2;
        while (pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1'))
          prefix.push_back(s_[pos_++] == '1');
      } else if (field == "tail") {
        if (have_tail) fail("duplicate field tail");
        have_tail = true;
        expect('{');
        skip_ws();
        if (!eat('}')) {
          do residues.push_back(number());
          while (eat(','));
          expect('}');
        }
      } else {
        fail("unknown field '" + field + "'");
      }
      if (!eat(';')) {
        expect(')');
        break;
      }
    }
    tail.assign(p, false);
    for (std::uint64_t r : residues) {
      if (r >= p) fail("tail residue " + std::to_string(r) + " outside period");
      tail[r] = true;
    }
    return EPSet::make(p, std::move(prefix), std::move(tail));
  }

  EPSet expr() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '{') return finite_set();
    std::string name = ident();
    if (name == "ep") return ep_literal();
    if (name == "complement") {
      expect('(');
      EPSet a = expr();
      expect(')');
      return complement(a);
    }
    if (name == "union" || name == "intersect" || name == "symdiff") {
      expect('(');
      EPSet a = expr();
      expect(',');
      EPSet b = expr();
      expect(')');
      if (name == "union") return union_of(a, b);
      if (name == "intersect") return intersect(a, b);
      return symdiff(a, b);
    }
    if (name == "A1") return ep_A1();
    if (name == "A2") return ep_A2();
    if (name == "A3") return ep_A3();
    if (name == "EMPTY") return EPSet::empty();
    if (name == "NAT") return EPSet::naturals();
    if (name.size() == 2 && name[0] == 'N' && name[1] >= '0' && name[1] <= '5')
      return ep_N(name[1] - '0');
    fail("unknown name '" + name + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

EPSet parse_epexpr(const std::string& text) { return Parser(text).parse(); }

}  // namespace odplab
