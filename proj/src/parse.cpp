#include "syzimp/parse.hpp"

#include <cctype>
#include <vector>

#include "syzimp/errors.hpp"

namespace syzimp {

namespace {

struct RawTerm {
  Rational coeff;
  std::array<int, 4> exps{0, 0, 0, 0};  // indexed by variable-list position
};

class Scanner {
public:
  Scanner(const std::string& text, const std::vector<std::string>& vars)
      : s_(text), vars_(vars) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (eof()) throw ParseError("empty polynomial");
    bool negate = take_sign(true);
    terms.push_back(term(negate));
    skip_ws();
    while (!eof()) {
      bool neg = take_sign(false);
      terms.push_back(term(neg));
      skip_ws();
    }
    return terms;
  }

private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" +
                     s_ + "\"");
  }

  // Between terms a sign is mandatory; a leading sign is optional.
  bool take_sign(bool leading) {
    skip_ws();
    if (!eof() && (peek() == '+' || peek() == '-')) {
      bool neg = peek() == '-';
      ++pos_;
      return neg;
    }
    if (!leading) fail("expected '+' or '-'");
    return false;
  }

  Integer natural() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
      digits += s_[pos_++];
    return Integer(digits);
  }

  int var_index() {
    for (std::size_t v = 0; v < vars_.size(); ++v)
      if (s_.compare(pos_, vars_[v].size(), vars_[v]) == 0)
        return static_cast<int>(v);
    return -1;
  }

  RawTerm term(bool negate) {
    RawTerm t;
    t.coeff = Rational(1);
    skip_ws();
    if (eof()) fail("expected a term");
    bool need_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = natural();
      Integer den(1);
      skip_ws();
      if (!eof() && peek() == '/') {
        ++pos_;
        den = natural();
        if (den == 0) fail("zero denominator");
      }
      t.coeff = Rational(num, den);
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    } else {
      need_factor = true;  // must start with a variable
    }
    while (need_factor) {
      skip_ws();
      int v = var_index();
      if (v < 0) fail("expected a variable");
      pos_ += vars_[v].size();
      int e = 1;
      skip_ws();
      if (!eof() && peek() == '^') {
        ++pos_;
        Integer n = natural();
        if (n > 64) fail("exponent too large");
        e = static_cast<int>(n);
      }
      t.exps[v] += e;
      skip_ws();
      need_factor = false;
      if (!eof() && peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    }
    if (negate) t.coeff = -t.coeff;
    return t;
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(const std::string& text, RingCtx ctx,
                std::optional<Deg> expected) {
  const auto& names = var_names(ctx.kind);
  std::vector<RawTerm> terms = Scanner(text, names).parse();

  auto term_degree = [&](const RawTerm& t) -> Deg {
    Mono m{t.exps[0], t.exps[1], t.exps[2], t.exps[3]};
    return mono_degree(ctx.kind, m);
  };
  // All terms must share one degree (the zero-coefficient corner case is
  // irrelevant: the grammar cannot produce a 0 coefficient except literal
  // "0", handled below).
  std::optional<Deg> found;
  for (const RawTerm& t : terms) {
    if (t.coeff == 0) continue;
    Deg d = term_degree(t);
    if (!found)
      found = d;
    else if (*found != d)
      throw PreconditionError("polynomial is not homogeneous: \"" + text + "\"");
  }
  Deg deg = found.value_or(expected.value_or(Deg{0, 0}));
  if (expected && found && *found != *expected)
    throw PreconditionError("degree mismatch: expected (" +
                            std::to_string(expected->a) + "," +
                            std::to_string(expected->b) + ") in \"" + text +
                            "\"");
  Form f = zero_form(ctx, deg);
  for (const RawTerm& t : terms) {
    if (t.coeff == 0) continue;
    Mono m{t.exps[0], t.exps[1], t.exps[2], t.exps[3]};
    f.coeffs(mono_index(ctx.kind, deg, m)) += t.coeff;
  }
  return f;
}

TargetPoly parse_target(const std::string& text, TargetKind kind) {
  const auto& names = var_names(kind);
  std::vector<RawTerm> terms = Scanner(text, names).parse();
  TargetPoly f = tp_zero(kind);
  for (const RawTerm& t : terms) {
    TMono m{t.exps[0], t.exps[1], t.exps[2], t.exps[3]};
    f = f + tp_monomial(kind, m, t.coeff);
  }
  return f;
}

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip();
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  skip();
  std::string num;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    num += text[i++];
  if (num.empty()) throw ParseError("expected a rational: \"" + text + "\"");
  std::string den = "1";
  skip();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip();
    den.clear();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      den += text[i++];
    if (den.empty() || Integer(den) == 0)
      throw ParseError("bad denominator: \"" + text + "\"");
  }
  skip();
  if (i != text.size()) throw ParseError("trailing input: \"" + text + "\"");
  Rational r{Integer(num), Integer(den)};
  return neg ? Rational(-r) : r;
}

}  // namespace syzimp
