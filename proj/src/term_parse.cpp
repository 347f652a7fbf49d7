#include "gml/term.hpp"

#include <algorithm>
#include <cctype>

namespace gml {

bool is_reserved_name(std::string_view name) {
  return name == "I" || name == "T" || name == "F" || name == "Omega";
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_ident() {
    skip_space();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  std::string ident() {
    skip_space();
    std::size_t start = pos_;
    if (!at_ident()) fail("expected identifier");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Term term() {
    if (!peek('\\')) return application();
    ++pos_;
    std::vector<std::string> binders;
    while (at_ident()) {
      std::size_t at = pos_;
      binders.push_back(ident());
      if (is_reserved_name(binders.back())) {
        pos_ = at;
        fail("cannot bind reserved name '" + binders.back() + "'");
      }
    }
    if (binders.empty()) fail("expected binder");
    if (!peek('.')) fail("expected '.'");
    ++pos_;
    for (auto& b : binders) scope_.push_back(b);
    Term body = term();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      scope_.pop_back();
      body = Term::abs(std::move(body), *it);
    }
    return body;
  }

  Term application() {
    std::optional<Term> acc;
    while (at_ident() || peek('(')) {
      Term a = atom();
      acc = acc ? Term::app(std::move(*acc), std::move(a)) : std::move(a);
    }
    if (!acc) fail("expected term");
    return std::move(*acc);
  }

  Term atom() {
    if (peek('(')) {
      ++pos_;
      Term t = term();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return t;
    }
    std::string name = ident();
    for (std::size_t i = scope_.size(); i-- > 0;)
      if (scope_[i] == name) return Term::bound(static_cast<std::uint32_t>(scope_.size() - 1 - i));
    if (name == "I") return combinators::I();
    if (name == "T") return combinators::T();
    if (name == "F") return combinators::F();
    if (name == "Omega") return combinators::Omega();
    return Term::free(std::move(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

class Printer {
 public:
  explicit Printer(const Term& root) {
    for (auto& n : root.free_names()) taken_.push_back(n);
  }

  std::string print(const Term& t) {
    std::string out;
    term(t, out);
    return out;
  }

 private:
  bool usable(const std::string& name) const {
    if (!is_identifier(name) || is_reserved_name(name)) return false;
    if (std::find(taken_.begin(), taken_.end(), name) != taken_.end()) return false;
    return std::find(scope_.begin(), scope_.end(), name) == scope_.end();
  }

  std::string choose(const std::string& hint) const {
    if (usable(hint)) return hint;
    for (std::size_t i = 0;; ++i) {
      std::string candidate = "x" + std::to_string(i);
      if (usable(candidate)) return candidate;
    }
  }

  void term(const Term& t, std::string& out) {
    if (!t.is_abs()) {
      application(t, out);
      return;
    }
    out += '\\';
    std::size_t pushed = 0;
    const Term* cur = &t;
    while (cur->is_abs()) {
      std::string name = choose(cur->name());
      if (pushed) out += ' ';
      out += name;
      scope_.push_back(std::move(name));
      ++pushed;
      cur = &cur->body();
    }
    out += '.';
    term(*cur, out);
    scope_.resize(scope_.size() - pushed);
  }

  void application(const Term& t, std::string& out) {
    if (!t.is_app()) {
      atom(t, out);
      return;
    }
    if (t.fun().is_app())
      application(t.fun(), out);
    else
      atom(t.fun(), out);
    out += ' ';
    atom(t.arg(), out);
  }

  void atom(const Term& t, std::string& out) {
    switch (t.kind()) {
      case Term::Kind::Bound: out += scope_.at(scope_.size() - 1 - t.index()); return;
      case Term::Kind::Free: out += t.name(); return;
      default:
        out += '(';
        term(t, out);
        out += ')';
    }
  }

  std::vector<std::string> taken_;
  std::vector<std::string> scope_;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Term& t) { return Printer(t).print(t); }

}  // namespace gml
