#include "ncdiff/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ncdiff/errors.hpp"

namespace ncd {

namespace {

enum class Tok { Ident, Number, Slash, Caret, Plus, Minus, LParen, RParen, Dot, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column; // 1-based
};

class Lexer {
public:
  Lexer(std::string_view text, std::size_t line, std::size_t column_base)
      : text_(text), line_(line), base_(column_base) {
    advance();
  }

  const Token& peek() const { return current_; }
  std::size_t line() const { return line_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (current_.kind != kind)
      fail(current_, std::string("expected ") + what);
    return take();
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(line_, at.column, message);
  }

  void expect_end() {
    if (current_.kind != Tok::End)
      fail(current_, "unexpected '" + current_.text + "'");
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::size_t col = base_ + pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, "end of line", col};
      return;
    }
    const char ch = text_[pos_];
    auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t end = pos_;
      while (end < text_.size() && is_ident(text_[end]))
        ++end;
      current_ = {Tok::Ident, std::string(text_.substr(pos_, end - pos_)), col};
      pos_ = end;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
        ++end;
      current_ = {Tok::Number, std::string(text_.substr(pos_, end - pos_)), col};
      pos_ = end;
      return;
    }
    Tok kind;
    switch (ch) {
    case '/': kind = Tok::Slash; break;
    case '^': kind = Tok::Caret; break;
    case '+': kind = Tok::Plus; break;
    case '-': kind = Tok::Minus; break;
    case '(': kind = Tok::LParen; break;
    case ')': kind = Tok::RParen; break;
    case '.': kind = Tok::Dot; break;
    case '=': kind = Tok::Equals; break;
    default:
      throw ParseError(line_, col, std::string("unexpected character '") + ch + "'");
    }
    current_ = {kind, std::string(1, ch), col};
    ++pos_;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, "", 0};
};

Scalar parse_rational(Lexer& lex) {
  const auto num = lex.expect(Tok::Number, "number");
  Scalar value(mpz_class(num.text), 1);
  if (lex.peek().kind == Tok::Slash) {
    lex.take();
    const auto den = lex.expect(Tok::Number, "denominator");
    mpz_class d(den.text);
    if (d == 0)
      lex.fail(den, "zero denominator");
    value = Scalar(mpz_class(num.text), d);
    value.canonicalize();
  }
  return value;
}

// Reads the optional sign in front of a term; the first term may omit it.
Scalar parse_sign(Lexer& lex, bool first) {
  const auto kind = lex.peek().kind;
  if (kind == Tok::Plus || kind == Tok::Minus) {
    lex.take();
    return kind == Tok::Minus ? Scalar(-1) : Scalar(1);
  }
  if (!first)
    lex.fail(lex.peek(), "expected '+' or '-'");
  return Scalar(1);
}

bool at_term_end(const Lexer& lex) {
  const auto k = lex.peek().kind;
  return k == Tok::End || k == Tok::Plus || k == Tok::Minus || k == Tok::RParen;
}

Word parse_word(Lexer& lex, const AlgebraPresentation& p) {
  Word w;
  while (lex.peek().kind == Tok::Ident) {
    const auto id = lex.take();
    const auto g = p.find_generator(id.text);
    if (!g)
      lex.fail(id, "unknown generator '" + id.text + "'");
    std::size_t times = 1;
    if (lex.peek().kind == Tok::Caret) {
      lex.take();
      const auto e = lex.expect(Tok::Number, "exponent");
      times = std::stoul(e.text);
      if (times == 0 || times > 64)
        lex.fail(e, "exponent out of range");
    }
    w.insert(w.end(), times, *g);
  }
  return w;
}

// Sum of `[rational] [word]` terms, stopping before ')' or end of line.
AlgElement parse_sum(Lexer& lex, const AlgebraPresentation& p) {
  AlgElement e;
  bool first = true;
  do {
    const Scalar sign = parse_sign(lex, first);
    first = false;
    const auto start = lex.peek();
    Scalar coef(1);
    bool have_coef = false;
    if (lex.peek().kind == Tok::Number) {
      coef = parse_rational(lex);
      have_coef = true;
    }
    const Word w = parse_word(lex, p);
    if (!have_coef && w.empty())
      lex.fail(start, "expected a term");
    e.add_term(w, sign * coef);
    if (!at_term_end(lex))
      lex.fail(lex.peek(), "unexpected '" + lex.peek().text + "'");
  } while (lex.peek().kind == Tok::Plus || lex.peek().kind == Tok::Minus);
  return e;
}

std::size_t find_name(const std::vector<std::string>& names, const Token& id, Lexer& lex, const char* what) {
  auto it = std::find(names.begin(), names.end(), id.text);
  if (it == names.end())
    lex.fail(id, std::string("unknown ") + what + " '" + id.text + "'");
  return static_cast<std::size_t>(it - names.begin());
}

BimElement parse_module_sum(Lexer& lex, const AlgebraPresentation& p, const std::vector<std::string>& basis) {
  BimElement x(basis.size());
  bool first = true;
  while (lex.peek().kind != Tok::End) {
    const Scalar sign = parse_sign(lex, first);
    first = false;
    Scalar coef(1);
    if (lex.peek().kind == Tok::Number) {
      coef = parse_rational(lex);
      if (coef == 0 && lex.peek().kind == Tok::End)
        break;
    }
    const auto id = lex.expect(Tok::Ident, "basis name");
    const auto i = find_name(basis, id, lex, "basis element");
    lex.expect(Tok::Dot, "'.'");
    lex.expect(Tok::LParen, "'('");
    x[i] += sign * coef * parse_sum(lex, p);
    lex.expect(Tok::RParen, "')'");
  }
  if (first)
    lex.fail(lex.peek(), "expected a module element");
  for (std::size_t i = 0; i < x.rank(); ++i)
    x[i] = nf(x[i], p);
  return x;
}

DualElement parse_dual_sum(Lexer& lex, const AlgebraPresentation& p, const std::vector<std::string>& basis) {
  DualElement X(basis.size());
  bool first = true;
  while (lex.peek().kind != Tok::End) {
    const Scalar sign = parse_sign(lex, first);
    first = false;
    Scalar coef(1);
    if (lex.peek().kind == Tok::Number) {
      coef = parse_rational(lex);
      if (coef == 0 && lex.peek().kind == Tok::End)
        break;
    }
    AlgElement left = AlgElement::one();
    if (lex.peek().kind == Tok::LParen) {
      lex.take();
      left = parse_sum(lex, p);
      lex.expect(Tok::RParen, "')'");
      lex.expect(Tok::Dot, "'.'");
    }
    const auto id = lex.expect(Tok::Ident, "basis name");
    X[find_name(basis, id, lex, "basis element")] += sign * coef * left;
  }
  if (first)
    lex.fail(lex.peek(), "expected a dual element");
  for (std::size_t i = 0; i < X.rank(); ++i)
    X[i] = nf(X[i], p);
  return X;
}

struct Directive {
  std::string keyword;
  std::string_view body;
  std::size_t line;
  std::size_t body_column; // 1-based column of body[0]
};

std::vector<std::string> parse_names(Lexer& lex, const char* what) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  while (lex.peek().kind == Tok::Ident) {
    const auto id = lex.take();
    if (!seen.insert(id.text).second)
      lex.fail(id, std::string("duplicate ") + what + " '" + id.text + "'");
    names.push_back(id.text);
  }
  lex.expect_end();
  if (names.empty())
    lex.fail(lex.peek(), std::string("expected at least one ") + what);
  return names;
}

std::string module_line(const BimElement& x, const AlgebraPresentation& p, const std::vector<std::string>& basis) {
  std::string out;
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (x[i].is_zero())
      continue;
    out += (out.empty() ? "" : " + ") + basis[i] + ".( " + format(x[i], p) + " )";
  }
  return out.empty() ? "0" : out;
}

} // namespace

AlgElement parse_expr(std::string_view text, const AlgebraPresentation& p) {
  Lexer lex(text, 1, 1);
  auto e = parse_sum(lex, p);
  lex.expect_end();
  return nf(e, p);
}

BimElement parse_module_element(std::string_view text, const AlgebraPresentation& p,
                                const std::vector<std::string>& basis) {
  Lexer lex(text, 1, 1);
  return parse_module_sum(lex, p, basis);
}

DualElement parse_dual_element(std::string_view text, const AlgebraPresentation& p,
                               const std::vector<std::string>& basis) {
  Lexer lex(text, 1, 1);
  return parse_dual_sum(lex, p, basis);
}

ModelFile parse_model(std::string_view text) {
  std::vector<Directive> directives;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first])))
      ++first;
    if (first == line.size())
      continue;
    const auto colon = line.find(':', first);
    if (colon == std::string_view::npos)
      throw ParseError(line_no, first + 1, "expected '<directive>:'");
    std::string keyword(line.substr(first, colon - first));
    while (!keyword.empty() && std::isspace(static_cast<unsigned char>(keyword.back())))
      keyword.pop_back();
    static const std::set<std::string> known{"generators", "rule", "basis", "left", "d", "rho"};
    if (!known.contains(keyword))
      throw ParseError(line_no, first + 1, "unknown directive '" + keyword + "'");
    directives.push_back({keyword, line.substr(colon + 1), line_no, colon + 2});
    if (end == text.size())
      break;
  }

  auto of_kind = [&](const std::string& k) {
    std::vector<const Directive*> out;
    for (const auto& d : directives)
      if (d.keyword == k)
        out.push_back(&d);
    return out;
  };

  std::map<std::string, std::size_t> lines;

  const auto gen_lines = of_kind("generators");
  if (gen_lines.empty())
    throw ParseError(1, 1, "missing 'generators:' line");
  if (gen_lines.size() > 1)
    throw ParseError(gen_lines[1]->line, 1, "duplicate 'generators:' line");
  std::vector<std::string> names;
  {
    Lexer lex(gen_lines[0]->body, gen_lines[0]->line, gen_lines[0]->body_column);
    names = parse_names(lex, "generator");
  }
  lines["generators"] = gen_lines[0]->line;

  // Rules are read against a rule-free view of the generators.
  const AlgebraPresentation names_only(names, [&] {
    std::vector<RewriteRule> trivial;
    for (GenId j = 0; j < names.size(); ++j)
      for (GenId i = 0; i < j; ++i)
        trivial.push_back({j, i, AlgElement{}});
    return trivial;
  }());

  std::vector<RewriteRule> rules;
  std::set<std::pair<GenId, GenId>> seen_rules;
  for (const auto* d : of_kind("rule")) {
    Lexer lex(d->body, d->line, d->body_column);
    const auto a = lex.expect(Tok::Ident, "generator");
    const auto b = lex.expect(Tok::Ident, "generator");
    const auto j = static_cast<GenId>(find_name(names, a, lex, "generator"));
    const auto i = static_cast<GenId>(find_name(names, b, lex, "generator"));
    if (j <= i)
      lex.fail(a, "lhs must be in descending generator order");
    if (!seen_rules.insert({j, i}).second)
      lex.fail(a, "duplicate rule for " + a.text + " " + b.text);
    lex.expect(Tok::Equals, "'='");
    const auto rhs_tok = lex.peek();
    auto rhs = parse_sum(lex, names_only);
    lex.expect_end();
    for (const auto& [w, c] : rhs.terms())
      if (w.size() > 2 || !MonomialLess{}(w, Word{j, i}))
        lex.fail(rhs_tok, "rhs monomial '" + format_word(w, names_only) + "' is not smaller than the lhs");
    rules.push_back({j, i, std::move(rhs)});
    lines["rule:" + a.text + " " + b.text] = d->line;
  }
  for (GenId j = 0; j < names.size(); ++j)
    for (GenId i = 0; i < j; ++i)
      if (!seen_rules.contains({j, i}))
        throw ParseError(gen_lines[0]->line, 1, "missing rule for " + names[j] + " " + names[i]);

  ModelFile m{AlgebraPresentation(names, std::move(rules)), {}, {}, std::nullopt, std::nullopt, {}};
  const auto& p = m.algebra;
  const std::size_t n = names.size();

  const auto basis_lines = of_kind("basis");
  if (basis_lines.size() > 1)
    throw ParseError(basis_lines[1]->line, 1, "duplicate 'basis:' line");
  if (!basis_lines.empty()) {
    Lexer lex(basis_lines[0]->body, basis_lines[0]->line, basis_lines[0]->body_column);
    m.basis = parse_names(lex, "basis element");
    for (const auto& b : m.basis)
      if (p.find_generator(b))
        throw ParseError(basis_lines[0]->line, 1, "basis name '" + b + "' clashes with a generator");
    lines["basis"] = basis_lines[0]->line;
  }
  const std::size_t rank = m.basis.size();

  auto require_basis = [&](const Directive* d) {
    if (rank == 0)
      throw ParseError(d->line, 1, "'" + d->keyword + ":' needs a 'basis:' line");
  };

  // left: g b = Σ_j e_j.( Φ_jb(g) )
  std::vector<std::vector<bool>> have_left(n, std::vector<bool>(rank, false));
  m.structure.assign(rank == 0 ? 0 : n, AlgMatrix(rank, rank));
  for (const auto* d : of_kind("left")) {
    require_basis(d);
    Lexer lex(d->body, d->line, d->body_column);
    const auto a = lex.expect(Tok::Ident, "generator");
    const auto b = lex.expect(Tok::Ident, "basis element");
    const auto g = find_name(names, a, lex, "generator");
    const auto i = find_name(m.basis, b, lex, "basis element");
    if (have_left[g][i])
      lex.fail(a, "duplicate left line for " + a.text + " " + b.text);
    have_left[g][i] = true;
    lex.expect(Tok::Equals, "'='");
    const auto col = parse_module_sum(lex, p, m.basis);
    for (std::size_t j = 0; j < rank; ++j)
      m.structure[g](j, i) = col[j];
    lines["left:" + a.text + " " + b.text] = d->line;
  }
  for (std::size_t g = 0; g < n && rank > 0; ++g)
    for (std::size_t i = 0; i < rank; ++i)
      if (!have_left[g][i])
        throw ParseError(basis_lines[0]->line, 1, "missing left line for " + names[g] + " " + m.basis[i]);

  if (const auto d_lines = of_kind("d"); !d_lines.empty()) {
    std::vector<std::optional<BimElement>> values(n);
    for (const auto* d : d_lines) {
      require_basis(d);
      Lexer lex(d->body, d->line, d->body_column);
      const auto a = lex.expect(Tok::Ident, "generator");
      const auto g = find_name(names, a, lex, "generator");
      if (values[g])
        lex.fail(a, "duplicate d line for " + a.text);
      lex.expect(Tok::Equals, "'='");
      values[g] = parse_module_sum(lex, p, m.basis);
      lines["d:" + a.text] = d->line;
    }
    std::vector<BimElement> diffs;
    for (std::size_t g = 0; g < n; ++g) {
      if (!values[g])
        throw ParseError(d_lines.front()->line, 1, "missing d line for " + names[g]);
      diffs.push_back(*values[g]);
    }
    m.differential = std::move(diffs);
  }

  if (const auto rho_lines = of_kind("rho"); !rho_lines.empty()) {
    std::vector<std::vector<std::optional<AlgElement>>> values(rank, std::vector<std::optional<AlgElement>>(n));
    for (const auto* d : rho_lines) {
      require_basis(d);
      Lexer lex(d->body, d->line, d->body_column);
      const auto b = lex.expect(Tok::Ident, "basis element");
      const auto a = lex.expect(Tok::Ident, "generator");
      const auto i = find_name(m.basis, b, lex, "basis element");
      const auto g = find_name(names, a, lex, "generator");
      if (values[i][g])
        lex.fail(b, "duplicate rho line for " + b.text + " " + a.text);
      lex.expect(Tok::Equals, "'='");
      auto e = parse_sum(lex, p);
      lex.expect_end();
      values[i][g] = nf(e, p);
      lines["rho:" + b.text + " " + a.text] = d->line;
    }
    std::vector<std::vector<AlgElement>> action(rank, std::vector<AlgElement>(n));
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t g = 0; g < n; ++g) {
        if (!values[i][g])
          throw ParseError(rho_lines.front()->line, 1, "missing rho line for " + m.basis[i] + " " + names[g]);
        action[i][g] = *values[i][g];
      }
    m.action = std::move(action);
  }
  m.source_lines = std::move(lines);
  return m;
}

std::string emit(const ModelFile& m) {
  const auto& p = m.algebra;
  std::string out = "generators:";
  for (const auto& g : p.generator_names())
    out += " " + g;
  out += "\n";
  for (const auto& r : p.rules())
    out += "rule: " + format_word(Word{r.high, r.low}, p) + " = " + format(r.rhs, p) + "\n";
  if (!m.has_bimodule())
    return out;
  out += "basis:";
  for (const auto& b : m.basis)
    out += " " + b;
  out += "\n";
  const std::size_t rank = m.basis.size();
  for (GenId g = 0; g < p.generator_count(); ++g)
    for (std::size_t i = 0; i < rank; ++i) {
      BimElement col(rank);
      for (std::size_t j = 0; j < rank; ++j)
        col[j] = m.structure[g](j, i);
      out += "left: " + p.generator_name(g) + " " + m.basis[i] + " = " + module_line(col, p, m.basis) + "\n";
    }
  if (m.differential)
    for (GenId g = 0; g < p.generator_count(); ++g)
      out += "d: " + p.generator_name(g) + " = " + module_line((*m.differential)[g], p, m.basis) + "\n";
  if (m.action)
    for (std::size_t i = 0; i < rank; ++i)
      for (GenId g = 0; g < p.generator_count(); ++g)
        out += "rho: " + m.basis[i] + " " + p.generator_name(g) + " = " + format((*m.action)[i][g], p) + "\n";
  return out;
}

BimodulePresentation bimodule_of(const ModelFile& m) {
  if (!m.has_bimodule())
    throw ModelError("model has no 'basis:' section");
  return BimodulePresentation(m.algebra, m.basis, m.structure);
}

CalculusModel calculus_of(const ModelFile& m) {
  if (!m.differential)
    throw ModelError("model has no 'd:' section");
  return CalculusModel(bimodule_of(m), *m.differential);
}

RightCartanPair pair_of(const ModelFile& m) {
  if (m.action)
    return RightCartanPair(bimodule_of(m), *m.action);
  if (m.differential)
    return pair_from_calculus(calculus_of(m));
  throw ModelError("model has neither 'rho:' nor 'd:' section");
}

ModelFile to_model(const CalculusModel& c) {
  const auto& b = c.bimodule();
  return ModelFile{c.algebra(), b.basis_names(), b.structure(), c.differential(), std::nullopt, {}};
}

ModelFile to_model(const RightCartanPair& pair) {
  const auto& b = pair.presentation();
  return ModelFile{pair.algebra(), b.basis_names(), b.structure(), std::nullopt, pair.action(), {}};
}

ModelFile mirror(const ModelFile& m) {
  const auto& p = m.algebra;
  const std::size_t n = p.generator_count();
  const std::size_t rank = m.basis.size();
  ModelFile out{mirror(p), m.basis, {}, std::nullopt, std::nullopt, {}};
  if (rank > 0) {
    out.structure.assign(n, AlgMatrix(rank, rank));
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < rank; ++c)
          out.structure[n - 1 - g](c, r) = mirror(m.structure[g](r, c), p);
  }
  if (m.differential) {
    std::vector<BimElement> d(n);
    for (std::size_t g = 0; g < n; ++g)
      d[n - 1 - g] = mirror_components((*m.differential)[g], p);
    out.differential = std::move(d);
  }
  if (m.action) {
    std::vector<std::vector<AlgElement>> a(rank, std::vector<AlgElement>(n));
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t g = 0; g < n; ++g)
        a[i][n - 1 - g] = mirror((*m.action)[i][g], p);
    out.action = std::move(a);
  }
  return out;
}

std::string emit_human(const ValidationReport& r) {
  std::size_t width = 7;
  for (const auto& l : r.lines())
    width = std::max(width, l.key.size());
  auto row = [&](const std::string& key, Status s, const std::string& detail) {
    std::string line = key + std::string(width - key.size() + 2, ' ') + to_string(s);
    if (!detail.empty())
      line += std::string(14 - std::string(to_string(s)).size(), ' ') + detail;
    return line + "\n";
  };
  std::string out;
  for (const auto& l : r.lines())
    out += row(l.key, l.status, l.detail);
  out += row("overall", r.verdict(), "");
  return out;
}

std::string emit_machine(const ValidationReport& r) {
  std::string out;
  for (const auto& l : r.lines())
    out += l.key + "\t" + to_string(l.status) + "\t" + l.detail + "\n";
  out += std::string("overall\t") + to_string(r.verdict()) + "\t\n";
  return out;
}

} // namespace ncd
