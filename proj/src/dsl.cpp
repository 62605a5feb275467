#include "dsl.hpp"

#include <cctype>

namespace frobkit {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

enum class Tok { kName, kRef, kDot, kOx, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '.') {
      out.push_back({Tok::kDot, ".", i++});
      continue;
    }
    if (c == '(') {
      out.push_back({Tok::kLParen, "(", i++});
      continue;
    }
    if (c == ')') {
      out.push_back({Tok::kRParen, ")", i++});
      continue;
    }
    if (c == '#') {
      std::size_t start = i++;
      if (i >= src.size() || !ident_start(src[i]))
        throw DslParseError("expected a name after '#'", start);
      std::size_t b = i;
      while (i < src.size() && ident_char(src[i])) ++i;
      out.push_back({Tok::kRef, src.substr(b, i - b), start});
      continue;
    }
    if (ident_start(c)) {
      std::size_t start = i;
      while (i < src.size() && ident_char(src[i])) ++i;
      std::string word = src.substr(start, i - start);
      out.push_back({word == "ox" ? Tok::kOx : Tok::kName, word, start});
      continue;
    }
    throw DslParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::kEnd, "", src.size()});
  return out;
}

const char* const kAtomNames[] = {"id", "m", "e", "delta", "eps", "ev", "coev"};

bool is_atom_name(const std::string& s) {
  for (const char* a : kAtomNames)
    if (s == a) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  MorphExpr parse() {
    MorphExpr e = composition();
    if (cur().kind != Tok::kEnd)
      throw DslParseError("unexpected '" + cur().text + "'", cur().offset);
    return e;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  // composition := tensor ('.' tensor)*   (left-associative)
  MorphExpr composition() {
    MorphExpr e = tensor();
    while (cur().kind == Tok::kDot) {
      std::size_t at = cur().offset;
      advance();
      MorphExpr rhs = tensor();
      MorphExpr node{ExprKind::kCompose, "", {}, e.offset, -1, -1};
      node.children.push_back(std::move(e));
      node.children.push_back(std::move(rhs));
      (void)at;
      e = std::move(node);
    }
    return e;
  }

  // tensor := primary ('ox' primary)*   (left-associative, binds tighter)
  MorphExpr tensor() {
    MorphExpr e = primary();
    while (cur().kind == Tok::kOx) {
      advance();
      MorphExpr rhs = primary();
      MorphExpr node{ExprKind::kTensor, "", {}, e.offset, -1, -1};
      node.children.push_back(std::move(e));
      node.children.push_back(std::move(rhs));
      e = std::move(node);
    }
    return e;
  }

  MorphExpr primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::kLParen: {
        advance();
        MorphExpr e = composition();
        if (cur().kind != Tok::kRParen)
          throw DslParseError("expected ')'", cur().offset);
        advance();
        return e;
      }
      case Tok::kName: {
        if (!is_atom_name(t.text))
          throw DslParseError("unknown atom '" + t.text + "'", t.offset);
        MorphExpr e{ExprKind::kAtom, t.text, {}, t.offset, -1, -1};
        advance();
        return e;
      }
      case Tok::kRef: {
        MorphExpr e{ExprKind::kRef, t.text, {}, t.offset, -1, -1};
        advance();
        return e;
      }
      case Tok::kRParen:
        throw DslParseError("unbalanced ')'", t.offset);
      case Tok::kDot:
      case Tok::kOx:
      case Tok::kEnd:
        throw DslParseError("expected an expression", t.offset);
    }
    throw DslParseError("expected an expression", t.offset);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::pair<int, int> atom_arity(const std::string& name) {
  if (name == "id") return {1, 1};
  if (name == "m") return {2, 1};
  if (name == "e") return {0, 1};
  if (name == "delta") return {1, 2};
  if (name == "eps") return {1, 0};
  if (name == "ev") return {2, 0};
  if (name == "coev") return {0, 2};
  throw std::logic_error("unknown atom slipped through parsing");
}

void typecheck_node(MorphExpr& e, int cap) {
  switch (e.kind) {
    case ExprKind::kAtom: {
      auto [p, q] = atom_arity(e.name);
      e.p = p;
      e.q = q;
      break;
    }
    case ExprKind::kRef:
      e.p = e.q = 1;
      break;
    case ExprKind::kCompose: {
      MorphExpr& g = e.children[0];
      MorphExpr& f = e.children[1];
      typecheck_node(g, cap);
      typecheck_node(f, cap);
      if (f.q != g.p)
        throw DslTypeError("arity mismatch in '" + render_expr(e) + "': '" +
                               render_expr(f) + "' produces " +
                               std::to_string(f.q) + " strand(s) but '" +
                               render_expr(g) + "' consumes " +
                               std::to_string(g.p),
                           e.offset);
      e.p = f.p;
      e.q = g.q;
      break;
    }
    case ExprKind::kTensor: {
      MorphExpr& a = e.children[0];
      MorphExpr& b = e.children[1];
      typecheck_node(a, cap);
      typecheck_node(b, cap);
      e.p = a.p + b.p;
      e.q = a.q + b.q;
      break;
    }
  }
  if (e.p + e.q > cap)
    throw DslTypeError("'" + render_expr(e) + "' has arity (" +
                           std::to_string(e.p) + "," + std::to_string(e.q) +
                           "), beyond the supported total of " +
                           std::to_string(cap),
                       e.offset);
}

// Rendering precedence: composition 1, tensor 2, leaf 3.
int prec(const MorphExpr& e) {
  switch (e.kind) {
    case ExprKind::kCompose: return 1;
    case ExprKind::kTensor: return 2;
    default: return 3;
  }
}

void render_into(const MorphExpr& e, std::string& out) {
  switch (e.kind) {
    case ExprKind::kAtom:
      out += e.name;
      return;
    case ExprKind::kRef:
      out += "#" + e.name;
      return;
    case ExprKind::kCompose:
    case ExprKind::kTensor: {
      const char* op = e.kind == ExprKind::kCompose ? " . " : " ox ";
      const int my = prec(e);
      // Left child of the same precedence continues the chain; anything
      // looser, or a same-precedence right child, needs parentheses.
      const MorphExpr& l = e.children[0];
      const MorphExpr& r = e.children[1];
      bool pl = prec(l) < my;
      bool pr = prec(r) <= my;
      if (pl) out += "(";
      render_into(l, out);
      if (pl) out += ")";
      out += op;
      if (pr) out += "(";
      render_into(r, out);
      if (pr) out += ")";
      return;
    }
  }
}

TensorMap eval_node(const MorphExpr& e, const FrobModel& model,
                    const std::map<std::string, RatMat>& bindings) {
  switch (e.kind) {
    case ExprKind::kAtom: {
      if (e.name == "id") return tm_identity(model.d);
      if (e.name == "m") return model.m;
      if (e.name == "e") return model.e;
      if (e.name == "delta") return model.delta;
      if (e.name == "eps") return model.eps;
      if (e.name == "ev") return model.ev();
      return model.coev();
    }
    case ExprKind::kRef: {
      auto it = bindings.find(e.name);
      if (it == bindings.end())
        throw DslEvalError("unbound name '#" + e.name + "'", e.offset);
      if (it->second.rows != model.d || it->second.cols != model.d)
        throw DslEvalError("binding '#" + e.name + "' is " +
                               std::to_string(it->second.rows) + "x" +
                               std::to_string(it->second.cols) +
                               " but the algebra has dimension " +
                               std::to_string(model.d),
                           e.offset);
      TensorMap t(model.d, 1, 1);
      t.mat = it->second;
      return t;
    }
    case ExprKind::kCompose:
      // g . f applies f first.
      return tm_compose(eval_node(e.children[0], model, bindings),
                        eval_node(e.children[1], model, bindings));
    case ExprKind::kTensor:
      return tm_kron(eval_node(e.children[0], model, bindings),
                     eval_node(e.children[1], model, bindings));
  }
  throw std::logic_error("unreachable expression kind");
}

std::vector<int> unpack_index(int flat, int d, int arity) {
  std::vector<int> digits(arity, 1);
  for (int f = arity - 1; f >= 0; --f) {
    digits[f] = flat % d + 1;  // 1-based in reports
    flat /= d;
  }
  return digits;
}

std::string index_str(const std::vector<int>& idx) {
  if (idx.empty()) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

}  // namespace

MorphExpr parse_expr(const std::string& text) {
  return Parser(lex(text)).parse();
}

std::pair<int, int> typecheck_expr(MorphExpr& expr, int arity_cap) {
  typecheck_node(expr, arity_cap);
  return {expr.p, expr.q};
}

std::string render_expr(const MorphExpr& expr) {
  std::string out;
  render_into(expr, out);
  return out;
}

TensorMap evaluate_expr(const MorphExpr& expr, const FrobModel& model,
                        const std::map<std::string, RatMat>& bindings) {
  if (expr.p < 0)
    throw std::logic_error("expression must be typechecked before evaluation");
  return eval_node(expr, model, bindings);
}

EqualityReport assert_equal(const std::string& lhs, const std::string& rhs,
                            const FrobModel& model,
                            const std::map<std::string, RatMat>& bindings) {
  MorphExpr a = parse_expr(lhs);
  MorphExpr b = parse_expr(rhs);
  auto [pa, qa] = typecheck_expr(a);
  auto [pb, qb] = typecheck_expr(b);
  if (pa != pb || qa != qb)
    throw DslTypeError("sides have different arities: (" + std::to_string(pa) +
                           "," + std::to_string(qa) + ") vs (" +
                           std::to_string(pb) + "," + std::to_string(qb) + ")",
                       b.offset);
  TensorMap va = evaluate_expr(a, model, bindings);
  TensorMap vb = evaluate_expr(b, model, bindings);
  EqualityReport rep;
  rep.p = pa;
  rep.q = qa;
  for (int r = 0; r < va.mat.rows; ++r)
    for (int c = 0; c < va.mat.cols; ++c)
      if (va.mat.at(r, c) != vb.mat.at(r, c)) {
        rep.equal = false;
        rep.out_index = unpack_index(r, model.d, qa);
        rep.in_index = unpack_index(c, model.d, pa);
        rep.lhs_value = rat_str(va.mat.at(r, c));
        rep.rhs_value = rat_str(vb.mat.at(r, c));
        rep.detail = "first difference at output " + index_str(rep.out_index) +
                     ", input " + index_str(rep.in_index) + ": " +
                     rep.lhs_value + " vs " + rep.rhs_value;
        return rep;
      }
  rep.equal = true;
  return rep;
}

std::vector<CorpusResult> run_corpus(const std::string& text,
                                     const FrobModel& model,
                                     const std::map<std::string, RatMat>& bindings) {
  std::vector<CorpusResult> results;
  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    ++line_no;
    std::string line = text.substr(line_start, line_end - line_start);
    // Strip comments: '#' begins one unless it introduces a reference.
    for (std::size_t i = 0; i < line.size(); ++i)
      if (line[i] == '#' && (i + 1 >= line.size() || !ident_start(line[i + 1]))) {
        line.resize(i);
        break;
      }
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) {
      std::size_t sep = line.find("==");
      if (sep == std::string::npos)
        throw DslParseError("corpus line is not of the form 'lhs == rhs'",
                            line_start);
      CorpusResult res;
      res.line = line_no;
      res.lhs = line.substr(0, sep);
      res.rhs = line.substr(sep + 2);
      if (res.rhs.find("==") != std::string::npos)
        throw DslParseError("corpus line has more than one '=='", line_start);
      res.report = assert_equal(res.lhs, res.rhs, model, bindings);
      results.push_back(std::move(res));
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return results;
}

}  // namespace frobkit
