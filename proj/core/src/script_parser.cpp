#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "origami/script.hpp"

namespace origami::script {

ScriptError::ScriptError(Location loc, const std::string& message, ErrorKind kind)
    : Error(kind, std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + message),
      loc_(loc),
      message_(message) {}

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int column = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Token::Kind::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.')) ++j;
      if (j < line.size() && (line[j] == 'e' || line[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < line.size() && (line[k] == '+' || line[k] == '-')) ++k;
        if (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) {
          j = k;
          while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        }
      }
      out.push_back({Token::Kind::Number, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::string_view("(){},=*/-").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, c), col});
      ++i;
    } else {
      throw ScriptError({line_no, col}, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line_no) : toks_(std::move(tokens)), line_(line_no) {}

  Statement statement() {
    const Token& head = peek();
    Statement st;
    st.loc = {line_, head.column};
    const std::string kw = word();
    if (kw == "paper") st.body = paper();
    else if (kw == "point") st.body = point();
    else if (kw == "line") st.body = line_def();
    else if (kw == "fold") st.body = fold();
    else if (kw == "cut") {
      const auto pair = face_pair();
      st.body = CutStmt{pair[0], pair[1]};
    } else if (kw == "glue") st.body = GlueStmt{};
    else if (kw == "unfold") st.body = UnfoldStmt{};
    else if (kw == "squash") st.body = squash();
    else if (kw == "inside_reverse" || kw == "outside_reverse") st.body = reverse(kw == "inside_reverse");
    else if (kw == "rabbit_ear") st.body = rabbit_ear();
    else if (kw == "pleat") st.body = pleat();
    else if (kw == "pleat_crimp") st.body = pleat_crimp();
    else if (kw == "assert") st.body = assertion();
    else throw error_at(head, "unknown keyword '" + kw + "'");
    if (peek().kind != Token::Kind::End) throw error_at(peek(), "unexpected '" + peek().text + "'");
    return st;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Token::Kind::End) ++pos_;
    return t;
  }

  ScriptError error_at(const Token& t, const std::string& msg) const {
    return ScriptError({line_, t.column}, msg);
  }

  std::string describe(const Token& t) const {
    return t.kind == Token::Kind::End ? "end of line" : "'" + t.text + "'";
  }

  bool at_word(std::string_view w) const {
    return peek().kind == Token::Kind::Ident && peek().text == w;
  }
  bool at_punct(char c) const {
    return peek().kind == Token::Kind::Punct && peek().text[0] == c;
  }

  std::string word() {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident) throw error_at(t, "expected a name, found " + describe(t));
    return next().text;
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) throw error_at(peek(), "expected '" + std::string(w) + "', found " + describe(peek()));
    next();
  }

  void expect(char c) {
    if (!at_punct(c)) {
      throw error_at(peek(), std::string("expected '") + c + "', found " + describe(peek()));
    }
    next();
  }

  double number() {
    bool negative = false;
    if (at_punct('-')) {
      next();
      negative = true;
    }
    const Token& t = peek();
    if (t.kind != Token::Kind::Number) throw error_at(t, "expected a number, found " + describe(t));
    char* end = nullptr;
    const double v = std::strtod(t.text.c_str(), &end);
    if (end != t.text.c_str() + t.text.size()) throw error_at(t, "malformed number '" + t.text + "'");
    next();
    return negative ? -v : v;
  }

  std::uint64_t count() {
    const Token& t = peek();
    if (t.kind != Token::Kind::Number ||
        t.text.find_first_not_of("0123456789") != std::string::npos) {
      throw error_at(t, "expected a whole number, found " + describe(t));
    }
    next();
    return std::strtoull(t.text.c_str(), nullptr, 10);
  }

  Point coords() {
    expect('(');
    const double x = number();
    expect(',');
    const double y = number();
    expect(')');
    return {x, y};
  }

  FaceList faces() {
    expect('{');
    FaceList out{count()};
    while (at_punct(',')) {
      next();
      out.push_back(count());
    }
    expect('}');
    return out;
  }

  std::array<std::uint64_t, 2> face_pair() {
    const Token& at = peek();
    const FaceList f = faces();
    if (f.size() != 2) throw error_at(at, "expected a pair of faces {a,b}");
    return {f[0], f[1]};
  }

  std::optional<FaceList> optional_faces() {
    if (!at_word("faces")) return std::nullopt;
    next();
    return faces();
  }

  std::vector<std::string> name_args() {
    expect('(');
    std::vector<std::string> out{word()};
    while (at_punct(',')) {
      next();
      out.push_back(word());
    }
    expect(')');
    return out;
  }

  RayExpr ray() {
    const Token& at = peek();
    const std::string kw = word();
    if (kw == "rev") {
      expect('(');
      RayExpr r = ray();
      expect(')');
      r.reversed = !r.reversed;
      return r;
    }
    if (kw == "ray") {
      const auto args = name_args();
      if (args.size() != 2) throw error_at(at, "ray takes two points");
      return {false, args[0], args[1], false};
    }
    if (kw == "line") {
      const auto args = name_args();
      if (args.size() != 1) throw error_at(at, "line takes one line name");
      return {true, args[0], "", false};
    }
    throw error_at(at, "expected ray(P,Q), line(L) or rev(...), found '" + kw + "'");
  }

  AngleExpr angle() {
    AngleExpr out;
    double value = factor(out.text);
    while (at_punct('*') || at_punct('/')) {
      const char op = next().text[0];
      out.text += op;
      const Token& at = peek();
      const double rhs = factor(out.text);
      if (op == '/' && rhs == 0.0) throw error_at(at, "division by zero");
      value = op == '*' ? value * rhs : value / rhs;
    }
    out.value = value;
    return out;
  }

  double factor(std::string& text) {
    if (at_punct('-')) {
      next();
      text += '-';
      return -factor(text);
    }
    if (at_word("pi")) {
      next();
      text += "pi";
      return kPi;
    }
    const Token& t = peek();
    const double v = number();
    text += t.text;
    return v;
  }

  CreaseKind crease_kind() {
    const Token& at = peek();
    const std::string w = word();
    if (w == "valley") return CreaseKind::Valley;
    if (w == "mountain") return CreaseKind::Mountain;
    throw error_at(at, "expected 'valley' or 'mountain', found '" + w + "'");
  }

  PaperDecl paper() {
    expect_word("square");
    PaperDecl d;
    for (auto& n : d.names) n = word();
    if (at_word("at")) {
      next();
      std::array<Point, 4> pts;
      for (auto& p : pts) p = coords();
      d.coords = pts;
    }
    return d;
  }

  PointDef point() {
    PointDef d;
    d.name = word();
    expect('=');
    if (at_punct('(')) {
      d.kind = PointDef::Kind::Literal;
      d.literal = coords();
      return d;
    }
    const Token& at = peek();
    const std::string fn = word();
    std::size_t arity = 0;
    if (fn == "midpoint") {
      d.kind = PointDef::Kind::Midpoint;
      arity = 2;
    } else if (fn == "intersect") {
      d.kind = PointDef::Kind::Intersect;
      arity = 2;
    } else if (fn == "image") {
      d.kind = PointDef::Kind::Image;
      arity = 1;
    } else {
      throw error_at(at, "unknown point constructor '" + fn + "'");
    }
    d.args = name_args();
    if (d.args.size() != arity) {
      throw error_at(at, fn + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s"));
    }
    return d;
  }

  LineDef line_def() {
    LineDef d;
    d.name = word();
    expect_word("via");
    const Token& at = peek();
    const std::string rule = word();
    if (rule.size() != 2 || rule[0] != 'O' || rule[1] < '1' || rule[1] > '7') {
      throw error_at(at, "expected a rule O1..O7, found '" + rule + "'");
    }
    d.rule = rule[1] - '0';
    d.args = name_args();
    static constexpr std::size_t arity[] = {0, 2, 2, 2, 2, 3, 4, 3};
    if (d.args.size() != arity[d.rule]) {
      throw error_at(at, rule + " takes " + std::to_string(arity[d.rule]) + " arguments");
    }
    if (at_word("pick")) {
      next();
      const Token& k = peek();
      const std::uint64_t v = count();
      if (v < 1) throw error_at(k, "pick counts from 1");
      d.pick = static_cast<int>(v);
    }
    return d;
  }

  StatementBody fold() {
    if (at_word("bring")) {
      next();
      BringStmt b;
      b.from = word();
      expect_word("to");
      b.to = word();
      if (at_word("valley") || at_word("mountain")) b.kind = crease_kind();
      b.faces = optional_faces();
      return b;
    }
    FoldStmt f;
    f.kind = crease_kind();
    f.faces = optional_faces();
    expect_word("along");
    f.ray = ray();
    if (at_word("angle")) {
      next();
      f.angle = angle();
    }
    if (at_word("insert")) {
      next();
      f.insert = count();
    }
    return f;
  }

  CompositeStmt squash() {
    CompositeStmt c;
    c.op = CompositeStmt::Op::Squash;
    c.pair = face_pair();
    expect_word("bottom");
    c.rays.push_back(ray());
    expect_word("ridge");
    c.rays.push_back(ray());
    return c;
  }

  CompositeStmt reverse(bool inside) {
    CompositeStmt c;
    c.op = inside ? CompositeStmt::Op::InsideReverse : CompositeStmt::Op::OutsideReverse;
    c.pair = face_pair();
    expect_word("along");
    c.rays.push_back(ray());
    return c;
  }

  CompositeStmt rabbit_ear() {
    CompositeStmt c;
    c.op = CompositeStmt::Op::RabbitEar;
    c.pair = face_pair();
    expect_word("ridge");
    c.rays.push_back(ray());
    expect_word("base");
    c.rays.push_back(ray());
    expect_word("hyp");
    c.rays.push_back(ray());
    return c;
  }

  CompositeStmt pleat() {
    CompositeStmt c;
    c.op = CompositeStmt::Op::Pleat;
    c.faces = optional_faces();
    expect_word("first");
    c.rays.push_back(ray());
    expect_word("second");
    c.rays.push_back(ray());
    return c;
  }

  CompositeStmt pleat_crimp() {
    CompositeStmt c;
    c.op = CompositeStmt::Op::PleatCrimp;
    c.pair = face_pair();
    expect_word("first");
    c.rays.push_back(ray());
    expect_word("second");
    c.rays.push_back(ray());
    const Token& at = peek();
    const std::string v = word();
    if (v != "inside" && v != "outside") {
      throw error_at(at, "expected 'outside' or 'inside', found '" + v + "'");
    }
    c.inside = v == "inside";
    return c;
  }

  AssertStmt assertion() {
    AssertStmt a;
    const Token& at = peek();
    const std::string what = word();
    if (what == "faces") {
      a.kind = AssertStmt::Kind::Faces;
      a.faces = faces();
    } else if (what == "adjacency_preserved_since") {
      a.kind = AssertStmt::Kind::AdjacencyPreservedSince;
      const Token& k = peek();
      const std::uint64_t v = count();
      if (v < 1) throw error_at(k, "steps count from 1");
      a.step = static_cast<int>(v);
    } else {
      throw error_at(at, "unknown assertion '" + what + "'");
    }
    return a;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

std::string exact_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string point_text(Point p) { return "(" + exact_number(p.x) + "," + exact_number(p.y) + ")"; }

std::string faces_text(const FaceList& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

std::string pair_text(const std::array<std::uint64_t, 2>& p) {
  return "{" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "}";
}

std::string ray_text(const RayExpr& r) {
  std::string core = r.from_line ? "line(" + r.first + ")" : "ray(" + r.first + "," + r.second + ")";
  return r.reversed ? "rev(" + core + ")" : core;
}

std::string args_text(const std::vector<std::string>& args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i];
  return s + ")";
}

struct Printer {
  std::string operator()(const PaperDecl& d) const {
    std::string s = "paper square " + d.names[0] + " " + d.names[1] + " " + d.names[2] + " " + d.names[3];
    if (d.coords) {
      s += " at";
      for (const Point& p : *d.coords) s += " " + point_text(p);
    }
    return s;
  }
  std::string operator()(const PointDef& d) const {
    std::string s = "point " + d.name + " = ";
    switch (d.kind) {
      case PointDef::Kind::Literal: return s + point_text(d.literal);
      case PointDef::Kind::Midpoint: return s + "midpoint" + args_text(d.args);
      case PointDef::Kind::Intersect: return s + "intersect" + args_text(d.args);
      case PointDef::Kind::Image: return s + "image" + args_text(d.args);
    }
    return s;
  }
  std::string operator()(const LineDef& d) const {
    std::string s = "line " + d.name + " via O" + std::to_string(d.rule) + args_text(d.args);
    if (d.pick) s += " pick " + std::to_string(*d.pick);
    return s;
  }
  std::string operator()(const FoldStmt& f) const {
    std::string s = std::string("fold ") + to_string(f.kind);
    if (f.faces) s += " faces " + faces_text(*f.faces);
    s += " along " + ray_text(f.ray);
    if (f.angle) s += " angle " + f.angle->text;
    if (f.insert) s += " insert " + std::to_string(*f.insert);
    return s;
  }
  std::string operator()(const BringStmt& b) const {
    std::string s = "fold bring " + b.from + " to " + b.to + " " + to_string(b.kind);
    if (b.faces) s += " faces " + faces_text(*b.faces);
    return s;
  }
  std::string operator()(const CutStmt& c) const {
    return "cut {" + std::to_string(c.below) + "," + std::to_string(c.above) + "}";
  }
  std::string operator()(const GlueStmt&) const { return "glue"; }
  std::string operator()(const UnfoldStmt&) const { return "unfold"; }
  std::string operator()(const CompositeStmt& c) const {
    using Op = CompositeStmt::Op;
    switch (c.op) {
      case Op::Squash:
        return "squash " + pair_text(*c.pair) + " bottom " + ray_text(c.rays[0]) + " ridge " +
               ray_text(c.rays[1]);
      case Op::InsideReverse:
        return "inside_reverse " + pair_text(*c.pair) + " along " + ray_text(c.rays[0]);
      case Op::OutsideReverse:
        return "outside_reverse " + pair_text(*c.pair) + " along " + ray_text(c.rays[0]);
      case Op::RabbitEar:
        return "rabbit_ear " + pair_text(*c.pair) + " ridge " + ray_text(c.rays[0]) + " base " +
               ray_text(c.rays[1]) + " hyp " + ray_text(c.rays[2]);
      case Op::Pleat:
        return std::string("pleat") + (c.faces ? " faces " + faces_text(*c.faces) : "") +
               " first " + ray_text(c.rays[0]) + " second " + ray_text(c.rays[1]);
      case Op::PleatCrimp:
        return "pleat_crimp " + pair_text(*c.pair) + " first " + ray_text(c.rays[0]) +
               " second " + ray_text(c.rays[1]) + (c.inside ? " inside" : " outside");
    }
    return "";
  }
  std::string operator()(const AssertStmt& a) const {
    if (a.kind == AssertStmt::Kind::Faces) return "assert faces " + faces_text(a.faces);
    return "assert adjacency_preserved_since " + std::to_string(a.step);
  }
};

}  // namespace

Script parse(std::string_view text) {
  Script script;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::vector<Token> toks = tokenize(text.substr(start, end - start), line_no);
    if (toks.front().kind != Token::Kind::End) {
      Statement st = LineParser(std::move(toks), line_no).statement();
      const bool is_paper = std::holds_alternative<PaperDecl>(st.body);
      if (script.statements.empty() && !is_paper) throw ScriptError(st.loc, "missing paper declaration");
      if (!script.statements.empty() && is_paper) throw ScriptError(st.loc, "duplicate paper declaration");
      script.statements.push_back(std::move(st));
    }
    start = end + 1;
  }
  if (script.statements.empty()) throw ScriptError({1, 1}, "missing paper declaration");
  return script;
}

std::string to_text(const Statement& s) { return std::visit(Printer{}, s.body); }

std::string to_text(const Script& s) {
  std::string out;
  for (const Statement& st : s.statements) out += to_text(st) + "\n";
  return out;
}

}  // namespace origami::script
