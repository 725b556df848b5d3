#include "strel/logic.hpp"

#include <cctype>
#include <cmath>
#include <utility>
#include <vector>

namespace strel {

std::string cmp_text(CmpOp op) {
  switch (op) {
    case CmpOp::kLt: return "<";
    case CmpOp::kLe: return "<=";
    case CmpOp::kGt: return ">";
    case CmpOp::kGe: return ">=";
  }
  return "?";
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case FormulaKind::kTrue: return true;
    case FormulaKind::kAtomic: return a.name == b.name;
    case FormulaKind::kCmp:
      return a.name == b.name && a.cmp == b.cmp && a.threshold == b.threshold;
    case FormulaKind::kAt: return a.location == b.location;
    case FormulaKind::kNot: return *a.left == *b.left;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      return *a.left == *b.left && *a.right == *b.right;
    case FormulaKind::kUntil:
    case FormulaKind::kSince:
      return a.interval == b.interval && *a.left == *b.left && *a.right == *b.right;
    case FormulaKind::kEventually:
    case FormulaKind::kGlobally:
    case FormulaKind::kOnce:
    case FormulaKind::kHistorically:
      return a.interval == b.interval && *a.left == *b.left;
    case FormulaKind::kReach:
    case FormulaKind::kSurround:
      return a.name == b.name && a.dist == b.dist && *a.left == *b.left &&
             *a.right == *b.right;
    case FormulaKind::kEscape:
    case FormulaKind::kSomewhere:
    case FormulaKind::kEverywhere:
      return a.name == b.name && a.dist == b.dist && *a.left == *b.left;
  }
  return false;
}

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

void check_interval(const Interval& i) {
  if (!(i.lo >= 0.0) || !(i.lo <= i.hi) || std::isnan(i.hi))
    throw std::invalid_argument("interval bounds must satisfy 0 <= a <= b");
}

}  // namespace

FormulaPtr f_true() {
  Formula f;
  f.kind = FormulaKind::kTrue;
  return make(std::move(f));
}

FormulaPtr f_atomic(std::string name) {
  Formula f;
  f.kind = FormulaKind::kAtomic;
  f.name = std::move(name);
  return make(std::move(f));
}

FormulaPtr f_cmp(std::string channel, CmpOp op, double threshold) {
  Formula f;
  f.kind = FormulaKind::kCmp;
  f.name = std::move(channel);
  f.cmp = op;
  f.threshold = threshold;
  return make(std::move(f));
}

FormulaPtr f_at(LocId location) {
  Formula f;
  f.kind = FormulaKind::kAt;
  f.location = location;
  return make(std::move(f));
}

FormulaPtr f_not(FormulaPtr a) {
  Formula f;
  f.kind = FormulaKind::kNot;
  f.left = std::move(a);
  return make(std::move(f));
}

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = FormulaKind::kAnd;
  f.left = std::move(a);
  f.right = std::move(b);
  return make(std::move(f));
}

FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = FormulaKind::kOr;
  f.left = std::move(a);
  f.right = std::move(b);
  return make(std::move(f));
}

namespace {

FormulaPtr temporal2(FormulaKind k, Interval i, FormulaPtr a, FormulaPtr b) {
  check_interval(i);
  Formula f;
  f.kind = k;
  f.interval = i;
  f.left = std::move(a);
  f.right = std::move(b);
  return make(std::move(f));
}

FormulaPtr temporal1(FormulaKind k, Interval i, FormulaPtr a) {
  check_interval(i);
  Formula f;
  f.kind = k;
  f.interval = i;
  f.left = std::move(a);
  return make(std::move(f));
}

FormulaPtr spatial2(FormulaKind k, std::string fn, DistancePredicate d, FormulaPtr a,
                    FormulaPtr b) {
  Formula f;
  f.kind = k;
  f.name = std::move(fn);
  f.dist = d;
  f.left = std::move(a);
  f.right = std::move(b);
  return make(std::move(f));
}

FormulaPtr spatial1(FormulaKind k, std::string fn, DistancePredicate d, FormulaPtr a) {
  Formula f;
  f.kind = k;
  f.name = std::move(fn);
  f.dist = d;
  f.left = std::move(a);
  return make(std::move(f));
}

}  // namespace

FormulaPtr f_until(Interval i, FormulaPtr a, FormulaPtr b) {
  return temporal2(FormulaKind::kUntil, i, std::move(a), std::move(b));
}
FormulaPtr f_since(Interval i, FormulaPtr a, FormulaPtr b) {
  return temporal2(FormulaKind::kSince, i, std::move(a), std::move(b));
}
FormulaPtr f_eventually(Interval i, FormulaPtr a) {
  return temporal1(FormulaKind::kEventually, i, std::move(a));
}
FormulaPtr f_globally(Interval i, FormulaPtr a) {
  return temporal1(FormulaKind::kGlobally, i, std::move(a));
}
FormulaPtr f_once(Interval i, FormulaPtr a) {
  return temporal1(FormulaKind::kOnce, i, std::move(a));
}
FormulaPtr f_historically(Interval i, FormulaPtr a) {
  return temporal1(FormulaKind::kHistorically, i, std::move(a));
}
FormulaPtr f_reach(std::string fn, DistancePredicate d, FormulaPtr l, FormulaPtr r) {
  return spatial2(FormulaKind::kReach, std::move(fn), d, std::move(l), std::move(r));
}
FormulaPtr f_escape(std::string fn, DistancePredicate d, FormulaPtr a) {
  return spatial1(FormulaKind::kEscape, std::move(fn), d, std::move(a));
}
FormulaPtr f_somewhere(std::string fn, DistancePredicate d, FormulaPtr a) {
  return spatial1(FormulaKind::kSomewhere, std::move(fn), d, std::move(a));
}
FormulaPtr f_everywhere(std::string fn, DistancePredicate d, FormulaPtr a) {
  return spatial1(FormulaKind::kEverywhere, std::move(fn), d, std::move(a));
}
FormulaPtr f_surround(std::string fn, DistancePredicate d, FormulaPtr l, FormulaPtr r) {
  return spatial2(FormulaKind::kSurround, std::move(fn), d, std::move(l), std::move(r));
}

// --------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  kEnd, kIdent, kNumber, kInfinity, kTrue, kFalse,
  kNot, kAnd, kOr, kAt,
  kUntil, kSince, kEventually, kGlobally, kOnce, kHistorically,
  kReach, kEscape, kSomewhere, kEverywhere, kSurround,
  kLParen, kRParen, kLBracket, kRBracket, kComma,
  kLt, kLe, kGt, kGe,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  double number = 0.0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { next(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    next();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current_.line, current_.column);
  }

 private:
  void next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        word.push_back(text_[pos_]);
        advance();
      }
      current_.text = word;
      current_.kind = keyword(word);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
          text_[pos_ + 1] == '.')) ||
        (c == '.' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::size_t start = pos_;
      if (text_[pos_] == '-') advance();
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.'))
        advance();
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        advance();
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) advance();
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          advance();
      }
      current_.kind = Tok::kNumber;
      current_.text = text_.substr(start, pos_ - start);
      try {
        current_.number = std::stod(current_.text);
      } catch (const std::exception&) {
        throw ParseError("malformed number '" + current_.text + "'", current_.line,
                         current_.column);
      }
      return;
    }
    switch (c) {
      case '!': advance(); current_.kind = Tok::kNot; return;
      case '&': advance(); current_.kind = Tok::kAnd; return;
      case '|': advance(); current_.kind = Tok::kOr; return;
      case '@': advance(); current_.kind = Tok::kAt; return;
      case '(': advance(); current_.kind = Tok::kLParen; return;
      case ')': advance(); current_.kind = Tok::kRParen; return;
      case '[': advance(); current_.kind = Tok::kLBracket; return;
      case ']': advance(); current_.kind = Tok::kRBracket; return;
      case ',': advance(); current_.kind = Tok::kComma; return;
      case '<':
        advance();
        if (pos_ < text_.size() && text_[pos_] == '=') {
          advance();
          current_.kind = Tok::kLe;
        } else {
          current_.kind = Tok::kLt;
        }
        return;
      case '>':
        advance();
        if (pos_ < text_.size() && text_[pos_] == '=') {
          advance();
          current_.kind = Tok::kGe;
        } else {
          current_.kind = Tok::kGt;
        }
        return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_,
                         column_);
    }
  }

  static Tok keyword(const std::string& w) {
    if (w == "true") return Tok::kTrue;
    if (w == "false") return Tok::kFalse;
    if (w == "infinity") return Tok::kInfinity;
    if (w == "U") return Tok::kUntil;
    if (w == "S") return Tok::kSince;
    if (w == "F") return Tok::kEventually;
    if (w == "G") return Tok::kGlobally;
    if (w == "O") return Tok::kOnce;
    if (w == "H") return Tok::kHistorically;
    if (w == "reach") return Tok::kReach;
    if (w == "escape") return Tok::kEscape;
    if (w == "somewhere") return Tok::kSomewhere;
    if (w == "everywhere") return Tok::kEverywhere;
    if (w == "surround") return Tok::kSurround;
    return Tok::kIdent;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

// --------------------------------------------------------------------------
// Parser. Precedence: unary (including the prefix modalities) > & > |; the
// binary operators U, S, reach and surround sit on top and do not associate,
// so nesting them needs explicit brackets.

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_binary();
    if (lex_.peek().kind != Tok::kEnd) lex_.fail("unexpected trailing input");
    return f;
  }

 private:
  Lexer lex_;

  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) lex_.fail("expected " + what);
    return lex_.take();
  }

  double expect_number(const std::string& what) {
    return expect(Tok::kNumber, what).number;
  }

  Interval parse_interval() {
    expect(Tok::kLBracket, "'['");
    double lo = expect_number("interval lower bound");
    expect(Tok::kComma, "','");
    double hi = expect_number("interval upper bound");
    Token close = expect(Tok::kRBracket, "']'");
    if (!(lo >= 0.0) || !(lo <= hi))
      throw ParseError("interval bounds must satisfy 0 <= a <= b", close.line,
                       close.column);
    return {lo, hi};
  }

  std::string parse_distance_fn() {
    expect(Tok::kLParen, "'('");
    Token name = expect(Tok::kIdent, "distance function name");
    expect(Tok::kRParen, "')'");
    return name.text;
  }

  DistancePredicate parse_dbound() {
    expect(Tok::kLBracket, "'['");
    CmpOp op;
    switch (lex_.peek().kind) {
      case Tok::kLt: op = CmpOp::kLt; break;
      case Tok::kLe: op = CmpOp::kLe; break;
      case Tok::kGt: op = CmpOp::kGt; break;
      case Tok::kGe: op = CmpOp::kGe; break;
      default: lex_.fail("expected comparison in distance bound");
    }
    lex_.take();
    double bound;
    if (lex_.peek().kind == Tok::kInfinity) {
      lex_.take();
      bound = kInf;
    } else {
      bound = expect_number("distance bound");
    }
    expect(Tok::kRBracket, "']'");
    return {op, bound};
  }

  FormulaPtr parse_binary() {
    FormulaPtr left = parse_or();
    switch (lex_.peek().kind) {
      case Tok::kUntil: {
        lex_.take();
        Interval i = parse_interval();
        return f_until(i, std::move(left), parse_or());
      }
      case Tok::kSince: {
        lex_.take();
        Interval i = parse_interval();
        return f_since(i, std::move(left), parse_or());
      }
      case Tok::kReach: {
        lex_.take();
        std::string fn = parse_distance_fn();
        DistancePredicate d = parse_dbound();
        return f_reach(std::move(fn), d, std::move(left), parse_or());
      }
      case Tok::kSurround: {
        lex_.take();
        std::string fn = parse_distance_fn();
        DistancePredicate d = parse_dbound();
        return f_surround(std::move(fn), d, std::move(left), parse_or());
      }
      default:
        return left;
    }
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (lex_.peek().kind == Tok::kOr) {
      lex_.take();
      f = f_or(std::move(f), parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (lex_.peek().kind == Tok::kAnd) {
      lex_.take();
      f = f_and(std::move(f), parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    switch (lex_.peek().kind) {
      case Tok::kNot:
        lex_.take();
        return f_not(parse_unary());
      case Tok::kEventually: {
        lex_.take();
        Interval i = parse_interval();
        return f_eventually(i, parse_unary());
      }
      case Tok::kGlobally: {
        lex_.take();
        Interval i = parse_interval();
        return f_globally(i, parse_unary());
      }
      case Tok::kOnce: {
        lex_.take();
        Interval i = parse_interval();
        return f_once(i, parse_unary());
      }
      case Tok::kHistorically: {
        lex_.take();
        Interval i = parse_interval();
        return f_historically(i, parse_unary());
      }
      case Tok::kEscape: {
        lex_.take();
        std::string fn = parse_distance_fn();
        DistancePredicate d = parse_dbound();
        return f_escape(std::move(fn), d, parse_unary());
      }
      case Tok::kSomewhere: {
        lex_.take();
        std::string fn = parse_distance_fn();
        DistancePredicate d = parse_dbound();
        return f_somewhere(std::move(fn), d, parse_unary());
      }
      case Tok::kEverywhere: {
        lex_.take();
        std::string fn = parse_distance_fn();
        DistancePredicate d = parse_dbound();
        return f_everywhere(std::move(fn), d, parse_unary());
      }
      default:
        return parse_primary();
    }
  }

  FormulaPtr parse_primary() {
    switch (lex_.peek().kind) {
      case Tok::kTrue:
        lex_.take();
        return f_true();
      case Tok::kFalse:
        lex_.take();
        return f_not(f_true());
      case Tok::kAt: {
        lex_.take();
        Token n = expect(Tok::kNumber, "location id after '@'");
        double v = n.number;
        if (v < 0 || v != std::floor(v))
          throw ParseError("location id must be a non-negative integer", n.line,
                           n.column);
        return f_at(static_cast<LocId>(v));
      }
      case Tok::kIdent: {
        Token name = lex_.take();
        CmpOp op;
        switch (lex_.peek().kind) {
          case Tok::kLt: op = CmpOp::kLt; break;
          case Tok::kLe: op = CmpOp::kLe; break;
          case Tok::kGt: op = CmpOp::kGt; break;
          case Tok::kGe: op = CmpOp::kGe; break;
          default: return f_atomic(name.text);
        }
        lex_.take();
        double c = expect_number("comparison threshold");
        return f_cmp(name.text, op, c);
      }
      case Tok::kLParen: {
        lex_.take();
        FormulaPtr f = parse_binary();
        expect(Tok::kRParen, "')'");
        return f;
      }
      default:
        lex_.fail("expected a formula");
    }
    return nullptr;  // unreachable
  }
};

std::string bound_text(const DistancePredicate& d) {
  std::string out = "[" + cmp_text(d.op) + " ";
  out += std::isinf(d.bound) && d.bound > 0 ? "infinity" : format_double(d.bound);
  out += "]";
  return out;
}

std::string interval_text(const Interval& i) {
  return "[" + format_double(i.lo) + "," + format_double(i.hi) + "]";
}

std::string wrapped(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::kTrue:
    case FormulaKind::kAtomic:
    case FormulaKind::kAt:
      return to_text(f);
    default:
      return "(" + to_text(f) + ")";
  }
}

}  // namespace

std::string to_text(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::kTrue: return "true";
    case FormulaKind::kAtomic: return f.name;
    case FormulaKind::kCmp:
      return f.name + " " + cmp_text(f.cmp) + " " + format_double(f.threshold);
    case FormulaKind::kAt: return "@" + std::to_string(f.location);
    case FormulaKind::kNot: return "!" + wrapped(*f.left);
    case FormulaKind::kAnd: return wrapped(*f.left) + " & " + wrapped(*f.right);
    case FormulaKind::kOr: return wrapped(*f.left) + " | " + wrapped(*f.right);
    case FormulaKind::kUntil:
      return wrapped(*f.left) + " U" + interval_text(f.interval) + " " +
             wrapped(*f.right);
    case FormulaKind::kSince:
      return wrapped(*f.left) + " S" + interval_text(f.interval) + " " +
             wrapped(*f.right);
    case FormulaKind::kEventually:
      return "F" + interval_text(f.interval) + " " + wrapped(*f.left);
    case FormulaKind::kGlobally:
      return "G" + interval_text(f.interval) + " " + wrapped(*f.left);
    case FormulaKind::kOnce:
      return "O" + interval_text(f.interval) + " " + wrapped(*f.left);
    case FormulaKind::kHistorically:
      return "H" + interval_text(f.interval) + " " + wrapped(*f.left);
    case FormulaKind::kReach:
      return wrapped(*f.left) + " reach(" + f.name + ")" + bound_text(f.dist) + " " +
             wrapped(*f.right);
    case FormulaKind::kEscape:
      return "escape(" + f.name + ")" + bound_text(f.dist) + " " + wrapped(*f.left);
    case FormulaKind::kSomewhere:
      return "somewhere(" + f.name + ")" + bound_text(f.dist) + " " +
             wrapped(*f.left);
    case FormulaKind::kEverywhere:
      return "everywhere(" + f.name + ")" + bound_text(f.dist) + " " +
             wrapped(*f.left);
    case FormulaKind::kSurround:
      return wrapped(*f.left) + " surround(" + f.name + ")" + bound_text(f.dist) +
             " " + wrapped(*f.right);
  }
  return "?";
}

FormulaPtr parse_formula(const std::string& text) { return Parser(text).parse(); }

FormulaPtr expand_derived(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::kTrue:
    case FormulaKind::kAtomic:
    case FormulaKind::kCmp:
    case FormulaKind::kAt:
      return f;
    case FormulaKind::kNot: return f_not(expand_derived(f->left));
    case FormulaKind::kAnd:
      return f_and(expand_derived(f->left), expand_derived(f->right));
    case FormulaKind::kOr:
      return f_or(expand_derived(f->left), expand_derived(f->right));
    case FormulaKind::kUntil:
      return f_until(f->interval, expand_derived(f->left), expand_derived(f->right));
    case FormulaKind::kSince:
      return f_since(f->interval, expand_derived(f->left), expand_derived(f->right));
    case FormulaKind::kEventually:
      return f_until(f->interval, f_true(), expand_derived(f->left));
    case FormulaKind::kGlobally:
      return f_not(f_until(f->interval, f_true(), f_not(expand_derived(f->left))));
    case FormulaKind::kOnce:
      return f_since(f->interval, f_true(), expand_derived(f->left));
    case FormulaKind::kHistorically:
      return f_not(f_since(f->interval, f_true(), f_not(expand_derived(f->left))));
    case FormulaKind::kReach:
      return f_reach(f->name, f->dist, expand_derived(f->left),
                     expand_derived(f->right));
    case FormulaKind::kEscape:
      return f_escape(f->name, f->dist, expand_derived(f->left));
    case FormulaKind::kSomewhere:
      return f_reach(f->name, f->dist, f_true(), expand_derived(f->left));
    case FormulaKind::kEverywhere:
      return f_not(
          f_reach(f->name, f->dist, f_true(), f_not(expand_derived(f->left))));
    case FormulaKind::kSurround: {
      // p1 and not (p1 reach[d] not (p1 or p2)) and not (escape[not d] p1)
      FormulaPtr p1 = expand_derived(f->left);
      FormulaPtr p2 = expand_derived(f->right);
      FormulaPtr no_leak = f_not(f_reach(f->name, f->dist, p1, f_not(f_or(p1, p2))));
      FormulaPtr no_escape = f_not(f_escape(f->name, f->dist.complement(), p1));
      return f_and(f_and(p1, no_leak), no_escape);
    }
  }
  return f;
}

bool is_core(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::kEventually:
    case FormulaKind::kGlobally:
    case FormulaKind::kOnce:
    case FormulaKind::kHistorically:
    case FormulaKind::kSomewhere:
    case FormulaKind::kEverywhere:
    case FormulaKind::kSurround:
      return false;
    default:
      break;
  }
  if (f.left && !is_core(*f.left)) return false;
  if (f.right && !is_core(*f.right)) return false;
  return true;
}

std::optional<DistanceKind> distance_kind_from_name(const std::string& name) {
  if (name == "hops") return DistanceKind::kHops;
  if (name == "euclid") return DistanceKind::kEuclid;
  return std::nullopt;
}

namespace {

void validate_node(const Formula& f, const InterpretationContext& ctx) {
  switch (f.kind) {
    case FormulaKind::kTrue:
      break;
    case FormulaKind::kAtomic: {
      int ch = ctx.schema.channel_index(f.name);
      if (ch < 0) throw ValidationError("unbound name '" + f.name + "'");
      if (ctx.schema.kinds[static_cast<std::size_t>(ch)] != ChannelKind::kBool)
        throw ValidationError("channel '" + f.name +
                              "' is numeric; use a comparison, not a bare atom");
      break;
    }
    case FormulaKind::kCmp: {
      int ch = ctx.schema.channel_index(f.name);
      if (ch < 0) throw ValidationError("unbound name '" + f.name + "'");
      if (ctx.schema.kinds[static_cast<std::size_t>(ch)] != ChannelKind::kReal)
        throw ValidationError("channel '" + f.name +
                              "' is boolean; comparisons need a numeric channel");
      if (std::isnan(f.threshold) || std::isinf(f.threshold))
        throw ValidationError("comparison threshold must be finite");
      break;
    }
    case FormulaKind::kAt:
      if (f.location < 0 || f.location >= ctx.schema.location_count)
        throw ValidationError("@" + std::to_string(f.location) +
                              " is outside the location universe");
      break;
    case FormulaKind::kUntil:
    case FormulaKind::kSince:
    case FormulaKind::kEventually:
    case FormulaKind::kGlobally:
    case FormulaKind::kOnce:
    case FormulaKind::kHistorically:
      if (!(f.interval.lo >= 0.0) || !(f.interval.lo <= f.interval.hi))
        throw ValidationError("interval bounds must satisfy 0 <= a <= b");
      break;
    case FormulaKind::kReach:
    case FormulaKind::kSomewhere:
    case FormulaKind::kEverywhere:
    case FormulaKind::kSurround:
      if (!distance_kind_from_name(f.name))
        throw ValidationError("unknown distance function '" + f.name + "'");
      if (!f.dist.is_upper_bound())
        throw ValidationError(
            "distance predicate '" + cmp_text(f.dist.op) + " " +
            format_double(f.dist.bound) + "' is not an upper bound; " +
            (f.kind == FormulaKind::kSurround ? "surround" : "reach-like") +
            " operators need <= or <");
      break;
    case FormulaKind::kEscape:
      if (!distance_kind_from_name(f.name))
        throw ValidationError("unknown distance function '" + f.name + "'");
      if (f.dist.is_upper_bound())
        throw ValidationError("distance predicate '" + cmp_text(f.dist.op) + " " +
                              format_double(f.dist.bound) +
                              "' is not a lower bound; escape needs >= or >");
      break;
    default:
      break;
  }
  if (f.left) validate_node(*f.left, ctx);
  if (f.right) validate_node(*f.right, ctx);
}

}  // namespace

void validate(const Formula& f, const InterpretationContext& ctx) {
  validate_node(f, ctx);
}

}  // namespace strel
