#pragma once

// Formula syntax: abstract syntax tree, a textual DSL (parser and printer),
// expansion of derived operators into the core fragment, and validation
// against a trace schema.

#include <memory>
#include <string>

#include "strel/signal.hpp"
#include "strel/space.hpp"
#include "strel/util.hpp"

namespace strel {

enum class FormulaKind {
  kTrue,
  kAtomic,       // boolean channel by name
  kCmp,          // real channel compared against a threshold
  kAt,           // address proposition @l
  kNot,
  kAnd,
  kOr,
  kUntil,
  kSince,
  kEventually,
  kGlobally,
  kOnce,
  kHistorically,
  kReach,        // left reach(f)[d] right
  kEscape,       // escape(f)[d] arg
  kSomewhere,
  kEverywhere,
  kSurround,     // left surround(f)[d] right
};

enum class CmpOp { kLt, kLe, kGt, kGe };

std::string cmp_text(CmpOp op);

/// Threshold predicate over accumulated distances. The comparison direction
/// decides its closure: < and <= are upper bounds (reach-compatible), > and
/// >= are lower bounds (escape-compatible).
struct DistancePredicate {
  CmpOp op = CmpOp::kLe;
  double bound = kInf;

  bool is_upper_bound() const { return op == CmpOp::kLt || op == CmpOp::kLe; }

  bool eval(double v) const {
    switch (op) {
      case CmpOp::kLt: return v < bound;
      case CmpOp::kLe: return v <= bound;
      case CmpOp::kGt: return v > bound;
      case CmpOp::kGe: return v >= bound;
    }
    return false;
  }

  /// Complement predicate (same threshold, negated comparison).
  DistancePredicate complement() const {
    switch (op) {
      case CmpOp::kLt: return {CmpOp::kGe, bound};
      case CmpOp::kLe: return {CmpOp::kGt, bound};
      case CmpOp::kGt: return {CmpOp::kLe, bound};
      case CmpOp::kGe: return {CmpOp::kLt, bound};
    }
    return *this;
  }

  friend bool operator==(const DistancePredicate&, const DistancePredicate&) = default;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
 public:
  FormulaKind kind = FormulaKind::kTrue;
  std::string name;         // kAtomic / kCmp channel, spatial distance function
  CmpOp cmp = CmpOp::kGe;   // kCmp
  double threshold = 0.0;   // kCmp
  LocId location = 0;       // kAt
  Interval interval;        // temporal operators
  DistancePredicate dist;   // spatial operators
  FormulaPtr left, right;   // operands; unary operators use left
};

bool operator==(const Formula& a, const Formula& b);

FormulaPtr f_true();
FormulaPtr f_atomic(std::string name);
FormulaPtr f_cmp(std::string channel, CmpOp op, double threshold);
FormulaPtr f_at(LocId location);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_until(Interval i, FormulaPtr a, FormulaPtr b);
FormulaPtr f_since(Interval i, FormulaPtr a, FormulaPtr b);
FormulaPtr f_eventually(Interval i, FormulaPtr a);
FormulaPtr f_globally(Interval i, FormulaPtr a);
FormulaPtr f_once(Interval i, FormulaPtr a);
FormulaPtr f_historically(Interval i, FormulaPtr a);
FormulaPtr f_reach(std::string fn, DistancePredicate d, FormulaPtr l, FormulaPtr r);
FormulaPtr f_escape(std::string fn, DistancePredicate d, FormulaPtr a);
FormulaPtr f_somewhere(std::string fn, DistancePredicate d, FormulaPtr a);
FormulaPtr f_everywhere(std::string fn, DistancePredicate d, FormulaPtr a);
FormulaPtr f_surround(std::string fn, DistancePredicate d, FormulaPtr l, FormulaPtr r);

/// Parses the formula DSL; throws ParseError with a 1-based position.
FormulaPtr parse_formula(const std::string& text);

/// Fully bracketed text form; parse_formula(to_text(f)) reproduces f.
std::string to_text(const Formula& f);
inline std::string to_text(const FormulaPtr& f) { return to_text(*f); }

/// Rewrites somewhere/everywhere/surround and F/G/O/H into the core
/// fragment (atoms, boolean connectives, until/since, reach/escape).
FormulaPtr expand_derived(const FormulaPtr& f);

/// True when the formula contains no derived operator kinds.
bool is_core(const Formula& f);

enum class DistanceKind { kHops, kEuclid };

/// Resolves a distance-function name; nullopt for unknown names.
std::optional<DistanceKind> distance_kind_from_name(const std::string& name);

/// Bindings a formula is interpreted against: the trace schema backing
/// atomic propositions, plus the stock distance functions and inline
/// distance predicates.
struct InterpretationContext {
  TraceSchema schema;
};

/// Checks that every name resolves, channel kinds match their use, interval
/// bounds are sane, and each distance predicate's closure direction fits its
/// operator. Throws ValidationError.
void validate(const Formula& f, const InterpretationContext& ctx);

}  // namespace strel
