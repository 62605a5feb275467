#pragma once

// A tiny expression language for the graphical calculus of a Frobenius
// algebra.  Expressions denote linear maps between tensor powers of the
// algebra and are evaluated exactly as dense tensor maps.
//
//   atoms      id  m  e  delta  eps  ev  coev      #name (a bound endo)
//   operators  g . f   composition, f applies FIRST (matches the usual o)
//              f ox g  tensor product; binds tighter than .
//   grouping   parentheses; whitespace is free
//
// Arities: id:(1,1)  m:(2,1)  e:(0,1)  delta:(1,2)  eps:(1,0)  ev:(2,0)
// coev:(0,2)  #name:(1,1).  Composition g . f needs f's target arity to
// equal g's source arity; tensor adds arities componentwise.  All errors
// carry the byte offset of the offending token or subexpression.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tensor.hpp"

namespace frobkit {

class DslError : public std::runtime_error {
 public:
  DslError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class DslParseError : public DslError {
  using DslError::DslError;
};
class DslTypeError : public DslError {
  using DslError::DslError;
};
class DslEvalError : public DslError {
  using DslError::DslError;
};

enum class ExprKind { kAtom, kRef, kCompose, kTensor };

struct MorphExpr {
  ExprKind kind;
  std::string name;                  // atom name, or the name after '#'
  std::vector<MorphExpr> children;   // two for kCompose / kTensor
  std::size_t offset = 0;            // byte position in the source text
  int p = -1, q = -1;                // arities, filled in by typecheck
};

/// Default bound on p+q for a single subexpression; M_n tensors grow as
/// n^(2(p+q)) and every identity in scope fits well under this.
inline constexpr int kDefaultArityCap = 6;

MorphExpr parse_expr(const std::string& text);

/// Assigns arities bottom-up; returns (p, q) of the whole expression.
/// Throws DslTypeError on composition mismatch or when a subexpression
/// exceeds the arity cap.
std::pair<int, int> typecheck_expr(MorphExpr& expr, int arity_cap = kDefaultArityCap);

/// Canonical rendering; reparsing it yields a structurally identical tree.
std::string render_expr(const MorphExpr& expr);

/// Exact evaluation against the algebra's structure tensors.  Named
/// references are bound to d x d matrices (an endomorphism in the basis of
/// the algebra).  The expression must have been typechecked.
TensorMap evaluate_expr(const MorphExpr& expr, const FrobModel& model,
                        const std::map<std::string, RatMat>& bindings = {});

struct EqualityReport {
  bool equal = false;
  int p = 0, q = 0;
  // On failure: the first differing coefficient, located by output and
  // input multi-indices (1-based factors), with both values.
  std::vector<int> out_index;
  std::vector<int> in_index;
  std::string lhs_value, rhs_value;
  std::string detail;  // human-readable summary of the above
};

/// Typechecks both sides (arities must agree), evaluates, and compares.
EqualityReport assert_equal(const std::string& lhs, const std::string& rhs,
                            const FrobModel& model,
                            const std::map<std::string, RatMat>& bindings = {});

struct CorpusResult {
  int line = 0;           // 1-based line number
  std::string lhs, rhs;   // the two sides as written
  EqualityReport report;
};

/// Runs a corpus of assertions: one `lhs == rhs` per line; '#' followed by
/// anything other than an identifier begins a comment (so `#b` stays a
/// reference); blank lines are skipped.  Throws DslParseError on malformed
/// lines, with offsets relative to the start of the corpus text.
std::vector<CorpusResult> run_corpus(const std::string& text,
                                     const FrobModel& model,
                                     const std::map<std::string, RatMat>& bindings = {});

}  // namespace frobkit
