// Sparse operators on tensor powers of the graded carrier spaces.
//
// A basis vector of a tensor product of carrier spaces is a path: a source
// object followed by a chain of admissible steps.  Operators are stored as
// sparse maps from in-paths to out-paths; every entry must connect paths
// with equal source and equal target (the operator is a morphism of graded
// spaces, so it preserves the composite arrow).
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "rsosq/groupoid.hpp"
#include "rsosq/theta.hpp"

namespace rsosq {

// Kind of a tensor leg.  Vstar only occurs for family A, where the dual
// carrier space is graded by the inverses of the carrier arrows.
enum class LegKind : char { V = 'V', Vstar = '*' };

using Signature = std::vector<LegKind>;

// A path key: {source object id, step_1, ..., step_r}.  A path of length
// zero (a bare anchor object) is the basis label of the monoidal unit.
using Path = std::vector<int>;

std::string path_to_string(const Groupoid& g, const Path& p);

// Steps admissible on a leg of the given kind, in canonical order.
std::vector<int> leg_steps(const Groupoid& g, LegKind kind);

// True if the arrow (a, s) may grade a leg of the given kind.
bool step_admissible(const Groupoid& g, const Weight& a, int s, LegKind kind);

// All admissible paths over the signature, lexicographically ordered by key.
std::vector<Path> enumerate_paths(const Groupoid& g, const Signature& sig);

// Walks the path and returns the target object id; throws Error if the
// path is not admissible for the signature.
int path_target(const Groupoid& g, const Path& p, const Signature& sig);

class GradedOp {
public:
  GradedOp(std::shared_ptr<const Groupoid> g, Signature in_kinds,
           Signature out_kinds);

  const Groupoid& groupoid() const { return *g_; }
  std::shared_ptr<const Groupoid> groupoid_ptr() const { return g_; }
  const Signature& in_kinds() const { return in_kinds_; }
  const Signature& out_kinds() const { return out_kinds_; }
  int arity_in() const { return static_cast<int>(in_kinds_.size()); }
  int arity_out() const { return static_cast<int>(out_kinds_.size()); }

  // Adds v to the (in, out) entry.  Both paths are validated against the
  // signatures and must share source and target.
  void add(const Path& in, const Path& out, cplx v);

  cplx entry(const Path& in, const Path& out) const;
  const std::map<Path, std::map<Path, cplx>>& rows() const { return rows_; }
  size_t entry_count() const;
  bool empty() const { return rows_.empty(); }

  GradedOp& scale(cplx c);
  // this += c * other (signatures must match)
  GradedOp& axpy(cplx c, const GradedOp& other);

  // Largest entry magnitude.
  double max_abs() const;

  friend GradedOp operator*(cplx c, GradedOp op) {
    op.scale(c);
    return op;
  }

private:
  std::shared_ptr<const Groupoid> g_;
  Signature in_kinds_, out_kinds_;
  // rows_[in][out] = value
  std::map<Path, std::map<Path, cplx>> rows_;
};

// Identity operator on the given signature.
GradedOp identity_op(std::shared_ptr<const Groupoid> g, const Signature& sig);

// f after g (g acts first); requires g.out_kinds == f.in_kinds.
GradedOp compose(const GradedOp& f, const GradedOp& g);

// Tensor product; entries combine only when the in-paths (and hence the
// out-paths) chain head to tail.
GradedOp op_tensor(const GradedOp& a, const GradedOp& b);

// Embeds op into an ambient tensor product as id (x) op (x) id.  The
// ambient in-signature is given; pos is the 1-based index of the first leg
// op acts on (for an arity-0 op, pos marks the insertion point, between
// legs pos-1 and pos).  The ambient legs at pos..pos+arity_in-1 must match
// op's in-signature.
GradedOp embed(const GradedOp& op, int pos, const Signature& ambient_in);

// max |a - b| over the union of supports; signatures must match.
double residual_max(const GradedOp& a, const GradedOp& b);

// Worst-entry description for failure reports: returns the (in, out) pair
// realizing residual_max, formatted as a string.
std::string residual_witness(const GradedOp& a, const GradedOp& b);

} // namespace rsosq
