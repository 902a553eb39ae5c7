// Model data: classical family constants, the restricted weight set, the
// pair groupoid on it, carrier arrows and commuting squares (cells).
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsosq/errors.hpp"

namespace rsosq {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// A model instance: classical family, rank parameter n and level l.
// For family A the rank parameter is n, i.e. the algebra sl_n (so the
// Dynkin label is A_{n-1}).  Derived constants:
//
//   family   g       2*lambda    L              sign   coord denom d
//   A        n       -n          l + n          +1     n
//   B        2n-1    -2n+1       l + 2n-1       +1     2
//   C        n+1     -2n-2       2(l + n + 1)   -1     1
//   D        2n-2    -2n+2       l + 2n-2       +1     2
//
// lambda is the crossing parameter; L is the bracket period; weight
// coordinates are stored as integers scaled by d.
struct ModelType {
  Family family = Family::A;
  int n = 2;
  int level = 1;

  void validate() const; // throws std::invalid_argument
  bool is_valid() const;

  int dual_coxeter() const;
  int two_lambda() const;
  double lambda() const { return two_lambda() / 2.0; }
  int L() const;
  int sign_sigma() const { return family == Family::C ? -1 : 1; }
  int coord_denom() const;
  bool has_zero_step() const { return family == Family::B; }
  std::string name() const;
};

// A weight in scaled integer coordinates: the real coordinate vector is
// c / d with d = ModelType::coord_denom().
struct Weight {
  std::vector<int> c;

  friend bool operator==(const Weight& x, const Weight& y) {
    return x.c == y.c;
  }
  friend bool operator<(const Weight& x, const Weight& y) {
    return x.c < y.c;
  }
  std::string to_string(const ModelType& mt) const;
};

// A morphism (a, mu) of the pair groupoid: source a, target a + mu, where
// mu is a lattice vector in scaled coordinates.
struct Morphism {
  Weight source;
  std::vector<int> mu;

  friend bool operator==(const Morphism& x, const Morphism& y) {
    return x.source == y.source && x.mu == y.mu;
  }
};

// An arrow labelled by a single step epsilon_s with s in {-n..n}; s = 0
// occurs for family B only.
struct Arrow {
  Weight source;
  int step = 0;

  friend bool operator==(const Arrow& x, const Arrow& y) {
    return x.source == y.source && x.step == y.step;
  }
};

// A unit face: top-left corner object and four step labels.  The left and
// bottom arrows carry the incoming pair, the top and right arrows the
// outgoing pair:
//
//   corner --top-->  corner+e_top
//     |                   |
//    left               right
//     |                   |
//     v                   v
//   corner+e_left --bottom--> corner+e_left+e_bottom
//
// and the face closes: e_left + e_bottom = e_top + e_right.
struct Cell {
  Weight corner;
  int left = 0, bottom = 0, top = 0, right = 0;
};

// The restricted weight set of a model together with the pair groupoid
// structure on it.  Objects are enumerated once at construction and sorted
// lexicographically by scaled coordinates.
class Groupoid {
public:
  explicit Groupoid(ModelType mt);

  const ModelType& model() const { return mt_; }
  const std::vector<Weight>& objects() const { return objects_; }
  int object_count() const { return static_cast<int>(objects_.size()); }

  // id of a restricted weight, or -1 if the weight is not restricted
  int object_id(const Weight& a) const;
  bool is_object(const Weight& a) const { return object_id(a) >= 0; }
  const Weight& object(int id) const { return objects_.at(id); }

  // membership in the ambient weight lattice / its restricted subset,
  // decided exactly on scaled integers
  bool in_lattice(const Weight& a) const;
  bool is_restricted(const Weight& a) const;

  // canonical ordered list of step indices for this family
  const std::vector<int>& step_indices() const { return steps_; }
  // scaled coordinate vector of epsilon_s
  std::vector<int> step_vector(int s) const;
  Weight apply_step(const Weight& a, int s) const;
  // signed coordinate d*a_s (with a_{-i} = -a_i and, for B, a_0 = -1/2)
  int coord_signed(const Weight& a, int s) const;

  // carrier arrows: both endpoints restricted; for B the zero step is a
  // carrier loop at a exactly when a_n != 1/2
  bool is_carrier(const Arrow& f) const;
  const std::vector<Arrow>& carrier_arrows() const { return carriers_; }
  // all step-labelled morphisms of the pair groupoid, i.e. carrier arrows
  // plus, for B, the zero loops at every object
  std::vector<Arrow> step_arrows() const;

  // commuting squares of carrier arrows
  const std::vector<Cell>& cells() const { return cells_; }

  // groupoid algebra
  Morphism identity(const Weight& a) const;
  Morphism invert(const Morphism& f) const;
  // f after g (g acts first); throws std::invalid_argument if the sources
  // and targets do not match, or Error if an endpoint is not restricted
  Morphism compose(const Morphism& f, const Morphism& g) const;
  Weight target(const Morphism& f) const;
  bool is_morphism(const Morphism& f) const;
  Morphism to_morphism(const Arrow& f) const;

private:
  void enumerate_objects();
  void enumerate_cells();

  ModelType mt_;
  std::vector<int> steps_;
  std::vector<Weight> objects_;
  std::map<Weight, int> index_;
  std::vector<Arrow> carriers_;
  std::vector<Cell> cells_;
};

} // namespace rsosq
