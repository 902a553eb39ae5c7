#include "rsosq/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rsosq {

Family family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown family '" + s + "' (expected A|B|C|D)");
}

std::string family_to_string(Family f) {
  return std::string(1, static_cast<char>(f));
}

void ModelType::validate() const {
  int min_n = 0;
  switch (family) {
    case Family::A: min_n = 2; break; // sl_n with n >= 2
    case Family::B: min_n = 2; break;
    case Family::C: min_n = 1; break;
    case Family::D: min_n = 3; break;
    default: throw std::invalid_argument("invalid family");
  }
  if (n < min_n)
    throw std::invalid_argument("family " + family_to_string(family) +
                                " requires rank n >= " + std::to_string(min_n) +
                                ", got " + std::to_string(n));
  if (level < 1)
    throw std::invalid_argument("level must be >= 1, got " +
                                std::to_string(level));
}

bool ModelType::is_valid() const {
  try {
    validate();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

int ModelType::dual_coxeter() const {
  switch (family) {
    case Family::A: return n;
    case Family::B: return 2 * n - 1;
    case Family::C: return n + 1;
    case Family::D: return 2 * n - 2;
  }
  throw std::invalid_argument("invalid family");
}

int ModelType::two_lambda() const {
  switch (family) {
    case Family::A: return -n;
    case Family::B: return -2 * n + 1;
    case Family::C: return -2 * n - 2;
    case Family::D: return -2 * n + 2;
  }
  throw std::invalid_argument("invalid family");
}

int ModelType::L() const {
  switch (family) {
    case Family::A: return level + n;
    case Family::B: return level + 2 * n - 1;
    case Family::C: return 2 * (level + n + 1);
    case Family::D: return level + 2 * n - 2;
  }
  throw std::invalid_argument("invalid family");
}

int ModelType::coord_denom() const {
  switch (family) {
    case Family::A: return n;
    case Family::B: return 2;
    case Family::C: return 1;
    case Family::D: return 2;
  }
  throw std::invalid_argument("invalid family");
}

std::string ModelType::name() const {
  return family_to_string(family) + std::to_string(n) + "_l" +
         std::to_string(level);
}

std::string Weight::to_string(const ModelType& mt) const {
  const int d = mt.coord_denom();
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    if (c[i] % d == 0)
      os << c[i] / d;
    else
      os << c[i] << "/" << d;
  }
  os << ")";
  return os.str();
}

Groupoid::Groupoid(ModelType mt) : mt_(mt) {
  mt_.validate();
  const int n = mt_.n;
  if (mt_.family == Family::A) {
    for (int s = 1; s <= n; ++s) steps_.push_back(s);
  } else {
    for (int s = -n; s <= n; ++s) {
      if (s == 0 && !mt_.has_zero_step()) continue;
      steps_.push_back(s);
    }
  }
  enumerate_objects();
  for (const Weight& a : objects_)
    for (int s : steps_) {
      Arrow f{a, s};
      if (is_carrier(f)) carriers_.push_back(f);
    }
  enumerate_cells();
}

bool Groupoid::in_lattice(const Weight& a) const {
  const int n = mt_.n;
  if (static_cast<int>(a.c.size()) != n) return false;
  switch (mt_.family) {
    case Family::A: {
      if (std::accumulate(a.c.begin(), a.c.end(), 0) != 0) return false;
      auto m = [n](int x) { return ((x % n) + n) % n; };
      for (int i = 1; i < n; ++i)
        if (m(a.c[i]) != m(a.c[0])) return false;
      return true;
    }
    case Family::B:
    case Family::D: {
      for (int i = 1; i < n; ++i)
        if (((a.c[i] - a.c[0]) % 2 + 2) % 2 != 0) return false;
      return true;
    }
    case Family::C:
      return true;
  }
  return false;
}

bool Groupoid::is_restricted(const Weight& a) const {
  if (!in_lattice(a)) return false;
  const int n = mt_.n;
  const int L = mt_.L();
  for (int i = 0; i + 1 < n; ++i)
    if (!(a.c[i] > a.c[i + 1])) return false;
  switch (mt_.family) {
    case Family::A:
      return a.c[0] - a.c[n - 1] < n * L;
    case Family::B:
      return a.c[n - 1] >= 1 && a.c[0] + a.c[1] < 2 * L;
    case Family::C:
      return a.c[n - 1] >= 1 && 2 * a.c[0] < L;
    case Family::D:
      return a.c[n - 2] + a.c[n - 1] >= 1 && a.c[0] + a.c[1] < 2 * L;
  }
  return false;
}

void Groupoid::enumerate_objects() {
  const int n = mt_.n;
  const int L = mt_.L();
  std::vector<int> cur(n);

  if (mt_.family == Family::A) {
    // Enumerate integer gap vectors d_1 > ... > d_{n-1} > d_n = 0 with
    // d_1 <= L - 1, then recentre: c_i = n d_i - sum(d).
    std::vector<int> d(n, 0);
    auto rec = [&](auto&& self, int pos, int hi) -> void {
      if (pos == n - 1) {
        const int total = std::accumulate(d.begin(), d.end(), 0);
        Weight a;
        a.c.resize(n);
        for (int i = 0; i < n; ++i) a.c[i] = n * d[i] - total;
        objects_.push_back(a);
        return;
      }
      // positions pos..n-2 still need strictly decreasing values >= n-1-pos
      for (int v = hi; v >= n - 1 - pos; --v) {
        d[pos] = v;
        self(self, pos + 1, v - 1);
      }
    };
    rec(rec, 0, L - 1);
  } else {
    // Scan strictly decreasing scaled vectors in a coarse box and keep the
    // restricted ones; the box comfortably contains the restricted set.
    const int hi0 = 2 * L;
    const int lo = (mt_.family == Family::D) ? -2 * L : 1;
    auto rec = [&](auto&& self, int pos, int hi) -> void {
      if (pos == n) {
        Weight a{cur};
        if (is_restricted(a)) objects_.push_back(a);
        return;
      }
      for (int v = hi; v >= lo; --v) {
        cur[pos] = v;
        self(self, pos + 1, v - 1);
      }
    };
    rec(rec, 0, hi0);
  }

  std::sort(objects_.begin(), objects_.end());
  objects_.erase(std::unique(objects_.begin(), objects_.end()),
                 objects_.end());
  for (int i = 0; i < static_cast<int>(objects_.size()); ++i)
    index_[objects_[i]] = i;
}

int Groupoid::object_id(const Weight& a) const {
  auto it = index_.find(a);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> Groupoid::step_vector(int s) const {
  const int n = mt_.n;
  const int d = mt_.coord_denom();
  std::vector<int> v(n, 0);
  if (s == 0) {
    if (!mt_.has_zero_step())
      throw std::invalid_argument("zero step only exists for family B");
    return v;
  }
  const int i = std::abs(s) - 1;
  if (i < 0 || i >= n)
    throw std::invalid_argument("step index out of range: " +
                                std::to_string(s));
  if (mt_.family == Family::A) {
    // epsilon_i = ebar_i - ebar/n, scaled by n
    for (int r = 0; r < n; ++r) v[r] = (r == i) ? n - 1 : -1;
    if (s < 0)
      for (int r = 0; r < n; ++r) v[r] = -v[r];
  } else {
    v[i] = (s > 0) ? d : -d;
  }
  return v;
}

Weight Groupoid::apply_step(const Weight& a, int s) const {
  const std::vector<int> v = step_vector(s);
  Weight b = a;
  for (size_t r = 0; r < b.c.size(); ++r) b.c[r] += v[r];
  return b;
}

int Groupoid::coord_signed(const Weight& a, int s) const {
  if (s == 0) {
    if (!mt_.has_zero_step())
      throw std::invalid_argument("coordinate a_0 only exists for family B");
    return -1; // a_0 = -1/2 in units of 1/2
  }
  const int i = std::abs(s) - 1;
  if (i < 0 || i >= mt_.n)
    throw std::invalid_argument("coordinate index out of range");
  return s > 0 ? a.c[i] : -a.c[i];
}

bool Groupoid::is_carrier(const Arrow& f) const {
  if (!is_restricted(f.source)) return false;
  if (f.step == 0) {
    if (!mt_.has_zero_step()) return false;
    // a_n != 1/2, i.e. scaled last coordinate != 1
    return f.source.c[mt_.n - 1] != 1;
  }
  if (mt_.family == Family::A && f.step < 0) return false;
  return is_restricted(apply_step(f.source, f.step));
}

std::vector<Arrow> Groupoid::step_arrows() const {
  std::vector<Arrow> out;
  const int n = mt_.n;
  for (const Weight& a : objects_) {
    for (int s = -n; s <= n; ++s) {
      if (s == 0) {
        if (mt_.has_zero_step()) out.push_back({a, 0});
        continue;
      }
      if (is_restricted(apply_step(a, s))) out.push_back({a, s});
    }
  }
  return out;
}

void Groupoid::enumerate_cells() {
  for (const Weight& a : objects_) {
    for (int i : steps_) {
      if (!is_carrier({a, i})) continue;
      const Weight ai = apply_step(a, i);
      for (int j : steps_) {
        if (!is_carrier({ai, j})) continue;
        const Weight tgt = apply_step(ai, j);
        for (int k : steps_) {
          if (!is_carrier({a, k})) continue;
          const Weight ak = apply_step(a, k);
          for (int l : steps_) {
            if (!is_carrier({ak, l})) continue;
            if (apply_step(ak, l) == tgt)
              cells_.push_back({a, i, j, k, l});
          }
        }
      }
    }
  }
}

Morphism Groupoid::identity(const Weight& a) const {
  if (!is_restricted(a)) throw Error("identity: weight is not restricted");
  return {a, std::vector<int>(a.c.size(), 0)};
}

Weight Groupoid::target(const Morphism& f) const {
  Weight b = f.source;
  for (size_t r = 0; r < b.c.size(); ++r) b.c[r] += f.mu[r];
  return b;
}

bool Groupoid::is_morphism(const Morphism& f) const {
  if (f.mu.size() != f.source.c.size()) return false;
  return is_restricted(f.source) && is_restricted(target(f));
}

Morphism Groupoid::invert(const Morphism& f) const {
  if (!is_morphism(f)) throw Error("invert: not a morphism of the groupoid");
  Morphism g{target(f), f.mu};
  for (int& x : g.mu) x = -x;
  return g;
}

Morphism Groupoid::compose(const Morphism& f, const Morphism& g) const {
  if (!is_morphism(f) || !is_morphism(g))
    throw Error("compose: not a morphism of the groupoid");
  if (!(f.source == target(g)))
    throw std::invalid_argument(
        "compose: source of the outer morphism differs from the target of "
        "the inner morphism");
  Morphism h{g.source, f.mu};
  for (size_t r = 0; r < h.mu.size(); ++r) h.mu[r] += g.mu[r];
  return h;
}

Morphism Groupoid::to_morphism(const Arrow& f) const {
  return {f.source, step_vector(f.step)};
}

} // namespace rsosq
