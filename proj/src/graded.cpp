#include "rsosq/graded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rsosq {

std::string path_to_string(const Groupoid& g, const Path& p) {
  std::ostringstream os;
  os << g.object(p[0]).to_string(g.model());
  for (size_t i = 1; i < p.size(); ++i) os << ";" << p[i];
  return os.str();
}

std::vector<int> leg_steps(const Groupoid& g, LegKind kind) {
  const ModelType& mt = g.model();
  std::vector<int> out;
  if (kind == LegKind::Vstar) {
    if (mt.family != Family::A)
      throw NotApplicable("dual legs only exist for family A");
    for (int s = -mt.n; s <= -1; ++s) out.push_back(s);
    return out;
  }
  return g.step_indices();
}

bool step_admissible(const Groupoid& g, const Weight& a, int s, LegKind kind) {
  if (kind == LegKind::Vstar) {
    if (g.model().family != Family::A) return false;
    if (s >= 0) return false;
    return g.is_restricted(a) && g.is_restricted(g.apply_step(a, s));
  }
  return g.is_carrier({a, s});
}

std::vector<Path> enumerate_paths(const Groupoid& g, const Signature& sig) {
  std::vector<Path> out;
  Path cur;
  const auto& objects = g.objects();
  for (int id = 0; id < static_cast<int>(objects.size()); ++id) {
    cur = {id};
    Weight w = objects[id];
    auto rec = [&](auto&& self, size_t leg, const Weight& at) -> void {
      if (leg == sig.size()) {
        out.push_back(cur);
        return;
      }
      for (int s : leg_steps(g, sig[leg])) {
        if (!step_admissible(g, at, s, sig[leg])) continue;
        cur.push_back(s);
        self(self, leg + 1, g.apply_step(at, s));
        cur.pop_back();
      }
    };
    rec(rec, 0, w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int path_target(const Groupoid& g, const Path& p, const Signature& sig) {
  if (p.empty() || p.size() != sig.size() + 1)
    throw Error("path length does not match the signature");
  if (p[0] < 0 || p[0] >= g.object_count())
    throw Error("path source is not an object id");
  Weight at = g.object(p[0]);
  for (size_t i = 1; i < p.size(); ++i) {
    if (!step_admissible(g, at, p[i], sig[i - 1]))
      throw Error("path step " + std::to_string(p[i]) +
                  " is not admissible at " + at.to_string(g.model()));
    at = g.apply_step(at, p[i]);
  }
  const int id = g.object_id(at);
  if (id < 0) throw Error("path target is not restricted");
  return id;
}

GradedOp::GradedOp(std::shared_ptr<const Groupoid> g, Signature in_kinds,
                   Signature out_kinds)
    : g_(std::move(g)),
      in_kinds_(std::move(in_kinds)),
      out_kinds_(std::move(out_kinds)) {
  if (!g_) throw std::invalid_argument("GradedOp: null groupoid");
}

void GradedOp::add(const Path& in, const Path& out, cplx v) {
  if (in.size() != in_kinds_.size() + 1 || out.size() != out_kinds_.size() + 1)
    throw std::invalid_argument("GradedOp: path length does not match the "
                                "operator signature");
  const int tin = path_target(*g_, in, in_kinds_);
  const int tout = path_target(*g_, out, out_kinds_);
  if (in[0] != out[0] || tin != tout)
    throw std::invalid_argument(
        "GradedOp: entry does not preserve the grading (source/target "
        "mismatch)");
  rows_[in][out] += v;
}

cplx GradedOp::entry(const Path& in, const Path& out) const {
  auto it = rows_.find(in);
  if (it == rows_.end()) return 0.0;
  auto jt = it->second.find(out);
  return jt == it->second.end() ? cplx(0.0) : jt->second;
}

size_t GradedOp::entry_count() const {
  size_t c = 0;
  for (const auto& [in, row] : rows_) c += row.size();
  return c;
}

GradedOp& GradedOp::scale(cplx c) {
  for (auto& [in, row] : rows_)
    for (auto& [out, v] : row) v *= c;
  return *this;
}

GradedOp& GradedOp::axpy(cplx c, const GradedOp& other) {
  if (in_kinds_ != other.in_kinds_ || out_kinds_ != other.out_kinds_)
    throw std::invalid_argument("axpy: signature mismatch");
  for (const auto& [in, row] : other.rows_)
    for (const auto& [out, v] : row) rows_[in][out] += c * v;
  return *this;
}

double GradedOp::max_abs() const {
  double m = 0.0;
  for (const auto& [in, row] : rows_)
    for (const auto& [out, v] : row) m = std::max(m, std::abs(v));
  return m;
}

GradedOp identity_op(std::shared_ptr<const Groupoid> g, const Signature& sig) {
  GradedOp id(g, sig, sig);
  for (const Path& p : enumerate_paths(*g, sig)) id.add(p, p, 1.0);
  return id;
}

GradedOp compose(const GradedOp& f, const GradedOp& g) {
  if (f.groupoid_ptr() != g.groupoid_ptr())
    throw std::invalid_argument(
        "compose: operators over different groupoids");
  if (g.out_kinds() != f.in_kinds())
    throw std::invalid_argument(
        "compose: inner out-signature differs from outer in-signature");
  GradedOp h(f.groupoid_ptr(), g.in_kinds(), f.out_kinds());
  for (const auto& [in, grow] : g.rows()) {
    for (const auto& [mid, gv] : grow) {
      auto it = f.rows().find(mid);
      if (it == f.rows().end()) continue;
      for (const auto& [out, fv] : it->second) h.add(in, out, fv * gv);
    }
  }
  return h;
}

namespace {

// Concatenates paths; q's source must equal p's target (checked by caller).
Path concat_path(const Path& p, const Path& q) {
  Path r = p;
  r.insert(r.end(), q.begin() + 1, q.end());
  return r;
}

} // namespace

GradedOp op_tensor(const GradedOp& a, const GradedOp& b) {
  if (a.groupoid_ptr() != b.groupoid_ptr())
    throw std::invalid_argument(
        "op_tensor: operators over different groupoids");
  const Groupoid& G = a.groupoid();
  Signature in = a.in_kinds(), out = a.out_kinds();
  in.insert(in.end(), b.in_kinds().begin(), b.in_kinds().end());
  out.insert(out.end(), b.out_kinds().begin(), b.out_kinds().end());
  GradedOp h(a.groupoid_ptr(), in, out);
  for (const auto& [ia, rowa] : a.rows()) {
    const int ta = path_target(G, ia, a.in_kinds());
    for (const auto& [ib, rowb] : b.rows()) {
      if (ib[0] != ta) continue;
      for (const auto& [oa, va] : rowa)
        for (const auto& [ob, vb] : rowb)
          h.add(concat_path(ia, ib), concat_path(oa, ob), va * vb);
    }
  }
  return h;
}

GradedOp embed(const GradedOp& op, int pos, const Signature& ambient_in) {
  const Groupoid& G = op.groupoid();
  const int r = op.arity_in();
  const int total = static_cast<int>(ambient_in.size());
  if (pos < 1 || pos - 1 + r > total)
    throw std::invalid_argument("embed: position out of range");
  const Signature prefix(ambient_in.begin(), ambient_in.begin() + (pos - 1));
  const Signature middle(ambient_in.begin() + (pos - 1),
                         ambient_in.begin() + (pos - 1) + r);
  const Signature suffix(ambient_in.begin() + (pos - 1) + r,
                         ambient_in.end());
  if (middle != op.in_kinds())
    throw std::invalid_argument(
        "embed: ambient legs do not match the operator signature");

  Signature ambient_out = prefix;
  ambient_out.insert(ambient_out.end(), op.out_kinds().begin(),
                     op.out_kinds().end());
  ambient_out.insert(ambient_out.end(), suffix.begin(), suffix.end());

  // Group prefix paths by target and suffix paths by source.
  std::map<int, std::vector<Path>> pre_by_tgt, suf_by_src;
  for (const Path& p : enumerate_paths(G, prefix))
    pre_by_tgt[path_target(G, p, prefix)].push_back(p);
  for (const Path& p : enumerate_paths(G, suffix)) suf_by_src[p[0]].push_back(p);

  GradedOp h(op.groupoid_ptr(), ambient_in, ambient_out);
  for (const auto& [in, row] : op.rows()) {
    const int src = in[0];
    const int tgt = path_target(G, in, op.in_kinds());
    auto pit = pre_by_tgt.find(src);
    auto sit = suf_by_src.find(tgt);
    if (pit == pre_by_tgt.end() || sit == suf_by_src.end()) continue;
    for (const auto& [out, v] : row)
      for (const Path& P : pit->second)
        for (const Path& S : sit->second)
          h.add(concat_path(concat_path(P, in), S),
                concat_path(concat_path(P, out), S), v);
  }
  return h;
}

double residual_max(const GradedOp& a, const GradedOp& b) {
  if (a.in_kinds() != b.in_kinds() || a.out_kinds() != b.out_kinds())
    throw std::invalid_argument("residual_max: signature mismatch");
  double m = 0.0;
  for (const auto& [in, row] : a.rows())
    for (const auto& [out, v] : row)
      m = std::max(m, std::abs(v - b.entry(in, out)));
  for (const auto& [in, row] : b.rows())
    for (const auto& [out, v] : row)
      m = std::max(m, std::abs(v - a.entry(in, out)));
  return m;
}

std::string residual_witness(const GradedOp& a, const GradedOp& b) {
  double m = -1.0;
  Path win, wout;
  auto scan = [&](const GradedOp& x, const GradedOp& y) {
    for (const auto& [in, row] : x.rows())
      for (const auto& [out, v] : row) {
        const double d = std::abs(v - y.entry(in, out));
        if (d > m) {
          m = d;
          win = in;
          wout = out;
        }
      }
  };
  scan(a, b);
  scan(b, a);
  if (m < 0) return "(both operators empty)";
  const Groupoid& G = a.groupoid();
  std::ostringstream os;
  os << "in=" << path_to_string(G, win) << " out=" << path_to_string(G, wout)
     << " |diff|=" << m;
  return os.str();
}

} // namespace rsosq
