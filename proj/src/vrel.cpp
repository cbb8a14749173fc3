#include "vglab/vrel.hpp"

#include <algorithm>
#include <cmath>

#include "vglab/error.hpp"

namespace vglab {

namespace {

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

void require_same_quantale(const Quantale& a, const Quantale& b,
                           const char* what) {
  if (!a.same_as(b))
    throw ValidationError(std::string(what) + ": quantales differ (" +
                          a.name() + " vs " + b.name() + ")");
}

}  // namespace

Carrier product_carrier(const Carrier& x, const Carrier& y) {
  Carrier out;
  out.reserve(x.size() * y.size());
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(pair_label(a, b));
  return out;
}

VRel::VRel(Quantale q, Carrier source, Carrier target, std::vector<QElem> entries)
    : q_(std::move(q)), src_(std::move(source)), tgt_(std::move(target)),
      m_(std::move(entries)) {
  if (m_.size() != src_.size() * tgt_.size())
    throw ValidationError("V-relation matrix does not match carrier sizes");
}

VRel VRel::identity(const Quantale& q, const Carrier& x) {
  std::vector<QElem> m(x.size() * x.size(), q.bottom());
  for (std::size_t i = 0; i < x.size(); ++i) m[i * x.size() + i] = q.unit();
  return VRel(q, x, x, std::move(m));
}

VRel VRel::constant(const Quantale& q, const Carrier& source,
                    const Carrier& target, const QElem& value) {
  return VRel(q, source, target,
              std::vector<QElem>(source.size() * target.size(), value));
}

VRel VRel::from_map(const Quantale& q, const Carrier& source,
                    const Carrier& target, const std::vector<std::size_t>& f) {
  if (f.size() != source.size())
    throw ValidationError("map length does not match source carrier");
  std::vector<QElem> m(source.size() * target.size(), q.bottom());
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (f[i] >= target.size())
      throw ValidationError("map image out of target carrier");
    m[i * target.size() + f[i]] = q.unit();
  }
  return VRel(q, source, target, std::move(m));
}

VRel VRel::build(const Quantale& q, const Carrier& source, const Carrier& target,
                 const std::function<QElem(std::size_t, std::size_t)>& f) {
  std::vector<QElem> m;
  m.reserve(source.size() * target.size());
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < target.size(); ++j) m.push_back(f(i, j));
  return VRel(q, source, target, std::move(m));
}

VRel compose(const VRel& r, const VRel& s) {
  require_same_quantale(r.quantale(), s.quantale(), "compose");
  if (r.target() != s.source())
    throw ValidationError("compose: middle carriers do not match");
  const Quantale& q = r.quantale();
  return VRel::build(q, r.source(), s.target(), [&](std::size_t x, std::size_t z) {
    QElem acc = q.bottom();
    for (std::size_t y = 0; y < r.cols(); ++y)
      acc = q.join2(acc, q.tensor(r.at(x, y), s.at(y, z)));
    return acc;
  });
}

VRel opposite(const VRel& r) {
  return VRel::build(r.quantale(), r.target(), r.source(),
                     [&](std::size_t y, std::size_t x) { return r.at(x, y); });
}

bool vrel_leq(const VRel& a, const VRel& b) {
  if (a.source() != b.source() || a.target() != b.target())
    throw ValidationError("vrel_leq: carriers do not match");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.quantale().leq(a.at(i, j), b.at(i, j))) return false;
  return true;
}

bool vrel_equal(const VRel& a, const VRel& b) {
  return a.source() == b.source() && a.target() == b.target() &&
         a.entries() == b.entries();
}

VRel vrel_join(const VRel& a, const VRel& b) {
  if (a.source() != b.source() || a.target() != b.target())
    throw ValidationError("vrel_join: carriers do not match");
  return VRel::build(a.quantale(), a.source(), a.target(),
                     [&](std::size_t i, std::size_t j) {
                       return a.quantale().join2(a.at(i, j), b.at(i, j));
                     });
}

VRel vrel_meet(const VRel& a, const VRel& b) {
  if (a.source() != b.source() || a.target() != b.target())
    throw ValidationError("vrel_meet: carriers do not match");
  return VRel::build(a.quantale(), a.source(), a.target(),
                     [&](std::size_t i, std::size_t j) {
                       return a.quantale().meet2(a.at(i, j), b.at(i, j));
                     });
}

VCatReport check_vcategory(const VRel& a) {
  if (!a.is_endo())
    throw ValidationError("check_vcategory: relation is not an endo-relation");
  const Quantale& q = a.quantale();
  const Carrier& X = a.source();
  VCatReport rep;
  for (std::size_t x = 0; x < X.size(); ++x)
    if (!q.leq(q.unit(), a.at(x, x))) {
      rep.reflexive = false;
      rep.reflexivity_witness =
          "k <= a(" + X[x] + "," + X[x] + ") fails: a = " +
          q.format_elem(a.at(x, x));
      break;
    }
  for (std::size_t x = 0; x < X.size() && rep.transitive; ++x)
    for (std::size_t y = 0; y < X.size() && rep.transitive; ++y)
      for (std::size_t z = 0; z < X.size(); ++z) {
        QElem lhs = q.tensor(a.at(x, y), a.at(y, z));
        if (!q.leq(lhs, a.at(x, z))) {
          rep.transitive = false;
          rep.transitivity_witness =
              "a(" + X[x] + "," + X[y] + ") (x) a(" + X[y] + "," + X[z] +
              ") = " + q.format_elem(lhs) + " is not below a(" + X[x] + "," +
              X[z] + ") = " + q.format_elem(a.at(x, z));
          break;
        }
      }
  return rep;
}

VCategory VCategory::make(VRel a) {
  VCatReport rep = check_vcategory(a);
  if (!rep.ok())
    throw ValidationError("not a V-category: " +
                          (rep.reflexive ? rep.transitivity_witness
                                         : rep.reflexivity_witness));
  return VCategory(std::move(a));
}

VCategory VCategory::assume(VRel a) {
  VCatReport rep = check_vcategory(a);
  if (!rep.ok())
    throw std::logic_error("internal: constructed structure fails (R)/(T): " +
                           (rep.reflexive ? rep.transitivity_witness
                                          : rep.reflexivity_witness));
  return VCategory(std::move(a));
}

VCategory discrete_category(const Quantale& q, const Carrier& x) {
  return VCategory::assume(VRel::identity(q, x));
}

VCategory indiscrete_category(const Quantale& q, const Carrier& x) {
  return VCategory::assume(VRel::constant(q, x, x, q.top()));
}

VCategory unit_category(const Quantale& q) {
  return discrete_category(q, Carrier{"*"});
}

VFunctorCheck is_vfunctor(const std::vector<std::size_t>& f, const VCategory& a,
                          const VCategory& b) {
  require_same_quantale(a.quantale(), b.quantale(), "is_vfunctor");
  if (f.size() != a.size())
    throw ValidationError("is_vfunctor: map length does not match carrier");
  const Quantale& q = a.quantale();
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (f[x] >= b.size())
      throw ValidationError("is_vfunctor: image out of range");
    for (std::size_t y = 0; y < a.size(); ++y)
      if (!q.leq(a.at(x, y), b.at(f[x], f[y])))
        return {false, "a(" + a.carrier()[x] + "," + a.carrier()[y] + ") = " +
                           q.format_elem(a.at(x, y)) + " is not below b(" +
                           b.carrier()[f[x]] + "," + b.carrier()[f[y]] + ") = " +
                           q.format_elem(b.at(f[x], f[y]))};
  }
  return {};
}

VFunctor make_vfunctor(VCategory source, VCategory target,
                       std::vector<std::size_t> map) {
  VFunctorCheck c = is_vfunctor(map, source, target);
  if (!c.ok) throw ValidationError("not a V-functor: " + c.witness);
  return VFunctor{std::move(source), std::move(target), std::move(map)};
}

VCategory transitive_closure(const VRel& g) {
  if (!g.is_endo())
    throw ValidationError("transitive_closure: relation is not endo");
  const Quantale& q = g.quantale();
  for (std::size_t x = 0; x < g.rows(); ++x)
    if (!q.leq(q.unit(), g.at(x, x)))
      throw ValidationError("transitive_closure: input graph is not reflexive at " +
                            g.source()[x]);
  if (!q.is_integral() && !q.is_finite())
    throw ValidationError(
        "transitive_closure: needs an integral or finite quantale");

  // reflexivity makes squaring inflationary: a <= a.a
  std::size_t n = g.rows();
  std::size_t bound;
  if (q.is_integral()) {
    std::size_t b = 0;
    while ((std::size_t{1} << b) < (n > 1 ? n : 1)) ++b;
    bound = b + 1;
  } else {
    bound = 100000;  // finite quantale: change detection terminates
  }
  VRel a = g;
  for (std::size_t it = 0; it <= bound; ++it) {
    VRel next = compose(a, a);
    if (vrel_equal(next, a)) return VCategory::assume(std::move(a));
    a = std::move(next);
  }
  throw ValidationError(
      "transitive_closure: no fixpoint within the iteration bound "
      "(non-termination diagnostic)");
}

VCategory symmetrize(const VCategory& a, SymMode mode) {
  if (mode == SymMode::coreflect)
    return VCategory::assume(vrel_meet(a.rel(), opposite(a.rel())));
  return transitive_closure(vrel_join(a.rel(), opposite(a.rel())));
}

VCategory initial_structure(
    const Carrier& x,
    const std::vector<std::pair<std::vector<std::size_t>, VCategory>>& maps) {
  if (maps.empty())
    throw ValidationError("initial_structure: empty family of maps");
  const Quantale& q = maps.front().second.quantale();
  for (const auto& [f, b] : maps) {
    require_same_quantale(q, b.quantale(), "initial_structure");
    if (f.size() != x.size())
      throw ValidationError("initial_structure: map length mismatch");
  }
  VRel rel = VRel::build(q, x, x, [&](std::size_t i, std::size_t j) {
    QElem acc = q.top();
    for (const auto& [f, b] : maps) acc = q.meet2(acc, b.at(f[i], f[j]));
    return acc;
  });
  return VCategory::assume(std::move(rel));
}

FinalStructureResult final_structure_surjection(const std::vector<std::size_t>& f,
                                                const VCategory& a,
                                                const Carrier& y) {
  if (f.size() != a.size())
    throw ValidationError("final_structure_surjection: map length mismatch");
  std::vector<bool> hit(y.size(), false);
  for (std::size_t v : f) {
    if (v >= y.size())
      throw ValidationError("final_structure_surjection: image out of range");
    hit[v] = true;
  }
  for (std::size_t j = 0; j < y.size(); ++j)
    if (!hit[j])
      throw ValidationError("final_structure_surjection: map is not surjective (" +
                            y[j] + " has empty fiber)");
  const Quantale& q = a.quantale();
  VRel b = VRel::build(q, y, y, [&](std::size_t y1, std::size_t y2) {
    QElem acc = q.bottom();
    for (std::size_t x1 = 0; x1 < a.size(); ++x1)
      for (std::size_t x2 = 0; x2 < a.size(); ++x2)
        if (f[x1] == y1 && f[x2] == y2) acc = q.join2(acc, a.at(x1, x2));
    return acc;
  });
  FinalStructureResult out{b, check_vcategory(b), std::nullopt};
  if (out.report.ok()) out.category = VCategory::assume(std::move(b));
  return out;
}

VCategory tensor_cat(const VCategory& a, const VCategory& b) {
  require_same_quantale(a.quantale(), b.quantale(), "tensor_cat");
  const Quantale& q = a.quantale();
  Carrier xy = product_carrier(a.carrier(), b.carrier());
  std::size_t nb = b.size();
  VRel rel = VRel::build(q, xy, xy, [&](std::size_t p, std::size_t r) {
    return q.tensor(a.at(p / nb, r / nb), b.at(p % nb, r % nb));
  });
  return VCategory::assume(std::move(rel));
}

VCategory cartesian_cat(const VCategory& a, const VCategory& b) {
  require_same_quantale(a.quantale(), b.quantale(), "cartesian_cat");
  const Quantale& q = a.quantale();
  Carrier xy = product_carrier(a.carrier(), b.carrier());
  std::size_t nb = b.size();
  VRel rel = VRel::build(q, xy, xy, [&](std::size_t p, std::size_t r) {
    return q.meet2(a.at(p / nb, r / nb), b.at(p % nb, r % nb));
  });
  return VCategory::assume(std::move(rel));
}

std::vector<std::vector<std::size_t>> enumerate_vfunctors(const VCategory& a,
                                                          const VCategory& b,
                                                          std::size_t bound) {
  require_same_quantale(a.quantale(), b.quantale(), "enumerate_vfunctors");
  double space = std::pow(static_cast<double>(b.size() ? b.size() : 1),
                          static_cast<double>(a.size()));
  if (space > static_cast<double>(bound))
    throw ValidationError("enumerate_vfunctors: search space exceeds bound");
  const Quantale& q = a.quantale();
  std::vector<std::vector<std::size_t>> out;
  if (a.size() == 0) {
    out.push_back({});
    return out;
  }
  if (b.size() == 0) return out;

  std::vector<std::size_t> f(a.size(), 0);
  std::size_t depth = 0;
  // backtracking in lexicographic order over image tuples
  auto consistent = [&](std::size_t x) {
    for (std::size_t y = 0; y <= x; ++y) {
      if (!q.leq(a.at(x, y), b.at(f[x], f[y]))) return false;
      if (!q.leq(a.at(y, x), b.at(f[y], f[x]))) return false;
    }
    return true;
  };
  while (true) {
    if (consistent(depth)) {
      if (depth + 1 == a.size()) {
        out.push_back(f);
      } else {
        ++depth;
        f[depth] = 0;
        continue;
      }
    }
    // advance
    while (true) {
      if (f[depth] + 1 < b.size()) {
        ++f[depth];
        break;
      }
      if (depth == 0) return out;
      --depth;
    }
  }
}

VCategory internal_hom(const VCategory& a, const VCategory& b,
                       std::size_t bound) {
  const Quantale& q = a.quantale();
  auto fs = enumerate_vfunctors(a, b, bound);
  Carrier labels;
  labels.reserve(fs.size());
  for (const auto& f : fs) {
    std::string l = "[";
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (x) l += ",";
      l += b.carrier()[f[x]];
    }
    l += "]";
    labels.push_back(std::move(l));
  }
  VRel rel = VRel::build(q, labels, labels, [&](std::size_t i, std::size_t j) {
    QElem acc = q.top();
    for (std::size_t x = 0; x < a.size(); ++x)
      acc = q.meet2(acc, b.at(fs[i][x], fs[j][x]));
    return acc;
  });
  return VCategory::assume(std::move(rel));
}

ProperOpenReport proper_open_report(const VFunctor& f) {
  const VCategory &A = f.source, &B = f.target;
  const Quantale& q = A.quantale();
  ProperOpenReport rep;
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = 0; y < B.size(); ++y) {
      QElem fwd = q.bottom(), bwd = q.bottom();
      for (std::size_t x2 = 0; x2 < A.size(); ++x2)
        if (f.map[x2] == y) {
          fwd = q.join2(fwd, A.at(x, x2));
          bwd = q.join2(bwd, A.at(x2, x));
        }
      if (rep.proper && !q.equal(B.at(f.map[x], y), fwd)) {
        rep.proper = false;
        rep.proper_witness = "b(f(" + A.carrier()[x] + ")," + B.carrier()[y] +
                             ") = " + q.format_elem(B.at(f.map[x], y)) +
                             " but the fiber join is " + q.format_elem(fwd);
      }
      if (rep.open && !q.equal(B.at(y, f.map[x]), bwd)) {
        rep.open = false;
        rep.open_witness = "b(" + B.carrier()[y] + ",f(" + A.carrier()[x] +
                           ")) = " + q.format_elem(B.at(y, f.map[x])) +
                           " but the fiber join is " + q.format_elem(bwd);
      }
    }
  return rep;
}

RegularityReport regularity_report(const VCategory& a) {
  RegularityReport rep;
  const VRel& r = a.rel();
  VRel ro = opposite(r);
  rep.symmetric = vrel_equal(r, ro);
  rep.regular = vrel_leq(compose(ro, r), r);
  rep.difunctional = vrel_leq(compose(compose(r, ro), r), r);
  // positivity witnessed by b := a, i.e. a == b^op . b
  rep.positive = vrel_equal(compose(r, ro), r) && rep.symmetric;
  return rep;
}

VCategory change_of_base_cat(const LaxHom& phi, const VCategory& a) {
  if (!phi.source().same_as(a.quantale()))
    throw ValidationError("change_of_base_cat: structure is not over the source "
                          "of the lax homomorphism");
  std::vector<QElem> samples = a.rel().entries();
  samples.push_back(a.quantale().unit());
  LawReport lax = check_lax_hom(phi, samples);
  if (!lax.ok())
    throw ValidationError("change_of_base_cat: " + phi.name() +
                          " is not lax on the structure's entries: " +
                          lax.witness);
  const Quantale& w = phi.target();
  VRel rel = VRel::build(w, a.carrier(), a.carrier(),
                         [&](std::size_t i, std::size_t j) {
                           return phi(a.at(i, j));
                         });
  return VCategory::assume(std::move(rel));
}

}  // namespace vglab
