#include "vglab/vgroup.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "vglab/error.hpp"

namespace vglab {

namespace {

void require_compatible(const VGroup& a, const VGroup& b, const char* what) {
  if (!a.compatible_with(b))
    throw ValidationError(std::string(what) +
                          ": operands live over different quantales or groups");
}

void require_integral(const Quantale& q, const char* what) {
  if (!q.is_integral())
    throw ValidationError(std::string(what) +
                          ": requires an integral quantale (k = top)");
}

std::string cycle_label(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

bool validate_delta(const FiniteGroup& g, const Quantale& q,
                    const std::vector<QElem>& delta, std::string* witness) {
  auto fail = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  if (static_cast<int>(delta.size()) != g.size())
    return fail("profile length does not match the group order");
  if (!q.equal(delta[0], q.top()))
    return fail("delta(0) = " + q.format_elem(delta[0]) +
                " but the standing k = top assumption requires delta(0) = top");
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v) {
      QElem lhs = q.tensor(delta[u], delta[v]);
      if (!q.leq(lhs, delta[g.add(u, v)]))
        return fail("delta(" + g.label(u) + ") (x) delta(" + g.label(v) +
                    ") = " + q.format_elem(lhs) + " is not below delta(" +
                    g.label(g.add(u, v)) + ") = " +
                    q.format_elem(delta[g.add(u, v)]));
    }
  for (int h = 0; h < g.size(); ++h)
    for (int u = 0; u < g.size(); ++u) {
      int c = g.conjugate(h, u);
      if (!q.equal(delta[c], delta[u]))
        return fail("conjugation invariance fails: delta(" + g.label(c) +
                    ") != delta(" + g.label(u) + ") for conjugator " +
                    g.label(h));
    }
  return true;
}

VGroup VGroup::from_delta(FiniteGroup g, Quantale q, std::vector<QElem> delta) {
  std::string w;
  if (!validate_delta(g, q, delta, &w))
    throw ValidationError("not a V-group structure: " + w);
  return VGroup(std::move(g), std::move(q), std::move(delta));
}

VGroup VGroup::discrete(FiniteGroup g, const Quantale& q) {
  std::vector<QElem> d(g.size(), q.bottom());
  d[0] = q.top();
  return from_delta(std::move(g), q, std::move(d));
}

VGroup VGroup::indiscrete(FiniteGroup g, const Quantale& q) {
  std::vector<QElem> d(g.size(), q.top());
  return from_delta(std::move(g), q, std::move(d));
}

VCategory VGroup::category() const {
  VRel rel = VRel::build(q_, g_.labels(), g_.labels(),
                         [&](std::size_t x, std::size_t y) {
                           return at(static_cast<int>(x), static_cast<int>(y));
                         });
  return VCategory::assume(std::move(rel));
}

MatrixValidation vgroup_validate_matrix(const FiniteGroup& g,
                                        const VCategory& a) {
  if (static_cast<int>(a.size()) != g.size())
    throw ValidationError("vgroup_validate_matrix: carrier size mismatch");
  const Quantale& q = a.quantale();
  MatrixValidation out;

  // (i) addition is a V-functor on the tensor square
  out.tensor_condition = true;
  for (int x1 = 0; x1 < g.size() && out.tensor_condition; ++x1)
    for (int x2 = 0; x2 < g.size() && out.tensor_condition; ++x2)
      for (int u1 = 0; u1 < g.size() && out.tensor_condition; ++u1)
        for (int u2 = 0; u2 < g.size(); ++u2) {
          QElem lhs = q.tensor(a.at(x1, x2), a.at(u1, u2));
          if (!q.leq(lhs, a.at(g.add(x1, u1), g.add(x2, u2)))) {
            out.tensor_condition = false;
            out.witness = "a(" + g.label(x1) + "," + g.label(x2) + ") (x) a(" +
                          g.label(u1) + "," + g.label(u2) +
                          ") is not below a(" + g.label(g.add(x1, u1)) + "," +
                          g.label(g.add(x2, u2)) + ")";
            break;
          }
        }

  // (ii) V-category plus invariance by shifting
  std::string shift_witness;
  VCatReport cat = check_vcategory(a.rel());
  bool shifts = true;
  for (int x = 0; x < g.size() && shifts; ++x)
    for (int x1 = 0; x1 < g.size() && shifts; ++x1)
      for (int x2 = 0; x2 < g.size(); ++x2)
        if (!q.equal(a.at(x1, x2), a.at(g.add(x1, x), g.add(x2, x)))) {
          shifts = false;
          shift_witness = "a(" + g.label(x1) + "," + g.label(x2) + ") != a(" +
                          g.label(g.add(x1, x)) + "," + g.label(g.add(x2, x)) +
                          ") (shift by " + g.label(x) + ")";
          break;
        }
  out.shift_condition = cat.ok() && shifts;
  if (!out.shift_condition && out.witness.empty())
    out.witness = !cat.ok() ? (cat.reflexive ? cat.transitivity_witness
                                             : cat.reflexivity_witness)
                            : shift_witness;

  if (out.tensor_condition != out.shift_condition)
    throw std::logic_error(
        "internal: the two compatibility conditions disagree: " + out.witness);

  out.valid = out.tensor_condition && q.equal(a.at(0, 0), q.top());
  if (out.tensor_condition && !out.valid && out.witness.empty())
    out.witness = "a(0,0) = " + q.format_elem(a.at(0, 0)) +
                  " but the standing k = top assumption requires top";
  if (out.valid) {
    for (int x = 0; x < g.size(); ++x) out.delta.push_back(a.at(0, x));
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y)
        if (!q.equal(a.at(x, y), out.delta[g.sub(y, x)]))
          throw std::logic_error(
              "internal: profile does not reconstruct the matrix");
  }
  return out;
}

bool is_symmetric_vgroup(const VGroup& x) {
  const Quantale& q = x.quantale();
  bool profile = true;
  for (int u = 0; u < x.size(); ++u)
    if (!q.equal(x.delta(u), x.delta(x.group().inv(u)))) {
      profile = false;
      break;
    }
  std::vector<std::size_t> inv_map(x.size());
  for (int u = 0; u < x.size(); ++u)
    inv_map[u] = static_cast<std::size_t>(x.group().inv(u));
  VCategory cat = x.category();
  bool functor = is_vfunctor(inv_map, cat, cat).ok;
  if (profile != functor)
    throw std::logic_error(
        "internal: symmetry of the profile disagrees with V-functoriality of "
        "the inversion");
  return profile;
}

VGroup symmetrize_vgroup(const VGroup& x, SymMode mode) {
  const Quantale& q = x.quantale();
  std::vector<QElem> d;
  d.reserve(x.size());
  for (int u = 0; u < x.size(); ++u) {
    const QElem& a = x.delta(u);
    const QElem& b = x.delta(x.group().inv(u));
    d.push_back(mode == SymMode::coreflect ? q.meet2(a, b) : q.join2(a, b));
  }
  if (mode == SymMode::coreflect)
    return VGroup::from_delta(x.group(), q, std::move(d));
  return generated_structure(x.group(), q, std::move(d));
}

VGroupHom make_vgroup_hom(const VGroup& x, const VGroup& y,
                          std::vector<int> map) {
  if (!x.quantale().same_as(y.quantale()))
    throw ValidationError("V-group hom: quantales differ");
  GroupHom h = make_group_hom(x.group(), y.group(), std::move(map));
  const Quantale& q = x.quantale();
  for (int u = 0; u < x.size(); ++u)
    if (!q.leq(x.delta(u), y.delta(h.map[u])))
      throw ValidationError("V-group hom: delta(" + x.group().label(u) +
                            ") = " + q.format_elem(x.delta(u)) +
                            " is not below delta(" +
                            y.group().label(h.map[u]) + ") = " +
                            q.format_elem(y.delta(h.map[u])));
  return VGroupHom{x, y, std::move(h)};
}

VGroup product_vgroup(const VGroup& x, const VGroup& y) {
  if (!x.quantale().same_as(y.quantale()))
    throw ValidationError("product_vgroup: quantales differ");
  const Quantale& q = x.quantale();
  FiniteGroup p = FiniteGroup::direct_product(x.group(), y.group());
  const int ny = y.size();
  std::vector<QElem> d;
  d.reserve(p.size());
  for (int i = 0; i < p.size(); ++i)
    d.push_back(q.meet2(x.delta(i / ny), y.delta(i % ny)));
  return VGroup::from_delta(std::move(p), q, std::move(d));
}

SubVGroup sub_vgroup(const VGroup& x, const std::vector<int>& elements) {
  Subgroup s = subgroup_from_elements(x.group(), elements);
  std::vector<QElem> d;
  d.reserve(s.embed.size());
  for (int parent : s.embed) d.push_back(x.delta(parent));
  VGroup sub = VGroup::from_delta(s.group, x.quantale(), std::move(d));
  VGroupHom inc = make_vgroup_hom(sub, x, s.embed);
  return SubVGroup{std::move(sub), std::move(inc)};
}

SubVGroup kernel_vgroup(const VGroupHom& f) {
  return sub_vgroup(f.source, hom_kernel_image(f.hom).kernel);
}

SubVGroup equalizer_vgroup(const VGroupHom& f, const VGroupHom& g) {
  require_compatible(f.source, g.source, "equalizer_vgroup");
  require_compatible(f.target, g.target, "equalizer_vgroup");
  std::vector<int> elems;
  for (int u = 0; u < f.source.size(); ++u)
    if (f.hom.map[u] == g.hom.map[u]) elems.push_back(u);
  return sub_vgroup(f.source, elems);
}

QuotientVGroup quotient_vgroup(const VGroup& x, const std::vector<int>& normal) {
  QuotientGroup qg = quotient_group(x.group(), normal);
  const Quantale& q = x.quantale();
  std::vector<QElem> d;
  d.reserve(qg.cosets.size());
  for (const auto& coset : qg.cosets) {
    QElem acc = q.bottom();
    for (int m : coset) acc = q.join2(acc, x.delta(m));
    d.push_back(acc);
  }
  VGroup quotient = VGroup::from_delta(qg.group, q, std::move(d));
  VGroupHom proj = make_vgroup_hom(x, quotient, qg.projection.map);
  return QuotientVGroup{std::move(quotient), std::move(proj)};
}

QuotientVGroup coequalizer_vgroup(const VGroupHom& f, const VGroupHom& g) {
  require_compatible(f.source, g.source, "coequalizer_vgroup");
  require_compatible(f.target, g.target, "coequalizer_vgroup");
  const FiniteGroup& y = f.target.group();
  std::vector<int> diffs;
  for (int u = 0; u < f.source.size(); ++u)
    diffs.push_back(y.sub(f.hom.map[u], g.hom.map[u]));
  return quotient_vgroup(f.target, normal_closure(y, diffs));
}

VGroup change_of_base_vgroup(const LaxHom& phi, const VGroup& x) {
  if (!phi.source().same_as(x.quantale()))
    throw ValidationError(
        "change_of_base_vgroup: structure is not over the source quantale");
  std::vector<QElem> samples = x.profile();
  samples.push_back(x.quantale().unit());
  LawReport lax = check_lax_hom(phi, samples);
  if (!lax.ok())
    throw ValidationError("change_of_base_vgroup: " + phi.name() +
                          " fails the lax-homomorphism laws: " + lax.witness);
  std::vector<QElem> d;
  d.reserve(x.size());
  for (int u = 0; u < x.size(); ++u) d.push_back(phi(x.delta(u)));
  return VGroup::from_delta(x.group(), phi.target(), std::move(d));
}

VGroup generated_structure(const FiniteGroup& g, const Quantale& q,
                           std::vector<QElem> seed) {
  if (!q.is_integral() && !q.is_finite())
    throw ValidationError(
        "generated_structure: needs an integral or finite quantale");
  if (static_cast<int>(seed.size()) != g.size())
    throw ValidationError("generated_structure: seed length mismatch");

  std::vector<QElem> delta = std::move(seed);
  delta[0] = q.top();
  // close under conjugation once; the superadditive step preserves it
  for (const auto& cls : g.conjugacy_classes()) {
    QElem m = q.bottom();
    for (int u : cls) m = q.join2(m, delta[u]);
    for (int u : cls) delta[u] = m;
  }

  std::size_t bound;
  if (q.is_integral()) {
    // decompositions of length <= |G| suffice: a factor block with trivial
    // sum can be dropped without decreasing the value when k = top
    std::size_t b = 0;
    while ((std::size_t{1} << b) < static_cast<std::size_t>(g.size())) ++b;
    bound = b + 1;
  } else {
    bound = q.carrier().size() * static_cast<std::size_t>(g.size()) + 2;
  }

  for (std::size_t it = 0; it <= bound; ++it) {
    std::vector<QElem> next = delta;
    for (int w = 0; w < g.size(); ++w)
      for (int u = 0; u < g.size(); ++u) {
        int v = g.add(g.inv(u), w);  // u + v = w
        next[w] = q.join2(next[w], q.tensor(delta[u], delta[v]));
      }
    if (next == delta) {
      std::string w;
      if (!validate_delta(g, q, delta, &w))
        throw std::logic_error("internal: generated structure invalid: " + w);
      return VGroup::from_delta(g, q, std::move(delta));
    }
    delta = std::move(next);
  }
  throw ValidationError(
      "generated_structure: no fixpoint within the iteration bound "
      "(non-termination diagnostic)");
}

std::vector<VGroup> enumerate_vgroup_structures(const FiniteGroup& g,
                                                const Quantale& q,
                                                std::size_t bound) {
  if (!q.is_finite())
    throw ValidationError(
        "enumerate_vgroup_structures: needs a finite quantale");
  const std::vector<QElem>& carrier = q.carrier();
  auto classes = g.conjugacy_classes();  // class of 0 first
  const std::size_t free = classes.size() - 1;
  double space = 1;
  for (std::size_t i = 0; i < free; ++i)
    space *= static_cast<double>(carrier.size());
  if (space > static_cast<double>(bound))
    throw ValidationError(
        "enumerate_vgroup_structures: search space exceeds bound");

  std::vector<VGroup> out;
  std::vector<std::size_t> pick(free, 0);
  while (true) {
    std::vector<QElem> d(g.size(), q.top());
    for (std::size_t c = 0; c < free; ++c)
      for (int u : classes[c + 1]) d[u] = carrier[pick[c]];
    if (validate_delta(g, q, d, nullptr))
      out.push_back(VGroup::from_delta(g, q, std::move(d)));
    if (free == 0) break;
    std::size_t i = free;
    while (i > 0 && pick[i - 1] + 1 == carrier.size()) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
  return out;
}

namespace {

struct SemidirectSetup {
  SemidirectProduct sd;
  bool lemma_ok;
  std::string lemma_witness;
};

SemidirectSetup semidirect_setup(const GroupAction& phi, const VGroup& x,
                                 const VGroup& y, const char* what) {
  if (!x.quantale().same_as(y.quantale()))
    throw ValidationError(std::string(what) + ": quantales differ");
  if (!phi.acted().same_table(x.group()) || !phi.acting().same_table(y.group()))
    throw ValidationError(std::string(what) +
                          ": action does not match the given groups");
  require_integral(x.quantale(), what);
  SemidirectSetup s{semidirect_product_group(phi), true, {}};
  const Quantale& q = x.quantale();
  for (int v = 0; v < y.size() && s.lemma_ok; ++v)
    for (int u = 0; u < x.size(); ++u)
      if (!q.leq(x.delta(u), x.delta(phi.apply(v, u)))) {
        s.lemma_ok = false;
        s.lemma_witness = "phi_" + y.group().label(v) +
                          " is not a V-functor: delta(" + x.group().label(u) +
                          ") is not below delta(" +
                          x.group().label(phi.apply(v, u)) + ")";
        break;
      }
  return s;
}

std::vector<QElem> tensor_profile(const SemidirectProduct& sd, const VGroup& x,
                                  const VGroup& y) {
  const Quantale& q = x.quantale();
  std::vector<QElem> d;
  d.reserve(sd.group.size());
  for (int p = 0; p < sd.group.size(); ++p)
    d.push_back(q.tensor(x.delta(sd.first(p)), y.delta(sd.second(p))));
  return d;
}

std::vector<QElem> lex_profile(const SemidirectProduct& sd, const VGroup& x,
                               const VGroup& y) {
  std::vector<QElem> d;
  d.reserve(sd.group.size());
  for (int p = 0; p < sd.group.size(); ++p)
    d.push_back(sd.second(p) == 0 ? x.delta(sd.first(p))
                                  : y.delta(sd.second(p)));
  return d;
}

SplitExtensionStructure finish_structure(SemidirectSetup setup,
                                         std::vector<QElem> delta,
                                         const VGroup& x, const VGroup& y,
                                         bool condition, std::string witness) {
  SplitExtensionStructure out;
  out.sd = std::move(setup.sd);
  out.delta = std::move(delta);
  out.lemma_ok = setup.lemma_ok;
  out.valid = setup.lemma_ok && condition;
  out.witness = setup.lemma_ok ? std::move(witness) : setup.lemma_witness;

  std::string direct_witness;
  bool direct = validate_delta(out.sd.group, x.quantale(), out.delta,
                               &direct_witness);
  if (direct != out.valid)
    throw std::logic_error(
        "internal: split-extension characterization disagrees with direct "
        "validation: " +
        (direct ? out.witness : direct_witness));

  out.is_tensor = out.delta == tensor_profile(out.sd, x, y);
  out.is_lex = out.delta == lex_profile(out.sd, x, y);
  if (out.valid)
    out.total = VGroup::from_delta(out.sd.group, x.quantale(), out.delta);
  return out;
}

}  // namespace

SplitExtensionStructure semidirect_tensor(const GroupAction& phi,
                                          const VGroup& x, const VGroup& y) {
  SemidirectSetup setup = semidirect_setup(phi, x, y, "semidirect_tensor");
  const Quantale& q = x.quantale();
  std::vector<QElem> d = tensor_profile(setup.sd, x, y);

  bool cond = true;
  std::string witness;
  if (setup.lemma_ok) {
    // phibar (x,y) -> (phi_y(x), y) must be a V-functor on the tensor square
    for (int x1 = 0; x1 < x.size() && cond; ++x1)
      for (int y1 = 0; y1 < y.size() && cond; ++y1)
        for (int x2 = 0; x2 < x.size() && cond; ++x2)
          for (int y2 = 0; y2 < y.size(); ++y2) {
            QElem lhs = q.tensor(x.at(x1, x2), y.at(y1, y2));
            QElem rhs = q.tensor(
                x.at(phi.apply(y1, x1), phi.apply(y2, x2)), y.at(y1, y2));
            if (!q.leq(lhs, rhs)) {
              cond = false;
              witness = "phibar fails at ((" + x.group().label(x1) + "," +
                        y.group().label(y1) + "),(" + x.group().label(x2) +
                        "," + y.group().label(y2) + ")): " + q.format_elem(lhs) +
                        " is not below " + q.format_elem(rhs);
              break;
            }
          }
  }
  return finish_structure(std::move(setup), std::move(d), x, y, cond,
                          std::move(witness));
}

SplitExtensionStructure semidirect_lex(const GroupAction& phi, const VGroup& x,
                                       const VGroup& y) {
  SemidirectSetup setup = semidirect_setup(phi, x, y, "semidirect_lex");
  const Quantale& q = x.quantale();
  std::vector<QElem> d = lex_profile(setup.sd, x, y);

  bool cond = true;
  std::string witness;
  if (setup.lemma_ok) {
    QElem floor = q.top();  // meet_x a(x,0)
    for (int u = 0; u < x.size(); ++u)
      floor = q.meet2(floor, x.delta(x.group().inv(u)));
    for (int v = 1; v < y.size(); ++v) {
      QElem lhs = q.tensor(y.delta(y.group().inv(v)), y.delta(v));
      if (!q.leq(lhs, floor)) {
        cond = false;
        witness = "b(" + y.group().label(v) + ",0) (x) b(0," +
                  y.group().label(v) + ") = " + q.format_elem(lhs) +
                  " is not below meet_x a(x,0) = " + q.format_elem(floor);
        break;
      }
    }
  }
  return finish_structure(std::move(setup), std::move(d), x, y, cond,
                          std::move(witness));
}

std::vector<SplitExtensionStructure> enumerate_split_structures(
    const GroupAction& phi, const VGroup& x, const VGroup& y,
    std::size_t bound) {
  SemidirectSetup setup = semidirect_setup(phi, x, y,
                                           "enumerate_split_structures");
  const Quantale& q = x.quantale();
  if (!q.is_finite())
    throw ValidationError(
        "enumerate_split_structures: needs a finite quantale");
  if (!setup.lemma_ok) return {};  // no compatible structure can exist

  const SemidirectProduct& sd = setup.sd;
  auto classes = sd.group.conjugacy_classes();
  const std::vector<QElem>& carrier = q.carrier();

  struct ClassInfo {
    std::vector<int> members;
    std::optional<QElem> forced;
    QElem ub;  // pi_2 constraint
  };
  std::vector<ClassInfo> infos;
  for (auto& cls : classes) {
    ClassInfo info{cls, std::nullopt, q.top()};
    for (int p : cls) {
      int px = sd.first(p), py = sd.second(p);
      info.ub = q.meet2(info.ub, y.delta(py));
      std::optional<QElem> f;
      if (py == 0)
        f = x.delta(px);  // kernel fiber: initial structure
      else if (px == 0)
        f = y.delta(py);  // section fiber
      if (f) {
        if (info.forced && !q.equal(*info.forced, *f)) return {};
        info.forced = std::move(f);
      }
    }
    if (info.forced && !q.leq(*info.forced, info.ub)) return {};
    infos.push_back(std::move(info));
  }

  std::vector<std::size_t> free_idx;
  std::vector<std::vector<QElem>> candidates;
  double space = 1;
  for (std::size_t i = 0; i < infos.size(); ++i) {
    if (infos[i].forced) continue;
    std::vector<QElem> cs;
    for (const QElem& v : carrier)
      if (q.leq(v, infos[i].ub)) cs.push_back(v);
    space *= static_cast<double>(cs.size());
    free_idx.push_back(i);
    candidates.push_back(std::move(cs));
  }
  if (space > static_cast<double>(bound))
    throw ValidationError(
        "enumerate_split_structures: search space exceeds bound");

  std::vector<SplitExtensionStructure> out;
  std::vector<std::size_t> pick(free_idx.size(), 0);
  while (true) {
    std::vector<QElem> d(sd.group.size(), q.bottom());
    for (std::size_t i = 0; i < infos.size(); ++i)
      if (infos[i].forced)
        for (int p : infos[i].members) d[p] = *infos[i].forced;
    for (std::size_t c = 0; c < free_idx.size(); ++c)
      for (int p : infos[free_idx[c]].members) d[p] = candidates[c][pick[c]];

    if (validate_delta(sd.group, q, d, nullptr)) {
      SplitExtensionStructure s;
      s.sd = sd;
      s.delta = d;
      s.lemma_ok = true;
      s.valid = true;
      s.is_tensor = d == tensor_profile(sd, x, y);
      s.is_lex = d == lex_profile(sd, x, y);
      s.total = VGroup::from_delta(sd.group, q, std::move(d));
      out.push_back(std::move(s));
    }
    if (free_idx.empty()) break;
    std::size_t i = free_idx.size();
    while (i > 0 && pick[i - 1] + 1 == candidates[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
  return out;
}

EpiMonoReport epi_mono_report(const VGroupHom& f) {
  const Quantale& q = f.source.quantale();
  KernelImage ki = hom_kernel_image(f.hom);
  EpiMonoReport rep;
  rep.mono = ki.injective;
  rep.epi = ki.surjective;

  rep.regular_mono = ki.injective;
  if (rep.regular_mono)
    for (int u = 0; u < f.source.size() && rep.regular_mono; ++u)
      rep.regular_mono =
          q.equal(f.source.delta(u), f.target.delta(f.hom.map[u]));

  rep.regular_epi = ki.surjective;
  if (rep.regular_epi)
    for (int v = 0; v < f.target.size() && rep.regular_epi; ++v) {
      QElem acc = q.bottom();
      for (int u = 0; u < f.source.size(); ++u)
        if (f.hom.map[u] == v) acc = q.join2(acc, f.source.delta(u));
      rep.regular_epi = q.equal(acc, f.target.delta(v));
    }

  std::vector<std::size_t> map(f.hom.map.begin(), f.hom.map.end());
  ProperOpenReport po = proper_open_report(
      make_vfunctor(f.source.category(), f.target.category(), map));
  rep.proper = po.proper;
  rep.open = po.open;
  return rep;
}

JointlyStrongReport is_jointly_strongly_epi(const VGroupHom& f,
                                            const VGroupHom& g) {
  require_compatible(f.target, g.target, "is_jointly_strongly_epi");
  const VGroup& z = f.target;
  const Quantale& q = z.quantale();

  JointlyStrongReport rep;
  std::vector<int> gens;
  for (int v : f.hom.map) gens.push_back(v);
  for (int v : g.hom.map) gens.push_back(v);
  rep.generates =
      static_cast<int>(subgroup_generated(z.group(), gens).size()) == z.size();
  if (!rep.generates)
    rep.witness = "the images do not generate the target group";

  std::vector<QElem> seed(z.size(), q.bottom());
  for (int u = 0; u < f.source.size(); ++u)
    seed[f.hom.map[u]] = q.join2(seed[f.hom.map[u]], f.source.delta(u));
  for (int u = 0; u < g.source.size(); ++u)
    seed[g.hom.map[u]] = q.join2(seed[g.hom.map[u]], g.source.delta(u));
  VGroup generated = generated_structure(z.group(), q, std::move(seed));

  rep.structure_ok = true;
  for (int v = 0; v < z.size(); ++v)
    if (!q.equal(generated.delta(v), z.delta(v))) {
      rep.structure_ok = false;
      if (rep.witness.empty())
        rep.witness = "generated structure at " + z.group().label(v) + " is " +
                      q.format_elem(generated.delta(v)) +
                      " but the target has " + q.format_elem(z.delta(v));
      break;
    }
  rep.strong = rep.generates && rep.structure_ok;
  return rep;
}

StronglyUnitalReport strongly_unital_check(const VGroup& y) {
  const Quantale& q = y.quantale();
  StronglyUnitalReport rep;
  rep.lhs = rep.rhs = rep.c_value = rep.d_value = q.bottom();
  for (int v = 0; v < y.size(); ++v) {
    QElem lhs = y.delta(v);
    QElem rhs = q.tensor(y.delta(y.group().inv(v)), y.delta(v));
    if (!q.equal(lhs, rhs)) {
      rep.necessary_condition = false;
      rep.witness_y = v;
      rep.lhs = lhs;
      rep.rhs = rhs;
      rep.witness = "b(0," + y.group().label(v) + ") = " + q.format_elem(lhs) +
                    " but b(" + y.group().label(v) + ",0) (x) b(0," +
                    y.group().label(v) + ") = " + q.format_elem(rhs);
      break;
    }
  }
  if (rep.necessary_condition) return rep;

  // the proof's counterexample point over the subgroup generated by the
  // failing element, with the product structure d versus the generated c
  const int xw = rep.witness_y;
  SubVGroup xsub = sub_vgroup(y, subgroup_generated(y.group(), {xw}));
  const int nx = xsub.sub.size();
  FiniteGroup p = FiniteGroup::direct_product(y.group(), xsub.sub.group());

  std::vector<QElem> seed(p.size(), q.bottom());
  for (int v = 0; v < y.size(); ++v) {
    int idx = v * nx + 0;  // <1,0> : Y -> Y x X
    seed[idx] = q.join2(seed[idx], y.delta(v));
  }
  for (int zz = 0; zz < nx; ++zz) {
    int idx = xsub.include.hom.map[zz] * nx + zz;  // <j,1> : X -> Y x X
    seed[idx] = q.join2(seed[idx], xsub.sub.delta(zz));
  }
  VGroup c = generated_structure(p, q, std::move(seed));

  int zx = -1;  // index of the failing element inside the subgroup
  for (int zz = 0; zz < nx; ++zz)
    if (xsub.include.hom.map[zz] == xw) zx = zz;
  rep.c_value = c.delta(0 * nx + zx);
  rep.d_value = q.meet2(y.delta(0), xsub.sub.delta(zx));
  rep.counterexample_matches =
      q.equal(rep.c_value, rep.rhs) && !q.equal(rep.c_value, rep.d_value);
  return rep;
}

PointSearchConfig PointSearchConfig::defaults() {
  PointSearchConfig c;
  c.kernel_groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)};
  c.pullback_groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                       FiniteGroup::cyclic(4), FiniteGroup::klein(),
                       FiniteGroup::symmetric3()};
  return c;
}

ProtomodularReport protomodular_object_check(const VGroup& y,
                                             const PointSearchConfig& config) {
  const Quantale& q = y.quantale();
  if (!q.is_frame())
    throw ValidationError(
        "protomodular_object_check: the characterization is stated for frame "
        "quantales only");
  ProtomodularReport out;
  out.symmetric = is_symmetric_vgroup(y);
  LawReport& rep = out.point_search;
  rep.id = "protomodular_point_search";
  rep.claim =
      "every enumerated point over the object is stably strong iff the object "
      "is symmetric";

  auto budget_left = [&] { return rep.attempted < config.max_strong_checks; };

  for (const FiniteGroup& xg : config.kernel_groups) {
    if (!budget_left()) break;
    AutomorphismGroup aut = automorphism_group(xg, config.hom_bound);
    std::vector<GroupHom> actions =
        enumerate_homs(y.group(), aut.group, config.hom_bound);
    for (const VGroup& xs :
         enumerate_vgroup_structures(xg, q, config.structure_bound)) {
      if (!budget_left()) break;
      for (const GroupHom& ah : actions) {
        if (!budget_left()) break;
        std::vector<std::vector<int>> phi;
        phi.reserve(y.size());
        for (int v = 0; v < y.size(); ++v) phi.push_back(aut.perms[ah.map[v]]);
        GroupAction action = GroupAction::make(y.group(), xg, std::move(phi));
        for (const SplitExtensionStructure& split :
             enumerate_split_structures(action, xs, y, config.split_bound)) {
          if (!budget_left()) break;
          const VGroup& total = *split.total;
          for (const FiniteGroup& zg : config.pullback_groups) {
            if (!budget_left()) break;
            std::vector<GroupHom> homs =
                enumerate_homs(zg, y.group(), config.hom_bound);
            FiniteGroup pg = FiniteGroup::direct_product(zg, total.group());
            for (const VGroup& zs :
                 enumerate_vgroup_structures(zg, q, config.structure_bound)) {
              if (!budget_left()) break;
              for (const GroupHom& h : homs) {
                if (!budget_left()) break;
                bool vhom = true;
                for (int zz = 0; zz < zg.size() && vhom; ++zz)
                  vhom = q.leq(zs.delta(zz), y.delta(h.map[zz]));
                if (!vhom) continue;

                // pullback of the point along h : Z -> Y
                const int nt = total.size();
                std::vector<int> elems;
                for (int zz = 0; zz < zg.size(); ++zz)
                  for (int t = 0; t < nt; ++t)
                    if (h.map[zz] == split.sd.proj_y.map[t])
                      elems.push_back(zz * nt + t);
                Subgroup psub = subgroup_from_elements(pg, elems);
                std::vector<QElem> pd;
                pd.reserve(psub.embed.size());
                for (int parent : psub.embed)
                  pd.push_back(q.meet2(zs.delta(parent / nt),
                                       total.delta(parent % nt)));
                VGroup pv = VGroup::from_delta(psub.group, q, std::move(pd));

                std::vector<int> kern;
                std::vector<int> section(zg.size(), -1);
                std::vector<int> pos(pg.size(), -1);
                for (std::size_t i = 0; i < psub.embed.size(); ++i)
                  pos[psub.embed[i]] = static_cast<int>(i);
                for (std::size_t i = 0; i < psub.embed.size(); ++i)
                  if (psub.embed[i] / nt == 0) kern.push_back(static_cast<int>(i));
                for (int zz = 0; zz < zg.size(); ++zz)
                  section[zz] = pos[zz * nt + split.sd.inj_y.map[h.map[zz]]];

                SubVGroup kv = sub_vgroup(pv, kern);
                VGroupHom sec = make_vgroup_hom(zs, pv, section);
                bool strong = is_jointly_strongly_epi(kv.include, sec).strong;
                rep.record(strong == out.symmetric,
                           "pullback point disagrees with the verdict: kernel "
                           "of order " + std::to_string(xg.size()) +
                               ", total of order " + std::to_string(nt) +
                               ", pullback source of order " +
                               std::to_string(zg.size()) + ": strong=" +
                               (strong ? "true" : "false") + ", symmetric=" +
                               (out.symmetric ? "true" : "false"));
              }
            }
          }
        }
      }
    }
  }
  return out;
}

AutVGroup aut_vgroup(const VGroup& x, std::size_t bound) {
  if (!is_symmetric_vgroup(x))
    throw ValidationError("aut_vgroup: the structure must be symmetric");
  const Quantale& q = x.quantale();
  std::vector<std::vector<int>> perms;
  for (const auto& p : enumerate_automorphisms(x.group(), bound)) {
    bool preserves = true;
    for (int u = 0; u < x.size() && preserves; ++u)
      preserves = q.equal(x.delta(p[u]), x.delta(u));
    if (preserves) perms.push_back(p);
  }
  std::vector<int> id(x.size());
  std::iota(id.begin(), id.end(), 0);
  auto it = std::find(perms.begin(), perms.end(), id);
  if (it != perms.begin()) std::iter_swap(perms.begin(), it);

  const int n = static_cast<int>(perms.size());
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(cycle_label(p));
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> w(perms[i].size());
      for (std::size_t u = 0; u < w.size(); ++u) w[u] = perms[i][perms[j][u]];
      auto pos = std::find(perms.begin(), perms.end(), w);
      if (pos == perms.end())
        throw std::logic_error("internal: structure automorphisms not closed");
      add[i][j] = static_cast<int>(pos - perms.begin());
    }
  FiniteGroup ag = FiniteGroup::from_table(std::move(labels), std::move(add));

  std::vector<QElem> d;
  d.reserve(n);
  for (int i = 0; i < n; ++i) {
    QElem acc = q.top();
    for (int u = 0; u < x.size(); ++u)
      acc = q.meet2(acc, x.at(u, perms[i][u]));
    d.push_back(acc);
  }
  AutVGroup out{VGroup::from_delta(std::move(ag), q, std::move(d)),
                std::move(perms)};
  if (!is_symmetric_vgroup(out.aut))
    throw std::logic_error("internal: Aut structure is not symmetric");
  return out;
}

}  // namespace vglab
