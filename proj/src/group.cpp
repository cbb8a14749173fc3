#include "vglab/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "vglab/error.hpp"

namespace vglab {

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    std::vector<std::vector<int>> add) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw ValidationError("group: empty carrier");
  if (static_cast<int>(add.size()) != n)
    throw ValidationError("group: table size does not match carrier");
  for (const auto& row : add) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("group: table size does not match carrier");
    for (int v : row)
      if (v < 0 || v >= n)
        throw ValidationError("group: table entry out of range");
  }
  for (int x = 0; x < n; ++x)
    if (add[0][x] != x || add[x][0] != x)
      throw ValidationError("group: index 0 is not an identity (witness " +
                            labels[x] + ")");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (add[add[x][y]][z] != add[x][add[y][z]])
          throw ValidationError("group: associativity fails at (" + labels[x] +
                                "," + labels[y] + "," + labels[z] + ")");
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (add[x][y] == 0 && add[y][x] == 0) {
        inv[x] = y;
        break;
      }
    if (inv[x] < 0)
      throw ValidationError("group: no inverse for " + labels[x]);
  }
  FiniteGroup g;
  g.labels_ = std::move(labels);
  g.add_ = std::move(add);
  g.inv_ = std::move(inv);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group needs n >= 1");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) add[i][j] = (i + j) % n;
  }
  return from_table(std::move(labels), std::move(add));
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::klein() {
  return direct_product(cyclic(2), cyclic(2));
}

namespace {

std::vector<int> compose_perm(const std::vector<int>& f,
                              const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

std::string perm_label(const std::vector<int>& p) {
  // cycle notation on points 0..n-1
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

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens) {
  // close the generating set under composition, breadth-first from identity
  std::size_t pts = gens.front().size();
  std::vector<int> id(pts);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems = {id};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      std::vector<int> w = compose_perm(g, elems[head]);
      if (std::find(elems.begin(), elems.end(), w) == elems.end())
        elems.push_back(std::move(w));
    }
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> labels;
  for (const auto& e : elems) labels.push_back(perm_label(e));
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> w = compose_perm(elems[i], elems[j]);
      add[i][j] = static_cast<int>(
          std::find(elems.begin(), elems.end(), w) - elems.begin());
    }
  return FiniteGroup::from_table(std::move(labels), std::move(add));
}

}  // namespace

FiniteGroup FiniteGroup::symmetric3() {
  return group_from_permutations({{1, 0, 2}, {1, 2, 0}});
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw ValidationError("dihedral group needs n >= 1");
  if (n == 1) return cyclic(2);
  if (n == 2) return klein();
  // rotation and reflection acting on n points
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return group_from_permutations({rot, refl});
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  const int na = a.size(), nb = b.size();
  std::vector<std::string> labels;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  std::vector<std::vector<int>> add(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j)
      add[i][j] = a.add(i / nb, j / nb) * nb + b.add(i % nb, j % nb);
  return from_table(std::move(labels), std::move(add));
}

bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (add_[x][y] != add_[y][x]) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(size(), false);
  for (int x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (int g = 0; g < size(); ++g) cls.insert(conjugate(g, x));
    std::vector<int> v(cls.begin(), cls.end());
    for (int m : v) seen[m] = true;
    out.push_back(std::move(v));
  }
  return out;
}

GroupHom make_group_hom(FiniteGroup source, FiniteGroup target,
                        std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.size())
    throw ValidationError("group hom: map length does not match source");
  for (int v : map)
    if (v < 0 || v >= target.size())
      throw ValidationError("group hom: image out of range");
  if (map[0] != 0)
    throw ValidationError("group hom: identity is not preserved");
  for (int x = 0; x < source.size(); ++x)
    for (int y = 0; y < source.size(); ++y)
      if (map[source.add(x, y)] != target.add(map[x], map[y]))
        throw ValidationError("group hom: f(x+y) != f(x)+f(y) at (" +
                              source.label(x) + "," + source.label(y) + ")");
  return GroupHom{std::move(source), std::move(target), std::move(map)};
}

KernelImage hom_kernel_image(const GroupHom& f) {
  KernelImage out;
  std::set<int> image;
  for (int x = 0; x < f.source.size(); ++x) {
    if (f.map[x] == 0) out.kernel.push_back(x);
    image.insert(f.map[x]);
  }
  out.image.assign(image.begin(), image.end());
  out.injective = out.kernel.size() == 1;
  out.surjective = static_cast<int>(out.image.size()) == f.target.size();
  return out;
}

std::vector<int> subgroup_generated(const FiniteGroup& g,
                                    const std::vector<int>& gens) {
  std::set<int> s = {0};
  for (int x : gens) {
    if (x < 0 || x >= g.size())
      throw ValidationError("subgroup_generated: element out of range");
    s.insert(x);
    s.insert(g.inv(x));
  }
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(g.add(a, b)).second) grown = true;
  }
  return {s.begin(), s.end()};
}

Subgroup subgroup_from_elements(const FiniteGroup& g,
                                const std::vector<int>& elements) {
  std::vector<int> embed = elements;
  std::sort(embed.begin(), embed.end());
  if (embed.empty() || embed.front() != 0)
    throw ValidationError("subgroup: identity missing");
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < embed.size(); ++i) pos[embed[i]] = static_cast<int>(i);
  const int n = static_cast<int>(embed.size());
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(g.label(embed[i]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = pos[g.add(embed[i], embed[j])];
      if (v < 0)
        throw ValidationError("subgroup: set is not closed under + (witness " +
                              g.label(embed[i]) + "+" + g.label(embed[j]) + ")");
      add[i][j] = v;
    }
  Subgroup out{FiniteGroup::from_table(std::move(labels), std::move(add)),
               embed,
               GroupHom{}};
  out.include = make_group_hom(out.group, g, embed);
  return out;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& sub,
               std::string* witness) {
  std::vector<bool> in(g.size(), false);
  for (int x : sub) in[x] = true;
  for (int n : sub)
    for (int h = 0; h < g.size(); ++h) {
      int c = g.conjugate(h, n);
      if (!in[c]) {
        if (witness)
          *witness = g.label(h) + " + " + g.label(n) + " - " + g.label(h) +
                     " = " + g.label(c) + " is outside the subgroup";
        return false;
      }
    }
  return true;
}

std::vector<int> normal_closure(const FiniteGroup& g,
                                const std::vector<int>& elements) {
  std::vector<int> gens;
  for (int x : elements)
    for (int h = 0; h < g.size(); ++h) gens.push_back(g.conjugate(h, x));
  std::vector<int> sub = subgroup_generated(g, gens);
  while (!is_normal(g, sub)) {  // conjugates of products may still be missing
    std::vector<int> more;
    for (int x : sub)
      for (int h = 0; h < g.size(); ++h) more.push_back(g.conjugate(h, x));
    sub = subgroup_generated(g, more);
  }
  return sub;
}

QuotientGroup quotient_group(const FiniteGroup& g,
                             const std::vector<int>& normal_subgroup) {
  std::string w;
  std::vector<int> sub = subgroup_generated(g, normal_subgroup);
  if (sub != [&] {
        std::vector<int> s = normal_subgroup;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty() || s.front() != 0) s.insert(s.begin(), 0);
        return s;
      }())
    throw ValidationError("quotient: the given set is not a subgroup");
  if (!is_normal(g, sub, &w))
    throw ValidationError("quotient: subgroup is not normal: " + w);

  std::vector<int> coset_of(g.size(), -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < g.size(); ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> c;
    for (int n : sub) c.push_back(g.add(x, n));
    std::sort(c.begin(), c.end());
    int idx = static_cast<int>(cosets.size());
    for (int m : c) coset_of[m] = idx;
    cosets.push_back(std::move(c));
  }
  const int n = static_cast<int>(cosets.size());
  std::vector<std::string> labels;
  for (const auto& c : cosets) labels.push_back("[" + g.label(c.front()) + "]");
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      add[i][j] = coset_of[g.add(cosets[i].front(), cosets[j].front())];
  QuotientGroup out;
  out.group = FiniteGroup::from_table(std::move(labels), std::move(add));
  out.projection = make_group_hom(g, out.group, coset_of);
  out.cosets = std::move(cosets);
  return out;
}

GroupAction GroupAction::make(FiniteGroup by, FiniteGroup on,
                              std::vector<std::vector<int>> phi) {
  if (static_cast<int>(phi.size()) != by.size())
    throw ValidationError("action: one permutation per acting element required");
  for (const auto& p : phi) {
    if (static_cast<int>(p.size()) != on.size())
      throw ValidationError("action: permutation length mismatch");
    std::vector<bool> seen(on.size(), false);
    for (int v : p) {
      if (v < 0 || v >= on.size() || seen[v])
        throw ValidationError("action: table row is not a permutation");
      seen[v] = true;
    }
  }
  for (int x = 0; x < on.size(); ++x)
    if (phi[0][x] != x)
      throw ValidationError("action: phi_0 is not the identity");
  for (int y = 0; y < by.size(); ++y) {
    // each phi_y must be a group automorphism of the acted group
    for (int a = 0; a < on.size(); ++a)
      for (int b = 0; b < on.size(); ++b)
        if (phi[y][on.add(a, b)] != on.add(phi[y][a], phi[y][b]))
          throw ValidationError("action: phi_" + by.label(y) +
                                " is not an automorphism (witness " +
                                on.label(a) + "," + on.label(b) + ")");
  }
  for (int y = 0; y < by.size(); ++y)
    for (int z = 0; z < by.size(); ++z)
      for (int x = 0; x < on.size(); ++x)
        if (phi[by.add(y, z)][x] != phi[y][phi[z][x]])
          throw ValidationError("action: phi_{y+z} != phi_y . phi_z at (" +
                                by.label(y) + "," + by.label(z) + "," +
                                on.label(x) + ")");
  GroupAction out;
  out.by_ = std::move(by);
  out.on_ = std::move(on);
  out.phi_ = std::move(phi);
  return out;
}

GroupAction GroupAction::trivial(const FiniteGroup& by, const FiniteGroup& on) {
  std::vector<int> id(on.size());
  std::iota(id.begin(), id.end(), 0);
  return make(by, on, std::vector<std::vector<int>>(by.size(), id));
}

SemidirectProduct semidirect_product_group(const GroupAction& phi) {
  const FiniteGroup& X = phi.acted();
  const FiniteGroup& Y = phi.acting();
  const int nx = X.size(), ny = Y.size();
  std::vector<std::string> labels;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      labels.push_back("(" + X.label(x) + "," + Y.label(y) + ")");
  std::vector<std::vector<int>> add(nx * ny, std::vector<int>(nx * ny));
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      for (int x2 = 0; x2 < nx; ++x2)
        for (int y2 = 0; y2 < ny; ++y2)
          add[x * ny + y][x2 * ny + y2] =
              X.add(x, phi.apply(y, x2)) * ny + Y.add(y, y2);
  SemidirectProduct out;
  out.group = FiniteGroup::from_table(std::move(labels), std::move(add));
  out.action = phi;
  std::vector<int> ix(nx), iy(ny), py(nx * ny);
  for (int x = 0; x < nx; ++x) ix[x] = x * ny;
  for (int y = 0; y < ny; ++y) iy[y] = y;
  for (int p = 0; p < nx * ny; ++p) py[p] = p % ny;
  out.inj_x = make_group_hom(X, out.group, ix);
  out.inj_y = make_group_hom(Y, out.group, iy);
  out.proj_y = make_group_hom(out.group, Y, py);
  return out;
}

namespace {

std::vector<int> minimal_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> span = {0};
  while (static_cast<int>(span.size()) < g.size()) {
    // first element outside the current span
    std::vector<bool> in(g.size(), false);
    for (int x : span) in[x] = true;
    for (int x = 0; x < g.size(); ++x)
      if (!in[x]) {
        gens.push_back(x);
        break;
      }
    span = subgroup_generated(g, gens);
  }
  return gens;
}

// express every element as a word over the generators, breadth-first
std::vector<std::vector<int>> generator_words(const FiniteGroup& g,
                                              const std::vector<int>& gens) {
  std::vector<std::vector<int>> words(g.size());
  std::vector<bool> known(g.size(), false);
  known[0] = true;
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        int y = g.add(x, gens[gi]);
        if (!known[y]) {
          known[y] = true;
          words[y] = words[x];
          words[y].push_back(static_cast<int>(gi));
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return words;
}

}  // namespace

std::vector<GroupHom> enumerate_homs(const FiniteGroup& g, const FiniteGroup& h,
                                     std::size_t bound) {
  std::vector<int> gens = minimal_generators(g);
  double space = std::pow(static_cast<double>(h.size()),
                          static_cast<double>(gens.size()));
  if (space > static_cast<double>(bound))
    throw ValidationError("enumerate_homs: search space exceeds bound");
  auto words = generator_words(g, gens);

  std::vector<GroupHom> out;
  std::vector<int> images(gens.size(), 0);
  auto build_and_check = [&]() {
    std::vector<int> f(g.size());
    for (int x = 0; x < g.size(); ++x) {
      int v = 0;
      for (int gi : words[x]) v = h.add(v, images[gi]);
      f[x] = v;
    }
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y)
        if (f[g.add(x, y)] != h.add(f[x], f[y])) return;
    out.push_back(GroupHom{g, h, std::move(f)});
  };
  if (gens.empty()) {
    build_and_check();
    return out;
  }
  while (true) {
    build_and_check();
    std::size_t d = 0;
    while (d < images.size() && images[d] + 1 == h.size()) images[d++] = 0;
    if (d == images.size()) break;
    ++images[d];
  }
  return out;
}

std::vector<std::vector<int>> enumerate_automorphisms(const FiniteGroup& g,
                                                      std::size_t bound) {
  std::vector<std::vector<int>> out;
  for (const GroupHom& f : enumerate_homs(g, g, bound)) {
    std::vector<bool> seen(g.size(), false);
    bool bij = true;
    for (int v : f.map) {
      if (seen[v]) {
        bij = false;
        break;
      }
      seen[v] = true;
    }
    if (bij) out.push_back(f.map);
  }
  return out;
}

AutomorphismGroup automorphism_group(const FiniteGroup& g, std::size_t bound) {
  std::vector<std::vector<int>> perms = enumerate_automorphisms(g, bound);
  std::vector<int> id(g.size());
  std::iota(id.begin(), id.end(), 0);
  // identity first, remaining automorphisms keep enumeration order
  auto it = std::find(perms.begin(), perms.end(), id);
  if (it != perms.begin()) std::iter_swap(perms.begin(), it);
  const int n = static_cast<int>(perms.size());
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(perm_label(p));
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> w = compose_perm(perms[i], perms[j]);
      auto pos = std::find(perms.begin(), perms.end(), w);
      if (pos == perms.end())
        throw std::logic_error("internal: automorphisms not closed");
      add[i][j] = static_cast<int>(pos - perms.begin());
    }
  AutomorphismGroup out;
  out.group = FiniteGroup::from_table(std::move(labels), std::move(add));
  out.perms = std::move(perms);
  return out;
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                   std::size_t bound) {
  if (a.size() != b.size()) return false;
  for (const GroupHom& f : enumerate_homs(a, b, bound)) {
    std::vector<bool> seen(b.size(), false);
    bool bij = true;
    for (int v : f.map) {
      if (seen[v]) {
        bij = false;
        break;
      }
      seen[v] = true;
    }
    if (bij) return true;
  }
  return false;
}

}  // namespace vglab
