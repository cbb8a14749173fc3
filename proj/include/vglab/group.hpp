#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace vglab {

/// Finite group as a verified Cayley table. Elements are indices into the
/// label list and the identity is always index 0.
class FiniteGroup {
 public:
  FiniteGroup() = default;  // empty placeholder; build through the factories
  static FiniteGroup from_table(std::vector<std::string> labels,
                                std::vector<std::vector<int>> add);
  static FiniteGroup cyclic(int n);
  static FiniteGroup klein();
  static FiniteGroup symmetric3();
  static FiniteGroup dihedral(int n);  // order 2n, n >= 1
  static FiniteGroup trivial();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int size() const { return static_cast<int>(labels_.size()); }
  int add(int x, int y) const { return add_[x][y]; }
  int inv(int x) const { return inv_[x]; }
  int zero() const { return 0; }
  int sub(int x, int y) const { return add_[x][inv_[y]]; }  // x + (-y)
  int conjugate(int g, int x) const { return add_[add_[g][x]][inv_[g]]; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return add_; }
  bool same_table(const FiniteGroup& other) const {
    return add_ == other.add_;
  }
  bool is_abelian() const;
  /// Partition into conjugacy classes, each sorted, classes ordered by their
  /// least member; the class of 0 comes first.
  std::vector<std::vector<int>> conjugacy_classes() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> add_;
  std::vector<int> inv_;
};

struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

/// Verifies f(x+y) = f(x)+f(y); f(0) = 0 follows but is checked as well.
GroupHom make_group_hom(FiniteGroup source, FiniteGroup target,
                        std::vector<int> map);

struct KernelImage {
  std::vector<int> kernel;  // sorted indices in the source
  std::vector<int> image;   // sorted indices in the target
  bool injective = false;
  bool surjective = false;
};
KernelImage hom_kernel_image(const GroupHom& f);

/// Least subset containing gens and 0, closed under + and inverse; sorted.
std::vector<int> subgroup_generated(const FiniteGroup& g,
                                    const std::vector<int>& gens);

/// A subgroup presented as a group of its own plus the embedding of its
/// elements into the parent. Element 0 of the subgroup is the identity.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> embed;  // embed[i] = parent index of subgroup element i
  GroupHom include;        // the embedding as a verified homomorphism
};
Subgroup subgroup_from_elements(const FiniteGroup& g,
                                const std::vector<int>& elements);

bool is_normal(const FiniteGroup& g, const std::vector<int>& sub,
               std::string* witness = nullptr);

/// Least normal subgroup containing the given elements.
std::vector<int> normal_closure(const FiniteGroup& g,
                                const std::vector<int>& elements);

struct QuotientGroup {
  FiniteGroup group;
  GroupHom projection;
  std::vector<std::vector<int>> cosets;  // cosets[c] = parent indices
};
QuotientGroup quotient_group(const FiniteGroup& g,
                             const std::vector<int>& normal_subgroup);

/// A group action by automorphisms: one permutation of the acted carrier per
/// acting element, with phi_0 = id and phi_{y+y'} = phi_y . phi_{y'}.
class GroupAction {
 public:
  GroupAction() = default;  // empty placeholder; build through make()
  static GroupAction make(FiniteGroup by, FiniteGroup on,
                          std::vector<std::vector<int>> phi);
  static GroupAction trivial(const FiniteGroup& by, const FiniteGroup& on);

  const FiniteGroup& acting() const { return by_; }
  const FiniteGroup& acted() const { return on_; }
  int apply(int y, int x) const { return phi_[y][x]; }
  const std::vector<int>& perm(int y) const { return phi_[y]; }

 private:
  FiniteGroup by_, on_;
  std::vector<std::vector<int>> phi_;
};

/// Semidirect product X x| Y for an action of Y on X, with injections,
/// the split projection onto Y and its section. Pairs are indexed
/// x * |Y| + y so that the identity (0,0) lands at index 0.
struct SemidirectProduct {
  FiniteGroup group;
  GroupAction action;
  GroupHom inj_x;   // x -> (x,0), the kernel of proj_y
  GroupHom inj_y;   // y -> (0,y), the section
  GroupHom proj_y;  // (x,y) -> y
  int pair(int x, int y) const { return x * action.acting().size() + y; }
  int first(int p) const { return p / action.acting().size(); }
  int second(int p) const { return p % action.acting().size(); }
};
SemidirectProduct semidirect_product_group(const GroupAction& phi);

/// Complete hom enumeration via generator images; the search space
/// |H|^#generators must stay within bound. Deterministic order.
std::vector<GroupHom> enumerate_homs(const FiniteGroup& g, const FiniteGroup& h,
                                     std::size_t bound = 1000000);
std::vector<std::vector<int>> enumerate_automorphisms(const FiniteGroup& g,
                                                      std::size_t bound = 1000000);

/// Aut(G) as a group under composition (table[f][g] = f after g);
/// the identity automorphism is element 0.
struct AutomorphismGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> perms;
};
AutomorphismGroup automorphism_group(const FiniteGroup& g,
                                     std::size_t bound = 1000000);

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                   std::size_t bound = 1000000);

}  // namespace vglab
