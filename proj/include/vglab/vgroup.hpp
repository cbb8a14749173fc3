#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vglab/group.hpp"
#include "vglab/quantale.hpp"
#include "vglab/report.hpp"
#include "vglab/vrel.hpp"

namespace vglab {

/// A finite group with a compatible V-category structure, stored as the
/// one-variable profile delta(x) = a(0,x). The matrix is recovered as
/// a(x,y) = delta(y + (-x)).
///
/// Profile laws (together equivalent to "+ is a V-functor" on the derived
/// matrix):
///   delta(0) = top            (the standing k = top assumption),
///   delta(u) (x) delta(v) <= delta(u+v),
///   delta(g+u-g) = delta(u)   (conjugation invariance, which makes the
///                              left- and right-shift readings agree).
class VGroup {
 public:
  static VGroup from_delta(FiniteGroup g, Quantale q, std::vector<QElem> delta);
  static VGroup discrete(FiniteGroup g, const Quantale& q);
  static VGroup indiscrete(FiniteGroup g, const Quantale& q);

  const FiniteGroup& group() const { return g_; }
  const Quantale& quantale() const { return q_; }
  const QElem& delta(int x) const { return delta_[x]; }
  const std::vector<QElem>& profile() const { return delta_; }
  QElem at(int x, int y) const { return delta_[g_.sub(y, x)]; }
  int size() const { return g_.size(); }

  /// The derived matrix as a V-category on the group's labels.
  VCategory category() const;

  bool compatible_with(const VGroup& other) const {
    return q_.same_as(other.q_) && g_.same_table(other.g_);
  }

 private:
  VGroup(FiniteGroup g, Quantale q, std::vector<QElem> d)
      : g_(std::move(g)), q_(std::move(q)), delta_(std::move(d)) {}
  FiniteGroup g_;
  Quantale q_;
  std::vector<QElem> delta_;
};

/// True iff the profile satisfies all three profile laws; on failure the
/// witness names the violated law and instance.
bool validate_delta(const FiniteGroup& g, const Quantale& q,
                    const std::vector<QElem>& delta, std::string* witness);

struct MatrixValidation {
  bool valid = false;
  bool tensor_condition = false;  // + is a V-functor for the tensor square
  bool shift_condition = false;   // V-category and invariant by shifting
  std::string witness;
  std::vector<QElem> delta;  // extracted profile when valid
};

/// Checks both equivalent compatibility conditions on a matrix structure and
/// asserts that they agree; extracts delta(x) = a(0,x) on success.
MatrixValidation vgroup_validate_matrix(const FiniteGroup& g, const VCategory& a);

/// delta(x) = delta(-x) for all x; cross-checked against V-functoriality of
/// the inversion map on the derived matrix (the two must agree).
bool is_symmetric_vgroup(const VGroup& x);

/// coreflect: delta^(x) = delta(x) /\ delta(-x), the largest symmetric
/// structure below; reflect: the generated structure of
/// delta~(x) = delta(x) \/ delta(-x), the least symmetric one above.
VGroup symmetrize_vgroup(const VGroup& x, SymMode mode);

struct VGroupHom {
  VGroup source;
  VGroup target;
  GroupHom hom;
  int operator()(int x) const { return hom.map[x]; }
};

/// Verifies the group-hom laws and the one-point criterion
/// delta_X(x) <= delta_Y(f x) for all x (equivalent to V-functoriality).
VGroupHom make_vgroup_hom(const VGroup& x, const VGroup& y, std::vector<int> map);

VGroup product_vgroup(const VGroup& x, const VGroup& y);

struct SubVGroup {
  VGroup sub;
  VGroupHom include;
};
SubVGroup sub_vgroup(const VGroup& x, const std::vector<int>& elements);
SubVGroup kernel_vgroup(const VGroupHom& f);
SubVGroup equalizer_vgroup(const VGroupHom& f, const VGroupHom& g);

struct QuotientVGroup {
  VGroup quotient;
  VGroupHom projection;
};
/// Final structure along the canonical projection (fiberwise joins);
/// re-verified as a V-group.
QuotientVGroup quotient_vgroup(const VGroup& x, const std::vector<int>& normal);
QuotientVGroup coequalizer_vgroup(const VGroupHom& f, const VGroupHom& g);

VGroup change_of_base_vgroup(const LaxHom& phi, const VGroup& x);

/// Least valid profile above the seed (with top forced at 0): closes under
/// conjugation once, then iterates the superadditivity step to a fixpoint.
/// Precondition: integral or finite quantale.
VGroup generated_structure(const FiniteGroup& g, const Quantale& q,
                           std::vector<QElem> seed);

/// All compatible structures on g over a finite quantale, enumerated over
/// conjugacy-class representatives in carrier order.
std::vector<VGroup> enumerate_vgroup_structures(const FiniteGroup& g,
                                                const Quantale& q,
                                                std::size_t bound = 1000000);

/// A candidate structure on a semidirect product X x| Y together with the
/// outcome of the split-extension checks.
struct SplitExtensionStructure {
  SemidirectProduct sd;
  std::vector<QElem> delta;  // profile on X x| Y, indexed sd.pair(x,y)
  bool lemma_ok = false;     // every phi_y is a V-functor on (X,a)
  bool valid = false;
  bool is_tensor = false;
  bool is_lex = false;
  std::string witness;
  std::optional<VGroup> total;  // present iff valid
};

/// Tensor structure a (x) b; valid iff (x,y) -> (phi_y(x), y) is a
/// V-functor on the tensor square. The flag is cross-checked against direct
/// validation of the structure (the two characterizations must agree).
SplitExtensionStructure semidirect_tensor(const GroupAction& phi,
                                          const VGroup& x, const VGroup& y);

/// Lexicographic structure: a(x,x') when y = y', else b(y,y'); valid iff
/// b(y,0) (x) b(0,y) <= a(x,0) for all x and all y != 0. Cross-checked as
/// for the tensor.
SplitExtensionStructure semidirect_lex(const GroupAction& phi, const VGroup& x,
                                       const VGroup& y);

/// All profiles making the diagram a split extension: the kernel fiber
/// carries the initial structure, the section fiber is forced, remaining
/// conjugacy classes are enumerated over the finite carrier.
std::vector<SplitExtensionStructure> enumerate_split_structures(
    const GroupAction& phi, const VGroup& x, const VGroup& y,
    std::size_t bound = 100000);

struct EpiMonoReport {
  bool mono = false;
  bool epi = false;
  bool regular_mono = false;
  bool regular_epi = false;
  bool proper = false;
  bool open = false;
};
EpiMonoReport epi_mono_report(const VGroupHom& f);

struct JointlyStrongReport {
  bool strong = false;
  bool generates = false;   // images generate the target group
  bool structure_ok = false;  // generated structure reaches the target one
  std::string witness;
};
/// f, g into a common target: strong iff the images generate the group and
/// the structure generated from the pushforward seeds equals the target
/// structure (a strictly smaller generated structure factors the pair
/// through a proper monomorphism on the same carrier).
JointlyStrongReport is_jointly_strongly_epi(const VGroupHom& f,
                                            const VGroupHom& g);

struct StronglyUnitalReport {
  bool necessary_condition = true;
  int witness_y = -1;
  std::string witness;
  // values of the constructed counterexample point, when the condition fails
  QElem lhs, rhs;      // b(0,y) and b(y,0) (x) b(0,y)
  QElem c_value, d_value;  // generated vs product structure at ((0,0),(0,y))
  bool counterexample_matches = false;  // c == rhs and c != d
};
/// Checks b(0,y) = b(y,0) (x) b(0,y) for every y; on the first failure
/// builds the point over the generated subgroup and compares the generated
/// structure against the product structure at the failing element.
StronglyUnitalReport strongly_unital_check(const VGroup& y);

struct PointSearchConfig {
  std::vector<FiniteGroup> kernel_groups;
  std::vector<FiniteGroup> pullback_groups;
  std::size_t structure_bound = 4096;    // per-group structure enumeration cap
  std::size_t split_bound = 4096;        // split-structure enumeration cap
  std::size_t max_strong_checks = 64;    // total budget for the search
  std::size_t hom_bound = 100000;
  static PointSearchConfig defaults();
};

struct ProtomodularReport {
  bool symmetric = false;
  LawReport point_search;  // stably-strong checks over enumerable points
};
/// Frame quantales only. The verdict is the symmetry check; the point search
/// pulls enumerated split extensions back along enumerated homomorphisms and
/// tests each resulting point for strength; every tested instance must agree
/// with the verdict.
ProtomodularReport protomodular_object_check(const VGroup& y,
                                             const PointSearchConfig& config);

/// The group of structure-preserving group automorphisms with the structure
/// [f,g] = meet_x a(f x, g x) inherited from the internal hom. Requires a
/// symmetric input; the output is again a symmetric V-group.
struct AutVGroup {
  VGroup aut;
  std::vector<std::vector<int>> perms;  // element i acts as perms[i]
};
AutVGroup aut_vgroup(const VGroup& x, std::size_t bound = 1000000);

}  // namespace vglab
