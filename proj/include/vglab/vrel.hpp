#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vglab/quantale.hpp"

namespace vglab {

/// Ordered list of element labels. All exhaustive loops iterate in carrier
/// order, which makes every report and witness deterministic.
using Carrier = std::vector<std::string>;

/// A V-relation X -/-> Y: a value matrix over a quantale, row-indexed by the
/// source carrier. Immutable after construction.
class VRel {
 public:
  VRel(Quantale q, Carrier source, Carrier target, std::vector<QElem> entries);

  static VRel identity(const Quantale& q, const Carrier& x);
  static VRel constant(const Quantale& q, const Carrier& source,
                       const Carrier& target, const QElem& value);
  /// The map f as a V-relation: k on the graph of f, bottom elsewhere.
  static VRel from_map(const Quantale& q, const Carrier& source,
                       const Carrier& target, const std::vector<std::size_t>& f);
  static VRel build(const Quantale& q, const Carrier& source,
                    const Carrier& target,
                    const std::function<QElem(std::size_t, std::size_t)>& f);

  const Quantale& quantale() const { return q_; }
  const Carrier& source() const { return src_; }
  const Carrier& target() const { return tgt_; }
  std::size_t rows() const { return src_.size(); }
  std::size_t cols() const { return tgt_.size(); }
  const QElem& at(std::size_t i, std::size_t j) const {
    return m_[i * tgt_.size() + j];
  }
  const std::vector<QElem>& entries() const { return m_; }
  bool is_endo() const { return src_ == tgt_; }

 private:
  Quantale q_;
  Carrier src_, tgt_;
  std::vector<QElem> m_;
};

/// Relational composition: (compose(r, s))(x, z) = join_y r(x,y) (x) s(y,z).
/// In diagrammatic order r is applied first (this is s . r).
VRel compose(const VRel& r, const VRel& s);
VRel opposite(const VRel& r);
bool vrel_leq(const VRel& a, const VRel& b);
bool vrel_equal(const VRel& a, const VRel& b);
VRel vrel_join(const VRel& a, const VRel& b);
VRel vrel_meet(const VRel& a, const VRel& b);

struct VCatReport {
  bool reflexive = true;
  bool transitive = true;
  std::string reflexivity_witness;
  std::string transitivity_witness;
  bool ok() const { return reflexive && transitive; }
};

/// Exhaustive reflexivity/transitivity check of an endo-relation.
VCatReport check_vcategory(const VRel& a);

/// A V-category: carrier plus a reflexive and transitive endo-relation.
class VCategory {
 public:
  /// Validating constructor; throws ValidationError with the failing witness.
  static VCategory make(VRel a);
  /// For structures that are categories by construction; still verified, but
  /// a failure is reported as an internal logic error.
  static VCategory assume(VRel a);

  const VRel& rel() const { return a_; }
  const Quantale& quantale() const { return a_.quantale(); }
  const Carrier& carrier() const { return a_.source(); }
  std::size_t size() const { return a_.rows(); }
  const QElem& at(std::size_t i, std::size_t j) const { return a_.at(i, j); }

 private:
  explicit VCategory(VRel a) : a_(std::move(a)) {}
  VRel a_;
};

VCategory discrete_category(const Quantale& q, const Carrier& x);
VCategory indiscrete_category(const Quantale& q, const Carrier& x);
/// The unit V-category I = ({*}, k).
VCategory unit_category(const Quantale& q);

struct VFunctorCheck {
  bool ok = true;
  std::string witness;
};

/// a(x,x') <= b(f x, f x') for all pairs; first failing pair as witness.
VFunctorCheck is_vfunctor(const std::vector<std::size_t>& f, const VCategory& a,
                          const VCategory& b);

struct VFunctor {
  VCategory source;
  VCategory target;
  std::vector<std::size_t> map;
};
VFunctor make_vfunctor(VCategory source, VCategory target,
                       std::vector<std::size_t> map);

/// Least V-category above a reflexive V-graph, by iterated squaring to a
/// fixpoint. Preconditions: g reflexive, and the quantale integral or finite
/// (termination); exceeding the iteration bound raises a diagnostic.
VCategory transitive_closure(const VRel& g);

enum class SymMode { coreflect, reflect };

/// coreflect: largest symmetric structure below a (pointwise meet with the
/// opposite); reflect: least symmetric V-category above a (closure of the
/// pointwise join). reflect inherits the transitive_closure preconditions.
VCategory symmetrize(const VCategory& a, SymMode mode);

/// Largest structure on X making every f_i : X -> (Y_i, b_i) a V-functor:
/// the pointwise meet of the pulled-back structures.
VCategory initial_structure(
    const Carrier& x,
    const std::vector<std::pair<std::vector<std::size_t>, VCategory>>& maps);

struct FinalStructureResult {
  VRel graph;
  VCatReport report;
  std::optional<VCategory> category;  // present iff the graph is transitive
};

/// Least structure on Y making a surjection f : (X,a) -> Y a V-functor
/// (fiberwise joins). Plain V-categories are not guaranteed transitive here,
/// so the V-graph is returned together with its transitivity report.
FinalStructureResult final_structure_surjection(const std::vector<std::size_t>& f,
                                                const VCategory& a,
                                                const Carrier& y);

VCategory tensor_cat(const VCategory& a, const VCategory& b);
VCategory cartesian_cat(const VCategory& a, const VCategory& b);

/// All V-functors a -> b in lexicographic order of their image tuples.
std::vector<std::vector<std::size_t>> enumerate_vfunctors(const VCategory& a,
                                                          const VCategory& b,
                                                          std::size_t bound);

/// [a,b]: carrier = all V-functors a -> b, structure [f,g] = meet_x b(fx,gx).
VCategory internal_hom(const VCategory& a, const VCategory& b,
                       std::size_t bound = 1000000);

struct ProperOpenReport {
  bool proper = true;
  bool open = true;
  std::string proper_witness;
  std::string open_witness;
};

/// proper:  b(f x, y) = join over the fiber of y of a(x, -);
/// open:    b(y, f x) = join over the fiber of y of a(-, x).
ProperOpenReport proper_open_report(const VFunctor& f);

struct RegularityReport {
  bool symmetric = false;
  bool regular = false;
  bool difunctional = false;
  bool positive = false;
  bool all_equal() const {
    return symmetric == regular && regular == difunctional &&
           difunctional == positive;
  }
};

/// The four equivalent regularity conditions, each evaluated independently;
/// positivity is witnessed by b := a when the structure is symmetric.
RegularityReport regularity_report(const VCategory& a);

/// Post-composition with a lax homomorphism; the re-checked result lives over
/// the target quantale.
VCategory change_of_base_cat(const LaxHom& phi, const VCategory& a);

/// Composite labels for product carriers: "(x,y)".
Carrier product_carrier(const Carrier& x, const Carrier& y);

}  // namespace vglab
