#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vglab/rat.hpp"
#include "vglab/report.hpp"

namespace vglab {

enum class QuantaleKind {
  two,
  chain,
  lukasiewicz_chain,
  unit_interval,
  pplus,
  pmax,
  table,
  delta_grid,
};

enum class UnitTensor { min, product, lukasiewicz };
enum class GridTensor { min, conv };

/// Element of a table quantale, identified by its carrier index.
struct TableElem {
  int index = 0;
  friend bool operator==(const TableElem&, const TableElem&) = default;
};

/// Element of a grid distribution quantale: a monotone profile of values in
/// [0,1] over the threshold grid {0, h, ..., Nh, saturation}.
using DistProfile = std::vector<Rat>;

/// One element of some quantale. Which alternative is live depends on the
/// quantale kind; mixing elements across quantales is a caller error.
using QElem = std::variant<Rat, TableElem, DistProfile>;

struct TableSpec {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;    // leq[i][j] means e_i <= e_j
  std::vector<std::vector<int>> tensor;  // tensor[i][j] = index of e_i (x) e_j
  int unit = 0;
  std::string name = "table";
};

/// Language-neutral description of a builtin quantale; the JSON layer and the
/// CLI --quantale flag both produce these.
struct QuantaleSpec {
  QuantaleKind kind = QuantaleKind::two;
  int n = 0;                                // chain length
  UnitTensor unit_tensor = UnitTensor::min; // unit_interval only
  Rat grid_h;                               // delta_grid only
  int grid_n = 0;
  GridTensor grid_tensor = GridTensor::min;
  TableSpec table;

  static QuantaleSpec two();
  static QuantaleSpec chain(int n);
  static QuantaleSpec lukasiewicz_chain(int n);
  static QuantaleSpec unit_interval(UnitTensor t);
  static QuantaleSpec pplus();
  static QuantaleSpec pmax();
  static QuantaleSpec delta_grid(Rat h, int n, GridTensor t);
  static QuantaleSpec from_table(TableSpec t);

  /// Parses the compact CLI syntax, e.g. "chain:3", "pplus",
  /// "unit_interval:product", "delta_grid:1/2:4:conv".
  static QuantaleSpec parse(std::string_view text);
};

namespace detail {
class QuantaleBackend;
}

/// A commutative unital quantale on one of the supported carriers.
///
/// The value is an immutable handle and is safe to share across threads.
/// All order reasoning must go through leq/join/meet: the extended half-line
/// carriers store the *reversed* order (bottom = inf, top = unit = 0), so
/// numeric comparisons on raw elements would be wrong for them.
class Quantale {
 public:
  const std::string& name() const;
  QuantaleKind kind() const;
  const QuantaleSpec& spec() const;

  bool leq(const QElem& a, const QElem& b) const;
  bool equal(const QElem& a, const QElem& b) const { return a == b; }
  QElem tensor(const QElem& a, const QElem& b) const;
  QElem unit() const;
  QElem bottom() const;
  QElem top() const;
  QElem join2(const QElem& a, const QElem& b) const;
  QElem meet2(const QElem& a, const QElem& b) const;
  /// Finite joins/meets only; empty input yields bottom resp. top.
  QElem join(std::span<const QElem> xs) const;
  QElem meet(std::span<const QElem> xs) const;

  bool has_hom() const;
  /// Residual: the largest v with v (x) a <= b. Only when has_hom().
  QElem hom(const QElem& a, const QElem& b) const;

  bool is_finite() const;
  const std::vector<QElem>& carrier() const;  // finite carriers only

  bool is_frame() const;       // tensor coincides with meet
  bool is_integral() const;    // unit == top
  bool is_optimistic() const;  // a (x) b = bot forces a = bot or b = bot
  bool approximate_carrier() const;
  bool non_degenerate() const { return !equal(bottom(), top()); }

  QElem parse_elem(std::string_view text) const;
  std::string format_elem(const QElem& e) const;

  /// Deterministic sample set for law checks: the full carrier when finite,
  /// otherwise distinguished elements plus seeded random ones.
  std::vector<QElem> sample_elems(std::size_t n, std::uint64_t seed) const;

  /// Same underlying quantale (same spec); used for carrier-compatibility
  /// preconditions across modules.
  bool same_as(const Quantale& other) const;

 private:
  friend Quantale make_quantale(const QuantaleSpec&);
  explicit Quantale(std::shared_ptr<const detail::QuantaleBackend> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::QuantaleBackend> impl_;
};

/// Builds a quantale from a descriptor. Table descriptors are fully verified
/// (lattice + quantale laws); a violation raises ValidationError naming the
/// law and a witness triple.
Quantale make_quantale(const QuantaleSpec& spec);

/// Checks associativity, commutativity, unit, join distributivity, bottom
/// absorption, lattice distributivity (the finite frame condition), the
/// residuation adjunction when hom is present, and that the is_frame /
/// is_integral / is_optimistic flags match the sampled behaviour.
LawReport check_quantale_laws(const Quantale& q, std::span<const QElem> samples);
LawReport check_quantale_laws(const Quantale& q);  // default samples

/// Order-preserving, tensor-lax, unit-lax map between quantales.
class LaxHom {
 public:
  LaxHom(Quantale source, Quantale target,
         std::function<QElem(const QElem&)> map, std::string name)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)),
        name_(std::move(name)) {}

  const Quantale& source() const { return source_; }
  const Quantale& target() const { return target_; }
  const std::string& name() const { return name_; }
  QElem operator()(const QElem& v) const { return map_(v); }

 private:
  Quantale source_, target_;
  std::function<QElem(const QElem&)> map_;
  std::string name_;
};

/// The canonical maps between `two` and a non-degenerate quantale V:
/// iota(top2) = k, tau(top2) = top, pessimist(v) = top2 iff v >= k, and,
/// on optimistic quantales only, optimist(v) = top2 iff v != bot.
struct BuiltinLaxHoms {
  LaxHom iota;
  LaxHom tau;
  LaxHom pessimist;
  std::optional<LaxHom> optimist;
};
BuiltinLaxHoms builtin_lax_homs(const Quantale& v);
/// Throws ValidationError when v is not optimistic.
LaxHom optimist_lax_hom(const Quantale& v);

LawReport check_lax_hom(const LaxHom& f, std::span<const QElem> samples);

/// Galois check: left(w) <= v iff w <= right(v) for all sampled pairs.
/// Preconditions: left : W -> V and right : V -> W over the same pair.
LawReport check_adjunction(const LaxHom& left, const LaxHom& right,
                           std::span<const QElem> samples_w,
                           std::span<const QElem> samples_v);

}  // namespace vglab
