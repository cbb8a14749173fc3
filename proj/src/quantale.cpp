#include "vglab/quantale.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "vglab/error.hpp"

namespace vglab {

namespace detail {

class QuantaleBackend {
 public:
  virtual ~QuantaleBackend() = default;
  virtual bool leq(const QElem&, const QElem&) const = 0;
  virtual QElem tensor(const QElem&, const QElem&) const = 0;
  virtual QElem unit() const = 0;
  virtual QElem bottom() const = 0;
  virtual QElem top() const = 0;
  virtual QElem join2(const QElem&, const QElem&) const = 0;
  virtual QElem meet2(const QElem&, const QElem&) const = 0;
  virtual bool has_hom() const { return false; }
  virtual QElem hom(const QElem&, const QElem&) const {
    throw ValidationError("quantale '" + spec_name + "' has no hom");
  }
  virtual bool is_finite() const = 0;
  virtual const std::vector<QElem>& carrier() const {
    throw ValidationError("quantale '" + spec_name + "' has an infinite carrier");
  }
  virtual bool frame_flag() const = 0;
  virtual bool optimistic_flag() const = 0;
  virtual bool approximate() const { return false; }
  virtual QElem parse_elem(std::string_view) const = 0;
  virtual std::string format_elem(const QElem&) const = 0;
  virtual std::vector<QElem> sample_elems(std::size_t, std::uint64_t) const = 0;

  std::string spec_name;
  QuantaleSpec spec;
};

namespace {

const Rat& as_rat(const QElem& e) {
  const Rat* r = std::get_if<Rat>(&e);
  if (!r) throw ValidationError("element does not belong to this quantale");
  return *r;
}

const DistProfile& as_profile(const QElem& e) {
  const DistProfile* p = std::get_if<DistProfile>(&e);
  if (!p) throw ValidationError("element does not belong to this quantale");
  return *p;
}

int as_table(const QElem& e, int size) {
  const TableElem* t = std::get_if<TableElem>(&e);
  if (!t || t->index < 0 || t->index >= size)
    throw ValidationError("element does not belong to this quantale");
  return t->index;
}

// --- finite rational chains: two, chain(n), lukasiewicz_chain(n) ----------

class ChainBackend final : public QuantaleBackend {
 public:
  ChainBackend(int n, bool lukasiewicz) : n_(n), luk_(lukasiewicz) {
    if (n < 2) throw ValidationError("chain quantale needs at least 2 elements");
    for (int i = 0; i < n; ++i) carrier_.emplace_back(Rat(i, n - 1));
  }

  bool leq(const QElem& a, const QElem& b) const override {
    return as_rat(a) <= as_rat(b);
  }
  QElem tensor(const QElem& a, const QElem& b) const override {
    const Rat &x = as_rat(a), &y = as_rat(b);
    if (!luk_) return rat_min(x, y);
    Rat s = x + y - Rat(1);
    return s < Rat(0) ? Rat(0) : s;
  }
  QElem unit() const override { return Rat(1); }
  QElem bottom() const override { return Rat(0); }
  QElem top() const override { return Rat(1); }
  QElem join2(const QElem& a, const QElem& b) const override {
    return rat_max(as_rat(a), as_rat(b));
  }
  QElem meet2(const QElem& a, const QElem& b) const override {
    return rat_min(as_rat(a), as_rat(b));
  }
  bool has_hom() const override { return true; }
  QElem hom(const QElem& a, const QElem& b) const override {
    const Rat &u = as_rat(a), &w = as_rat(b);
    if (!luk_) return u <= w ? Rat(1) : w;
    return rat_min(Rat(1), Rat(1) - u + w);
  }
  bool is_finite() const override { return true; }
  const std::vector<QElem>& carrier() const override { return carrier_; }
  bool frame_flag() const override { return !luk_ || n_ == 2; }
  bool optimistic_flag() const override { return !luk_ || n_ == 2; }
  QElem parse_elem(std::string_view t) const override {
    Rat r = Rat::parse(t);
    for (const QElem& e : carrier_)
      if (as_rat(e) == r) return e;
    throw ParseError("'" + std::string(t) + "' is not an element of " + spec_name);
  }
  std::string format_elem(const QElem& e) const override {
    return as_rat(e).str();
  }
  std::vector<QElem> sample_elems(std::size_t, std::uint64_t) const override {
    return carrier_;
  }

 private:
  int n_;
  bool luk_;
  std::vector<QElem> carrier_;
};

// --- unit interval over the rationals --------------------------------------

class UnitIntervalBackend final : public QuantaleBackend {
 public:
  explicit UnitIntervalBackend(UnitTensor t) : t_(t) {}

  bool leq(const QElem& a, const QElem& b) const override {
    return as_rat(a) <= as_rat(b);
  }
  QElem tensor(const QElem& a, const QElem& b) const override {
    const Rat &x = as_rat(a), &y = as_rat(b);
    switch (t_) {
      case UnitTensor::min: return rat_min(x, y);
      case UnitTensor::product: return x * y;
      case UnitTensor::lukasiewicz: {
        Rat s = x + y - Rat(1);
        return s < Rat(0) ? Rat(0) : s;
      }
    }
    throw std::logic_error("unreachable");
  }
  QElem unit() const override { return Rat(1); }
  QElem bottom() const override { return Rat(0); }
  QElem top() const override { return Rat(1); }
  QElem join2(const QElem& a, const QElem& b) const override {
    return rat_max(as_rat(a), as_rat(b));
  }
  QElem meet2(const QElem& a, const QElem& b) const override {
    return rat_min(as_rat(a), as_rat(b));
  }
  bool has_hom() const override { return true; }
  QElem hom(const QElem& a, const QElem& b) const override {
    const Rat &u = as_rat(a), &w = as_rat(b);
    switch (t_) {
      case UnitTensor::min: return u <= w ? Rat(1) : w;
      case UnitTensor::product:
        return u == Rat(0) ? Rat(1) : rat_min(Rat(1), w / u);
      case UnitTensor::lukasiewicz: return rat_min(Rat(1), Rat(1) - u + w);
    }
    throw std::logic_error("unreachable");
  }
  bool is_finite() const override { return false; }
  bool frame_flag() const override { return t_ == UnitTensor::min; }
  bool optimistic_flag() const override { return t_ != UnitTensor::lukasiewicz; }
  QElem parse_elem(std::string_view t) const override {
    Rat r = Rat::parse(t);
    if (r < Rat(0) || Rat(1) < r || r.is_inf())
      throw ParseError("'" + std::string(t) + "' is outside [0,1]");
    return r;
  }
  std::string format_elem(const QElem& e) const override {
    return as_rat(e).str();
  }
  std::vector<QElem> sample_elems(std::size_t n, std::uint64_t seed) const override {
    std::vector<QElem> out = {Rat(0), Rat(1), Rat(1, 2), Rat(1, 4), Rat(3, 4),
                              Rat(1, 3), Rat(2, 3), Rat(7, 10), Rat(3, 5)};
    std::mt19937_64 rng(seed);
    // denominator range grows with n so distinct values never run out
    long long qmax = 12 + static_cast<long long>(n / 2);
    while (out.size() < n) {
      long long q = 1 + static_cast<long long>(rng() % qmax);
      long long p = static_cast<long long>(rng() % (q + 1));
      Rat r(p, q);
      if (std::find(out.begin(), out.end(), QElem(r)) == out.end())
        out.emplace_back(r);
    }
    if (out.size() > n) out.resize(std::max<std::size_t>(n, 9));
    return out;
  }

 private:
  UnitTensor t_;
};

// --- extended half-line with reversed order: pplus, pmax -------------------
//
// bottom = inf, top = unit = 0, join = numeric min, meet = numeric max.

class HalfLineBackend final : public QuantaleBackend {
 public:
  explicit HalfLineBackend(bool use_max) : max_(use_max) {}

  bool leq(const QElem& a, const QElem& b) const override {
    return as_rat(a) >= as_rat(b);
  }
  QElem tensor(const QElem& a, const QElem& b) const override {
    const Rat &x = as_rat(a), &y = as_rat(b);
    return max_ ? rat_max(x, y) : x + y;
  }
  QElem unit() const override { return Rat(0); }
  QElem bottom() const override { return Rat::infinity(); }
  QElem top() const override { return Rat(0); }
  QElem join2(const QElem& a, const QElem& b) const override {
    return rat_min(as_rat(a), as_rat(b));
  }
  QElem meet2(const QElem& a, const QElem& b) const override {
    return rat_max(as_rat(a), as_rat(b));
  }
  bool has_hom() const override { return true; }
  QElem hom(const QElem& a, const QElem& b) const override {
    const Rat &u = as_rat(a), &w = as_rat(b);
    if (max_) return u >= w ? Rat(0) : w;
    return rat_monus(w, u);
  }
  bool is_finite() const override { return false; }
  bool frame_flag() const override { return max_; }
  bool optimistic_flag() const override { return true; }
  QElem parse_elem(std::string_view t) const override {
    Rat r = Rat::parse(t);
    if (!r.is_inf() && r < Rat(0))
      throw ParseError("'" + std::string(t) + "' is outside [0,inf]");
    return r;
  }
  std::string format_elem(const QElem& e) const override {
    return as_rat(e).str();
  }
  std::vector<QElem> sample_elems(std::size_t n, std::uint64_t seed) const override {
    std::vector<QElem> out = {Rat(0),       Rat(1),       Rat(2),
                              Rat(3),       Rat(5),       Rat(1, 2),
                              Rat(3, 2),    Rat(5, 2),    Rat::infinity()};
    std::mt19937_64 rng(seed);
    // numerator range grows with n so distinct values never run out
    long long pmax = 41 + static_cast<long long>(4 * n);
    while (out.size() < n) {
      long long q = 1 + static_cast<long long>(rng() % 8);
      long long p = static_cast<long long>(rng() % pmax);
      Rat r(p, q);
      if (std::find(out.begin(), out.end(), QElem(r)) == out.end())
        out.emplace_back(r);
    }
    if (out.size() > n) out.resize(std::max<std::size_t>(n, 9));
    return out;
  }

 private:
  bool max_;
};

// --- explicit finite table --------------------------------------------------

class TableBackend final : public QuantaleBackend {
 public:
  explicit TableBackend(const TableSpec& t) : t_(t) {
    const int n = static_cast<int>(t.elements.size());
    if (n == 0) throw ValidationError("table quantale: empty carrier");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && t.elements[i] == t.elements[j])
          throw ValidationError("table quantale: duplicate element name '" +
                                t.elements[i] + "'");
    if (static_cast<int>(t.leq.size()) != n ||
        static_cast<int>(t.tensor.size()) != n)
      throw ValidationError("table quantale: table sizes do not match carrier");
    for (int i = 0; i < n; ++i)
      if (static_cast<int>(t.leq[i].size()) != n ||
          static_cast<int>(t.tensor[i].size()) != n)
        throw ValidationError("table quantale: table sizes do not match carrier");
    if (t.unit < 0 || t.unit >= n)
      throw ValidationError("table quantale: unit index out of range");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (t.tensor[i][j] < 0 || t.tensor[i][j] >= n)
          throw ValidationError("table quantale: tensor entry out of range");

    verify_order();
    build_lattice();
    verify_quantale_laws();
    build_hom();
    frame_ = true;
    optimistic_ = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (t_.tensor[i][j] != meet_[i][j]) frame_ = false;
        if (t_.tensor[i][j] == bot_ && i != bot_ && j != bot_)
          optimistic_ = false;
      }
    for (int i = 0; i < n; ++i) carrier_.emplace_back(TableElem{i});
  }

  bool leq(const QElem& a, const QElem& b) const override {
    return t_.leq[idx(a)][idx(b)];
  }
  QElem tensor(const QElem& a, const QElem& b) const override {
    return TableElem{t_.tensor[idx(a)][idx(b)]};
  }
  QElem unit() const override { return TableElem{t_.unit}; }
  QElem bottom() const override { return TableElem{bot_}; }
  QElem top() const override { return TableElem{top_}; }
  QElem join2(const QElem& a, const QElem& b) const override {
    return TableElem{join_[idx(a)][idx(b)]};
  }
  QElem meet2(const QElem& a, const QElem& b) const override {
    return TableElem{meet_[idx(a)][idx(b)]};
  }
  bool has_hom() const override { return true; }
  QElem hom(const QElem& a, const QElem& b) const override {
    return TableElem{hom_[idx(a)][idx(b)]};
  }
  bool is_finite() const override { return true; }
  const std::vector<QElem>& carrier() const override { return carrier_; }
  bool frame_flag() const override { return frame_; }
  bool optimistic_flag() const override { return optimistic_; }
  QElem parse_elem(std::string_view name) const override {
    for (int i = 0; i < size(); ++i)
      if (t_.elements[i] == name) return TableElem{i};
    throw ParseError("'" + std::string(name) + "' is not an element of " +
                     spec_name);
  }
  std::string format_elem(const QElem& e) const override {
    return t_.elements[idx(e)];
  }
  std::vector<QElem> sample_elems(std::size_t, std::uint64_t) const override {
    return carrier_;
  }

 private:
  int size() const { return static_cast<int>(t_.elements.size()); }
  int idx(const QElem& e) const { return as_table(e, size()); }
  const std::string& nm(int i) const { return t_.elements[i]; }

  void verify_order() {
    const int n = size();
    for (int i = 0; i < n; ++i)
      if (!t_.leq[i][i])
        throw ValidationError("table quantale: leq not reflexive at " + nm(i));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && t_.leq[i][j] && t_.leq[j][i])
          throw ValidationError("table quantale: leq not antisymmetric at (" +
                                nm(i) + "," + nm(j) + ")");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (t_.leq[i][j] && t_.leq[j][k] && !t_.leq[i][k])
            throw ValidationError("table quantale: leq not transitive at (" +
                                  nm(i) + "," + nm(j) + "," + nm(k) + ")");
  }

  void build_lattice() {
    const int n = size();
    bot_ = top_ = -1;
    for (int i = 0; i < n; ++i) {
      bool is_bot = true, is_top = true;
      for (int j = 0; j < n; ++j) {
        is_bot = is_bot && t_.leq[i][j];
        is_top = is_top && t_.leq[j][i];
      }
      if (is_bot) bot_ = i;
      if (is_top) top_ = i;
    }
    if (bot_ < 0 || top_ < 0)
      throw ValidationError("table quantale: carrier is not a bounded lattice");
    join_.assign(n, std::vector<int>(n, -1));
    meet_.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int lub = -1, glb = -1;
        for (int c = 0; c < n; ++c) {
          if (t_.leq[i][c] && t_.leq[j][c] && (lub < 0 || t_.leq[c][lub]))
            lub = c;
          if (t_.leq[c][i] && t_.leq[c][j] && (glb < 0 || t_.leq[glb][c]))
            glb = c;
        }
        // candidates found greedily; confirm they really bound every other
        for (int c = 0; c < n; ++c) {
          if (t_.leq[i][c] && t_.leq[j][c] && !t_.leq[lub][c]) lub = -1;
          if (t_.leq[c][i] && t_.leq[c][j] && !t_.leq[c][glb]) glb = -1;
          if (lub < 0 || glb < 0) break;
        }
        if (lub < 0 || glb < 0)
          throw ValidationError("table quantale: no join/meet for (" + nm(i) +
                                "," + nm(j) + ")");
        join_[i][j] = lub;
        meet_[i][j] = glb;
      }
  }

  void verify_quantale_laws() {
    const int n = size();
    const auto& tn = t_.tensor;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (tn[i][j] != tn[j][i])
          throw ValidationError("table quantale: tensor not commutative at (" +
                                nm(i) + "," + nm(j) + ")");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (tn[tn[i][j]][k] != tn[i][tn[j][k]])
            throw ValidationError("table quantale: tensor not associative at (" +
                                  nm(i) + "," + nm(j) + "," + nm(k) + ")");
    for (int i = 0; i < n; ++i)
      if (tn[i][t_.unit] != i)
        throw ValidationError("table quantale: unit law fails at " + nm(i));
    for (int i = 0; i < n; ++i)
      if (tn[i][bot_] != bot_)
        throw ValidationError("table quantale: bottom not absorbing at " + nm(i));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (tn[i][join_[j][k]] != join_[tn[i][j]][tn[i][k]])
            throw ValidationError(
                "table quantale: tensor does not distribute over join at (" +
                nm(i) + "," + nm(j) + "," + nm(k) + ")");
  }

  void build_hom() {
    const int n = size();
    hom_.assign(n, std::vector<int>(n, -1));
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w) {
        int h = bot_;
        for (int v = 0; v < n; ++v)
          if (t_.leq[t_.tensor[v][u]][w]) h = join_[h][v];
        hom_[u][w] = h;
      }
  }

  TableSpec t_;
  int bot_ = 0, top_ = 0;
  bool frame_ = false, optimistic_ = false;
  std::vector<std::vector<int>> join_, meet_, hom_;
  std::vector<QElem> carrier_;
};

// --- grid approximation of the distribution quantale -----------------------
//
// Profiles live on {0, h, ..., Nh, saturation}; addition of grid points
// saturates at the top point, which keeps it associative. The convolution
// unit is the all-ones profile, so both grid tensors are integral.

class GridBackend final : public QuantaleBackend {
 public:
  GridBackend(Rat h, int n, GridTensor t) : h_(h), n_(n), t_(t) {
    if (h <= Rat(0) || h.is_inf())
      throw ValidationError("delta_grid: step h must be a positive rational");
    if (n < 1) throw ValidationError("delta_grid: N must be at least 1");
  }

  int points() const { return n_ + 2; }

  bool leq(const QElem& a, const QElem& b) const override {
    const DistProfile &x = check(a), &y = check(b);
    for (int i = 0; i < points(); ++i)
      if (x[i] > y[i]) return false;
    return true;
  }

  QElem tensor(const QElem& a, const QElem& b) const override {
    const DistProfile &x = check(a), &y = check(b);
    if (t_ == GridTensor::min) {
      DistProfile out(points());
      for (int i = 0; i < points(); ++i) out[i] = rat_min(x[i], y[i]);
      return out;
    }
    // by monotonicity the sup over i+j <= m is attained on i+j == m
    DistProfile out(points());
    for (int m = 0; m <= n_; ++m) {
      Rat best(0);
      for (int i = 0; i <= m; ++i) best = rat_max(best, x[i] * y[m - i]);
      out[m] = best;
    }
    out[n_ + 1] = x[n_ + 1] * y[n_ + 1];
    return out;
  }

  QElem unit() const override { return top(); }
  QElem bottom() const override { return DistProfile(points(), Rat(0)); }
  QElem top() const override { return DistProfile(points(), Rat(1)); }
  QElem join2(const QElem& a, const QElem& b) const override {
    const DistProfile &x = check(a), &y = check(b);
    DistProfile out(points());
    for (int i = 0; i < points(); ++i) out[i] = rat_max(x[i], y[i]);
    return out;
  }
  QElem meet2(const QElem& a, const QElem& b) const override {
    const DistProfile &x = check(a), &y = check(b);
    DistProfile out(points());
    for (int i = 0; i < points(); ++i) out[i] = rat_min(x[i], y[i]);
    return out;
  }
  bool is_finite() const override { return false; }
  bool frame_flag() const override { return t_ == GridTensor::min; }
  bool optimistic_flag() const override { return true; }
  bool approximate() const override { return true; }

  QElem parse_elem(std::string_view text) const override {
    DistProfile out;
    std::size_t start = 0;
    std::string s(text);
    while (start <= s.size()) {
      std::size_t end = s.find(';', start);
      if (end == std::string::npos) end = s.size();
      out.push_back(Rat::parse(std::string_view(s).substr(start, end - start)));
      start = end + 1;
      if (end == s.size()) break;
    }
    return checked(std::move(out));
  }

  std::string format_elem(const QElem& e) const override {
    const DistProfile& p = check(e);
    std::string out;
    for (int i = 0; i < points(); ++i) {
      if (i) out += ';';
      out += p[i].str();
    }
    return out;
  }

  std::vector<QElem> sample_elems(std::size_t n, std::uint64_t seed) const override {
    std::vector<QElem> out = {bottom(), top()};
    {
      DistProfile step(points(), Rat(1));
      step[0] = Rat(0);
      out.push_back(step);
    }
    std::mt19937_64 rng(seed);
    while (out.size() < n) {
      DistProfile p(points());
      Rat acc(0);
      for (int i = 0; i < points(); ++i) {
        long long q = 1 + static_cast<long long>(rng() % 4);
        long long num = static_cast<long long>(rng() % (q + 1));
        acc = rat_max(acc, Rat(num, q));
        p[i] = acc;
        if (acc > Rat(1)) p[i] = Rat(1);
      }
      if (std::find(out.begin(), out.end(), QElem(p)) == out.end())
        out.emplace_back(std::move(p));
    }
    return out;
  }

 private:
  const DistProfile& check(const QElem& e) const {
    const DistProfile& p = as_profile(e);
    if (static_cast<int>(p.size()) != points())
      throw ValidationError("grid profile has wrong length");
    return p;
  }
  DistProfile checked(DistProfile p) const {
    if (static_cast<int>(p.size()) != points())
      throw ParseError("grid profile needs " + std::to_string(points()) +
                       " values");
    Rat prev(0);
    for (const Rat& v : p) {
      if (v < Rat(0) || Rat(1) < v)
        throw ParseError("grid profile value outside [0,1]");
      if (v < prev) throw ParseError("grid profile is not monotone");
      prev = v;
    }
    return p;
  }

  Rat h_;
  int n_;
  GridTensor t_;
};

}  // namespace
}  // namespace detail

// --- QuantaleSpec -----------------------------------------------------------

QuantaleSpec QuantaleSpec::two() { return QuantaleSpec{}; }

QuantaleSpec QuantaleSpec::chain(int n) {
  QuantaleSpec s;
  s.kind = QuantaleKind::chain;
  s.n = n;
  return s;
}

QuantaleSpec QuantaleSpec::lukasiewicz_chain(int n) {
  QuantaleSpec s;
  s.kind = QuantaleKind::lukasiewicz_chain;
  s.n = n;
  return s;
}

QuantaleSpec QuantaleSpec::unit_interval(UnitTensor t) {
  QuantaleSpec s;
  s.kind = QuantaleKind::unit_interval;
  s.unit_tensor = t;
  return s;
}

QuantaleSpec QuantaleSpec::pplus() {
  QuantaleSpec s;
  s.kind = QuantaleKind::pplus;
  return s;
}

QuantaleSpec QuantaleSpec::pmax() {
  QuantaleSpec s;
  s.kind = QuantaleKind::pmax;
  return s;
}

QuantaleSpec QuantaleSpec::delta_grid(Rat h, int n, GridTensor t) {
  QuantaleSpec s;
  s.kind = QuantaleKind::delta_grid;
  s.grid_h = h;
  s.grid_n = n;
  s.grid_tensor = t;
  return s;
}

QuantaleSpec QuantaleSpec::from_table(TableSpec t) {
  QuantaleSpec s;
  s.kind = QuantaleKind::table;
  s.table = std::move(t);
  return s;
}

QuantaleSpec QuantaleSpec::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  auto want = [&](std::size_t n) {
    if (parts.size() != n)
      throw ParseError("bad quantale spec '" + std::string(text) + "'");
  };
  auto to_int = [&](const std::string& s) {
    try {
      return std::stoi(s);
    } catch (...) {
      throw ParseError("bad quantale spec '" + std::string(text) + "'");
    }
  };
  const std::string& head = parts[0];
  if (head == "two") {
    want(1);
    return two();
  }
  if (head == "chain") {
    want(2);
    return chain(to_int(parts[1]));
  }
  if (head == "lukasiewicz_chain") {
    want(2);
    return lukasiewicz_chain(to_int(parts[1]));
  }
  if (head == "pplus") {
    want(1);
    return pplus();
  }
  if (head == "pmax") {
    want(1);
    return pmax();
  }
  if (head == "unit_interval") {
    want(2);
    if (parts[1] == "min") return unit_interval(UnitTensor::min);
    if (parts[1] == "product") return unit_interval(UnitTensor::product);
    if (parts[1] == "lukasiewicz") return unit_interval(UnitTensor::lukasiewicz);
    throw ParseError("bad unit_interval tensor '" + parts[1] + "'");
  }
  if (head == "delta_grid") {
    want(4);
    GridTensor g;
    if (parts[3] == "min")
      g = GridTensor::min;
    else if (parts[3] == "conv")
      g = GridTensor::conv;
    else
      throw ParseError("bad delta_grid tensor '" + parts[3] + "'");
    return delta_grid(Rat::parse(parts[1]), to_int(parts[2]), g);
  }
  throw ParseError("unknown quantale '" + std::string(text) + "'");
}

// --- Quantale ---------------------------------------------------------------

namespace {

std::string spec_to_name(const QuantaleSpec& s) {
  switch (s.kind) {
    case QuantaleKind::two: return "two";
    case QuantaleKind::chain: return "chain:" + std::to_string(s.n);
    case QuantaleKind::lukasiewicz_chain:
      return "lukasiewicz_chain:" + std::to_string(s.n);
    case QuantaleKind::pplus: return "pplus";
    case QuantaleKind::pmax: return "pmax";
    case QuantaleKind::unit_interval:
      switch (s.unit_tensor) {
        case UnitTensor::min: return "unit_interval:min";
        case UnitTensor::product: return "unit_interval:product";
        case UnitTensor::lukasiewicz: return "unit_interval:lukasiewicz";
      }
      break;
    case QuantaleKind::table: return "table:" + s.table.name;
    case QuantaleKind::delta_grid:
      return "delta_grid:" + s.grid_h.str() + ":" + std::to_string(s.grid_n) +
             (s.grid_tensor == GridTensor::min ? ":min" : ":conv");
  }
  return "?";
}

}  // namespace

Quantale make_quantale(const QuantaleSpec& spec) {
  std::shared_ptr<detail::QuantaleBackend> b;
  switch (spec.kind) {
    case QuantaleKind::two:
      b = std::make_shared<detail::ChainBackend>(2, false);
      break;
    case QuantaleKind::chain:
      b = std::make_shared<detail::ChainBackend>(spec.n, false);
      break;
    case QuantaleKind::lukasiewicz_chain:
      b = std::make_shared<detail::ChainBackend>(spec.n, true);
      break;
    case QuantaleKind::unit_interval:
      b = std::make_shared<detail::UnitIntervalBackend>(spec.unit_tensor);
      break;
    case QuantaleKind::pplus:
      b = std::make_shared<detail::HalfLineBackend>(false);
      break;
    case QuantaleKind::pmax:
      b = std::make_shared<detail::HalfLineBackend>(true);
      break;
    case QuantaleKind::table:
      b = std::make_shared<detail::TableBackend>(spec.table);
      break;
    case QuantaleKind::delta_grid:
      b = std::make_shared<detail::GridBackend>(spec.grid_h, spec.grid_n,
                                                spec.grid_tensor);
      break;
  }
  b->spec = spec;
  b->spec_name = spec_to_name(spec);
  return Quantale(std::move(b));
}

const std::string& Quantale::name() const { return impl_->spec_name; }
QuantaleKind Quantale::kind() const { return impl_->spec.kind; }
const QuantaleSpec& Quantale::spec() const { return impl_->spec; }
bool Quantale::leq(const QElem& a, const QElem& b) const {
  return impl_->leq(a, b);
}
QElem Quantale::tensor(const QElem& a, const QElem& b) const {
  return impl_->tensor(a, b);
}
QElem Quantale::unit() const { return impl_->unit(); }
QElem Quantale::bottom() const { return impl_->bottom(); }
QElem Quantale::top() const { return impl_->top(); }
QElem Quantale::join2(const QElem& a, const QElem& b) const {
  return impl_->join2(a, b);
}
QElem Quantale::meet2(const QElem& a, const QElem& b) const {
  return impl_->meet2(a, b);
}

QElem Quantale::join(std::span<const QElem> xs) const {
  QElem acc = bottom();
  for (const QElem& x : xs) acc = join2(acc, x);
  return acc;
}

QElem Quantale::meet(std::span<const QElem> xs) const {
  QElem acc = top();
  for (const QElem& x : xs) acc = meet2(acc, x);
  return acc;
}

bool Quantale::has_hom() const { return impl_->has_hom(); }
QElem Quantale::hom(const QElem& a, const QElem& b) const {
  return impl_->hom(a, b);
}
bool Quantale::is_finite() const { return impl_->is_finite(); }
const std::vector<QElem>& Quantale::carrier() const { return impl_->carrier(); }
bool Quantale::is_frame() const { return impl_->frame_flag(); }
bool Quantale::is_integral() const { return equal(unit(), top()); }
bool Quantale::is_optimistic() const { return impl_->optimistic_flag(); }
bool Quantale::approximate_carrier() const { return impl_->approximate(); }
QElem Quantale::parse_elem(std::string_view text) const {
  return impl_->parse_elem(text);
}
std::string Quantale::format_elem(const QElem& e) const {
  return impl_->format_elem(e);
}
std::vector<QElem> Quantale::sample_elems(std::size_t n,
                                          std::uint64_t seed) const {
  return impl_->sample_elems(n, seed);
}
bool Quantale::same_as(const Quantale& other) const {
  if (impl_ == other.impl_) return true;
  return name() == other.name() &&
         (kind() != QuantaleKind::table ||
          (spec().table.leq == other.spec().table.leq &&
           spec().table.tensor == other.spec().table.tensor &&
           spec().table.unit == other.spec().table.unit));
}

// --- law checks -------------------------------------------------------------

LawReport check_quantale_laws(const Quantale& q, std::span<const QElem> ss) {
  auto t0 = std::chrono::steady_clock::now();
  LawReport rep;
  rep.id = "quantale_laws";
  rep.claim = "commutative unital quantale laws on " + q.name();
  auto fmt = [&](const QElem& e) { return q.format_elem(e); };

  for (const QElem& u : ss)
    for (const QElem& v : ss) {
      rep.record(q.equal(q.tensor(u, v), q.tensor(v, u)),
                 "commutativity at (" + fmt(u) + "," + fmt(v) + ")");
      for (const QElem& w : ss) {
        rep.record(q.equal(q.tensor(q.tensor(u, v), w),
                           q.tensor(u, q.tensor(v, w))),
                   "associativity at (" + fmt(u) + "," + fmt(v) + "," + fmt(w) +
                       ")");
        rep.record(q.equal(q.tensor(u, q.join2(v, w)),
                           q.join2(q.tensor(u, v), q.tensor(u, w))),
                   "join distributivity at (" + fmt(u) + "," + fmt(v) + "," +
                       fmt(w) + ")");
        // finite form of "joins distribute over meets" (V a frame as lattice)
        rep.record(q.equal(q.join2(u, q.meet2(v, w)),
                           q.meet2(q.join2(u, v), q.join2(u, w))),
                   "lattice distributivity at (" + fmt(u) + "," + fmt(v) + "," +
                       fmt(w) + ")");
        if (q.has_hom())
          rep.record(q.leq(q.tensor(v, u), w) == q.leq(v, q.hom(u, w)),
                     "residuation at (" + fmt(v) + "," + fmt(u) + "," + fmt(w) +
                         ")");
      }
    }
  for (const QElem& u : ss) {
    rep.record(q.equal(q.tensor(u, q.unit()), u), "unit law at " + fmt(u));
    rep.record(q.equal(q.tensor(u, q.bottom()), q.bottom()),
               "bottom absorption at " + fmt(u));
  }

  // flags must agree with the sampled behaviour (exhaustive when finite)
  bool frame_obs = true, opt_obs = true;
  for (const QElem& u : ss)
    for (const QElem& v : ss) {
      QElem t = q.tensor(u, v);
      if (!q.equal(t, q.meet2(u, v))) frame_obs = false;
      if (q.equal(t, q.bottom()) && !q.equal(u, q.bottom()) &&
          !q.equal(v, q.bottom()))
        opt_obs = false;
    }
  if (q.is_finite()) {
    rep.record(q.is_frame() == frame_obs, "is_frame flag disagrees");
    rep.record(q.is_optimistic() == opt_obs, "is_optimistic flag disagrees");
  } else {
    // samples can refute a positive flag but never confirm one
    rep.record(!q.is_frame() || frame_obs,
               "is_frame set but a sampled pair violates tensor = meet");
    rep.record(!q.is_optimistic() || opt_obs,
               "is_optimistic set but a sampled pair hits bottom");
  }
  rep.record(q.is_integral() == q.equal(q.unit(), q.top()),
             "is_integral flag disagrees");

  rep.duration_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return rep;
}

LawReport check_quantale_laws(const Quantale& q) {
  std::vector<QElem> ss =
      q.is_finite() ? q.carrier() : q.sample_elems(10, 0x5eed);
  return check_quantale_laws(q, ss);
}

BuiltinLaxHoms builtin_lax_homs(const Quantale& v) {
  if (!v.non_degenerate())
    throw ValidationError("builtin lax homs need a non-degenerate quantale");
  Quantale two = make_quantale(QuantaleSpec::two());
  QElem bot2 = two.bottom(), top2 = two.top();
  QElem botv = v.bottom(), kv = v.unit(), topv = v.top();
  LaxHom iota(two, v,
              [=](const QElem& w) { return w == top2 ? kv : botv; }, "iota");
  LaxHom tau(two, v,
             [=](const QElem& w) { return w == top2 ? topv : botv; }, "tau");
  LaxHom pess(v, two,
              [=, q = v](const QElem& x) {
                return q.leq(kv, x) ? top2 : bot2;
              },
              "pessimist");
  std::optional<LaxHom> opt;
  if (v.is_optimistic())
    opt = LaxHom(v, two,
                 [=, q = v](const QElem& x) {
                   return q.equal(x, botv) ? bot2 : top2;
                 },
                 "optimist");
  return BuiltinLaxHoms{std::move(iota), std::move(tau), std::move(pess),
                        std::move(opt)};
}

LaxHom optimist_lax_hom(const Quantale& v) {
  if (!v.is_optimistic())
    throw ValidationError("optimist map requested on non-optimistic quantale " +
                          v.name());
  return *builtin_lax_homs(v).optimist;
}

LawReport check_lax_hom(const LaxHom& f, std::span<const QElem> samples) {
  auto t0 = std::chrono::steady_clock::now();
  LawReport rep;
  rep.id = "lax_hom";
  rep.claim = "lax homomorphism laws for " + f.name() + ": " +
              f.source().name() + " -> " + f.target().name();
  const Quantale &V = f.source(), &W = f.target();
  for (const QElem& u : samples)
    for (const QElem& v : samples) {
      if (V.leq(u, v))
        rep.record(W.leq(f(u), f(v)),
                   "monotonicity at (" + V.format_elem(u) + "," +
                       V.format_elem(v) + ")");
      rep.record(W.leq(W.tensor(f(u), f(v)), f(V.tensor(u, v))),
                 "tensor laxness at (" + V.format_elem(u) + "," +
                     V.format_elem(v) + ")");
    }
  rep.record(W.leq(W.unit(), f(V.unit())), "unit laxness at k");
  rep.duration_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return rep;
}

LawReport check_adjunction(const LaxHom& left, const LaxHom& right,
                           std::span<const QElem> samples_w,
                           std::span<const QElem> samples_v) {
  auto t0 = std::chrono::steady_clock::now();
  if (!left.source().same_as(right.target()) ||
      !left.target().same_as(right.source()))
    throw ValidationError("adjunction check: " + left.name() + " and " +
                          right.name() + " are not maps between the same pair");
  LawReport rep;
  rep.id = "adjunction";
  rep.claim = left.name() + " -| " + right.name() + " between " +
              left.source().name() + " and " + left.target().name();
  const Quantale &W = left.source(), &V = left.target();
  for (const QElem& w : samples_w)
    for (const QElem& v : samples_v) {
      bool lhs = V.leq(left(w), v);
      bool rhs = W.leq(w, right(v));
      rep.record(lhs == rhs, "Galois condition at (w=" + W.format_elem(w) +
                                 ", v=" + V.format_elem(v) + "): left(w)<=v is " +
                                 (lhs ? "true" : "false") + ", w<=right(v) is " +
                                 (rhs ? "true" : "false"));
    }
  rep.duration_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return rep;
}

}  // namespace vglab
