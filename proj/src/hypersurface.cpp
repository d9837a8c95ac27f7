#include "fnil/hypersurface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fnil/combinatorics.hpp"

namespace fnil {

namespace {

struct BudgetExceeded {};

// [xn_exp, c_0, ..., c_{n-1}]; map ordering matches the basis ordering.
using Key = std::vector<int64_t>;
using SparseVec = std::map<Key, int64_t>;

Key key_of(int64_t xn_exp, const std::vector<int64_t>& denom) {
  Key k;
  k.reserve(denom.size() + 1);
  k.push_back(xn_exp);
  k.insert(k.end(), denom.begin(), denom.end());
  return k;
}

void compositions_positive(
    int64_t total, int parts, std::vector<int64_t>& cur,
    const std::function<void(const std::vector<int64_t>&)>& emit) {
  if (parts == 1) {
    if (total >= 1) {
      cur.push_back(total);
      emit(cur);
      cur.pop_back();
    }
    return;
  }
  for (int64_t v = 1; v + (parts - 1) <= total; ++v) {
    cur.push_back(v);
    compositions_positive(total - v, parts - 1, cur, emit);
    cur.pop_back();
  }
}

// Expands u_term * F^(p_pow) of one class against the numerator caps,
// accumulating surviving classes. A term of g^q survives only when every
// numerator exponent stays strictly below p_pow * c_v, which prunes the
// multinomial enumeration down to the survivor box.
class Expander {
public:
  Expander(const HypersurfaceRing& ring, int64_t p_pow, int64_t* terms_left)
      : ring_(ring), f_(ring.field()), p_pow_(p_pow),
        terms_left_(terms_left), n_(ring.n()) {}

  // Image of the class (xn_exp, denom) scaled by gamma * x^a * x_n^k.
  void expand(int64_t xn_exp, const std::vector<int64_t>& denom, int64_t gamma,
              const std::vector<int64_t>& a_exps, int64_t k_exp,
              SparseVec& out) {
    const int64_t d = ring_.deg_f();
    const int64_t big_exp = xn_exp * p_pow_ + k_exp;
    const int64_t q = big_exp / d;
    target_xn_ = big_exp % d;
    caps_.assign(size_t(n_), 0);
    num_exps_.assign(size_t(n_), 0);
    for (int v = 0; v < n_; ++v) {
      caps_[v] = p_pow_ * denom[v] - 1;
      num_exps_[v] = a_exps.empty() ? 0 : a_exps[v];
      if (num_exps_[v] > caps_[v]) return;  // multiplier already kills it
    }
    qs_.clear();
    out_ = &out;
    recurse(0, q, gamma);
  }

private:
  int64_t term_bound(size_t idx, int64_t q_left) const {
    int64_t ub = q_left;
    for (int v = 0; v < n_; ++v) {
      const int64_t m = ring_.g_terms()[idx].exps[v];
      if (m > 0) ub = std::min(ub, (caps_[v] - num_exps_[v]) / m);
    }
    return ub;
  }

  void leaf(int64_t coeff) {
    if (terms_left_ && --(*terms_left_) < 0) throw BudgetExceeded{};
    const int64_t mu = qs_.empty() ? 1 : multinomial_mod_p(qs_, f_);
    if (mu == 0) return;
    const int64_t c = f_.mul(coeff, mu);
    Key k(size_t(n_) + 1);
    k[0] = target_xn_;
    for (int v = 0; v < n_; ++v) k[size_t(v) + 1] = caps_[v] + 1 - num_exps_[v];
    auto [it, inserted] = out_->try_emplace(std::move(k), c);
    if (!inserted) {
      it->second = f_.add(it->second, c);
      if (it->second == 0) out_->erase(it);
    }
  }

  void recurse(size_t u, int64_t q_left, int64_t coeff) {
    const auto& terms = ring_.g_terms();
    if (terms.empty()) {
      if (q_left == 0) leaf(coeff);
      return;
    }
    if (u + 1 == terms.size()) {
      if (q_left > term_bound(u, q_left)) return;
      qs_.push_back(q_left);
      for (int v = 0; v < n_; ++v)
        num_exps_[v] += terms[u].exps[v] * q_left;
      leaf(f_.mul(coeff, f_.pow(terms[u].coeff, uint64_t(q_left))));
      for (int v = 0; v < n_; ++v)
        num_exps_[v] -= terms[u].exps[v] * q_left;
      qs_.pop_back();
      return;
    }
    const int64_t ub = term_bound(u, q_left);
    for (int64_t qu = 0; qu <= ub; ++qu) {
      qs_.push_back(qu);
      for (int v = 0; v < n_; ++v) num_exps_[v] += terms[u].exps[v] * qu;
      recurse(u + 1, q_left - qu,
              f_.mul(coeff, f_.pow(terms[u].coeff, uint64_t(qu))));
      for (int v = 0; v < n_; ++v) num_exps_[v] -= terms[u].exps[v] * qu;
      qs_.pop_back();
    }
  }

  const HypersurfaceRing& ring_;
  const PrimeField& f_;
  int64_t p_pow_;
  int64_t* terms_left_;
  int n_;
  int64_t target_xn_ = 0;
  std::vector<int64_t> caps_, num_exps_, qs_;
  SparseVec* out_ = nullptr;
};

const Polynomial& identity_multiplier() {
  static const Polynomial id = {};  // empty list means plain Frobenius
  return id;
}

// Image of one basis class under (u * F^{p_pow}); an empty multiplier means
// u = 1.
SparseVec expand_class(const HypersurfaceRing& ring, int64_t p_pow,
                       int64_t* terms_left, int64_t xn_exp,
                       const std::vector<int64_t>& denom,
                       const Polynomial& multiplier) {
  SparseVec out;
  Expander ex(ring, p_pow, terms_left);
  if (multiplier.empty()) {
    ex.expand(xn_exp, denom, 1, {}, 0, out);
  } else {
    for (const PolyTerm& t : multiplier)
      ex.expand(xn_exp, denom, t.coeff, t.exps, t.xn_exp, out);
  }
  return out;
}

void add_scaled(SparseVec& acc, const SparseVec& src, int64_t scale,
                const PrimeField& f, int64_t* terms_left) {
  if (scale == 0) return;
  for (const auto& [k, v] : src) {
    if (terms_left && --(*terms_left) < 0) throw BudgetExceeded{};
    const int64_t c = f.mul(v, scale);
    auto [it, inserted] = acc.try_emplace(k, c);
    if (!inserted) {
      it->second = f.add(it->second, c);
      if (it->second == 0) acc.erase(it);
    }
  }
}

// Rank of a list of sparse columns by column elimination on leading keys.
int sparse_rank(std::vector<SparseVec> cols, const PrimeField& f) {
  std::map<Key, SparseVec> pivots;  // keyed by leading key
  int rank = 0;
  for (auto& col : cols) {
    while (!col.empty()) {
      const Key& lead = col.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const int64_t inv = f.inv(col.begin()->second);
        SparseVec normalized;
        for (const auto& [k, v] : col) normalized[k] = f.mul(v, inv);
        pivots.emplace(lead, std::move(normalized));
        ++rank;
        break;
      }
      const int64_t factor = f.neg(col.begin()->second);
      add_scaled(col, it->second, factor, f, nullptr);
    }
  }
  return rank;
}

}  // namespace

HypersurfaceRing::HypersurfaceRing(int64_t p, int n, int64_t deg_f,
                                   std::vector<GTerm> g_terms)
    : field_(p), n_(n), deg_f_(deg_f) {
  if (n < 1) throw std::invalid_argument("need at least one base variable");
  if (deg_f < 2) throw std::invalid_argument("defining degree must be >= 2");
  // merge duplicate monomials, reduce coefficients, drop zeros
  std::map<std::vector<int64_t>, int64_t> merged;
  for (const GTerm& t : g_terms) {
    if (int(t.exps.size()) != n)
      throw std::invalid_argument("g-term has wrong number of exponents");
    int64_t total = 0;
    for (int64_t e : t.exps) {
      if (e < 0) throw std::invalid_argument("negative exponent in g-term");
      total += e;
    }
    if (total != deg_f)
      throw std::invalid_argument("g must be homogeneous of degree deg_f");
    auto [it, inserted] = merged.try_emplace(t.exps, 0);
    it->second = field_.add(it->second, field_.reduce(t.coeff));
    (void)inserted;
  }
  for (auto& [e, c] : merged)
    if (c != 0) g_terms_.push_back({e, c});
  if (g_terms_.empty())
    throw std::invalid_argument("defining form degenerates: g = 0 mod p");
}

HypersurfaceRing HypersurfaceRing::fermat(int64_t p, int n, int64_t deg_f) {
  std::vector<GTerm> terms;
  for (int i = 0; i < n; ++i) {
    std::vector<int64_t> e(size_t(n), 0);
    e[size_t(i)] = deg_f;
    terms.push_back({std::move(e), 1});
  }
  return HypersurfaceRing(p, n, deg_f, std::move(terms));
}

bool HypersurfaceRing::is_diagonal_form() const {
  std::vector<bool> seen(size_t(n_), false);
  for (const GTerm& t : g_terms_) {
    int nonzero_var = -1;
    for (int v = 0; v < n_; ++v)
      if (t.exps[size_t(v)] > 0) {
        if (nonzero_var >= 0) return false;
        nonzero_var = v;
      }
    if (nonzero_var < 0 || t.exps[size_t(nonzero_var)] != deg_f_) return false;
    seen[size_t(nonzero_var)] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string HypersurfaceRing::describe() const {
  std::ostringstream os;
  os << "F_" << p() << "[x_0..x_" << n_ << "]/(x_" << n_ << "^" << deg_f_
     << " - g), g =";
  bool first = true;
  for (auto it = g_terms_.rbegin(); it != g_terms_.rend(); ++it) {
    const GTerm& t = *it;
    os << (first ? " " : " + ");
    first = false;
    if (t.coeff != 1) os << t.coeff << "*";
    bool printed = false;
    for (int v = 0; v < n_; ++v)
      if (t.exps[size_t(v)] > 0) {
        if (printed) os << "*";
        os << "x_" << v;
        if (t.exps[size_t(v)] > 1) os << "^" << t.exps[size_t(v)];
        printed = true;
      }
  }
  return os.str();
}

std::vector<CechClass> basis_at_degree(const HypersurfaceRing& ring, int64_t t) {
  std::vector<CechClass> out;
  std::vector<int64_t> cur;
  for (int64_t j = 0; j < ring.deg_f(); ++j) {
    const int64_t s = j - t;  // total denominator degree
    if (s < ring.n()) continue;
    compositions_positive(s, ring.n(), cur,
                          [&](const std::vector<int64_t>& c) {
                            out.push_back(CechClass{j, c, t});
                          });
  }
  return out;
}

int64_t basis_dim_at_degree(const HypersurfaceRing& ring, int64_t t) {
  __int128 total = 0;
  for (int64_t j = 0; j < ring.deg_f(); ++j) {
    const int64_t s = j - t;
    if (s < ring.n()) continue;
    total += binomial_int64(s - 1, ring.n() - 1);
    if (total > kPosInf) return kPosInf;
  }
  return int64_t(total);
}

int64_t poly_total_degree(const Polynomial& poly) {
  if (poly.empty()) return 0;
  std::optional<int64_t> deg;
  for (const PolyTerm& t : poly) {
    int64_t d = t.xn_exp;
    for (int64_t e : t.exps) d += e;
    if (deg && *deg != d)
      throw std::invalid_argument("multiplier is not homogeneous");
    deg = d;
  }
  return *deg;
}

Polynomial reduce_multiplier(const HypersurfaceRing& ring, Polynomial poly) {
  const PrimeField& f = ring.field();
  const int64_t d = ring.deg_f();
  std::map<std::pair<std::vector<int64_t>, int64_t>, int64_t> acc;
  std::function<void(const PolyTerm&)> push = [&](const PolyTerm& term) {
    if (int(term.exps.size()) != ring.n())
      throw std::invalid_argument("multiplier term has wrong arity");
    const int64_t c = f.reduce(term.coeff);
    if (c == 0) return;
    if (term.xn_exp >= d) {
      // x_n^d = g: peel one factor and distribute over g.
      for (const GTerm& g : ring.g_terms()) {
        PolyTerm next;
        next.coeff = f.mul(c, g.coeff);
        next.exps = term.exps;
        for (int v = 0; v < ring.n(); ++v) next.exps[size_t(v)] += g.exps[size_t(v)];
        next.xn_exp = term.xn_exp - d;
        push(next);
      }
      return;
    }
    auto [it, inserted] = acc.try_emplace({term.exps, term.xn_exp}, 0);
    it->second = f.add(it->second, c);
    (void)inserted;
  };
  for (const PolyTerm& t : poly) push(t);
  Polynomial out;
  for (const auto& [key, c] : acc)
    if (c != 0) out.push_back({c, key.first, key.second});
  poly_total_degree(out);  // homogeneity check
  return out;
}

FrobeniusLayer frobenius_layer(const HypersurfaceRing& ring, int64_t t,
                               const std::optional<Polynomial>& multiplier) {
  FrobeniusLayer layer;
  layer.source_degree = t;
  Polynomial mult;
  if (multiplier && !multiplier->empty()) {
    mult = reduce_multiplier(ring, *multiplier);
    layer.multiplier = mult;
  }
  const int64_t mult_deg = mult.empty() ? 0 : poly_total_degree(mult);
  layer.target_degree = ring.p() * t + mult_deg;

  const auto source = basis_at_degree(ring, t);
  const auto target = basis_at_degree(ring, layer.target_degree);
  std::map<Key, int> target_index;
  for (size_t i = 0; i < target.size(); ++i)
    target_index.emplace(key_of(target[i].xn_exp, target[i].denom), int(i));

  PrimeFieldMatrix m(int(target.size()), int(source.size()), ring.p());
  for (size_t col = 0; col < source.size(); ++col) {
    SparseVec image = expand_class(ring, ring.p(), nullptr,
                                   source[col].xn_exp, source[col].denom, mult);
    for (const auto& [k, v] : image) {
      auto it = target_index.find(k);
      if (it == target_index.end())
        throw std::logic_error("expansion left the target graded piece");
      m.at(it->second, int(col)) = v;
    }
  }
  layer.matrix = std::move(m);
  return layer;
}

PrimeFieldMatrix frobenius_power_matrix(const HypersurfaceRing& ring, int64_t t,
                                        int e) {
  if (e < 1) throw std::invalid_argument("power must be >= 1");
  int64_t p_pow = 1;
  for (int i = 0; i < e; ++i) {
    if (p_pow > kPosInf / ring.p()) throw std::overflow_error("p^e overflow");
    p_pow *= ring.p();
  }
  const auto source = basis_at_degree(ring, t);
  const auto target = basis_at_degree(ring, t * p_pow);
  std::map<Key, int> target_index;
  for (size_t i = 0; i < target.size(); ++i)
    target_index.emplace(key_of(target[i].xn_exp, target[i].denom), int(i));
  PrimeFieldMatrix m(int(target.size()), int(source.size()), ring.p());
  for (size_t col = 0; col < source.size(); ++col) {
    SparseVec image = expand_class(ring, p_pow, nullptr, source[col].xn_exp,
                                   source[col].denom, identity_multiplier());
    for (const auto& [k, v] : image) {
      auto it = target_index.find(k);
      if (it == target_index.end())
        throw std::logic_error("expansion left the target graded piece");
      m.at(it->second, int(col)) = v;
    }
  }
  return m;
}

int64_t a_invariant(const HypersurfaceRing& ring) {
  return ring.deg_f() - 1 - ring.n();
}

DegreeVerdict degree_verdict(const HypersurfaceRing& ring, int64_t t, int max_e,
                             const EngineBudget& budget) {
  if (max_e < 1) throw std::invalid_argument("max_e must be >= 1");
  DegreeVerdict verdict;
  verdict.degree = t;
  const auto source = basis_at_degree(ring, t);
  const int dim = int(source.size());
  if (dim == 0) {
    verdict.status = DegreeStatus::ZeroSpace;
    return verdict;
  }

  if (t == 0) {
    const PrimeFieldMatrix m = frobenius_layer(ring, 0).matrix;
    std::vector<PrimeFieldMatrix> maps(size_t(dim), m);
    verdict.chain = iterate_kernel_chain(maps, std::max(max_e, dim));
    if (auto e = endo_nilpotence_index(m)) {
      verdict.status = DegreeStatus::Nilpotent;
      verdict.e = *e;
    } else {
      verdict.status = DegreeStatus::NotNilpotent;
      verdict.e = dim;
    }
    return verdict;
  }

  if (t < 0 && dim > budget.max_source_dim) {
    verdict.status = DegreeStatus::NotNilpotentUpTo;
    verdict.e = 0;
    return verdict;
  }

  // Orbit chase t -> tp -> tp^2 -> ... with sparse columns. For t > 0 the
  // orbit leaves the degree support, so the chain always fills; for t < 0
  // the iteration and expansion budgets decide how far we look.
  int64_t escape_cap = 0;
  if (t > 0) {
    int64_t deg = t;
    while (deg <= a_invariant(ring)) {
      deg *= ring.p();
      ++escape_cap;
    }
    ++escape_cap;  // one application lands in the zero piece
  }
  const int step_cap = t > 0 ? int(escape_cap) : max_e;

  int64_t terms_left = budget.max_expansion_terms;
  std::vector<SparseVec> cols(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i)
    cols[size_t(i)][key_of(source[size_t(i)].xn_exp, source[size_t(i)].denom)] = 1;

  const PrimeField& f = ring.field();
  int steps = 0;
  std::optional<int> full_at;
  try {
    while (steps < step_cap) {
      std::map<Key, SparseVec> cache;
      for (const auto& col : cols)
        for (const auto& [k, v] : col)
          if (!cache.count(k))
            cache.emplace(k, expand_class(ring, ring.p(), &terms_left, k[0],
                                          {k.begin() + 1, k.end()},
                                          identity_multiplier()));
      std::vector<SparseVec> next(static_cast<size_t>(dim));
      for (int i = 0; i < dim; ++i)
        for (const auto& [k, v] : cols[size_t(i)])
          add_scaled(next[size_t(i)], cache.at(k), v, f, &terms_left);
      cols = std::move(next);
      ++steps;
      const int nullty = dim - sparse_rank(cols, f);
      verdict.chain.dims.push_back(nullty);
      if (nullty == dim) {
        full_at = steps;
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    // fall through with the completed steps only
  }
  verdict.chain.full_at = full_at;
  const size_t nd = verdict.chain.dims.size();
  verdict.chain.stabilized =
      full_at.has_value() ||
      (nd >= 2 && verdict.chain.dims[nd - 1] == verdict.chain.dims[nd - 2]);

  if (full_at) {
    verdict.status = DegreeStatus::Nilpotent;
    verdict.e = *full_at;
  } else if (t > 0) {
    throw std::logic_error("positive-degree orbit failed to leave the support");
  } else {
    verdict.status = DegreeStatus::NotNilpotentUpTo;
    verdict.e = steps;
  }
  return verdict;
}

int hsl_degree0(const HypersurfaceRing& ring) {
  const PrimeFieldMatrix m = frobenius_layer(ring, 0).matrix;
  const int dim = m.rows();
  if (dim == 0) return 0;
  std::vector<int> nulls{0};  // e = 0
  PrimeFieldMatrix power = PrimeFieldMatrix::identity(dim, ring.p());
  for (int e = 1; e <= dim; ++e) {
    power = multiply(m, power);
    nulls.push_back(nullity(power));
  }
  const int stable = nulls[size_t(dim)];
  for (int e = 0; e <= dim; ++e)
    if (nulls[size_t(e)] == stable) return e;
  return dim;
}

bool smoothness_check(const HypersurfaceRing& ring) {
  if (ring.deg_f() % ring.p() == 0) return false;
  return ring.is_diagonal_form();
}

std::vector<DegreeVerdict> scan_window(const HypersurfaceRing& ring,
                                       const ClassifyOptions& opts) {
  const int64_t wlo = opts.window_lo.value_or(-4 * ring.deg_f());
  if (wlo > 0) throw std::invalid_argument("window_lo must be <= 0");
  std::vector<DegreeVerdict> out;
  const int64_t top = std::max<int64_t>(a_invariant(ring), 0);
  for (int64_t t = wlo; t <= top; ++t)
    out.push_back(degree_verdict(ring, t, opts.max_e, opts.budget));
  return out;
}

RingProfile classify_ring(const HypersurfaceRing& ring,
                          const ClassifyOptions& opts,
                          std::vector<DegreeVerdict>* verdicts_out) {
  const int n = ring.n();
  RingProfile prof;
  {
    std::ostringstream name;
    name << (ring.is_diagonal_form() ? "diagonal" : "hypersurface") << "_d"
         << ring.deg_f() << "_n" << n << "_p" << ring.p();
    prof.name = name.str();
  }
  prof.p = ring.p();
  prof.dim = n;
  prof.H.resize(size_t(n) + 1);
  for (int j = 0; j < n; ++j) prof.H[size_t(j)].nilsupport =
      NilSupportDescriptor::empty(ring.p());

  IndexData& top = prof.H[size_t(n)];
  top.is_zero = false;
  top.degsupp = DegreeSupport::interval(kNegInf, a_invariant(ring));
  top.asserted = false;

  const int64_t wlo = opts.window_lo.value_or(-4 * ring.deg_f());
  std::set<int64_t> members, undecided;
  const std::vector<DegreeVerdict> scan = scan_window(ring, opts);
  if (verdicts_out) *verdicts_out = scan;
  for (const DegreeVerdict& v : scan) {
    if (v.degree > 0 && v.status == DegreeStatus::NotNilpotent)
      throw std::logic_error("non-nilpotent verdict at positive degree");
    if (v.degree > 0) continue;
    switch (v.status) {
      case DegreeStatus::NotNilpotent:
        members.insert(v.degree);
        break;
      case DegreeStatus::NotNilpotentUpTo:
        undecided.insert(v.degree);
        break;
      case DegreeStatus::Nilpotent:
      case DegreeStatus::ZeroSpace:
        break;
    }
  }
  top.nilsupport = NilSupportDescriptor::window(ring.p(), wlo, 0,
                                                std::move(members),
                                                std::move(undecided), false);

  const PrimeFieldMatrix m0 = frobenius_layer(ring, 0).matrix;
  const int d0 = m0.rows();
  top.hsl_deg0 = HslValue::exact(hsl_degree0(ring));
  if (d0 == 0) {
    top.dim_g0 = 0;
  } else {
    PrimeFieldMatrix power = PrimeFieldMatrix::identity(d0, ring.p());
    for (int e = 0; e < d0; ++e) power = multiply(m0, power);
    top.dim_g0 = d0 - nullity(power);
  }
  top.hsl = HslValue::unknown();  // infinite degree support, no global bound

  prof.cm = true;
  prof.depth_ge_2 = n >= 2;
  prof.equidimensional = true;
  prof.reduced = true;
  if (smoothness_check(ring)) prof.punctured_f_rational = true;
  prof.validate();
  return prof;
}

RingProfile polynomial_ring_profile(int64_t p, int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  PrimeField field(p);  // validates primality
  RingProfile prof;
  prof.name = "polynomial_dim" + std::to_string(dim) + "_p" + std::to_string(p);
  prof.p = p;
  prof.dim = dim;
  prof.H.resize(size_t(dim) + 1);
  for (int j = 0; j < dim; ++j)
    prof.H[size_t(j)].nilsupport = NilSupportDescriptor::empty(p);
  IndexData& top = prof.H[size_t(dim)];
  top.is_zero = false;
  top.degsupp = DegreeSupport::interval(kNegInf, -dim);
  top.nilsupport = NilSupportDescriptor::lower_interval(p, -dim, true, true);
  top.hsl = HslValue::exact(0);
  top.hsl_deg0 = HslValue::exact(0);
  top.dim_g0 = 0;
  prof.cm = true;
  prof.depth_ge_2 = dim >= 2;
  prof.equidimensional = true;
  prof.reduced = true;
  prof.punctured_f_rational = true;
  prof.validate();
  return prof;
}

}  // namespace fnil
