#include "fnil/fmodule_sim.hpp"

#include <stdexcept>

namespace fnil {

int ExplicitGradedFModule::dim_at(int64_t t) const {
  auto it = pieces.find(t);
  return it == pieces.end() ? 0 : it->second;
}

PrimeFieldMatrix ExplicitGradedFModule::layer_at(int64_t t) const {
  auto it = layers.find(t);
  if (it != layers.end()) return it->second;
  return PrimeFieldMatrix(dim_at(t * p), dim_at(t), p);
}

void ExplicitGradedFModule::validate() const {
  for (const auto& [t, d] : pieces)
    if (d <= 0) throw std::invalid_argument("piece with nonpositive dimension");
  for (const auto& [t, m] : layers) {
    if (m.modulus() != p)
      throw std::invalid_argument("layer modulus mismatch");
    if (m.cols() != dim_at(t) || m.rows() != dim_at(t * p))
      throw std::invalid_argument("layer shape mismatch");
  }
}

PrimeFieldMatrix kronecker(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("modulus mismatch in kronecker");
  const PrimeField f(a.modulus());
  PrimeFieldMatrix c(a.rows() * b.rows(), a.cols() * b.cols(), a.modulus());
  for (int i1 = 0; i1 < a.rows(); ++i1)
    for (int j1 = 0; j1 < a.cols(); ++j1) {
      const int64_t v = a.at(i1, j1);
      if (v == 0) continue;
      for (int i2 = 0; i2 < b.rows(); ++i2)
        for (int j2 = 0; j2 < b.cols(); ++j2)
          c.at(i1 * b.rows() + i2, j1 * b.cols() + j2) =
              f.mul(v, b.at(i2, j2));
    }
  return c;
}

ExplicitGradedFModule simulate_segre(const ExplicitGradedFModule& a,
                                     const ExplicitGradedFModule& b) {
  if (a.p != b.p)
    throw std::invalid_argument("characteristic mismatch in Segre product");
  ExplicitGradedFModule out;
  out.p = a.p;
  for (const auto& [t, da] : a.pieces) {
    const int db = b.dim_at(t);
    if (db > 0) out.pieces[t] = da * db;
  }
  for (const auto& [t, d] : out.pieces)
    out.layers[t] = kronecker(a.layer_at(t), b.layer_at(t));
  return out;
}

ExplicitGradedFModule simulate_veronese(const ExplicitGradedFModule& m,
                                        int64_t v) {
  if (v < 1) throw std::invalid_argument("Veronese index must be >= 1");
  ExplicitGradedFModule out;
  out.p = m.p;
  for (const auto& [t, d] : m.pieces)
    if (t % v == 0) out.pieces[t / v] = d;
  for (const auto& [t, d] : out.pieces) out.layers[t] = m.layer_at(t * v);
  return out;
}

std::set<int64_t> degsupp_of(const ExplicitGradedFModule& m) {
  std::set<int64_t> s;
  for (const auto& [t, d] : m.pieces) s.insert(t);
  return s;
}

std::set<int64_t> nilsupport_exact(const ExplicitGradedFModule& m) {
  std::set<int64_t> nil;
  for (const auto& [t, dim] : m.pieces) {
    if (t == 0) {
      if (!endo_nilpotence_index(m.layer_at(0)).has_value()) nil.insert(0);
      continue;
    }
    PrimeFieldMatrix composite = m.layer_at(t);
    int64_t cur = t * m.p;
    bool nilpotent = nullity(composite) == dim;
    // The orbit degree |t p^e| grows without bound, so the composite lands in
    // a declared-zero piece after finitely many steps and the loop ends.
    while (!nilpotent) {
      composite = multiply(m.layer_at(cur), composite);
      cur *= m.p;
      nilpotent = nullity(composite) == dim;
      if (composite.rows() == 0 && !nilpotent)
        throw std::logic_error("kernel must fill at a zero piece");
    }
    if (!nilpotent) nil.insert(t);
  }
  return nil;
}

NilSupportDescriptor descriptor_of(const ExplicitGradedFModule& m) {
  const std::set<int64_t> nil = nilsupport_exact(m);
  int64_t lo = 0;
  for (const auto& [t, d] : m.pieces) lo = std::min(lo, t);
  std::set<int64_t> members;
  for (int64_t t : nil) members.insert(t);
  return NilSupportDescriptor::window(m.p, lo, 0, std::move(members), {},
                                      true);
}

ExplicitGradedFModule random_fmodule(int64_t p, int64_t window_lo,
                                     int64_t window_hi, int max_dim,
                                     std::mt19937& rng) {
  ExplicitGradedFModule m;
  m.p = p;
  std::uniform_int_distribution<int> dim_dist(0, max_dim);
  std::uniform_int_distribution<int64_t> entry(0, p - 1);
  std::uniform_int_distribution<int> style(0, 2);
  for (int64_t t = window_lo; t <= window_hi; ++t) {
    const int d = dim_dist(rng);
    if (d > 0) m.pieces[t] = d;
  }
  for (const auto& [t, d] : m.pieces) {
    PrimeFieldMatrix layer(m.dim_at(t * p), d, p);
    const int kind = style(rng);
    if (kind == 0) {
      // leave zero
    } else if (kind == 1 && t == 0) {
      // strictly upper triangular: a guaranteed nilpotent degree-0 action
      for (int i = 0; i < layer.rows(); ++i)
        for (int j = i + 1; j < layer.cols(); ++j)
          layer.at(i, j) = entry(rng);
    } else {
      for (int i = 0; i < layer.rows(); ++i)
        for (int j = 0; j < layer.cols(); ++j) layer.at(i, j) = entry(rng);
    }
    m.layers[t] = layer;
  }
  m.validate();
  return m;
}

}  // namespace fnil
