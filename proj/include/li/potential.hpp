#pragma once

#include <vector>

#include "li/errors.hpp"

namespace li {

/// Per-atom constants of the variational potential
/// H(m) = sum_i A_i + B_i m_i + C_i (m_i log m_i - m_i).
struct PotentialSpec {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
};

double potential_value(const PotentialSpec& spec, const std::vector<double>& m);

/// sum_i (u_i - w_i + w_i log(w_i / u_i)); nonnegative, zero iff w == u.
/// Both arguments must be strictly positive.
double divergence(const std::vector<double>& w, const std::vector<double>& u);

/// Nonnegative probabilities summing to one (tolerance 1e-9).
class Distribution {
 public:
  explicit Distribution(std::vector<double> probabilities);

  const std::vector<double>& probabilities() const { return p_; }
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

/// sum_k p_k log(p_k / q_k) with 0 log 0 = 0. Throws if p has mass where
/// q vanishes.
double information(const Distribution& p, const Distribution& q);

/// -sum_k p_k log p_k with 0 log 0 = 0. In nats.
double entropy(const Distribution& p);

/// S(p1,p2,p3) - [S(p1, p2+p3) + (p2+p3) S(p2', p3')] with the inner
/// distribution normalized; zero up to rounding.
double check_grouping(double p1, double p2, double p3);

struct AsymmetryWitness {
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> w;
  double h_w_from_u = 0.0;  // H(w|u)
  double h_u_from_w = 0.0;  // H(u|w)
  double h_w_from_v = 0.0;  // H(w|v)
  double h_v_from_u = 0.0;  // H(v|u)
};

/// Concrete vectors with H(w|u) != H(u|w) and H(w|u) > H(w|v) + H(v|u),
/// found by a small grid search and verified before returning.
AsymmetryWitness asymmetry_witness();

}  // namespace li
