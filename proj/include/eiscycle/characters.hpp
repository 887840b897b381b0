#pragma once

#include <vector>

#include "eiscycle/cyclotomic.hpp"

namespace eis {

// Dirichlet character mod N (N odd), stored through exponents: for each
// unit u, chi(u) = zeta_e^{exp_[u]} where e is the exponent of
// (Z/NZ)^*. Built from fixed generators of the unit group (one
// primitive root per prime power factor).
class DirichletChar {
 public:
  int modulus() const { return N_; }
  int order_e() const { return e_; }
  bool is_even() const { return even_; }
  bool is_trivial() const;

  // exponent k with chi(u) = zeta_e^k; u must be a unit mod N
  int exponent_at(long u) const;
  // chi(u) in a field whose order is a multiple of e (0 for non-units)
  CycloElem value(long u, const FieldPtr& f) const;
  // chi(u) as a complex number at the given precision
  Complex value_numeric(long u, mpfr_prec_t prec) const;

  DirichletChar conjugate() const;
  DirichletChar times(const DirichletChar& o) const;

  bool operator==(const DirichletChar& o) const {
    return N_ == o.N_ && exp_ == o.exp_;
  }

  // label: exponents on the stored generators of (Z/NZ)^*
  const std::vector<int>& generator_exponents() const { return gen_exps_; }
  const std::vector<int>& generator_orders() const { return gen_orders_; }

 private:
  friend std::vector<DirichletChar> all_chars(int N);

  int N_ = 0;
  int e_ = 1;
  bool even_ = true;
  std::vector<int> exp_;        // per residue; -1 marks non-units
  std::vector<int> gen_exps_;   // defining data on unit-group generators
  std::vector<int> gen_orders_; // cyclic factor orders, same indexing
};

std::vector<DirichletChar> all_chars(int N);

// exactly phi(N)/2 characters with chi(-1) = 1
std::vector<DirichletChar> enumerate_even_chars(int N);

// exponent of (Z/NZ)^* (lcm of the cyclic factor orders)
int unit_group_exponent(int N);

}  // namespace eis
