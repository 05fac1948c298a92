#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellsurf/divisor.hpp"
#include "ellsurf/integer_lattice.hpp"

namespace ellsurf {

// Parameters as a homomorphism from the divisor lattice into Z^N modulo
// relations, with p killed and q distinguished. Images are exponent vectors of
// the inverse parameters: for the even surface rho(s) ~ 1/eta', rho(f) ~ 1/eta,
// so rho(s - f) = q^l is the resonance eta/eta' = q^l. Translating the source
// by D0 sends rho(x) to q^{x.D0} rho(x).
class ExactParamMap {
 public:
  ExactParamMap(BlowdownBasis basis, std::size_t ambient_rank, std::size_t p_index, std::size_t q_index,
                std::vector<IntVec> images, IntMat relations = {});

  // Independent images for every basis class.
  static ExactParamMap generic(BlowdownBasis basis, int m);

  BlowdownBasis basis() const { return basis_; }
  int m() const { return static_cast<int>(images_.size()) - 2; }
  std::size_t ambient_rank() const { return n_; }
  std::size_t p_index() const { return p_index_; }
  std::size_t q_index() const { return q_index_; }
  const std::vector<IntVec>& images() const { return images_; }
  const IntMat& relations() const { return relations_; }
  // 0 when q has infinite order modulo p.
  std::int64_t q_order() const { return q_order_; }

  IntVec operator()(const DivisorClass& d) const;
  // l with rho(d) in p^Z q^l (l reduced mod q_order when finite)
  std::optional<std::int64_t> q_power(const DivisorClass& d) const;
  bool in_pq(const DivisorClass& d) const { return q_power(d).has_value(); }
  // order of rho(d) modulo p, 0 when infinite
  std::int64_t order(const DivisorClass& d) const;

  ExactParamMap translated(const DivisorClass& shift) const;
  // rho'(x) = rho(s_alpha x)
  ExactParamMap reflected(const DivisorClass& root) const;
  ExactParamMap blown_down() const;  // forget e_m
  // Even basis with m >= 1 rewritten in the odd basis.
  ExactParamMap to_odd() const;

 private:
  BlowdownBasis basis_;
  std::size_t n_;
  std::size_t p_index_;
  std::size_t q_index_;
  std::vector<IntVec> images_;
  IntMat relations_;
  QuotientGroup group_;
  std::int64_t q_order_;

  IntVec unit(std::size_t i) const;
};

// Even-basis class with m >= 1 in the odd basis; an isometry fixing f and C.
DivisorClass even_to_odd(const DivisorClass& d);

int euler_characteristic(const DivisorClass& d);

struct NumericalInvariants {
  int rank = 0;
  DivisorClass c1;
  int chi = 0;
};

int chi_pairing(const NumericalInvariants& a, const NumericalInvariants& b);

std::vector<DivisorClass> simple_roots(BlowdownBasis basis, int m);

struct ConeResult {
  bool nef = false;
  std::vector<std::string> trace;
};

ConeResult cone_membership(const ExactParamMap& rho, const DivisorClass& d);

struct SaturatedResult {
  long long dim = 0;
  std::vector<std::string> trace;
};

SaturatedResult saturated_dim_traced(const ExactParamMap& rho, const DivisorClass& source,
                                     const DivisorClass& target);
long long saturated_dim(const ExactParamMap& rho, const DivisorClass& source, const DivisorClass& target);

// Columns are the images of (1,0,0), (0,e8,0), (0,C8,0), (0,0,1) in
// coordinates (rank, e8 part, C8 part, chi).
using K0Matrix = std::array<std::array<long long, 4>, 4>;
K0Matrix k0_action(long long a, long long b, long long c, long long d, long long h);

// chi pairing on the span of those four classes (m = 8)
long long k0_pairing(const std::array<long long, 4>& x, const std::array<long long, 4>& y);

}  // namespace ellsurf
