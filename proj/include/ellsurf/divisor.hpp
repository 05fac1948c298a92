#pragma once

#include <string>
#include <vector>

namespace ellsurf {

// Odd: s.s = -1 and C = 2s+3f-sum e. Even: s.s = 0 and C = 2s+2f-sum e.
enum class BlowdownBasis { Odd, Even };

// Integer class in the basis s, f, e_1..e_m; c[0] is the s-coefficient,
// c[1] the f-coefficient and c[1+i] the e_i-coefficient.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(BlowdownBasis basis, std::vector<int> coeffs);

  static DivisorClass zero(BlowdownBasis basis, int m);
  static DivisorClass s(BlowdownBasis basis, int m);
  static DivisorClass f(BlowdownBasis basis, int m);
  static DivisorClass e(BlowdownBasis basis, int m, int i);  // 1-based
  static DivisorClass anticanonical(BlowdownBasis basis, int m);
  // d s + d' f - sum r_i e_i
  static DivisorClass sf(BlowdownBasis basis, int d, int dp, std::vector<int> r = {});

  BlowdownBasis basis() const { return basis_; }
  int m() const { return static_cast<int>(c_.size()) - 2; }
  int s_coeff() const { return c_[0]; }
  int f_coeff() const { return c_[1]; }
  int e_coeff(int i) const { return c_[1 + i]; }
  const std::vector<int>& coeffs() const { return c_; }
  int& operator[](std::size_t i) { return c_[i]; }
  int operator[](std::size_t i) const { return c_[i]; }

  // (s, f) part with the exceptional coefficients dropped
  DivisorClass without_exceptionals() const;
  DivisorClass with_m(int m) const;
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(int k, DivisorClass a);
  DivisorClass operator-() const { return (-1) * *this; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) { return a.c_ < b.c_; }

  std::string to_string() const;

 private:
  BlowdownBasis basis_ = BlowdownBasis::Even;
  std::vector<int> c_{0, 0};
};

int intersection(const DivisorClass& a, const DivisorClass& b);

}  // namespace ellsurf
