#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace qac {

// (p, k) with d = p^k and p prime, or nullopt.
std::optional<std::pair<int, int>> prime_power(int d);

// GF(p^k) by table lookup. Elements are encoded as integers whose base-p
// digits are the polynomial coefficients (constant term first) in
// GF(p)[x] / (m(x)), with m a fixed primitive polynomial:
//
//   GF(4)  x^2+x+1      GF(8)  x^3+x^2+1    GF(16) x^4+x^3+1
//   GF(32) x^5+x^3+1    GF(64) x^6+x^5+1    GF(9)  x^2+x+2
//   GF(27) x^3+2x^2+1   GF(25) x^2+x+2      GF(49) x^2+x+3
//
// For k = 1 the modulus is x - g with g the smallest primitive root mod p,
// so "x" is the generator and the encoding is the usual residue.
// The field axioms are checked exhaustively when the tables are built.
class GaloisField {
 public:
  static constexpr int kMaxOrder = 64;

  // Throws NotPrimePower or InvalidArgument (order above kMaxOrder).
  static GaloisField create(int order);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  // Monic modulus coefficients, constant term first, leading 1 omitted.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int x, int y) const { return add_[index(x, y)]; }
  int neg(int x) const { return neg_[static_cast<std::size_t>(x)]; }
  int sub(int x, int y) const { return add(x, neg(y)); }
  int mul(int x, int y) const;
  int inv(int x) const;
  int pow(int x, long long e) const;
  // Primitive element raised to j.
  int exp(int j) const;
  // Discrete log base the primitive element; x must be non-zero.
  int log(int x) const { return log_[static_cast<std::size_t>(x)]; }
  // Absolute trace x + x^p + ... + x^{p^{k-1}}, a value in [0, p).
  int trace(int x) const { return trace_[static_cast<std::size_t>(x)]; }

  std::vector<int> coefficients(int x) const;
  int encode(const std::vector<int>& coefficients) const;

 private:
  GaloisField(int p, int k, std::vector<int> modulus);
  void build_tables();
  void check_axioms() const;
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(y);
  }

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<int> add_;
  std::vector<int> neg_;
  std::vector<int> exp_;
  std::vector<int> log_;
  std::vector<int> trace_;
};

// Galois ring GR(4, k) = Z_4[x] / (h(x)), h the Hensel lift of the
// GF(2^k) modulus. Supplies the Z_4-valued trace needed for the
// characteristic-2 MUB construction.
class GaloisRing4 {
 public:
  explicit GaloisRing4(const GaloisField& field);

  int degree() const { return k_; }
  // Lifted modulus over Z_4, constant term first, leading 1 omitted.
  const std::vector<int>& modulus() const { return modulus_; }

  // Elements are coefficient vectors over Z_4 of length k.
  using Element = std::vector<int>;

  Element add(const Element& x, const Element& y) const;
  Element scale(const Element& x, int c) const;
  Element mul(const Element& x, const Element& y) const;
  // Trace of multiplication-by-x as a Z_4-linear map; value in [0, 4).
  int trace(const Element& x) const;
  // Teichmuller representative of the field element with the given encoding.
  const Element& teichmuller(int field_element) const {
    return teichmuller_[static_cast<std::size_t>(field_element)];
  }

 private:
  int k_;
  std::vector<int> modulus_;
  std::vector<Element> teichmuller_;
};

}  // namespace qac
