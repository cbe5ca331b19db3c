#include "qac/galois.hpp"

#include <map>
#include <string>

#include "qac/error.hpp"

namespace qac {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

int smallest_primitive_root(int p) {
  if (p == 2) return 1;
  for (int g = 2; g < p; ++g) {
    int x = 1;
    int period = 0;
    do {
      x = x * g % p;
      ++period;
    } while (x != 1);
    if (period == p - 1) return g;
  }
  throw Error(ErrorCode::InvalidArgument, "no primitive root mod " + std::to_string(p));
}

const std::map<std::pair<int, int>, std::vector<int>>& primitive_moduli() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1}},          {{2, 3}, {1, 0, 1}},       {{2, 4}, {1, 0, 0, 1}},
      {{2, 5}, {1, 0, 0, 1, 0}}, {{2, 6}, {1, 0, 0, 0, 0, 1}}, {{3, 2}, {2, 1}},
      {{3, 3}, {1, 0, 2}},       {{5, 2}, {2, 1}},          {{7, 2}, {3, 1}},
  };
  return table;
}

// Polynomial product modulo a monic modulus, coefficients mod m.
std::vector<int> mulmod(const std::vector<int>& x, const std::vector<int>& y,
                        const std::vector<int>& modulus, int m) {
  const std::size_t k = modulus.size();
  std::vector<int> r(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % m;
  }
  for (std::size_t deg = 2 * k - 1; deg >= k; --deg) {
    const int top = r[deg];
    r[deg] = 0;
    for (std::size_t i = 0; i < k; ++i) {
      r[deg - k + i] = ((r[deg - k + i] - top * modulus[i]) % m + m) % m;
    }
  }
  r.resize(k);
  return r;
}

}  // namespace

std::optional<std::pair<int, int>> prime_power(int d) {
  if (d < 2) return std::nullopt;
  int p = 2;
  while (d % p != 0) ++p;
  if (!is_prime(p)) return std::nullopt;
  int k = 0;
  int rest = d;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, k);
}

GaloisField GaloisField::create(int order) {
  const auto pk = prime_power(order);
  if (!pk) {
    throw Error(ErrorCode::NotPrimePower, std::to_string(order) + " is not a prime power");
  }
  if (order > kMaxOrder) {
    throw Error(ErrorCode::InvalidArgument,
                "field order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
  }
  const auto [p, k] = *pk;
  if (k == 1) return GaloisField(p, 1, {p - smallest_primitive_root(p)});
  return GaloisField(p, k, primitive_moduli().at({p, k}));
}

GaloisField::GaloisField(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k; ++i) q_ *= p;
  build_tables();
  check_axioms();
}

std::vector<int> GaloisField::coefficients(int x) const {
  std::vector<int> c(static_cast<std::size_t>(k_));
  for (auto& digit : c) {
    digit = x % p_;
    x /= p_;
  }
  return c;
}

int GaloisField::encode(const std::vector<int>& coefficients) const {
  int x = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) x = x * p_ + *it;
  return x;
}

void GaloisField::build_tables() {
  const auto q = static_cast<std::size_t>(q_);
  add_.assign(q * q, 0);
  neg_.assign(q, 0);
  for (int x = 0; x < q_; ++x) {
    const auto cx = coefficients(x);
    std::vector<int> cn(cx.size());
    for (std::size_t i = 0; i < cx.size(); ++i) cn[i] = (p_ - cx[i]) % p_;
    neg_[static_cast<std::size_t>(x)] = encode(cn);
    for (int y = 0; y < q_; ++y) {
      const auto cy = coefficients(y);
      std::vector<int> cs(cx.size());
      for (std::size_t i = 0; i < cx.size(); ++i) cs[i] = (cx[i] + cy[i]) % p_;
      add_[index(x, y)] = encode(cs);
    }
  }

  // Powers of x; the modulus is primitive, so they run through every unit.
  exp_.assign(q - 1, 0);
  log_.assign(q, -1);
  std::vector<int> power(static_cast<std::size_t>(k_), 0);
  power[0] = 1;
  std::vector<int> shift(static_cast<std::size_t>(k_), 0);
  if (k_ > 1) {
    shift[1] = 1;
  } else {
    shift[0] = (p_ - modulus_[0]) % p_;
  }
  for (int j = 0; j < q_ - 1; ++j) {
    const int e = encode(power);
    if (log_[static_cast<std::size_t>(e)] != -1) {
      throw Error(ErrorCode::InvalidArgument, "modulus is not primitive");
    }
    exp_[static_cast<std::size_t>(j)] = e;
    log_[static_cast<std::size_t>(e)] = j;
    power = mulmod(power, shift, modulus_, p_);
  }
  if (encode(power) != 1) throw Error(ErrorCode::InvalidArgument, "modulus is not primitive");

  trace_.assign(q, 0);
  for (int x = 0; x < q_; ++x) {
    int sum = 0;
    int conj = x;
    for (int j = 0; j < k_; ++j) {
      sum = add(sum, conj);
      conj = pow(conj, p_);
    }
    if (sum >= p_) throw Error(ErrorCode::InvalidArgument, "trace left the prime subfield");
    trace_[static_cast<std::size_t>(x)] = sum;
  }
}

int GaloisField::mul(int x, int y) const {
  if (x == 0 || y == 0) return 0;
  const int e = (log_[static_cast<std::size_t>(x)] + log_[static_cast<std::size_t>(y)]) % (q_ - 1);
  return exp_[static_cast<std::size_t>(e)];
}

int GaloisField::inv(int x) const {
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  const int e = (q_ - 1 - log_[static_cast<std::size_t>(x)]) % (q_ - 1);
  return exp_[static_cast<std::size_t>(e)];
}

int GaloisField::pow(int x, long long e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  const long long n = q_ - 1;
  const long long l = (static_cast<long long>(log_[static_cast<std::size_t>(x)]) * (e % n)) % n;
  return exp_[static_cast<std::size_t>((l + n) % n)];
}

int GaloisField::exp(int j) const {
  const int n = q_ - 1;
  return exp_[static_cast<std::size_t>(((j % n) + n) % n)];
}

void GaloisField::check_axioms() const {
  auto fail = [](const char* what) { throw Error(ErrorCode::InvalidArgument, what); };
  for (int x = 0; x < q_; ++x) {
    if (add(x, 0) != x || mul(x, 1) != x) fail("identity element");
    if (add(x, neg(x)) != 0) fail("additive inverse");
    if (x != 0 && mul(x, inv(x)) != 1) fail("multiplicative inverse");
    for (int y = 0; y < q_; ++y) {
      if (add(x, y) != add(y, x) || mul(x, y) != mul(y, x)) fail("commutativity");
      if (trace(add(x, y)) != (trace(x) + trace(y)) % p_) fail("trace additivity");
      for (int z = 0; z < q_; ++z) {
        if (add(add(x, y), z) != add(x, add(y, z))) fail("additive associativity");
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) fail("multiplicative associativity");
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) fail("distributivity");
      }
    }
  }
  std::vector<bool> hit(static_cast<std::size_t>(p_), false);
  for (int x = 0; x < q_; ++x) hit[static_cast<std::size_t>(trace(x))] = true;
  for (bool h : hit) {
    if (!h) fail("trace is not onto GF(p)");
  }
}

GaloisRing4::GaloisRing4(const GaloisField& field) : k_(field.degree()) {
  if (field.characteristic() != 2) {
    throw Error(ErrorCode::InvalidArgument, "GR(4,k) lifts a characteristic-2 field");
  }
  // Graeffe lift: with f = e + o split into even and odd parts,
  // h(x^2) = +-(e(x)^2 - o(x)^2) mod 4.
  std::vector<int> f = field.modulus();
  f.push_back(1);
  const std::size_t n = f.size();
  std::vector<int> even(n, 0), odd(n, 0);
  for (std::size_t i = 0; i < n; ++i) (i % 2 == 0 ? even : odd)[i] = f[i];
  std::vector<int> g(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i + j] += even[i] * even[j] - odd[i] * odd[j];
  }
  std::vector<int> h(static_cast<std::size_t>(k_) + 1);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = ((g[2 * i] % 4) + 4) % 4;
  if (h.back() != 1) {
    for (auto& c : h) c = (4 - c) % 4;
  }
  h.pop_back();
  modulus_ = h;

  // Teichmuller set: 0 and the powers of the root xi of h, indexed by the
  // field element they reduce to.
  teichmuller_.assign(static_cast<std::size_t>(field.order()), Element(static_cast<std::size_t>(k_), 0));
  Element xi(static_cast<std::size_t>(k_), 0);
  if (k_ > 1) {
    xi[1] = 1;
  } else {
    xi[0] = (4 - modulus_[0]) % 4;
  }
  Element power(static_cast<std::size_t>(k_), 0);
  power[0] = 1;
  for (int j = 0; j < field.order() - 1; ++j) {
    teichmuller_[static_cast<std::size_t>(field.exp(j))] = power;
    power = mul(power, xi);
  }
  Element one(static_cast<std::size_t>(k_), 0);
  one[0] = 1;
  if (power != one) throw Error(ErrorCode::InvalidArgument, "Hensel lift is not a unit root");
}

GaloisRing4::Element GaloisRing4::add(const Element& x, const Element& y) const {
  Element r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = (x[i] + y[i]) % 4;
  return r;
}

GaloisRing4::Element GaloisRing4::scale(const Element& x, int c) const {
  Element r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = ((x[i] * c) % 4 + 4) % 4;
  return r;
}

GaloisRing4::Element GaloisRing4::mul(const Element& x, const Element& y) const {
  return mulmod(x, y, modulus_, 4);
}

int GaloisRing4::trace(const Element& x) const {
  int sum = 0;
  for (int i = 0; i < k_; ++i) {
    Element basis(static_cast<std::size_t>(k_), 0);
    basis[static_cast<std::size_t>(i)] = 1;
    sum += mul(x, basis)[static_cast<std::size_t>(i)];
  }
  return sum % 4;
}

}  // namespace qac
