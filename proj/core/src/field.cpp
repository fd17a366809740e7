#include "hilbertkit/field.hpp"

#include <algorithm>
#include <random>

#include "hilbertkit/error.hpp"

namespace hilbertkit {

namespace detail {

struct FieldTables {
  int p = 2;
  int e = 1;
  std::uint32_t q = 2;
  std::vector<int> modulus;
  bool full = true;

  // q <= 256: row-major q x q tables.
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  // q > 256: powers of a primitive element, discrete logs, Zech logarithms.
  std::vector<std::uint16_t> exp;
  std::vector<std::uint16_t> log;
  std::vector<std::int32_t> zech;

  std::vector<std::uint16_t> neg;
  std::vector<std::uint16_t> inv;
};

}  // namespace detail

namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t v, int p, int e) {
  Poly digits(static_cast<std::size_t>(e), 0);
  for (int i = 0; i < e; ++i) {
    digits[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint32_t>(p));
    v /= static_cast<std::uint32_t>(p);
  }
  return digits;
}

std::uint32_t encode(const Poly& digits, int p) {
  std::uint32_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(digits[i]);
  return v;
}

std::uint32_t add_encoded(std::uint32_t a, std::uint32_t b, int p, int e) {
  Poly x = decode(a, p, e);
  const Poly y = decode(b, p, e);
  for (int i = 0; i < e; ++i) x[static_cast<std::size_t>(i)] = (x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]) % p;
  return encode(x, p);
}

std::uint32_t neg_encoded(std::uint32_t a, int p, int e) {
  Poly x = decode(a, p, e);
  for (int& c : x) c = (p - c) % p;
  return encode(x, p);
}

std::uint32_t mul_encoded(std::uint32_t a, std::uint32_t b, int p, int e, const Poly& modulus) {
  const Poly x = decode(a, p, e);
  const Poly y = decode(b, p, e);
  Poly prod(static_cast<std::size_t>(2 * e - 1), 0);
  for (int i = 0; i < e; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < e; ++j) {
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = (slot + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p;
    }
  }
  Poly r = poly_mod(std::move(prod), modulus, p);
  r.resize(static_cast<std::size_t>(e), 0);
  return encode(r, p);
}

void build_full(detail::FieldTables& t) {
  const std::uint32_t q = t.q;
  t.add.assign(static_cast<std::size_t>(q) * q, 0);
  t.mul.assign(static_cast<std::size_t>(q) * q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = a; b < q; ++b) {
      const auto s = static_cast<std::uint16_t>(add_encoded(a, b, t.p, t.e));
      const auto m = static_cast<std::uint16_t>(mul_encoded(a, b, t.p, t.e, t.modulus));
      t.add[a * q + b] = t.add[b * q + a] = s;
      t.mul[a * q + b] = t.mul[b * q + a] = m;
    }
  }
  t.inv.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (t.mul[a * q + b] == 1) {
        t.inv[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
}

void build_logs(detail::FieldTables& t) {
  const std::uint32_t q = t.q;
  const std::uint32_t order = q - 1;
  std::uint32_t primitive = 0;
  for (std::uint32_t g = 2; g < q && primitive == 0; ++g) {
    std::uint32_t x = g;
    std::uint32_t k = 1;
    while (x != 1) {
      x = mul_encoded(x, g, t.p, t.e, t.modulus);
      ++k;
    }
    if (k == order) primitive = g;
  }
  t.exp.assign(order, 0);
  t.log.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    t.exp[i] = static_cast<std::uint16_t>(x);
    t.log[x] = static_cast<std::uint16_t>(i);
    x = mul_encoded(x, primitive, t.p, t.e, t.modulus);
  }
  // zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0.
  t.zech.assign(order, -1);
  for (std::uint32_t k = 0; k < order; ++k) {
    const std::uint32_t s = add_encoded(1, t.exp[k], t.p, t.e);
    t.zech[k] = s == 0 ? -1 : static_cast<std::int32_t>(t.log[s]);
  }
  t.inv.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) t.inv[a] = t.exp[(order - t.log[a]) % order];
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(int p, const std::vector<int>& poly) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const int deg = static_cast<int>(poly.size()) - 1;
  for (int dg = 1; dg <= deg / 2; ++dg) {
    // All monic divisors of degree dg.
    std::uint32_t count = 1;
    for (int i = 0; i < dg; ++i) count *= static_cast<std::uint32_t>(p);
    for (std::uint32_t t = 0; t < count; ++t) {
      Poly g = decode(t, p, dg);
      g.push_back(1);
      if (poly_mod(poly, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> canonical_modulus(int p, int e) {
  std::uint32_t count = 1;
  for (int i = 0; i < e; ++i) count *= static_cast<std::uint32_t>(p);
  for (std::uint32_t t = 0; t < count; ++t) {
    Poly m = decode(t, p, e);
    m.push_back(1);
    if (is_irreducible(p, m)) return m;
  }
  throw Error(ErrorCode::NotIrreducible, "no irreducible polynomial found");  // unreachable for valid p, e
}

FieldSpec::FieldSpec(std::shared_ptr<const detail::FieldTables> tables) : t_(std::move(tables)) {}

FieldSpec FieldSpec::make(int p, int e, std::optional<std::vector<int>> modulus) {
  if (p < 2 || !is_prime(static_cast<std::uint32_t>(p))) {
    throw Error(ErrorCode::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
  }
  if (e < 1) throw Error(ErrorCode::OutOfRange, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldOrder) {
      throw Error(ErrorCode::OrderTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
    }
  }

  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<std::uint32_t>(q);
  if (modulus) {
    auto& m = *modulus;
    if (static_cast<int>(m.size()) != e + 1 || m.back() != 1) {
      throw Error(ErrorCode::NotIrreducible, "modulus must be monic of degree " + std::to_string(e));
    }
    for (int c : m) {
      if (c < 0 || c >= p) throw Error(ErrorCode::OutOfRange, "modulus coefficient outside GF(p)");
    }
    if (!is_irreducible(p, m)) throw Error(ErrorCode::NotIrreducible, "modulus is reducible over GF(p)");
    t->modulus = m;
  } else {
    t->modulus = canonical_modulus(p, e);
  }

  t->full = t->q <= kFullTableMaxOrder;
  t->neg.assign(t->q, 0);
  for (std::uint32_t a = 0; a < t->q; ++a) t->neg[a] = static_cast<std::uint16_t>(neg_encoded(a, p, e));
  if (t->full) {
    build_full(*t);
  } else {
    build_logs(*t);
  }
  return FieldSpec(std::move(t));
}

FieldSpec FieldSpec::of_order(std::uint32_t q) {
  if (q < 2) throw Error(ErrorCode::NotPrime, "field order must be a prime power >= 2");
  if (q > kMaxFieldOrder) throw Error(ErrorCode::OrderTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  return make(static_cast<int>(p), e);
}

int FieldSpec::characteristic() const noexcept { return t_->p; }
int FieldSpec::degree() const noexcept { return t_->e; }
std::uint32_t FieldSpec::order() const noexcept { return t_->q; }
const std::vector<int>& FieldSpec::modulus() const noexcept { return t_->modulus; }
bool FieldSpec::has_full_tables() const noexcept { return t_->full; }

FieldElement FieldSpec::element(std::uint32_t value) const {
  if (value >= t_->q) {
    throw Error(ErrorCode::OutOfRange, "element " + std::to_string(value) + " not in GF(" + std::to_string(t_->q) + ")");
  }
  return FieldElement{static_cast<std::uint16_t>(value)};
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const noexcept {
  const auto& t = *t_;
  if (t.full) return FieldElement{t.add[a.value * t.q + b.value]};
  if (a.value == 0) return b;
  if (b.value == 0) return a;
  const std::uint32_t order = t.q - 1;
  const std::uint32_t i = t.log[a.value];
  const std::uint32_t j = t.log[b.value];
  const std::int32_t z = t.zech[(j + order - i) % order];
  if (z < 0) return FieldElement{0};
  return FieldElement{t.exp[(i + static_cast<std::uint32_t>(z)) % order]};
}

FieldElement FieldSpec::neg(FieldElement a) const noexcept { return FieldElement{t_->neg[a.value]}; }

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const noexcept {
  const auto& t = *t_;
  if (t.full) return FieldElement{t.mul[a.value * t.q + b.value]};
  if (a.value == 0 || b.value == 0) return FieldElement{0};
  return FieldElement{t.exp[(static_cast<std::uint32_t>(t.log[a.value]) + t.log[b.value]) % (t.q - 1)]};
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return FieldElement{t_->inv[a.value]};
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t k) const noexcept {
  FieldElement result = one();
  FieldElement base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

void FieldSpec::axpy(std::span<FieldElement> dst, FieldElement c, std::span<const FieldElement> src) const noexcept {
  if (c.value == 0) return;
  const auto& t = *t_;
  const std::size_t len = std::min(dst.size(), src.size());
  if (t.full) {
    const std::uint16_t* mrow = &t.mul[static_cast<std::size_t>(c.value) * t.q];
    if (t.p == 2) {
      if (c.value == 1) {
        for (std::size_t i = 0; i < len; ++i) dst[i].value ^= src[i].value;
      } else {
        for (std::size_t i = 0; i < len; ++i) dst[i].value ^= mrow[src[i].value];
      }
      return;
    }
    const std::uint16_t* add = t.add.data();
    for (std::size_t i = 0; i < len; ++i) {
      dst[i].value = add[static_cast<std::size_t>(dst[i].value) * t.q + mrow[src[i].value]];
    }
    return;
  }
  for (std::size_t i = 0; i < len; ++i) dst[i] = add(dst[i], mul(c, src[i]));
}

void FieldSpec::scale(std::span<FieldElement> v, FieldElement c) const noexcept {
  for (auto& x : v) x = mul(x, c);
}

FieldSpec::AxiomReport FieldSpec::check_axioms() const {
  AxiomReport report;
  const std::uint32_t q = order();
  auto fail = [&report](const std::string& what) {
    if (report.ok) report.failure = what;
    report.ok = false;
  };
  auto check_triple = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    const FieldElement a{static_cast<std::uint16_t>(x)};
    const FieldElement b{static_cast<std::uint16_t>(y)};
    const FieldElement c{static_cast<std::uint16_t>(z)};
    ++report.checks;
    if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
    if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
  };

  for (std::uint32_t x = 0; x < q; ++x) {
    const FieldElement a{static_cast<std::uint16_t>(x)};
    ++report.checks;
    if (add(a, zero()) != a || mul(a, one()) != a) fail("identity");
    if (add(a, neg(a)) != zero()) fail("additive inverse");
    if (x != 0) {
      if (mul(a, inv(a)) != one()) fail("multiplicative inverse");
      if (pow(a, q - 1) != one()) fail("Fermat");
    }
  }

  if (q <= 64) {
    for (std::uint32_t x = 0; x < q; ++x)
      for (std::uint32_t y = 0; y < q; ++y)
        for (std::uint32_t z = 0; z < q; ++z) check_triple(x, y, z);
  } else {
    report.exhaustive = false;
    std::mt19937_64 gen(0x5eedf1e1dULL ^ q);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int i = 0; i < 20000; ++i) check_triple(pick(gen), pick(gen), pick(gen));
  }
  return report;
}

bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
  return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->e == b.t_->e && a.t_->modulus == b.t_->modulus);
}

}  // namespace hilbertkit
