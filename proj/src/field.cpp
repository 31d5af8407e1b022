#include "drgmd/field.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "drgmd/error.hpp"

namespace drg {

namespace {

using Poly = std::vector<Code>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(const Field& f, Poly a, std::span<const Code> m) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    const Code lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = f.sub(a[shift + i], f.mul(lead, m[i]));
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Field& f, std::span<const Code> a, std::span<const Code> b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  return out;
}

Poly digits_of(int code, int base, int count) {
  Poly d(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<Code>(code % base);
    code /= base;
  }
  return d;
}

int code_of(std::span<const Code> digits, int base) {
  int code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * base + digits[i];
  return code;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(int q, int& p, int& m) noexcept {
  if (q < 2) return false;
  int d = 2;
  while (q % d != 0) ++d;
  int rest = q;
  int k = 0;
  while (rest % d == 0) {
    rest /= d;
    ++k;
  }
  if (rest != 1) return false;
  p = d;
  m = k;
  return true;
}

FieldPtr Field::prime(int p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxFieldOrder) {
    throw Error(ErrorCode::TooLarge, "field order " + std::to_string(p) + " exceeds 4096");
  }
  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->m_ = 1;
  f->q_ = p;
  f->base_q_ = p;
  f->modulus_ = {0, 1};
  const auto n = static_cast<std::size_t>(p);
  f->add_.resize(n * n);
  f->mul_.resize(n * n);
  f->neg_.resize(n);
  f->inv_.assign(n, 0);
  for (int a = 0; a < p; ++a) {
    f->neg_[static_cast<std::size_t>(a)] = static_cast<Code>((p - a) % p);
    for (int b = 0; b < p; ++b) {
      const auto i = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
      f->add_[i] = static_cast<Code>((a + b) % p);
      f->mul_[i] = static_cast<Code>((a * b) % p);
      if ((a * b) % p == 1) f->inv_[static_cast<std::size_t>(a)] = static_cast<Code>(b);
    }
  }
  return f;
}

FieldPtr Field::extension(const Field& base, std::span<const Code> modulus) {
  const int d = static_cast<int>(modulus.size()) - 1;
  if (d < 1 || modulus.back() != 1) throw Error(ErrorCode::BadParams, "modulus must be monic of degree >= 1");
  long long order = 1;
  for (int i = 0; i < d; ++i) {
    order *= base.order();
    if (order > kMaxFieldOrder) {
      throw Error(ErrorCode::TooLarge, "field order exceeds 4096");
    }
  }
  const int qb = base.order();
  const int q = static_cast<int>(order);

  std::shared_ptr<Field> f(new Field());
  f->p_ = base.characteristic();
  f->m_ = base.degree() * d;
  f->q_ = q;
  f->base_q_ = qb;
  f->modulus_.assign(modulus.begin(), modulus.end());

  std::vector<Poly> digits(static_cast<std::size_t>(q));
  for (int c = 0; c < q; ++c) digits[static_cast<std::size_t>(c)] = digits_of(c, qb, d);

  const auto n = static_cast<std::size_t>(q);
  f->add_.resize(n * n);
  f->neg_.resize(n);
  Poly tmp(static_cast<std::size_t>(d));
  for (std::size_t a = 0; a < n; ++a) {
    for (int i = 0; i < d; ++i) tmp[static_cast<std::size_t>(i)] = base.neg(digits[a][static_cast<std::size_t>(i)]);
    f->neg_[a] = static_cast<Code>(code_of(tmp, qb));
    for (std::size_t b = 0; b < n; ++b) {
      for (int i = 0; i < d; ++i) {
        const auto k = static_cast<std::size_t>(i);
        tmp[k] = base.add(digits[a][k], digits[b][k]);
      }
      f->add_[a * n + b] = static_cast<Code>(code_of(tmp, qb));
    }
  }

  auto mulmod = [&](int a, int b) {
    Poly r = poly_mod(base, poly_mul(base, digits[static_cast<std::size_t>(a)], digits[static_cast<std::size_t>(b)]), modulus);
    r.resize(static_cast<std::size_t>(d), 0);
    return code_of(r, qb);
  };

  // Discrete log tables from the first primitive element.
  std::vector<Code> exp_table(n, 0);
  std::vector<int> log_table(n, -1);
  bool found = false;
  for (int g = (q == 2 ? 1 : 2); g < q && !found; ++g) {
    int x = 1;
    int k = 0;
    std::fill(log_table.begin(), log_table.end(), -1);
    do {
      if (log_table[static_cast<std::size_t>(x)] >= 0) break;
      log_table[static_cast<std::size_t>(x)] = k;
      exp_table[static_cast<std::size_t>(k)] = static_cast<Code>(x);
      x = mulmod(x, g);
      ++k;
    } while (x != 1);
    found = (x == 1 && k == q - 1);
  }
  if (!found) throw Error(ErrorCode::BadParams, "modulus is not irreducible");

  f->mul_.assign(n * n, 0);
  f->inv_.assign(n, 0);
  for (std::size_t a = 1; a < n; ++a) {
    const int la = log_table[a];
    f->inv_[a] = exp_table[static_cast<std::size_t>((q - 1 - la) % (q - 1))];
    for (std::size_t b = 1; b < n; ++b) {
      f->mul_[a * n + b] = exp_table[static_cast<std::size_t>((la + log_table[b]) % (q - 1))];
    }
  }
  return f;
}

Code Field::inv(Code a) const {
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  return inv_[a];
}

Code Field::pow(Code a, std::uint64_t k) const noexcept {
  Code result = 1;
  while (k) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

bool Field::same_as(const Field& other) const noexcept {
  return this == &other || (p_ == other.p_ && m_ == other.m_ && q_ == other.q_ &&
                            base_q_ == other.base_q_ && modulus_ == other.modulus_);
}

bool is_irreducible(const Field& f, std::span<const Code> poly) {
  const int d = static_cast<int>(poly.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  const int qb = f.order();
  for (int k = 1; k <= d / 2; ++k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= qb;
    for (long long t = 0; t < count; ++t) {
      Poly div = digits_of(static_cast<int>(t), qb, k);
      div.push_back(1);
      if (poly_mod(f, Poly(poly.begin(), poly.end()), div).empty()) return false;
    }
  }
  return true;
}

const ExtField& extend_field(const FieldPtr& base, int d) {
  if (d < 1) throw Error(ErrorCode::BadParams, "extension degree must be positive");
  long long order = 1;
  for (int i = 0; i < d; ++i) {
    order *= base->order();
    if (order > kMaxFieldOrder) {
      throw Error(ErrorCode::TooLarge, "extension order exceeds 4096");
    }
  }

  static std::map<std::pair<const Field*, int>, std::unique_ptr<ExtField>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto key = std::make_pair(base.get(), d);
  if (auto it = cache.find(key); it != cache.end()) return *it->second;

  auto ext = std::make_unique<ExtField>();
  ext->base = base;
  ext->degree = d;
  if (d == 1) {
    ext->modulus = {0, 1};
    ext->field = base;
  } else {
    const int qb = base->order();
    const auto count = static_cast<int>(order);
    for (int t = 0; t < count; ++t) {
      Poly cand = digits_of(t, qb, d);
      cand.push_back(1);
      if (is_irreducible(*base, cand)) {
        ext->modulus = std::move(cand);
        break;
      }
    }
    ext->field = Field::extension(*base, ext->modulus);
  }
  return *cache.emplace(key, std::move(ext)).first->second;
}

FieldPtr make_field(int p, int m) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::BadParams, "field degree must be positive");
  long long order = 1;
  for (int i = 0; i < m; ++i) {
    order *= p;
    if (order > kMaxFieldOrder) throw Error(ErrorCode::TooLarge, "field order exceeds 4096");
  }
  FieldPtr prime_field;
  {
    static std::map<int, FieldPtr> primes;
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto& slot = primes[p];
    if (!slot) slot = Field::prime(p);
    prime_field = slot;
  }
  if (m == 1) return prime_field;
  return extend_field(prime_field, m).field;
}

FieldPtr field_of_order(int q) {
  int p = 0;
  int m = 0;
  if (!prime_power(q, p, m)) {
    throw Error(ErrorCode::BadParams, std::to_string(q) + " is not a prime power");
  }
  return make_field(p, m);
}

std::vector<Code> ExtField::coordinates(Code a) const {
  return digits_of(a, base->order(), degree);
}

Code ExtField::from_coordinates(std::span<const Code> coords) const {
  return static_cast<Code>(code_of(coords, base->order()));
}

std::vector<std::vector<Code>> ExtField::multiplication_matrix(Code a) const {
  std::vector<std::vector<Code>> rows;
  rows.reserve(static_cast<std::size_t>(degree));
  int basis = 1;
  for (int i = 0; i < degree; ++i) {
    rows.push_back(coordinates(field->mul(a, static_cast<Code>(basis))));
    basis *= base->order();
  }
  return rows;
}

}  // namespace drg
