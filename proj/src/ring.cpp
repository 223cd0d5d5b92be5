#include "ringlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ringlab/errors.hpp"
#include "ringlab/ideal.hpp"

namespace ringlab {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

void validate_tables(std::size_t n, const std::vector<std::uint32_t>& add,
                     const std::vector<std::uint32_t>& mul, std::uint32_t zero, std::uint32_t one) {
  auto fail = [](const std::string& what) { throw InvalidStructure("invalid ring tables: " + what); };
  if (n < 2) fail("order must be at least 2 (the zero ring is excluded)");
  if (add.size() != n * n || mul.size() != n * n) fail("table size does not match order");
  if (zero >= n || one >= n) fail("identity index out of range");
  if (zero == one) fail("zero equals one");
  for (auto v : add)
    if (v >= n) fail("addition table entry out of range");
  for (auto v : mul)
    if (v >= n) fail("multiplication table entry out of range");

  auto A = [&](std::size_t a, std::size_t b) { return add[a * n + b]; };
  auto M = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };
  auto pair_text = [](std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };

  for (std::size_t a = 0; a < n; ++a) {
    if (A(a, zero) != a) fail("zero is not an additive identity at " + std::to_string(a));
    if (M(a, one) != a) fail("one is not a multiplicative identity at " + std::to_string(a));
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) fail("addition not commutative at " + pair_text(a, b));
      if (M(a, b) != M(b, a)) fail("multiplication not commutative at " + pair_text(a, b));
      if (A(a, b) == zero) has_inverse = true;
    }
    if (!has_inverse) fail("no additive inverse for " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab_add = A(a, b);
      const std::size_t ab_mul = M(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (A(ab_add, c) != A(a, A(b, c))) fail("addition not associative at " + pair_text(a, b));
        if (M(ab_mul, c) != M(a, M(b, c))) fail("multiplication not associative at " + pair_text(a, b));
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) fail("distributivity fails at " + pair_text(a, b));
      }
    }
}

}  // namespace

RingPtr FiniteRing::create(std::string label, std::size_t order, std::vector<std::uint32_t> add_table,
                           std::vector<std::uint32_t> mul_table, std::uint32_t zero, std::uint32_t one,
                           std::vector<std::string> names) {
  validate_tables(order, add_table, mul_table, zero, one);
  if (names.empty()) {
    names.reserve(order);
    for (std::size_t i = 0; i < order; ++i) names.push_back(std::to_string(i));
  }
  if (names.size() != order) throw InvalidStructure("invalid ring tables: name list size mismatch");
  return std::make_shared<const FiniteRing>(Token{}, std::move(label), order, std::move(add_table),
                                            std::move(mul_table), zero, one, std::move(names));
}

FiniteRing::FiniteRing(Token, std::string label, std::size_t order, std::vector<std::uint32_t> add_table,
                       std::vector<std::uint32_t> mul_table, std::uint32_t zero, std::uint32_t one,
                       std::vector<std::string> names)
    : label_(std::move(label)),
      order_(order),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      neg_(order),
      zero_(zero),
      one_(one),
      names_(std::move(names)),
      units_(order),
      nonunits_(order) {
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = 0; b < order_; ++b) {
      if (add_[a * order_ + b] == zero_) neg_[a] = b;
      if (mul_[a * order_ + b] == one_) units_.insert(a);
    }
  }
  nonunits_ = units_.complement();
  nonunit_list_ = nonunits_.to_vector();
}

void FiniteRing::require(Element e) const {
  if (e.index >= order_)
    throw PreconditionError("element index " + std::to_string(e.index) + " is not in ring " + label_);
}

Element FiniteRing::from_integer(long long n) const {
  if (n < 0) return neg(from_integer(-n));
  Element acc = zero();
  // Double-and-add keeps this cheap for large n.
  Element base = one();
  auto k = static_cast<unsigned long long>(n);
  while (k != 0) {
    if (k & 1U) acc = add(acc, base);
    base = add(base, base);
    k >>= 1U;
  }
  return acc;
}

Element FiniteRing::power(Element a, std::size_t k) const {
  Element acc = one();
  for (std::size_t i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

bool FiniteRing::find_by_name(const std::string& text, Element& out) const {
  const std::string key = strip_spaces(text);
  if (key.empty()) return false;
  for (std::uint32_t i = 0; i < order_; ++i) {
    if (strip_spaces(names_[i]) == key) {
      out = Element{i};
      return true;
    }
  }
  std::size_t pos = 0;
  bool negative = false;
  if (key[0] == '-') {
    negative = true;
    pos = 1;
  }
  if (pos == key.size()) return false;
  long long value = 0;
  for (; pos < key.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(key[pos]))) return false;
    value = value * 10 + (key[pos] - '0');
    if (value > 1'000'000'000LL) return false;
  }
  out = from_integer(negative ? -value : value);
  return true;
}

bool FiniteRing::same_tables(const FiniteRing& other) const noexcept {
  return order_ == other.order_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
         mul_ == other.mul_;
}

bool is_prime_number(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RingPtr make_zn(long long n) {
  if (n < 2) throw InvalidOrder("Z<n> requires n >= 2, got " + std::to_string(n));
  const auto order = static_cast<std::size_t>(n);
  std::vector<std::uint32_t> add(order * order), mul(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      add[a * order + b] = static_cast<std::uint32_t>((a + b) % order);
      mul[a * order + b] = static_cast<std::uint32_t>((a * b) % order);
    }
  return FiniteRing::create("Z" + std::to_string(n), order, std::move(add), std::move(mul), 0, 1 % order);
}

std::string poly_to_string(const std::vector<long long>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const long long c = coeffs[i];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c;
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

RingPtr make_poly_quotient(long long p, const std::vector<long long>& coeffs) {
  if (!is_prime_number(p)) throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
  std::vector<long long> f;
  for (auto c : coeffs) f.push_back(((c % p) + p) % p);
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2) throw InvalidPolynomial("polynomial must have degree >= 1");
  if (f.back() != 1) throw InvalidPolynomial("polynomial must be monic");
  const std::size_t deg = f.size() - 1;

  std::size_t order = 1;
  for (std::size_t i = 0; i < deg; ++i) {
    order *= static_cast<std::size_t>(p);
    if (order > 4096) throw InvalidPolynomial("quotient ring too large");
  }
  const auto up = static_cast<std::size_t>(p);

  auto decode = [&](std::size_t idx) {
    std::vector<long long> c(deg, 0);
    for (std::size_t i = 0; i < deg; ++i) {
      c[i] = static_cast<long long>(idx % up);
      idx /= up;
    }
    return c;
  };
  auto encode = [&](const std::vector<long long>& c) {
    std::size_t idx = 0;
    for (std::size_t i = deg; i-- > 0;) idx = idx * up + static_cast<std::size_t>(c[i]);
    return static_cast<std::uint32_t>(idx);
  };

  std::vector<std::vector<long long>> elems(order);
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < order; ++i) {
    elems[i] = decode(i);
    names[i] = poly_to_string(elems[i]);
  }

  std::vector<std::uint32_t> add(order * order), mul(order * order);
  std::vector<long long> prod(2 * deg, 0), sum(deg, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < deg; ++i) sum[i] = (elems[a][i] + elems[b][i]) % p;
      add[a * order + b] = encode(sum);

      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t i = 0; i < deg; ++i)
        for (std::size_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
      // Reduce modulo the monic f, highest degree first.
      for (std::size_t k = 2 * deg - 1; k >= deg; --k) {
        const long long lead = prod[k];
        if (lead != 0) {
          for (std::size_t i = 0; i <= deg; ++i) {
            const std::size_t t = k - deg + i;
            prod[t] = ((prod[t] - lead * f[i]) % p + p) % p;
          }
        }
        if (k == deg) break;
      }
      std::vector<long long> rem(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(deg));
      mul[a * order + b] = encode(rem);
    }

  std::vector<long long> one_poly(deg, 0);
  one_poly[0] = 1;
  const std::string label = "Z" + std::to_string(p) + "[x]/(" + poly_to_string(f) + ")";
  return FiniteRing::create(label, order, std::move(add), std::move(mul), 0, encode(one_poly), std::move(names));
}

std::vector<Element> units(const FiniteRing& ring) {
  std::vector<Element> out;
  ring.unit_set().for_each([&](std::uint32_t i) { out.push_back(Element{i}); });
  return out;
}

std::vector<Element> nonunits(const FiniteRing& ring) {
  std::vector<Element> out;
  for (auto i : ring.nonunit_list()) out.push_back(Element{i});
  return out;
}

}  // namespace ringlab
