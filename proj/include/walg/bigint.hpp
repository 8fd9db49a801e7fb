#pragma once

// Arbitrary-precision signed integers on base-2^32 limbs.
// Only the operations the rational layer needs: ring arithmetic,
// truncated division, gcd, decimal conversion.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <utility>
#include <string_view>
#include <vector>

namespace walg {

// Limb storage with two limbs inline; almost every value in this codebase
// fits 64 bits, so the common case never touches the heap.
class LimbVec {
public:
  LimbVec() = default;
  LimbVec(const LimbVec& o) { *this = o; }
  LimbVec(LimbVec&& o) noexcept { *this = std::move(o); }
  ~LimbVec() { delete[] heap_; }

  LimbVec& operator=(const LimbVec& o) {
    if (this == &o) return *this;
    size_ = 0;
    reserve(o.size_);
    std::memcpy(data(), o.data(), o.size_ * sizeof(std::uint32_t));
    size_ = o.size_;
    return *this;
  }
  LimbVec& operator=(LimbVec&& o) noexcept {
    if (this == &o) return *this;
    delete[] heap_;
    heap_ = o.heap_;
    cap_ = o.cap_;
    size_ = o.size_;
    if (!heap_)
      std::memcpy(inline_, o.inline_, o.size_ * sizeof(std::uint32_t));
    o.heap_ = nullptr;
    o.cap_ = kInline;
    o.size_ = 0;
    return *this;
  }

  std::uint32_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::uint32_t operator[](std::uint32_t i) const { return data()[i]; }
  std::uint32_t& operator[](std::uint32_t i) { return data()[i]; }
  std::uint32_t back() const { return data()[size_ - 1]; }

  void push_back(std::uint32_t v) {
    if (size_ == cap_) reserve(cap_ * 2);
    data()[size_++] = v;
  }
  void pop_back() { --size_; }
  void clear() { size_ = 0; }

  void assign(std::uint32_t n, std::uint32_t v) {
    size_ = 0;
    reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) data()[i] = v;
    size_ = n;
  }

  const std::uint32_t* begin() const { return data(); }
  const std::uint32_t* end() const { return data() + size_; }
  std::uint32_t* begin() { return data(); }
  std::uint32_t* end() { return data() + size_; }

  friend bool operator==(const LimbVec& a, const LimbVec& b) {
    return a.size_ == b.size_ &&
           std::memcmp(a.data(), b.data(),
                       a.size_ * sizeof(std::uint32_t)) == 0;
  }

private:
  static constexpr std::uint32_t kInline = 2;

  std::uint32_t inline_[kInline];
  std::uint32_t* heap_ = nullptr;
  std::uint32_t size_ = 0;
  std::uint32_t cap_ = kInline;

  const std::uint32_t* data() const { return heap_ ? heap_ : inline_; }
  std::uint32_t* data() { return heap_ ? heap_ : inline_; }

  void reserve(std::uint32_t n) {
    if (n <= cap_) return;
    std::uint32_t cap = cap_;
    while (cap < n) cap *= 2;
    auto* mem = new std::uint32_t[cap];
    std::memcpy(mem, data(), size_ * sizeof(std::uint32_t));
    delete[] heap_;
    heap_ = mem;
    cap_ = cap;
  }
};

class Int {
public:
  Int() = default;

  Int(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    while (m != 0) {
      mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
      m >>= 32;
    }
  }
  Int(int v) : Int(static_cast<long long>(v)) {}

  static Int from_string(std::string_view s) {
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("empty integer literal");
    Int r;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("bad digit in integer literal");
      r.mul_small_add(10, static_cast<std::uint32_t>(s[i] - '0'));
    }
    if (neg && r.sign_ != 0) r.sign_ = -1;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  bool fits_longlong() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = mag_value();
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
  }
  long long to_longlong() const {
    assert(fits_longlong());
    unsigned long long m = mag_value();
    return sign_ < 0 ? -static_cast<long long>(m - 1) - 1
                     : static_cast<long long>(m);
  }

  double to_double() const {
    double v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;)
      v = v * 4294967296.0 + static_cast<double>(mag_[i]);
    return sign_ < 0 ? -v : v;
  }

  Int abs() const {
    Int r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  Int operator-() const {
    Int r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend Int operator+(const Int& a, const Int& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    Int r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return Int();
      const Int& big = c > 0 ? a : b;
      const Int& small = c > 0 ? b : a;
      r.mag_ = sub_mag(big.mag_, small.mag_);
      r.sign_ = big.sign_;
    }
    return r;
  }
  friend Int operator-(const Int& a, const Int& b) { return a + (-b); }

  friend Int operator*(const Int& a, const Int& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return Int();
    Int r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.mag_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                            r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.mag_[i + b.mag_.size()] = static_cast<std::uint32_t>(carry);
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  Int& operator+=(const Int& o) { return *this = *this + o; }
  Int& operator-=(const Int& o) { return *this = *this - o; }
  Int& operator*=(const Int& o) { return *this = *this * o; }

  // Truncated toward zero; remainder carries the dividend's sign.
  static std::pair<Int, Int> divmod(const Int& a, const Int& b) {
    if (b.sign_ == 0) throw std::domain_error("division by zero");
    if (a.sign_ == 0) return {Int(), Int()};
    if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
      unsigned long long x = a.mag_value(), y = b.mag_value();
      Int quot, rem;
      quot.assign_u64(x / y, a.sign_ * b.sign_);
      rem.assign_u64(x % y, a.sign_);
      return {std::move(quot), std::move(rem)};
    }
    auto [qm, rm] = divmod_mag(a.mag_, b.mag_);
    Int quot, rem;
    quot.mag_ = std::move(qm);
    quot.trim();
    quot.sign_ = quot.mag_.empty() ? 0 : a.sign_ * b.sign_;
    rem.mag_ = std::move(rm);
    rem.trim();
    rem.sign_ = rem.mag_.empty() ? 0 : a.sign_;
    return {std::move(quot), std::move(rem)};
  }
  friend Int operator/(const Int& a, const Int& b) {
    return divmod(a, b).first;
  }
  friend Int operator%(const Int& a, const Int& b) {
    return divmod(a, b).second;
  }

  static Int gcd(Int a, Int b) {
    if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
      unsigned long long x = a.mag_value(), y = b.mag_value();
      while (y != 0) {
        unsigned long long r = x % y;
        x = y;
        y = r;
      }
      Int g;
      g.assign_u64(x, 1);
      return g;
    }
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
      Int r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  friend bool operator==(const Int& a, const Int& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.sign_ < 0) c = -c;
    return c <=> 0;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    LimbVec chunks;  // base 10^9, little-endian
    LimbVec m = mag_;
    while (!m.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = m.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      chunks.push_back(static_cast<std::uint32_t>(rem));
      while (!m.empty() && m.back() == 0) m.pop_back();
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
      std::string part = std::to_string(chunks[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

private:
  int sign_ = 0;                    // -1, 0, +1
  LimbVec mag_;  // little-endian, no leading zero limbs

  unsigned long long mag_value() const {
    unsigned long long m = 0;
    if (mag_.size() > 1) m = static_cast<unsigned long long>(mag_[1]) << 32;
    if (!mag_.empty()) m |= mag_[0];
    return m;
  }

  void assign_u64(unsigned long long m, int sign) {
    mag_.clear();
    while (m != 0) {
      mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
      m >>= 32;
    }
    sign_ = mag_.empty() ? 0 : sign;
  }

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  void mul_small_add(std::uint32_t f, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& limb : mag_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry != 0) {
      mag_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
    if (!mag_.empty()) sign_ = 1;
  }

  static int cmp_mag(const LimbVec& a,
                     const LimbVec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static LimbVec add_mag(
      const LimbVec& a,
      const LimbVec& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    LimbVec r = big;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                          (i < small.size() ? small[i] : 0);
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      if (carry == 0 && i >= small.size()) break;
    }
    if (carry != 0) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // requires a >= b
  static LimbVec sub_mag(
      const LimbVec& a,
      const LimbVec& b) {
    LimbVec r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                         (i < b.size() ? b[i] : 0);
      borrow = cur < 0;
      if (cur < 0) cur += 0x100000000LL;
      r[i] = static_cast<std::uint32_t>(cur);
      if (borrow == 0 && i >= b.size()) break;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static int bit_length(const LimbVec& m) {
    if (m.empty()) return 0;
    int bits = 32;
    std::uint32_t top = m.back();
    while ((top & 0x80000000U) == 0) {
      top <<= 1;
      --bits;
    }
    return static_cast<int>(m.size() - 1) * 32 + bits;
  }

  static bool test_bit(const LimbVec& m, int i) {
    return (m[static_cast<std::size_t>(i) / 32] >> (i % 32)) & 1U;
  }

  // binary long division on magnitudes
  static std::pair<LimbVec, LimbVec>
  divmod_mag(const LimbVec& a,
             const LimbVec& b) {
    if (cmp_mag(a, b) < 0) return {{}, a};
    int n = bit_length(a);
    LimbVec q, r;
    q.assign(a.size(), 0);
    for (int i = n - 1; i >= 0; --i) {
      // r = (r << 1) | bit i of a
      std::uint32_t carry = test_bit(a, i) ? 1U : 0U;
      for (auto& limb : r) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
      }
      if (carry != 0) r.push_back(carry);
      if (cmp_mag(r, b) >= 0) {
        r = sub_mag(r, b);
        q[static_cast<std::size_t>(i) / 32] |= 1U << (i % 32);
      }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    return {q, r};
  }
};

}  // namespace walg
