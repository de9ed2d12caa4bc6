#include "ddf/exact.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace ddf {

namespace {

// Unbounded memo table; the identity checks re-read the same entries
// constantly. Guarded so concurrent verification jobs can share it.
template <typename Key>
class Memo {
 public:
  template <typename Fn>
  ExactInt get(const Key& key, Fn&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    ExactInt value = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, ExactInt> table_;
};

}  // namespace

ExactInt double_factorial(long k) {
  if (k < -3) throw std::domain_error("double_factorial: argument below -3");
  if (k < 0 && k % 2 == 0)
    throw std::domain_error("double_factorial: negative even argument");
  static Memo<long> memo;
  return memo.get(k, [k] {
    if (k == -3) return ExactInt(-1);
    if (k == -1 || k == 0) return ExactInt(1);
    ExactInt r = 1;
    for (long v = k; v >= 1; v -= 2) r *= v;
    return r;
  });
}

ExactInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactInt pow2(long e) {
  if (e < 0) throw std::domain_error("pow2: negative exponent");
  ExactInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

ExactInt falling_factorial(long x, long r) {
  if (r < 0) throw std::domain_error("falling_factorial: negative length");
  static Memo<std::pair<long, long>> memo;
  return memo.get({x, r}, [x, r] {
    ExactInt p = 1;
    for (long j = 0; j < r; ++j) p *= ExactInt(x - j);
    return p;
  });
}

ExactInt binomial(long n, long k, bool minus_one_convention) {
  if (k < 0) {
    if (minus_one_convention && n == -1 && k == -1) return 1;
    return 0;
  }
  if (n >= 0 && k > n) return 0;
  static Memo<std::pair<long, long>> memo;
  return memo.get({n, k}, [n, k] {
    ExactInt num = falling_factorial(n, k);
    ExactInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
    return q;
  });
}

ExactInt rising_double_factorial(long k, long n) {
  if (n < 0) throw std::domain_error("rising_double_factorial: negative length");
  static Memo<std::pair<long, long>> memo;
  return memo.get({k, n}, [k, n] {
    ExactInt p = 1;
    for (long j = 0; j < n; ++j) p *= ExactInt(k + 2 * j);
    return p;
  });
}

ExactInt stirling_cycle(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  static Memo<std::pair<long, long>> memo;
  return memo.get({n, k}, [n, k] {
    return ExactInt(n - 1) * stirling_cycle(n - 1, k) +
           stirling_cycle(n - 1, k - 1);
  });
}

ExactInt second_order_eulerian(long n, long k) {
  if (n < 1 || k < 1 || k > n) return 0;
  if (n == 1) return 1;
  static Memo<std::pair<long, long>> memo;
  return memo.get({n, k}, [n, k] {
    return ExactInt(k) * second_order_eulerian(n - 1, k) +
           ExactInt(2 * n - k) * second_order_eulerian(n - 1, k - 1);
  });
}

}  // namespace ddf
