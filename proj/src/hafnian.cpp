#include "ddf/hafnian.hpp"

#include <functional>
#include <stdexcept>

#include "ddf/families.hpp"

namespace ddf {

UpperTriangularArray::UpperTriangularArray(int half_size) : n_(half_size) {
  if (half_size < 0)
    throw std::domain_error("UpperTriangularArray: negative size");
  size_t count = half_size == 0
                     ? 0
                     : static_cast<size_t>(half_size) * (2 * half_size - 1);
  entries_.assign(count, ExactInt(0));
}

UpperTriangularArray UpperTriangularArray::constant_rows(
    const std::vector<ExactInt>& x) {
  if (x.size() % 2 != 1 && !x.empty())
    throw std::invalid_argument("constant_rows: length must be 2n-1");
  int n = static_cast<int>(x.size() + 1) / 2;
  UpperTriangularArray t(n);
  for (int i = 1; i < 2 * n; ++i)
    for (int j = i + 1; j <= 2 * n; ++j) t.at(i, j) = x[i - 1];
  return t;
}

const ExactInt& UpperTriangularArray::at(int i, int j) const {
  return const_cast<UpperTriangularArray*>(this)->at(i, j);
}

ExactInt& UpperTriangularArray::at(int i, int j) {
  if (!(1 <= i && i < j && j <= 2 * n_))
    throw std::out_of_range("UpperTriangularArray: bad index");
  // row i holds 2n - i entries, columns i+1 .. 2n
  size_t offset = 0;
  for (int r = 1; r < i; ++r) offset += 2 * n_ - r;
  return entries_[offset + (j - i - 1)];
}

ExactInt hafnian_bruteforce(const UpperTriangularArray& t) {
  ExactInt sum = 0;
  for (const auto& m : enumerate_matchings(t.half_size())) {
    ExactInt term = 1;
    for (auto [a, b] : m.pairs) term *= t.at(a, b);
    sum += term;
  }
  return sum;
}

int matching_sign(const PerfectMatching& m) {
  std::vector<int> perm;
  for (auto [a, b] : m.pairs) {
    perm.push_back(a);
    perm.push_back(b);
  }
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

ExactInt pfaffian_bruteforce(const UpperTriangularArray& t) {
  ExactInt sum = 0;
  for (const auto& m : enumerate_matchings(t.half_size())) {
    ExactInt term = matching_sign(m);
    for (auto [a, b] : m.pairs) term *= t.at(a, b);
    sum += term;
  }
  return sum;
}

ExactInt hafnian_constant_rows(const std::vector<ExactInt>& x) {
  if (x.size() % 2 != 1 && !x.empty())
    throw std::invalid_argument("hafnian_constant_rows: length must be 2n-1");
  int n = static_cast<int>(x.size() + 1) / 2;
  ExactInt sum = 0;
  std::vector<int> a(n);
  std::function<void(int, const ExactInt&)> rec = [&](int i,
                                                      const ExactInt& prod) {
    if (i == n) {
      sum += prod;
      return;
    }
    int lo = i == 0 ? 1 : a[i - 1] + 1;
    for (int v = lo; v <= 2 * i + 1; ++v) {
      a[i] = v;
      rec(i + 1, prod * ExactInt(2 * (i + 1) - v) * x[v - 1]);
    }
  };
  rec(0, ExactInt(1));
  return sum;
}

ExactInt pfaffian_constant_rows(const std::vector<ExactInt>& x) {
  if (x.size() % 2 != 1 && !x.empty())
    throw std::invalid_argument("pfaffian_constant_rows: length must be 2n-1");
  ExactInt prod = 1;
  for (size_t i = 0; i < x.size(); i += 2) prod *= x[i];
  return prod;
}

std::pair<std::vector<int>, std::vector<int>> dyck_codes(
    const std::string& dyck_steps) {
  if (!is_dyck(dyck_steps)) throw std::invalid_argument("not a Dyck path");
  return {upstep_positions(dyck_steps), upstep_top_heights(dyck_steps)};
}

}  // namespace ddf
