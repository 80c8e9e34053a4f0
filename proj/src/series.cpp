#include "tracealg/series.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace tracealg {

TracePolynomial mobius_polynomial(const IndependenceAlphabet& alpha) {
  TracePolynomial P(alpha);
  for (Mask m : alpha.independent_clique_masks()) {
    Word w;
    for (int i : mask_letters(m)) w.push_back(static_cast<char>(i));
    P.add_term(normalize(alpha, w), (mask_popcount(m) % 2) ? -1 : 1);
  }
  return P;
}

namespace {

/// Visits every clique of (X, theta_X) whose total expanded length stays
/// within maxlen (maxlen < 0: unbounded). The callback receives the
/// member indices and the total length.
void for_each_clique(const DerivedAlphabet& X, int maxlen,
                     const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> clique;
  std::vector<int> cands(X.size());
  for (int i = 0; i < X.size(); ++i) cands[i] = i;
  std::function<void(const std::vector<int>&, int)> go = [&](const std::vector<int>& cand,
                                                             int weight) {
    fn(clique, weight);
    for (size_t a = 0; a < cand.size(); ++a) {
      int i = cand[a];
      int w = weight + X.generators[i].length();
      if (maxlen >= 0 && w > maxlen) continue;
      std::vector<int> next;
      for (size_t b = a + 1; b < cand.size(); ++b)
        if (X.related(i, cand[b])) next.push_back(cand[b]);
      clique.push_back(i);
      go(next, w);
      clique.pop_back();
    }
  };
  go(cands, 0);
}

}  // namespace

TracePolynomial mobius_polynomial(const DerivedAlphabet& X, int maxlen) {
  TracePolynomial P(*X.base);
  for_each_clique(X, maxlen, [&](const std::vector<int>& clique, int) {
    Trace prod = Trace::identity(*X.base);
    for (int i : clique) prod = concat(prod, X.generators[i]);
    P.add_term(prod, (clique.size() % 2) ? -1 : 1);
  });
  return P;
}

TracePolynomial invert_series(const TracePolynomial& P, int n) {
  const auto& alpha = P.alphabet();
  if (P.coeff(Trace::identity(alpha)) != 1)
    throw std::invalid_argument("invert_series: constant term must be 1");
  if (n < 0) throw std::invalid_argument("invert_series: negative bound");

  // Homogeneous slices of Q = 1 - P (all lengths >= 1).
  std::vector<std::vector<std::pair<Word, Rational>>> Q(n + 1);
  for (const auto& [t, c] : P.terms()) {
    if (t.length() == 0 || t.length() > n) continue;
    Q[t.length()].emplace_back(t.word(), -c);
  }

  // S_k = sum_l Q_l * S_{k-l}, so that P * S = 1 up to length n.
  std::vector<std::unordered_map<Word, Rational>> S(n + 1);
  S[0].emplace(Word{}, 1);
  for (int k = 1; k <= n; ++k) {
    auto& out = S[k];
    for (int l = 1; l <= k; ++l) {
      for (const auto& [u, c] : Q[l]) {
        for (const auto& [t, d] : S[k - l]) {
          Word w = normalize(alpha, u + t).word();
          auto [it, inserted] = out.emplace(w, c * d);
          if (!inserted) {
            it->second += c * d;
            if (it->second == 0) out.erase(it);
          }
        }
      }
    }
  }

  TracePolynomial R(alpha);
  for (int k = 0; k <= n; ++k)
    for (const auto& [w, c] : S[k]) R.add_term(normalize(alpha, w), c);
  return R;
}

TracePolynomial characteristic_series(const IndependenceAlphabet& alpha, int n) {
  return invert_series(mobius_polynomial(alpha), n);
}

std::vector<long long> derived_trace_counts(const DerivedAlphabet& X, int maxlen) {
  std::vector<long long> p(maxlen + 1, 0);
  for_each_clique(X, maxlen, [&](const std::vector<int>& clique, int weight) {
    p[weight] += (clique.size() % 2) ? -1 : 1;
  });
  std::vector<long long> c(maxlen + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= maxlen; ++k)
    for (int l = 1; l <= k; ++l) c[k] -= p[l] * c[k - l];
  return c;
}

namespace {

int moebius_mu(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

std::vector<long long> witt_dimensions(const IndependenceAlphabet& alpha, int n) {
  if (n < 1) throw std::invalid_argument("witt_dimensions: bound must be >= 1");
  // Clique-size polynomial p(t) = sum_j a_j t^j on the commutative image.
  std::vector<Integer> a(alpha.size() + 1, 0);
  for (Mask m : alpha.independent_clique_masks()) {
    int k = mask_popcount(m);
    a[k] += (k % 2) ? -1 : 1;
  }
  // Newton power sums of the reciprocal roots of p.
  std::vector<Integer> s(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    Integer acc = 0;
    if (k < static_cast<int>(a.size())) acc = -Integer(k) * a[k];
    for (int i = 1; i < k; ++i)
      if (i < static_cast<int>(a.size())) acc -= a[i] * s[k - i];
    s[k] = acc;
  }
  std::vector<long long> d(n + 1, 0);
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int k = 1; k <= m; ++k)
      if (m % k == 0) acc += moebius_mu(m / k) * s[k];
    if (acc % m != 0 || acc < 0)
      throw std::logic_error("witt_dimensions: non-integral or negative dimension");
    Integer dm = acc / m;
    d[m] = dm.convert_to<long long>();
  }
  return std::vector<long long>(d.begin() + 1, d.end());
}

}  // namespace tracealg
