#include "vicsek/critical_group.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "vicsek/errors.hpp"
#include "vicsek/monte_carlo.hpp"
#include "vicsek/recurrence.hpp"

namespace vicsek {

namespace {

// Floor-free quotient that leaves |remainder| < |pivot|.
BigInt quotient(const BigInt& a, const BigInt& pivot) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), pivot.get_mpz_t());
  return q;
}

}  // namespace

IntegerMatrix reduced_laplacian(const Graph& g) {
  const std::size_t n = g.site_count();
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<VertexId>(i);
    m(i, i) = g.degree(v);
    for (VertexId w : g.neighbors(v))
      if (w != g.sink()) m(i, static_cast<std::size_t>(w)) = -1;
  }
  return m;
}

InvariantFactors smith_normal_form(IntegerMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("Smith normal form needs a square matrix");
  std::vector<BigInt> diag;
  diag.reserve(n);

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Least nonzero |entry| of the trailing block becomes the pivot.
      std::size_t pr = n, pc = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const BigInt& a = m(i, j);
          if (a == 0) continue;
          if (pr == n || mpz_cmpabs(a.get_mpz_t(), m(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
            if (a == 1 || a == -1) goto found;
          }
        }
    found:
      if (pr == n) throw SingularError("matrix is singular (rank " + std::to_string(t) + ")");
      if (pr != t)
        for (std::size_t j = t; j < n; ++j) std::swap(m(t, j), m(pr, j));
      if (pc != t)
        for (std::size_t i = t; i < n; ++i) std::swap(m(i, t), m(i, pc));

      const BigInt pivot = m(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m(i, t) == 0) continue;
        const BigInt q = quotient(m(i, t), pivot);
        for (std::size_t j = t; j < n; ++j)
          if (m(t, j) != 0) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m(t, j) == 0) continue;
        const BigInt q = quotient(m(t, j), pivot);
        for (std::size_t i = t; i < n; ++i)
          if (m(i, t) != 0) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(m(t, t)));
  }

  // Z_a + Z_b = Z_gcd + Z_lcm; sweeping pairs yields the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      BigInt g = gcd(diag[i], diag[j]);
      BigInt l = lcm(diag[i], diag[j]);
      diag[i] = std::move(g);
      diag[j] = std::move(l);
    }
  return diag;
}

InvariantFactors group_structure(int level) { return smith_normal_form(reduced_laplacian(build(level))); }

BigInt group_order(const InvariantFactors& f) {
  BigInt p = 1;
  for (const auto& d : f) p *= d;
  return p;
}

BigInt order2_count(const InvariantFactors& f) {
  BigInt p = 1;
  for (const auto& d : f) p *= gcd(d, BigInt(2));
  return p;
}

BigInt order2_count(int level) { return order2_count(group_structure(level)); }

std::uint64_t element_order(const Graph& g, const SandpileConfig& eta, const SandpileConfig& identity,
                            std::uint64_t limit) {
  if (!is_stable(g, eta) || !is_recurrent(g, eta)) throw DomainError("element_order needs a recurrent configuration");
  if (eta == identity) return 1;
  const auto twice = group_add(g, eta, eta);
  if (twice == identity) return 2;
  const auto four = group_add(g, twice, twice);
  if (four == identity) return 4;
  auto power = twice;
  for (std::uint64_t k = 3; k <= limit; ++k) {
    power = group_add(g, power, eta);
    if (power == identity) return k;
  }
  throw VerificationError("order", "no power of the element reached the identity within the limit");
}

SinkHitEstimate sink_hit_probability(const Graph& g, Coord x, std::int64_t k, std::uint64_t samples,
                                     std::uint64_t seed, unsigned workers) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (samples == 0) throw DomainError("samples must be positive");
  const VertexId id = g.index_of(x);
  if (id == g.sink()) throw DomainError("x must not be the sink");
  const auto tally = tally_trials(samples, seed, workers, 2, [&](RandomStream& rng) -> std::size_t {
    auto c = add_particles(g, sample_recurrent(g, rng), x, k);
    return stabilize(g, std::move(c), {.compute_diameter = false}).report.sink_particles > 0 ? 1 : 0;
  });
  SinkHitEstimate e;
  e.samples = samples;
  e.hits = tally[1];
  e.estimate = static_cast<double>(e.hits) / static_cast<double>(samples);
  e.std_error = std::sqrt(e.estimate * (1 - e.estimate) / static_cast<double>(samples));
  return e;
}

}  // namespace vicsek
