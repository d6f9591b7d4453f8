#include "elias/oracle.hpp"

#include <algorithm>
#include <random>

namespace elias {

namespace {

using linalg::RowBasis;
using linalg::SparseVec;

// Largest j0 such that every monomial t_b^j, j in [j0, N), lies in the
// subspace; N when even the top monomial is missing.
Z branch_tail_start(const BranchedRingModel& model, const RowBasis& basis, int branch) {
  Z j0 = model.truncation();
  for (Z j = model.truncation() - 1; j >= 0; --j) {
    SeriesElement mono = SeriesElement::monomial(model.branches(), branch, j);
    if (!basis.contains(model.to_vec(mono))) break;
    j0 = j;
  }
  return j0;
}

void require_mprimary(const BranchedRingModel& model, const RowBasis& basis) {
  Z margin = model.max_generator_degree() + 2;
  for (int b = 0; b < model.branches(); ++b) {
    Z j0 = branch_tail_start(model, basis, b);
    if (j0 + margin > model.truncation())
      throw NotMPrimary("ideal subspace has no stable monomial tail on branch " +
                        std::to_string(b));
  }
}

// Basis of the colon space { q : q*g in I for all generators g of m },
// restricted to exponents below N - guard so no product is ever truncated.
std::vector<SparseVec> colon_space(const BranchedRingModel& model, const RowBasis& ideal) {
  const Z guard = model.max_generator_degree();
  const Z qlim = model.truncation() - guard;
  const Z B = model.lower_bound();
  const int qwidth = static_cast<int>(qlim + B);
  const int qdim = model.branches() * qwidth;
  auto qcoord = [&](int branch, Z exp) {
    return branch * qwidth + static_cast<int>(exp + B);
  };

  std::vector<SeriesElement> mgens = model.maximal_ideal_generators();
  // constraint rows are indexed by (generator, residual coordinate)
  std::map<std::pair<int, int>, SparseVec> constraints;
  for (int gi = 0; gi < static_cast<int>(mgens.size()); ++gi) {
    for (int b = 0; b < model.branches(); ++b) {
      for (Z x = -B; x < qlim; ++x) {
        SeriesElement image =
            model.multiply(mgens[static_cast<std::size_t>(gi)],
                           SeriesElement::monomial(model.branches(), b, x));
        SparseVec residual = ideal.reduce(model.to_vec(image));
        for (const auto& [col, c] : residual.terms)
          constraints[{gi, col}].push(qcoord(b, x), c);
      }
    }
  }
  std::vector<SparseVec> rows;
  rows.reserve(constraints.size());
  for (auto& [key, row] : constraints) {
    std::sort(row.terms.begin(), row.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
  }

  std::vector<SparseVec> null = linalg::nullspace(rows, qdim);
  return null;
}

SeriesElement q_vec_to_series(const BranchedRingModel& model, const SparseVec& v) {
  const Z guard = model.max_generator_degree();
  const Z qlim = model.truncation() - guard;
  const Z B = model.lower_bound();
  const int qwidth = static_cast<int>(qlim + B);
  SeriesElement f(model.branches());
  for (const auto& [c, val] : v.terms) {
    int branch = c / qwidth;
    Z exp = static_cast<Z>(c % qwidth) - B;
    f.set(branch, exp, val);
  }
  return f;
}

EliasLinearResult elias_linear_once(const BranchedRingModel& model,
                                    const std::vector<SeriesElement>& gens) {
  RowBasis ideal = ideal_subspace(model, gens);
  require_mprimary(model, ideal);
  EliasLinearResult r;
  r.elias = true;
  r.truncation_used = model.truncation();
  for (const SparseVec& v : colon_space(model, ideal)) {
    SeriesElement q = q_vec_to_series(model, v);
    if (!model.in_ring(q)) {
      r.elias = false;
      if (!r.witness) r.witness = q;
    }
  }
  return r;
}

// Exact Laurent division of one branch: quotient q with g = q*x determined
// for exponents below `limit`.
std::map<Z, Rational> laurent_div(const std::map<Z, Rational>& g, const std::map<Z, Rational>& x,
                                  Z limit) {
  std::map<Z, Rational> q;
  if (g.empty()) return q;
  const Z xv = x.begin()->first;
  const Rational& xc = x.begin()->second;
  std::map<Z, Rational> rem = g;
  while (!rem.empty()) {
    Z e = rem.begin()->first;
    Z qe = e - xv;
    if (qe >= limit) break;
    Rational qc = rem.begin()->second / xc;
    q[qe] = qc;
    for (const auto& [xe, vc] : x) {
      Z te = qe + xe;
      auto it = rem.find(te);
      Rational nv = (it == rem.end() ? Rational(0) : it->second) - qc * vc;
      if (nv == 0) {
        if (it != rem.end()) rem.erase(it);
      } else {
        rem[te] = nv;
      }
    }
  }
  return q;
}

bool contains_in_principal_once(const BranchedRingModel& model,
                                const std::vector<SeriesElement>& gens,
                                const SeriesElement& x) {
  for (const SeriesElement& g : gens) {
    SeriesElement q(model.branches());
    Z limit = model.truncation();
    for (int b = 0; b < model.branches(); ++b) {
      const auto& xb = x.coeffs[static_cast<std::size_t>(b)];
      const auto& gb = g.coeffs[static_cast<std::size_t>(b)];
      if (gb.empty()) continue;
      Z blimit = model.truncation() - xb.begin()->first;
      limit = std::min(limit, blimit);
      auto qb = laurent_div(gb, xb, blimit);
      for (auto& [e, c] : qb) q.set(b, e, std::move(c));
    }
    // quotient must be a ring element; only exponents below `limit` are
    // determined, the stability re-run covers the rest
    for (int b = 0; b < model.branches(); ++b)
      for (const auto& [e, c] : q.coeffs[static_cast<std::size_t>(b)])
        if (e < 0) return false;
    if (!model.in_ring_below(q, limit)) return false;
  }
  return true;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

linalg::RowBasis ideal_subspace(const BranchedRingModel& model,
                                const std::vector<SeriesElement>& gens) {
  if (gens.empty()) throw EmptyGenerators("ideal needs at least one generator");
  RowBasis basis;
  std::vector<SeriesElement> mons = model.ring_monomials();
  for (const SeriesElement& g : gens) {
    if (!model.in_ring(g))
      throw NotInRing("generator " + g.to_string(model.branch_names()) +
                      " is not an element of the ring");
    for (const SeriesElement& m : mons) basis.insert(model.to_vec(model.multiply(g, m)));
  }
  return basis;
}

EliasLinearResult is_elias_linear(const BranchedRingModel& model,
                                  const std::vector<SeriesElement>& gens, bool stability_check) {
  EliasLinearResult base = elias_linear_once(model, gens);
  if (stability_check) {
    EliasLinearResult doubled =
        elias_linear_once(model.with_truncation(2 * model.truncation()), gens);
    if (base.elias != doubled.elias)
      throw TruncationUnsound("Elias verdict flips between truncation " +
                              std::to_string(model.truncation()) + " and " +
                              std::to_string(2 * model.truncation()));
  }
  return base;
}

Z colength_linear(const BranchedRingModel& model, const std::vector<SeriesElement>& gens,
                  bool stability_check) {
  auto once = [&](const BranchedRingModel& m) {
    RowBasis ring;
    for (const SeriesElement& mono : m.ring_monomials()) ring.insert(m.to_vec(mono));
    RowBasis ideal = ideal_subspace(m, gens);
    return static_cast<Z>(ring.rank()) - static_cast<Z>(ideal.rank());
  };
  Z base = once(model);
  if (stability_check) {
    Z doubled = once(model.with_truncation(2 * model.truncation()));
    if (base != doubled)
      throw TruncationUnsound("colength " + std::to_string(base) + " at truncation " +
                              std::to_string(model.truncation()) + " became " +
                              std::to_string(doubled) + " when doubled");
  }
  return base;
}

bool contains_in_principal(const BranchedRingModel& model,
                           const std::vector<SeriesElement>& gens, const SeriesElement& x,
                           bool stability_check) {
  if (!model.in_ring(x))
    throw NotInRing("witness " + x.to_string(model.branch_names()) + " is not in the ring");
  for (int b = 0; b < model.branches(); ++b)
    if (x.branch_zero(b))
      throw ZeroDivisorWitness("witness vanishes on branch " + std::to_string(b));
  for (const SeriesElement& g : gens)
    if (!model.in_ring(g)) throw NotInRing("ideal generator outside the ring");

  if (!stability_check) return contains_in_principal_once(model, gens, x);
  return stability_checked(model, [&](const BranchedRingModel& m) {
    return contains_in_principal_once(m, gens, x);
  });
}

std::vector<SeriesElement> power_generators(const BranchedRingModel& model, Z s) {
  std::vector<SeriesElement> gens;
  if (model.kind() == BranchedRingModel::Kind::Semigroup) {
    ValueIdeal ms = ValueIdeal::power_of_maximal(model.semigroup(), s);
    for (Z w : ms.minimal_generators()) gens.push_back(SeriesElement::monomial(1, 0, w));
  } else {
    // mixed products of the coordinate elements vanish, so m^s = (a_1^s, ..., a_n^s)
    for (int b = 0; b < model.branches(); ++b)
      gens.push_back(SeriesElement::monomial(model.branches(), b, s));
  }
  return gens;
}

std::vector<GllRow> gll_randomized(const BranchedRingModel& model, Z s_max, int trials,
                                   std::uint64_t seed) {
  if (trials < 1) throw InvalidGenerator("gll search needs at least one trial");
  std::vector<SeriesElement> mgens = model.maximal_ideal_generators();
  std::vector<GllRow> rows;
  for (Z s = 1; s <= s_max; ++s) {
    GllRow row;
    row.s = s;
    std::vector<SeriesElement> gens = power_generators(model, s);
    for (int trial = 0; trial < trials; ++trial) {
      std::vector<long> coeffs(mgens.size(), 0);
      if (trial < static_cast<int>(mgens.size())) {
        coeffs[static_cast<std::size_t>(trial)] = 1;
      } else {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(s)) ^
                                       (0x51edULL * static_cast<std::uint64_t>(trial))));
        std::uniform_int_distribution<long> mag(1, 17);
        std::bernoulli_distribution neg(0.5);
        for (auto& c : coeffs) {
          c = mag(rng);
          if (neg(rng)) c = -c;
        }
      }
      SeriesElement x(model.branches());
      for (std::size_t i = 0; i < mgens.size(); ++i)
        if (coeffs[i] != 0) x.add_scaled(mgens[i], Rational(coeffs[i]));
      bool zero_divisor = false;
      for (int b = 0; b < model.branches(); ++b)
        if (x.branch_zero(b)) zero_divisor = true;
      if (zero_divisor || x.is_zero()) continue;
      if (contains_in_principal(model, gens, x, /*stability_check=*/true)) {
        row.status = GllStatus::Success;
        row.witness_coeffs = coeffs;
        row.trial_index = trial;
        break;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace elias
