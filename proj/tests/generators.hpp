#pragma once

// Random inputs for property tests.

#include <random>
#include <string>

#include "skeleta/complex.hpp"
#include "skeleta/flow.hpp"
#include "skeleta/monoval.hpp"
#include "skeleta/weight.hpp"

namespace skeleta::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational small_rational(Rng& rng, long range = 5, long max_den = 4) {
  Rational q(uniform(rng, -range, range), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

inline Rational nonzero_rational(Rng& rng, long range = 5, long max_den = 4) {
  for (;;) {
    Rational q = small_rational(rng, range, max_den);
    if (q != 0) return q;
  }
}

inline UPoly small_upoly(Rng& rng, long max_degree) {
  std::vector<Rational> c;
  const long d = uniform(rng, 0, max_degree);
  for (long k = 0; k <= d; ++k) c.push_back(small_rational(rng));
  return UPoly(std::move(c));
}

/// A unit of the valuation ring: nonzero constant terms top and bottom.
inline BaseElement random_unit(Rng& rng, long max_degree = 2) {
  std::vector<Rational> num{nonzero_rational(rng)};
  std::vector<Rational> den{nonzero_rational(rng)};
  for (long k = 1; k <= uniform(rng, 0, max_degree); ++k) num.push_back(small_rational(rng));
  for (long k = 1; k <= uniform(rng, 0, max_degree); ++k) den.push_back(small_rational(rng));
  return BaseElement::fraction(UPoly(num), UPoly(den));
}

/// Nonzero element with valuation in [lo, hi].
inline BaseElement random_nonzero(Rng& rng, long lo = -2, long hi = 3, long max_degree = 2) {
  return random_unit(rng, max_degree) * BaseElement::uniformizer().pow(uniform(rng, lo, hi));
}

inline BaseElement random_element(Rng& rng) {
  if (uniform(rng, 0, 9) == 0) return BaseElement();
  return random_nonzero(rng);
}

/// Random polynomial over K with up to `max_terms` terms and exponents in
/// [0, max_exp]. Coefficients are kept simple (polynomial units) so that long
/// runs stay fast.
inline MultivariatePoly random_poly(Rng& rng, std::size_t arity, long max_terms = 4,
                                    long max_exp = 3, bool allow_zero = false) {
  for (;;) {
    MultivariatePoly f(arity);
    const long n = uniform(rng, 1, max_terms);
    for (long k = 0; k < n; ++k) {
      Exponent e(arity);
      for (auto& x : e) x = uniform(rng, 0, max_exp);
      f.add_term(e, random_nonzero(rng, -1, 3, 1));
    }
    if (allow_zero || !f.is_zero()) return f;
  }
}

inline std::vector<Rational> random_weights(Rng& rng, std::size_t arity, long max_den = 6) {
  std::vector<Rational> a;
  for (std::size_t i = 0; i < arity; ++i) {
    Rational q(uniform(rng, 0, 2 * max_den), uniform(rng, 1, max_den));
    q.canonicalize();
    a.push_back(q);
  }
  return a;
}

/// Random valid model: at most `max_components` components, at most
/// `max_strata` strata, edges (with possible repeats), triangles and the
/// occasional tetrahedron, all simplicially compatible.
inline ModelDescription random_model(Rng& rng, long max_components = 6,
                                     std::size_t max_strata = 15) {
  ModelDescription m;
  const long n = uniform(rng, 1, max_components);
  for (long i = 1; i <= n; ++i) {
    const std::string id = "E" + std::to_string(i);
    m.components.push_back({id, uniform(rng, 1, 4)});
    m.strata.push_back({id, {id}, {}});
  }
  auto comps_of = [&](const Stratum& s) {
    std::vector<std::string> c = s.components;
    std::sort(c.begin(), c.end());
    return c;
  };
  long counter = 0;
  const long attempts = uniform(rng, 0, 40);
  for (long a = 0; a < attempts && m.strata.size() < max_strata; ++a) {
    // Pick a random existing stratum and a component not on it, and try to
    // build a coface by choosing compatible facets.
    const Stratum base = m.strata[static_cast<std::size_t>(
        uniform(rng, 0, static_cast<long>(m.strata.size()) - 1))];
    if (base.components.size() >= 4) continue;
    const std::string extra = "E" + std::to_string(uniform(rng, 1, n));
    if (std::find(base.components.begin(), base.components.end(), extra) !=
        base.components.end())
      continue;
    std::vector<std::string> J = base.components;
    J.push_back(extra);
    std::sort(J.begin(), J.end());
    // Candidate facets for each removed component.
    std::map<std::string, std::string> faces;
    bool ok = true;
    for (const auto& j : J) {
      std::vector<std::string> want;
      for (const auto& c : J)
        if (c != j) want.push_back(c);
      if (j == extra) {
        faces[j] = base.id;
        continue;
      }
      std::vector<std::string> cands;
      for (const auto& s : m.strata)
        if (comps_of(s) == want) cands.push_back(s.id);
      if (cands.empty()) {
        ok = false;
        break;
      }
      faces[j] = cands[static_cast<std::size_t>(
          uniform(rng, 0, static_cast<long>(cands.size()) - 1))];
    }
    if (!ok) continue;
    Stratum s{(J.size() == 2 ? "C" : J.size() == 3 ? "P" : "Q") + std::to_string(++counter),
              J, J.size() == 1 ? std::map<std::string, std::string>{} : faces};
    ModelDescription trial = m;
    trial.strata.push_back(s);
    if (validate(trial).empty()) m = std::move(trial);
  }
  return m;
}

/// Random valid form: m in 1..3, nu in [-m, 4], and horizontal flags on the
/// cofaces of a few random non-vertex strata.
inline PluricanonicalForm random_form(Rng& rng, const DualComplex& dc) {
  PluricanonicalForm f;
  f.m = uniform(rng, 1, 3);
  for (const auto& c : dc.model().components) f.vertical[c.id] = uniform(rng, -f.m, 4);
  std::vector<std::string> higher;
  for (const auto& [id, s] : dc.simplices())
    if (s.dimension > 0) higher.push_back(id);
  if (!higher.empty()) {
    const long flags = uniform(rng, 0, 2);
    for (long k = 0; k < flags; ++k) {
      const auto& id = higher[static_cast<std::size_t>(
          uniform(rng, 0, static_cast<long>(higher.size()) - 1))];
      for (const auto& c : dc.cofaces(id)) f.horizontal.insert(c);
    }
  }
  return f;
}

/// Random rigid point of the basic model over K(u), u^e = t:
/// x1 = u^a w^M2, x2 = u^b w^-M1 with N1 a + N2 b = e and w a unit, or, when
/// N1 = 1, x2 = u^b w arbitrary and x1 = u^e / x2^N2.
inline RigidPoint random_rigid_point(Rng& rng, const BasicModel& bm) {
  for (;;) {
    const long a = uniform(rng, 0, 3);
    const long b = uniform(rng, 0, 3);
    const long e = bm.n1() * a + bm.n2() * b;
    if (e == 0) continue;
    const BaseElement u = BaseElement::uniformizer();
    const BaseElement w = random_unit(rng, 2);
    RigidPoint x;
    x.ramification = e;
    if (bm.n1() == 1 && uniform(rng, 0, 1) == 0) {
      x.x2 = u.pow(b) * w;
      x.x1 = u.pow(e) / x.x2.pow(bm.n2());
    } else {
      x.x1 = u.pow(a) * w.pow(bm.m2());
      x.x2 = u.pow(b) * w.pow(-bm.m1());
    }
    return x;
  }
}

/// Monomial point of the edge "O" with alpha1 N1 + alpha2 N2 = 1, vertices
/// included.
inline MonomialPointData random_edge_point(Rng& rng, const BasicModel& bm, long max_den = 12) {
  const long d = uniform(rng, 1, max_den);
  Rational b1(uniform(rng, 0, d), d);
  b1.canonicalize();
  Rational a1 = b1 / bm.n1(), a2 = (1 - b1) / bm.n2();
  a1.canonicalize();
  a2.canonicalize();
  return {"O", {{"E1", a1}, {"E2", a2}}};
}

}  // namespace skeleta::testing
