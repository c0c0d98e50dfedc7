#include <mpfr.h>

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "okaforge/cli/runner.hpp"
#include "okaforge/constructors.hpp"
#include "okaforge/doublepoints.hpp"
#include "okaforge/error.hpp"
#include "okaforge/projection.hpp"
#include "okaforge/verifiers.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace okaforge;
using testing_support::draw;
using testing_support::frac;
using testing_support::z;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

cd as_cd(const numeric::BigComplex& w) { return {w.re.to_double(), w.im.to_double()}; }

Polynomial lin(const GaussianRational& a) { return Polynomial({-a, GaussianRational(1)}); }

RationalFunction inverse_of(const Polynomial& p) { return RationalFunction(Polynomial::constant(1), p); }

GaussianRational random_point(std::mt19937_64& rng, long bound = 8) {
  return frac(draw(rng, -bound, bound), draw(rng, 1, bound), draw(rng, -bound, bound), draw(rng, 1, bound));
}

PuncturedPlane random_plane(std::mt19937_64& rng, int n) {
  PuncturedPlane X;
  while (static_cast<int>(X.punctures.size()) < n) {
    GaussianRational a = random_point(rng);
    if (std::find(X.punctures.begin(), X.punctures.end(), a) == X.punctures.end()) X.punctures.push_back(a);
  }
  return X;
}

// sqrt(k^2 + 1) and the roots of z^2 + 2 pi i k z - 1 at 256 bits
double mp_sqrt_k2p1(int k) {
  mpfr_t t;
  mpfr_init2(t, 256);
  mpfr_set_si(t, k * k + 1, MPFR_RNDN);
  mpfr_sqrt(t, t, MPFR_RNDN);
  double out = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return out;
}

std::pair<cd, cd> mp_quadratic_roots(int k) {
  // z = -pi i k +- i sqrt(pi^2 k^2 - 1)
  mpfr_t pi, s;
  mpfr_inits2(256, pi, s, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_mul_si(pi, pi, k, MPFR_RNDN);
  mpfr_sqr(s, pi, MPFR_RNDN);
  mpfr_sub_ui(s, s, 1, MPFR_RNDN);
  mpfr_sqrt(s, s, MPFR_RNDN);
  mpfr_t a, b;
  mpfr_inits2(256, a, b, static_cast<mpfr_ptr>(nullptr));
  mpfr_sub(a, s, pi, MPFR_RNDN);
  mpfr_add(b, s, pi, MPFR_RNDN);
  mpfr_neg(b, b, MPFR_RNDN);
  std::pair<cd, cd> out{cd(0, mpfr_get_d(a, MPFR_RNDN)), cd(0, mpfr_get_d(b, MPFR_RNDN))};
  mpfr_clears(pi, s, a, b, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::vector<std::pair<cd, cd>> pairs_of(const DoublePointReport& r) {
  std::vector<std::pair<cd, cd>> out;
  for (const auto& p : r.pairs) out.push_back({as_cd(p.x), as_cd(p.y)});
  return out;
}

void criterion1(Outcome& o) {
  PuncturedPlane X1{{z(0), z(1), z(2)}};
  MapPair m1{inverse_of(lin(z(1)) * lin(z(2))), FactoredRational(1, {{z(0), 2}})};
  o.require(check_properness(m1, X1).passed(), "end example proper");
  o.require(check_immersion(m1, X1).passed(), "end example immersion");
  DoublePointReport r1 = enumerate(m1, X1, 0);
  o.require(r1.finiteness == Finiteness::Finite && r1.pairs.empty(), "end example Finite with 0 pairs");

  PuncturedPlane X2{{z(0), z(1), z(-1)}};
  MapPair m2{inverse_of(lin(z(1)) * lin(z(-1))), FactoredRational(1, {{z(0), 2}})};
  DoublePointReport r2 = enumerate(m2, X2, 0);
  o.require(r2.finiteness == Finiteness::InfiniteCommonComponent && r2.witness.has_value(), "a=-b common component");
  if (r2.witness) {
    BivariatePolynomial x_plus_y = BivariatePolynomial::in_x(Polynomial({z(0), z(1)}));
    x_plus_y += BivariatePolynomial::in_y(Polynomial({z(0), z(1)}));
    bool divides = true;
    try {
      pseudo_exact_div(x_plus_y, *r2.witness);
    } catch (const Error&) {
      divides = false;
    }
    o.require(divides && r2.witness->y_degree() >= 1, "witness divides x+y");
    o.detail << "witness " << r2.witness->to_string() << "; ";
  }

  MapPair m3{inverse_of(lin(z(1)) * lin(z(-1)).pow(2)), FactoredRational(1, {{z(0), 2}})};
  o.require(check_properness(m3, X2).passed(), "corrected proper");
  o.require(check_immersion(m3, X2).passed(), "corrected immersion");
  DoublePointReport r3 = enumerate(m3, X2, 0);
  o.require(r3.finiteness == Finiteness::Finite && r3.pairs.empty(), "corrected Finite with 0 pairs");
}

void criterion2(Outcome& o) {
  RationalFunction f(Polynomial({z(1), z(0), z(1)}), Polynomial({z(0), z(1)}));
  DoublePointReport r = enumerate_exp(f, Scalar{GaussianRational::i(), 1}, PuncturedPlane{{z(0)}}, 10);
  o.require(r.pairs.size() == 20, "20 pairs in total");
  double worst_xy = 0, worst_closed = 0, worst_shift = 0;
  for (int k = 1; k <= 10; ++k) {
    std::vector<const DoublePair*> at_k;
    for (const auto& p : r.pairs) {
      if (p.k && std::abs(*p.k) == k) at_k.push_back(&p);
    }
    o.require(at_k.size() == 2, "two pairs at k=" + std::to_string(k));
    double s = mp_sqrt_k2p1(k);
    std::vector<std::pair<cd, cd>> closed = {{cd(-k - s), cd(k - s)}, {cd(-k + s), cd(k + s)}};
    for (const DoublePair* p : at_k) {
      cd x = as_cd(p->x), y = as_cd(p->y);
      worst_xy = std::max(worst_xy, std::abs(x * y - 1.0));
      double shift = std::min(std::abs(y - x - cd(2 * k)), std::abs(x - y - cd(2 * k)));
      worst_shift = std::max(worst_shift, shift - 2 * p->radius.to_double());
      double best = 1e300;
      for (const auto& c : closed) {
        best = std::min(best, std::max(std::abs(x - c.first), std::abs(y - c.second)));
        best = std::min(best, std::max(std::abs(x - c.second), std::abs(y - c.first)));
      }
      worst_closed = std::max(worst_closed, best);
    }
  }
  o.require(worst_xy < 1e-10, "|xy-1| < 1e-10");
  o.require(worst_shift <= 1e-10, "y-x = 2k within the certification radius");
  o.require(worst_closed < 1e-10, "closed forms within 1e-10");
  o.detail << "max |xy-1| " << worst_xy << ", max closed-form error " << worst_closed << "; ";
}

void criterion3(Outcome& o) {
  PuncturedPlane X{{z(0)}};
  MapPair m = build_null_immersion(X, z(1));
  DoublePointReport r = enumerate(m, X, 5);
  for (int k = 1; k <= 5; ++k) {
    int count = 0;
    for (const auto& p : r.pairs) count += p.k && std::abs(*p.k) == k;
    o.require(count == 2, "two pairs at k=" + std::to_string(k));
  }
  auto [q1, q2] = mp_quadratic_roots(1);
  const cd shift(0, 2 * 3.14159265358979323846);
  double worst = 1e300;
  std::vector<cd> starts;
  for (const auto& p : r.pairs) {
    if (!p.k || std::abs(*p.k) != 1) continue;
    cd x = as_cd(p.x), y = as_cd(p.y);
    // the coordinate u with partner u + 2 pi i solves the quadratic
    starts.push_back(std::abs(y - x - shift) < std::abs(x - y - shift) ? x : y);
  }
  if (starts.size() == 2) {
    worst = std::min(std::max(std::abs(starts[0] - q1), std::abs(starts[1] - q2)),
                     std::max(std::abs(starts[0] - q2), std::abs(starts[1] - q1)));
  }
  o.require(worst < 1e-10, "k=1 solutions match z^2+2 pi i z-1 roots");
  o.detail << "k=1 deviation " << worst << "; ";
}

void criterion4(Outcome& o) {
  std::mt19937_64 rng(2026);
  int compared = 0, attempts_total = 0, oracle_pairs = 0, enumerated = 0, checked_inside = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(draw(rng, 1, 4));
    PuncturedPlane X = random_plane(rng, n);
    WindingClass w;
    for (int j = 0; j < n; ++j) w.puncture_windings.push_back(static_cast<int>(draw(rng, -3, 3)));
    if (w.is_null()) w.puncture_windings[static_cast<std::size_t>(draw(rng, 0, n - 1))] = 1;
    std::string tag = "trial " + std::to_string(trial);
    MapPair map;
    try {
      auto built = build_nonnull_immersion(X, w, {static_cast<std::uint64_t>(trial), 64});
      map = built.first;
      attempts_total += static_cast<int>(built.second.attempts.size());
    } catch (const Error& e) {
      o.require(false, tag + " construction: " + e.what());
      continue;
    }
    o.require(check_immersion(map, X).passed(), tag + " immersion");
    o.require(check_properness(map, X).passed(), tag + " properness");
    o.require(check_winding(map, X, w).passed(), tag + " winding");
    DoublePointReport r = enumerate(map, X, 0);
    o.require(r.finiteness == Finiteness::Finite, tag + " Finite");
    if (n > 3 || r.finiteness != Finiteness::Finite) continue;
    auto found = pairs_of(r);
    // the box grows to hold the enumerated pairs, within limits the grid can still resolve
    double box = 3.0;
    for (const auto& p : found) box = std::max({box, 1.2 * std::abs(p.first.real()), 1.2 * std::abs(p.first.imag()),
                                                1.2 * std::abs(p.second.real()), 1.2 * std::abs(p.second.imag())});
    box = std::min(box, 6.0);
    auto brute = oracle::brute_force_pairs(map.first, map.factored().expand(), X.punctures, box);
    // every oracle pair is enumerated; every enumerated pair well inside the box is found by the oracle
    std::vector<std::pair<cd, cd>> inside;
    for (const auto& p : found) {
      if (oracle::in_box(p.first, 0.9 * box) && oracle::in_box(p.second, 0.9 * box)) inside.push_back(p);
    }
    bool oracle_covered = true;
    for (const auto& b : brute) {
      bool hit = false;
      for (const auto& p : found) hit |= oracle::same_pair(b, p, 1e-6);
      oracle_covered &= hit;
    }
    bool inside_covered = true;
    for (const auto& p : inside) {
      bool hit = false;
      for (const auto& b : brute) hit |= oracle::same_pair(b, p, 1e-6);
      inside_covered &= hit;
    }
    o.require(oracle_covered && inside_covered, tag + " oracle pair sets");
    oracle_pairs += static_cast<int>(brute.size());
    enumerated += static_cast<int>(found.size());
    checked_inside += static_cast<int>(inside.size());
    ++compared;
  }
  o.detail << "oracle comparisons " << compared << " covering " << oracle_pairs << " oracle pairs, "
           << checked_inside << " of " << enumerated << " enumerated pairs inside the box, rejected perturbations "
           << attempts_total << "; ";
}

// Embedding instances

bool valid(const PuncturedCircularDomain& D) { return validate(D).empty(); }

PuncturedCircularDomain random_circular(std::mt19937_64& rng, int n, int m, bool imaginary_axis) {
  for (;;) {
    PuncturedCircularDomain D;
    for (int h = 0; h < m; ++h) {
      GaussianRational c = imaginary_axis ? frac(0, 1, draw(rng, -6, 6), 8) : frac(draw(rng, -6, 6), 8, draw(rng, -6, 6), 8);
      D.holes.push_back({c, Rational(1, draw(rng, 8, 16))});
    }
    for (int j = 0; j < n; ++j) {
      D.punctures.push_back(imaginary_axis ? frac(0, 1, draw(rng, -7, 7), 8) : frac(draw(rng, -7, 7), 8, draw(rng, -7, 7), 8));
    }
    if (valid(D)) return D;
  }
}

int nonzero(std::mt19937_64& rng, int bound = 3) {
  int v = static_cast<int>(draw(rng, 1, bound));
  return rng() % 2 ? v : -v;
}

int unit(std::mt19937_64& rng) { return rng() % 2 ? 1 : -1; }

WindingClass plane_class(std::mt19937_64& rng, int kase, int& n) {
  WindingClass w;
  auto& k = w.puncture_windings;
  switch (kase) {
    case 1:
      n = static_cast<int>(draw(rng, 1, 4));
      for (int j = 0; j < n; ++j) k.push_back(nonzero(rng));
      break;
    case 2:
      n = static_cast<int>(draw(rng, 2, 4));
      do {
        k.clear();
        for (int j = 0; j < n; ++j) k.push_back(nonzero(rng));
        k[static_cast<std::size_t>(draw(rng, 0, n - 1))] = 0;
      } while (std::accumulate(k.begin(), k.end(), 0) == 0);
      break;
    case 3: {
      n = static_cast<int>(draw(rng, 3, 4));
      k.assign(static_cast<std::size_t>(n), 0);
      std::size_t p = static_cast<std::size_t>(draw(rng, 0, n - 1));
      std::size_t q = (p + static_cast<std::size_t>(draw(rng, 1, n - 1))) % static_cast<std::size_t>(n);
      k[p] = 1;
      k[q] = -1;
      break;
    }
    default:
      n = static_cast<int>(draw(rng, 3, 4));
      k.assign(static_cast<std::size_t>(n), 0);
      k[static_cast<std::size_t>(draw(rng, 0, n - 1))] = unit(rng);
  }
  return w;
}

WindingClass circular_class(std::mt19937_64& rng, int kase, int& n, int& m) {
  WindingClass w;
  auto& k = w.puncture_windings;
  auto& s = w.hole_windings;
  switch (kase) {
    case 1:
      n = static_cast<int>(draw(rng, 1, 3));
      m = static_cast<int>(draw(rng, 0, 2));
      for (int j = 0; j < n; ++j) k.push_back(nonzero(rng));
      for (int h = 0; h < m; ++h) s.push_back(static_cast<int>(draw(rng, -2, 2)));
      break;
    case 2:
      n = static_cast<int>(draw(rng, 1, 3));
      m = static_cast<int>(draw(rng, 0, 2));
      for (int j = 0; j < n; ++j) k.push_back(nonzero(rng));
      k[static_cast<std::size_t>(draw(rng, 0, n - 1))] = 0;
      for (int h = 0; h < m; ++h) s.push_back(static_cast<int>(draw(rng, -2, 2)));
      break;
    case 3: {
      n = 4;
      m = static_cast<int>(draw(rng, 0, 1));
      k.assign(4, 0);
      std::size_t p = static_cast<std::size_t>(draw(rng, 0, 3));
      k[p] = 1;
      k[(p + static_cast<std::size_t>(draw(rng, 1, 3))) % 4] = -1;
      s.assign(static_cast<std::size_t>(m), 0);
      break;
    }
    case 4:
      n = static_cast<int>(draw(rng, 3, 4));
      m = static_cast<int>(draw(rng, 0, 1));
      k.assign(static_cast<std::size_t>(n), 0);
      k[static_cast<std::size_t>(draw(rng, 0, n - 1))] = unit(rng);
      s.assign(static_cast<std::size_t>(m), 0);
      break;
    case 5:
      n = static_cast<int>(draw(rng, 2, 3));
      m = static_cast<int>(draw(rng, 0, 1));
      k.assign(static_cast<std::size_t>(n), 0);
      s.assign(static_cast<std::size_t>(m), 0);
      break;
    default:
      n = static_cast<int>(draw(rng, 2, 3));
      m = 1;
      k.assign(static_cast<std::size_t>(n), 0);
      s.assign(1, unit(rng));
  }
  return w;
}

FactoredRational product_over(const ReductionResult& red) {
  std::vector<FactoredRational::Factor> fs;
  for (std::size_t j = 0; j < red.plane.punctures.size(); ++j) {
    int e = red.windings.puncture_windings[j];
    if (e != 0) fs.push_back({red.plane.punctures[j], e});
  }
  return FactoredRational(1, fs);
}

std::vector<GaussianRational> marks_of(const ReductionResult& red) {
  std::vector<GaussianRational> b;
  for (const auto& p : red.marked_points) {
    if (p.role == PointRole::BoundaryMark) b.push_back(p.point);
  }
  return b;
}

void criterion5(Outcome& o) {
  std::mt19937_64 rng(5150);
  int instances = 0, remediated = 0, initial_failures = 0;
  std::vector<int> plane_seen(5, 0), circ_seen(7, 0);
  for (int t = 0; t < 50; ++t) {
    bool circ = t % 10 >= 4;
    int kase = circ ? t % 10 - 3 : t % 10 + 1;
    std::string tag = std::string(circ ? "circular" : "plane") + " case " + std::to_string(kase) + " #" + std::to_string(t);
    try {
      if (!circ) {
        int n = 0;
        WindingClass w = plane_class(rng, kase, n);
        PuncturedPlane X = random_plane(rng, n);
        auto built = build_embedding_plane(X, w);
        auto* e = std::get_if<PlaneEmbedding>(&built);
        o.require(e != nullptr && e->case_number == kase, tag + " built as the matching case");
        if (!e) continue;
        o.require(check_injective_by_form(e->map).passed(), tag + " injective by form");
        o.require(classify_map(e->map, X) == w, tag + " class");
        ++plane_seen[static_cast<std::size_t>(kase)];
      } else {
        int n = 0, m = 0;
        WindingClass w = circular_class(rng, kase, n, m);
        bool axis = (kase == 1 || kase == 2) && t % 20 >= 10;
        PuncturedCircularDomain D = random_circular(rng, n, m, axis);
        auto built = build_embedding_circular(D, w, static_cast<std::uint64_t>(t));
        auto* e = std::get_if<CircularEmbedding>(&built);
        o.require(e != nullptr && e->case_number == kase, tag + " built as the matching case");
        if (!e) continue;
        o.require(check_injective_by_form(e->map).passed(), tag + " injective by form");
        o.require(classify_map(e->map, D) == w, tag + " class");
        o.require(e->projection.passed(), tag + " projection certificate");
        if (kase == 1 || kase == 2) {
          bool initial = theta_certificate(product_over(e->reduction), marks_of(e->reduction)).passed();
          initial_failures += !initial;
          o.require(initial == !e->remediation.has_value(), tag + " remediation invoked exactly when theta fails");
          if (e->remediation) {
            ++remediated;
            o.require(e->remediation->certificate.passed(), tag + " remediation succeeds");
          }
        }
        ++circ_seen[static_cast<std::size_t>(kase)];
      }
      ++instances;
    } catch (const Error& e) {
      o.require(false, tag + ": " + e.what());
    }
  }
  for (int c = 1; c <= 4; ++c) o.require(plane_seen[static_cast<std::size_t>(c)] > 0, "plane case " + std::to_string(c) + " exercised");
  for (int c = 1; c <= 6; ++c) o.require(circ_seen[static_cast<std::size_t>(c)] > 0, "circular case " + std::to_string(c) + " exercised");
  o.require(remediated > 0, "remediation exercised");
  o.detail << instances << " instances, initial theta failures " << initial_failures << ", remediated " << remediated << "; ";
}

void criterion6(Outcome& o) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    int n = static_cast<int>(draw(rng, 0, 3));
    int m = static_cast<int>(draw(rng, 0, 3));
    PuncturedCircularDomain D = random_circular(rng, n, m, false);
    WindingClass w;
    for (int j = 0; j < n; ++j) w.puncture_windings.push_back(static_cast<int>(draw(rng, -3, 3)));
    for (int h = 0; h < m; ++h) w.hole_windings.push_back(static_cast<int>(draw(rng, -3, 3)));
    ReductionResult red = reduce_to_plane(D, w);
    std::string tag = "domain " + std::to_string(t);
    const auto& Y = red.plane.punctures;
    const auto& k = red.windings.puncture_windings;
    std::size_t un = static_cast<std::size_t>(n), um = static_cast<std::size_t>(m);
    bool ok = Y.size() == un + 2 * um + 1 && k.size() == Y.size() && red.marked_points.size() == Y.size();
    o.require(ok, tag + " count n+2m+1");
    if (!ok) continue;
    for (std::size_t j = 0; j < un; ++j) {
      ok &= Y[j] == D.punctures[j] && k[j] == w.puncture_windings[j];
      ok &= red.marked_points[j].role == PointRole::Puncture && red.marked_points[j].index == j + 1;
    }
    ok &= Y[un] == GaussianRational::i() && k[un] == -1 && red.marked_points[un].role == PointRole::BoundaryMark &&
          red.marked_points[un].index == 0;
    for (std::size_t h = 0; h < um; ++h) {
      const Hole& H = D.holes[h];
      std::size_t bi = un + 1 + h, ci = un + 1 + um + h;
      ok &= Y[bi] == H.center + GaussianRational(Rational(0), H.radius) && k[bi] == -1;
      ok &= red.marked_points[bi].role == PointRole::BoundaryMark && red.marked_points[bi].index == h + 1;
      ok &= Y[ci] == H.center && k[ci] == w.hole_windings[h] + 1;
      ok &= red.marked_points[ci].role == PointRole::HoleCenter && red.marked_points[ci].index == h + 1;
    }
    for (std::size_t j = 0; j < Y.size(); ++j) ok &= red.marked_points[j].point == Y[j];
    o.require(ok, tag + " field-by-field");
  }
}

void criterion7(Outcome& o) {
  RationalFunction joukowski(Polynomial({z(1), z(0), z(1)}), Polynomial({z(0), z(1)}));
  Certificate a = guard_not_proper_first(joukowski);
  o.require(!a.passed() && a.guard == GuardOutcome::NotInjectivePair, "z+1/z not proper first");
  Certificate b = guard_symmetry(joukowski, RationalFunction(Polynomial::constant(1), Polynomial({z(0), z(1)})));
  o.require(!b.passed() && b.guard.has_value() && *b.guard != GuardOutcome::Pass, "1/z symmetry of z+1/z blocks");
  Certificate c = guard_not_proper_first(RationalFunction::identity());
  o.require(c.passed() && c.note.find("essential") != std::string::npos, "z passes with the essential-singularity note");
  o.detail << "symmetry guard " << (b.guard ? to_string(*b.guard) : "none") << "; ";
}

void criterion8(Outcome& o) {
  for (const auto& entry : cli::corpus()) {
    std::string first = cli::run(entry.job).output.dump(2);
    std::string second = cli::run(entry.job).output.dump(2);
    o.require(first == second, entry.name + " byte-identical");
  }
  o.detail << cli::corpus().size() << " corpus jobs; ";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"rational examples and the common component case", criterion1},
      {"example (a), K=10", criterion2},
      {"null construction on C minus 0, c=1", criterion3},
      {"100 random nonnull immersions", criterion4},
      {"50 embedding instances", criterion5},
      {"20 reductions", criterion6},
      {"guards", criterion7},
      {"corpus determinism", criterion8},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[c].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 60, "runs under 60 s");
    std::printf("criterion %zu: %s  %s (%.1f s) %s\n", c + 1, o.pass ? "PASS" : "FAIL", criteria[c].first.c_str(), secs,
                o.detail.str().c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
