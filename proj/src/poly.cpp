#include "ratk/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "ratk/errors.hpp"

namespace ratk {

namespace {

// Strips trailing coefficients below tol relative to the largest one.
std::vector<Complex> trim(std::vector<Complex> c, double tol) {
  double norm = 0.0;
  for (const Complex& v : c) norm = std::max(norm, std::abs(v));
  if (norm == 0.0) return {};
  while (!c.empty() && std::abs(c.back()) <= tol * norm) c.pop_back();
  return c;
}

}  // namespace

Poly::Poly(std::vector<Complex> coeffs, double trim_tol)
    : coeffs_(trim(std::move(coeffs), trim_tol)) {
  for (const Complex& v : coeffs_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ValidationError("polynomial coefficients must be finite");
    }
  }
}

Poly::Poly(std::initializer_list<Complex> coeffs)
    : Poly(std::vector<Complex>(coeffs)) {}

Poly Poly::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex(1)};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return Poly(std::move(c), 0.0);
}

double Poly::coeff_norm() const {
  double norm = 0.0;
  for (const Complex& v : coeffs_) norm = std::max(norm, std::abs(v));
  return norm;
}

Complex Poly::operator()(Complex z) const {
  Complex acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = static_cast<double>(i) * coeffs_[i];
  }
  return Poly(std::move(d), 0.0);
}

Poly Poly::reversed(long n) const {
  if (n < degree()) throw ValidationError("reversal degree below degree");
  std::vector<Complex> r(static_cast<size_t>(n) + 1, Complex(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    r[static_cast<size_t>(n) - i] = coeffs_[i];
  }
  return Poly(std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Complex> c = coeffs_;
  for (Complex& v : c) v = -v;
  return Poly(std::move(c), 0.0);
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(c));
}

Poly operator*(Complex s, const Poly& p) {
  std::vector<Complex> c = p.coeffs_;
  for (Complex& v : c) v *= s;
  return Poly(std::move(c));
}

namespace {

// p and p' at z by a fused Horner pass over monic working coefficients.
void horner2(const std::vector<Complex>& c, Complex z, Complex& p, Complex& dp) {
  p = Complex(0);
  dp = Complex(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Derivative ladder: ladder[k] holds the k-th derivative's coefficients.
std::vector<std::vector<Complex>> derivative_ladder(const std::vector<Complex>& c,
                                                    int levels) {
  std::vector<std::vector<Complex>> ladder{c};
  for (int k = 1; k <= levels; ++k) {
    const std::vector<Complex>& prev = ladder.back();
    if (prev.size() <= 1) break;
    std::vector<Complex> d(prev.size() - 1);
    for (size_t i = 1; i < prev.size(); ++i) d[i - 1] = static_cast<double>(i) * prev[i];
    ladder.push_back(std::move(d));
  }
  return ladder;
}

// Newton on the (m-1)-th derivative tightens a multiplicity-m cluster center.
Complex polish(const std::vector<std::vector<Complex>>& ladder, Complex z0,
               int multiplicity) {
  if (multiplicity >= static_cast<int>(ladder.size()) + 1) return z0;
  const std::vector<Complex>& work = ladder[multiplicity - 1];
  Complex z = z0;
  for (int it = 0; it < 80; ++it) {
    Complex p, dp;
    horner2(work, z, p, dp);
    if (std::abs(dp) == 0.0) break;
    Complex step = p / dp;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return z0;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
  }
  return z;
}

// A claimed m-fold root must annihilate the first m-1 derivatives to the
// accuracy an m-fold root actually allows in double precision.
bool multiplicity_certificate(const std::vector<std::vector<Complex>>& ladder,
                              Complex r, int m) {
  for (int k = 0; k < m; ++k) {
    const std::vector<Complex>& dk = ladder[k];
    double norm = 0.0;
    for (const Complex& v : dk) norm = std::max(norm, std::abs(v));
    const double scale =
        std::max(norm, 1e-300) *
        std::pow(std::max(1.0, std::abs(r)), static_cast<double>(dk.size()) - 1);
    // Never demand residuals below the Horner evaluation noise floor.
    const double floor = 8.0 * static_cast<double>(dk.size()) * 2.23e-16;
    Complex val, unused;
    horner2(dk, r, val, unused);
    if (std::abs(val) > std::max(std::pow(1e-8, m - k), floor) * scale) return false;
  }
  return true;
}

std::vector<RootCluster> cluster_points(const std::vector<Complex>& pts,
                                        const std::vector<int>& mult,
                                        double tol) {
  const int n = static_cast<int>(pts.size());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(pts[i] - pts[j]) <= tol) uf.unite(i, j);
    }
  }
  std::vector<RootCluster> out;
  std::vector<int> root_of(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (root_of[r] < 0) {
      root_of[r] = static_cast<int>(out.size());
      out.push_back({Complex(0), 0});
    }
    RootCluster& cl = out[root_of[r]];
    cl.root += static_cast<double>(mult[i]) * pts[i];
    cl.multiplicity += mult[i];
  }
  for (RootCluster& cl : out) cl.root /= static_cast<double>(cl.multiplicity);
  return out;
}

// A double root leaves two approximations ~sqrt(eps) apart, a triple root
// ~eps^(1/3): the admissible pairing radius grows with the candidate
// multiplicity. Merges beyond the base tolerance are only committed when
// the polished center passes the multiplicity certificate.
void agglomerate(std::vector<RootCluster>& clusters,
                 const std::vector<std::vector<Complex>>& ladder, double tol) {
  std::set<std::pair<int, int>> rejected;
  while (clusters.size() > 1) {
    int bi = -1, bj = -1;
    double best = 1e300;
    for (int i = 0; i < static_cast<int>(clusters.size()); ++i) {
      for (int j = i + 1; j < static_cast<int>(clusters.size()); ++j) {
        if (rejected.count({i, j})) continue;
        const int m = clusters[i].multiplicity + clusters[j].multiplicity;
        // Anticipate that the pair may be a fragment of a higher-order
        // root: scatter of an m-fold root is ~eps^(1/m).
        const double gate =
            std::min(1e-3, std::max(tol, std::pow(1e-13, 1.0 / (m + 2)))) *
            std::max(1.0, std::abs(clusters[i].root));
        const double dist = std::abs(clusters[i].root - clusters[j].root);
        if (dist <= gate && dist < best) {
          best = dist;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) break;
    const int m = clusters[bi].multiplicity + clusters[bj].multiplicity;
    const Complex centroid =
        (static_cast<double>(clusters[bi].multiplicity) * clusters[bi].root +
         static_cast<double>(clusters[bj].multiplicity) * clusters[bj].root) /
        static_cast<double>(m);
    const Complex refined = polish(ladder, centroid, m);
    if (multiplicity_certificate(ladder, refined, m)) {
      clusters[bi] = {refined, m};
      clusters.erase(clusters.begin() + bj);
      rejected.clear();
    } else {
      rejected.insert({bi, bj});
    }
  }
}

}  // namespace

std::vector<RootCluster> poly_roots(const Poly& p, double cluster_tol, int max_iter) {
  if (p.degree() < 1) throw ValidationError("poly_roots requires degree >= 1");

  // Work on coefficients normalized to unit sup norm; roots are unchanged.
  std::vector<Complex> c = p.coeffs();
  const double norm = p.coeff_norm();
  for (Complex& v : c) v /= norm;

  // Exact zero roots at the origin come off first.
  int origin_mult = 0;
  while (!c.empty() && std::abs(c.front()) <= 1e-250) {
    c.erase(c.begin());
    ++origin_mult;
  }

  std::vector<RootCluster> clusters;
  const int d = static_cast<int>(c.size()) - 1;
  if (d >= 1) {
    // Monic working copy.
    const Complex lead = c.back();
    for (Complex& v : c) v /= lead;

    // Newton-polygon initialization: per-root modulus estimates from the
    // upper convex hull of (i, log|c_i|). Robust to the wild coefficient
    // scaling left by iterated compositions.
    std::vector<double> radii(d, 1.0);
    {
      struct Pt {
        int i;
        double y;
      };
      std::vector<Pt> hull;
      for (int i = 0; i <= d; ++i) {
        const double a = std::abs(c[i]);
        if (a == 0.0) continue;
        Pt p{i, std::log(a)};
        while (hull.size() >= 2) {
          const Pt& u = hull[hull.size() - 2];
          const Pt& v = hull.back();
          const double cross = static_cast<double>(v.i - u.i) * (p.y - u.y) -
                               (v.y - u.y) * static_cast<double>(p.i - u.i);
          if (cross >= 0) {
            hull.pop_back();
          } else {
            break;
          }
        }
        hull.push_back(p);
      }
      int idx = 0;
      for (size_t e = 0; e + 1 < hull.size(); ++e) {
        const double rho = std::exp((hull[e].y - hull[e + 1].y) /
                                    static_cast<double>(hull[e + 1].i - hull[e].i));
        for (int t = hull[e].i; t < hull[e + 1].i && idx < d; ++t) {
          radii[idx++] = std::clamp(rho, 1e-150, 1e150);
        }
      }
    }

    std::mt19937 rng(0x52415453u);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    std::vector<Complex> z(d);
    for (int j = 0; j < d; ++j) {
      const double theta =
          2.0 * M_PI * (static_cast<double>(j) / d + 0.26 + jitter(rng) / d);
      const double r = radii[j] * (1.0 + 0.1 * jitter(rng));
      z[j] = Complex(r * std::cos(theta), r * std::sin(theta));
    }

    // |p(z)| cannot be meaningfully driven below the Horner noise floor;
    // a root approximation is settled once it reaches it.
    auto noise_floor = [&](Complex at) {
      double acc = 0.0;
      const double m = std::abs(at);
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + std::abs(*it);
      return 8.0 * d * 2.23e-16 * acc;
    };
    auto all_settled = [&]() {
      for (int j = 0; j < d; ++j) {
        Complex pv, dpv;
        horner2(c, z[j], pv, dpv);
        const double floor = noise_floor(z[j]);
        if (!std::isfinite(floor) || std::abs(pv) > floor) return false;
      }
      return true;
    };

    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
      double max_step = 0.0;
      for (int j = 0; j < d; ++j) {
        Complex pv, dpv;
        horner2(c, z[j], pv, dpv);
        if (std::abs(pv) == 0.0) continue;
        if (std::abs(dpv) == 0.0) {
          z[j] += Complex(1e-8 * (1.0 + std::abs(z[j])), 1e-8);
          max_step = 1.0;
          continue;
        }
        const Complex newton = pv / dpv;
        Complex sum(0);
        for (int k = 0; k < d; ++k) {
          if (k == j) continue;
          Complex diff = z[j] - z[k];
          if (std::abs(diff) < 1e-300) diff = Complex(1e-300, 0);
          sum += Complex(1) / diff;
        }
        const Complex denom = Complex(1) - newton * sum;
        const Complex step = (std::abs(denom) < 1e-12) ? newton : newton / denom;
        const Complex moved = z[j] - step;
        if (!std::isfinite(moved.real()) || !std::isfinite(moved.imag())) {
          z[j] *= Complex(1.0 + 1e-3, 1e-3);  // nudge off the bad configuration
          max_step = 1.0;
          continue;
        }
        z[j] = moved;
        max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[j])));
      }
      if (max_step <= 1e-15 || (iter % 16 == 15 && all_settled())) converged = true;
    }
    if (!converged && !all_settled()) {
      throw NonConvergence(max_iter, "root iteration did not settle");
    }

    const auto ladder = derivative_ladder(c, d);
    std::vector<int> ones(d, 1);
    clusters = cluster_points(z, ones, cluster_tol);
    for (RootCluster& cl : clusters) {
      cl.root = polish(ladder, cl.root, cl.multiplicity);
    }
    agglomerate(clusters, ladder, cluster_tol);
  }

  if (origin_mult > 0) {
    bool merged = false;
    for (RootCluster& cl : clusters) {
      if (std::abs(cl.root) <= cluster_tol) {
        cl.multiplicity += origin_mult;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back({Complex(0), origin_mult});
  }

  std::sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
    return a.root.imag() < b.root.imag();
  });
  return clusters;
}

}  // namespace ratk
