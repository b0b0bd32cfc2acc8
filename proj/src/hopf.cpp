#include "hopfwreath/hopf.hpp"

#include <climits>
#include <set>

#include "hopfwreath/errors.hpp"
#include "hopfwreath/sweep.hpp"

namespace hopfwreath {

namespace {

// Cartesian expansion of per-leg combinations into flat tuples.
LinComb expand_outer(const std::vector<LinComb>& legs) {
  LinComb acc(Sym::tuple({}), 1);
  for (const auto& leg : legs) {
    LinComb next;
    for (const auto& [t, c] : acc)
      for (const auto& [s, d] : leg) {
        std::vector<Sym> parts = t.parts();
        parts.push_back(s);
        next.add(Sym::tuple(std::move(parts)), c * d);
      }
    acc = std::move(next);
  }
  return acc;
}

// Applies the coproduct to leg `i` of every tuple term, splicing the two
// new legs in place.
LinComb expand_leg(const HopfOps& h, const LinComb& tensors, std::size_t i) {
  LinComb out;
  for (const auto& [t, c] : tensors) {
    const auto& parts = t.parts();
    for (const auto& [ab, d] : h.coproduct(parts[i])) {
      std::vector<Sym> np;
      np.reserve(parts.size() + 1);
      for (std::size_t k = 0; k < i; ++k) np.push_back(parts[k]);
      np.push_back(ab.parts()[0]);
      np.push_back(ab.parts()[1]);
      for (std::size_t k = i + 1; k < parts.size(); ++k) np.push_back(parts[k]);
      out.add(Sym::tuple(std::move(np)), c * d);
    }
  }
  return out;
}

LinComb swap_two_legs(const LinComb& tensors) {
  LinComb out;
  for (const auto& [t, c] : tensors)
    out.add(Sym::pair(t.parts()[1], t.parts()[0]), c);
  return out;
}

} // namespace

LinComb sweedler_expand(const HopfOps& h, const LinComb& x, int legs) {
  if (legs < 2) throw ValidationError("sweedler_expand needs at least 2 legs");
  LinComb acc;
  for (const auto& [s, c] : x) acc.add(Sym::tuple({s}), c);
  for (int k = 1; k < legs; ++k) acc = expand_leg(h, acc, 0);
  if (h.cap > 0)
    for (const auto& [t, c] : acc)
      for (const auto& p : t.parts())
        if (h.deg(p) > h.cap)
          throw DegreeOverflow("sweedler leg exceeds degree cap: " + p.str());
  return acc;
}

LinComb tensor_product(const HopfOps& h, const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) {
      const auto& pa = ta.parts();
      const auto& pb = tb.parts();
      std::vector<LinComb> legs;
      legs.reserve(pa.size());
      for (std::size_t i = 0; i < pa.size(); ++i)
        legs.push_back(h.product(pa[i], pb[i]));
      out += (ca * cb) * expand_outer(legs);
    }
  return out;
}

LinMap convolve(const LinMap& f, const LinMap& g, const HopfOps& cdom, const HopfOps& dcod) {
  return LinMap::from_function(cdom.basis, [&](const Sym& x) {
    LinComb r;
    for (const auto& [ab, c] : cdom.coproduct(x))
      r += c * dcod.mul(f.apply(ab.parts()[0]), g.apply(ab.parts()[1]));
    return r;
  });
}

LinMap unit_counit_map(const HopfOps& cdom, const HopfOps& dcod) {
  return LinMap::from_function(cdom.basis, [&](const Sym& x) { return cdom.counit(x) * dcod.unit; });
}

namespace {

// Dense solve of Σ κ(x1) f(x2) = ε(x)1 over unknowns (x, d).
LinMap convolution_inverse_dense(const LinMap& f, const HopfOps& C, const HopfOps& D) {
  std::vector<Sym> unknowns;
  for (const auto& x : C.basis)
    for (const auto& d : D.basis) unknowns.push_back(Sym::pair(x, d));

  std::map<Sym, LinComb> columns;
  for (const auto& u : unknowns) columns.emplace(u, LinComb());
  for (const auto& x : C.basis)
    for (const auto& [ab, c] : C.coproduct(x)) {
      const Sym& a = ab.parts()[0];
      const LinComb fb = f.apply(ab.parts()[1]);
      for (const auto& d : D.basis) {
        LinComb& col = columns[Sym::pair(a, d)];
        for (const auto& [e, ce] : D.mul(LinComb(d), fb)) col.add(Sym::pair(x, e), c * ce);
      }
    }

  LinComb y;
  for (const auto& x : C.basis)
    for (const auto& [u, cu] : D.unit) y.add(Sym::pair(x, u), C.counit(x) * cu);

  LinComb sol;
  try {
    sol = solve(LinMap(unknowns, std::move(columns)), y);
  } catch (const NoSolution&) {
    throw NotInvertible("no left convolution inverse exists");
  }

  std::map<Sym, LinComb> kappa;
  for (const auto& x : C.basis) {
    LinComb v;
    for (const auto& d : D.basis) v.add(d, sol.coeff(Sym::pair(x, d)));
    kappa.emplace(x, std::move(v));
  }
  return LinMap(C.basis, std::move(kappa));
}

} // namespace

LinMap convolution_inverse(const LinMap& f, const HopfOps& C, const HopfOps& D) {
  // Structured pass: when every coproduct split of x has either x itself
  // or an already-solved symbol as left leg (group-like bases, connected
  // graded bases), κ resolves one element at a time.
  std::map<Sym, LinComb> kappa;
  std::vector<bool> done(C.basis.size(), false);
  std::size_t solved = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < C.basis.size(); ++i) {
      if (done[i]) continue;
      const Sym& x = C.basis[i];
      LinComb fx_self;
      LinComb rhs = C.counit(x) * D.unit;
      bool ready = true;
      for (const auto& [ab, c] : C.coproduct(x)) {
        const Sym& a = ab.parts()[0];
        const Sym& b = ab.parts()[1];
        if (a == x) {
          fx_self += c * f.apply(b);
        } else if (auto it = kappa.find(a); it != kappa.end()) {
          rhs -= c * D.mul(it->second, f.apply(b));
        } else {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      if (fx_self == D.unit) {
        kappa[x] = rhs;
      } else {
        LinMap right_mul = LinMap::from_function(
            D.basis, [&](const Sym& d) { return D.mul(LinComb(d), fx_self); });
        try {
          kappa[x] = solve(right_mul, rhs);
        } catch (const NoSolution&) {
          throw NotInvertible("no left convolution inverse at " + x.str());
        }
      }
      done[i] = true;
      ++solved;
      progress = true;
    }
  }

  LinMap k = solved == C.basis.size() ? LinMap(C.basis, std::move(kappa))
                                      : convolution_inverse_dense(f, C, D);

  // Cocommutative setting: the solved left inverse must be two-sided.
  const LinMap id_conv = unit_counit_map(C, D);
  for (const auto& x : C.basis) {
    if (convolve(k, f, C, D).apply(x) != id_conv.apply(x))
      throw NotInvertible("left inverse verification failed at " + x.str());
    if (convolve(f, k, C, D).apply(x) != id_conv.apply(x))
      throw NotInvertible("inverse is one-sided at " + x.str());
  }
  return k;
}

namespace {

std::vector<Sym> window_elements(const HopfOps& h, int w) {
  std::vector<Sym> out;
  for (const auto& s : h.basis)
    if (h.deg(s) <= w) out.push_back(s);
  return out;
}

std::vector<std::pair<Sym, Sym>> window_pairs(const HopfOps& h, int w) {
  std::vector<std::pair<Sym, Sym>> out;
  for (const auto& a : h.basis) {
    const int da = h.deg(a);
    if (da > w) continue;
    for (const auto& b : h.basis)
      if (da + h.deg(b) <= w) out.emplace_back(a, b);
  }
  return out;
}

int effective_window(const HopfOps& h, int window) {
  if (h.cap == 0) return INT_MAX;
  return window < 0 ? h.cap : std::min(window, h.cap);
}

using Witness = std::pair<Sym, Sym>;

} // namespace

AxiomReport check_axioms(const HopfOps& h, int window) {
  const int w = effective_window(h, window);
  const auto elems = window_elements(h, w);
  const auto pairs = h.has_product() ? window_pairs(h, w) : std::vector<std::pair<Sym, Sym>>{};
  AxiomReport report;

  report.checks.push_back(
      {"coassociativity", sweep::collect<Witness>(elems.size(), [&](std::size_t i) {
         const Sym& x = elems[i];
         const LinComb d = h.coproduct(x);
         std::vector<Witness> v;
         if (expand_leg(h, d, 0) != expand_leg(h, d, 1)) v.emplace_back(x, x);
         return v;
       })});

  report.checks.push_back({"counit", sweep::collect<Witness>(elems.size(), [&](std::size_t i) {
                             const Sym& x = elems[i];
                             LinComb left, right;
                             for (const auto& [ab, c] : h.coproduct(x)) {
                               left.add(ab.parts()[1], c * h.counit(ab.parts()[0]));
                               right.add(ab.parts()[0], c * h.counit(ab.parts()[1]));
                             }
                             std::vector<Witness> v;
                             if (left != LinComb(x) || right != LinComb(x)) v.emplace_back(x, x);
                             return v;
                           })});

  if (h.has_product()) {
    auto viols = sweep::collect<Witness>(pairs.size(), [&](std::size_t i) {
      const auto& [x, y] = pairs[i];
      std::vector<Witness> v;
      const LinComb xy = h.product(x, y);
      if (h.delta(xy) != tensor_product(h, h.coproduct(x), h.coproduct(y)) ||
          h.eps(xy) != h.counit(x) * h.counit(y))
        v.emplace_back(x, y);
      return v;
    });
    if (h.delta(h.unit) != tensor(h.unit, h.unit) || h.eps(h.unit) != 1) {
      const Sym u = h.unit.begin()->first;
      viols.emplace_back(u, u);
    }
    report.checks.push_back({"bialgebra", std::move(viols)});
  }

  if (h.has_product() && h.has_antipode()) {
    report.checks.push_back(
        {"antipode", sweep::collect<Witness>(elems.size(), [&](std::size_t i) {
           const Sym& x = elems[i];
           LinComb left, right;
           for (const auto& [ab, c] : h.coproduct(x)) {
             left += c * h.mul(h.antipode(ab.parts()[0]), LinComb(ab.parts()[1]));
             right += c * h.mul(LinComb(ab.parts()[0]), h.antipode(ab.parts()[1]));
           }
           const LinComb expect = h.counit(x) * h.unit;
           std::vector<Witness> v;
           if (left != expect || right != expect) v.emplace_back(x, x);
           return v;
         })});
  }

  report.checks.push_back(
      {"cocommutativity", sweep::collect<Witness>(elems.size(), [&](std::size_t i) {
         const Sym& x = elems[i];
         const LinComb d = h.coproduct(x);
         std::vector<Witness> v;
         if (swap_two_legs(d) != d) v.emplace_back(x, x);
         return v;
       })});

  return report;
}

AxiomReport check_algebra(const HopfOps& h, int window) {
  const int w = effective_window(h, window);
  const auto elems = window_elements(h, w);
  AxiomReport report;

  report.checks.push_back({"unit-law", sweep::collect<Witness>(elems.size(), [&](std::size_t i) {
                             const Sym& x = elems[i];
                             std::vector<Witness> v;
                             if (h.mul(h.unit, LinComb(x)) != LinComb(x) ||
                                 h.mul(LinComb(x), h.unit) != LinComb(x))
                               v.emplace_back(x, x);
                             return v;
                           })});

  std::vector<std::array<Sym, 3>> triples;
  for (const auto& a : h.basis) {
    const int da = h.deg(a);
    if (da > w) continue;
    for (const auto& b : h.basis) {
      const int dab = da + h.deg(b);
      if (dab > w) continue;
      for (const auto& c : h.basis)
        if (dab + h.deg(c) <= w) triples.push_back({a, b, c});
    }
  }
  report.checks.push_back(
      {"associativity", sweep::collect<Witness>(triples.size(), [&](std::size_t i) {
         const auto& [a, b, c] = triples[i];
         std::vector<Witness> v;
         if (h.mul(h.product(a, b), LinComb(c)) != h.mul(LinComb(a), h.product(b, c)))
           v.emplace_back(a, Sym::pair(b, c));
         return v;
       })});

  return report;
}

std::vector<LinComb> hopf_kernel(const HopfMorphism& pi) {
  const HopfOps& e = *pi.source;
  const HopfOps& q = *pi.target;
  LinMap m = LinMap::from_function(e.basis, [&](const Sym& x) {
    LinComb r;
    for (const auto& [ab, c] : e.coproduct(x))
      r += c * tensor(LinComb(ab.parts()[0]), pi.map.apply(ab.parts()[1]));
    r -= tensor(LinComb(x), q.unit);
    return r;
  });
  return kernel_basis(m);
}

std::optional<Scalar> sqrt_rational(const Scalar& s) {
  if (s < 0) return std::nullopt;
  mpz_class num = s.get_num(), den = s.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Scalar r(rn, rd);
  r.canonicalize();
  return r;
}

namespace {

bool is_group_like(const HopfOps& h, const LinComb& x) {
  return !x.is_zero() && h.eps(x) == 1 && h.delta(x) == tensor(x, x);
}

void push_unique(std::vector<LinComb>& out, const LinComb& x) {
  for (const auto& y : out)
    if (y == x) return;
  out.push_back(x);
}

// Rational roots of a s^2 + b s + c = 0 (a possibly zero).
std::vector<Scalar> quadratic_roots(const Scalar& a, const Scalar& b, const Scalar& c) {
  std::vector<Scalar> roots;
  if (a == 0) {
    if (b != 0) roots.push_back(-c / b);
    return roots;
  }
  const auto root = sqrt_rational(b * b - 4 * a * c);
  if (!root) return roots;
  roots.push_back((-b + *root) / (2 * a));
  if (*root != 0) roots.push_back((-b - *root) / (2 * a));
  return roots;
}

// Group-like candidates supported on {bi, bj}: the coefficients satisfy
// a small linear system plus one quadratic, all solved exactly.
void support2_candidates(const HopfOps& h, const Sym& bi, const Sym& bj,
                         std::vector<LinComb>& out) {
  const LinComb di = h.coproduct(bi), dj = h.coproduct(bj);
  const Scalar ei = h.counit(bi), ej = h.counit(bj);
  const Sym diag[4] = {Sym::pair(bi, bi), Sym::pair(bi, bj), Sym::pair(bj, bi),
                       Sym::pair(bj, bj)};

  // rows (A, B, R): A s + B t = R
  std::vector<std::array<Scalar, 3>> rows;
  rows.push_back({ei, ej, Scalar(1)});
  std::set<Sym> support;
  for (const auto& [p, c] : di) support.insert(p);
  for (const auto& [p, c] : dj) support.insert(p);
  for (const auto& p : support) {
    if (p == diag[0] || p == diag[1] || p == diag[2] || p == diag[3]) continue;
    rows.push_back({di.coeff(p), dj.coeff(p), Scalar(0)});
  }

  // 2-unknown elimination: find the solution set of the linear part.
  Matrix m;
  for (const auto& r : rows) m.push_back({r[0], r[1], r[2]});
  const auto pivots = rref(m);
  if (!pivots.empty() && pivots.back() == 2) return; // inconsistent
  Scalar s0(0), t0(0), ds(0), dt(0);
  if (pivots.size() == 2) {
    s0 = m[0][2];
    t0 = m[1][2];
  } else if (pivots.size() == 1 && pivots[0] == 0) {
    s0 = m[0][2];
    ds = -m[0][1];
    dt = 1;
  } else if (pivots.size() == 1) {
    t0 = m[0][2];
    ds = 1;
  } else {
    return; // 0 = 1 row would have been caught; rank 0 with rhs 1 impossible
  }

  auto try_candidate = [&](const Scalar& s, const Scalar& t) {
    if (s == 0 || t == 0) return; // smaller support handled elsewhere
    LinComb x;
    x.add(bi, s);
    x.add(bj, t);
    if (is_group_like(h, x)) push_unique(out, x);
  };

  if (pivots.size() == 2) {
    try_candidate(s0, t0);
    return;
  }

  // One-parameter family (s,t) = (s0,t0) + λ(ds,dt); intersect with one
  // non-degenerate diagonal quadratic.
  for (int which = 0; which < 4; ++which) {
    const Scalar A = di.coeff(diag[which]), B = dj.coeff(diag[which]);
    // lhs(λ) = A s(λ) + B t(λ); rhs(λ) = product of the matching coefficients
    const Scalar u0 = (which < 2) ? s0 : t0, du = (which < 2) ? ds : dt;
    const Scalar v0 = (which % 2 == 0) ? ((which < 2) ? s0 : t0) : ((which < 2) ? t0 : s0);
    const Scalar dv = (which % 2 == 0) ? ((which < 2) ? ds : dt) : ((which < 2) ? dt : ds);
    // quadratic in λ: (u0+λdu)(v0+λdv) − A(s0+λds) − B(t0+λdt) = 0
    const Scalar qa = du * dv;
    const Scalar qb = u0 * dv + v0 * du - A * ds - B * dt;
    const Scalar qc = u0 * v0 - A * s0 - B * t0;
    if (qa == 0 && qb == 0 && qc == 0) continue; // degenerate on the line
    for (const auto& lam : quadratic_roots(qa, qb, qc))
      try_candidate(s0 + lam * ds, t0 + lam * dt);
    return;
  }
  // All four quadratics degenerate: spot-check two points of the line.
  try_candidate(s0, t0);
  try_candidate(s0 + ds, t0 + dt);
}

} // namespace

std::vector<LinComb> group_likes(const HopfOps& h) {
  std::vector<LinComb> out;
  for (const auto& b : h.basis) {
    if (is_group_like(h, LinComb(b))) {
      push_unique(out, LinComb(b));
      continue;
    }
    // rescaled single symbol
    const Scalar e = h.counit(b);
    if (e != 0 && e != 1) {
      LinComb x(b, 1 / e);
      if (is_group_like(h, x)) push_unique(out, x);
    }
  }
  for (std::size_t i = 0; i < h.basis.size(); ++i)
    for (std::size_t j = i + 1; j < h.basis.size(); ++j)
      support2_candidates(h, h.basis[i], h.basis[j], out);
  return out;
}

std::vector<LinComb> primitives(const HopfOps& h) {
  LinMap m = LinMap::from_function(h.basis, [&](const Sym& x) {
    return h.coproduct(x) - tensor(LinComb(x), h.unit) - tensor(h.unit, LinComb(x));
  });
  return kernel_basis(m);
}

AxiomReport check_hopf_morphism(const HopfMorphism& mor, int window) {
  const HopfOps& s = *mor.source;
  const HopfOps& t = *mor.target;
  const LinMap& f = mor.map;
  const int w = effective_window(s, window);
  const auto elems = window_elements(s, w);
  AxiomReport report;

  if (s.has_product() && t.has_product()) {
    const auto pairs = window_pairs(s, w);
    report.checks.push_back(
        {"morphism-product", sweep::collect<Witness>(pairs.size(), [&](std::size_t i) {
           const auto& [x, y] = pairs[i];
           std::vector<Witness> v;
           if (f.apply(s.product(x, y)) != t.mul(f.apply(x), f.apply(y))) v.emplace_back(x, y);
           return v;
         })});
    AxiomCheck unit_check{"morphism-unit", {}};
    if (f.apply(s.unit) != t.unit) {
      const Sym u = s.unit.begin()->first;
      unit_check.violations.emplace_back(u, u);
    }
    report.checks.push_back(std::move(unit_check));
  }

  report.checks.push_back(
      {"morphism-coproduct", sweep::collect<Witness>(elems.size(), [&](std::size_t i) {
         const Sym& x = elems[i];
         LinComb pushed;
         for (const auto& [ab, c] : s.coproduct(x))
           pushed += c * tensor(f.apply(ab.parts()[0]), f.apply(ab.parts()[1]));
         std::vector<Witness> v;
         if (pushed != t.delta(f.apply(x))) v.emplace_back(x, x);
         return v;
       })});

  report.checks.push_back(
      {"morphism-counit", sweep::collect<Witness>(elems.size(), [&](std::size_t i) {
         const Sym& x = elems[i];
         std::vector<Witness> v;
         if (t.eps(f.apply(x)) != s.counit(x)) v.emplace_back(x, x);
         return v;
       })});

  return report;
}

HopfPtr tensor_hopf(HopfPtr h1, HopfPtr h2) {
  auto h = std::make_shared<HopfOps>();
  h->name = h1->name + "(x)" + h2->name;
  const bool graded = h1->cap > 0 || h2->cap > 0;
  h->cap = graded ? std::max(h1->cap, h2->cap) : 0;
  for (const auto& a : h1->basis)
    for (const auto& b : h2->basis) {
      if (graded && h1->deg(a) + h2->deg(b) > h->cap) continue;
      h->basis.push_back(Sym::pair(a, b));
    }
  h->degree = [h1, h2](const Sym& s) {
    return h1->deg(s.parts()[0]) + h2->deg(s.parts()[1]);
  };
  h->product = [h1, h2](const Sym& x, const Sym& y) {
    return tensor(h1->product(x.parts()[0], y.parts()[0]),
                  h2->product(x.parts()[1], y.parts()[1]));
  };
  h->unit = tensor(h1->unit, h2->unit);
  h->coproduct = [h1, h2](const Sym& s) {
    LinComb r;
    for (const auto& [ab, c] : h1->coproduct(s.parts()[0]))
      for (const auto& [cd, d] : h2->coproduct(s.parts()[1]))
        r.add(Sym::pair(Sym::pair(ab.parts()[0], cd.parts()[0]),
                        Sym::pair(ab.parts()[1], cd.parts()[1])),
              c * d);
    return r;
  };
  h->counit = [h1, h2](const Sym& s) -> Scalar {
    return h1->counit(s.parts()[0]) * h2->counit(s.parts()[1]);
  };
  if (h1->has_antipode() && h2->has_antipode())
    h->antipode = [h1, h2](const Sym& s) {
      return tensor(h1->antipode(s.parts()[0]), h2->antipode(s.parts()[1]));
    };
  return h;
}

} // namespace hopfwreath
