#include "hopfwreath/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hopfwreath/errors.hpp"

namespace hopfwreath {

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::string> elements,
                                    std::vector<std::vector<int>> mul) {
  FiniteGroup g;
  g.name = std::move(name);
  g.elements = std::move(elements);
  g.mul = std::move(mul);
  const int n = g.size();
  if (static_cast<int>(g.mul.size()) != n)
    throw ValidationError(g.name + ": multiplication table has wrong shape");
  for (const auto& row : g.mul) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError(g.name + ": multiplication table has wrong shape");
    for (int v : row)
      if (v < 0 || v >= n) throw ValidationError(g.name + ": table entry out of range");
  }
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.mul[e][x] == x && g.mul[x][e] == x;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw ValidationError(g.name + ": no identity element");
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul[a][b] == g.identity && g.mul[b][a] == g.identity) {
        g.inverse[a] = b;
        break;
      }
    if (g.inverse[a] < 0) throw ValidationError(g.name + ": missing inverse of " + g.elements[a]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
          throw ValidationError(g.name + ": associativity fails at (" + g.elements[a] + "," +
                                g.elements[b] + "," + g.elements[c] + ")");
  return g;
}

int FiniteGroup::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == label) return i;
  throw ValidationError(name + ": unknown element '" + label + "'");
}

int FiniteGroup::order_of(int a) const {
  int x = a, n = 1;
  while (x != identity) {
    x = op(x, a);
    ++n;
  }
  return n;
}

namespace {

FiniteGroup cyclic(int n, const std::string& name) {
  std::vector<std::string> elems;
  for (int i = 0; i < n; ++i) elems.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return FiniteGroup::from_table(name, std::move(elems), std::move(mul));
}

// Group generated by permutations, with elements named r^i s^j style
// through the supplied labeler.
FiniteGroup from_permutations(const std::string& name,
                              const std::vector<std::pair<std::string, std::vector<int>>>& named) {
  std::vector<std::vector<int>> perms;
  std::vector<std::string> labels;
  for (const auto& [label, p] : named) {
    perms.push_back(p);
    labels.push_back(label);
  }
  const int n = static_cast<int>(perms.size());
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]]; // (a∘b)(i) = a(b(i))
    return c;
  };
  std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto p = compose(perms[i], perms[j]);
      for (int k = 0; k < n; ++k)
        if (perms[k] == p) {
          mul[i][j] = k;
          break;
        }
      if (mul[i][j] < 0) throw ValidationError(name + ": permutation set not closed");
    }
  return FiniteGroup::from_table(name, std::move(labels), std::move(mul));
}

FiniteGroup quaternion8() {
  // 1,-1,i,-i,j,-j,k,-k with labels m* for the negatives; an element is
  // encoded as unit*2 + sign with units 1,i,j,k.
  std::vector<std::string> e = {"1", "m1", "i", "mi", "j", "mj", "k", "mk"};
  auto decode = [](int a) { return std::pair<int, int>(a % 2, a / 2); };
  auto encode = [](int sign, int unit) { return unit * 2 + sign; };
  const int uunit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int usign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      auto [sa, ua] = decode(a);
      auto [sb, ub] = decode(b);
      mul[a][b] = encode((sa + sb + usign[ua][ub]) % 2, uunit[ua][ub]);
    }
  return FiniteGroup::from_table("Q8", std::move(e), std::move(mul));
}

} // namespace

FiniteGroup builtin_group(const std::string& name) {
  if (name == "C2") return cyclic(2, "C2");
  if (name == "C3") return cyclic(3, "C3");
  if (name == "C4") return cyclic(4, "C4");
  if (name == "C2xC2") {
    std::vector<std::string> e = {"1", "a", "b", "ab"};
    std::vector<std::vector<int>> mul = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    return FiniteGroup::from_table("C2xC2", std::move(e), std::move(mul));
  }
  if (name == "S3")
    return from_permutations("S3", {{"1", {0, 1, 2}},
                                    {"r", {1, 2, 0}},
                                    {"r2", {2, 0, 1}},
                                    {"s", {1, 0, 2}},
                                    {"rs", {0, 2, 1}},
                                    {"r2s", {2, 1, 0}}});
  if (name == "D4")
    return from_permutations("D4", {{"1", {0, 1, 2, 3}},
                                    {"r", {1, 2, 3, 0}},
                                    {"r2", {2, 3, 0, 1}},
                                    {"r3", {3, 0, 1, 2}},
                                    {"s", {0, 3, 2, 1}},
                                    {"rs", {1, 0, 3, 2}},
                                    {"r2s", {2, 1, 0, 3}},
                                    {"r3s", {3, 2, 1, 0}}});
  if (name == "Q8") return quaternion8();
  throw ParseError("unknown builtin group '" + name + "'");
}

std::vector<std::string> builtin_group_names() {
  return {"C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"};
}

int WreathGroup::encode(const WreathGroupElement& e) const {
  int f_rank = 0;
  for (int x = 0; x < top.size(); ++x) f_rank = f_rank * base.size() + e.f[x];
  return f_rank * top.size() + e.q;
}

WreathGroupElement WreathGroup::decode(int idx) const {
  WreathGroupElement e;
  e.q = idx % top.size();
  int f_rank = idx / top.size();
  e.f.assign(top.size(), 0);
  for (int x = top.size() - 1; x >= 0; --x) {
    e.f[x] = f_rank % base.size();
    f_rank /= base.size();
  }
  return e;
}

std::string WreathGroup::label(const WreathGroupElement& e) const {
  std::string s = "(";
  for (int x = 0; x < top.size(); ++x) {
    if (x) s += ',';
    s += base.elements[e.f[x]];
  }
  s += ';';
  s += top.elements[e.q];
  s += ')';
  return s;
}

WreathGroup wreath_group(const FiniteGroup& a, const FiniteGroup& q) {
  WreathGroup w;
  w.base = a;
  w.top = q;
  long long order = q.size();
  for (int i = 0; i < q.size(); ++i) order *= a.size();
  if (order > 4096)
    throw ValidationError("wreath product order " + std::to_string(order) + " too large");

  const int n = static_cast<int>(order);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = w.label(w.decode(i));

  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    const auto ei = w.decode(i);
    for (int j = 0; j < n; ++j) {
      const auto ej = w.decode(j);
      WreathGroupElement p;
      p.q = q.op(ei.q, ej.q);
      p.f.resize(q.size());
      for (int x = 0; x < q.size(); ++x) p.f[x] = a.op(ei.f[x], ej.f[q.op(x, ei.q)]);
      mul[i][j] = w.encode(p);
    }
  }
  w.group = FiniteGroup::from_table(a.name + "wr" + q.name, std::move(labels), std::move(mul));
  return w;
}

GroupExtension GroupExtension::make(FiniteGroup total, FiniteGroup kernel, FiniteGroup quotient,
                                    std::vector<int> iota, std::vector<int> pi,
                                    std::vector<int> section) {
  GroupExtension e;
  e.total = std::move(total);
  e.kernel = std::move(kernel);
  e.quotient = std::move(quotient);
  e.iota = std::move(iota);
  e.pi = std::move(pi);
  e.section = std::move(section);

  const auto& E = e.total;
  const auto& A = e.kernel;
  const auto& Q = e.quotient;
  // iota: injective homomorphism
  std::set<int> image;
  for (int a = 0; a < A.size(); ++a) image.insert(e.iota[a]);
  if (static_cast<int>(image.size()) != A.size())
    throw ValidationError("iota is not injective");
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b)
      if (e.iota[A.op(a, b)] != E.op(e.iota[a], e.iota[b]))
        throw ValidationError("iota is not a homomorphism");
  // pi: surjective homomorphism
  std::set<int> hit(e.pi.begin(), e.pi.end());
  if (static_cast<int>(hit.size()) != Q.size()) throw NotSurjective("pi is not surjective");
  for (int x = 0; x < E.size(); ++x)
    for (int y = 0; y < E.size(); ++y)
      if (e.pi[E.op(x, y)] != Q.op(e.pi[x], e.pi[y]))
        throw ValidationError("pi is not a homomorphism");
  // exactness
  std::set<int> ker;
  for (int x = 0; x < E.size(); ++x)
    if (e.pi[x] == Q.identity) ker.insert(x);
  if (ker != image) throw KernelMismatch("image(iota) differs from kernel(pi)");
  // section laws
  for (int q = 0; q < Q.size(); ++q)
    if (e.pi[e.section[q]] != q) throw SectionInvalid("pi(section(q)) != q");
  if (e.section[Q.identity] != E.identity) throw SectionInvalid("section(1) != 1");
  return e;
}

GroupExtension builtin_group_extension(const std::string& name) {
  if (name == "C4/C2") {
    FiniteGroup e = builtin_group("C4"), a = builtin_group("C2"), q = builtin_group("C2");
    // A = <g2>, Q = C4 / <g2>
    return GroupExtension::make(e, a, q, {0, 2}, {0, 1, 0, 1}, {0, 1});
  }
  if (name == "C2xC2/C2") {
    FiniteGroup e = builtin_group("C2xC2"), a = builtin_group("C2"), q = builtin_group("C2");
    // A = <a>, pi kills a
    return GroupExtension::make(e, a, q, {0, 1}, {0, 0, 1, 1}, {0, 2});
  }
  if (name == "D4/C2") {
    FiniteGroup e = builtin_group("D4"), a = builtin_group("C2"), q = builtin_group("C2xC2");
    // A = center <r2>; Q = D4 / center on {1,a=rbar,b=sbar,ab}
    // elements of D4: 1,r,r2,r3,s,rs,r2s,r3s
    std::vector<int> pi = {0, 1, 0, 1, 2, 3, 2, 3};
    std::vector<int> section = {0, 1, 4, 5}; // 1, r, s, rs
    return GroupExtension::make(e, a, q, {0, 2}, std::move(pi), std::move(section));
  }
  throw ParseError("unknown builtin extension '" + name + "'");
}

std::vector<std::string> builtin_group_extension_names() {
  return {"C4/C2", "C2xC2/C2", "D4/C2"};
}

GroupEmbedding kk_embed_group(const GroupExtension& ext) {
  const auto& E = ext.total;
  const auto& A = ext.kernel;
  const auto& Q = ext.quotient;

  GroupEmbedding emb;
  emb.wreath = wreath_group(A, Q);

  // inverse of iota on its image
  std::map<int, int> iota_inv;
  for (int a = 0; a < A.size(); ++a) iota_inv[ext.iota[a]] = a;

  for (int e = 0; e < E.size(); ++e) {
    WreathGroupElement img;
    img.q = ext.pi[e];
    img.f.resize(Q.size());
    for (int q = 0; q < Q.size(); ++q) {
      const int lift = ext.section[q];
      const int shifted = ext.section[Q.op(q, ext.pi[e])];
      const int val = E.op(E.op(lift, e), E.inv(shifted));
      auto it = iota_inv.find(val);
      if (it == iota_inv.end())
        throw NotInKernel("section(q) e section(q pi(e))^{-1} lies outside iota(A) at e=" +
                          E.elements[e] + ", q=" + Q.elements[q]);
      img.f[q] = it->second;
    }
    emb.image.push_back(img);
    emb.image_indices.push_back(emb.wreath.encode(img));
  }

  // exhaustively certify: injective homomorphism compatible with pi
  std::set<int> distinct(emb.image_indices.begin(), emb.image_indices.end());
  if (static_cast<int>(distinct.size()) != E.size())
    throw HomomorphismFailure("embedding is not injective");
  for (int x = 0; x < E.size(); ++x) {
    if (emb.wreath.proj_q(emb.image_indices[x]) != ext.pi[x])
      throw HomomorphismFailure("tau compatibility fails at " + E.elements[x]);
    for (int y = 0; y < E.size(); ++y)
      if (emb.wreath.group.op(emb.image_indices[x], emb.image_indices[y]) !=
          emb.image_indices[E.op(x, y)])
        throw HomomorphismFailure("phi(xy) != phi(x)phi(y) at (" + E.elements[x] + "," +
                                  E.elements[y] + ")");
  }
  return emb;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(g.identity)) return false;
  for (int a : elems) {
    if (!s.count(g.inv(a))) return false;
    for (int b : elems)
      if (!s.count(g.op(a, b))) return false;
  }
  return true;
}

GroupExtension recover_extension_from_subgroup(const WreathGroup& w,
                                               const std::vector<int>& subgroup) {
  if (!is_subgroup(w.group, subgroup))
    throw ValidationError("element list is not closed under the wreath multiplication");
  const auto& A = w.base;
  const auto& Q = w.top;

  // rho must hit every element of Q
  std::set<int> hit;
  for (int e : subgroup) hit.insert(w.proj_q(e));
  if (static_cast<int>(hit.size()) != Q.size())
    throw NotSurjective("subgroup does not map onto Q");

  // kernel of rho must evaluate bijectively onto A at 1
  std::vector<int> ker;
  for (int e : subgroup)
    if (w.proj_q(e) == Q.identity) ker.push_back(e);
  if (static_cast<int>(ker.size()) != A.size())
    throw KernelMismatch("rho-kernel size " + std::to_string(ker.size()) + " differs from |A| = " +
                         std::to_string(A.size()));
  std::vector<int> iota(A.size(), -1);
  for (int e : ker) {
    const int a = w.decode(e).f[Q.identity];
    if (iota[a] != -1) throw KernelMismatch("evaluation at 1 is not injective on the rho-kernel");
    iota[a] = -2; // mark; fill after the subgroup is relabelled
  }

  // subgroup as its own FiniteGroup
  std::map<int, int> pos;
  for (std::size_t i = 0; i < subgroup.size(); ++i) pos[subgroup[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  for (int e : subgroup) labels.push_back(w.group.elements[e]);
  std::vector<std::vector<int>> mul(subgroup.size(), std::vector<int>(subgroup.size()));
  for (std::size_t i = 0; i < subgroup.size(); ++i)
    for (std::size_t j = 0; j < subgroup.size(); ++j)
      mul[i][j] = pos.at(w.group.op(subgroup[i], subgroup[j]));
  FiniteGroup E = FiniteGroup::from_table("E<" + w.group.name + ">", std::move(labels),
                                          std::move(mul));

  for (int e : ker) iota[w.decode(e).f[Q.identity]] = pos.at(e);
  // the kernel-evaluation map must invert the group structure of A
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b)
      if (E.op(iota[a], iota[b]) != iota[A.op(a, b)])
        throw KernelMismatch("evaluation at 1 is not an isomorphism onto A");

  std::vector<int> pi(E.size());
  for (int i = 0; i < E.size(); ++i) pi[i] = w.proj_q(subgroup[i]);
  std::vector<int> section(Q.size(), -1);
  section[Q.identity] = E.identity;
  for (int q = 0; q < Q.size(); ++q)
    if (section[q] < 0)
      for (int i = 0; i < E.size(); ++i)
        if (pi[i] == q) {
          section[q] = i;
          break;
        }
  return GroupExtension::make(std::move(E), A, Q, std::move(iota), std::move(pi),
                              std::move(section));
}

MeasuringCoalgebra measuring_group_iso(const std::vector<std::string>& x,
                                       const std::vector<std::string>& y) {
  if (x.empty() || y.empty()) throw ValidationError("measuring coalgebra needs nonempty sets");
  MeasuringCoalgebra m;
  m.x_labels = x;
  m.y_labels = y;

  const int nx = static_cast<int>(x.size()), ny = static_cast<int>(y.size());
  long long count = 1;
  for (int i = 0; i < nx; ++i) count *= ny;

  auto h = std::make_shared<HopfOps>();
  h->name = "k[Y^X]";
  for (long long r = 0; r < count; ++r) {
    std::vector<int> f(nx);
    long long t = r;
    for (int i = nx - 1; i >= 0; --i) {
      f[i] = static_cast<int>(t % ny);
      t /= ny;
    }
    m.functions.push_back(f);
    std::vector<Sym> vals;
    for (int i = 0; i < nx; ++i) vals.push_back(Sym::atom(y[f[i]]));
    h->basis.push_back(Sym::tuple({Sym::atom("u"), Sym::tuple(vals)}));
  }
  h->coproduct = [](const Sym& s) { return LinComb(Sym::pair(s, s)); };
  h->counit = [](const Sym&) { return Scalar(1); };
  // unit only meaningful once a product is added on top (group case)
  m.coalgebra = h;
  return m;
}

HopfPtr group_algebra(const FiniteGroup& g) {
  auto h = std::make_shared<HopfOps>();
  h->name = "k[" + g.name + "]";
  std::vector<Sym> syms;
  for (const auto& e : g.elements) syms.push_back(Sym::atom(e));
  h->basis = syms;
  auto lookup = std::make_shared<std::map<Sym, int>>();
  for (int i = 0; i < g.size(); ++i) lookup->emplace(syms[i], i);
  auto table = std::make_shared<FiniteGroup>(g);
  h->product = [table, lookup, syms](const Sym& a, const Sym& b) {
    return LinComb(syms[table->op(lookup->at(a), lookup->at(b))]);
  };
  h->unit = LinComb(syms[g.identity]);
  h->coproduct = [](const Sym& s) { return LinComb(Sym::pair(s, s)); };
  h->counit = [](const Sym&) { return Scalar(1); };
  h->antipode = [table, lookup, syms](const Sym& a) {
    return LinComb(syms[table->inv(lookup->at(a))]);
  };
  return h;
}

namespace {

// Small generating set by greedy closure growth.
std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::set<int> closure = {g.identity};
  while (static_cast<int>(closure.size()) < g.size()) {
    int best = -1;
    std::set<int> best_closure;
    for (int cand = 0; cand < g.size(); ++cand) {
      if (closure.count(cand)) continue;
      std::set<int> c = closure;
      std::vector<int> work(c.begin(), c.end());
      work.push_back(cand);
      c.insert(cand);
      while (!work.empty()) {
        int a = work.back();
        work.pop_back();
        for (int b : std::vector<int>(c.begin(), c.end())) {
          for (int p : {g.op(a, b), g.op(b, a)})
            if (c.insert(p).second) work.push_back(p);
        }
      }
      if (static_cast<int>(c.size()) > (best < 0 ? 0 : static_cast<int>(best_closure.size()))) {
        best = cand;
        best_closure = std::move(c);
      }
    }
    gens.push_back(best);
    closure = std::move(best_closure);
  }
  return gens;
}

// Propagates a partial map through products; returns false on conflict.
bool propagate(const FiniteGroup& g, const FiniteGroup& h, std::vector<int>& phi) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < g.size(); ++a) {
      if (phi[a] < 0) continue;
      for (int b = 0; b < g.size(); ++b) {
        if (phi[b] < 0) continue;
        const int c = g.op(a, b);
        const int img = h.op(phi[a], phi[b]);
        if (phi[c] < 0) {
          phi[c] = img;
          changed = true;
        } else if (phi[c] != img) {
          return false;
        }
      }
    }
  }
  return true;
}

bool extend_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                        const std::vector<int>& gens, std::size_t k, std::vector<int> phi,
                        std::vector<int>& out) {
  if (k == gens.size()) {
    std::set<int> image(phi.begin(), phi.end());
    if (phi.end() != std::find(phi.begin(), phi.end(), -1)) return false;
    if (static_cast<int>(image.size()) != g.size()) return false;
    out = phi;
    return true;
  }
  const int gen = gens[k];
  for (int cand = 0; cand < h.size(); ++cand) {
    if (h.order_of(cand) != g.order_of(gen)) continue;
    std::vector<int> next = phi;
    if (next[gen] >= 0 && next[gen] != cand) continue;
    next[gen] = cand;
    if (!propagate(g, h, next)) continue;
    if (extend_isomorphism(g, h, gens, k + 1, std::move(next), out)) return true;
  }
  return false;
}

} // namespace

std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& g,
                                                       const FiniteGroup& h) {
  if (g.size() != h.size()) return std::nullopt;
  std::vector<int> phi(g.size(), -1);
  phi[g.identity] = h.identity;
  std::vector<int> out;
  if (extend_isomorphism(g, h, generating_set(g), 0, std::move(phi), out)) return out;
  return std::nullopt;
}

bool extensions_isomorphic(const GroupExtension& e1, const GroupExtension& e2) {
  if (e1.total.size() != e2.total.size() || e1.kernel.size() != e2.kernel.size() ||
      e1.quotient.size() != e2.quotient.size())
    return false;
  const auto& E1 = e1.total;
  const auto& E2 = e2.total;

  std::map<int, int> iota2_inv;
  for (int a = 0; a < e2.kernel.size(); ++a) iota2_inv[e2.iota[a]] = a;

  // Enumerate isomorphisms phi: E1 -> E2 and test the two squares.
  const auto gens = generating_set(E1);
  std::vector<std::vector<int>> stack;
  std::vector<int> seed(E1.size(), -1);
  seed[E1.identity] = E2.identity;
  stack.push_back(seed);
  std::vector<std::size_t> depth = {0};
  while (!stack.empty()) {
    std::vector<int> phi = std::move(stack.back());
    stack.pop_back();
    std::size_t k = depth.back();
    depth.pop_back();
    if (k == gens.size()) {
      if (std::find(phi.begin(), phi.end(), -1) != phi.end()) continue;
      std::set<int> image(phi.begin(), phi.end());
      if (static_cast<int>(image.size()) != E1.size()) continue;
      // phi must map iota1(A) onto iota2(A) with alpha a homomorphism
      std::vector<int> alpha(e1.kernel.size(), -1);
      bool ok = true;
      for (int a = 0; a < e1.kernel.size() && ok; ++a) {
        auto it = iota2_inv.find(phi[e1.iota[a]]);
        if (it == iota2_inv.end())
          ok = false;
        else
          alpha[a] = it->second;
      }
      if (!ok) continue;
      for (int a = 0; a < e1.kernel.size() && ok; ++a)
        for (int b = 0; b < e1.kernel.size() && ok; ++b)
          if (alpha[e1.kernel.op(a, b)] != e2.kernel.op(alpha[a], alpha[b])) ok = false;
      if (!ok) continue;
      // omega determined by pi2(phi(e)) = omega(pi1(e)): well-defined + iso
      std::vector<int> omega(e1.quotient.size(), -1);
      for (int x = 0; x < E1.size() && ok; ++x) {
        const int q = e1.pi[x], w = e2.pi[phi[x]];
        if (omega[q] < 0)
          omega[q] = w;
        else if (omega[q] != w)
          ok = false;
      }
      if (!ok) continue;
      for (int q = 0; q < e1.quotient.size() && ok; ++q)
        for (int r = 0; r < e1.quotient.size() && ok; ++r)
          if (omega[e1.quotient.op(q, r)] != e2.quotient.op(omega[q], omega[r])) ok = false;
      if (ok) return true;
      continue;
    }
    const int gen = gens[k];
    for (int cand = 0; cand < E2.size(); ++cand) {
      if (E2.order_of(cand) != E1.order_of(gen)) continue;
      std::vector<int> next = phi;
      if (next[gen] >= 0 && next[gen] != cand) continue;
      next[gen] = cand;
      if (!propagate(E1, E2, next)) continue;
      stack.push_back(std::move(next));
      depth.push_back(k + 1);
    }
  }
  return false;
}

HopfMorphism linearize_group_hom(HopfPtr src, HopfPtr dst, const FiniteGroup& s,
                                 const FiniteGroup& t, const std::vector<int>& images) {
  std::map<Sym, LinComb> action;
  for (int i = 0; i < s.size(); ++i)
    action.emplace(Sym::atom(s.elements[i]), LinComb(Sym::atom(t.elements[images[i]])));
  LinMap map(src->basis, std::move(action));
  return HopfMorphism{std::move(src), std::move(dst), std::move(map)};
}

std::optional<int> conjugating_element(const WreathGroup& w, const std::vector<int>& e1,
                                       const std::vector<int>& e2) {
  std::set<int> target(e2.begin(), e2.end());
  for (int x = 0; x < w.group.size(); ++x) {
    std::set<int> conj;
    for (int e : e1) conj.insert(w.group.op(w.group.op(x, e), w.group.inv(x)));
    if (conj == target) return x;
  }
  return std::nullopt;
}

} // namespace hopfwreath
