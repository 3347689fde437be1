#include "ainf/massey.hpp"

#include "ainf/error.hpp"

namespace ainf {

namespace {

Morphism b1(const Category& c, const Morphism& x) { return apply_b(c, std::span<const Morphism>(&x, 1)); }

Morphism b2(const Category& c, const Morphism& x, const Morphism& y) {
  const Morphism args[2] = {x, y};
  return apply_b(c, args);
}

Morphism b3(const Category& c, const Morphism& x, const Morphism& y, const Morphism& z) {
  const Morphism args[3] = {x, y, z};
  return apply_b(c, args);
}

Morphism neg(Morphism x) {
  x.coords = -x.coords;
  return x;
}

Morphism plus(Morphism x, const Morphism& y) {
  x.coords += y.coords;
  return x;
}

void require_cycle(const Category& c, const Morphism& x, int degree, const char* name) {
  if (x.degree != degree) {
    throw PreconditionError(std::string(name) + " must have degree " + std::to_string(degree));
  }
  if (!b1(c, x).is_zero()) throw PreconditionError(std::string(name) + " is not closed");
}

std::vector<Scalar> dense(const Vec& v, std::size_t n) { return v.dense(n); }

std::vector<Vec> echelon(FieldSpec field, std::size_t n, const std::vector<Vec>& gens) {
  std::vector<std::vector<Scalar>> d;
  for (const auto& g : gens) d.push_back(dense(g, n));
  std::vector<Vec> out;
  for (const auto& b : span_basis(field, n, d)) out.push_back(Vec::from_dense(field, b));
  return out;
}

void check_triple(const Category& c, const Morphism& f, const Morphism& g, const Morphism& h) {
  if (g.src != f.dst || h.src != g.dst) throw PreconditionError("f, g, h are not composable");
  require_cycle(c, f, 0, "f");
  require_cycle(c, g, 0, "g");
  require_cycle(c, h, 1, "h");
}

}  // namespace

MasseyResult massey_ainfty(const CohomologyCache& H, const Morphism& f, const Morphism& g, const Morphism& h,
                           const MasseyChoices& choices) {
  const Category& c = H.category();
  check_triple(c, f, g, h);
  const std::size_t X = f.src, Y = f.dst, Z = g.dst, U = h.dst;

  const Morphism gf = b2(c, g, f);
  const Morphism hg = b2(c, h, g);
  Morphism u{X, Z, -1, Vec(c.field())};
  if (choices.u) {
    u = *choices.u;
    if (u.src != X || u.dst != Z || u.degree != -1 || !(b1(c, u).coords == -gf.coords)) {
      throw PreconditionError("supplied u does not solve b_1(u) = -b_2(g, f)");
    }
  } else {
    auto sol = H(X, Z).primitive(0, -gf.coords);
    if (!sol) throw PreconditionError("gf is not zero in cohomology");
    u.coords = *sol;
  }
  Morphism v{Y, U, 0, Vec(c.field())};
  if (choices.v) {
    v = *choices.v;
    if (v.src != Y || v.dst != U || v.degree != 0 || !(b1(c, v).coords == hg.coords)) {
      throw PreconditionError("supplied v does not solve b_1(v) = b_2(h, g)");
    }
  } else {
    auto sol = H(Y, U).primitive(1, hg.coords);
    if (!sol) throw PreconditionError("hg is not zero in cohomology");
    v.coords = *sol;
  }

  Morphism bt = neg(b2(c, h, u));
  bt = plus(bt, b2(c, v, f));
  bt = plus(bt, neg(b3(c, h, g, f)));
  if (!b1(c, bt).is_zero()) throw Error("Massey representative is not closed");

  const HomCohomology& hxu = H(X, U);
  MasseyResult r;
  r.src = X;
  r.dst = U;
  r.ambient_dim = hxu.dim(0);
  r.representative = *hxu.classify(0, bt.coords);
  r.b_tilde = bt;
  r.u = u;
  r.v = v;
  const HomCohomology& hxz = H(X, Z);
  for (std::size_t k = 0; k < hxz.dim(-1); ++k) {
    Morphism a{X, Z, -1, hxz.representative(-1, k)};
    r.generator_classes.push_back(*hxu.classify(0, neg(b2(c, h, a)).coords));
    r.alphas.push_back(std::move(a));
  }
  const HomCohomology& hyu = H(Y, U);
  for (std::size_t k = 0; k < hyu.dim(0); ++k) {
    Morphism b{Y, U, 0, hyu.representative(0, k)};
    r.generator_classes.push_back(*hxu.classify(0, b2(c, b, f).coords));
    r.betas.push_back(std::move(b));
  }
  r.indeterminacy = echelon(c.field(), r.ambient_dim, r.generator_classes);
  return r;
}

bool contains_class(const MasseyResult& r, const Vec& cls) {
  const Vec diff = cls - r.representative;
  for (const auto& [k, s] : diff) {
    if (k >= r.ambient_dim) throw PreconditionError("class does not live in the Massey product's hom space");
  }
  if (diff.is_zero()) return true;
  std::vector<std::vector<Scalar>> gens;
  for (const auto& w : r.indeterminacy) gens.push_back(w.dense(r.ambient_dim));
  return in_span(diff.field(), gens, diff.dense(r.ambient_dim));
}

bool same_coset(const MasseyResult& a, const MasseyResult& b) {
  if (a.src != b.src || a.dst != b.dst || a.ambient_dim != b.ambient_dim) return false;
  if (!contains_class(a, b.representative)) return false;
  const FieldSpec field = a.representative.field();
  return echelon(field, a.ambient_dim, a.indeterminacy) == echelon(field, b.ambient_dim, b.indeterminacy);
}

MasseyChoices realize(const CohomologyCache& H, const MasseyResult& r, const Vec& w) {
  if (!r.u || !r.v) throw PreconditionError("realize needs the witness data of an A-infinity Massey product");
  const Category& c = H.category();
  const std::size_t n = r.ambient_dim;
  Matrix m(c.field(), n, r.generator_classes.size());
  for (std::size_t k = 0; k < r.generator_classes.size(); ++k) {
    for (const auto& [i, s] : r.generator_classes[k]) m(i, k) = s;
  }
  auto sol = solve(m, w.dense(n));
  if (!sol) throw PreconditionError("class is not in the indeterminacy");
  Morphism u = *r.u;
  Morphism v = *r.v;
  for (std::size_t k = 0; k < r.alphas.size(); ++k) u.coords.add_scaled(r.alphas[k].coords, (*sol)[k]);
  for (std::size_t k = 0; k < r.betas.size(); ++k) v.coords.add_scaled(r.betas[k].coords, (*sol)[r.alphas.size() + k]);
  return {u, v};
}

bool is_distinguished(const CohomologyCache& H, const Morphism& f, const Morphism& g, const Morphism& h) {
  if (h.dst != f.src) throw PreconditionError("triangle must end where it starts");
  const std::size_t X = f.src;
  const auto unit = H.category().unit(X);
  if (!unit) throw PreconditionError("object has no unit");
  const MasseyResult r = massey_ainfty(H, f, g, h);
  return contains_class(r, *H(X, X).classify(0, *unit));
}

namespace {

// Coordinates of one graded piece of a hom space inside a linear system.
struct Block {
  std::size_t src, dst;
  int degree;
  std::vector<std::size_t> idx;
  std::size_t offset = 0;
};

Block make_block(const Category& c, std::size_t src, std::size_t dst, int degree, std::size_t& offset) {
  Block b{src, dst, degree, c.hom(src, dst).indices(degree), offset};
  offset += b.idx.size();
  return b;
}

void write(Matrix& m, const Block& rows, std::size_t col, const Vec& v, bool negate) {
  for (std::size_t r = 0; r < rows.idx.size(); ++r) {
    Scalar s = v.at(rows.idx[r]);
    if (s.is_zero()) continue;
    m(rows.offset + r, col) += negate ? -s : s;
  }
}

}  // namespace

MasseyResult massey_triangulated(const TwCategory& T0, const Morphism& f, const Morphism& g, const Morphism& h) {
  check_triple(T0, f, g, h);
  const std::size_t X = f.src, Y = f.dst, Z = g.dst, U = h.dst;
  const ConeData cd = cone(T0, f);
  const auto T = T0.with_objects({cd.cone});
  const Category& c = *T;
  const std::size_t C = T->object_count() - 1;
  const Morphism i = T->morphism(Y, C, 0, cd.i);
  const Morphism p = T->morphism(C, X, 1, cd.p);

  std::size_t ncols = 0;
  const Block a = make_block(c, C, Z, 0, ncols);
  const Block w = make_block(c, Y, Z, -1, ncols);
  const Block b = make_block(c, X, U, 0, ncols);
  const Block q = make_block(c, C, U, 0, ncols);
  std::size_t nrows = 0;
  const Block e1 = make_block(c, C, Z, 1, nrows);   // b_1(a) = 0
  const Block e2 = make_block(c, Y, Z, 0, nrows);   // b_2(a, i) - b_1(w) = g
  const Block e3 = make_block(c, X, U, 1, nrows);   // b_1(b) = 0
  const Block e4 = make_block(c, C, U, 1, nrows);   // b_2(b, p) + b_2(h, a) - b_1(q) = 0

  Matrix m(c.field(), nrows, ncols);
  auto unit_morphism_at = [&](const Block& blk, std::size_t k) {
    return Morphism{blk.src, blk.dst, blk.degree, Vec::basis(c.field(), blk.idx[k])};
  };
  for (std::size_t k = 0; k < a.idx.size(); ++k) {
    const Morphism x = unit_morphism_at(a, k);
    write(m, e1, a.offset + k, b1(c, x).coords, false);
    write(m, e2, a.offset + k, b2(c, x, i).coords, false);
    write(m, e4, a.offset + k, b2(c, h, x).coords, false);
  }
  for (std::size_t k = 0; k < w.idx.size(); ++k) {
    write(m, e2, w.offset + k, b1(c, unit_morphism_at(w, k)).coords, true);
  }
  for (std::size_t k = 0; k < b.idx.size(); ++k) {
    const Morphism x = unit_morphism_at(b, k);
    write(m, e3, b.offset + k, b1(c, x).coords, false);
    write(m, e4, b.offset + k, b2(c, x, p).coords, false);
  }
  for (std::size_t k = 0; k < q.idx.size(); ++k) {
    write(m, e4, q.offset + k, b1(c, unit_morphism_at(q, k)).coords, true);
  }
  std::vector<Scalar> rhs(nrows, Scalar(c.field()));
  for (std::size_t r = 0; r < e2.idx.size(); ++r) rhs[e2.offset + r] = g.coords.at(e2.idx[r]);

  auto particular = solve(m, rhs);
  if (!particular) throw PreconditionError("no completion of the diagram exists (gf or hg is not zero)");

  CohomologyCache H(c);
  const HomCohomology& hxu = H(X, U);
  auto b_class = [&](const std::vector<Scalar>& sol) {
    Vec bv(c.field());
    for (std::size_t k = 0; k < b.idx.size(); ++k) bv.add_term(b.idx[k], sol[b.offset + k]);
    auto cls = hxu.classify(0, bv);
    if (!cls) throw Error("completion b is not closed");
    return *cls;
  };
  MasseyResult r;
  r.src = X;
  r.dst = U;
  r.ambient_dim = hxu.dim(0);
  r.representative = b_class(*particular);
  std::vector<Vec> gens;
  for (const auto& kv : kernel_basis(m)) gens.push_back(b_class(kv));
  r.indeterminacy = echelon(c.field(), r.ambient_dim, gens);
  return r;
}

}  // namespace ainf
