#include "ainf/twisted.hpp"

#include <functional>

#include "ainf/error.hpp"

namespace ainf {

namespace {

// Moving each σ^{n_t} to the far left past s x_{t'} (t' < t) costs (-1)^{n_t (|x_{t'}| - 1)}.
long sigma_exponent(std::span<const int> offsets, std::span<const int> degrees) {
  long e = 0;
  long left = 0;
  for (std::size_t t = 0; t < offsets.size(); ++t) {
    e += static_cast<long>(offsets[t]) * left;
    left += degrees[t] - 1;
  }
  return e;
}

long total_offset(std::span<const int> offsets) {
  long n = 0;
  for (int o : offsets) n += o;
  return n;
}

bool odd(long e) { return e % 2 != 0; }

// Short chains recur as inner terms of many relations; longer ones rarely repeat.
constexpr std::size_t kMemoArity = 2;

using Emit = std::function<void(std::span<const Arg>, std::span<const int>, const Scalar&, std::size_t, std::size_t)>;

// Enumerates δ^{l_i} x_i δ^{l_{i-1}} ... x_1 δ^{l_0} with total length ≤ max_h.
// Emits (base args, offsets, coefficient, output row, output column).
class Insertions {
 public:
  Insertions(const TwCategory& c, std::span<const Arg> args, int max_h, const Emit& emit)
      : c_(c), args_(args), max_h_(max_h), emit_(emit), coeff_(Scalar(c.field(), 1)) {
    const std::size_t i = args.size();
    pos_.reserve(i);
    for (const auto& a : args) pos_.push_back(c.position(a.src, a.dst, a.index));
    base_.reserve(max_h);
    offsets_.reserve(max_h);
    const std::size_t top = args[0].dst;
    for (std::size_t e = pos_[0].row; e < c.object(top).summands.size(); ++e) {
      row_ = e;
      gap(0, e);
    }
  }

 private:
  void gap(std::size_t t, std::size_t cur) {
    const std::size_t i = args_.size();
    const int h = static_cast<int>(base_.size());
    if (t < i) {
      const std::size_t obj = args_[t].dst;
      const std::size_t target = pos_[t].row;
      if (cur == target) {
        const Arg& a = args_[t];
        const auto& p = pos_[t];
        const auto& x = c_.object(a.src).summands[p.col];
        const auto& y = c_.object(a.dst).summands[p.row];
        base_.push_back({x.object, y.object, p.k});
        offsets_.push_back(y.shift - x.shift);
        gap(t + 1, p.col);
        base_.pop_back();
        offsets_.pop_back();
        return;
      }
      if (h + 1 + static_cast<int>(i - t) > max_h_) return;
      for (const auto& e : c_.edges_into(obj)[cur]) {
        if (e.col < target) continue;
        push(e);
        gap(t, e.col);
        pop();
      }
      return;
    }
    const std::size_t obj = args_[i - 1].src;
    emit_(base_, offsets_, coeff_, row_, cur);
    if (h + 1 > max_h_) return;
    for (const auto& e : c_.edges_into(obj)[cur]) {
      push(e);
      gap(t, e.col);
      pop();
    }
  }

  void push(const TwCategory::Edge& e) {
    base_.push_back(e.arg);
    offsets_.push_back(e.offset);
    coeffs_.push_back(coeff_);
    coeff_ *= e.coeff;
  }
  void pop() {
    base_.pop_back();
    offsets_.pop_back();
    coeff_ = coeffs_.back();
    coeffs_.pop_back();
  }

  const TwCategory& c_;
  std::span<const Arg> args_;
  int max_h_;
  const Emit& emit_;
  std::vector<TwCategory::Position> pos_;
  std::vector<Arg> base_;
  std::vector<int> offsets_;
  std::vector<Scalar> coeffs_;
  Scalar coeff_;
  std::size_t row_ = 0;
};

// Paths δ...δ of length 1..max_h inside one object, leftmost first.
void delta_paths(const TwObject& x, const std::vector<std::vector<TwCategory::Edge>>& edges, FieldSpec field, int max_h,
                 const Emit& emit) {
  std::vector<Arg> base;
  std::vector<int> offsets;
  std::function<void(std::size_t, std::size_t, const Scalar&)> walk = [&](std::size_t top, std::size_t cur,
                                                                         const Scalar& coeff) {
    if (!base.empty()) emit(base, offsets, coeff, top, cur);
    if (static_cast<int>(base.size()) >= max_h) return;
    for (const auto& e : edges[cur]) {
      base.push_back(e.arg);
      offsets.push_back(e.offset);
      walk(top, e.col, coeff * e.coeff);
      base.pop_back();
      offsets.pop_back();
    }
  };
  for (std::size_t e = 0; e < x.summands.size(); ++e) walk(e, e, Scalar(field, 1));
}

std::vector<std::vector<TwCategory::Edge>> build_edges(const Category& base, const TwObject& x) {
  std::vector<std::vector<TwCategory::Edge>> edges(x.summands.size());
  for (const auto& [rc, v] : x.delta) {
    const auto [row, col] = rc;
    const auto& a = x.summands[col];
    const auto& b = x.summands[row];
    for (const auto& [k, coeff] : v) {
      edges[row].push_back({row, col, Arg{a.object, b.object, k}, coeff, b.shift - a.shift});
    }
  }
  (void)base;
  return edges;
}

}  // namespace

void check_tw_object(const Category& base, const TwObject& x) {
  const std::size_t n = x.summands.size();
  for (const auto& s : x.summands) {
    if (s.object >= base.object_count()) throw PreconditionError("summand refers to an unknown object");
  }
  for (const auto& [rc, v] : x.delta) {
    const auto [row, col] = rc;
    if (row >= n || col >= n) throw PreconditionError("twist entry outside the summand range");
    if (row <= col && !v.is_zero()) throw PreconditionError("twist of " + x.name + " is not strictly lower triangular");
    const auto& a = x.summands[col];
    const auto& b = x.summands[row];
    const GradedSpace& h = base.hom(a.object, b.object);
    const int want = 1 + (b.shift - a.shift);
    for (const auto& [k, coeff] : v) {
      if (k >= h.dim()) throw PreconditionError("twist entry outside the base hom space");
      if (h.degree_of(k) != want) throw PreconditionError("twist of " + x.name + " is not homogeneous of degree 1");
    }
  }
}

TwCategory::TwCategory(std::shared_ptr<const Category> base, std::vector<TwObject> objects)
    : base_(std::move(base)), objects_(std::move(objects)) {
  for (const auto& x : objects_) {
    check_tw_object(*base_, x);
    edges_.push_back(build_edges(*base_, x));
  }
  const std::size_t n = objects_.size();
  layouts_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      HomLayout& L = layouts_[x * n + y];
      const auto& X = objects_[x].summands;
      const auto& Y = objects_[y].summands;
      const bool plain = X.size() == 1 && Y.size() == 1;
      L.start.assign(Y.size(), std::vector<std::size_t>(X.size(), 0));
      for (std::size_t j = 0; j < Y.size(); ++j) {
        for (std::size_t i = 0; i < X.size(); ++i) {
          L.start[j][i] = L.space.dim();
          const GradedSpace& h = base_->hom(X[i].object, Y[j].object);
          const int off = Y[j].shift - X[i].shift;
          for (std::size_t k = 0; k < h.dim(); ++k) {
            std::string label = h[k].label;
            if (off != 0) label += "{" + std::to_string(off) + "}";
            if (!plain) label += "[" + std::to_string(j) + "," + std::to_string(i) + "]";
            L.space.add(label, h[k].degree - off);
            L.positions.push_back({j, i, k});
          }
        }
      }
    }
  }
}

std::shared_ptr<TwCategory> TwCategory::with_objects(const std::vector<TwObject>& extra) const {
  auto all = objects_;
  all.insert(all.end(), extra.begin(), extra.end());
  return std::make_shared<TwCategory>(base_, std::move(all));
}

const TwCategory::HomLayout& TwCategory::layout(std::size_t x, std::size_t y) const {
  if (x >= objects_.size() || y >= objects_.size()) throw PreconditionError("unknown twisted complex");
  return layouts_[x * objects_.size() + y];
}

std::size_t TwCategory::index(std::size_t x, std::size_t y, std::size_t row, std::size_t col, std::size_t k) const {
  return layout(x, y).start.at(row).at(col) + k;
}

TwCategory::Position TwCategory::position(std::size_t x, std::size_t y, std::size_t idx) const {
  return layout(x, y).positions.at(idx);
}

int TwCategory::offset(std::size_t x, std::size_t y, std::size_t row, std::size_t col) const {
  return objects_.at(y).summands.at(row).shift - objects_.at(x).summands.at(col).shift;
}

Morphism TwCategory::morphism(std::size_t x, std::size_t y, int degree, const EntryMatrix& entries) const {
  Morphism out{x, y, degree, Vec(field())};
  const auto& X = objects_.at(x).summands;
  const auto& Y = objects_.at(y).summands;
  for (const auto& [rc, v] : entries) {
    const auto [row, col] = rc;
    if (row >= Y.size() || col >= X.size()) throw PreconditionError("matrix entry outside the summand range");
    const GradedSpace& h = base_->hom(X[col].object, Y[row].object);
    for (const auto& [k, coeff] : v) {
      if (k >= h.dim() || h.degree_of(k) - offset(x, y, row, col) != degree) {
        throw PreconditionError("matrix entry does not have total degree " + std::to_string(degree));
      }
      out.coords.add_term(index(x, y, row, col, k), coeff);
    }
  }
  return out;
}

EntryMatrix TwCategory::entries(const Morphism& f) const {
  EntryMatrix out;
  for (const auto& [idx, coeff] : f.coords) {
    const Position p = position(f.src, f.dst, idx);
    auto [it, fresh] = out.try_emplace({p.row, p.col}, Vec(field()));
    it->second.add_term(p.k, coeff);
  }
  return out;
}

const GradedSpace& TwCategory::hom(std::size_t src, std::size_t dst) const { return layout(src, dst).space; }

std::optional<Vec> TwCategory::unit(std::size_t obj) const {
  Vec out(field());
  const auto& X = objects_.at(obj).summands;
  for (std::size_t i = 0; i < X.size(); ++i) {
    auto u = base_->unit(X[i].object);
    if (!u) return std::nullopt;
    for (const auto& [k, coeff] : *u) out.add_term(index(obj, obj, i, i, k), coeff);
  }
  return out;
}

int TwCategory::top_base_arity() const {
  for (int j = base_->max_arity(); j >= 1; --j) {
    if (base_->has_arity(j)) return j;
  }
  return 0;
}

Vec TwCategory::b(std::span<const Arg> args) const {
  check_chain(args);
  if (!has_arity(static_cast<int>(args.size()))) return Vec(field());
  if (args.size() > kMemoArity) return compute_b(args);
  std::vector<Arg> key(args.begin(), args.end());
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Vec v = compute_b(args);
  std::lock_guard lock(mu_);
  memo_.emplace(std::move(key), v);
  return v;
}

Vec TwCategory::compute_b(std::span<const Arg> args) const {
  Vec out(field());
  const std::size_t src = args.back().src;
  const std::size_t dst = args.front().dst;
  std::vector<int> degrees;
  Emit emit = [&](std::span<const Arg> base, std::span<const int> offsets, const Scalar& coeff, std::size_t row,
                  std::size_t col) {
    if (!base_->has_arity(static_cast<int>(base.size()))) return;
    const Vec v = base_->b(base);
    if (v.is_zero()) return;
    degrees.clear();
    for (const auto& a : base) degrees.push_back(base_->degree(a));
    const bool neg = odd(sigma_exponent(offsets, degrees) + total_offset(offsets));
    const std::size_t first = index(src, dst, row, col, 0);
    for (const auto& [k, c] : v) out.add_term(first + k, neg ? -(coeff * c) : coeff * c);
  };
  Insertions(*this, args, top_base_arity(), emit);
  return out;
}

std::shared_ptr<TwCategory> free_category(std::shared_ptr<const Category> base,
                                          const std::vector<std::vector<Summand>>& objects) {
  std::vector<TwObject> tw;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    std::string name;
    for (const auto& s : objects[i]) {
      if (!name.empty()) name += "+";
      if (s.shift != 0) name += "S" + std::to_string(s.shift);
      name += base->object_name(s.object);
    }
    tw.push_back({name.empty() ? "0" : name, objects[i], {}});
  }
  return std::make_shared<TwCategory>(std::move(base), std::move(tw));
}

EntryMatrix maurer_cartan_sum(const Category& base, const TwObject& x) {
  check_tw_object(base, x);
  const auto edges = build_edges(base, x);
  EntryMatrix out;
  std::vector<int> degrees;
  delta_paths(x, edges, base.field(), base.max_arity(),
              [&](std::span<const Arg> args, std::span<const int> offsets, const Scalar& coeff, std::size_t row,
                  std::size_t col) {
                if (!base.has_arity(static_cast<int>(args.size()))) return;
                const Vec v = base.b(args);
                if (v.is_zero()) return;
                degrees.clear();
                for (const auto& a : args) degrees.push_back(base.degree(a));
                const bool neg = odd(sigma_exponent(offsets, degrees) + total_offset(offsets));
                auto [it, fresh] = out.try_emplace({row, col}, Vec(base.field()));
                it->second.add_scaled(v, neg ? -coeff : coeff);
              });
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

Report verify_maurer_cartan(const Category& base, const TwObject& x) {
  Report r;
  r.checked_up_to = base.max_arity();
  r.checks = 1;
  for (const auto& [rc, v] : maurer_cartan_sum(base, x)) {
    r.add_failure({0, {}, v, "Maurer-Cartan entry (" + std::to_string(rc.first) + "," + std::to_string(rc.second) + ")"});
  }
  return r;
}

TwObject shift_object(const TwObject& x, int k) {
  TwObject out;
  out.name = k == 0 ? x.name : "S" + std::to_string(k) + "(" + x.name + ")";
  for (const auto& s : x.summands) out.summands.push_back({s.shift + k, s.object});
  for (const auto& [rc, v] : x.delta) {
    const long a = x.summands[rc.first].shift - x.summands[rc.second].shift;
    out.delta.emplace(rc, odd(a * k) ? -v : v);
  }
  return out;
}

Morphism shift_morphism(const TwCategory& from, const Morphism& f, const TwCategory& to, std::size_t sx,
                        std::size_t sy, int k) {
  auto same_shape = [&](std::size_t a, std::size_t b) {
    const auto& A = from.object(a).summands;
    const auto& B = to.object(b).summands;
    if (A.size() != B.size()) return false;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (A[i].object != B[i].object || A[i].shift + k != B[i].shift) return false;
    }
    return true;
  };
  if (!same_shape(f.src, sx) || !same_shape(f.dst, sy)) throw PreconditionError("shift target objects do not match");
  Morphism out{sx, sy, f.degree, Vec(from.field())};
  for (const auto& [idx, coeff] : f.coords) {
    const auto p = from.position(f.src, f.dst, idx);
    const long a = from.offset(f.src, f.dst, p.row, p.col);
    out.coords.add_term(to.index(sx, sy, p.row, p.col, p.k), odd(a * k) ? -coeff : coeff);
  }
  return out;
}

ConeData cone(const TwCategory& c, const Morphism& f, std::string name) {
  if (f.degree != 0) throw PreconditionError("cone needs a degree-0 morphism");
  if (!apply_b(c, std::span<const Morphism>(&f, 1)).is_zero()) throw PreconditionError("cone needs a closed morphism");
  const TwObject& X = c.object(f.src);
  const TwObject& Y = c.object(f.dst);
  const std::size_t nx = X.summands.size();
  ConeData out;
  out.cone.name = name.empty() ? "C(" + X.name + "->" + Y.name + ")" : std::move(name);
  const TwObject SX = shift_object(X, 1);
  out.cone.summands = SX.summands;
  out.cone.summands.insert(out.cone.summands.end(), Y.summands.begin(), Y.summands.end());
  out.cone.delta = SX.delta;
  for (const auto& [rc, v] : Y.delta) out.cone.delta.emplace(std::make_pair(rc.first + nx, rc.second + nx), v);
  // σ^{-1} applied to an entry σ^c f of offset c gives (-1)^c σ^{c-1} f.
  for (const auto& [rc, v] : c.entries(f)) {
    if (v.is_zero()) continue;
    const int offset = Y.summands[rc.first].shift - X.summands[rc.second].shift;
    out.cone.delta.emplace(std::make_pair(rc.first + nx, rc.second), odd(offset) ? -v : v);
  }
  const Category& base = c.base();
  for (std::size_t j = 0; j < Y.summands.size(); ++j) {
    auto u = base.unit(Y.summands[j].object);
    if (!u) throw PreconditionError("cone needs strict units");
    out.i.emplace(std::make_pair(nx + j, j), *u);
  }
  for (std::size_t i = 0; i < nx; ++i) {
    auto u = base.unit(X.summands[i].object);
    if (!u) throw PreconditionError("cone needs strict units");
    out.p.emplace(std::make_pair(i, i), *u);
  }
  return out;
}

TruncationWitness truncation_check(const TwObject& x, int q) {
  TruncationWitness w;
  const std::size_t n = x.summands.size();
  if (n > 0) w.block_starts.push_back(0);
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t start = w.block_starts.back();
    bool split = false;
    for (const auto& [rc, v] : x.delta) {
      if (rc.first == k && rc.second >= start && !v.is_zero()) split = true;
    }
    if (split) w.block_starts.push_back(k);
  }
  w.accepted = q >= 0 && w.blocks() <= static_cast<std::size_t>(q) + 1;
  return w;
}

TwObject image_object(const Functor& F, const TwObject& x) {
  const Category& A = F.source();
  const Category& B = F.target();
  check_tw_object(A, x);
  TwObject out;
  out.name = "F(" + x.name + ")";
  for (const auto& s : x.summands) out.summands.push_back({s.shift, F.map_object(s.object)});
  const auto edges = build_edges(A, x);
  std::vector<int> degrees;
  delta_paths(x, edges, A.field(), F.arity(),
              [&](std::span<const Arg> args, std::span<const int> offsets, const Scalar& coeff, std::size_t row,
                  std::size_t col) {
                if (!F.has_arity(static_cast<int>(args.size()))) return;
                const Vec v = F.f(args);
                if (v.is_zero()) return;
                degrees.clear();
                for (const auto& a : args) degrees.push_back(A.degree(a));
                const bool neg = odd(sigma_exponent(offsets, degrees));
                auto [it, fresh] = out.delta.try_emplace({row, col}, Vec(B.field()));
                it->second.add_scaled(v, neg ? -coeff : coeff);
              });
  for (auto it = out.delta.begin(); it != out.delta.end();) {
    it = it->second.is_zero() ? out.delta.erase(it) : std::next(it);
  }
  return out;
}

InducedTwFunctor::InducedTwFunctor(std::shared_ptr<const TwCategory> source, std::shared_ptr<const Functor> base_functor,
                                   std::shared_ptr<const TwCategory> target, int q)
    : source_(std::move(source)), F_(std::move(base_functor)), target_(std::move(target)), q_(q) {
  if (q_ < 0 || q_ > F_->arity()) throw PreconditionError("truncation order must satisfy 0 <= q <= arity");
  if (&source_->base() != &F_->source() || &target_->base() != &F_->target()) {
    throw PreconditionError("induced functor categories do not match the base functor");
  }
  if (source_->object_count() != target_->object_count()) throw PreconditionError("object lists differ");
  for (std::size_t o = 0; o < source_->object_count(); ++o) {
    if (!truncation_check(source_->object(o), q_).accepted) {
      throw PreconditionError(source_->object_name(o) + " is not in the length-" + std::to_string(q_) + " truncation");
    }
  }
  arity_ = (F_->arity() - q_) / (q_ + 1);
}

Vec InducedTwFunctor::f(std::span<const Arg> args) const {
  Vec out(target_->field());
  if (static_cast<int>(args.size()) > arity_) return out;
  check_chain(args);
  const std::size_t src = args.back().src;
  const std::size_t dst = args.front().dst;
  const Category& A = source_->base();
  std::vector<int> degrees;
  Emit emit = [&](std::span<const Arg> base, std::span<const int> offsets, const Scalar& coeff, std::size_t row,
                  std::size_t col) {
    if (!F_->has_arity(static_cast<int>(base.size()))) return;
    const Vec v = F_->f(base);
    if (v.is_zero()) return;
    degrees.clear();
    for (const auto& a : base) degrees.push_back(A.degree(a));
    const bool neg = odd(sigma_exponent(offsets, degrees));
    const std::size_t first = target_->index(src, dst, row, col, 0);
    for (const auto& [k, c] : v) out.add_term(first + k, neg ? -(coeff * c) : coeff * c);
  };
  Insertions(*source_, args, F_->arity(), emit);
  return out;
}

InducedFunctor induced_functor(std::shared_ptr<const TwCategory> source, std::shared_ptr<const Functor> F,
                               std::shared_ptr<const Category> target_base, int q) {
  if (target_base.get() != &F->target()) throw PreconditionError("target base is not the target of the functor");
  std::vector<TwObject> images;
  for (const auto& x : source->objects()) images.push_back(image_object(*F, x));
  auto target = std::make_shared<TwCategory>(std::move(target_base), std::move(images));
  auto functor = std::make_shared<InducedTwFunctor>(source, std::move(F), target, q);
  return {target, functor};
}

}  // namespace ainf
