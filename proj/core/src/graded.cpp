#include "ainf/graded.hpp"

#include <set>

#include "ainf/error.hpp"

namespace ainf {

std::size_t GradedSpace::add(std::string label, int degree) {
  if (find(label, degree)) {
    throw PreconditionError("duplicate basis label '" + label + "' in degree " + std::to_string(degree));
  }
  basis_.push_back({std::move(label), degree});
  return basis_.size() - 1;
}

std::size_t GradedSpace::dim(int degree) const {
  std::size_t n = 0;
  for (const auto& b : basis_) n += b.degree == degree ? 1 : 0;
  return n;
}

std::vector<std::size_t> GradedSpace::indices(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree == degree) out.push_back(i);
  }
  return out;
}

std::vector<int> GradedSpace::degrees() const {
  std::set<int> s;
  for (const auto& b : basis_) s.insert(b.degree);
  return {s.begin(), s.end()};
}

std::map<int, std::size_t> GradedSpace::dims() const {
  std::map<int, std::size_t> d;
  for (const auto& b : basis_) ++d[b.degree];
  return d;
}

std::optional<std::size_t> GradedSpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].label == label) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> GradedSpace::find(std::string_view label, int degree) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].label == label && basis_[i].degree == degree) return i;
  }
  return std::nullopt;
}

GradedElement make_element(const GradedSpace& space, int degree, Vec coords) {
  for (const auto& [i, c] : coords) {
    if (i >= space.dim()) throw PreconditionError("coordinate outside the space");
    if (space.degree_of(i) != degree) {
      throw PreconditionError("element is not homogeneous of degree " + std::to_string(degree));
    }
  }
  return {degree, std::move(coords)};
}

GradedSpace shift_space(const GradedSpace& a, int n) {
  GradedSpace out;
  for (const auto& b : a.basis()) out.add(b.label, b.degree - n);
  return out;
}

GradedMap::GradedMap(FieldSpec field, GradedSpace domain, GradedSpace codomain, int degree)
    : field_(field), domain_(std::move(domain)), codomain_(std::move(codomain)), degree_(degree) {}

Matrix GradedMap::block(int i) const {
  auto it = blocks_.find(i);
  if (it != blocks_.end()) return it->second;
  return Matrix(field_, codomain_.dim(i + degree_), domain_.dim(i));
}

void GradedMap::set_block(int i, Matrix m) {
  if (m.rows() != codomain_.dim(i + degree_) || m.cols() != domain_.dim(i)) {
    throw PreconditionError("block shape does not match the graded dimensions");
  }
  blocks_.insert_or_assign(i, std::move(m));
}

GradedElement GradedMap::apply(const GradedElement& x) const {
  const auto src = domain_.indices(x.degree);
  const auto dst = codomain_.indices(x.degree + degree_);
  const Matrix b = block(x.degree);
  std::vector<Scalar> in(src.size(), Scalar(field_));
  for (std::size_t k = 0; k < src.size(); ++k) in[k] = x.coords.at(src[k]);
  const auto out = b.apply(in);
  Vec y(field_);
  for (std::size_t k = 0; k < dst.size(); ++k) y.add_term(dst[k], out[k]);
  return {x.degree + degree_, std::move(y)};
}

Matrix GradedMap::total_matrix() const {
  Matrix t(field_, codomain_.dim(), domain_.dim());
  for (const auto& [deg, b] : blocks_) {
    const auto src = domain_.indices(deg);
    const auto dst = codomain_.indices(deg + degree_);
    for (std::size_t r = 0; r < dst.size(); ++r) {
      for (std::size_t c = 0; c < src.size(); ++c) t(dst[r], src[c]) = b(r, c);
    }
  }
  return t;
}

bool operator==(const GradedMap& a, const GradedMap& b) {
  return a.degree_ == b.degree_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
         a.total_matrix() == b.total_matrix();
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (!(f.codomain() == g.domain())) throw PreconditionError("maps are not composable");
  GradedMap out(f.field(), f.domain(), g.codomain(), f.degree() + g.degree());
  for (int deg : f.domain().degrees()) {
    Matrix m = g.block(deg + f.degree()) * f.block(deg);
    if (!m.is_zero()) out.set_block(deg, std::move(m));
  }
  return out;
}

GradedMap shift_map(const GradedMap& f) {
  GradedMap out(f.field(), shift_space(f.domain(), 1), shift_space(f.codomain(), 1), f.degree());
  const Scalar sign(f.field(), (f.degree() % 2 == 0) ? 1 : -1);
  for (int deg : f.domain().degrees()) {
    // (Σf)_{deg-1} = ± f_deg, since (ΣA)_{deg-1} = A_deg.
    Matrix b = f.block(deg);
    if (!b.is_zero()) out.set_block(deg - 1, b.scaled(sign));
  }
  return out;
}

GradedMap degree_change(FieldSpec field, const GradedSpace& a, int n) {
  GradedMap out(field, a, shift_space(a, n), -n);
  for (int deg : a.degrees()) out.set_block(deg, Matrix::identity(field, a.dim(deg)));
  return out;
}

GradedMap identity_map(FieldSpec field, const GradedSpace& a) { return degree_change(field, a, 0); }

std::map<int, DegreeRanks> degree_ranks(const GradedMap& f) {
  std::map<int, DegreeRanks> out;
  for (int deg : f.domain().degrees()) {
    const Matrix b = f.block(deg);
    const std::size_t r = rank(b);
    out[deg] = {b.cols(), b.cols() - r, r};
  }
  return out;
}

}  // namespace ainf
