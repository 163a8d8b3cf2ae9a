#include "cbgon/schemes.hpp"

#include "cbgon/error.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <thread>

namespace cbgon {

ProjectivePoint::ProjectivePoint(Vector coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::InvalidArgument, "point with no coordinates");
  const Field field = coords_.front().field();
  for (const auto& x : coords_) {
    if (x.field() != field) throw Error(ErrorCode::FieldMismatch, "point coordinates from mixed fields");
  }
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == coords_.end()) throw Error(ErrorCode::InvalidArgument, "the zero vector is not a projective point");
  const Scalar inv = lead->inverse();
  for (auto it = lead; it != coords_.end(); ++it) *it *= inv;
}

ProjectivePoint ProjectivePoint::from_integers(Field field, const std::vector<long long>& coords) {
  Vector v;
  v.reserve(coords.size());
  for (long long c : coords) v.emplace_back(field, c);
  return ProjectivePoint(std::move(v));
}

std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (auto c = a.coords_.size() <=> b.coords_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string ProjectivePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0) out += ':';
    out += coords_[i].to_string();
  }
  return out + ')';
}

FatPoint::FatPoint(ProjectivePoint base, std::optional<Vector> tangent)
    : base_(std::move(base)), tangent_(std::move(tangent)) {
  if (!tangent_) return;
  if (tangent_->size() != base_.coords().size()) {
    throw Error(ErrorCode::InvalidArgument, "tangent direction has the wrong length");
  }
  const Matrix m = Matrix::from_rows(base_.field(), tangent_->size(), {base_.coords(), *tangent_});
  if (rank(m) != 2) {
    throw Error(ErrorCode::DegenerateConfiguration,
                "tangent direction is proportional to its base point " + base_.to_string());
  }
}

FiniteSubscheme::FiniteSubscheme(Field field, std::size_t n, std::vector<FatPoint> points)
    : field_(field), n_(n), points_(std::move(points)) {
  std::set<ProjectivePoint> seen;
  for (const auto& p : points_) {
    if (p.base().field() != field_) throw Error(ErrorCode::FieldMismatch, "subscheme point from another field");
    if (p.base().ambient_dim() != n_) {
      throw Error(ErrorCode::InvalidArgument, "subscheme point " + p.base().to_string() +
                                                  " is not in P^" + std::to_string(n_));
    }
    if (!seen.insert(p.base()).second) {
      throw Error(ErrorCode::DegenerateConfiguration, "repeated support point " + p.base().to_string());
    }
  }
}

FiniteSubscheme FiniteSubscheme::reduced(Field field, std::size_t n, std::vector<ProjectivePoint> points) {
  std::vector<FatPoint> fat;
  fat.reserve(points.size());
  for (auto& p : points) fat.emplace_back(std::move(p));
  return FiniteSubscheme(field, n, std::move(fat));
}

std::size_t FiniteSubscheme::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& p : points_) d += p.length();
  return d;
}

bool FiniteSubscheme::is_reduced() const noexcept {
  return std::all_of(points_.begin(), points_.end(), [](const FatPoint& p) { return p.length() == 1; });
}

FiniteSubscheme FiniteSubscheme::without(std::size_t index) const {
  std::vector<FatPoint> rest;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i != index) rest.push_back(points_[i]);
  }
  return FiniteSubscheme(field_, n_, std::move(rest));
}

FiniteSubscheme FiniteSubscheme::subset(std::span<const std::size_t> indices) const {
  std::vector<FatPoint> chosen;
  for (std::size_t i : indices) chosen.push_back(points_.at(i));
  return FiniteSubscheme(field_, n_, std::move(chosen));
}

std::vector<ProjectivePoint> FiniteSubscheme::supports() const {
  std::vector<ProjectivePoint> out;
  for (const auto& p : points_) out.push_back(p.base());
  return out;
}

CompleteIntersection::CompleteIntersection(Field field, std::size_t n, std::vector<Form> forms)
    : field_(field), n_(n), forms_(std::move(forms)) {
  if (n_ < 1) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be at least 1");
  if (forms_.size() > n_) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(forms_.size()) +
                                                " forms cannot cut a complete intersection in P^" +
                                                std::to_string(n_));
  }
  for (const auto& f : forms_) {
    if (f.field() != field_) throw Error(ErrorCode::FieldMismatch, "form over another field");
    if (f.ambient_dim() != n_) throw Error(ErrorCode::InvalidArgument, "form in another ambient space");
    if (f.is_zero()) throw Error(ErrorCode::DegenerateConfiguration, "zero form in a complete intersection");
  }
  std::stable_sort(forms_.begin(), forms_.end(),
                   [](const Form& a, const Form& b) { return a.degree() < b.degree(); });
  for (const auto& f : forms_) {
    std::vector<Form> row;
    for (std::size_t j = 0; j <= n_; ++j) row.push_back(f.partial(j));
    partials_.push_back(std::move(row));
  }
}

std::vector<unsigned> CompleteIntersection::type() const {
  std::vector<unsigned> t;
  for (const auto& f : forms_) t.push_back(f.degree());
  return t;
}

unsigned long long CompleteIntersection::degree() const {
  unsigned long long d = 1;
  for (const auto& f : forms_) d *= f.degree();
  return d;
}

long long CompleteIntersection::canonical_twist() const {
  long long s = 0;
  for (const auto& f : forms_) s += f.degree();
  return s - static_cast<long long>(n_) - 1;
}

bool CompleteIntersection::contains(const ProjectivePoint& p) const {
  return std::all_of(forms_.begin(), forms_.end(),
                     [&](const Form& f) { return f.evaluate(p.coords()).is_zero(); });
}

Matrix CompleteIntersection::jacobian_at(const ProjectivePoint& p) const {
  Matrix j(field_, forms_.size(), n_ + 1);
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    for (std::size_t k = 0; k <= n_; ++k) j.set(i, k, partials_[i][k].evaluate(p.coords()));
  }
  return j;
}

std::uint64_t projective_space_size(std::size_t n, std::uint32_t p) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() - power) {
      throw Error(ErrorCode::BudgetExceeded, "P^" + std::to_string(n) + " over GF(" +
                                                 std::to_string(p) + ") is too large to count");
    }
    total += power;
    if (i < n) {
      if (power > std::numeric_limits<std::uint64_t>::max() / p) {
        throw Error(ErrorCode::BudgetExceeded, "projective space too large to count");
      }
      power *= p;
    }
  }
  return total;
}

ProjectiveSpaceEnumerator::ProjectiveSpaceEnumerator(std::size_t n, Field field)
    : n_(n), field_(field), size_(0) {
  if (field.is_rational()) {
    throw Error(ErrorCode::InvalidArgument, "cannot enumerate points over the rationals");
  }
  size_ = projective_space_size(n, field.characteristic());
}

std::vector<std::uint32_t> ProjectiveSpaceEnumerator::residues(std::uint64_t index) const {
  if (index >= size_) throw Error(ErrorCode::InvalidArgument, "point index out of range");
  const std::uint32_t p = field_.characteristic();
  std::vector<std::uint32_t> out(n_ + 1, 0);
  std::uint64_t block = 1;
  for (std::size_t lead = n_ + 1; lead-- > 0;) {
    if (index < block) {
      out[lead] = 1;
      for (std::size_t k = n_; k > lead; --k) {
        out[k] = static_cast<std::uint32_t>(index % p);
        index /= p;
      }
      return out;
    }
    index -= block;
    block *= p;
  }
  return out;  // unreachable
}

ProjectivePoint ProjectiveSpaceEnumerator::point(std::uint64_t index) const {
  Vector v;
  for (std::uint32_t r : residues(index)) v.emplace_back(field_, static_cast<long long>(r));
  return ProjectivePoint(std::move(v));
}

std::vector<ProjectivePoint> enumerate_projective_space(std::size_t n, Field field, std::uint64_t budget) {
  ProjectiveSpaceEnumerator e(n, field);
  if (e.size() > budget) {
    throw Error(ErrorCode::BudgetExceeded, "P^" + std::to_string(n) + " has " + std::to_string(e.size()) +
                                               " points, budget is " + std::to_string(budget));
  }
  std::vector<ProjectivePoint> out;
  out.reserve(e.size());
  for (std::uint64_t i = 0; i < e.size(); ++i) out.push_back(e.point(i));
  return out;
}

namespace {

// A form over F_p split by powers of the last variable: f = sum_j x_n^j g_j,
// each g_j stored as residue terms in x0..x_{n-1}.
struct SplitForm {
  struct Term {
    std::uint32_t coeff;
    std::vector<unsigned> exps;
  };
  std::vector<std::vector<Term>> by_power;  // index j = power of x_n
};

SplitForm split_last_variable(const Form& f) {
  SplitForm s;
  const std::size_t n = f.ambient_dim();
  s.by_power.resize(f.degree() + 1);
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e(m.exponents().begin(), m.exponents().begin() + static_cast<long>(n));
    s.by_power[m.exponent(n)].push_back({c.residue(), std::move(e)});
  }
  return s;
}

void scan_prefixes(const std::vector<SplitForm>& forms, std::size_t n, Field field,
                   std::uint64_t begin, std::uint64_t end, unsigned max_degree,
                   std::vector<ProjectivePoint>& out) {
  const std::uint64_t p = field.characteristic();
  ProjectiveSpaceEnumerator prefixes(n - 1, field);
  std::vector<std::vector<std::uint64_t>> powers(n, std::vector<std::uint64_t>(max_degree + 1));
  std::vector<std::vector<std::uint64_t>> coeffs(forms.size());
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const auto prefix = prefixes.residues(idx);
    for (std::size_t v = 0; v < n; ++v) {
      powers[v][0] = 1;
      for (unsigned e = 1; e <= max_degree; ++e) powers[v][e] = powers[v][e - 1] * prefix[v] % p;
    }
    for (std::size_t fi = 0; fi < forms.size(); ++fi) {
      const auto& bp = forms[fi].by_power;
      coeffs[fi].assign(bp.size(), 0);
      for (std::size_t j = 0; j < bp.size(); ++j) {
        std::uint64_t acc = 0;
        for (const auto& t : bp[j]) {
          std::uint64_t term = t.coeff;
          for (std::size_t v = 0; v < n; ++v) {
            if (t.exps[v] != 0) term = term * powers[v][t.exps[v]] % p;
          }
          acc += term;
        }
        coeffs[fi][j] = acc % p;
      }
    }
    for (std::uint64_t last = 0; last < p; ++last) {
      bool on_all = true;
      for (std::size_t fi = 0; fi < forms.size() && on_all; ++fi) {
        const auto& c = coeffs[fi];
        std::uint64_t acc = 0;
        for (std::size_t j = c.size(); j-- > 0;) acc = (acc * last + c[j]) % p;
        on_all = acc == 0;
      }
      if (!on_all) continue;
      Vector v;
      for (std::uint32_t r : prefix) v.emplace_back(field, static_cast<long long>(r));
      v.emplace_back(field, static_cast<long long>(last));
      out.emplace_back(std::move(v));
    }
  }
}

}  // namespace

std::vector<ProjectivePoint> rational_points(const CompleteIntersection& x, const EnumerationOptions& options) {
  const Field field = x.field();
  const std::size_t n = x.ambient_dim();
  ProjectiveSpaceEnumerator space(n, field);
  if (space.size() > options.budget) {
    throw Error(ErrorCode::BudgetExceeded, "P^" + std::to_string(n) + " over " + field.name() + " has " +
                                               std::to_string(space.size()) + " points, budget is " +
                                               std::to_string(options.budget));
  }
  std::vector<SplitForm> split;
  unsigned max_degree = 0;
  for (const auto& f : x.forms()) {
    split.push_back(split_last_variable(f));
    max_degree = std::max(max_degree, f.degree());
  }

  std::vector<ProjectivePoint> out;
  // The point (0:...:0:1) precedes every point with a nonzero prefix.
  std::vector<long long> last_axis(n + 1, 0);
  last_axis[n] = 1;
  const auto axis = ProjectivePoint::from_integers(field, last_axis);
  if (x.contains(axis)) out.push_back(axis);

  const std::uint64_t prefix_count = projective_space_size(n - 1, field.characteristic());
  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, 256));
  if (workers == 1 || prefix_count < 2 * workers) {
    scan_prefixes(split, n, field, 0, prefix_count, max_degree, out);
    return out;
  }
  std::vector<std::vector<ProjectivePoint>> parts(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (prefix_count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(prefix_count, w * chunk);
    const std::uint64_t end = std::min(prefix_count, begin + chunk);
    threads.emplace_back([&, w, begin, end] { scan_prefixes(split, n, field, begin, end, max_degree, parts[w]); });
  }
  for (auto& t : threads) t.join();
  for (auto& part : parts) {
    for (auto& p : part) out.push_back(std::move(p));
  }
  return out;
}

bool is_smooth_at(const CompleteIntersection& x, const ProjectivePoint& p) {
  if (p.field() != x.field()) throw Error(ErrorCode::FieldMismatch, "point and scheme over different fields");
  if (!x.contains(p)) {
    throw Error(ErrorCode::PointNotOnScheme, "point " + p.to_string() + " does not lie on the scheme");
  }
  return rank(x.jacobian_at(p)) == x.codimension();
}

GridIntersection make_grid_ci(const std::vector<std::vector<Form>>& lists) {
  if (lists.empty() || lists.front().empty()) {
    throw Error(ErrorCode::InvalidArgument, "grid needs at least one nonempty list of linear forms");
  }
  const Form& first = lists.front().front();
  const Field field = first.field();
  const std::size_t n = first.ambient_dim();
  if (lists.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "a zero-dimensional grid in P^" + std::to_string(n) + " needs " +
                                                std::to_string(n) + " lists, got " + std::to_string(lists.size()));
  }
  std::vector<std::vector<Vector>> coeffs(n);
  std::vector<Form> products;
  for (std::size_t i = 0; i < n; ++i) {
    if (lists[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty list of linear forms");
    Form product(field, n, 0);
    product.add_term(Monomial(std::vector<unsigned>(n + 1, 0)), Scalar(field, 1));
    for (const auto& f : lists[i]) {
      if (f.field() != field) throw Error(ErrorCode::FieldMismatch, "grid forms over different fields");
      if (f.ambient_dim() != n || f.degree() != 1 || f.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "grid factors must be nonzero linear forms in P^" + std::to_string(n));
      }
      coeffs[i].push_back(f.linear_coefficients());
      product = product * f;
    }
    products.push_back(std::move(product));
  }

  std::vector<ProjectivePoint> points;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(coeffs[i][choice[i]]);
    const auto ker = kernel(Matrix::from_rows(field, n + 1, rows));
    if (ker.size() != 1) {
      throw Error(ErrorCode::DegenerateConfiguration, "chosen linear forms do not meet in a single point");
    }
    ProjectivePoint pt(ker.front());
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t hits = 0;
      for (const auto& f : lists[i]) hits += f.evaluate(pt.coords()).is_zero() ? 1 : 0;
      if (hits != 1) {
        throw Error(ErrorCode::DegenerateConfiguration,
                    "grid point " + pt.to_string() + " lies on " + std::to_string(hits) + " factors of list " +
                        std::to_string(i));
      }
    }
    points.push_back(std::move(pt));
    std::size_t k = 0;
    while (k < n && ++choice[k] == lists[k].size()) choice[k++] = 0;
    if (k == n) break;
  }
  return {CompleteIntersection(field, n, std::move(products)), std::move(points)};
}

Matrix evaluation_rows(const FiniteSubscheme& z, long long d) {
  const Field field = z.field();
  const std::size_t n = z.ambient_dim();
  const std::vector<Monomial> basis =
      d < 0 ? std::vector<Monomial>{} : monomial_basis(n, static_cast<unsigned>(d));
  Matrix m(field, z.degree(), basis.size());
  std::size_t row = 0;
  for (const auto& fp : z.points()) {
    const Vector& x = fp.base().coords();
    const unsigned top = d < 0 ? 0 : static_cast<unsigned>(d);
    std::vector<Vector> powers(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      powers[i].emplace_back(field, 1);
      for (unsigned e = 1; e <= top; ++e) powers[i].push_back(powers[i].back() * x[i]);
    }
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Scalar v(field, 1);
      for (std::size_t i = 0; i <= n; ++i) v *= powers[i][basis[c].exponent(i)];
      m.set(row, c, v);
    }
    ++row;
    if (!fp.tangent()) continue;
    const Vector& t = *fp.tangent();
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Scalar v(field);
      for (std::size_t k = 0; k <= n; ++k) {
        const unsigned ek = basis[c].exponent(k);
        if (ek == 0 || t[k].is_zero()) continue;
        Scalar term = t[k] * Scalar(field, static_cast<long long>(ek));
        for (std::size_t i = 0; i <= n; ++i) {
          const unsigned e = basis[c].exponent(i) - (i == k ? 1 : 0);
          term *= powers[i][e];
        }
        v += term;
      }
      m.set(row, c, v);
    }
    ++row;
  }
  return m;
}

}  // namespace cbgon
