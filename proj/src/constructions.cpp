#include "veronese/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "veronese/fp_echelon.hpp"
#include "veronese/parse.hpp"
#include "veronese/random.hpp"

namespace veronese {

namespace {

std::vector<Fp> monomial_values(const PrimeField& field, const FpPoint& p, int d) {
  const int n = static_cast<int>(p.size());
  std::vector<Fp> out;
  for (const auto& e : monomial_basis(n, d)) {
    Fp v = field.one();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) v = v * p[i];
    out.push_back(v);
  }
  return out;
}

// f with its last variable set to 0, in one variable fewer.
FpPoly drop_last_variable(const FpPoly& f) {
  const int n = f.nvars();
  FpPoly out(f.field(), n - 1);
  f.for_each_term([&](const Exponent& e, const Fp& c) {
    if (e[n - 1] == 0) out.add_term(e, c);
  });
  return out;
}

FormSpace<PrimeField> restricted_span(const PrimeField& field, const FormSpace<PrimeField>& s) {
  std::vector<FpPoly> out;
  for (const auto& f : s.forms()) out.push_back(drop_last_variable(f));
  return FormSpace<PrimeField>::span(field, s.nvars() - 1, s.degree(), out);
}

// Kernel of the map Sym^k(forms) -> forms of degree k * deg, as forms of
// degree k in one variable per input form.
FormSpace<PrimeField> relations(const std::vector<FpPoly>& forms, int k) {
  const PrimeField& field = forms[0].field();
  const auto products = monomial_images(std::span<const FpPoly>(forms), k);
  const int out_degree = k * forms[0].degree();
  const std::size_t rows = monomial_count(forms[0].nvars(), out_degree);
  Matrix<PrimeField> m(field, rows, products.size());
  for (std::size_t c = 0; c < products.size(); ++c) {
    const auto col = products[c].dense_component(out_degree);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = col[r];
  }
  return FormSpace<PrimeField>::from_rows(static_cast<int>(forms.size()), k, kernel(m));
}

UniPoly<PrimeField> restrict_to_line(const FpPoly& f, const FpPoint& base, const FpPoint& dir) {
  const PrimeField& field = f.field();
  std::vector<Sample<PrimeField>> s;
  for (int k = 0; k <= f.degree(); ++k) {
    const Fp u = field.from_int(k);
    FpPoint x(base.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = base[i] + u * dir[i];
    s.push_back({u, f.evaluate(std::span<const Fp>(x))});
  }
  return interpolate(field, std::span<const Sample<PrimeField>>(s));
}

bool proportional(const FpPoint& a, const FpPoint& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!is_zero(a[i] * b[j] - a[j] * b[i])) return false;
  return true;
}

}  // namespace

FpPoint normalize_projective(FpPoint p) {
  auto lead = std::find_if(p.begin(), p.end(), [](const Fp& x) { return !is_zero(x); });
  if (lead == p.end()) throw std::invalid_argument("the zero vector is not a projective point");
  const Fp inv = inverse(*lead);
  for (auto& x : p) x = x * inv;
  return p;
}

PointSet::PointSet(const PrimeField& field, Ambient ambient, int dim, std::vector<FpPoint> points)
    : field_(field), ambient_(ambient), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("point set dimension must be positive");
  for (auto& p : points) {
    if (static_cast<int>(p.size()) != coordinates())
      throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, expected " +
                                  std::to_string(coordinates()));
    for (auto& x : p) x = field_.bind(x);
    if (ambient_ == Ambient::projective) p = normalize_projective(std::move(p));
    if (std::find(points_.begin(), points_.end(), p) != points_.end())
      throw std::invalid_argument("duplicate point in point set");
    points_.push_back(std::move(p));
  }
}

PointSet PointSet::random(Rng& rng, const PrimeField& field, Ambient ambient, int dim, std::size_t count) {
  const std::size_t n = static_cast<std::size_t>(ambient == Ambient::affine ? dim : dim + 1);
  std::vector<FpPoint> pts;
  while (pts.size() < count) {
    auto p = random_vector(rng, field, n);
    if (ambient == Ambient::projective) {
      if (std::all_of(p.begin(), p.end(), [](const Fp& x) { return is_zero(x); })) continue;
      p = normalize_projective(std::move(p));
    }
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return PointSet(field, ambient, dim, std::move(pts));
}

PointSet PointSet::homogenized() const {
  if (ambient_ == Ambient::projective) return *this;
  std::vector<FpPoint> pts;
  for (auto p : points_) {
    p.push_back(field_.one());
    pts.push_back(std::move(p));
  }
  return PointSet(field_, Ambient::projective, dim_, std::move(pts));
}

PointSet PointSet::dehomogenized() const {
  if (ambient_ == Ambient::affine) return *this;
  std::vector<FpPoint> pts;
  for (const auto& p : points_) {
    if (is_zero(p.back())) throw NonGeneric("point on the hyperplane at infinity");
    const Fp inv = inverse(p.back());
    FpPoint a(p.begin(), p.end() - 1);
    for (auto& x : a) x = x * inv;
    pts.push_back(std::move(a));
  }
  return PointSet(field_, Ambient::affine, dim_, std::move(pts));
}

RationalMap::RationalMap(int source_vars, std::vector<FpPoly> forms)
    : source_vars_(source_vars), degree_(-1), forms_(std::move(forms)) {
  if (forms_.empty()) throw std::invalid_argument("rational map needs at least one form");
  bool nonzero = false;
  for (const auto& f : forms_) {
    if (f.nvars() != source_vars_) throw RingMismatch("map form has the wrong number of variables");
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw std::invalid_argument("map forms must be homogeneous");
    if (degree_ >= 0 && f.degree() != degree_) throw std::invalid_argument("map forms must share one degree");
    degree_ = f.degree();
    nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("rational map with all forms zero");
}

RationalMap veronese_map(const PrimeField& field, int nvars, int d) {
  std::vector<FpPoly> forms;
  for (const auto& e : monomial_basis(nvars, d)) forms.push_back(FpPoly::monomial(field, nvars, e, field.one()));
  return RationalMap(nvars, std::move(forms));
}

std::optional<FpPoint> apply_map(const RationalMap& f, const FpPoint& p) {
  if (static_cast<int>(p.size()) != f.source_vars()) throw std::invalid_argument("point does not match map source");
  FpPoint out;
  for (const auto& g : f.forms()) out.push_back(g.evaluate(std::span<const Fp>(p)));
  if (std::all_of(out.begin(), out.end(), [](const Fp& x) { return is_zero(x); })) return std::nullopt;
  return normalize_projective(std::move(out));
}

FormSpace<PrimeField> forms_through(const PointSet& points, int d) {
  const auto h = points.homogenized();
  const int n = h.coordinates();
  const PrimeField& field = points.field();
  Matrix<PrimeField> eval(field, 0, monomial_count(n, d));
  for (const auto& p : h.points()) eval.append_row(monomial_values(field, p, d));
  return FormSpace<PrimeField>::from_rows(n, d, kernel(eval));
}

InitialSystem initial_system(const PointSet& affine_points) {
  if (affine_points.ambient() != Ambient::affine) throw std::invalid_argument("initial system needs affine points");
  const PrimeField& field = affine_points.field();
  const int n = affine_points.dim();
  GradedIdeal<PrimeField> ideal;
  std::vector<std::size_t> hf;
  for (int d = 0;; ++d) {
    ideal.pieces.push_back(restricted_span(field, forms_through(affine_points, d)));
    hf.push_back(monomial_count(n, d) - ideal.pieces.back().dim());
    if (hf.back() == 0) break;
    if (d > static_cast<int>(affine_points.size())) throw std::logic_error("initial system did not terminate");
  }
  InitialSystem out{std::move(ideal), HilbertFunction::trimmed(hf), std::nullopt};
  if (n == 4 && out.hilbert == HilbertFunction{{1, 4, 3}}) out.plane.emplace(perp(out.ideal.piece(2)));
  return out;
}

FpPoint ninth_base_point(const FpPoly& c1, const FpPoly& c2, const PointSet& known, std::uint64_t seed) {
  const PrimeField& field = c1.field();
  if (c1.nvars() != 3 || c2.nvars() != 3 || c1.degree() != 3 || c2.degree() != 3)
    throw std::invalid_argument("ninth base point needs two plane cubics");
  if (known.ambient() != Ambient::projective || known.dim() != 2 || known.size() != 8)
    throw std::invalid_argument("ninth base point needs 8 points of P^2");
  for (const auto& p : known.points())
    if (!is_zero(c1.evaluate(std::span<const Fp>(p))) || !is_zero(c2.evaluate(std::span<const Fp>(p))))
      throw std::invalid_argument("known point is not on both cubics");
  if (FormSpace<PrimeField>::span(field, 3, 3, std::vector<FpPoly>{c1, c2}).dim() != 2)
    throw std::invalid_argument("cubics are dependent");

  Rng rng(seed);
  const Exponent cube{3};
  for (int attempt = 0; attempt < 10; ++attempt) {
    const auto g = random_invertible(rng, field, 3);
    const auto gi = inverse(g);
    const auto d1 = linear_change(c1, g), d2 = linear_change(c2, g);
    if (is_zero(d1.coefficient(cube)) || is_zero(d2.coefficient(cube))) continue;
    std::vector<Fp> known_x1;
    bool chart_ok = true;
    for (const auto& p : known.points()) {
      const auto y = gi.apply(std::span<const Fp>(p));
      if (is_zero(y[2])) chart_ok = false;
      else known_x1.push_back(y[1] / y[2]);
    }
    if (!chart_ok) continue;
    // x0 direction, for fixed x1 = b on the chart x2 = 1.
    auto in_x0 = [&](const FpPoly& f, const Fp& b) {
      return restrict_to_line(f, FpPoint{field.zero(), b, field.one()}, FpPoint{field.one(), field.zero(), field.zero()});
    };
    std::vector<Sample<PrimeField>> samples;
    for (int k = 0; k < 10; ++k) {
      const Fp b = field.from_int(k);
      samples.push_back({b, resultant(in_x0(d1, b), in_x0(d2, b))});
    }
    auto res = interpolate(field, std::span<const Sample<PrimeField>>(samples));
    if (res.degree() != 9) continue;
    bool divides = true;
    for (const auto& r : known_x1) {
      auto [quo, rem] = res.divmod(UniPoly<PrimeField>::linear_root(field, r));
      if (!rem.is_zero()) divides = false;
      res = quo;
    }
    if (!divides || res.degree() != 1) continue;
    const Fp r = -res.coefficient(0) / res.coefficient(1);
    const auto common = gcd(in_x0(d1, r), in_x0(d2, r));
    if (common.degree() != 1) continue;
    const Fp x0 = -common.coefficient(0) / common.coefficient(1);
    const auto q = normalize_projective(g.apply(std::span<const Fp>(FpPoint{x0, r, field.one()})));
    if (!is_zero(c1.evaluate(std::span<const Fp>(q))) || !is_zero(c2.evaluate(std::span<const Fp>(q)))) continue;
    if (std::find(known.points().begin(), known.points().end(), q) != known.points().end())
      throw NonGeneric("ninth base point coincides with a known point");
    return q;
  }
  throw NonGeneric("ninth base point: no separating coordinates found");
}

std::optional<FpPoint> GaleProjection::map(const FpPoint& p) const {
  const auto v = monomial_values(conics.field(), p, 2);
  auto w = conics.apply(std::span<const Fp>(v));
  if (std::all_of(w.begin(), w.end(), [](const Fp& x) { return is_zero(x); })) return std::nullopt;
  return normalize_projective(std::move(w));
}

GaleProjection gale_dual(const PointSet& gamma2, const FpPoint& q, std::uint64_t seed) {
  if (gamma2.ambient() != Ambient::projective || gamma2.dim() != 2)
    throw std::invalid_argument("gale dual needs points of P^2");
  const PrimeField& field = gamma2.field();
  const auto qn = normalize_projective(q);
  Matrix<PrimeField> center(field, 0, 6);
  center.append_row(monomial_values(field, qn, 2));
  // An echelon basis makes x4 = 0 pull back to a reducible conic, whose scroll
  // section then contains a ruling line.
  Rng rng(seed);
  GaleProjection out{qn, random_invertible(rng, field, 5) * kernel(center),
                     PointSet(field, Ambient::projective, 4, {})};
  std::vector<FpPoint> images;
  for (const auto& p : gamma2.points()) {
    auto w = out.map(p);
    if (!w) throw NonGeneric("point maps to the projection center");
    if (std::find(images.begin(), images.end(), *w) != images.end()) throw NonGeneric("two points have one image");
    images.push_back(std::move(*w));
  }
  out.points = PointSet(field, Ambient::projective, 4, std::move(images));
  return out;
}

FormSpace<PrimeField> scroll_quadrics(const GaleProjection& gale) {
  std::vector<FpPoly> conics;
  for (std::size_t i = 0; i < gale.conics.rows(); ++i)
    conics.push_back(FpPoly::form(gale.conics.field(), 3, 2, gale.conics.row(i)));
  return relations(conics, 2);
}

EllipticMember elliptic_member(const FpPoly& c1, const FpPoly& c2, const GaleProjection& gale, Fp s,
                               std::size_t count) {
  const PrimeField& field = c1.field();
  const auto c = c1 + c2 * s;
  // Smooth exactly when the partials have no common zero, i.e. their ideal
  // contains every quartic.
  Matrix<PrimeField> piece(field, 0, monomial_count(3, 4));
  for (int i = 0; i < 3; ++i) {
    const auto partial = contract(FpPoly::variable(field, 3, i), c);
    for (const auto& e : monomial_basis(3, 2))
      piece.append_row((partial * FpPoly::monomial(field, 3, e, field.one())).dense_component(4));
  }
  if (rank(piece) != monomial_count(3, 4)) throw NonGeneric("pencil member is singular");

  std::vector<FpPoint> images;
  for (std::uint32_t a = 0; a < field.modulus() && images.size() < count; ++a) {
    const FpPoint base{field.from_uint(a), field.zero(), field.one()}, dir{field.zero(), field.one(), field.zero()};
    const auto line = restrict_to_line(c, base, dir);
    if (line.degree() < 1) continue;
    auto roots = roots_in_field(line);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());  // tangent lines repeat a root
    for (const auto& y : roots) {
      if (auto w = gale.map(FpPoint{base[0], y, field.one()})) images.push_back(std::move(*w));
      if (images.size() == count) break;
    }
  }
  if (images.size() < count) throw NonGeneric("too few points on the pencil member");
  PointSet samples(field, Ambient::projective, 4, std::move(images));
  auto quadrics = forms_through(samples, 2);
  if (quadrics.dim() != 5) throw NonGeneric("elliptic member lies on " + std::to_string(quadrics.dim()) + " quadrics");
  return {s, std::move(samples), std::move(quadrics)};
}

FormSpace<PrimeField> segre_cubic(const EllipticMember& member, const QuadricPlane<PrimeField>& L) {
  const PrimeField& field = L.field();
  const auto perp_space = lperp(L);
  std::vector<FpPoly> restricted;
  std::vector<FpPoly> in_y;
  for (const auto& q : member.quadrics.forms()) {
    restricted.push_back(drop_last_variable(q));
    const auto coords = perp_space.coordinates(restricted.back());
    if (!coords) throw std::logic_error("restricted quadric is not in L^perp: identifications are inconsistent");
    in_y.push_back(FpPoly::form(field, 7, 1, *coords));
  }
  if (FormSpace<PrimeField>::span(field, 4, 2, restricted).dim() != restricted.size())
    throw NonGeneric("restricted quadrics are dependent");
  std::vector<FpPoly> cubics;
  for (const auto& rel : relations(restricted, 3).forms())
    cubics.push_back(substitute(rel, std::span<const FpPoly>(in_y)));
  return FormSpace<PrimeField>::span(field, 7, 3, cubics);
}

OcticSurface octic_surface(const PointSet& z) {
  if (z.ambient() != Ambient::projective || z.dim() != 2 || z.size() != 8)
    throw std::invalid_argument("octic surface needs 8 points of P^2");
  const auto quartics = forms_through(z, 4);
  if (quartics.dim() != 7) throw NonGeneric("expected 7 quartics through Z, got " + std::to_string(quartics.dim()));
  auto quadrics = relations(quartics.forms(), 2);
  if (quadrics.dim() != 7)
    throw NonGeneric("expected 7 quadrics through the octic surface, got " + std::to_string(quadrics.dim()));
  RationalMap embedding(3, quartics.forms());
  RationalMap cremona(7, quadrics.forms());
  return {std::move(embedding), std::move(quadrics), std::move(cremona)};
}

std::optional<InverseMap> find_inverse(const RationalMap& f, int d2, std::uint64_t seed) {
  if (d2 < 1) throw std::invalid_argument("inverse degree must be positive");
  const int n = f.source_vars();
  if (f.target_vars() != n) throw std::invalid_argument("find_inverse needs a self-map");
  const PrimeField& field = f.field();
  const std::uint32_t p = field.modulus();
  const int top = f.degree() * d2;
  const std::size_t ncols = monomial_count(n, top);

  // Column space of the degree d2 monomials in f, in reduced echelon form.
  const auto images = monomial_images(std::span<const FpPoly>(f.forms()), d2);
  FpEchelon span(p, ncols);
  std::vector<std::size_t> independent;
  std::vector<std::vector<std::uint32_t>> raw_images;
  for (std::size_t k = 0; k < images.size(); ++k) {
    const auto col = images[k].dense_component(top);
    std::vector<std::uint32_t> raw(ncols);
    for (std::size_t j = 0; j < ncols; ++j) raw[j] = col[j].value;
    if (span.insert(raw)) independent.push_back(k);
    raw_images.push_back(std::move(raw));
  }
  const auto echelon = span.sorted_rows();
  const auto pivots = span.sorted_pivots();

  // lambda x_i lies in the span: lambda_(j - e_i) = sum over pivots c of
  // E_c[j] lambda_(c - e_i) at every non-pivot monomial j.
  const auto top_basis = monomial_basis(n, top);
  const std::size_t nlambda = monomial_count(n, top - 1);
  auto below = [&](std::size_t j, int i) -> std::int64_t {
    if (top_basis[j][i] == 0) return -1;
    Exponent e = top_basis[j];
    --e[i];
    return static_cast<std::int64_t>(monomial_rank(e, n));
  };
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  using Sparse = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  std::vector<Sparse> equations;
  for (int i = 0; i < n; ++i)
    for (std::size_t j = 0; j < ncols; ++j) {
      if (is_pivot[j]) continue;
      std::map<std::uint32_t, std::uint64_t> row;
      if (auto b = below(j, i); b >= 0) row[static_cast<std::uint32_t>(b)] += 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::uint32_t e = echelon[r][j];
        if (e == 0) continue;
        if (auto b = below(pivots[r], i); b >= 0) row[static_cast<std::uint32_t>(b)] += p - e;
      }
      Sparse sparse;
      for (const auto& [k, v] : row)
        if (v % p != 0) sparse.emplace_back(k, static_cast<std::uint32_t>(v % p));
      if (!sparse.empty()) equations.push_back(std::move(sparse));
    }

  FpEchelon system(p, nlambda);
  Rng rng(seed);
  if (!equations.empty()) {
    const std::size_t groups = nlambda + 16;
    std::vector<std::vector<std::uint64_t>> dense(groups, std::vector<std::uint64_t>(nlambda, 0));
    for (const auto& eq : equations) {
      auto& target = dense[rng.below(groups)];
      const std::uint64_t c = 1 + rng.below(p - 1);
      for (const auto& [k, v] : eq) target[k] = (target[k] + c * v) % p;
    }
    std::vector<std::uint32_t> row(nlambda);
    for (const auto& d : dense) {
      for (std::size_t k = 0; k < nlambda; ++k) row[k] = static_cast<std::uint32_t>(d[k]);
      system.insert(row);
      if (system.rank() == nlambda) break;
    }
  }
  // The compressed kernel contains the true one; insert violated equations
  // until every kernel vector satisfies the whole system.
  std::vector<std::vector<std::uint32_t>> ker;
  while (true) {
    ker = system.kernel();
    bool clean = true;
    std::vector<std::uint32_t> row(nlambda);
    for (const auto& eq : equations) {
      const bool violated = std::any_of(ker.begin(), ker.end(), [&](const std::vector<std::uint32_t>& v) {
        std::uint64_t dot = 0;
        for (const auto& [k, c] : eq) dot = (dot + static_cast<std::uint64_t>(c) * v[k]) % p;
        return dot != 0;
      });
      if (!violated) continue;
      std::fill(row.begin(), row.end(), 0);
      for (const auto& [k, c] : eq) row[k] = c;
      system.insert(row);
      clean = false;
    }
    if (clean) break;
  }
  if (ker.empty()) return std::nullopt;

  std::vector<Fp> lambda_coeffs;
  for (auto v : ker.front()) lambda_coeffs.push_back(Fp{v, p});
  const auto lambda = FpPoly::form(field, n, top - 1, lambda_coeffs);

  // Square system on the independent images and the pivot monomials.
  const std::size_t r = independent.size();
  Matrix<PrimeField> square(field, r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) square(a, b) = Fp{raw_images[independent[b]][pivots[a]], p};
  const auto inv = inverse(square);
  const auto d2_basis = monomial_basis(n, d2);
  std::vector<FpPoly> g;
  for (int i = 0; i < n; ++i) {
    const auto target = (lambda * FpPoly::variable(field, n, i)).dense_component(top);
    std::vector<Fp> rhs(r);
    for (std::size_t a = 0; a < r; ++a) rhs[a] = target[pivots[a]];
    const auto c = inv.apply(std::span<const Fp>(rhs));
    FpPoly gi(field, n);
    for (std::size_t b = 0; b < r; ++b) gi.add_term(d2_basis[independent[b]], c[b]);
    g.push_back(std::move(gi));
  }
  // lambda x_i is in the span, so these products must match exactly.
  for (int i = 0; i < n; ++i)
    if (!(substitute(g[static_cast<std::size_t>(i)], std::span<const FpPoly>(f.forms())) ==
          lambda * FpPoly::variable(field, n, i)))
      throw std::logic_error("inverse system solution does not reproduce lambda x");
  return InverseMap{RationalMap(n, std::move(g)), lambda};
}

bool verify_inverse(const RationalMap& f, const RationalMap& g, std::uint64_t seed, int samples) {
  const PrimeField& field = f.field();
  Rng rng(seed);
  auto round_trip = [&](const RationalMap& first, const RationalMap& second) {
    int checked = 0;
    for (int tries = 0; checked < samples; ++tries) {
      if (tries > 10 * samples) return false;
      const auto x = random_vector(rng, field, static_cast<std::size_t>(first.source_vars()));
      const auto y = apply_map(first, x);
      if (!y) continue;
      const auto z = apply_map(second, *y);
      if (!z) continue;
      if (!proportional(*z, x)) return false;
      ++checked;
    }
    return true;
  };
  return round_trip(f, g) && round_trip(g, f);
}

PointSet parse_point_set(const PrimeField& field, const std::vector<std::string>& lines, Ambient ambient) {
  std::vector<FpPoint> pts;
  for (const auto& line : lines) {
    FpPoint p;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto first = item.find_first_not_of(" \t");
      const auto last = item.find_last_not_of(" \t\r");
      if (first == std::string::npos) throw ParseError("empty coordinate in point '" + line + "'");
      try {
        p.push_back(field.from_string(item.substr(first, last - first + 1)));
      } catch (const std::exception&) {
        throw ParseError("bad coordinate '" + item + "'");
      }
    }
    if (!pts.empty() && p.size() != pts.front().size()) throw ParseError("points have different lengths");
    pts.push_back(std::move(p));
  }
  if (pts.empty()) throw ParseError("no points");
  const int n = static_cast<int>(pts.front().size());
  const int dim = ambient == Ambient::affine ? n : n - 1;
  try {
    return PointSet(field, ambient, dim, std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

PointSet read_point_set(const PrimeField& field, const std::filesystem::path& path, Ambient ambient) {
  return parse_point_set(field, read_content_lines(path), ambient);
}

std::string format_point_set(const PointSet& points) {
  std::string out;
  for (const auto& p : points.points()) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(points.field().signed_value(p[i]));
    }
    out += "\n";
  }
  return out;
}

RationalMap read_rational_map(const PrimeField& field, const std::filesystem::path& path, int source_vars) {
  std::vector<FpPoly> forms;
  for (const auto& line : read_content_lines(path)) forms.push_back(parse_poly(field, line, VarFamily{'x', source_vars}));
  try {
    return RationalMap(source_vars, std::move(forms));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace veronese
