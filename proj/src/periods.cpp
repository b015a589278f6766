#include "q8/periods.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace q8 {

namespace {

constexpr double kPi = std::numbers::pi;

Cx curve_poly(Cx x, Cx a) {
  const Cx x2 = x * x;
  const Cx x4 = x2 * x2;
  return x * (x4 - 1.0) * (x4 + 2.0 * a * x2 + 1.0);
}

// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
// three-term recurrence, cached per node count.
struct Quadrature {
  std::vector<double> node, weight;
};

const Quadrature& gauss_legendre(int n) {
  static std::map<int, Quadrature> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Quadrature q;
  q.node.resize(n);
  q.weight.resize(n);
  for (int k = 0; k < (n + 1) / 2; ++k) {
    double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    q.node[k] = -x;
    q.node[n - 1 - k] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.weight[k] = w;
    q.weight[n - 1 - k] = w;
  }
  return cache.emplace(n, std::move(q)).first->second;
}

// Continued branch of y = sqrt(f(x)) at the midpoints of a uniform grid along
// every segment, refined until consecutive samples move arg f by less than
// pi/2 so the sign choice by inner product is unambiguous.
struct SheetWalk {
  int count = 0;  // midpoints per segment
  std::vector<std::vector<Cx>> y;
};

SheetWalk walk_sheet(const BranchPath& path, Cx a) {
  require(!path.segments.empty(), Err::PreconditionFailed, "path has no segments");
  for (int count = 1024; count <= (1 << 17); count *= 2) {
    SheetWalk walk;
    walk.count = count;
    walk.y.assign(path.segments.size(), {});
    Cx yprev, fprev;
    bool first = true, coarse = false;
    for (size_t si = 0; si < path.segments.size() && !coarse; ++si) {
      auto& ys = walk.y[si];
      ys.reserve(count);
      for (int j = 0; j < count; ++j) {
        const double t = (j + 0.5) / count;
        const Cx x = path.segments[si].point(t);
        const Cx fx = curve_poly(x, a);
        require(fx != Cx(0.0, 0.0), Err::ContinuationFailed,
                "path touches a branch point away from its endpoints");
        const Cx pr = std::sqrt(fx);
        Cx y;
        if (first) {
          if (path.initial_y_hint != Cx(0.0, 0.0)) {
            const double dot = (pr * std::conj(path.initial_y_hint)).real();
            require(std::abs(dot) > 1e-12 * std::abs(pr) * std::abs(path.initial_y_hint),
                    Err::IllConditioned, "starting sheet hint is orthogonal to both branches");
            y = dot > 0 ? pr : -pr;
          } else {
            y = (pr.imag() > 0) == (path.sheet_sign > 0) ? pr : -pr;
            require(std::abs(y.imag()) > 1e-6 * std::abs(y), Err::IllConditioned,
                    "starting sheet is ambiguous for this path");
          }
          first = false;
        } else {
          if (std::abs(std::arg(fx / fprev)) >= kPi / 2) {
            coarse = true;
            break;
          }
          y = (pr * std::conj(yprev)).real() > 0 ? pr : -pr;
        }
        ys.push_back(y);
        yprev = y;
        fprev = fx;
      }
    }
    if (!coarse) return walk;
  }
  fail(Err::ContinuationFailed, "sheet continuation steps cannot stay below pi/2 in arg f");
}

Cx sheet_value(const SheetWalk& walk, size_t si, double t, Cx pr) {
  const int j = std::clamp(int(t * walk.count), 0, walk.count - 1);
  const Cx yw = walk.y[si][j];
  return (pr * std::conj(yw)).real() > 0 ? pr : -pr;
}

struct Panel {
  double t0, t1;
  std::array<Cx, 4> coarse{}, fine{};
  double err = 0.0;
};

Panel evaluate_panel(const BranchPath& path, size_t si, const SheetWalk& walk, Cx a,
                     double t0, double t1, int nodes) {
  Panel p;
  p.t0 = t0;
  p.t1 = t1;
  const PathSegment& seg = path.segments[si];
  for (int pass = 0; pass < 2; ++pass) {
    const Quadrature& q = gauss_legendre(pass == 0 ? nodes : 2 * nodes);
    std::array<Cx, 4>& acc = pass == 0 ? p.coarse : p.fine;
    for (size_t k = 0; k < q.node.size(); ++k) {
      const double t = t0 + (t1 - t0) * (q.node[k] + 1.0) / 2.0;
      const double w = q.weight[k] * (t1 - t0) / 2.0;
      const Cx x = seg.point(t);
      const Cx y = sheet_value(walk, si, t, std::sqrt(curve_poly(x, a)));
      const Cx base = seg.derivative(t) / y * w;
      Cx mono(1.0, 0.0);
      for (int l = 0; l < 4; ++l) {
        acc[l] += mono * base;
        mono *= x;
      }
    }
  }
  for (int l = 0; l < 4; ++l) p.err = std::max(p.err, std::abs(p.fine[l] - p.coarse[l]));
  return p;
}

std::vector<Cx> quartic_branch_roots(Cx a) {
  const Cx s = std::sqrt(a * a - 1.0);
  std::vector<Cx> roots;
  for (const Cx x2 : {-a + s, -a - s}) {
    const Cx r = std::sqrt(x2);
    roots.push_back(r);
    roots.push_back(-r);
  }
  return roots;
}

PathSegment line_segment(Cx p, Cx q, bool sing_start, bool sing_end) {
  PathSegment s;
  s.kind = PathSegment::Kind::Line;
  s.p0 = p;
  s.p1 = q;
  s.singular_start = sing_start;
  s.singular_end = sing_end;
  return s;
}

PathSegment arc_segment(Cx center, double radius, double a0, double a1) {
  PathSegment s;
  s.kind = PathSegment::Kind::Arc;
  s.center = center;
  s.radius = radius;
  s.angle0 = a0;
  s.angle1 = a1;
  return s;
}

// Exit along a short ray, swing just outside the circle of branch points,
// enter the far endpoint along another short ray.
std::vector<PathSegment> outer_arc_path(Cx p, Cx q, double bump) {
  double tp = std::arg(p), tq = std::arg(q);
  if (tp < 0) tp += 2 * kPi;
  if (tq < 0) tq += 2 * kPi;
  require(tq > tp, Err::InternalError, "outer path endpoints out of order");
  const double w = (tq - tp) / 6.0;
  const double rad = std::max(std::abs(p), std::abs(q)) + bump;
  const Cx p2 = rad * std::polar(1.0, tp + w);
  const Cx q2 = rad * std::polar(1.0, tq - w);
  return {line_segment(p, p2, true, false), arc_segment(Cx(0, 0), rad, tp + w, tq - w),
          line_segment(q2, q, false, true)};
}

PathSegment negate_segment(const PathSegment& s) {
  PathSegment out = s;
  if (s.kind == PathSegment::Kind::Line) {
    out.p0 = -s.p0;
    out.p1 = -s.p1;
  } else {
    out.center = -s.center;
    out.angle0 = s.angle0 + kPi;
    out.angle1 = s.angle1 + kPi;
  }
  return out;
}

PathSegment flip_segment(const PathSegment& s) {
  PathSegment out = s;
  out.singular_start = s.singular_end;
  out.singular_end = s.singular_start;
  if (s.kind == PathSegment::Kind::Line) {
    out.p0 = s.p1;
    out.p1 = s.p0;
  } else {
    out.angle0 = s.angle1;
    out.angle1 = s.angle0;
  }
  return out;
}

void check_clearance(const BranchPath& path, const std::vector<Cx>& branch, double clearance) {
  const Cx startp = path.segments.front().start();
  const Cx endp = path.segments.back().end();
  for (const PathSegment& seg : path.segments)
    for (int j = 0; j <= 256; ++j) {
      const Cx x = seg.point(j / 256.0);
      for (const Cx b : branch) {
        if (std::abs(b - startp) < 1e-12 || std::abs(b - endp) < 1e-12) continue;
        require(std::abs(x - b) >= clearance, Err::IllConditioned,
                "path clearance from branch points violated");
      }
    }
}

Eigen::Matrix<Cx, 4, 8> to_eigen(const PeriodMatrix& pi) {
  Eigen::Matrix<Cx, 4, 8> m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 8; ++c) m(r, c) = pi.entries[r][c];
  return m;
}

Eigen::Matrix<double, 8, 8> integer_inverse(const IntMatrix& e) {
  require(e.size() == 8, Err::PreconditionFailed, "intersection form must be 8x8");
  Eigen::Matrix<double, 8, 8> ed;
  for (int r = 0; r < 8; ++r) {
    require(e[r].size() == 8, Err::PreconditionFailed, "intersection form must be 8x8");
    for (int c = 0; c < 8; ++c) ed(r, c) = double(e[r][c]);
  }
  Eigen::Matrix<double, 8, 8> inv = ed.inverse();
  Eigen::Matrix<double, 8, 8> rounded = inv.array().round().matrix();
  require((inv - rounded).cwiseAbs().maxCoeff() < 1e-9 && (ed * rounded).isIdentity(1e-9),
          Err::PreconditionFailed, "intersection form is not unimodular");
  return rounded;
}

}  // namespace

Cx PathSegment::point(double t) const {
  if (kind == Kind::Arc) return center + radius * std::polar(1.0, angle0 + (angle1 - angle0) * t);
  if (singular_start && singular_end) {
    const Cx c = (p0 + p1) / 2.0, m = (p1 - p0) / 2.0;
    return c + m * std::sin(kPi * (t - 0.5));
  }
  if (singular_start) return p0 + (p1 - p0) * t * t;
  if (singular_end) return p1 + (p0 - p1) * (1.0 - t) * (1.0 - t);
  return p0 + (p1 - p0) * t;
}

Cx PathSegment::derivative(double t) const {
  if (kind == Kind::Arc)
    return Cx(0, 1) * (angle1 - angle0) * radius * std::polar(1.0, angle0 + (angle1 - angle0) * t);
  if (singular_start && singular_end)
    return (p1 - p0) / 2.0 * std::cos(kPi * (t - 0.5)) * kPi;
  if (singular_start) return 2.0 * (p1 - p0) * t;
  if (singular_end) return 2.0 * (p1 - p0) * (1.0 - t);
  return p1 - p0;
}

std::vector<Cx> finite_branch_points(Cx a) {
  std::vector<Cx> pts = {Cx(0, 0), Cx(1, 0), Cx(-1, 0), Cx(0, 1), Cx(0, -1)};
  for (Cx r : quartic_branch_roots(a)) pts.push_back(r);
  return pts;
}

std::vector<BranchPath> build_homology_basis(Cx a, const PeriodOptions& opt) {
  const std::vector<Cx> branch = finite_branch_points(a);
  for (size_t i = 0; i < branch.size(); ++i)
    for (size_t j = i + 1; j < branch.size(); ++j)
      require(std::abs(branch[i] - branch[j]) >= 1e-6, Err::IllConditioned,
              "branch points nearly collide; fiber is too close to singular");

  std::vector<Cx> upper;
  for (Cx r : quartic_branch_roots(a))
    if (std::arg(r) > 0) upper.push_back(r);
  require(upper.size() == 2, Err::IllConditioned, "expected two branch roots above the real axis");
  std::sort(upper.begin(), upper.end(), [](Cx l, Cx r) { return std::arg(l) < std::arg(r); });
  const Cx u1 = upper[0], u2 = upper[1];
  require(std::arg(u1) > 1e-3 && std::arg(u1) < kPi / 2 - 1e-3, Err::IllConditioned,
          "first branch root left its reference sector");
  require(std::arg(u2) > kPi / 2 + 1e-3 && std::arg(u2) < kPi - 1e-3, Err::IllConditioned,
          "second branch root left its reference sector");

  std::vector<BranchPath> basis;
  const std::array<std::pair<Cx, Cx>, 3> hops = {
      std::pair<Cx, Cx>{Cx(1, 0), u1}, {u1, Cx(0, 1)}, {Cx(0, 1), u2}};
  for (int k = 0; k < 4; ++k) {
    BranchPath g;
    if (k == 0)
      g.segments = {line_segment(Cx(0, 0), Cx(1, 0), true, true)};
    else
      g.segments = outer_arc_path(hops[k - 1].first, hops[k - 1].second, opt.clearance);
    g.sheet_sign = +1;
    g.closed = true;
    g.label = "gamma" + std::to_string(k);
    check_clearance(g, branch, opt.clearance);

    BranchPath ag;
    for (const PathSegment& s : g.segments) ag.segments.push_back(negate_segment(s));
    const SheetWalk walk = walk_sheet(g, a);
    ag.initial_y_hint = Cx(0, 1) * walk.y.front().front();
    ag.closed = true;
    ag.label = "alpha*" + g.label;
    check_clearance(ag, branch, opt.clearance);

    basis.push_back(std::move(g));
    basis.push_back(std::move(ag));
  }
  return basis;
}

PathIntegral integrate_basis_differentials(const BranchPath& path, Cx a,
                                           const PeriodOptions& opt) {
  require(opt.tol >= 1e-12, Err::PreconditionFailed, "tolerance below 1e-12 is not supported");
  const SheetWalk walk = walk_sheet(path, a);
  PathIntegral out;
  out.start_y = walk.y.front().front();
  out.end_y = walk.y.back().back();
  const double seg_budget = opt.tol / (2.0 * path.segments.size());
  for (size_t si = 0; si < path.segments.size(); ++si) {
    std::vector<Panel> panels = {evaluate_panel(path, si, walk, a, 0.0, 1.0, opt.nodes)};
    while (true) {
      double total = 0.0;
      size_t worst = 0;
      for (size_t i = 0; i < panels.size(); ++i) {
        total += panels[i].err;
        if (panels[i].err > panels[worst].err) worst = i;
      }
      if (total <= seg_budget) break;
      require(int(panels.size()) < opt.max_panels, Err::IllConditioned,
              "quadrature refinement budget exhausted");
      const Panel old = panels[worst];
      const double tm = (old.t0 + old.t1) / 2.0;
      panels[worst] = evaluate_panel(path, si, walk, a, old.t0, tm, opt.nodes);
      panels.push_back(evaluate_panel(path, si, walk, a, tm, old.t1, opt.nodes));
    }
    for (const Panel& p : panels)
      for (int l = 0; l < 4; ++l) {
        out.value[l] += p.fine[l];
        out.error[l] += std::abs(p.fine[l] - p.coarse[l]);
      }
  }
  // The lift traverses the plane path on both sheets, doubling the integral.
  for (int l = 0; l < 4; ++l) {
    out.value[l] *= 2.0;
    out.error[l] *= 2.0;
  }
  return out;
}

PeriodMatrix compute_period_matrix(const std::vector<BranchPath>& paths, Cx a,
                                   const PeriodOptions& opt) {
  require(opt.tol >= 1e-12, Err::PreconditionFailed, "tolerance below 1e-12 is not supported");
  require(paths.size() == 8, Err::PreconditionFailed, "period matrix needs exactly eight paths");
  PeriodMatrix pi;
  std::string tag;
  for (size_t c = 0; c < 8; ++c) {
    const PathIntegral cell = integrate_basis_differentials(paths[c], a, opt);
    for (int l = 0; l < 4; ++l) {
      pi.entries[l][c] = cell.value[l];
      pi.error_bounds[l][c] = cell.error[l];
      require(cell.error[l] <= opt.tol, Err::IllConditioned,
              "period entry error bound exceeds the requested tolerance");
    }
    tag += (c ? "," : "") + paths[c].label;
  }
  pi.basis_tag = tag;
  require(period_lattice_rank(pi) == 8, Err::IllConditioned,
          "period columns do not span a rank-8 real lattice");
  return pi;
}

PeriodMatrix compute_period_matrix(const std::vector<BranchPath>& paths, Cx a, double tol) {
  PeriodOptions opt;
  opt.tol = tol;
  return compute_period_matrix(paths, a, opt);
}

BranchPath reversed_path(const BranchPath& path, Cx a, const PeriodOptions& opt) {
  (void)opt;
  const SheetWalk walk = walk_sheet(path, a);
  BranchPath out;
  for (auto it = path.segments.rbegin(); it != path.segments.rend(); ++it)
    out.segments.push_back(flip_segment(*it));
  out.initial_y_hint = walk.y.back().back();
  out.sheet_sign = path.sheet_sign;
  out.closed = path.closed;
  out.label = path.label + "^-";
  return out;
}

BranchPath iota_image(const BranchPath& path) {
  BranchPath out = path;
  if (out.initial_y_hint != Cx(0.0, 0.0))
    out.initial_y_hint = -out.initial_y_hint;
  else
    out.sheet_sign = -out.sheet_sign;
  out.label = "iota*" + path.label;
  return out;
}

double verify_analytic_rational(const PeriodMatrix& pi, const GaussMatrix& m,
                                const IntMatrix& r, double tol) {
  require(tol > 0, Err::PreconditionFailed, "tolerance must be positive");
  require(m.size() == 4 && r.size() == 8, Err::PreconditionFailed,
          "analytic side must be 4x4 and homology side 8x8");
  Eigen::Matrix4cd md;
  for (int i = 0; i < 4; ++i) {
    require(m[i].size() == 4, Err::PreconditionFailed, "analytic side must be 4x4");
    for (int j = 0; j < 4; ++j) md(i, j) = Cx(m[i][j].re.get_d(), m[i][j].im.get_d());
  }
  Eigen::Matrix<double, 8, 8> rd;
  for (int i = 0; i < 8; ++i) {
    require(r[i].size() == 8, Err::PreconditionFailed, "homology side must be 8x8");
    for (int j = 0; j < 8; ++j) rd(i, j) = double(r[i][j]);
  }
  const Eigen::Matrix<Cx, 4, 8> p = to_eigen(pi);
  const double scale = p.cwiseAbs().maxCoeff();
  require(scale > 0, Err::PreconditionFailed, "zero period matrix");
  return (md * p - p * rd.cast<Cx>()).cwiseAbs().maxCoeff() / scale;
}

RiemannReport verify_riemann_relations(const PeriodMatrix& pi, const IntMatrix& e, double tol) {
  require(tol > 0, Err::PreconditionFailed, "tolerance must be positive");
  const Eigen::Matrix<double, 8, 8> einv = integer_inverse(e);
  const Eigen::Matrix<Cx, 4, 8> p = to_eigen(pi);
  const double scale = p.cwiseAbs().maxCoeff();
  require(scale > 0, Err::PreconditionFailed, "zero period matrix");
  RiemannReport rep;
  rep.residual =
      (p * einv.cast<Cx>() * p.transpose()).cwiseAbs().maxCoeff() / (scale * scale);
  const Eigen::Matrix4cd h = Cx(0, 1) * p * einv.cast<Cx>() * p.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es((h + h.adjoint()) / 2.0);
  for (int i = 0; i < 4; ++i) rep.eigenvalues[i] = es.eigenvalues()[i];
  rep.positive = es.eigenvalues()[0] > 0;
  return rep;
}

int period_lattice_rank(const PeriodMatrix& pi) {
  Eigen::Matrix<double, 8, 8> stacked;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 8; ++c) {
      stacked(r, c) = pi.entries[r][c].real();
      stacked(r + 4, c) = pi.entries[r][c].imag();
    }
  Eigen::JacobiSVD<Eigen::Matrix<double, 8, 8>> svd(stacked);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > 1e-9 * sv[0]) ++rank;
  return rank;
}

}  // namespace q8
