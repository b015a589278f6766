#include "q8/torsion_lattice.hpp"

#include <algorithm>

namespace q8 {

namespace {

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size(), m = b[0].size(), inner = b.size();
  IntMatrix out(n, std::vector<long>(m, 0));
  for (size_t r = 0; r < n; ++r)
    for (size_t t = 0; t < inner; ++t) {
      if (a[r][t] == 0) continue;
      for (size_t c = 0; c < m; ++c) out[r][c] += a[r][t] * b[t][c];
    }
  return out;
}

IntMatrix int_neg(IntMatrix a) {
  for (auto& row : a)
    for (auto& v : row) v = -v;
  return a;
}

IntMatrix int_transpose(const IntMatrix& a) {
  IntMatrix out(a[0].size(), std::vector<long>(a.size()));
  for (size_t r = 0; r < a.size(); ++r)
    for (size_t c = 0; c < a[r].size(); ++c) out[c][r] = a[r][c];
  return out;
}

IntMatrix int_identity(size_t n, long scale = 1) {
  IntMatrix out(n, std::vector<long>(n, 0));
  for (size_t r = 0; r < n; ++r) out[r][r] = scale;
  return out;
}

Rational int_det(const IntMatrix& in) {
  size_t n = in.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) m[r][c] = Rational(in[r][c]);
  Rational det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (size_t t = c; t < n; ++t) m[r][t] -= f * m[c][t];
    }
  }
  return det;
}

F2Matrix mod2(const IntMatrix& a) {
  F2Matrix out(a.size());
  for (size_t r = 0; r < a.size(); ++r) {
    out[r].resize(a[r].size());
    for (size_t c = 0; c < a[r].size(); ++c) out[r][c] = int(((a[r][c] % 2) + 2) % 2);
  }
  return out;
}

F2Matrix f2_mul(const F2Matrix& a, const F2Matrix& b) {
  size_t n = a.size(), m = b[0].size(), inner = b.size();
  F2Matrix out(n, std::vector<int>(m, 0));
  for (size_t r = 0; r < n; ++r)
    for (size_t t = 0; t < inner; ++t)
      if (a[r][t])
        for (size_t c = 0; c < m; ++c) out[r][c] ^= b[t][c];
  return out;
}

const IntMatrix kRAlpha = {
    {0, -1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 0, 0, 1, 0}};

const IntMatrix kRBeta = {
    {1, 0, -1, -1, 0, 0, 0, 0}, {0, -1, -1, 1, 0, 0, 0, 0}, {1, 1, 0, -1, 0, 0, 0, 0},
    {1, -1, -1, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0, 0, 1},  {0, 0, -1, 0, 0, 0, 1, 0},
    {1, 1, 0, -1, 0, -1, 0, 0}, {1, -1, -1, 0, -1, 0, 0, 0}};

const IntMatrix kGram = {
    {0, -1, -1, 0, 0, 0, 0, 0}, {1, 0, 0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, -1, 0, 0, 0},
    {0, 1, 0, 0, 0, -1, 0, 0},  {0, 0, 1, 0, 0, 0, -1, 0}, {0, 0, 0, 1, 0, 0, 0, -1},
    {0, 0, 0, 0, 1, 0, 0, 0},   {0, 0, 0, 0, 0, 1, 0, 0}};

}  // namespace

int f2_rank(F2Matrix m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size(), rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && !m[piv][c]) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c])
        for (size_t t = c; t < cols; ++t) m[r][t] ^= m[rank][t];
    ++rank;
  }
  return int(rank);
}

TwoTorsionAction two_torsion_action(int g) {
  require(g >= 4 && g % 2 == 0, Err::PreconditionFailed, "even genus at least 4 required");
  const int d = g / 2 - 1;
  const int n = 2 * g;
  TwoTorsionAction act;
  act.g = g;
  act.basis_labels = {"1", "-1", "i", "-i"};
  std::vector<int> neg(n), inv(n);
  neg[0] = 1, neg[1] = 0, neg[2] = 3, neg[3] = 2;
  inv[0] = 0, inv[1] = 1, inv[2] = 3, inv[3] = 2;
  for (int j = 0; j < d; ++j) {
    std::string b = "b" + std::to_string(j + 1);
    act.basis_labels.push_back(b);
    act.basis_labels.push_back("-" + b);
    act.basis_labels.push_back("1/" + b);
    act.basis_labels.push_back("-1/" + b);
    int o = 4 + 4 * j;
    neg[o] = o + 1, neg[o + 1] = o, neg[o + 2] = o + 3, neg[o + 3] = o + 2;
    inv[o] = o + 2, inv[o + 1] = o + 3, inv[o + 2] = o, inv[o + 3] = o + 1;
  }
  act.alpha.assign(n, std::vector<int>(n, 0));
  act.beta.assign(n, std::vector<int>(n, 1));  // e_0 expands to the all-ones column
  for (int x = 0; x < n; ++x) {
    act.alpha[neg[x]][x] = 1;
    act.beta[inv[x]][x] ^= 1;
  }
  return act;
}

HurwitzObstruction hurwitz_obstruction(int g) {
  auto act = two_torsion_action(g);
  const size_t n = act.alpha.size();
  F2Matrix sum = f2_mul(act.alpha, act.beta);
  bool nonzero = false;
  for (size_t r = 0; r < n; ++r) {
    sum[r][r] ^= 1;  // identity term
    for (size_t c = 0; c < n; ++c) {
      sum[r][c] ^= act.alpha[r][c] ^ act.beta[r][c];
      if (sum[r][c]) nonzero = true;
    }
  }
  return {nonzero, f2_rank(sum)};
}

HomologyData homology_data() {
  HomologyData h;
  h.r_alpha = kRAlpha;
  h.r_beta = kRBeta;
  h.e = kGram;
  const GaussianRational gi = GaussianRational::i();
  h.m_alpha.assign(4, std::vector<GaussianRational>(4, GaussianRational()));
  h.m_beta.assign(4, std::vector<GaussianRational>(4, GaussianRational()));
  for (int r = 0; r < 4; ++r) {
    h.m_alpha[r][r] = (r % 2 == 0) ? gi : -gi;
    h.m_beta[r][3 - r] = gi;
  }

  const IntMatrix minus_id = int_identity(8, -1);
  require(int_mul(h.r_alpha, h.r_alpha) == minus_id, Err::InternalError,
          "homology generator square mismatch");
  require(int_mul(h.r_beta, h.r_beta) == minus_id, Err::InternalError,
          "homology generator square mismatch");
  require(int_mul(h.r_beta, h.r_alpha) == int_neg(int_mul(h.r_alpha, h.r_beta)),
          Err::InternalError, "homology generators fail to anticommute");
  for (const IntMatrix* m : {&h.r_alpha, &h.r_beta})
    require(int_mul(int_transpose(*m), int_mul(h.e, *m)) == h.e, Err::InternalError,
            "intersection form not preserved");
  require(int_det(h.e) == Rational(1), Err::InternalError, "intersection form not unimodular");

  auto gmul = [](const GaussMatrix& a, const GaussMatrix& b) {
    GaussMatrix out(4, std::vector<GaussianRational>(4, GaussianRational()));
    for (int r = 0; r < 4; ++r)
      for (int t = 0; t < 4; ++t)
        for (int c = 0; c < 4; ++c) out[r][c] += a[r][t] * b[t][c];
    return out;
  };
  GaussMatrix gminus(4, std::vector<GaussianRational>(4, GaussianRational()));
  for (int r = 0; r < 4; ++r) gminus[r][r] = GaussianRational(-1);
  require(gmul(h.m_alpha, h.m_alpha) == gminus, Err::InternalError,
          "analytic representation square mismatch");
  require(gmul(h.m_beta, h.m_beta) == gminus, Err::InternalError,
          "analytic representation square mismatch");
  auto ab = gmul(h.m_alpha, h.m_beta), ba = gmul(h.m_beta, h.m_alpha);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      require(ba[r][c] == -ab[r][c], Err::InternalError,
              "analytic representations fail to anticommute");
  return h;
}

RationalRepReport hurwitz_rational_rep() {
  auto h = homology_data();
  IntMatrix k = int_mul(h.r_alpha, h.r_beta);
  RationalRepReport rep;
  rep.matrix.assign(8, std::vector<Rational>(8));
  rep.integral = true;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      long num = (r == c ? -1 : 0) + h.r_alpha[r][c] + h.r_beta[r][c] + k[r][c];
      rep.matrix[r][c] = rat(num, 2);
      if (num % 2 != 0) rep.integral = false;
    }
  return rep;
}

NonfreenessReport nonfreeness_check(const IntMatrix& ri, const IntMatrix& rj,
                                    const IntMatrix& rk) {
  const size_t n = ri.size();
  require(n > 0 && n % 4 == 0, Err::PreconditionFailed, "lattice rank must be a multiple of 4");
  for (const IntMatrix* m : {&ri, &rj, &rk})
    require(m->size() == n && (*m)[0].size() == n, Err::PreconditionFailed,
            "generator matrices must be square of equal size");
  F2Matrix stacked(n, std::vector<int>(3 * n, 0));
  int block = 0;
  for (const IntMatrix* m : {&ri, &rj, &rk}) {
    F2Matrix red = mod2(*m);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c)
        stacked[r][block * n + c] = red[r][c] ^ (r == c ? 1 : 0);  // Id + R(q)
    ++block;
  }
  NonfreenessReport rep;
  rep.dim_jl = f2_rank(stacked);
  rep.dim_quotient = int(n) - rep.dim_jl;
  rep.verdict = (rep.dim_quotient == int(n) / 4) ? FreenessVerdict::Free
                                                 : FreenessVerdict::NotLocallyFree;
  return rep;
}

NonfreenessReport nonfreeness_check() {
  auto h = homology_data();
  return nonfreeness_check(h.r_alpha, h.r_beta, int_mul(h.r_alpha, h.r_beta));
}

std::array<IntMatrix, 3> lipschitz_regular_rep() {
  // left multiplication on the basis (1, i, j, k), then two diagonal copies
  auto embed = [](const Quaternion& q) {
    Quaternion cols[4] = {q, q * Quaternion::i(), q * Quaternion::j(), q * Quaternion::k()};
    IntMatrix m(8, std::vector<long>(8, 0));
    for (int c = 0; c < 4; ++c) {
      long col[4] = {numer(cols[c].t).get_si(), numer(cols[c].x).get_si(),
                     numer(cols[c].y).get_si(), numer(cols[c].z).get_si()};
      for (int r = 0; r < 4; ++r) {
        m[r][c] = col[r];
        m[r + 4][c + 4] = col[r];
      }
    }
    return m;
  };
  return {embed(Quaternion::i()), embed(Quaternion::j()), embed(Quaternion::k())};
}

QuaternionGram t_matrix(int gen1, int gen2) {
  auto h = homology_data();
  require(gen1 >= 0 && gen1 < 8 && gen2 >= 0 && gen2 < 8 && gen1 != gen2, Err::PreconditionFailed,
          "generator indices must be distinct and in 0..7");
  IntMatrix reps[4] = {int_identity(8), h.r_alpha, h.r_beta, int_mul(h.r_alpha, h.r_beta)};
  auto column = [&](const IntMatrix& m, int idx) {
    std::vector<long> v(8);
    for (int r = 0; r < 8; ++r) v[r] = m[r][idx];
    return v;
  };
  // the quaternion translates of both generators must span the real lattice
  IntMatrix span(8, std::vector<long>(8, 0));
  for (int q = 0; q < 4; ++q)
    for (int s = 0; s < 2; ++s) {
      auto v = column(reps[q], s == 0 ? gen1 : gen2);
      for (int r = 0; r < 8; ++r) span[r][4 * s + q] = v[r];
    }
  require(int_det(span) != Rational(0), Err::DegenerateInput,
          "generator translates do not span the lattice");

  auto pair_with = [&](int a_idx, const std::vector<long>& v) {
    long acc = 0;
    for (int r = 0; r < 8; ++r) acc += h.e[a_idx][r] * v[r];
    return acc;
  };
  QuaternionGram gram;
  gram.generators = {gen1, gen2};
  const int gens[2] = {gen1, gen2};
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      long coeff[4];
      for (int q = 0; q < 4; ++q) coeff[q] = pair_with(gens[r], column(reps[q], gens[s]));
      gram.t[r][s] =
          Quaternion(rat(coeff[0], 2), rat(coeff[1], 2), rat(coeff[2], 2), rat(coeff[3], 2));
    }
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s)
      require(gram.t[s][r].conj() == -gram.t[r][s], Err::InternalError,
              "pulled-back form is not anti-Hermitian");
  return gram;
}

QuaternionGram t_matrix() { return t_matrix(0, 5); }

}  // namespace q8
