#include "framedil/wavelet.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "framedil/error.hpp"
#include "framedil/rng.hpp"

namespace framedil {

namespace {

std::size_t matrix_order(const ComplexMatrix &u, double tol,
                         std::size_t cap = 4096) {
  const ComplexMatrix id = ComplexMatrix::identity(u.rows());
  ComplexMatrix pow = u;
  for (std::size_t m = 1; m <= cap; ++m) {
    if (distance_max(pow, id) <= tol) return m;
    pow = pow * u;
  }
  throw Error(ErrorKind::NotABSRepresentation,
              "operator has no finite order up to " + std::to_string(cap));
}

} // namespace

BSRepresentation make_bs_representation(ComplexMatrix dilation,
                                        ComplexMatrix translation,
                                        double tol) {
  if (!dilation.is_square() || !translation.is_square() ||
      dilation.rows() != translation.rows())
    throw Error(ErrorKind::ShapeMismatch,
                "generators must be square of equal size");
  BSRepresentation rep;
  rep.dim = dilation.rows();
  const ComplexMatrix id = ComplexMatrix::identity(rep.dim);
  if (distance_frobenius(dilation.adjoint() * dilation, id) > 1e-10 ||
      distance_frobenius(translation.adjoint() * translation, id) > 1e-10)
    throw Error(ErrorKind::NotABSRepresentation, "generators must be unitary");
  // D T D^{-1} = T^2, checked as D T = T^2 D.
  const double rel = distance_frobenius(dilation * translation,
                                        translation * (translation * dilation));
  if (rel > tol * std::max(1.0, translation.max_abs()))
    throw Error(ErrorKind::NotABSRepresentation,
                "relation residual " + std::to_string(rel));
  rep.dilation = std::move(dilation);
  rep.translation = std::move(translation);
  rep.order_d = matrix_order(rep.dilation, kAffineDedupTol);
  rep.order_t = matrix_order(rep.translation, kAffineDedupTol);
  return rep;
}

BSRepresentation bs_representation(std::size_t n) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorKind::EvenOrder,
                "model needs an odd modulus n >= 3, got " + std::to_string(n));
  ComplexMatrix t(n, n);
  for (std::size_t k = 0; k < n; ++k)
    t(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(n));
  // D e_j = e_{j/2 mod n}, i.e. D(i, 2i mod n) = 1.
  ComplexMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, (2 * i) % n) = 1.0;
  return make_bs_representation(std::move(d), std::move(t));
}

Frame AffineSystem::frame() const {
  Frame f;
  f.dim = rep.dim;
  f.vectors = vectors;
  return f;
}

namespace {

AffineSystem build_system(const BSRepresentation &rep, const CVec &psi,
                          const std::vector<AffineIndex> &indices) {
  if (psi.size() != rep.dim)
    throw Error(ErrorKind::DimMismatch, "psi length != rep dim");
  AffineSystem sys;
  sys.rep = rep;
  sys.psi = psi;

  // Powers up to the largest requested exponent.
  std::size_t max_j = 0, max_k = 0;
  for (const auto &ix : indices) {
    max_j = std::max(max_j, std::size_t(ix.j));
    max_k = std::max(max_k, std::size_t(ix.k));
  }
  std::vector<ComplexMatrix> d_pow(max_j + 1), t_pow(max_k + 1);
  d_pow[0] = ComplexMatrix::identity(rep.dim);
  for (std::size_t j = 1; j <= max_j; ++j) d_pow[j] = rep.dilation * d_pow[j - 1];
  t_pow[0] = ComplexMatrix::identity(rep.dim);
  for (std::size_t k = 1; k <= max_k; ++k)
    t_pow[k] = rep.translation * t_pow[k - 1];

  for (const auto &ix : indices) {
    ComplexMatrix op = d_pow[ix.j] * t_pow[ix.k];
    bool dup = false;
    for (const auto &seen : sys.operators)
      if (distance_max(seen, op) <= kAffineDedupTol) {
        dup = true;
        break;
      }
    if (dup) continue;
    sys.vectors.push_back(mat_apply(op, psi));
    sys.operators.push_back(std::move(op));
    sys.indices.push_back(ix);
  }
  return sys;
}

} // namespace

AffineSystem make_affine_system(const BSRepresentation &rep,
                                const CVec &psi) {
  std::vector<AffineIndex> rect;
  rect.reserve(rep.order_d * rep.order_t);
  for (unsigned j = 0; j < rep.order_d; ++j)
    for (unsigned k = 0; k < rep.order_t; ++k)
      rect.push_back(AffineIndex{j, k});
  return build_system(rep, psi, rect);
}

AffineSystem make_affine_system(const BSRepresentation &rep, const CVec &psi,
                                const std::vector<AffineIndex> &indices) {
  if (indices.empty())
    throw Error(ErrorKind::ShapeMismatch, "empty index set");
  return build_system(rep, psi, indices);
}

CommutantReport local_commutant_check(const AffineSystem &sys,
                                      const ComplexMatrix &x, double tol) {
  if (x.rows() != sys.rep.dim || x.cols() != sys.rep.dim)
    throw Error(ErrorKind::ShapeMismatch, "operator size != system dim");
  CommutantReport rep;
  const CVec x_psi = mat_apply(x, sys.psi);
  for (std::size_t i = 0; i < sys.operators.size(); ++i) {
    const double res =
        norm2(mat_apply(x, sys.vectors[i]) - mat_apply(sys.operators[i], x_psi));
    rep.max_residual = std::max(rep.max_residual, res);
    if (res > tol)
      rep.violations.push_back(
          CommutantViolation{sys.indices[i].j, sys.indices[i].k, res});
  }
  rep.pass = rep.violations.empty();
  return rep;
}

CanonicalWaveletResult canonical_parseval_wavelet(const AffineSystem &sys,
                                                  double rank_tol,
                                                  double tol) {
  const Frame f = sys.frame();
  frame_bounds(f, rank_tol); // NotAFrame when singular
  const ComplexMatrix s_inv_half =
      pseudo_inverse_sqrt(frame_operator(f), rank_tol);
  CanonicalWaveletResult out;
  out.psi1 = mat_apply(s_inv_half, sys.psi);
  out.commutant = local_commutant_check(sys, s_inv_half, tol);
  out.satisfied = out.commutant.pass;
  return out;
}

namespace {

// The distinct operators {D^j T^k} are closed under products, so matching
// products back into the list yields a finite group with identity at 0.
FiniteGroup operator_group(const std::vector<ComplexMatrix> &ops) {
  const std::size_t m = ops.size();
  std::vector<std::vector<unsigned>> table(m, std::vector<unsigned>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const ComplexMatrix prod = ops[a] * ops[b];
      bool found = false;
      for (std::size_t c = 0; c < m; ++c)
        if (distance_max(prod, ops[c]) <= kAffineDedupTol) {
          table[a][b] = unsigned(c);
          found = true;
          break;
        }
      if (!found)
        throw Error(ErrorKind::Internal,
                    "affine operator set is not closed under products");
    }
  return make_group(std::move(table));
}

std::size_t find_operator(const std::vector<ComplexMatrix> &ops,
                          const ComplexMatrix &target) {
  for (std::size_t c = 0; c < ops.size(); ++c)
    if (distance_max(ops[c], target) <= kAffineDedupTol) return c;
  throw Error(ErrorKind::Internal, "generator missing from operator set");
}

} // namespace

WaveletDilationResult dilate_frame_wavelet(const AffineSystem &sys,
                                           double rank_tol, double tol) {
  const Frame f = sys.frame();
  const FrameBounds bounds = frame_bounds(f, rank_tol); // NotAFrame

  const ComplexMatrix s = frame_operator(f);
  const ComplexMatrix s_inv_half = pseudo_inverse_sqrt(s, rank_tol);
  const CommutantReport commutant =
      local_commutant_check(sys, s_inv_half, tol);

  WaveletDilationResult result;
  if (!commutant.pass) {
    result.dilatable = false;
    result.refusal =
        WaveletRefusal{commutant.max_residual, commutant.violations};
    return result;
  }

  // Forward direction. The operator set is a finite group; dilate the orbit
  // through the trivial-multiplier projective machinery and read the
  // complementary pair off the complementary representation.
  ProjectiveRep group_rep;
  group_rep.group = operator_group(sys.operators);
  group_rep.multiplier = trivial_multiplier(group_rep.group);
  group_rep.dim = sys.rep.dim;
  group_rep.matrices = sys.operators;

  const ProjectiveDilationCertificate proj =
      dilate_projective(group_rep, sys.psi, rank_tol, tol);

  const std::size_t g_d = find_operator(sys.operators, sys.rep.dilation);
  const std::size_t g_t = find_operator(sys.operators, sys.rep.translation);

  WaveletDilationCertificate cert;
  cert.psi1 = proj.canonical_vector;
  cert.frame_operator_sqrt = proj.frame_operator_sqrt;
  cert.bounds = bounds;
  cert.tolerance = tol;
  cert.complement.dilation_prime = proj.complement_rep.matrices[g_d];
  cert.complement.translation_prime = proj.complement_rep.matrices[g_t];
  cert.complement.psi2 = proj.complement_vector;
  cert.complement.projection = proj.projection;
  cert.complement.mechanism = "group-dilation-trivial-multiplier";

  result.dilatable = true;
  result.certificate = std::move(cert);
  return result;
}

Report verify_wavelet_dilation(const AffineSystem &sys,
                               const WaveletDilationResult &result) {
  Report out;
  const Frame f = sys.frame();
  FrameBounds bounds;
  bool is_frame = true;
  try {
    bounds = frame_bounds(f);
  } catch (const Error &) {
    is_frame = false;
  }
  out.add_flag("frame_property", is_frame);
  if (!is_frame) return out;

  const ComplexMatrix s = frame_operator(f);
  const ComplexMatrix s_inv_half = pseudo_inverse_sqrt(s);

  if (!result.dilatable) {
    if (!result.refusal.has_value()) {
      out.add_flag("refusal_record_present", false);
      return out;
    }
    // A refusal is justified iff the recomputed residuals actually violate
    // the claimed tolerance at the claimed indices.
    const CommutantReport check =
        local_commutant_check(sys, s_inv_half, kDefaultTol);
    out.add_flag("refusal_justified", !check.pass,
                 "recomputed max residual " +
                     std::to_string(check.max_residual));
    out.add_flag("refusal_violations_nonempty",
                 !result.refusal->violations.empty());
    double claim_res = 0.0;
    for (const auto &v : result.refusal->violations) {
      double recomputed = -1.0;
      for (const auto &w : check.violations)
        if (w.j == v.j && w.k == v.k) recomputed = w.residual;
      claim_res = std::max(
          claim_res, recomputed < 0.0 ? 1.0 : std::abs(recomputed - v.residual));
    }
    out.add("refusal_residuals_match", claim_res,
            kDefaultTol * std::max(1.0, result.refusal->max_residual));
    return out;
  }

  if (!result.certificate.has_value()) {
    out.add_flag("certificate_present", false);
    return out;
  }
  const WaveletDilationCertificate &cert = *result.certificate;
  const double tol = cert.tolerance;
  const std::size_t dim = sys.rep.dim;
  const std::size_t m = sys.operators.size();
  const ComplexMatrix &e = cert.frame_operator_sqrt;
  const ComplexMatrix &p = cert.complement.projection;
  const ComplexMatrix &dp = cert.complement.dilation_prime;
  const ComplexMatrix &tp = cert.complement.translation_prime;

  if (e.rows() != dim || e.cols() != dim || cert.psi1.size() != dim ||
      p.rows() != m || p.cols() != m || dp.rows() != m || tp.rows() != m ||
      cert.complement.psi2.size() != m)
    throw Error(ErrorKind::ShapeMismatch,
                "certificate shapes do not match the system");

  // The local-commutant condition must hold for the certificate to exist.
  const CommutantReport commutant = local_commutant_check(sys, s_inv_half, tol);
  out.add("local_commutant_condition", commutant.max_residual, tol);

  out.add("e_is_frame_operator_sqrt",
          distance_frobenius(e, matrix_sqrt_psd(s)), tol);
  out.add("psi1_is_canonical",
          norm2(cert.psi1 - mat_apply(s_inv_half, sys.psi)), tol);
  out.add("bounds_lower", std::abs(bounds.lower - cert.bounds.lower),
          tol * std::max(1.0, bounds.upper));
  out.add("bounds_upper", std::abs(bounds.upper - cert.bounds.upper),
          tol * std::max(1.0, bounds.upper));

  // E (D^j T^k psi1) = D^j T^k psi per index.
  double interp = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const CVec lhs = mat_apply(e, mat_apply(sys.operators[i], cert.psi1));
    interp = std::max(interp, norm2(lhs - sys.vectors[i]));
  }
  out.add("dilation_moves_psi1_orbit", interp, tol);

  // sigma(E) inside [A, B] with both endpoints attained.
  {
    const SpectrumReport contain =
        spectrum_within(e, {}, bounds.sqrt_lower(), bounds.sqrt_upper(), tol);
    double outside = 0.0;
    for (double lam : contain.outside_range)
      outside = std::max(outside, std::max(bounds.sqrt_lower() - lam,
                                           lam - bounds.sqrt_upper()));
    out.add("spectrum_containment", outside, tol);
    const SpectrumReport attain = spectrum_within(
        e, {bounds.sqrt_lower(), bounds.sqrt_upper()}, bounds.sqrt_lower(),
        bounds.sqrt_upper(), 100.0 * tol);
    out.add_flag("spectrum_endpoints_attained", attain.unattained.empty());
  }

  // Complement checks on K = range(I - P).
  const ComplexMatrix i_minus_p = ComplexMatrix::identity(m) - p;
  out.add("projection_idempotent", distance_frobenius(p * p, p), tol);
  out.add("projection_hermitian", (p - p.adjoint()).frobenius_norm(), tol);
  out.add("complement_d_unitary_on_k",
          distance_frobenius(dp.adjoint() * dp, i_minus_p), tol);
  out.add("complement_t_unitary_on_k",
          distance_frobenius(tp.adjoint() * tp, i_minus_p), tol);
  // D' T' D'^* = T'^2 on K (the adjoint inverts D' there).
  out.add("complement_bs_relation",
          distance_frobenius(dp * (tp * dp.adjoint()), tp * tp), tol);

  // {(D^j T^k psi1) (+) (D'^j T'^k psi2)} is an orthonormal basis of
  // H (+) K: identity Gramian over the index set.
  std::size_t max_j = 0, max_k = 0;
  for (const auto &ix : sys.indices) {
    max_j = std::max(max_j, std::size_t(ix.j));
    max_k = std::max(max_k, std::size_t(ix.k));
  }
  std::vector<ComplexMatrix> dp_pow(max_j + 1);
  dp_pow[0] = ComplexMatrix::identity(m);
  for (std::size_t j = 1; j <= max_j; ++j) dp_pow[j] = dp * dp_pow[j - 1];
  std::vector<CVec> tp_psi2(max_k + 1);
  tp_psi2[0] = cert.complement.psi2;
  for (std::size_t k = 1; k <= max_k; ++k)
    tp_psi2[k] = mat_apply(tp, tp_psi2[k - 1]);

  std::vector<CVec> h_part(m), k_part(m);
  for (std::size_t i = 0; i < m; ++i) {
    h_part[i] = mat_apply(sys.operators[i], cert.psi1);
    k_part[i] = mat_apply(dp_pow[sys.indices[i].j], tp_psi2[sys.indices[i].k]);
  }
  ComplexMatrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      gram(i, j) = inner_product(h_part[j], h_part[i]) +
                   inner_product(k_part[j], k_part[i]);
  out.add("orthonormal_wavelet_orbit",
          distance_frobenius(gram, ComplexMatrix::identity(m)), tol);

  out.add_flag("complement_mechanism_recorded",
               !cert.complement.mechanism.empty());
  return out;
}

ComplexMatrix commutant_positive_sample(const BSRepresentation &rep,
                                        std::uint64_t seed, double rank_tol) {
  const std::size_t n = rep.dim;
  Rng rng(seed);
  ComplexMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = rng.complex_normal();
  ComplexMatrix r = w.adjoint() * w;
  // Pin the spectrum of the seed matrix into [1/2, 2] so the sample is
  // safely invertible and generically non-scalar.
  const HermitianEigen r_eig = hermitian_eig(r, 1e-6);
  const double top = std::max(r_eig.eigenvalues.back(), 1e-12);
  r *= cdouble(1.5 / top);
  r += 0.5 * ComplexMatrix::identity(n);

  // Average over the operator group: the orthogonal projection of r onto
  // the commutant, positivity preserved.
  CVec e0(n, cdouble(0.0, 0.0));
  e0[0] = 1.0;
  const AffineSystem ops = make_affine_system(rep, e0);
  ComplexMatrix s0(n, n);
  for (const auto &u : ops.operators) s0 += u * (r * u.adjoint());
  s0 *= cdouble(1.0 / double(ops.operators.size()));
  // exact Hermitian part
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = 0.5 * (s0(i, j) + std::conj(s0(j, i)));

  const HermitianEigen check = hermitian_eig(out);
  if (check.eigenvalues.front() <=
      rank_tol * std::max(1.0, check.eigenvalues.back()))
    throw Error(ErrorKind::Internal, "commutant sample is not invertible");
  return out;
}

WitnessSearchResult search_commutant_witness(const BSRepresentation &rep,
                                             std::uint64_t seed, int trials,
                                             double threshold,
                                             double rank_tol) {
  WitnessSearchResult out;
  out.trials = trials;
  Rng base(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = base.fork(std::uint64_t(trial));
    CVec psi(rep.dim);
    for (auto &z : psi) z = rng.complex_normal();
    const AffineSystem sys = make_affine_system(rep, psi);
    try {
      frame_bounds(sys.frame(), rank_tol);
    } catch (const Error &) {
      continue; // not a frame; draw again
    }
    const ComplexMatrix s_inv_half =
        pseudo_inverse_sqrt(frame_operator(sys.frame()), rank_tol);
    const CommutantReport rep_check =
        local_commutant_check(sys, s_inv_half, threshold);
    out.best_residual = std::max(out.best_residual, rep_check.max_residual);
    if (!rep_check.pass) {
      out.found = true;
      out.psi = psi;
      return out;
    }
  }
  return out;
}

} // namespace framedil
