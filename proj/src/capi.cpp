#include "framedil.h"

#include <cstring>
#include <string>

#include "framedil/error.hpp"
#include "framedil/json_io.hpp"
#include "framedil/rng.hpp"

using namespace framedil;

struct fd_session {
  double tol = kDefaultTol;
  double rank_tol = kDefaultRankTol;
  std::uint64_t seed = 0;
  std::string last_error;
};

namespace {

char *dup_string(const std::string &s) {
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fd_status status_of(const Error &e) {
  switch (e.kind()) {
    case ErrorKind::NotAFrame: return FD_ERR_NOT_A_FRAME;
    case ErrorKind::Internal: return FD_ERR_INTERNAL;
    default: return FD_ERR_PARSE;
  }
}

// Runs `body` (which returns the payload Json) with uniform error capture.
template <typename F>
fd_status guarded(fd_session *s, char **out, F &&body) {
  if (s == nullptr) return FD_ERR_ARGUMENT;
  s->last_error.clear();
  if (out == nullptr) {
    s->last_error = "output pointer is null";
    return FD_ERR_ARGUMENT;
  }
  *out = nullptr;
  try {
    fd_status st = FD_OK;
    const Json payload = body(st);
    *out = dup_string(dump_json(payload));
    return st;
  } catch (const Error &e) {
    s->last_error = e.what();
    return status_of(e);
  } catch (const nlohmann::json::exception &e) {
    s->last_error = std::string("ParseError: ") + e.what();
    return FD_ERR_PARSE;
  } catch (const std::exception &e) {
    s->last_error = e.what();
    return FD_ERR_INTERNAL;
  }
}

Json generate_frame_random(const Json &params, Rng &rng) {
  const std::size_t dim = params.at("dim").get<std::size_t>();
  const std::size_t count = params.at("count").get<std::size_t>();
  if (dim == 0 || count == 0)
    throw Error(ErrorKind::ParseError, "dim and count must be positive");
  return frame_to_json(random_frame(dim, count, rng));
}

Json generate_group(const Json &params, Rng &rng) {
  const std::string family = params.at("family").get<std::string>();
  Representation rep;
  if (family == "cyclic") {
    const std::size_t n = params.at("n").get<std::size_t>();
    const std::size_t dim =
        params.contains("dim") ? params.at("dim").get<std::size_t>()
                               : std::min<std::size_t>(n, 2);
    rep = cyclic_character_rep(n, dim);
  } else if (family == "dihedral") {
    rep = dihedral_standard_rep(params.at("n").get<std::size_t>());
  } else if (family == "z2xzn") {
    rep = z2_x_zn_character_rep(params.at("n").get<std::size_t>());
  } else {
    throw Error(ErrorKind::ParseError, "unknown group family '" + family + "'");
  }
  CVec f(rep.dim);
  for (auto &z : f) z = rng.complex_normal();
  return Json{{"representation", representation_to_json(rep)},
              {"vector", cvec_to_json(f)}};
}

Json generate_gabor(const Json &params, Rng &rng) {
  FiniteGaborSystem sys;
  sys.N = params.at("N").get<std::size_t>();
  sys.a = params.contains("a") ? params.at("a").get<std::size_t>() : 1;
  sys.b = params.contains("b") ? params.at("b").get<std::size_t>() : 1;
  const std::string kind = params.contains("window_kind")
                               ? params.at("window_kind").get<std::string>()
                               : "spike";
  sys.window.assign(sys.N, cdouble(0.0, 0.0));
  if (sys.N == 0) throw Error(ErrorKind::InvalidLattice, "N must be positive");
  if (kind == "spike") {
    sys.window[0] = 1.0;
  } else if (kind == "box") {
    const std::size_t width = (sys.N + 1) / 2;
    for (std::size_t k = 0; k < width; ++k) sys.window[k] = 1.0;
  } else if (kind == "gauss") {
    const double center = double(sys.N - 1) / 2.0;
    const double sigma = std::max(1.0, double(sys.N) / 4.0);
    for (std::size_t k = 0; k < sys.N; ++k) {
      const double x = (double(k) - center) / sigma;
      sys.window[k] = std::exp(-0.5 * x * x);
    }
  } else if (kind == "random") {
    for (auto &z : sys.window) z = rng.complex_normal();
  } else {
    throw Error(ErrorKind::ParseError, "unknown window kind '" + kind + "'");
  }
  validate_gabor_system(sys);
  return gabor_to_json(sys);
}

Json generate_bs(const Json &params, Rng &rng, const fd_session &s) {
  const std::size_t n = params.at("n").get<std::size_t>();
  const BSRepresentation rep = bs_representation(n);
  const std::string psi_kind = params.contains("psi_kind")
                                   ? params.at("psi_kind").get<std::string>()
                                   : "uniform";
  CVec psi(n, cdouble(0.0, 0.0));
  if (psi_kind == "uniform") {
    const double v = 1.0 / std::sqrt(double(n));
    for (auto &z : psi) z = v;
  } else if (psi_kind == "random") {
    for (auto &z : psi) z = rng.complex_normal();
  } else if (psi_kind == "parseval" || psi_kind == "scaled-parseval") {
    for (auto &z : psi) z = rng.complex_normal();
    AffineSystem sys = make_affine_system(rep, psi);
    const ComplexMatrix s_inv_half =
        pseudo_inverse_sqrt(frame_operator(sys.frame()), s.rank_tol);
    psi = mat_apply(s_inv_half, psi); // Parseval wavelet
    if (psi_kind == "scaled-parseval") {
      const ComplexMatrix s0 =
          commutant_positive_sample(rep, rng.next_u64(), s.rank_tol);
      psi = mat_apply(matrix_sqrt_psd(s0, s.rank_tol), psi);
    }
  } else {
    throw Error(ErrorKind::ParseError, "unknown psi kind '" + psi_kind + "'");
  }

  AffineSystem sys = make_affine_system(rep, psi);
  Json out = affine_system_to_json(sys);

  const int witness_trials = params.contains("witness_trials")
                                 ? params.at("witness_trials").get<int>()
                                 : 0;
  if (witness_trials > 0) {
    const WitnessSearchResult search = search_commutant_witness(
        rep, s.seed, witness_trials, 1e-4, s.rank_tol);
    out["witness_search"] = Json{{"found", search.found},
                                 {"trials", search.trials},
                                 {"best_residual", search.best_residual}};
    if (search.found) out["psi"] = cvec_to_json(search.psi);
  }
  return out;
}

Json generate_multiplier(const Json &params) {
  const std::string family = params.at("family").get<std::string>();
  if (family == "trivial") {
    const std::size_t n = params.at("n").get<std::size_t>();
    return multiplier_to_json(trivial_multiplier(cyclic_group(n)));
  }
  if (family == "pauli") return multiplier_to_json(pauli_multiplier());
  if (family == "gabor") {
    FiniteGaborSystem sys;
    sys.N = params.at("N").get<std::size_t>();
    sys.a = params.contains("a") ? params.at("a").get<std::size_t>() : 1;
    sys.b = params.contains("b") ? params.at("b").get<std::size_t>() : 1;
    sys.window.assign(sys.N, cdouble(0.0, 0.0));
    sys.window[0] = 1.0;
    return multiplier_to_json(gabor_representation(sys).multiplier);
  }
  throw Error(ErrorKind::ParseError, "unknown multiplier family '" + family +
                                         "'");
}

} // namespace

extern "C" {

fd_session *fd_session_new(void) { return new fd_session(); }

void fd_session_free(fd_session *s) { delete s; }

void fd_session_set_tolerance(fd_session *s, double tol) {
  if (s != nullptr && tol > 0.0) s->tol = tol;
}

void fd_session_set_rank_tolerance(fd_session *s, double rank_tol) {
  if (s != nullptr && rank_tol > 0.0) s->rank_tol = rank_tol;
}

void fd_session_set_seed(fd_session *s, uint64_t seed) {
  if (s != nullptr) s->seed = seed;
}

double fd_session_tolerance(const fd_session *s) {
  return s != nullptr ? s->tol : kDefaultTol;
}

double fd_session_rank_tolerance(const fd_session *s) {
  return s != nullptr ? s->rank_tol : kDefaultRankTol;
}

uint64_t fd_session_seed(const fd_session *s) {
  return s != nullptr ? s->seed : 0;
}

const char *fd_session_last_error(const fd_session *s) {
  return s != nullptr ? s->last_error.c_str() : "";
}

fd_status fd_generate(fd_session *s, const char *kind,
                      const char *params_json, char **out_json) {
  if (kind == nullptr) return FD_ERR_ARGUMENT;
  const std::string kind_str = kind;
  const std::string params_str =
      params_json != nullptr ? params_json : "{}";
  return guarded(s, out_json, [&](fd_status &) {
    const Json params = parse_json(params_str);
    Rng rng(s->seed);
    if (kind_str == "frame-random") return generate_frame_random(params, rng);
    if (kind_str == "group") return generate_group(params, rng);
    if (kind_str == "gabor") return generate_gabor(params, rng);
    if (kind_str == "bs") return generate_bs(params, rng, *s);
    if (kind_str == "multiplier") return generate_multiplier(params);
    throw Error(ErrorKind::ParseError, "unknown gen kind '" + kind_str + "'");
  });
}

fd_status fd_analyze(fd_session *s, const char *frame_json,
                     char **out_report_json) {
  if (frame_json == nullptr) return FD_ERR_ARGUMENT;
  const std::string text = frame_json;
  return guarded(s, out_report_json, [&](fd_status &) {
    const Frame f = frame_from_json(parse_json(text));
    const FrameBounds b = frame_bounds(f, s->rank_tol);
    return Json{{"dim", f.dim},
                {"count", f.count()},
                {"lower", b.lower},
                {"upper", b.upper},
                {"sqrt_lower", b.sqrt_lower()},
                {"sqrt_upper", b.sqrt_upper()},
                {"tight", b.tight()},
                {"parseval", b.parseval()}};
  });
}

fd_status fd_dilate(fd_session *s, const char *kind, const char *input_json,
                    char **out_certificate_json) {
  if (kind == nullptr || input_json == nullptr) return FD_ERR_ARGUMENT;
  const std::string kind_str = kind;
  const std::string text = input_json;
  return guarded(s, out_certificate_json, [&](fd_status &st) {
    const Json input = parse_json(text);
    if (kind_str == "plain") {
      const Frame f = frame_from_json(input);
      return dilation_certificate_to_json(
          dilate_frame(f, s->rank_tol, s->tol));
    }
    if (kind_str == "group") {
      const Representation rep =
          representation_from_json(input.at("representation"));
      const CVec f = cvec_from_json(input.at("vector"));
      return group_certificate_to_json(
          dilate_group_frame(rep, f, s->rank_tol, s->tol));
    }
    if (kind_str == "projective") {
      const ProjectiveRep rep =
          projective_rep_from_json(input.at("representation"));
      const CVec f = cvec_from_json(input.at("vector"));
      return projective_certificate_to_json(
          dilate_projective(rep, f, s->rank_tol, s->tol));
    }
    if (kind_str == "gabor") {
      const FiniteGaborSystem sys = gabor_from_json(input);
      return projective_certificate_to_json(
          gabor_dilation(sys, s->rank_tol, s->tol), "gabor");
    }
    if (kind_str == "wavelet") {
      const AffineSystem sys = affine_system_from_json(input);
      const WaveletDilationResult result =
          dilate_frame_wavelet(sys, s->rank_tol, s->tol);
      if (!result.dilatable) st = FD_REFUSED;
      return wavelet_result_to_json(result);
    }
    throw Error(ErrorKind::ParseError,
                "unknown dilation kind '" + kind_str + "'");
  });
}

fd_status fd_verify(fd_session *s, const char *input_json,
                    const char *certificate_json, char **out_report_json) {
  if (input_json == nullptr || certificate_json == nullptr)
    return FD_ERR_ARGUMENT;
  const std::string input_text = input_json;
  const std::string cert_text = certificate_json;
  return guarded(s, out_report_json, [&](fd_status &st) {
    const Json input = parse_json(input_text);
    const Json cert = parse_json(cert_text);
    const std::string kind = certificate_kind(cert);
    Report report;
    if (kind == "plain") {
      report = verify_dilation(frame_from_json(input),
                               dilation_certificate_from_json(cert));
    } else if (kind == "group") {
      report = verify_group_dilation(
          representation_from_json(input.at("representation")),
          cvec_from_json(input.at("vector")),
          group_certificate_from_json(cert));
    } else if (kind == "projective") {
      report = verify_projective_dilation(
          projective_rep_from_json(input.at("representation")),
          cvec_from_json(input.at("vector")),
          projective_certificate_from_json(cert));
    } else if (kind == "gabor") {
      const FiniteGaborSystem sys = gabor_from_json(input);
      report = verify_projective_dilation(
          gabor_representation(sys), sys.window,
          projective_certificate_from_json(cert));
    } else if (kind == "wavelet") {
      report = verify_wavelet_dilation(affine_system_from_json(input),
                                       wavelet_result_from_json(cert));
    } else {
      throw Error(ErrorKind::ParseError,
                  "unknown certificate kind '" + kind + "'");
    }
    if (!report.pass()) st = FD_ERR_VERIFY;
    return report_to_json(report);
  });
}

void fd_string_free(char *str) { delete[] str; }

const char *fd_version(void) { return "framedil 1.0.0"; }

} // extern "C"
