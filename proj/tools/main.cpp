// framedil command line: generate inputs, build dilation certificates,
// verify them, and run the worked demo pipeline end to end.
//
// Exit codes: 0 success, 1 parse/validation, 2 not a frame, 3 dilation
// refused (local-commutant condition fails), 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "framedil.h"

using nlohmann::json;

namespace {

struct Options {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double rank_tol = 1e-8;
  std::string report_path;
  std::vector<std::string> argv_echo;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string fnv1a_hex(const std::string &bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class Api {
public:
  explicit Api(const Options &opt) : session_(fd_session_new()) {
    fd_session_set_seed(session_, opt.seed);
    fd_session_set_tolerance(session_, opt.tol);
    fd_session_set_rank_tolerance(session_, opt.rank_tol);
  }
  ~Api() { fd_session_free(session_); }
  Api(const Api &) = delete;
  Api &operator=(const Api &) = delete;

  std::string last_error() const { return fd_session_last_error(session_); }

  // Wraps a C call returning an owned string; copies the payload out.
  template <typename F>
  fd_status call(F &&f, std::string *payload) {
    char *out = nullptr;
    const fd_status st = f(session_, &out);
    if (out != nullptr) {
      if (payload != nullptr) *payload = out;
      fd_string_free(out);
    }
    return st;
  }

private:
  fd_session *session_;
};

json manifest_json(const Options &opt,
                   const std::map<std::string, std::string> &input_digests,
                   const std::string &outcome) {
  std::string cmd;
  for (const auto &a : opt.argv_echo) {
    if (!cmd.empty()) cmd += ' ';
    cmd += a;
  }
  json digests = json::object();
  for (const auto &[path, digest] : input_digests) digests[path] = digest;
  return json{
      {"command", cmd},
      {"inputs", digests},
      {"seed", opt.seed},
      {"tolerances", json{{"tol", opt.tol}, {"rank_tol", opt.rank_tol}}},
      {"outcome", outcome}};
}

void emit_report(const Options &opt, const json &payload,
                 const std::map<std::string, std::string> &digests,
                 const std::string &outcome) {
  if (opt.report_path.empty()) return;
  json wrapped = payload;
  wrapped["manifest"] = manifest_json(opt, digests, outcome);
  write_file(opt.report_path, wrapped.dump(2) + "\n");
}

void print_check_table(const json &report) {
  std::printf("%-40s %12s %12s  %s\n", "check", "residual", "threshold",
              "status");
  for (const auto &c : report.at("checks")) {
    std::printf("%-40s %12.3e %12.3e  %s\n",
                c.at("name").get<std::string>().c_str(),
                c.at("residual").get<double>(),
                c.at("threshold").get<double>(),
                c.at("pass").get<bool>() ? "ok" : "FAIL");
  }
}

const char *status_label(fd_status st) {
  switch (st) {
    case FD_OK: return "ok";
    case FD_ERR_PARSE: return "parse/validation error";
    case FD_ERR_NOT_A_FRAME: return "not a frame";
    case FD_REFUSED: return "refused";
    case FD_ERR_VERIFY: return "verification failed";
    case FD_ERR_ARGUMENT: return "bad argument";
    default: return "internal error";
  }
}

// ---------- gen ----------

struct GenArgs {
  std::string kind;
  std::string out;
  std::size_t dim = 3;
  std::size_t count = 6;
  std::string family = "cyclic";
  std::size_t n = 4;
  std::size_t big_n = 4;
  std::size_t a = 1;
  std::size_t b = 1;
  std::string window_kind = "spike";
  std::string psi_kind = "uniform";
  int witness_trials = 0;
};

int run_gen(Api &api, const Options &opt, const GenArgs &args) {
  json params;
  if (args.kind == "frame-random") {
    params = {{"dim", args.dim}, {"count", args.count}};
  } else if (args.kind == "group") {
    params = {{"family", args.family}, {"n", args.n}, {"dim", args.dim}};
  } else if (args.kind == "gabor") {
    params = {{"N", args.big_n},
              {"a", args.a},
              {"b", args.b},
              {"window_kind", args.window_kind}};
  } else if (args.kind == "bs") {
    params = {{"n", args.n}, {"psi_kind", args.psi_kind}};
    if (args.witness_trials > 0) params["witness_trials"] = args.witness_trials;
  } else if (args.kind == "multiplier") {
    params = {{"family", args.family},
              {"n", args.n},
              {"N", args.big_n},
              {"a", args.a},
              {"b", args.b}};
  } else {
    std::fprintf(stderr, "unknown gen kind '%s'\n", args.kind.c_str());
    return FD_ERR_PARSE;
  }

  std::string payload;
  const fd_status st = api.call(
      [&](fd_session *s, char **out) {
        return fd_generate(s, args.kind.c_str(), params.dump().c_str(), out);
      },
      &payload);
  if (st != FD_OK) {
    std::fprintf(stderr, "gen failed: %s\n", api.last_error().c_str());
    return st;
  }
  write_file(args.out, payload);
  std::printf("wrote %s\n", args.out.c_str());
  const json parsed = json::parse(payload);
  if (parsed.contains("witness_search")) {
    const auto &w = parsed["witness_search"];
    if (w.at("found").get<bool>())
      std::printf("witness found after %d trials\n", w.at("trials").get<int>());
    else
      std::printf(
          "no witness found (%d trials, best residual %.3e): every sampled "
          "frame wavelet satisfied the local-commutant condition\n",
          w.at("trials").get<int>(), w.at("best_residual").get<double>());
  }
  emit_report(opt, json{{"generated", args.out}},
              {{args.out, fnv1a_hex(payload)}}, "ok");
  return 0;
}

// ---------- analyze ----------

int run_analyze(Api &api, const Options &opt, const std::string &input) {
  const std::string text = read_file(input);
  std::string payload;
  const fd_status st = api.call(
      [&](fd_session *s, char **out) {
        return fd_analyze(s, text.c_str(), out);
      },
      &payload);
  if (st != FD_OK) {
    std::fprintf(stderr, "analyze failed: %s\n", api.last_error().c_str());
    return st;
  }
  const json r = json::parse(payload);
  std::printf("frame: %zu vectors in dimension %zu\n",
              r.at("count").get<std::size_t>(),
              r.at("dim").get<std::size_t>());
  std::printf("optimal bounds   (A^2, B^2) = (%.12g, %.12g)\n",
              r.at("lower").get<double>(), r.at("upper").get<double>());
  std::printf("square roots     (A,   B  ) = (%.12g, %.12g)\n",
              r.at("sqrt_lower").get<double>(),
              r.at("sqrt_upper").get<double>());
  std::printf("tight: %s   parseval: %s\n",
              r.at("tight").get<bool>() ? "yes" : "no",
              r.at("parseval").get<bool>() ? "yes" : "no");
  emit_report(opt, r, {{input, fnv1a_hex(text)}}, "ok");
  return 0;
}

// ---------- dilate ----------

int run_dilate(Api &api, const Options &opt, const std::string &kind,
               const std::string &input, const std::string &out) {
  const std::string text = read_file(input);
  std::string payload;
  const fd_status st = api.call(
      [&](fd_session *s, char **o) {
        return fd_dilate(s, kind.c_str(), text.c_str(), o);
      },
      &payload);
  if (st != FD_OK && st != FD_REFUSED) {
    std::fprintf(stderr, "dilate failed: %s\n", api.last_error().c_str());
    return st;
  }
  write_file(out, payload);
  if (st == FD_REFUSED) {
    const json r = json::parse(payload);
    std::printf(
        "dilation refused: S^{-1/2} is not in the local commutant "
        "(%zu violating indices, max residual %.3e); refusal record written "
        "to %s\n",
        r.at("violations").size(), r.at("max_residual").get<double>(),
        out.c_str());
  } else {
    std::printf("certificate written to %s\n", out.c_str());
  }
  emit_report(opt, json{{"certificate", out}, {"status", status_label(st)}},
              {{input, fnv1a_hex(text)}, {out, fnv1a_hex(payload)}},
              status_label(st));
  return st == FD_REFUSED ? FD_REFUSED : 0;
}

// ---------- verify ----------

int run_verify(Api &api, const Options &opt, const std::string &input,
               const std::string &cert) {
  const std::string input_text = read_file(input);
  const std::string cert_text = read_file(cert);
  std::string payload;
  const fd_status st = api.call(
      [&](fd_session *s, char **o) {
        return fd_verify(s, input_text.c_str(), cert_text.c_str(), o);
      },
      &payload);
  if (st != FD_OK && st != FD_ERR_VERIFY) {
    std::fprintf(stderr, "verify failed: %s\n", api.last_error().c_str());
    return st;
  }
  const json r = json::parse(payload);
  print_check_table(r);
  std::printf("overall: %s (max residual %.3e)\n",
              r.at("pass").get<bool>() ? "pass" : "FAIL",
              r.at("max_residual").get<double>());
  emit_report(opt, r,
              {{input, fnv1a_hex(input_text)}, {cert, fnv1a_hex(cert_text)}},
              r.at("pass").get<bool>() ? "pass" : "fail");
  return st;
}

// ---------- demo ----------

json z4_diag_demo_input() {
  json table = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back((i + j) % 4);
    table.push_back(row);
  }
  // powers of diag(1, i); entries stay exact integers
  const int re[4] = {1, 0, -1, 0};
  const int im[4] = {0, 1, 0, -1};
  json mats = json::array();
  for (int k = 0; k < 4; ++k) {
    mats.push_back(json{{"rows", 2},
                        {"cols", 2},
                        {"data", json::array({json::array({1, 0}),
                                              json::array({0, 0}),
                                              json::array({0, 0}),
                                              json::array({re[k], im[k]})})}});
  }
  const double s = 0.7071067811865476;
  return json{
      {"representation",
       json{{"group", json{{"order", 4}, {"table", table}}},
            {"dim", 2},
            {"matrices", mats}}},
      {"vector", json::array({json::array({s, 0}), json::array({s, 0})})}};
}

json pauli_demo_input() {
  json table = json::array();
  for (int g = 0; g < 4; ++g) {
    json row = json::array();
    for (int h = 0; h < 4; ++h) {
      const int a = ((g >> 1) + (h >> 1)) % 2;
      const int b = ((g & 1) + (h & 1)) % 2;
      row.push_back(a * 2 + b);
    }
    table.push_back(row);
  }
  json values = json::array();
  for (int g = 0; g < 4; ++g) {
    json row = json::array();
    for (int h = 0; h < 4; ++h) {
      const int sign = ((g & 1) * (h >> 1)) % 2 == 0 ? 1 : -1;
      row.push_back(json::array({sign, 0}));
    }
    values.push_back(row);
  }
  auto mat = [](int a00, int a01, int a10, int a11) {
    return json{{"rows", 2},
                {"cols", 2},
                {"data", json::array({json::array({a00, 0}),
                                      json::array({a01, 0}),
                                      json::array({a10, 0}),
                                      json::array({a11, 0})})}};
  };
  const json group{{"order", 4}, {"table", table}};
  return json{
      {"representation",
       json{{"group", group},
            {"dim", 2},
            {"multiplier", json{{"group", group}, {"values", values}}},
            {"matrices", json::array({
                             mat(1, 0, 0, 1),   // identity
                             mat(1, 0, 0, -1),  // Z
                             mat(0, 1, 1, 0),   // X
                             mat(0, -1, 1, 0),  // X Z
                         })}}},
      {"vector", json::array({json::array({1, 0}), json::array({0, 0})})}};
}

json gabor_demo_input() {
  const double norm = std::sqrt(1.25);
  return json{{"N", 4},
              {"a", 2},
              {"b", 1},
              {"window", json::array({json::array({1.0 / norm, 0}),
                                      json::array({0.5 / norm, 0}),
                                      json::array({0, 0}),
                                      json::array({0, 0})})}};
}

int run_demo(Api &api, const Options &opt, const std::string &out_dir) {
  struct Example {
    std::string name;
    std::string kind;
    std::string input_text;
  };
  std::vector<Example> examples;
  examples.push_back(
      {"plain", "plain",
       json{{"dim", 2},
            {"vectors", json::array({json::array({json::array({1, 0}),
                                                  json::array({0, 0})}),
                                     json::array({json::array({1, 0}),
                                                  json::array({0, 0})}),
                                     json::array({json::array({0, 0}),
                                                  json::array({1, 0})})})}}
               .dump(2) +
           "\n"});
  examples.push_back({"group", "group", z4_diag_demo_input().dump(2) + "\n"});
  examples.push_back(
      {"projective", "projective", pauli_demo_input().dump(2) + "\n"});
  examples.push_back({"gabor", "gabor", gabor_demo_input().dump(2) + "\n"});
  {
    std::string affine;
    const fd_status st = api.call(
        [&](fd_session *s, char **o) {
          return fd_generate(s, "bs", R"({"n": 3, "psi_kind": "uniform"})", o);
        },
        &affine);
    if (st != FD_OK) {
      std::fprintf(stderr, "demo setup failed: %s\n", api.last_error().c_str());
      return st;
    }
    examples.push_back({"wavelet", "wavelet", affine});
  }

  std::map<std::string, std::string> digests;
  bool all_pass = true;
  std::printf("%-12s %-10s %14s  %s\n", "example", "kind", "max residual",
              "verdict");
  for (const auto &ex : examples) {
    const std::string input_path = out_dir + "/" + ex.name + ".input.json";
    const std::string cert_path = out_dir + "/" + ex.name + ".cert.json";
    const std::string report_path = out_dir + "/" + ex.name + ".report.json";
    write_file(input_path, ex.input_text);
    digests[input_path] = fnv1a_hex(ex.input_text);

    std::string cert;
    fd_status st = api.call(
        [&](fd_session *s, char **o) {
          return fd_dilate(s, ex.kind.c_str(), ex.input_text.c_str(), o);
        },
        &cert);
    if (st != FD_OK) {
      std::printf("%-12s %-10s %14s  %s\n", ex.name.c_str(), ex.kind.c_str(),
                  "-", status_label(st));
      all_pass = false;
      continue;
    }
    write_file(cert_path, cert);
    digests[cert_path] = fnv1a_hex(cert);

    std::string report;
    st = api.call(
        [&](fd_session *s, char **o) {
          return fd_verify(s, ex.input_text.c_str(), cert.c_str(), o);
        },
        &report);
    write_file(report_path, report);
    digests[report_path] = fnv1a_hex(report);
    const json r = json::parse(report);
    const bool pass = st == FD_OK && r.at("pass").get<bool>();
    all_pass = all_pass && pass;
    std::printf("%-12s %-10s %14.3e  %s\n", ex.name.c_str(), ex.kind.c_str(),
                r.at("max_residual").get<double>(), pass ? "pass" : "FAIL");
  }

  const json manifest =
      manifest_json(opt, digests, all_pass ? "pass" : "fail");
  write_file(out_dir + "/manifest.json", manifest.dump(2) + "\n");
  std::printf("manifest written to %s/manifest.json\n", out_dir.c_str());
  emit_report(opt, json{{"examples", 5}}, digests, all_pass ? "pass" : "fail");
  return all_pass ? 0 : FD_ERR_VERIFY;
}

} // namespace

int main(int argc, char **argv) {
  Options opt;
  for (int i = 0; i < argc; ++i) opt.argv_echo.push_back(argv[i]);

  CLI::App app{"frame dilation toolkit: orthonormal dilations of plain, "
               "group, projective, Gabor and wavelet frames"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand
  app.add_option("--seed", opt.seed, "seed for all generated randomness");
  app.add_option("--tol", opt.tol, "certificate tolerance (default 1e-9)");
  app.add_option("--rank-tol", opt.rank_tol,
                 "relative rank threshold (default 1e-8)");
  app.add_option("--report", opt.report_path,
                 "write a JSON report (with run manifest) to this path");

  GenArgs gen;
  auto *gen_cmd = app.add_subcommand("gen", "generate an input file");
  gen_cmd->add_option("kind", gen.kind,
                      "frame-random | group | gabor | bs | multiplier")
      ->required();
  gen_cmd->add_option("--out", gen.out, "output path")->required();
  gen_cmd->add_option("--dim", gen.dim, "frame/representation dimension");
  gen_cmd->add_option("--count", gen.count, "number of frame vectors");
  gen_cmd->add_option("--family", gen.family,
                      "group family (cyclic, dihedral, z2xzn) or multiplier "
                      "family (trivial, pauli, gabor)");
  gen_cmd->add_option("--n", gen.n, "group order parameter / wavelet modulus");
  gen_cmd->add_option("--N", gen.big_n, "Gabor signal length");
  gen_cmd->add_option("--a", gen.a, "Gabor translation step (must divide N)");
  gen_cmd->add_option("--b", gen.b, "Gabor modulation step (must divide N)");
  gen_cmd->add_option("--window-kind", gen.window_kind,
                      "spike | box | gauss | random");
  gen_cmd->add_option("--psi-kind", gen.psi_kind,
                      "uniform | random | parseval | scaled-parseval");
  gen_cmd->add_option("--witness-trials", gen.witness_trials,
                      "rejection-sample for a local-commutant violation");

  std::string analyze_input;
  auto *analyze_cmd =
      app.add_subcommand("analyze", "frame bounds, tightness, Parseval flag");
  analyze_cmd->add_option("input", analyze_input, "frame JSON file")
      ->required();

  std::string dilate_kind, dilate_input, dilate_out;
  auto *dilate_cmd =
      app.add_subcommand("dilate", "build a dilation certificate");
  dilate_cmd
      ->add_option("--kind", dilate_kind,
                   "plain | group | projective | gabor | wavelet")
      ->required();
  dilate_cmd->add_option("input", dilate_input, "input JSON file")->required();
  dilate_cmd->add_option("--out", dilate_out, "certificate path")->required();

  std::string verify_input, verify_cert;
  auto *verify_cmd =
      app.add_subcommand("verify", "re-check a certificate against its input");
  verify_cmd->add_option("input", verify_input, "input JSON file")->required();
  verify_cmd->add_option("certificate", verify_cert, "certificate JSON file")
      ->required();

  std::string demo_dir = "demo_out";
  auto *demo_cmd = app.add_subcommand(
      "demo", "run the five worked examples end to end and print residuals");
  demo_cmd->add_option("--out-dir", demo_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  Api api(opt);
  try {
    if (gen_cmd->parsed()) return run_gen(api, opt, gen);
    if (analyze_cmd->parsed()) return run_analyze(api, opt, analyze_input);
    if (dilate_cmd->parsed())
      return run_dilate(api, opt, dilate_kind, dilate_input, dilate_out);
    if (verify_cmd->parsed())
      return run_verify(api, opt, verify_input, verify_cert);
    if (demo_cmd->parsed()) {
      std::filesystem::create_directories(demo_dir);
      return run_demo(api, opt, demo_dir);
    }
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return FD_ERR_PARSE;
  }
  return 0;
}
