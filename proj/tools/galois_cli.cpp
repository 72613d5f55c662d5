// galois: command-line front end.
//
// Exit codes: 0 pass, 1 checked and failed, 2 invalid input, 3 search exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "galois/galois.hpp"
#include "galois/io.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;
constexpr int kExhausted = 3;

int invalid(const std::string& msg)
{
  std::cerr << "error: " << msg << '\n';
  return kInvalid;
}

unsigned default_jobs()
{
  if (const char* env = std::getenv("GALOIS_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1)
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring GALOIS_JOBS=" << env << '\n';
  }
  return 1;
}

int run_verify_paper(std::int64_t p, const std::string& only, bool as_json)
{
  std::optional<char> filter;
  if (!only.empty()) {
    if (only.size() != 1)
      return invalid("--case must be one of a, b, c");
    filter = only[0];
  }
  galois::Report rep;
  try {
    rep = galois::verify_section(p, filter);
  } catch (const galois::UnknownCase& e) {
    return invalid(e.what());
  }
  if (as_json)
    std::cout << galois::to_json(rep).dump(2) << '\n';
  else
    std::cout << rep.text();
  return rep.passed() ? kPass : kFail;
}

struct LoadedPair
{
  galois::PairDocument doc;
  galois::Subgroup g1;
  galois::Subgroup g2;
};

LoadedPair load_pair(const std::string& path)
{
  auto doc = galois::parse_pair_document(galois::read_file(path));
  auto g1 = galois::generate_closure(doc.p, doc.g1);
  auto g2 = galois::generate_closure(doc.p, doc.g2);
  return {std::move(doc), std::move(g1), std::move(g2)};
}

int run_check_pair(const std::string& path)
{
  std::optional<LoadedPair> pair;
  try {
    pair.emplace(load_pair(path));
  } catch (const galois::Error& e) {
    return invalid(e.what());
  }
  const auto cert = galois::check_pair(pair->g1, pair->g2, pair->doc.base_point);
  std::cout << galois::to_json(cert).dump(2) << '\n';
  return cert.passed ? kPass : kFail;
}

int run_search(std::int64_t p, const std::string& k1, const std::string& k2, const std::string& strategy,
               std::uint64_t seed, std::uint64_t limit, unsigned jobs)
{
  std::optional<galois::SearchConfig> cfg;
  try {
    const auto kind1 = galois::GroupKind::parse(k1);
    const auto kind2 = galois::GroupKind::parse(k2);
    const auto strat = galois::parse_strategy(strategy);
    if (!kind1)
      return invalid("unknown --kind1 " + k1);
    if (!kind2)
      return invalid("unknown --kind2 " + k2);
    if (!strat)
      return invalid("unknown --strategy " + strategy);
    cfg.emplace(galois::PrimeModulus(p), *kind1, *kind2, *strat, seed, limit, jobs);
  } catch (const galois::Error& e) {
    return invalid(e.what());
  }
  const auto out = galois::run_search(*cfg);
  if (!out.certificate) {
    std::cout << "none\n";
    return kExhausted;
  }
  std::cout << galois::to_json(*out.certificate).dump(2) << '\n';
  return kPass;
}

int run_emit_curve(const std::string& path, const std::string& out_path)
{
  std::optional<LoadedPair> pair;
  try {
    pair.emplace(load_pair(path));
  } catch (const galois::Error& e) {
    return invalid(e.what());
  }
  const auto cert = galois::check_pair(pair->g1, pair->g2, pair->doc.base_point);
  if (!cert.passed) {
    std::string why;
    for (const auto& f : cert.failures)
      why += (why.empty() ? "" : "; ") + f;
    return invalid("pair fails the criterion: " + why);
  }
  try {
    const auto curve = galois::emit_parametrization(cert);
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      return invalid("cannot write " + out_path);
    out << galois::to_json(curve).dump(2) << '\n';
    out.close();
    const int deg = galois::implicit_degree(curve);
    std::cout << "implicit_degree " << deg << '\n';
    if (static_cast<std::uint64_t>(deg) != cert.degree) {
      std::cerr << "image degree " << deg << " differs from " << cert.degree << '\n';
      return kFail;
    }
    return kPass;
  } catch (const galois::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Pairs of Galois points for plane rational curves over F_p"};
  app.require_subcommand(1);

  std::int64_t vp_p = 0;
  std::string vp_case;
  bool vp_json = false;
  auto* vp = app.add_subcommand("verify-paper", "re-check the printed worked example for p = 11, 23 or 59");
  vp->add_option("--p", vp_p, "characteristic")->required();
  vp->add_option("--case", vp_case, "keep the items for one pair: a, b or c");
  vp->add_flag("--json", vp_json, "emit the report as JSON");

  std::string cp_path;
  auto* cp = app.add_subcommand("check-pair", "test a pair document against the two-point criterion");
  cp->add_option("input", cp_path, "pair document or certificate JSON")->required();

  std::int64_t s_p = 0;
  std::string s_k1, s_k2, s_strategy = "random";
  std::uint64_t s_seed = 0, s_limit = 1000;
  unsigned s_jobs = default_jobs();
  auto* sc = app.add_subcommand("search", "look for a passing pair of the given kinds");
  sc->add_option("--p", s_p, "characteristic")->required();
  sc->add_option("--kind1", s_k1, "A4, S4, A5, C<n> or D<n>")->required();
  sc->add_option("--kind2", s_k2, "A4, S4, A5, C<n> or D<n>")->required();
  sc->add_option("--strategy", s_strategy, "scaling, random or exhaustive-cyclic")->capture_default_str();
  sc->add_option("--seed", s_seed, "64-bit seed")->capture_default_str();
  sc->add_option("--limit", s_limit, "first-group samples to try")->capture_default_str();
  sc->add_option("--jobs", s_jobs, "parallel evaluations (default $GALOIS_JOBS or 1)");

  std::string ec_path, ec_out;
  auto* ec = app.add_subcommand("emit-curve", "write the (A:B:D) parametrization of a passing pair");
  ec->add_option("input", ec_path, "pair document or certificate JSON")->required();
  ec->add_option("--out", ec_out, "curve JSON destination")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  if (*vp)
    return run_verify_paper(vp_p, vp_case, vp_json);
  if (*cp)
    return run_check_pair(cp_path);
  if (*sc)
    return run_search(s_p, s_k1, s_k2, s_strategy, s_seed, s_limit, s_jobs);
  return run_emit_curve(ec_path, ec_out);
}
