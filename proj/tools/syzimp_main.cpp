// Command-line front end: one subcommand per library operation, emitting a
// stable line-oriented result document (or single-line JSON with
// --format structured) and the exit codes 0 ok / 1 parse error /
// 2 precondition failure / 3 hypothesis failure / 4 internal error.

#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "syzimp/errors.hpp"
#include "syzimp/jobs.hpp"

namespace {

struct RawArgs {
  std::string gens;
  std::string syzygy;
  std::string mu;
  std::string multiplicities;
  std::string bidegree;
  std::string format = "text";
  int degree = -1;
  bool degree_set = false;
  int deg_phi = 1;
  int dmax = -1;
  bool dmax_set = false;
  std::uint64_t seed = syzimp::kDefaultSeed;
  bool assert_one_to_one = false;
};

void add_output_options(CLI::App* sub, RawArgs& raw) {
  sub->add_option("--seed", raw.seed,
                  "Seed for the probabilistic checks and coordinate changes");
  sub->add_option("--format", raw.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

void add_gens_option(CLI::App* sub, RawArgs& raw, const char* help) {
  sub->add_option("--gens", raw.gens, help)->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact implicitization of rational curves and surfaces from syzygies "
      "(moving lines, planes, and quadrics), with basepoint and syzygy "
      "diagnostics"};
  app.require_subcommand(1);

  RawArgs raw;
  using syzimp::Command;

  auto* curve = app.add_subcommand(
      "curve", "Implicit equation of a plane curve from three binary forms");
  add_gens_option(curve, raw, "Three comma-separated binary forms in s,t");
  curve->add_option("--degree", raw.degree, "Expected generator degree")
      ->each([&](const std::string&) { raw.degree_set = true; });
  add_output_options(curve, raw);

  auto* mu = app.add_subcommand(
      "mu-basis", "Minimal-degree free generating pair of the syzygy module");
  add_gens_option(mu, raw, "Three comma-separated binary forms in s,t");
  mu->add_option("--degree", raw.degree, "Expected generator degree")
      ->each([&](const std::string&) { raw.degree_set = true; });
  add_output_options(mu, raw);

  auto* stp = app.add_subcommand(
      "surface-tp",
      "Implicit equation of a tensor-product surface (four bihomogeneous forms)");
  add_gens_option(stp, raw, "Four comma-separated bihomogeneous forms in s,u;t,v");
  stp->add_option("--bidegree", raw.bidegree, "Expected bidegree m,n");
  stp->add_flag("--assert-generically-one-to-one", raw.assert_one_to_one,
                "Acknowledge the generically one-to-one hypothesis");
  add_output_options(stp, raw);

  auto* stri = app.add_subcommand(
      "surface-tri",
      "Implicit equation of a triangular surface (four ternary forms)");
  add_gens_option(stri, raw, "Four comma-separated ternary forms in s,t,u");
  stri->add_option("--degree", raw.degree, "Expected generator degree")
      ->each([&](const std::string&) { raw.degree_set = true; });
  stri->add_flag("--assert-generically-one-to-one", raw.assert_one_to_one,
                 "Acknowledge the generically one-to-one hypothesis");
  add_output_options(stri, raw);

  auto* s1bp = app.add_subcommand(
      "surface-tp-1bp",
      "Tensor-product implicitization in the presence of one simple basepoint");
  add_gens_option(s1bp, raw, "Four comma-separated bihomogeneous forms in s,u;t,v");
  s1bp->add_option("--bidegree", raw.bidegree, "Expected bidegree m,n");
  s1bp->add_flag("--assert-generically-one-to-one", raw.assert_one_to_one,
                 "Acknowledge the generically one-to-one hypothesis");
  add_output_options(s1bp, raw);

  auto* kz = app.add_subcommand(
      "koszul", "Test whether a syzygy on three ternary forms is Koszul");
  add_gens_option(kz, raw, "Three comma-separated ternary forms in s,t,u");
  kz->add_option("--syzygy", raw.syzygy, "Three comma-separated syzygy components")
      ->required();
  kz->add_option("--degree", raw.degree, "Expected generator degree")
      ->each([&](const std::string&) { raw.degree_set = true; });
  add_output_options(kz, raw);

  auto* sat = app.add_subcommand(
      "saturation-check",
      "Degreewise comparison of an ideal with its saturation");
  add_gens_option(sat, raw, "Three or four comma-separated ternary forms");
  sat->add_option("--degree", raw.degree, "Expected generator degree")
      ->each([&](const std::string&) { raw.degree_set = true; });
  sat->add_option("--dmax", raw.dmax, "Largest degree to compare (default 2n)")
      ->each([&](const std::string&) { raw.dmax_set = true; });
  add_output_options(sat, raw);

  auto* smu = app.add_subcommand(
      "strong-mu",
      "Search for three free syzygy generators with degrees summing to n");
  add_gens_option(smu, raw, "Four comma-separated ternary forms in s,t,u");
  smu->add_option("--degree", raw.degree, "Expected generator degree")
      ->each([&](const std::string&) { raw.degree_set = true; });
  add_output_options(smu, raw);

  auto* num = app.add_subcommand(
      "numerology", "Surface degree and basepoint count from strong mu degrees");
  num->add_option("--mu", raw.mu, "Three comma-separated positive integers")
      ->required();
  add_output_options(num, raw);

  auto* dff = app.add_subcommand(
      "degree-formula",
      "Surface degree from parametrization degree, basepoint multiplicities, "
      "and the generic map degree");
  dff->add_option("--degree", raw.degree, "Parametrization degree n")
      ->each([&](const std::string&) { raw.degree_set = true; })
      ->required();
  dff->add_option("--multiplicities", raw.multiplicities,
                  "Comma-separated basepoint multiplicities (may be omitted)");
  dff->add_option("--deg-phi", raw.deg_phi, "Generic degree of the map (default 1)");
  add_output_options(dff, raw);

  auto* dnd = app.add_subcommand(
      "dandrea",
      "Moving-plane and moving-quadric determinants and their ratio after a "
      "random coordinate change");
  add_gens_option(dnd, raw, "Four comma-separated bihomogeneous forms in s,u;t,v");
  dnd->add_option("--bidegree", raw.bidegree, "Expected bidegree m,n");
  add_output_options(dnd, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 1;
  }

  syzimp::Job job;
  if (curve->parsed()) job.command = Command::curve;
  else if (mu->parsed()) job.command = Command::mu_basis_cmd;
  else if (stp->parsed()) job.command = Command::surface_tp;
  else if (stri->parsed()) job.command = Command::surface_tri;
  else if (s1bp->parsed()) job.command = Command::surface_tp_1bp;
  else if (kz->parsed()) job.command = Command::koszul;
  else if (sat->parsed()) job.command = Command::saturation_check;
  else if (smu->parsed()) job.command = Command::strong_mu;
  else if (num->parsed()) job.command = Command::numerology;
  else if (dff->parsed()) job.command = Command::degree_formula_cmd;
  else job.command = Command::dandrea;

  job.seed = raw.seed;
  job.structured = (raw.format == "structured");
  job.assert_one_to_one = raw.assert_one_to_one;
  job.deg_phi = raw.deg_phi;
  if (raw.degree_set) job.degree = raw.degree;
  if (raw.dmax_set) job.dmax = raw.dmax;
  job.gens = syzimp::split_csv(raw.gens);
  job.syzygy = syzimp::split_csv(raw.syzygy);

  syzimp::ResultDoc doc;
  try {
    if (!raw.bidegree.empty()) {
      std::vector<int> bd = syzimp::parse_int_list(raw.bidegree);
      if (bd.size() != 2)
        throw syzimp::ParseError("--bidegree expects two comma-separated integers");
      job.bidegree = syzimp::Deg{bd[0], bd[1]};
    }
    job.mu = syzimp::parse_int_list(raw.mu);
    job.multiplicities = syzimp::parse_int_list(raw.multiplicities);
    doc = syzimp::run_job(job);
  } catch (const syzimp::ParseError& e) {
    doc.exit_code = 1;
    doc.fields = {{"command", std::string(syzimp::command_name(job.command))},
                  {"status", std::string("parse-error")},
                  {"error", std::string(e.what())}};
  }
  std::fputs(doc.render(job.structured).c_str(), stdout);
  return doc.exit_code;
}
