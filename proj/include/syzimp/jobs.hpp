#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "syzimp/ring.hpp"
#include "syzimp/rng.hpp"

namespace syzimp {

// One CLI invocation, fully parsed.  run_job never touches the process
// environment, so jobs are also directly testable in-process.
enum class Command {
  curve,
  surface_tp,
  surface_tri,
  surface_tp_1bp,
  mu_basis_cmd,
  koszul,
  saturation_check,
  strong_mu,
  numerology,
  degree_formula_cmd,
  dandrea,
};

const char* command_name(Command c);

struct Job {
  Command command = Command::curve;
  std::vector<std::string> gens;     // raw polynomial text, one per generator
  std::vector<std::string> syzygy;   // raw components (koszul)
  std::optional<int> degree;         // --degree
  std::optional<Deg> bidegree;       // --bidegree m,n
  std::vector<int> mu;               // --mu
  std::vector<int> multiplicities;   // --multiplicities
  int deg_phi = 1;                   // --deg-phi
  std::optional<int> dmax;           // --dmax (saturation window)
  std::uint64_t seed = kDefaultSeed; // --seed
  bool structured = false;           // --format structured
  bool assert_one_to_one = false;    // --assert-generically-one-to-one
};

// Ordered key/value result document.  Text mode is the stable line-oriented
// format ("key: value" lines under a version header); structured mode is the
// same fields as a single-line JSON object.
struct ResultDoc {
  using Val = std::variant<std::string, long long, bool>;
  std::vector<std::pair<std::string, Val>> fields;
  int exit_code = 0;

  std::string to_text() const;
  std::string to_json() const;
  std::string render(bool structured) const {
    return structured ? to_json() : to_text();
  }
};

// Executes the job and maps failures onto statuses and exit codes:
// ok=0, parse-error=1, precondition-failed=2, hypothesis-failed=3,
// internal-error=4.
ResultDoc run_job(const Job& job);

// Shared by the CLI and by tests: splits a comma-separated list, trimming
// surrounding whitespace from each piece.
std::vector<std::string> split_csv(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace syzimp
