#include "syzimp/jobs.hpp"

#include <json.hpp>

#include <exception>
#include <span>

#include "syzimp/basepoints.hpp"
#include "syzimp/errors.hpp"
#include "syzimp/form.hpp"
#include "syzimp/implicitize.hpp"
#include "syzimp/parse.hpp"
#include "syzimp/syzygy.hpp"
#include "syzimp/tpoly.hpp"

namespace syzimp {

namespace {

using Body = std::vector<std::pair<std::string, ResultDoc::Val>>;

void add(Body& body, std::string key, ResultDoc::Val val) {
  body.emplace_back(std::move(key), std::move(val));
}

void add_int(Body& body, std::string key, long long v) { add(body, std::move(key), v); }

std::string render_components(std::span<const Form> comps) {
  std::string out = "[";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ", ";
    out += render(comps[i]);
  }
  return out + "]";
}

std::string render_int_list(std::span<const int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string render_deg(const RingCtx& ctx, Deg d) {
  if (ctx.kind == RingKind::bihom)
    return std::to_string(d.a) + "," + std::to_string(d.b);
  return std::to_string(d.a);
}

// Parses the --gens list against the command's ring, checking arity and
// cross-checking any --degree/--bidegree flag.  Generators after the first
// must match the first one's degree.
std::vector<Form> parse_generators(const Job& job, const RingCtx& ctx, std::size_t arity) {
  if (job.gens.size() != arity)
    throw ParseError(std::string(command_name(job.command)) + " expects " +
                     std::to_string(arity) + " comma-separated generators (got " +
                     std::to_string(job.gens.size()) + ")");
  std::optional<Deg> expected;
  if (ctx.kind == RingKind::bihom) {
    if (job.degree) throw ParseError("--degree does not apply to bihomogeneous input; use --bidegree");
    if (job.bidegree) expected = *job.bidegree;
  } else {
    if (job.bidegree) throw ParseError("--bidegree only applies to bihomogeneous input");
    if (job.degree) expected = Deg{*job.degree, 0};
  }
  std::vector<Form> out;
  out.reserve(arity);
  for (const std::string& text : job.gens) {
    Form f = parse_form(text, ctx, expected);
    if (!expected && !f.is_zero()) expected = f.deg;
    out.push_back(std::move(f));
  }
  return out;
}

// Parses syzygy components, inferring the shared degree from the nonzero
// entries; an all-zero vector falls back to the given degree.
std::vector<Form> parse_syzygy_components(const std::vector<std::string>& texts,
                                          const RingCtx& ctx, Deg fallback) {
  std::vector<Form> first_pass;
  std::optional<Deg> sdeg;
  for (const std::string& text : texts) {
    Form f = parse_form(text, ctx, std::nullopt);
    if (!f.is_zero()) {
      if (sdeg && !(f.deg == *sdeg))
        throw PreconditionError("syzygy components disagree in degree");
      sdeg = f.deg;
    }
    first_pass.push_back(std::move(f));
  }
  if (!sdeg) sdeg = fallback;
  std::vector<Form> comps;
  comps.reserve(first_pass.size());
  for (Form& f : first_pass)
    comps.push_back(f.is_zero() ? zero_form(ctx, *sdeg) : std::move(f));
  return comps;
}

void add_surface_fields(Body& body, const ImplicitResult& res) {
  add(body, "coprime_certified", res.coprime_certified);
  if (!res.coprime_certified)
    add(body, "warning",
        std::string("could not certify that the generators are coprime; "
                    "results assume they are"));
  if (res.mp_kernel_dim >= 0) add_int(body, "mp_kernel_dim", res.mp_kernel_dim);
  if (res.mq_kernel_dim >= 0) add_int(body, "mq_kernel_dim", res.mq_kernel_dim);
  add_int(body, "matrix_size", res.matrix_size);
  add_int(body, "rows_linear", res.rows_linear);
  add_int(body, "rows_quadric", res.rows_quadric);
  add_int(body, "det_degree", res.det_poly.total_degree());
  add(body, "F", render(res.f));
  add_int(body, "d", res.d);
  add(body, "lambda", render_rational(res.lambda));
}

void dispatch_curve(const Job& job, Body& body) {
  RingCtx ctx{RingKind::binary, TargetKind::p2};
  std::vector<Form> gens = parse_generators(job, ctx, 3);
  add_int(body, "n", gens[0].deg.a);
  ImplicitResult res = implicitize_curve(gens);
  add_int(body, "matrix_size", res.matrix_size);
  add_int(body, "det_degree", res.det_poly.total_degree());
  add(body, "F", render(res.f));
  add_int(body, "d", res.d);
  add(body, "lambda", render_rational(res.lambda));
}

void dispatch_surface(const Job& job, Body& body, SurfaceKind kind) {
  const bool bihom = kind != SurfaceKind::triangular;
  RingCtx ctx{bihom ? RingKind::bihom : RingKind::ternary, TargetKind::p3};
  std::vector<Form> gens = parse_generators(job, ctx, 4);
  if (bihom) add(body, "bidegree", render_deg(ctx, gens[0].deg));
  else add_int(body, "n", gens[0].deg.a);
  add(body, "seed", std::to_string(job.seed));
  add(body, "one_to_one_asserted", job.assert_one_to_one);
  ImplicitResult res = implicitize_surface(kind, gens, job.seed);
  add_surface_fields(body, res);
}

void dispatch_mu_basis(const Job& job, Body& body) {
  RingCtx ctx{RingKind::binary, TargetKind::p2};
  std::vector<Form> gens = parse_generators(job, ctx, 3);
  add_int(body, "n", gens[0].deg.a);
  MuBasis mb = mu_basis(gens);
  add_int(body, "mu", mb.mu);
  add(body, "p", render_components(mb.p.comps));
  add(body, "q", render_components(mb.q.comps));
}

void dispatch_koszul(const Job& job, Body& body) {
  RingCtx ctx{RingKind::ternary, TargetKind::none};
  std::vector<Form> gens = parse_generators(job, ctx, 3);
  if (job.syzygy.size() != 3)
    throw ParseError("koszul expects --syzygy with 3 comma-separated components");
  add_int(body, "n", gens[0].deg.a);
  std::vector<Form> comps = parse_syzygy_components(job.syzygy, ctx, gens[0].deg);
  if (!is_syzygy(gens, comps))
    throw PreconditionError("the given vector is not a syzygy on the generators");
  SyzygyVector syz = make_syzygy(gens, comps);
  add_int(body, "syzygy_degree", syz.deg.a);
  std::optional<KoszulWitness> w = koszul_witness(gens, syz);
  add(body, "koszul", w.has_value());
  if (w) {
    const Form hs[] = {w->h1, w->h2, w->h3};
    add(body, "witness", render_components(hs));
  }
  bool vanishes = true;
  for (const Form& f : syz.comps)
    if (!vanishes_at_basepoints(gens, f)) vanishes = false;
  add(body, "vanishes_at_basepoints", vanishes);
}

void dispatch_saturation(const Job& job, Body& body) {
  RingCtx ctx{RingKind::ternary, TargetKind::none};
  if (job.gens.size() != 3 && job.gens.size() != 4)
    throw ParseError("saturation-check expects 3 or 4 comma-separated generators");
  std::vector<Form> gens = parse_generators(job, ctx, job.gens.size());
  const int n = gens[0].deg.a;
  const int dmax = job.dmax.value_or(2 * n);
  if (dmax < 0) throw ParseError("--dmax must be nonnegative");
  add_int(body, "n", n);
  add_int(body, "dmax", dmax);
  std::optional<int> gap;
  long long gap_ideal = 0, gap_sat = 0;
  for (int d = 0; d <= dmax && !gap; ++d) {
    const long long dim_ideal =
        mono_count(ctx.kind, Deg{d, 0}) - hilbert_dim(gens, Deg{d, 0});
    const long long dim_sat = (long long)saturation_piece(gens, Deg{d, 0}).size();
    if (dim_ideal != dim_sat) {
      gap = d;
      gap_ideal = dim_ideal;
      gap_sat = dim_sat;
    }
  }
  add(body, "saturated", !gap.has_value());
  if (gap) {
    add_int(body, "first_gap_degree", *gap);
    add_int(body, "ideal_dim_at_gap", gap_ideal);
    add_int(body, "saturation_dim_at_gap", gap_sat);
  }
}

void dispatch_strong_mu(const Job& job, Body& body) {
  RingCtx ctx{RingKind::ternary, TargetKind::none};
  std::vector<Form> gens = parse_generators(job, ctx, 4);
  add_int(body, "n", gens[0].deg.a);
  add(body, "seed", std::to_string(job.seed));
  const bool coprime = certified_coprime(gens, job.seed);
  add(body, "coprime_certified", coprime);
  if (!coprime)
    add(body, "warning",
        std::string("could not certify that the generators are coprime; "
                    "results assume they are"));
  std::optional<StrongMuBasis> smb = strong_mu_basis(gens);
  add(body, "found", smb.has_value());
  if (!smb) return;
  add(body, "mu", render_int_list(smb->mu));
  add(body, "hilbert_burch", hilbert_burch_check(*smb, gens));
  add(body, "p1", render_components(smb->vectors[0].comps));
  add(body, "p2", render_components(smb->vectors[1].comps));
  add(body, "p3", render_components(smb->vectors[2].comps));
  Numerology num = strong_mu_numerology(smb->mu);
  add_int(body, "surface_degree", num.surface_degree);
  add_int(body, "basepoint_sum", num.basepoint_sum);
  add(body, "bound_ok", num.bound_ok);
}

void dispatch_numerology(const Job& job, Body& body) {
  if (job.mu.size() != 3)
    throw ParseError("numerology expects --mu with 3 comma-separated integers");
  std::array<int, 3> mu{job.mu[0], job.mu[1], job.mu[2]};
  Numerology num = strong_mu_numerology(mu);
  add(body, "mu", render_int_list(mu));
  add_int(body, "n", num.n);
  add_int(body, "degree", num.surface_degree);
  add_int(body, "basepoints", num.basepoint_sum);
  add(body, "bound_ok", num.bound_ok);
}

void dispatch_degree_formula(const Job& job, Body& body) {
  if (!job.degree) throw ParseError("degree-formula requires --degree");
  BasepointData bp{job.multiplicities, *job.degree, job.deg_phi};
  long long sum = 0;
  for (int e : bp.multiplicities) sum += e;
  add_int(body, "n", bp.n);
  add_int(body, "deg_phi", bp.deg_phi);
  add_int(body, "multiplicity_sum", sum);
  add_int(body, "surface_degree", degree_formula(bp));
}

void dispatch_dandrea(const Job& job, Body& body) {
  RingCtx ctx{RingKind::bihom, TargetKind::p3};
  std::vector<Form> gens = parse_generators(job, ctx, 4);
  add(body, "bidegree", render_deg(ctx, gens[0].deg));
  add(body, "seed", std::to_string(job.seed));
  DandreaResult res = dandrea_ratio(gens, job.seed);
  add_int(body, "attempts", res.attempts);
  add(body, "det_mp", render_rational(res.det_mp));
  add(body, "det_mq_prime", render_rational(res.det_mq_prime));
  add(body, "ratio", render_rational(res.ratio));
  add(body, "verdict", std::string(res.ratio == 0 ? "zero" : "nonzero"));
  if (res.mp_singular)
    throw HypothesisError(
        "moving-plane matrix stayed singular after repeated coordinate "
        "changes; the parametrization has basepoints");
}

void dispatch(const Job& job, Body& body) {
  switch (job.command) {
    case Command::curve: dispatch_curve(job, body); return;
    case Command::surface_tp: dispatch_surface(job, body, SurfaceKind::tensor); return;
    case Command::surface_tri: dispatch_surface(job, body, SurfaceKind::triangular); return;
    case Command::surface_tp_1bp:
      dispatch_surface(job, body, SurfaceKind::tensor_one_bp);
      return;
    case Command::mu_basis_cmd: dispatch_mu_basis(job, body); return;
    case Command::koszul: dispatch_koszul(job, body); return;
    case Command::saturation_check: dispatch_saturation(job, body); return;
    case Command::strong_mu: dispatch_strong_mu(job, body); return;
    case Command::numerology: dispatch_numerology(job, body); return;
    case Command::degree_formula_cmd: dispatch_degree_formula(job, body); return;
    case Command::dandrea: dispatch_dandrea(job, body); return;
  }
  throw InternalError("unhandled command");
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::curve: return "curve";
    case Command::surface_tp: return "surface-tp";
    case Command::surface_tri: return "surface-tri";
    case Command::surface_tp_1bp: return "surface-tp-1bp";
    case Command::mu_basis_cmd: return "mu-basis";
    case Command::koszul: return "koszul";
    case Command::saturation_check: return "saturation-check";
    case Command::strong_mu: return "strong-mu";
    case Command::numerology: return "numerology";
    case Command::degree_formula_cmd: return "degree-formula";
    case Command::dandrea: return "dandrea";
  }
  return "unknown";
}

std::string ResultDoc::to_text() const {
  std::string out = "syzimp-result/1\n";
  for (const auto& [key, val] : fields) {
    out += key;
    out += ": ";
    if (const auto* s = std::get_if<std::string>(&val)) out += *s;
    else if (const auto* i = std::get_if<long long>(&val)) out += std::to_string(*i);
    else out += (std::get<bool>(val) ? "true" : "false");
    out += "\n";
  }
  return out;
}

std::string ResultDoc::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = "syzimp-result/1";
  for (const auto& [key, val] : fields) {
    if (const auto* s = std::get_if<std::string>(&val)) j[key] = *s;
    else if (const auto* i = std::get_if<long long>(&val)) j[key] = *i;
    else j[key] = std::get<bool>(val);
  }
  return j.dump() + "\n";
}

ResultDoc run_job(const Job& job) {
  Body body;
  std::string status = "ok";
  std::string error;
  int exit_code = 0;
  try {
    dispatch(job, body);
  } catch (const ParseError& e) {
    status = "parse-error";
    error = e.what();
    exit_code = 1;
  } catch (const PreconditionError& e) {
    status = "precondition-failed";
    error = e.what();
    exit_code = 2;
  } catch (const HypothesisError& e) {
    status = "hypothesis-failed";
    error = e.what();
    exit_code = 3;
  } catch (const std::exception& e) {
    status = "internal-error";
    error = e.what();
    exit_code = 4;
  }
  ResultDoc doc;
  doc.exit_code = exit_code;
  doc.fields.emplace_back("command", std::string(command_name(job.command)));
  doc.fields.emplace_back("status", status);
  if (!error.empty()) doc.fields.emplace_back("error", error);
  for (auto& f : body) doc.fields.push_back(std::move(f));
  return doc;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string piece = text.substr(start, comma - start);
    const char* ws = " \t\r\n";
    std::size_t a = piece.find_first_not_of(ws);
    std::size_t b = piece.find_last_not_of(ws);
    out.push_back(a == std::string::npos ? std::string() : piece.substr(a, b - a + 1));
    start = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& piece : split_csv(text)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

}  // namespace syzimp
