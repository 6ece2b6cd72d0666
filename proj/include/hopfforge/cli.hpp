#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hopfforge/io.hpp"
#include "hopfforge/pipeline.hpp"

namespace hopfforge::cli {

struct Options {
  std::string builtin, input, output;
  bool json = false;
  bool allow_large = false;
  std::optional<std::size_t> level, face, degeneracy;
  std::string side = "right";
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {
      "check-hopf",   "check-yd",  "rker",     "kernel-generators", "braided-hopf", "bosonise",
      "radford-iso",  "pushforward", "simplicial-check", "nerve", "linearize", "pipeline",
      "peiffer",      "extract-xmod", "moore-oracle", "check-restriction"};
  return c;
}

inline std::string command_help(const std::string& name) {
  static const std::map<std::string, std::string> h = {
      {"check-hopf", "verify the Hopf algebra axioms"},
      {"check-yd", "verify the Yetter-Drinfeld module laws"},
      {"rker", "right kernel of a projection (--side right|left|categorical|all)"},
      {"kernel-generators", "the maps f and g of a projection and their identities"},
      {"braided-hopf", "the braided Hopf algebra on the kernel of a projection"},
      {"bosonise", "bosonisation of the kernel over the small algebra"},
      {"radford-iso", "the isomorphism between a projection and its bosonised kernel"},
      {"pushforward", "move the kernel into YD over the big algebra"},
      {"simplicial-check", "simplicial identities and morphism laws"},
      {"nerve", "nerve of a group crossed module"},
      {"linearize", "linearized nerve as a simplicial Hopf algebra (--output file)"},
      {"pipeline", "iterated kernels A^1_00, A^2_00, A^2_21 of a simplicial Hopf algebra"},
      {"peiffer", "Peiffer pairing, composite against closed form"},
      {"extract-xmod", "braided crossed module from a simplicial Hopf algebra"},
      {"moore-oracle", "Moore complex of the nerve by enumeration"},
      {"check-restriction", "level 3 restrictions of d3 and s2"}};
  const auto it = h.find(name);
  return it == h.end() ? "" : it->second;
}

inline std::string error_type(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const SchemaError*>(&e)) return "SchemaError";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const UsageError*>(&e)) return "UsageError";
  if (dynamic_cast<const InvalidGroup*>(&e)) return "InvalidGroup";
  if (dynamic_cast<const InvalidCrossedModule*>(&e)) return "InvalidCrossedModule";
  if (dynamic_cast<const NotAProjection*>(&e)) return "NotAProjection";
  if (dynamic_cast<const NonInvertibleAntipode*>(&e)) return "NonInvertibleAntipode";
  if (dynamic_cast<const NonInvertibleBraiding*>(&e)) return "NonInvertibleBraiding";
  if (dynamic_cast<const CompatibilityFailed*>(&e)) return "CompatibilityFailed";
  if (dynamic_cast<const HypothesisFailed*>(&e)) return "HypothesisFailed";
  if (dynamic_cast<const NestingTooDeep*>(&e)) return "NestingTooDeep";
  if (dynamic_cast<const ClosureFailure*>(&e)) return "ClosureFailure";
  if (dynamic_cast<const IsoFailure*>(&e)) return "IsoFailure";
  return "InternalError";
}

inline int error_exit_code(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return 2;
  if (dynamic_cast<const MathError*>(&e)) return 1;
  return 3;
}

// "dim A^2_21" -> "A221"
inline std::string compact_dim_key(const std::string& key) {
  std::string s = key.substr(4);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '^' || c == '_' || c == ' '; }),
          s.end());
  return s;
}

inline Json report_json(const Report& r) {
  Json j;
  j["command"] = r.command();
  j["status"] = r.all_passed() ? "pass" : "fail";
  j["exit_code"] = r.exit_code();
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json jc{{"name", c.name}, {"status", status_name(c.status)}};
    if (c.witness)
      jc["witness"] = Json{{"row", c.witness->row}, {"col", c.witness->col},
                           {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  Json dims = Json::object(), derived = Json::object();
  for (const auto& [k, v] : r.derived()) {
    Json jv = std::visit([](const auto& x) -> Json { return Json(x); }, v);
    if (k.rfind("dim ", 0) == 0 && std::holds_alternative<std::int64_t>(v))
      dims[compact_dim_key(k)] = jv;
    else
      derived[k] = jv;
  }
  j["dims"] = std::move(dims);
  j["derived"] = std::move(derived);
  return j;
}

inline void print_value(std::ostream& out, const Value& v) {
  if (const auto* m = std::get_if<Matrix>(&v)) {
    out << "\n";
    for (const auto& row : *m) {
      out << "    [";
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
      out << "]\n";
    }
    return;
  }
  std::visit(
      [&](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, bool>) out << (x ? "true" : "false");
        else if constexpr (!std::is_same_v<std::decay_t<decltype(x)>, Matrix>) out << x;
      },
      v);
  out << "\n";
}

inline void print_human(std::ostream& out, const Report& r) {
  out << r.command() << "\n";
  for (const auto& c : r.checks()) {
    out << "  " << status_name(c.status) << "  " << c.name;
    if (c.witness)
      out << "  at (" << c.witness->row << ", " << c.witness->col << "): " << c.witness->lhs
          << " vs " << c.witness->rhs;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
  }
  for (const auto& [k, v] : r.derived()) {
    out << "  " << k << " = ";
    print_value(out, v);
  }
  std::size_t fails = 0;
  for (const auto& c : r.checks()) fails += c.status == Status::Fail;
  out << (fails ? "FAIL" : "PASS") << " (" << r.checks().size() << " checks, " << fails
      << " failed)\n";
}

// ---------------------------------------------------------------------------

struct Context {
  Options opt;
  Document doc;
  std::size_t max_dim = 512;
};

inline Document load(const Options& o, std::size_t max_dim) {
  if (o.builtin.empty() == o.input.empty())
    throw UsageError("give exactly one of --builtin <name> or --input <path>");
  ParseOptions po{o.allow_large, max_dim};
  return o.builtin.empty() ? parse_definition(o.input, po) : builtin(o.builtin, o.allow_large, max_dim);
}

inline const TruncatedSimplicialHopf& need_simplicial(const Context& c) {
  if (!c.doc.simplicial)
    throw UsageError("this command needs a simplicial document or a crossed module");
  return *c.doc.simplicial;
}

inline HopfAlgebra need_hopf(const Context& c) {
  if (c.doc.simplicial && c.opt.level) {
    if (*c.opt.level > c.doc.simplicial->top()) throw UsageError("no such level");
    return c.doc.simplicial->level(*c.opt.level);
  }
  if (c.doc.hopf) return *c.doc.hopf;
  if (c.doc.projection) return c.doc.projection->big();
  throw UsageError("this command needs a Hopf algebra (or --level on a simplicial document)");
}

inline HopfProjection need_projection(const Context& c) {
  if (c.doc.projection) return *c.doc.projection;
  if (c.doc.simplicial)
    return level_projection(*c.doc.simplicial, c.opt.level.value_or(1), c.opt.face.value_or(0),
                            c.opt.degeneracy.value_or(0));
  if (c.doc.hopf) return HopfProjection::trivial_of(*c.doc.hopf);
  throw UsageError("this command needs a projection (or a simplicial document)");
}

inline const GroupCrossedModule& need_xmod(const Context& c) {
  if (!c.doc.xmod) throw UsageError("this command needs a crossed module");
  return *c.doc.xmod;
}

inline void set_dim(Report& r, const std::string& name, std::size_t d) {
  r.set("dim " + name, static_cast<std::int64_t>(d));
}

inline Report cmd_check_hopf(const Context& c) {
  const HopfAlgebra h = need_hopf(c);
  Report r = check_hopf(h);
  r.set("algebra", h.name());
  set_dim(r, h.name(), h.dim());
  return r;
}

inline Report cmd_check_yd(const Context& c) {
  YDModule v;
  if (c.doc.yd) v = *c.doc.yd;
  else if (c.doc.projection || c.doc.simplicial) v = projection_yd(need_projection(c));
  else v = regular_yd(need_hopf(c));
  Report r = check_yd(v);
  bool invertible = true;
  try {
    yd_braiding(v, v);
  } catch (const NonInvertibleBraiding&) {
    invertible = false;
  }
  r.add(bool_check("braiding invertible", invertible));
  r.set("braiding", to_matrix(braiding(v, v)));
  return r;
}

inline Report cmd_rker(const Context& c) {
  const HopfProjection p = need_projection(c);
  Report r("rker");
  auto one = [&](KernelSide side) {
    const Subspace s = rker(p.big(), p.small(), p.proj(), side);
    set_dim(r, std::string(side_name(side)), s.dim());
    r.set(std::string(side_name(side)) + " basis", s.describe());
    r.add(bool_check(std::string(side_name(side)) + " kernel contains unit", s.contains(p.big().unit_vector())));
  };
  if (c.opt.side == "all") {
    for (KernelSide s : {KernelSide::Right, KernelSide::Left, KernelSide::Categorical}) one(s);
    r.add(info_check("sides agree", kernel_sides_agree(p.big(), p.small(), p.proj())));
  } else if (c.opt.side == "right") one(KernelSide::Right);
  else if (c.opt.side == "left") one(KernelSide::Left);
  else if (c.opt.side == "categorical") one(KernelSide::Categorical);
  else throw UsageError("--side must be right, left, categorical or all");
  return r;
}

inline Report cmd_kernel_generators(const Context& c) {
  const HopfProjection p = need_projection(c);
  KernelGenerators k = kernel_generators(p);
  Report r("kernel-generators");
  r.add(k.report);
  r.set("f", to_matrix(k.f));
  r.set("g", to_matrix(k.g));
  return r;
}

inline Report cmd_braided_hopf(const Context& c) {
  const HopfProjection p = need_projection(c);
  const RKerResult res = induced_braided_hopf(p);
  Report r("braided-hopf");
  r.add(res.report);
  r.add(check_braided_hopf(res.braided));
  set_dim(r, "B", res.subspace.dim());
  r.set("basis", res.subspace.describe());
  r.set("comul", to_matrix(res.braided.comul()));
  r.set("braiding", to_matrix(braiding(res.braided.object(), res.braided.object())));
  return r;
}

inline Report cmd_bosonise(const Context& c) {
  const HopfProjection p = need_projection(c);
  const RKerResult res = induced_braided_hopf(p);
  const HopfAlgebra b = bosonisation(res.braided);
  Report r = check_hopf(b);
  r.add(bool_check("dimension is dim B * dim H", b.dim() == res.subspace.dim() * p.small().dim()));
  set_dim(r, "bosonisation", b.dim());
  return r;
}

inline Report cmd_radford_iso(const Context& c) {
  const RadfordIso iso = radford_iso(need_projection(c));
  Report r = iso.report;
  set_dim(r, "B", iso.kernel.subspace.dim());
  set_dim(r, "bosonisation", iso.boson.dim());
  r.set("psi", to_matrix(iso.psi));
  r.set("phi", to_matrix(iso.phi));
  return r;
}

inline Report cmd_pushforward(const Context& c) {
  const HopfProjection p = need_projection(c);
  const RKerResult res = induced_braided_hopf(p);
  const YDModule& b = res.braided.object();
  const YDModule pushed = yd_pushforward(p, b);
  Report r("pushforward");
  r.add(check_yd(b), "source: ");
  r.add(check_yd(pushed), "pushed: ");
  r.add(equality_check("braiding preserved", braiding(pushed, pushed), braiding(b, b)));
  return r;
}

inline Report cmd_simplicial_check(const Context& c) {
  const TruncatedSimplicialHopf& t = need_simplicial(c);
  Report r = verify_simplicial(t);
  for (std::size_t n = 0; n <= t.top(); ++n) set_dim(r, "H" + std::to_string(n), t.level(n).dim());
  return r;
}

inline Report cmd_nerve(const Context& c) {
  const GroupCrossedModule& x = need_xmod(c);
  const TruncatedSimplicialGroup g = nerve_of_crossed_module(x, c.doc.simplicial->top());
  Report r = verify_simplicial(linearize(g), false);
  r.set_command("nerve");
  for (std::size_t n = 0; n <= g.top(); ++n)
    r.set("|G" + std::to_string(n) + "|", static_cast<std::int64_t>(g.levels[n].order()));
  return r;
}

inline Report cmd_linearize(const Context& c) {
  const TruncatedSimplicialHopf& t = need_simplicial(c);
  Report r = verify_simplicial(t);
  r.set_command("linearize");
  for (std::size_t n = 0; n <= t.top(); ++n) {
    set_dim(r, "H" + std::to_string(n), t.level(n).dim());
    r.add(bool_check("H" + std::to_string(n) + " cocommutative", check_cocommutative(t.level(n))));
  }
  if (!c.opt.output.empty()) {
    std::ofstream f(c.opt.output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + c.opt.output);
    Document d;
    d.kind = Kind::Simplicial;
    d.simplicial = t;
    f << to_json(d).dump(2) << "\n";
  }
  return r;
}

inline PipelineResult run_pipeline(const TruncatedSimplicialHopf& t) {
  // Full braided checks on H2 of size 216 would need H2^(x)3; keep them to
  // the small nerves.
  return dim2_pipeline(t, t.level(2).dim() <= 64);
}

inline Report cmd_pipeline(const Context& c) {
  const TruncatedSimplicialHopf& t = need_simplicial(c);
  Report r("pipeline");
  r.add(check_fg_commutation(t), "fg: ");
  const PipelineResult p = run_pipeline(t);
  r.add(p.report);
  for (const auto& [k, v] : p.report.derived()) r.set(k, v);
  return r;
}

inline Report cmd_peiffer(const Context& c) {
  const TruncatedSimplicialHopf& t = need_simplicial(c);
  const PipelineResult p = dim2_pipeline(t, false);
  Report r = check_peiffer(t, p);
  set_dim(r, "A^1_00", p.a100.subspace.dim());
  set_dim(r, "A^2_21", p.a221.subspace.dim());
  r.set("pairing", to_matrix(peiffer_pairing(t, p, PeifferMode::Composite)));
  return r;
}

inline Report cmd_extract_xmod(const Context& c) {
  const TruncatedSimplicialHopf& t = need_simplicial(c);
  const PipelineResult p = dim2_pipeline(t, false);
  const BraidedXMod x = extract_xmod(t, p);
  Report r = x.report;
  r.set_command("extract-xmod");
  set_dim(r, "A^1_00", p.a100.subspace.dim());
  set_dim(r, "A^2_21", p.a221.subspace.dim());
  r.set("boundary", to_matrix(x.boundary));
  return r;
}

inline Report cmd_moore_oracle(const Context& c) {
  const GroupCrossedModule& x = need_xmod(c);
  return moore_group_oracle(nerve_of_crossed_module(x, 2), x);
}

inline Report cmd_check_restriction(const Context& c) {
  const TruncatedSimplicialHopf& t = need_simplicial(c);
  const PipelineResult p = dim2_pipeline(t, false);
  const Level3Result l3 = level3_probe(t, p);
  Report r = l3.report;
  r.set_command("check-restriction");
  set_dim(r, "A^2_21", p.a221.subspace.dim());
  return r;
}

inline const std::map<std::string, std::function<Report(const Context&)>>& handlers() {
  static const std::map<std::string, std::function<Report(const Context&)>> h = {
      {"check-hopf", cmd_check_hopf},
      {"check-yd", cmd_check_yd},
      {"rker", cmd_rker},
      {"kernel-generators", cmd_kernel_generators},
      {"braided-hopf", cmd_braided_hopf},
      {"bosonise", cmd_bosonise},
      {"radford-iso", cmd_radford_iso},
      {"pushforward", cmd_pushforward},
      {"simplicial-check", cmd_simplicial_check},
      {"nerve", cmd_nerve},
      {"linearize", cmd_linearize},
      {"pipeline", cmd_pipeline},
      {"peiffer", cmd_peiffer},
      {"extract-xmod", cmd_extract_xmod},
      {"moore-oracle", cmd_moore_oracle},
      {"check-restriction", cmd_check_restriction},
  };
  return h;
}

// Runs one command; args excludes the program name. Returns the exit code.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of Hopf algebra structures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hopfforge 0.1.0");
  Options opt;
  for (const auto& name : commands()) {
    CLI::App* sub = app.add_subcommand(name, command_help(name));
    sub->add_option("--builtin", opt.builtin, "built-in fixture name");
    sub->add_option("--input", opt.input, "definition file (JSON)");
    sub->add_flag("--json", opt.json, "machine-readable report");
    sub->add_flag("--allow-large", opt.allow_large, "permit fixtures beyond the default size");
    sub->add_option("--level", opt.level, "simplicial level n");
    sub->add_option("--face", opt.face, "face index j");
    sub->add_option("--degeneracy", opt.degeneracy, "degeneracy index k");
    if (name == "rker") sub->add_option("--side", opt.side, "right, left, categorical or all");
    if (name == "linearize") sub->add_option("--output", opt.output, "write the simplicial JSON here");
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << "hopfforge 0.1.0\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  Context ctx;
  ctx.opt = opt;
  try {
    ctx.max_dim = max_dim_from_env();
    ctx.doc = load(opt, ctx.max_dim);
    Report r = handlers().at(command)(ctx);
    r.set_command(command);
    if (opt.json) out << report_json(r).dump(2) << "\n";
    else print_human(out, r);
    return r.exit_code();
  } catch (const std::exception& e) {
    const int code = error_exit_code(e);
    if (opt.json) {
      Json j{{"command", command},
             {"status", "error"},
             {"exit_code", code},
             {"error", Json{{"type", error_type(e)}, {"message", e.what()}}}};
      out << j.dump(2) << "\n";
    }
    err << error_type(e) << ": " << e.what() << "\n";
    return code;
  }
}

}  // namespace hopfforge::cli
