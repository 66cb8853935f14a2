#include "dmt/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <mutex>

#include "dmt/builders.hpp"
#include "dmt/hopf.hpp"
#include "dmt/random.hpp"
#include "dmt/sphere.hpp"

namespace dmt::cli {

namespace fs = std::filesystem;

namespace {

// collects input hashes while loading
struct Inputs {
  Json hashes = Json::object();
  Json load(const std::string& path) {
    std::string text = read_text_file(path);
    hashes[path] = fnv1a_hex(text);
    try {
      return parse_json(text);
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what(), e.line, e.column);
    }
  }
};

Json simplices_json(const std::vector<Simplex>& ss) {
  Json a = Json::array();
  for (const auto& s : ss) a.push_back(to_json(s));
  return a;
}

Json census_json(const CriticalPartition& p) {
  Json c = Json::object();
  for (std::size_t q = 0; q < p.critical.size(); ++q) c[std::to_string(q)] = p.critical[q].size();
  return c;
}

Json critical_json(const SimplicialComplex& k, const CriticalPartition& p) {
  Json a = Json::array();
  for (std::size_t q = 0; q < p.critical.size(); ++q)
    for (auto i : p.critical[q]) a.push_back(to_json(k.simplex(int(q), i)));
  return a;
}

Json error_json(const std::string& kind, const std::string& msg) { return Json{{"kind", kind}, {"message", msg}}; }

// runs a command body, turning exceptions into an error report
Outcome guarded(const std::string& command, Inputs& in, const std::function<Outcome(Json&)>& body) {
  Json report{{"command", command}};
  Outcome o;
  try {
    o = body(report);
  } catch (const ParseError& e) {
    o.code = exit_usage;
    report["status"] = "error";
    report["error"] = error_json("parse", e.what());
    if (e.line) report["error"]["line"] = e.line, report["error"]["column"] = e.column;
  } catch (const CollapseError& e) {
    o.code = exit_integrity;
    report["status"] = "error";
    report["error"] = error_json("collapse", e.what());
    report["error"]["remaining"] = simplices_json(e.remaining);
  } catch (const IntegrityError& e) {
    o.code = exit_integrity;
    report["status"] = "error";
    report["error"] = error_json("integrity", e.what());
  } catch (const DomainError& e) {
    o.code = exit_usage;
    report["status"] = "error";
    report["error"] = error_json("domain", e.what());
  } catch (const std::exception& e) {
    o.code = exit_integrity;
    report["status"] = "error";
    report["error"] = error_json("internal", e.what());
  }
  report["inputs"] = in.hashes;
  o.report = std::move(report);
  return o;
}

Outcome finish(Json& report, bool pass, Json witness = nullptr) {
  report["status"] = pass ? "pass" : "fail";
  if (!pass) report["witness"] = std::move(witness);
  return {report, pass ? exit_pass : exit_fail};
}

DiscreteVectorField load_field(Inputs& in, const std::string& path, const ComplexPtr& k) {
  auto pairs = pairs_from_json(in.load(path));
  return DiscreteVectorField::from_pairs(k, pairs);
}

SphereWitness witness_for(Inputs& in, const std::optional<std::string>& path, const ComplexPtr& k, const Options& opt) {
  if (path) return SphereWitness::certify(load_field(in, *path, k));
  auto w = find_sphere_witness(k, CollapseOptions{opt.backtrack_depth});
  if (!w) throw DomainError("no sphere witness found (not a pseudomanifold, or collapse got stuck)");
  return std::move(*w);
}

}  // namespace

Outcome cmd_check(const std::string& complex_path, const std::optional<std::string>& dvf_path, const Options&) {
  Inputs in;
  return guarded("check", in, [&](Json& report) {
    auto k = share(complex_from_json(in.load(complex_path)));
    Json result;
    Json counts = Json::array();
    for (int q = 0; q <= k->dim(); ++q) counts.push_back(k->count(q));
    result["dim"] = k->dim();
    result["simplex_counts"] = counts;
    auto pm = is_pseudomanifold(*k);
    result["pseudomanifold"] = Json{{"ok", pm.ok}};
    if (!pm.ok) result["pseudomanifold"]["reason"] = pm.reason, result["pseudomanifold"]["witness"] = simplices_json(pm.witness);
    DiscreteVectorField v(k);
    if (dvf_path) {
      auto pairs = pairs_from_json(in.load(*dvf_path));
      auto val = validate_dvf(*k, pairs);
      if (!val.valid) {
        report["result"] = result;
        return finish(report, false, Json{{"invalid_field", val.reason}, {"simplices", simplices_json(val.witness)}});
      }
      v = DiscreteVectorField::from_pairs(k, pairs);
    }
    auto gc = is_gradient(v);
    result["gradient"] = gc.gradient;
    if (!gc.gradient) {
      report["result"] = result;
      return finish(report, false,
                    Json{{"closed_trajectory", simplices_json(gc.cycle->faces)}, {"text", format_trajectory(*gc.cycle)}});
    }
    Json order = Json::object();
    for (std::size_t q = 0; q < gc.certificate.down_order.size(); ++q)
      order[std::to_string(q)] = gc.certificate.down_order[q];
    result["certificate"] = order;
    auto part = critical_simplices(v);
    result["census"] = census_json(part);
    result["critical"] = critical_json(*k, part);
    result["pairs"] = v.size();
    report["result"] = result;
    return finish(report, true);
  });
}

Outcome cmd_hopf(const std::string& complex_path, const std::string& dvf_path, const std::string& map, const Options&) {
  Inputs in;
  return guarded("hopf", in, [&](Json& report) {
    auto k = share(complex_from_json(in.load(complex_path)));
    GradientField v(load_field(in, dvf_path, k));
    std::optional<ChainMap> phi;
    if (map == "identity") phi = ChainMap::identity(k);
    else if (map == "zero") phi = ChainMap::zero(k, k);
    else {
      auto j = in.load(map);
      if (!j.is_object() || !j.contains("vertex_map")) throw ParseError(map + ": expected {\"vertex_map\": {...}}");
      phi = induced_chain_map(SimplicialMap(k, k, vertex_map_from_json(j.at("vertex_map"))));
    }
    auto h = verify_hopf(*phi, v);
    report["result"] = Json{{"lhs", h.lhs}, {"rhs", h.rhs}, {"equal", h.equal()}, {"map", map}};
    return finish(report, h.equal(), Json{{"lhs", h.lhs}, {"rhs", h.rhs}});
  });
}

Outcome cmd_degree(const DegreeArgs& args, const Options& opt) {
  Inputs in;
  return guarded("degree", in, [&](Json& report) {
    if (args.k < 0) throw DomainError("k must be non-negative");
    auto s = share(complex_from_json(in.load(args.sphere)));
    auto mj = in.load(args.map);
    auto w = witness_for(in, args.dvf, s, opt);
    SubdivisionTower tower{s, {}};
    std::optional<SphereWitness> w_bd;
    if (args.source_dvf) {
      tower = SubdivisionTower::build(s, args.k);
      w_bd = SphereWitness::certify(load_field(in, *args.source_dvf, tower.top()));
    } else {
      w_bd = w;
      for (int i = 0; i < args.k; ++i) {
        auto sw = sphere_witness_bd(*w_bd, CollapseOptions{opt.backtrack_depth});
        tower.levels.push_back(sw.bd);
        w_bd = std::move(sw.witness);
      }
    }
    if (!mj.is_object() || !mj.contains("vertex_map")) throw ParseError(args.map + ": expected {\"vertex_map\": {...}}");
    SimplicialMap f(tower.top(), s, vertex_map_from_json(mj.at("vertex_map")));
    Integer deg = combinatorial_degree(f, tower, *w_bd);
    auto eta = orientation_from_witness(w);
    Integer oracle = degree_oracle_preimage(f, subdivision_orientation(tower, eta), eta);
    Json result{{"degree", deg}, {"oracle_degree", oracle}, {"agree", deg == oracle}, {"k", args.k}};
    report["result"] = result;
    if (deg != oracle) throw IntegrityError("combinatorial degree " + std::to_string(deg) + " disagrees with preimage count " + std::to_string(oracle));
    if (!args.action) return finish(report, true);
    auto spec = action_from_json(in.load(*args.action));
    GroupAction a_tgt(s, spec.p, spec.generator);
    GroupAction a_src = a_tgt;
    for (const auto& level : tower.levels) a_src = induced_action_on_bd(a_src, level);
    result["p"] = spec.p;
    auto ft = a_tgt.check_free();
    auto fs_ = a_src.check_free();
    result["free"] = ft.free && fs_.free;
    if (!ft.free || !fs_.free) {
      report["result"] = result;
      return finish(report, false, Json{{"fixed_simplex", to_json(!ft.free ? ft.witness : fs_.witness)}});
    }
    auto eq = verify_equivariance(f, a_src, a_tgt);
    result["equivariant"] = eq.ok;
    if (!eq.ok) {
      report["result"] = result;
      return finish(report, false, Json{{"vertex", eq.witness}, {"f(g v)", f(a_src.apply(eq.witness))}, {"g f(v)", a_tgt.apply(f(eq.witness))}});
    }
    auto r = verify_degree_mod_p(f, tower, *w_bd, a_src, a_tgt);
    result["residue"] = r.residue;
    result["pass"] = r.pass();
    report["result"] = result;
    return finish(report, r.pass(), Json{{"degree", r.degree}, {"residue", r.residue}, {"p", r.p}});
  });
}

namespace {

struct Emitter {
  const Options& opt;
  std::string name;
  Json files = Json::array();

  void write(const std::string& suffix, const std::string& text) {
    fs::create_directories(opt.output_dir);
    auto path = (fs::path(opt.output_dir) / (name + "." + suffix + ".json")).string();
    write_text_file(path, text);
    files.push_back(path);
  }

  // every file is re-parsed and re-serialized before it is written
  ComplexPtr complex(const SimplicialComplex& k) {
    std::string text = dump_canonical(to_json(k));
    auto back = share(complex_from_json(parse_json(text)));
    if (dump_canonical(to_json(*back)) != text || !(*back == k)) throw IntegrityError("complex does not round-trip");
    write("complex", text);
    return back;
  }

  DiscreteVectorField field(const ComplexPtr& k, const DiscreteVectorField& v) {
    std::string text = dump_canonical(to_json(v));
    auto back = DiscreteVectorField::from_pairs(k, pairs_from_json(parse_json(text)));
    if (dump_canonical(to_json(back)) != text) throw IntegrityError("vector field does not round-trip");
    write("dvf", text);
    return back;
  }

  void action(const ComplexPtr& k, const GroupAction& a) {
    std::string text = dump_canonical(to_json(a));
    auto spec = action_from_json(parse_json(text));
    GroupAction back(k, spec.p, spec.generator);
    if (dump_canonical(to_json(back)) != text || !back.is_free()) throw IntegrityError("action does not round-trip");
    write("action", text);
  }
};

unsigned parse_uint(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0 || v > 100000) throw std::invalid_argument(s);
    return static_cast<unsigned>(v);
  } catch (const std::logic_error&) {
    throw DomainError(std::string("bad ") + what + ": " + s);
  }
}

// emit complex + field; for spheres the re-read witness is certified again
void emit_certified(Emitter& e, Json& result, const SimplicialComplex& k, const DiscreteVectorField& v, bool sphere) {
  auto kp = e.complex(k);
  auto back = e.field(kp, v);
  GradientField g(back);
  if (sphere) SphereWitness::certify(back);
  result["sphere_witness"] = sphere;
  result["census"] = census_json(g.partition());
  result["critical"] = critical_json(*kp, g.partition());
  result["pairs"] = back.size();
}

}  // namespace

Outcome cmd_build(const BuildArgs& args, const Options& opt) {
  Inputs in;
  return guarded("build " + args.kind, in, [&](Json& report) {
    const auto& p = args.params;
    auto need = [&](std::size_t n) {
      if (p.size() != n) throw DomainError("build " + args.kind + " takes " + std::to_string(n) + " argument(s)");
    };
    Json result;
    Emitter e{opt, args.name.value_or(args.kind)};
    CollapseOptions copt{opt.backtrack_depth};
    if (args.kind == "skeleton") {
      need(2);
      int n = int(parse_uint(p[0], "n")), q = int(parse_uint(p[1], "q"));
      if (!args.name) e.name = "skeleton-" + p[0] + "-" + p[1];
      auto k = share(skeleton_of_simplex(n, q));
      if (n >= 1 && q == n - 1) {
        auto w = sphere_skeleton_witness(n);
        emit_certified(e, result, *k, w.field().field(), true);
      } else if (q == n) {
        auto c = greedy_collapse(k, {}, copt);
        if (!c.success) throw CollapseError("full simplex did not collapse", c.remaining);
        emit_certified(e, result, *k, *c.field, false);
        result["collapsible"] = true;
      } else {
        e.complex(*k);
      }
    } else if (args.kind == "cone") {
      need(1);
      auto k = share(complex_from_json(in.load(p[0])));
      Vertex apex = args.apex.value_or(k->count(0) ? k->max_vertex() + 1 : 0);
      std::optional<ComplexWithField> cw;
      if (args.dvf) {
        cw = gvf_cone_collapse(load_field(in, *args.dvf, k), apex);
      } else {
        auto c = share(cone(apex, *k));
        auto r = greedy_collapse(c, {}, copt);
        if (!r.success) throw CollapseError("cone did not collapse greedily", r.remaining);
        cw = ComplexWithField{c, std::move(*r.field)};
      }
      result["apex"] = apex;
      emit_certified(e, result, *cw->complex, cw->field, false);
      result["collapsible"] = true;
    } else if (args.kind == "bd") {
      need(1);
      auto k = share(complex_from_json(in.load(p[0])));
      std::optional<SphereWitness> w;
      if (args.dvf) w = SphereWitness::certify(load_field(in, *args.dvf, k));
      else w = find_sphere_witness(k, copt);
      if (!w) {
        e.complex(*barycentric_subdivision(k).complex);
        result["sphere_witness"] = false;
      } else {
        auto sw = sphere_witness_bd(*w, copt);
        emit_certified(e, result, *sw.bd.complex, sw.witness.field().field(), true);
      }
    } else if (args.kind == "join") {
      need(2);
      auto a = share(complex_from_json(in.load(p[0])));
      auto b = share(complex_from_json(in.load(p[1])));
      auto wa = witness_for(in, args.dvf, a, opt);
      auto wb = witness_for(in, args.dvf_b, b, opt);
      auto jf = gvf_join(wa, wb);
      result["right_offset"] = jf.join.right_offset;
      emit_certified(e, result, *jf.complex, jf.field, true);
    } else if (args.kind == "zp-circle") {
      need(2);
      unsigned pp = parse_uint(p[0], "p"), m = parse_uint(p[1], "m");
      if (!args.name) e.name = "zp-circle-" + p[0] + "-" + p[1];
      auto z = build_zp_circle(pp, m);
      emit_certified(e, result, z.witness.complex(), z.witness.field().field(), true);
      auto kp = share(z.witness.complex());
      e.action(kp, GroupAction(kp, z.action.order(), z.action.generator()));
      result["p"] = pp;
      result["free"] = true;
    } else {
      throw DomainError("unknown build kind '" + args.kind + "'");
    }
    result["files"] = e.files;
    report["result"] = result;
    return finish(report, true);
  });
}

Outcome cmd_random_hopf(std::size_t count, const Options& opt) {
  Inputs in;
  return guarded("random-hopf", in, [&](Json& report) {
    std::vector<char> ok(count, 0);
    std::vector<Json> fail(count);
    parallel_for(count, Execution::parallel, [&](std::size_t i) {
      Rng rng(opt.seed + i);
      auto k = share(random_complex(rng));
      GradientField v(random_gradient_field(k, rng));
      auto phi = random_endomorphism(k, rng);
      auto h = verify_hopf(phi.map, v, Execution::serial);
      ok[i] = h.equal();
      if (!h.equal()) fail[i] = Json{{"trial", i}, {"kind", phi.kind}, {"lhs", h.lhs}, {"rhs", h.rhs}, {"complex", to_json(*k)}};
    });
    std::size_t equal = 0;
    Json first = nullptr;
    for (std::size_t i = 0; i < count; ++i) {
      if (ok[i]) ++equal;
      else if (first.is_null()) first = fail[i];
    }
    report["result"] = Json{{"trials", count}, {"equal", equal}, {"seed", opt.seed}};
    return finish(report, equal == count, first);
  });
}

namespace {

std::optional<std::string> opt_path(const Json& job, const char* key, const fs::path& base) {
  if (!job.contains(key)) return std::nullopt;
  return (base / job.at(key).get<std::string>()).string();
}

std::string path(const Json& job, const char* key, const fs::path& base) {
  if (!job.contains(key)) throw ParseError(std::string("batch job is missing \"") + key + "\"");
  return (base / job.at(key).get<std::string>()).string();
}

Outcome run_job(const Json& job, const fs::path& base, const Options& opt) {
  Inputs none;
  if (!job.is_object() || !job.contains("command") || !job.at("command").is_string())
    return guarded("batch-job", none, [](Json&) -> Outcome { throw ParseError("batch job needs a \"command\""); });
  const std::string cmd = job.at("command").get<std::string>();
  try {
    if (cmd == "check") return cmd_check(path(job, "complex", base), opt_path(job, "dvf", base), opt);
    if (cmd == "hopf") {
      std::string map = job.value("map", "identity");
      if (map != "identity" && map != "zero") map = (base / map).string();
      return cmd_hopf(path(job, "complex", base), path(job, "dvf", base), map, opt);
    }
    if (cmd == "degree") {
      DegreeArgs a{path(job, "complex", base), path(job, "map", base), job.value("k", 0),
                   opt_path(job, "dvf", base), opt_path(job, "source_dvf", base), opt_path(job, "action", base)};
      return cmd_degree(a, opt);
    }
    if (cmd == "random-hopf") {
      Options o = opt;
      o.seed = job.value("seed", opt.seed);
      return cmd_random_hopf(job.value("count", std::size_t(100)), o);
    }
  } catch (const std::exception& e) {
    std::string msg = e.what();
    return guarded(cmd, none, [&](Json&) -> Outcome { throw ParseError("bad batch job: " + msg); });
  }
  return guarded(cmd, none, [&](Json&) -> Outcome { throw ParseError("unknown batch command '" + cmd + "'"); });
}

}  // namespace

Outcome cmd_batch(const std::string& manifest_path, const Options& opt) {
  Inputs in;
  return guarded("batch", in, [&](Json& report) {
    Json m = in.load(manifest_path);
    if (!m.is_object() || !m.contains("jobs") || !m.at("jobs").is_array())
      throw ParseError(manifest_path + ": expected {\"jobs\": [...]}");
    const Json& jobs = m.at("jobs");
    const fs::path base = fs::path(manifest_path).parent_path();
    std::vector<Outcome> out(jobs.size());
    // jobs are independent; results keep manifest order
    parallel_for(jobs.size(), Execution::parallel, [&](std::size_t i) { out[i] = run_job(jobs[i], base, opt); });
    Json reports = Json::array();
    int worst = exit_pass;
    for (auto& o : out) {
      reports.push_back(o.report);
      worst = std::max(worst, o.code);
    }
    report["result"] = Json{{"jobs", jobs.size()}, {"reports", reports}};
    report["status"] = worst == exit_pass ? "pass" : worst == exit_fail ? "fail" : "error";
    if (worst == exit_fail) report["witness"] = "see failing job reports";
    return Outcome{report, worst};
  });
}

namespace {

void print(std::ostream& out, const Outcome& o, bool json) {
  if (json) {
    out << o.report.dump(2) << "\n";
    return;
  }
  out << o.report.value("command", "?") << ": " << o.report.value("status", "?") << "\n";
  if (o.report.contains("result")) out << o.report["result"].dump() << "\n";
  if (o.report.contains("witness")) out << "witness: " << o.report["witness"].dump() << "\n";
  if (o.report.contains("error")) out << "error: " << o.report["error"].value("message", "") << "\n";
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Morse theory, Hopf trace and combinatorial degree"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_option("--backtrack-depth", opt.backtrack_depth, "non-greedy choices allowed in collapses")->check(CLI::NonNegativeNumber);
  app.add_option("--output-dir", opt.output_dir, "where build writes files");
  app.add_flag("--json,!--no-json", opt.json, "JSON report (default) or short text");

  std::string complex_path, dvf_path, map = "identity", manifest;
  std::optional<std::string> dvf_opt;

  auto* check = app.add_subcommand("check", "pseudomanifold, gradient and critical census");
  check->add_option("complex", complex_path)->required();
  check->add_option("dvf", dvf_opt);

  auto* hopf = app.add_subcommand("hopf", "both sides of the Hopf trace formula");
  hopf->add_option("complex", complex_path)->required();
  hopf->add_option("dvf", dvf_path)->required();
  hopf->add_option("map", map, "identity, zero, or a simplicial map file");

  DegreeArgs dargs;
  auto* degree = app.add_subcommand("degree", "combinatorial degree of f: Bd^k(S) -> S");
  degree->add_option("sphere", dargs.sphere)->required();
  degree->add_option("map", dargs.map)->required();
  degree->add_option("--k", dargs.k, "subdivision depth")->check(CLI::NonNegativeNumber);
  degree->add_option("--dvf", dargs.dvf, "sphere witness on S");
  degree->add_option("--source-dvf", dargs.source_dvf, "sphere witness on Bd^k(S)");
  degree->add_option("--action", dargs.action, "Z_p action on S");

  BuildArgs bargs;
  auto* build = app.add_subcommand("build", "construct certified complexes");
  build->require_subcommand(1);
  build->add_option("--dvf", bargs.dvf, "witness for the (first) input");
  build->add_option("--dvf-b", bargs.dvf_b, "witness for the second join input");
  build->add_option("--apex", bargs.apex, "cone apex vertex id");
  build->add_option("--name", bargs.name, "output file prefix");
  for (const char* kind : {"skeleton", "cone", "bd", "join", "zp-circle"}) {
    auto* sub = build->add_subcommand(kind);
    sub->add_option("params", bargs.params)->required();
    sub->callback([&bargs, kind] { bargs.kind = kind; });
    sub->fallthrough();
  }

  std::size_t count = 100;
  auto* rh = app.add_subcommand("random-hopf", "Hopf formula on random instances");
  rh->add_option("--count", count);

  auto* batch = app.add_subcommand("batch", "run a manifest of jobs");
  batch->add_option("manifest", manifest)->required();

  for (auto* sub : {check, hopf, degree, build, rh, batch}) sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? exit_pass : exit_usage;
  }

  Outcome o;
  if (*check) o = cmd_check(complex_path, dvf_opt, opt);
  else if (*hopf) o = cmd_hopf(complex_path, dvf_path, map, opt);
  else if (*degree) o = cmd_degree(dargs, opt);
  else if (*build) o = cmd_build(bargs, opt);
  else if (*rh) o = cmd_random_hopf(count, opt);
  else o = cmd_batch(manifest, opt);
  print(out, o, opt.json);
  return o.code;
}

}  // namespace dmt::cli
