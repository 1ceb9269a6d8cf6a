// Command-line front end: wall/chamber decompositions, pair stability,
// beta reports, K-moduli wall tables, candidate subgroups, centroid tests.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kmoduli/atlas.hpp"
#include "kmoduli/binary.hpp"
#include "kmoduli/config.hpp"
#include "kmoduli/errors.hpp"
#include "kmoduli/git.hpp"
#include "kmoduli/logpair.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using json = nlohmann::json;
using namespace kmoduli;

constexpr const char* tool_version = "0.1.0";

enum exit_code : int { ok = 0, input_error = 2, budget_exceeded = 3, model_inconsistent = 4 };

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct emitter {
  std::string out_path;
  std::string command;
  std::string input_path;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const std::string& payload) const {
    if (out_path.empty()) {
      std::cout << payload;
      if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
      return;
    }
    {
      std::ofstream out(out_path);
      out << payload;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    json manifest;
    manifest["command"] = command;
    manifest["tool_version"] = tool_version;
    if (!input_path.empty())
      manifest["input_digest"] = "fnv1a:" + std::to_string(fnv1a(slurp(input_path)));
    manifest["elapsed_ms"] = ms;
    manifest["outputs"] = json::array({out_path});
    std::ofstream mf(out_path + ".manifest.json");
    mf << manifest.dump(2) << "\n";
  }
};

git_problem problem_from_file(const std::string& path, int cap) {
  json j = load_structured_file(path);
  git_problem p;
  std::string kind = j.value("kind", "hypersurface-pair");
  if (kind == "hypersurface-pair")
    p.kind = git_problem::kind_t::hypersurface_pair;
  else if (kind == "plucker-pair")
    p.kind = git_problem::kind_t::plucker_pair;
  else
    throw parse_error("unknown problem kind '" + kind + "'");
  p.n = static_cast<int>(j.at("n").get<long long>());
  p.d = static_cast<int>(j.at("d").get<long long>());
  p.e = static_cast<int>(j.at("e").get<long long>());
  if (cap > 0) p.cap = cap;
  return p;
}

json rational_json(const rat& r) { return json(rat_str(r)); }

json family_json(const destabilizing_family& f) {
  json jf;
  jf["lambda"] = f.lambda.weights;
  jf["pivot"] = f.pivot;
  json fm = json::array();
  for (const auto& m : f.f_monomials) fm.push_back(m);
  jf["f_monomials"] = fm;
  json hm = json::array();
  for (const auto& m : f.h_monomials) hm.push_back(m);
  jf["h_monomials"] = hm;
  return jf;
}

json decomposition_json(const wall_chamber_decomposition_t& dec) {
  json j;
  j["problem"]["kind"] = dec.problem.kind == git_problem::kind_t::plucker_pair
                             ? "plucker-pair"
                             : "hypersurface-pair";
  j["problem"]["n"] = dec.problem.n;
  j["problem"]["d"] = dec.problem.d;
  j["problem"]["e"] = dec.problem.e;
  json walls = json::array();
  for (const auto& w : dec.walls) walls.push_back(rat_str(w));
  j["walls"] = walls;
  j["t_max"] = dec.t_max ? json(rat_str(*dec.t_max)) : json("inf");
  json chambers = json::array();
  for (const auto& ch : dec.chambers) {
    json jc;
    jc["interval"] = json::array(
        {rat_str(ch.t_lo), ch.t_hi ? json(rat_str(*ch.t_hi)) : json("inf")});
    json fams = json::array();
    for (const auto& f : ch.maximal_families) fams.push_back(family_json(f));
    jc["maximal_families"] = fams;
    chambers.push_back(jc);
  }
  j["chambers"] = chambers;
  return j;
}

std::string decomposition_markdown(const wall_chamber_decomposition_t& dec) {
  std::ostringstream md;
  md << "| |";
  for (std::size_t i = 0; i <= dec.walls.size() + 1; ++i) md << " t_" << i << " |";
  md << "\n|---|";
  for (std::size_t i = 0; i <= dec.walls.size() + 1; ++i) md << "---|";
  md << "\n| walls | 0 |";
  for (const auto& w : dec.walls) md << " " << rat_str(w) << " |";
  md << " " << (dec.t_max ? rat_str(*dec.t_max) : "inf") << " |";
  md << "\n| chambers |";
  for (const auto& ch : dec.chambers)
    md << " (" << rat_str(ch.t_lo) << ", " << (ch.t_hi ? rat_str(*ch.t_hi) : "inf") << ") |";
  md << " |\n\n";
  md << "Maximal destabilizing families per chamber:\n\n";
  for (const auto& ch : dec.chambers) {
    md << "- (" << rat_str(ch.t_lo) << ", " << (ch.t_hi ? rat_str(*ch.t_hi) : "inf") << "): ";
    bool first = true;
    for (const auto& f : ch.maximal_families) {
      if (!first) md << ", ";
      first = false;
      md << f.lambda.str() << "@p" << f.pivot;
    }
    md << "\n";
  }
  return md.str();
}

binary_form form_from_json(const json& j, int deg) {
  binary_form f;
  if (j.is_array()) {
    for (const auto& v : j)
      f.coeffs.push_back(v.is_string() ? rat_parse(v.get<std::string>())
                                       : rat(v.get<long long>()));
    if (static_cast<int>(f.coeffs.size()) != deg + 1)
      throw parse_error("coefficient array length must be degree + 1");
    return f;
  }
  if (j.is_object()) {
    std::map<int, rat> sparse;
    for (auto it = j.begin(); it != j.end(); ++it)
      sparse[std::stoi(it.key())] = it.value().is_string()
                                        ? rat_parse(it.value().get<std::string>())
                                        : rat(it.value().get<long long>());
    return binary_form::from_sparse(deg, sparse);
  }
  throw parse_error("form must be a coefficient array or a sparse exponent map");
}

pair_support support_from_json(const json& j) {
  pair_support ps;
  for (const auto& m : j.at("f_support")) {
    ivec e;
    for (const auto& v : m) e.push_back(v.get<long long>());
    ps.f_support.push_back(e);
  }
  for (const auto& m : j.at("h_support")) {
    ivec e;
    for (const auto& v : m) e.push_back(v.get<long long>());
    ps.h_support.push_back(e);
  }
  return ps;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact VGIT wall/chamber and K-stability engine for del Pezzo pairs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string out_path;
  std::string data_dir;
  app.add_option("--format", format, "Output format: json or md")->check(CLI::IsMember({"json", "md"}));
  app.add_option("-o,--output", out_path, "Write the primary output to a file (with manifest)");
  app.add_option("--data-dir", data_dir, "Override the bundled data directory");

  // walls
  auto* walls_cmd = app.add_subcommand("walls", "Wall/chamber decomposition of a pair problem");
  std::string walls_file;
  int cap = 0;
  walls_cmd->add_option("problem", walls_file, "Problem descriptor (TOML/JSON)")->required();
  walls_cmd->add_option("--cap", cap, "Monomial budget cap");

  // stability
  auto* stab_cmd = app.add_subcommand("stability", "Stability of an explicit pair");
  std::string stab_file, stab_at = "1";
  stab_cmd->add_option("pair", stab_file, "Pair file (TOML/JSON)")->required();
  stab_cmd->add_option("--at", stab_at, "Polarization parameter t");

  // beta
  auto* beta_cmd = app.add_subcommand("beta", "A, S and beta of a bundled or user configuration");
  std::string beta_file, beta_at;
  beta_cmd->add_option("config", beta_file, "Configuration name or path")->required();
  beta_cmd->add_option("--at", beta_at, "Evaluate the report at a rational coefficient");

  // kwalls
  auto* kwalls_cmd = app.add_subcommand("kwalls", "K-moduli wall table for degree d");
  int kw_d = 0;
  std::string kw_variant;
  bool no_compute = false, plucker = false;
  kwalls_cmd->add_option("d", kw_d, "Degree (2..9)")->required();
  kwalls_cmd->add_option("--variant", kw_variant, "Degree-8 model: p1xp1 or blowup");
  kwalls_cmd->add_flag("--no-compute", no_compute, "Serve the golden tables only");
  kwalls_cmd->add_flag("--experimental-plucker", plucker,
                       "Compute the degree-4 walls from the pencil GIT problem");

  // candidates
  auto* cand_cmd = app.add_subcommand("candidates", "Candidate one-parameter subgroups");
  std::string cand_file;
  int cand_cap = 0;
  cand_cmd->add_option("problem", cand_file, "Problem descriptor (TOML/JSON)")->required();
  cand_cmd->add_option("--cap", cand_cap, "Monomial budget cap");

  // centroid
  auto* cent_cmd = app.add_subcommand("centroid", "Torus semistability via the centroid test");
  std::string cent_file, cent_at = "1";
  cent_cmd->add_option("pair", cent_file, "Support-pair file (TOML/JSON)")->required();
  cent_cmd->add_option("--at", cent_at, "Polarization parameter t");

  CLI11_PARSE(app, argc, argv);

  emitter em;
  em.out_path = out_path;
  {
    std::ostringstream cmd;
    for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
    em.command = cmd.str();
  }

  if (walls_cmd->parsed()) {
    em.input_path = walls_file;
    auto p = problem_from_file(walls_file, cap);
    auto dec = wall_chamber_decomposition(p);
    em.emit(format == "md" ? decomposition_markdown(dec) : decomposition_json(dec).dump(2));
    return ok;
  }

  if (stab_cmd->parsed()) {
    em.input_path = stab_file;
    json j = load_structured_file(stab_file);
    rat t = rat_parse(stab_at);
    std::string kind = j.value("kind", "binary-pair");
    json out;
    if (kind == "binary-pair") {
      int d = static_cast<int>(j.at("d").get<long long>());
      int e = static_cast<int>(j.at("e").get<long long>());
      auto f = form_from_json(j.at("f"), d);
      auto h = form_from_json(j.at("h"), e);
      out["status"] = to_string(binary_pair_status(f, h, t));
      out["scope"] = "complete";
    } else if (kind == "support-pair") {
      auto ps = support_from_json(j);
      out["status"] = centroid_semistable(ps, t) ? "torus-semistable" : "torus-unstable";
      out["scope"] = "torus verdict in the given coordinates";
    } else {
      throw parse_error("unknown pair kind '" + kind + "'");
    }
    out["t"] = rat_str(t);
    em.emit(out.dump(2));
    return ok;
  }

  if (beta_cmd->parsed()) {
    auto cfg = load_pair_config(beta_file, data_dir);
    auto rep = beta_invariant(cfg.pair, cfg.val.value());
    json out;
    out["config"] = beta_file;
    out["A"] = rep.a.str();
    out["S"] = rep.s.str();
    out["beta"] = rep.beta.str();
    out["wall"] = rep.wall ? json(rat_str(*rep.wall)) : json(nullptr);
    if (!beta_at.empty()) {
      rat c = rat_parse(beta_at);
      out["at"]["c"] = rat_str(c);
      out["at"]["A"] = rat_str(rep.a.eval(c));
      out["at"]["S"] = rat_str(rep.s.eval(c));
      out["at"]["beta"] = rat_str(rep.beta.eval(c));
    }
    if (format == "md") {
      std::ostringstream md;
      md << "| quantity | value |\n|---|---|\n";
      md << "| A(c) | " << rep.a.str() << " |\n";
      md << "| S(c) | " << rep.s.str() << " |\n";
      md << "| beta(c) | " << rep.beta.str() << " |\n";
      md << "| wall | " << (rep.wall ? rat_str(*rep.wall) : "none") << " |\n";
      em.emit(md.str());
    } else {
      em.emit(out.dump(2));
    }
    return ok;
  }

  if (kwalls_cmd->parsed()) {
    kwalls_options opt;
    opt.compute_git = !no_compute;
    opt.plucker_enabled = plucker;
    opt.data_dir = data_dir;
    auto table = kwalls(kw_d, opt, kw_variant);
    if (format == "md") {
      std::ostringstream md;
      md << "K-moduli walls for degree " << kw_d;
      if (!kw_variant.empty()) md << " (" << kw_variant << ")";
      md << "\n\n";
      if (table.empty()) {
        md << "no walls: a single chamber\n";
      } else {
        md << "| wall c | provenance | replacement |\n|---|---|---|\n";
        for (const auto& w : table)
          md << "| " << rat_str(w.c) << " | " << to_string(w.provenance) << " | " << w.note
             << " |\n";
      }
      em.emit(md.str());
    } else {
      json out;
      out["d"] = kw_d;
      json rows = json::array();
      for (const auto& w : table) {
        json r;
        r["c"] = rat_str(w.c);
        r["provenance"] = to_string(w.provenance);
        r["replacement"] = w.note;
        rows.push_back(r);
      }
      out["walls"] = rows;
      em.emit(out.dump(2));
    }
    return ok;
  }

  if (cand_cmd->parsed()) {
    em.input_path = cand_file;
    auto p = problem_from_file(cand_file, cand_cap);
    auto cands = enumerate_candidates(p);
    json out;
    json arr = json::array();
    for (const auto& l : cands) arr.push_back(l.weights);
    out["candidates"] = arr;
    em.emit(out.dump(2));
    return ok;
  }

  if (cent_cmd->parsed()) {
    em.input_path = cent_file;
    json j = load_structured_file(cent_file);
    auto ps = support_from_json(j);
    rat t = rat_parse(cent_at);
    json out;
    out["t"] = rat_str(t);
    out["semistable"] = centroid_semistable(ps, t);
    em.emit(out.dump(2));
    return ok;
  }

  return input_error;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const budget_error& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return budget_exceeded;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const model_error& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return model_inconsistent;
  } catch (const consistency_error& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return model_inconsistent;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
}
