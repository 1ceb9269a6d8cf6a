#include "kmoduli/config.hpp"

#include "kmoduli/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace kmoduli {

using json = nlohmann::json;

namespace {

struct toml_cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char get() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, col); }
};

void skip_ws_and_comments(toml_cursor& c, bool skip_newlines) {
  while (!c.eof()) {
    char ch = c.peek();
    if (ch == '#') {
      while (!c.eof() && c.peek() != '\n') c.get();
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      c.get();
    } else if (ch == '\n' && skip_newlines) {
      c.get();
    } else {
      break;
    }
  }
}

std::string parse_bare_key(toml_cursor& c) {
  std::string k;
  while (!c.eof()) {
    char ch = c.peek();
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-') {
      k.push_back(c.get());
    } else {
      break;
    }
  }
  if (k.empty()) c.fail("expected key");
  return k;
}

json parse_value(toml_cursor& c);

json parse_array(toml_cursor& c) {
  json arr = json::array();
  c.get();  // '['
  skip_ws_and_comments(c, true);
  if (!c.eof() && c.peek() == ']') {
    c.get();
    return arr;
  }
  while (true) {
    skip_ws_and_comments(c, true);
    arr.push_back(parse_value(c));
    skip_ws_and_comments(c, true);
    if (c.eof()) c.fail("unterminated array");
    char ch = c.get();
    if (ch == ']') break;
    if (ch != ',') c.fail("expected ',' or ']' in array");
    skip_ws_and_comments(c, true);
    if (!c.eof() && c.peek() == ']') {
      c.get();
      break;
    }
  }
  return arr;
}

json parse_value(toml_cursor& c) {
  if (c.eof()) c.fail("expected value");
  char ch = c.peek();
  if (ch == '"') {
    c.get();
    std::string s;
    while (!c.eof() && c.peek() != '"') {
      char d = c.get();
      if (d == '\\' && !c.eof()) {
        char e = c.get();
        switch (e) {
          case 'n': s.push_back('\n'); break;
          case 't': s.push_back('\t'); break;
          case '"': s.push_back('"'); break;
          case '\\': s.push_back('\\'); break;
          default: c.fail("unsupported escape");
        }
      } else {
        s.push_back(d);
      }
    }
    if (c.eof()) c.fail("unterminated string");
    c.get();
    return json(s);
  }
  if (ch == '[') return parse_array(c);
  if (ch == 't' || ch == 'f') {
    std::string w;
    while (!c.eof() && std::isalpha(static_cast<unsigned char>(c.peek()))) w.push_back(c.get());
    if (w == "true") return json(true);
    if (w == "false") return json(false);
    c.fail("bad literal '" + w + "'");
  }
  if (ch == '+' || ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
    std::string num;
    num.push_back(c.get());
    bool rational = false;
    while (!c.eof()) {
      char d = c.peek();
      if (std::isdigit(static_cast<unsigned char>(d))) {
        num.push_back(c.get());
      } else if (d == '/') {
        rational = true;
        num.push_back(c.get());
      } else {
        break;
      }
    }
    if (rational) return json(num);  // rationals serialize as "p/q" strings
    try {
      return json(std::stoll(num));
    } catch (...) {
      c.fail("bad integer literal '" + num + "'");
    }
  }
  c.fail("unsupported value syntax");
}

}  // namespace

json toml_parse(const std::string& text) {
  toml_cursor c{text};
  json root = json::object();
  json* current = &root;
  while (true) {
    skip_ws_and_comments(c, true);
    if (c.eof()) break;
    char ch = c.peek();
    if (ch == '[') {
      c.get();
      bool array_of_tables = false;
      if (!c.eof() && c.peek() == '[') {
        c.get();
        array_of_tables = true;
      }
      skip_ws_and_comments(c, false);
      std::vector<std::string> path;
      path.push_back(parse_bare_key(c));
      skip_ws_and_comments(c, false);
      while (!c.eof() && c.peek() == '.') {
        c.get();
        skip_ws_and_comments(c, false);
        path.push_back(parse_bare_key(c));
        skip_ws_and_comments(c, false);
      }
      if (c.eof() || c.get() != ']') c.fail("expected ']' after table name");
      if (array_of_tables && (c.eof() || c.get() != ']')) c.fail("expected ']]' after table name");
      json* node = &root;
      for (std::size_t i = 0; i < path.size(); ++i) {
        const std::string& k = path[i];
        bool last = (i + 1 == path.size());
        if (last && array_of_tables) {
          if (!node->contains(k)) (*node)[k] = json::array();
          (*node)[k].push_back(json::object());
          node = &(*node)[k].back();
        } else {
          if (!node->contains(k)) (*node)[k] = json::object();
          node = &(*node)[k];
          if (node->is_array()) node = &node->back();
        }
      }
      current = node;
    } else {
      std::string key = parse_bare_key(c);
      skip_ws_and_comments(c, false);
      if (c.eof() || c.get() != '=') c.fail("expected '=' after key '" + key + "'");
      skip_ws_and_comments(c, false);
      (*current)[key] = parse_value(c);
    }
  }
  return root;
}

json load_structured_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    try {
      return json::parse(ss.str());
    } catch (const std::exception& e) {
      throw parse_error(std::string("JSON parse error in ") + path + ": " + e.what());
    }
  }
  try {
    return toml_parse(ss.str());
  } catch (const parse_error& e) {
    throw parse_error(std::string(e.what()) + " in " + path);
  }
}

std::string default_data_dir() {
  if (const char* env = std::getenv("KMODULI_DATA_DIR")) return env;
#ifdef KMODULI_SOURCE_DATA_DIR
  return KMODULI_SOURCE_DATA_DIR;
#else
  return "data";
#endif
}

std::vector<ivec> parse_poly_support(const std::string& expr,
                                     const std::vector<std::string>& vars) {
  std::vector<ivec> support;
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < expr.size(); ++i) {
    char ch = expr[i];
    if ((ch == '+' || ch == '-') && !cur.empty()) {
      terms.push_back(cur);
      cur.clear();
      continue;
    }
    if (ch == '+' && cur.empty()) continue;
    if (ch == '-' && cur.empty()) continue;  // sign irrelevant for the support
    if (!std::isspace(static_cast<unsigned char>(ch))) cur.push_back(ch);
  }
  if (!cur.empty()) terms.push_back(cur);
  if (terms.empty()) throw parse_error("empty polynomial expression");
  for (const auto& term : terms) {
    ivec e(vars.size(), 0);
    std::size_t i = 0;
    while (i < term.size()) {
      if (term[i] == '*') {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(term[i]))) {
        while (i < term.size() && (std::isdigit(static_cast<unsigned char>(term[i])) ||
                                   term[i] == '/'))
          ++i;  // numeric coefficient: only nonzero-ness matters
        continue;
      }
      std::string name;
      while (i < term.size() && (std::isalnum(static_cast<unsigned char>(term[i])) ||
                                 term[i] == '_'))
        name.push_back(term[i++]);
      if (name.empty()) throw parse_error("bad monomial term '" + term + "'");
      int exp = 1;
      if (i < term.size() && term[i] == '^') {
        ++i;
        std::string digits;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
          digits.push_back(term[i++]);
        if (digits.empty()) throw parse_error("missing exponent in '" + term + "'");
        exp = std::stoi(digits);
      }
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw parse_error("unknown variable '" + name + "'");
      e[static_cast<std::size_t>(it - vars.begin())] += exp;
    }
    support.push_back(std::move(e));
  }
  return support;
}

namespace {

std::string resolve_dir(const std::string& dir) {
  return dir.empty() ? default_data_dir() : dir;
}

rat jrat(const json& v) {
  if (v.is_string()) return rat_parse(v.get<std::string>());
  if (v.is_number_integer()) return rat(v.get<long long>());
  throw parse_error("expected rational value");
}

linear_in_c jlinear(const json& v) {
  if (!v.is_array() || v.size() != 2) throw parse_error("expected [constant, slope] pair");
  return linear_in_c(jrat(v[0]), jrat(v[1]));
}

qvec jqvec(const json& v) {
  qvec out;
  for (const auto& x : v) out.push_back(jrat(x));
  return out;
}

ivec jivec(const json& v) {
  ivec out;
  for (const auto& x : v) out.push_back(x.get<long long>());
  return out;
}

}  // namespace

toric_model load_toric_model(const std::string& name, const std::string& data_dir) {
  std::string dir = resolve_dir(data_dir);
  json j = load_structured_file(dir + "/models/" + name + ".toml");
  if (j.value("kind", "") != "toric") throw model_error("model '" + name + "' is not toric");
  std::vector<ray2> rays;
  for (const auto& r : j.at("rays")) rays.push_back(ray2{r[0].get<long long>(), r[1].get<long long>()});
  std::vector<std::string> vars;
  if (j.contains("vars"))
    for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
  toric_model m;
  m.surface = build_toric(rays, vars);
  if (j.contains("ambient")) {
    m.ambient = load_toric_model(j.at("ambient").get<std::string>(), dir).surface;
  } else {
    m.ambient = m.surface;
  }
  return m;
}

ns_surface load_ns_model(const std::string& name, const std::string& data_dir) {
  std::string dir = resolve_dir(data_dir);
  json j = load_structured_file(dir + "/models/" + name + ".toml");
  if (j.value("kind", "") != "ns") throw model_error("model '" + name + "' is not an NS model");
  ns_surface x;
  x.rank = static_cast<int>(j.at("rank").get<long long>());
  for (const auto& row : j.at("gram")) x.gram.push_back(jqvec(row));
  x.anti_k = jqvec(j.at("antik"));
  if (j.contains("curves"))
    for (const auto& c : j.at("curves")) {
      ns_surface::curve cv;
      cv.name = c.at("name").get<std::string>();
      cv.cls = jqvec(c.at("class"));
      cv.self_int = jrat(c.at("selfint"));
      cv.log_disc = c.contains("logdisc") ? jrat(c.at("logdisc")) : rat(1);
      x.curves.push_back(std::move(cv));
    }
  x.validate();
  return x;
}

namespace {

valuation parse_valuation(const json& j, const pair_config& cfg, const std::string& dir) {
  (void)dir;
  if (j.contains("vector")) {
    auto v = jivec(j.at("vector"));
    if (v.size() != 2) throw parse_error("toric valuation vector must have 2 entries");
    return valuation::toric(ray2{v[0], v[1]});
  }
  if (j.contains("curve")) {
    const auto& x = std::get<ns_surface>(cfg.pair.model);
    std::string nm = j.at("curve").get<std::string>();
    for (const auto& c : x.curves)
      if (c.name == nm) return valuation::ns(nm, c.cls, c.log_disc);
    throw model_error("valuation references unknown curve '" + nm + "'");
  }
  if (j.contains("class")) {
    valuation v = valuation::ns(j.value("name", std::string("v")), jqvec(j.at("class")),
                                j.contains("logdisc") ? jrat(j.at("logdisc")) : rat(1));
    return v;
  }
  throw parse_error("valuation block needs 'vector', 'curve' or 'class'");
}

}  // namespace

pair_config load_pair_config(const std::string& path, const std::string& data_dir) {
  std::string dir = resolve_dir(data_dir);
  std::string full = path;
  {
    std::ifstream probe(full);
    if (!probe) full = dir + "/configs/" + path + (path.find('.') == std::string::npos ? ".toml" : "");
  }
  json j = load_structured_file(full);
  pair_config cfg;
  cfg.kind = j.value("kind", "log-pair");
  cfg.model_name = j.at("model").get<std::string>();

  json mj = load_structured_file(dir + "/models/" + cfg.model_name + ".toml");
  bool is_ns = mj.value("kind", "") == "ns";
  if (is_ns)
    cfg.pair.model = load_ns_model(cfg.model_name, dir);
  else
    cfg.pair.model = load_toric_model(cfg.model_name, dir);
  if (j.contains("window")) {
    cfg.pair.c_lo = jrat(j.at("window")[0]);
    cfg.pair.c_hi = jrat(j.at("window")[1]);
  }
  if (j.contains("boundary"))
    for (const auto& b : j.at("boundary")) {
      boundary_component comp;
      comp.coeff = jlinear(b.at("coeff"));
      if (is_ns) {
        comp.cls = jqvec(b.at("class"));
        if (b.contains("ord_names")) {
          const auto& names = b.at("ord_names");
          const auto& values = b.at("ord_values");
          for (std::size_t i = 0; i < names.size(); ++i)
            comp.ns_orders[names[i].get<std::string>()] = jrat(values[i]);
        }
      } else {
        const auto& m = std::get<toric_model>(cfg.pair.model);
        comp.poly_support = parse_poly_support(b.at("poly").get<std::string>(), m.ambient.vars);
        // Divisor class of the proper transform from one chosen monomial.
        comp.cls.assign(m.surface.nrays(), rat(0));
        const ivec& e0 = comp.poly_support.front();
        for (int i = 0; i < m.surface.nrays(); ++i) {
          int ai = m.ambient.ray_index(m.surface.rays[i]);
          if (ai >= 0) {
            comp.cls[i] = rat(e0[ai]);
          } else {
            // Exceptional ray: pullback order minus the full multiplicity.
            boundary_component tmp;
            tmp.poly_support = {e0};
            rat pull = toric_order(toric_model{m.ambient, m.ambient}, tmp, m.surface.rays[i]);
            boundary_component whole;
            whole.poly_support = comp.poly_support;
            rat mult = toric_order(toric_model{m.ambient, m.ambient}, whole, m.surface.rays[i]);
            comp.cls[i] = pull - mult;
          }
        }
      }
      cfg.pair.boundary.push_back(std::move(comp));
    }
  if (j.contains("valuation")) cfg.val = parse_valuation(j.at("valuation"), cfg, dir);
  if (cfg.kind == "complexity-one") {
    cfg.c1.pair = cfg.pair;
    if (j.contains("torus_weights")) cfg.c1.torus_weights = jivec(j.at("torus_weights"));
    if (j.contains("plt")) cfg.c1.plt = parse_valuation(j.at("plt"), cfg, dir);
    if (j.contains("plt_dual")) cfg.c1.plt_dual = parse_valuation(j.at("plt_dual"), cfg, dir);
    if (j.contains("vertical"))
      for (const auto& v : j.at("vertical")) cfg.c1.vertical.push_back(parse_valuation(v, cfg, dir));
  }
  return cfg;
}

std::vector<k_wall> load_golden_kwalls(int d, const std::string& variant,
                                       const std::string& data_dir) {
  std::string dir = resolve_dir(data_dir);
  json j = load_structured_file(dir + "/golden/kwalls-d" + std::to_string(d) + ".toml");
  std::string want = variant;
  if (d == 8 && want.empty()) want = "p1xp1";
  std::vector<k_wall> out;
  for (const auto& table : j.at("table")) {
    if (d == 8 && table.value("variant", "") != want) continue;
    const auto& walls = table.at("walls");
    const auto& prov = table.at("provenance");
    const json* notes = table.contains("replacements") ? &table.at("replacements") : nullptr;
    for (std::size_t i = 0; i < walls.size(); ++i) {
      k_wall w;
      w.c = jrat(walls[i]);
      std::string p = prov[i].get<std::string>();
      w.provenance = p == "computed-beta"  ? wall_provenance::computed_beta
                     : p == "computed-GIT" ? wall_provenance::computed_git
                                           : wall_provenance::golden;
      if (notes && i < notes->size()) w.note = (*notes)[i].get<std::string>();
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end(), [](const k_wall& a, const k_wall& b) { return a.c < b.c; });
  return out;
}

std::vector<cstar_row> load_cstar_table(const std::string& data_dir) {
  std::string dir = resolve_dir(data_dir);
  json j = load_structured_file(dir + "/golden/cstar-quartics.toml");
  std::vector<cstar_row> out;
  std::vector<std::string> vars = {"x0", "x1", "x2"};
  for (const auto& r : j.at("row")) {
    cstar_row row;
    row.row = static_cast<int>(r.at("index").get<long long>());
    row.f_support = parse_poly_support(r.at("curve").get<std::string>(), vars);
    row.h_support = parse_poly_support(r.at("line").get<std::string>(), vars);
    row.lambda = jivec(r.at("lambda"));
    for (const auto& t : r.at("mu_zero_at")) row.mu_zero_at.push_back(jrat(t));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<kwall_row> load_kwall_table(const std::string& data_dir) {
  std::string dir = resolve_dir(data_dir);
  json j = load_structured_file(dir + "/golden/kwall-table.toml");
  std::vector<kwall_row> out;
  for (const auto& r : j.at("row")) {
    kwall_row row;
    row.row = static_cast<int>(r.at("index").get<long long>());
    row.wall = jrat(r.at("wall"));
    row.config = r.at("config").get<std::string>();
    row.beta = jlinear(r.at("beta"));
    row.curve = r.value("curve", "");
    row.line = r.value("line", "");
    row.weights = r.value("weights", "");
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace kmoduli
