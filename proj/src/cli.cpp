#include "gwfano/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gwfano/errors.hpp"
#include "gwfano/invariants.hpp"
#include "gwfano/structure_sums.hpp"
#include "gwfano/suite.hpp"

namespace gwfano {

namespace {

using ojson = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<int> ambient;
  std::vector<int> degrees;
  int max_b = -1;
  int order = 0;
  std::string format = "text";
  std::string out_path;
  std::string grid_path;
  std::string hj_path;
  std::string corrupt;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad " + what + ": '" + text + "'");
    }
    if (used != item.size()) throw InputError("bad " + what + ": '" + text + "'");
    v.push_back(x);
  }
  if (v.empty()) throw InputError("empty " + what);
  return v;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<MultiDegree> read_grid(const std::string& path) {
  std::vector<MultiDegree> grid;
  for (const auto& line : read_lines(path)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("grid line needs n:d1,d2: '" + line + "'");
    const auto n = parse_int_list(line.substr(0, colon), "ambient");
    if (n.size() != 1) throw InputError("grid line needs one ambient: '" + line + "'");
    grid.emplace_back(n[0], parse_int_list(line.substr(colon + 1), "degrees"));
  }
  if (grid.empty()) throw InputError("grid file " + path + " has no cases");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

HjTable read_hj(const std::string& path) {
  HjTable t;
  for (const auto& line : read_lines(path)) {
    std::stringstream ss(line);
    std::string j, d, v, extra;
    if (!(ss >> j >> d >> v) || (ss >> extra)) throw InputError("h_j line needs 'j d value': '" + line + "'");
    const int jj = parse_int_list(j, "j")[0];
    const int dd = parse_int_list(d, "d")[0];
    if (jj < 1) throw InputError("h_j index must be >= 1: '" + line + "'");
    try {
      t[{jj, dd}] = parse_rat(v);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return t;
}

std::vector<MultiDegree> geometries(const RunConfig& cfg, bool default_to_grid) {
  if (!cfg.grid_path.empty()) {
    if (cfg.ambient || !cfg.degrees.empty()) throw InputError("--grid excludes --ambient/--degrees");
    return read_grid(cfg.grid_path);
  }
  if (!cfg.ambient && cfg.degrees.empty() && default_to_grid) return default_grid();
  if (!cfg.ambient || cfg.degrees.empty()) throw InputError("--ambient and --degrees are required");
  return {MultiDegree(*cfg.ambient, cfg.degrees)};
}

ojson degrees_json(const MultiDegree& md) {
  ojson a = ojson::array();
  for (int d : md.degrees()) a.push_back(d);
  return a;
}

std::string degrees_text(const MultiDegree& md) {
  std::string s;
  for (int d : md.degrees()) s += (s.empty() ? "" : ",") + std::to_string(d);
  return s;
}

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw InputError("cannot write " + cfg.out_path);
  f << text;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const auto grid = geometries(cfg, false);
  if (cfg.max_b < -1) throw InputError("--max-b must be >= 0");
  bool ok = true;
  ojson all = ojson::array();
  std::ostringstream txt, csv;
  csv << "ambient,degrees,b,insertion_power,standard,reduced,difference,consistent\n";
  for (const auto& md : grid) {
    const int mb = cfg.max_b < 0 ? md.max_b() : std::min(cfg.max_b, md.max_b());
    const InvariantEngine eng(md, mb, {cfg.order, 0, ThetaRoute::Lemma});
    ojson doc;
    doc["ambient"] = md.n();
    doc["degrees"] = degrees_json(md);
    doc["index"] = md.nu();
    doc["dim"] = md.dim();
    doc["rows"] = ojson::array();
    txt << "X = " << md.label() << "  index " << md.nu() << "  dim " << md.dim() << "\n";
    txt << "  b  a  standard  reduced  difference  consistent\n";
    for (const auto& row : eng.rows()) {
      ok = ok && row.consistent;
      ojson j;
      j["b"] = row.b;
      j["insertion_power"] = row.insertion_power;
      j["standard"] = to_string(row.standard);
      j["reduced"] = to_string(row.reduced);
      j["difference"] = to_string(row.difference);
      j["consistent"] = row.consistent;
      doc["rows"].push_back(j);
      txt << "  " << row.b << "  " << row.insertion_power << "  " << to_string(row.standard) << "  "
          << to_string(row.reduced) << "  " << to_string(row.difference) << "  "
          << (row.consistent ? "yes" : "NO") << "\n";
      csv << md.n() << "," << csv_field(degrees_text(md)) << "," << row.b << "," << row.insertion_power << ","
          << to_string(row.standard) << "," << to_string(row.reduced) << "," << to_string(row.difference) << ","
          << (row.consistent ? "true" : "false") << "\n";
    }
    all.push_back(doc);
  }
  std::string text;
  if (cfg.format == "json") {
    text = (cfg.grid_path.empty() ? all[0] : all).dump(2) + "\n";
  } else if (cfg.format == "csv") {
    text = csv.str();
  } else {
    text = txt.str();
  }
  emit(cfg, text, out);
  return ok ? 0 : 2;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const auto grid = geometries(cfg, true);
  SuiteOptions opts;
  opts.order_pad = cfg.order;
  if (!cfg.corrupt.empty()) {
    const auto v = parse_int_list(cfg.corrupt, "corrupt spec");
    if (v.size() != 3) throw InputError("--test-corrupt-ctilde needs P,L,BETA");
    opts.corrupt = std::array<int, 3>{v[0], v[1], v[2]};
  }
  bool ok = true;
  ojson all = ojson::array();
  std::ostringstream txt, csv;
  csv << "geometry,check,pass,detail\n";
  for (const auto& md : grid) {
    for (const auto& c : run_identity_suite(md, opts)) {
      ok = ok && c.pass;
      ojson j;
      j["geometry"] = c.geometry;
      j["check"] = c.id;
      j["pass"] = c.pass;
      j["detail"] = c.detail;
      all.push_back(j);
      txt << (c.pass ? "PASS " : "FAIL ") << c.geometry << " " << c.id;
      if (!c.detail.empty()) txt << "  [" << c.detail << "]";
      txt << "\n";
      csv << csv_field(c.geometry) << "," << c.id << "," << (c.pass ? "true" : "false") << ","
          << csv_field(c.detail) << "\n";
    }
  }
  std::string text = cfg.format == "json" ? all.dump(2) + "\n" : cfg.format == "csv" ? csv.str() : txt.str();
  emit(cfg, text, out);
  return ok ? 0 : 2;
}

int cmd_conjectures(const RunConfig& cfg, std::ostream& out) {
  const auto grid = geometries(cfg, true);
  const int beta_max = cfg.max_b < 0 ? 3 : cfg.max_b;
  std::optional<HjTable> hj;
  if (!cfg.hj_path.empty()) hj = read_hj(cfg.hj_path);
  bool lemmas_ok = true;
  ojson all = ojson::array();
  std::ostringstream txt, csv;
  csv << "tier,id,geometry,beta,expected,computed,verdict\n";
  auto row = [&](const std::string& tier, const std::string& id, const std::string& geom, int beta,
                 const std::string& expected, const std::string& computed, const std::string& verdict) {
    ojson j;
    j["tier"] = tier;
    j["id"] = id;
    j["geometry"] = geom;
    j["beta"] = beta;
    j["expected"] = expected;
    j["computed"] = computed;
    j["verdict"] = verdict;
    all.push_back(j);
    txt << tier << "  " << id << "  " << geom << "  beta=" << beta << "  expected " << expected << "  computed "
        << computed << "  " << verdict << "\n";
    csv << tier << "," << id << "," << csv_field(geom) << "," << beta << "," << expected << "," << computed << ","
        << csv_field(verdict) << "\n";
  };
  for (const auto& md : grid) {
    for (const auto& c : check_sum_lemmas(md, beta_max)) {
      lemmas_ok = lemmas_ok && c.pass;
      row("lemma", c.id, c.geometry, c.beta, to_string(c.expected), to_string(c.computed), c.pass ? "pass" : "FAIL");
    }
    for (const auto& c : evaluate_conjectures(md, beta_max, hj)) {
      row("conjecture", c.conjecture, c.geometry, c.beta, c.expected, c.computed, c.verdict);
    }
  }
  std::string text = cfg.format == "json" ? all.dump(2) + "\n" : cfg.format == "csv" ? csv.str() : txt.str();
  emit(cfg, text, out);
  return lemmas_ok ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus-1 one-point invariants of Fano complete intersections"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  RunConfig cfg;
  int ambient = 0;
  auto* amb = app.add_option("--ambient", ambient, "n, for the ambient P^{n-1}");
  app.add_option("--degrees", cfg.degrees, "comma-separated degrees d1,...,dr")->delimiter(',');
  app.add_option("--max-b", cfg.max_b, "largest degree b (compute) or beta (conjectures)");
  app.add_option("--order", cfg.order, "extra q-truncation padding")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", cfg.out_path, "write output to this file");
  app.add_option("--grid", cfg.grid_path, "file of n:d1,d2 lines");
  app.add_option("--hj-table", cfg.hj_path, "file of 'j d value' lines defining h_j(d)");
  app.add_option("--test-corrupt-ctilde", cfg.corrupt)->group("");
  app.set_config("--config", "", "key=value file presetting any flag");
  auto* compute = app.add_subcommand("compute", "invariant table");
  auto* check = app.add_subcommand("check", "identity suite");
  auto* conj = app.add_subcommand("conjectures", "structure-sum lemmas and conjectures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  if (amb->count() > 0) cfg.ambient = ambient;

  try {
    if (compute->parsed()) return cmd_compute(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (conj->parsed()) return cmd_conjectures(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidGeometry& e) {
    err << "error: invalid geometry: " << e.what() << "\n";
    return 1;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace gwfano
