#include "schubert/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "schubert/errors.hpp"
#include "schubert/io.hpp"

namespace schubert {

namespace {

constexpr std::size_t kDefaultOracleCap = 5000;
constexpr std::size_t kDefaultEnumCap = 100000;

std::pair<char, int> parse_type(const std::string& text) {
  if (text.empty()) throw usage_error("missing --type");
  char label = text[0];
  if (label >= 'a' && label <= 'g') label = static_cast<char>(label - 'a' + 'A');
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(text.substr(1), &used);
    if (used != text.size() - 1) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw usage_error("invalid --type value: " + text);
  }
  return {label, rank};
}

std::size_t env_cap(std::size_t fallback) {
  const char* v = std::getenv("SCHUBERT_COSET_CAP");
  if (v == nullptr || *v == '\0') return fallback;
  try {
    long long parsed = std::stoll(v);
    if (parsed < 1) throw std::invalid_argument(v);
    return static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    throw usage_error("invalid SCHUBERT_COSET_CAP value");
  }
}

struct Request {
  std::string type;
  std::string parabolic;
  std::string w_word;
  std::string u_word;
  std::string v_word;
  std::string degree;
  std::string format = "text";
  int beta = 0;
  int distance_degree = 0;
  std::size_t cap = 0;  // 0 = use env/default
};

struct Context {
  std::unique_ptr<RootSystem> owned;  // stable address for the references
  ParabolicData par;
  const RootSystem& rs;
};

Context make_context(const Request& req) {
  auto [label, rank] = parse_type(req.type);
  auto owned = std::make_unique<RootSystem>(CartanDatum::of_type(label, rank));
  std::vector<int> subset = parse_parabolic(req.parabolic, owned->rank());
  ParabolicData par = make_parabolic(*owned, subset);
  const RootSystem& ref = *owned;
  return Context{std::move(owned), std::move(par), ref};
}

void print_table(std::ostream& out,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << '\n';
  }
}

Degree parse_degree_arg(const ParabolicData& par, const std::string& text) {
  if (text.empty()) throw usage_error("missing --degree");
  Coords c = parse_coords(text);
  if (c.size() != par.complement.size())
    throw usage_error("degree needs " +
                      std::to_string(par.complement.size()) +
                      " coordinates");
  return Degree(par, std::move(c));
}

WeylElt parse_word_arg(const RootSystem& rs, const std::string& text,
                       const char* flag) {
  if (text.empty()) throw usage_error(std::string("missing ") + flag);
  return word_to_element(rs, parse_word(text, rs.rank()));
}

void cmd_roots(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  if (req.format == "json") {
    out << roots_json(ctx.rs).dump() << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"index", "root", "coroot", "height", "class"});
  for (const Root& r : ctx.rs.positive_roots()) {
    std::string cls = ctx.rs.simply_laced()
                          ? "-"
                          : (ctx.rs.is_long(r) ? "long" : "short");
    rows.push_back({std::to_string(r.index), format_coords(r.root_coords),
                    format_coords(r.coroot_coords),
                    std::to_string(height(r.root_coords)), cls});
  }
  print_table(out, rows);
}

void cmd_cosmall(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  std::vector<const Root*> hits;
  for (const Root& r : ctx.rs.positive_roots())
    if (!ctx.par.root_in_rp[r.index] && is_cosmall(ctx.par, r))
      hits.push_back(&r);
  if (req.format == "json") {
    Json arr = Json::array();
    for (const Root* r : hits) arr.push_back(format_coords(r->root_coords));
    out << arr.dump() << '\n';
    return;
  }
  for (const Root* r : hits) out << format_coords(r->root_coords) << '\n';
}

void cmd_greedy(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  Degree d = parse_degree_arg(ctx.par, req.degree);
  GreedyDecomposition dec = greedy(d);
  if (req.format == "json") {
    Json arr = Json::array();
    for (int idx : dec.roots)
      arr.push_back(format_coords(ctx.rs.root(idx).root_coords));
    out << arr.dump() << '\n';
    return;
  }
  for (int idx : dec.roots)
    out << format_coords(ctx.rs.root(idx).root_coords) << '\n';
}

void cmd_zd(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  Degree d = parse_degree_arg(ctx.par, req.degree);
  ZElement z = z_of_degree(d);
  if (req.format == "json") {
    Json j = coset_json(Coset{z.z_min, &ctx.par});
    out << j.dump() << '\n';
    return;
  }
  out << format_word(ctx.rs, z.z_min) << '\n';
}

void cmd_nbhd(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  Degree d = parse_degree_arg(ctx.par, req.degree);
  WeylElt w = parse_word_arg(ctx.rs, req.w_word, "--w");
  Coset c = curve_neighborhood(ctx.par, w, d);
  if (req.format == "json") {
    out << coset_json(c).dump() << '\n';
    return;
  }
  out << "word: " << format_word(ctx.rs, c.min_rep) << '\n';
  out << "length: " << coset_length(ctx.par, c.min_rep) << '\n';
}

void cmd_oracle(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  Degree d = parse_degree_arg(ctx.par, req.degree);
  WeylElt w = parse_word_arg(ctx.rs, req.w_word, "--w");
  std::size_t cap = req.cap ? req.cap : env_cap(kDefaultOracleCap);
  std::vector<Coset> hits = neighborhood_oracle(ctx.par, w, d, cap);
  std::vector<std::pair<int, std::vector<int>>> rows;
  for (const Coset& c : hits)
    rows.emplace_back(coset_length(ctx.par, c.min_rep),
                      canonical_word(ctx.rs, c.min_rep));
  std::sort(rows.begin(), rows.end());
  if (req.format == "json") {
    Json arr = Json::array();
    for (const auto& [len, word] : rows) {
      Json j;
      j["word"] = format_word(word);
      j["length"] = len;
      arr.push_back(std::move(j));
    }
    out << arr.dump() << '\n';
    return;
  }
  for (const auto& [len, word] : rows) out << format_word(word) << '\n';
}

void cmd_moment_graph(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  std::size_t cap = req.cap ? req.cap : env_cap(kDefaultOracleCap);
  MomentGraph g = build_moment_graph(ctx.par, cap);
  if (req.format == "json")
    out << moment_graph_json(g).dump() << '\n';
  else
    out << moment_graph_dot(g);
}

void cmd_hecke(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  WeylElt u = parse_word_arg(ctx.rs, req.u_word, "--u");
  WeylElt v = parse_word_arg(ctx.rs, req.v_word, "--v");
  std::string word = format_word(ctx.rs, hecke_mul(ctx.rs, u, v));
  if (req.format == "json") {
    Json j;
    j["word"] = word;
    out << j.dump() << '\n';
    return;
  }
  out << word << '\n';
}

void cmd_bruhat(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  WeylElt u = parse_word_arg(ctx.rs, req.u_word, "--u");
  WeylElt w = parse_word_arg(ctx.rs, req.w_word, "--w");
  bool result = bruhat_leq_coset(ctx.par, u, w);
  if (req.format == "json") {
    Json j;
    j["leq"] = result;
    out << j.dump() << '\n';
    return;
  }
  out << (result ? "true" : "false") << '\n';
}

void cmd_chevalley(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  WeylElt u = parse_word_arg(ctx.rs, req.u_word, "--u");
  if (req.beta < 1 || req.beta > ctx.rs.rank())
    throw usage_error("--beta out of range");
  ChevalleyResult r = quantum_chevalley(ctx.par, u, req.beta - 1);
  if (req.format == "json") {
    out << chevalley_json(ctx.par, r).dump() << '\n';
    return;
  }
  for (const auto& t : r.classical)
    out << "classical " << t.coeff << " "
        << format_word(ctx.rs, t.coset.min_rep) << '\n';
  out << "equivariant " << format_coords(r.equivariant.root_coords) << '\n';
  for (const auto& t : r.quantum)
    out << "quantum " << t.coeff << " q^" << format_degree(t.degree) << " "
        << format_word(ctx.rs, t.coset.min_rep) << '\n';
}

void cmd_gw2(const Request& req, std::ostream& out, bool ktheory) {
  Context ctx = make_context(req);
  Degree d = parse_degree_arg(ctx.par, req.degree);
  WeylElt u = parse_word_arg(ctx.rs, req.u_word, "--u");
  WeylElt w = parse_word_arg(ctx.rs, req.w_word, "--w");
  int value = ktheory ? ktheory_two_point(ctx.par, u, w, d)
                      : gw_two_point(ctx.par, u, w, d);
  if (req.format == "json") {
    Json j;
    j["value"] = value;
    out << j.dump() << '\n';
    return;
  }
  out << value << '\n';
}

void cmd_distance(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  WeylElt u = parse_word_arg(ctx.rs, req.u_word, "--u");
  int value = degree_distance(ctx.par, u);
  if (req.format == "json") {
    Json j;
    j["distance"] = value;
    out << j.dump() << '\n';
    return;
  }
  out << value << '\n';
}

void cmd_conjecture(const Request& req, std::ostream& out) {
  Context ctx = make_context(req);
  std::size_t cap = req.cap ? req.cap : env_cap(kDefaultEnumCap);
  ConjectureReport report = conjecture_6_3_scan(ctx.par, cap);
  if (req.format == "json") {
    Json j;
    j["checked"] = report.roots_checked;
    j["counterexamples"] = Json::array();
    for (int idx : report.counterexamples)
      j["counterexamples"].push_back(
          format_coords(ctx.rs.root(idx).root_coords));
    out << j.dump() << '\n';
    return;
  }
  out << "checked " << report.roots_checked << " roots\n";
  out << "counterexamples " << report.counterexamples.size() << '\n';
  for (int idx : report.counterexamples)
    out << format_coords(ctx.rs.root(idx).root_coords) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Curve neighborhoods of Schubert varieties in G/P"};
  app.require_subcommand(1);
  app.footer(
      "Simple roots are numbered 1..rank along the Dynkin diagram:\n"
      "  A: chain 1-2-...-n.\n"
      "  B: chain with a short last node (1-...-(n-1)=>n).\n"
      "  C: chain with a long last node (1-...-(n-1)<=n).\n"
      "  D: chain 1-...-(n-1) with node n attached to node n-2.\n"
      "  E: chain 1-3-4-5-6(-7-8) with node 2 attached to node 4.\n"
      "  F4: 1-2=>3-4 (1,2 long).  G2: 1 short, 2 long.\n"
      "Words are space-separated indices (\"2 1 2\"); \"e\" is the identity.\n"
      "Degrees are comma-separated integers over the simple roots outside\n"
      "the parabolic, in increasing index order.  The environment variable\n"
      "SCHUBERT_COSET_CAP overrides the default coset cap.");

  Request req;
  std::string action;

  auto add_common = [&](CLI::App* sub, bool with_parabolic = true) {
    sub->add_option("--type", req.type, "Lie type and rank, e.g. B2, A3")
        ->required();
    if (with_parabolic)
      sub->add_option("--parabolic", req.parabolic,
                      "comma-separated simple indices of Delta_P");
    sub->add_option("--format", req.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->parse_complete_callback([&, sub] { action = sub->get_name(); });
  };

  CLI::App* roots = app.add_subcommand("roots", "positive root table");
  add_common(roots, false);
  CLI::App* cosmall = app.add_subcommand("cosmall", "P-cosmall roots");
  add_common(cosmall);
  CLI::App* greedy_cmd =
      app.add_subcommand("greedy", "greedy decomposition of a degree");
  add_common(greedy_cmd);
  greedy_cmd->add_option("--degree", req.degree, "degree coordinates");
  CLI::App* zd = app.add_subcommand("zd", "curve neighborhood of a point");
  add_common(zd);
  zd->add_option("--degree", req.degree, "degree coordinates");
  CLI::App* nbhd_cmd =
      app.add_subcommand("nbhd", "curve neighborhood of a Schubert variety");
  add_common(nbhd_cmd);
  nbhd_cmd->add_option("--w", req.w_word, "Weyl group word");
  nbhd_cmd->add_option("--degree", req.degree, "degree coordinates");
  CLI::App* oracle =
      app.add_subcommand("oracle", "moment-graph fixed-point computation");
  add_common(oracle);
  oracle->add_option("--w", req.w_word, "Weyl group word");
  oracle->add_option("--degree", req.degree, "degree coordinates");
  oracle->add_option("--cap", req.cap, "coset cap")
      ->check(CLI::PositiveNumber);
  CLI::App* mg = app.add_subcommand("moment-graph", "export the moment graph");
  mg->add_option("--type", req.type, "Lie type and rank")->required();
  mg->add_option("--parabolic", req.parabolic, "Delta_P indices");
  mg->add_option("--format", req.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  mg->add_option("--cap", req.cap, "coset cap")->check(CLI::PositiveNumber);
  mg->parse_complete_callback([&] { action = "moment-graph"; });
  CLI::App* hecke_cmd = app.add_subcommand("hecke", "Hecke product of words");
  add_common(hecke_cmd, false);
  hecke_cmd->add_option("--u", req.u_word, "left factor word");
  hecke_cmd->add_option("--v", req.v_word, "right factor word");
  CLI::App* bruhat_cmd =
      app.add_subcommand("bruhat", "Bruhat comparison of cosets");
  add_common(bruhat_cmd);
  bruhat_cmd->add_option("--u", req.u_word, "candidate smaller word");
  bruhat_cmd->add_option("--w", req.w_word, "candidate larger word");
  CLI::App* chev =
      app.add_subcommand("chevalley", "equivariant quantum Chevalley product");
  add_common(chev);
  chev->add_option("--u", req.u_word, "Schubert class word");
  chev->add_option("--beta", req.beta, "simple index of the divisor class");
  CLI::App* gw2 = app.add_subcommand("gw2", "two-point Gromov-Witten invariant");
  add_common(gw2);
  gw2->add_option("--u", req.u_word, "opposite Schubert class word");
  gw2->add_option("--w", req.w_word, "Schubert class word");
  gw2->add_option("--degree", req.degree, "degree coordinates");
  CLI::App* kgw2 =
      app.add_subcommand("kgw2", "K-theoretic two-point invariant");
  add_common(kgw2);
  kgw2->add_option("--u", req.u_word, "opposite Schubert class word");
  kgw2->add_option("--w", req.w_word, "Schubert class word");
  kgw2->add_option("--degree", req.degree, "degree coordinates");
  CLI::App* dist =
      app.add_subcommand("distance", "degree distance in a cominuscule space");
  add_common(dist);
  dist->add_option("--u", req.u_word, "target fixed point word");
  CLI::App* conj = app.add_subcommand(
      "conjecture", "scan a simply laced space for cosmall counterexamples");
  add_common(conj);
  conj->add_option("--cap", req.cap, "root scan cap")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.push_back("schubert");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
    if (action == "roots") cmd_roots(req, out);
    else if (action == "cosmall") cmd_cosmall(req, out);
    else if (action == "greedy") cmd_greedy(req, out);
    else if (action == "zd") cmd_zd(req, out);
    else if (action == "nbhd") cmd_nbhd(req, out);
    else if (action == "oracle") cmd_oracle(req, out);
    else if (action == "moment-graph") cmd_moment_graph(req, out);
    else if (action == "hecke") cmd_hecke(req, out);
    else if (action == "bruhat") cmd_bruhat(req, out);
    else if (action == "chevalley") cmd_chevalley(req, out);
    else if (action == "gw2") cmd_gw2(req, out, false);
    else if (action == "kgw2") cmd_gw2(req, out, true);
    else if (action == "distance") cmd_distance(req, out);
    else if (action == "conjecture") cmd_conjecture(req, out);
    else throw usage_error("no subcommand given");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace schubert
