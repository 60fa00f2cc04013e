// Command-line front end over the library: expansions, pairings, product
// coefficients, operator tables, the lowering-family certificate, the
// self-check suites, and timing probes.  Output is text for humans or JSON
// for machines; errors always go to stderr as a JSON object.

#include <chrono>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qjack/cache.hpp"
#include "qjack/jack.hpp"
#include "qjack/json_io.hpp"
#include "qjack/laplace.hpp"
#include "qjack/selfcheck.hpp"
#include "qjack/structure.hpp"
#include "qjack/virasoro.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qjack;

struct Config {
  std::string output = "text";
  std::string alpha_text;
  std::string cache_dir;
  int max_weight = 8;

  std::optional<BigRat> alpha;
  std::unique_ptr<DiskCache> cache;

  bool json() const { return output == "json"; }

  void finish() {
    if (!alpha_text.empty()) alpha = parse_rational(alpha_text);
    if (!cache_dir.empty()) cache = std::make_unique<DiskCache>(cache_dir);
    if (max_weight < 0) throw std::invalid_argument("--max-weight must be nonnegative");
  }
};

Partition parse_shape(const Config& cfg, const std::string& text, const char* what) {
  Partition la = Partition::parse(text);
  if (la.weight() > cfg.max_weight) {
    throw std::invalid_argument(std::string(what) + " has weight " +
                                std::to_string(la.weight()) + " > --max-weight " +
                                std::to_string(cfg.max_weight));
  }
  return la;
}

RatFun maybe_eval(const Config& cfg, const RatFun& f) {
  if (!cfg.alpha) return f;
  return RatFun(f.eval_at(*cfg.alpha));
}

SymExpr maybe_eval(const Config& cfg, const SymExpr& f) {
  if (!cfg.alpha) return f;
  return eval_alpha(f, *cfg.alpha);
}

void emit(const Config& cfg, const ordered_json& doc, const std::string& text) {
  if (cfg.json()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string scalar_text(const RatFun& f) { return f.to_string(); }

ordered_json scalar_json(const RatFun& f) {
  ordered_json j = ratfun_to_json(f);
  j["text"] = f.to_string();
  return j;
}

std::string terms_text(const SymExpr& f) {
  if (f.is_zero()) return "  (zero)\n";
  size_t width = 0;
  for (const auto& [la, c] : f.terms()) {
    (void)c;
    width = std::max(width, la.to_string().size());
  }
  std::string out;
  // Same order as the JSON terms array: weight ascending, reverse-lex
  // descending inside a weight.
  for (const auto& [la, c] : f.terms()) {
    std::string key = basis_char(f.basis()) + std::string("[") + la.to_string() + "]";
    out += "  " + key + std::string(width + 3 - la.to_string().size(), ' ') + c.to_string() +
           "\n";
  }
  return out;
}

// ---------------------------------------------------------------- expand --

struct ExpandArgs {
  std::string lambda;
  std::string norm = "J";
  std::string basis = "m";
  std::string method = "iteration";
};

int cmd_expand(const Config& cfg, const ExpandArgs& args) {
  Partition la = parse_shape(cfg, args.lambda, "--lambda");
  JackNorm norm = *norm_from_char(args.norm[0]);
  Basis basis = basis_from_char(args.basis[0]);
  JackMethod method = *method_from_name(args.method);

  SymExpr f;
  if (cfg.cache && method == JackMethod::Iteration) {
    f = cached_jack(*cfg.cache, la, norm, basis);
  } else {
    f = jack(la, norm, basis, method);
  }
  f = maybe_eval(cfg, f);

  ordered_json doc;
  doc["shape"] = la.to_string();
  doc["norm"] = std::string(1, norm_char(norm));
  doc["method"] = method_name(method);
  if (cfg.alpha) doc["alpha"] = cfg.alpha_text;
  ordered_json expr = symexpr_to_json(f);
  doc["basis"] = expr["basis"];
  doc["terms"] = expr["terms"];

  std::string text = std::string(1, norm_char(norm)) + "[" + la.to_string() + "] over the " +
                     std::string(1, basis_char(basis)) + " basis (" + method_name(method) +
                     ")\n" + terms_text(f);
  emit(cfg, doc, text);
  return 0;
}

// ----------------------------------------------------------------- inner --

// "tag:partition" where tag is a basis letter (p, m, q) or a normalization
// letter (P, Q, J).
SymExpr parse_element(const Config& cfg, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos || colon != 1) {
    throw std::invalid_argument("element spec must look like \"J:2,1\" (got \"" + spec + "\")");
  }
  char tag = spec[0];
  Partition la = parse_shape(cfg, spec.substr(2), "element");
  switch (tag) {
    case 'p':
    case 'm':
    case 'q':
      return SymExpr::term(basis_from_char(tag), la, RatFun(1));
    case 'P':
    case 'Q':
    case 'J':
      return jack_p(la, *norm_from_char(tag));
    default:
      throw std::invalid_argument(std::string("unknown element tag '") + tag +
                                  "' (expected p, m, q, P, Q, or J)");
  }
}

int cmd_inner(const Config& cfg, const std::string& left, const std::string& right) {
  RatFun value = inner(parse_element(cfg, left), parse_element(cfg, right));
  value = maybe_eval(cfg, value);
  ordered_json doc;
  doc["left"] = left;
  doc["right"] = right;
  doc["value"] = scalar_json(value);
  emit(cfg, doc, "<" + left + ", " + right + "> = " + scalar_text(value) + "\n");
  return 0;
}

// ----------------------------------------------------------------- pieri --

int cmd_pieri(const Config& cfg, int n, const std::string& mu_text,
              const std::string& lambda_text) {
  if (n < 0) throw std::invalid_argument("--n must be nonnegative");
  Partition mu = parse_shape(cfg, mu_text, "--mu");
  Partition la = parse_shape(cfg, lambda_text, "--lambda");
  bool strip = la.weight() == mu.weight() + n && is_horizontal_strip(mu, la, n);
  RatFun value = maybe_eval(cfg, pieri_hook(n, mu, la));
  ordered_json doc;
  doc["n"] = n;
  doc["mu"] = mu.to_string();
  doc["lambda"] = la.to_string();
  doc["strip"] = strip;
  doc["value"] = scalar_json(value);
  emit(cfg, doc,
       "<J[" + std::to_string(n) + "] J[" + mu.to_string() + "], J[" + la.to_string() +
           "]> = " + scalar_text(value) + (strip ? "  (horizontal strip)\n" : "  (no strip)\n"));
  return 0;
}

// -------------------------------------------------------------------- lr --

int cmd_lr(const Config& cfg, const std::string& mu_text, const std::string& nu_text,
           const std::string& lambda_text, bool witnesses) {
  Partition mu = parse_shape(cfg, mu_text, "--mu");
  Partition nu = parse_shape(cfg, nu_text, "--nu");
  Partition la = parse_shape(cfg, lambda_text, "--lambda");
  std::vector<LRWitness> wit;
  RatFun value = lr_filtration(mu, nu, la, witnesses ? &wit : nullptr);
  value = maybe_eval(cfg, value);
  ordered_json doc;
  doc["mu"] = mu.to_string();
  doc["nu"] = nu.to_string();
  doc["lambda"] = la.to_string();
  doc["nonzero"] = !value.is_zero();
  doc["value"] = scalar_json(value);
  std::string text = "<J[" + mu.to_string() + "] J[" + nu.to_string() + "], J[" +
                     la.to_string() + "]> = " + scalar_text(value) + "\n";
  if (witnesses) {
    ordered_json list = ordered_json::array();
    for (const auto& w : wit) {
      ordered_json entry;
      entry["tau1"] = w.tau1.to_string();
      entry["tau2"] = w.tau2.to_string();
      entry["contribution"] = scalar_json(maybe_eval(cfg, w.contribution));
      list.push_back(std::move(entry));
      text += "  chains through (" + w.tau1.to_string() + ") x (" + w.tau2.to_string() +
              "): " + maybe_eval(cfg, w.contribution).to_string() + "\n";
    }
    doc["witnesses"] = std::move(list);
  }
  emit(cfg, doc, text);
  return 0;
}

// ----------------------------------------------------------------- table --

int cmd_table(const Config& cfg, int weight, const std::string& op) {
  if (weight < 0) throw std::invalid_argument("--weight must be nonnegative");
  if (weight > cfg.max_weight) {
    throw std::invalid_argument("--weight " + std::to_string(weight) + " > --max-weight " +
                                std::to_string(cfg.max_weight));
  }
  bool full = op == "D";
  ActionTable table =
      cfg.cache ? cached_table(*cfg.cache, weight) : ActionTable(weight);

  // The full operator per graded piece: diagonal e and off-diagonal 2a r.
  const RatFun two_a = RatFun(IntPoly::monomial(2, 1));
  ordered_json rows = ordered_json::array();
  std::string text = op + " on the q basis at weight " + std::to_string(weight) + "\n";
  const auto& order = table.order();
  for (size_t i = 0; i < order.size(); ++i) {
    int idx = static_cast<int>(i);
    RatFun diag = full ? eig(order[i]) : table.eprime_at(idx);
    diag = maybe_eval(cfg, diag);
    ordered_json row;
    row["partition"] = order[i].to_string();
    row["diagonal"] = ratfun_to_json(diag);
    ordered_json ups = ordered_json::array();
    text += "  q[" + order[i].to_string() + "]: diagonal " + diag.to_string();
    for (const auto& [j, r] : table.up(idx)) {
      RatFun c = maybe_eval(cfg, full ? two_a * r : r);
      ordered_json up;
      up["target"] = order[static_cast<size_t>(j)].to_string();
      up["coeff"] = ratfun_to_json(c);
      ups.push_back(std::move(up));
      text += ", -> q[" + order[static_cast<size_t>(j)].to_string() + "] " + c.to_string();
    }
    row["up"] = std::move(ups);
    rows.push_back(std::move(row));
    text += "\n";
  }
  ordered_json doc;
  doc["weight"] = weight;
  doc["operator"] = op;
  doc["rows"] = std::move(rows);
  emit(cfg, doc, text);
  return 0;
}

// -------------------------------------------------------- virasoro-check --

int cmd_virasoro(const Config& cfg, int r, int s, const std::string& beta_text) {
  if (r < 1 || s < 1) throw std::invalid_argument("--r and --s must be positive");
  if (r * s > cfg.max_weight) {
    throw std::invalid_argument("rectangle weight " + std::to_string(r * s) +
                                " > --max-weight " + std::to_string(cfg.max_weight));
  }
  SingularCheck check = singular_check(r, s);
  RatFun c = maybe_eval(cfg, central_charge());

  bool beta_matches = false;
  std::optional<RatFun> beta_given;
  if (!beta_text.empty()) {
    beta_given = parse_ratfun_text(beta_text);
    beta_matches = check.has_beta && *beta_given == check.beta;
  }

  ordered_json doc;
  doc["r"] = r;
  doc["s"] = s;
  doc["shape"] = check.shape.to_string();
  doc["beta_star"] = scalar_json(maybe_eval(cfg, check.beta_formula));
  doc["is_singular"] = check.is_singular();
  doc["matches_formula"] = check.matches_formula;
  doc["central_charge"] = scalar_json(c);
  std::string text = "shape (" + check.shape.to_string() + ")\n";
  text += "  beta_star       " + maybe_eval(cfg, check.beta_formula).to_string() + "\n";
  text += std::string("  is_singular     ") + (check.is_singular() ? "true" : "false") + "\n";
  text += "  central charge  " + c.to_string() + "\n";
  if (beta_given) {
    doc["beta"] = scalar_json(maybe_eval(cfg, *beta_given));
    doc["beta_is_singular"] = beta_matches;
    text += std::string("  given beta      ") +
            (beta_matches ? "matches beta_star" : "does not match beta_star") + "\n";
  }
  emit(cfg, doc, text);
  return 0;
}

// ------------------------------------------------------------- selfcheck --

int cmd_selfcheck(const Config& cfg, int max_weight, bool inject_fault) {
  SelfCheckReport report = run_selfcheck(max_weight, inject_fault);
  ordered_json suites = ordered_json::array();
  std::string text;
  for (const auto& s : report.suites) {
    ordered_json row;
    row["suite"] = s.name;
    row["checks"] = s.checks;
    row["failures"] = s.failures;
    if (!s.detail.empty()) row["detail"] = s.detail;
    suites.push_back(std::move(row));
    text += "  " + s.name + std::string(s.name.size() < 16 ? 16 - s.name.size() : 1, ' ') +
            (s.passed() ? "pass" : "FAIL") + "  (" + std::to_string(s.checks) + " checks" +
            (s.failures ? ", " + std::to_string(s.failures) + " failures: " + s.detail : "") +
            ")\n";
  }
  ordered_json doc;
  doc["max_weight"] = report.max_weight;
  doc["fault_injected"] = report.fault_injected;
  doc["all_passed"] = report.all_passed();
  doc["suites"] = std::move(suites);
  std::string head = "self-check to weight " + std::to_string(report.max_weight) +
                     (report.fault_injected ? " with an injected table fault" : "") + ":\n";
  std::string tail = report.all_passed() ? "all suites passed\n" : "FAILURES PRESENT\n";
  emit(cfg, doc, head + text + tail);
  return 0;  // failures are data, not errors
}

// ----------------------------------------------------------------- bench --

int cmd_bench(const Config& cfg, std::vector<int> weights, double threshold, bool enforce) {
  if (weights.empty()) weights.push_back(14);
  ordered_json entries = ordered_json::array();
  std::string text;
  bool all_within = true;
  for (int w : weights) {
    if (w < 0) throw std::invalid_argument("--weight must be nonnegative");
    ShapeBench b = run_shape_bench(w);
    bool within = b.sweep_seconds <= threshold;
    all_within = all_within && within;
    ordered_json row;
    row["weight"] = b.weight;
    row["method"] = "iteration";
    row["table_seconds"] = b.table_seconds;
    row["sweep_seconds"] = b.sweep_seconds;
    row["terms"] = b.terms;
    row["within_threshold"] = within;
    entries.push_back(std::move(row));
    text += "  weight " + std::to_string(w) + ": table " + std::to_string(b.table_seconds) +
            "s, sweep " + std::to_string(b.sweep_seconds) + "s, " + std::to_string(b.terms) +
            " terms" + (within ? "" : "  [over threshold]") + "\n";
  }
  ordered_json doc;
  doc["threshold_seconds"] = threshold;
  doc["entries"] = std::move(entries);

  if (cfg.cache) {
    using clock = std::chrono::steady_clock;
    int w = weights.front();
    auto t0 = clock::now();
    cached_table(*cfg.cache, w);  // cold: builds and stores on a fresh directory
    auto t1 = clock::now();
    cached_table(*cfg.cache, w);  // warm: must load
    auto t2 = clock::now();
    ordered_json cache_doc;
    cache_doc["dir"] = cfg.cache->dir().string();
    cache_doc["cold_seconds"] = std::chrono::duration<double>(t1 - t0).count();
    cache_doc["warm_seconds"] = std::chrono::duration<double>(t2 - t1).count();
    cache_doc["hits"] = cfg.cache->hits();
    cache_doc["misses"] = cfg.cache->misses();
    text += "  cache: cold " + std::to_string(cache_doc["cold_seconds"].get<double>()) +
            "s, warm " + std::to_string(cache_doc["warm_seconds"].get<double>()) + "s, " +
            std::to_string(cfg.cache->hits()) + " hits, " +
            std::to_string(cfg.cache->misses()) + " misses\n";
    doc["cache"] = std::move(cache_doc);
  }
  doc["all_within_threshold"] = all_within;
  emit(cfg, doc, "sweep timings (threshold " + std::to_string(threshold) + "s):\n" + text);
  return enforce && !all_within ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Jack symmetric function engine over Q(a)"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--output", cfg.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--alpha", cfg.alpha_text,
                 "Evaluate every coefficient at this exact rational, e.g. 2/3");
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached tables and expansions");
  app.add_option("--max-weight", cfg.max_weight, "Reject shapes heavier than this")
      ->capture_default_str();

  ExpandArgs ex;
  CLI::App* expand = app.add_subcommand("expand", "Expand a Jack function over a basis");
  expand->add_option("--lambda", ex.lambda, "Shape, e.g. \"3,1\"")->required();
  expand->add_option("--norm", ex.norm, "Normalization")
      ->check(CLI::IsMember({"P", "Q", "J"}))
      ->capture_default_str();
  expand->add_option("--basis", ex.basis, "Target basis")
      ->check(CLI::IsMember({"p", "m", "q"}))
      ->capture_default_str();
  expand->add_option("--method", ex.method, "Construction method")
      ->check(CLI::IsMember({"iteration", "determinant", "gram-schmidt", "filtration"}))
      ->capture_default_str();

  std::string inner_left, inner_right;
  CLI::App* inner_cmd = app.add_subcommand("inner", "Pairing of two elements (tag:partition)");
  inner_cmd->add_option("left", inner_left, "e.g. \"J:2,1\" or \"p:3\"")->required();
  inner_cmd->add_option("right", inner_right, "e.g. \"m:2,1\"")->required();

  int pieri_n = 0;
  std::string pieri_mu, pieri_lambda;
  CLI::App* pieri = app.add_subcommand("pieri", "One-row product coefficient <J_(n) J_mu, J_la>");
  pieri->add_option("--n", pieri_n, "Row length")->required();
  pieri->add_option("--mu", pieri_mu, "Inner shape")->required();
  pieri->add_option("--lambda", pieri_lambda, "Outer shape")->required();

  std::string lr_mu, lr_nu, lr_lambda;
  bool lr_witnesses = false;
  CLI::App* lr = app.add_subcommand("lr", "Product coefficient <J_mu J_nu, J_la>");
  lr->add_option("--mu", lr_mu)->required();
  lr->add_option("--nu", lr_nu)->required();
  lr->add_option("--lambda", lr_lambda)->required();
  lr->add_flag("--witnesses", lr_witnesses, "List the chain-splice summands");

  int table_weight = 0;
  std::string table_op = "Dprime";
  CLI::App* table = app.add_subcommand("table", "Dump the operator action on one graded piece");
  table->add_option("--weight", table_weight)->required();
  table->add_option("--operator", table_op, "Dprime or D")
      ->check(CLI::IsMember({"Dprime", "D"}))
      ->capture_default_str();

  int vir_r = 0, vir_s = 0;
  std::string vir_beta;
  CLI::App* vir = app.add_subcommand(
      "virasoro-check", "Certify the singular parameter of a rectangle shape");
  vir->add_option("--r", vir_r, "Row length")->required();
  vir->add_option("--s", vir_s, "Number of rows")->required();
  vir->add_option("--beta", vir_beta, "Candidate parameter, e.g. \"(2a-2)/a\"");

  int sc_weight = 6;
  bool sc_fault = false;
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "Run the cross-module invariant suites");
  selfcheck->add_option("--max-weight", sc_weight, "Largest weight to sweep")
      ->capture_default_str();
  selfcheck->add_flag("--inject-fault", sc_fault,
                      "Perturb one table entry first; the method suite must then fail");

  std::vector<int> bench_weights;
  double bench_threshold = 60.0;
  bool bench_enforce = false;
  CLI::App* bench = app.add_subcommand("bench", "Time the sweep on the heaviest shape 1^w");
  bench->add_option("--weight", bench_weights, "Weight to probe (repeatable; default 14)");
  bench->add_option("--threshold", bench_threshold, "Seconds allowed per sweep")
      ->capture_default_str();
  bench->add_flag("--enforce", bench_enforce, "Exit nonzero when a sweep exceeds the threshold");

  try {
    app.parse(argc, argv);
    cfg.finish();
    if (*expand) return cmd_expand(cfg, ex);
    if (*inner_cmd) return cmd_inner(cfg, inner_left, inner_right);
    if (*pieri) return cmd_pieri(cfg, pieri_n, pieri_mu, pieri_lambda);
    if (*lr) return cmd_lr(cfg, lr_mu, lr_nu, lr_lambda, lr_witnesses);
    if (*table) return cmd_table(cfg, table_weight, table_op);
    if (*vir) return cmd_virasoro(cfg, vir_r, vir_s, vir_beta);
    if (*selfcheck) return cmd_selfcheck(cfg, sc_weight, sc_fault);
    if (*bench) return cmd_bench(cfg, bench_weights, bench_threshold, bench_enforce);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
