#include "table_rows.hpp"

#include <hsc/canonical.hpp>
#include <hsc/errors.hpp>
#include <hsc/invariants.hpp>
#include <hsc/order.hpp>
#include <hsc/persistence.hpp>
#include <hsc/toric.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using hsc::Rational;
using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kObstruction = 3 };

struct RunConfig {
  std::string format = "json";
  std::string cache;
  unsigned jobs = 1;
  std::string constants = "geometric";

  hsc::ConstantsMode mode() const { return hsc::parse_constants_mode(constants); }
  std::optional<hsc::PhiCache> phi_cache() const {
    if (!cache.empty()) return hsc::PhiCache(cache);
    if (const char* env = std::getenv("HSC_CACHE"); env && *env) return hsc::PhiCache(env);
    return std::nullopt;
  }
};

Json scalar_json(const hsc::PerturbedScalar& s) {
  return Json{{"base", hsc::to_string(s.base)}, {"delta", hsc::to_string(s.delta)}};
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_object() && v.contains("base") && v.contains("delta")) {
    hsc::PerturbedScalar s(hsc::parse_rational(v["base"].get<std::string>()),
                           hsc::Integer(v["delta"].get<std::string>()));
    return hsc::to_string(s);
  }
  if (v.is_array()) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : " ") + cell(x);
    return out;
  }
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// `doc` is the JSON payload; `rows` (flat objects sharing keys) is what csv and plain print.
void emit(const RunConfig& cfg, const Json& doc, const Json& rows) {
  if (cfg.format == "json") {
    std::cout << doc.dump() << "\n";
    return;
  }
  std::vector<std::string> keys;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  std::vector<std::vector<std::string>> table;
  table.push_back(keys);
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (const auto& k : keys) line.push_back(r.contains(k) ? cell(r[k]) : "");
    table.push_back(std::move(line));
  }
  if (cfg.format == "csv") {
    for (const auto& line : table) {
      for (std::size_t c = 0; c < line.size(); ++c) std::cout << (c ? "," : "") << csv_field(line[c]);
      std::cout << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(keys.size(), 0);
  for (const auto& line : table)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  for (const auto& line : table) {
    std::string out;
    for (std::size_t c = 0; c < line.size(); ++c) {
      out += line[c];
      if (c + 1 < line.size()) out += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out.erase(out.find_last_not_of(' ') + 1);
    std::cout << out << "\n";
  }
}

void emit(const RunConfig& cfg, const Json& doc) { emit(cfg, doc, doc.is_array() ? doc : Json::array({doc})); }

Rational parse_x(const std::string& s) {
  Rational x = hsc::parse_rational(s);
  if (x <= 1) throw hsc::ParseError("x must be a rational greater than 1");
  return x;
}

// S_d rows grouped by x so that one target model (and its memo) serves every d at that x.
struct SdJob {
  long d;
  Rational x;
  std::optional<Rational> value;
  std::string error;
};

void run_sd_jobs(std::vector<SdJob>& jobs, const RunConfig& cfg, bool progress) {
  std::map<Rational, std::vector<std::size_t>> by_x;
  for (std::size_t k = 0; k < jobs.size(); ++k) by_x[jobs[k].x].push_back(k);
  std::vector<std::pair<Rational, std::vector<std::size_t>>> groups(by_x.begin(), by_x.end());

  const auto cache = cfg.phi_cache();
  const auto mode = cfg.mode();
  std::mutex cache_mutex, log_mutex;
  std::atomic<std::size_t> next{0}, done{0};
  auto worker = [&]() {
    for (std::size_t g; (g = next.fetch_add(1)) < groups.size();) {
      auto& [x, members] = groups[g];
      hsc::EllipsoidModel source(1, 1, mode), target(1, x, mode);
      if (cache) {
        std::lock_guard lock(cache_mutex);
        cache->load_into(target);
      }
      for (std::size_t k : members) {
        try {
          jobs[k].value = hsc::s_d(jobs[k].d, source, target);
        } catch (const hsc::Error& e) {
          jobs[k].error = e.what();
        }
        std::size_t n = ++done;
        if (progress) {
          std::lock_guard lock(log_mutex);
          std::cerr << "[" << n << "/" << jobs.size() << "] d=" << jobs[k].d << " x=" << hsc::to_string(x) << "\n";
        }
      }
      if (cache) {
        std::lock_guard lock(cache_mutex);
        cache->store_from(target);
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(groups.size())));
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

int cmd_sd(const RunConfig& cfg, long d, const std::string& x_text) {
  if (d < 1) throw hsc::ParseError("--d must be at least 1");
  std::vector<SdJob> jobs{{d, parse_x(x_text), std::nullopt, {}}};
  if (!hsc::solve_k(d, jobs[0].x))
    throw hsc::NoValidK("no k solves 3d-1 = k + floor(k/x) for d=" + std::to_string(d));
  run_sd_jobs(jobs, cfg, false);
  if (!jobs[0].value) throw hsc::Error(jobs[0].error);
  if (cfg.format == "plain") {
    std::cout << hsc::to_string(*jobs[0].value) << "\n";
    return kOk;
  }
  emit(cfg, Json{{"d", d}, {"x", hsc::to_string(jobs[0].x)}, {"value", hsc::to_string(*jobs[0].value)}});
  return kOk;
}

int cmd_table(const RunConfig& cfg, long max_d) {
  if (max_d < 1) throw hsc::ParseError("--max-d must be at least 1");
  std::vector<SdJob> jobs;
  std::vector<std::string> kinds;
  const Rational big = Rational(10 * max_d);
  for (long d = 1; d <= max_d; ++d) {
    jobs.push_back({d, big, std::nullopt, {}});
    kinds.push_back("S");
  }
  for (const auto& row : hsc::cli::published_rows()) {
    if (row.d > max_d) continue;
    jobs.push_back({row.d, hsc::parse_rational(row.x), std::nullopt, {}});
    kinds.push_back("table");
  }
  run_sd_jobs(jobs, cfg, true);
  Json rows = Json::array();
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    Json r{{"kind", kinds[k]}, {"d", jobs[k].d}, {"x", hsc::to_string(jobs[k].x)}};
    if (jobs[k].value)
      r["value"] = hsc::to_string(*jobs[k].value);
    else
      r["error"] = jobs[k].error;
    rows.push_back(std::move(r));
  }
  emit(cfg, rows);
  return kOk;
}

std::vector<long> parse_q_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      long q = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument("range");
      return {q};
    }
    long lo = std::stol(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("range");
    std::string tail = s.substr(dots + 2);
    long hi = std::stol(tail, &used);
    if (used != tail.size() || hi < lo) throw std::invalid_argument("range");
    std::vector<long> out;
    for (long q = lo; q <= hi; ++q) out.push_back(q);
    return out;
  } catch (const std::logic_error&) {
    throw hsc::ParseError("--q expects N or LO..HI, got '" + s + "'");
  }
}

int cmd_gh(const RunConfig& cfg, const std::string& domain_text, const std::string& q_text) {
  auto domain = hsc::parse_domain(domain_text);
  auto qs = parse_q_range(q_text);
  Json rows = Json::array();
  for (long q : qs) {
    if (q < 1) throw hsc::ParseError("q must be positive");
    auto c = hsc::gh_capacity(domain, q);
    rows.push_back(Json{{"q", q}, {"capacity", hsc::to_string(c.base)}, {"perturbed", scalar_json(c)}});
  }
  if (cfg.format == "plain") {
    std::string line;
    for (const auto& r : rows) line += (line.empty() ? "" : ",") + r["capacity"].get<std::string>();
    std::cout << line << "\n";
    return kOk;
  }
  emit(cfg, rows);
  return kOk;
}

int cmd_gb(const RunConfig& cfg, const std::string& domain_text, const std::string& word_text) {
  auto domain = hsc::parse_domain(domain_text);
  if (!domain.is_ellipsoid()) throw hsc::InvalidDomain("gb is available for ellipsoids only; use spectral");
  auto word = hsc::parse_capacity_word(word_text);
  auto value = hsc::gb_capacity_ellipsoid(domain.a, domain.b, word, cfg.mode());
  emit(cfg, Json{{"domain", hsc::domain_literal(domain)}, {"word", hsc::to_string(word)}, {"capacity", scalar_json(value)}});
  return kOk;
}

hsc::Truncation truncation_for(long degree, long max_length, long max_weight) {
  hsc::Truncation t = hsc::required_truncation_around(degree);
  if (max_length > 0) t.max_length = max_length;
  if (max_weight > 0) t.max_weight = max_weight;
  return t;
}

Json truncation_json(const hsc::Truncation& t) {
  return Json{{"max_length", t.max_length}, {"max_weight", t.max_weight}};
}

int cmd_spectral(const RunConfig& cfg, const std::string& domain_text, const std::string& word_text, long max_length,
                 long max_weight) {
  auto domain = hsc::parse_domain(domain_text);
  auto word = hsc::parse_capacity_word(word_text);
  auto rep = hsc::skinny_representative(word);
  auto t = truncation_for(hsc::word_degree(rep.terms().begin()->first), max_length, max_weight);
  auto value = hsc::spectral_invariant(domain, word, t);
  emit(cfg, Json{{"domain", hsc::domain_literal(domain)},
                 {"word", hsc::to_string(word)},
                 {"truncation", truncation_json(t)},
                 {"capacity", scalar_json(value)}});
  return kOk;
}

int cmd_barcode(const RunConfig& cfg, const std::string& domain_text, long degree, long max_length, long max_weight) {
  auto domain = hsc::parse_domain(domain_text);
  auto t = truncation_for(degree, max_length, max_weight);
  auto bc = hsc::barcode(domain, degree, t);
  Json bars = Json::array();
  for (const auto& b : bc.bars)
    bars.push_back(Json{{"degree", b.degree},
                        {"birth", scalar_json(b.birth)},
                        {"death", b.death ? scalar_json(*b.death) : Json(nullptr)}});
  Json doc{{"domain", hsc::domain_literal(domain)},
           {"degree", degree},
           {"truncation", truncation_json(t)},
           {"counts",
            {{"p", bc.p[degree]}, {"l", bc.l[degree]}, {"r", bc.r[degree]}, {"dim", bc.chain_dim[degree]}}},
           {"bars", bars}};
  emit(cfg, doc, bars);
  return kOk;
}

int cmd_obstruct(const RunConfig& cfg, const std::string& source_text, const std::string& target_text, long max_k,
                 long max_q, bool violations_only) {
  auto source = hsc::parse_domain(source_text);
  auto target = hsc::parse_domain(target_text);
  if (!source.is_ellipsoid() || !target.is_ellipsoid())
    throw hsc::InvalidDomain("obstruct compares two ellipsoids");
  if (max_k < 1 || max_q < 1) throw hsc::ParseError("--max-k and --max-q must be at least 1");
  hsc::ObstructionOptions opts;
  opts.max_k = max_k;
  opts.max_q = max_q;
  opts.violations_only = violations_only;
  opts.mode = cfg.mode();
  auto verdicts = hsc::obstruct_ellipsoid(source.a, source.b, target.a, target.b, opts, [](std::size_t n) {
    std::cerr << "visited " << n << " multisets\n";
  });
  Json list = Json::array(), rows = Json::array();
  long violations = 0;
  for (const auto& v : verdicts) {
    violations += v.violated;
    list.push_back(Json{{"witness", {{"k", v.k}, {"qs", v.qs}, {"coeff", hsc::to_string(v.coeff)}}},
                        {"lhs", scalar_json(v.lhs)},
                        {"rhs", scalar_json(v.rhs)},
                        {"violated", v.violated},
                        {"bounds", {{"max_k", v.max_k}, {"max_q", v.max_q}}}});
    rows.push_back(Json{{"k", v.k},
                        {"qs", v.qs},
                        {"coeff", hsc::to_string(v.coeff)},
                        {"lhs", scalar_json(v.lhs)},
                        {"rhs", scalar_json(v.rhs)},
                        {"violated", v.violated}});
  }
  Json doc{{"source", hsc::domain_literal(source)},
           {"target", hsc::domain_literal(target)},
           {"bounds", {{"max_k", max_k}, {"max_q", max_q}}},
           {"violations", violations},
           {"verdicts", list}};
  emit(cfg, doc, rows);
  return violations > 0 ? kObstruction : kOk;
}

int cmd_rseep(const RunConfig& cfg, long p, long q) {
  if (p < 1 || q < 1) throw hsc::ParseError("--p and --q must be positive");
  if ((p + q) % 3 != 0) throw hsc::PQNotMultipleOfThree("p + q must be divisible by 3");
  std::vector<SdJob> jobs{{(p + q) / 3, hsc::ratio(p, q), std::nullopt, {}}};
  run_sd_jobs(jobs, cfg, false);
  if (!jobs[0].value) throw hsc::NoValidK(jobs[0].error);
  const bool applies = hsc::at_least_tau4(p, q);
  const bool nonzero = *jobs[0].value != 0;
  emit(cfg, Json{{"applies", applies}, {"nonzero", nonzero}, {"value", hsc::to_string(*jobs[0].value)}});
  return kOk;
}

int cmd_polydisk_coeff(const RunConfig& cfg, long d, const std::string& variant_text, const std::string& a_text) {
  if (d < 1) throw hsc::ParseError("--d must be at least 1");
  hsc::PolydiskVariant variant;
  if (variant_text == "cube")
    variant = hsc::PolydiskVariant::Cube;
  else if (variant_text == "ball")
    variant = hsc::PolydiskVariant::Ball;
  else
    throw hsc::ParseError("--variant must be cube or ball");
  auto c = hsc::nonzero_coeff_polydisk(d, variant);
  Json doc{{"d", d}, {"variant", variant_text}, {"coeff", hsc::to_string(c)}, {"nonzero", c != 0}};
  if (!a_text.empty()) {
    auto a = hsc::parse_rational(a_text);
    long verified = 0;
    while (verified < d && hsc::nonzero_coeff_polydisk(verified + 1, variant) != 0) ++verified;
    doc["a"] = hsc::to_string(a);
    doc["bound"] = hsc::to_string(hsc::polydisk_embedding_bound(a, variant));
    doc["verified_up_to_d"] = verified;
    doc["note"] = "bound contingent on nonzero coefficients for all d; verified for d <= " + std::to_string(verified);
  }
  emit(cfg, doc);
  return kOk;
}

int cmd_maximal(const RunConfig& cfg, long p, long q, long d) {
  if (p < 1 || q < 1) throw hsc::ParseError("--p and --q must be positive");
  if (d == 0) {
    if ((p + q) % 3 != 0) throw hsc::PQDMismatch("p + q must be divisible by 3 when --d is omitted");
    d = (p + q) / 3;
  }
  bool orbit = hsc::is_maximal_short_orbit(p, q, d);
  bool generator = hsc::is_maximal_generator(1, hsc::ratio(p, q), 3 * d - 1);
  emit(cfg, Json{{"p", p}, {"q", q}, {"d", d}, {"maximal", orbit}, {"generator_maximal", generator}});
  return kOk;
}

int cmd_cache(const RunConfig& cfg, const std::string& action) {
  auto cache = cfg.phi_cache();
  if (!cache) throw hsc::ParseError("no cache path: pass --cache or set HSC_CACHE");
  if (action == "clear") {
    cache->clear();
    emit(cfg, Json{{"path", cache->path().string()}, {"cleared", true}});
    return kOk;
  }
  Json rows = Json::array();
  for (const auto& [section, n] : cache->inspect()) {
    auto tab = section.find('\t');
    rows.push_back(Json{{"domain", section.substr(0, tab)}, {"constants", section.substr(tab + 1)}, {"entries", n}});
  }
  emit(cfg, Json{{"path", cache->path().string()}, {"sections", rows}}, rows);
  return kOk;
}

int exit_code_for(const hsc::Error& e) {
  if (dynamic_cast<const hsc::ParseError*>(&e) || dynamic_cast<const hsc::InvalidDomain*>(&e)) return kUsage;
  return kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact higher symplectic capacities of toric domains"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--cache", cfg.cache, "Memo cache file (default: $HSC_CACHE)");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--constants", cfg.constants, "Normalization constants")
      ->check(CLI::IsMember({"geometric", "ones"}));

  std::function<int()> run;
  long d = 0, max_d = 0, degree = 0, max_length = 0, max_weight = 0, p = 0, q = 0;
  long max_k = 8, max_q = 30;
  bool violations_only = false;
  std::string x, domain, q_range, word, source, target, variant = "cube", action, a_text;

  auto* sd = app.add_subcommand("sd", "S_{d;1,x}");
  sd->add_option("--d", d)->required();
  sd->add_option("--x", x)->required();
  sd->callback([&] { run = [&] { return cmd_sd(cfg, d, x); }; });

  auto* table = app.add_subcommand("table", "S_1..S_max_d and the published low-degree table");
  table->add_option("--max-d", max_d)->required();
  table->callback([&] { run = [&] { return cmd_table(cfg, max_d); }; });

  auto* gh = app.add_subcommand("gh", "Gutt-Hutchings capacities");
  gh->add_option("--domain", domain)->required();
  gh->add_option("--q", q_range, "N or LO..HI")->required();
  gh->callback([&] { run = [&] { return cmd_gh(cfg, domain, q_range); }; });

  auto* gb = app.add_subcommand("gb", "Capacity of a word via the canonical model (ellipsoids)");
  gb->add_option("--domain", domain)->required();
  gb->add_option("--word", word, "e.g. t0*t2^2")->required();
  gb->callback([&] { run = [&] { return cmd_gb(cfg, domain, word); }; });

  auto* spectral = app.add_subcommand("spectral", "Spectral invariant of a word via the bar complex");
  spectral->add_option("--domain", domain)->required();
  spectral->add_option("--word", word)->required();
  spectral->add_option("--max-length", max_length);
  spectral->add_option("--max-weight", max_weight);
  spectral->callback([&] { run = [&] { return cmd_spectral(cfg, domain, word, max_length, max_weight); }; });

  auto* bc = app.add_subcommand("barcode", "Persistence barcode in one degree");
  bc->add_option("--domain", domain)->required();
  bc->add_option("--degree", degree)->required();
  bc->add_option("--max-length", max_length);
  bc->add_option("--max-weight", max_weight);
  bc->callback([&] { run = [&] { return cmd_barcode(cfg, domain, degree, max_length, max_weight); }; });

  auto* obstruct = app.add_subcommand("obstruct", "Stabilized embedding obstructions between ellipsoids");
  obstruct->add_option("--source", source, "ellipsoid being embedded")->required();
  obstruct->add_option("--target", target, "codomain ellipsoid")->required();
  obstruct->add_option("--max-k", max_k);
  obstruct->add_option("--max-q", max_q);
  obstruct->add_flag("--violations-only", violations_only);
  obstruct->callback(
      [&] { run = [&] { return cmd_obstruct(cfg, source, target, max_k, max_q, violations_only); }; });

  auto* rseep = app.add_subcommand("rseep", "Nonvanishing check for the rigid stabilized embedding criterion");
  rseep->add_option("--p", p)->required();
  rseep->add_option("--q", q)->required();
  rseep->callback([&] { run = [&] { return cmd_rseep(cfg, p, q); }; });

  auto* poly = app.add_subcommand("polydisk-coeff", "Top coefficient after action-minimal reduction at P(1,1)");
  poly->add_option("--d", d)->required();
  poly->add_option("--variant", variant)->check(CLI::IsMember({"cube", "ball"}));
  poly->add_option("--a", a_text, "Also report the embedding bound for P(1,a)");
  poly->callback([&] { run = [&] { return cmd_polydisk_coeff(cfg, d, variant, a_text); }; });

  auto* maximal = app.add_subcommand("maximal", "Maximality of the short orbit with p + q = 3d");
  maximal->add_option("--p", p)->required();
  maximal->add_option("--q", q)->required();
  maximal->add_option("--d", d);
  maximal->callback([&] { run = [&] { return cmd_maximal(cfg, p, q, d); }; });

  auto* cache = app.add_subcommand("cache", "Inspect or clear the memo cache");
  cache->add_option("action", action)->required()->check(CLI::IsMember({"inspect", "clear"}));
  cache->callback([&] { run = [&] { return cmd_cache(cfg, action); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (const hsc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
}
