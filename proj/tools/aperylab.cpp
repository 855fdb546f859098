// aperylab: terms, binomial transforms, congruence certificates and the full
// verification suite for the fifteen Apéry-like sequences, with json / csv /
// text output.
//
// Exit codes: 0 success, 1 check failure, 2 usage or configuration error,
// 3 integrality violation (wrong parameters or corrupted term cache).

#include "apery/congruence.hpp"
#include "apery/sequences.hpp"
#include "apery/theta.hpp"
#include "apery/transforms.hpp"
#include "apery/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using apery::Int;
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

enum ExitCode {
  kOk = 0,
  kCheckFailure = 1,
  kUsageError = 2,
  kIntegrityError = 3
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Record rendering.  Every command emits flat records (ordered field/value
// pairs); json wraps them with the schema version, csv adds it as a column,
// text renders aligned columns.

struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, const Int& value) {
    add(std::move(key), value.get_str());
  }
  void add(std::string key, long value) {
    add(std::move(key), std::to_string(value));
  }
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_records(std::ostream& os, const std::string& format,
                  const std::string& command,
                  const std::vector<Record>& records) {
  if (format == "json") {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    json arr = json::array();
    for (const Record& r : records) {
      json obj;
      for (const auto& [k, v] : r.fields) obj[k] = v;
      arr.push_back(std::move(obj));
    }
    doc["records"] = std::move(arr);
    os << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    if (records.empty()) return;
    os << "schema_version";
    for (const auto& [k, v] : records.front().fields) os << "," << k;
    os << "\n";
    for (const Record& r : records) {
      os << kSchemaVersion;
      for (const auto& [k, v] : r.fields) os << "," << csv_escape(v);
      os << "\n";
    }
    return;
  }
  // text: aligned columns
  os << "# aperylab " << command << " (schema " << kSchemaVersion << ")\n";
  if (records.empty()) return;
  std::vector<std::string> header;
  for (const auto& [k, v] : records.front().fields) header.push_back(k);
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const Record& r : records)
    for (size_t c = 0; c < r.fields.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], r.fields[c].second.size());
  auto row = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c) os << "  ";
      os << cells[c];
      if (c + 1 < cells.size())
        os << std::string(width[c] - std::min(width[c], cells[c].size()), ' ');
    }
    os << "\n";
  };
  row(header);
  for (const Record& r : records) {
    std::vector<std::string> cells;
    for (const auto& [k, v] : r.fields) cells.push_back(v);
    row(cells);
  }
}

// ---------------------------------------------------------------------------
// Shared option plumbing.

// Records are always emitted in registry order, independent of the order the
// names were given in.
std::vector<const apery::SequenceSpec*> resolve_sequences(
    const std::vector<std::string>& names) {
  std::vector<const apery::SequenceSpec*> out;
  if (names.empty()) {
    for (const auto& s : apery::all_specs()) out.push_back(&s);
    return out;
  }
  for (const std::string& n : names) {
    const apery::SequenceSpec* s = apery::find_spec(n);
    if (!s) throw UsageError("unknown sequence '" + n + "'");
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](const apery::SequenceSpec* a, const apery::SequenceSpec* b) {
              return static_cast<int>(a->id) < static_cast<int>(b->id);
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

apery::TermSource parse_source_or_throw(const std::string& s) {
  auto v = apery::parse_source(s);
  if (!v) throw UsageError("unknown source '" + s + "'");
  return *v;
}

apery::TermSource parse_eta_normalization(const std::string& s) {
  if (s == "formula") return apery::TermSource::Canonical;
  if (s == "recurrence") return apery::TermSource::Recurrence;
  throw UsageError("unknown eta normalization '" + s + "'");
}

void check_cap(long n_max, long cap) {
  if (n_max < 0) throw UsageError("n-max must be nonnegative");
  if (n_max > cap)
    throw UsageError("n-max " + std::to_string(n_max) +
                     " exceeds the hard cap " + std::to_string(cap) +
                     " (raise with --hard-cap)");
}

std::string gcd_profile_summary(const apery::CongruenceCertificate& cert) {
  // Change points only; the profile is non-increasing, so this is lossless.
  std::ostringstream out;
  const Int* last = nullptr;
  bool first = true;
  for (const auto& [k, g] : cert.gcd_profile) {
    if (last && g == *last) continue;
    if (!first) out << " ";
    out << k << ":" << g.get_str();
    last = &g;
    first = false;
  }
  if (!cert.gcd_profile.empty())
    out << " .." << cert.gcd_profile.back().first;
  return out.str();
}

// ---------------------------------------------------------------------------
// terms (with optional persistent cache)

apery::TermTable table_with_cache(const apery::SequenceSpec& spec,
                                  apery::TermSource source, long n_max,
                                  const std::string& cache_path) {
  namespace fs = std::filesystem;
  if (cache_path.empty() || !fs::exists(cache_path))
    return apery::generate(spec, source, n_max);

  std::ifstream in(cache_path);
  if (!in) throw UsageError("cannot read cache file " + cache_path);
  apery::TermTable table = apery::load_term_cache(in);
  if (table.id != spec.id || table.source != source)
    throw UsageError("cache file " + cache_path +
                     " holds a different sequence or source");
  if (table.n_max() >= n_max) return table;

  // Extend.  The doubled canonical eta/s18 tables satisfy the recurrence from
  // index 3 on (priors doubled); shorter caches are simply regenerated.
  if (source == apery::TermSource::Formula) {
    apery::BinomialCache bc;
    for (long n = table.n_max() + 1; n <= n_max; ++n)
      table.terms.push_back(apery::term_by_formula(spec, n, bc));
  } else if (source == apery::TermSource::Canonical &&
             spec.convention_sensitive && table.n_max() < 2) {
    table = apery::generate(spec, source, n_max);
  } else {
    for (long n = table.n_max() + 1; n <= n_max; ++n)
      table.terms.push_back(apery::term_by_recurrence(spec, n, table.terms));
  }
  return table;
}

void save_cache(const apery::TermTable& table, const std::string& cache_path) {
  if (cache_path.empty()) return;
  std::ofstream out(cache_path, std::ios::trunc);
  if (!out) throw UsageError("cannot write cache file " + cache_path);
  apery::save_term_cache(table, out);
}

struct TermsConfig {
  std::vector<std::string> sequences;
  long n_max = 10;
  std::string source = "canonical";
  std::string format = "text";
  std::string cache_path;
  long hard_cap = 100000;
};

int cmd_terms(const TermsConfig& cfg) {
  check_cap(cfg.n_max, cfg.hard_cap);
  auto specs = resolve_sequences(cfg.sequences);
  apery::TermSource source = parse_source_or_throw(cfg.source);
  if (!cfg.cache_path.empty() && specs.size() != 1)
    throw UsageError("--cache requires exactly one sequence");

  std::vector<Record> records;
  for (const auto* spec : specs) {
    apery::TermTable table =
        table_with_cache(*spec, source, cfg.n_max, cfg.cache_path);
    save_cache(table, cfg.cache_path);
    for (long n = 0; n <= cfg.n_max; ++n) {
      Record r;
      r.add("sequence", spec->name);
      r.add("source", std::string(apery::source_name(source)));
      r.add("n", n);
      r.add("value", table.terms[n]);
      records.push_back(std::move(r));
    }
  }
  emit_records(std::cout, cfg.format, "terms", records);
  return kOk;
}

// ---------------------------------------------------------------------------
// transform

struct TransformConfig {
  std::vector<std::string> sequences;
  long alpha = 0;
  long n_max = 10;
  std::string source = "canonical";
  std::string format = "text";
  long hard_cap = 100000;
};

int cmd_transform(const TransformConfig& cfg) {
  check_cap(cfg.n_max, cfg.hard_cap);
  auto specs = resolve_sequences(cfg.sequences);
  apery::TermSource source = parse_source_or_throw(cfg.source);
  std::vector<Record> records;
  for (const auto* spec : specs) {
    apery::TermTable table = apery::generate(*spec, source, cfg.n_max);
    apery::TransformTable vt =
        apery::binomial_transform(table, Int(cfg.alpha), cfg.n_max);
    for (long n = 0; n <= cfg.n_max; ++n) {
      Record r;
      r.add("sequence", spec->name);
      r.add("source", std::string(apery::source_name(source)));
      r.add("alpha", cfg.alpha);
      r.add("n", n);
      r.add("value", vt.values[n]);
      records.push_back(std::move(r));
    }
  }
  emit_records(std::cout, cfg.format, "transform", records);
  return kOk;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyConfig {
  std::vector<std::string> sequences;
  long n_max = 200;
  long window_lo = -25, window_hi = 25;
  bool have_alpha = false;
  long alpha = 0;
  std::string eta_normalization = "formula";
  std::string format = "text";
  long hard_cap = 100000;
};

int cmd_certify(const CertifyConfig& cfg) {
  check_cap(cfg.n_max, cfg.hard_cap);
  auto specs = resolve_sequences(cfg.sequences);
  apery::TermSource eta_norm = parse_eta_normalization(cfg.eta_normalization);
  bool all_pass = true;
  std::vector<Record> records;
  for (const auto* spec : specs) {
    apery::TermSource norm =
        spec->convention_sensitive ? eta_norm : apery::TermSource::Canonical;
    apery::CongruenceCertificate cert = apery::theorem2_check(
        *spec, cfg.n_max, cfg.window_lo, cfg.window_hi, norm);
    Record r;
    r.add("record", "certificate");
    r.add("sequence", spec->name);
    r.add("normalization", std::string(apery::source_name(norm)));
    r.add("u1", cert.u1);
    r.add("M", cert.M);
    r.add("radical", cert.M_radical);
    r.add("squarefree_part", cert.M_squarefree_part);
    r.add("gcd_profile", gcd_profile_summary(cert));
    r.add("stable_from", cert.stable_from);
    r.add("n_verified", cert.verified_to);
    r.add("status", cert.passed() ? "pass" : "fail");
    r.add("witness", cert.witness);
    records.push_back(std::move(r));
    all_pass = all_pass && cert.passed();

    if (cfg.have_alpha) {
      apery::Theorem1Report rep =
          apery::theorem1_check(*spec, Int(cfg.alpha), cfg.n_max, norm);
      Record t;
      t.add("record", "theorem1");
      t.add("sequence", spec->name);
      t.add("normalization", std::string(apery::source_name(norm)));
      t.add("u1", cert.u1);
      t.add("M", rep.M_alpha);
      t.add("radical", rep.modulus);
      t.add("squarefree_part", apery::squarefree_part(rep.M_alpha));
      t.add("gcd_profile", "alpha=" + std::to_string(cfg.alpha));
      t.add("stable_from", 0L);
      t.add("n_verified", cfg.n_max);
      t.add("status", rep.passed() ? "pass" : "fail");
      t.add("witness", rep.witness);
      records.push_back(std::move(t));
      all_pass = all_pass && rep.passed();
    }
  }
  emit_records(std::cout, cfg.format, "certify", records);
  return all_pass ? kOk : kCheckFailure;
}

// ---------------------------------------------------------------------------
// tables

int cmd_tables(const std::string& format) {
  bool all_match = true;
  std::vector<Record> records;
  for (const auto& spec : apery::all_specs()) {
    apery::TermTable t = apery::generate(spec, apery::TermSource::Canonical, 1);
    Int m = apery::compute_M(spec, t.terms[1], apery::TermSource::Canonical);
    bool match = t.terms[1] == spec.table_u1 && m == spec.table_modulus;
    all_match = all_match && match;
    Record r;
    r.add("sequence", spec.name);
    std::string aliases;
    for (const std::string& a : spec.aliases) {
      if (!aliases.empty()) aliases += " ";
      aliases += a;
    }
    r.add("aliases", aliases);
    r.add("u1", t.terms[1]);
    r.add("N", m);
    r.add("expected_u1", spec.table_u1);
    r.add("expected_N", spec.table_modulus);
    r.add("match", match ? "yes" : "NO");
    records.push_back(std::move(r));
  }
  emit_records(std::cout, format, "tables", records);
  return all_match ? kOk : kCheckFailure;
}

// ---------------------------------------------------------------------------
// gauss

struct GaussConfig {
  std::vector<std::string> sequences;
  bool have_alpha = false;
  long alpha = 0;
  std::vector<long> primes = {2, 3, 5};
  long n_max = 500;
  std::string eta_normalization = "formula";
  std::string format = "text";
  long hard_cap = 100000;
};

int cmd_gauss(const GaussConfig& cfg) {
  check_cap(cfg.n_max, cfg.hard_cap);
  auto specs = resolve_sequences(cfg.sequences);
  apery::TermSource eta_norm = parse_eta_normalization(cfg.eta_normalization);
  std::string primes_text;
  for (long p : cfg.primes) {
    if (!primes_text.empty()) primes_text += ",";
    primes_text += std::to_string(p);
  }
  bool all_pass = true;
  std::vector<Record> records;
  for (const auto* spec : specs) {
    apery::TermSource norm =
        spec->convention_sensitive ? eta_norm : apery::TermSource::Canonical;
    std::vector<Int> alphas;
    if (cfg.have_alpha) {
      alphas.push_back(cfg.alpha);
    } else {
      alphas.push_back(0);
      Int u1 = norm == apery::TermSource::Canonical ? spec->table_u1
                                                    : spec->recurrence_u1();
      if (u1 != 0) alphas.push_back(u1);
    }
    for (const Int& alpha : alphas) {
      apery::CheckReport rep =
          apery::gauss_check(*spec, alpha, cfg.primes, cfg.n_max, norm);
      all_pass = all_pass && rep.passed();
      Record r;
      r.add("sequence", spec->name);
      r.add("alpha", alpha);
      r.add("primes", primes_text);
      r.add("n_max", cfg.n_max);
      r.add("status", rep.passed() ? "pass" : "fail");
      r.add("witness", rep.witness);
      records.push_back(std::move(r));
    }
  }
  emit_records(std::cout, cfg.format, "gauss", records);
  return all_pass ? kOk : kCheckFailure;
}

// ---------------------------------------------------------------------------
// recurrence

struct RecurrenceConfig {
  std::string sequence;
  long alpha = 0;
  std::string format = "text";
};

int cmd_recurrence(const RecurrenceConfig& cfg) {
  const apery::SequenceSpec* spec = apery::find_spec(cfg.sequence);
  if (!spec) throw UsageError("unknown sequence '" + cfg.sequence + "'");
  apery::ThetaOperator op = apery::operator_for(*spec, Int(cfg.alpha));
  apery::Recurrence rec = apery::operator_to_recurrence(op);

  if (cfg.format == "json") {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "recurrence";
    doc["sequence"] = spec->name;
    doc["alpha"] = cfg.alpha;
    json op_terms = json::array();
    for (const auto& [j, p] : op.terms) {
      json t;
      t["z_power"] = j;
      json coeffs = json::array();
      for (const Int& c : p.coefficients()) coeffs.push_back(c.get_str());
      t["coefficients"] = std::move(coeffs);
      op_terms.push_back(std::move(t));
    }
    doc["operator"] = std::move(op_terms);
    json polys = json::array();
    for (const apery::ThetaPoly& p : rec.coeff_polys) {
      json coeffs = json::array();
      for (const Int& c : p.coefficients()) coeffs.push_back(c.get_str());
      polys.push_back(std::move(coeffs));
    }
    doc["coeff_polys"] = std::move(polys);
    doc["order"] = rec.order();
    doc["text"] = rec.to_string();
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  if (cfg.format == "csv") {
    std::cout << "schema_version,sequence,alpha,z_power,coefficients\n";
    for (const auto& [j, p] : op.terms) {
      std::string coeffs;
      for (const Int& c : p.coefficients()) {
        if (!coeffs.empty()) coeffs += " ";
        coeffs += c.get_str();
      }
      std::cout << kSchemaVersion << "," << spec->name << "," << cfg.alpha
                << "," << j << "," << csv_escape(coeffs) << "\n";
    }
    return kOk;
  }
  std::cout << "# aperylab recurrence (schema " << kSchemaVersion << ")\n"
            << "sequence " << spec->name << ", alpha = " << cfg.alpha << "\n"
            << "operator: " << op.to_string() << "\n"
            << "recurrence: " << rec.to_string() << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
  std::string only;
  int parallelism = 0;
  std::string eta_normalization = "formula";
  std::string format = "text";
  bool no_timings = false;
};

int cmd_verify(const VerifyConfig& cfg) {
  apery::SuiteOptions options;
  options.only = cfg.only;
  options.parallelism = cfg.parallelism;
  options.eta_normalization = parse_eta_normalization(cfg.eta_normalization);
  std::vector<apery::CheckResult> results =
      apery::run_verification_suite(options);

  std::vector<Record> records;
  for (const apery::CheckResult& res : results) {
    Record r;
    r.add("check_name", res.check_name);
    r.add("sequence", res.sequence);
    r.add("params", res.params);
    r.add("status", std::string(apery::result_status_name(res.status)));
    r.add("witness", res.witness);
    std::ostringstream d;
    d << std::fixed << std::setprecision(3)
      << (cfg.no_timings ? 0.0 : res.duration_seconds);
    r.add("duration", d.str());
    records.push_back(std::move(r));
  }
  emit_records(std::cout, cfg.format, "verify", records);

  size_t failed = 0;
  for (const auto& res : results)
    if (res.status == apery::ResultStatus::Fail) ++failed;
  std::ostringstream summary;
  summary << results.size() << " checks, " << failed << " failed";
  if (cfg.format == "text") std::cout << "# " << summary.str() << "\n";
  if (results.empty()) {
    std::cerr << "verify: no checks matched filter '" << cfg.only << "'\n";
    return kUsageError;
  }
  return failed == 0 ? kOk : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "aperylab: Apéry-like sequences, binomial transforms, and congruence "
      "certificates"};
  app.require_subcommand(1);
  std::string format_help = "Output format: json, csv, or text";
  auto format_check = CLI::IsMember({"json", "csv", "text"});

  TermsConfig terms;
  CLI::App* terms_cmd = app.add_subcommand("terms", "Print sequence terms");
  terms_cmd->add_option("sequences", terms.sequences,
                        "Sequence names (default: all 15)");
  terms_cmd->add_option("--n-max", terms.n_max, "Largest index to print");
  terms_cmd->add_option("--source", terms.source,
                        "Table source: formula, recurrence, or canonical");
  terms_cmd->add_option("--format", terms.format, format_help)
      ->check(format_check);
  terms_cmd->add_option("--cache", terms.cache_path,
                        "Term cache file to read, extend, and write back");
  terms_cmd->add_option("--hard-cap", terms.hard_cap, "Upper bound on n-max");

  TransformConfig transform;
  CLI::App* transform_cmd =
      app.add_subcommand("transform", "Print binomial transform values");
  transform_cmd->add_option("sequences", transform.sequences,
                            "Sequence names (default: all 15)");
  transform_cmd->add_option("--alpha", transform.alpha, "Transform point")
      ->required();
  transform_cmd->add_option("--n-max", transform.n_max,
                            "Largest index to print");
  transform_cmd->add_option("--source", transform.source,
                            "Table source: formula, recurrence, or canonical");
  transform_cmd->add_option("--format", transform.format, format_help)
      ->check(format_check);
  transform_cmd->add_option("--hard-cap", transform.hard_cap,
                            "Upper bound on n-max");

  CertifyConfig certify;
  CLI::App* certify_cmd = app.add_subcommand(
      "certify", "Certify the transform congruences of the sequences");
  certify_cmd->add_option("sequences", certify.sequences,
                          "Sequence names (default: all 15)");
  certify_cmd->add_option("--n-max", certify.n_max,
                          "Depth of the certificate checks");
  certify_cmd->add_option("--alpha-lo", certify.window_lo,
                          "Low end of the modulus comparison window");
  certify_cmd->add_option("--alpha-hi", certify.window_hi,
                          "High end of the modulus comparison window");
  CLI::Option* certify_alpha = certify_cmd->add_option(
      "--alpha", certify.alpha, "Also certify this transform point");
  certify_cmd->add_option("--eta-normalization", certify.eta_normalization,
                          "eta/s18 normalization: formula or recurrence");
  certify_cmd->add_option("--format", certify.format, format_help)
      ->check(format_check);
  certify_cmd->add_option("--hard-cap", certify.hard_cap,
                          "Upper bound on n-max");

  std::string tables_format = "text";
  CLI::App* tables_cmd = app.add_subcommand(
      "tables", "Reproduce the (u1, N) table and diff against the fixture");
  tables_cmd->add_option("--format", tables_format, format_help)
      ->check(format_check);

  GaussConfig gauss;
  CLI::App* gauss_cmd =
      app.add_subcommand("gauss", "Check the Gauss congruences");
  gauss_cmd->add_option("sequences", gauss.sequences,
                        "Sequence names (default: all 15)");
  CLI::Option* gauss_alpha = gauss_cmd->add_option(
      "--alpha", gauss.alpha, "Transform point (default: both 0 and u1)");
  gauss_cmd->add_option("--primes", gauss.primes, "Primes to test");
  gauss_cmd->add_option("--n-max", gauss.n_max, "Largest transform index");
  gauss_cmd->add_option("--eta-normalization", gauss.eta_normalization,
                        "eta/s18 normalization: formula or recurrence");
  gauss_cmd->add_option("--format", gauss.format, format_help)
      ->check(format_check);
  gauss_cmd->add_option("--hard-cap", gauss.hard_cap, "Upper bound on n-max");

  RecurrenceConfig recurrence;
  CLI::App* recurrence_cmd = app.add_subcommand(
      "recurrence", "Print the transform recurrence of a sequence");
  recurrence_cmd
      ->add_option("sequence", recurrence.sequence, "Sequence name")
      ->required();
  recurrence_cmd->add_option("--alpha", recurrence.alpha, "Transform point")
      ->required();
  recurrence_cmd->add_option("--format", recurrence.format, format_help)
      ->check(format_check);

  VerifyConfig verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the full verification suite");
  verify_cmd->add_option("--only", verify.only,
                         "Run only checks whose name contains this substring");
  verify_cmd->add_option("--parallelism", verify.parallelism,
                         "Worker threads (0 = hardware concurrency)");
  verify_cmd->add_option("--eta-normalization", verify.eta_normalization,
                         "eta/s18 normalization: formula or recurrence");
  verify_cmd->add_option("--format", verify.format, format_help)
      ->check(format_check);
  verify_cmd->add_flag("--no-timings", verify.no_timings,
                       "Zero the duration field for byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*terms_cmd) return cmd_terms(terms);
    if (*transform_cmd) return cmd_transform(transform);
    if (*certify_cmd) {
      certify.have_alpha = certify_alpha->count() > 0;
      return cmd_certify(certify);
    }
    if (*tables_cmd) return cmd_tables(tables_format);
    if (*gauss_cmd) {
      gauss.have_alpha = gauss_alpha->count() > 0;
      return cmd_gauss(gauss);
    }
    if (*recurrence_cmd) return cmd_recurrence(recurrence);
    if (*verify_cmd) return cmd_verify(verify);
  } catch (const apery::IntegralityViolation& e) {
    std::cerr << "integrity violation: " << e.what() << "\n";
    return kIntegrityError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    // Cache parse problems and similar configuration-level failures.
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kIntegrityError;
  }
  return kUsageError;
}
