#include "apery/sequences.hpp"

#include <array>
#include <cctype>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>

namespace apery {

namespace {

SequenceSpec make_second(SequenceId id, std::string name,
                         std::vector<std::string> aliases, long A, long B,
                         long lambda, long u1, long modulus) {
  SequenceSpec s;
  s.id = id;
  s.kind = SequenceKind::SecondKind;
  s.second = {Int(A), Int(B), Int(lambda)};
  s.name = std::move(name);
  s.aliases = std::move(aliases);
  s.table_u1 = u1;
  s.table_modulus = modulus;
  return s;
}

SequenceSpec make_first(SequenceId id, std::string name,
                        std::vector<std::string> aliases, long a, long b,
                        long c, long d, long u1, long modulus,
                        bool convention_sensitive = false) {
  SequenceSpec s;
  s.id = id;
  s.kind = SequenceKind::FirstKind;
  s.first = {Int(a), Int(b), Int(c), Int(d)};
  s.name = std::move(name);
  s.aliases = std::move(aliases);
  s.table_u1 = u1;
  s.table_modulus = modulus;
  s.convention_sensitive = convention_sensitive;
  return s;
}

}  // namespace

const std::vector<SequenceSpec>& all_specs() {
  static const std::vector<SequenceSpec> specs = {
      make_second(SequenceId::A, "A", {"Franel"}, 7, -8, 2, 2, 6),
      make_second(SequenceId::B, "B", {}, 9, 27, 3, 3, 6),
      make_second(SequenceId::C, "C", {}, 10, 9, 3, 3, 6),
      make_second(SequenceId::D, "D", {"Apery-zeta2"}, 11, -1, 3, 3, 10),
      make_second(SequenceId::E, "E", {}, 12, 32, 4, 4, 4),
      make_second(SequenceId::F, "F", {}, 17, 72, 6, 6, 6),
      make_first(SequenceId::Delta, "delta", {}, 7, 3, 81, 0, 3, 24),
      make_first(SequenceId::Eta, "eta", {}, 11, 5, 125, 0, 10, 10, true),
      make_first(SequenceId::Alpha, "alpha", {"Domb"}, 10, 4, 64, 0, 4, 12),
      make_first(SequenceId::Epsilon, "epsilon", {}, 12, 4, 16, 0, 4, 24),
      make_first(SequenceId::Zeta, "zeta", {}, 9, 3, -27, 0, 3, 6),
      make_first(SequenceId::Gamma, "gamma", {"Apery"}, 17, 5, 1, 0, 5, 24),
      make_first(SequenceId::S7, "s7", {}, 13, 4, -27, 3, 4, 8),
      make_first(SequenceId::S10, "s10", {}, 6, 2, -64, 4, 2, 2),
      make_first(SequenceId::S18, "s18", {}, 14, 6, 192, -12, 12, 12, true),
  };
  return specs;
}

const SequenceSpec& spec_for(SequenceId id) {
  return all_specs().at(static_cast<size_t>(id));
}

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

}  // namespace

const SequenceSpec* find_spec(std::string_view name) {
  for (const SequenceSpec& s : all_specs()) {
    if (iequals(s.name, name)) return &s;
    for (const std::string& a : s.aliases)
      if (iequals(a, name)) return &s;
  }
  return nullptr;
}

std::string_view id_name(SequenceId id) { return spec_for(id).name; }

std::string_view source_name(TermSource s) {
  switch (s) {
    case TermSource::Formula: return "formula";
    case TermSource::Recurrence: return "recurrence";
    case TermSource::Canonical: return "canonical";
  }
  return "?";
}

std::optional<TermSource> parse_source(std::string_view s) {
  if (s == "formula") return TermSource::Formula;
  if (s == "recurrence") return TermSource::Recurrence;
  if (s == "canonical") return TermSource::Canonical;
  return std::nullopt;
}

namespace {

std::vector<Int> power_table(long base, long max_exp) {
  std::vector<Int> p(static_cast<size_t>(max_exp) + 1);
  p[0] = 1;
  for (long i = 1; i <= max_exp; ++i) p[i] = p[i - 1] * base;
  return p;
}

// Closed forms of Tables 1-2.  `franel` supplies precomputed values of A
// for the F evaluator; when absent they are built on the spot.
Int formula_value(const SequenceSpec& spec, long n, BinomialCache& bc,
                  BinomialConvention conv, const std::vector<Int>* franel) {
  if (n < 0) throw std::domain_error("term_by_formula: n must be >= 0");
  Int sum = 0;
  switch (spec.id) {
    case SequenceId::A:
      for (long k = 0; k <= n; ++k) {
        const Int& c = bc.get(n, k);
        sum += c * c * c;
      }
      return sum;
    case SequenceId::B: {
      auto pow3 = power_table(3, n);
      for (long k = 0; 3 * k <= n; ++k) {
        Int t = pow3[n - 3 * k] * bc.get(n, 3 * k);
        t *= bc.get(3 * k, 2 * k);
        t *= bc.get(2 * k, k);
        k % 2 ? sum -= t : sum += t;
      }
      return sum;
    }
    case SequenceId::C:
      for (long k = 0; k <= n; ++k) {
        const Int& c = bc.get(n, k);
        sum += c * c * bc.get(2 * k, k);
      }
      return sum;
    case SequenceId::D:
      for (long k = 0; k <= n; ++k) {
        const Int& c = bc.get(n, k);
        sum += c * c * bc.get(n + k, k);
      }
      return sum;
    case SequenceId::E: {
      auto pow4 = power_table(4, n);
      for (long k = 0; 2 * k <= n; ++k) {
        Int t = pow4[n - 2 * k] * bc.get(n, 2 * k);
        const Int& c = bc.get(2 * k, k);
        t *= c * c;
        sum += t;
      }
      return sum;
    }
    case SequenceId::F: {
      std::vector<Int> local;
      if (!franel) {
        local.reserve(n + 1);
        for (long j = 0; j <= n; ++j)
          local.push_back(
              formula_value(spec_for(SequenceId::A), j, bc, conv, nullptr));
        franel = &local;
      }
      auto pow8 = power_table(8, n);
      for (long k = 0; k <= n; ++k) {
        Int t = pow8[n - k] * bc.get(n, k);
        t *= (*franel)[k];
        k % 2 ? sum -= t : sum += t;
      }
      return sum;
    }
    case SequenceId::Delta: {
      auto pow3 = power_table(3, n);
      for (long k = 0; 3 * k <= n; ++k) {
        Int t = pow3[n - 3 * k] * bc.get(n, 3 * k);
        t *= bc.get(n + k, k);
        t *= bc.get(3 * k, 2 * k);
        t *= bc.get(2 * k, k);
        k % 2 ? sum -= t : sum += t;
      }
      return sum;
    }
    case SequenceId::Eta: {
      if (n == 0) return 1;  // normalization; the raw sum would be 2
      for (long k = 0; k <= n; ++k) {
        const Int& c = bc.get(n, k);
        Int t = bc.get(4 * n - 5 * k - 1, 3 * n, conv);  // copy: scratch slot
        t += bc.get(4 * n - 5 * k, 3 * n, conv);
        t *= c * c * c;
        k % 2 ? sum -= t : sum += t;
      }
      return sum;
    }
    case SequenceId::Alpha:
      for (long k = 0; k <= n; ++k) {
        const Int& c = bc.get(n, k);
        Int t = c * c * bc.get(2 * k, k);
        t *= bc.get(2 * n - 2 * k, n - k);
        sum += t;
      }
      return sum;
    case SequenceId::Epsilon:
      for (long k = (n + 1) / 2; k <= n; ++k) {
        const Int& c = bc.get(n, k);
        const Int& m = bc.get(2 * k, n);
        sum += c * c * m * m;
      }
      return sum;
    case SequenceId::Zeta:
      for (long k = 0; k <= n; ++k) {
        const Int& c = bc.get(n, k);
        Int c2 = c * c;
        for (long l = std::max(0L, n - k); l <= k; ++l) {
          Int t = c2 * bc.get(n, l);
          t *= bc.get(k, l);
          t *= bc.get(k + l, n);
          sum += t;
        }
      }
      return sum;
    case SequenceId::Gamma:
      for (long k = 0; k <= n; ++k) {
        const Int& c = bc.get(n, k);
        const Int& m = bc.get(n + k, k);
        sum += c * c * m * m;
      }
      return sum;
    case SequenceId::S7:
      for (long k = 0; k <= n; ++k) {
        const Int& c = bc.get(n, k);
        Int t = c * c * bc.get(n + k, k);
        t *= bc.get(2 * k, n);
        sum += t;
      }
      return sum;
    case SequenceId::S10:
      for (long k = 0; k <= n; ++k) {
        const Int& c = bc.get(n, k);
        Int c2 = c * c;
        sum += c2 * c2;
      }
      return sum;
    case SequenceId::S18: {
      if (n == 0) return 1;  // normalization; the raw sum would be 2
      for (long k = 0; k <= n; ++k) {
        Int t = bc.get(2 * n - 3 * k - 1, n, conv);  // copy: scratch slot
        t += bc.get(2 * n - 3 * k, n, conv);
        t *= bc.get(n, k);
        t *= bc.get(2 * k, k);
        t *= bc.get(2 * n - 2 * k, n - k);
        k % 2 ? sum -= t : sum += t;
      }
      return sum;
    }
  }
  throw std::logic_error("formula_value: unknown sequence");
}

}  // namespace

Int term_by_formula(const SequenceSpec& spec, long n, BinomialCache& cache,
                    BinomialConvention conv) {
  return formula_value(spec, n, cache, conv, nullptr);
}

Int term_by_recurrence(const SequenceSpec& spec, long n,
                       std::span<const Int> prior) {
  if (n < 1 || static_cast<long>(prior.size()) < n)
    throw std::invalid_argument("term_by_recurrence: need terms 0..n-1");
  const Int& prev = prior[n - 1];
  Int m = n - 1;  // recurrence written at index m produces u_{m+1}
  Int numerator, divisor;
  if (spec.kind == SequenceKind::SecondKind) {
    const auto& p = spec.second;
    numerator = (p.A * m * m + p.A * m + p.lambda) * prev;
    if (n >= 2) numerator -= p.B * m * m * prior[n - 2];
    divisor = Int(n) * n;
  } else {
    const auto& p = spec.first;
    numerator = (2 * m + 1) * (p.a * m * m + p.a * m + p.b) * prev;
    if (n >= 2) numerator -= m * (p.c * m * m + p.d) * prior[n - 2];
    divisor = Int(n) * n * n;
  }
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(),
              divisor.get_mpz_t());
  if (r != 0) {
    std::ostringstream msg;
    msg << "integrality violation in " << spec.name << " at n = " << n
        << ": remainder " << r.get_str() << " when dividing by n^"
        << spec.recurrence_order();
    throw IntegralityViolation(spec.id, n, msg.str());
  }
  return q;
}

TermTable formula_table(const SequenceSpec& spec, long n_max,
                        BinomialConvention conv) {
  if (n_max < 0) throw std::invalid_argument("formula_table: n_max < 0");
  BinomialCache bc;
  TermTable t{spec.id, TermSource::Formula, {}};
  t.terms.reserve(n_max + 1);
  const std::vector<Int>* franel = nullptr;
  std::vector<Int> franel_store;
  if (spec.id == SequenceId::F) {
    franel_store.reserve(n_max + 1);
    const SequenceSpec& a = spec_for(SequenceId::A);
    for (long j = 0; j <= n_max; ++j)
      franel_store.push_back(formula_value(a, j, bc, conv, nullptr));
    franel = &franel_store;
  }
  for (long n = 0; n <= n_max; ++n)
    t.terms.push_back(formula_value(spec, n, bc, conv, franel));
  return t;
}

namespace {

TermTable recurrence_table(const SequenceSpec& spec, long n_max) {
  TermTable t{spec.id, TermSource::Recurrence, {}};
  t.terms.reserve(n_max + 1);
  t.terms.push_back(1);
  for (long n = 1; n <= n_max; ++n)
    t.terms.push_back(term_by_recurrence(spec, n, t.terms));
  return t;
}

// One-time certification that the canonical fast path (recurrence table,
// doubled for the convention-sensitive sequences) reproduces the closed form
// on a prefix.
void certify_canonical_prefix(const SequenceSpec& spec) {
  static std::mutex mu;
  static std::array<bool, kSequenceCount> certified{};
  std::lock_guard lock(mu);
  auto idx = static_cast<size_t>(spec.id);
  if (certified[idx]) return;
  auto report = cross_check(spec, 16);
  auto expected = spec.convention_sensitive
                      ? CrossCheckReport::Status::DoubledFormula
                      : CrossCheckReport::Status::Equal;
  if (report.status != expected)
    throw std::logic_error("canonical fast path refused for " + spec.name +
                           ": formula/recurrence prefix relation not certified");
  certified[idx] = true;
}

}  // namespace

TermTable generate(const SequenceSpec& spec, TermSource source, long n_max) {
  if (n_max < 0) throw std::invalid_argument("generate: n_max < 0");
  switch (source) {
    case TermSource::Formula:
      return formula_table(spec, n_max);
    case TermSource::Recurrence:
      return recurrence_table(spec, n_max);
    case TermSource::Canonical: {
      certify_canonical_prefix(spec);
      TermTable t = recurrence_table(spec, n_max);
      t.source = TermSource::Canonical;
      if (spec.convention_sensitive)
        for (long n = 1; n <= n_max; ++n) t.terms[n] *= 2;
      return t;
    }
  }
  throw std::logic_error("generate: unknown source");
}

CrossCheckReport cross_check(const SequenceSpec& spec, long n_max) {
  TermTable f = formula_table(spec, n_max);
  TermTable r = recurrence_table(spec, n_max);
  long first_diff = -1;
  for (long n = 0; n <= n_max; ++n)
    if (f.terms[n] != r.terms[n]) {
      first_diff = n;
      break;
    }
  if (first_diff < 0) return {CrossCheckReport::Status::Equal, std::nullopt};
  bool doubled = f.terms[0] == r.terms[0];
  for (long n = 1; doubled && n <= n_max; ++n)
    if (f.terms[n] != 2 * r.terms[n]) doubled = false;
  if (doubled) return {CrossCheckReport::Status::DoubledFormula, std::nullopt};
  return {CrossCheckReport::Status::Mismatch, first_diff};
}

void save_term_cache(const TermTable& table, std::ostream& out) {
  const SequenceSpec& spec = spec_for(table.id);
  for (long n = 0; n <= table.n_max(); ++n)
    out << spec.name << ',' << source_name(table.source) << ',' << n << ','
        << table.terms[n].get_str() << '\n';
}

TermTable load_term_cache(std::istream& in) {
  auto fail = [](long line, const std::string& why) {
    std::ostringstream msg;
    msg << "term cache line " << line << ": " << why;
    throw std::runtime_error(msg.str());
  };
  TermTable table{SequenceId::A, TermSource::Formula, {}};
  const SequenceSpec* spec = nullptr;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::array<std::string, 4> field;
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      size_t comma = line.find(',', pos);
      if (comma == std::string::npos) fail(lineno, "expected 4 fields");
      field[i] = line.substr(pos, comma - pos);
      pos = comma + 1;
    }
    field[3] = line.substr(pos);
    const SequenceSpec* s = find_spec(field[0]);
    if (!s) fail(lineno, "unknown sequence '" + field[0] + "'");
    auto src = parse_source(field[1]);
    if (!src) fail(lineno, "unknown source '" + field[1] + "'");
    if (!spec) {
      spec = s;
      table.id = s->id;
      table.source = *src;
    } else if (s != spec || *src != table.source) {
      fail(lineno, "mixed sequence ids or sources");
    }
    long n = -1;
    try {
      size_t used = 0;
      n = std::stol(field[2], &used);
      if (used != field[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      fail(lineno, "bad index '" + field[2] + "'");
    }
    if (n != static_cast<long>(table.terms.size()))
      fail(lineno, "indices not contiguous from 0");
    try {
      table.terms.emplace_back(field[3]);
    } catch (const std::exception&) {
      fail(lineno, "bad integer '" + field[3] + "'");
    }
  }
  if (table.terms.empty()) throw std::runtime_error("term cache: empty");
  if (table.terms[0] != 1) throw std::runtime_error("term cache: u_0 != 1");
  return table;
}

}  // namespace apery
