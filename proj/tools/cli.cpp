#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "kschur/kschur.hpp"
#include "kschur/serialize.hpp"

namespace kschur::cli {
namespace {

using json = nlohmann::json;

// Shapes above this many boxes (or alphabets above kGuardLetters) are refused
// by the enumerating verbs unless --force is given.
constexpr std::size_t kGuardBoxes = 12;
constexpr int kGuardLetters = 8;

struct Options {
  std::string shape;
  std::string lambda;
  std::string mu;
  int n = 0;
  std::string family;
  std::string kind = "set-valued";
  std::string format = "text";
  int max_weight = 0;
  int max_n = 0;
  bool skew = false;
  double time_budget = 0;
  int threads = default_thread_count();
  bool force = false;

  bool count_only = false;
  std::optional<int> size_cap;
  bool shortcut = false;
  std::string which = "all";
  int nx = 2;
  int ny = 2;
  bool minimal_only = false;
  std::string check_file;
  std::string out_file;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status { pass, fail, skip };

const char* status_text(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
  }
  return "?";
}

struct Record {
  explicit Record(std::string l) : label(std::move(l)) {}

  std::string label;
  Status status = Status::pass;
  std::string result;
  json data = json::object();
};

using Task = std::function<Record(int threads)>;

bool json_mode(const Options& o) { return o.format == "json"; }

void guard_scale(const SkewShape& s, int n, const Options& o) {
  if (o.force) return;
  if (s.size() > kGuardBoxes || n > kGuardLetters)
    throw UsageError("instance " + s.to_string() + " with n=" + std::to_string(n) +
                     " exceeds the enumeration guard (" + std::to_string(kGuardBoxes) + " boxes, " +
                     std::to_string(kGuardLetters) + " letters); pass --force to run it");
}

/// Instances (shape, n) named by --shape / -n or by --max-weight / --max-n.
std::vector<std::pair<SkewShape, int>> instances(const Options& o, bool allow_skew = true) {
  std::vector<SkewShape> shapes;
  if (!o.shape.empty()) {
    shapes.push_back(parse_shape(o.shape));
    if (!allow_skew && !shapes.back().inner().empty()) throw UsageError("this check needs a straight shape");
  } else if (o.max_weight > 0) {
    shapes = shapes_in_range(o.max_weight, o.skew && allow_skew);
  } else {
    throw UsageError("give --shape or --max-weight");
  }
  std::vector<int> ns;
  if (o.n > 0) {
    ns.push_back(o.n);
  } else if (o.max_n > 0) {
    for (int n = 1; n <= o.max_n; ++n) ns.push_back(n);
  } else {
    throw UsageError("give -n or --max-n");
  }
  std::vector<std::pair<SkewShape, int>> out;
  for (const auto& s : shapes)
    for (int n : ns) out.emplace_back(s, n);
  return out;
}

bool single_instance(const Options& o) { return !o.shape.empty() && o.n > 0; }

std::vector<FunctionFamily> k_families(const Options& o) {
  if (o.family.empty() || o.family == "both") return {FunctionFamily::GP, FunctionFamily::GQ};
  return {parse_function_family(o.family)};
}

std::vector<Family> tableau_families(const Options& o) {
  if (o.family.empty() || o.family == "both") return {Family::P, Family::Q};
  return {parse_family(o.family)};
}

/// Runs the tasks on up to o.threads workers, stopping new work once the time
/// budget is spent, and prints the finished records in task order.
int run_tasks(std::vector<Task> tasks, const Options& o, bool single, std::ostream& out) {
  const std::size_t total = tasks.size();
  std::vector<std::optional<Record>> done(total);
  const int workers = static_cast<int>(std::min<std::size_t>(std::max(1, o.threads), std::max<std::size_t>(total, 1)));
  const int inner_threads = workers > 1 ? 1 : std::max(1, o.threads);
  const auto start = std::chrono::steady_clock::now();
  auto expired = [&] {
    if (o.time_budget <= 0) return false;
    std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
    return used.count() >= o.time_budget;
  };

  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::optional<std::string> usage_error;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total || expired()) return;
      try {
        done[i] = tasks[i](inner_threads);
      } catch (const std::exception& e) {
        std::lock_guard lock(err_mutex);
        if (!usage_error) usage_error = e.what();
        next = total;
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (usage_error) throw UsageError(*usage_error);

  std::size_t pass = 0, fail = 0, skip = 0, finished = 0;
  for (const auto& r : done) {
    if (!r) continue;
    ++finished;
    switch (r->status) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; break;
      case Status::skip: ++skip; break;
    }
    if (json_mode(o)) {
      json line = {{"instance", r->label}, {"status", status_text(r->status)}, {"result", r->result}};
      for (auto& [k, v] : r->data.items()) line[k] = v;
      out << line.dump() << '\n';
    } else if (single) {
      out << r->result << '\n';
    } else {
      out << status_text(r->status) << ' ' << r->label << ' ' << r->result << '\n';
    }
  }
  if (!single) {
    if (json_mode(o)) {
      out << json{{"summary",
                   {{"pass", pass}, {"fail", fail}, {"skip", skip}, {"finished", finished}, {"total", total}}}}
                 .dump()
          << '\n';
    } else {
      out << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skip, coverage " << finished << '/'
          << total << '\n';
    }
  }
  return fail > 0 ? kFail : kPass;
}

// ---------------------------------------------------------------- verbs

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.shape.empty() || o.n <= 0) throw UsageError("enumerate needs --shape and -n");
  const SkewShape shape = parse_shape(o.shape);
  guard_scale(shape, o.n, o);
  const Family family = parse_family(o.family.empty() ? "P" : o.family);
  Kind kind;
  if (o.kind == "single") {
    kind = Kind::single;
  } else if (o.kind == "set-valued" || o.kind == "set") {
    kind = Kind::set_valued;
  } else {
    throw UsageError("unknown kind '" + o.kind + "'");
  }
  EnumSpec spec(shape, o.n, family, kind, o.size_cap);
  if (o.count_only) {
    const auto c = count(spec, o.threads);
    if (json_mode(o)) {
      out << json{{"count", c}}.dump() << '\n';
    } else {
      out << c << '\n';
    }
    return kPass;
  }
  std::uint64_t c = 0;
  Enumerator(spec).for_each([&](const Filling& f) {
    if (json_mode(o)) {
      out << to_json(f).dump() << '\n';
    } else {
      if (c) out << '\n';
      out << to_string(f);
    }
    ++c;
  });
  if (!json_mode(o)) out << (c ? "\n" : "") << "count: " << c << '\n';
  return kPass;
}

FunctionSpec spec_from_options(const Options& o, FunctionFamily family) {
  if (o.n <= 0) throw UsageError("give -n");
  if (!o.lambda.empty()) return FunctionSpec(family, parse_partition(o.lambda), parse_partition(o.mu), o.n);
  if (o.shape.empty()) throw UsageError("give --shape or --lambda");
  const SkewShape s = parse_shape(o.shape);
  return FunctionSpec(family, s.outer(), s.inner(), o.n);
}

int cmd_poly(const Options& o, std::ostream& out) {
  const FunctionSpec spec = spec_from_options(o, parse_function_family(o.family.empty() ? "GP" : o.family));
  guard_scale(SkewShape(spec.outer), spec.n, o);
  const LaurentPoly p = compute(spec, o.threads);
  if (json_mode(o)) {
    out << json{{"instance", spec.describe()}, {"poly", p.to_string()}, {"terms", to_json(p)["terms"]}}.dump()
        << '\n';
  } else {
    out << p.to_string() << '\n';
  }
  return kPass;
}

/// True when every lambda/nu in the double-skew sum has a tableau.
bool double_admissible(const StrictPartition& lambda, const StrictPartition& mu, Family f, int n) {
  if (!is_subpartition(mu, lambda)) return true;
  for (const auto& c : removal_choices(mu))
    if (!admissible(SkewShape(lambda, c.nu), f, n)) return false;
  return true;
}

int cmd_special_value(const Options& o, std::ostream& out) {
  std::vector<Task> tasks;
  for (const auto& [shape, n] : instances(o)) {
    for (FunctionFamily fam : k_families(o)) {
      if (!is_k_theoretic(fam)) throw UsageError("special-value takes GP, GQ, GPdouble or GQdouble");
      guard_scale(SkewShape(shape.outer()), n, o);
      tasks.push_back([shape, n, fam](int threads) {
        const FunctionSpec spec(fam, shape.outer(), shape.inner(), n);
        Record r{spec.describe()};
        const LaurentPoly v = special_value(spec, threads);
        LaurentPoly expected;
        bool in_scope;
        if (is_double(fam)) {
          expected = shape.inner().empty() ? LaurentPoly::beta_power(n, shape.outer().weight()) : LaurentPoly::zero(n);
          in_scope = double_admissible(shape.outer(), shape.inner(), tableau_family(fam), n);
        } else {
          expected = LaurentPoly::beta_power(n, static_cast<std::int64_t>(shape.size()));
          in_scope = admissible(shape, tableau_family(fam), n);
        }
        r.result = v.to_string();
        r.data["expected"] = expected.to_string();
        if (!in_scope) {
          r.status = Status::skip;
          r.data["reason"] = "empty tableau set";
        } else {
          r.status = v == expected ? Status::pass : Status::fail;
        }
        return r;
      });
    }
  }
  return run_tasks(std::move(tasks), o, single_instance(o) && k_families(o).size() == 1, out);
}

int cmd_parity(const Options& o, std::ostream& out) {
  std::vector<Task> tasks;
  for (const auto& [shape, n] : instances(o)) {
    for (FunctionFamily fam : k_families(o)) {
      if (fam != FunctionFamily::GP && fam != FunctionFamily::GQ) throw UsageError("parity takes GP or GQ");
      guard_scale(shape, n, o);
      tasks.push_back([shape, n, fam](int threads) {
        const FunctionSpec spec(fam, shape, n);
        Record r{spec.describe()};
        const ParityReport p = parity_report(spec, threads);
        r.result = "count=" + std::to_string(p.count) + " odd=" + (p.is_odd ? "true" : "false");
        r.data["count"] = p.count;
        r.data["odd"] = p.is_odd;
        if (p.count == 0) {
          r.status = Status::skip;
          r.data["reason"] = "empty tableau set";
        } else {
          r.status = p.is_odd ? Status::pass : Status::fail;
        }
        return r;
      });
    }
  }
  return run_tasks(std::move(tasks), o, single_instance(o) && k_families(o).size() == 1, out);
}

std::string boxes_text(const std::vector<Box>& boxes) {
  std::string s = "{";
  for (std::size_t i = 0; i < boxes.size(); ++i) s += (i ? "," : "") + to_string(boxes[i]);
  return s + "}";
}

LaurentPoly double_expected(const StrictPartition& lambda, const StrictPartition& mu, std::size_t nvars) {
  if (is_subpartition(mu, lambda) && mu.empty()) return LaurentPoly::beta_power(nvars, lambda.weight());
  return LaurentPoly::zero(nvars);
}

int cmd_double_skew(const Options& o, std::ostream& out) {
  std::vector<std::pair<StrictPartition, StrictPartition>> pairs;
  if (!o.lambda.empty()) {
    pairs.emplace_back(parse_partition(o.lambda), parse_partition(o.mu));
  } else if (o.max_weight > 0) {
    for (const auto& s : nonempty_inner_pairs(o.max_weight)) pairs.emplace_back(s.outer(), s.inner());
  } else {
    throw UsageError("give --lambda/--mu or --max-weight");
  }

  if (o.shortcut) {
    const bool single = pairs.size() == 1;
    std::size_t fails = 0;
    for (const auto& [lambda, mu] : pairs) {
      const DoubleSkewShortcut sc = double_skew_shortcut(lambda, mu);
      const LaurentPoly expected = double_expected(lambda, mu, 0);
      const bool ok = sc.value == expected;
      if (!ok) ++fails;
      const std::string label = lambda.to_string() + "//" + mu.to_string();
      if (json_mode(o)) {
        json terms = json::array();
        for (const auto& t : sc.terms) {
          json removed = json::array();
          for (const Box& b : t.removed) removed.push_back(to_json(b));
          terms.push_back(json{{"nu", to_json(t.nu)}, {"removed", removed}, {"sign", t.sign},
                               {"b", t.beta_exponent}});
        }
        out << json{{"instance", label},
                    {"status", ok ? "PASS" : "FAIL"},
                    {"result", sc.value.to_string()},
                    {"removable", sc.removable},
                    {"terms", terms}}
                   .dump()
            << '\n';
      } else if (single) {
        out << sc.value.to_string() << '\n';
        for (const auto& t : sc.terms)
          out << "nu=" << t.nu.to_string() << " removed=" << boxes_text(t.removed) << ' '
              << (t.sign > 0 ? "+" : "-") << "b^" << t.beta_exponent << '\n';
      } else {
        out << (ok ? "PASS " : "FAIL ") << label << ' ' << sc.value.to_string() << " terms=" << sc.terms.size()
            << '\n';
      }
    }
    if (!single && !json_mode(o))
      out << "summary: " << pairs.size() - fails << " pass, " << fails << " fail, 0 skip, coverage " << pairs.size()
          << '/' << pairs.size() << '\n';
    return fails ? kFail : kPass;
  }

  std::vector<int> ns;
  if (o.n > 0) {
    ns.push_back(o.n);
  } else if (o.max_n > 0) {
    for (int n = 1; n <= o.max_n; ++n) ns.push_back(n);
  } else {
    throw UsageError("the tableau route needs -n or --max-n (or pass --shortcut)");
  }
  std::vector<FunctionFamily> fams;
  for (FunctionFamily f : k_families(o)) {
    if (f == FunctionFamily::GP || f == FunctionFamily::GPdouble) fams.push_back(FunctionFamily::GPdouble);
    else if (f == FunctionFamily::GQ || f == FunctionFamily::GQdouble) fams.push_back(FunctionFamily::GQdouble);
    else throw UsageError("double-skew takes GP or GQ");
  }
  std::vector<Task> tasks;
  for (const auto& [lambda, mu] : pairs) {
    for (int n : ns) {
      for (FunctionFamily fam : fams) {
        guard_scale(SkewShape(lambda), n, o);
        tasks.push_back([lambda, mu, n, fam](int threads) {
          const FunctionSpec spec(fam, lambda, mu, n);
          Record r{spec.describe()};
          const LaurentPoly full = special_value(spec, threads);
          const LaurentPoly shortcut = double_skew_shortcut(lambda, mu, static_cast<std::size_t>(n)).value;
          r.result = full.to_string();
          r.data["shortcut"] = shortcut.to_string();
          if (!double_admissible(lambda, mu, tableau_family(fam), n)) {
            r.status = Status::skip;
            r.data["reason"] = "empty tableau set";
          } else {
            r.status = (full == shortcut && full == double_expected(lambda, mu, static_cast<std::size_t>(n)))
                           ? Status::pass
                           : Status::fail;
          }
          return r;
        });
      }
    }
  }
  const bool single = pairs.size() == 1 && ns.size() == 1 && fams.size() == 1;
  return run_tasks(std::move(tasks), o, single, out);
}

int cmd_identity(const Options& o, std::ostream& out) {
  const bool all = o.which == "all";
  if (!all && o.which != "beta-zero" && o.which != "pq" && o.which != "coproduct")
    throw UsageError("--which takes beta-zero, pq, coproduct or all");
  std::vector<Task> tasks;
  if (all || o.which == "beta-zero") {
    for (const auto& [shape, n] : instances(o)) {
      for (Family f : tableau_families(o)) {
        guard_scale(shape, n, o);
        tasks.push_back([shape, n, f](int threads) {
          const FunctionSpec k(k_family(f), shape, n);
          const FunctionSpec plain(f == Family::P ? FunctionFamily::P : FunctionFamily::Q, shape, n);
          Record r{"beta-zero " + k.describe()};
          const LaurentPoly residual = beta_zero(k, threads) - compute(plain, threads);
          r.result = "residual=" + residual.to_string();
          r.status = residual.is_zero() ? Status::pass : Status::fail;
          return r;
        });
      }
    }
  }
  if (all || o.which == "pq") {
    for (const auto& [shape, n] : instances(o)) {
      if (!shape.inner().empty()) continue;
      guard_scale(shape, n, o);
      tasks.push_back([shape, n](int threads) {
        const FunctionSpec p(FunctionFamily::P, shape, n);
        const FunctionSpec q(FunctionFamily::Q, shape, n);
        Record r{"pq " + q.describe()};
        const LaurentPoly scale = LaurentPoly::constant(n, BigInt(1) << shape.outer().length());
        const LaurentPoly residual = compute(q, threads) - scale * compute(p, threads);
        r.result = "residual=" + residual.to_string();
        r.status = residual.is_zero() ? Status::pass : Status::fail;
        return r;
      });
    }
  }
  if (all || o.which == "coproduct") {
    std::vector<StrictPartition> lambdas;
    if (!o.shape.empty()) {
      const SkewShape s = parse_shape(o.shape);
      if (!s.inner().empty()) throw UsageError("coproduct needs a straight shape");
      lambdas.push_back(s.outer());
    } else if (o.max_weight > 0) {
      for (const auto& s : shapes_in_range(o.max_weight, false)) lambdas.push_back(s.outer());
    } else {
      throw UsageError("give --shape or --max-weight");
    }
    std::vector<FunctionFamily> fams = {FunctionFamily::P, FunctionFamily::Q, FunctionFamily::GP, FunctionFamily::GQ};
    if (!o.family.empty() && o.family != "both" && o.family != "all") fams = {parse_function_family(o.family)};
    for (const auto& lambda : lambdas) {
      if (lambda.weight() > 6) throw UsageError("coproduct is limited to |lambda| <= 6");
      for (FunctionFamily fam : fams) {
        const int nx = o.nx, ny = o.ny;
        tasks.push_back([lambda, fam, nx, ny](int threads) {
          Record r{std::string("coproduct ") + to_string(fam) + "[" + lambda.to_string() + "; nx=" +
                   std::to_string(nx) + ", ny=" + std::to_string(ny) + "]"};
          const CoproductReport c = coproduct_check(lambda, nx, ny, fam, threads);
          r.result = "residual=" + c.residual.to_string();
          r.data["nu_terms"] = c.nu_terms;
          r.status = c.equal ? Status::pass : Status::fail;
          return r;
        });
      }
    }
  }
  return run_tasks(std::move(tasks), o, false, out);
}

std::string element_text(const CertElement& e) { return boxes_text(e.removed); }

int cmd_pair(const Options& o, std::ostream& out, std::ostream& err) {
  PairingCertificate cert;
  bool loaded = false;
  if (!o.check_file.empty()) {
    std::ifstream in(o.check_file);
    if (!in) throw UsageError("cannot open " + o.check_file);
    try {
      cert = certificate_from_json(json::parse(in));
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed certificate: ") + e.what());
    }
    loaded = true;
  } else {
    if (o.lambda.empty() || o.mu.empty() || o.n <= 0) throw UsageError("pair needs --lambda, --mu and -n");
    const StrictPartition lambda = parse_partition(o.lambda);
    const StrictPartition mu = parse_partition(o.mu);
    if (!o.minimal_only) guard_scale(SkewShape(lambda), o.n, o);
    cert = pairing_certificate(lambda, mu, o.n, parse_family(o.family.empty() ? "P" : o.family), o.minimal_only,
                               o.force ? UINT64_MAX : kCertificateLimit);
  }
  const CertificateCheck check = check_certificate(cert);

  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file);
    if (!file) throw UsageError("cannot write " + o.out_file);
    file << to_json(cert).dump() << '\n';
  }
  std::size_t iota_pairs = 0, pi_pairs = 0;
  for (const auto& p : cert.pairs) (p.tag == PairTag::iota ? iota_pairs : pi_pairs)++;

  if (json_mode(o)) {
    if (loaded) {
      out << json{{"check", check.ok}, {"elements", check.elements}, {"message", check.message}}.dump() << '\n';
    } else {
      out << to_json(cert).dump() << '\n';
    }
  } else {
    if (!loaded)
      for (const auto& p : cert.pairs)
        if (p.tag == PairTag::pi) out << "pi " << element_text(p.first) << " <-> " << element_text(p.second) << '\n';
    out << "pairs=" << cert.pairs.size() << " iota=" << iota_pairs << " pi=" << pi_pairs
        << " leftover=" << cert.leftover.size() << " elements=" << check.elements
        << " check=" << (check.ok ? "ok" : "failed") << '\n';
  }
  if (!check.ok) {
    err << "certificate check failed: " << check.message << '\n';
    return kFail;
  }
  return kPass;
}

int cmd_verify_involution(const Options& o, std::ostream& out) {
  std::vector<Task> tasks;
  for (const auto& [shape, n] : instances(o)) {
    for (Family f : tableau_families(o)) {
      guard_scale(shape, n, o);
      tasks.push_back([shape, n, f](int threads) {
        const FunctionSpec spec(k_family(f), shape, n);
        Record r{spec.describe()};
        const InvolutionReport rep = verify_involution(shape, f, n);
        if (!rep.admissible) {
          r.status = Status::skip;
          r.result = "empty tableau set";
          return r;
        }
        const LaurentPoly sv = special_value(spec, threads);
        const LaurentPoly from_count =
            LaurentPoly::beta_power(n, static_cast<std::int64_t>(shape.size())) *
            LaurentPoly::constant(n, BigInt(rep.signed_count));
        r.result = "tableaux=" + std::to_string(rep.tableaux) + " violations=" + std::to_string(rep.violations()) +
                   " signed=" + std::to_string(rep.signed_count);
        r.data = {{"tableaux", rep.tableaux},
                  {"not_involutive", rep.not_involutive},
                  {"fixed", rep.fixed},
                  {"size_change", rep.size_change},
                  {"invalid_image", rep.invalid_image},
                  {"hits_minimal", rep.hits_minimal},
                  {"signed_count", rep.signed_count},
                  {"special_value", sv.to_string()}};
        r.status = (rep.ok() && rep.signed_count == 1 && sv == from_count) ? Status::pass : Status::fail;
        return r;
      });
    }
  }
  return run_tasks(std::move(tasks), o, false, out);
}

std::string oracle_mismatch(const EnumSpec& spec) {
  auto fast = enumerate(spec);
  auto slow = naive_oracle(spec);
  auto less = [](const Filling& a, const Filling& b) { return cells_less(a, b); };
  std::sort(fast.begin(), fast.end(), less);
  std::sort(slow.begin(), slow.end(), less);
  if (fast.size() != slow.size())
    return std::string(to_string(spec.family)) + "/" + to_string(spec.kind) + " count " +
           std::to_string(fast.size()) + " vs oracle " + std::to_string(slow.size());
  for (std::size_t i = 0; i < fast.size(); ++i)
    if (!(fast[i] == slow[i])) return std::string(to_string(spec.family)) + "/" + to_string(spec.kind) + " differs";
  return {};
}

/// Compares the greedy minimal tableau with the exhaustive least-sum search.
std::string minimal_mismatch(const SkewShape& shape, Family f, int n) {
  const auto all = naive_oracle(EnumSpec(shape, n, f, Kind::single));
  if (all.empty()) return admissible(shape, f, n) ? "greedy found a tableau the oracle did not" : "";
  auto sum = [](const Filling& t) {
    int s = 0;
    for (CellSet c : t.cells()) s += c.min().code();
    return s;
  };
  int best = sum(all.front());
  for (const auto& t : all) best = std::min(best, sum(t));
  std::vector<const Filling*> winners;
  for (const auto& t : all)
    if (sum(t) == best) winners.push_back(&t);
  if (winners.size() != 1) return "least sum attained " + std::to_string(winners.size()) + " times";
  if (!admissible(shape, f, n)) return "greedy reports an empty set";
  if (!(minimal_tableau(shape, f, n) == *winners.front())) return "greedy differs from least-sum tableau";
  return {};
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
  std::vector<Task> tasks;
  const bool single = single_instance(o);
  for (const auto& [shape, n] : instances(o)) {
    if (shape.size() > 5 || n > 2) {
      if (single) throw UsageError("oracle scale exceeded: at most 5 boxes and n <= 2");
      continue;
    }
    tasks.push_back([shape, n](int) {
      Record r{shape.to_string() + " n=" + std::to_string(n)};
      std::string problem;
      std::uint64_t checked = 0;
      for (Family f : {Family::P, Family::Q}) {
        for (Kind k : {Kind::single, Kind::set_valued}) {
          const EnumSpec spec(shape, n, f, k);
          checked += count(spec);
          if (problem.empty()) problem = oracle_mismatch(spec);
        }
        if (problem.empty()) problem = minimal_mismatch(shape, f, n);
      }
      r.status = problem.empty() ? Status::pass : Status::fail;
      r.result = problem.empty() ? "tableaux=" + std::to_string(checked) : problem;
      return r;
    });
  }
  return run_tasks(std::move(tasks), o, false, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Shifted tableaux, K-theoretic P/Q functions and their identity checks.", "kschur"};
  app.require_subcommand(1, 1);

  auto shape_opts = [&o](CLI::App* s) {
    s->add_option("--shape", o.shape, "shape such as 4,2,1 or 6,4,3,1/4,2");
    s->add_option("-n", o.n, "largest letter")->check(CLI::Range(1, kMaxLetters));
    s->add_option("--family", o.family, "function or tableau family");
  };
  auto sweep_opts = [&o](CLI::App* s) {
    s->add_option("--max-weight", o.max_weight, "sweep every strict lambda up to this weight")
        ->check(CLI::Range(1, 30));
    s->add_option("--max-n", o.max_n, "sweep n = 1..max-n")->check(CLI::Range(1, kMaxLetters));
    s->add_flag("--skew", o.skew, "include every inner partition in the sweep");
  };
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--time-budget", o.time_budget, "seconds before a sweep stops starting new instances");
  app.add_option("--threads", o.threads, "worker threads (default from KSCHUR_THREADS)")
      ->check(CLI::Range(1, 256));
  app.add_flag("--force", o.force, "lift the enumeration size guard");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list tableaux of a shape");
  shape_opts(enumerate_cmd);
  enumerate_cmd->add_option("--kind", o.kind, "single or set-valued");
  enumerate_cmd->add_flag("--count-only", o.count_only, "print only the number of tableaux");
  enumerate_cmd->add_option("--size-cap", o.size_cap, "largest total number of entries");

  auto* poly_cmd = app.add_subcommand("poly", "generating polynomial of one shape");
  shape_opts(poly_cmd);
  poly_cmd->add_option("--lambda", o.lambda, "outer partition (double families)");
  poly_cmd->add_option("--mu", o.mu, "inner partition (double families)");

  auto* special_cmd = app.add_subcommand("special-value", "value at x_i = b, b -> -1/b");
  shape_opts(special_cmd);
  sweep_opts(special_cmd);

  auto* parity_cmd = app.add_subcommand("parity", "number of set-valued tableaux and its parity");
  shape_opts(parity_cmd);
  sweep_opts(parity_cmd);

  auto* double_cmd = app.add_subcommand("double-skew", "double-skew special value");
  shape_opts(double_cmd);
  sweep_opts(double_cmd);
  double_cmd->add_option("--lambda", o.lambda, "outer partition");
  double_cmd->add_option("--mu", o.mu, "inner partition");
  double_cmd->add_flag("--shortcut", o.shortcut, "sum the skew special values instead of enumerating");

  auto* identity_cmd = app.add_subcommand("identity", "beta = 0, Q = 2^l P and coproduct checks");
  shape_opts(identity_cmd);
  sweep_opts(identity_cmd);
  identity_cmd->add_option("--which", o.which, "beta-zero, pq, coproduct or all");
  identity_cmd->add_option("--nx", o.nx, "x variables for the coproduct")->check(CLI::Range(0, kMaxLetters));
  identity_cmd->add_option("--ny", o.ny, "y variables for the coproduct")->check(CLI::Range(0, kMaxLetters));

  auto* pair_cmd = app.add_subcommand("pair", "pairing certificate for a double-skew sum");
  shape_opts(pair_cmd);
  pair_cmd->add_option("--lambda", o.lambda, "outer partition");
  pair_cmd->add_option("--mu", o.mu, "inner partition");
  pair_cmd->add_flag("--minimal-only", o.minimal_only, "pair only the minimal tableaux");
  pair_cmd->add_option("--check", o.check_file, "re-validate a stored certificate");
  pair_cmd->add_option("--out", o.out_file, "write the certificate to this file");

  auto* involution_cmd = app.add_subcommand("verify-involution", "check iota on every set-valued tableau");
  shape_opts(involution_cmd);
  sweep_opts(involution_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle-check", "compare enumeration with brute force");
  shape_opts(oracle_cmd);
  sweep_opts(oracle_cmd);

  for (auto* s : app.get_subcommands([](const CLI::App*) { return true; })) {
    s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--time-budget", o.time_budget, "seconds before a sweep stops starting new instances");
    s->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
    s->add_flag("--force", o.force, "lift the enumeration size guard");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (enumerate_cmd->parsed()) return cmd_enumerate(o, out);
    if (poly_cmd->parsed()) return cmd_poly(o, out);
    if (special_cmd->parsed()) return cmd_special_value(o, out);
    if (parity_cmd->parsed()) return cmd_parity(o, out);
    if (double_cmd->parsed()) return cmd_double_skew(o, out);
    if (identity_cmd->parsed()) return cmd_identity(o, out);
    if (pair_cmd->parsed()) return cmd_pair(o, out, err);
    if (involution_cmd->parsed()) return cmd_verify_involution(o, out);
    if (oracle_cmd->parsed()) return cmd_oracle_check(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace kschur::cli
