#include "indcert/bench.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "indcert/certificate.hpp"
#include "indcert/parser.hpp"
#include "indcert/process.hpp"

namespace indcert::bench {

namespace fs = std::filesystem;

std::string Variant::name() const {
  switch (kind) {
    case Kind::Unbounded: return "unbounded";
    case Kind::Lower: return "lower";
    case Kind::Bounded: return "bounded" + std::to_string(c);
  }
  return "?";
}

std::optional<Variant> Variant::parse(const std::string& name) {
  if (name == "unbounded") return Variant{Kind::Unbounded, 0};
  if (name == "lower") return Variant{Kind::Lower, 0};
  if (name.rfind("bounded", 0) == 0 && name.size() > 7) {
    std::string digits = name.substr(7);
    if (digits.size() <= 2 && std::all_of(digits.begin(), digits.end(), ::isdigit))
      return Variant{Kind::Bounded, std::stoi(digits)};
  }
  return std::nullopt;
}

std::vector<Variant> Variant::standard() {
  std::vector<Variant> out = {{Variant::Kind::Unbounded, 0}, {Variant::Kind::Lower, 0}};
  for (int c = 1; c <= 5; ++c) out.push_back({Variant::Kind::Bounded, c});
  return out;
}

namespace {

using sexpr::SExpr;

SExpr atom(std::string text) {
  SExpr e;
  e.text = std::move(text);
  return e;
}

SExpr list(std::vector<SExpr> items) {
  SExpr e;
  e.kind = SExpr::Kind::List;
  e.items = std::move(items);
  return e;
}

bool guard_quantifier(SExpr& f, const Variant& v) {
  if (f.is_call("forall") && f.items.size() == 3 && f.items[1].is_list() && f.items[1].items.size() == 1) {
    const std::string var = f.items[1].items[0].items.at(0).text;
    SExpr lower = list({atom("<="), atom("0"), atom(var)});
    SExpr guard = lower;
    if (v.kind == Variant::Kind::Bounded)
      guard = list({atom("and"), lower, list({atom("<="), atom(var), atom("1" + std::string(v.c, '0'))})});
    f.items[2] = list({atom("=>"), guard, f.items[2]});
    return true;
  }
  if (f.is_call("and"))
    for (std::size_t i = 1; i < f.items.size(); ++i)
      if (guard_quantifier(f.items[i], v)) return true;
  return false;
}

}  // namespace

std::string make_variant(std::string_view template_text, const Variant& v, const std::string& origin) {
  auto commands = sexpr::read_all(template_text);
  bool found = v.kind == Variant::Kind::Unbounded;
  if (!found)
    for (auto& cmd : commands)
      if (cmd.is_call("assert") && cmd.items.size() == 2 && guard_quantifier(cmd.items[1], v)) {
        found = true;
        break;
      }
  if (!found) throw std::invalid_argument(origin + ": no universally quantified assertion to guard");
  std::string out = "; " + v.name() + " variant of " + origin + "\n";
  for (const auto& cmd : commands) out += sexpr::to_string(cmd) + "\n";
  return out;
}

namespace {

std::string read_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<fs::path> sorted_files(const fs::path& dir, const std::string& ext) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ext) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<fs::path> generate_corpus(const fs::path& dir) {
  fs::path out_dir = dir / "generated";
  fs::create_directories(out_dir);
  std::vector<fs::path> written;
  for (const auto& tpl : sorted_files(dir / "templates", ".smt2")) {
    std::string text = read_file(tpl);
    std::string name = tpl.stem().string();
    for (const auto& v : Variant::standard()) {
      fs::path file = out_dir / (name + "." + v.name() + ".smt2");
      std::ofstream out(file, std::ios::binary);
      out << make_variant(text, v, tpl.filename().string());
      if (!out) throw std::runtime_error("cannot write " + file.string());
      written.push_back(file);
    }
  }
  return written;
}

std::map<std::string, std::string> read_golden(const fs::path& file) {
  std::map<std::string, std::string> out;
  std::istringstream in(read_file(file));
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string name, verdict;
    if (!(words >> name)) continue;
    if (!(words >> verdict)) throw std::runtime_error(file.string() + ": missing verdict for " + name);
    out[name] = verdict;
  }
  return out;
}

std::vector<BenchCase> load_corpus(const fs::path& dir) {
  std::map<std::string, std::string> golden;
  if (fs::exists(dir / "golden.txt")) golden = read_golden(dir / "golden.txt");
  std::vector<BenchCase> cases;
  for (const auto& file : sorted_files(dir / "generated", ".smt2")) {
    std::string stem = file.stem().string();  // name.variant
    auto dot = stem.rfind('.');
    if (dot == std::string::npos) continue;
    auto v = Variant::parse(stem.substr(dot + 1));
    if (!v) continue;
    BenchCase c{stem.substr(0, dot), *v, file, std::nullopt};
    if (auto it = golden.find(stem); it != golden.end()) c.expected = it->second;
    cases.push_back(std::move(c));
  }
  return cases;
}

BaselineResult run_baseline(const fs::path& file, const std::string& command, std::chrono::milliseconds timeout) {
  std::istringstream in(command);
  std::vector<std::string> argv;
  for (std::string w; in >> w;) argv.push_back(w);
  argv.push_back(file.string());
  BaselineResult r;
  try {
    CommandResult res = run_command(argv, timeout);
    r.elapsed = res.elapsed;
    if (res.timed_out) {
      r.verdict = "timeout";
      return r;
    }
    std::istringstream lines(res.out);
    std::string first;
    std::getline(lines, first);
    while (!first.empty() && std::isspace(static_cast<unsigned char>(first.back()))) first.pop_back();
    r.verdict = first == "sat" || first == "unsat" || first == "unknown" ? first : "error";
  } catch (const std::exception&) {
    r.verdict = "error";
  }
  return r;
}

BenchRow run_case(const BenchCase& c, const SolverConfig& cfg, const SuiteOptions& opts) {
  BenchRow row;
  row.name = c.name;
  row.variant = c.variant.name();
  auto start = std::chrono::steady_clock::now();
  try {
    FragmentProblem p = analyze(parse(read_file(c.file)));
    SatOutcome r = solve(p, opts.engine, cfg);
    row.verdict = to_string(r.outcome);
    row.iterations = r.stats.iterations;
    row.obligations = r.stats.obligation_checks;
    row.blocked = r.stats.blocked_patterns;
    row.detail = r.detail;
    if (r.outcome == Outcome::Sat && opts.check_certificates) {
      Verdict v = check(p, *r.cert, cfg);
      row.checked = true;
      row.certified = v.accepted();
      for (const auto& f : v.failures) row.detail += (row.detail.empty() ? "" : "; ") + f.obligation;
    }
  } catch (const std::exception& e) {
    row.verdict = "error";
    row.detail = e.what();
  }
  row.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  if (opts.baseline) row.baseline = run_baseline(c.file, *opts.baseline, opts.baseline_timeout);
  return row;
}

std::vector<BenchRow> run_suite(const std::vector<BenchCase>& cases, const SolverConfig& cfg,
                                const SuiteOptions& opts) {
  std::vector<BenchRow> rows(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) rows[i] = run_case(cases[i], cfg, opts);
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  bool baseline = std::any_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.baseline.has_value(); });
  out << "name,variant,verdict,iterations,obligations,blocked,ms";
  if (baseline) out << ",baseline_verdict,baseline_ms";
  out << "\n";
  for (const auto& r : rows) {
    out << r.name << ',' << r.variant << ',' << r.verdict << ',' << r.iterations << ',' << r.obligations << ','
        << r.blocked << ',' << r.elapsed.count();
    if (baseline) {
      if (r.baseline)
        out << ',' << r.baseline->verdict << ',' << r.baseline->elapsed.count();
      else
        out << ",,";
    }
    out << "\n";
  }
}

std::vector<std::string> mismatches(const std::vector<BenchCase>& cases, const std::vector<BenchRow>& rows) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cases.size() && i < rows.size(); ++i) {
    const auto& c = cases[i];
    const auto& r = rows[i];
    std::string id = c.name + "." + c.variant.name();
    if (!c.expected)
      out.push_back(id + ": no golden verdict");
    else if (*c.expected != r.verdict)
      out.push_back(id + ": expected " + *c.expected + ", got " + r.verdict +
                    (r.detail.empty() ? "" : " (" + r.detail + ")"));
    else if (r.verdict == "sat" && r.checked && !r.certified)
      out.push_back(id + ": certificate rejected (" + r.detail + ")");
  }
  return out;
}

}  // namespace indcert::bench
