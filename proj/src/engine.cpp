#include "indcert/engine.hpp"

#include <algorithm>

namespace indcert {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Sat: return "sat";
    case Outcome::Unsat: return "unsat";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::None: return "none";
    case UnknownReason::Budget: return "budget";
    case UnknownReason::SolverUnknown: return "solver-unknown";
    case UnknownReason::UnsupportedObligation: return "unsupported-obligation";
  }
  return "?";
}

ObligationOracle::ObligationOracle(const FragmentProblem& p, SolverConfig cfg) : p_(p), cfg_(std::move(cfg)) {
  // constants that survive abstraction, i.e. occur outside arguments
  q_consts_ = symbols_of(propagability(p, {})).int_consts;
}

Validity ObligationOracle::query(Sign s, const std::set<std::size_t>& selected,
                                 const std::map<std::string, Int>& consts) {
  auto key = std::make_tuple(s, selected, consts);
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++memo_hits_;
    return it->second;
  }
  Formula phi = propagability(p_, selected);
  if (!consts.empty())
    phi = map_consts(phi, [&](const Term& k) {
      auto it = consts.find(k.name());
      return it == consts.end() ? k : Term::num(it->second);
    });
  Validity r = check_validity(cfg_, phi);
  memo_.emplace(key, r);
  records_.push_back({s, selected, consts, r});
  return r;
}

bool ObligationOracle::holds_for_some_consts(const std::set<std::size_t>& selected) {
  if (auto it = some_consts_.find(selected); it != some_consts_.end()) return it->second;
  bool some = true;
  try {
    Session s(cfg_, Logic::QuantifiedLIA);
    s.add(propagability(p_, selected));
    some = s.check() != Status::Unsat;
  } catch (const SolverTimeout&) {
  }
  some_consts_.emplace(selected, some);
  return some;
}

ObligationOracle::Answer ObligationOracle::check(Sign s, const std::set<std::size_t>& selected,
                                                 const CellInterpretation& model) {
  Validity general = query(s, selected, {});
  if (general == Validity::Valid || q_consts_.empty()) return {general, {}};
  if (general == Validity::Invalid && !holds_for_some_consts(selected)) return {general, {}};
  // Q mentions constants outside function arguments: the obligation may
  // hold for the values the selector model chose.
  std::map<std::string, Int> values;
  for (const auto& c : q_consts_) {
    auto v = model.get(Cell::constant(c));
    if (!v) return {general, {}};
    values[c] = *v;
  }
  Validity specific = query(s, selected, values);
  return {specific, values};
}

Interval initial_interval(const FragmentProblem& p, const EngineOptions& opts) {
  Interval b;
  if (opts.init_interval) {
    b = *opts.init_interval;
  } else if (opts.seed_from_ground) {
    for (const auto& [name, info] : p.funcs)
      for (const auto& a : info.f_args)
        if (a.is_num()) {
          b.lo = std::min(b.lo, a.value());
          b.hi = std::max(b.hi, a.value());
        }
  }
  const Guard& g = p.guard;
  if (g.kind != Guard::Kind::Unbounded) {
    b.lo = g.lo;
    b.hi = std::max(b.hi, g.lo);
  }
  if (g.kind == Guard::Kind::DoublyBounded) {
    b.hi = std::min(b.hi, g.hi);
    if (g.hi - g.lo + 1 < opts.finite_threshold) b.hi = g.hi;
  }
  return b;
}

namespace {

Interval expand(const Interval& b, const Guard& g) {
  switch (g.kind) {
    case Guard::Kind::Unbounded: return {b.lo - 1, b.hi + 1};
    case Guard::Kind::LowerBounded: return {b.lo, b.hi + 1};
    case Guard::Kind::DoublyBounded: return {b.lo, std::min<Int>(b.hi + 1, g.hi)};
  }
  return b;
}

bool covers_guard(const Interval& b, const Guard& g) {
  return g.kind == Guard::Kind::DoublyBounded && b.lo <= g.lo && g.hi <= b.hi;
}

/// Declares every constant of the problem so that selector models carry
/// values for constants that only occur outside function arguments.
Formula mention_constants(const FragmentProblem& p) {
  std::vector<Formula> parts;
  for (const auto& c : p.consts) parts.push_back(Formula::atom(Rel::Eq, Term::constant(c), Term::constant(c)));
  return conjoin(parts);
}

struct PatternSearch {
  enum class Result { Found, Exhausted, SolverUnknown, Capped };

  Result result = Result::Exhausted;
  std::map<Sign, std::set<std::size_t>> patterns;
  CellInterpretation model;
};

/// Looks for selector patterns whose obligations are valid, adding blocking
/// clauses for refuted ones. The session holds the encodings already.
PatternSearch search_patterns(Session& session, const FragmentProblem& p, const std::vector<Sign>& dirs,
                              ObligationOracle& oracle, std::vector<Formula>& blocks, int cap,
                              bool& obligation_unknown) {
  PatternSearch out;
  for (int round = 0;; ++round) {
    if (round >= cap) {
      out.result = PatternSearch::Result::Capped;
      return out;
    }
    Status st = session.check();
    if (st == Status::Unsat) {
      out.result = PatternSearch::Result::Exhausted;
      return out;
    }
    if (st == Status::Unknown) {
      out.result = PatternSearch::Result::SolverUnknown;
      return out;
    }
    CellInterpretation model = session.model_cells();
    out.patterns.clear();
    for (Sign s : dirs) {
      std::vector<std::string> names;
      for (const auto& t : p.qterms) names.push_back(selector_name(t.index, s));
      session.declare_props(names);
      auto values = session.bool_values(names);
      std::set<std::size_t> selected;
      for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i]) selected.insert(p.qterms[i].index);
      out.patterns[s] = selected;
    }
    bool all_valid = true;
    for (Sign s : dirs) {
      const auto& selected = out.patterns[s];
      auto answer = oracle.check(s, selected, model);
      if (answer.result == Validity::Valid) continue;
      if (answer.result == Validity::Unknown) obligation_unknown = true;
      all_valid = false;
      std::vector<SelectorVar> vars;
      for (const auto& t : p.qterms) vars.push_back({t.index, s, selector_name(t.index, s)});
      Formula block = blocking_clause(vars, {s, selected});
      if (!answer.consts.empty()) {
        std::vector<Formula> lits = {block};
        for (const auto& [c, v] : answer.consts)
          lits.push_back(Formula::atom(Rel::Ne, Term::constant(c), Term::num(v)));
        block = disjoin(lits);
      }
      blocks.push_back(block);
      session.add(block);
    }
    if (all_valid) {
      out.result = PatternSearch::Result::Found;
      out.model = std::move(model);
      return out;
    }
  }
}

}  // namespace

SatOutcome solve(const FragmentProblem& p, const EngineOptions& opts, const SolverConfig& cfg) {
  if (opts.max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  auto start = std::chrono::steady_clock::now();
  SatOutcome out;
  ObligationOracle oracle(p, cfg);
  bool obligation_unknown = false;
  std::vector<Formula> blocks;
  std::vector<Sign> dirs = p.guard.directions();

  auto finish = [&](SatOutcome& o) -> SatOutcome& {
    o.obligations = oracle.records();
    o.stats.obligation_checks = oracle.checks();
    o.stats.memo_hits = oracle.memo_hits();
    o.stats.blocked_patterns = static_cast<int>(blocks.size());
    o.stats.wall_time =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return o;
  };
  auto unknown = [&](UnknownReason why, std::string detail) {
    out.outcome = Outcome::Unknown;
    out.reason = why;
    out.detail = std::move(detail);
    return std::move(finish(out));
  };

  try {
    Session session(cfg, Logic::GroundUF);
    std::vector<Formula> base = {p.F};
    session.add(p.F);
    if (!p.consts.empty()) session.add(mention_constants(p));
    std::set<Int> instantiated;

    Interval b = initial_interval(p, opts);
    for (int iter = 1; iter <= opts.max_iterations; ++iter) {
      out.stats.iterations = iter;
      out.interval = b;
      if (p.has_quantifier) {
        for (Int z = b.lo; z <= b.hi; ++z) {
          if (!p.guard.contains(z) || instantiated.count(z)) continue;
          instantiated.insert(z);
          Formula inst = instantiate_q(p, z);
          base.push_back(inst);
          session.add(inst);
        }
      }

      Status st = session.check();
      if (st == Status::Unknown) return unknown(UnknownReason::SolverUnknown, "base check returned unknown");
      if (st == Status::Unsat) {
        out.outcome = Outcome::Unsat;
        out.refuted = base;
        return std::move(finish(out));
      }

      if (!p.has_quantifier || covers_guard(b, p.guard)) {
        Certificate c;
        c.interval = b;
        c.guard = p.guard;
        c.interpretation = session.model_cells();
        out.outcome = Outcome::Sat;
        out.cert = std::move(c);
        return std::move(finish(out));
      }

      session.push();
      for (Sign s : dirs) session.add(psi_selector(p, s, b).formula);
      for (const auto& blk : blocks) session.add(blk);
      PatternSearch found =
          search_patterns(session, p, dirs, oracle, blocks, opts.max_refinements, obligation_unknown);
      session.pop();

      if (found.result == PatternSearch::Result::SolverUnknown)
        return unknown(UnknownReason::SolverUnknown, "selector query returned unknown");
      if (found.result == PatternSearch::Result::Found) {
        Certificate c;
        c.interval = b;
        c.guard = p.guard;
        c.interpretation = std::move(found.model);
        for (Sign s : dirs) {
          std::vector<std::string> ids;
          for (std::size_t i : found.patterns[s]) ids.push_back(p.qterm(i).id);
          c.selection(s) = std::move(ids);
        }
        out.outcome = Outcome::Sat;
        out.cert = std::move(c);
        return std::move(finish(out));
      }
      b = expand(b, p.guard);
    }
  } catch (const SolverTimeout& e) {
    return unknown(UnknownReason::SolverUnknown, e.what());
  }

  if (obligation_unknown)
    return unknown(UnknownReason::UnsupportedObligation,
                   "iteration budget exhausted; some propagability obligations were undecided");
  return unknown(UnknownReason::Budget, "iteration budget of " + std::to_string(opts.max_iterations) +
                                            " exhausted at interval " + to_string(out.interval));
}

Status extension_satisfiable(const FragmentProblem& p, Sign s, const Interval& b, const SolverConfig& cfg) {
  ObligationOracle oracle(p, cfg);
  Session session(cfg, Logic::GroundUF);
  if (!p.consts.empty()) session.add(mention_constants(p));
  session.add(psi_selector(p, s, b).formula);
  std::vector<Formula> blocks;
  bool obligation_unknown = false;
  PatternSearch found = search_patterns(session, p, {s}, oracle, blocks, 4096, obligation_unknown);
  switch (found.result) {
    case PatternSearch::Result::Found: return Status::Sat;
    case PatternSearch::Result::Exhausted: return obligation_unknown ? Status::Unknown : Status::Unsat;
    default: return Status::Unknown;
  }
}

}  // namespace indcert
