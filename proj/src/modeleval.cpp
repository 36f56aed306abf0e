#include "indcert/modeleval.hpp"

#include "indcert/encoder.hpp"

namespace indcert {

PropagatorFailed::PropagatorFailed(Int z, const std::string& message)
    : std::runtime_error("propagator failed at x = " + z.str() + ": " + message), z_(std::move(z)) {}

ModelEvaluator::ModelEvaluator(const FragmentProblem& p, Certificate cert, SolverConfig cfg,
                               std::size_t depth_cap)
    : p_(p), cert_(std::move(cert)), cfg_(std::move(cfg)), depth_cap_(depth_cap) {
  consts_ = cert_.constants();
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const auto& ids = cert_.selection(s);
    if (!ids) continue;
    auto sel = resolve_selection(p_, *ids);
    if (!sel) throw std::invalid_argument("certificate selects terms that do not occur in the problem");
    selected_[s == Sign::Plus ? 0 : 1] = *sel;
  }
}

ModelEvaluator::~ModelEvaluator() = default;

std::optional<ModelEvaluator::Frame> ModelEvaluator::locate(const Cell& u) const {
  if (!u.arg) return std::nullopt;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    if (!cert_.selection(s)) continue;
    for (std::size_t i : selected_[s == Sign::Plus ? 0 : 1]) {
      const QTerm& t = p_.qterm(i);
      if (t.fsym != u.symbol || t.coeff == 0) continue;
      Int diff = *u.arg - eval_offset(t, consts_);
      if (diff % t.coeff != 0) continue;
      Int z = diff / t.coeff;
      bool beyond = s == Sign::Plus ? z > cert_.interval.hi : z < cert_.interval.lo;
      if (beyond && p_.guard.contains(z)) return Frame{z, s};
    }
  }
  return std::nullopt;
}

std::optional<Int> ModelEvaluator::inst(const Cell& u) const {
  if (cert_.interpretation.defines(u)) return std::nullopt;
  auto f = locate(u);
  if (!f) return std::nullopt;
  return f->z;
}

std::optional<Int> ModelEvaluator::known(const Cell& u) const {
  if (auto v = cert_.interpretation.get(u)) return v;
  if (auto it = memo_.find(u); it != memo_.end()) return it->second;
  return std::nullopt;
}

std::set<Cell> ModelEvaluator::propagated(const Frame& f) const {
  std::set<Cell> out;
  for (std::size_t i : selected_[f.direction == Sign::Plus ? 0 : 1]) {
    Cell c = cell_at(p_.qterm(i), consts_, f.z);
    if (!cert_.interpretation.defines(c)) out.insert(c);
  }
  return out;
}

Int ModelEvaluator::rank(const Frame& f) const {
  return f.direction == Sign::Plus ? Int(f.z - cert_.interval.hi) : Int(cert_.interval.lo - f.z);
}

Int ModelEvaluator::val(const Cell& u) {
  if (auto v = known(u)) return *v;
  auto start = locate(u);
  if (!start) {
    memo_[u] = 0;
    return 0;
  }
  std::vector<Frame> stack = {*start};
  while (!stack.empty()) {
    Frame top = stack.back();
    if (done_.count(top.z)) {
      stack.pop_back();
      continue;
    }
    std::set<Cell> open = propagated(top);
    std::optional<Frame> next;
    for (const auto& c : relevant_cells(p_, consts_, top.z)) {
      if (open.count(c) || known(c)) continue;
      auto dep = locate(c);
      if (!dep) {
        memo_[c] = 0;
        continue;
      }
      next = dep;
      break;
    }
    if (!next) {
      solve_instance(top, open);
      done_.insert(top.z);
      stack.pop_back();
      continue;
    }
    if (rank(*next) >= rank(top))
      throw std::logic_error("evaluation order violated: instance " + next->z.str() + " is not below " +
                             top.z.str());
    if (stack.size() >= depth_cap_)
      throw std::runtime_error("recursion depth cap of " + std::to_string(depth_cap_) + " reached");
    stack.push_back(*next);
    max_depth_ = std::max(max_depth_, stack.size());
  }
  auto v = known(u);
  if (!v) throw std::logic_error("instance " + start->z.str() + " did not assign " + to_string(u));
  return *v;
}

void ModelEvaluator::solve_instance(const Frame& f, const std::set<Cell>& open) {
  if (!session_) session_ = std::make_unique<Session>(cfg_, Logic::GroundUF);
  std::map<Cell, std::string> fresh;
  std::size_t k = 0;
  for (const auto& c : open) fresh[c] = "cell!" + std::to_string(k++);

  Formula inst = map_consts(instantiate_q(p_, f.z), [&](const Term& c) {
    auto v = consts_.get(Cell::constant(c.name()));
    return v ? Term::num(*v) : c;
  });
  inst = map_apps(inst, [&](const Term& app) {
    auto n = eval_ground(app.args()[0], consts_);
    if (!n) throw std::logic_error("argument of " + to_string(app) + " is not ground");
    Cell c = Cell::app(app.name(), *n);
    if (auto it = fresh.find(c); it != fresh.end()) return Term::constant(it->second);
    auto v = known(c);
    if (!v) throw std::logic_error("cell " + to_string(c) + " has no value yet");
    return Term::num(*v);
  });

  ++queries_;
  session_->push();
  session_->add(inst);
  Status st = session_->check();
  if (st != Status::Sat) {
    session_->pop();
    throw PropagatorFailed(f.z, std::string("instance query returned ") + to_string(st) + " for " +
                                    to_string(inst));
  }
  std::vector<Term> names;
  for (const auto& [c, name] : fresh) names.push_back(Term::constant(name));
  auto values = session_->int_values(names);
  std::size_t i = 0;
  for (const auto& [c, name] : fresh) memo_[c] = values[i++];
  session_->pop();
}

Truth ModelEvaluator::check_instance(const Int& z) {
  CellInterpretation env = consts_;
  for (const auto& c : relevant_cells(p_, consts_, z)) env.set(c, val(c));
  return eval_formula(instantiate_q(p_, z), env);
}

}  // namespace indcert
