#include "symtangle/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "symtangle/error.hpp"
#include "symtangle/marginals.hpp"
#include "symtangle/oracle.hpp"

namespace symtangle {

namespace {

std::string cell_label(int n, int k, double a) {
  return "N=" + std::to_string(n) + " k=" + std::to_string(k) + " a=" + format_fixed(a, 6);
}

class PropertyTracker {
 public:
  explicit PropertyTracker(std::string name) { result_.name = std::move(name); }

  void record(bool ok, int n, int k, double a, const std::string& what) {
    ++result_.evaluated;
    if (ok) return;
    ++result_.violations;
    if (result_.passed) {
      result_.passed = false;
      result_.detail = cell_label(n, k, a) + ": " + what;
    }
  }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::string show(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

bool CheckReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
}

const PropertyResult& CheckReport::property(const std::string& name) const {
  for (const auto& p : properties)
    if (p.name == name) return p;
  throw Error(ErrorCode::OutOfRange, "no property named " + name);
}

CheckReport run_check(const CheckOptions& opts, const RecordFn& fn) {
  if (opts.n_max < 3) throw Error(ErrorCode::InvalidParams, "n_max must be >= 3");
  if (!(opts.tol >= 0.0)) throw Error(ErrorCode::InvalidParams, "tolerance must be non-negative");
  const auto as = a_grid(0.0, 1.0, opts.a_steps);
  const int na = static_cast<int>(as.size());

  std::map<int, int> k_limit;  // N -> largest k evaluated
  for (int n = 3; n <= opts.n_max; ++n) k_limit[n] = n / 2;
  for (int n : opts.spot_n) {
    if (n < 3) throw Error(ErrorCode::InvalidParams, "spot N must be >= 3");
    if (!k_limit.contains(n)) k_limit[n] = std::min(n / 2, opts.spot_k_max);
  }

  std::vector<DickeParams> cells;
  for (const auto& [n, kmax] : k_limit)
    for (int k = 1; k <= kmax; ++k)
      for (double a : as) cells.emplace_back(n, k, a);
  const auto rows = compute_records(cells, opts.jobs, fn);

  // rows are ordered (N, k, a); index them by (N, k)
  std::map<std::pair<int, int>, std::size_t> first_row;
  for (std::size_t i = 0; i < rows.size(); i += na)
    first_row[{rows[i].params.n_qubits(), rows[i].params.degeneracy()}] = i;
  auto row_at = [&](int n, int k, int ia) -> const SweepRow& { return rows[first_row.at({n, k}) + ia]; };

  PropertyTracker invariants("record-invariants");
  PropertyTracker mono_c("monogamy-concurrence");
  PropertyTracker mono_n("monogamy-negativity");
  PropertyTracker ordering("measure-ordering");
  PropertyTracker w_class("w-class-saturation");
  PropertyTracker a_mono("a-monotonicity");
  PropertyTracker dicke_max("dicke-maximum");
  PropertyTracker separable("separable-endpoint");
  PropertyTracker k_order("k-ordering");
  PropertyTracker n_decay("n-decay");

  const double tol = opts.tol;
  for (const auto& row : rows) {
    const int n = row.params.n_qubits();
    const int k = row.params.degeneracy();
    const double a = row.params.non_orthogonality();
    if (!row.record) {
      // no record means monogamy could not be established at this cell
      mono_c.record(false, n, k, a, row.error);
      mono_n.record(false, n, k, a, row.error);
      continue;
    }
    const auto& r = *row.record;
    const double pairs = n - 1;
    const bool consistent = std::abs(r.tau - (r.c1_sq - pairs * r.c2_sq)) <= 1e-12 &&
                            std::abs(r.xi - (r.c1_sq - pairs * r.n2 * r.n2)) <= 1e-12;
    const bool in_range = r.c1_sq >= -tol && r.c1_sq <= 1 + tol && r.c2_sq >= -tol && r.c2_sq <= 1 + tol &&
                          r.n2 >= -tol && r.n2 <= 1 + tol;
    invariants.record(consistent && in_range, n, k, a, "record fields inconsistent or out of [0, 1]");
    mono_c.record(r.tau >= -tol, n, k, a, "tau = " + show(r.tau));
    mono_n.record(r.xi >= -tol, n, k, a, "xi = " + show(r.xi));
    ordering.record(r.xi - r.tau >= -tol, n, k, a, "xi - tau = " + show(r.xi - r.tau));
    if (k == 1) w_class.record(std::abs(r.tau) < tol, n, k, a, "tau = " + show(r.tau));
    if (a == 1.0) {
      const double worst = std::max({std::abs(r.c1_sq), std::abs(r.c2_sq), std::abs(r.tau), std::abs(r.n2),
                                     std::abs(r.xi)});
      separable.record(worst <= tol, n, k, a, "largest field " + show(worst));
    }
  }

  for (const auto& [n, kmax] : k_limit) {
    for (int k = 1; k <= kmax; ++k) {
      const auto& top = row_at(n, k, 0);
      for (int ia = 0; ia < na; ++ia) {
        const auto& cur = row_at(n, k, ia);
        if (!cur.record) continue;
        if (k >= 2 && ia + 1 < na) {
          const auto& nxt = row_at(n, k, ia + 1);
          if (nxt.record) {
            const double rise = nxt.record->tau - cur.record->tau;
            a_mono.record(rise <= tol, n, k, as[ia + 1], "tau rises by " + show(rise));
          }
        }
        if (top.record) {
          const double excess = cur.record->tau - top.record->tau;
          dicke_max.record(excess <= tol, n, k, as[ia], "tau exceeds the a=0 value by " + show(excess));
        }
        if (k + 1 <= kmax && as[ia] < 1.0) {
          const auto& up = row_at(n, k + 1, ia);
          if (up.record) {
            const double drop = cur.record->tau - up.record->tau;
            k_order.record(drop <= tol, n, k + 1, as[ia], "tau drops by " + show(drop) + " from k-1");
          }
        }
      }
    }
  }

  // N-decay: consecutive N of the grid, both strictly above the balanced
  // configuration N = 2k, where tau_N^(k) is known to rise for small a.
  for (auto it = k_limit.begin(); it != k_limit.end(); ++it) {
    const auto next = std::next(it);
    if (next == k_limit.end()) break;
    const int n = it->first;
    const int n_next = next->first;
    for (int k = 1; k <= std::min(it->second, next->second); ++k) {
      if (n < 2 * k + 1) continue;
      for (int ia = 0; ia < na; ++ia) {
        const auto& lo = row_at(n, k, ia);
        const auto& hi = row_at(n_next, k, ia);
        if (!lo.record || !hi.record) continue;
        const double rise = hi.record->tau - lo.record->tau;
        n_decay.record(rise <= tol, n_next, k, as[ia],
                       "tau rises by " + show(rise) + " from N=" + std::to_string(n));
      }
    }
  }

  CheckReport report;
  for (auto* t : {&invariants, &mono_c, &mono_n, &ordering, &w_class, &a_mono, &dicke_max, &separable,
                  &k_order, &n_decay})
    report.properties.push_back(t->take());
  return report;
}

void print_check(std::ostream& out, const CheckReport& report) {
  for (const auto& p : report.properties) {
    out << (p.passed ? "PASS " : "FAIL ") << p.name << " (" << p.evaluated << " evaluations";
    if (!p.passed) out << ", " << p.violations << " violations";
    out << ")";
    if (!p.passed) out << " first at " << p.detail;
    out << '\n';
  }
  out << (report.passed() ? "all properties pass" : "property violations found") << '\n';
}

double OracleCell::worst() const {
  return std::max({state, marginal, single, pair_choice, concurrence, negativity, one_vs_rest});
}

bool OracleReport::passed() const {
  return std::all_of(cells.begin(), cells.end(), [this](const auto& c) { return c.worst() < tol; });
}

const OracleCell& OracleReport::worst_cell() const {
  if (cells.empty()) throw Error(ErrorCode::OutOfRange, "empty oracle report");
  return *std::max_element(cells.begin(), cells.end(),
                           [](const auto& x, const auto& y) { return x.worst() < y.worst(); });
}

OracleReport run_oracle(const OracleOptions& opts) {
  if (opts.n_max < 2) throw Error(ErrorCode::InvalidParams, "n_max must be >= 2");
  if (opts.n_max > opts.cap) {
    throw Error(ErrorCode::CapExceeded,
                "n_max=" + std::to_string(opts.n_max) + " exceeds oracle cap " + std::to_string(opts.cap));
  }
  const auto as = a_grid(0.0, 1.0, opts.a_steps);
  OracleReport report{opts.tol, {}};

  for (int n = 2; n <= opts.n_max; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      OracleCell cell{.n = n, .k = k};
      double worst_so_far = -1.0;
      for (double a : as) {
        const DickeParams params(n, k, a);
        const auto canonical = oracle::expand_state(params, opts.cap);
        const auto symmetrized =
            oracle::symmetrize_two_spinors(n, k, oracle::Spinor::zero(), oracle::Spinor::real_overlap(a), opts.cap);
        const double state = oracle::max_abs_diff(canonical, symmetrized);

        const auto analytic = two_qubit_marginal(params);
        const SmallMatrix rho2 = oracle::partial_trace_to_two(canonical);
        const double marginal = max_abs_diff(rho2, marginal_matrix(analytic));

        const SmallMatrix rho1 = oracle::partial_trace_to_one(canonical);
        const auto analytic1 = single_qubit_marginal(analytic);
        const double single = std::max({max_abs_diff(rho1, analytic1.m),
                                        max_abs_diff(rho1, partial_trace_4x4(rho2, 0)),
                                        max_abs_diff(rho1, partial_trace_4x4(rho2, 1))});

        double pair_choice = 0.0;
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            const auto pair = oracle::partial_trace_pair(canonical, i, j);
            for (int r = 0; r < 4; ++r)
              for (int c = 0; c < 4; ++c) pair_choice = std::max(pair_choice, std::abs(pair[r][c] - rho2(r, c)));
          }

        const double conc =
            std::abs(concurrence_two_qubit(rho2) - concurrence_two_qubit(marginal_matrix(analytic)));
        const double neg = std::abs(negativity_two_qubit(rho2) - negativity_two_qubit(analytic));
        const double c1 = std::abs(one_vs_rest(SingleQubitMarginal{rho1}) - one_vs_rest(analytic1));

        cell.state = std::max(cell.state, state);
        cell.marginal = std::max(cell.marginal, marginal);
        cell.single = std::max(cell.single, single);
        cell.pair_choice = std::max(cell.pair_choice, pair_choice);
        cell.concurrence = std::max(cell.concurrence, conc);
        cell.negativity = std::max(cell.negativity, neg);
        cell.one_vs_rest = std::max(cell.one_vs_rest, c1);
        const double here = std::max({state, marginal, single, pair_choice, conc, neg, c1});
        if (here > worst_so_far) {
          worst_so_far = here;
          cell.worst_a = a;
        }
      }
      report.cells.push_back(cell);
    }
  }
  return report;
}

void print_oracle(std::ostream& out, const OracleReport& report) {
  out << "N,k,state,marginal,single,pair_choice,concurrence,negativity,one_vs_rest,worst_a\n";
  for (const auto& c : report.cells) {
    out << c.n << ',' << c.k;
    for (double v : {c.state, c.marginal, c.single, c.pair_choice, c.concurrence, c.negativity, c.one_vs_rest})
      out << ',' << show(v);
    out << ',' << format_fixed(c.worst_a, 6) << '\n';
  }
  if (report.cells.empty()) return;
  const auto& w = report.worst_cell();
  out << "max deviation " << show(w.worst()) << " at N=" << w.n << " k=" << w.k << " a=" << format_fixed(w.worst_a, 6)
      << (report.passed() ? " (below " : " (NOT below ") << show(report.tol) << ")\n";
}

}  // namespace symtangle
