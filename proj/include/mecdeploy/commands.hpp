/*
 * Copyright 2026 The mecdeploy Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * \file mecdeploy/commands.hpp
 *
 * \brief Subcommands of the `mecdeploy` tool.
 *
 * Each command returns a process exit code:
 *   0 success, 1 invalid config or input, 2 infeasible adjustment,
 *   3 check-mode failure, 4 I/O error.
 */

#ifndef MECDEPLOY_COMMANDS_HPP
#define MECDEPLOY_COMMANDS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <mecdeploy/csv.hpp>
#include <mecdeploy/edge_model.hpp>
#include <mecdeploy/error.hpp>
#include <mecdeploy/optimizer.hpp>
#include <mecdeploy/plot.hpp>
#include <mecdeploy/scenario.hpp>
#include <mecdeploy/simulator.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace mecdeploy::cli {

enum exit_code: int
{
	exit_ok = 0,
	exit_invalid_config = 1,
	exit_infeasible = 2,
	exit_check_failed = 3,
	exit_io_error = 4
};

inline int exit_code_for(errc code) noexcept
{
	switch (code)
	{
		case errc::io_error:              return exit_io_error;
		case errc::infeasible_adjustment: return exit_infeasible;
		default:                          return exit_invalid_config;
	}
}

/// Runs `fn`, turning library errors into their exit codes.
inline int guarded(std::ostream& err, std::function<int()> const& fn)
{
	try
	{
		return fn();
	}
	catch (error const& e)
	{
		err << "error: " << e.what() << '\n';
		return exit_code_for(e.code());
	}
}

/// Smallest audit range used by `optimize`.
constexpr int default_scan_limit = 200;

namespace detail {

inline std::vector<std::string> group_fields(SystemParams const& p)
{
	return {csv::format_real(p.mu), csv::format_real(p.gamma), csv::format_real(p.lambda),
	        csv::format_real(p.beta), std::to_string(p.coop_reach)};
}

inline void write_table(csv::Table const& t, std::string const& path)
{
	auto out = open_output(path);
	csv::write(out, t);
	if (!out)
	{
		throw error(errc::io_error, "failed writing '" + path + "'");
	}
}

inline bool row_fails_check(CacheModel model, double gap, double std_error, double analytic)
{
	double const floor_tol = 1e-9 * std::max(1.0, std::abs(analytic));
	if (model == CacheModel::Fractional)
	{
		return !(gap <= floor_tol);
	}
	return !(gap <= 4 * std_error + floor_tol);
}

} // namespace detail

inline csv::Table analyze_table(ScenarioConfig const& s)
{
	csv::Table t;
	t.header = {"mu", "gamma", "lambda", "beta", "coop_reach", "m",
	            "aundt", "aundt_lower_bound", "min_user_ndt", "max_user_ndt"};
	for (auto const& p: s.groups())
	{
		for (int m = s.m_min; m <= s.m_max; ++m)
		{
			double lo = 1e300, hi = -1e300;
			for (int j = 1; j <= m; ++j)
			{
				double const v = user_ndt(p, m, j).total;
				lo = std::min(lo, v);
				hi = std::max(hi, v);
			}
			auto row = detail::group_fields(p);
			row.push_back(std::to_string(m));
			row.push_back(csv::format_real(aundt(p, m)));
			row.push_back(csv::format_real(aundt_lower_bound(p, m)));
			row.push_back(csv::format_real(lo));
			row.push_back(csv::format_real(hi));
			t.rows.push_back(std::move(row));
		}
	}
	return t;
}

inline int cmd_analyze(ScenarioConfig const& s, std::string const& out_path, std::ostream& out)
{
	csv::Table const t = analyze_table(s);
	detail::write_table(t, out_path);
	out << "wrote " << t.rows.size() << " rows to " << out_path << '\n';
	return exit_ok;
}

inline int cmd_optimize(ScenarioConfig const& s, std::ostream& out)
{
	int const scan_limit = std::max(default_scan_limit, s.m_max);
	for (auto const& p: s.groups())
	{
		DensitySolution const d = optimal_density(p, scan_limit);
		out << "mu=" << csv::format_real(p.mu) << " gamma=" << csv::format_real(p.gamma)
		    << " lambda=" << csv::format_real(p.lambda) << " beta=" << csv::format_real(p.beta)
		    << " L=" << p.coop_reach << '\n'
		    << "  relaxed    " << csv::format_real(d.relaxed) << '\n'
		    << "  rounded    " << d.rounded << '\n'
		    << "  exact      " << d.exact << '\n'
		    << "  degenerate " << (d.degenerate ? "true" : "false") << '\n'
		    << "  aundt      " << csv::format_real(aundt(p, d.exact)) << '\n';
		if (d.degenerate)
		{
			out << "  note: mu = 0, every M >= L gives the same AUNDT\n";
		}
		if (!d.audited)
		{
			out << "  warning: exact optimum not confirmed on [L, " << scan_limit << "]\n";
		}
	}
	return exit_ok;
}

/// Compensation report against the rounded optimum of each group.
inline int cmd_adjust(ScenarioConfig const& s, int m_prime, std::ostream& out)
{
	bool any_infeasible = false;
	for (auto const& p: s.groups())
	{
		int const m_star = optimal_density(p, std::max(default_scan_limit, s.m_max)).rounded;
		AdjustmentSolution const a = adjust(p, m_star, m_prime);

		out << "mu=" << csv::format_real(p.mu) << " gamma=" << csv::format_real(p.gamma)
		    << " lambda=" << csv::format_real(p.lambda) << " beta=" << csv::format_real(p.beta)
		    << " L=" << p.coop_reach << '\n'
		    << "  optimal density M*  " << m_star << '\n'
		    << "  target density M'   " << a.target_density << '\n'
		    << "  target aundt        " << csv::format_real(aundt(p, m_star)) << '\n';

		if (a.adjusted_lambda)
		{
			SystemParams q = p;
			q.lambda = *a.adjusted_lambda;
			out << "  adjusted lambda     " << csv::format_real(*a.adjusted_lambda) << '\n'
			    << "  lambda residual     " << csv::format_real(verify_adjustment(p, m_star, q, m_prime)) << '\n';
		}
		else
		{
			out << "  adjusted lambda     none\n";
		}
		out << "  lambda feasible     " << (a.lambda_feasible ? "true" : "false") << '\n';

		if (a.adjusted_mu)
		{
			out << "  adjusted mu         " << csv::format_real(*a.adjusted_mu) << '\n';
			if (a.mu_feasible)
			{
				SystemParams q = p;
				q.mu = *a.adjusted_mu;
				out << "  mu residual         " << csv::format_real(verify_adjustment(p, m_star, q, m_prime)) << '\n';
			}
		}
		else
		{
			out << "  adjusted mu         none (mu = 0)\n";
		}
		out << "  mu feasible         " << (a.mu_feasible ? "true" : "false") << '\n';

		any_infeasible = any_infeasible || !a.lambda_feasible || !a.mu_feasible;
	}
	if (any_infeasible)
	{
		out << "infeasible adjustment for at least one group\n";
		return exit_infeasible;
	}
	return exit_ok;
}

struct SimulateOutcome
{
	csv::Table table;
	bool check_passed{true};
};

inline SimulateOutcome simulate_table(ScenarioConfig const& s, unsigned threads = 0)
{
	SimulateOutcome o;
	o.table.header = {"mu", "gamma", "lambda", "beta", "coop_reach", "m", "cache_model", "trials",
	                  "empirical_aundt", "std_error", "analytic_aundt", "abs_gap", "warning"};
	for (auto const& p: s.groups())
	{
		for (int m = s.m_min; m <= s.m_max; ++m)
		{
			SimResult const r = run_trials(s.sim_config(p, m), threads);
			double const gap = std::abs(r.empirical_aundt - r.analytic_aundt);
			if (detail::row_fails_check(s.cache_model, gap, r.std_error, r.analytic_aundt))
			{
				o.check_passed = false;
			}
			auto row = detail::group_fields(p);
			row.push_back(std::to_string(m));
			row.push_back(to_string(s.cache_model));
			row.push_back(std::to_string(r.trials));
			row.push_back(csv::format_real(r.empirical_aundt));
			row.push_back(csv::format_real(r.std_error));
			row.push_back(csv::format_real(r.analytic_aundt));
			row.push_back(csv::format_real(gap));
			row.push_back(r.std_error_defined ? "" : "single_trial");
			o.table.rows.push_back(std::move(row));
		}
	}
	return o;
}

inline int cmd_simulate(ScenarioConfig const& s, std::string const& out_path, bool check,
                        std::ostream& out, unsigned threads = 0)
{
	SimulateOutcome const o = simulate_table(s, threads);
	detail::write_table(o.table, out_path);
	out << "wrote " << o.table.rows.size() << " rows to " << out_path << '\n';
	if (s.trials == 1 && s.cache_model == CacheModel::WholeFile)
	{
		out << "warning: trials = 1, std_error is undefined and reported as 0\n";
	}
	if (check && !o.check_passed)
	{
		out << "check failed: empirical AUNDT outside tolerance of the closed form\n";
		return exit_check_failed;
	}
	return exit_ok;
}

inline int cmd_plot(std::string const& csv_path, std::string const& out_path, std::ostream& out)
{
	csv::Table const t = csv::read_file(csv_path);
	std::string const svg = plot::render_svg(t);
	auto f = open_output(out_path);
	f << svg;
	if (!f)
	{
		throw error(errc::io_error, "failed writing '" + out_path + "'");
	}
	out << "wrote " << out_path << '\n';
	return exit_ok;
}

} // namespace mecdeploy::cli

#endif // MECDEPLOY_COMMANDS_HPP
