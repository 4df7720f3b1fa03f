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

// mecdeploy: EH deployment planning from the command line.

#include <CLI11.hpp>
#include <iostream>
#include <mecdeploy/commands.hpp>
#include <string>

int main(int argc, char** argv)
{
	using namespace mecdeploy;

	CLI::App app{"Delay-optimal edge host deployment planner"};
	app.require_subcommand(1);

	std::string config_path;
	std::string out_path;
	int m_prime = 0;
	bool check = false;
	std::string csv_path;

	auto* analyze = app.add_subcommand("analyze", "Tabulate closed-form AUNDT over the M sweep");
	analyze->add_option("--config", config_path, "Scenario JSON")->required();
	analyze->add_option("--out", out_path, "CSV output path (overrides analyze_csv)");

	auto* optimize = app.add_subcommand("optimize", "Report the optimal deployment density");
	optimize->add_option("--config", config_path, "Scenario JSON")->required();

	auto* adj = app.add_subcommand("adjust", "Compensate a sub-optimal density with lambda or mu");
	adj->add_option("--config", config_path, "Scenario JSON")->required();
	adj->add_option("--m-prime", m_prime, "Deployable density M' (L <= M' <= M*)")->required();

	auto* simulate = app.add_subcommand("simulate", "Monte Carlo AUNDT over the M sweep");
	simulate->add_option("--config", config_path, "Scenario JSON")->required();
	simulate->add_option("--out", out_path, "CSV output path (overrides simulate_csv)");
	simulate->add_flag("--check", check, "Exit 3 if any row deviates from the closed form");

	auto* plt = app.add_subcommand("plot", "Render an analyze/simulate CSV as SVG");
	plt->add_option("--csv", csv_path, "Input CSV")->required();
	plt->add_option("--config", config_path, "Scenario JSON (supplies plot_svg)");
	plt->add_option("--out", out_path, "SVG output path");

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const& e)
	{
		int const rc = app.exit(e);
		return rc == 0 ? cli::exit_ok : cli::exit_invalid_config;
	}

	return cli::guarded(std::cerr, [&]() -> int {
		if (*plt)
		{
			std::string target = out_path;
			if (target.empty())
			{
				target = config_path.empty() ? std::string("aundt.svg") : load_scenario(config_path).plot_svg;
			}
			return cli::cmd_plot(csv_path, target, std::cout);
		}

		ScenarioConfig const s = load_scenario(config_path);
		if (*analyze)
		{
			return cli::cmd_analyze(s, out_path.empty() ? s.analyze_csv : out_path, std::cout);
		}
		if (*optimize)
		{
			return cli::cmd_optimize(s, std::cout);
		}
		if (*adj)
		{
			return cli::cmd_adjust(s, m_prime, std::cout);
		}
		return cli::cmd_simulate(s, out_path.empty() ? s.simulate_csv : out_path, check, std::cout);
	});
}
