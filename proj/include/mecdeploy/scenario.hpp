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
 * \file mecdeploy/scenario.hpp
 *
 * \brief Scenario description consumed by the command-line tool.
 *
 * A scenario is a flat JSON object.  The rate/cache keys `mu`, `gamma`,
 * `lambda` and `beta` accept either a number or an array of numbers; the
 * scenario then expands into one parameter group per combination, in the
 * order mu, gamma, lambda, beta (beta varying fastest).  Unknown keys are
 * rejected.
 */

#ifndef MECDEPLOY_SCENARIO_HPP
#define MECDEPLOY_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <mecdeploy/edge_model.hpp>
#include <mecdeploy/error.hpp>
#include <mecdeploy/simulator.hpp>
#include <set>
#include <string>
#include <vector>

namespace mecdeploy {

struct ScenarioConfig
{
	std::vector<double> mu;
	std::vector<double> gamma;
	std::vector<double> lambda;
	std::vector<double> beta;
	int coop_reach{5};
	int m_min{0};  ///< 0 until resolved; defaults to coop_reach.
	int m_max{15};
	int n_files{500};
	double file_length{1e6};
	double power{20};
	int trials{1000};
	std::uint64_t seed{1};
	CacheModel cache_model{CacheModel::WholeFile};
	std::string analyze_csv{"analyze.csv"};
	std::string simulate_csv{"simulate.csv"};
	std::string plot_svg{"aundt.svg"};

	/// Cartesian product of the parameter lists.
	std::vector<SystemParams> groups() const
	{
		std::vector<SystemParams> out;
		for (double m: mu)
			for (double g: gamma)
				for (double l: lambda)
					for (double b: beta)
						out.push_back(SystemParams{m, g, l, b, coop_reach});
		return out;
	}

	SimConfig sim_config(SystemParams const& p, int cluster_size) const
	{
		SimConfig c;
		c.params = p;
		c.cluster_size = cluster_size;
		c.n_files = n_files;
		c.file_length = file_length;
		c.power = power;
		c.trials = trials;
		c.seed = seed;
		c.cache_model = cache_model;
		return c;
	}
};

inline char const* to_string(CacheModel m) noexcept
{
	return m == CacheModel::Fractional ? "fractional" : "whole_file";
}

namespace detail {

inline std::vector<double> real_list(nlohmann::json const& j, char const* key)
{
	std::vector<double> out;
	if (j.is_number())
	{
		out.push_back(j.get<double>());
	}
	else if (j.is_array() && !j.empty())
	{
		for (auto const& v: j)
		{
			if (!v.is_number())
			{
				throw error(errc::invalid_config, std::string("non-numeric entry in '") + key + "'");
			}
			out.push_back(v.get<double>());
		}
	}
	else
	{
		throw error(errc::invalid_config, std::string("'") + key + "' must be a number or a non-empty array");
	}
	return out;
}

template <typename T>
T scalar(nlohmann::json const& j, char const* key)
{
	if constexpr (std::is_same_v<T, std::string>)
	{
		if (!j.is_string())
		{
			throw error(errc::invalid_config, std::string("'") + key + "' must be a string");
		}
	}
	else if constexpr (std::is_integral_v<T>)
	{
		if (!j.is_number_integer())
		{
			throw error(errc::invalid_config, std::string("'") + key + "' must be an integer");
		}
		if constexpr (std::is_unsigned_v<T>)
		{
			if (j.is_number_integer() && !j.is_number_unsigned())
			{
				throw error(errc::invalid_config, std::string("'") + key + "' must be nonnegative");
			}
		}
	}
	else if (!j.is_number())
	{
		throw error(errc::invalid_config, std::string("'") + key + "' must be a number");
	}
	return j.get<T>();
}

} // namespace detail

/// Checks the cross-field constraints and fills defaulted fields.
inline void validate(ScenarioConfig& s)
{
	if (s.mu.empty() || s.gamma.empty() || s.lambda.empty() || s.beta.empty())
	{
		throw error(errc::invalid_config, "mu, gamma, lambda and beta are required");
	}
	if (s.m_min == 0)
	{
		s.m_min = s.coop_reach;
	}
	try
	{
		for (auto const& p: s.groups())
		{
			validate(p);
		}
	}
	catch (error const& e)
	{
		throw error(errc::invalid_config, e.what());
	}
	if (s.m_min < s.coop_reach)
	{
		throw error(errc::invalid_config, "m_min must be >= coop_reach");
	}
	if (s.m_max < s.m_min)
	{
		throw error(errc::invalid_config, "m_max must be >= m_min");
	}
	if (s.n_files < s.m_max)
	{
		throw error(errc::invalid_config, "n_files must be >= m_max");
	}
	if (!(s.file_length > 0))
	{
		throw error(errc::invalid_config, "file_length must be positive");
	}
	if (!(s.power > 1))
	{
		throw error(errc::invalid_config, "power must exceed 1");
	}
	if (s.trials < 1)
	{
		throw error(errc::invalid_config, "trials must be >= 1");
	}
}

inline ScenarioConfig parse_scenario(nlohmann::json const& j)
{
	if (!j.is_object())
	{
		throw error(errc::invalid_config, "scenario must be a JSON object");
	}

	ScenarioConfig s;
	for (auto it = j.begin(); it != j.end(); ++it)
	{
		std::string const& key = it.key();
		auto const& v = it.value();
		if (key == "mu") s.mu = detail::real_list(v, "mu");
		else if (key == "gamma") s.gamma = detail::real_list(v, "gamma");
		else if (key == "lambda") s.lambda = detail::real_list(v, "lambda");
		else if (key == "beta") s.beta = detail::real_list(v, "beta");
		else if (key == "coop_reach") s.coop_reach = detail::scalar<int>(v, "coop_reach");
		else if (key == "m_min") s.m_min = detail::scalar<int>(v, "m_min");
		else if (key == "m_max") s.m_max = detail::scalar<int>(v, "m_max");
		else if (key == "n_files") s.n_files = detail::scalar<int>(v, "n_files");
		else if (key == "file_length") s.file_length = detail::scalar<double>(v, "file_length");
		else if (key == "power") s.power = detail::scalar<double>(v, "power");
		else if (key == "trials") s.trials = detail::scalar<int>(v, "trials");
		else if (key == "seed") s.seed = detail::scalar<std::uint64_t>(v, "seed");
		else if (key == "cache_model")
		{
			auto const name = detail::scalar<std::string>(v, "cache_model");
			if (name == "fractional") s.cache_model = CacheModel::Fractional;
			else if (name == "whole_file") s.cache_model = CacheModel::WholeFile;
			else throw error(errc::invalid_config, "cache_model must be 'fractional' or 'whole_file'");
		}
		else if (key == "analyze_csv") s.analyze_csv = detail::scalar<std::string>(v, "analyze_csv");
		else if (key == "simulate_csv") s.simulate_csv = detail::scalar<std::string>(v, "simulate_csv");
		else if (key == "plot_svg") s.plot_svg = detail::scalar<std::string>(v, "plot_svg");
		else throw error(errc::invalid_config, "unknown key '" + key + "'");
	}
	validate(s);
	return s;
}

inline ScenarioConfig load_scenario(std::string const& path)
{
	std::ifstream in(path);
	if (!in)
	{
		throw error(errc::io_error, "cannot open config '" + path + "'");
	}
	nlohmann::json j;
	try
	{
		in >> j;
	}
	catch (nlohmann::json::exception const& e)
	{
		throw error(errc::invalid_config, std::string("bad JSON in '") + path + "': " + e.what());
	}
	return parse_scenario(j);
}

/// Opens `path` for writing, creating missing parent directories.
inline std::ofstream open_output(std::string const& path)
{
	std::filesystem::path const p(path);
	std::error_code ec;
	if (p.has_parent_path())
	{
		std::filesystem::create_directories(p.parent_path(), ec);
		if (ec)
		{
			throw error(errc::io_error, "cannot create directory '" + p.parent_path().string() + "'");
		}
	}
	std::ofstream out(path, std::ios::binary);
	if (!out)
	{
		throw error(errc::io_error, "cannot open '" + path + "' for writing");
	}
	return out;
}

} // namespace mecdeploy

#endif // MECDEPLOY_SCENARIO_HPP
