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
 * \file mecdeploy/simulator.hpp
 *
 * \brief Monte Carlo evaluation of the two-phase (backhaul, then wireless)
 *  delivery pipeline of one BS cluster.
 *
 * Each trial places the EH cache, lets the M users of the cluster request M
 * distinct files, and computes every user's delay from the finite link
 * rates.  Delays are normalized by Z/log P, so the estimator targets the
 * closed-form AUNDT of edge_model.hpp.
 *
 * Trials are seeded independently from (seed, trial index) and reduced in
 * trial order, so results do not depend on the number of worker threads.
 */

#ifndef MECDEPLOY_SIMULATOR_HPP
#define MECDEPLOY_SIMULATOR_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <mecdeploy/edge_model.hpp>
#include <mecdeploy/error.hpp>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace mecdeploy {

enum class CacheModel
{
	/// Every file is cached in proportion mu (chunk-level caching).
	Fractional,
	/// floor(mu N_F) whole files, chosen uniformly at random, are cached.
	WholeFile
};

struct SimConfig
{
	SystemParams params;
	int cluster_size{1};
	int n_files{500};
	double file_length{1e6};
	double power{20};
	int trials{1000};
	std::uint64_t seed{0};
	CacheModel cache_model{CacheModel::WholeFile};
};

inline void validate(SimConfig const& c)
{
	validate(c.params);
	std::ostringstream oss;
	if (c.cluster_size < c.params.coop_reach)
	{
		throw error(errc::infeasible_density, "cluster size below cooperation reach");
	}
	if (c.n_files < c.cluster_size)
	{
		oss << "library of " << c.n_files << " files cannot serve " << c.cluster_size << " distinct requests";
		throw error(errc::library_too_small, oss.str());
	}
	if (!(c.file_length > 0) || !std::isfinite(c.file_length))
	{
		throw error(errc::invalid_parameters, "file length must be positive");
	}
	if (!(c.power > 1) || !std::isfinite(c.power))
	{
		throw error(errc::invalid_power, "transmit power must exceed 1");
	}
	if (c.trials < 1)
	{
		throw error(errc::invalid_parameters, "trials must be >= 1");
	}
}

struct CachePlacement
{
	CacheModel model{CacheModel::Fractional};
	std::vector<double> cached_fraction; ///< Indexed by file id.
};

struct DelaySample
{
	double backhaul_eh{0};
	double backhaul_cloud{0};
	double wireless_coop{0};
	double wireless_interference{0};

	double total() const noexcept
	{
		return backhaul_eh + backhaul_cloud + wireless_coop + wireless_interference;
	}
};

struct TrialOutcome
{
	std::vector<DelaySample> per_user_delay;
	std::vector<double> per_user_ndt;
};

struct SimResult
{
	double empirical_aundt{0};
	double std_error{0};
	std::vector<double> per_user_mean_ndt;
	double analytic_aundt{0};
	int trials{0};
	/// False when trials == 1: the sample variance is undefined and std_error is reported as 0.
	bool std_error_defined{false};
};

/// Length in bits of the cached and uncached part of one request.
struct RequestSplit
{
	double cached{0};
	double uncached{0};
};

using TrialRng = std::mt19937_64;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
	std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

/// Number of whole files an EH of ratio mu holds; the slack absorbs mu*N_F landing just below an integer.
inline int whole_file_capacity(double mu, int n_files) noexcept
{
	return std::min(n_files, static_cast<int>(std::floor(mu * n_files + 1e-9)));
}

/// Moves a uniform k-subset of v into its first k slots (partial Fisher-Yates).
template <typename T>
void partial_shuffle(std::vector<T>& v, int k, TrialRng& rng)
{
	int const n = static_cast<int>(v.size());
	for (int i = 0; i < k; ++i)
	{
		std::uniform_int_distribution<int> pick(i, n - 1);
		std::swap(v[i], v[pick(rng)]);
	}
}

} // namespace detail

/// Independent generator for trial `trial` of a run seeded with `seed`.
inline TrialRng trial_stream(std::uint64_t seed, std::uint64_t trial)
{
	std::uint64_t state = seed;
	std::uint64_t const a = detail::splitmix64(state);
	state = a ^ (trial * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
	std::seed_seq seq{detail::splitmix64(state), detail::splitmix64(state),
	                  detail::splitmix64(state), detail::splitmix64(state)};
	return TrialRng(seq);
}

inline CachePlacement place_cache(SimConfig const& c, TrialRng& rng)
{
	CachePlacement pl;
	pl.model = c.cache_model;
	if (c.cache_model == CacheModel::Fractional)
	{
		pl.cached_fraction.assign(c.n_files, c.params.mu);
		return pl;
	}

	pl.cached_fraction.assign(c.n_files, 0.0);
	int const k = detail::whole_file_capacity(c.params.mu, c.n_files);
	if (k == c.n_files)
	{
		std::fill(pl.cached_fraction.begin(), pl.cached_fraction.end(), 1.0);
		return pl;
	}
	std::vector<int> ids(c.n_files);
	std::iota(ids.begin(), ids.end(), 0);
	detail::partial_shuffle(ids, k, rng);
	for (int i = 0; i < k; ++i)
	{
		pl.cached_fraction[ids[i]] = 1.0;
	}
	return pl;
}

/// One file per user of the cluster, all distinct, uniform over the library.
inline std::vector<int> draw_requests(SimConfig const& c, TrialRng& rng)
{
	if (c.n_files < c.cluster_size)
	{
		throw error(errc::library_too_small, "fewer files than users in the cluster");
	}
	std::vector<int> ids(c.n_files);
	std::iota(ids.begin(), ids.end(), 0);
	detail::partial_shuffle(ids, c.cluster_size, rng);
	ids.resize(c.cluster_size);
	return ids;
}

inline RequestSplit split_request(int file_id, CachePlacement const& pl, double file_length)
{
	double const cached = pl.cached_fraction.at(file_id) * file_length;
	return RequestSplit{cached, file_length - cached};
}

/**
 * Delay of the user served by in-cluster BS j (1-based).
 *
 * BS j fetches the cached parts of the L requests it helps deliver.  Those
 * are the users j-(L-1)/2 .. j+(L-1)/2; near a cluster border the indices
 * wrap inside the cluster so every BS carries exactly L cached parts on its
 * EH link.  In the interference stage BS j serves user j only.
 */
inline DelaySample user_delay(int position, std::vector<RequestSplit> const& splits,
                              LinkRates const& rates, SimConfig const& c)
{
	int const m = c.cluster_size;
	int const half = (c.params.coop_reach - 1) / 2;
	if (position < 1 || position > m || static_cast<int>(splits.size()) != m)
	{
		throw error(errc::invalid_position, "user position outside the cluster");
	}

	double combined_cached = 0;
	for (int d = -half; d <= half; ++d)
	{
		int const u = ((position - 1 + d) % m + m) % m;
		combined_cached += splits[u].cached;
	}

	RequestSplit const& own = splits[position - 1];
	DelaySample s;
	s.backhaul_eh = combined_cached / rates.eh_bs;
	s.backhaul_cloud = own.uncached / rates.cloud_bs;
	s.wireless_coop = own.cached / rates.cooperative.at(position - 1);
	s.wireless_interference = own.uncached / rates.interference;
	return s;
}

inline TrialOutcome run_trial(SimConfig const& c, LinkRates const& rates, TrialRng& rng)
{
	CachePlacement const pl = place_cache(c, rng);
	std::vector<int> const requests = draw_requests(c, rng);

	std::vector<RequestSplit> splits;
	splits.reserve(requests.size());
	for (int f: requests)
	{
		splits.push_back(split_request(f, pl, c.file_length));
	}

	double const unit_time = c.file_length / std::log(c.power);
	TrialOutcome out;
	out.per_user_delay.reserve(c.cluster_size);
	out.per_user_ndt.reserve(c.cluster_size);
	for (int j = 1; j <= c.cluster_size; ++j)
	{
		DelaySample const s = user_delay(j, splits, rates, c);
		out.per_user_delay.push_back(s);
		out.per_user_ndt.push_back(s.total() / unit_time);
	}
	return out;
}

/// Worker count from MECDEPLOY_THREADS, else the hardware concurrency.
inline unsigned default_thread_count()
{
	if (char const* env = std::getenv("MECDEPLOY_THREADS"))
	{
		char* end = nullptr;
		long const v = std::strtol(env, &end, 10);
		if (end != env && *end == '\0' && v > 0)
		{
			return static_cast<unsigned>(v);
		}
	}
	return std::max(1u, std::thread::hardware_concurrency());
}

inline SimResult run_trials(SimConfig const& c, unsigned threads = 0)
{
	validate(c);
	if (threads == 0)
	{
		threads = default_thread_count();
	}

	LinkRates const rates = link_rates(c.params, c.cluster_size, c.power);
	std::size_t const n = static_cast<std::size_t>(c.trials);
	std::size_t const m = static_cast<std::size_t>(c.cluster_size);
	std::vector<double> ndt(n * m);

	auto work = [&](std::size_t first, std::size_t last) {
		for (std::size_t t = first; t < last; ++t)
		{
			TrialRng rng = trial_stream(c.seed, t);
			TrialOutcome const o = run_trial(c, rates, rng);
			std::copy(o.per_user_ndt.begin(), o.per_user_ndt.end(), ndt.begin() + t * m);
		}
	};

	unsigned const workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
	if (workers <= 1)
	{
		work(0, n);
	}
	else
	{
		std::vector<std::thread> pool;
		pool.reserve(workers);
		for (unsigned w = 0; w < workers; ++w)
		{
			pool.emplace_back(work, n * w / workers, n * (w + 1) / workers);
		}
		for (auto& th: pool)
		{
			th.join();
		}
	}

	// Welford in trial order: identical trials give exactly zero variance.
	SimResult r;
	r.trials = c.trials;
	r.per_user_mean_ndt.assign(m, 0.0);
	double mean = 0;
	double m2 = 0;
	for (std::size_t t = 0; t < n; ++t)
	{
		double trial_sum = 0;
		for (std::size_t j = 0; j < m; ++j)
		{
			double const x = ndt[t * m + j];
			trial_sum += x;
			r.per_user_mean_ndt[j] += (x - r.per_user_mean_ndt[j]) / static_cast<double>(t + 1);
		}
		double const trial_aundt = trial_sum / static_cast<double>(m);
		double const delta = trial_aundt - mean;
		mean += delta / static_cast<double>(t + 1);
		m2 += delta * (trial_aundt - mean);
	}

	r.empirical_aundt = mean;
	r.std_error_defined = n > 1;
	r.std_error = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
	r.analytic_aundt = aundt(c.params, c.cluster_size);
	return r;
}

} // namespace mecdeploy

#endif // MECDEPLOY_SIMULATOR_HPP
