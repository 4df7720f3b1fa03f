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

#include <algorithm>
#include <cmath>
#include <gtest/gtest.h>
#include <mecdeploy/simulator.hpp>
#include <numeric>
#include <set>

using namespace mecdeploy;

namespace {

SimConfig baseline_config(CacheModel model, int trials = 200)
{
	SimConfig c;
	c.params = SystemParams{0.7, 1.5, 60, 1, 5};
	c.cluster_size = 7;
	c.n_files = 500;
	c.file_length = 1e6;
	c.power = 20;
	c.trials = trials;
	c.seed = 42;
	c.cache_model = model;
	return c;
}

double count_cached(CachePlacement const& pl)
{
	return std::accumulate(pl.cached_fraction.begin(), pl.cached_fraction.end(), 0.0);
}

} // namespace

TEST(PlaceCache, EmptyAndFull)
{
	for (CacheModel model: {CacheModel::Fractional, CacheModel::WholeFile})
	{
		SimConfig c = baseline_config(model);
		TrialRng rng = trial_stream(1, 0);
		c.params.mu = 0;
		EXPECT_EQ(count_cached(place_cache(c, rng)), 0.0);
		c.params.mu = 1;
		EXPECT_EQ(count_cached(place_cache(c, rng)), 500.0);
	}
}

TEST(PlaceCache, FractionalIsUniform)
{
	SimConfig const c = baseline_config(CacheModel::Fractional);
	TrialRng rng = trial_stream(1, 0);
	CachePlacement const pl = place_cache(c, rng);
	for (double f: pl.cached_fraction)
	{
		ASSERT_EQ(f, 0.7);
	}
}

TEST(PlaceCache, WholeFileCountAndUniformity)
{
	SimConfig const c = baseline_config(CacheModel::WholeFile);
	std::vector<int> hits(c.n_files, 0);
	int const runs = 2000;
	for (int t = 0; t < runs; ++t)
	{
		TrialRng rng = trial_stream(99, t);
		CachePlacement const pl = place_cache(c, rng);
		ASSERT_EQ(count_cached(pl), 350.0);
		for (int f = 0; f < c.n_files; ++f)
		{
			hits[f] += pl.cached_fraction[f] == 1.0;
		}
	}
	// Chi-square over files against p = 0.7 per file; 499 dof, mean 499, sd ~31.6.
	double const expect = runs * 0.7;
	double chi2 = 0;
	for (int h: hits)
	{
		chi2 += (h - expect) * (h - expect) / (runs * 0.7 * 0.3);
	}
	EXPECT_LT(chi2, 499 + 5 * std::sqrt(2.0 * 499));
	EXPECT_GT(chi2, 499 - 5 * std::sqrt(2.0 * 499));
}

TEST(DrawRequests, DistinctAndInRange)
{
	SimConfig c = baseline_config(CacheModel::WholeFile);
	c.cluster_size = 5;
	TrialRng rng = trial_stream(5, 5);
	auto const r = draw_requests(c, rng);
	ASSERT_EQ(r.size(), 5u);
	EXPECT_EQ(std::set<int>(r.begin(), r.end()).size(), 5u);
	for (int f: r)
	{
		EXPECT_GE(f, 0);
		EXPECT_LT(f, 500);
	}

	c.n_files = 9;
	c.cluster_size = 9;
	auto all = draw_requests(c, rng);
	std::sort(all.begin(), all.end());
	for (int i = 0; i < 9; ++i)
	{
		EXPECT_EQ(all[i], i);
	}

	c.n_files = 4;
	try
	{
		draw_requests(c, rng);
		FAIL();
	}
	catch (error const& e)
	{
		EXPECT_EQ(e.code(), errc::library_too_small);
	}
}

TEST(DrawRequests, FrequencyWithinBinomialBand)
{
	SimConfig c = baseline_config(CacheModel::WholeFile);
	c.cluster_size = 5;
	c.n_files = 50;
	int const runs = 100000;
	std::vector<int> hits(c.n_files, 0);
	for (int t = 0; t < runs; ++t)
	{
		TrialRng rng = trial_stream(7, t);
		for (int f: draw_requests(c, rng))
		{
			++hits[f];
		}
	}
	double const p = 5.0 / 50.0;
	double const mean = runs * p;
	double const sd = std::sqrt(runs * p * (1 - p));
	int outside = 0;
	for (int h: hits)
	{
		outside += std::abs(h - mean) > 3 * sd;
	}
	// Each file lands outside 3 sigma with probability ~0.27%.
	EXPECT_LE(outside, 2);
}

TEST(SplitRequest, Examples)
{
	CachePlacement frac{CacheModel::Fractional, std::vector<double>(10, 0.7)};
	RequestSplit const s = split_request(3, frac, 1e6);
	EXPECT_NEAR(s.cached, 700000, 1e-6);
	EXPECT_NEAR(s.uncached, 300000, 1e-6);

	CachePlacement whole{CacheModel::WholeFile, {1.0, 0.0}};
	EXPECT_EQ(split_request(0, whole, 1e6).cached, 1e6);
	EXPECT_EQ(split_request(0, whole, 1e6).uncached, 0);
	EXPECT_EQ(split_request(1, whole, 1e6).cached, 0);
	EXPECT_EQ(split_request(1, whole, 1e6).uncached, 1e6);
}

TEST(UserDelay, MatchesClosedFormUserNdt)
{
	SimConfig const c = baseline_config(CacheModel::Fractional);
	LinkRates const rates = link_rates(c.params, c.cluster_size, c.power);
	std::vector<RequestSplit> splits(7, RequestSplit{0.7 * c.file_length, 0.3 * c.file_length});
	double const unit = c.file_length / std::log(c.power);
	for (int j = 1; j <= 7; ++j)
	{
		DelaySample const d = user_delay(j, splits, rates, c);
		EXPECT_NEAR(d.total() / unit, user_ndt(c.params, 7, j).total, 1e-12);
		EXPECT_GE(d.backhaul_eh, 0);
		EXPECT_GE(d.wireless_coop, 0);
	}
	EXPECT_NEAR(user_delay(1, splits, rates, c).total() / unit, 4.141666666666667, 1e-12);
}

TEST(UserDelay, NoCacheAndFullCache)
{
	SimConfig c = baseline_config(CacheModel::Fractional);
	c.params.mu = 0;
	LinkRates const rates = link_rates(c.params, 7, c.power);
	std::vector<RequestSplit> none(7, RequestSplit{0, c.file_length});
	DelaySample const d = user_delay(3, none, rates, c);
	EXPECT_EQ(d.backhaul_eh, 0);
	EXPECT_EQ(d.wireless_coop, 0);
	EXPECT_NEAR(d.total() / (c.file_length / std::log(c.power)), 1 / 1.5 + 4, 1e-12);

	std::vector<RequestSplit> full(7, RequestSplit{c.file_length, 0});
	DelaySample const f = user_delay(4, full, rates, c);
	EXPECT_EQ(f.backhaul_cloud, 0);
	EXPECT_EQ(f.wireless_interference, 0);
}

TEST(UserDelay, EdgeBsWrapsWithinCluster)
{
	// Only user 7 has cached content; BS 1 wraps to users {6,7,1,2,3} for L = 5.
	SimConfig const c = baseline_config(CacheModel::WholeFile);
	LinkRates const rates = link_rates(c.params, 7, c.power);
	std::vector<RequestSplit> splits(7, RequestSplit{0, c.file_length});
	splits[6] = RequestSplit{c.file_length, 0};
	EXPECT_NEAR(user_delay(1, splits, rates, c).backhaul_eh, c.file_length / rates.eh_bs, 1e-9);
	EXPECT_EQ(user_delay(4, splits, rates, c).backhaul_eh, 0);
	EXPECT_NEAR(user_delay(5, splits, rates, c).backhaul_eh, c.file_length / rates.eh_bs, 1e-9);
}

TEST(RunTrials, FractionalEqualsClosedForm)
{
	for (int M = 5; M <= 12; ++M)
	{
		SimConfig c = baseline_config(CacheModel::Fractional, 50);
		c.cluster_size = M;
		SimResult const r = run_trials(c, 2);
		EXPECT_NEAR(r.empirical_aundt, r.analytic_aundt, 1e-9 * r.analytic_aundt);
		EXPECT_EQ(r.std_error, 0.0);
		EXPECT_NEAR(r.analytic_aundt, aundt(c.params, M), 0);
	}
}

TEST(RunTrials, NoCacheIsExact)
{
	for (CacheModel model: {CacheModel::Fractional, CacheModel::WholeFile})
	{
		SimConfig c = baseline_config(model, 20);
		c.params.mu = 0;
		SimResult const r = run_trials(c, 1);
		EXPECT_NEAR(r.empirical_aundt, 1 / 1.5 + 4, 1e-12);
	}
}

TEST(RunTrials, WholeFileConvergesToClosedForm)
{
	SimResult const r = run_trials(baseline_config(CacheModel::WholeFile, 10000));
	EXPECT_GT(r.std_error, 0);
	EXPECT_LE(std::abs(r.empirical_aundt - 3.575), 4 * r.std_error);
	EXPECT_NEAR(r.analytic_aundt, 3.575, 1e-12);
}

TEST(RunTrials, PerUserOrdering)
{
	SimResult const r = run_trials(baseline_config(CacheModel::Fractional, 5), 1);
	auto const& u = r.per_user_mean_ndt;
	ASSERT_EQ(u.size(), 7u);
	EXPECT_EQ(*std::max_element(u.begin(), u.end()), u.front());
	EXPECT_EQ(*std::max_element(u.begin(), u.end()), u.back());
	EXPECT_EQ(*std::min_element(u.begin(), u.end()), u[3]);
	EXPECT_LT(u[3], u[0]);
}

TEST(RunTrials, DeterministicAcrossThreadCounts)
{
	SimConfig const c = baseline_config(CacheModel::WholeFile, 997);
	SimResult const a = run_trials(c, 1);
	for (unsigned threads: {2u, 4u, 8u})
	{
		SimResult const b = run_trials(c, threads);
		EXPECT_EQ(a.empirical_aundt, b.empirical_aundt);
		EXPECT_EQ(a.std_error, b.std_error);
		EXPECT_EQ(a.per_user_mean_ndt, b.per_user_mean_ndt);
	}
	SimConfig d = c;
	d.seed = 43;
	EXPECT_NE(run_trials(d, 1).empirical_aundt, a.empirical_aundt);
}

TEST(RunTrials, SingleTrialHasUndefinedStdError)
{
	SimResult const r = run_trials(baseline_config(CacheModel::WholeFile, 1));
	EXPECT_FALSE(r.std_error_defined);
	EXPECT_EQ(r.std_error, 0.0);
}

TEST(RunTrials, InvariantToPowerAndFileLength)
{
	SimConfig c = baseline_config(CacheModel::WholeFile, 300);
	SimResult const ref = run_trials(c, 1);
	for (double power: {2.0, 20.0, 1000.0})
	{
		for (double z: {1e3, 1e6})
		{
			c.power = power;
			c.file_length = z;
			SimResult const r = run_trials(c, 1);
			EXPECT_NEAR(r.empirical_aundt, ref.empirical_aundt, 1e-12 * ref.empirical_aundt);
			for (std::size_t j = 0; j < r.per_user_mean_ndt.size(); ++j)
			{
				EXPECT_NEAR(r.per_user_mean_ndt[j], ref.per_user_mean_ndt[j], 1e-12 * ref.per_user_mean_ndt[j]);
			}
		}
	}
}

TEST(TrialOutcome, NdtLowerBound)
{
	SimConfig const c = baseline_config(CacheModel::WholeFile);
	LinkRates const rates = link_rates(c.params, c.cluster_size, c.power);
	for (int t = 0; t < 50; ++t)
	{
		TrialRng rng = trial_stream(c.seed, t);
		TrialOutcome const o = run_trial(c, rates, rng);
		ASSERT_EQ(o.per_user_ndt.size(), 7u);
		for (std::size_t j = 0; j < 7; ++j)
		{
			DelaySample const& d = o.per_user_delay[j];
			double const own_uncached = d.backhaul_cloud * rates.cloud_bs / c.file_length;
			EXPECT_GE(o.per_user_ndt[j] + 1e-12, own_uncached * (1 / 1.5 + 4.0));
		}
	}
}

TEST(SimConfig, Validation)
{
	SimConfig c = baseline_config(CacheModel::WholeFile);
	c.n_files = 6;
	EXPECT_THROW(run_trials(c), error);
	c = baseline_config(CacheModel::WholeFile);
	c.trials = 0;
	EXPECT_THROW(run_trials(c), error);
	c = baseline_config(CacheModel::WholeFile);
	c.power = 1;
	EXPECT_THROW(run_trials(c), error);
	c = baseline_config(CacheModel::WholeFile);
	c.cluster_size = 4;
	EXPECT_THROW(run_trials(c), error);
}
