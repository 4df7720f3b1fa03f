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
 * \file mecdeploy/edge_model.hpp
 *
 * \brief Closed-form delay model of a cache-enabled, partially connected
 *  linear network where one edge host (EH) serves a cluster of M base
 *  stations (BSs).
 *
 * All delay quantities are normalized delivery times (NDT): the delivery
 * delay divided by Z/log P, the time needed to push one file of Z bits over
 * a unit-exponent point-to-point link.  Logarithms are natural; the base
 * cancels in every NDT quantity.
 */

#ifndef MECDEPLOY_EDGE_MODEL_HPP
#define MECDEPLOY_EDGE_MODEL_HPP

#include <cmath>
#include <mecdeploy/error.hpp>
#include <sstream>
#include <vector>

namespace mecdeploy {

/// Normalized network parameters.
struct SystemParams
{
	double mu{0};     ///< Fraction of the file library cached at each EH, in [0,1].
	double gamma{1};  ///< Cloud-BS rate exponent, C_F = gamma log P.
	double lambda{1}; ///< Total EH-BS rate exponent, C_EH = (lambda/M) log P.
	double beta{1};   ///< BS-user rate exponent, C_W = beta log P.
	int coop_reach{1}; ///< L, max consecutive BSs serving one user (odd).
};

inline void validate(SystemParams const& p)
{
	std::ostringstream oss;
	if (!(p.mu >= 0 && p.mu <= 1))
	{
		oss << "cache ratio mu=" << p.mu << " outside [0,1]";
	}
	else if (!(p.gamma > 0) || !std::isfinite(p.gamma))
	{
		oss << "gamma=" << p.gamma << " must be positive";
	}
	else if (!(p.lambda > 0) || !std::isfinite(p.lambda))
	{
		oss << "lambda=" << p.lambda << " must be positive";
	}
	else if (!(p.beta > 0) || !std::isfinite(p.beta))
	{
		oss << "beta=" << p.beta << " must be positive";
	}
	else if (p.coop_reach < 1 || p.coop_reach % 2 == 0)
	{
		oss << "cooperation reach L=" << p.coop_reach << " must be odd and >= 1";
	}
	else
	{
		return;
	}
	throw error(errc::invalid_parameters, oss.str());
}

/// A candidate cluster size together with its feasibility against L.
struct DeploymentPlan
{
	int cluster_size{1};
	bool feasible{false};
};

inline DeploymentPlan make_plan(SystemParams const& p, int cluster_size)
{
	if (cluster_size < 1)
	{
		throw error(errc::invalid_density, "cluster size must be >= 1");
	}
	return DeploymentPlan{cluster_size, cluster_size >= p.coop_reach};
}

/// Link rates in bits per channel use for a given transmit power.
struct LinkRates
{
	double bs_user{0};      ///< C_W
	double eh_bs{0};        ///< C_EH, per BS share of the EH backhaul
	double cloud_bs{0};     ///< C_F
	double interference{0}; ///< C_WB
	std::vector<double> cooperative; ///< C_WC,j for j = 1..M, stored at [j-1]
};

/// The four additive terms of a single user's NDT.
struct NdtBreakdown
{
	double backhaul_cached{0};
	double backhaul_uncached{0};
	double wireless_coop{0};
	double wireless_interference{0};
	double total{0};
};

namespace detail {

inline void check_reach_and_size(int cluster_size, int coop_reach)
{
	if (coop_reach < 1 || coop_reach % 2 == 0)
	{
		throw error(errc::invalid_parameters, "cooperation reach L must be odd and >= 1");
	}
	if (cluster_size < coop_reach)
	{
		std::ostringstream oss;
		oss << "cluster size M=" << cluster_size << " is below cooperation reach L=" << coop_reach;
		throw error(errc::invalid_parameters, oss.str());
	}
}

inline void check_feasible_density(SystemParams const& p, int cluster_size)
{
	validate(p);
	if (cluster_size < p.coop_reach)
	{
		std::ostringstream oss;
		oss << "cluster size M=" << cluster_size << " is below cooperation reach L=" << p.coop_reach;
		throw error(errc::infeasible_density, oss.str());
	}
}

} // namespace detail

/**
 * Number of cooperative BS-user links at in-cluster position j.
 *
 * BSs within (L-1)/2 of a cluster border lose the links that would cross
 * into the neighbouring cluster, so the count drops from L in the middle to
 * (L+1)/2 at the outermost BS.
 */
inline int coop_link_count(int position, int cluster_size, int coop_reach)
{
	detail::check_reach_and_size(cluster_size, coop_reach);
	if (position < 1 || position > cluster_size)
	{
		std::ostringstream oss;
		oss << "position j=" << position << " outside [1," << cluster_size << "]";
		throw error(errc::invalid_position, oss.str());
	}

	int const half = (coop_reach - 1) / 2;
	if (position <= half)
	{
		return position + half;
	}
	if (position <= cluster_size - half)
	{
		return coop_reach;
	}
	return cluster_size - position + (coop_reach + 1) / 2;
}

/// Cooperation loss G(L) = 1 - L + 4L sum_{j=1}^{(L-1)/2} 1/(L+2j-1).
inline double cooperation_loss(int coop_reach)
{
	if (coop_reach < 1 || coop_reach % 2 == 0)
	{
		throw error(errc::invalid_parameters, "cooperation reach L must be odd and >= 1");
	}
	double const L = coop_reach;
	double sum = 0;
	for (int j = 1; j <= (coop_reach - 1) / 2; ++j)
	{
		sum += 1.0 / (L + 2.0 * j - 1.0);
	}
	return 1.0 - L + 4.0 * L * sum;
}

inline LinkRates link_rates(SystemParams const& p, int cluster_size, double power)
{
	validate(p);
	detail::check_reach_and_size(cluster_size, p.coop_reach);
	if (!(power > 1) || !std::isfinite(power))
	{
		std::ostringstream oss;
		oss << "transmit power P=" << power << " must exceed 1";
		throw error(errc::invalid_power, oss.str());
	}

	double const log_p = std::log(power);
	LinkRates r;
	r.bs_user = p.beta * log_p;
	r.eh_bs = p.lambda / cluster_size * log_p;
	r.cloud_bs = p.gamma * log_p;
	r.interference = 0.25 * p.beta * log_p;
	r.cooperative.reserve(cluster_size);
	for (int j = 1; j <= cluster_size; ++j)
	{
		double const links = coop_link_count(j, cluster_size, p.coop_reach);
		r.cooperative.push_back(p.beta * links / (2.0 * p.coop_reach) * log_p);
	}
	return r;
}

/// NDT of the user at in-cluster position j.
inline NdtBreakdown user_ndt(SystemParams const& p, int cluster_size, int position)
{
	validate(p);
	double const psi = coop_link_count(position, cluster_size, p.coop_reach);
	double const L = p.coop_reach;
	double const M = cluster_size;

	NdtBreakdown b;
	b.backhaul_cached = p.mu * M * L / p.lambda;
	b.backhaul_uncached = (1 - p.mu) / p.gamma;
	b.wireless_coop = 2 * p.mu * L / (p.beta * psi);
	b.wireless_interference = 4 * (1 - p.mu) / p.beta;
	b.total = b.backhaul_cached + b.backhaul_uncached + b.wireless_coop + b.wireless_interference;
	return b;
}

namespace detail {

inline double caching_bracket(SystemParams const& p, double cluster_size, double loss)
{
	double const L = p.coop_reach;
	return cluster_size * L / p.lambda
	     + 2 * loss / (p.beta * cluster_size)
	     - 1 / p.gamma
	     - 2 / p.beta;
}

inline double aundt_with_loss(SystemParams const& p, double cluster_size, double loss)
{
	return p.mu * caching_bracket(p, cluster_size, loss) + 1 / p.gamma + 4 / p.beta;
}

} // namespace detail

/// Coefficient of mu in the AUNDT formula. Caching lowers delay iff this is negative.
inline double caching_gain_coefficient(SystemParams const& p, int cluster_size)
{
	detail::check_feasible_density(p, cluster_size);
	return detail::caching_bracket(p, cluster_size, cooperation_loss(p.coop_reach));
}

/// Average user NDT over the M users of a cluster, in closed form.
inline double aundt(SystemParams const& p, int cluster_size)
{
	detail::check_feasible_density(p, cluster_size);
	return detail::aundt_with_loss(p, cluster_size, cooperation_loss(p.coop_reach));
}

/// AUNDT if cross-EH cooperation were allowed (G(L) = 0).
inline double aundt_lower_bound(SystemParams const& p, int cluster_size)
{
	detail::check_feasible_density(p, cluster_size);
	return detail::aundt_with_loss(p, cluster_size, 0.0);
}

/// The AUNDT formula with M relaxed to the reals; used by the optimizer.
inline double relaxed_aundt(SystemParams const& p, double cluster_size)
{
	validate(p);
	if (!(cluster_size >= p.coop_reach))
	{
		throw error(errc::infeasible_density, "relaxed cluster size below cooperation reach");
	}
	return detail::aundt_with_loss(p, cluster_size, cooperation_loss(p.coop_reach));
}

} // namespace mecdeploy

#endif // MECDEPLOY_EDGE_MODEL_HPP
