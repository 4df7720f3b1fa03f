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
 * \file mecdeploy/optimizer.hpp
 *
 * \brief Delay-optimal EH deployment density, and the rate/cache
 *  compensation needed when only a sparser-than-optimal density can be
 *  deployed.
 *
 * The AUNDT is a(M) = mu (M L/lambda + 2G/(beta M) - c) + d, which is convex
 * in real M > 0 for mu > 0.  Its unconstrained minimizer is
 * sqrt(2 lambda G / (beta L)); the feasible set is M >= L.
 */

#ifndef MECDEPLOY_OPTIMIZER_HPP
#define MECDEPLOY_OPTIMIZER_HPP

#include <algorithm>
#include <cmath>
#include <mecdeploy/edge_model.hpp>
#include <mecdeploy/error.hpp>
#include <optional>
#include <sstream>

namespace mecdeploy {

struct DensitySolution
{
	double relaxed{0};     ///< Real-valued minimizer, clamped at L.
	int rounded{0};        ///< max{L, ceil(sqrt(.) - 1/2)}, nearest-integer rounding.
	int exact{0};          ///< Integer argmin of aundt over M >= L.
	bool degenerate{false}; ///< mu == 0: every M >= L is optimal.
	bool audited{false};   ///< exact confirmed by a scan over [L, scan_limit].
};

struct AdjustmentSolution
{
	int target_density{0};
	std::optional<double> adjusted_lambda;
	std::optional<double> adjusted_mu;
	bool mu_feasible{false};
	bool lambda_feasible{false};
};

namespace detail {

inline double unconstrained_optimum(SystemParams const& p)
{
	double const g = cooperation_loss(p.coop_reach);
	return std::sqrt(2 * p.lambda * g / (p.beta * p.coop_reach));
}

inline void check_adjustment_range(SystemParams const& p, int m_star, int m_prime)
{
	if (m_prime < p.coop_reach || m_prime > m_star)
	{
		std::ostringstream oss;
		oss << "target density M'=" << m_prime << " must lie in [L=" << p.coop_reach
		    << ", M*=" << m_star << "]";
		throw error(errc::invalid_density, oss.str());
	}
}

} // namespace detail

/// Minimizer of the AUNDT over real M >= L. Returns L when mu == 0.
inline double relaxed_optimum(SystemParams const& p)
{
	validate(p);
	if (p.mu == 0)
	{
		return p.coop_reach;
	}
	return std::max<double>(p.coop_reach, detail::unconstrained_optimum(p));
}

inline DensitySolution optimal_density(SystemParams const& p, int scan_limit)
{
	validate(p);
	if (scan_limit < p.coop_reach)
	{
		throw error(errc::invalid_parameters, "scan limit must be >= L");
	}

	int const L = p.coop_reach;
	DensitySolution s;
	s.relaxed = relaxed_optimum(p);

	if (p.mu == 0)
	{
		s.degenerate = true;
		s.rounded = L;
		s.exact = L;
		s.audited = true;
		return s;
	}

	s.rounded = std::max(L, static_cast<int>(std::ceil(detail::unconstrained_optimum(p) - 0.5)));

	int const lo = std::max(L, static_cast<int>(std::floor(s.relaxed)));
	int const hi = std::max(L, static_cast<int>(std::ceil(s.relaxed)));
	s.exact = aundt(p, hi) < aundt(p, lo) ? hi : lo;

	if (s.exact <= scan_limit)
	{
		double const best = aundt(p, s.exact);
		s.audited = true;
		for (int m = L; m <= scan_limit; ++m)
		{
			if (aundt(p, m) < best)
			{
				s.audited = false;
				break;
			}
		}
	}
	return s;
}

/**
 * Smallest EH-BS rate lambda' such that density m_prime matches the AUNDT
 * achieved at m_star with the original lambda.
 */
inline double adjust_backhaul_rate(SystemParams const& p, int m_star, int m_prime)
{
	validate(p);
	detail::check_adjustment_range(p, m_star, m_prime);

	double const g = cooperation_loss(p.coop_reach);
	double const denom = m_star
	                   + (1.0 / m_star - 1.0 / m_prime) * 2 * p.lambda * g / (p.beta * p.coop_reach);
	if (!(denom > 0))
	{
		throw error(errc::infeasible_adjustment,
		            "no EH-BS rate compensates the density reduction (nonpositive denominator)");
	}
	return p.lambda * m_prime / denom;
}

/**
 * Cache ratio mu' that makes density m_prime match the AUNDT at m_star,
 * without feasibility checks.  `reduces_delay` is false when the caching
 * coefficient at m_prime is nonnegative, in which case more cache does not
 * help and the value is meaningless as a lower bound.
 */
struct CacheRequirement
{
	double value{0};
	bool reduces_delay{false};
};

inline CacheRequirement required_cache_capacity(SystemParams const& p, int m_star, int m_prime)
{
	validate(p);
	detail::check_adjustment_range(p, m_star, m_prime);

	double const L = p.coop_reach;
	double const g = cooperation_loss(p.coop_reach);
	double const num = L / p.lambda * (m_star - m_prime)
	                 + (2 / (p.beta * m_star) - 2 / (p.beta * m_prime)) * g;
	double const den = L * m_prime / p.lambda
	                 + 2 * g / (p.beta * m_prime)
	                 - (1 / p.gamma + 2 / p.beta);
	return CacheRequirement{p.mu * (num / den + 1), den < 0};
}

inline double adjust_cache_capacity(SystemParams const& p, int m_star, int m_prime)
{
	validate(p);
	if (p.mu == 0)
	{
		throw error(errc::degenerate, "mu = 0: the AUNDT does not depend on density");
	}
	CacheRequirement const req = required_cache_capacity(p, m_star, m_prime);
	if (!req.reduces_delay)
	{
		throw error(errc::infeasible_adjustment,
		            "caching does not reduce delay at the target density");
	}
	if (req.value > 1)
	{
		std::ostringstream oss;
		oss << "required cache ratio mu'=" << req.value << " exceeds 1";
		throw error(errc::infeasible_adjustment, oss.str());
	}
	return req.value;
}

/// Both single-parameter compensations, with infeasibility reported through flags.
inline AdjustmentSolution adjust(SystemParams const& p, int m_star, int m_prime)
{
	validate(p);
	detail::check_adjustment_range(p, m_star, m_prime);

	AdjustmentSolution s;
	s.target_density = m_prime;
	try
	{
		s.adjusted_lambda = adjust_backhaul_rate(p, m_star, m_prime);
		s.lambda_feasible = true;
	}
	catch (error const& e)
	{
		if (e.code() != errc::infeasible_adjustment)
		{
			throw;
		}
	}

	if (p.mu > 0)
	{
		CacheRequirement const req = required_cache_capacity(p, m_star, m_prime);
		s.adjusted_mu = req.value;
		s.mu_feasible = req.reduces_delay && req.value <= 1;
	}
	return s;
}

/// aundt(adjusted, m_prime) - aundt(original, m_star); <= 0 means the guarantee holds.
inline double verify_adjustment(SystemParams const& original, int m_star,
                                SystemParams const& adjusted, int m_prime)
{
	return aundt(adjusted, m_prime) - aundt(original, m_star);
}

} // namespace mecdeploy

#endif // MECDEPLOY_OPTIMIZER_HPP
