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
 * \file mecdeploy/plot.hpp
 *
 * \brief Renders AUNDT-vs-M tables as a self-contained SVG chart.
 *
 * Analyze tables give one solid polyline per parameter group.  Simulate
 * tables give a dashed analytic curve plus circle markers for the empirical
 * estimates.  Output depends only on the table contents.
 */

#ifndef MECDEPLOY_PLOT_HPP
#define MECDEPLOY_PLOT_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <mecdeploy/csv.hpp>
#include <mecdeploy/error.hpp>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace mecdeploy::plot {

namespace detail {

inline std::string fixed(double v, int digits = 2)
{
	char buf[64];
	auto const res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, digits);
	return std::string(buf, res.ptr);
}

struct Series
{
	std::string label;
	std::vector<double> m;
	std::vector<double> analytic;
	std::vector<double> empirical; // empty for analyze tables
};

constexpr std::array<char const*, 8> palette{
	"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

} // namespace detail

inline std::string render_svg(csv::Table const& t)
{
	if (t.rows.empty())
	{
		throw error(errc::malformed_csv, "table has no data rows");
	}
	bool const simulated = t.has_column("empirical_aundt");
	char const* analytic_col = simulated ? "analytic_aundt" : "aundt";
	if (!simulated && !t.has_column("aundt"))
	{
		throw error(errc::malformed_csv, "neither an analyze nor a simulate table");
	}

	using Key = std::tuple<double, double, double, double>;
	std::map<Key, detail::Series> groups;
	std::vector<Key> order;
	for (std::size_t r = 0; r < t.rows.size(); ++r)
	{
		Key const k{t.real(r, "mu"), t.real(r, "gamma"), t.real(r, "lambda"), t.real(r, "beta")};
		auto [it, inserted] = groups.try_emplace(k);
		if (inserted)
		{
			order.push_back(k);
			auto const& row = t.rows[r];
			it->second.label = "mu=" + row[t.column("mu")] + " gamma=" + row[t.column("gamma")]
			                 + " lambda=" + row[t.column("lambda")] + " beta=" + row[t.column("beta")];
		}
		it->second.m.push_back(t.real(r, "m"));
		it->second.analytic.push_back(t.real(r, analytic_col));
		if (simulated)
		{
			it->second.empirical.push_back(t.real(r, "empirical_aundt"));
		}
	}

	double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
	for (auto const& [k, s]: groups)
	{
		for (std::size_t i = 0; i < s.m.size(); ++i)
		{
			xmin = std::min(xmin, s.m[i]);
			xmax = std::max(xmax, s.m[i]);
			ymin = std::min(ymin, s.analytic[i]);
			ymax = std::max(ymax, s.analytic[i]);
			if (simulated)
			{
				ymin = std::min(ymin, s.empirical[i]);
				ymax = std::max(ymax, s.empirical[i]);
			}
		}
	}
	if (!std::isfinite(xmin) || !std::isfinite(ymin) || !std::isfinite(xmax) || !std::isfinite(ymax))
	{
		throw error(errc::malformed_csv, "non-finite values in table");
	}
	if (xmax - xmin < 1)
	{
		xmin -= 1;
		xmax += 1;
	}
	double const ypad = std::max(0.05 * (ymax - ymin), 0.05 * std::max(1.0, std::abs(ymax)));
	ymin -= ypad;
	ymax += ypad;

	double const width = 720, height = 480;
	double const left = 70, right = 250, top = 30, bottom = 60;
	double const pw = width - left - right, ph = height - top - bottom;
	auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
	auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

	std::ostringstream svg;
	svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
	    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fixed(width, 0)
	    << "\" height=\"" << detail::fixed(height, 0) << "\" viewBox=\"0 0 " << detail::fixed(width, 0)
	    << ' ' << detail::fixed(height, 0) << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
	    << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
	    << "<rect x=\"" << detail::fixed(left) << "\" y=\"" << detail::fixed(top) << "\" width=\""
	    << detail::fixed(pw) << "\" height=\"" << detail::fixed(ph)
	    << "\" fill=\"none\" stroke=\"black\"/>\n";

	// x ticks at integer M
	int const xstep = std::max(1, static_cast<int>(std::ceil((xmax - xmin) / 12)));
	for (int m = static_cast<int>(std::ceil(xmin)); m <= static_cast<int>(std::floor(xmax)); m += xstep)
	{
		double const x = px(m);
		svg << "<line x1=\"" << detail::fixed(x) << "\" y1=\"" << detail::fixed(top + ph) << "\" x2=\""
		    << detail::fixed(x) << "\" y2=\"" << detail::fixed(top + ph + 5) << "\" stroke=\"black\"/>\n"
		    << "<text x=\"" << detail::fixed(x) << "\" y=\"" << detail::fixed(top + ph + 20)
		    << "\" text-anchor=\"middle\">" << m << "</text>\n";
	}
	for (int i = 0; i <= 5; ++i)
	{
		double const v = ymin + (ymax - ymin) * i / 5;
		double const y = py(v);
		svg << "<line x1=\"" << detail::fixed(left - 5) << "\" y1=\"" << detail::fixed(y) << "\" x2=\""
		    << detail::fixed(left) << "\" y2=\"" << detail::fixed(y) << "\" stroke=\"black\"/>\n"
		    << "<text x=\"" << detail::fixed(left - 8) << "\" y=\"" << detail::fixed(y + 4)
		    << "\" text-anchor=\"end\">" << detail::fixed(v, 3) << "</text>\n";
	}
	svg << "<text x=\"" << detail::fixed(left + pw / 2) << "\" y=\"" << detail::fixed(height - 15)
	    << "\" text-anchor=\"middle\">M (BSs per edge host)</text>\n"
	    << "<text x=\"18\" y=\"" << detail::fixed(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
	    << detail::fixed(top + ph / 2) << ")\">AUNDT</text>\n";

	for (std::size_t g = 0; g < order.size(); ++g)
	{
		auto const& s = groups.at(order[g]);
		char const* color = detail::palette[g % detail::palette.size()];

		svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
		if (simulated)
		{
			svg << " stroke-dasharray=\"6 4\"";
		}
		svg << " points=\"";
		for (std::size_t i = 0; i < s.m.size(); ++i)
		{
			svg << (i ? " " : "") << detail::fixed(px(s.m[i])) << ',' << detail::fixed(py(s.analytic[i]));
		}
		svg << "\"/>\n";

		for (std::size_t i = 0; i < s.empirical.size(); ++i)
		{
			svg << "<circle cx=\"" << detail::fixed(px(s.m[i])) << "\" cy=\"" << detail::fixed(py(s.empirical[i]))
			    << "\" r=\"4\" fill=\"none\" stroke=\"" << color << "\"/>\n";
		}

		double const ly = top + 10 + 18.0 * g;
		svg << "<line x1=\"" << detail::fixed(left + pw + 15) << "\" y1=\"" << detail::fixed(ly) << "\" x2=\""
		    << detail::fixed(left + pw + 40) << "\" y2=\"" << detail::fixed(ly) << "\" stroke=\"" << color
		    << "\" stroke-width=\"1.5\"/>\n"
		    << "<text x=\"" << detail::fixed(left + pw + 45) << "\" y=\"" << detail::fixed(ly + 4) << "\">"
		    << s.label << "</text>\n";
	}
	svg << "</svg>\n";
	return svg.str();
}

} // namespace mecdeploy::plot

#endif // MECDEPLOY_PLOT_HPP
