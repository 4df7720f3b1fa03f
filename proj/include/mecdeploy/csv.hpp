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

// Minimal locale-independent CSV reading and writing.

#ifndef MECDEPLOY_CSV_HPP
#define MECDEPLOY_CSV_HPP

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <mecdeploy/error.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace mecdeploy::csv {

/// Shortest text for `v` with 12 significant digits, '.' as decimal separator.
inline std::string format_real(double v)
{
	char buf[64];
	auto const res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
	return std::string(buf, res.ptr);
}

inline double parse_real(std::string_view s)
{
	double v = 0;
	auto const res = std::from_chars(s.data(), s.data() + s.size(), v);
	if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
	{
		throw error(errc::malformed_csv, "not a number: '" + std::string(s) + "'");
	}
	return v;
}

struct Table
{
	std::vector<std::string> header;
	std::vector<std::vector<std::string>> rows;

	/// Index of a named column, or throws malformed-csv.
	std::size_t column(std::string_view name) const
	{
		for (std::size_t i = 0; i < header.size(); ++i)
		{
			if (header[i] == name)
			{
				return i;
			}
		}
		throw error(errc::malformed_csv, "missing column '" + std::string(name) + "'");
	}

	bool has_column(std::string_view name) const
	{
		for (auto const& h: header)
		{
			if (h == name)
			{
				return true;
			}
		}
		return false;
	}

	double real(std::size_t row, std::string_view name) const
	{
		return parse_real(rows.at(row).at(column(name)));
	}
};

inline std::vector<std::string> split_line(std::string_view line)
{
	if (!line.empty() && line.back() == '\r')
	{
		line.remove_suffix(1);
	}
	std::vector<std::string> fields;
	std::size_t start = 0;
	while (true)
	{
		std::size_t const comma = line.find(',', start);
		if (comma == std::string_view::npos)
		{
			fields.emplace_back(line.substr(start));
			break;
		}
		fields.emplace_back(line.substr(start, comma - start));
		start = comma + 1;
	}
	return fields;
}

inline Table read(std::istream& in)
{
	Table t;
	std::string line;
	if (!std::getline(in, line) || line.empty())
	{
		throw error(errc::malformed_csv, "missing header row");
	}
	t.header = split_line(line);
	while (std::getline(in, line))
	{
		if (line.empty() || line == "\r")
		{
			continue;
		}
		auto fields = split_line(line);
		if (fields.size() != t.header.size())
		{
			std::ostringstream oss;
			oss << "row " << t.rows.size() + 1 << " has " << fields.size() << " fields, header has "
			    << t.header.size();
			throw error(errc::malformed_csv, oss.str());
		}
		t.rows.push_back(std::move(fields));
	}
	return t;
}

inline Table read_file(std::string const& path)
{
	std::ifstream in(path);
	if (!in)
	{
		throw error(errc::io_error, "cannot open '" + path + "' for reading");
	}
	return read(in);
}

inline void write_row(std::ostream& out, std::vector<std::string> const& fields)
{
	for (std::size_t i = 0; i < fields.size(); ++i)
	{
		if (i > 0)
		{
			out << ',';
		}
		out << fields[i];
	}
	out << '\n';
}

inline void write(std::ostream& out, Table const& t)
{
	write_row(out, t.header);
	for (auto const& r: t.rows)
	{
		write_row(out, r);
	}
}

} // namespace mecdeploy::csv

#endif // MECDEPLOY_CSV_HPP
