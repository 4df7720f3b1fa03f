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

#ifndef MECDEPLOY_ERROR_HPP
#define MECDEPLOY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mecdeploy {

enum class errc
{
	invalid_parameters,
	invalid_position,
	invalid_power,
	infeasible_density,
	invalid_density,
	infeasible_adjustment,
	degenerate,
	library_too_small,
	invalid_config,
	malformed_csv,
	io_error
};

inline const char* to_string(errc code) noexcept
{
	switch (code)
	{
		case errc::invalid_parameters:    return "invalid-parameters";
		case errc::invalid_position:      return "invalid-position";
		case errc::invalid_power:         return "invalid-power";
		case errc::infeasible_density:    return "infeasible-density";
		case errc::invalid_density:       return "invalid-density";
		case errc::infeasible_adjustment: return "infeasible-adjustment";
		case errc::degenerate:            return "degenerate";
		case errc::library_too_small:     return "library-too-small";
		case errc::invalid_config:        return "invalid-config";
		case errc::malformed_csv:         return "malformed-csv";
		case errc::io_error:              return "io-error";
	}
	return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error: public std::runtime_error
{
public:
	error(errc code, const std::string& what)
	: std::runtime_error(std::string(to_string(code)) + ": " + what),
	  code_(code)
	{
	}

	errc code() const noexcept { return code_; }

private:
	errc code_;
};

} // namespace mecdeploy

#endif // MECDEPLOY_ERROR_HPP
