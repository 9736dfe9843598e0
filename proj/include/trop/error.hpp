#pragma once

#include <stdexcept>
#include <string>

namespace trop {

// Every failure carries a short machine-readable code next to the message;
// the CLI prints both and maps codes to exit statuses.
struct Error : std::runtime_error {
	std::string code;
	Error(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
};

}  // namespace trop
