#pragma once

#include <string>
#include <variant>

#include "framekit/frame.hpp"
#include "framekit/operator_frame.hpp"

namespace framekit {

using ParsedFile = std::variant<Frame, OperatorFrame, CVector>;

// Strict parser for the versioned JSON container: unknown fields, wrong
// types, ragged arrays, and non-finite numbers are all ParseError.
ParsedFile parse_file(const std::string& text);

// parse_file on the contents of `path`; I/O failures are ParseError too.
ParsedFile load_file(const std::string& path);

// Serializers render every double with 17 significant digits, so
// parse(to_json(x)) reproduces x bit for bit.
std::string to_json(const Frame& f);
std::string to_json(const OperatorFrame& of);
std::string to_json(const CVector& v);

void save_file(const std::string& path, const std::string& text);

} // namespace framekit
