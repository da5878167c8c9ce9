#pragma once

#include <string>
#include <vector>

#include "megha/core.hpp"

namespace megha {

// Instance JSON: named agents/houses plus the raw (rational) valuations.
//   { "agents": 4 | ["a1",...], "houses": 4 | ["h1",...],
//     "edges": [[0,1],...], "valuations": [[0,"1/2",...],...],
//     "metadata": {...}? }
// Integer values are JSON numbers; non-integers are "p/q" or decimal strings.
struct InstanceDocument {
    std::vector<std::string> agent_names;
    std::vector<std::string> house_names;
    RawInstance raw;
    std::string metadata_json; // compact metadata object, empty when absent
};

// Err::ParseError on malformed text or shapes.
InstanceDocument parse_instance_document(const std::string& text);

std::string format_instance_document(const InstanceDocument& doc, bool pretty);

// Wraps a canonical instance with default names a1..an / h1..hn.
InstanceDocument document_of(const Instance& inst);

// Result JSON: solver, optimal flag, exact envy (scaled decimal string plus
// reduced rational), name-keyed assignment, per-edge envies, stats.
std::string format_result_document(const InstanceDocument& doc, const Instance& inst,
                                   const SolveResult& res, bool pretty);

// Reads the "assignment" object ({agent name: house name}) of a result (or
// bare allocation) document back into agent-index -> house-index form.
std::vector<int> parse_assignment_document(const std::string& text, const InstanceDocument& doc);

std::string format_error_document(const Error& e);

// Whole-file helpers; Err::IoError on failure. Path "-" reads stdin.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace megha
