/*
 * Copyright 2026 The cfog Authors
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

#ifndef CFOG_TEXTIO_HPP
#define CFOG_TEXTIO_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace cfog {

/// Error raised when an input file cannot be read or tokenized.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Error raised when a file parses but violates its schema or an invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// All instance files (topology, catalog, scenario, VM specs, experiment
// configs) share one dialect: '#' comments, `key = value` pairs, and
// `[section]` blocks whose non-kv lines are whitespace-separated table rows.
// Sections may repeat; loaders decide what is allowed where.

struct TextKv {
    std::string key;
    std::string value;
    int line = 0;
};

struct TextSection {
    std::string name;            // empty for the implicit top-level section
    std::vector<TextKv> kv;
    std::vector<std::vector<std::string>> rows;
    std::vector<int> row_lines;
    int line = 0;

    /// Value of `key`, or `fallback` when absent. Throws ValidationError on duplicates.
    std::string get(const std::string& key, const std::string& fallback = "") const;
    bool has(const std::string& key) const;
};

struct TextDocument {
    std::string path;
    std::vector<TextSection> sections;  // sections[0] is the top-level block

    const TextSection* find(const std::string& name) const;
    std::vector<const TextSection*> find_all(const std::string& name) const;
    const TextSection& top() const { return sections.front(); }
};

TextDocument read_text_document(const std::string& path);
TextDocument parse_text_document(const std::string& content, const std::string& path);

double parse_number(const std::string& token, const std::string& context);
long long parse_integer(const std::string& token, const std::string& context);

} // namespace cfog

#endif // CFOG_TEXTIO_HPP
