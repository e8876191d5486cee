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

#include "cfog/textio.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cfog {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

std::string TextSection::get(const std::string& key, const std::string& fallback) const {
    const TextKv* found = nullptr;
    for (const auto& e : kv) {
        if (e.key == key) {
            if (found)
                throw ValidationError("duplicate key '" + key + "' (lines " +
                                      std::to_string(found->line) + " and " +
                                      std::to_string(e.line) + ")");
            found = &e;
        }
    }
    return found ? found->value : fallback;
}

bool TextSection::has(const std::string& key) const {
    for (const auto& e : kv)
        if (e.key == key) return true;
    return false;
}

const TextSection* TextDocument::find(const std::string& name) const {
    for (const auto& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

std::vector<const TextSection*> TextDocument::find_all(const std::string& name) const {
    std::vector<const TextSection*> out;
    for (const auto& s : sections)
        if (s.name == name) out.push_back(&s);
    return out;
}

TextDocument read_text_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text_document(buf.str(), path);
}

TextDocument parse_text_document(const std::string& content, const std::string& path) {
    TextDocument doc;
    doc.path = path;
    doc.sections.push_back(TextSection{});  // top-level block

    std::istringstream in(content);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string line = strip(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": malformed section header '" + line + "'");
            TextSection sec;
            sec.name = strip(line.substr(1, line.size() - 2));
            sec.line = lineno;
            if (sec.name.empty())
                throw ParseError(path + ":" + std::to_string(lineno) + ": empty section name");
            doc.sections.push_back(std::move(sec));
            continue;
        }

        TextSection& cur = doc.sections.back();
        size_t eq = line.find('=');
        if (eq != std::string::npos) {
            TextKv e;
            e.key = strip(line.substr(0, eq));
            e.value = strip(line.substr(eq + 1));
            e.line = lineno;
            if (e.key.empty())
                throw ParseError(path + ":" + std::to_string(lineno) + ": empty key");
            cur.kv.push_back(std::move(e));
        } else {
            cur.rows.push_back(split_ws(line));
            cur.row_lines.push_back(lineno);
        }
    }
    return doc;
}

double parse_number(const std::string& token, const std::string& context) {
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (errno != 0 || end == token.c_str() || *end != '\0')
        throw ParseError(context + ": expected a number, got '" + token + "'");
    return v;
}

long long parse_integer(const std::string& token, const std::string& context) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(token.c_str(), &end, 10);
    if (errno != 0 || end == token.c_str() || *end != '\0')
        throw ParseError(context + ": expected an integer, got '" + token + "'");
    return v;
}

} // namespace cfog
