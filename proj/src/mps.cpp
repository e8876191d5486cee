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

#include "cfog/mps.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <sys/stat.h>

namespace cfog {

namespace {

const char* kObjRow = "COST";

bool mps_safe(const std::string& name) {
    if (name.empty() || name.size() > 8) return false;
    for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void pad_to(std::string& line, size_t column) {
    if (line.size() < column) line.append(column - line.size(), ' ');
    else line.push_back(' ');
}

// Classic fixed-form field positions: names at columns 5 and 15/40,
// values at 25/50 (1-based).
std::string entry_line(const std::string& f2, const std::string& f3, const std::string& f4,
                       const std::string& f5 = "", const std::string& f6 = "") {
    std::string line = "    " + f2;
    pad_to(line, 14);
    line += f3;
    if (!f4.empty()) {
        pad_to(line, 24);
        line += f4;
    }
    if (!f5.empty()) {
        pad_to(line, 39);
        line += f5;
        pad_to(line, 49);
        line += f6;
    }
    return line;
}

struct NameMap {
    std::vector<std::string> var_names;  // per VarId, 8-char safe
    std::vector<std::string> con_names;
    std::vector<std::pair<std::string, std::string>> renamed;  // mangled -> original
};

NameMap make_name_map(const MilpModel& model) {
    NameMap map;
    std::set<std::string> used;
    used.insert(kObjRow);
    used.insert("RHS");
    used.insert("BND");

    auto assign = [&used, &map](const std::string& original, char prefix, int index) {
        if (mps_safe(original) && !used.count(original)) {
            used.insert(original);
            return original;
        }
        int n = index;
        std::string candidate;
        do {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "%c%07d", prefix, n++);
            candidate = buf;
        } while (used.count(candidate));
        used.insert(candidate);
        map.renamed.emplace_back(candidate, original);
        return candidate;
    };

    for (int v = 0; v < model.variable_count(); ++v)
        map.var_names.push_back(assign(model.variable(v).name, 'X', v));
    for (int c = 0; c < model.constraint_count(); ++c)
        map.con_names.push_back(assign(model.constraint(c).name, 'C', c));
    return map;
}

} // namespace

std::string render_mps(const MilpModel& model, std::string* names_out) {
    NameMap names = make_name_map(model);

    std::ostringstream out;
    std::string title = model.name.empty() ? "CFOG" : model.name;
    out << "NAME          " << title << "\n";

    out << "ROWS\n";
    out << " N  " << kObjRow << "\n";
    for (int c = 0; c < model.constraint_count(); ++c) {
        char sense = 'L';
        switch (model.constraint(c).sense) {
            case Sense::LessEqual: sense = 'L'; break;
            case Sense::Equal: sense = 'E'; break;
            case Sense::GreaterEqual: sense = 'G'; break;
        }
        out << " " << sense << "  " << names.con_names[c] << "\n";
    }

    // Column-major entries: objective coefficient first, then rows in
    // registration order.
    std::vector<std::vector<std::pair<int, double>>> column_rows(model.variable_count());
    for (int c = 0; c < model.constraint_count(); ++c)
        for (const auto& [coeff, var] : model.constraint(c).terms)
            column_rows[var].emplace_back(c, coeff);

    out << "COLUMNS\n";
    bool in_integer = false;
    int marker = 0;
    for (int v = 0; v < model.variable_count(); ++v) {
        bool integral = model.variable(v).kind != VarKind::Continuous;
        if (integral != in_integer) {
            char mark[16];
            std::snprintf(mark, sizeof(mark), "MARK%04d", marker++);
            out << entry_line(mark, "'MARKER'", "", "", "") << (integral ? "                 'INTORG'" : "                 'INTEND'") << "\n";
            in_integer = integral;
        }
        std::vector<std::pair<std::string, double>> entries;
        if (model.objective()[v] != 0.0) entries.emplace_back(kObjRow, model.objective()[v]);
        for (const auto& [c, coeff] : column_rows[v])
            entries.emplace_back(names.con_names[c], coeff);
        if (entries.empty()) entries.emplace_back(kObjRow, 0.0);  // keep the column alive
        for (size_t k = 0; k < entries.size(); k += 2) {
            if (k + 1 < entries.size())
                out << entry_line(names.var_names[v], entries[k].first,
                                  format_value(entries[k].second), entries[k + 1].first,
                                  format_value(entries[k + 1].second))
                    << "\n";
            else
                out << entry_line(names.var_names[v], entries[k].first,
                                  format_value(entries[k].second))
                    << "\n";
        }
    }
    if (in_integer) {
        char mark[16];
        std::snprintf(mark, sizeof(mark), "MARK%04d", marker++);
        out << entry_line(mark, "'MARKER'", "", "", "") << "                 'INTEND'" << "\n";
    }

    out << "RHS\n";
    for (int c = 0; c < model.constraint_count(); ++c) {
        double rhs = model.constraint(c).rhs;
        if (rhs != 0.0)
            out << entry_line("RHS", names.con_names[c], format_value(rhs)) << "\n";
    }

    out << "BOUNDS\n";
    for (int v = 0; v < model.variable_count(); ++v) {
        const Variable& var = model.variable(v);
        const std::string& n = names.var_names[v];
        if (var.lower == var.upper) {
            std::string line = " FX ";
            line += "BND";
            pad_to(line, 14);
            line += n;
            pad_to(line, 24);
            line += format_value(var.lower);
            out << line << "\n";
            continue;
        }
        if (std::isinf(var.lower) && std::isinf(var.upper)) {
            std::string line = " FR BND";
            pad_to(line, 14);
            line += n;
            out << line << "\n";
            continue;
        }
        if (std::isinf(var.lower) && var.lower < 0) {
            std::string line = " MI BND";
            pad_to(line, 14);
            line += n;
            out << line << "\n";
        } else if (var.lower != 0.0 || var.kind != VarKind::Continuous) {
            std::string line = " LO BND";
            pad_to(line, 14);
            line += n;
            pad_to(line, 24);
            line += format_value(var.lower);
            out << line << "\n";
        }
        if (!std::isinf(var.upper)) {
            std::string line = " UP BND";
            pad_to(line, 14);
            line += n;
            pad_to(line, 24);
            line += format_value(var.upper);
            out << line << "\n";
        }
    }
    out << "ENDATA\n";

    if (names_out) {
        std::ostringstream sidecar;
        for (const auto& [mangled, original] : names.renamed)
            sidecar << mangled << '\t' << original << '\n';
        *names_out = sidecar.str();
    }
    return out.str();
}

void export_mps(const MilpModel& model, const std::string& path) {
    std::string names;
    std::string content = render_mps(model, &names);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("export_mps: cannot write " + path);
    out << content;
    if (!out) throw IoError("export_mps: write failed for " + path);
    out.close();
    if (!names.empty()) {
        std::ofstream nmap(path + ".names", std::ios::binary);
        if (!nmap) throw IoError("export_mps: cannot write " + path + ".names");
        nmap << names;
    }
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

MilpModel import_mps(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("import_mps: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();

    std::string names_content;
    std::ifstream names(path + ".names", std::ios::binary);
    if (names) {
        std::ostringstream nbuf;
        nbuf << names.rdbuf();
        names_content = nbuf.str();
    }
    return parse_mps(buf.str(), path, names_content);
}

MilpModel parse_mps(const std::string& content, const std::string& path,
                    const std::string& names_content) {
    std::map<std::string, std::string> restore;
    {
        std::istringstream in(names_content);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            size_t tab = line.find('\t');
            if (tab == std::string::npos)
                throw ParseError(path + ".names: malformed line '" + line + "'");
            restore[line.substr(0, tab)] = line.substr(tab + 1);
        }
    }
    auto original = [&restore](const std::string& n) {
        auto it = restore.find(n);
        return it == restore.end() ? n : it->second;
    };

    struct Row {
        std::string name;
        Sense sense = Sense::LessEqual;
        std::vector<std::pair<double, VarId>> terms;
        double rhs = 0.0;
    };
    struct Col {
        std::string name;
        bool integral = false;
        double lo = 0.0, hi = kInfinity;
        bool lo_set = false, hi_set = false;
        double objective = 0.0;
    };

    std::string model_name = "model";
    std::vector<Row> rows;
    std::map<std::string, int> row_index;
    std::vector<Col> cols;
    std::map<std::string, int> col_index;
    std::string obj_row_name;

    enum class Section { None, Rows, Columns, Rhs, Bounds, Done } section = Section::None;
    bool integer_block = false;

    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '*') continue;
        std::string where = path + ":" + std::to_string(lineno);
        bool header = !std::isspace(static_cast<unsigned char>(line[0]));
        auto toks = tokens_of(line);
        if (toks.empty()) continue;

        if (header) {
            const std::string& h = toks[0];
            if (h == "NAME") {
                if (toks.size() > 1) model_name = toks[1];
            } else if (h == "ROWS") {
                section = Section::Rows;
            } else if (h == "COLUMNS") {
                section = Section::Columns;
            } else if (h == "RHS") {
                section = Section::Rhs;
            } else if (h == "BOUNDS") {
                section = Section::Bounds;
            } else if (h == "RANGES") {
                throw ParseError(where + ": RANGES section not supported");
            } else if (h == "ENDATA") {
                section = Section::Done;
                break;
            } else {
                throw ParseError(where + ": unknown section '" + h + "'");
            }
            continue;
        }

        switch (section) {
            case Section::Rows: {
                if (toks.size() != 2) throw ParseError(where + ": malformed ROWS entry");
                if (toks[0] == "N") {
                    if (obj_row_name.empty()) obj_row_name = toks[1];
                    // additional free rows are ignored
                } else {
                    Row r;
                    r.name = toks[1];
                    if (toks[0] == "L") r.sense = Sense::LessEqual;
                    else if (toks[0] == "G") r.sense = Sense::GreaterEqual;
                    else if (toks[0] == "E") r.sense = Sense::Equal;
                    else throw ParseError(where + ": unknown row sense '" + toks[0] + "'");
                    row_index[r.name] = static_cast<int>(rows.size());
                    rows.push_back(std::move(r));
                }
                break;
            }
            case Section::Columns: {
                if (toks.size() >= 3 && toks[1] == "'MARKER'") {
                    const std::string& kind = toks.back();
                    if (kind == "'INTORG'") integer_block = true;
                    else if (kind == "'INTEND'") integer_block = false;
                    else throw ParseError(where + ": unknown marker " + kind);
                    break;
                }
                if (toks.size() != 3 && toks.size() != 5)
                    throw ParseError(where + ": malformed COLUMNS entry");
                auto it = col_index.find(toks[0]);
                int col;
                if (it == col_index.end()) {
                    col = static_cast<int>(cols.size());
                    col_index[toks[0]] = col;
                    Col c;
                    c.name = toks[0];
                    c.integral = integer_block;
                    cols.push_back(c);
                } else {
                    col = it->second;
                }
                for (size_t k = 1; k + 1 < toks.size(); k += 2) {
                    double v = parse_number(toks[k + 1], where);
                    if (toks[k] == obj_row_name) {
                        cols[col].objective += v;
                    } else {
                        auto rit = row_index.find(toks[k]);
                        if (rit == row_index.end())
                            throw ParseError(where + ": entry for unknown row '" + toks[k] + "'");
                        rows[rit->second].terms.emplace_back(v, col);
                    }
                }
                break;
            }
            case Section::Rhs: {
                if (toks.size() != 3 && toks.size() != 5)
                    throw ParseError(where + ": malformed RHS entry");
                for (size_t k = 1; k + 1 < toks.size(); k += 2) {
                    if (toks[k] == obj_row_name) continue;  // objective offset unsupported
                    auto rit = row_index.find(toks[k]);
                    if (rit == row_index.end())
                        throw ParseError(where + ": RHS for unknown row '" + toks[k] + "'");
                    rows[rit->second].rhs = parse_number(toks[k + 1], where);
                }
                break;
            }
            case Section::Bounds: {
                if (toks.size() < 3) throw ParseError(where + ": malformed BOUNDS entry");
                auto cit = col_index.find(toks[2]);
                if (cit == col_index.end())
                    throw ParseError(where + ": bound for unknown column '" + toks[2] + "'");
                Col& c = cols[cit->second];
                const std::string& kind = toks[0];
                double v = toks.size() > 3 ? parse_number(toks[3], where) : 0.0;
                if (kind == "UP") { c.hi = v; c.hi_set = true; }
                else if (kind == "LO") { c.lo = v; c.lo_set = true; }
                else if (kind == "FX") { c.lo = c.hi = v; c.lo_set = c.hi_set = true; }
                else if (kind == "BV") { c.lo = 0; c.hi = 1; c.integral = true; c.lo_set = c.hi_set = true; }
                else if (kind == "MI") { c.lo = -kInfinity; c.lo_set = true; }
                else if (kind == "PL") { c.hi = kInfinity; c.hi_set = true; }
                else if (kind == "FR") { c.lo = -kInfinity; c.hi = kInfinity; c.lo_set = c.hi_set = true; }
                else throw ParseError(where + ": unknown bound type '" + kind + "'");
                break;
            }
            case Section::None:
            case Section::Done:
                throw ParseError(where + ": data line outside any section");
        }
    }

    MilpModel model;
    model.name = original(model_name);
    for (const auto& c : cols) {
        VarKind kind = VarKind::Continuous;
        if (c.integral)
            kind = (c.lo == 0.0 && c.hi == 1.0) ? VarKind::Binary : VarKind::Integer;
        model.add_variable(original(c.name), kind, c.lo, c.hi);
    }
    for (int v = 0; v < model.variable_count(); ++v)
        if (cols[v].objective != 0.0) model.add_objective_term(cols[v].objective, v);
    for (const auto& r : rows)
        model.add_constraint(original(r.name), r.terms, r.sense, r.rhs);
    model.freeze();
    return model;
}

bool models_equivalent(const MilpModel& a, const MilpModel& b, double tol, std::string* why) {
    auto fail = [why](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (a.variable_count() != b.variable_count()) return fail("variable count differs");
    if (a.constraint_count() != b.constraint_count()) return fail("constraint count differs");
    auto close = [tol](double x, double y) {
        if (std::isinf(x) || std::isinf(y)) return x == y;
        return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
    };
    for (int v = 0; v < a.variable_count(); ++v) {
        const Variable &va = a.variable(v), &vb = b.variable(v);
        if (va.name != vb.name) return fail("variable name mismatch: " + va.name);
        bool int_a = va.kind != VarKind::Continuous, int_b = vb.kind != VarKind::Continuous;
        if (int_a != int_b) return fail("variable kind mismatch: " + va.name);
        if (!close(va.lower, vb.lower) || !close(va.upper, vb.upper))
            return fail("variable bounds mismatch: " + va.name);
        if (!close(a.objective()[v], b.objective()[v]))
            return fail("objective coefficient mismatch: " + va.name);
    }
    for (int c = 0; c < a.constraint_count(); ++c) {
        const LinearConstraint &ca = a.constraint(c), &cb = b.constraint(c);
        if (ca.name != cb.name) return fail("constraint name mismatch: " + ca.name);
        if (ca.sense != cb.sense) return fail("constraint sense mismatch: " + ca.name);
        if (!close(ca.rhs, cb.rhs)) return fail("constraint rhs mismatch: " + ca.name);
        if (ca.terms.size() != cb.terms.size())
            return fail("constraint term count mismatch: " + ca.name);
        for (size_t k = 0; k < ca.terms.size(); ++k) {
            if (ca.terms[k].second != cb.terms[k].second ||
                !close(ca.terms[k].first, cb.terms[k].first))
                return fail("constraint coefficient mismatch: " + ca.name);
        }
    }
    return true;
}

} // namespace cfog
