// Copyright 2026 The qacr Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.


#include "qacr/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace qacr {

using nlohmann::json;

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write " + path);
}

namespace {

std::vector<std::string> words_of(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

[[noreturn]] void parse_error(const char* what, int line, const std::string& message) {
    throw InputError(std::string(what) + ": line " + std::to_string(line) + ": " + message);
}

template <class T>
T number(const std::string& word, const char* what, int line) {
    T v{};
    auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || end != word.data() + word.size()) {
        parse_error(what, line, "bad number '" + word + "'");
    }
    return v;
}

}  // namespace

// QUBO text

QuboModel read_qubo_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number_of_line = 0;
    std::int64_t n = -1, nnz = 0, seen = 0;
    QuboBuilder q;
    while (std::getline(in, line)) {
        ++number_of_line;
        const auto w = words_of(line);
        if (w.empty()) continue;
        if (n < 0) {
            if (w.size() < 2 || w.size() > 3) parse_error("qubo", number_of_line, "expected `n nnz [offset]`");
            n = number<std::int64_t>(w[0], "qubo", number_of_line);
            nnz = number<std::int64_t>(w[1], "qubo", number_of_line);
            if (n < 0 || nnz < 0) parse_error("qubo", number_of_line, "negative size");
            if (w.size() == 3) q.add_offset(number<double>(w[2], "qubo", number_of_line));
            for (Variable v = 0; v < n; ++v) q.add_variable(v);
            continue;
        }
        if (w.size() != 3) parse_error("qubo", number_of_line, "expected `i j w`");
        const auto i = number<std::int64_t>(w[0], "qubo", number_of_line);
        const auto j = number<std::int64_t>(w[1], "qubo", number_of_line);
        const auto b = number<double>(w[2], "qubo", number_of_line);
        if (i < 1 || i > n || j < 1 || j > n) parse_error("qubo", number_of_line, "index out of range");
        if (++seen > nnz) parse_error("qubo", number_of_line, "more entries than declared");
        q.add(i - 1, j - 1, b);
    }
    if (n < 0) throw InputError("qubo: missing header");
    if (seen != nnz) {
        throw InputError("qubo: declared " + std::to_string(nnz) + " entries, found " + std::to_string(seen));
    }
    return q.build();
}

std::string write_qubo_text(const QuboModel& qubo) {
    if (!qubo.variables().empty() && qubo.variables().front() < 0) {
        throw InputError("qubo text needs non-negative labels");
    }
    std::ostringstream out;
    out << qubo.max_variable() + 1 << ' ' << qubo.terms().size();
    if (qubo.offset() != 0) out << ' ' << format_number(qubo.offset());
    out << '\n';
    for (const auto& [uv, b] : qubo.terms()) {
        out << uv.first + 1 << ' ' << uv.second + 1 << ' ' << format_number(b) << '\n';
    }
    return out.str();
}

// JSON helpers

namespace {

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

Variable label_of(const std::string& key) {
    Variable v = 0;
    auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || end != key.data() + key.size()) {
        throw InputError("bad variable label '" + key + "'");
    }
    return v;
}

}  // namespace

// Ising JSON

ReductionResult read_ising_json(const std::string& text) {
    const auto doc = parse_json(text, "ising");
    return guarded("ising", [&] {
        IsingBuilder b;
        if (doc.contains("variables")) {
            for (const auto& v : doc.at("variables")) b.add_variable(v.get<Variable>());
        }
        if (doc.contains("h")) {
            const auto& h = doc.at("h");
            if (h.is_object()) {
                for (const auto& [k, v] : h.items()) b.add_variable(label_of(k)).add_linear(label_of(k), v.get<Bias>());
            } else {
                for (const auto& e : h) {
                    const auto v = e.at(0).get<Variable>();
                    b.add_variable(v).add_linear(v, e.at(1).get<Bias>());
                }
            }
        }
        if (doc.contains("J")) {
            for (const auto& e : doc.at("J")) {
                if (e.size() != 3) throw InputError("ising: J entries are [u, v, bias]");
                const auto u = e.at(0).get<Variable>(), v = e.at(1).get<Variable>();
                if (u == v) throw InputError("ising: self-coupling on " + std::to_string(u));
                b.add_variable(u).add_variable(v).add_quadratic(u, v, e.at(2).get<Bias>());
            }
        }
        if (doc.contains("offset")) b.add_offset(doc.at("offset").get<Bias>());
        ReductionResult out;
        out.model = b.build();
        if (doc.contains("aux")) {
            for (const auto& a : doc.at("aux")) {
                AuxProvenance p;
                const auto kind = a.at("kind").get<std::string>();
                if (kind == "split") {
                    p.kind = AuxKind::InteractionSplit;
                    p.u = a.at("u").get<Variable>();
                    p.v = a.at("v").get<Variable>();
                } else if (kind == "digit") {
                    p.kind = AuxKind::IntegerDigit;
                    p.owner = a.at("owner").get<std::int64_t>();
                    p.coefficient = a.at("coefficient").get<Bias>();
                } else {
                    throw InputError("ising: unknown aux kind '" + kind + "'");
                }
                p.index = a.at("index").get<std::int64_t>();
                out.aux.emplace(a.at("id").get<Variable>(), p);
            }
        }
        return out;
    });
}

std::string write_ising_json(const IsingModel& model, const AuxRegistry& aux) {
    auto list = [](std::ostringstream& out, const json& items) {
        out << '[';
        for (std::size_t i = 0; i < items.size(); ++i) out << (i ? ",\n    " : "\n    ") << items[i].dump();
        out << (items.empty() ? "]" : "\n  ]");
    };
    json h = json::array(), J = json::array(), a = json::array();
    for (const auto& [v, b] : model.linear()) h.push_back({v, b});
    for (const auto& [uv, b] : model.quadratic()) J.push_back({uv.first, uv.second, b});
    for (const auto& [id, p] : aux) {
        json e = json::object();
        e["id"] = id;
        e["index"] = p.index;
        if (p.kind == AuxKind::InteractionSplit) {
            e["kind"] = "split";
            e["u"] = p.u;
            e["v"] = p.v;
        } else {
            e["kind"] = "digit";
            e["owner"] = p.owner;
            e["coefficient"] = p.coefficient;
        }
        a.push_back(std::move(e));
    }
    std::ostringstream out;
    out << "{\n  \"variables\": " << json(model.variables()).dump() << ",\n  \"h\": ";
    list(out, h);
    out << ",\n  \"J\": ";
    list(out, J);
    out << ",\n  \"offset\": " << json(model.offset()).dump();
    if (!aux.empty()) {
        out << ",\n  \"aux\": ";
        list(out, a);
    }
    out << "\n}\n";
    return out.str();
}

// embedding and hardware JSON

Embedding read_embedding_json(const std::string& text) {
    const auto doc = parse_json(text, "embedding");
    return guarded("embedding", [&] {
        if (!doc.is_object()) throw InputError("embedding: expected an object");
        Embedding out;
        for (const auto& [k, chain] : doc.items()) {
            auto& c = out[label_of(k)];
            for (const auto& q : chain) c.insert(q.get<Variable>());
        }
        return out;
    });
}

std::string write_embedding_json(const Embedding& embedding) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [v, chain] : embedding) {
        out << (first ? "\n" : ",\n") << "  \"" << v << "\": " << json(chain).dump();
        first = false;
    }
    out << (first ? "}" : "\n}") << '\n';
    return out.str();
}

HardwareGraph read_hardware_json(const std::string& text) {
    const auto doc = parse_json(text, "hardware");
    return guarded("hardware", [&] {
        std::set<Variable> nodes;
        for (const auto& q : doc.at("nodes")) nodes.insert(q.get<Variable>());
        std::vector<VarPair> edges;
        for (const auto& e : doc.at("edges")) {
            if (e.size() != 2) throw InputError("hardware: edges are [a, b]");
            edges.emplace_back(e.at(0).get<Variable>(), e.at(1).get<Variable>());
        }
        return HardwareGraph(std::move(nodes), edges);
    });
}

std::string write_hardware_json(const HardwareGraph& hw) {
    json doc = json::object();
    doc["nodes"] = hw.nodes();
    json edges = json::array();
    for (const auto& [a, b] : hw.edges()) edges.push_back({a, b});
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
}

// samples CSV

SampleSet read_samples_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    std::optional<std::vector<Variable>> vars;
    bool header = false;
    SampleSet out;
    const std::string tag = "# variables:";
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(tag, 0) == 0) {
            std::vector<Variable> v;
            for (const auto& w : words_of(line.substr(tag.size()))) v.push_back(number<Variable>(w, "samples", n));
            vars = v;
            out = SampleSet(v);
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        if (!vars) parse_error("samples", n, "missing `# variables:` line");
        if (!header) {
            if (line != "assignment,energy,occurrences,chain_broken") parse_error("samples", n, "bad header");
            header = true;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) f.push_back(cell);
        if (f.size() != 4) parse_error("samples", n, "expected 4 fields");
        if (f[0].size() != vars->size()) parse_error("samples", n, "assignment length mismatch");
        SampleRecord r;
        for (char c : f[0]) {
            if (c != '+' && c != '-') parse_error("samples", n, "assignment must use '+' and '-'");
            r.spins.push_back(c == '+' ? Spin{1} : Spin{-1});
        }
        r.energy = number<double>(f[1], "samples", n);
        r.occurrences = number<std::int64_t>(f[2], "samples", n);
        if (f[3] != "0" && f[3] != "1") parse_error("samples", n, "chain_broken must be 0 or 1");
        r.chain_broken = f[3] == "1";
        if (r.occurrences < 1) parse_error("samples", n, "occurrences must be positive");
        out.push_back(std::move(r));
    }
    if (!vars) throw InputError("samples: missing `# variables:` line");
    return out;
}

std::string write_samples_csv(const SampleSet& samples) {
    std::ostringstream out;
    out << "# variables:";
    for (auto v : samples.variables()) out << ' ' << v;
    out << "\nassignment,energy,occurrences,chain_broken\n";
    for (const auto& r : samples.records()) {
        for (auto s : r.spins) out << (s > 0 ? '+' : '-');
        out << ',' << format_number(r.energy) << ',' << r.occurrences << ',' << (r.chain_broken ? 1 : 0)
            << '\n';
    }
    return out.str();
}

}  // namespace qacr
