// Copyright 2026 The shadowkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shadowkit/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace shadowkit {

ParseError::ParseError(size_t line, const std::string &message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) {
        throw std::logic_error("format_double: conversion failed");
    }
    return std::string(buf, end);
}

namespace {

/// Lines of a text file; a single trailing newline is allowed, blank lines are not.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    if (text.empty()) {
        throw ParseError(1, "empty input");
    }
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.find_first_not_of(" \t") == std::string_view::npos) {
            throw ParseError(lines.size() + 1, "blank line");
        }
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            i++;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
            j++;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

uint64_t require_u64(std::string_view s, size_t line, std::string_view what) {
    if (s.empty() || s[0] == '+' || s[0] == '-') {
        throw ParseError(line, "malformed " + std::string(what) + " '" + std::string(s) + "'");
    }
    auto v = parse_number<uint64_t>(s);
    if (!v) {
        throw ParseError(line, "malformed " + std::string(what) + " '" + std::string(s) + "'");
    }
    return *v;
}

double require_double(std::string_view s, size_t line, std::string_view what) {
    auto v = parse_number<double>(s);
    if (!v || !std::isfinite(*v)) {
        throw ParseError(line, "malformed " + std::string(what) + " '" + std::string(s) + "'");
    }
    return *v;
}

Pauli require_basis_letter(char c, size_t line) {
    switch (c) {
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw ParseError(line, std::string("expected a basis letter X, Y or Z, got '") + c + "'");
    }
}

struct Header {
    std::map<std::string, std::string, std::less<>> fields;
    /// Everything after "state=", which may contain spaces.
    std::optional<std::string> state;
};

/// Parses "# <kind> v1 key=value ..." and checks that exactly the allowed keys occur.
Header parse_header(
    std::string_view line,
    std::string_view kind,
    std::initializer_list<std::string_view> required,
    std::initializer_list<std::string_view> optional = {},
    bool has_state = false) {
    std::string_view rest = line;
    std::optional<std::string> state;
    if (has_state) {
        size_t at = line.find(" state=");
        if (at == std::string_view::npos) {
            throw ParseError(1, "header is missing state=");
        }
        state = std::string(line.substr(at + 7));
        rest = line.substr(0, at);
    }
    auto tok = tokens_of(rest);
    if (tok.size() < 3 || tok[0] != "#" || tok[1] != kind) {
        throw ParseError(1, "expected header '# " + std::string(kind) + " v1 ...'");
    }
    if (tok[2] != "v1") {
        throw ParseError(1, "unsupported " + std::string(kind) + " version '" + std::string(tok[2]) + "'");
    }
    Header h;
    h.state = std::move(state);
    for (size_t i = 3; i < tok.size(); i++) {
        size_t eq = tok[i].find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw ParseError(1, "malformed header field '" + std::string(tok[i]) + "'");
        }
        std::string key(tok[i].substr(0, eq));
        bool known = false;
        for (auto k : required) {
            known = known || k == key;
        }
        for (auto k : optional) {
            known = known || k == key;
        }
        if (!known) {
            throw ParseError(1, "unknown header field '" + key + "'");
        }
        if (!h.fields.emplace(key, std::string(tok[i].substr(eq + 1))).second) {
            throw ParseError(1, "duplicate header field '" + key + "'");
        }
    }
    for (auto k : required) {
        if (!h.fields.count(k)) {
            throw ParseError(1, "header is missing " + std::string(k) + "=");
        }
    }
    return h;
}

size_t header_qubits(const Header &h) {
    uint64_t n = require_u64(h.fields.find("n")->second, 1, "qubit count");
    if (n == 0) {
        throw ParseError(1, "qubit count must be positive");
    }
    return n;
}

/// Index of the first body line, skipping an optional "# config" line after the header.
size_t body_start(const std::vector<std::string_view> &lines) {
    return lines.size() > 1 && lines[1].starts_with("# config") ? 2 : 1;
}

std::string bits_text(std::span<const uint8_t> bits) {
    std::string s;
    for (uint8_t b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

}  // namespace

std::string serialize_shadow(const ShadowDataset &ds) {
    std::string out;
    const auto &h = ds.header;
    out += "# shadow v1 kind=" + std::string(primitive_name(h.kind)) + " n=" + std::to_string(h.num_qubits) +
           " seed=" + std::to_string(h.seed) + " state=" + h.state + "\n";
    if (!h.config.empty()) {
        out += "# config " + h.config + "\n";
    }
    if (h.kind == Primitive::pauli) {
        for (const auto &s : ds.pauli) {
            if (s.group >= 0) {
                out += "g=" + std::to_string(s.group) + " ";
            }
            for (size_t q = 0; q < s.bases.size(); q++) {
                if (q > 0) {
                    out.push_back(' ');
                }
                out.push_back(pauli_char(s.bases[q]));
                out.push_back(s.bits[q] ? '1' : '0');
            }
            out.push_back('\n');
        }
    } else {
        for (const auto &s : ds.clifford) {
            out += "b " + bits_text(s.bits) + "\n";
            out += s.unitary.to_text();
        }
    }
    return out;
}

ShadowDataset parse_shadow(std::string_view text) {
    auto lines = split_lines(text);
    Header h = parse_header(lines[0], "shadow", {"kind", "n", "seed"}, {}, true);
    ShadowDataset ds;
    try {
        ds.header.kind = parse_primitive(h.fields["kind"]);
    } catch (const std::invalid_argument &e) {
        throw ParseError(1, e.what());
    }
    size_t n = header_qubits(h);
    ds.header.num_qubits = n;
    ds.header.seed = require_u64(h.fields["seed"], 1, "seed");
    ds.header.state = *h.state;
    size_t i = 1;
    if (i < lines.size() && lines[i].starts_with("# config")) {
        std::string_view c = lines[i].substr(8);
        if (!c.empty() && c.front() == ' ') {
            c.remove_prefix(1);
        }
        ds.header.config = std::string(c);
        i++;
    }
    if (ds.header.kind == Primitive::pauli) {
        for (; i < lines.size(); i++) {
            size_t line_no = i + 1;
            auto tok = tokens_of(lines[i]);
            PauliSnapshot s;
            size_t first = 0;
            if (!tok.empty() && tok[0].starts_with("g=")) {
                uint64_t g = require_u64(tok[0].substr(2), line_no, "group index");
                s.group = static_cast<int64_t>(g);
                first = 1;
            }
            if (tok.size() - first != n) {
                throw ParseError(
                    line_no,
                    "expected " + std::to_string(n) + " measurement tokens, got " + std::to_string(tok.size() - first));
            }
            for (size_t q = 0; q < n; q++) {
                std::string_view t = tok[first + q];
                if (t.size() != 2 || (t[1] != '0' && t[1] != '1')) {
                    throw ParseError(line_no, "malformed measurement token '" + std::string(t) + "'");
                }
                s.bases.push_back(require_basis_letter(t[0], line_no));
                s.bits.push_back(static_cast<uint8_t>(t[1] - '0'));
            }
            ds.pauli.push_back(std::move(s));
        }
        if (!ds.pauli.empty()) {
            bool any = ds.pauli.front().group >= 0;
            for (size_t k = 0; k < ds.pauli.size(); k++) {
                if ((ds.pauli[k].group >= 0) != any) {
                    throw ParseError(0, "group tags must be present on every snapshot or on none");
                }
            }
        }
    } else {
        while (i < lines.size()) {
            size_t line_no = i + 1;
            auto tok = tokens_of(lines[i]);
            if (tok.size() != 2 || tok[0] != "b") {
                throw ParseError(line_no, "expected 'b <bits>' snapshot line");
            }
            if (tok[1].size() != n) {
                throw ParseError(line_no, "outcome has " + std::to_string(tok[1].size()) + " bits, expected " + std::to_string(n));
            }
            CliffordSnapshot s;
            for (char c : tok[1]) {
                if (c != '0' && c != '1') {
                    throw ParseError(line_no, "malformed outcome bit '" + std::string(1, c) + "'");
                }
                s.bits.push_back(static_cast<uint8_t>(c - '0'));
            }
            if (i + 1 + 2 * n > lines.size()) {
                throw ParseError(line_no, "snapshot is missing tableau lines");
            }
            std::vector<std::string> rows(lines.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                          lines.begin() + static_cast<std::ptrdiff_t>(i + 1 + 2 * n));
            try {
                s.unitary = CliffordTableau::from_text_lines(rows);
            } catch (const std::invalid_argument &e) {
                throw ParseError(line_no + 1, std::string("bad tableau: ") + e.what());
            }
            if (s.unitary.num_qubits() != n) {
                throw ParseError(line_no + 1, "tableau size does not match n");
            }
            ds.clifford.push_back(std::move(s));
            i += 1 + 2 * n;
        }
    }
    return ds;
}

std::string serialize_observables(const ObservableList &obs) {
    std::string out = "# observables v1 n=" + std::to_string(obs.num_qubits) + "\n";
    for (const auto &t : obs.terms) {
        auto sup = t.string.support_indices();
        out += format_double(t.weight) + " " + std::to_string(sup.size());
        for (size_t q : sup) {
            out += " ";
            out.push_back(pauli_char(t.string[q]));
            out += " " + std::to_string(q);
        }
        out.push_back('\n');
    }
    return out;
}

ObservableList parse_observables(std::string_view text) {
    auto lines = split_lines(text);
    Header h = parse_header(lines[0], "observables", {"n"});
    ObservableList obs;
    obs.num_qubits = header_qubits(h);
    for (size_t i = body_start(lines); i < lines.size(); i++) {
        size_t line_no = i + 1;
        auto tok = tokens_of(lines[i]);
        if (tok.size() < 2) {
            throw ParseError(line_no, "expected '<weight> <k> ...'");
        }
        double w = require_double(tok[0], line_no, "weight");
        uint64_t k = require_u64(tok[1], line_no, "locality");
        if (tok.size() != 2 + 2 * k) {
            throw ParseError(
                line_no, "term declares " + std::to_string(k) + " factors but has " + std::to_string(tok.size()) + " tokens");
        }
        PauliString p(obs.num_qubits);
        for (size_t f = 0; f < k; f++) {
            std::string_view letter = tok[2 + 2 * f];
            if (letter.size() != 1) {
                throw ParseError(line_no, "malformed Pauli letter '" + std::string(letter) + "'");
            }
            Pauli l = require_basis_letter(letter[0], line_no);
            uint64_t q = require_u64(tok[3 + 2 * f], line_no, "qubit index");
            if (q >= obs.num_qubits) {
                throw ParseError(line_no, "qubit " + std::to_string(q) + " out of range for n=" + std::to_string(obs.num_qubits));
            }
            if (p[q] != Pauli::I) {
                throw ParseError(line_no, "qubit " + std::to_string(q) + " appears twice");
            }
            p.set(q, l);
        }
        obs.terms.push_back({w, std::move(p)});
    }
    return obs;
}

std::string serialize_scheme(const MeasurementScheme &scheme) {
    std::string out = "# scheme v1 n=" + std::to_string(scheme.num_qubits);
    if (scheme.repetitions != 1) {
        out += " reps=" + std::to_string(scheme.repetitions);
    }
    out.push_back('\n');
    for (const auto &row : scheme.rows) {
        for (size_t q = 0; q < row.size(); q++) {
            if (q > 0) {
                out.push_back(' ');
            }
            out.push_back(pauli_char(row[q]));
        }
        out.push_back('\n');
    }
    return out;
}

MeasurementScheme parse_scheme(std::string_view text) {
    auto lines = split_lines(text);
    Header h = parse_header(lines[0], "scheme", {"n"}, {"reps"});
    MeasurementScheme scheme;
    scheme.num_qubits = header_qubits(h);
    if (auto it = h.fields.find("reps"); it != h.fields.end()) {
        scheme.repetitions = require_u64(it->second, 1, "repetition count");
        if (scheme.repetitions == 0) {
            throw ParseError(1, "repetition count must be at least 1");
        }
    }
    for (size_t i = body_start(lines); i < lines.size(); i++) {
        auto tok = tokens_of(lines[i]);
        if (tok.size() != scheme.num_qubits) {
            throw ParseError(
                i + 1, "row has " + std::to_string(tok.size()) + " letters, expected " + std::to_string(scheme.num_qubits));
        }
        std::vector<Pauli> row;
        for (auto t : tok) {
            if (t.size() != 1) {
                throw ParseError(i + 1, "malformed basis letter '" + std::string(t) + "'");
            }
            row.push_back(require_basis_letter(t[0], i + 1));
        }
        scheme.rows.push_back(std::move(row));
    }
    if (scheme.rows.empty()) {
        throw ParseError(0, "scheme has no rows");
    }
    return scheme;
}

std::string serialize_subsystems(const SubsystemList &list) {
    std::string out = "# subsystems v1 n=" + std::to_string(list.num_qubits) + "\n";
    for (const auto &a : list.subsystems) {
        for (size_t j = 0; j < a.size(); j++) {
            if (j > 0) {
                out.push_back(' ');
            }
            out += std::to_string(a[j]);
        }
        out.push_back('\n');
    }
    return out;
}

SubsystemList parse_subsystems(std::string_view text) {
    auto lines = split_lines(text);
    Header h = parse_header(lines[0], "subsystems", {"n"});
    SubsystemList list;
    list.num_qubits = header_qubits(h);
    for (size_t i = body_start(lines); i < lines.size(); i++) {
        std::vector<size_t> a;
        for (auto t : tokens_of(lines[i])) {
            uint64_t q = require_u64(t, i + 1, "qubit index");
            if (q >= list.num_qubits) {
                throw ParseError(i + 1, "qubit " + std::to_string(q) + " out of range for n=" + std::to_string(list.num_qubits));
            }
            for (size_t prev : a) {
                if (prev == q) {
                    throw ParseError(i + 1, "qubit " + std::to_string(q) + " listed twice");
                }
            }
            a.push_back(q);
        }
        list.subsystems.push_back(std::move(a));
    }
    return list;
}

std::string serialize_dense_state(const CVector &amplitudes) {
    auto dim = static_cast<uint64_t>(amplitudes.size());
    size_t n = 0;
    while ((uint64_t{1} << n) < dim) {
        n++;
    }
    std::string out = "# state v1 n=" + std::to_string(n) + "\n";
    for (Eigen::Index k = 0; k < amplitudes.size(); k++) {
        out += format_double(amplitudes(k).real()) + " " + format_double(amplitudes(k).imag()) + "\n";
    }
    return out;
}

CVector parse_dense_state(std::string_view text) {
    auto lines = split_lines(text);
    Header h = parse_header(lines[0], "state", {"n"});
    size_t n = header_qubits(h);
    if (n > 30) {
        throw ParseError(1, "dense state with " + std::to_string(n) + " qubits is too large");
    }
    size_t dim = size_t{1} << n;
    if (lines.size() - 1 != dim) {
        throw ParseError(
            lines.size() < dim + 1 ? lines.size() : dim + 2,
            "expected " + std::to_string(dim) + " amplitude lines, found " + std::to_string(lines.size() - 1));
    }
    CVector v(static_cast<Eigen::Index>(dim));
    for (size_t k = 0; k < dim; k++) {
        auto tok = tokens_of(lines[k + 1]);
        if (tok.size() != 2) {
            throw ParseError(k + 2, "expected '<re> <im>'");
        }
        v(static_cast<Eigen::Index>(k)) =
            std::complex<double>(require_double(tok[0], k + 2, "real part"), require_double(tok[1], k + 2, "imaginary part"));
    }
    return v;
}

namespace {

size_t descriptor_count(std::string_view s, std::string_view descriptor) {
    auto v = parse_number<uint64_t>(s);
    if (!v || s.empty() || s[0] == '+') {
        throw std::invalid_argument("malformed state descriptor '" + std::string(descriptor) + "'");
    }
    return *v;
}

}  // namespace

StateOracle parse_state_descriptor(std::string_view descriptor, size_t dense_cap) {
    size_t colon = descriptor.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("malformed state descriptor '" + std::string(descriptor) + "'");
    }
    std::string_view kind = descriptor.substr(0, colon);
    std::string_view arg = descriptor.substr(colon + 1);
    if (kind == "ghz") {
        size_t n = descriptor_count(arg, descriptor);
        return StateOracle::stabilizer(ghz_state(n));
    }
    if (kind == "ghz-noisy") {
        size_t c = arg.find(':');
        if (c == std::string_view::npos) {
            throw std::invalid_argument("expected ghz-noisy:<n>:<p>, got '" + std::string(descriptor) + "'");
        }
        size_t n = descriptor_count(arg.substr(0, c), descriptor);
        auto p = parse_number<double>(arg.substr(c + 1));
        if (!p) {
            throw std::invalid_argument("malformed noise probability in '" + std::string(descriptor) + "'");
        }
        return noisy_ghz(n, *p);
    }
    if (kind == "toric") {
        size_t x = arg.find('x');
        if (x == std::string_view::npos) {
            throw std::invalid_argument("expected toric:<Lx>x<Ly>, got '" + std::string(descriptor) + "'");
        }
        return StateOracle::stabilizer(
            toric_code_state(descriptor_count(arg.substr(0, x), descriptor), descriptor_count(arg.substr(x + 1), descriptor)));
    }
    if (kind == "singlets") {
        return singlet_chain(descriptor_count(arg, descriptor));
    }
    if (kind == "zero") {
        size_t n = descriptor_count(arg, descriptor);
        if (n == 0) {
            throw std::invalid_argument("zero:<n> needs n >= 1");
        }
        return StateOracle::stabilizer(StabilizerState(n));
    }
    if (kind == "dense") {
        std::string text = read_file(std::filesystem::path(std::string(arg)));
        return StateOracle::dense(parse_dense_state(text), dense_cap);
    }
    throw std::invalid_argument("unknown state kind '" + std::string(kind) + "' in descriptor '" + std::string(descriptor) + "'");
}

namespace {

LinearTarget pure_target(const StateOracle &s, std::string_view descriptor) {
    switch (s.kind()) {
        case OracleKind::stabilizer:
        case OracleKind::singlet_chain:
            return s.stabilizer_state();
        case OracleKind::dense: {
            std::vector<size_t> all(s.num_qubits());
            for (size_t q = 0; q < all.size(); q++) {
                all[q] = q;
            }
            return DenseObservable{all, s.amplitudes() * s.amplitudes().adjoint()};
        }
        case OracleKind::mixture:
            // A mixture that puts all weight on one component is that component.
            for (size_t i = 0; i < s.weights().size(); i++) {
                if (std::abs(s.weights()[i] - 1.0) < 1e-12) {
                    return pure_target(s.components()[i], descriptor);
                }
            }
            break;
    }
    throw std::invalid_argument("target state '" + std::string(descriptor) + "' is not pure");
}

}  // namespace

LinearTarget target_from_descriptor(std::string_view descriptor, size_t dense_cap) {
    return pure_target(parse_state_descriptor(descriptor, dense_cap), descriptor);
}

std::string linear_report_text(const EstimationReport &report) {
    const auto &h = report.header;
    std::string out = "# report v1 kind=linear dataset=" + std::string(primitive_name(h.kind)) +
                      " n=" + std::to_string(h.num_qubits) + " seed=" + std::to_string(h.seed) + " state=" + h.state + "\n";
    if (!h.config.empty()) {
        out += "# config " + h.config + "\n";
    }
    for (const auto &r : report.rows) {
        out += "target=" + r.id + " kind=" + r.kind + " estimate=" + format_double(r.estimate) +
               " K=" + std::to_string(r.k) + " N=" + std::to_string(r.n_per_batch) +
               " shots_used=" + std::to_string(r.shots_used) + "\n";
    }
    return out;
}

std::string linear_report_csv(const EstimationReport &report) {
    std::string out = "target_id,kind,estimate,K,N,shots_used\n";
    for (const auto &r : report.rows) {
        out += r.id + "," + r.kind + "," + format_double(r.estimate) + "," + std::to_string(r.k) + "," +
               std::to_string(r.n_per_batch) + "," + std::to_string(r.shots_used) + "\n";
    }
    return out;
}

namespace {

std::string subsystem_text(const std::vector<size_t> &a) {
    std::string s;
    for (size_t j = 0; j < a.size(); j++) {
        if (j > 0) {
            s.push_back(' ');
        }
        s += std::to_string(a[j]);
    }
    return s;
}

}  // namespace

std::string entropy_report_text(const DatasetHeader &h, std::span<const EntropyRow> rows) {
    std::string out = "# report v1 kind=entropy dataset=" + std::string(primitive_name(h.kind)) +
                      " n=" + std::to_string(h.num_qubits) + " seed=" + std::to_string(h.seed) + " state=" + h.state + "\n";
    if (!h.config.empty()) {
        out += "# config " + h.config + "\n";
    }
    for (const auto &r : rows) {
        std::string a = subsystem_text(r.subsystem);
        std::replace(a.begin(), a.end(), ' ', ',');
        out += "subsystem=" + a + " purity=" + format_double(r.purity) + " entropy_bits=" + format_double(r.entropy_bits) +
               " K=" + std::to_string(r.k) + " N=" + std::to_string(r.n) + "\n";
    }
    return out;
}

std::string entropy_report_csv(std::span<const EntropyRow> rows) {
    std::string out = "subsystem,purity,entropy_bits,K,N\n";
    for (const auto &r : rows) {
        out += subsystem_text(r.subsystem) + "," + format_double(r.purity) + "," + format_double(r.entropy_bits) + "," +
               std::to_string(r.k) + "," + std::to_string(r.n) + "\n";
    }
    return out;
}

std::string plan_report_text(const SamplePlan &plan) {
    std::string out;
    out += "K=" + std::to_string(plan.k) + "\n";
    out += "N_per_batch=" + std::to_string(plan.n_per_batch) + "\n";
    out += "N_total=" + std::to_string(plan.n_total) + "\n";
    out += "max_bound=" + format_double(plan.max_bound) + "\n";
    out += "bound_kind=" + std::string(bound_kind_name(plan.bound_kind)) + "\n";
    out += "epsilon=" + format_double(plan.epsilon) + "\n";
    out += "delta=" + format_double(plan.delta) + "\n";
    out += "M=" + std::to_string(plan.m) + "\n";
    return out;
}

std::string with_config_line(std::string_view text, std::string_view config) {
    size_t eol = text.find('\n');
    if (config.empty() || eol == std::string_view::npos) {
        return std::string(text);
    }
    return std::string(text.substr(0, eol + 1)) + "# config " + std::string(config) + "\n" +
           std::string(text.substr(eol + 1));
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path &path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            throw IoError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot rename '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
    }
}

}  // namespace shadowkit
