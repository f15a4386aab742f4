#include <charconv>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "zne/circuit.hpp"
#include "zne/errors.hpp"

namespace zne {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

Gate parse_gate(const std::string& text, int n_qubits, int line_no) {
    std::istringstream iss(text);
    std::string name;
    iss >> name;
    if (name.empty()) throw ParseError("empty gate", line_no);
    auto kind = gate_from_name(name);
    if (!kind) throw ParseError("unknown gate '" + name + "'", line_no);

    Gate g;
    g.kind = *kind;
    const int arity = gate_arity(*kind);
    for (int i = 0; i < arity; ++i) {
        long long q = 0;
        if (!(iss >> q)) throw ParseError("expected qubit index for gate " + name, line_no);
        if (q < 0 || q >= n_qubits) throw ParseError("qubit index out of range", line_no);
        g.targets.push_back(static_cast<int>(q));
    }
    if (gate_is_parametric(*kind)) {
        double angle = 0.0;
        if (!(iss >> angle)) throw ParseError("expected angle for gate " + name, line_no);
        g.params.push_back(angle);
    }
    std::string rest;
    if (iss >> rest) throw ParseError("trailing token '" + rest + "' after gate " + name, line_no);
    return g;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    Circuit c;
    bool saw_header = false;

    while (std::getline(in, raw)) {
        ++line_no;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string line = strip(raw);
        if (line.empty()) continue;

        if (!saw_header) {
            std::istringstream iss(line);
            std::string kw;
            long long n = 0;
            if (!(iss >> kw >> n) || kw != "qubits" || n <= 0)
                throw ParseError("expected header 'qubits <n>'", line_no);
            std::string rest;
            if (iss >> rest) throw ParseError("trailing token after qubit count", line_no);
            c.n_qubits = static_cast<int>(n);
            saw_header = true;
            continue;
        }

        Layer layer;
        for (const std::string& part : split(line, ';')) {
            std::string g = strip(part);
            if (g.empty()) throw ParseError("empty gate between ';'", line_no);
            layer.gates.push_back(parse_gate(g, c.n_qubits, line_no));
        }
        c.layers.push_back(std::move(layer));
    }
    if (!saw_header) throw ParseError("missing 'qubits <n>' header", 1);
    c.validate();
    return c;
}

std::string serialize_circuit(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.n_qubits) + "\n";
    char buf[64];
    for (const Layer& layer : c.layers) {
        bool first = true;
        for (const Gate& g : layer.gates) {
            if (!first) out += "; ";
            first = false;
            out += gate_name(g.kind);
            for (int t : g.targets) {
                out += ' ';
                out += std::to_string(t);
            }
            for (double p : g.params) {
                std::snprintf(buf, sizeof buf, " %.17g", p);
                out += buf;
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace zne
