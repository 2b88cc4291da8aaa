#include "afhos/link_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace afhos::io {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& v, int line) {
    double out;
    const char* begin = v.data();
    const char* end = begin + v.size();
    const auto [p, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || p != end)
        throw ParseError("line " + std::to_string(line) + ": invalid number '" + v + "'");
    return out;
}

std::uint64_t parse_u64(const std::string& v, int line) {
    std::uint64_t out;
    const char* begin = v.data();
    const char* end = begin + v.size();
    const auto [p, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || p != end)
        throw ParseError("line " + std::to_string(line) + ": invalid integer '" + v + "'");
    return out;
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ParseError("line " + std::to_string(line) + ": expected true/false, got '" + v + "'");
}

// One section's key/value pairs with duplicate detection.
struct Section {
    std::string name;
    int line = 0;
    std::map<std::string, std::pair<std::string, int>> kv;

    void insert(const std::string& key, const std::string& value, int at) {
        if (!kv.emplace(key, std::make_pair(value, at)).second)
            throw ParseError("line " + std::to_string(at) + ": duplicate key '" + key +
                             "' in [" + name + "]");
    }
    bool has(const std::string& key) const { return kv.count(key) != 0; }
    const std::pair<std::string, int>& at(const std::string& key) const { return kv.at(key); }

    void expect_keys(std::initializer_list<const char*> allowed) const {
        for (const auto& [k, v] : kv) {
            bool ok = false;
            for (const char* a : allowed)
                if (k == a) ok = true;
            if (!ok)
                throw ParseError("line " + std::to_string(v.second) + ": unknown key '" + k +
                                 "' in [" + name + "]");
        }
    }
    double number(const std::string& key) const {
        return parse_number(at(key).first, at(key).second);
    }
    std::uint64_t integer(const std::string& key) const {
        return parse_u64(at(key).first, at(key).second);
    }
    void require(const std::string& key) const {
        if (!has(key))
            throw ParseError("line " + std::to_string(line) + ": [" + name +
                             "] is missing required key '" + key + "'");
    }
};

HopSpec parse_hop(const Section& sec) {
    sec.require("model");
    const std::string model = sec.at("model").first;
    HopSpec hop;
    if (model == "gamma") {
        hop.kind = HopKind::gamma;
        sec.expect_keys({"model", "m", "gamma_bar_db"});
    } else if (model == "generalized_gamma") {
        hop.kind = HopKind::generalized_gamma;
        sec.expect_keys({"model", "m", "xi", "gamma_bar_db"});
        sec.require("xi");
        hop.xi = sec.number("xi");
    } else {
        throw ParseError("line " + std::to_string(sec.at("model").second) +
                         ": unknown model '" + model + "'");
    }
    sec.require("m");
    sec.require("gamma_bar_db");
    hop.m = sec.number("m");
    hop.gamma_bar_db = sec.number("gamma_bar_db");
    return hop;
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

LinkConfig LinkFileContent::to_link_config() const {
    LinkConfig link;
    for (const auto& h : hops) {
        const double gbar = db_to_linear(h.gamma_bar_db);
        if (h.kind == HopKind::gamma)
            link.hops.push_back(make_gamma_hop(h.m, gbar));
        else
            link.hops.push_back(make_generalized_gamma_hop(h.m, h.xi, gbar));
    }
    link.validate();
    return link;
}

LinkFileContent parse_link_file(std::istream& in) {
    std::vector<Section> sections;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ParseError("line " + std::to_string(line) + ": malformed section header");
            Section sec;
            sec.name = trim(s.substr(1, s.size() - 2));
            sec.line = line;
            if (sec.name != "hop" && sec.name != "quadrature" && sec.name != "gl" &&
                sec.name != "mc")
                throw ParseError("line " + std::to_string(line) + ": unknown section [" +
                                 sec.name + "]");
            sections.push_back(std::move(sec));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line) + ": expected 'key = value'");
        if (sections.empty())
            throw ParseError("line " + std::to_string(line) + ": key outside any section");
        sections.back().insert(trim(s.substr(0, eq)), trim(s.substr(eq + 1)), line);
    }

    LinkFileContent out;
    bool saw_quad = false, saw_gl = false, saw_mc = false;
    for (const auto& sec : sections) {
        if (sec.name == "hop") {
            out.hops.push_back(parse_hop(sec));
        } else if (sec.name == "quadrature") {
            if (saw_quad)
                throw ParseError("line " + std::to_string(sec.line) + ": repeated [quadrature]");
            saw_quad = true;
            sec.expect_keys({"rel_tol", "abs_tol", "max_refinements"});
            if (sec.has("rel_tol")) out.quad.rel_tol = sec.number("rel_tol");
            if (sec.has("abs_tol")) out.quad.abs_tol = sec.number("abs_tol");
            if (sec.has("max_refinements"))
                out.quad.max_refinements = int(sec.integer("max_refinements"));
            out.quad.validate();
        } else if (sec.name == "gl") {
            if (saw_gl) throw ParseError("line " + std::to_string(sec.line) + ": repeated [gl]");
            saw_gl = true;
            sec.expect_keys({"delta", "richardson"});
            if (sec.has("delta")) out.gl.delta = sec.number("delta");
            if (sec.has("richardson"))
                out.gl.richardson = parse_bool(sec.at("richardson").first,
                                               sec.at("richardson").second);
            out.gl.validate();
        } else {  // mc
            if (saw_mc) throw ParseError("line " + std::to_string(sec.line) + ": repeated [mc]");
            saw_mc = true;
            sec.expect_keys({"samples", "seed", "streams"});
            if (sec.has("samples")) out.mc.num_samples = sec.integer("samples");
            if (sec.has("seed")) out.mc.seed = sec.integer("seed");
            if (sec.has("streams")) out.mc.num_streams = int(sec.integer("streams"));
            out.mc.validate();
        }
    }
    if (out.hops.empty()) throw ParseError("link file defines no [hop] sections");
    return out;
}

LinkFileContent parse_link_file_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open link file '" + path + "'");
    return parse_link_file(in);
}

std::string format_double(double v) {
    char buf[40];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

std::string dump_link_file(const LinkFileContent& content) {
    std::ostringstream os;
    os << "# afhos link configuration\n";
    for (const auto& h : content.hops) {
        os << "\n[hop]\n";
        if (h.kind == HopKind::gamma) {
            os << "model = gamma\n";
            os << "m = " << format_double(h.m) << "\n";
        } else {
            os << "model = generalized_gamma\n";
            os << "m = " << format_double(h.m) << "\n";
            os << "xi = " << format_double(h.xi) << "\n";
        }
        os << "gamma_bar_db = " << format_double(h.gamma_bar_db) << "\n";
    }
    os << "\n[quadrature]\n";
    os << "rel_tol = " << format_double(content.quad.rel_tol) << "\n";
    os << "abs_tol = " << format_double(content.quad.abs_tol) << "\n";
    os << "max_refinements = " << content.quad.max_refinements << "\n";
    os << "\n[gl]\n";
    os << "delta = " << format_double(content.gl.delta) << "\n";
    os << "richardson = " << (content.gl.richardson ? "true" : "false") << "\n";
    os << "\n[mc]\n";
    os << "samples = " << content.mc.num_samples << "\n";
    os << "seed = " << content.mc.seed << "\n";
    os << "streams = " << content.mc.num_streams << "\n";
    return os.str();
}

}  // namespace afhos::io
