#include "flatstrata/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace flatstrata {

const char* version_string() { return "flatstrata 1.0.0"; }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write file: " + path);
    out << text;
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int num = 0;
    while (std::getline(in, raw)) {
        ++num;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line l{num, {}};
        std::string tok;
        while (ls >> tok) l.tokens.push_back(tok);
        if (!l.tokens.empty()) lines.push_back(std::move(l));
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw io_error("line " + std::to_string(line) + ": " + msg);
}

struct RawComponent {
    // (line, labels) for triangles; label -> (line, x, y) for holonomies.
    std::vector<std::pair<int, std::array<std::string, 3>>> tris;
    std::vector<std::tuple<int, std::string, std::string, std::string>> edges;
    std::vector<std::pair<int, std::string>> marked;  // directed labels
};

struct RawFile {
    NumericMode mode = NumericMode::exact;
    std::vector<RawComponent> components;
};

RawFile parse_raw(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw io_error("empty surface file");
    size_t i = 0;
    if (lines[i].tokens.size() != 2 || lines[i].tokens[0] != "flatstrata" ||
        lines[i].tokens[1] != "v1")
        fail(lines[i].number, "expected header 'flatstrata v1'");
    ++i;
    RawFile f;
    f.components.emplace_back();
    bool mode_seen = false;
    for (; i < lines.size(); ++i) {
        const auto& l = lines[i];
        const auto& t = l.tokens;
        if (t[0] == "---") {
            f.components.emplace_back();
        } else if (t[0] == "flatstrata") {
            continue;  // repeated header after a separator is tolerated
        } else if (t[0] == "mode") {
            if (t.size() != 2) fail(l.number, "mode line needs one argument");
            if (t[1] == "exact")
                f.mode = NumericMode::exact;
            else if (t[1] == "float")
                f.mode = NumericMode::floating;
            else
                fail(l.number, "unknown mode '" + t[1] + "'");
            mode_seen = true;
            (void)mode_seen;
        } else if (t[0] == "tri") {
            if (t.size() != 4) fail(l.number, "tri line needs three edge labels");
            f.components.back().tris.push_back({l.number, {t[1], t[2], t[3]}});
        } else if (t[0] == "edge") {
            if (t.size() != 4) fail(l.number, "edge line needs: edge <label> <x> <y>");
            f.components.back().edges.push_back({l.number, t[1], t[2], t[3]});
        } else if (t[0] == "marked:") {
            for (size_t k = 1; k < t.size(); ++k)
                f.components.back().marked.push_back({l.number, t[k]});
        } else {
            fail(l.number, "unknown directive '" + t[0] + "'");
        }
    }
    return f;
}

template <class K>
Surface<K> build_component(const RawComponent& rc) {
    if (rc.tris.empty()) throw io_error("component has no triangles");
    std::map<std::string, int> label_to_edge;
    std::vector<std::string> edge_labels;
    std::vector<int> pos_line, neg_line;
    auto directed_of = [&](const std::string& tok, int line) {
        bool negative = !tok.empty() && tok[0] == '-';
        std::string name = negative ? tok.substr(1) : tok;
        if (name.empty()) fail(line, "empty edge label");
        auto it = label_to_edge.find(name);
        int u;
        if (it == label_to_edge.end()) {
            u = static_cast<int>(edge_labels.size());
            label_to_edge.emplace(name, u);
            edge_labels.push_back(name);
            pos_line.push_back(0);
            neg_line.push_back(0);
        } else {
            u = it->second;
        }
        return 2 * u + (negative ? 1 : 0);
    };

    std::vector<std::array<int, 3>> tris;
    for (const auto& [line, labels] : rc.tris) {
        std::array<int, 3> tr;
        for (int k = 0; k < 3; ++k) {
            int e = directed_of(labels[k], line);
            auto& used = (e & 1) ? neg_line : pos_line;
            if (used[e >> 1]) fail(line, "edge label '" + labels[k] + "' already used");
            used[e >> 1] = line;
            tr[k] = e;
        }
        tris.push_back(tr);
    }
    for (size_t u = 0; u < edge_labels.size(); ++u) {
        if (!pos_line[u]) throw io_error("edge '" + edge_labels[u] + "' never used positively");
        if (!neg_line[u]) throw io_error("edge '" + edge_labels[u] + "' never used negatively");
    }

    std::vector<Vec2<K>> vec(edge_labels.size());
    std::vector<char> have(edge_labels.size(), 0);
    for (const auto& [line, name, xs, ys] : rc.edges) {
        auto it = label_to_edge.find(name);
        if (it == label_to_edge.end()) fail(line, "holonomy for unknown edge '" + name + "'");
        if (have[it->second]) fail(line, "duplicate holonomy for edge '" + name + "'");
        have[it->second] = 1;
        try {
            vec[it->second] = {num_traits<K>::from_string(xs), num_traits<K>::from_string(ys)};
        } catch (const std::exception& e) {
            fail(line, e.what());
        }
    }
    for (size_t u = 0; u < edge_labels.size(); ++u)
        if (!have[u]) throw io_error("missing holonomy for edge '" + edge_labels[u] + "'");

    Surface<K> plain(tris, vec);
    if (rc.marked.empty()) return plain;
    std::vector<char> flags(plain.num_vertices(), 0);
    for (const auto& [line, tok] : rc.marked) {
        bool negative = !tok.empty() && tok[0] == '-';
        std::string name = negative ? tok.substr(1) : tok;
        auto it = label_to_edge.find(name);
        if (it == label_to_edge.end()) fail(line, "marked: unknown edge '" + name + "'");
        flags[plain.start_vertex(2 * it->second + (negative ? 1 : 0))] = 1;
    }
    return Surface<K>(tris, vec, flags);
}

}  // namespace

NumericMode detect_mode_text(const std::string& text) {
    return parse_raw(text).mode;
}

NumericMode detect_mode(const std::string& path) {
    return detect_mode_text(read_text_file(path));
}

template <class K>
Surface<K> parse_surface(const std::string& text) {
    auto raw = parse_raw(text);
    if (raw.components.size() != 1)
        throw io_error("expected a single component, found " +
                       std::to_string(raw.components.size()));
    return build_component<K>(raw.components[0]);
}

template <class K>
MultiSurface<K> parse_multisurface(const std::string& text) {
    auto raw = parse_raw(text);
    std::vector<Surface<K>> comps;
    comps.reserve(raw.components.size());
    for (const auto& rc : raw.components) comps.push_back(build_component<K>(rc));
    return MultiSurface<K>(std::move(comps));
}

template <class K>
Surface<K> load_surface(const std::string& path) {
    return parse_surface<K>(read_text_file(path));
}

template <class K>
MultiSurface<K> load_multisurface(const std::string& path) {
    return parse_multisurface<K>(read_text_file(path));
}

namespace {

template <class K>
void format_component(std::ostringstream& os, const Surface<K>& s) {
    // Labels follow first appearance in the triangle list, which is exactly
    // the order the parser assigns, so save -> load -> save is a fixed point.
    std::vector<int> new_of(s.num_undirected_edges(), -1);
    std::vector<int> old_of;
    auto label_of = [&](int e) {
        int u = e >> 1;
        if (new_of[u] < 0) {
            new_of[u] = static_cast<int>(old_of.size());
            old_of.push_back(u);
        }
        return std::string((e & 1) ? "-e" : "e") + std::to_string(new_of[u]);
    };
    std::ostringstream tris;
    for (int t = 0; t < s.num_triangles(); ++t) {
        tris << "tri";
        for (int k = 0; k < 3; ++k) tris << ' ' << label_of(s.triangle(t)[k]);
        tris << '\n';
    }
    os << tris.str();
    for (size_t n = 0; n < old_of.size(); ++n)
        os << "edge e" << n << ' ' << to_string_exact(s.stored_vec(old_of[n]).x) << ' '
           << to_string_exact(s.stored_vec(old_of[n]).y) << '\n';
    bool any = false;
    for (int v = 0; v < s.num_vertices(); ++v) any = any || s.is_marked(v);
    if (any) {
        os << "marked:";
        for (int v = 0; v < s.num_vertices(); ++v) {
            if (!s.is_marked(v)) continue;
            int e = s.vertex_stars()[v].front();
            os << ' ' << label_of(e);
        }
        os << '\n';
    }
}

}  // namespace

template <class K>
std::string format_surface(const Surface<K>& s) {
    std::ostringstream os;
    os << "flatstrata v1\n";
    os << "mode " << num_traits<K>::mode_name() << '\n';
    format_component(os, s);
    return os.str();
}

template <class K>
std::string format_multisurface(const MultiSurface<K>& m) {
    std::ostringstream os;
    os << "flatstrata v1\n";
    os << "mode " << num_traits<K>::mode_name() << '\n';
    for (int i = 0; i < m.num_components(); ++i) {
        if (i) os << "---\n";
        format_component(os, m.component(i));
    }
    return os.str();
}

template <class K>
void save_surface(const std::string& path, const Surface<K>& s) {
    write_text_file(path, format_surface(s));
}

template <class K>
void save_multisurface(const std::string& path, const MultiSurface<K>& m) {
    write_text_file(path, format_multisurface(m));
}

template Surface<Rational> parse_surface<Rational>(const std::string&);
template Surface<double> parse_surface<double>(const std::string&);
template MultiSurface<Rational> parse_multisurface<Rational>(const std::string&);
template MultiSurface<double> parse_multisurface<double>(const std::string&);
template Surface<Rational> load_surface<Rational>(const std::string&);
template Surface<double> load_surface<double>(const std::string&);
template MultiSurface<Rational> load_multisurface<Rational>(const std::string&);
template MultiSurface<double> load_multisurface<double>(const std::string&);
template std::string format_surface<Rational>(const Surface<Rational>&);
template std::string format_surface<double>(const Surface<double>&);
template std::string format_multisurface<Rational>(const MultiSurface<Rational>&);
template std::string format_multisurface<double>(const MultiSurface<double>&);
template void save_surface<Rational>(const std::string&, const Surface<Rational>&);
template void save_surface<double>(const std::string&, const Surface<double>&);
template void save_multisurface<Rational>(const std::string&, const MultiSurface<Rational>&);
template void save_multisurface<double>(const std::string&, const MultiSurface<double>&);

}  // namespace flatstrata
