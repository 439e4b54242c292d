#include "gtam/io.hpp"

#include <functional>
#include <sstream>

#include "gtam/errors.hpp"

namespace gtam::io {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

int to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError("not an integer: " + s);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("not an integer: " + s);
    }
}

/// The text after `key` if line starts with it.
std::optional<std::string> field(const std::string& line, const std::string& key) {
    if (line.compare(0, key.size(), key) != 0) return std::nullopt;
    return line.substr(key.size());
}

EColor parse_color(char c) {
    switch (c) {
        case 'b': return EColor::Blue;
        case 'r': return EColor::Red;
        case 'g': return EColor::Green;
        case '-': return EColor::None;
    }
    throw ParseError(std::string("unknown edge color '") + c + "'");
}

const char* dot_color(EColor c) {
    switch (c) {
        case EColor::Blue: return "blue";
        case EColor::Red: return "red";
        case EColor::Green: return "green";
        case EColor::None: break;
    }
    return "black";
}

/// Recursive plane-tree terms. Each vertex lists its darts clockwise, the
/// first one (toward the parent) omitted below the top.
struct TermReader {
    explicit TermReader(const std::string& text) : s(text) {}

    const std::string& s;
    std::size_t pos = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot;
    std::vector<char> kind;
    std::vector<std::string> edge_label;

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    char take() {
        if (pos >= s.size()) throw ParseError("tree term ends early");
        return s[pos++];
    }

    /// Reads a vertex whose kind letter is next; parent_dart < 0 at the top.
    void vertex(int parent_dart, const std::function<std::string(TermReader&)>& label) {
        const int v = static_cast<int>(rot.size());
        rot.emplace_back();
        kind.push_back(take());
        if (parent_dart >= 0) {
            rot[v].push_back(parent_dart);
            edges[parent_dart / 2].second = v;
        }
        if (peek() != '(') return;
        take();
        while (true) {
            const int k = static_cast<int>(edges.size());
            edges.emplace_back(v, -1);
            edge_label.push_back(label(*this));
            rot[v].push_back(2 * k);
            vertex(2 * k + 1, label);
            const char c = take();
            if (c == ')') break;
            if (c != ',') throw ParseError("tree term: expected ',' or ')'");
        }
    }

    RotationMap build() {
        if (pos != s.size()) throw ParseError("tree term: trailing characters");
        if (edges.empty()) throw ParseError("tree term: no edges");
        return build_map(EdgeList{static_cast<int>(rot.size()), edges}, rot, 0);
    }
    /// Parse-order vertex of each vertex id of the built map.
    std::vector<int> ids(const RotationMap& m) const {
        std::vector<int> out(m.vertex_count());
        for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
            out[m.vertex(2 * k)] = edges[k].first;
            out[m.vertex(2 * k + 1)] = edges[k].second;
        }
        return out;
    }
};

void write_term(std::ostringstream& out, const RotationMap& t, int first, bool top,
                const std::function<std::string(int)>& vertex_label, const std::function<std::string(int)>& edge_label) {
    out << vertex_label(t.vertex(first));
    auto darts = t.rotation_from(first);
    if (!top) darts.erase(darts.begin());
    if (darts.empty()) return;
    out << '(';
    for (std::size_t k = 0; k < darts.size(); ++k) {
        if (k) out << ',';
        out << edge_label(darts[k]);
        write_term(out, t, t.alpha(darts[k]), false, vertex_label, edge_label);
    }
    out << ')';
}

std::string strip_prefix(const std::string& text, const std::string& prefix) {
    auto lines = split_lines(text);
    if (lines.size() != 1) throw ParseError(prefix + "expects a single line");
    auto rest = field(lines[0], prefix);
    if (!rest) throw ParseError("expected a line starting with '" + prefix + "'");
    return *rest;
}

}  // namespace

std::string write_walk(const Walk& w) { return w.word() + "\n"; }

Walk parse_walk(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.size() > 1) throw ParseError("walk: more than one line");
    const std::string word = lines.empty() ? "" : lines[0];
    for (char c : word)
        if (c != 'N' && c != 'E') throw ParseError(std::string("walk: unexpected character '") + c + "'");
    return Walk(word);
}

std::string write_triple(const WalkTriple& r) {
    return write_walk(r.lower) + write_walk(r.middle) + write_walk(r.upper);
}

WalkTriple parse_triple(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.size() != 3) throw ParseError("triple: expected three lines");
    return {parse_walk(lines[0]), parse_walk(lines[1]), parse_walk(lines[2])};
}

std::string write_interval(const Interval& p) { return write_walk(p.first) + write_walk(p.second); }

Interval parse_interval(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.size() != 2) throw ParseError("interval: expected two lines");
    return {parse_walk(lines[0]), parse_walk(lines[1])};
}

std::string write_map(const MapFile& f) {
    const auto& m = f.map;
    std::ostringstream out;
    out << "map E=" << m.edges() << " root=" << m.root() + 1 << "\nopposite:";
    for (int d = 0; d < m.darts(); ++d) out << ' ' << m.alpha(d) + 1;
    out << "\nsigma:";
    for (int d = 0; d < m.darts(); ++d) out << ' ' << m.sigma(d) + 1;
    out << '\n';
    if (f.vcolor) {
        out << "vcolor:";
        for (VColor c : *f.vcolor) out << ' ' << (c == VColor::Black ? 'B' : 'W');
        out << '\n';
    }
    if (f.dir) {
        out << "edir:";
        for (auto d : *f.dir) out << ' ' << (d > 0 ? '+' : d < 0 ? '-' : '0');
        out << '\n';
    }
    if (f.color) {
        out << "ecolor:";
        for (EColor c : *f.color) out << ' ' << to_char(c);
        out << '\n';
    }
    return out.str();
}

MapFile parse_map(const std::string& text) {
    const auto lines = split_lines(text);
    if (lines.size() < 3) throw ParseError("map: expected header, opposite and sigma lines");
    const auto head = tokens(lines[0]);
    if (head.size() != 3 || head[0] != "map" || !field(head[1], "E=") || !field(head[2], "root="))
        throw ParseError("map: bad header '" + lines[0] + "'");
    const int edges = to_int(*field(head[1], "E="));
    const int root = to_int(*field(head[2], "root=")) - 1;
    const int darts = 2 * edges;
    auto perm = [&](const std::string& line, const std::string& key) {
        auto rest = field(line, key);
        if (!rest) throw ParseError("map: expected '" + key + "'");
        std::vector<int> out;
        for (const auto& t : tokens(*rest)) out.push_back(to_int(t) - 1);
        if (static_cast<int>(out.size()) != darts) throw ParseError("map: '" + key + "' has the wrong length");
        return out;
    };
    MapFile f;
    try {
        f.map = RotationMap(perm(lines[1], "opposite:"), perm(lines[2], "sigma:"), root);
    } catch (const DomainError& e) {
        throw ParseError(std::string("map: ") + e.what());
    }
    if (root < 0 || root >= darts) throw ParseError("map: root out of range");
    if (auto err = f.map.check()) throw ParseError("map: " + *err);
    for (std::size_t k = 3; k < lines.size(); ++k) {
        if (lines[k].empty()) continue;
        std::vector<std::string> toks;
        if (auto rest = field(lines[k], "vcolor:")) {
            toks = tokens(*rest);
            if (static_cast<int>(toks.size()) != f.map.vertex_count()) throw ParseError("map: vcolor length");
            f.vcolor.emplace();
            for (const auto& t : toks) {
                if (t != "B" && t != "W") throw ParseError("map: vertex color '" + t + "'");
                f.vcolor->push_back(t == "B" ? VColor::Black : VColor::White);
            }
        } else if (auto rest = field(lines[k], "edir:")) {
            toks = tokens(*rest);
            if (static_cast<int>(toks.size()) != darts) throw ParseError("map: edir length");
            f.dir.emplace();
            for (const auto& t : toks) {
                if (t != "+" && t != "-" && t != "0") throw ParseError("map: direction '" + t + "'");
                f.dir->push_back(t == "+" ? 1 : t == "-" ? -1 : 0);
            }
        } else if (auto rest = field(lines[k], "ecolor:")) {
            toks = tokens(*rest);
            if (static_cast<int>(toks.size()) != darts) throw ParseError("map: ecolor length");
            f.color.emplace();
            for (const auto& t : toks) {
                if (t.size() != 1) throw ParseError("map: edge color '" + t + "'");
                f.color->push_back(parse_color(t[0]));
            }
        } else {
            throw ParseError("map: unknown line '" + lines[k] + "'");
        }
    }
    return f;
}

MapFile to_file(const Quadrangulation& q) { return {q.map, q.color, std::nullopt, std::nullopt}; }
MapFile to_file(const Triangulation& t) { return {t.map, std::nullopt, std::nullopt, std::nullopt}; }
MapFile to_file(const SeparatingDecomposition& s) { return {s.quad.map, s.quad.color, s.dir, s.color}; }
MapFile to_file(const SchnyderWood& w) { return {w.tri.map, std::nullopt, w.dir, w.color}; }
MapFile to_file(const BipolarOrientation& b) { return {b.map, std::nullopt, b.dir, std::nullopt}; }

Quadrangulation as_quadrangulation(const MapFile& f) {
    if (!f.vcolor) throw DomainError("quadrangulation needs a vcolor line");
    Quadrangulation q{f.map, *f.vcolor};
    if (auto r = validate_quadrangulation(q); !r.ok) throw DomainError("not a quadrangulation: " + r.violation);
    return q;
}

Triangulation as_triangulation(const MapFile& f) {
    Triangulation t{f.map};
    if (auto r = validate_triangulation(t); !r.ok) throw DomainError("not a triangulation: " + r.violation);
    return t;
}

SeparatingDecomposition as_sepdec(const MapFile& f) {
    if (!f.vcolor || !f.dir || !f.color) throw DomainError("separating decomposition needs vcolor, edir and ecolor");
    SeparatingDecomposition s{{f.map, *f.vcolor}, *f.dir, *f.color};
    if (auto r = validate_sepdec(s); !r.ok) throw DomainError("not a separating decomposition: " + r.violation);
    return s;
}

SchnyderWood as_schnyder(const MapFile& f) {
    if (!f.dir || !f.color) throw DomainError("Schnyder wood needs edir and ecolor");
    SchnyderWood w{{f.map}, *f.dir, *f.color};
    if (auto r = validate_schnyder(w); !r.ok) throw DomainError("not a Schnyder wood: " + r.violation);
    return w;
}

BipolarOrientation as_bipolar(const MapFile& f) {
    if (!f.dir) throw DomainError("bipolar orientation needs edir");
    BipolarOrientation b{f.map, *f.dir};
    if (auto r = validate_bipolar(b); !r.ok) throw DomainError("not a bipolar orientation: " + r.violation);
    return b;
}

std::string write_arcs(const ArcDiagram& a) {
    std::ostringstream out;
    auto group = [&](int count, char c) {
        if (count == 0) {
            out << '.';
            return;
        }
        for (int k = 0; k < count; ++k) out << (k ? " " : "") << c;
    };
    for (const auto& s : a.segments()) {
        group(s.blue, 'b');
        out << " | ";
        group(s.black, 'k');
        out << " | ";
        group(s.red, 'r');
        out << '\n';
    }
    out << "lower:";
    for (const auto& arc : a.lower_arcs()) out << ' ' << arc.left << '-' << arc.right;
    out << "\nupper:";
    for (const auto& arc : a.upper_arcs()) out << ' ' << arc.left << '-' << arc.right;
    out << '\n';
    return out.str();
}

ArcDiagram parse_arcs(const std::string& text) {
    const auto lines = split_lines(text);
    std::vector<Segment> segs;
    std::size_t k = 0;
    for (; k < lines.size() && !field(lines[k], "lower:"); ++k) {
        Segment s;
        int group = 0;
        for (const auto& t : tokens(lines[k])) {
            if (t == "|") {
                ++group;
            } else if (t == "b") {
                if (group != 0) throw ParseError("arcs: blue dot after a separator");
                ++s.blue;
            } else if (t == "k") {
                if (group != 1) throw ParseError("arcs: black dot outside the middle group");
                ++s.black;
            } else if (t == "r") {
                if (group != 2) throw ParseError("arcs: red dot before the second separator");
                ++s.red;
            } else if (t != ".") {
                throw ParseError("arcs: unknown token '" + t + "'");
            }
        }
        if (group != 2) throw ParseError("arcs: a segment line needs two separators");
        segs.push_back(s);
    }
    if (segs.empty() || k + 2 != lines.size() || !field(lines[k + 1], "upper:"))
        throw ParseError("arcs: expected segment lines, then lower: and upper: lines");
    ArcDiagram a;
    try {
        a = ArcDiagram(segs);
    } catch (const DomainError& e) {
        throw ParseError(std::string("arcs: ") + e.what());
    }
    auto arcs = [&](const std::string& rest) {
        std::vector<Arc> out;
        for (const auto& t : tokens(rest)) {
            const auto dash = t.find('-');
            if (dash == std::string::npos) throw ParseError("arcs: bad pair '" + t + "'");
            out.push_back({to_int(t.substr(0, dash)), to_int(t.substr(dash + 1))});
        }
        return out;
    };
    if (arcs(*field(lines[k], "lower:")) != a.lower_arcs() || arcs(*field(lines[k + 1], "upper:")) != a.upper_arcs())
        throw ParseError("arcs: listed matchings differ from the forced ones");
    return a;
}

std::string write_tandem(const TandemWalk& w) {
    std::string out = std::to_string(w.a) + ";";
    for (const auto& s : w.steps) out += " " + to_string(s);
    return out + "\n";
}

TandemWalk parse_tandem(const std::string& text) {
    const auto lines = split_lines(text);
    if (lines.size() != 1) throw ParseError("tandem: expected one line");
    const auto semi = lines[0].find(';');
    if (semi == std::string::npos) throw ParseError("tandem: missing ';'");
    TandemWalk w{to_int(lines[0].substr(0, semi)), {}};
    for (const auto& t : tokens(lines[0].substr(semi + 1))) {
        if (t == "SE") {
            w.steps.push_back({});
            continue;
        }
        const auto comma = t.find(',');
        if (t.size() < 6 || t.compare(0, 2, "(-") != 0 || t.back() != ')' || comma == std::string::npos)
            throw ParseError("tandem: bad step '" + t + "'");
        w.steps.push_back({false, to_int(t.substr(2, comma - 2)), to_int(t.substr(comma + 1, t.size() - comma - 2))});
    }
    return w;
}

std::string write_mobile(const Mobile& m) {
    std::ostringstream out;
    out << "mobile ";
    write_term(
        out, m.tree, m.tree.root(), true,
        [&](int v) { return std::string(1, m.kind[v] == NodeKind::White ? 'W' : m.kind[v] == NodeKind::Black ? 'K' : 'L'); },
        [&](int d) { return std::string(1, to_char(m.color[d])); });
    out << '\n';
    return out.str();
}

Mobile parse_mobile(const std::string& text) {
    const std::string term = strip_prefix(text, "mobile ");
    TermReader r{term};
    r.vertex(-1, [](TermReader& rd) { return std::string(1, rd.take()); });
    Mobile m;
    m.tree = r.build();
    for (int v : r.ids(m.tree)) {
        switch (r.kind[v]) {
            case 'W': m.kind.push_back(NodeKind::White); break;
            case 'K': m.kind.push_back(NodeKind::Black); break;
            case 'L': m.kind.push_back(NodeKind::Leaf); break;
            default: throw ParseError(std::string("mobile: unknown vertex kind '") + r.kind[v] + "'");
        }
    }
    for (int d = 0; d < m.tree.darts(); ++d) {
        const EColor c = parse_color(r.edge_label[d / 2][0]);
        if (c == EColor::None) throw ParseError("mobile: uncolored edge");
        m.color.push_back(c);
    }
    return m;
}

std::string write_ternary(const TernaryTree& t) {
    std::ostringstream out;
    out << "ternary ";
    write_term(
        out, t.tree, t.tree.root(), true, [&](int v) { return std::string(t.tree.vertices()[v].size() == 1 ? "L" : "N"); },
        [&](int d) { return std::string{to_char(t.color[d]), t.dir[d] > 0 ? '>' : '<'}; });
    out << '\n';
    return out.str();
}

TernaryTree parse_ternary(const std::string& text) {
    const std::string term = strip_prefix(text, "ternary ");
    TermReader r{term};
    r.vertex(-1, [](TermReader& rd) {
        std::string l(1, rd.take());
        l += rd.take();
        return l;
    });
    TernaryTree t;
    t.tree = r.build();
    const auto ids = r.ids(t.tree);
    for (int v = 0; v < t.tree.vertex_count(); ++v) {
        const char want = t.tree.vertices()[v].size() == 1 ? 'L' : 'N';
        if (r.kind[ids[v]] != want) throw ParseError("ternary: vertex kind does not match its degree");
    }
    for (int d = 0; d < t.tree.darts(); ++d) {
        const auto& l = r.edge_label[d / 2];
        const EColor c = parse_color(l[0]);
        if (c == EColor::None || (l[1] != '>' && l[1] != '<')) throw ParseError("ternary: bad edge label '" + l + "'");
        t.color.push_back(c);
        const int forward = l[1] == '>' ? 1 : -1;
        t.dir.push_back(static_cast<std::int8_t>(d % 2 == 0 ? forward : -forward));
    }
    return t;
}

std::string detect_kind(const std::string& text) {
    const auto lines = split_lines(text);
    if (lines.empty()) return "walk";
    if (field(lines[0], "map ")) return "map";
    if (field(lines[0], "mobile ")) return "mobile";
    if (field(lines[0], "ternary ")) return "ternary";
    if (lines[0].find(';') != std::string::npos) return "tandem";
    for (const auto& l : lines)
        if (field(l, "lower:")) return "arcs";
    if (lines.size() == 1) return "walk";
    if (lines.size() == 2) return "interval";
    if (lines.size() == 3) return "triple";
    throw ParseError("cannot tell the object kind of the input");
}

std::string dot(const MapFile& f) {
    const auto& m = f.map;
    std::ostringstream out;
    out << "digraph map {\n";
    for (int v = 0; v < m.vertex_count(); ++v) {
        out << "  v" << v;
        if (f.vcolor)
            out << ((*f.vcolor)[v] == VColor::Black ? " [style=filled, fillcolor=black, fontcolor=white]"
                                                    : " [style=filled, fillcolor=white]");
        out << ";\n";
    }
    for (int v = 0; v < m.vertex_count(); ++v) {
        out << "  // rotation v" << v << ':';
        for (int d : m.vertices()[v]) out << ' ' << d + 1;
        out << '\n';
    }
    out << "  // root dart " << m.root() + 1 << '\n';
    for (int d = 0; d < m.darts(); ++d) {
        if (d > m.alpha(d)) continue;
        int a = m.vertex(d), b = m.head(d);
        const int dir = f.dir ? (*f.dir)[d] : 0;
        if (dir < 0) std::swap(a, b);
        out << "  v" << a << " -> v" << b << " [";
        out << (dir == 0 ? "dir=none" : "dir=forward");
        if (f.color) out << ", color=" << dot_color((*f.color)[d]);
        out << ", label=\"" << d + 1 << '/' << m.alpha(d) + 1 << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string dot(const Mobile& m) {
    const auto& t = m.tree;
    std::ostringstream out;
    out << "graph mobile {\n";
    for (int v = 0; v < t.vertex_count(); ++v) {
        out << "  n" << v;
        switch (m.kind[v]) {
            case NodeKind::White: out << " [shape=circle, label=\"\"]"; break;
            case NodeKind::Black: out << " [shape=circle, style=filled, fillcolor=black, label=\"\"]"; break;
            case NodeKind::Leaf: out << " [shape=point]"; break;
        }
        out << ";\n";
    }
    for (int d = 0; d < t.darts(); ++d)
        if (d < t.alpha(d))
            out << "  n" << t.vertex(d) << " -- n" << t.head(d) << " [color=" << dot_color(m.color[d])
                << (m.is_leg(d) ? ", style=dashed" : "") << "];\n";
    out << "}\n";
    return out.str();
}

std::string dot(const TernaryTree& tt) {
    const auto& t = tt.tree;
    std::ostringstream out;
    out << "digraph ternary {\n";
    for (int v = 0; v < t.vertex_count(); ++v)
        out << "  n" << v << (t.vertices()[v].size() == 1 ? " [shape=point]" : " [shape=circle, label=\"\"]") << ";\n";
    for (int d = 0; d < t.darts(); ++d)
        if (tt.dir[d] > 0)
            out << "  n" << t.vertex(d) << " -> n" << t.head(d) << " [color=" << dot_color(tt.color[d]) << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace gtam::io
