#include "spgap/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "spgap/errors.hpp"

namespace spgap::io {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next line split into tokens; false at end of input.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        if (!std::getline(in_, line)) {
            return false;
        }
        ++line_no_;
        tokens.clear();
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            tokens.push_back(tok);
        }
        return true;
    }

    std::vector<std::string> expect(std::size_t count, const char* what) {
        std::vector<std::string> tokens;
        if (!next(tokens)) {
            fail(std::string("unexpected end of input, expected ") + what);
        }
        if (tokens.size() != count) {
            fail(std::string("expected ") + what);
        }
        return tokens;
    }

    long long integer(const std::string& tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            fail("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) {
            fail("not an integer: '" + tok + "'");
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw IoError("line " + std::to_string(line_no_) + ": " + message);
    }

    int line() const { return line_no_; }

private:
    std::istream& in_;
    int line_no_ = 0;
};

Graph read_graph_body(LineReader& reader) {
    auto header = reader.expect(2, "header 'V E'");
    const long long n = reader.integer(header[0]);
    const long long m = reader.integer(header[1]);
    if (n < 0 || m < 0 || n > std::numeric_limits<VertexId>::max()) {
        reader.fail("invalid header");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        auto tok = reader.expect(2, "edge 'u v'");
        const long long u = reader.integer(tok[0]);
        const long long v = reader.integer(tok[1]);
        if (u < 0 || v < 0 || u >= n || v >= n) {
            reader.fail("vertex id out of range");
        }
        if (u == v) {
            reader.fail("self-loop");
        }
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    return Graph::from_edge_list(static_cast<VertexId>(n), edges);
}

void expect_end(LineReader& reader) {
    std::vector<std::string> tokens;
    while (reader.next(tokens)) {
        if (!tokens.empty()) {
            reader.fail("trailing content");
        }
    }
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

void write_triangulation(std::ostream& out, const SphereTriangulation& t) {
    write_edge_list(out, t.graph);
    out << "faces " << t.faces.size() << '\n';
    for (const Face& f : t.faces) {
        out << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
    }
}

void write_rooted(std::ostream& out, const Graph& g, VertexId root) {
    write_edge_list(out, g);
    out << "root " << root << '\n';
}

Graph read_edge_list(std::istream& in) {
    LineReader reader(in);
    Graph g = read_graph_body(reader);
    expect_end(reader);
    return g;
}

SphereTriangulation read_triangulation(std::istream& in) {
    LineReader reader(in);
    SphereTriangulation t{read_graph_body(reader), {}};
    auto sep = reader.expect(2, "separator 'faces F'");
    if (sep[0] != "faces") {
        reader.fail("expected 'faces F'");
    }
    const long long f = reader.integer(sep[1]);
    if (f < 0) {
        reader.fail("negative face count");
    }
    for (long long i = 0; i < f; ++i) {
        auto tok = reader.expect(3, "face 'a b c'");
        Face face{};
        for (int k = 0; k < 3; ++k) {
            const long long v = reader.integer(tok[k]);
            if (v < 0 || v >= t.graph.vertex_count()) {
                reader.fail("face vertex out of range");
            }
            face[k] = static_cast<VertexId>(v);
        }
        t.faces.push_back(face);
    }
    expect_end(reader);
    return t;
}

std::pair<Graph, VertexId> read_rooted(std::istream& in) {
    LineReader reader(in);
    Graph g = read_graph_body(reader);
    auto tok = reader.expect(2, "trailer 'root r'");
    if (tok[0] != "root") {
        reader.fail("expected 'root r'");
    }
    const long long r = reader.integer(tok[1]);
    if (r < 0 || r >= g.vertex_count()) {
        reader.fail("root out of range");
    }
    expect_end(reader);
    return {std::move(g), static_cast<VertexId>(r)};
}

Graph read_any_graph(std::istream& in) {
    LineReader reader(in);
    return read_graph_body(reader);
}

std::string to_string(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

std::string to_string(const SphereTriangulation& t) {
    std::ostringstream ss;
    write_triangulation(ss, t);
    return ss.str();
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return in;
}

template <class Fn>
auto with_path(const std::filesystem::path& path, Fn&& fn) {
    auto in = open_input(path);
    try {
        return fn(in);
    } catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

}  // namespace

Graph load_graph(const std::filesystem::path& path) {
    return with_path(path, [](std::istream& in) { return read_any_graph(in); });
}

SphereTriangulation load_triangulation(const std::filesystem::path& path) {
    return with_path(path, [](std::istream& in) { return read_triangulation(in); });
}

std::pair<Graph, VertexId> load_rooted(const std::filesystem::path& path) {
    return with_path(path, [](std::istream& in) { return read_rooted(in); });
}

void save_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << content;
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

}  // namespace spgap::io
