#include "tmspline/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "tmspline/errors.hpp"

namespace tmspline {

namespace {

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
};

struct ContentLine {
    int number = 0;
    std::vector<Token> tokens;
};

// Strips comments and blanks, keeping per-token positions for diagnostics.
std::vector<ContentLine> tokenize(const std::string& text) {
    std::vector<ContentLine> result;
    std::istringstream stream(text);
    std::string raw;
    int number = 0;
    while (std::getline(stream, raw)) {
        ++number;
        ContentLine line;
        line.number = number;
        for (std::size_t i = 0; i < raw.size();) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            if (raw[i] == '#') break;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            line.tokens.push_back({raw.substr(i, j - i), number, static_cast<int>(i) + 1});
            i = j;
        }
        if (!line.tokens.empty()) result.push_back(std::move(line));
    }
    return result;
}

// Sequential reader over content lines; all expect_* helpers throw ParseError.
class Reader {
public:
    explicit Reader(const std::string& text) : lines_(tokenize(text)) {}

    const ContentLine& next(const std::string& what) {
        if (pos_ >= lines_.size())
            throw ParseError("unexpected end of file, expected " + what,
                             lines_.empty() ? 1 : lines_.back().number + 1, 1);
        return lines_[pos_++];
    }

    void expect_end() {
        if (pos_ < lines_.size()) {
            const auto& line = lines_[pos_];
            throw ParseError("unexpected trailing content", line.number, line.tokens[0].column);
        }
    }

private:
    std::vector<ContentLine> lines_;
    std::size_t pos_ = 0;
};

[[noreturn]] void fail(const Token& token, const std::string& message) {
    throw ParseError(message + " (got \"" + token.text + "\")", token.line, token.column);
}

void expect_keyword(const ContentLine& line, std::size_t index, const std::string& keyword) {
    if (index >= line.tokens.size())
        throw ParseError("expected \"" + keyword + "\"", line.number,
                         line.tokens.back().column + static_cast<int>(line.tokens.back().text.size()));
    if (line.tokens[index].text != keyword) fail(line.tokens[index], "expected \"" + keyword + "\"");
}

const Token& expect_token(const ContentLine& line, std::size_t index, const std::string& what) {
    if (index >= line.tokens.size())
        throw ParseError("expected " + what, line.number,
                         line.tokens.back().column + static_cast<int>(line.tokens.back().text.size()));
    return line.tokens[index];
}

long long parse_int(const Token& token, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long value = std::stoll(token.text, &used);
        if (used != token.text.size()) fail(token, "expected " + what);
        return value;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail(token, "expected " + what);
    }
}

Rational parse_rational_token(const Token& token) {
    try {
        return parse_rational(token.text);
    } catch (const std::invalid_argument& e) {
        fail(token, std::string("bad rational: ") + e.what());
    }
}

void expect_width(const ContentLine& line, std::size_t width) {
    if (line.tokens.size() > width) fail(line.tokens[width], "unexpected extra token");
}

std::vector<int> parse_id_list(const ContentLine& line, std::size_t& index, const std::string& what) {
    const long long count = parse_int(expect_token(line, index++, what + " count"), what + " count");
    if (count < 0) fail(line.tokens[index - 1], "negative " + what + " count");
    std::vector<int> ids;
    for (long long k = 0; k < count; ++k)
        ids.push_back(static_cast<int>(parse_int(expect_token(line, index++, what + " id"), what + " id")));
    return ids;
}

std::string provenance_name(BaseProvenance provenance) {
    switch (provenance) {
    case BaseProvenance::box_rule: return "box-rule";
    case BaseProvenance::homology_verified: return "verify-homology";
    case BaseProvenance::user_asserted: return "assert";
    }
    return "assert";
}

BaseProvenance parse_provenance(const Token& token) {
    if (token.text == "box-rule") return BaseProvenance::box_rule;
    if (token.text == "verify-homology") return BaseProvenance::homology_verified;
    if (token.text == "assert") return BaseProvenance::user_asserted;
    fail(token, "expected one of box-rule, verify-homology, assert");
}

} // namespace

std::string write_mesh(const TMesh& mesh) {
    std::ostringstream out;
    out << "tmesh 1\n";
    out << "faces " << mesh.face_count() << "\n";
    for (const auto& rect : mesh.face_rects())
        out << to_string(rect.xmin) << ' ' << to_string(rect.ymin) << ' ' << to_string(rect.xmax)
            << ' ' << to_string(rect.ymax) << "\n";
    out << "# vertices " << mesh.vertex_count() << "\n";
    for (int v = 0; v < mesh.vertex_count(); ++v)
        out << "# v" << v << ' ' << to_string(mesh.vertex(v).x) << ' ' << to_string(mesh.vertex(v).y)
            << "\n";
    out << "# edges " << mesh.edge_count() << "\n";
    for (int e = 0; e < mesh.edge_count(); ++e) {
        const auto& edge = mesh.edge(e);
        out << "# e" << e << ' ' << (edge.orientation == Orientation::horizontal ? 'h' : 'v') << " v"
            << edge.start << " v" << edge.end << ' '
            << (mesh.edge_interior(e) ? "interior" : "boundary") << "\n";
    }
    return out.str();
}

TMesh parse_mesh(const std::string& text) {
    Reader reader(text);
    const auto& header = reader.next("\"tmesh 1\" header");
    expect_keyword(header, 0, "tmesh");
    if (parse_int(expect_token(header, 1, "format version"), "format version") != 1)
        fail(header.tokens[1], "unsupported format version");
    expect_width(header, 2);

    const auto& faces_line = reader.next("\"faces N\"");
    expect_keyword(faces_line, 0, "faces");
    const long long count = parse_int(expect_token(faces_line, 1, "face count"), "face count");
    if (count <= 0) fail(faces_line.tokens[1], "face count must be positive");
    expect_width(faces_line, 2);

    std::vector<Rect> rects;
    for (long long k = 0; k < count; ++k) {
        const auto& line = reader.next("a face line \"xmin ymin xmax ymax\"");
        Rect rect;
        rect.xmin = parse_rational_token(expect_token(line, 0, "xmin"));
        rect.ymin = parse_rational_token(expect_token(line, 1, "ymin"));
        rect.xmax = parse_rational_token(expect_token(line, 2, "xmax"));
        rect.ymax = parse_rational_token(expect_token(line, 3, "ymax"));
        expect_width(line, 4);
        if (rect.xmin >= rect.xmax || rect.ymin >= rect.ymax)
            throw ParseError("degenerate face", line.number, line.tokens[0].column);
        rects.push_back(rect);
    }
    reader.expect_end();
    return TMesh::build_from_faces(rects);
}

std::string write_smoothness(const SmoothnessDistribution& dist) {
    const TMesh& mesh = dist.mesh();
    // Majority order per orientation keeps the override list short.
    int defaults[2] = {-1, -1};
    for (int side = 0; side < 2; ++side) {
        const auto wanted = side == 0 ? Orientation::horizontal : Orientation::vertical;
        std::map<int, int> votes;
        for (int e = 0; e < mesh.edge_count(); ++e)
            if (mesh.edge_interior(e) && mesh.edge(e).orientation == wanted) ++votes[dist.order(e)];
        int best = -1, best_votes = 0;
        for (const auto& [order, n] : votes)
            if (n > best_votes) best = order, best_votes = n;
        defaults[side] = best;
    }

    std::ostringstream out;
    out << "smoothness 1\n";
    out << "default horizontal " << defaults[0] << "\n";
    out << "default vertical " << defaults[1] << "\n";
    std::vector<int> overrides;
    for (int e = 0; e < mesh.edge_count(); ++e) {
        if (!mesh.edge_interior(e)) continue;
        const int wanted = mesh.edge(e).orientation == Orientation::horizontal ? defaults[0] : defaults[1];
        if (dist.order(e) != wanted) overrides.push_back(e);
    }
    out << "overrides " << overrides.size() << "\n";
    for (int e : overrides) out << e << ' ' << dist.order(e) << "\n";
    return out.str();
}

SmoothnessDistribution parse_smoothness(const std::string& text, const TMesh& mesh) {
    Reader reader(text);
    const auto& header = reader.next("\"smoothness 1\" header");
    expect_keyword(header, 0, "smoothness");
    if (parse_int(expect_token(header, 1, "format version"), "format version") != 1)
        fail(header.tokens[1], "unsupported format version");
    expect_width(header, 2);

    int defaults[2] = {-1, -1};
    const char* names[2] = {"horizontal", "vertical"};
    for (int side = 0; side < 2; ++side) {
        const auto& line = reader.next(std::string("\"default ") + names[side] + " r\"");
        expect_keyword(line, 0, "default");
        expect_keyword(line, 1, names[side]);
        const auto& token = expect_token(line, 2, "order");
        defaults[side] = static_cast<int>(parse_int(token, "order"));
        if (defaults[side] < -1) fail(token, "order below -1");
        expect_width(line, 3);
    }

    std::vector<int> orders(mesh.edge_count(), -1);
    for (int e = 0; e < mesh.edge_count(); ++e)
        if (mesh.edge_interior(e))
            orders[e] = mesh.edge(e).orientation == Orientation::horizontal ? defaults[0] : defaults[1];

    const auto& overrides_line = reader.next("\"overrides K\"");
    expect_keyword(overrides_line, 0, "overrides");
    const long long count =
        parse_int(expect_token(overrides_line, 1, "override count"), "override count");
    if (count < 0) fail(overrides_line.tokens[1], "negative override count");
    expect_width(overrides_line, 2);

    for (long long k = 0; k < count; ++k) {
        const auto& line = reader.next("an override line \"edge_id order\"");
        const auto& id_token = expect_token(line, 0, "edge id");
        const long long edge = parse_int(id_token, "edge id");
        if (edge < 0 || edge >= mesh.edge_count()) fail(id_token, "edge id out of range");
        const auto& order_token = expect_token(line, 1, "order");
        const int order = static_cast<int>(parse_int(order_token, "order"));
        expect_width(line, 2);
        if (order < -1) fail(order_token, "order below -1");
        if (!mesh.edge_interior(static_cast<int>(edge)) && order != -1)
            fail(order_token, "boundary edge must keep order -1");
        orders[static_cast<std::size_t>(edge)] = order;
    }
    reader.expect_end();
    return SmoothnessDistribution(mesh, std::move(orders));
}

std::string write_certificate(const Certificate& certificate) {
    std::ostringstream out;
    out << "certificate 1\n";
    out << "degree " << certificate.m << ' ' << certificate.mp << "\n";
    out << "provenance " << provenance_name(certificate.provenance) << "\n";
    out << "edges " << certificate.base_orders.size() << "\n";
    out << "base";
    for (int r : certificate.base_orders) out << ' ' << r;
    out << "\nfinal";
    for (int r : certificate.final_orders) out << ' ' << r;
    out << "\nsteps " << certificate.steps.size() << "\n";
    for (const auto& step : certificate.steps) {
        out << "step " << step.target_order << " edges " << step.segment_edges.size();
        for (int e : step.segment_edges) out << ' ' << e;
        if (step.kind == ReductionStep::Kind::weight)
            out << " weight " << step.weight << ' ' << step.threshold;
        else {
            out << " container " << step.container_edges.size();
            for (int e : step.container_edges) out << ' ' << e;
        }
        out << "\n";
    }
    return out.str();
}

Certificate parse_certificate(const std::string& text) {
    Reader reader(text);
    const auto& header = reader.next("\"certificate 1\" header");
    expect_keyword(header, 0, "certificate");
    if (parse_int(expect_token(header, 1, "format version"), "format version") != 1)
        fail(header.tokens[1], "unsupported format version");
    expect_width(header, 2);

    Certificate certificate;
    const auto& degree = reader.next("\"degree m mp\"");
    expect_keyword(degree, 0, "degree");
    certificate.m = static_cast<int>(parse_int(expect_token(degree, 1, "degree"), "degree"));
    certificate.mp = static_cast<int>(parse_int(expect_token(degree, 2, "degree"), "degree"));
    expect_width(degree, 3);

    const auto& provenance = reader.next("\"provenance name\"");
    expect_keyword(provenance, 0, "provenance");
    certificate.provenance = parse_provenance(expect_token(provenance, 1, "provenance name"));
    expect_width(provenance, 2);

    const auto& edges_line = reader.next("\"edges n\"");
    expect_keyword(edges_line, 0, "edges");
    const long long edges = parse_int(expect_token(edges_line, 1, "edge count"), "edge count");
    if (edges < 0) fail(edges_line.tokens[1], "negative edge count");
    expect_width(edges_line, 2);

    for (const char* which : {"base", "final"}) {
        const auto& line = reader.next(std::string("\"") + which + " <orders>\"");
        expect_keyword(line, 0, which);
        std::vector<int>& orders =
            std::string(which) == "base" ? certificate.base_orders : certificate.final_orders;
        for (long long k = 0; k < edges; ++k)
            orders.push_back(static_cast<int>(parse_int(expect_token(line, 1 + k, "order"), "order")));
        expect_width(line, static_cast<std::size_t>(edges) + 1);
    }

    const auto& steps_line = reader.next("\"steps K\"");
    expect_keyword(steps_line, 0, "steps");
    const long long steps = parse_int(expect_token(steps_line, 1, "step count"), "step count");
    if (steps < 0) fail(steps_line.tokens[1], "negative step count");
    expect_width(steps_line, 2);

    for (long long k = 0; k < steps; ++k) {
        const auto& line = reader.next("a step line");
        expect_keyword(line, 0, "step");
        ReductionStep step;
        step.target_order =
            static_cast<int>(parse_int(expect_token(line, 1, "target order"), "target order"));
        expect_keyword(line, 2, "edges");
        std::size_t index = 3;
        step.segment_edges = parse_id_list(line, index, "edge");
        const auto& kind = expect_token(line, index++, "\"weight\" or \"container\"");
        if (kind.text == "weight") {
            step.kind = ReductionStep::Kind::weight;
            step.weight = parse_int(expect_token(line, index++, "weight"), "weight");
            step.threshold = parse_int(expect_token(line, index++, "threshold"), "threshold");
        } else if (kind.text == "container") {
            step.kind = ReductionStep::Kind::container;
            step.container_edges = parse_id_list(line, index, "container edge");
        } else {
            fail(kind, "expected \"weight\" or \"container\"");
        }
        expect_width(line, index);
        certificate.steps.push_back(std::move(step));
    }
    reader.expect_end();
    return certificate;
}

std::string write_basis(const std::vector<PiecewisePolynomial>& basis) {
    std::ostringstream out;
    out << "basis 1\n";
    const std::size_t faces = basis.empty() ? 0 : basis.front().face_coeffs.size();
    const int m = basis.empty() ? 0 : basis.front().m;
    const int mp = basis.empty() ? 0 : basis.front().mp;
    out << "degree " << m << ' ' << mp << "\n";
    out << "functions " << basis.size() << " faces " << faces << "\n";
    for (std::size_t k = 0; k < basis.size(); ++k) {
        out << "function " << k << "\n";
        for (const auto& coeffs : basis[k].face_coeffs) {
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                out << (i ? " " : "") << to_string(coeffs[i]);
            out << "\n";
        }
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
    if (!out.flush()) throw Error("cannot write " + path);
}

} // namespace tmspline
