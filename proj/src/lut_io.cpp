#include "polarq/lut_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace polarq {

namespace {

constexpr const char* kMagic = "polarq-tables";
constexpr int kVersion = 1;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_doubles(std::ostream& out, const char* tag, const std::vector<double>& v) {
    out << tag;
    for (double x : v) out << ' ' << fmt(x);
    out << '\n';
}

class LineReader {
public:
    LineReader(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

    std::istringstream next(const std::string& what) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return std::istringstream(line);
        }
        fail("unexpected end of file while reading " + what);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw table_format_error(name_ + ":" + std::to_string(line_no_) + ": " + msg);
    }

    template <class T>
    T token(std::istringstream& line, const std::string& what) {
        T value;
        if (!(line >> value)) fail("expected " + what);
        return value;
    }

    std::vector<double> doubles_line(const char* tag, std::size_t count, const std::string& ctx) {
        auto line = next(ctx);
        std::string got = token<std::string>(line, std::string("'") + tag + "' in " + ctx);
        if (got != tag) fail("expected '" + std::string(tag) + "' in " + ctx + ", got '" + got + "'");
        std::vector<double> values(count);
        for (auto& v : values) v = token<double>(line, "value in " + ctx);
        return values;
    }

    std::vector<std::uint16_t> ints_row(std::size_t count, const std::string& ctx) {
        auto line = next(ctx);
        std::vector<std::uint16_t> values(count);
        for (auto& v : values) {
            long raw = token<long>(line, "table entry in " + ctx);
            if (raw < 0 || raw > 0xFFFF) fail("table entry out of range in " + ctx);
            v = static_cast<std::uint16_t>(raw);
        }
        return values;
    }

private:
    std::istream& in_;
    std::string name_;
    int line_no_ = 0;
};

void check_ascending(LineReader& reader, const std::vector<double>& v, const std::string& ctx) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1] < v[i])) reader.fail("reconstruction values not strictly ascending in " + ctx);
}

}  // namespace

void export_tables(const LutSet& luts, std::ostream& out) {
    out << kMagic << ' ' << kVersion << ' ' << luts.code_len << ' ' << luts.levels << ' '
        << fmt(luts.design_ebn0_db) << ' ' << luts.grid.levels << ' ' << fmt(luts.grid.lo) << ' '
        << fmt(luts.grid.step) << '\n';

    const Quantizer& cq = luts.channel_quantizer;
    out << "channel-quantizer " << cq.source_size() << ' ' << fmt(cq.distortion) << '\n';
    out << "boundaries";
    for (int b : cq.boundaries) out << ' ' << b;
    out << '\n';
    write_doubles(out, "recon", cq.recon);

    for (int depth = 0; depth <= luts.n_bits; ++depth) {
        for (int pos = 0; pos < (1 << depth); ++pos) {
            const NodeTables& node = luts.node(depth, pos);
            const std::size_t a = node.recon.size();
            out << "node " << node_path_name(depth, pos) << ' ' << a << '\n';
            write_doubles(out, "recon", node.recon);
            if (depth == luts.n_bits) continue;
            out << "f\n";
            for (std::size_t i = 0; i < a; ++i) {
                for (std::size_t j = 0; j < a; ++j)
                    out << node.f_table[i * a + j] << (j + 1 == a ? '\n' : ' ');
            }
            out << "g\n";
            for (std::size_t i = 0; i < a; ++i) {
                for (std::size_t j = 0; j < a; ++j) {
                    out << node.g_table[(i * a + j) * 2] << ' ' << node.g_table[(i * a + j) * 2 + 1]
                        << (j + 1 == a ? '\n' : ' ');
                }
            }
        }
    }
    out << "end\n";
}

void export_tables(const LutSet& luts, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    export_tables(luts, out);
    out.flush();
    if (!out) throw io_error("write failed for '" + path + "'");
}

LutSet import_tables(std::istream& in, const std::string& name) {
    LineReader reader(in, name);
    LutSet luts;

    auto header = reader.next("header");
    std::string magic = reader.token<std::string>(header, "format magic");
    if (magic != kMagic) reader.fail("not a polarq table file");
    int version = reader.token<int>(header, "format version");
    if (version != kVersion)
        reader.fail("unsupported format version " + std::to_string(version));
    luts.code_len = reader.token<int>(header, "code length");
    luts.levels = reader.token<int>(header, "level count");
    luts.design_ebn0_db = reader.token<double>(header, "design Eb/N0");
    luts.grid.levels = reader.token<int>(header, "grid levels");
    luts.grid.lo = reader.token<double>(header, "grid lo");
    luts.grid.step = reader.token<double>(header, "grid step");
    if (luts.code_len < 2 || (luts.code_len & (luts.code_len - 1)) != 0)
        reader.fail("code length is not a power of two");
    if (luts.levels < 1 || luts.grid.levels < 2 || luts.grid.step <= 0.0)
        reader.fail("bad level counts or grid geometry");
    luts.n_bits = 0;
    while ((1 << luts.n_bits) < luts.code_len) ++luts.n_bits;

    auto cq_line = reader.next("channel quantizer");
    std::string tag = reader.token<std::string>(cq_line, "'channel-quantizer'");
    if (tag != "channel-quantizer") reader.fail("expected 'channel-quantizer'");
    int source_size = reader.token<int>(cq_line, "source alphabet size");
    double distortion = reader.token<double>(cq_line, "distortion");
    if (source_size != luts.grid.levels)
        reader.fail("channel quantizer alphabet does not match grid levels");

    auto bounds_line = reader.next("channel quantizer boundaries");
    tag = reader.token<std::string>(bounds_line, "'boundaries'");
    if (tag != "boundaries") reader.fail("expected 'boundaries'");
    Quantizer& cq = luts.channel_quantizer;
    cq.distortion = distortion;
    int b;
    while (bounds_line >> b) cq.boundaries.push_back(b);
    if (cq.boundaries.size() < 2 || cq.boundaries.front() != 0 ||
        cq.boundaries.back() != source_size)
        reader.fail("channel quantizer boundaries must run from 0 to the alphabet size");
    for (std::size_t i = 1; i < cq.boundaries.size(); ++i)
        if (cq.boundaries[i - 1] >= cq.boundaries[i])
            reader.fail("channel quantizer boundaries not strictly increasing");
    if (static_cast<int>(cq.boundaries.size()) - 1 > luts.levels)
        reader.fail("channel quantizer has more cells than the level count");

    cq.recon = reader.doubles_line("recon", cq.boundaries.size() - 1, "channel quantizer");
    check_ascending(reader, cq.recon, "channel quantizer");

    luts.nodes.resize((1 << (luts.n_bits + 1)) - 1);
    for (int depth = 0; depth <= luts.n_bits; ++depth) {
        for (int pos = 0; pos < (1 << depth); ++pos) {
            const std::string path = node_path_name(depth, pos);
            auto node_line = reader.next("node " + path);
            tag = reader.token<std::string>(node_line, "'node'");
            if (tag != "node") reader.fail("expected 'node' for " + path);
            std::string got_path = reader.token<std::string>(node_line, "node path");
            if (got_path != path)
                reader.fail("expected node " + path + ", found node " + got_path);
            int a = reader.token<int>(node_line, "alphabet size");
            if (a < 1 || a > 0xFFFF) reader.fail("bad alphabet size for node " + path);

            NodeTables& node = luts.node(depth, pos);
            node.recon = reader.doubles_line("recon", a, "node " + path);
            check_ascending(reader, node.recon, "node " + path);
            if (depth == luts.n_bits) continue;

            auto f_line = reader.next("f table of node " + path);
            tag = reader.token<std::string>(f_line, "'f'");
            if (tag != "f") reader.fail("expected 'f' for node " + path);
            node.f_table.reserve(static_cast<std::size_t>(a) * a);
            for (int i = 0; i < a; ++i) {
                auto row = reader.ints_row(a, "f table of node " + path);
                node.f_table.insert(node.f_table.end(), row.begin(), row.end());
            }

            auto g_line = reader.next("g table of node " + path);
            tag = reader.token<std::string>(g_line, "'g'");
            if (tag != "g") reader.fail("expected 'g' for node " + path);
            node.g_table.reserve(static_cast<std::size_t>(a) * a * 2);
            for (int i = 0; i < a; ++i) {
                auto row = reader.ints_row(2 * a, "g table of node " + path);
                node.g_table.insert(node.g_table.end(), row.begin(), row.end());
            }
        }
    }

    auto end_line = reader.next("trailer");
    tag = reader.token<std::string>(end_line, "'end'");
    if (tag != "end") reader.fail("expected 'end'");

    // Tables can only be validated against the child alphabets once every
    // node is in; report by node path.
    for (int depth = 0; depth < luts.n_bits; ++depth) {
        for (int pos = 0; pos < (1 << depth); ++pos) {
            const NodeTables& node = luts.node(depth, pos);
            const std::size_t f_size = luts.node(depth + 1, 2 * pos).recon.size();
            const std::size_t g_size = luts.node(depth + 1, 2 * pos + 1).recon.size();
            for (auto e : node.f_table)
                if (e >= f_size)
                    throw table_format_error(name + ": f table entry " + std::to_string(e) +
                                             " outside child alphabet at node " +
                                             node_path_name(depth, pos));
            for (auto e : node.g_table)
                if (e >= g_size)
                    throw table_format_error(name + ": g table entry " + std::to_string(e) +
                                             " outside child alphabet at node " +
                                             node_path_name(depth, pos));
        }
    }

    rebuild_grid_to_cell(luts);
    return luts;
}

LutSet import_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    return import_tables(in, path);
}

}  // namespace polarq
