#include "cfml/serialize.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cfml {

namespace {

constexpr char kDistMagic[] = "CFML1";
constexpr char kRoutMagic[] = "CFMR1";

// ---- LEB128 ----

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v)
{
    while (v >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(v) | 0x80);
        v >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(v));
}

class ByteReader {
public:
    ByteReader(const std::uint8_t* p, size_t len) : p_(p), end_(p + len) {}

    std::uint64_t varint()
    {
        std::uint64_t v = 0;
        unsigned shift = 0;
        for (;;) {
            if (p_ == end_)
                throw ParseError("truncated varint");
            std::uint8_t b = *p_++;
            v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
            if (!(b & 0x80))
                return v;
            shift += 7;
            if (shift > 63)
                throw ParseError("varint overflow");
        }
    }

    const std::uint8_t* raw(size_t len)
    {
        if (static_cast<size_t>(end_ - p_) < len)
            throw ParseError("truncated record");
        const std::uint8_t* q = p_;
        p_ += len;
        return q;
    }

    bool flag() { return varint() != 0; }
    bool done() const { return p_ == end_; }

private:
    const std::uint8_t* p_;
    const std::uint8_t* end_;
};

// ---- label payloads ----

void put_tree_dist(std::vector<std::uint8_t>& out, const TreeDistLabel& t)
{
    put_varint(out, t.entries.size());
    for (const auto& e : t.entries) {
        put_varint(out, e.separator);
        put_varint(out, e.dist);
    }
}

TreeDistLabel get_tree_dist(ByteReader& r)
{
    TreeDistLabel t;
    size_t cnt = r.varint();
    t.entries.resize(cnt);
    for (auto& e : t.entries) {
        e.separator = static_cast<Vid>(r.varint());
        e.dist = static_cast<std::uint32_t>(r.varint());
    }
    if (t.entries.empty())
        throw ParseError("empty tree label");
    return t;
}

void put_tree_rout(std::vector<std::uint8_t>& out, const TreeRoutLabel& t)
{
    put_varint(out, t.entries.size());
    for (const auto& e : t.entries) {
        put_varint(out, e.separator);
        put_varint(out, e.to_sep);
        put_varint(out, e.from_sep);
    }
}

TreeRoutLabel get_tree_rout(ByteReader& r)
{
    TreeRoutLabel t;
    size_t cnt = r.varint();
    t.entries.resize(cnt);
    for (auto& e : t.entries) {
        e.separator = static_cast<Vid>(r.varint());
        e.to_sep = static_cast<Port>(r.varint());
        e.from_sep = static_cast<Port>(r.varint());
    }
    if (t.entries.empty())
        throw ParseError("empty tree label");
    return t;
}

void put_tree_dist_span(std::vector<std::uint8_t>& out, std::span<const TreeDistEntry> entries)
{
    put_varint(out, entries.size());
    for (const auto& e : entries) {
        put_varint(out, e.separator);
        put_varint(out, e.dist);
    }
}

void put_tree_rout_span(std::vector<std::uint8_t>& out, std::span<const TreeRoutEntry> entries)
{
    put_varint(out, entries.size());
    for (const auto& e : entries) {
        put_varint(out, e.separator);
        put_varint(out, e.to_sep);
        put_varint(out, e.from_sep);
    }
}

std::vector<std::uint8_t> dist_label_payload(const DistLabel& l)
{
    std::vector<std::uint8_t> out;
    put_varint(out, l.id);
    put_varint(out, static_cast<std::uint32_t>(l.ncad.depth));
    put_tree_dist_span(out, l.ncad.view());
    put_varint(out, l.levels.size());
    for (const auto& rec : l.levels) {
        put_varint(out, rec.centroid_id);
        put_varint(out, rec.dist_to_cent);
        put_varint(out, rec.gate.a);
        put_varint(out, rec.gate.b);
        put_varint(out, rec.has_parts ? 1 : 0);
        if (rec.has_parts) {
            for (const DistSlot* s : {&rec.first, &rec.second}) {
                put_tree_dist_span(out, rec.tree(*s));
                put_varint(out, s->dist);
                put_varint(out, s->panel_id);
            }
        }
    }
    return out;
}

DistLabel dist_label_from_payload(ByteReader& r)
{
    DistLabel l;
    l.id = static_cast<Vid>(r.varint());
    auto depth = static_cast<std::int32_t>(r.varint());
    TreeDistLabel ncad_t = get_tree_dist(r);
    ncad_t.depth = depth;
    l.ncad = NcadRecord::from(ncad_t);
    l.levels.resize(r.varint());
    for (auto& rec : l.levels) {
        rec.centroid_id = static_cast<Vid>(r.varint());
        rec.dist_to_cent = static_cast<std::uint32_t>(r.varint());
        rec.gate.a = static_cast<std::uint32_t>(r.varint());
        rec.gate.b = static_cast<std::uint32_t>(r.varint());
        rec.has_parts = r.flag();
        if (rec.has_parts) {
            for (DistSlot* s : {&rec.first, &rec.second}) {
                rec.append_slot_tree(*s, get_tree_dist(r));
                s->dist = static_cast<std::uint32_t>(r.varint());
                s->panel_id = static_cast<std::uint32_t>(r.varint());
            }
        }
    }
    return l;
}

std::vector<std::uint8_t> rout_label_payload(const RoutLabel& l)
{
    std::vector<std::uint8_t> out;
    put_varint(out, l.id);
    put_varint(out, static_cast<std::uint32_t>(l.ncad.depth));
    put_tree_dist_span(out, l.ncad.view());
    put_varint(out, l.levels.size());
    for (const auto& rec : l.levels) {
        put_varint(out, rec.centroid_id);
        put_varint(out, rec.to_cent);
        put_varint(out, rec.from_cent);
        put_varint(out, rec.dist_to_cent);
        put_varint(out, rec.gate.a);
        put_varint(out, rec.gate.b);
        put_varint(out, rec.has_parts ? 1 : 0);
        if (rec.has_parts) {
            for (const RoutSlot* s : {&rec.first, &rec.second}) {
                put_tree_dist_span(out, rec.tree(*s));
                put_tree_rout_span(out, rec.rtree(*s));
                put_varint(out, s->to_port);
                put_varint(out, s->dist);
                put_varint(out, s->twin_port);
                put_varint(out, s->panel_id);
            }
        }
    }
    return out;
}

RoutLabel rout_label_from_payload(ByteReader& r)
{
    RoutLabel l;
    l.id = static_cast<Vid>(r.varint());
    auto depth = static_cast<std::int32_t>(r.varint());
    TreeDistLabel ncad_t = get_tree_dist(r);
    ncad_t.depth = depth;
    l.ncad = NcadRecord::from(ncad_t);
    l.levels.resize(r.varint());
    for (auto& rec : l.levels) {
        rec.centroid_id = static_cast<Vid>(r.varint());
        rec.to_cent = static_cast<Port>(r.varint());
        rec.from_cent = static_cast<Port>(r.varint());
        rec.dist_to_cent = static_cast<std::uint32_t>(r.varint());
        rec.gate.a = static_cast<std::uint32_t>(r.varint());
        rec.gate.b = static_cast<std::uint32_t>(r.varint());
        rec.has_parts = r.flag();
        if (rec.has_parts) {
            for (RoutSlot* s : {&rec.first, &rec.second}) {
                TreeDistLabel t = get_tree_dist(r);
                TreeRoutLabel rt = get_tree_rout(r);
                rec.append_slot_trees(*s, t, rt);
                s->to_port = static_cast<Port>(r.varint());
                s->dist = static_cast<std::uint32_t>(r.varint());
                s->twin_port = static_cast<Port>(r.varint());
                s->panel_id = static_cast<std::uint32_t>(r.varint());
            }
        }
    }
    return l;
}

// ---- binary container ----

template <typename Label, typename PayloadFn>
void write_labels_binary_impl(std::ostream& out, const char* magic,
                              const std::vector<Label>& labels, PayloadFn&& payload)
{
    out.write(magic, 5);
    out.put('\0');
    std::vector<std::uint8_t> buf;
    put_varint(buf, labels.size());
    for (const auto& l : labels) {
        std::vector<std::uint8_t> body = payload(l);
        put_varint(buf, body.size());
        buf.insert(buf.end(), body.begin(), body.end());
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out)
        throw ParseError("label write failed");
}

std::vector<std::uint8_t> slurp(std::istream& in)
{
    std::vector<std::uint8_t> data;
    char buf[65536];
    while (in.read(buf, sizeof buf) || in.gcount() > 0)
        data.insert(data.end(), buf, buf + in.gcount());
    return data;
}

template <typename Label, typename FromPayloadFn>
std::vector<Label> read_labels_binary_impl(std::istream& in, const char* magic, FromPayloadFn&& from)
{
    std::vector<std::uint8_t> data = slurp(in);
    if (data.size() < 6 || std::memcmp(data.data(), magic, 5) != 0 || data[5] != 0)
        throw ParseError("bad label file magic");
    ByteReader r(data.data() + 6, data.size() - 6);
    size_t n = r.varint();
    std::vector<Label> labels;
    labels.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        size_t len = r.varint();
        const std::uint8_t* body = r.raw(len);
        ByteReader rb(body, len);
        labels.push_back(from(rb));
        if (!rb.done())
            throw ParseError("trailing bytes in label record");
    }
    if (!r.done())
        throw ParseError("trailing bytes in label file");
    return labels;
}

// ---- text format ----

void put_tree_dist_text(std::ostream& out, std::span<const TreeDistEntry> entries)
{
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i)
            out << ',';
        out << entries[i].separator << ':' << entries[i].dist;
    }
}

void put_tree_rout_text(std::ostream& out, std::span<const TreeRoutEntry> entries)
{
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i)
            out << ',';
        out << entries[i].separator << ':' << entries[i].to_sep << ':' << entries[i].from_sep;
    }
}

void put_gate_text(std::ostream& out, const StarLabel& g)
{
    if (g.size() == 0)
        out << '-';
    else if (g.size() == 1)
        out << g.a;
    else
        out << g.a << ':' << g.b;
}

// Minimal recursive-descent reader over one line.
class TextScanner {
public:
    explicit TextScanner(const std::string& s) : s_(s) {}

    std::uint64_t number()
    {
        if (pos_ >= s_.size() || !isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("number expected at column " + std::to_string(pos_));
        std::uint64_t v = 0;
        while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
        return v;
    }

    void expect(char c)
    {
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(std::string("'") + c + "' expected at column " + std::to_string(pos_));
        ++pos_;
    }

    void expect(const char* word)
    {
        for (const char* p = word; *p; ++p)
            expect(*p);
    }

    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool accept(char c)
    {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_space()
    {
        while (pos_ < s_.size() && s_[pos_] == ' ')
            ++pos_;
    }
    bool done() const { return pos_ >= s_.size(); }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

TreeDistLabel scan_tree_dist(TextScanner& sc)
{
    TreeDistLabel t;
    do {
        TreeDistEntry e;
        e.separator = static_cast<Vid>(sc.number());
        sc.expect(':');
        e.dist = static_cast<std::uint32_t>(sc.number());
        t.entries.push_back(e);
    } while (sc.accept(','));
    return t;
}

TreeRoutLabel scan_tree_rout(TextScanner& sc)
{
    TreeRoutLabel t;
    do {
        TreeRoutEntry e;
        e.separator = static_cast<Vid>(sc.number());
        sc.expect(':');
        e.to_sep = static_cast<Port>(sc.number());
        sc.expect(':');
        e.from_sep = static_cast<Port>(sc.number());
        t.entries.push_back(e);
    } while (sc.accept(','));
    return t;
}

StarLabel scan_gate(TextScanner& sc)
{
    StarLabel g;
    if (sc.accept('-'))
        return g;
    g.a = static_cast<std::uint32_t>(sc.number());
    if (sc.accept(':'))
        g.b = static_cast<std::uint32_t>(sc.number());
    return g;
}

} // namespace

// ---- graph io ----

PortedGraph read_graph_text(std::istream& in)
{
    std::string line;
    size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<std::pair<Vid, Vid>> edges;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream ls(line);
        if (!have_header) {
            if (!(ls >> n >> m))
                throw ParseError("line " + std::to_string(lineno) + ": expected 'n m'");
            have_header = true;
            edges.reserve(m);
        } else {
            Vid u, v;
            if (!(ls >> u >> v))
                throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
            edges.emplace_back(u, v);
        }
    }
    if (!have_header)
        throw ParseError("missing graph header line");
    if (edges.size() != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", file has " +
                         std::to_string(edges.size()));
    return assign_ports(n, edges);
}

void write_graph_text(std::ostream& out, const PortedGraph& g, const std::string& header)
{
    if (!header.empty())
        out << header << '\n';
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

PortedGraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return read_graph_text(in);
}

void write_graph_file(const std::string& path, const PortedGraph& g, const std::string& header)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open " + path + " for writing");
    write_graph_text(out, g, header);
}

// ---- binary label io ----

void write_dist_labels_binary(std::ostream& out, const std::vector<DistLabel>& labels)
{
    write_labels_binary_impl(out, kDistMagic, labels, dist_label_payload);
}

std::vector<DistLabel> read_dist_labels_binary(std::istream& in)
{
    return read_labels_binary_impl<DistLabel>(in, kDistMagic, dist_label_from_payload);
}

void write_rout_labels_binary(std::ostream& out, const std::vector<RoutLabel>& labels)
{
    write_labels_binary_impl(out, kRoutMagic, labels, rout_label_payload);
}

std::vector<RoutLabel> read_rout_labels_binary(std::istream& in)
{
    return read_labels_binary_impl<RoutLabel>(in, kRoutMagic, rout_label_from_payload);
}

// ---- text label io ----

void write_dist_labels_text(std::ostream& out, const std::vector<DistLabel>& labels)
{
    out << kDistMagic << " text n=" << labels.size() << '\n';
    for (const auto& l : labels) {
        out << l.id << " ncad{" << l.ncad.depth << ';';
        put_tree_dist_text(out, l.ncad.view());
        out << "} levels[";
        for (const auto& rec : l.levels) {
            out << "{cent=" << rec.centroid_id << ";d=" << rec.dist_to_cent << ";gate=";
            put_gate_text(out, rec.gate);
            if (rec.has_parts) {
                for (const DistSlot* s : {&rec.first, &rec.second}) {
                    out << (s == &rec.first ? ";first=(" : ";second=(");
                    put_tree_dist_text(out, rec.tree(*s));
                    out << ';' << s->dist << ';' << s->panel_id << ')';
                }
            }
            out << '}';
        }
        out << "]\n";
    }
}

std::vector<DistLabel> read_dist_labels_text(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line.rfind(std::string(kDistMagic) + " text n=", 0) != 0)
        throw ParseError("bad text label header");
    size_t n = std::stoul(line.substr(std::string(kDistMagic).size() + 8));
    std::vector<DistLabel> labels;
    labels.reserve(n);
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        TextScanner sc(line);
        DistLabel l;
        l.id = static_cast<Vid>(sc.number());
        sc.skip_space();
        sc.expect("ncad{");
        auto depth = static_cast<std::int32_t>(sc.number());
        sc.expect(';');
        TreeDistLabel ncad_t = scan_tree_dist(sc);
        ncad_t.depth = depth;
        l.ncad = NcadRecord::from(ncad_t);
        sc.expect('}');
        sc.skip_space();
        sc.expect("levels[");
        while (sc.accept('{')) {
            DistLevelRecord rec;
            sc.expect("cent=");
            rec.centroid_id = static_cast<Vid>(sc.number());
            sc.expect(";d=");
            rec.dist_to_cent = static_cast<std::uint32_t>(sc.number());
            sc.expect(";gate=");
            rec.gate = scan_gate(sc);
            if (sc.accept(';')) {
                rec.has_parts = true;
                sc.expect("first=(");
                rec.append_slot_tree(rec.first, scan_tree_dist(sc));
                sc.expect(';');
                rec.first.dist = static_cast<std::uint32_t>(sc.number());
                sc.expect(';');
                rec.first.panel_id = static_cast<std::uint32_t>(sc.number());
                sc.expect(");second=(");
                rec.append_slot_tree(rec.second, scan_tree_dist(sc));
                sc.expect(';');
                rec.second.dist = static_cast<std::uint32_t>(sc.number());
                sc.expect(';');
                rec.second.panel_id = static_cast<std::uint32_t>(sc.number());
                sc.expect(')');
            }
            sc.expect('}');
            l.levels.push_back(std::move(rec));
        }
        sc.expect(']');
        labels.push_back(std::move(l));
    }
    if (labels.size() != n)
        throw ParseError("label count mismatch in text file");
    return labels;
}

void write_rout_labels_text(std::ostream& out, const std::vector<RoutLabel>& labels)
{
    out << kRoutMagic << " text n=" << labels.size() << '\n';
    for (const auto& l : labels) {
        out << l.id << " ncad{" << l.ncad.depth << ';';
        put_tree_dist_text(out, l.ncad.view());
        out << "} levels[";
        for (const auto& rec : l.levels) {
            out << "{cent=" << rec.centroid_id << ";to=" << rec.to_cent
                << ";from=" << rec.from_cent << ";d=" << rec.dist_to_cent << ";gate=";
            put_gate_text(out, rec.gate);
            if (rec.has_parts) {
                for (const RoutSlot* s : {&rec.first, &rec.second}) {
                    out << (s == &rec.first ? ";first=(" : ";second=(");
                    put_tree_dist_text(out, rec.tree(*s));
                    out << ';';
                    put_tree_rout_text(out, rec.rtree(*s));
                    out << ';' << s->to_port << ';' << s->dist << ';' << s->twin_port << ';'
                        << s->panel_id << ')';
                }
            }
            out << '}';
        }
        out << "]\n";
    }
}

std::vector<RoutLabel> read_rout_labels_text(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line.rfind(std::string(kRoutMagic) + " text n=", 0) != 0)
        throw ParseError("bad text label header");
    size_t n = std::stoul(line.substr(std::string(kRoutMagic).size() + 8));
    std::vector<RoutLabel> labels;
    labels.reserve(n);
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        TextScanner sc(line);
        RoutLabel l;
        l.id = static_cast<Vid>(sc.number());
        sc.skip_space();
        sc.expect("ncad{");
        auto depth = static_cast<std::int32_t>(sc.number());
        sc.expect(';');
        TreeDistLabel ncad_t = scan_tree_dist(sc);
        ncad_t.depth = depth;
        l.ncad = NcadRecord::from(ncad_t);
        sc.expect('}');
        sc.skip_space();
        sc.expect("levels[");
        while (sc.accept('{')) {
            RoutLevelRecord rec;
            sc.expect("cent=");
            rec.centroid_id = static_cast<Vid>(sc.number());
            sc.expect(";to=");
            rec.to_cent = static_cast<Port>(sc.number());
            sc.expect(";from=");
            rec.from_cent = static_cast<Port>(sc.number());
            sc.expect(";d=");
            rec.dist_to_cent = static_cast<std::uint32_t>(sc.number());
            sc.expect(";gate=");
            rec.gate = scan_gate(sc);
            if (sc.accept(';')) {
                rec.has_parts = true;
                sc.expect("first=(");
                for (RoutSlot* s : {&rec.first, &rec.second}) {
                    TreeDistLabel t = scan_tree_dist(sc);
                    sc.expect(';');
                    TreeRoutLabel rt = scan_tree_rout(sc);
                    rec.append_slot_trees(*s, t, rt);
                    sc.expect(';');
                    s->to_port = static_cast<Port>(sc.number());
                    sc.expect(';');
                    s->dist = static_cast<std::uint32_t>(sc.number());
                    sc.expect(';');
                    s->twin_port = static_cast<Port>(sc.number());
                    sc.expect(';');
                    s->panel_id = static_cast<std::uint32_t>(sc.number());
                    sc.expect(')');
                    if (s == &rec.first)
                        sc.expect(";second=(");
                }
            }
            sc.expect('}');
            l.levels.push_back(std::move(rec));
        }
        sc.expect(']');
        labels.push_back(std::move(l));
    }
    if (labels.size() != n)
        throw ParseError("label count mismatch in text file");
    return labels;
}

// ---- detection and convenience ----

LabelFileKind sniff_label_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    char head[6] = {};
    in.read(head, 6);
    if (in.gcount() < 6)
        throw ParseError("file too short: " + path);
    const bool text = head[5] == ' ';
    if (std::memcmp(head, kDistMagic, 5) == 0)
        return text ? LabelFileKind::DistText : LabelFileKind::DistBinary;
    if (std::memcmp(head, kRoutMagic, 5) == 0)
        return text ? LabelFileKind::RoutText : LabelFileKind::RoutBinary;
    throw ParseError("unrecognized label file magic in " + path);
}

std::vector<DistLabel> read_dist_labels_file(const std::string& path)
{
    LabelFileKind kind = sniff_label_file(path);
    std::ifstream in(path, std::ios::binary);
    if (kind == LabelFileKind::DistBinary)
        return read_dist_labels_binary(in);
    if (kind == LabelFileKind::DistText)
        return read_dist_labels_text(in);
    throw ParseError(path + " holds routing labels, not distance labels");
}

std::vector<RoutLabel> read_rout_labels_file(const std::string& path)
{
    LabelFileKind kind = sniff_label_file(path);
    std::ifstream in(path, std::ios::binary);
    if (kind == LabelFileKind::RoutBinary)
        return read_rout_labels_binary(in);
    if (kind == LabelFileKind::RoutText)
        return read_rout_labels_text(in);
    throw ParseError(path + " holds distance labels, not routing labels");
}

size_t dist_label_bits(const DistLabel& l)
{
    return dist_label_payload(l).size() * 8;
}

size_t rout_label_bits(const RoutLabel& l)
{
    return rout_label_payload(l).size() * 8;
}

} // namespace cfml
