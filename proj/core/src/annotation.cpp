#include "detkit/annotation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "detkit/error.hpp"

namespace fs = std::filesystem;

namespace detkit {

namespace {

struct XmlNode {
    std::string name;
    std::string text;  // character data directly inside this element
    std::vector<XmlNode> children;
    std::size_t line = 1;

    const XmlNode* child(std::string_view child_name) const {
        for (const XmlNode& c : children) {
            if (c.name == child_name) return &c;
        }
        return nullptr;
    }
};

// Minimal non-validating XML reader for the annotation subset. It tracks
// line numbers so semantic errors can point at their source element.
class XmlScanner {
public:
    explicit XmlScanner(std::string_view doc) : doc_(doc) {}

    XmlNode parse_document() {
        skip_misc();
        if (eof() || peek() != '<') fail("expected a root element");
        XmlNode root = parse_element();
        skip_misc();
        if (!eof()) fail("trailing content after root element");
        return root;
    }

private:
    std::string_view doc_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;

    bool eof() const { return pos_ >= doc_.size(); }
    char peek() const { return doc_[pos_]; }
    bool starts_with(std::string_view s) const { return doc_.substr(pos_, s.size()) == s; }

    char advance() {
        const char c = doc_[pos_++];
        if (c == '\n') ++line_;
        return c;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_); }

    void skip_whitespace() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    // Whitespace, the <?xml ?> prolog and comments between elements.
    void skip_misc() {
        for (;;) {
            skip_whitespace();
            if (starts_with("<?")) {
                skip_until("?>");
            } else if (starts_with("<!--")) {
                skip_until("-->");
            } else {
                return;
            }
        }
    }

    void skip_until(std::string_view terminator) {
        while (!eof() && !starts_with(terminator)) advance();
        if (eof()) fail("unterminated '" + std::string(terminator) + "' construct");
        for (std::size_t i = 0; i < terminator.size(); ++i) advance();
    }

    std::string read_name() {
        std::string name;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                          peek() == '-' || peek() == '.' || peek() == ':')) {
            name.push_back(advance());
        }
        if (name.empty()) fail("expected an element name");
        return name;
    }

    // Consumes attributes (unused by the schema) up to '>' or '/>'.
    bool skip_attributes_returns_self_closing() {
        for (;;) {
            skip_whitespace();
            if (eof()) fail("unterminated start tag");
            if (peek() == '>') {
                advance();
                return false;
            }
            if (starts_with("/>")) {
                advance();
                advance();
                return true;
            }
            const char c = advance();
            if (c == '"' || c == '\'') {
                while (!eof() && peek() != c) advance();
                if (eof()) fail("unterminated attribute value");
                advance();
            }
        }
    }

    char decode_entity() {
        // '&' already consumed.
        std::string entity;
        while (!eof() && peek() != ';') {
            entity.push_back(advance());
            if (entity.size() > 8) break;
        }
        if (eof() || peek() != ';') fail("unterminated character entity");
        advance();
        if (entity == "amp") return '&';
        if (entity == "lt") return '<';
        if (entity == "gt") return '>';
        if (entity == "quot") return '"';
        if (entity == "apos") return '\'';
        fail("unknown character entity '&" + entity + ";'");
    }

    XmlNode parse_element() {
        XmlNode node;
        node.line = line_;
        advance();  // '<'
        node.name = read_name();
        if (skip_attributes_returns_self_closing()) return node;

        for (;;) {
            if (eof()) fail("unexpected end of document inside <" + node.name + ">");
            if (peek() == '<') {
                if (starts_with("</")) {
                    advance();
                    advance();
                    const std::string closing = read_name();
                    if (closing != node.name) {
                        fail("mismatched closing tag </" + closing + "> for <" + node.name + ">");
                    }
                    skip_whitespace();
                    if (eof() || peek() != '>') fail("malformed closing tag");
                    advance();
                    return node;
                }
                if (starts_with("<!--")) {
                    skip_until("-->");
                    continue;
                }
                node.children.push_back(parse_element());
            } else if (peek() == '&') {
                advance();
                node.text.push_back(decode_entity());
            } else {
                node.text.push_back(advance());
            }
        }
    }
};

std::string trimmed(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

int require_int_child(const XmlNode& parent, const char* name) {
    const XmlNode* child = parent.child(name);
    if (!child) {
        throw ParseError("<" + parent.name + "> is missing <" + name + ">", parent.line);
    }
    const std::string text = trimmed(child->text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("<" + std::string(name) + "> is not an integer: '" + text + "'",
                         child->line);
    }
    return value;
}

std::string escape_text(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

AnnotationRecord parse_annotation(std::string_view text) {
    XmlScanner scanner(text);
    const XmlNode root = scanner.parse_document();

    const XmlNode* size = root.child("size");
    if (!size) throw ParseError("missing <size> element", root.line);
    const int width = require_int_child(*size, "width");
    const int height = require_int_child(*size, "height");
    if (width <= 0 || height <= 0) {
        throw ParseError("image size must be positive", size->line);
    }

    AnnotationRecord record;
    record.image_width = width;
    record.image_height = height;
    if (const XmlNode* filename = root.child("filename")) {
        record.image_id = trimmed(filename->text);
    }

    for (const XmlNode& child : root.children) {
        if (child.name != "object") continue;
        const XmlNode* name = child.child("name");
        if (!name) throw ParseError("<object> is missing <name>", child.line);
        const XmlNode* bndbox = child.child("bndbox");
        if (!bndbox) throw ParseError("<object> is missing <bndbox>", child.line);

        const int xmin = require_int_child(*bndbox, "xmin");
        const int ymin = require_int_child(*bndbox, "ymin");
        const int xmax = require_int_child(*bndbox, "xmax");
        const int ymax = require_int_child(*bndbox, "ymax");
        if (xmax < xmin || ymax < ymin) {
            throw ParseError("inverted box: xmax < xmin or ymax < ymin", bndbox->line);
        }
        if (xmin < 0 || ymin < 0 || xmax > width || ymax > height) {
            throw ParseError("box outside image bounds", bndbox->line);
        }
        record.objects.push_back({trimmed(name->text),
                                  BBox{static_cast<double>(xmin), static_cast<double>(ymin),
                                       static_cast<double>(xmax), static_cast<double>(ymax)}});
    }
    return record;
}

std::string serialize_annotation(const AnnotationRecord& record) {
    std::ostringstream out;
    out << "<annotation>\n";
    if (!record.image_id.empty()) {
        out << "  <filename>" << escape_text(record.image_id) << "</filename>\n";
    }
    out << "  <size>\n"
        << "    <width>" << record.image_width << "</width>\n"
        << "    <height>" << record.image_height << "</height>\n"
        << "  </size>\n";
    for (const AnnotatedObject& obj : record.objects) {
        out << "  <object>\n"
            << "    <name>" << escape_text(obj.label) << "</name>\n"
            << "    <bndbox>\n"
            << "      <xmin>" << static_cast<long long>(obj.box.left) << "</xmin>\n"
            << "      <ymin>" << static_cast<long long>(obj.box.top) << "</ymin>\n"
            << "      <xmax>" << static_cast<long long>(obj.box.right) << "</xmax>\n"
            << "      <ymax>" << static_cast<long long>(obj.box.bottom) << "</ymax>\n"
            << "    </bndbox>\n"
            << "  </object>\n";
    }
    out << "</annotation>\n";
    return out.str();
}

AnnotationRecord read_annotation_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open annotation file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    AnnotationRecord record = parse_annotation(buffer.str());
    if (record.image_id.empty()) record.image_id = path.stem().string();
    return record;
}

std::vector<AnnotationRecord> read_annotation_dir(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw Error("annotation directory does not exist: " + dir.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".xml") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<AnnotationRecord> records;
    records.reserve(files.size());
    for (const fs::path& f : files) {
        try {
            records.push_back(read_annotation_file(f));
        } catch (const ParseError& e) {
            throw Error(f.string() + ": " + e.what());
        }
    }
    return records;
}

}  // namespace detkit
