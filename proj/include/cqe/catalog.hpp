#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "center.hpp"

namespace cqe {

enum class CenterTag { on_circumcircle, shinagawa_constant, euler_line };

inline const char* to_string(CenterTag t) {
    switch (t) {
        case CenterTag::on_circumcircle: return "on_circumcircle";
        case CenterTag::shinagawa_constant: return "shinagawa_constant";
        case CenterTag::euler_line: return "euler_line";
    }
    return "?";
}

struct CatalogEntry {
    int index = 0;
    CenterFunction function;
    std::set<CenterTag> tags;

    bool has(CenterTag t) const { return tags.count(t) != 0; }
};

/// Immutable registry of triangle centers plus the named sets drawn from the
/// tags (C = on_circumcircle, S = shinagawa_constant).
class Catalog {
public:
    bool contains(int n) const { return entries_.count(n) != 0; }
    const CatalogEntry& at(int n) const {
        auto it = entries_.find(n);
        if (it == entries_.end())
            throw domain_error("center X" + std::to_string(n) + " not in catalog");
        return it->second;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(entries_.size());
        for (const auto& [n, e] : entries_) out.push_back(n);
        return out;
    }

    std::vector<int> set_circumcircle() const { return tagged(CenterTag::on_circumcircle); }
    std::vector<int> set_shinagawa() const { return tagged(CenterTag::shinagawa_constant); }

    template <class R>
    Point<R> center_point(int n, const Triangle<R>& t) const {
        return at(n).function.template evaluate<R>(t);
    }

    std::size_t size() const { return entries_.size(); }

    void insert(CatalogEntry e) {
        if (entries_.count(e.index))
            throw parse_error("duplicate center index " + std::to_string(e.index));
        entries_.emplace(e.index, std::move(e));
    }

private:
    std::vector<int> tagged(CenterTag t) const {
        std::vector<int> out;
        for (const auto& [n, e] : entries_)
            if (e.has(t)) out.push_back(n);
        return out;
    }

    std::map<int, CatalogEntry> entries_;
};

/// Parse catalog text: one entry per line,
///   n TAB kind TAB expression [TAB tag,tag,...]
/// '#' starts a comment.  When `validate` is set, every entry must pass the
/// symmetry + homogeneity gate.
inline Catalog parse_catalog(std::string_view text, bool validate = true) {
    Catalog cat;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string line(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                        : eol - pos));
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos
                                                                         : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() < 3)
            throw parse_error("catalog line " + std::to_string(lineno) +
                              ": expected 'n<TAB>kind<TAB>expr'");
        CatalogEntry e;
        try {
            e.index = std::stoi(fields[0]);
        } catch (...) {
            throw parse_error("catalog line " + std::to_string(lineno) + ": bad index '" +
                              fields[0] + "'");
        }
        CoordKind kind;
        if (fields[1] == "tri") kind = CoordKind::trilinear;
        else if (fields[1] == "bary") kind = CoordKind::barycentric;
        else
            throw parse_error("catalog line " + std::to_string(lineno) +
                              ": kind must be 'tri' or 'bary'");
        try {
            e.function = CenterFunction::parse(fields[2], kind);
        } catch (const parse_error& pe) {
            throw parse_error("catalog line " + std::to_string(lineno) + ": " + pe.what(),
                              pe.position);
        }
        if (fields.size() > 3 && !fields[3].empty()) {
            std::stringstream ss(fields[3]);
            std::string tag;
            while (std::getline(ss, tag, ',')) {
                if (tag == "on_circumcircle") e.tags.insert(CenterTag::on_circumcircle);
                else if (tag == "shinagawa_constant") {
                    e.tags.insert(CenterTag::shinagawa_constant);
                    e.tags.insert(CenterTag::euler_line);
                } else if (tag == "on_euler" || tag == "euler_line")
                    e.tags.insert(CenterTag::euler_line);
                else
                    throw parse_error("catalog line " + std::to_string(lineno) +
                                      ": unknown tag '" + tag + "'");
            }
        }
        if (validate) {
            const auto rep = validate_center(e.function);
            if (!rep.ok())
                throw parse_error("catalog line " + std::to_string(lineno) + " (X" +
                                  std::to_string(e.index) + "): " + rep.failure);
            if (rep.degree) e.function.set_homogeneity_degree(*rep.degree);
        }
        try {
            cat.insert(std::move(e));
        } catch (const parse_error& pe) {
            throw parse_error("catalog line " + std::to_string(lineno) + ": " +
                              std::string(pe.what()));
        }
    }
    return cat;
}

// Declared here, defined by the generated catalog data header.
std::string_view default_catalog_text();

inline const Catalog& default_catalog() {
    static const Catalog cat = parse_catalog(default_catalog_text(), /*validate=*/false);
    return cat;
}

} // namespace cqe
