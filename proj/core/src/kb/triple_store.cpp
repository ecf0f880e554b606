// SPDX-License-Identifier: Apache-2.0
#include "middleware/kb/triple_store.hpp"

#include <algorithm>
#include <cctype>
#include <istream>

#include "middleware/text.hpp"

namespace mw::kb {

namespace {

constexpr std::string_view kNumberMarker = "#num#";

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::string unescape_literal(std::string_view body) {
    std::string out;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '\\' && i + 1 < body.size() && body[i + 1] == '"') {
            out += '"';
            ++i;
        } else {
            out += body[i];
        }
    }
    return out;
}

}  // namespace

bool is_valid_token(std::string_view token) {
    if (token.empty() || token.front() == '#') return false;
    if (std::isspace(static_cast<unsigned char>(token.front())) ||
        std::isspace(static_cast<unsigned char>(token.back()))) {
        return false;
    }
    for (char c : token) {
        switch (c) {
            case '\t': case '\n': case '\r': case '\v': case '\f':
            case ',': case '(': case ')': case '"': case '{': case '}': case '[': case ']':
                return false;
            default:
                break;
        }
    }
    return true;
}

LoadError::LoadError(std::size_t line, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

TripleStore::TripleStore(std::vector<Triple> triples) : triples_(std::move(triples)) {
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
    for (const Triple& t : triples_) {
        Edges& edges = index_[t.subject][t.relation];
        switch (t.object.kind()) {
            case TypedObject::Kind::kEntity:
                edges.entities.insert(t.object.text());
                index_.try_emplace(t.object.text());
                break;
            case TypedObject::Kind::kString:
                edges.strings.insert(t.object.text());
                break;
            case TypedObject::Kind::kNumber:
                edges.numbers.insert(t.object.value());
                break;
        }
    }
}

const TripleStore::RelationMap* TripleStore::find(std::string_view entity) const {
    const auto it = index_.find(entity);
    return it == index_.end() ? nullptr : &it->second;
}

bool TripleStore::has_entity(std::string_view id) const { return find(id) != nullptr; }

std::vector<std::string> TripleStore::relations_of(const EntitySet& entities) const {
    std::set<std::string> names;
    for (const auto& e : entities) {
        if (const RelationMap* rels = find(e)) {
            for (const auto& [relation, edges] : *rels) names.insert(relation);
        }
    }
    return {names.begin(), names.end()};
}

EntitySet TripleStore::neighbors_of(const EntitySet& entities, std::string_view relation) const {
    EntitySet out;
    for (const auto& e : entities) {
        const RelationMap* rels = find(e);
        if (!rels) continue;
        const auto it = rels->find(relation);
        if (it != rels->end()) out.insert(it->second.entities.begin(), it->second.entities.end());
    }
    return out;
}

std::vector<std::string> TripleStore::numeric_attributes_of(const EntitySet& entities) const {
    std::set<std::string> names;
    for (const auto& e : entities) {
        if (const RelationMap* rels = find(e)) {
            for (const auto& [relation, edges] : *rels) {
                if (!edges.numbers.empty()) names.insert(relation);
            }
        }
    }
    return {names.begin(), names.end()};
}

std::vector<std::pair<std::string, double>> TripleStore::attribute_values(
    const EntitySet& entities, std::string_view attribute) const {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& e : entities) {
        const RelationMap* rels = find(e);
        if (!rels) continue;
        const auto it = rels->find(attribute);
        if (it == rels->end()) continue;
        for (double v : it->second.numbers) out.emplace_back(e, v);
    }
    return out;
}

std::set<std::string> TripleStore::classes_of(std::string_view entity) const {
    const RelationMap* rels = find(entity);
    if (!rels) return {};
    const auto it = rels->find(kTypeRelation);
    if (it == rels->end()) return {};
    return {it->second.entities.begin(), it->second.entities.end()};
}

TripleStore load_triples(std::istream& source) {
    std::vector<Triple> triples;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(source, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;
        if (line.front() == '#') continue;

        const auto fields = split_tabs(line);
        if (fields.size() != 3) {
            throw LoadError(line_no, "expected 3 TAB-separated fields, found " + std::to_string(fields.size()));
        }
        if (!is_valid_token(fields[0])) throw LoadError(line_no, "invalid subject '" + std::string(fields[0]) + "'");
        if (!is_valid_token(fields[1])) throw LoadError(line_no, "invalid relation '" + std::string(fields[1]) + "'");

        const std::string_view obj = fields[2];
        if (obj.empty()) throw LoadError(line_no, "empty object field");
        TypedObject object = TypedObject::entity({});
        if (obj.size() >= 2 && obj.front() == '"' && obj.back() == '"') {
            object = TypedObject::string(unescape_literal(obj.substr(1, obj.size() - 2)));
        } else if (obj.substr(0, kNumberMarker.size()) == kNumberMarker) {
            const auto value = parse_number(obj.substr(kNumberMarker.size()));
            if (!value) throw LoadError(line_no, "unparseable numeric literal '" + std::string(obj) + "'");
            object = TypedObject::number(*value);
        } else {
            if (!is_valid_token(obj)) throw LoadError(line_no, "invalid object entity '" + std::string(obj) + "'");
            object = TypedObject::entity(std::string(obj));
        }
        triples.push_back(Triple{std::string(fields[0]), std::string(fields[1]), std::move(object)});
    }
    return TripleStore(std::move(triples));
}

std::string format_triple(const Triple& t) {
    std::string out = t.subject + '\t' + t.relation + '\t';
    switch (t.object.kind()) {
        case TypedObject::Kind::kEntity:
            out += t.object.text();
            break;
        case TypedObject::Kind::kString: {
            out += '"';
            for (char c : t.object.text()) {
                if (c == '"') out += '\\';
                out += c;
            }
            out += '"';
            break;
        }
        case TypedObject::Kind::kNumber:
            out += std::string(kNumberMarker) + format_number(t.object.value());
            break;
    }
    return out;
}

}  // namespace mw::kb
